//! Per-spec fan-out for `τ_k`.
//!
//! Results match the serial solver exactly: the value is a minimum, and the
//! witness is the first spec in spec order whose exact value attains it.

use std::sync::atomic::{AtomicUsize, Ordering};

use pendant_core::bounds::zero_rule;
use pendant_core::solvers::{combine_tau_k, spec_space};
use pendant_core::{solve_tau_k, solve_tau_sr, Digraph, SpecError, TauKResult};
use rayon::prelude::*;

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

/// `τ_k` using up to `threads` workers; `threads <= 1` runs serially.
pub fn tau_k(d: &Digraph, k: usize, threads: usize) -> Result<TauKResult, SpecError> {
    if threads <= 1 {
        return solve_tau_k(d, k);
    }
    if k < 2 || k > d.order() {
        return Err(SpecError::BadK { k, n: d.order() });
    }
    let specs = spec_space(d.order(), k);
    let best = AtomicUsize::new(if zero_rule(d, k) { 1 } else { usize::MAX });
    let values: Vec<(usize, bool)> = pool(threads).install(|| {
        specs
            .par_iter()
            .map(|spec| {
                let cap = best.load(Ordering::Relaxed);
                let target = (cap != usize::MAX).then_some(cap);
                let res = solve_tau_sr(d, spec, target);
                let exact = target.is_none_or(|t| res.value < t) || res.exact;
                best.fetch_min(res.value, Ordering::Relaxed);
                (res.value, exact)
            })
            .collect()
    });
    let value = values.iter().map(|v| v.0).min().expect("nonempty spec space");
    let witness = specs
        .iter()
        .zip(&values)
        .find(|(spec, &(v, exact))| {
            v == value && (exact || solve_tau_sr(d, spec, Some(value + 1)).value == value)
        })
        .map(|(spec, _)| spec.clone())
        .expect("the minimum is attained");
    let certificate = solve_tau_sr(d, &witness, None).certificate;
    Ok(TauKResult {
        value,
        witness_spec: witness,
        certificate,
        per_spec: None,
    })
}

/// Exact `τ_{S,r}` for every spec, kept in the result.
pub fn tau_k_detailed(d: &Digraph, k: usize, threads: usize) -> Result<TauKResult, SpecError> {
    if k < 2 || k > d.order() {
        return Err(SpecError::BadK { k, n: d.order() });
    }
    let specs = spec_space(d.order(), k);
    let solve_all = || {
        specs
            .par_iter()
            .map(|spec| (spec.clone(), solve_tau_sr(d, spec, None)))
            .collect::<Vec<_>>()
    };
    let results = pool(threads.max(1)).install(solve_all);
    Ok(combine_tau_k(results))
}
