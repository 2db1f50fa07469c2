//! Closed-form bounds on `τ_k` and audits of solver values against them.

use alloc::vec::Vec;

use crate::digraph::Digraph;
use crate::error::SpecError;
use crate::model::TerminalSpec;
use crate::solvers::{solve_tau_k, spec_space};

/// `|(S̄, S \ {r})|`: arcs entering a non-root terminal from outside `S`.
pub fn cut_size(d: &Digraph, spec: &TerminalSpec) -> usize {
    spec.sinks()
        .map(|s| d.in_neighbors(s).iter().filter(|&&w| !spec.contains(w)).count())
        .sum()
}

/// `⌊|(S̄, S \ {r})| / (k-1)⌋` for one spec.
pub fn cut_bound_for_spec(d: &Digraph, spec: &TerminalSpec) -> usize {
    cut_size(d, spec) / (spec.k() - 1)
}

fn check_k3(d: &Digraph, k: usize) -> Result<(), SpecError> {
    if k < 3 || k > d.order() {
        return Err(SpecError::BadK { k, n: d.order() });
    }
    Ok(())
}

/// Cut bound evaluated for every spec with `|S| = k`, in spec order.
pub fn cut_bound_per_spec(d: &Digraph, k: usize) -> Result<Vec<(TerminalSpec, usize)>, SpecError> {
    check_k3(d, k)?;
    Ok(spec_space(d.order(), k)
        .into_iter()
        .map(|spec| {
            let b = cut_bound_for_spec(d, &spec);
            (spec, b)
        })
        .collect())
}

/// Minimum of the cut bound over all specs with `|S| = k`. Requires
/// `3 <= k <= n`.
pub fn bound_cut(d: &Digraph, k: usize) -> Result<usize, SpecError> {
    Ok(cut_bound_per_spec(d, k)?
        .into_iter()
        .map(|(_, b)| b)
        .min()
        .expect("k <= n gives at least one spec"))
}

pub fn bound_semidegree(d: &Digraph) -> usize {
    d.degree_summary().delta_zero
}

/// True iff `k >= max(δ⁰ + 1, 3)`, which forces `τ_k = 0`.
pub fn zero_rule(d: &Digraph, k: usize) -> bool {
    k >= (bound_semidegree(d) + 1).max(3)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub k: usize,
    pub order_bound: usize,
    pub semidegree_bound: usize,
    pub zero_rule_fires: bool,
    pub cut_bound: usize,
    pub per_spec_cut: Option<Vec<(TerminalSpec, usize)>>,
}

pub fn bounds_report(d: &Digraph, k: usize, keep_per_spec: bool) -> Result<BoundsReport, SpecError> {
    let per_spec = cut_bound_per_spec(d, k)?;
    let cut_bound = per_spec.iter().map(|p| p.1).min().expect("nonempty spec space");
    Ok(BoundsReport {
        n: d.order(),
        k,
        order_bound: d.order() - k,
        semidegree_bound: bound_semidegree(d),
        zero_rule_fires: zero_rule(d, k),
        cut_bound,
        per_spec_cut: keep_per_spec.then_some(per_spec),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundStatus {
    Tight,
    Slack,
    /// The value exceeds a proven bound: an implementation error.
    Violated,
}

impl BoundStatus {
    fn of(value: usize, bound: usize) -> Self {
        match value.cmp(&bound) {
            core::cmp::Ordering::Less => BoundStatus::Slack,
            core::cmp::Ordering::Equal => BoundStatus::Tight,
            core::cmp::Ordering::Greater => BoundStatus::Violated,
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            BoundStatus::Tight => "tight",
            BoundStatus::Slack => "slack",
            BoundStatus::Violated => "violated",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub bound: usize,
    pub status: BoundStatus,
}

/// Compares a computed `τ_k` against every bound of the report. When the
/// zero rule fires its bound is 0.
pub fn audit_tau_k(report: &BoundsReport, tau_k: usize) -> Vec<BoundCheck> {
    let mut checks = Vec::with_capacity(4);
    let mut push = |name, bound| {
        checks.push(BoundCheck {
            name,
            bound,
            status: BoundStatus::of(tau_k, bound),
        })
    };
    push("order", report.order_bound);
    push("semidegree", report.semidegree_bound);
    push("cut", report.cut_bound);
    if report.zero_rule_fires {
        push("zero-rule", 0);
    }
    checks
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NordhausGaddumReport {
    pub n: usize,
    pub k: usize,
    pub tau: usize,
    pub tau_complement: usize,
    pub sum: usize,
    pub product: usize,
    /// `n - k`
    pub sum_upper: usize,
    /// `⌊(n - k)² / 4⌋`
    pub product_upper: usize,
    pub sum_ok: bool,
    pub product_ok: bool,
    pub sum_attains_upper: bool,
    pub sum_attains_zero: bool,
    pub product_attains_upper: bool,
    pub product_attains_zero: bool,
}

impl NordhausGaddumReport {
    pub fn from_values(n: usize, k: usize, tau: usize, tau_complement: usize) -> Self {
        let sum = tau + tau_complement;
        let product = tau * tau_complement;
        let sum_upper = n - k;
        let product_upper = sum_upper * sum_upper / 4;
        NordhausGaddumReport {
            n,
            k,
            tau,
            tau_complement,
            sum,
            product,
            sum_upper,
            product_upper,
            sum_ok: sum <= sum_upper,
            product_ok: product <= product_upper,
            sum_attains_upper: sum == sum_upper,
            sum_attains_zero: sum == 0,
            product_attains_upper: product == product_upper,
            product_attains_zero: product == 0,
        }
    }

    pub fn holds(&self) -> bool {
        self.sum_ok && self.product_ok
    }
}

/// Solves `τ_k` on `d` and on its complement and checks the sum and product
/// inequalities. Requires `3 <= k <= n`.
pub fn nordhaus_gaddum_check(d: &Digraph, k: usize) -> Result<NordhausGaddumReport, SpecError> {
    check_k3(d, k)?;
    let tau = solve_tau_k(d, k)?.value;
    let tau_c = solve_tau_k(&d.complement(), k)?.value;
    Ok(NordhausGaddumReport::from_values(d.order(), k, tau, tau_c))
}
