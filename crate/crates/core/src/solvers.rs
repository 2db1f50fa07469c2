//! Exact computation of `τ_{S,r}` and `τ_k`, and the skeleton-tuple
//! decision procedure for symmetric digraphs.
//!
//! Two minimal pendant trees conflict iff they share a vertex outside `S`
//! (for `k >= 3` no minimal tree uses an arc inside `S`, and for `k = 2`
//! only the direct arc `rs` does). A maximum packing is therefore a maximum
//! family of pairwise disjoint internal vertex sets, and only the
//! inclusion-minimal sets need to be kept.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::bounds::{cut_size, zero_rule};
use crate::digraph::{Digraph, Vertex};
use crate::error::SpecError;
use crate::model::{
    for_each_pendant_tree, for_each_subset, shape_templates, validate_packing, Packing,
    PendantTree, Skeleton, TerminalSpec,
};
use crate::oracles::{constrained_disjoint_paths, LinkageQuery};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Minimal pendant trees produced by the enumerator.
    pub trees_enumerated: u64,
    /// Distinct inclusion-minimal internal vertex sets.
    pub candidate_sets: u64,
    pub bnb_nodes: u64,
    /// Smallest of the pruning bounds computed before search.
    pub upper_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// `τ_{S,r}`, or a lower bound when `exact` is false.
    pub value: usize,
    pub certificate: Packing,
    /// False only when a target was supplied and the search stopped as soon
    /// as it was met, so `value` means "at least the target".
    pub exact: bool,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauKResult {
    pub value: usize,
    pub witness_spec: TerminalSpec,
    /// A maximum packing for the witness spec (its size equals `value`).
    pub certificate: Packing,
    /// Exact `τ_{S,r}` for every spec, when requested.
    pub per_spec: Option<Vec<(TerminalSpec, usize)>>,
}

/// Upper bounds on `τ_{S,r}` that hold before any search.
///
/// For `k >= 3`: the cut bound `⌊|(S̄, S\{r})| / (k-1)⌋`, the number of
/// out-neighbors of `r` outside `S`, and for each sink the number of its
/// in-neighbors outside `S`. For `k = 2` every path uses its own out-arc of
/// `r` and in-arc of the sink.
pub fn pruning_upper_bound(d: &Digraph, spec: &TerminalSpec) -> usize {
    let r = spec.root();
    let k = spec.k();
    if k == 2 {
        let s = spec.sinks().next().expect("k = 2 has one sink");
        return d.out_degree(r).min(d.in_degree(s));
    }
    let out_r = d.out_neighbors(r).iter().filter(|&&v| !spec.contains(v)).count();
    let in_s = spec
        .sinks()
        .map(|s| d.in_neighbors(s).iter().filter(|&&v| !spec.contains(v)).count())
        .min()
        .unwrap_or(0);
    let cut = cut_size(d, spec) / (k - 1);
    out_r.min(in_s).min(cut)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }
    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }
    fn disjoint(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == 0)
    }
    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    fn union_with(&mut self, other: &Bits) {
        self.0.iter_mut().zip(&other.0).for_each(|(a, b)| *a |= b);
    }
    fn difference_with(&mut self, other: &Bits) {
        self.0.iter_mut().zip(&other.0).for_each(|(a, b)| *a &= !b);
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
}

struct Candidate {
    set: Bits,
    tree: PendantTree,
}

/// Computes `τ_{S,r}(D)` with a packing certificate. With a `target`, the
/// search may stop once `target` trees are packed.
pub fn solve_tau_sr(d: &Digraph, spec: &TerminalSpec, target: Option<usize>) -> SolveResult {
    let n = d.order();
    let upper = pruning_upper_bound(d, spec);
    let mut stats = SolveStats {
        upper_bound: upper,
        ..SolveStats::default()
    };
    if upper == 0 || target == Some(0) {
        return SolveResult {
            value: 0,
            certificate: Packing::empty(spec.clone()),
            exact: upper == 0,
            stats,
        };
    }

    // keep the smallest tree (by arc list) for each internal vertex set
    let mut by_set: BTreeMap<Bits, PendantTree> = BTreeMap::new();
    let (_, enum_stats) = for_each_pendant_tree::<()>(d, spec, |tree| {
        let mut set = Bits::new(n);
        for v in tree.internal_vertices(spec) {
            set.insert(v);
        }
        match by_set.get_mut(&set) {
            Some(existing) if *existing <= *tree => {}
            Some(existing) => *existing = tree.clone(),
            None => {
                by_set.insert(set, tree.clone());
            }
        }
        ControlFlow::Continue(())
    });
    stats.trees_enumerated = enum_stats.trees;

    let direct_tree = by_set.remove(&Bits::new(n));
    let mut sets: Vec<Candidate> = by_set
        .into_iter()
        .map(|(set, tree)| Candidate { set, tree })
        .collect();
    sets.sort_by(|a, b| a.set.count().cmp(&b.set.count()).then_with(|| a.tree.cmp(&b.tree)));
    let mut minimal: Vec<Candidate> = Vec::new();
    for c in sets {
        if !minimal.iter().any(|m| m.set.is_subset(&c.set)) {
            minimal.push(c);
        }
    }
    stats.candidate_sets = minimal.len() as u64 + u64::from(direct_tree.is_some());

    let base = usize::from(direct_tree.is_some());
    let goal = target.map_or(upper, |t| t.min(upper));
    let mut search = PackingSearch::new(d, spec, minimal, base, goal);
    search.run();
    stats.bnb_nodes = search.nodes;

    let mut trees: Vec<PendantTree> = direct_tree.into_iter().collect();
    trees.extend(search.best.iter().map(|&i| search.candidates[i].tree.clone()));
    let value = trees.len();
    let exact = match target {
        Some(t) if value >= t => value >= upper || !search.stopped_early,
        _ => true,
    };
    let certificate = Packing::new(spec.clone(), trees);
    debug_assert!(validate_packing(d, &certificate).is_ok());
    SolveResult {
        value,
        certificate,
        exact,
        stats,
    }
}

/// Branch and bound over the out-neighbors of the root: each tree owns a
/// distinct out-arc `r -> x`, so at every level one candidate starting with
/// `x` is chosen or `x` is skipped.
struct PackingSearch {
    candidates: Vec<Candidate>,
    groups: Vec<(Vertex, Vec<usize>)>,
    sink_sources: Vec<Bits>,
    base: usize,
    goal: usize,
    best: Vec<usize>,
    best_len: usize,
    nodes: u64,
    stopped_early: bool,
}

impl PackingSearch {
    fn new(d: &Digraph, spec: &TerminalSpec, candidates: Vec<Candidate>, base: usize, goal: usize) -> Self {
        let r = spec.root();
        let mut groups: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
        for (i, c) in candidates.iter().enumerate() {
            let first = c
                .tree
                .arcs()
                .iter()
                .find(|&&(u, _)| u == r)
                .map(|&(_, x)| x)
                .expect("a pendant tree leaves its root");
            groups.entry(first).or_default().push(i);
        }
        // in-neighbors outside S of each sink, for the degree bound
        let sink_sources = spec
            .sinks()
            .map(|s| {
                let mut b = Bits::new(d.order());
                for &w in d.in_neighbors(s) {
                    if !spec.contains(w) {
                        b.insert(w);
                    }
                }
                b
            })
            .collect();
        PackingSearch {
            candidates,
            groups: groups.into_iter().collect(),
            sink_sources,
            base,
            goal,
            best: Vec::new(),
            best_len: 0,
            nodes: 0,
            stopped_early: false,
        }
    }

    fn run(&mut self) {
        if self.base >= self.goal {
            self.stopped_early = true;
            return;
        }
        let n_words = self.candidates.first().map_or(1, |c| c.set.0.len());
        let mut used = Bits(vec![0; n_words]);
        let mut chosen = Vec::new();
        let _ = self.branch(0, &mut used, &mut chosen);
    }

    fn bound(&self, g: usize, used: &Bits) -> usize {
        let roots = self.groups[g..]
            .iter()
            .filter(|(x, members)| {
                !used.contains(*x) && members.iter().any(|&i| self.candidates[i].set.disjoint(used))
            })
            .count();
        let sinks = self
            .sink_sources
            .iter()
            .map(|b| {
                let mut free = b.clone();
                free.difference_with(used);
                free.count() as usize
            })
            .min()
            .unwrap_or(usize::MAX);
        roots.min(sinks)
    }

    fn branch(&mut self, g: usize, used: &mut Bits, chosen: &mut Vec<usize>) -> ControlFlow<()> {
        self.nodes += 1;
        if chosen.len() > self.best_len || (self.best.is_empty() && !chosen.is_empty()) {
            self.best = chosen.clone();
            self.best_len = chosen.len();
            if self.base + self.best_len >= self.goal {
                self.stopped_early = true;
                return ControlFlow::Break(());
            }
        }
        if g == self.groups.len() {
            return ControlFlow::Continue(());
        }
        if chosen.len() + self.bound(g, used) <= self.best_len {
            return ControlFlow::Continue(());
        }
        let members = self.groups[g].1.clone();
        for i in members {
            if !self.candidates[i].set.disjoint(used) {
                continue;
            }
            let set = self.candidates[i].set.clone();
            used.union_with(&set);
            chosen.push(i);
            let flow = self.branch(g + 1, used, chosen);
            chosen.pop();
            used.difference_with(&set);
            flow?;
        }
        self.branch(g + 1, used, chosen)
    }
}

/// Every terminal specification with `|S| = k`: subsets in lexicographic
/// order, then roots ascending.
pub fn spec_space(n: usize, k: usize) -> Vec<TerminalSpec> {
    let pool: Vec<Vertex> = (0..n).collect();
    let mut out = Vec::new();
    let _ = for_each_subset::<()>(&pool, k, |s| {
        for &r in s {
            out.push(TerminalSpec::new(n, r, s).expect("subset of the vertex range"));
        }
        ControlFlow::Continue(())
    });
    out
}

fn check_k(d: &Digraph, k: usize) -> Result<(), SpecError> {
    if k < 2 || k > d.order() {
        return Err(SpecError::BadK { k, n: d.order() });
    }
    Ok(())
}

/// `τ_k(D)`: the minimum of `τ_{S,r}` over all specs with `|S| = k`. Ties
/// go to the lexicographically first spec.
pub fn solve_tau_k(d: &Digraph, k: usize) -> Result<TauKResult, SpecError> {
    check_k(d, k)?;
    let specs = spec_space(d.order(), k);
    if zero_rule(d, k) {
        for spec in specs {
            let res = solve_tau_sr(d, &spec, Some(1));
            if res.value == 0 {
                return Ok(TauKResult {
                    value: 0,
                    witness_spec: spec,
                    certificate: res.certificate,
                    per_spec: None,
                });
            }
        }
        unreachable!("the zero rule guarantees a spec with no pendant tree");
    }
    let mut best: Option<(usize, TerminalSpec, Packing)> = None;
    for spec in specs {
        let cap = best.as_ref().map(|b| b.0);
        let res = solve_tau_sr(d, &spec, cap);
        if cap.map_or(true, |c| res.value < c) {
            let done = res.value == 0;
            best = Some((res.value, spec, res.certificate));
            if done {
                break;
            }
        }
    }
    let (value, witness_spec, certificate) = best.expect("k <= n gives at least one spec");
    Ok(TauKResult {
        value,
        witness_spec,
        certificate,
        per_spec: None,
    })
}

/// Like [`solve_tau_k`] but solves every spec exactly and keeps the values.
pub fn solve_tau_k_detailed(d: &Digraph, k: usize) -> Result<TauKResult, SpecError> {
    check_k(d, k)?;
    let results: Vec<(TerminalSpec, SolveResult)> = spec_space(d.order(), k)
        .into_iter()
        .map(|spec| {
            let res = solve_tau_sr(d, &spec, None);
            (spec, res)
        })
        .collect();
    Ok(combine_tau_k(results))
}

/// Picks the minimum (first in the given order on ties) from exact
/// per-spec results.
pub fn combine_tau_k(results: Vec<(TerminalSpec, SolveResult)>) -> TauKResult {
    let mut best: Option<usize> = None;
    for (i, (_, res)) in results.iter().enumerate() {
        if best.map_or(true, |b| res.value < results[b].1.value) {
            best = Some(i);
        }
    }
    let best = best.expect("at least one spec");
    let per_spec = results.iter().map(|(s, r)| (s.clone(), r.value)).collect();
    let (witness_spec, res) = results.into_iter().nth(best).expect("index in range");
    TauKResult {
        value: res.value,
        witness_spec,
        certificate: res.certificate,
        per_spec: Some(per_spec),
    }
}

/// Decides `τ_{S,r}(D) >= ell` on a symmetric digraph by trying every
/// `ell`-tuple of skeletons and realizing each skeleton arc that is not
/// already an arc of `D` by a path in `D - A(D[S])`. Path interiors avoid
/// `S`, every skeleton vertex of the tuple, and each other.
///
/// Returns the packing when the answer is yes.
pub fn decide_tau_symmetric(
    d: &Digraph,
    spec: &TerminalSpec,
    ell: usize,
) -> Result<Option<Packing>, SpecError> {
    if !d.is_symmetric() {
        return Err(SpecError::NotSymmetric);
    }
    if ell == 0 {
        return Err(SpecError::BadEll);
    }
    let k = spec.k();
    let pool: Vec<Vertex> = d.vertices().filter(|&v| !spec.contains(v)).collect();
    let mut skeletons: Vec<Skeleton> = Vec::new();
    for m in 0..=k - 2 {
        let templates = shape_templates(m, k);
        if templates.is_empty() {
            continue;
        }
        let _ = for_each_subset::<()>(&pool, m, |branch| {
            skeletons.extend(templates.iter().map(|t| t.instantiate(spec, branch)));
            ControlFlow::Continue(())
        });
    }

    // arcs of D[S] are never used by realizing paths
    let inside: Vec<(Vertex, Vertex)> = d
        .arcs()
        .iter()
        .copied()
        .filter(|&(u, v)| spec.contains(u) && spec.contains(v))
        .collect();
    let outside = d.without_arcs(&inside);

    let mut tuple: Vec<usize> = Vec::with_capacity(ell);
    let mut used = vec![false; d.order()];
    let mut found = None;
    let _ = for_each_tuple(&skeletons, ell, 0, &mut tuple, &mut used, &mut |tuple| {
        match realize_tuple(d, &outside, spec, &skeletons, tuple) {
            Some(p) => {
                found = Some(p);
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    Ok(found)
}

/// Multisets of skeleton indices (non-decreasing) whose branch sets are
/// pairwise disjoint.
fn for_each_tuple(
    skeletons: &[Skeleton],
    ell: usize,
    start: usize,
    tuple: &mut Vec<usize>,
    used: &mut Vec<bool>,
    f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if tuple.len() == ell {
        return f(tuple);
    }
    for i in start..skeletons.len() {
        let branch = &skeletons[i].branch;
        if branch.iter().any(|&x| used[x]) {
            continue;
        }
        branch.iter().for_each(|&x| used[x] = true);
        tuple.push(i);
        let flow = for_each_tuple(skeletons, ell, i, tuple, used, f);
        tuple.pop();
        branch.iter().for_each(|&x| used[x] = false);
        flow?;
    }
    ControlFlow::Continue(())
}

fn realize_tuple(
    d: &Digraph,
    outside: &Digraph,
    spec: &TerminalSpec,
    skeletons: &[Skeleton],
    tuple: &[usize],
) -> Option<Packing> {
    let mut kept: Vec<(Vertex, Vertex)> = Vec::new();
    let mut tree_arcs: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); tuple.len()];
    let mut pairs = Vec::new();
    let mut owner = Vec::new();
    for (t, &i) in tuple.iter().enumerate() {
        for &(u, v) in &skeletons[i].arcs {
            if d.has_arc(u, v) && !kept.contains(&(u, v)) {
                kept.push((u, v));
                tree_arcs[t].push((u, v));
            } else {
                pairs.push((u, v));
                owner.push(t);
            }
        }
    }
    if !pairs.is_empty() {
        let host = outside.without_arcs(&kept);
        let mut forbidden: Vec<Vertex> = spec.terminals().to_vec();
        for &i in tuple {
            forbidden.extend_from_slice(&skeletons[i].branch);
        }
        let query = LinkageQuery {
            host: &host,
            pairs,
            forbidden_internal: forbidden,
        };
        let paths = constrained_disjoint_paths(&query)?;
        for (p, t) in paths.iter().zip(owner) {
            tree_arcs[t].extend(p.windows(2).map(|w| (w[0], w[1])));
        }
    }
    let trees = tree_arcs
        .into_iter()
        .map(|arcs| PendantTree::new(spec.root(), arcs))
        .collect();
    let packing = Packing::new(spec.clone(), trees);
    debug_assert!(validate_packing(d, &packing).is_ok(), "realized tuple must validate");
    Some(packing)
}
