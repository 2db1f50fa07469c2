//! Terminal specifications, pendant trees, packings and skeletons.
//!
//! A pendant `(S, r)`-tree is an out-tree rooted at `r` that contains every
//! terminal of `S` and in which every terminal has total degree one. The
//! validators here are the single source of truth used by the solvers, the
//! certificate checker and the tests.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::digraph::{Digraph, Vertex};
use crate::error::SpecError;

/// A terminal set `S` with a designated root `r ∈ S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TerminalSpec {
    root: Vertex,
    terminals: Vec<Vertex>,
    mask: Vec<bool>,
}

impl TerminalSpec {
    /// `terminals` is the full set `S` and must contain `root`.
    pub fn new(n: usize, root: Vertex, terminals: &[Vertex]) -> Result<Self, SpecError> {
        let mut mask = vec![false; n];
        for &t in terminals {
            if t >= n {
                return Err(SpecError::UnknownTerminal(t));
            }
            if mask[t] {
                return Err(SpecError::RepeatedTerminal(t));
            }
            mask[t] = true;
        }
        if root >= n {
            return Err(SpecError::UnknownTerminal(root));
        }
        if !mask[root] {
            return Err(SpecError::RootNotTerminal(root));
        }
        if terminals.len() < 2 {
            return Err(SpecError::TooFewTerminals(terminals.len()));
        }
        let mut sorted = terminals.to_vec();
        sorted.sort_unstable();
        Ok(TerminalSpec {
            root,
            terminals: sorted,
            mask,
        })
    }

    /// Builds `S = {root} ∪ others`.
    pub fn rooted(n: usize, root: Vertex, others: &[Vertex]) -> Result<Self, SpecError> {
        let mut all = Vec::with_capacity(others.len() + 1);
        all.push(root);
        all.extend_from_slice(others);
        Self::new(n, root, &all)
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    /// All terminals, ascending.
    pub fn terminals(&self) -> &[Vertex] {
        &self.terminals
    }

    pub fn k(&self) -> usize {
        self.terminals.len()
    }

    /// Order of the host digraph this spec was built for.
    pub fn host_order(&self) -> usize {
        self.mask.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.mask.len() && self.mask[v]
    }

    /// `S \ {r}`, ascending.
    pub fn sinks(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.terminals.iter().copied().filter(move |&t| t != self.root)
    }

    /// Terminals with the root listed first, then the rest ascending.
    pub fn root_first(&self) -> Vec<Vertex> {
        let mut out = vec![self.root];
        out.extend(self.sinks());
        out
    }
}

/// An out-tree given by its root and arc set. The arc list is kept sorted,
/// which doubles as the deduplication key.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PendantTree {
    root: Vertex,
    arcs: Vec<(Vertex, Vertex)>,
}

impl PendantTree {
    pub fn new(root: Vertex, mut arcs: Vec<(Vertex, Vertex)>) -> Self {
        arcs.sort_unstable();
        arcs.dedup();
        PendantTree { root, arcs }
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    /// Endpoints of all arcs plus the root, ascending.
    pub fn vertex_set(&self) -> Vec<Vertex> {
        let mut set = BTreeSet::new();
        set.insert(self.root);
        for &(u, v) in &self.arcs {
            set.insert(u);
            set.insert(v);
        }
        set.into_iter().collect()
    }

    /// Tree vertices outside the terminal set.
    pub fn internal_vertices(&self, spec: &TerminalSpec) -> Vec<Vertex> {
        self.vertex_set()
            .into_iter()
            .filter(|&v| !spec.contains(v))
            .collect()
    }

    /// Contracts every vertex of degree two outside `S`. Assumes the tree is
    /// a minimal pendant tree for `spec`.
    pub fn skeleton(&self, spec: &TerminalSpec) -> Skeleton {
        let verts = self.vertex_set();
        let n = verts.last().map_or(0, |&m| m + 1).max(spec.host_order());
        let mut parent = vec![None; n];
        let mut degree = vec![0usize; n];
        for &(u, v) in &self.arcs {
            parent[v] = Some(u);
            degree[u] += 1;
            degree[v] += 1;
        }
        let branch: Vec<Vertex> = verts
            .iter()
            .copied()
            .filter(|&v| !spec.contains(v) && degree[v] >= 3)
            .collect();
        let keep = |v: Vertex| v == spec.root() || branch.binary_search(&v).is_ok();
        let mut arcs = Vec::new();
        for &v in branch.iter().chain(spec.terminals().iter()) {
            if v == spec.root() {
                continue;
            }
            let mut p = parent[v];
            while let Some(u) = p {
                if keep(u) {
                    arcs.push((u, v));
                    break;
                }
                p = parent[u];
            }
        }
        arcs.sort_unstable();
        Skeleton {
            branch,
            arcs,
        }
    }
}

/// Why a tree fails to be a pendant `(S, r)`-tree of the host.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum TreeDefect {
    #[error("not-a-tree")]
    NotATree,
    #[error("wrong-root")]
    WrongRoot,
    #[error("terminal-degree")]
    TerminalDegree,
    #[error("arc-not-in-host")]
    ArcNotInHost,
}

impl TreeDefect {
    pub fn code(self) -> &'static str {
        match self {
            TreeDefect::NotATree => "not-a-tree",
            TreeDefect::WrongRoot => "wrong-root",
            TreeDefect::TerminalDegree => "terminal-degree",
            TreeDefect::ArcNotInHost => "arc-not-in-host",
        }
    }
}

/// Checks every pendant-tree invariant for `tree` against `spec` and `d`.
pub fn validate_pendant_tree(
    d: &Digraph,
    spec: &TerminalSpec,
    tree: &PendantTree,
) -> Result<(), TreeDefect> {
    let verts = tree.vertex_set();
    let n = verts.last().map_or(0, |&m| m + 1);
    let mut indeg = vec![0usize; n];
    let mut degree = vec![0usize; n];
    let mut children: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &(u, v) in tree.arcs() {
        if u == v {
            return Err(TreeDefect::NotATree);
        }
        indeg[v] += 1;
        degree[u] += 1;
        degree[v] += 1;
        children[u].push(v);
    }
    // an out-tree: exactly one vertex of in-degree 0, all others in-degree 1,
    // and everything reachable from that vertex
    let sources: Vec<Vertex> = verts.iter().copied().filter(|&v| indeg[v] == 0).collect();
    if sources.len() != 1 || verts.iter().any(|&v| indeg[v] > 1) {
        return Err(TreeDefect::NotATree);
    }
    let top = sources[0];
    let mut seen = vec![false; n];
    let mut stack = vec![top];
    seen[top] = true;
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for &y in &children[x] {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    if reached != verts.len() {
        return Err(TreeDefect::NotATree);
    }
    if top != spec.root() || tree.root() != spec.root() {
        return Err(TreeDefect::WrongRoot);
    }
    for &s in spec.terminals() {
        if s >= n || degree[s] != 1 {
            return Err(TreeDefect::TerminalDegree);
        }
    }
    if tree.arcs().iter().any(|&(u, v)| !d.has_arc(u, v)) {
        return Err(TreeDefect::ArcNotInHost);
    }
    Ok(())
}

/// A family of pendant trees for one terminal specification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    pub spec: TerminalSpec,
    pub trees: Vec<PendantTree>,
}

impl Packing {
    pub fn new(spec: TerminalSpec, trees: Vec<PendantTree>) -> Self {
        Packing { spec, trees }
    }

    pub fn empty(spec: TerminalSpec) -> Self {
        Packing { spec, trees: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairConflict {
    SharedArc,
    SharedInternalVertex,
}

impl PairConflict {
    pub fn code(self) -> &'static str {
        match self {
            PairConflict::SharedArc => "shared-arc",
            PairConflict::SharedInternalVertex => "shared-internal-vertex",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum PackingDefect {
    #[error("bad-tree: tree {index} is invalid ({defect})")]
    BadTree { index: usize, defect: TreeDefect },
    #[error("{}: trees {first} and {second}", conflict.code())]
    Conflict {
        first: usize,
        second: usize,
        conflict: PairConflict,
    },
}

impl PackingDefect {
    pub fn code(&self) -> &'static str {
        match self {
            PackingDefect::BadTree { .. } => "bad-tree",
            PackingDefect::Conflict { conflict, .. } => conflict.code(),
        }
    }
}

/// Every tree must validate and every pair must be internally disjoint:
/// no shared arc, and no shared vertex outside `S`.
pub fn validate_packing(d: &Digraph, packing: &Packing) -> Result<(), PackingDefect> {
    let spec = &packing.spec;
    for (index, tree) in packing.trees.iter().enumerate() {
        validate_pendant_tree(d, spec, tree).map_err(|defect| PackingDefect::BadTree { index, defect })?;
    }
    let internals: Vec<Vec<Vertex>> = packing
        .trees
        .iter()
        .map(|t| t.internal_vertices(spec))
        .collect();
    for i in 0..packing.trees.len() {
        for j in i + 1..packing.trees.len() {
            if sorted_intersect(packing.trees[i].arcs(), packing.trees[j].arcs()) {
                return Err(PackingDefect::Conflict {
                    first: i,
                    second: j,
                    conflict: PairConflict::SharedArc,
                });
            }
            if sorted_intersect(&internals[i], &internals[j]) {
                return Err(PackingDefect::Conflict {
                    first: i,
                    second: j,
                    conflict: PairConflict::SharedInternalVertex,
                });
            }
        }
    }
    Ok(())
}

fn sorted_intersect<T: Ord>(a: &[T], b: &[T]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// The contracted shape of a minimal pendant tree: branch vertices `R`
/// (degree at least three, outside `S`) plus the terminals, joined by
/// abstract arcs that need not exist in the host.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Skeleton {
    pub branch: Vec<Vertex>,
    pub arcs: Vec<(Vertex, Vertex)>,
}

impl Skeleton {
    /// `R ∪ S`, ascending.
    pub fn vertices(&self, spec: &TerminalSpec) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self.branch.iter().chain(spec.terminals()).copied().collect();
        v.sort_unstable();
        v
    }

    /// Checks the skeleton invariants against `spec`.
    pub fn is_valid(&self, spec: &TerminalSpec) -> bool {
        let k = spec.k();
        if self.branch.iter().any(|&x| spec.contains(x)) || self.branch.len() + 2 > k.max(2) {
            return false;
        }
        if k >= 3 && self.branch.is_empty() {
            return false;
        }
        let verts = self.vertices(spec);
        let Some(&max) = verts.last() else { return false };
        let mut indeg = vec![0usize; max + 1];
        let mut outdeg = vec![0usize; max + 1];
        for &(u, v) in &self.arcs {
            if verts.binary_search(&u).is_err() || verts.binary_search(&v).is_err() {
                return false;
            }
            outdeg[u] += 1;
            indeg[v] += 1;
        }
        if self.arcs.len() + 1 != verts.len() {
            return false;
        }
        for &v in &verts {
            let ok = if v == spec.root() {
                indeg[v] == 0 && outdeg[v] == 1
            } else if spec.contains(v) {
                indeg[v] == 1 && outdeg[v] == 0
            } else {
                indeg[v] == 1 && outdeg[v] >= 2
            };
            if !ok {
                return false;
            }
        }
        // connected given the degree counts and |A| = |V| - 1
        let tree = PendantTree::new(spec.root(), self.arcs.clone());
        tree.vertex_set() == verts
            && {
                let mut seen = vec![false; max + 1];
                seen[spec.root()] = true;
                let mut stack = vec![spec.root()];
                let mut count = 1;
                while let Some(x) = stack.pop() {
                    for &(u, v) in &self.arcs {
                        if u == x && !seen[v] {
                            seen[v] = true;
                            count += 1;
                            stack.push(v);
                        }
                    }
                }
                count == verts.len()
            }
    }
}

/// A skeleton shape over abstract slots: slot 0 is the root, slots
/// `1..=m` are branch vertices and the remaining `k - 1` slots are the
/// non-root terminals in ascending order. `parent[i]` is the parent slot of
/// slot `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ShapeTemplate {
    pub(crate) branch_count: usize,
    pub(crate) parent: Vec<usize>,
}

/// All shapes with `m` labelled branch slots and `k - 1` terminal leaves.
pub(crate) fn shape_templates(m: usize, k: usize) -> Vec<ShapeTemplate> {
    let leaves = k - 1;
    let slots = m + leaves;
    let mut out = Vec::new();
    let mut parent = vec![0usize; slots];
    fn rec(
        idx: usize,
        m: usize,
        slots: usize,
        parent: &mut Vec<usize>,
        out: &mut Vec<ShapeTemplate>,
    ) {
        if idx == slots {
            let mut children = vec![0usize; m + 1];
            for &p in parent.iter() {
                children[p] += 1;
            }
            if children[0] != 1 || children[1..].iter().any(|&c| c < 2) {
                return;
            }
            // every branch slot must reach the root
            for start in 1..=m {
                let mut cur = start;
                let mut steps = 0;
                while cur != 0 {
                    cur = parent[cur - 1];
                    steps += 1;
                    if steps > m {
                        return;
                    }
                }
            }
            out.push(ShapeTemplate {
                branch_count: m,
                parent: parent.clone(),
            });
            return;
        }
        for p in 0..=m {
            // a branch slot cannot be its own parent
            if idx < m && p == idx + 1 {
                continue;
            }
            parent[idx] = p;
            rec(idx + 1, m, slots, parent, out);
        }
    }
    rec(0, m, slots, &mut parent, &mut out);
    out
}

impl ShapeTemplate {
    pub(crate) fn instantiate(&self, spec: &TerminalSpec, branch: &[Vertex]) -> Skeleton {
        debug_assert_eq!(branch.len(), self.branch_count);
        let sinks: Vec<Vertex> = spec.sinks().collect();
        let slot_vertex = |slot: usize| -> Vertex {
            if slot == 0 {
                spec.root()
            } else if slot <= self.branch_count {
                branch[slot - 1]
            } else {
                sinks[slot - 1 - self.branch_count]
            }
        };
        let mut arcs: Vec<(Vertex, Vertex)> = self
            .parent
            .iter()
            .enumerate()
            .map(|(i, &p)| (slot_vertex(p), slot_vertex(i + 1)))
            .collect();
        arcs.sort_unstable();
        Skeleton {
            branch: branch.to_vec(),
            arcs,
        }
    }
}

/// Calls `f` with every `size`-subset of `pool` in lexicographic order.
pub(crate) fn for_each_subset<B>(
    pool: &[Vertex],
    size: usize,
    mut f: impl FnMut(&[Vertex]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    fn rec<B>(
        pool: &[Vertex],
        start: usize,
        size: usize,
        cur: &mut Vec<Vertex>,
        f: &mut dyn FnMut(&[Vertex]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if cur.len() == size {
            return f(cur);
        }
        let need = size - cur.len();
        for i in start..pool.len() {
            if pool.len() - i < need {
                break;
            }
            cur.push(pool[i]);
            rec(pool, i + 1, size, cur, f)?;
            cur.pop();
        }
        ControlFlow::Continue(())
    }
    let mut cur = Vec::with_capacity(size);
    rec(pool, 0, size, &mut cur, &mut f)
}

/// Every skeleton for `spec` over branch sets drawn from `V(D) \ S`.
pub fn enumerate_skeletons(d: &Digraph, spec: &TerminalSpec) -> Vec<Skeleton> {
    let k = spec.k();
    let pool: Vec<Vertex> = d.vertices().filter(|&v| !spec.contains(v)).collect();
    let mut out = Vec::new();
    let max_branch = k.saturating_sub(2);
    for m in 0..=max_branch {
        let templates = shape_templates(m, k);
        if templates.is_empty() {
            continue;
        }
        let _ = for_each_subset::<()>(&pool, m, |branch| {
            for t in &templates {
                out.push(t.instantiate(spec, branch));
            }
            ControlFlow::Continue(())
        });
    }
    out
}

/// Counters reported by the tree enumerator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub nodes: u64,
    pub trees: u64,
}

/// Streams every minimal pendant `(S, r)`-tree of `d` (degree-one vertex
/// set exactly `S`) to `visit`, each exactly once. Returns early if the
/// visitor breaks.
pub fn for_each_pendant_tree<B>(
    d: &Digraph,
    spec: &TerminalSpec,
    visit: impl FnMut(&PendantTree) -> ControlFlow<B>,
) -> (ControlFlow<B>, EnumerationStats) {
    let mut search = TreeSearch::new(d, spec);
    let mut visit = visit;
    let flow = search.explore(&mut visit);
    (flow, search.stats)
}

/// All minimal pendant trees, sorted by arc list.
pub fn enumerate_pendant_trees(d: &Digraph, spec: &TerminalSpec) -> Vec<PendantTree> {
    let mut out = Vec::new();
    let _ = for_each_pendant_tree::<()>(d, spec, |t| {
        out.push(t.clone());
        ControlFlow::Continue(())
    });
    out.sort();
    out
}

/// Include/exclude search over frontier arcs. Each node fixes a partial
/// out-tree plus a set of forbidden arcs; branching on one frontier arc
/// either adds it or forbids it, so every subtree is reached once.
struct TreeSearch<'a> {
    d: &'a Digraph,
    spec: &'a TerminalSpec,
    n: usize,
    in_tree: Vec<bool>,
    children: Vec<usize>,
    excluded: Vec<bool>,
    arcs: Vec<(Vertex, Vertex)>,
    missing: usize,
    root_done: bool,
    stats: EnumerationStats,
    // scratch
    good: Vec<bool>,
    reach: Vec<bool>,
    stack: Vec<Vertex>,
}

impl<'a> TreeSearch<'a> {
    fn new(d: &'a Digraph, spec: &'a TerminalSpec) -> Self {
        let n = d.order();
        let mut in_tree = vec![false; n];
        in_tree[spec.root()] = true;
        TreeSearch {
            d,
            spec,
            n,
            in_tree,
            children: vec![0; n],
            excluded: vec![false; n * n],
            arcs: Vec::new(),
            missing: spec.k() - 1,
            root_done: false,
            stats: EnumerationStats::default(),
            good: vec![false; n],
            reach: vec![false; n],
            stack: Vec::new(),
        }
    }

    fn is_term(&self, v: Vertex) -> bool {
        self.spec.contains(v)
    }

    fn usable(&self, u: Vertex, w: Vertex) -> bool {
        !self.excluded[u * self.n + w] && !self.in_tree[w]
    }

    /// Tree vertices that may still receive children.
    fn expandable(&self, v: Vertex) -> bool {
        if v == self.spec.root() {
            !self.root_done
        } else {
            self.in_tree[v] && !self.is_term(v)
        }
    }

    fn root_head_allowed(&self, w: Vertex) -> bool {
        !self.is_term(w) || self.spec.k() == 2
    }

    fn pending(&self) -> Option<Vertex> {
        (0..self.n).find(|&v| self.in_tree[v] && !self.is_term(v) && self.children[v] == 0)
    }

    fn feasible(&mut self) -> bool {
        let n = self.n;
        // good[v]: v is a missing terminal, or a free non-terminal with a
        // usable route to a missing terminal through free non-terminals.
        self.good.iter_mut().for_each(|g| *g = false);
        self.stack.clear();
        for &s in self.spec.terminals() {
            if !self.in_tree[s] {
                self.good[s] = true;
                self.stack.push(s);
            }
        }
        while let Some(x) = self.stack.pop() {
            for &w in self.d.in_neighbors(x) {
                if !self.good[w] && !self.in_tree[w] && !self.is_term(w) && !self.excluded[w * n + x] {
                    self.good[w] = true;
                    self.stack.push(w);
                }
            }
        }
        if !self.root_done {
            let r = self.spec.root();
            let ok = self
                .d
                .out_neighbors(r)
                .iter()
                .any(|&w| self.usable(r, w) && self.good[w] && self.root_head_allowed(w));
            if !ok {
                return false;
            }
        }
        for v in 0..n {
            if self.in_tree[v] && !self.is_term(v) && self.children[v] == 0 {
                let ok = self
                    .d
                    .out_neighbors(v)
                    .iter()
                    .any(|&w| self.usable(v, w) && self.good[w]);
                if !ok {
                    return false;
                }
            }
        }
        // every missing terminal must be reachable from an expandable vertex
        self.reach.iter_mut().for_each(|g| *g = false);
        self.stack.clear();
        for v in 0..n {
            if self.expandable(v) {
                self.stack.push(v);
            }
        }
        while let Some(x) = self.stack.pop() {
            for &w in self.d.out_neighbors(x) {
                if self.reach[w] || self.excluded[x * n + w] || self.in_tree[w] {
                    continue;
                }
                if x == self.spec.root() && !self.root_head_allowed(w) {
                    continue;
                }
                self.reach[w] = true;
                if !self.is_term(w) {
                    self.stack.push(w);
                }
            }
        }
        self.spec
            .terminals()
            .iter()
            .all(|&s| self.in_tree[s] || self.reach[s])
    }

    fn choose(&self) -> Option<(Vertex, Vertex)> {
        let r = self.spec.root();
        if !self.root_done {
            return self
                .d
                .out_neighbors(r)
                .iter()
                .find(|&&w| self.usable(r, w) && self.root_head_allowed(w))
                .map(|&w| (r, w));
        }
        if let Some(p) = self.pending() {
            return self
                .d
                .out_neighbors(p)
                .iter()
                .find(|&&w| self.usable(p, w))
                .map(|&w| (p, w));
        }
        for v in 0..self.n {
            if self.expandable(v) {
                if let Some(&w) = self.d.out_neighbors(v).iter().find(|&&w| self.usable(v, w)) {
                    return Some((v, w));
                }
            }
        }
        None
    }

    fn explore<B>(&mut self, visit: &mut impl FnMut(&PendantTree) -> ControlFlow<B>) -> ControlFlow<B> {
        self.stats.nodes += 1;
        if self.missing == 0 {
            if self.root_done && self.pending().is_none() {
                self.stats.trees += 1;
                let tree = PendantTree::new(self.spec.root(), self.arcs.clone());
                return visit(&tree);
            }
            return ControlFlow::Continue(());
        }
        if !self.feasible() {
            return ControlFlow::Continue(());
        }
        let Some((u, w)) = self.choose() else {
            return ControlFlow::Continue(());
        };

        // include u -> w
        self.in_tree[w] = true;
        self.children[u] += 1;
        self.arcs.push((u, w));
        let was_root_done = self.root_done;
        if u == self.spec.root() {
            self.root_done = true;
        }
        if self.is_term(w) {
            self.missing -= 1;
        }
        let flow = self.explore(visit);
        if self.is_term(w) {
            self.missing += 1;
        }
        self.root_done = was_root_done;
        self.arcs.pop();
        self.children[u] -= 1;
        self.in_tree[w] = false;
        flow?;

        // forbid u -> w
        let idx = u * self.n + w;
        self.excluded[idx] = true;
        let flow = self.explore(visit);
        self.excluded[idx] = false;
        flow
    }
}
