//! Exact exponential-time decision procedures.
//!
//! These are ground truth for the gadget equivalences and double as the
//! path-realization subroutine of the skeleton algorithm. All searches visit
//! neighbors in ascending id order, so results are deterministic.

use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{Digraph, Vertex};
use crate::error::OracleError;

/// A path as its vertex sequence, source first.
pub type Path = Vec<Vertex>;

/// Looks for vertex-disjoint paths `s1 -> t1` and `s2 -> t2`.
///
/// Enumerates every simple `s1 -> t1` path avoiding `s2, t2` and, for each,
/// searches an `s2 -> t2` path in what remains.
pub fn directed_two_linkage(
    d: &Digraph,
    s1: Vertex,
    t1: Vertex,
    s2: Vertex,
    t2: Vertex,
) -> Result<Option<(Path, Path)>, OracleError> {
    let ends = [s1, t1, s2, t2];
    for (i, &a) in ends.iter().enumerate() {
        if a >= d.order() {
            return Err(OracleError::UnknownVertex(a));
        }
        if ends[i + 1..].contains(&a) {
            return Err(OracleError::TerminalsNotDistinct);
        }
    }
    let n = d.order();
    let mut blocked = vec![false; n];
    blocked[s2] = true;
    blocked[t2] = true;
    blocked[s1] = true;
    let mut path = vec![s1];
    let mut found = None;
    first_path_dfs(d, s1, t1, &mut blocked, &mut path, &mut |p| {
        let mut avoid = vec![false; n];
        for &v in p {
            avoid[v] = true;
        }
        match bfs_path(d, s2, t2, &avoid) {
            Some(q) => {
                found = Some((p.to_vec(), q));
                true
            }
            None => false,
        }
    });
    Ok(found)
}

/// DFS over simple paths from `cur` to `target`; `accept` returns true to
/// stop the search.
fn first_path_dfs(
    d: &Digraph,
    cur: Vertex,
    target: Vertex,
    blocked: &mut Vec<bool>,
    path: &mut Path,
    accept: &mut dyn FnMut(&[Vertex]) -> bool,
) -> bool {
    for &w in d.out_neighbors(cur) {
        if w == target {
            path.push(w);
            let stop = accept(path);
            path.pop();
            if stop {
                return true;
            }
            continue;
        }
        if blocked[w] {
            continue;
        }
        blocked[w] = true;
        path.push(w);
        let stop = first_path_dfs(d, w, target, blocked, path, accept);
        path.pop();
        blocked[w] = false;
        if stop {
            return true;
        }
    }
    false
}

/// Shortest path from `s` to `t` whose vertices (endpoints included) avoid
/// `avoid`.
fn bfs_path(d: &Digraph, s: Vertex, t: Vertex, avoid: &[bool]) -> Option<Path> {
    if avoid[s] || avoid[t] {
        return None;
    }
    let n = d.order();
    let mut prev = vec![usize::MAX; n];
    prev[s] = s;
    let mut queue = alloc::collections::VecDeque::new();
    queue.push_back(s);
    while let Some(x) = queue.pop_front() {
        if x == t {
            let mut p = vec![t];
            let mut c = t;
            while c != s {
                c = prev[c];
                p.push(c);
            }
            p.reverse();
            return Some(p);
        }
        for &y in d.out_neighbors(x) {
            if prev[y] == usize::MAX && !avoid[y] {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Paths `source_i -> target_i` in `host` whose internal vertices avoid
/// `forbidden_internal`, every pair endpoint, and every other path.
#[derive(Debug, Clone)]
pub struct LinkageQuery<'a> {
    pub host: &'a Digraph,
    pub pairs: Vec<(Vertex, Vertex)>,
    pub forbidden_internal: Vec<Vertex>,
}

/// Exact backtracking for [`LinkageQuery`]. The returned paths are also
/// pairwise arc-disjoint. Pairs are extended in lexicographic order; the
/// output follows the input order.
pub fn constrained_disjoint_paths(q: &LinkageQuery<'_>) -> Option<Vec<Path>> {
    let d = q.host;
    let n = d.order();
    if q.pairs.iter().any(|&(s, t)| s >= n || t >= n || s == t) {
        return None;
    }
    let mut blocked = vec![false; n];
    for &v in &q.forbidden_internal {
        if v < n {
            blocked[v] = true;
        }
    }
    for &(s, t) in &q.pairs {
        blocked[s] = true;
        blocked[t] = true;
    }
    let mut order: Vec<usize> = (0..q.pairs.len()).collect();
    order.sort_by_key(|&i| q.pairs[i]);
    let mut search = LinkSearch {
        d,
        pairs: &q.pairs,
        order,
        blocked,
        used_direct: Vec::new(),
        paths: vec![Vec::new(); q.pairs.len()],
    };
    if search.solve(0) {
        Some(search.paths)
    } else {
        None
    }
}

struct LinkSearch<'a> {
    d: &'a Digraph,
    pairs: &'a [(Vertex, Vertex)],
    order: Vec<usize>,
    blocked: Vec<bool>,
    used_direct: Vec<(Vertex, Vertex)>,
    paths: Vec<Path>,
}

impl LinkSearch<'_> {
    fn solve(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        if !self.remaining_reachable(pos) {
            return false;
        }
        let idx = self.order[pos];
        let (s, t) = self.pairs[idx];
        let mut path = vec![s];
        self.extend(pos, s, t, &mut path)
    }

    fn remaining_reachable(&self, pos: usize) -> bool {
        self.order[pos..].iter().all(|&i| {
            let (s, t) = self.pairs[i];
            if self.d.has_arc(s, t) && !self.used_direct.contains(&(s, t)) {
                return true;
            }
            let reach = self.d.reachable_from(s, |v| v == t || !self.blocked[v]);
            reach[t]
        })
    }

    fn extend(&mut self, pos: usize, cur: Vertex, t: Vertex, path: &mut Path) -> bool {
        let idx = self.order[pos];
        for i in 0..self.d.out_neighbors(cur).len() {
            let w = self.d.out_neighbors(cur)[i];
            if w == t {
                let direct = path.len() == 1;
                if direct && self.used_direct.contains(&(cur, t)) {
                    continue;
                }
                if direct {
                    self.used_direct.push((cur, t));
                }
                path.push(t);
                self.paths[idx] = path.clone();
                if self.solve(pos + 1) {
                    return true;
                }
                path.pop();
                if direct {
                    self.used_direct.pop();
                }
                continue;
            }
            if self.blocked[w] {
                continue;
            }
            self.blocked[w] = true;
            path.push(w);
            let ok = self.extend(pos, w, t, path);
            path.pop();
            self.blocked[w] = false;
            if ok {
                return true;
            }
        }
        false
    }
}

/// A hypergraph on vertices `0..n_vertices` with nonempty edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n_vertices: usize,
    edges: Vec<Vec<Vertex>>,
}

impl Hypergraph {
    pub fn new(n_vertices: usize, edges: Vec<Vec<Vertex>>) -> Result<Self, OracleError> {
        let mut clean = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            e.dedup();
            if e.is_empty() || e.iter().any(|&v| v >= n_vertices) {
                return Err(OracleError::BadHyperedge(i));
            }
            clean.push(e);
        }
        Ok(Hypergraph {
            n_vertices,
            edges: clean,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Edges with their members sorted ascending.
    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Red,
    Blue,
}

/// A red/blue assignment under which every edge sees both colors, if any.
/// Vertex 0 is always red in the returned coloring.
pub fn hypergraph_two_coloring(h: &Hypergraph) -> Option<Vec<Color>> {
    if h.edges.iter().any(|e| e.len() < 2) {
        return None;
    }
    let n = h.n_vertices;
    // edges indexed by their largest member: checked once that vertex is set
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in h.edges.iter().enumerate() {
        closing[*e.last().expect("edges are nonempty")].push(i);
    }
    let mut colors = vec![Color::Red; n];
    fn rec(v: usize, h: &Hypergraph, closing: &[Vec<usize>], colors: &mut Vec<Color>) -> bool {
        if v == colors.len() {
            return true;
        }
        let options: &[Color] = if v == 0 {
            &[Color::Red]
        } else {
            &[Color::Red, Color::Blue]
        };
        for &c in options {
            colors[v] = c;
            let ok = closing[v].iter().all(|&i| {
                let e = &h.edges[i];
                e.iter().any(|&x| colors[x] != colors[e[0]])
            });
            if ok && rec(v + 1, h, closing, colors) {
                return true;
            }
        }
        false
    }
    if rec(0, h, &closing, &mut colors) {
        Some(colors)
    } else {
        None
    }
}

/// A balanced tripartite graph on vertices `0..3q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripartiteInstance {
    q: usize,
    parts: [Vec<Vertex>; 3],
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<bool>,
}

impl TripartiteInstance {
    pub fn new(
        a: Vec<Vertex>,
        b: Vec<Vertex>,
        c: Vec<Vertex>,
        edges: Vec<(Vertex, Vertex)>,
    ) -> Result<Self, OracleError> {
        let q = a.len();
        if b.len() != q || c.len() != q {
            return Err(OracleError::BadParts);
        }
        let n = 3 * q;
        let mut part_of = vec![usize::MAX; n];
        for (p, members) in [&a, &b, &c].into_iter().enumerate() {
            for &v in members {
                if v >= n || part_of[v] != usize::MAX {
                    return Err(OracleError::BadParts);
                }
                part_of[v] = p;
            }
        }
        let mut adjacency = vec![false; n * n];
        let mut clean = Vec::new();
        for &(u, v) in &edges {
            if u >= n || v >= n || part_of[u] == part_of[v] {
                return Err(OracleError::BadEdge(u, v));
            }
            let e = (u.min(v), u.max(v));
            if !adjacency[e.0 * n + e.1] {
                adjacency[e.0 * n + e.1] = true;
                adjacency[e.1 * n + e.0] = true;
                clean.push(e);
            }
        }
        clean.sort_unstable();
        Ok(TripartiteInstance {
            q,
            parts: [a, b, c],
            edges: clean,
            adjacency,
        })
    }

    /// The standard labelling `A = 0..q`, `B = q..2q`, `C = 2q..3q`.
    pub fn standard(q: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self, OracleError> {
        Self::new(
            (0..q).collect(),
            (q..2 * q).collect(),
            (2 * q..3 * q).collect(),
            edges,
        )
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn part_a(&self) -> &[Vertex] {
        &self.parts[0]
    }

    pub fn part_b(&self) -> &[Vertex] {
        &self.parts[1]
    }

    pub fn part_c(&self) -> &[Vertex] {
        &self.parts[2]
    }

    /// Undirected edges as `(min, max)` pairs, ascending.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        let n = 3 * self.q;
        u < n && v < n && self.adjacency[u * n + v]
    }

    /// Whether `{a, b, c}` induces a connected subgraph.
    pub fn triple_connected(&self, a: Vertex, b: Vertex, c: Vertex) -> bool {
        let count = [self.adjacent(a, b), self.adjacent(a, c), self.adjacent(b, c)]
            .iter()
            .filter(|&&x| x)
            .count();
        count >= 2
    }
}

/// Partitions the vertices into `q` connected transversal triples
/// `[a, b, c]`, listed in the order of part `A`.
pub fn cllm_solve(g: &TripartiteInstance) -> Option<Vec<[Vertex; 3]>> {
    let q = g.q;
    let mut used_b = vec![false; q];
    let mut used_c = vec![false; q];
    let mut triples = Vec::with_capacity(q);
    fn rec(
        i: usize,
        g: &TripartiteInstance,
        used_b: &mut [bool],
        used_c: &mut [bool],
        triples: &mut Vec<[Vertex; 3]>,
    ) -> bool {
        if i == g.q {
            return true;
        }
        let a = g.parts[0][i];
        for bi in 0..g.q {
            if used_b[bi] {
                continue;
            }
            for ci in 0..g.q {
                if used_c[ci] {
                    continue;
                }
                let (b, c) = (g.parts[1][bi], g.parts[2][ci]);
                if !g.triple_connected(a, b, c) {
                    continue;
                }
                used_b[bi] = true;
                used_c[ci] = true;
                triples.push([a, b, c]);
                if rec(i + 1, g, used_b, used_c, triples) {
                    return true;
                }
                triples.pop();
                used_b[bi] = false;
                used_c[ci] = false;
            }
        }
        false
    }
    if rec(0, g, &mut used_b, &mut used_c, &mut triples) {
        Some(triples)
    } else {
        None
    }
}

/// Maximum number of internally vertex-disjoint `u -> v` paths, the arc
/// `uv` (if present) counting as one path.
pub fn local_connectivity(d: &Digraph, u: Vertex, v: Vertex) -> usize {
    assert!(u != v && u < d.order() && v < d.order());
    let direct = usize::from(d.has_arc(u, v));
    direct + separator_flow(d, u, v)
}

/// Unit vertex-capacity max flow from `u` to `v`, ignoring the arc `uv`.
fn separator_flow(d: &Digraph, u: Vertex, v: Vertex) -> usize {
    let n = d.order();
    // node w splits into w_in = 2w and w_out = 2w + 1
    let nodes = 2 * n;
    let mut cap = vec![0i32; nodes * nodes];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut add = |a: usize, b: usize, c: i32, cap: &mut Vec<i32>| {
        if cap[a * nodes + b] == 0 && cap[b * nodes + a] == 0 {
            adj[a].push(b);
            adj[b].push(a);
        }
        cap[a * nodes + b] += c;
    };
    let big = n as i32 + 1;
    for w in 0..n {
        let c = if w == u || w == v { big } else { 1 };
        add(2 * w, 2 * w + 1, c, &mut cap);
    }
    for &(x, y) in d.arcs() {
        if (x, y) == (u, v) {
            continue;
        }
        add(2 * x + 1, 2 * y, 1, &mut cap);
    }
    let (src, sink) = (2 * u + 1, 2 * v);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; nodes];
        prev[src] = src;
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(src);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for &y in &adj[x] {
                if prev[y] == usize::MAX && cap[x * nodes + y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut c = sink;
        while c != src {
            let p = prev[c];
            cap[p * nodes + c] -= 1;
            cap[c * nodes + p] += 1;
            c = p;
        }
        flow += 1;
    }
}

/// Vertex-strong connectivity `κ(D)`: the minimum, over ordered pairs of
/// distinct vertices with no arc `u -> v`, of the smallest `u`-`v` vertex
/// separator. The bidirected complete digraph gets `n - 1`.
pub fn vertex_connectivity(d: &Digraph) -> usize {
    let n = d.order();
    let mut best = n.saturating_sub(1);
    for u in 0..n {
        for v in 0..n {
            if u != v && !d.has_arc(u, v) {
                best = best.min(separator_flow(d, u, v));
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_path(d: &Digraph, p: &[Vertex], s: Vertex, t: Vertex) {
        assert_eq!(p.first(), Some(&s));
        assert_eq!(p.last(), Some(&t));
        for w in p.windows(2) {
            assert!(d.has_arc(w[0], w[1]));
        }
    }

    #[test]
    fn linkage_two_arcs() {
        let d = Digraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let (p1, p2) = directed_two_linkage(&d, 0, 1, 2, 3).unwrap().unwrap();
        assert_eq!(p1, vec![0, 1]);
        assert_eq!(p2, vec![2, 3]);
    }

    #[test]
    fn linkage_four_cycles() {
        // s1=0, s2=1, t1=2, t2=3 on the cycle s1 -> s2 -> t1 -> t2 -> s1
        let neg = Digraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(directed_two_linkage(&neg, 0, 2, 1, 3).unwrap(), None);
        // s1 -> t1 -> s2 -> t2 -> s1
        let pos = Digraph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        let (p1, p2) = directed_two_linkage(&pos, 0, 2, 1, 3).unwrap().unwrap();
        assert_eq!((p1, p2), (vec![0, 2], vec![1, 3]));
    }

    #[test]
    fn linkage_rejects_repeated_terminals() {
        let d = Digraph::bidirected_complete(4);
        assert_eq!(
            directed_two_linkage(&d, 0, 1, 0, 2),
            Err(OracleError::TerminalsNotDistinct)
        );
    }

    #[test]
    fn constrained_single_direct_arc() {
        let d = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let q = LinkageQuery { host: &d, pairs: vec![(0, 1)], forbidden_internal: vec![] };
        assert_eq!(constrained_disjoint_paths(&q), Some(vec![vec![0, 1]]));
    }

    #[test]
    fn constrained_in_complete_five() {
        let d = Digraph::bidirected_complete(5);
        let q = LinkageQuery {
            host: &d,
            pairs: vec![(0, 1), (2, 3)],
            forbidden_internal: vec![0, 1, 2, 3],
        };
        let paths = constrained_disjoint_paths(&q).unwrap();
        assert_eq!(paths, vec![vec![0, 1], vec![2, 3]]);
        // removing the direct arcs leaves one spare vertex for two pairs
        let sparse = d.without_arcs(&[(0, 1), (2, 3)]);
        let q = LinkageQuery { host: &sparse, ..q };
        assert_eq!(constrained_disjoint_paths(&q), None);
    }

    #[test]
    fn constrained_shared_cut_vertex() {
        // 0 -> 4 -> 1 and 2 -> 4 -> 3: both pairs must cross vertex 4
        let d = Digraph::new(6, &[(0, 4), (4, 1), (2, 4), (4, 3), (0, 5), (5, 4)]).unwrap();
        let q = LinkageQuery { host: &d, pairs: vec![(0, 1), (2, 3)], forbidden_internal: vec![] };
        assert_eq!(constrained_disjoint_paths(&q), None);
        // each alone is fine
        let q = LinkageQuery { host: &d, pairs: vec![(2, 3)], forbidden_internal: vec![] };
        assert_eq!(constrained_disjoint_paths(&q), Some(vec![vec![2, 4, 3]]));
    }

    #[test]
    fn constrained_paths_are_arc_disjoint() {
        let d = Digraph::bidirected_complete(4);
        let q = LinkageQuery { host: &d, pairs: vec![(0, 1), (0, 1)], forbidden_internal: vec![] };
        let paths = constrained_disjoint_paths(&q).unwrap();
        assert_eq!(paths.len(), 2);
        assert_ne!(paths[0], paths[1]);
        for p in &paths {
            assert_path(&d, p, 0, 1);
        }
    }

    #[test]
    fn two_coloring_examples() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(hypergraph_two_coloring(&h), Some(vec![Color::Red, Color::Blue]));
        let tri = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(hypergraph_two_coloring(&tri), None);
        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap();
        let c = hypergraph_two_coloring(&h).unwrap();
        for e in h.edges() {
            assert!(e.iter().any(|&v| c[v] == Color::Red));
            assert!(e.iter().any(|&v| c[v] == Color::Blue));
        }
        let single = Hypergraph::new(2, vec![vec![0]]).unwrap();
        assert_eq!(hypergraph_two_coloring(&single), None);
        assert!(Hypergraph::new(2, vec![vec![]]).is_err());
    }

    #[test]
    fn cllm_examples() {
        let g = TripartiteInstance::standard(1, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(cllm_solve(&g), Some(vec![[0, 1, 2]]));
        let g = TripartiteInstance::standard(1, vec![(0, 1)]).unwrap();
        assert_eq!(cllm_solve(&g), None);
        // A = {0,1}, B = {2,3}, C = {4,5}; triangles (0,2,4) and (1,3,5)
        let g = TripartiteInstance::standard(
            2,
            vec![(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5)],
        )
        .unwrap();
        assert_eq!(cllm_solve(&g), Some(vec![[0, 2, 4], [1, 3, 5]]));
        assert!(TripartiteInstance::standard(1, vec![(0, 0)]).is_err());
    }

    #[test]
    fn connectivity_examples() {
        let c5 = Digraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(vertex_connectivity(&c5), 1);
        assert_eq!(vertex_connectivity(&Digraph::bidirected_complete(4)), 3);
        let tt = Digraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(vertex_connectivity(&tt), 0);
        assert_eq!(local_connectivity(&Digraph::bidirected_complete(5), 0, 1), 4);
    }
}
