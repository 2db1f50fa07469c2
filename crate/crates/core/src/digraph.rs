//! Simple digraphs over dense vertex ids.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;

/// A vertex id in `0..n`.
pub type Vertex = usize;

/// Minimum out-, in- and semi-degree of a digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeSummary {
    pub delta_plus: usize,
    pub delta_minus: usize,
    pub delta_zero: usize,
}

/// An immutable simple digraph: no loops, no parallel arcs.
///
/// Neighbor lists are kept sorted so every traversal visits vertices in
/// ascending id order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
    matrix: Vec<bool>,
}

impl Digraph {
    /// Builds a digraph on `n` vertices, rejecting loops, duplicate arcs and
    /// out-of-range endpoints.
    pub fn new(n: usize, arc_list: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut matrix = vec![false; n * n];
        for &(u, v) in arc_list {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if matrix[u * n + v] {
                return Err(GraphError::DuplicateArc(u, v));
            }
            matrix[u * n + v] = true;
        }
        Ok(Self::from_matrix(n, matrix))
    }

    /// Builds a digraph from an arc list, silently dropping duplicates.
    /// Loops and out-of-range ids are still rejected.
    pub fn from_arcs_dedup(n: usize, arc_list: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut matrix = vec![false; n * n];
        for &(u, v) in arc_list {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            matrix[u * n + v] = true;
        }
        Ok(Self::from_matrix(n, matrix))
    }

    fn from_matrix(n: usize, matrix: Vec<bool>) -> Self {
        let mut arcs = Vec::new();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in 0..n {
                if matrix[u * n + v] {
                    arcs.push((u, v));
                    out_adj[u].push(v);
                    in_adj[v].push(u);
                }
            }
        }
        Digraph {
            n,
            arcs,
            out_adj,
            in_adj,
            matrix,
        }
    }

    /// The empty digraph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_matrix(n, vec![false; n * n])
    }

    /// The bidirected complete digraph on `n` vertices.
    pub fn bidirected_complete(n: usize) -> Self {
        let mut matrix = vec![true; n * n];
        for v in 0..n {
            matrix[v * n + v] = false;
        }
        Self::from_matrix(n, matrix)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.n
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.matrix[u * self.n + v]
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_adj[v].len()
    }

    /// True iff every arc's reverse is present.
    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| self.has_arc(v, u))
    }

    /// True iff the underlying undirected graph is connected. The
    /// empty digraph on zero vertices counts as connected.
    pub fn is_weakly_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in self.out_adj[x].iter().chain(self.in_adj[x].iter()) {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.n
    }

    /// True iff every vertex reaches every other vertex.
    pub fn is_strong(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let forward = self.reachable_from(0, |_| true);
        if forward.iter().any(|&b| !b) {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &self.in_adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().all(|&b| b)
    }

    /// Connected underlying graph and `d+(v) = d-(v)` everywhere.
    pub fn is_eulerian(&self) -> bool {
        self.vertices()
            .all(|v| self.out_degree(v) == self.in_degree(v))
            && self.is_weakly_connected()
    }

    /// Vertices reachable from `start` moving only through vertices
    /// accepted by `passable` (the start vertex is always included).
    pub fn reachable_from(&self, start: Vertex, passable: impl Fn(Vertex) -> bool) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &self.out_adj[x] {
                if !seen[y] && passable(y) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// The complement: `(u, v)` is an arc iff `u != v` and `(u, v)` is not
    /// an arc of `self`.
    pub fn complement(&self) -> Digraph {
        let n = self.n;
        let mut matrix = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                matrix[u * n + v] = u != v && !self.matrix[u * n + v];
            }
        }
        Self::from_matrix(n, matrix)
    }

    /// The same digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        let rev: Vec<_> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        Digraph::new(self.n, &rev).expect("reversal of a simple digraph is simple")
    }

    /// Returns a copy with the given arcs added (existing arcs are kept once).
    pub fn with_arcs(&self, extra: &[(Vertex, Vertex)]) -> Result<Digraph, GraphError> {
        let mut all = self.arcs.clone();
        all.extend_from_slice(extra);
        Digraph::from_arcs_dedup(self.n, &all)
    }

    /// Returns a copy with the given arcs removed; absent arcs are ignored.
    pub fn without_arcs(&self, removed: &[(Vertex, Vertex)]) -> Digraph {
        let mut matrix = self.matrix.clone();
        for &(u, v) in removed {
            if u < self.n && v < self.n {
                matrix[u * self.n + v] = false;
            }
        }
        Self::from_matrix(self.n, matrix)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Digraph {
        assert_eq!(perm.len(), self.n);
        let arcs: Vec<_> = self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Digraph::new(self.n, &arcs).expect("permutation preserves simplicity")
    }

    /// Minimum out-, in- and semi-degree. Requires `n >= 1`.
    pub fn degree_summary(&self) -> DegreeSummary {
        assert!(self.n >= 1, "degree summary of the empty vertex set");
        let delta_plus = self.vertices().map(|v| self.out_degree(v)).min().unwrap_or(0);
        let delta_minus = self.vertices().map(|v| self.in_degree(v)).min().unwrap_or(0);
        DegreeSummary {
            delta_plus,
            delta_minus,
            delta_zero: delta_plus.min(delta_minus),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::new(n, &arcs).unwrap()
    }

    #[test]
    fn smallest_digraph() {
        let d = Digraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(d.size(), 1);
        assert!(d.has_arc(0, 1));
        assert!(!d.has_arc(1, 0));
    }

    #[test]
    fn rejects_loops_duplicates_and_bad_ids() {
        assert_eq!(Digraph::new(3, &[(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            Digraph::new(3, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateArc(0, 1))
        );
        assert!(matches!(
            Digraph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn figure_one_tree_host() {
        // r=0, u=1, v1=2, v2=3
        let d = Digraph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(d.out_degree(1), 2);
        assert_eq!(d.order(), 4);
    }

    #[test]
    fn isolated_vertices_are_retained() {
        let d = Digraph::new(5, &[(0, 1)]).unwrap();
        assert_eq!(d.order(), 5);
        assert_eq!(d.out_degree(4), 0);
    }

    #[test]
    fn symmetry() {
        assert!(Digraph::bidirected_complete(3).is_symmetric());
        assert!(!cycle(3).is_symmetric());
        assert!(Digraph::empty(5).is_symmetric());
    }

    #[test]
    fn eulerian() {
        assert!(cycle(4).is_eulerian());
        let two = Digraph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!two.is_eulerian());
        let unbalanced = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!unbalanced.is_eulerian());
    }

    #[test]
    fn complement_examples() {
        let k4 = Digraph::bidirected_complete(4);
        assert_eq!(k4.complement(), Digraph::empty(4));
        let tt = Digraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(tt.complement(), tt.reverse());
    }

    #[test]
    fn degree_summaries() {
        let s = Digraph::bidirected_complete(4).degree_summary();
        assert_eq!((s.delta_plus, s.delta_minus, s.delta_zero), (3, 3, 3));
        let star = Digraph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let s = star.degree_summary();
        assert_eq!((s.delta_plus, s.delta_minus, s.delta_zero), (0, 0, 0));
        let s = cycle(5).degree_summary();
        assert_eq!((s.delta_plus, s.delta_minus, s.delta_zero), (1, 1, 1));
    }

    #[test]
    fn strong_connectivity() {
        assert!(cycle(5).is_strong());
        let tt = Digraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(!tt.is_strong());
    }
}
