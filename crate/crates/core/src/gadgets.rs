//! Reduction instances with a name for every vertex.
//!
//! Every constructor keeps the source instance's vertex ids at the front of
//! the output so a witness in the source translates without renumbering.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::digraph::{Digraph, Vertex};
use crate::error::{GadgetError, OracleError};
use crate::model::TerminalSpec;
use crate::oracles::{Hypergraph, TripartiteInstance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    /// Short description of the source instance.
    pub source: String,
    /// `names[v]` is the construction name of output vertex `v`.
    pub names: Vec<String>,
    /// Non-fatal remarks, e.g. a source that fails a stated precondition.
    pub notes: Vec<String>,
}

impl Provenance {
    pub fn id_of(&self, name: &str) -> Option<Vertex> {
        self.names.iter().position(|n| n == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    pub digraph: Digraph,
    pub spec: TerminalSpec,
    pub provenance: Provenance,
}

struct Builder {
    names: Vec<String>,
    arcs: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            names: Vec::new(),
            arcs: Vec::new(),
        }
    }

    fn add(&mut self, name: String) -> Vertex {
        self.names.push(name);
        self.names.len() - 1
    }

    fn arc(&mut self, u: Vertex, v: Vertex) {
        self.arcs.push((u, v));
    }

    fn both(&mut self, u: Vertex, v: Vertex) {
        self.arcs.push((u, v));
        self.arcs.push((v, u));
    }

    fn finish(
        self,
        root: Vertex,
        terminals: &[Vertex],
        source: String,
        notes: Vec<String>,
    ) -> GadgetInstance {
        let n = self.names.len();
        let digraph = Digraph::from_arcs_dedup(n, &self.arcs).expect("gadget arcs are loop-free");
        let spec = TerminalSpec::new(n, root, terminals).expect("gadget terminals are valid");
        GadgetInstance {
            digraph,
            spec,
            provenance: Provenance {
                source,
                names: self.names,
                notes,
            },
        }
    }
}

fn check_vertex(n: usize, v: Vertex) -> Result<(), OracleError> {
    if v >= n {
        return Err(OracleError::UnknownVertex(v));
    }
    Ok(())
}

fn check_four(n: usize, vs: [Vertex; 4]) -> Result<(), GadgetError> {
    for v in vs {
        check_vertex(n, v)?;
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if vs[i] == vs[j] {
                return Err(OracleError::TerminalsNotDistinct.into());
            }
        }
    }
    Ok(())
}

/// Reduces directed 2-linkage on `dstar` to deciding `τ_{S,r} >= ell`.
///
/// Ids: `dstar` keeps `0..n*`, followed by `u_3..u_{k-1}`, `v_1..v_{ell-2}`,
/// `r`, `u_1`, `u_2`. `S = {r, u_1, u_2, u_3, ..., u_{k-1}}`.
pub fn gadget_eulerian(
    dstar: &Digraph,
    s1: Vertex,
    s2: Vertex,
    t1: Vertex,
    t2: Vertex,
    k: usize,
    ell: usize,
) -> Result<GadgetInstance, GadgetError> {
    if k < 3 {
        return Err(GadgetError::KTooSmall(k));
    }
    if ell < 2 {
        return Err(GadgetError::EllTooSmall(ell));
    }
    check_four(dstar.order(), [s1, s2, t1, t2])?;
    let mut notes = Vec::new();
    if !dstar.is_eulerian() {
        notes.push(String::from("source digraph is not Eulerian"));
    }

    let mut b = Builder::new();
    for v in dstar.vertices() {
        b.add(format!("D*.{v}"));
    }
    b.arcs.extend_from_slice(dstar.arcs());
    let big_u: Vec<Vertex> = (3..k).map(|i| b.add(format!("u_{i}"))).collect();
    let big_v: Vec<Vertex> = (1..ell - 1).map(|i| b.add(format!("v_{i}"))).collect();
    let r = b.add(String::from("r"));
    let u1 = b.add(String::from("u_1"));
    let u2 = b.add(String::from("u_2"));

    for (x, y) in [
        (r, s1),
        (r, s2),
        (t1, u1),
        (u1, t1),
        (t2, u2),
        (u2, t2),
        (s1, u2),
        (s2, u1),
        (u1, r),
        (u2, r),
    ] {
        b.arc(x, y);
    }
    for &v in &big_v {
        b.both(r, v);
        for &u in &big_u {
            b.both(v, u);
        }
    }
    for &u in &big_u {
        b.both(t1, u);
        b.both(t2, u);
    }

    let mut terminals = alloc::vec![r, u1, u2];
    terminals.extend_from_slice(&big_u);
    let source = format!(
        "2-linkage on {} vertices, s1={s1} s2={s2} t1={t1} t2={t2}, k={k}, ell={ell}",
        dstar.order()
    );
    Ok(b.finish(r, &terminals, source, notes))
}

/// Reduces the connected-triples partition problem on `g` to deciding
/// `τ_{S,r} >= q`.
///
/// Ids: the vertices of `g` keep `0..3q`, followed by `s_1..s_{k-1}` and `r`.
pub fn gadget_cllm(g: &TripartiteInstance, k: usize) -> Result<GadgetInstance, GadgetError> {
    if k < 3 {
        return Err(GadgetError::KTooSmall(k));
    }
    let n = 3 * g.q();
    let mut b = Builder::new();
    for v in 0..n {
        let part = if g.part_a().contains(&v) {
            "A"
        } else if g.part_b().contains(&v) {
            "B"
        } else {
            "C"
        };
        b.add(format!("{part}.{v}"));
    }
    for &(x, y) in g.edges() {
        b.both(x, y);
    }
    let s: Vec<Vertex> = (1..k).map(|i| b.add(format!("s_{i}"))).collect();
    let r = b.add(String::from("r"));
    for &a in g.part_a() {
        b.both(r, a);
    }
    for &v in g.part_b() {
        b.both(s[0], v);
    }
    for &si in &s[1..] {
        for &w in g.part_c() {
            b.both(si, w);
        }
    }
    let mut terminals = s.clone();
    terminals.push(r);
    let source = format!("tripartite q={} with {} edges, k={k}", g.q(), g.edges().len());
    Ok(b.finish(r, &terminals, source, Vec::new()))
}

/// Reduces hypergraph 2-coloring on `h` to deciding `τ_{S,r} >= ell`.
///
/// Ids: the vertices of `h` keep `0..n`, followed by one vertex per edge
/// (`e_1..e_m`), then `u_1..u_{ell-2}` and `r`. `S` is the edges plus `r`.
pub fn gadget_hypergraph(h: &Hypergraph, ell: usize) -> Result<GadgetInstance, GadgetError> {
    if ell < 2 {
        return Err(GadgetError::EllTooSmall(ell));
    }
    if h.edges().is_empty() {
        return Err(GadgetError::NoEdges);
    }
    if let Some(i) = h.edges().iter().position(|e| e.len() < 2) {
        return Err(GadgetError::SmallEdge(i));
    }
    let n = h.n_vertices();
    let mut b = Builder::new();
    for x in 0..n {
        b.add(format!("x_{x}"));
    }
    let edges: Vec<Vertex> = (1..=h.edges().len()).map(|i| b.add(format!("e_{i}"))).collect();
    let us: Vec<Vertex> = (1..ell - 1).map(|i| b.add(format!("u_{i}"))).collect();
    let r = b.add(String::from("r"));

    for (e, members) in edges.iter().zip(h.edges()) {
        for &x in members {
            b.both(x, *e);
        }
    }
    for &u in &us {
        b.both(r, u);
        for &e in &edges {
            b.both(u, e);
        }
    }
    for x in 0..n {
        b.both(r, x);
        for y in x + 1..n {
            b.both(x, y);
        }
    }
    let mut terminals = edges.clone();
    terminals.push(r);
    let source = format!("hypergraph on {n} vertices with {} edges, ell={ell}", edges.len());
    Ok(b.finish(r, &terminals, source, Vec::new()))
}

/// Number of copies of the linkage instance used by [`gadget_amplifier`].
pub fn amplifier_copy_count(big_n: usize) -> usize {
    (big_n * big_n - 2 * big_n + 2) * (big_n - 1) / 2
}

/// Grid position of one element of a row: either a `u_{i,j}` vertex or the
/// copy `H_{ij}^k`.
#[derive(Clone, Copy)]
enum Cell {
    U(usize),
    Copy(usize),
}

/// The gap amplifier built from `N` rows of copies of the linkage instance
/// `(h; x1 -> y1, x2 -> y2)`.
///
/// Copies `H_{ij}^k` exist for `1 <= i < k <= N`, `j in [N-1]`, `j != k`.
/// Column `(j, k)` runs from `u_{k,j}` down through `H_{k-1,j}^k, ...,
/// H_{1j}^k` (entering at `x2`, leaving at `y2`) into `t_j`. Row `i` runs
/// from `s_i` through its cells in column order (entering copies at `x1`,
/// leaving at `y1`). The figure's extra arc `u_{N,N-1} -> u_{N-1,N}` is
/// included. `S = {r, t_1, ..., t_N}`.
///
/// Ids: copies in `(i, j, k)` order, each a block of `|V(h)|` ids; then
/// `s_1..s_N`, `t_1..t_N`, the `u_{i,j}` in `(i, j)` order, and `r`.
pub fn gadget_amplifier(
    h: &Digraph,
    x1: Vertex,
    y1: Vertex,
    x2: Vertex,
    y2: Vertex,
    big_n: usize,
) -> Result<GadgetInstance, GadgetError> {
    if big_n < 2 {
        return Err(GadgetError::NTooSmall(big_n));
    }
    check_four(h.order(), [x1, y1, x2, y2])?;
    let nn = big_n;
    let hn = h.order();
    let mut b = Builder::new();

    // copies, keyed by (i, j, k) with 1-based indices
    let mut copies: Vec<(usize, usize, usize, Vertex)> = Vec::new();
    for i in 1..=nn {
        for j in 1..nn {
            for k in i + 1..=nn {
                if k == j {
                    continue;
                }
                let base = b.names.len();
                for v in 0..hn {
                    let label = match v {
                        _ if v == x1 => String::from("x1"),
                        _ if v == y1 => String::from("y1"),
                        _ if v == x2 => String::from("x2"),
                        _ if v == y2 => String::from("y2"),
                        _ => format!("{v}"),
                    };
                    b.add(format!("H[{i},{j},{k}].{label}"));
                }
                b.arcs.extend(h.arcs().iter().map(|&(u, v)| (base + u, base + v)));
                copies.push((i, j, k, base));
            }
        }
    }
    let copy_base = |i: usize, j: usize, k: usize| -> Vertex {
        copies
            .iter()
            .find(|c| (c.0, c.1, c.2) == (i, j, k))
            .map(|c| c.3)
            .expect("copy exists")
    };

    let s: Vec<Vertex> = (1..=nn).map(|i| b.add(format!("s_{i}"))).collect();
    let t: Vec<Vertex> = (1..=nn).map(|i| b.add(format!("t_{i}"))).collect();
    let mut u = alloc::vec![alloc::vec![usize::MAX; nn + 1]; nn + 1];
    for i in 1..=nn {
        for j in 1..=nn {
            if i != j {
                u[i][j] = b.add(format!("u_{{{i},{j}}}"));
            }
        }
    }
    let r = b.add(String::from("r"));

    // columns
    for j in 1..=nn {
        for k in (1..=nn).filter(|&k| k != j) {
            let mut prev = u[k][j];
            if j < nn {
                for i in (1..k).rev() {
                    let base = copy_base(i, j, k);
                    b.arc(prev, base + x2);
                    prev = base + y2;
                }
            }
            b.arc(prev, t[j - 1]);
        }
    }
    // rows
    for i in 1..=nn {
        let mut cells = Vec::new();
        for j in 1..=nn {
            for k in (1..=nn).filter(|&k| k != j) {
                if k == i {
                    cells.push(Cell::U(u[i][j]));
                } else if k > i && j < nn {
                    cells.push(Cell::Copy(copy_base(i, j, k)));
                }
            }
        }
        let mut prev = s[i - 1];
        for cell in cells {
            match cell {
                Cell::U(v) => {
                    b.arc(prev, v);
                    prev = v;
                }
                Cell::Copy(base) => {
                    b.arc(prev, base + x1);
                    prev = base + y1;
                }
            }
        }
    }
    b.arc(u[nn][nn - 1], u[nn - 1][nn]);

    for i in 0..nn {
        b.arc(r, s[i]);
        b.arc(s[i], t[i]);
    }
    b.arc(s[0], u[2][1]);
    for i in 2..nn {
        b.arc(u[i][1], u[i + 1][1]);
    }
    for q in 2..nn {
        // anti-diagonal i + j = q + 1 from u_{q,1} to u_{1,q}
        let mut prev = u[q][1];
        for i in (1..q).rev() {
            let j = q + 1 - i;
            if i == j {
                continue;
            }
            b.arc(prev, u[i][j]);
            prev = u[i][j];
        }
    }

    let mut terminals = t.clone();
    terminals.push(r);
    let source = format!(
        "2-linkage on {hn} vertices, x1={x1} y1={y1} x2={x2} y2={y2}, N={nn}, {} copies",
        copies.len()
    );
    Ok(b.finish(r, &terminals, source, Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eulerian_smallest_parameters() {
        let c4 = Digraph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        let g = gadget_eulerian(&c4, 0, 1, 2, 3, 3, 2).unwrap();
        assert_eq!(g.digraph.order(), 7);
        assert_eq!(g.digraph.size(), 4 + 10);
        assert!(g.digraph.is_eulerian());
        assert_eq!(g.spec.terminals().len(), 3);
        assert!(g.provenance.notes.is_empty());
    }

    #[test]
    fn eulerian_rejects_small_parameters() {
        let c4 = Digraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(gadget_eulerian(&c4, 0, 1, 2, 3, 2, 2), Err(GadgetError::KTooSmall(2)));
        assert_eq!(gadget_eulerian(&c4, 0, 1, 2, 3, 3, 1), Err(GadgetError::EllTooSmall(1)));
        assert!(gadget_eulerian(&c4, 0, 0, 2, 3, 3, 2).is_err());
    }

    #[test]
    fn eulerian_general_counts() {
        let c4 = Digraph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        let (k, ell) = (5, 4);
        let g = gadget_eulerian(&c4, 0, 1, 2, 3, k, ell).unwrap();
        let (nu, nv) = (k - 3, ell - 2);
        assert_eq!(g.digraph.order(), 4 + nu + nv + 3);
        assert_eq!(g.digraph.size(), 4 + 10 + 2 * nv + 2 * nu * nv + 4 * nu);
        assert!(g.digraph.is_eulerian());
        assert_eq!(g.spec.k(), k);
    }

    #[test]
    fn cllm_output_is_symmetric() {
        let g = TripartiteInstance::standard(1, vec![(0, 1), (1, 2)]).unwrap();
        let out = gadget_cllm(&g, 4).unwrap();
        assert!(out.digraph.is_symmetric());
        assert_eq!(out.digraph.order(), 3 + 3 + 1);
        assert_eq!(out.spec.k(), 4);
        assert_eq!(out.provenance.id_of("r"), Some(6));
    }

    #[test]
    fn hypergraph_single_edge() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let out = gadget_hypergraph(&h, 2).unwrap();
        assert_eq!(out.digraph.order(), 4);
        assert!(out.digraph.is_symmetric());
        assert_eq!(out.spec.terminals(), &[2, 3]);
    }

    #[test]
    fn hypergraph_rejects_singleton_edges() {
        let h = Hypergraph::new(2, vec![vec![0, 1], vec![1]]).unwrap();
        assert_eq!(gadget_hypergraph(&h, 2), Err(GadgetError::SmallEdge(1)));
    }

    #[test]
    fn amplifier_sizes() {
        let h = Digraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        for n in 2..=4 {
            let g = gadget_amplifier(&h, 0, 1, 2, 3, n).unwrap();
            let copies = g
                .provenance
                .names
                .iter()
                .filter(|s| s.starts_with("H[") && s.ends_with(".x1"))
                .count();
            assert_eq!(copies, amplifier_copy_count(n));
            assert_eq!(g.digraph.order(), 4 * copies + 2 * n + n * (n - 1) + 1);
            assert_eq!(g.spec.k(), n + 1);
        }
        assert_eq!(gadget_amplifier(&h, 0, 1, 2, 3, 1), Err(GadgetError::NTooSmall(1)));
    }

    #[test]
    fn amplifier_two_wiring() {
        let h = Digraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let g = gadget_amplifier(&h, 0, 1, 2, 3, 2).unwrap();
        let id = |name: &str| g.provenance.id_of(name).unwrap();
        let d = &g.digraph;
        assert!(d.has_arc(id("s_1"), id("H[1,1,2].x1")));
        assert!(d.has_arc(id("H[1,1,2].y1"), id("u_{1,2}")));
        assert!(d.has_arc(id("u_{2,1}"), id("H[1,1,2].x2")));
        assert!(d.has_arc(id("H[1,1,2].y2"), id("t_1")));
        assert!(d.has_arc(id("u_{1,2}"), id("t_2")));
        assert!(d.has_arc(id("s_2"), id("u_{2,1}")));
        assert!(d.has_arc(id("u_{2,1}"), id("u_{1,2}")));
        assert!(d.has_arc(id("s_1"), id("u_{2,1}")));
        // copy, columns, rows, extra arc, r -> s_i, s_i -> t_i, s_1 -> u_{2,1}
        assert_eq!(d.size(), 4 + 3 + 3 + 1 + 2 + 2 + 1);
    }
}
