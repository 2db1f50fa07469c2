//! Brute-force references that share no search code with the library.
#![allow(dead_code)]

use pendant_core::{validate_pendant_tree, Digraph, PendantTree, TerminalSpec};

/// Every pendant (S,r)-tree of `d`, minimal or not, found by scanning all
/// arc subsets. Only for digraphs with few arcs.
pub fn all_pendant_trees(d: &Digraph, spec: &TerminalSpec) -> Vec<PendantTree> {
    let arcs = d.arcs();
    assert!(arcs.len() <= 20, "brute force over 2^{} subsets", arcs.len());
    let mut out = Vec::new();
    for mask in 1u32..(1 << arcs.len()) {
        let chosen: Vec<_> = (0..arcs.len()).filter(|i| mask >> i & 1 == 1).map(|i| arcs[i]).collect();
        let tree = PendantTree::new(spec.root(), chosen);
        if validate_pendant_tree(d, spec, &tree).is_ok() {
            out.push(tree);
        }
    }
    out
}

/// Leaves of a tree are exactly the non-root terminals.
pub fn is_minimal(tree: &PendantTree, spec: &TerminalSpec) -> bool {
    tree.vertex_set().into_iter().all(|v| {
        v == spec.root() || spec.contains(v) || tree.arcs().iter().any(|&(u, _)| u == v)
    })
}

fn compatible(a: &PendantTree, b: &PendantTree, spec: &TerminalSpec) -> bool {
    let arcs_disjoint = a.arcs().iter().all(|x| !b.arcs().contains(x));
    let vb = b.vertex_set();
    let verts_ok = a.vertex_set().iter().all(|v| spec.contains(*v) || !vb.contains(v));
    arcs_disjoint && verts_ok
}

/// Maximum packing size by exhaustive search over the given tree list.
pub fn max_packing(trees: &[PendantTree], spec: &TerminalSpec) -> usize {
    fn go(trees: &[PendantTree], spec: &TerminalSpec, start: usize, chosen: &mut Vec<usize>) -> usize {
        let mut best = chosen.len();
        for i in start..trees.len() {
            if chosen.iter().all(|&j| compatible(&trees[i], &trees[j], spec)) {
                chosen.push(i);
                best = best.max(go(trees, spec, i + 1, chosen));
                chosen.pop();
            }
        }
        best
    }
    go(trees, spec, 0, &mut Vec::new())
}

/// All simple paths from `s` to `t`, as vertex lists.
pub fn simple_paths(d: &Digraph, s: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(d: &Digraph, t: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let x = *path.last().unwrap();
        if x == t {
            out.push(path.clone());
            return;
        }
        for &y in d.out_neighbors(x) {
            if !path.contains(&y) {
                path.push(y);
                go(d, t, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d, t, &mut vec![s], &mut out);
    out
}

/// Directed 2-linkage by pairing all simple paths.
pub fn two_linkage_brute(d: &Digraph, s1: usize, t1: usize, s2: usize, t2: usize) -> bool {
    let p1 = simple_paths(d, s1, t1);
    let p2 = simple_paths(d, s2, t2);
    p1.iter().any(|a| p2.iter().any(|b| a.iter().all(|v| !b.contains(v))))
}

/// Internally-disjoint `u -> v` path count via Menger: the direct arc, if
/// any, plus the smallest vertex set separating `v` from `u` once that arc
/// is removed. Separators are found by trying every vertex subset.
pub fn local_connectivity_brute(d: &Digraph, u: usize, v: usize) -> usize {
    let n = d.order();
    let direct = usize::from(d.has_arc(u, v));
    let rest = d.without_arcs(&[(u, v)]);
    let others: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    let mut best = others.len();
    for mask in 0u32..(1 << others.len()) {
        let removed: Vec<usize> = (0..others.len()).filter(|i| mask >> i & 1 == 1).map(|i| others[i]).collect();
        if removed.len() >= best {
            continue;
        }
        let reach = rest.reachable_from(u, |x| !removed.contains(&x));
        if !reach[v] {
            best = removed.len();
        }
    }
    direct + best
}

pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }
    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

pub fn random_digraph(rng: &mut Lcg, n: usize, percent: u64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.below(100) < percent {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, &arcs).unwrap()
}

pub fn random_symmetric(rng: &mut Lcg, n: usize, percent: u64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(100) < percent {
                arcs.push((u, v));
                arcs.push((v, u));
            }
        }
    }
    Digraph::new(n, &arcs).unwrap()
}
