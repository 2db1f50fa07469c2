use pendant_core::gadgets::{
    amplifier_copy_count, gadget_amplifier, gadget_cllm, gadget_eulerian, gadget_hypergraph,
};
use pendant_core::oracles::{
    cllm_solve, directed_two_linkage, hypergraph_two_coloring, Hypergraph, TripartiteInstance,
};
use pendant_core::{solve_tau_sr, validate_packing, Digraph, Packing, PendantTree};

/// s1=0 s2=1 t1=2 t2=3 w=4: triangles s1 t1 w and s2 t2 w.
fn two_triangles() -> Digraph {
    Digraph::new(5, &[(0, 2), (2, 4), (4, 0), (1, 3), (3, 4), (4, 1)]).unwrap()
}

/// s1 -> s2 -> t1 -> t2 -> s1
fn blocking_cycle() -> Digraph {
    Digraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
}

#[test]
fn eulerian_gadget_positive_source() {
    let dstar = two_triangles();
    assert!(directed_two_linkage(&dstar, 0, 2, 1, 3).unwrap().is_some());
    let g = gadget_eulerian(&dstar, 0, 1, 2, 3, 3, 2).unwrap();
    assert_eq!(g.digraph.order(), 8);
    assert!(g.digraph.is_eulerian());
    let res = solve_tau_sr(&g.digraph, &g.spec, None);
    assert_eq!(res.value, 2);
}

#[test]
fn eulerian_gadget_negative_source() {
    let dstar = blocking_cycle();
    assert!(directed_two_linkage(&dstar, 0, 2, 1, 3).unwrap().is_none());
    let g = gadget_eulerian(&dstar, 0, 1, 2, 3, 3, 2).unwrap();
    assert!(g.digraph.is_eulerian());
    assert!(solve_tau_sr(&g.digraph, &g.spec, None).value < 2);
}

#[test]
fn eulerian_gadget_with_extra_terminals() {
    for (dstar, positive) in [(two_triangles(), true), (blocking_cycle(), false)] {
        let g = gadget_eulerian(&dstar, 0, 1, 2, 3, 5, 2).unwrap();
        assert!(g.digraph.is_eulerian());
        assert_eq!(solve_tau_sr(&g.digraph, &g.spec, Some(2)).value >= 2, positive);
    }
}

#[test]
fn eulerian_forward_trees_form_a_packing() {
    // k = 4 so U = {u_3}; each tree follows one linkage path
    let dstar = two_triangles();
    let g = gadget_eulerian(&dstar, 0, 1, 2, 3, 4, 2).unwrap();
    let id = |s: &str| g.provenance.id_of(s).unwrap();
    let (r, u1, u2, u3) = (id("r"), id("u_1"), id("u_2"), id("u_3"));
    let (s1, s2, t1, t2) = (0, 1, 2, 3);
    let first = PendantTree::new(r, vec![(r, s1), (s1, u2), (s1, t1), (t1, u1), (t1, u3)]);
    let second = PendantTree::new(r, vec![(r, s2), (s2, u1), (s2, t2), (t2, u2), (t2, u3)]);
    let p = Packing::new(g.spec.clone(), vec![first, second]);
    assert_eq!(validate_packing(&g.digraph, &p), Ok(()));
}

#[test]
fn eulerian_gadget_beyond_two_trees() {
    // v_i is adjacent only to r and U, so with k = 3 it has no way on
    // to u_1 and u_2 and the value stays at 2 even for a positive source
    let g = gadget_eulerian(&two_triangles(), 0, 1, 2, 3, 3, 3).unwrap();
    assert!(g.digraph.is_eulerian());
    assert_eq!(solve_tau_sr(&g.digraph, &g.spec, None).value, 2);
}

#[test]
fn cllm_gadget_examples() {
    let triangles =
        TripartiteInstance::standard(2, vec![(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5)]).unwrap();
    let g = gadget_cllm(&triangles, 3).unwrap();
    assert!(g.digraph.is_symmetric());
    assert!(cllm_solve(&triangles).is_some());
    assert!(solve_tau_sr(&g.digraph, &g.spec, None).value >= 2);

    // dropping only the B-C edges keeps every triple connected through A
    let no_bc = TripartiteInstance::standard(2, vec![(0, 2), (0, 4), (1, 3), (1, 5)]).unwrap();
    assert!(cllm_solve(&no_bc).is_some());
    let g = gadget_cllm(&no_bc, 3).unwrap();
    assert!(solve_tau_sr(&g.digraph, &g.spec, None).value >= 2);

    // with A isolated no triple is connected
    let no_a = TripartiteInstance::standard(2, vec![(2, 4), (3, 5)]).unwrap();
    let g = gadget_cllm(&no_a, 3).unwrap();
    assert!(g.digraph.is_symmetric());
    assert!(cllm_solve(&no_a).is_none());
    assert!(solve_tau_sr(&g.digraph, &g.spec, None).value < 2);
}

#[test]
fn hypergraph_gadget_examples() {
    let single = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
    let g = gadget_hypergraph(&single, 2).unwrap();
    assert_eq!(g.digraph.order(), 4);
    let res = solve_tau_sr(&g.digraph, &g.spec, None);
    assert!(res.value >= 2);
    assert_eq!(validate_packing(&g.digraph, &res.certificate), Ok(()));

    let triangle = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
    assert!(hypergraph_two_coloring(&triangle).is_none());
    for ell in 2..=3 {
        let g = gadget_hypergraph(&triangle, ell).unwrap();
        assert!(g.digraph.is_symmetric());
        assert!(solve_tau_sr(&g.digraph, &g.spec, None).value < ell);
    }
}

/// x1=0 y1=1 x2=2 y2=3
fn linkage_positive() -> Digraph {
    Digraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
}

fn linkage_negative() -> Digraph {
    Digraph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap()
}

#[test]
fn amplifier_two_rows() {
    assert!(directed_two_linkage(&linkage_positive(), 0, 1, 2, 3).unwrap().is_some());
    assert!(directed_two_linkage(&linkage_negative(), 0, 1, 2, 3).unwrap().is_none());
    let pos = gadget_amplifier(&linkage_positive(), 0, 1, 2, 3, 2).unwrap();
    let res = solve_tau_sr(&pos.digraph, &pos.spec, None);
    assert_eq!(res.value, 2);
    assert_eq!(validate_packing(&pos.digraph, &res.certificate), Ok(()));
    let neg = gadget_amplifier(&linkage_negative(), 0, 1, 2, 3, 2).unwrap();
    assert_eq!(solve_tau_sr(&neg.digraph, &neg.spec, None).value, 1);
    assert_eq!(amplifier_copy_count(2), 1);
    assert_eq!(amplifier_copy_count(3), 5);
}
