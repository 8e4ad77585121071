mod support;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use submaj::graph::{
    complete_graph, complete_graph_ritz_spectrum, edge_laplacian, edge_selector, edge_spectrum, edge_weights,
    incidence_matrix, nonzero_part, spectra_compare, vertex_laplacian, vertex_spectrum, weighted_laplacian,
};
use submaj::ritz::ritz_values;
use submaj::tol::MAJORIZATION_REL;
use submaj::verify::{rng_from_seed, TrialRng};
use submaj::Graph;
use support::oracle;

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "{a:?} vs {b:?}");
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

fn random_graph(rng: &mut TrialRng, n: usize, m: usize) -> Graph {
    let mut all = complete_graph(n).unwrap().edges().to_vec();
    all.shuffle(rng);
    all.truncate(m);
    Graph::new(n, &all).unwrap()
}

fn sized_graph(seed: u64, max_n: usize) -> Graph {
    let mut rng = rng_from_seed(seed);
    let n = rng.random_range(2..=max_n);
    let m = rng.random_range(1..=n * (n - 1) / 2);
    random_graph(&mut rng, n, m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn laplacian_equals_weighted_form(seed in any::<u64>()) {
        let g = sized_graph(seed, 12);
        let l = vertex_laplacian(&g).unwrap();
        let w = weighted_laplacian(&complete_graph(g.vertex_count()).unwrap(), &edge_weights(&g)).unwrap();
        prop_assert!(l.max_abs_diff(&w) < 1e-12);
        let q = incidence_matrix(&g).unwrap();
        prop_assert!(edge_laplacian(&g).unwrap().max_abs_diff(&q.tr_matmul(&q)) == 0.0);
    }

    #[test]
    fn relabeling_invariance(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let n = rng.random_range(2..=10);
        let m = rng.random_range(1..=n * (n - 1) / 2);
        let g1 = random_graph(&mut rng, n, m);
        let g2 = random_graph(&mut rng, n, m);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let base = spectra_compare(&g1, &g2, MAJORIZATION_REL).unwrap();
        let moved = spectra_compare(&g1.relabeled(&perm).unwrap(), &g2.relabeled(&perm).unwrap(), MAJORIZATION_REL).unwrap();
        prop_assert!((base.lhs - moved.lhs).abs() < 1e-9);
        prop_assert_eq!(base.differing_edges, moved.differing_edges);
        prop_assert!(base.holds && base.sharpened_holds);
    }

    #[test]
    fn removing_an_edge_interlaces(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let n = rng.random_range(3..=6);
        let m = rng.random_range(2..=n * (n - 1) / 2);
        let g = random_graph(&mut rng, n, m);
        let drop = rng.random_range(0..m);
        let kept: Vec<(usize, usize)> = g.edges().iter().enumerate().filter(|(k, _)| *k != drop).map(|(_, e)| *e).collect();
        let h = Graph::new(n, &kept).unwrap();
        let big = edge_spectrum(&g).unwrap().values;
        let small = edge_spectrum(&h).unwrap().values;
        for i in 0..small.len() {
            prop_assert!(small[i] <= big[i] + 1e-10 && small[i] >= big[i + 1] - 1e-10);
        }
    }

    #[test]
    fn vertex_and_edge_nonzero_spectra_agree(seed in any::<u64>()) {
        let g = sized_graph(seed, 12);
        let n = g.vertex_count();
        let v = nonzero_part(&vertex_spectrum(&g).unwrap().values, n);
        let e = nonzero_part(&edge_spectrum(&g).unwrap().values, n);
        prop_assert!(max_diff(&v, &e) < 1e-9);
    }

    #[test]
    fn edge_selector_ritz_values(seed in any::<u64>()) {
        let g = sized_graph(seed, 8);
        let n = g.vertex_count();
        let k_complete = edge_laplacian(&complete_graph(n).unwrap()).unwrap();
        let ritz = ritz_values(&k_complete, &edge_selector(&g).unwrap()).unwrap().values;
        let own = edge_spectrum(&g).unwrap().values;
        prop_assert!(max_diff(&ritz, &own) < 1e-9);
        let via_lib = complete_graph_ritz_spectrum(&g).unwrap().values;
        prop_assert!(max_diff(&via_lib, &own) < 1e-9);
    }

    #[test]
    fn laplacian_spectrum_matches_bisection(seed in any::<u64>()) {
        let g = sized_graph(seed, 12);
        let l = vertex_laplacian(&g).unwrap();
        let reference = oracle::eigenvalues(l.as_slice(), g.vertex_count());
        prop_assert!(max_diff(&vertex_spectrum(&g).unwrap().values, &reference) < 1e-10);
    }
}

#[test]
fn complete_graph_spectrum() {
    for n in 3..=10 {
        let ev = vertex_spectrum(&complete_graph(n).unwrap()).unwrap().values;
        let mut expected = vec![n as f64; n - 1];
        expected.push(0.0);
        assert!(max_diff(&ev, &expected) < 1e-9, "K_{n}: {ev:?}");
    }
}

#[test]
fn path_versus_star() {
    let path = Graph::new(4, &[(2, 1), (3, 2), (4, 3)]).unwrap();
    let star = Graph::new(4, &[(2, 1), (3, 1), (4, 1)]).unwrap();
    let r = spectra_compare(&path, &star, MAJORIZATION_REL).unwrap();
    assert!((r.lhs - 2.0).abs() < 1e-6);
    assert_eq!(r.differing_edges, 2);
    assert_eq!(r.rhs, 8.0);
    let union = path.union(&star).unwrap();
    let lmax = oracle::eigenvalues(vertex_laplacian(&union).unwrap().as_slice(), 4)[0];
    assert!((r.union_lambda_max - lmax).abs() < 1e-10);
    assert!((r.sharpened_rhs - 2.0 * lmax).abs() < 1e-10);
    assert!(r.holds && r.sharpened_holds);
}

#[test]
fn identical_graphs_have_zero_distance() {
    let g = Graph::new(5, &[(2, 1), (5, 3), (4, 2)]).unwrap();
    let r = spectra_compare(&g, &g, MAJORIZATION_REL).unwrap();
    assert_eq!(r.differing_edges, 0);
    assert!(r.lhs.abs() < 1e-12);
    assert!(r.holds);
}
