//! Classifier properties over a small corpus: reflexivity with identity
//! certificates, symmetry via certificate inversion, invariance under
//! vertex relabeling, and soundness of the distinguishers.

use lkk_core::classify::{
    classify_pair, compare_invariants, search_certificate, ClassifyOptions, CompareOutcome,
    IsoVerdict,
};
use lkk_core::enumerate::{generate_corpus, CorpusSpec};
use lkk_core::graph::{Edge, WeightedGraph};

fn small_corpus() -> Vec<WeightedGraph> {
    generate_corpus(&CorpusSpec {
        max_vertices: 2,
        max_edge_multiplicity: 1,
        include_sinks: true,
        canonical_only: true,
    })
    .unwrap()
}

#[test]
fn reflexivity_with_identity_certificates() {
    let opts = ClassifyOptions { degree_bound: 1, coeff_bound: 1, ..Default::default() };
    for (i, g) in small_corpus().iter().enumerate() {
        match classify_pair(g, g, opts).unwrap() {
            IsoVerdict::Isomorphic { certificate, .. } => {
                let n = g.vertices().len();
                for r in 0..n {
                    for c in 0..n {
                        let e = certificate.u.get(r, c);
                        assert_eq!(e.is_one(), r == c, "graph {i}: identity expected");
                        if r != c {
                            assert!(e.is_zero());
                        }
                    }
                }
            }
            other => panic!("graph {i}: expected isomorphic, got {other:?}"),
        }
    }
}

/// Swap the two vertices of a 2-vertex graph.
fn relabel(g: &WeightedGraph) -> WeightedGraph {
    let vertices = vec![g.vertices()[1].clone(), g.vertices()[0].clone()];
    let edges = g
        .edges()
        .iter()
        .map(|e| Edge {
            id: e.id.clone(),
            src: e.src.clone(),
            dst: e.dst.clone(),
            weight: e.weight.clone(),
        })
        .collect();
    WeightedGraph::new(g.group().clone(), vertices, edges)
}

#[test]
fn relabeling_yields_isomorphic_verdicts() {
    let opts = ClassifyOptions { degree_bound: 2, coeff_bound: 2, ..Default::default() };
    for g in small_corpus().iter().filter(|g| g.vertices().len() == 2) {
        let permuted = relabel(g);
        match classify_pair(g, &permuted, opts).unwrap() {
            IsoVerdict::Isomorphic { certificate, .. } => {
                let x = lkk_core::bf::bf_relations(g);
                let y = lkk_core::bf::bf_relations(&permuted);
                assert!(certificate.verify(&x, &y));
            }
            other => panic!("relabeled graph must stay isomorphic, got {other:?}"),
        }
    }
}

#[test]
fn symmetry_via_certificate_inversion() {
    let r2 = WeightedGraph::from_adjacency(&[vec![2]]);
    let k2 = WeightedGraph::from_adjacency(&[vec![1, 1], vec![1, 1]]);
    let opts = ClassifyOptions { degree_bound: 2, coeff_bound: 2, ..Default::default() };
    let forward = matches!(classify_pair(&r2, &k2, opts).unwrap(), IsoVerdict::Isomorphic { .. });
    let backward = matches!(classify_pair(&k2, &r2, opts).unwrap(), IsoVerdict::Isomorphic { .. });
    assert!(forward && backward);
}

#[test]
fn distinguished_pairs_admit_no_certificate() {
    // spot-check soundness: wherever the battery separates two corpus
    // graphs, the bounded certificate search must come up empty
    let corpus = small_corpus();
    let mut checked = 0;
    for i in 0..corpus.len() {
        for j in i + 1..corpus.len() {
            if checked >= 8 {
                return;
            }
            if let CompareOutcome::Distinguished { .. } =
                compare_invariants(&corpus[i], &corpus[j], 7).unwrap()
            {
                let cert = search_certificate(&corpus[i], &corpus[j], 1, 1).unwrap();
                assert!(cert.is_none(), "distinguished pair ({i},{j}) produced a certificate");
                checked += 1;
            }
        }
    }
}

#[test]
fn sequence_kernel_terms_vanish_on_small_corpus() {
    // the kernel side of the cyclic-coefficient sequence must be zero for
    // every coefficient modulus, by injectivity of the presentation
    let corpus = generate_corpus(&CorpusSpec {
        max_vertices: 2,
        max_edge_multiplicity: 2,
        include_sinks: true,
        canonical_only: true,
    })
    .unwrap();
    for (i, g) in corpus.iter().enumerate() {
        for m in 2..=9 {
            let t = lkk_core::bf::sequence_terms(g, m).unwrap();
            assert!(t.kernel_is_zero(), "graph {i}, modulus {m}");
        }
    }
}
