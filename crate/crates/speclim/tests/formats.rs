use proptest::prelude::*;
use speclim::format::{parse_graph, parse_hypergraph, write_graph, write_hypergraph, GraphInput};
use speclim_core::hypergraph::UniformHypergraph;
use speclim_core::{Graph, MixedGraph, OrientedGraph, Sign, SignedGraph};

fn pairs(n: usize, bits: &[bool]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k % bits.len()] {
                out.push((u, v));
            }
            k += 1;
        }
    }
    out
}

fn arb_input() -> impl Strategy<Value = GraphInput> {
    (1usize..9, prop::collection::vec(any::<bool>(), 1..40), 0u8..4, any::<u64>()).prop_map(
        |(n, bits, kind, salt)| {
            let edges = pairs(n, &bits);
            let flip = |i: usize| salt >> (i % 64) & 1 == 1;
            match kind {
                0 => GraphInput::Simple(Graph::from_edges(n, &edges).unwrap()),
                1 => {
                    let signed: Vec<_> = edges
                        .iter()
                        .enumerate()
                        .map(|(i, &(u, v))| (u, v, if flip(i) { Sign::Minus } else { Sign::Plus }))
                        .collect();
                    GraphInput::Signed(SignedGraph::from_signed_edges(n, &signed).unwrap())
                }
                2 => {
                    let mut m = MixedGraph::new(n);
                    for (i, &(u, v)) in edges.iter().enumerate() {
                        match (flip(i), flip(i + 17)) {
                            (true, true) => m.add_digon(u, v).unwrap(),
                            (true, false) => m.add_arc(u, v).unwrap(),
                            _ => m.add_arc(v, u).unwrap(),
                        }
                    }
                    GraphInput::Mixed(m)
                }
                _ => {
                    let arcs: Vec<_> = edges
                        .iter()
                        .enumerate()
                        .map(|(i, &(u, v))| if flip(i) { (v, u) } else { (u, v) })
                        .collect();
                    GraphInput::Oriented(OrientedGraph::from_arcs(n, &arcs).unwrap())
                }
            }
        },
    )
}

proptest! {
    #[test]
    fn graphs_round_trip(g in arb_input()) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(back.order(), g.order());
        // an input without edges reads back as a simple graph
        if text.lines().count() > 1 {
            prop_assert_eq!(back.flavour(), g.flavour());
        }
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn hypergraphs_round_trip(r in 2usize..5, extra in 0usize..5, seed in any::<u64>()) {
        let n = r + extra;
        let m = 1 + (seed % 6) as usize;
        let edges: Vec<Vec<usize>> = (0..m)
            .map(|i| {
                let start = (seed as usize).wrapping_add(i * 7) % n;
                (0..r).map(|k| (start + k) % n).collect()
            })
            .collect();
        // repeated edges are rejected by the constructor, so skip those draws
        if let Ok(h) = UniformHypergraph::new(n, r, edges) {
            let text = write_hypergraph(&h);
            let back = parse_hypergraph(&text).unwrap();
            prop_assert_eq!(back.uniformity(), r);
            prop_assert_eq!(back.edges().len(), h.edges().len());
            prop_assert_eq!(write_hypergraph(&back), text);
        }
    }

    #[test]
    fn junk_never_panics(text in "\\PC{0,80}") {
        let _ = parse_graph(&text);
        let _ = parse_hypergraph(&text);
    }
}

#[test]
fn errors_name_the_line() {
    let e = parse_graph("n 4\n0 1\n1 2 +\n").unwrap_err();
    assert_eq!(e.line, 3);
    let e = parse_graph("# comment\nn 3\n0 7\n").unwrap_err();
    assert_eq!(e.line, 3);
    // a missing edge is reported at the last line read
    let e = parse_hypergraph("3 4 2\n0 1 2\n").unwrap_err();
    assert_eq!(e.line, 2);
}
