//! Seeded fixture corpus shared by the integration tests.
#![allow(dead_code)]

use localdim::diffgraph::{partitions, poset_from_bipartite, BipartiteGraph, DifferenceGraph};
use localdim::poset::Poset;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random poset: each pair of a random permutation is related with
/// probability `q`, then closed transitively.
pub fn random_poset(n: usize, q: f64, rng: &mut ChaCha8Rng) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() < q {
                rels.push((perm[i], perm[j]));
            }
        }
    }
    Poset::new(n, &rels).expect("acyclic by construction")
}

pub fn random_bipartite(rows: usize, cols: usize, q: f64, rng: &mut ChaCha8Rng) -> BipartiteGraph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if rng.gen::<f64>() < q {
                edges.push((r, c));
            }
        }
    }
    BipartiteGraph::new(rows, cols, &edges).unwrap()
}

/// Random poset of height at most two whose critical pairs occur with
/// probability `q`.
pub fn random_height2(a: usize, b: usize, q: f64, rng: &mut ChaCha8Rng) -> Poset {
    poset_from_bipartite(&random_bipartite(a, b, q, rng)).0
}

fn all_graphs(rows: usize, cols: usize) -> Vec<BipartiteGraph> {
    let cells = rows * cols;
    (0u32..1 << cells)
        .map(|mask| {
            let edges: Vec<_> = (0..cells)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| (i / cols, i % cols))
                .collect();
            BipartiteGraph::new(rows, cols, &edges).unwrap()
        })
        .collect()
}

/// Bipartite graphs with at most ten edges: every graph on 2x3 and 3x3
/// vertices, every difference graph of up to ten edges, a few named
/// graphs, and seeded random graphs up to 5x5.
pub fn graph_corpus() -> Vec<(String, BipartiteGraph)> {
    let mut out = Vec::new();
    for (r, c) in [(1, 4), (2, 3), (3, 3)] {
        for (i, g) in all_graphs(r, c).into_iter().enumerate() {
            out.push((format!("all{r}x{c}#{i}"), g));
        }
    }
    for m in 1..=10 {
        for part in partitions(m) {
            let g = DifferenceGraph::from_partition(&part).unwrap().to_graph();
            out.push((format!("H{part:?}"), g));
        }
    }
    let complete = |r: usize, c: usize| {
        let e: Vec<_> = (0..r).flat_map(|i| (0..c).map(move |j| (i, j))).collect();
        BipartiteGraph::new(r, c, &e).unwrap()
    };
    out.push(("K2,5".into(), complete(2, 5)));
    out.push(("K3,3".into(), complete(3, 3)));
    let matching: Vec<_> = (0..5).map(|i| (i, i)).collect();
    out.push(("M5".into(), BipartiteGraph::new(5, 5, &matching).unwrap()));
    let cycle: Vec<_> = (0..5).flat_map(|i| [(i, i), (i, (i + 1) % 5)]).collect();
    out.push(("C10".into(), BipartiteGraph::new(5, 5, &cycle).unwrap()));
    let crown: Vec<_> = (0..4)
        .flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, j)))
        .take(10)
        .collect();
    out.push(("crown4-2".into(), BipartiteGraph::new(4, 4, &crown).unwrap()));
    let mut r = rng(0x5eed);
    let mut made = 0;
    while made < 120 {
        let rows = r.gen_range(2..=5);
        let cols = r.gen_range(2..=5);
        let g = random_bipartite(rows, cols, 0.4, &mut r);
        if g.edge_count() <= 10 {
            out.push((format!("rand#{made}"), g));
            made += 1;
        }
    }
    out
}

/// Poset fixtures with their names, used by the certificate suites.
pub fn poset_corpus() -> Vec<(String, Poset)> {
    use localdim::generators::{boolean_lattice, layers, standard_example};
    let mut out = vec![
        ("chain5".to_string(), Poset::chain(5)),
        ("antichain4".to_string(), Poset::antichain(4)),
    ];
    for n in 2..=5 {
        out.push((format!("S{n}"), standard_example(n).0));
    }
    for n in 1..=3 {
        out.push((format!("2^{n}"), boolean_lattice(n).0));
    }
    out.push(("layers(1,2;4)".into(), layers(1, 2, 4).0));
    let mut r = rng(11);
    for i in 0..40 {
        let n = r.gen_range(2..=7);
        out.push((format!("rand#{i}"), random_poset(n, 0.35, &mut r)));
    }
    out
}
