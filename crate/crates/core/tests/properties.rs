//! Property tests over random posets, graphs and partitions.

use localdim::constructions::{
    block_trace_cover, bogart_extension, height2_local_realizer_with, product_realizer, reduce,
    removal_construction, Removal,
};
use localdim::diffgraph::{poset_from_bipartite, verify_cover, BipartiteGraph, CoverKind, DifferenceGraph};
use localdim::formats::{
    parse_cover, parse_graph, parse_poset, parse_realizer, write_cover, write_graph, write_poset,
    write_realizer,
};
use localdim::generators::{product, ElementMap, DEFAULT_ELEMENT_CAP};
use localdim::poset::Poset;
use localdim::realizer::verify_local_realizer;
use localdim::solvers::{exact_dim, exact_ldim, SolveBudget};
use proptest::prelude::*;

/// A poset on `0..n` from a permutation and a set of forward pairs.
fn poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(perm, bits)| {
            let n = perm.len();
            let mut rels = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        rels.push((perm[i], perm[j]));
                    }
                    k += 1;
                }
            }
            Poset::new(n, &rels).unwrap()
        })
}

fn graph(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(any::<bool>(), r * c)))
        .prop_map(|(r, c, bits)| {
            let edges: Vec<_> = (0..r * c).filter(|&i| bits[i]).map(|i| (i / c, i % c)).collect();
            BipartiteGraph::new(r, c, &edges).unwrap()
        })
}

fn partition() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(1usize..12, 1..10).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ldim_witness_verifies_and_is_at_most_dim(p in poset(6)) {
        let l = exact_ldim(&p, &SolveBudget::ldim()).unwrap();
        let cert = verify_local_realizer(&p, &l.witness).unwrap().unwrap();
        prop_assert_eq!(cert.mu, l.value);
        let d = exact_dim(&p, &SolveBudget::dim()).unwrap();
        prop_assert!(l.value <= d.value);
        for ext in &d.witness {
            prop_assert!(p.is_linear_extension(ext.elements()));
        }
    }

    #[test]
    fn height2_realizer_is_bounded_by_cover(g in graph(12, 12), b in 1usize..4) {
        let (p, _) = poset_from_bipartite(&g);
        let c = height2_local_realizer_with(&p, Some(b)).unwrap();
        let cert = verify_local_realizer(&p, &c.realizer).unwrap().unwrap();
        prop_assert!(cert.mu <= 2 + c.cover_report.max_mult);
    }

    #[test]
    fn block_trace_cover_is_a_bounded_partition(g in graph(14, 14), b in 1usize..5) {
        let f = block_trace_cover(&g, b).unwrap();
        let rep = verify_cover(&g, &f, CoverKind::Biclique).unwrap();
        let edges: usize = f.members.iter().map(|m| m.edges().len()).sum();
        prop_assert_eq!(edges, g.edge_count());
        prop_assert!(rep.max_col_mult <= g.rows().div_ceil(b));
        prop_assert!(rep.max_row_mult <= 1 << (b - 1));
    }

    #[test]
    fn product_frequencies_add(p in poset(5), q in poset(5)) {
        let rp = exact_ldim(&p, &SolveBudget::ldim()).unwrap().witness;
        let rq = exact_ldim(&q, &SolveBudget::ldim()).unwrap().witness;
        let r = product_realizer(&p, &q, &rp, &rq, &p.topological_order(), &q.topological_order()).unwrap();
        let (pq, _) = product(
            &p, &ElementMap::identity(p.len()), &q, &ElementMap::identity(q.len()), DEFAULT_ELEMENT_CAP,
        ).unwrap();
        verify_local_realizer(&pq, &r).unwrap().unwrap();
        let (fp, fq, f) = (rp.freq(), rq.freq(), r.freq());
        for x in 0..p.len() {
            for y in 0..q.len() {
                prop_assert_eq!(f[x * q.len() + y], fp[x] + fq[y]);
            }
        }
    }

    #[test]
    fn bogart_extension_orders_chains(p in poset(8), seed in any::<u64>()) {
        let n = p.len();
        let chain = p.longest_chain();
        let cut = seed as usize % chain.len();
        let ca: Vec<usize> = chain[..=cut].to_vec();
        let mut cb: Vec<usize> = Vec::new();
        for y in (0..n).rev() {
            let free = ca.iter().all(|&a| p.incomparable(a, y));
            if free && cb.iter().all(|&z| p.comparable(z, y)) {
                cb.push(y);
            }
        }
        let cb = p.sort_chain(&cb).unwrap();
        let l = bogart_extension(&p, &ca, &cb).unwrap();
        prop_assert!(p.is_linear_extension(l.elements()));
        let pos = |x| l.position(x).unwrap();
        for x in 0..n {
            for y in 0..n {
                if p.incomparable(x, y) && (ca.contains(&x) || cb.contains(&y)) {
                    prop_assert!(pos(x) < pos(y));
                }
            }
        }
    }

    #[test]
    fn removal_deltas(p in poset(7)) {
        prop_assume!(p.len() >= 3);
        let chain = p.longest_chain();
        let mut cases = vec![Removal::OneChain { c: chain }];
        let minimal = p.minimal_elements();
        let maximal = p.maximal_elements();
        for &x in &minimal {
            for &y in &maximal {
                if x != y && p.incomparable(x, y) {
                    cases.push(Removal::MinMaxPair { x, y });
                }
                let lonely = (0..p.len()).all(|z| !(p.incomparable(z, x) && p.incomparable(z, y)));
                if p.lt(x, y) && lonely {
                    cases.push(Removal::SpecialPair { x, y });
                }
            }
        }
        for rem in cases {
            let (rest, _) = reduce(&p, &rem);
            if rest.is_empty() {
                continue;
            }
            let red = exact_ldim(&rest, &SolveBudget::ldim()).unwrap().witness;
            let out = removal_construction(&p, &rem, &red).unwrap();
            let cert = verify_local_realizer(&p, &out.realizer).unwrap().unwrap();
            prop_assert_eq!(cert.mu, out.mu);
            match rem {
                Removal::OneChain { .. } | Removal::TwoChains { .. } => prop_assert_eq!(out.delta(), 2),
                _ => prop_assert!(out.delta() <= 1),
            }
        }
    }

    #[test]
    fn conjugation_is_an_involution(parts in partition()) {
        let h = DifferenceGraph::from_partition(&parts).unwrap();
        prop_assert_eq!(h.transpose().transpose(), h.clone());
        prop_assert_eq!(h.transpose().edge_count(), h.edge_count());
        prop_assert_eq!(h.transpose().to_graph(), h.to_graph().transpose());
    }

    #[test]
    fn formats_round_trip(p in poset(7), g in graph(6, 6)) {
        prop_assert_eq!(parse_poset(&write_poset(&p)).unwrap(), p.clone());
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g.clone());
        let r = exact_ldim(&p, &SolveBudget::with_size(7)).unwrap().witness;
        prop_assert_eq!(parse_realizer(&write_realizer(&r), p.len()).unwrap(), r);
        let f = block_trace_cover(&g, 2).unwrap();
        prop_assert_eq!(parse_cover(&write_cover(&f)).unwrap(), f);
    }
}
