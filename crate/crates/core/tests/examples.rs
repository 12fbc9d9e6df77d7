//! Worked examples, each checked against an independent computation where one
//! exists: the brute-force oracle, a hand trace, or a textbook value.

use blockforest::algebra::{lagrange_invert, rational, Series, WeightPoly};
use blockforest::labeled::{
    distribution_table, husimi_labeled_by_distribution, labeled_total, rooted_kernel, stirling2,
};
use blockforest::oracle::{
    block_decompose, canonical_form_plain, classify, count_labeled, count_labeled_by_distribution,
    count_oriented_digraphs, count_unlabeled, enumerate_graphs, husimi_graphs, Census, LabeledGraph, OracleConfig,
};
use blockforest::prufer::{format_blocks, format_code, parse_blocks, parse_code, prufer_decode, prufer_encode};
use blockforest::unlabeled::{husimi, integer_counts, oriented_cacti, triangular};
use blockforest::{BlockSizeDistribution, Monomial, Rational, Species};
use num_bigint::BigUint;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn dist(pairs: &[(usize, u64)]) -> BlockSizeDistribution {
    BlockSizeDistribution::from_sizes(pairs.iter().copied()).unwrap()
}

#[test]
fn lagrange_examples() {
    // e^t: 9 rooted labelled trees on three vertices.
    let mut e = Series::<Rational>::zero(6);
    let mut f = Rational::from_integer(1.into());
    for m in 0..=6 {
        e.set_coeff(m, f.recip());
        f *= Rational::from_integer((m as i64 + 1).into());
    }
    assert_eq!(lagrange_invert(&e, 3).unwrap(), rational(3, 2));
    assert_eq!(lagrange_invert(&rooted_kernel(Species::Husimi, 6), 3).unwrap(), rational(2, 1));
    assert_eq!(lagrange_invert(&rooted_kernel(Species::Oriented, 6), 2).unwrap(), rational(1, 1));
    assert!(lagrange_invert(&Series::x(4), 2).is_err());
}

#[test]
fn labelled_examples() {
    assert_eq!(stirling2(0, 0), big(1));
    assert_eq!(stirling2(3, 2), big(3));
    assert_eq!(stirling2(5, 3), big(25));
    assert_eq!(husimi_labeled_by_distribution(&dist(&[(2, 3)])), big(16));
    assert_eq!(husimi_labeled_by_distribution(&dist(&[(3, 1)])), big(1));
    assert_eq!(husimi_labeled_by_distribution(&dist(&[(2, 1), (3, 1)])), big(12));
    assert_eq!(labeled_total(Species::Oriented, 2), big(1));
    assert_eq!(labeled_total(Species::Cacti, 4), big(31));
    let t = distribution_table(Species::Oriented, 3);
    assert_eq!(t.get(&dist(&[(2, 2)])), big(3));
    assert_eq!(t.get(&dist(&[(3, 1)])), big(2));
    for s in Species::ALL {
        assert_eq!(distribution_table(s, 1).total(), big(1));
    }
}

#[test]
fn tables_sum_to_totals() {
    for s in Species::ALL {
        for n in 1..=8 {
            assert_eq!(distribution_table(s, n).total(), labeled_total(s, n as u64), "{s} n={n}");
        }
    }
}

#[test]
fn labelled_totals_match_oracle_at_default_limit() {
    let cfg = OracleConfig::default();
    for s in Species::ALL {
        for n in 1..=7 {
            let oracle = count_labeled_by_distribution(s, n, &cfg).unwrap();
            assert_eq!(oracle, distribution_table(s, n), "{s} n={n}");
        }
    }
}

#[test]
fn orientation_factor_by_direct_digraph_sweep() {
    let cfg = OracleConfig::default();
    for n in 1..=5 {
        assert_eq!(count_oriented_digraphs(n).unwrap(), count_labeled_by_distribution(Species::Oriented, n, &cfg).unwrap());
    }
}

#[test]
fn prufer_examples_and_text_round_trip() {
    let h = parse_blocks("3; {1,2},{2,3}").unwrap();
    let c = prufer_encode(&h);
    assert_eq!(format_code(&c), "lambda: 2; pi: {1}|{3}");
    assert_eq!(prufer_decode(&parse_code("lambda: 2; pi: {1}|{3}").unwrap(), 3).unwrap(), h);
    let tri = parse_blocks("3; {1,2,3}").unwrap();
    assert!(prufer_encode(&tri).lambda.is_empty());
    let star = parse_blocks("4; {1,4},{2,4},{3,4}").unwrap();
    assert_eq!(format_code(&prufer_encode(&star)), "lambda: 4,4; pi: {1}|{2}|{3}");
    assert_eq!(parse_blocks(&format_blocks(&star)).unwrap(), star);
}

#[test]
fn prufer_round_trip_on_six_vertices() {
    let graphs = husimi_graphs(6, &OracleConfig::default()).unwrap();
    assert_eq!(BigUint::from(graphs.len()), labeled_total(Species::Husimi, 6));
    for h in graphs {
        assert_eq!(prufer_decode(&prufer_encode(&h), 6).unwrap(), h);
    }
}

#[test]
fn oracle_examples() {
    let cfg = OracleConfig::default();
    assert_eq!(enumerate_graphs(3, &cfg, |_| true).unwrap().count(), 8);
    assert_eq!(enumerate_graphs(4, &cfg, LabeledGraph::is_connected).unwrap().count(), 38);
    assert_eq!(enumerate_graphs(2, &cfg, LabeledGraph::is_connected).unwrap().count(), 1);
    assert!(enumerate_graphs(8, &cfg, |_| true).is_err());

    let bowtie = LabeledGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
    let d = block_decompose(&bowtie).unwrap();
    assert_eq!((d.blocks.len(), d.cutpoints.count_ones()), (2, 1));

    let k4 = LabeledGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let c = classify(&k4).unwrap();
    assert!(c.husimi && !c.cactus);
    let c4 = LabeledGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let c = classify(&c4).unwrap();
    assert!(c.cactus && !c.husimi);

    assert_eq!(count_labeled(Species::Husimi, 4, &cfg).unwrap(), big(29));
    assert_eq!(count_labeled(Species::Cacti, 4, &cfg).unwrap(), big(31));
    assert_eq!(count_labeled(Species::Oriented, 3, &cfg).unwrap(), big(5));
    assert_eq!(count_unlabeled(Species::Husimi, 4, false, &cfg).unwrap(), big(4));
    assert_eq!(count_unlabeled(Species::Triangular, 5, true, &cfg).unwrap(), big(2));
    for s in Species::ALL {
        assert_eq!(count_unlabeled(s, 1, false, &cfg).unwrap(), big(1));
    }
}

fn ints(s: &Series<Rational>) -> Vec<u64> {
    integer_counts("example", s).unwrap().iter().map(|c| c.try_into().unwrap()).collect()
}

#[test]
fn unlabelled_examples() {
    let t = triangular(7).unwrap();
    assert_eq!(ints(&t.rooted)[1..], [1, 0, 1, 0, 2, 0, 5]);
    assert_eq!(ints(&t.unrooted)[1..], [1, 0, 1, 0, 1, 0, 2]);
    let h = husimi(4).unwrap();
    assert_eq!(ints(&h.rooted)[1..], [1, 1, 3, 8]);
    assert_eq!(ints(&h.unrooted)[1..], [1, 1, 2, 4]);
    let o = oriented_cacti(4).unwrap();
    assert_eq!(o.rooted.coeff(2), &WeightPoly::marker(2));
    assert_eq!(o.unrooted.coeff(3).at_ones(), rational(2, 1));
}

/// The size-3 rooted polynomial is read off the oracle, not summed by hand.
#[test]
fn rooted_oriented_polynomials_match_oracle() {
    let o = oriented_cacti(5).unwrap();
    for c in Census::up_to(Species::Oriented, 5, &OracleConfig::default()).unwrap() {
        let poly = o.rooted.coeff(c.n);
        assert_eq!(poly.len(), c.rooted.len(), "n={}", c.n);
        for (m, &k) in &c.rooted {
            assert_eq!(poly.coefficient(m), rational(k as i64, 1), "n={} {m}", c.n);
        }
    }
}

/// Oriented cacti with only 2-cycles are trees; compare with unlabelled trees
/// found directly as canonical classes of labelled trees.
#[test]
fn tree_shadow_against_direct_tree_oracle() {
    let cfg = OracleConfig::default();
    let o = oriented_cacti(7).unwrap();
    for n in 1..=7usize {
        let trees: std::collections::BTreeSet<_> = enumerate_graphs(n, &cfg, |g| classify(g).is_some_and(|c| c.tree))
            .unwrap()
            .map(|g| canonical_form_plain(&g.to_digraph()))
            .collect();
        let m = Monomial::from_sizes([(2, n as u32 - 1)]);
        assert_eq!(o.unrooted.coeff(n).coefficient(&m), rational(trees.len() as i64, 1), "n={n}");
    }
}

#[test]
fn unlabelled_husimi_matches_oracle_on_seven_vertices() {
    let h = husimi(7).unwrap();
    let c = Census::compute(Species::Husimi, 7, &OracleConfig::default()).unwrap();
    assert_eq!(ints(&h.unrooted)[7], c.unrooted_total());
    assert_eq!(ints(&h.rooted)[7], c.rooted_total());
}
