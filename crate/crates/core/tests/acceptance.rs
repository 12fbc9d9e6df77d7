//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
//!
//! Run with `cargo test -p blockforest --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use blockforest::algebra::fixed_point_rooted;
use blockforest::labeled::{
    cacti_by_distribution, distribution_table, distributions, factorial,
    husimi_labeled_by_distribution, labeled_total, oriented_cacti_by_distribution, rooted_kernel,
};
use blockforest::oracle::{
    burnside_count, count_labeled, count_labeled_by_distribution, husimi_graphs, Census, OracleConfig,
};
use blockforest::prufer::{all_codes, prufer_decode, prufer_encode};
use blockforest::unlabeled::{
    compare_series, husimi, husimi_fixed_point, husimi_recurrence, integer_counts, oriented_cacti,
    oriented_fixed_point, oriented_recurrence, triangular, triangular_fixed_point, triangular_recurrence,
};
use blockforest::virial::{
    block_multiplicativity_check, two_connected_weight_sum, verify_density_fixed_point, virial_coefficient,
    virial_coefficient_exact, Alpha, SurdSum,
};
use blockforest::{BlockSizeDistribution, Rational, Species};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn cfg(limit: usize) -> OracleConfig {
    OracleConfig::with_limit(limit).expect("limit in range")
}

fn cayley() -> Outcome {
    let start = Instant::now();
    for n in 2..=12u64 {
        let d = BlockSizeDistribution::from_sizes([(2, n - 1)]).map_err(|e| e.to_string())?;
        let got = husimi_labeled_by_distribution(&d);
        let want = BigUint::from(n).pow(n as u32 - 2);
        ensure(got == want, || format!("n={n}: got {got}, want {want}"))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("n = 2..12 in {:.2?}", start.elapsed()))
}

fn labelled_vs_oracle() -> Outcome {
    let start = Instant::now();
    let config = cfg(6);
    let mut rows = 0;
    for species in [Species::Husimi, Species::Cacti, Species::Oriented] {
        for n in 1..=6usize {
            let oracle_total = count_labeled(species, n, &config).map_err(|e| e.to_string())?;
            let formula_total = labeled_total(species, n as u64);
            ensure(oracle_total == formula_total, || {
                format!("{species} n={n}: formula {formula_total}, oracle {oracle_total}")
            })?;
            let oracle = count_labeled_by_distribution(species, n, &config).map_err(|e| e.to_string())?;
            let formula = distribution_table(species, n);
            ensure(oracle == formula, || format!("{species} n={n}: distribution tables differ"))?;
            rows += formula.len();
        }
    }
    within(start.elapsed(), Duration::from_secs(300))?;
    Ok(format!("3 species, n <= 6, {rows} distribution rows in {:.2?}", start.elapsed()))
}

fn inter_formula() -> Outcome {
    let mut checked = 0;
    for n in 1..=10usize {
        for d in distributions(n) {
            let hu = husimi_labeled_by_distribution(&d);
            let oc = oriented_cacti_by_distribution(&d);
            let ca = cacti_by_distribution(&d);
            let fact = d
                .iter()
                .fold(BigUint::one(), |acc, (i, c)| acc * factorial(i as u64 - 1).pow(c as u32));
            ensure(oc == &fact * &hu, || format!("Oc vs Hu at {d}"))?;
            ensure(oc == BigUint::from(2u32).pow(d.polygons() as u32) * &ca, || format!("Oc vs Ca at {d}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} distributions, n <= 10"))
}

fn lagrange() -> Outcome {
    for species in Species::ALL {
        let a = fixed_point_rooted(&rooted_kernel(species, 10)).map_err(|e| e.to_string())?;
        for n in 1..=10usize {
            let lhs = Rational::from_integer((BigUint::from(n) * labeled_total(species, n as u64)).into());
            let rhs = a.coeff(n) * Rational::from_integer(factorial(n as u64).into());
            ensure(lhs == rhs, || format!("{species} n={n}: n*total = {lhs}, n![x^n]A = {rhs}"))?;
        }
    }
    Ok("4 species, n <= 10".into())
}

fn prufer() -> Outcome {
    let config = cfg(5);
    let mut sizes = Vec::new();
    for n in 1..=5 {
        let graphs = husimi_graphs(n, &config).map_err(|e| e.to_string())?;
        for h in &graphs {
            let back = prufer_decode(&prufer_encode(h), n).map_err(|e| e.to_string())?;
            ensure(&back == h, || format!("n={n}: decode(encode(h)) != h for {h:?}"))?;
        }
        sizes.push(graphs.len());
    }
    ensure(sizes[..4] == [1, 1, 4, 29], || format!("case counts {sizes:?}"))?;
    let oracle5 = count_labeled(Species::Husimi, 5, &config).map_err(|e| e.to_string())?;
    ensure(BigUint::from(sizes[4]) == oracle5, || format!("n=5: {} graphs, oracle {oracle5}", sizes[4]))?;
    let mut codes = 0;
    for n in 1..=4 {
        for c in all_codes(n) {
            let h = prufer_decode(&c, n).map_err(|e| e.to_string())?;
            ensure(prufer_encode(&h) == c, || format!("n={n}: encode(decode(c)) != c"))?;
            codes += 1;
        }
    }
    Ok(format!("graphs per n {sizes:?}, {codes} codes"))
}

fn recurrences() -> Outcome {
    let order = 12;
    let err = |e: blockforest::Error| format!("internal consistency failure: {e}");
    let (d, _) = triangular_recurrence(order).map_err(err)?;
    compare_series("triangular", &triangular_fixed_point(order).map_err(err)?, &d).map_err(err)?;
    let h = husimi_recurrence(order).map_err(err)?;
    compare_series("husimi", &husimi_fixed_point(order).map_err(err)?, &h.rooted).map_err(err)?;
    let o = oriented_recurrence(order).map_err(err)?;
    compare_series("oriented", &oriented_fixed_point(order).map_err(err)?, &o.rooted).map_err(err)?;
    triangular(order).map_err(err)?;
    husimi(order).map_err(err)?;
    oriented_cacti(order).map_err(err)?;
    Ok("triangular, Husimi, oriented to order 12".into())
}

fn to_u64(counts: &[BigUint]) -> Vec<u64> {
    counts.iter().map(|c| c.to_u64().expect("small")).collect()
}

fn unlabelled_vs_oracle() -> Outcome {
    let err = |e: blockforest::Error| e.to_string();
    let tri = triangular(9).map_err(err)?;
    let censuses = Census::up_to(Species::Triangular, 9, &cfg(9)).map_err(err)?;
    let oracle_d: Vec<u64> = censuses.iter().map(Census::unrooted_total).collect();
    let oracle_dd: Vec<u64> = censuses.iter().map(Census::rooted_total).collect();
    let d = to_u64(&integer_counts("d", &tri.unrooted).map_err(err)?[1..]);
    let dd = to_u64(&integer_counts("D", &tri.rooted).map_err(err)?[1..]);
    ensure(d == oracle_d, || format!("d_n {d:?} vs oracle {oracle_d:?}"))?;
    ensure(dd == oracle_dd, || format!("D_n {dd:?} vs oracle {oracle_dd:?}"))?;

    let hu = husimi(6).map_err(err)?;
    let censuses = Census::up_to(Species::Husimi, 6, &cfg(6)).map_err(err)?;
    let oracle_h: Vec<u64> = censuses.iter().map(Census::unrooted_total).collect();
    let oracle_hh: Vec<u64> = censuses.iter().map(Census::rooted_total).collect();
    let h = to_u64(&integer_counts("h", &hu.unrooted).map_err(err)?[1..]);
    let hh = to_u64(&integer_counts("H", &hu.rooted).map_err(err)?[1..]);
    ensure(h == oracle_h, || format!("h_n {h:?} vs oracle {oracle_h:?}"))?;
    ensure(hh == oracle_hh, || format!("H_n {hh:?} vs oracle {oracle_hh:?}"))?;

    let oc = oriented_cacti(5).map_err(err)?;
    let censuses = Census::up_to(Species::Oriented, 5, &cfg(5)).map_err(err)?;
    for c in &censuses {
        let poly = oc.unrooted.coeff(c.n);
        ensure(poly.len() == c.unrooted.len(), || format!("o_{}(y) has {} monomials, oracle {}", c.n, poly.len(), c.unrooted.len()))?;
        for (m, &count) in &c.unrooted {
            let got = poly.coefficient(m);
            ensure(got == Rational::from_integer(count.into()), || format!("o_{}(y) at {m}: {got} vs oracle {count}", c.n))?;
        }
    }
    Ok(format!("d {d:?}; h {h:?}; o_n(y) n <= 5"))
}

fn burnside() -> Outcome {
    let config = cfg(5);
    let censuses = Census::up_to(Species::Husimi, 5, &config).map_err(|e| e.to_string())?;
    let mut got = Vec::new();
    for c in &censuses {
        let b = burnside_count(Species::Husimi, c.n, &config).map_err(|e| e.to_string())?;
        ensure(b == BigUint::from(c.unrooted_total()), || format!("n={}: Burnside {b}, canonical {}", c.n, c.unrooted_total()))?;
        got.push(b.to_u64().expect("small"));
    }
    Ok(format!("Husimi n <= 5: {got:?}"))
}

fn virial() -> Outcome {
    let start = Instant::now();
    let config = cfg(5);
    let err = |e: blockforest::Error| e.to_string();
    let b2 = two_connected_weight_sum(2, &config).map_err(err)?;
    let grouped: Vec<(String, String)> = b2.terms().map(|(g, c)| (g.to_string(), c.to_string())).collect();
    ensure(grouped == [("1".to_string(), "-1".to_string())] && b2.volume_power() == 1, || {
        format!("beta_2 grouped as {grouped:?} with u^{}", b2.volume_power())
    })?;
    let g2 = virial_coefficient_exact(2, &config).map_err(err)?;
    ensure(g2 == SurdSum::rational(Rational::new(1.into(), 2.into())), || format!("gamma_2 at u=1 is {g2}"))?;
    let quarter = virial_coefficient(2, &"4pi".parse::<Alpha>().map_err(err)?, 30, &config).map_err(err)?;
    ensure(quarter.decimal == "0.062500000000000000000000000000", || format!("gamma_2 at 4pi is {}", quarter.decimal))?;

    let report = verify_density_fixed_point(5, &Alpha::default(), 30, &config).map_err(err)?;
    ensure(report.passed(), || report.failures.join("; "))?;
    let tol = Rational::new(1.into(), num_bigint::BigInt::from(10u32).pow(12));
    let residual = report.max_residual();
    ensure(residual < tol, || format!("max residual {residual}"))?;

    let mut graphs = 0;
    for n in 1..=5 {
        let r = block_multiplicativity_check(n, &config).map_err(err)?;
        ensure(r.passed(), || format!("n={n}: {} graphs fail", r.failures.len()))?;
        graphs += r.graphs_checked;
    }
    within(start.elapsed(), Duration::from_secs(600))?;
    Ok(format!(
        "max residual {:.1e}, {graphs} connected graphs multiplicative, {:.2?}",
        residual.to_f64().unwrap_or(0.0),
        start.elapsed()
    ))
}

fn nine_terms() -> Outcome {
    let c = Census::compute(Species::Husimi, 5, &cfg(5)).map_err(|e| e.to_string())?;
    let total: u64 = c.unrooted.values().sum();
    let listing: Vec<String> = c.unrooted.iter().map(|(m, k)| format!("{m}:{k}")).collect();
    ensure(total == 9, || format!("{total} classes: {}", listing.join(" ")))?;
    Ok(listing.join(" "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Cayley specialization", cayley),
        ("labelled formulas vs oracle", labelled_vs_oracle),
        ("inter-formula identities", inter_formula),
        ("Lagrange inversion consistency", lagrange),
        ("Prufer bijection", prufer),
        ("unlabelled recurrences vs functional equations", recurrences),
        ("unlabelled counts vs canonical-form oracle", unlabelled_vs_oracle),
        ("Burnside cross-check", burnside),
        ("Gaussian virial", virial),
        ("nine size-5 Husimi types", nine_terms),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
