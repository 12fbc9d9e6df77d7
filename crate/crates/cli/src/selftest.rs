//! Named consistency checks. `fast` uses only closed forms, recurrences and
//! series identities; `full` adds the brute-force oracle up to its limit.

use blockforest::algebra::fixed_point_rooted;
use blockforest::labeled::{
    cacti_by_distribution, distribution_table, distributions, factorial, husimi_labeled_by_distribution,
    labeled_total, oriented_cacti_by_distribution, rooted_kernel,
};
use blockforest::oracle::{burnside_count, count_labeled_by_distribution, husimi_graphs, Census, OracleConfig};
use blockforest::prufer::{all_codes, prufer_decode, prufer_encode};
use blockforest::unlabeled::{
    compare_series, husimi, husimi_fixed_point, husimi_recurrence, integer_counts, oriented_cacti,
    oriented_fixed_point, oriented_recurrence, triangular, triangular_fixed_point, triangular_recurrence,
};
use blockforest::virial::{block_multiplicativity_check, verify_density_fixed_point, virial_coefficient_exact, Alpha, SurdSum};
use blockforest::{BlockSizeDistribution, Rational, Species};
use num_bigint::BigUint;
use num_traits::One;

use crate::report::Report;
use crate::Failure;

const ORDER: usize = 12;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn text(e: blockforest::Error) -> String {
    e.to_string()
}

fn cayley() -> Check {
    for n in 2..=12u64 {
        let d = BlockSizeDistribution::from_sizes([(2, n - 1)]).map_err(text)?;
        let want = BigUint::from(n).pow(n as u32 - 2);
        ensure(husimi_labeled_by_distribution(&d) == want, || format!("n={n}"))?;
    }
    Ok("n = 2..12".into())
}

fn inter_formula() -> Check {
    let mut checked = 0;
    for n in 1..=10 {
        for d in distributions(n) {
            let hu = husimi_labeled_by_distribution(&d);
            let oc = oriented_cacti_by_distribution(&d);
            let ca = cacti_by_distribution(&d);
            let fact = d.iter().fold(BigUint::one(), |acc, (i, c)| acc * factorial(i as u64 - 1).pow(c as u32));
            ensure(oc == fact * hu, || format!("oriented vs Husimi at {d}"))?;
            ensure(oc == BigUint::from(2u32).pow(d.polygons() as u32) * ca, || format!("oriented vs cacti at {d}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} distributions"))
}

fn tables_sum_to_totals() -> Check {
    for s in Species::ALL {
        for n in 1..=10 {
            ensure(distribution_table(s, n).total() == labeled_total(s, n as u64), || format!("{s} n={n}"))?;
        }
    }
    Ok("4 species, n <= 10".into())
}

fn lagrange() -> Check {
    for s in Species::ALL {
        let a = fixed_point_rooted(&rooted_kernel(s, 10)).map_err(text)?;
        for n in 1..=10usize {
            let lhs = Rational::from_integer((BigUint::from(n) * labeled_total(s, n as u64)).into());
            let rhs = a.coeff(n) * Rational::from_integer(factorial(n as u64).into());
            ensure(lhs == rhs, || format!("{s} n={n}"))?;
        }
    }
    Ok("4 species, n <= 10".into())
}

fn triangular_recurrence_check(inject_fault: bool) -> Check {
    let (mut d, _) = triangular_recurrence(ORDER).map_err(text)?;
    if inject_fault {
        let bumped = d.coeff(5) + Rational::one();
        d.set_coeff(5, bumped);
    }
    compare_series("triangular recurrence", &triangular_fixed_point(ORDER).map_err(text)?, &d).map_err(text)?;
    Ok(format!("order {ORDER}"))
}

fn husimi_recurrence_check() -> Check {
    let h = husimi_recurrence(ORDER).map_err(text)?;
    compare_series("husimi recurrence", &husimi_fixed_point(ORDER).map_err(text)?, &h.rooted).map_err(text)?;
    Ok(format!("order {ORDER}"))
}

fn oriented_recurrence_check() -> Check {
    let o = oriented_recurrence(ORDER).map_err(text)?;
    compare_series("oriented recurrence", &oriented_fixed_point(ORDER).map_err(text)?, &o.rooted).map_err(text)?;
    Ok(format!("order {ORDER}"))
}

/// Each bundle compares its unrooted series along two routes internally.
fn unrooted_routes() -> Check {
    triangular(ORDER).map_err(text)?;
    husimi(ORDER).map_err(text)?;
    oriented_cacti(ORDER).map_err(text)?;
    Ok(format!("order {ORDER}"))
}

fn codes_round_trip() -> Check {
    let mut codes = 0;
    for n in 1..=4 {
        for c in all_codes(n) {
            let h = prufer_decode(&c, n).map_err(text)?;
            ensure(prufer_encode(&h) == c, || format!("n={n}"))?;
            codes += 1;
        }
    }
    ensure(codes == 1 + 1 + 4 + 29, || format!("{codes} codes"))?;
    Ok(format!("{codes} codes, n <= 4"))
}

fn second_virial(config: &OracleConfig) -> Check {
    let g2 = virial_coefficient_exact(2, config).map_err(text)?;
    ensure(g2 == SurdSum::rational(Rational::new(1.into(), 2.into())), || format!("got {g2}"))?;
    Ok("gamma_2 = 1/2".into())
}

fn labelled_oracle(config: &OracleConfig) -> Check {
    for s in Species::ALL {
        for n in 1..=config.limit {
            let oracle = count_labeled_by_distribution(s, n, config).map_err(text)?;
            ensure(oracle == distribution_table(s, n), || format!("{s} n={n}"))?;
        }
    }
    Ok(format!("4 species, n <= {}", config.limit))
}

fn graphs_round_trip(config: &OracleConfig) -> Check {
    let top = config.limit.min(6);
    for n in 1..=top {
        for h in husimi_graphs(n, config).map_err(text)? {
            ensure(prufer_decode(&prufer_encode(&h), n).map_err(text)? == h, || format!("n={n}"))?;
        }
    }
    Ok(format!("n <= {top}"))
}

fn census_check(species: Species, cap: usize, config: &OracleConfig) -> Check {
    let top = config.limit.min(cap);
    let censuses = Census::up_to(species, top, config).map_err(text)?;
    let (rooted, unrooted) = match species {
        Species::Triangular => {
            let b = triangular(top).map_err(text)?;
            (b.rooted, b.unrooted)
        }
        Species::Husimi => {
            let b = husimi(top).map_err(text)?;
            (b.rooted, b.unrooted)
        }
        _ => {
            let b = oriented_cacti(top).map_err(text)?;
            for c in &censuses {
                for (m, &k) in c.unrooted.iter() {
                    let got = b.unrooted.coeff(c.n).coefficient(m);
                    ensure(got == Rational::from_integer(k.into()), || format!("n={} {m}", c.n))?;
                }
                ensure(b.unrooted.coeff(c.n).len() == c.unrooted.len(), || format!("n={} monomials", c.n))?;
            }
            return Ok(format!("monomials, n <= {top}"));
        }
    };
    let r = integer_counts("rooted", &rooted).map_err(text)?;
    let u = integer_counts("unrooted", &unrooted).map_err(text)?;
    for c in &censuses {
        ensure(r[c.n] == BigUint::from(c.rooted_total()), || format!("rooted n={}", c.n))?;
        ensure(u[c.n] == BigUint::from(c.unrooted_total()), || format!("unrooted n={}", c.n))?;
        ensure(c.dissymmetry_holds(), || format!("dissymmetry n={}", c.n))?;
    }
    Ok(format!("n <= {top}"))
}

fn burnside(config: &OracleConfig) -> Check {
    let top = config.limit.min(5);
    for c in Census::up_to(Species::Husimi, top, config).map_err(text)? {
        let b = burnside_count(Species::Husimi, c.n, config).map_err(text)?;
        ensure(b == BigUint::from(c.unrooted_total()), || format!("n={}", c.n))?;
    }
    Ok(format!("Husimi, n <= {top}"))
}

fn virial_routes(config: &OracleConfig) -> Check {
    let top = config.limit.min(5);
    if top < 2 {
        return Ok("skipped below n = 2".into());
    }
    let r = verify_density_fixed_point(top, &Alpha::default(), 30, config).map_err(text)?;
    ensure(r.passed(), || r.failures.join("; "))?;
    Ok(format!("n <= {top}"))
}

fn multiplicativity(config: &OracleConfig) -> Check {
    let top = config.limit.min(5);
    let mut graphs = 0;
    for n in 1..=top {
        let r = block_multiplicativity_check(n, config).map_err(text)?;
        ensure(r.passed(), || format!("n={n}: {} graphs", r.failures.len()))?;
        graphs += r.graphs_checked;
    }
    Ok(format!("{graphs} connected graphs"))
}

pub fn run(full: bool, inject_fault: bool, config: &OracleConfig) -> Result<Report, Failure> {
    let mut checks: Vec<(&str, Box<dyn Fn() -> Check + '_>)> = vec![
        ("cayley", Box::new(cayley)),
        ("inter-formula identities", Box::new(inter_formula)),
        ("distribution tables sum to totals", Box::new(tables_sum_to_totals)),
        ("lagrange inversion", Box::new(lagrange)),
        ("triangular recurrence vs fixed point", Box::new(move || triangular_recurrence_check(inject_fault))),
        ("husimi recurrence vs fixed point", Box::new(husimi_recurrence_check)),
        ("oriented recurrence vs fixed point", Box::new(oriented_recurrence_check)),
        ("unrooted series routes", Box::new(unrooted_routes)),
        ("prufer codes round trip", Box::new(codes_round_trip)),
        ("second virial coefficient", Box::new(|| second_virial(config))),
    ];
    if full {
        checks.extend([
            ("labelled formulas vs oracle", Box::new(|| labelled_oracle(config)) as Box<dyn Fn() -> Check>),
            ("prufer graphs round trip", Box::new(|| graphs_round_trip(config))),
            ("triangular vs census", Box::new(|| census_check(Species::Triangular, 9, config))),
            ("husimi vs census", Box::new(|| census_check(Species::Husimi, 7, config))),
            ("oriented vs census", Box::new(|| census_check(Species::Oriented, 6, config))),
            ("burnside vs census", Box::new(|| burnside(config))),
            ("virial routes", Box::new(|| virial_routes(config))),
            ("block multiplicativity", Box::new(|| multiplicativity(config))),
        ]);
    }

    let mut report = Report::new("selftest", &["check", "status", "detail"])
        .param("level", if full { "full" } else { "fast" })
        .param("oracle_limit", config.limit);
    let mut failed = Vec::new();
    for (name, check) in &checks {
        let (status, detail) = match check() {
            Ok(d) => ("pass", d),
            Err(d) => {
                failed.push(*name);
                ("FAIL", d)
            }
        };
        report.push([name.to_string(), status.to_string(), detail]);
    }
    report.summarize("checks", checks.len());
    report.summarize("failed", failed.len());
    if failed.is_empty() {
        Ok(report)
    } else {
        let msg = format!("selftest failed: {}", failed.join(", "));
        Err(Failure::Checks(report, msg))
    }
}
