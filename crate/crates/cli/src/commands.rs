use std::collections::BTreeSet;

use blockforest::labeled::{distribution_table, labeled_total};
use blockforest::oracle::{
    burnside_count, count_labeled, count_labeled_by_distribution, count_unlabeled, count_unlabeled_by_distribution,
    OracleConfig,
};
use blockforest::prufer::{format_blocks, format_code, parse_blocks, parse_code, prufer_decode, prufer_encode};
use blockforest::unlabeled::{husimi, integer_counts, oriented_cacti, triangular};
use blockforest::virial::{verify_density_fixed_point, Alpha};
use blockforest::{CountTable, Error, Monomial, Rational, Series, Species, WeightPoly};
use num_bigint::BigUint;

use crate::report::Report;
use crate::{usage, Failure, OracleArgs};

/// Largest n for labelled totals; the numbers themselves are cheap, the
/// bound only keeps output sane.
pub const MAX_COUNT_N: usize = 500;
/// Largest n for distribution tables, which have one row per partition of n - 1.
pub const MAX_DISTRIBUTION_N: usize = 40;
/// Largest order for unlabelled series.
pub const MAX_UNLABELED_ORDER: usize = 60;
/// Largest order for oriented series, whose coefficients are polynomials.
pub const MAX_ORIENTED_ORDER: usize = 24;

fn table_rows(report: &mut Report, table: &CountTable) {
    for (d, c) in table.rows() {
        report.push([d.to_string(), c.to_string()]);
    }
}

pub fn count(species: Species, n: usize, by_distribution: bool) -> Result<Report, Failure> {
    let max = if by_distribution { MAX_DISTRIBUTION_N } else { MAX_COUNT_N };
    if n == 0 || n > max {
        return Err(usage(format!("n must lie in 1..={max}")));
    }
    let mut report = if by_distribution {
        Report::new("count", &["distribution", "count"])
    } else {
        Report::new("count", &["n", "count"])
    };
    report = report.param("species", species).param("n", n);
    if by_distribution {
        let table = distribution_table(species, n);
        table_rows(&mut report, &table);
        report.summarize("total", table.total());
    } else {
        let total = labeled_total(species, n as u64);
        report.push([n.to_string(), total.to_string()]);
        report.summarize("total", total);
    }
    Ok(report)
}

fn counts(check: &str, s: &Series<Rational>) -> Result<Vec<BigUint>, Failure> {
    Ok(integer_counts(check, s)?)
}

fn integer(check: &str, index: usize, c: &Rational) -> Result<String, Failure> {
    if !c.is_integer() || c < &Rational::from_integer(0.into()) {
        return Err(Failure::Lib(Error::InternalConsistency {
            check: check.into(),
            index,
            expected: "a nonnegative integer".into(),
            found: c.to_string(),
        }));
    }
    Ok(c.to_integer().to_string())
}

pub fn unlabeled(species: Species, n: usize, weighted: bool, truncation: Option<usize>) -> Result<Report, Failure> {
    if weighted && species != Species::Oriented {
        return Err(usage("--weighted is only available for oriented cacti"));
    }
    let max = if species == Species::Oriented { MAX_ORIENTED_ORDER } else { MAX_UNLABELED_ORDER };
    if n == 0 || n > max {
        return Err(usage(format!("N must lie in 1..={max} for {species}")));
    }
    if truncation.is_some_and(|t| t < 2) {
        return Err(usage("--marker-truncation must be at least 2"));
    }
    let (rooted, unrooted) = match species {
        Species::Triangular => {
            let b = triangular(n)?;
            (b.rooted, b.unrooted)
        }
        Species::Husimi => {
            let b = husimi(n)?;
            (b.rooted, b.unrooted)
        }
        Species::Oriented => {
            let b = oriented_cacti(n)?;
            if weighted {
                return Ok(weighted_rows(&b.rooted, &b.unrooted, n, truncation)?);
            }
            (flatten(&b.rooted), flatten(&b.unrooted))
        }
        Species::Cacti => return Err(usage("unlabelled series are available for triangular, husimi and oriented")),
    };
    let mut report = Report::new("unlabeled", &["n", "rooted", "unrooted"]).param("species", species).param("order", n);
    let (r, u) = (counts("rooted series", &rooted)?, counts("unrooted series", &unrooted)?);
    for i in 1..=n {
        report.push([i.to_string(), r[i].to_string(), u[i].to_string()]);
    }
    Ok(report)
}

/// Oriented series evaluated at `y = 1`.
fn flatten(s: &Series<WeightPoly>) -> Series<Rational> {
    let coeffs = s.coeffs().iter().map(WeightPoly::at_ones).collect();
    Series::from_coeffs(s.order(), coeffs).expect("same length")
}

fn weighted_rows(
    rooted: &Series<WeightPoly>,
    unrooted: &Series<WeightPoly>,
    n: usize,
    truncation: Option<usize>,
) -> Result<Report, Failure> {
    let mut report = Report::new("unlabeled", &["n", "monomial", "rooted", "unrooted"])
        .param("species", Species::Oriented)
        .param("order", n)
        .param("weighted", true);
    if let Some(t) = truncation {
        report = report.param("marker_truncation", t);
    }
    for i in 1..=n {
        let (r, u) = match truncation {
            Some(t) => (rooted.coeff(i).truncate_markers(t), unrooted.coeff(i).truncate_markers(t)),
            None => (rooted.coeff(i).clone(), unrooted.coeff(i).clone()),
        };
        let monomials: BTreeSet<&Monomial> = r.terms().chain(u.terms()).map(|(m, _)| m).collect();
        for m in monomials {
            report.push([
                i.to_string(),
                m.to_string(),
                integer("rooted series", i, &r.coefficient(m))?,
                integer("unrooted series", i, &u.coefficient(m))?,
            ]);
        }
    }
    Ok(report)
}

pub fn prufer(encode: bool, lines: &[String]) -> Result<Report, Failure> {
    let columns: &[&str] = if encode { &["graph", "code"] } else { &["code", "graph"] };
    let mut report = Report::new("prufer", columns).param("direction", if encode { "encode" } else { "decode" });
    for (i, line) in lines.iter().enumerate() {
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let at_line = |e: Error| Failure::Lib(Error::Domain(format!("line {}: {e}", i + 1)));
        let out = if encode {
            format_code(&prufer_encode(&parse_blocks(text).map_err(at_line)?))
        } else {
            let code = parse_code(text).map_err(at_line)?;
            format_blocks(&prufer_decode(&code, code.implied_vertices()).map_err(at_line)?)
        };
        report.push([text.to_string(), out]);
    }
    Ok(report)
}

fn decimal_exponent(r: &Rational) -> String {
    use num_traits::ToPrimitive;
    match r.to_f64() {
        Some(v) if v == 0.0 => "0".into(),
        Some(v) => format!("{v:.1e}"),
        None => r.to_string(),
    }
}

pub fn virial(n_max: usize, alpha: &Alpha, precision: usize, oracle: &OracleConfig) -> Result<Report, Failure> {
    if n_max < 2 {
        return Err(usage("n_max must be at least 2"));
    }
    let r = verify_density_fixed_point(n_max, alpha, precision, oracle)?;
    let mut report = Report::new("virial", &["n", "beta_by_complexity", "gamma_exact_at_pi", "gamma", "error_bound", "residual", "routes"])
        .param("n_max", n_max)
        .param("alpha", alpha)
        .param("precision", precision);
    let verdict = if r.passed() { "agree" } else { "disagree" };
    for t in &r.terms {
        let beta: Vec<String> = t.beta.terms().map(|(g, c)| format!("{g}:{c}")).collect();
        let routes = if t.gamma_blocks == t.gamma_reversion { verdict } else { "disagree" };
        report.push([
            t.n.to_string(),
            beta.join(" "),
            t.gamma_blocks.to_string(),
            t.value.decimal.clone(),
            decimal_exponent(&t.value.error_bound),
            decimal_exponent(&t.residual),
            routes.to_string(),
        ]);
    }
    report.summarize("verdict", verdict);
    report.summarize("max_residual", decimal_exponent(&r.max_residual()));
    if !r.passed() {
        let msg = format!("virial routes disagree: {}", r.failures.join("; "));
        return Err(Failure::Checks(report, msg));
    }
    Ok(report)
}

pub fn oracle(a: &OracleArgs, config: &OracleConfig) -> Result<Report, Failure> {
    if a.n == 0 {
        return Err(usage("n must be positive"));
    }
    let mode = match (a.unlabeled, a.rooted, a.burnside) {
        (false, _, _) => "labeled",
        (true, _, true) => "burnside",
        (true, true, _) => "unlabeled-rooted",
        (true, false, _) => "unlabeled",
    };
    let columns: &[&str] = if a.by_distribution { &["distribution", "count"] } else { &["n", "count"] };
    let mut report = Report::new("oracle", columns).param("species", a.species).param("n", a.n).param("mode", mode);
    if a.by_distribution {
        let table = if a.unlabeled {
            count_unlabeled_by_distribution(a.species, a.n, a.rooted, config)?
        } else {
            count_labeled_by_distribution(a.species, a.n, config)?
        };
        table_rows(&mut report, &table);
        report.summarize("total", table.total());
    } else {
        let total = match mode {
            "labeled" => count_labeled(a.species, a.n, config)?,
            "burnside" => burnside_count(a.species, a.n, config)?,
            _ => count_unlabeled(a.species, a.n, a.rooted, config)?,
        };
        report.push([a.n.to_string(), total.to_string()]);
        report.summarize("total", total);
    }
    Ok(report)
}
