//! Gaussian-model Mayer cluster sums and the virial expansion.
//!
//! A connected graph `c` on `n` vertices has weight
//! `(-1)^e(c) u^(n-1) gamma(c)^(-3/2)` with `u = (pi/alpha)^(3/2)` and
//! `gamma(c)` its number of spanning trees. Since the power of `u` is fixed by
//! `n`, sums are kept exact at `u = 1` (as [`SurdSum`]s) and rescaled only when
//! a number is printed.

mod matrix_tree;
mod numeric;
mod surd;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

pub use matrix_tree::spanning_tree_count;
pub use numeric::{working_places, Alpha, Interval, DEFAULT_PRECISION, MAX_PRECISION};
pub use surd::SurdSum;

use crate::algebra::{rational, Coeff, Rational, Series};
use crate::error::{Error, Result};
use crate::labeled::factorial;
use crate::oracle::{block_decompose, edge_pairs, graph_from_mask, BlockDecomposition, LabeledGraph, OracleConfig};

/// Weight of one connected graph, kept symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianWeight {
    /// `(-1)^e(c)`.
    pub sign: i8,
    /// Exponent of `u`, i.e. `n - 1`.
    pub volume_power: u32,
    /// Number of spanning trees.
    pub complexity: BigUint,
}

impl GaussianWeight {
    pub fn of(g: &LabeledGraph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::domain("Gaussian weight needs a connected graph"));
        }
        Ok(GaussianWeight {
            sign: if g.edge_count() % 2 == 0 { 1 } else { -1 },
            volume_power: g.vertices() as u32 - 1,
            complexity: spanning_tree_count(g),
        })
    }

    pub fn times(&self, rhs: &Self) -> Self {
        GaussianWeight {
            sign: self.sign * rhs.sign,
            volume_power: self.volume_power + rhs.volume_power,
            complexity: &self.complexity * &rhs.complexity,
        }
    }

    /// Value at `u = 1`.
    pub fn value(&self) -> SurdSum {
        SurdSum::inverse_three_halves(&self.complexity).scale(&rational(self.sign as i64, 1))
    }
}

/// Weighted sum over labelled graphs on `n` vertices, grouped by complexity:
/// `sum_gamma m_gamma u^(n-1) gamma^(-3/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterSum {
    pub n: usize,
    terms: BTreeMap<BigUint, Rational>,
}

impl ClusterSum {
    pub fn new(n: usize) -> Self {
        ClusterSum { n, terms: BTreeMap::new() }
    }

    pub fn add(&mut self, w: &GaussianWeight) {
        *self.terms.entry(w.complexity.clone()).or_insert_with(|| rational(0, 1)) += rational(w.sign as i64, 1);
        self.terms.retain(|_, c| !Coeff::is_zero(c));
    }

    fn merge(mut self, other: ClusterSum) -> ClusterSum {
        for (g, c) in other.terms {
            *self.terms.entry(g).or_insert_with(|| rational(0, 1)) += c;
        }
        self.terms.retain(|_, c| !Coeff::is_zero(c));
        self
    }

    /// `(gamma, signed multiplicity)` pairs in increasing `gamma`.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    pub fn volume_power(&self) -> u32 {
        self.n.saturating_sub(1) as u32
    }

    /// Exact value at `u = 1`.
    pub fn value(&self) -> SurdSum {
        self.terms
            .iter()
            .fold(SurdSum::zero(), |acc, (g, c)| acc.plus(&SurdSum::inverse_three_halves(g).scale(c)))
    }
}

fn sweep_connected<F>(n: usize, config: &OracleConfig, keep: F) -> Result<ClusterSum>
where
    F: Fn(&BlockDecomposition) -> bool + Sync,
{
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    config.check_sweep(n)?;
    let pairs = edge_pairs(n);
    Ok((0..1u64 << pairs.len())
        .into_par_iter()
        .fold(
            || ClusterSum::new(n),
            |mut acc, mask| {
                let g = graph_from_mask(n, &pairs, mask);
                if let Ok(d) = block_decompose(&g) {
                    if keep(&d) {
                        acc.add(&GaussianWeight::of(&g).expect("connected"));
                    }
                }
                acc
            },
        )
        .reduce(|| ClusterSum::new(n), ClusterSum::merge))
}

/// `|B[n]|_w`: the sum over 2-connected graphs on `[n]`, counting `K_2` as
/// 2-connected.
pub fn two_connected_weight_sum(n: usize, config: &OracleConfig) -> Result<ClusterSum> {
    if n < 2 {
        return Err(Error::domain("2-connected graphs need at least 2 vertices"));
    }
    sweep_connected(n, config, |d| d.blocks.len() == 1)
}

/// `|Gcon[n]|_w`: the sum over connected graphs on `[n]`.
pub fn connected_weight_sum(n: usize, config: &OracleConfig) -> Result<ClusterSum> {
    sweep_connected(n, config, |_| true)
}

/// `|G[n]|_w` at `u = 1`, the weight of a graph being the product over its
/// connected components.
pub fn all_graphs_weight_sum(n: usize, config: &OracleConfig) -> Result<SurdSum> {
    config.check_sweep(n)?;
    if n == 0 {
        return Ok(SurdSum::one());
    }
    let pairs = edge_pairs(n);
    let grouped = (0..1u64 << pairs.len())
        .into_par_iter()
        .fold(BTreeMap::<(Vec<BigUint>, i8), i64>::new, |mut acc, mask| {
            let g = graph_from_mask(n, &pairs, mask);
            let mut gammas: Vec<BigUint> = g
                .components()
                .into_iter()
                .map(|c| spanning_tree_count(&g.induced(c)))
                .collect();
            gammas.sort();
            let sign = if g.edge_count() % 2 == 0 { 1 } else { -1 };
            *acc.entry((gammas, sign)).or_default() += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(grouped.into_iter().fold(SurdSum::zero(), |acc, ((gammas, sign), count)| {
        let w = gammas
            .iter()
            .fold(SurdSum::one(), |p, g| p.times(&SurdSum::inverse_three_halves(g)));
        acc.plus(&w.scale(&rational(sign as i64 * count, 1)))
    }))
}

/// Exponential generating series `sum_n a_n z^n / n!` from exact sums `a_n`.
fn egf(order: usize, coeff: impl Fn(usize) -> Result<SurdSum>) -> Result<Series<SurdSum>> {
    let mut s = Series::zero(order);
    for n in 0..=order {
        let f = Rational::from_integer(factorial(n as u64).into());
        s.set_coeff(n, coeff(n)?.scale(&f.recip()));
    }
    Ok(s)
}

/// Pressure as a series in the density, by inverting `rho = z Gamma'(z)` and
/// substituting into `Gamma`.
pub fn pressure_by_reversion<C: Coeff>(gamma: &Series<C>) -> Result<Series<C>> {
    let rho = gamma.x_derivative();
    let z = rho.revert()?;
    gamma.compose(&z)
}

/// Pressure as `rho - sum_{n>=2} (n-1) beta_n rho^n / n!`, where `beta` holds
/// the coefficients `beta_n / n!`.
pub fn pressure_by_blocks<C: Coeff>(beta: &Series<C>) -> Series<C> {
    let mut p = Series::x(beta.order());
    for n in 2..=beta.order() {
        p.set_coeff(n, beta.coeff(n).scale(&rational(1 - n as i64, 1)));
    }
    p
}

/// Right-hand side of `rho = z exp(B'(rho))`.
pub fn density_from_blocks<C: Coeff>(beta: &Series<C>, rho: &Series<C>) -> Result<Series<C>> {
    let inner = beta.derivative().compose(rho)?;
    Series::x(beta.order()).mul(&inner.exp()?)
}

/// Exact virial coefficient at `u = 1`: `-(n-1)/n! * |B[n]|_w`.
pub fn virial_coefficient_exact(n: usize, config: &OracleConfig) -> Result<SurdSum> {
    if n < 2 {
        return Err(Error::domain("virial coefficients start at n = 2"));
    }
    let beta = two_connected_weight_sum(n, config)?.value();
    let f = Rational::from_integer(factorial(n as u64).into());
    Ok(beta.scale(&(rational(1 - n as i64, 1) / f)))
}

/// A number printed to a fixed count of decimals, with a rigorous bound on the
/// distance between the printed value and the true one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approximation {
    pub decimal: String,
    pub error_bound: Rational,
}

fn rescale(exact: &SurdSum, power: u32, alpha: &Alpha, places: u32) -> Interval {
    match alpha {
        Alpha::PiMultiple(q) => {
            // (pi / (q pi))^(3/2) = q^(-3/2), still exact.
            let u = SurdSum::sqrt_of(&q.recip()).scale(&q.recip());
            let mut scaled = exact.clone();
            for _ in 0..power {
                scaled = scaled.times(&u);
            }
            scaled.to_interval(places)
        }
        Alpha::Value(_) => exact.to_interval(places).mul(&alpha.volume_factor(places).pow(power)),
    }
}

fn approximate(iv: &Interval, precision: usize) -> Approximation {
    let ulp = Rational::new(1.into(), num_bigint::BigInt::from(10u32).pow(precision as u32));
    Approximation {
        decimal: iv.to_decimal(precision),
        error_bound: iv.width() + ulp * rational(1, 2),
    }
}

/// `gamma_n` at the given `alpha`, printed to `precision` decimals.
pub fn virial_coefficient(n: usize, alpha: &Alpha, precision: usize, config: &OracleConfig) -> Result<Approximation> {
    let places = working_places(precision)?;
    let exact = virial_coefficient_exact(n, config)?;
    Ok(approximate(&rescale(&exact, n as u32 - 1, alpha, places), precision))
}

/// Per-`n` line of a [`VirialReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirialTerm {
    pub n: usize,
    /// `|B[n]|_w` grouped by complexity.
    pub beta: ClusterSum,
    /// `gamma_n` at `u = 1` from the block sums.
    pub gamma_blocks: SurdSum,
    /// `gamma_n` at `u = 1` from reverting the density series.
    pub gamma_reversion: SurdSum,
    /// `gamma_n` at the requested alpha.
    pub value: Approximation,
    /// Bound on the numeric gap between the two routes at the requested alpha.
    pub residual: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirialReport {
    pub alpha: Alpha,
    pub precision: usize,
    pub terms: Vec<VirialTerm>,
    /// Named identities that failed, with the first offending index.
    pub failures: Vec<String>,
}

impl VirialReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn max_residual(&self) -> Rational {
        self.terms.iter().map(|t| t.residual.clone()).max().unwrap_or_else(|| rational(0, 1))
    }
}

fn first_mismatch<C: Coeff>(a: &Series<C>, b: &Series<C>) -> Option<usize> {
    (0..=a.order()).find(|&i| a.coeff(i) != b.coeff(i))
}

/// Builds `Gamma_w`, `B_w` and `G_w` from graph sums up to `n_max` and checks:
/// the density fixed point, the two routes to the virial series, and
/// `G_w = exp(Gamma_w)`.
pub fn verify_density_fixed_point(
    n_max: usize,
    alpha: &Alpha,
    precision: usize,
    config: &OracleConfig,
) -> Result<VirialReport> {
    let places = working_places(precision)?;
    if n_max < 2 {
        return Err(Error::domain("n_max must be at least 2"));
    }
    config.check_sweep(n_max)?;
    let gamma = egf(n_max, |n| if n == 0 { Ok(SurdSum::zero()) } else { Ok(connected_weight_sum(n, config)?.value()) })?;
    let sums: Vec<Option<ClusterSum>> = (0..=n_max)
        .map(|n| if n < 2 { Ok(None) } else { two_connected_weight_sum(n, config).map(Some) })
        .collect::<Result<_>>()?;
    let beta = egf(n_max, |n| Ok(sums[n].as_ref().map_or_else(SurdSum::zero, ClusterSum::value)))?;
    let all = egf(n_max, |n| all_graphs_weight_sum(n, config))?;

    let mut failures = Vec::new();
    let rho = gamma.x_derivative();
    if let Some(i) = first_mismatch(&rho, &density_from_blocks(&beta, &rho)?) {
        failures.push(format!("density fixed point rho = z exp(B'(rho)) at z^{i}"));
    }
    let by_reversion = pressure_by_reversion(&gamma)?;
    let by_blocks = pressure_by_blocks(&beta);
    if let Some(i) = first_mismatch(&by_reversion, &by_blocks) {
        failures.push(format!("virial series: reversion vs block sums at rho^{i}"));
    }
    if let Some(i) = first_mismatch(&all, &gamma.exp()?) {
        failures.push(format!("G_w = exp(Gamma_w) at z^{i}"));
    }

    let mut terms = Vec::new();
    for n in 2..=n_max {
        let power = n as u32 - 1;
        let a = rescale(by_blocks.coeff(n), power, alpha, places);
        let b = rescale(by_reversion.coeff(n), power, alpha, places);
        terms.push(VirialTerm {
            n,
            beta: sums[n].clone().expect("n >= 2"),
            gamma_blocks: by_blocks.coeff(n).clone(),
            gamma_reversion: by_reversion.coeff(n).clone(),
            value: approximate(&a, precision),
            residual: a.sub(&b).magnitude(),
        });
    }
    let tolerance = Rational::new(1.into(), num_bigint::BigInt::from(10u32).pow(12));
    if let Some(t) = terms.iter().find(|t| t.residual >= tolerance) {
        failures.push(format!("numeric residual at n = {} exceeds 1e-12", t.n));
    }
    Ok(VirialReport { alpha: alpha.clone(), precision, terms, failures })
}

/// Outcome of comparing each connected graph's weight with the product of its
/// blocks' weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicativityReport {
    pub n: usize,
    pub graphs_checked: u64,
    /// Edge lists of graphs where the identity failed.
    pub failures: Vec<Vec<(usize, usize)>>,
}

impl MultiplicativityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn block_graph(g: &LabeledGraph, vertices: u32) -> LabeledGraph {
    g.induced(vertices)
}

/// Checks `w(c) = prod_blocks w(b)` on sign, power of `u` and complexity for
/// every connected graph on `[n]`.
pub fn block_multiplicativity_check(n: usize, config: &OracleConfig) -> Result<MultiplicativityReport> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    config.check_sweep(n)?;
    let pairs = edge_pairs(n);
    let (checked, mut failures) = (0..1u64 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let g = graph_from_mask(n, &pairs, mask);
            let d = block_decompose(&g).ok()?;
            let whole = GaussianWeight::of(&g).expect("connected");
            let unit = GaussianWeight { sign: 1, volume_power: 0, complexity: BigUint::one() };
            let product = d.blocks.iter().fold(unit, |acc, b| {
                acc.times(&GaussianWeight::of(&block_graph(&g, b.vertices)).expect("blocks are connected"))
            });
            Some((whole == product, g.edges()))
        })
        .fold(
            || (0u64, Vec::new()),
            |(c, mut f), (ok, edges)| {
                if !ok {
                    f.push(edges);
                }
                (c + 1, f)
            },
        )
        .reduce(|| (0, Vec::new()), |(a, mut fa), (b, fb)| {
            fa.extend(fb);
            (a + b, fa)
        });
    failures.sort();
    Ok(MultiplicativityReport { n, graphs_checked: checked, failures })
}
