use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::numeric::Interval;
use crate::algebra::{Coeff, Rational};

/// Exact real number `sum_r c_r sqrt(r)`: rational coefficients over distinct
/// squarefree radicands `r`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurdSum {
    terms: BTreeMap<BigUint, Rational>,
}

/// Splits `m = s^2 r` with `r` squarefree.
fn square_free_split(m: &BigUint) -> (BigUint, BigUint) {
    let mut rest = m.clone();
    let mut square = BigUint::one();
    let mut radicand = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                radicand *= &p;
            }
        }
        p += 1u32;
    }
    radicand *= rest;
    (square, radicand)
}

impl SurdSum {
    pub fn rational(c: Rational) -> Self {
        let mut s = SurdSum::default();
        s.add_term(BigUint::one(), c);
        s
    }

    /// `sqrt(x)` for a nonnegative rational `x`.
    ///
    /// # Panics
    /// If `x` is negative.
    pub fn sqrt_of(x: &Rational) -> Self {
        assert!(!x.is_negative(), "square root of a negative number");
        if Coeff::is_zero(x) {
            return SurdSum::default();
        }
        // sqrt(a/b) = sqrt(ab) / b
        let a = x.numer().to_biguint().expect("nonnegative");
        let b = x.denom().to_biguint().expect("positive");
        let (s, r) = square_free_split(&(&a * &b));
        let c = Rational::new(BigInt::from(s), BigInt::from(b));
        let mut out = SurdSum::default();
        out.add_term(r, c);
        out
    }

    /// `gamma^(-3/2)` for a positive integer `gamma`.
    pub fn inverse_three_halves(gamma: &BigUint) -> Self {
        let g = Rational::from_integer(BigInt::from(gamma.clone()));
        SurdSum::sqrt_of(&g).scale(&(g.clone() * &g).recip())
    }

    fn add_term(&mut self, r: BigUint, c: Rational) {
        if Coeff::is_zero(&c) {
            return;
        }
        let slot = self.terms.entry(r.clone()).or_insert_with(<Rational as Zero>::zero);
        *slot += c;
        if Coeff::is_zero(slot) {
            self.terms.remove(&r);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    /// The rational part, when no square roots remain.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(<Rational as Zero>::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    /// Enclosure with `places` decimal digits of working precision.
    pub fn to_interval(&self, places: u32) -> Interval {
        let mut acc = Interval::exact(&<Rational as Zero>::zero(), places);
        for (r, c) in &self.terms {
            let root = Interval::exact(&Rational::from_integer(BigInt::from(r.clone())), places).sqrt();
            acc = acc.add(&root.scale(c));
        }
        acc
    }
}

impl Coeff for SurdSum {
    fn zero() -> Self {
        SurdSum::default()
    }
    fn one() -> Self {
        SurdSum::rational(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in &rhs.terms {
            out.add_term(r.clone(), c.clone());
        }
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in &rhs.terms {
            out.add_term(r.clone(), -c.clone());
        }
        out
    }
    /// `sqrt(r) sqrt(s) = g sqrt((r/g)(s/g))` with `g = gcd(r, s)`; the product
    /// of the cofactors stays squarefree.
    fn times(&self, rhs: &Self) -> Self {
        let mut out = SurdSum::default();
        for (r, a) in &self.terms {
            for (s, b) in &rhs.terms {
                let g = r.gcd(s);
                let radicand = (r / &g) * (s / &g);
                let c = a * b * Rational::from_integer(BigInt::from(g));
                out.add_term(radicand, c);
            }
        }
        out
    }
    fn scale(&self, factor: &Rational) -> Self {
        if Coeff::is_zero(factor) {
            return SurdSum::default();
        }
        SurdSum {
            terms: self.terms.iter().map(|(r, c)| (r.clone(), c * factor)).collect(),
        }
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (r, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if r.is_one() {
                write!(f, "{abs}")?;
            } else if One::is_one(&abs) {
                write!(f, "sqrt({r})")?;
            } else {
                write!(f, "{abs}*sqrt({r})")?;
            }
        }
        Ok(())
    }
}
