use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use super::coeff::{Coeff, Rational};

/// Exponent vector over the block-size markers `y_2, y_3, ...`.
///
/// Index 0 holds the exponent of `y_2`. Trailing zeros are always trimmed so
/// equal monomials compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The single marker `y_size`; `y_1` is the constant 1.
    pub fn marker(size: usize) -> Self {
        if size <= 1 {
            return Monomial::one();
        }
        let mut e = vec![0; size - 1];
        e[size - 2] = 1;
        Monomial(e)
    }

    /// Builds `prod y_size^exp` from `(size, exp)` pairs.
    pub fn from_sizes<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut e = Vec::new();
        for (size, exp) in pairs {
            if size < 2 {
                continue;
            }
            if e.len() < size - 1 {
                e.resize(size - 1, 0);
            }
            e[size - 2] += exp;
        }
        Monomial(e).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    /// Exponent of `y_size`.
    pub fn exponent(&self, size: usize) -> u32 {
        if size < 2 {
            return 0;
        }
        self.0.get(size - 2).copied().unwrap_or(0)
    }

    /// Exponents of `y_2, y_3, ...` with trailing zeros trimmed.
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let len = self.0.len().max(rhs.0.len());
        let e = (0..len)
            .map(|i| self.0.get(i).unwrap_or(&0) + rhs.0.get(i).unwrap_or(&0))
            .collect();
        Monomial(e)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect()).trimmed()
    }

    /// Largest marker index with a nonzero exponent.
    pub fn max_size(&self) -> usize {
        if self.0.is_empty() {
            0
        } else {
            self.0.len() + 1
        }
    }

    /// Total number of blocks, `sum_i e_i`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "y{}", i + 2)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Polynomial in the block-size markers with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl WeightPoly {
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = WeightPoly::default();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_terms([(m, Rational::one())])
    }

    /// The marker `y_size` as a polynomial.
    pub fn marker(size: usize) -> Self {
        Self::monomial(Monomial::marker(size))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms([(Monomial::one(), c)])
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Value at `y_2 = y_3 = ... = 1`.
    pub fn at_ones(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Drops every term containing a marker `y_i` with `i > max_size`.
    pub fn truncate_markers(&self, max_size: usize) -> Self {
        WeightPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.max_size() <= max_size)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }
}

impl Coeff for WeightPoly {
    fn zero() -> Self {
        WeightPoly::default()
    }
    fn one() -> Self {
        WeightPoly::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = WeightPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
    fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return WeightPoly::default();
        }
        WeightPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }
    fn from_rational(r: Rational) -> Self {
        WeightPoly::constant(r)
    }
    fn raise_markers(&self, k: u32) -> Self {
        WeightPoly::from_terms(self.terms.iter().map(|(m, c)| (m.pow(k), c.clone())))
    }
}

impl fmt::Display for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit_monomial = m.exponents().is_empty();
            if unit_monomial {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
