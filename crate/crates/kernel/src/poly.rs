//! Sparse polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{KernelError, Result};
use crate::ring::{Monomial, RingContext};

pub type Coeff = BigRational;

pub fn rat(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// A polynomial: map from exponent vectors to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug, PartialOrd, Ord)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), Coeff::one())
    }

    pub fn monomial(m: Monomial, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(it: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// The constant value if the polynomial is a constant (zero included).
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Coeff)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if let Some(lower) = m.lower(i) {
                out.add_term(lower, c * rat(m.exp(i) as i64));
            }
        }
        out
    }

    /// Weighted degree if homogeneous; `Ok(None)` for zero.
    pub fn homogeneous_degree(&self, ring: &RingContext) -> Result<Option<i64>> {
        let mut deg = None;
        for m in self.terms.keys() {
            let d = ring.degree(m);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => {
                    return Err(KernelError::NotHomogeneous(self.display(ring)));
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn is_homogeneous(&self, ring: &RingContext) -> bool {
        self.homogeneous_degree(ring).is_ok()
    }

    /// Largest term in lexicographic exponent order (order-independent helper
    /// for exact division).
    fn lex_leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = divisor.lex_leading()?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((m, c)) = rem.lex_leading().map(|(m, c)| (*m, c.clone())) {
            let q = dm.quotient_of(&m)?;
            let qc = c / dc;
            rem = &rem - &divisor.mul_monomial(&q, &qc);
            quot.add_term(q, qc);
        }
        Some(quot)
    }

    /// Substitute `x_i -> values[i]`.
    pub fn evaluate(&self, values: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for (i, v) in values.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t = &t * &v.pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Human-readable form, e.g. `3/2*x^2*y - z`. Terms are printed in
    /// descending lexicographic order so the output is canonical.
    pub fn display(&self, ring: &RingContext) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = format_rational(&a);
            if m.is_one() {
                out.push_str(&coeff);
            } else {
                if !a.is_one() {
                    let _ = write!(out, "{coeff}*");
                }
                out.push_str(&ring.format_monomial(m));
            }
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.mul(b), c * d);
            }
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn xy() -> (Polynomial, Polynomial) {
        (Polynomial::var(0), Polynomial::var(1))
    }

    #[test]
    fn arithmetic_and_display() {
        let ring = RingContext::standard(&["x", "y"]).unwrap();
        let (x, y) = xy();
        let p = &(&x * &x) - &(&y.scale(&ratio(3, 2)));
        assert_eq!(p.display(&ring), "x^2 - 3/2*y");
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn derivative_and_degree() {
        let ring = RingContext::new(&["x", "y", "z"], &[3, 4, 5]).unwrap();
        let (x, y) = xy();
        let z = Polynomial::var(2);
        let f = &(&x * &z) - &(&y * &y);
        assert_eq!(f.homogeneous_degree(&ring).unwrap(), Some(8));
        assert_eq!(f.derivative(1), y.scale(&rat(-2)));
        assert!((&x + &y).homogeneous_degree(&ring).is_err());
    }

    #[test]
    fn exact_division() {
        let (x, y) = xy();
        let f = &(&x + &y) * &(&x - &y);
        assert_eq!(f.exact_div(&(&x + &y)), Some(&x - &y));
        assert_eq!(x.exact_div(&y), None);
    }
}
