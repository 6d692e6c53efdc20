//! Hilbert series of graded modules.
//!
//! A series is stored as an integer Laurent polynomial numerator over the
//! fixed denominator `Π (1 - t^{w_i})`, so equal series have equal numerators.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::presented::{PresentedModule, Submodule};
use crate::resolution::Resolution;
use crate::ring::{Monomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    weights: Vec<u32>,
    numerator: BTreeMap<i64, i64>,
}

impl HilbertSeries {
    pub fn zero(ring: &Ring) -> Self {
        HilbertSeries {
            weights: ring.weights().to_vec(),
            numerator: BTreeMap::new(),
        }
    }

    pub fn from_numerator(ring: &Ring, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut s = HilbertSeries::zero(ring);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    fn add_term(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.numerator.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.numerator.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Numerator as `(exponent, coefficient)` pairs, ascending.
    pub fn numerator(&self) -> Vec<(i64, i64)> {
        self.numerator.iter().map(|(&e, &c)| (e, c)).collect()
    }

    /// Lowest exponent and dense coefficient list of the numerator.
    pub fn numerator_dense(&self) -> (i64, Vec<i64>) {
        let Some((&lo, _)) = self.numerator.first_key_value() else {
            return (0, Vec::new());
        };
        let hi = *self.numerator.last_key_value().unwrap().0;
        let mut v = vec![0; (hi - lo + 1) as usize];
        for (&e, &c) in &self.numerator {
            v[(e - lo) as usize] = c;
        }
        (lo, v)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Multiply by `t^s`.
    pub fn shift(&self, s: i64) -> Self {
        HilbertSeries {
            weights: self.weights.clone(),
            numerator: self.numerator.iter().map(|(&e, &c)| (e + s, c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &c) in &other.numerator {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &c) in &other.numerator {
            out.add_term(e, -c);
        }
        out
    }

    fn mul_poly(&self, other: &BTreeMap<i64, i64>) -> Self {
        let mut out = HilbertSeries {
            weights: self.weights.clone(),
            numerator: BTreeMap::new(),
        };
        for (&a, &c) in &self.numerator {
            for (&b, &d) in other {
                out.add_term(a + b, c * d);
            }
        }
        out
    }

    /// Order of vanishing of the numerator at `t = 1`.
    fn order_at_one(&self) -> usize {
        let (_, mut p) = self.numerator_dense();
        let mut ord = 0;
        while !p.is_empty() && p.iter().sum::<i64>() == 0 {
            // p / (1 - t): prefix sums, last one vanishes.
            let mut q = Vec::with_capacity(p.len() - 1);
            let mut acc = 0;
            for &c in &p[..p.len() - 1] {
                acc += c;
                q.push(acc);
            }
            p = q;
            ord += 1;
        }
        ord
    }

    /// Krull dimension; `None` for the zero series.
    pub fn dimension(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        Some(self.weights.len() - self.order_at_one())
    }

    /// Values of the Hilbert function in degrees `lo..=hi`.
    pub fn coefficients(&self, lo: i64, hi: i64) -> Vec<i64> {
        if hi < lo {
            return Vec::new();
        }
        let start = self.numerator.keys().next().map_or(lo, |&e| e.min(lo));
        let full_len = (hi - start + 1) as usize;
        let mut series = vec![0i64; full_len];
        for (&e, &c) in &self.numerator {
            if e <= hi {
                series[(e - start) as usize] += c;
            }
        }
        for &w in &self.weights {
            let w = w as usize;
            for k in w..full_len {
                series[k] += series[k - w];
            }
        }
        series[(lo - start) as usize..].to_vec()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in &self.numerator {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "t^{e}")?,
                _ => write!(f, "{a}*t^{e}")?,
            }
        }
        let den: Vec<String> = self
            .weights
            .iter()
            .map(|w| format!("(1 - t^{w})"))
            .collect();
        write!(f, " / {}", den.join(""))
    }
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let redundant = gens.iter().enumerate().any(|(j, h)| j != i && h.divides(g));
        if !redundant {
            out.push(*g);
        }
    }
    out
}

/// Numerator of `HS(R/I)` for a monomial ideal `I`.
fn monomial_numerator(ring: &Ring, gens: Vec<Monomial>) -> BTreeMap<i64, i64> {
    let gens = minimize(gens);
    let mut out = BTreeMap::new();
    if gens.iter().any(Monomial::is_one) {
        return out;
    }
    let n = ring.nvars();
    // Pivot on a variable shared by at least two generators.
    let pivot = (0..n).find_map(|i| {
        let with: Vec<u32> = gens.iter().map(|g| g.exp(i)).filter(|&e| e > 0).collect();
        (with.len() >= 2).then(|| (i, *with.iter().min().unwrap()))
    });
    match pivot {
        None => {
            // Disjoint supports: a regular sequence.
            out.insert(0, 1);
            for g in &gens {
                let d = ring.degree(g);
                let mut next = BTreeMap::new();
                for (&e, &c) in &out {
                    *next.entry(e).or_insert(0) += c;
                    *next.entry(e + d).or_insert(0) -= c;
                }
                next.retain(|_, c| *c != 0);
                out = next;
            }
        }
        Some((i, e)) => {
            let p = Monomial::var(i).pow(e);
            let mut with_p = gens.clone();
            with_p.push(p);
            let colon: Vec<Monomial> = gens
                .iter()
                .map(|g| g.gcd(&p).quotient_of(g).unwrap())
                .collect();
            let a = monomial_numerator(ring, with_p);
            let b = monomial_numerator(ring, colon);
            let dp = ring.degree(&p);
            out = a;
            for (&k, &c) in &b {
                *out.entry(k + dp).or_insert(0) += c;
            }
            out.retain(|_, c| *c != 0);
        }
    }
    out
}

/// `HS(F/N)` via the initial module of `N`.
pub fn quotient_series(sub: &Submodule) -> HilbertSeries {
    let ring = sub.ring();
    let amb = sub.ambient();
    let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); amb.rank()];
    for (j, m) in sub.gb().leading_terms() {
        per_comp[j].push(m);
    }
    let mut hs = HilbertSeries::zero(ring);
    for (j, gens) in per_comp.into_iter().enumerate() {
        let num = monomial_numerator(ring, gens);
        let tw = amb.twists()[j];
        for (e, c) in num {
            hs.add_term(e + tw, c);
        }
    }
    hs
}

/// Hilbert series of a subquotient, from initial modules.
pub fn hilbert_series(m: &PresentedModule) -> HilbertSeries {
    quotient_series(m.relations()).sub(&quotient_series(m.span()))
}

/// Hilbert series as the alternating sum over a free resolution.
pub fn series_from_resolution(ring: &Ring, res: &Resolution) -> HilbertSeries {
    let mut hs = HilbertSeries::zero(ring);
    for (i, f) in res.modules().iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for &d in f.twists() {
            hs.add_term(d, sign);
        }
    }
    hs
}

/// `HS(R)` itself: numerator one.
pub fn ring_series(ring: &Ring) -> HilbertSeries {
    HilbertSeries::from_numerator(ring, [(0, 1)])
}

/// Multiply a series by `Π (1 - t^{d_i})`.
pub fn times_regular_sequence(hs: &HilbertSeries, degrees: &[i64]) -> HilbertSeries {
    let mut out = hs.clone();
    for &d in degrees {
        out = out.mul_poly(&BTreeMap::from([(0, 1), (d, -1)]));
    }
    out
}

/// Krull dimension of a subquotient; `None` when it is zero.
pub fn krull_dimension(m: &PresentedModule) -> Result<Option<usize>> {
    Ok(hilbert_series(m).dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::presented::Ideal;
    use crate::ring::RingContext;

    #[test]
    fn polynomial_ring_function() {
        let r = RingContext::standard(&["x", "y", "z"]).unwrap();
        let hs = ring_series(&r);
        assert_eq!(hs.coefficients(0, 3), vec![1, 3, 6, 10]);
        assert_eq!(hs.dimension(), Some(3));
        assert_eq!(hs.shift(2).coefficients(0, 3), vec![0, 0, 1, 3]);
    }

    #[test]
    fn monomial_recursion_matches_hand_count() {
        let r = RingContext::standard(&["x", "y"]).unwrap();
        let i = Ideal::new(
            &r,
            vec![
                parse_polynomial("x^2", &r).unwrap(),
                parse_polynomial("x*y", &r).unwrap(),
            ],
        )
        .unwrap();
        let hs = hilbert_series(&i.quotient_ring());
        // R/(x^2, xy): basis 1, x, y, y^2, y^3, ...
        assert_eq!(hs.coefficients(0, 4), vec![1, 2, 1, 1, 1]);
        assert_eq!(hs.dimension(), Some(1));
    }

    #[test]
    fn display_lists_numerator_and_denominator() {
        let r = RingContext::new(&["x", "y"], &[1, 2]).unwrap();
        let hs = HilbertSeries::from_numerator(&r, [(0, 1), (3, -2)]);
        assert_eq!(hs.to_string(), "1 - 2*t^3 / (1 - t^1)(1 - t^2)");
        assert_eq!(HilbertSeries::zero(&r).dimension(), None);
    }
}
