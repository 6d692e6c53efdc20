//! The ambient weighted polynomial ring and its monomials.

use std::fmt;
use std::sync::Arc;

use crate::error::{KernelError, Result};

/// Maximum number of variables supported by the inline monomial representation.
pub const MAX_VARS: usize = 8;

/// An exponent vector stored inline; unused slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
    };

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
        }
        m
    }

    /// The monomial `x_i`.
    pub fn var(i: usize) -> Self {
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, n: usize) -> Vec<u32> {
        self.exps[..n].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for (a, b) in out.exps.iter_mut().zip(self.exps.iter()) {
            *a -= *b;
        }
        Some(out)
    }

    #[inline]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).max(*b);
        }
        out
    }

    #[inline]
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).min(*b);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut out = *self;
        for a in out.exps.iter_mut() {
            *a = u16::try_from(*a as u32 * k).expect("exponent overflow");
        }
        out
    }

    /// Drop one power of `x_i`; `None` when the exponent is zero.
    pub fn lower(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut out = *self;
        out.exps[i] -= 1;
        Some(out)
    }

    pub(crate) fn raw(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps)
    }
}

/// The graded polynomial ring `Q[x_1..x_n]` with positive integer weights.
///
/// Immutable after construction; shared through [`Ring`].
#[derive(Debug, PartialEq, Eq)]
pub struct RingContext {
    names: Vec<String>,
    weights: Vec<u32>,
}

/// Shared handle to a ring context.
pub type Ring = Arc<RingContext>;

impl RingContext {
    pub fn new<S: AsRef<str>>(names: &[S], weights: &[u32]) -> Result<Ring> {
        if names.len() != weights.len() {
            return Err(KernelError::InvalidRing(format!(
                "{} variables but {} weights",
                names.len(),
                weights.len()
            )));
        }
        if names.is_empty() {
            return Err(KernelError::InvalidRing("no variables".into()));
        }
        if names.len() > MAX_VARS {
            return Err(KernelError::InvalidRing(format!(
                "at most {MAX_VARS} variables are supported"
            )));
        }
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(KernelError::InvalidRing(format!(
                "weight of {} must be positive",
                names[pos].as_ref()
            )));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() || !a.chars().next().unwrap().is_alphabetic() {
                return Err(KernelError::InvalidRing(format!("bad variable name {a:?}")));
            }
            if names[..i].contains(a) {
                return Err(KernelError::InvalidRing(format!("duplicate variable {a}")));
            }
        }
        Ok(Arc::new(RingContext {
            names,
            weights: weights.to_vec(),
        }))
    }

    /// Standard grading, all weights one.
    pub fn standard<S: AsRef<str>>(names: &[S]) -> Result<Ring> {
        Self::new(names, &vec![1; names.len()])
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight_sum(&self) -> i64 {
        self.weights.iter().map(|&w| w as i64).sum()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn degree(&self, m: &Monomial) -> i64 {
        self.weights
            .iter()
            .enumerate()
            .map(|(i, &w)| w as i64 * m.exp(i) as i64)
            .sum()
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, name) in self.names.iter().enumerate() {
            match m.exp(i) {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}
