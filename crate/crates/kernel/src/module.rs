//! Graded free modules and their elements.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{KernelError, Result};
use crate::poly::{Coeff, Polynomial};
use crate::ring::{Ring, RingContext};

/// A graded free module `⊕ R·e_j` where `e_j` has degree `twists[j]`.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeModule {
    ring: Ring,
    twists: Vec<i64>,
}

impl fmt::Debug for FreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeModule{:?}", self.twists)
    }
}

impl FreeModule {
    pub fn new(ring: &Ring, twists: Vec<i64>) -> Self {
        FreeModule {
            ring: ring.clone(),
            twists,
        }
    }

    /// `R^rank` with all generators in degree zero.
    pub fn standard(ring: &Ring, rank: usize) -> Self {
        Self::new(ring, vec![0; rank])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    /// The same basis with every generator degree shifted by `s`.
    pub fn shifted(&self, s: i64) -> Self {
        FreeModule::new(&self.ring, self.twists.iter().map(|t| t + s).collect())
    }

    /// Direct sum `self ⊕ other`.
    pub fn sum(&self, other: &FreeModule) -> Self {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        FreeModule::new(&self.ring, twists)
    }

    /// The dual basis, generator degrees negated.
    pub fn dual(&self) -> Self {
        FreeModule::new(&self.ring, self.twists.iter().map(|t| -t).collect())
    }

    pub fn zero(&self) -> Vector {
        Vector::zero(self.rank())
    }

    pub fn basis(&self, j: usize) -> Vector {
        Vector::unit(self.rank(), j)
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        (0..self.rank()).map(|j| self.basis(j)).collect()
    }

    /// Degree of a homogeneous element; `Ok(None)` for zero.
    pub fn degree_of(&self, v: &Vector) -> Result<Option<i64>> {
        self.check_len(v)?;
        let mut deg = None;
        for (j, p) in v.comps.iter().enumerate() {
            let Some(d) = p
                .homogeneous_degree(&self.ring)
                .map_err(|_| KernelError::NotHomogeneous(v.display(&self.ring)))?
            else {
                continue;
            };
            let d = d + self.twists[j];
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => {
                    return Err(KernelError::NotHomogeneous(v.display(&self.ring)));
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn check_len(&self, v: &Vector) -> Result<()> {
        if v.len() != self.rank() {
            return Err(KernelError::AmbientMismatch(format!(
                "vector of length {} in free module of rank {}",
                v.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn same_ring(&self, other: &FreeModule) -> bool {
        std::sync::Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }
}

/// An element of a free module, one polynomial per basis position.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Vector {
    comps: Vec<Polynomial>,
}

impl Vector {
    pub fn zero(rank: usize) -> Self {
        Vector {
            comps: vec![Polynomial::zero(); rank],
        }
    }

    pub fn unit(rank: usize, j: usize) -> Self {
        let mut v = Self::zero(rank);
        v.comps[j] = Polynomial::one();
        v
    }

    pub fn from_comps(comps: Vec<Polynomial>) -> Self {
        Vector { comps }
    }

    /// A rank-one vector holding `p`.
    pub fn scalar(p: Polynomial) -> Self {
        Vector { comps: vec![p] }
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn comps(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn comp(&self, j: usize) -> &Polynomial {
        &self.comps[j]
    }

    pub fn comp_mut(&mut self, j: usize) -> &mut Polynomial {
        &mut self.comps[j]
    }

    pub fn into_comps(self) -> Vec<Polynomial> {
        self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn scale(&self, p: &Polynomial) -> Vector {
        Vector {
            comps: self.comps.iter().map(|c| c * p).collect(),
        }
    }

    pub fn scale_coeff(&self, c: &Coeff) -> Vector {
        Vector {
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Concatenation `(self, other)` in a direct sum.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut comps = self.comps.clone();
        comps.extend_from_slice(&other.comps);
        Vector { comps }
    }

    /// Components `range` as a new vector.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Vector {
        Vector {
            comps: self.comps[range].to_vec(),
        }
    }

    /// Linear combination `Σ coeffs[i]·vs[i]`.
    pub fn combination(rank: usize, coeffs: &[Polynomial], vs: &[Vector]) -> Vector {
        let mut out = Vector::zero(rank);
        for (c, v) in coeffs.iter().zip(vs) {
            if c.is_zero() {
                continue;
            }
            out = &out + &v.scale(c);
        }
        out
    }

    pub fn display(&self, ring: &RingContext) -> String {
        let parts: Vec<String> = self.comps.iter().map(|p| p.display(ring)).collect();
        format!("({})", parts.join(", "))
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector {
            comps: self
                .comps
                .iter()
                .zip(&rhs.comps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector {
            comps: self
                .comps
                .iter()
                .zip(&rhs.comps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector {
            comps: self.comps.iter().map(|a| -a).collect(),
        }
    }
}
