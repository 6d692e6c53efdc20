//! Hom, Ext and depth-type invariants.

use crate::error::Result;
use crate::hilbert::{hilbert_series, HilbertSeries};
use crate::module::{FreeModule, Vector};
use crate::ops;
use crate::poly::Polynomial;
use crate::presented::{Ideal, PresentedModule};
use crate::resolution::{minimal_resolution, BettiTable, Resolution};
use crate::ring::Ring;

/// Coordinates for maps out of a free module `F = ⊕ R·f_j` into a
/// subquotient `B` with generators `G_k`: the map `f_j ↦ Σ_k X_{j,k} G_k`
/// is the vector `X` of `R^{rank F · #G}`, index `j·#G + k`.
#[derive(Clone, Debug)]
pub struct MapCoordinates {
    free: FreeModule,
    b: PresentedModule,
    b_gens: Vec<Vector>,
    coords: FreeModule,
}

impl MapCoordinates {
    pub fn new(free: &FreeModule, b: &PresentedModule) -> Result<Self> {
        let b_gens = b.minimal_generators()?;
        let b_degs: Vec<i64> = b_gens
            .iter()
            .map(|g| b.ambient().degree_of(g).map(|d| d.unwrap()))
            .collect::<Result<_>>()?;
        let mut twists = Vec::with_capacity(free.rank() * b_gens.len());
        for &dj in free.twists() {
            for &gk in &b_degs {
                twists.push(gk - dj);
            }
        }
        Ok(MapCoordinates {
            free: free.clone(),
            b: b.clone(),
            b_gens,
            coords: FreeModule::new(free.ring(), twists),
        })
    }

    pub fn coords(&self) -> &FreeModule {
        &self.coords
    }

    pub fn target_gens(&self) -> &[Vector] {
        &self.b_gens
    }

    fn nb(&self) -> usize {
        self.b_gens.len()
    }

    /// `φ_X(f_j)` as a vector of the ambient of `B`.
    pub fn evaluate(&self, x: &Vector, j: usize) -> Vector {
        let nb = self.nb();
        Vector::combination(
            self.b.ambient().rank(),
            &x.comps()[j * nb..(j + 1) * nb],
            &self.b_gens,
        )
    }

    /// `φ_X(Σ_j c_j f_j)`.
    pub fn evaluate_at(&self, x: &Vector, c: &Vector) -> Vector {
        let mut out = self.b.ambient().zero();
        for (j, cj) in c.comps().iter().enumerate() {
            if !cj.is_zero() {
                out = &out + &self.evaluate(x, j).scale(cj);
            }
        }
        out
    }

    fn blocks_target(&self, shifts: &[i64]) -> FreeModule {
        let mut t = FreeModule::new(self.free.ring(), Vec::new());
        for &s in shifts {
            t = t.sum(&self.b.ambient().shifted(-s));
        }
        t
    }

    fn blocks_modulo(&self, blocks: usize) -> Vec<Vector> {
        let rank = self.b.ambient().rank();
        let mut out = Vec::new();
        for l in 0..blocks {
            for g in self.b.relations().gens() {
                let mut v = Vector::zero(rank * blocks);
                for t in 0..rank {
                    *v.comp_mut(l * rank + t) = g.comp(t).clone();
                }
                out.push(v);
            }
        }
        out
    }

    /// Maps that vanish on every vector of `cols` (vectors of `F`).
    pub fn annihilating(&self, cols: &[Vector]) -> Result<Vec<Vector>> {
        if cols.is_empty() {
            return Ok(self.coords.basis_vectors());
        }
        let nb = self.nb();
        let brank = self.b.ambient().rank();
        let shifts: Vec<i64> = cols
            .iter()
            .map(|c| self.free.degree_of(c).map(|d| d.unwrap_or(0)))
            .collect::<Result<_>>()?;
        let target = self.blocks_target(&shifts);
        let mut images = Vec::with_capacity(self.coords.rank());
        for j in 0..self.free.rank() {
            for k in 0..nb {
                let mut v = Vector::zero(target.rank());
                for (c, col) in cols.iter().enumerate() {
                    let r = col.comp(j);
                    if r.is_zero() {
                        continue;
                    }
                    for t in 0..brank {
                        *v.comp_mut(c * brank + t) = r * self.b_gens[k].comp(t);
                    }
                }
                images.push(v);
            }
        }
        let modulo = self.blocks_modulo(cols.len());
        ops::kernel(&self.coords, &target, &images, &modulo)
    }

    /// Maps whose image is zero in `B`.
    pub fn zero_maps(&self) -> Result<Vec<Vector>> {
        let basis = self.free.basis_vectors();
        self.annihilating(&basis)
    }
}

/// `Hom_R(A, B)` with the data needed to evaluate its elements.
#[derive(Clone, Debug)]
pub struct HomModule {
    /// Minimal generators of `A`, as vectors of its ambient.
    pub source_gens: Vec<Vector>,
    pub coordinates: MapCoordinates,
    pub module: PresentedModule,
}

impl HomModule {
    /// Value of the homomorphism `x` on the `j`-th generator of `A`.
    pub fn evaluate(&self, x: &Vector, j: usize) -> Vector {
        self.coordinates.evaluate(x, j)
    }
}

/// `Hom_R(A, B)` as a subquotient of a free module of coordinates.
pub fn hom(a: &PresentedModule, b: &PresentedModule) -> Result<HomModule> {
    let p = a.presentation()?;
    let coordinates = MapCoordinates::new(&p.free, b)?;
    let k = coordinates.annihilating(&p.relations)?;
    let l = coordinates.zero_maps()?;
    let module = PresentedModule::new(coordinates.coords(), k, l)?;
    Ok(HomModule {
        source_gens: p.gens,
        coordinates,
        module,
    })
}

/// `Ext^i_R(A, B)` computed from a minimal resolution of `A`.
pub fn ext(a: &PresentedModule, b: &PresentedModule, i: usize) -> Result<PresentedModule> {
    let res = minimal_resolution(a)?;
    ext_from_resolution(&res, b, i)
}

pub fn ext_from_resolution(
    res: &Resolution,
    b: &PresentedModule,
    i: usize,
) -> Result<PresentedModule> {
    let ring = b.ring();
    let Some(fi) = res.modules().get(i) else {
        return PresentedModule::new(&FreeModule::new(ring, Vec::new()), Vec::new(), Vec::new());
    };
    let coords = MapCoordinates::new(fi, b)?;
    let next = res.differential(i + 1).unwrap_or(&[]);
    let k = coords.annihilating(next)?;
    let mut rels = coords.zero_maps()?;
    if let Some(di) = res.differential(i) {
        let prev = &res.modules()[i - 1];
        let nb = coords.target_gens().len();
        let total = coords.coords().rank();
        for j in 0..prev.rank() {
            for kk in 0..nb {
                let mut v = Vector::zero(total);
                for (c, col) in di.iter().enumerate() {
                    *v.comp_mut(c * nb + kk) = col.comp(j).clone();
                }
                rels.push(v);
            }
        }
    }
    PresentedModule::new(coords.coords(), k, rels)
}

/// Summary invariants of a graded module.
#[derive(Clone, Debug)]
pub struct HomologicalInvariants {
    pub betti: BettiTable,
    pub pdim: Option<usize>,
    pub depth: Option<usize>,
    pub dim: Option<usize>,
    pub hilbert: HilbertSeries,
}

impl HomologicalInvariants {
    pub fn is_cohen_macaulay(&self) -> bool {
        self.depth.is_some() && self.depth == self.dim
    }

    /// Maximal Cohen–Macaulay over a quotient of dimension `d`.
    pub fn is_mcm_of_dim(&self, d: usize) -> bool {
        self.depth == Some(d)
    }
}

pub fn invariants(m: &PresentedModule) -> Result<HomologicalInvariants> {
    let res = minimal_resolution(m)?;
    Ok(invariants_from(m, &res))
}

pub fn invariants_from(m: &PresentedModule, res: &Resolution) -> HomologicalInvariants {
    let n = m.ring().nvars();
    let pdim = res.pdim();
    HomologicalInvariants {
        betti: res.betti(),
        pdim,
        depth: pdim.map(|p| n - p),
        dim: hilbert_series(m).dimension(),
        hilbert: hilbert_series(m),
    }
}

/// Largest `i` with `Ext^i(M, R) ≠ 0`; equals the projective dimension.
pub fn top_nonvanishing_ext(m: &PresentedModule) -> Result<Option<usize>> {
    let res = minimal_resolution(m)?;
    let r = PresentedModule::free(&FreeModule::standard(m.ring(), 1));
    for i in (0..=m.ring().nvars()).rev() {
        if !ext_from_resolution(&res, &r, i)?.is_zero()? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// `dim R/I`; `None` for the unit ideal.
pub fn quotient_dimension(i: &Ideal) -> Option<usize> {
    hilbert_series(&i.quotient_ring()).dimension()
}

/// `ht I = n - dim R/I`; the unit ideal gets `n + 1`.
pub fn height(i: &Ideal) -> usize {
    let n = i.ring().nvars();
    quotient_dimension(i).map_or(n + 1, |d| n - d)
}

/// Whether the homogeneous polynomials form a regular sequence in `R`.
pub fn is_regular_sequence(ring: &Ring, seq: &[Polynomial]) -> Result<bool> {
    if seq.iter().any(|p| p.is_zero() || p.as_constant().is_some()) {
        return Ok(false);
    }
    let i = Ideal::new(ring, seq.to_vec())?;
    Ok(height(&i) == seq.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::RingContext;

    fn ideal(r: &Ring, s: &[&str]) -> Ideal {
        Ideal::new(
            r,
            s.iter().map(|p| parse_polynomial(p, r).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn hom_of_cyclic_modules() {
        let r = RingContext::standard(&["x", "y"]).unwrap();
        let a = ideal(&r, &["x"]).quotient_ring();
        let b = ideal(&r, &["x*y"]).quotient_ring();
        let h = hom(&a, &b).unwrap();
        // Hom(R/(x), R/(xy)) ≅ (0 :_{R/(xy)} x) = (y)/(xy) ≅ R/(x)(-1).
        let hs = hilbert_series(&h.module);
        let expect = hilbert_series(&a).shift(1);
        assert_eq!(hs, expect);
    }

    #[test]
    fn regular_sequence_by_height() {
        let r = RingContext::standard(&["x", "y", "z"]).unwrap();
        let x = Polynomial::var(0);
        let y = Polynomial::var(1);
        assert!(is_regular_sequence(&r, &[x.clone(), y.clone()]).unwrap());
        assert!(!is_regular_sequence(&r, &[&x * &y, &x * &Polynomial::var(2)]).unwrap());
        assert!(!is_regular_sequence(&r, &[Polynomial::one()]).unwrap());
        assert_eq!(height(&Ideal::unit(&r)), 4);
    }
}
