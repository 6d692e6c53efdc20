//! Kernels, lifts, colons and minimal generators.
//!
//! Everything reduces to one elimination: for a graded map `φ: S → G/N`
//! given by images of the basis of `S`, a Gröbner basis of the vectors
//! `(φ(e_i), e_i)` and `(n, 0)` in `G ⊕ S`, with `G` eliminated, contains a
//! Gröbner basis of `ker φ` in its `S`-part and lets us lift elements of
//! `im φ + N`.

use crate::error::{KernelError, Result};
use crate::groebner::{GroebnerBasis, GroebnerEngine, ModuleOrder};
use crate::module::{FreeModule, Vector};
use crate::poly::Polynomial;

/// Elimination data for a graded map `source → target / modulo`.
#[derive(Clone, Debug)]
pub struct Elimination {
    source: FreeModule,
    target: FreeModule,
    gb: GroebnerBasis,
}

impl Elimination {
    pub fn new(
        source: &FreeModule,
        target: &FreeModule,
        images: &[Vector],
        modulo: &[Vector],
    ) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(KernelError::AmbientMismatch(format!(
                "{} images for a source of rank {}",
                images.len(),
                source.rank()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if let Some(d) = target.degree_of(img)? {
                if d != source.twists()[i] {
                    return Err(KernelError::NotHomogeneous(format!(
                        "image of generator {i} has degree {d}, expected {}",
                        source.twists()[i]
                    )));
                }
            }
        }
        let big = target.sum(source);
        let s = target.rank();
        let mut gens = Vec::with_capacity(images.len() + modulo.len());
        for (i, img) in images.iter().enumerate() {
            gens.push(img.concat(&source.basis(i)));
        }
        for n in modulo {
            target.check_len(n)?;
            gens.push(n.concat(&source.zero()));
        }
        let gb = GroebnerBasis::compute_with_order(ModuleOrder::elimination(&big, s), &gens)?;
        Ok(Elimination {
            source: source.clone(),
            target: target.clone(),
            gb,
        })
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    /// A Gröbner basis of the kernel, as vectors of the source.
    pub fn kernel(&self) -> Vec<Vector> {
        let s = self.target.rank();
        let total = s + self.source.rank();
        self.gb
            .elements()
            .into_iter()
            .zip(self.gb.leading_positions())
            .filter(|(_, pos)| *pos >= s)
            .map(|(v, _)| v.slice(s..total))
            .collect()
    }

    /// Some `a` with `φ(a) ≡ w` modulo the target relations, if one exists.
    pub fn lift(&self, w: &Vector) -> Result<Option<Vector>> {
        self.target.check_len(w)?;
        let s = self.target.rank();
        let total = s + self.source.rank();
        let r = self.gb.normal_form(&w.concat(&self.source.zero()))?;
        if !r.slice(0..s).is_zero() {
            return Ok(None);
        }
        Ok(Some(-&r.slice(s..total)))
    }
}

/// Source module whose basis degrees match the given homogeneous vectors.
/// Zero vectors get degree zero.
pub fn source_for(ambient: &FreeModule, vs: &[Vector]) -> Result<FreeModule> {
    let mut twists = Vec::with_capacity(vs.len());
    for v in vs {
        twists.push(ambient.degree_of(v)?.unwrap_or(0));
    }
    Ok(FreeModule::new(ambient.ring(), twists))
}

/// Kernel of `source → target / modulo`, given images of the basis.
pub fn kernel(
    source: &FreeModule,
    target: &FreeModule,
    images: &[Vector],
    modulo: &[Vector],
) -> Result<Vec<Vector>> {
    Ok(Elimination::new(source, target, images, modulo)?.kernel())
}

/// Syzygies of `gens` modulo `modulo`, in the free module indexed by `gens`.
pub fn syzygies(ambient: &FreeModule, gens: &[Vector], modulo: &[Vector]) -> Result<Vec<Vector>> {
    let source = source_for(ambient, gens)?;
    kernel(&source, ambient, gens, modulo)
}

/// Generators of `⟨a⟩ ∩ ⟨b⟩` inside a free module.
pub fn intersect(ambient: &FreeModule, a: &[Vector], b: &[Vector]) -> Result<Vec<Vector>> {
    let source = source_for(ambient, a)?;
    let ker = kernel(&source, ambient, a, b)?;
    Ok(ker
        .iter()
        .map(|c| Vector::combination(ambient.rank(), c.comps(), a))
        .filter(|v| !v.is_zero())
        .collect())
}

/// `(N : J) = {v ∈ F : j·v ∈ N for all j ∈ J}` for a submodule `N` of `F`
/// and an ideal `J` given by homogeneous generators.
pub fn colon(ambient: &FreeModule, n: &[Vector], j: &[Polynomial]) -> Result<Vec<Vector>> {
    let ring = ambient.ring();
    let js: Vec<(i64, &Polynomial)> = j
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Ok((p.homogeneous_degree(ring)?.unwrap(), p)))
        .collect::<Result<_>>()?;
    if js.is_empty() {
        return Ok(ambient.basis_vectors());
    }
    let rank = ambient.rank();
    let mut target = FreeModule::new(ring, Vec::new());
    for (d, _) in &js {
        target = target.sum(&ambient.shifted(-d));
    }
    let total = target.rank();
    let images: Vec<Vector> = (0..rank)
        .map(|t| {
            let mut v = Vector::zero(total);
            for (l, (_, p)) in js.iter().enumerate() {
                *v.comp_mut(l * rank + t) = (*p).clone();
            }
            v
        })
        .collect();
    let mut modulo = Vec::with_capacity(n.len() * js.len());
    for l in 0..js.len() {
        for g in n {
            let mut v = Vector::zero(total);
            for t in 0..rank {
                *v.comp_mut(l * rank + t) = g.comp(t).clone();
            }
            modulo.push(v);
        }
    }
    let ker = kernel(ambient, &target, &images, &modulo)?;
    Ok(ker.into_iter().filter(|v| !v.is_zero()).collect())
}

/// `(N : M) = {r ∈ R : r·M ⊆ N}` for submodules of the same free module.
pub fn module_colon(ambient: &FreeModule, n: &[Vector], m: &[Vector]) -> Result<Vec<Polynomial>> {
    let ring = ambient.ring();
    let ms: Vec<(i64, &Vector)> = m
        .iter()
        .filter_map(|v| match ambient.degree_of(v) {
            Ok(Some(d)) => Some(Ok((d, v))),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_>>()?;
    let source = FreeModule::standard(ring, 1);
    if ms.is_empty() {
        return Ok(vec![Polynomial::one()]);
    }
    let rank = ambient.rank();
    let mut target = FreeModule::new(ring, Vec::new());
    for (d, _) in &ms {
        target = target.sum(&ambient.shifted(-d));
    }
    let total = target.rank();
    let mut image = Vector::zero(total);
    for (l, (_, v)) in ms.iter().enumerate() {
        for t in 0..rank {
            *image.comp_mut(l * rank + t) = v.comp(t).clone();
        }
    }
    let mut modulo = Vec::new();
    for l in 0..ms.len() {
        for g in n {
            let mut v = Vector::zero(total);
            for t in 0..rank {
                *v.comp_mut(l * rank + t) = g.comp(t).clone();
            }
            modulo.push(v);
        }
    }
    let ker = kernel(&source, &target, &[image], &modulo)?;
    Ok(ker
        .into_iter()
        .map(|v| v.comp(0).clone())
        .filter(|p| !p.is_zero())
        .collect())
}

/// Whether every vector of `vs` lies in the submodule generated by `gens`.
pub fn contains_all(ambient: &FreeModule, gens: &[Vector], vs: &[Vector]) -> Result<bool> {
    let gb = GroebnerBasis::compute(ambient, gens)?;
    for v in vs {
        if !gb.contains(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(N : J^∞)`, iterating colons until the module stabilizes.
pub fn saturate(ambient: &FreeModule, n: &[Vector], j: &[Polynomial]) -> Result<Vec<Vector>> {
    let mut cur = n.to_vec();
    loop {
        let next = colon(ambient, &cur, j)?;
        if contains_all(ambient, &cur, &next)? {
            return Ok(cur);
        }
        cur = next;
    }
}

/// A minimal homogeneous generating set of `(⟨gens⟩ + N)/N`, chosen greedily
/// from `gens` in order of increasing degree (stable within a degree).
pub fn minimal_generators(
    ambient: &FreeModule,
    gens: &[Vector],
    modulo: &[Vector],
) -> Result<Vec<Vector>> {
    let mut eng = GroebnerEngine::new(ModuleOrder::graded(ambient));
    for n in modulo {
        eng.add_generator(n)?;
    }
    let mut graded: Vec<(i64, usize)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if let Some(d) = ambient.degree_of(g)? {
            graded.push((d, i));
        }
    }
    graded.sort();
    let mut out = Vec::new();
    for (_, i) in graded {
        if !eng.contains(&gens[i])? {
            eng.add_generator(&gens[i])?;
            out.push(gens[i].clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::{Ring, RingContext};

    fn ring() -> Ring {
        RingContext::standard(&["x", "y", "z"]).unwrap()
    }

    fn polys(r: &Ring, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|p| parse_polynomial(p, r).unwrap()).collect()
    }

    fn vecs(ps: &[Polynomial]) -> Vec<Vector> {
        ps.iter().cloned().map(Vector::scalar).collect()
    }

    #[test]
    fn koszul_syzygies_of_two_variables() {
        let r = ring();
        let f = FreeModule::standard(&r, 1);
        let syz = syzygies(&f, &vecs(&polys(&r, &["x", "y"])), &[]).unwrap();
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        let check = &(s.comp(0) * &Polynomial::var(0)) + &(s.comp(1) * &Polynomial::var(1));
        assert!(check.is_zero());
        assert!(!s.is_zero());
    }

    #[test]
    fn ideal_colon_and_intersection() {
        let r = ring();
        let f = FreeModule::standard(&r, 1);
        let i = vecs(&polys(&r, &["x*y", "x*z"]));
        let c = colon(&f, &i, &polys(&r, &["x"])).unwrap();
        assert!(contains_all(&f, &c, &vecs(&polys(&r, &["y", "z"]))).unwrap());
        assert!(contains_all(&f, &vecs(&polys(&r, &["y", "z"])), &c).unwrap());

        let meet = intersect(&f, &vecs(&polys(&r, &["x"])), &vecs(&polys(&r, &["y"]))).unwrap();
        assert!(contains_all(&f, &meet, &vecs(&polys(&r, &["x*y"]))).unwrap());
        assert!(contains_all(&f, &vecs(&polys(&r, &["x*y"])), &meet).unwrap());
    }

    #[test]
    fn colon_by_zero_ideal_is_everything() {
        let r = ring();
        let f = FreeModule::standard(&r, 2);
        assert_eq!(colon(&f, &[], &[]).unwrap().len(), 2);
    }

    #[test]
    fn saturation_removes_embedded_component() {
        let r = ring();
        let f = FreeModule::standard(&r, 1);
        let i = vecs(&polys(&r, &["x^2", "x*y"]));
        let s = saturate(&f, &i, &polys(&r, &["x", "y"])).unwrap();
        assert!(contains_all(&f, &s, &vecs(&polys(&r, &["x"]))).unwrap());
    }

    #[test]
    fn lift_recovers_coefficients() {
        let r = ring();
        let f = FreeModule::standard(&r, 1);
        let gens = vecs(&polys(&r, &["x", "y"]));
        let src = source_for(&f, &gens).unwrap();
        let el = Elimination::new(&src, &f, &gens, &[]).unwrap();
        let w = Vector::scalar(parse_polynomial("x*z + y^2", &r).unwrap());
        let a = el.lift(&w).unwrap().unwrap();
        assert_eq!(Vector::combination(1, a.comps(), &gens), w);
        assert!(el
            .lift(&Vector::scalar(Polynomial::var(2)))
            .unwrap()
            .is_none());
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let r = ring();
        let f = FreeModule::standard(&r, 1);
        let gens = vecs(&polys(&r, &["x*y", "x", "x + y", "y^2"]));
        let m = minimal_generators(&f, &gens, &[]).unwrap();
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn module_colon_is_annihilator() {
        let r = ring();
        let f = FreeModule::standard(&r, 2);
        let x = Polynomial::var(0);
        let y = Polynomial::var(1);
        let n = vec![
            Vector::from_comps(vec![x.clone(), Polynomial::zero()]),
            Vector::from_comps(vec![Polynomial::zero(), y.clone()]),
        ];
        let ann = module_colon(&f, &n, &f.basis_vectors()).unwrap();
        let g = FreeModule::standard(&r, 1);
        let xy = vec![Vector::scalar(&x * &y)];
        assert!(contains_all(&g, &vecs(&ann), &xy).unwrap());
        assert!(contains_all(&g, &xy, &vecs(&ann)).unwrap());
    }
}
