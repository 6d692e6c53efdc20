//! Submodules, ideals, subquotient modules and maps between them.

use std::sync::OnceLock;

use crate::error::{KernelError, Result};
use crate::groebner::GroebnerBasis;
use crate::module::{FreeModule, Vector};
use crate::ops;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// A homogeneous submodule of a graded free module.
#[derive(Clone, Debug)]
pub struct Submodule {
    ambient: FreeModule,
    gens: Vec<Vector>,
    gb: OnceLock<GroebnerBasis>,
}

impl Submodule {
    pub fn new(ambient: &FreeModule, gens: Vec<Vector>) -> Result<Self> {
        for g in &gens {
            ambient.degree_of(g)?;
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Submodule {
            ambient: ambient.clone(),
            gens,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ambient: &FreeModule) -> Self {
        Submodule {
            ambient: ambient.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn whole(ambient: &FreeModule) -> Self {
        Submodule::new(ambient, ambient.basis_vectors()).expect("basis is homogeneous")
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn ring(&self) -> &Ring {
        self.ambient.ring()
    }

    pub fn gens(&self) -> &[Vector] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            GroebnerBasis::compute(&self.ambient, &self.gens).expect("generators are homogeneous")
        })
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        self.gb().contains(v)
    }

    pub fn normal_form(&self, v: &Vector) -> Result<Vector> {
        self.gb().normal_form(v)
    }

    pub fn contains_module(&self, other: &Submodule) -> Result<bool> {
        self.check_ambient(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Submodule) -> Result<bool> {
        Ok(self.contains_module(other)? && other.contains_module(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.gb().is_whole_ambient()
    }

    fn check_ambient(&self, other: &Submodule) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(KernelError::AmbientMismatch(format!(
                "{:?} vs {:?}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check_ambient(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Submodule::new(&self.ambient, gens)
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.check_ambient(other)?;
        let gens = ops::intersect(&self.ambient, &self.gens, &other.gens)?;
        Submodule::new(&self.ambient, gens)
    }

    /// `(self : J)`.
    pub fn colon(&self, j: &Ideal) -> Result<Submodule> {
        let gens = ops::colon(&self.ambient, &self.gens, j.gens())?;
        Submodule::new(&self.ambient, gens)
    }

    /// `(self : other) ⊆ R`.
    pub fn module_colon(&self, other: &Submodule) -> Result<Ideal> {
        self.check_ambient(other)?;
        let gens = ops::module_colon(&self.ambient, &self.gens, &other.gens)?;
        Ideal::new(self.ring(), gens)
    }

    pub fn saturate(&self, j: &Ideal) -> Result<Submodule> {
        let gens = ops::saturate(&self.ambient, &self.gens, j.gens())?;
        Submodule::new(&self.ambient, gens)
    }

    /// `J·self`.
    pub fn scale(&self, j: &Ideal) -> Submodule {
        let mut gens = Vec::new();
        for p in j.gens() {
            for g in &self.gens {
                gens.push(g.scale(p));
            }
        }
        Submodule::new(&self.ambient, gens).expect("products of homogeneous elements")
    }

    pub fn minimal_generators(&self) -> Result<Vec<Vector>> {
        ops::minimal_generators(&self.ambient, &self.gens, &[])
    }

    /// Reduced Gröbner basis elements; a canonical generating set.
    pub fn canonical_gens(&self) -> Vec<Vector> {
        self.gb().elements()
    }
}

/// A homogeneous ideal of the ring.
#[derive(Clone, Debug)]
pub struct Ideal {
    polys: Vec<Polynomial>,
    sub: Submodule,
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        let polys: Vec<Polynomial> = gens.into_iter().filter(|p| !p.is_zero()).collect();
        let f = FreeModule::standard(ring, 1);
        let sub = Submodule::new(&f, polys.iter().cloned().map(Vector::scalar).collect())?;
        Ok(Ideal { polys, sub })
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, vec![Polynomial::one()]).expect("constant is homogeneous")
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal::new(ring, Vec::new()).expect("empty")
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &Ring) -> Self {
        Ideal::new(ring, (0..ring.nvars()).map(Polynomial::var).collect())
            .expect("variables are homogeneous")
    }

    pub fn from_submodule(sub: &Submodule) -> Result<Self> {
        if sub.ambient().rank() != 1 || sub.ambient().twists()[0] != 0 {
            return Err(KernelError::AmbientMismatch(
                "an ideal lives in a rank one module generated in degree zero".into(),
            ));
        }
        Ideal::new(
            sub.ring(),
            sub.gens().iter().map(|v| v.comp(0).clone()).collect(),
        )
    }

    pub fn ring(&self) -> &Ring {
        self.sub.ring()
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn as_submodule(&self) -> &Submodule {
        &self.sub
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        self.sub.contains(&Vector::scalar(p.clone()))
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        Ok(self
            .sub
            .normal_form(&Vector::scalar(p.clone()))?
            .comp(0)
            .clone())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.sub.contains_module(&other.sub)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.sub.equals(&other.sub)
    }

    pub fn is_zero(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.sub.is_whole()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut g = self.polys.clone();
        g.extend(other.polys.iter().cloned());
        Ideal::new(self.ring(), g)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut g = Vec::new();
        for a in &self.polys {
            for b in &other.polys {
                g.push(a * b);
            }
        }
        Ideal::new(self.ring(), g).expect("products of homogeneous elements")
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut out = Ideal::unit(self.ring());
        for _ in 0..k {
            out = out.product(self);
        }
        out
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        Ideal::from_submodule(&self.sub.intersect(&other.sub)?)
    }

    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        Ideal::from_submodule(&self.sub.colon(other)?)
    }

    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        Ideal::from_submodule(&self.sub.saturate(other)?)
    }

    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        Ok(self
            .sub
            .minimal_generators()?
            .into_iter()
            .map(|v| v.comp(0).clone())
            .collect())
    }

    /// Reduced Gröbner basis; equal ideals give equal lists.
    pub fn canonical_gens(&self) -> Vec<Polynomial> {
        self.sub
            .canonical_gens()
            .into_iter()
            .map(|v| v.comp(0).clone())
            .collect()
    }

    /// `R/I` as a cyclic module.
    pub fn quotient_ring(&self) -> PresentedModule {
        PresentedModule::cokernel(self.sub.ambient(), self.sub.gens().to_vec())
            .expect("ideal generators are homogeneous")
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self.polys.iter().map(|p| p.display(self.ring())).collect();
        format!("({})", parts.join(", "))
    }
}

/// A minimal presentation `F1 → F0 → M → 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    /// Minimal generators of `M`, as vectors of its ambient module.
    pub gens: Vec<Vector>,
    /// `F0`, graded by the generator degrees.
    pub free: FreeModule,
    /// Minimal relations among the generators, as vectors of `F0`.
    pub relations: Vec<Vector>,
}

/// The subquotient `(⟨gens⟩ + L) / L` of a free module, `L = ⟨rels⟩`.
#[derive(Clone, Debug)]
pub struct PresentedModule {
    ambient: FreeModule,
    gens: Vec<Vector>,
    rels: Submodule,
    span: OnceLock<Submodule>,
}

impl PresentedModule {
    pub fn new(ambient: &FreeModule, gens: Vec<Vector>, rels: Vec<Vector>) -> Result<Self> {
        for g in &gens {
            ambient.degree_of(g)?;
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(PresentedModule {
            ambient: ambient.clone(),
            gens,
            rels: Submodule::new(ambient, rels)?,
            span: OnceLock::new(),
        })
    }

    /// `F / ⟨rels⟩`.
    pub fn cokernel(ambient: &FreeModule, rels: Vec<Vector>) -> Result<Self> {
        Self::new(ambient, ambient.basis_vectors(), rels)
    }

    pub fn free(ambient: &FreeModule) -> Self {
        Self::cokernel(ambient, Vec::new()).expect("no relations")
    }

    pub fn from_submodule(sub: &Submodule) -> Self {
        Self::new(sub.ambient(), sub.gens().to_vec(), Vec::new()).expect("homogeneous")
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn ring(&self) -> &Ring {
        self.ambient.ring()
    }

    pub fn gens(&self) -> &[Vector] {
        &self.gens
    }

    pub fn relations(&self) -> &Submodule {
        &self.rels
    }

    /// `⟨gens⟩ + L`.
    pub fn span(&self) -> &Submodule {
        self.span.get_or_init(|| {
            let mut g = self.gens.clone();
            g.extend(self.rels.gens().iter().cloned());
            Submodule::new(&self.ambient, g).expect("homogeneous")
        })
    }

    pub fn generator_degrees(&self) -> Vec<i64> {
        self.gens
            .iter()
            .map(|g| self.ambient.degree_of(g).unwrap().unwrap())
            .collect()
    }

    pub fn is_zero(&self) -> Result<bool> {
        for g in &self.gens {
            if !self.rels.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `v` (a vector of the ambient) represents an element of the module.
    pub fn contains(&self, v: &Vector) -> Result<bool> {
        self.span().contains(v)
    }

    /// Whether `v` represents zero in the module.
    pub fn is_zero_element(&self, v: &Vector) -> Result<bool> {
        self.rels.contains(v)
    }

    pub fn minimal_generators(&self) -> Result<Vec<Vector>> {
        ops::minimal_generators(&self.ambient, &self.gens, self.rels.gens())
    }

    pub fn presentation(&self) -> Result<Presentation> {
        let gens = self.minimal_generators()?;
        let free = ops::source_for(&self.ambient, &gens)?;
        let syz = ops::syzygies(&self.ambient, &gens, self.rels.gens())?;
        let relations = ops::minimal_generators(&free, &syz, &[])?;
        Ok(Presentation {
            gens,
            free,
            relations,
        })
    }

    /// An isomorphic module of the form `F0 / relations`, minimally presented.
    pub fn to_cokernel(&self) -> Result<PresentedModule> {
        let p = self.presentation()?;
        PresentedModule::cokernel(&p.free, p.relations)
    }

    pub fn annihilator(&self) -> Result<Ideal> {
        self.rels.module_colon(self.span())
    }

    /// The submodule generated by `elements` (vectors of the ambient).
    pub fn submodule(&self, elements: Vec<Vector>) -> Result<PresentedModule> {
        PresentedModule::new(&self.ambient, elements, self.rels.gens().to_vec())
    }

    /// The quotient by the submodule generated by `elements`.
    pub fn quotient(&self, elements: &[Vector]) -> Result<PresentedModule> {
        let mut rels = self.rels.gens().to_vec();
        rels.extend(elements.iter().cloned());
        PresentedModule::new(&self.ambient, self.gens.clone(), rels)
    }

    /// `M(s)`, whose degree `d` part is the degree `d + s` part of `M`.
    pub fn twist(&self, s: i64) -> PresentedModule {
        PresentedModule::new(
            &self.ambient.shifted(-s),
            self.gens.clone(),
            self.rels.gens().to_vec(),
        )
        .expect("same vectors")
    }

    /// `I·M` as a submodule of `M`.
    pub fn ideal_times(&self, i: &Ideal) -> Result<PresentedModule> {
        let mut g = Vec::new();
        for p in i.gens() {
            for v in &self.gens {
                g.push(v.scale(p));
            }
        }
        self.submodule(g)
    }

    /// Whether two modules on the same ambient and relations have equal spans.
    pub fn same_submodule(&self, other: &PresentedModule) -> Result<bool> {
        if !self.rels.equals(&other.rels)? {
            return Ok(false);
        }
        self.span().equals(other.span())
    }
}

/// A graded homomorphism between subquotients, given by images of the
/// source generators (vectors of the target ambient).
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: PresentedModule,
    target: PresentedModule,
    images: Vec<Vector>,
    degree: i64,
}

impl ModuleMap {
    pub fn new(
        source: &PresentedModule,
        target: &PresentedModule,
        images: Vec<Vector>,
        degree: i64,
    ) -> Result<Self> {
        if images.len() != source.gens().len() {
            return Err(KernelError::AmbientMismatch(format!(
                "{} images for {} generators",
                images.len(),
                source.gens().len()
            )));
        }
        let degs = source.generator_degrees();
        for (img, d) in images.iter().zip(&degs) {
            if let Some(e) = target.ambient().degree_of(img)? {
                if e != d + degree {
                    return Err(KernelError::NotHomogeneous(format!(
                        "image of degree {e}, expected {}",
                        d + degree
                    )));
                }
            }
            if !target.contains(img)? {
                return Err(KernelError::Containment(
                    "image is not an element of the target".into(),
                ));
            }
        }
        let map = ModuleMap {
            source: source.clone(),
            target: target.clone(),
            images,
            degree,
        };
        let syz = ops::syzygies(source.ambient(), source.gens(), source.relations().gens())?;
        for c in &syz {
            if !target.is_zero_element(&map.apply(c))? {
                return Err(KernelError::Containment(
                    "a relation of the source does not map to zero".into(),
                ));
            }
        }
        Ok(map)
    }

    pub fn source(&self) -> &PresentedModule {
        &self.source
    }

    pub fn target(&self) -> &PresentedModule {
        &self.target
    }

    pub fn images(&self) -> &[Vector] {
        &self.images
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Image of `Σ c_i·gen_i`.
    pub fn apply(&self, coeffs: &Vector) -> Vector {
        Vector::combination(self.target.ambient().rank(), coeffs.comps(), &self.images)
    }

    fn coefficient_source(&self) -> FreeModule {
        FreeModule::new(self.source.ring(), self.source.generator_degrees())
    }

    fn shifted_target(&self) -> FreeModule {
        self.target.ambient().shifted(-self.degree)
    }

    pub fn kernel(&self) -> Result<PresentedModule> {
        let ker = ops::kernel(
            &self.coefficient_source(),
            &self.shifted_target(),
            &self.images,
            self.target.relations().gens(),
        )?;
        let rank = self.source.ambient().rank();
        let gens = ker
            .iter()
            .map(|c| Vector::combination(rank, c.comps(), self.source.gens()))
            .collect();
        self.source.submodule(gens)
    }

    pub fn image(&self) -> Result<PresentedModule> {
        self.target.submodule(self.images.clone())
    }

    pub fn cokernel(&self) -> Result<PresentedModule> {
        self.target.quotient(&self.images)
    }

    pub fn is_injective(&self) -> Result<bool> {
        self.kernel()?.is_zero()
    }

    pub fn is_surjective(&self) -> Result<bool> {
        self.cokernel()?.is_zero()
    }

    /// Coefficients `c` over the source generators with `apply(c) ≡ w`.
    pub fn lift(&self, w: &Vector) -> Result<Option<Vector>> {
        ops::Elimination::new(
            &self.coefficient_source(),
            &self.shifted_target(),
            &self.images,
            self.target.relations().gens(),
        )?
        .lift(w)
    }
}
