//! `I`-free approximations `0 → IF → M → W → 0`, their `I`-duals
//! `0 ← V ← F^∨ ← M^I ← 0`, `J`-restrictions and the freeness records
//! tying the projective dimension of `M` to the depth of `V`.
//!
//! The ring is `R = ℚ[x]` and `ω_R = R` untwisted; the canonical twist by
//! `-Σ w_i` is applied only where series are compared.

use mlog_kernel::hilbert::{hilbert_series, HilbertSeries};
use mlog_kernel::homological::{ext_from_resolution, height, hom, quotient_dimension, HomModule};
use mlog_kernel::ops::{self, Elimination};
use mlog_kernel::{
    minimal_resolution, BettiTable, FreeModule, Ideal, ModuleMap, Polynomial, PresentedModule,
    Ring, Submodule, Vector,
};

use crate::blocks::{self, Block};
use crate::error::{hypothesis, CoreError, Result};

/// `Σ_l g_l m_l` for `g ∈ F^∨`, `m ∈ F`.
pub fn dual_pairing(g: &Vector, m: &Vector) -> Polynomial {
    let mut out = Polynomial::zero();
    for (a, b) in g.comps().iter().zip(m.comps()) {
        if !a.is_zero() && !b.is_zero() {
            out = &out + &(a * b);
        }
    }
    out
}

/// A homogeneous element `f` of the candidates, or a sum of candidates of
/// equal degree, with `(I : f) = I`. Lower degrees come first; within a
/// degree, singletons before sums of two, and so on.
pub fn nonzerodivisor_search(
    candidates: &[Polynomial],
    modulo: &Ideal,
) -> Result<Option<Polynomial>> {
    let ring = modulo.ring();
    let mut by_degree: Vec<(i64, usize)> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        if let Some(d) = c.homogeneous_degree(ring)? {
            by_degree.push((d, i));
        }
    }
    by_degree.sort();
    let mut degrees: Vec<i64> = by_degree.iter().map(|e| e.0).collect();
    degrees.dedup();
    for d in degrees {
        let same: Vec<usize> = by_degree.iter().filter(|e| e.0 == d).map(|e| e.1).collect();
        for len in 1..=same.len().min(4) {
            for combo in combinations(&same, len) {
                let f = combo
                    .iter()
                    .fold(Polynomial::zero(), |acc, &i| &acc + &candidates[i]);
                if f.is_zero() || modulo.contains(&f)? {
                    continue;
                }
                let colon = modulo.colon(&Ideal::new(ring, vec![f.clone()])?)?;
                if modulo.contains_ideal(&colon)? {
                    return Ok(Some(f));
                }
            }
        }
    }
    Ok(None)
}

fn combinations(items: &[usize], len: usize) -> Vec<Vec<usize>> {
    fn rec(
        items: &[usize],
        len: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, len, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, len, 0, &mut Vec::new(), &mut out);
    out
}

/// The ideal `I` with its Gorenstein certificate.
#[derive(Clone, Debug)]
pub struct IContext {
    ideal: Ideal,
    k: usize,
    betti: BettiTable,
    top_degree: i64,
}

impl IContext {
    /// Accepts `I` if `ht I ≥ 2`, `R/I` is Cohen–Macaulay (`pdim = ht`)
    /// and its last Betti number is one.
    pub fn new(ideal: Ideal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(hypothesis("height", "the ideal is the unit ideal"));
        }
        let k = height(&ideal);
        if k < 2 {
            return Err(hypothesis("height", format!("height {k} < 2")));
        }
        let res = minimal_resolution(&ideal.quotient_ring())?;
        let pdim = res.pdim().unwrap_or(0);
        if pdim != k {
            return Err(hypothesis(
                "cohen-macaulay",
                format!("pdim R/I = {pdim} but height = {k}"),
            ));
        }
        let betti = res.betti();
        let last = betti.degrees(k);
        if last.len() != 1 {
            return Err(hypothesis(
                "gorenstein",
                format!("last Betti number is {}", last.len()),
            ));
        }
        Ok(IContext {
            ideal,
            k,
            betti,
            top_degree: last[0],
        })
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn betti(&self) -> &BettiTable {
        &self.betti
    }

    /// Degree of the last syzygy: `Ext^k(R/I, R) ≅ R/I(top_degree)`.
    pub fn top_degree(&self) -> i64 {
        self.top_degree
    }

    /// `R/I` as a cyclic module.
    pub fn quotient(&self) -> PresentedModule {
        self.ideal.quotient_ring()
    }

    /// `J/I` inside `R/I` for an ideal `J ⊇ I`.
    pub fn ideal_mod(&self, j: &Ideal) -> Result<PresentedModule> {
        let f = FreeModule::standard(self.ring(), 1);
        let gens = j.gens().iter().cloned().map(Vector::scalar).collect();
        let rels = self
            .ideal
            .gens()
            .iter()
            .cloned()
            .map(Vector::scalar)
            .collect();
        Ok(PresentedModule::new(&f, gens, rels)?)
    }
}

/// `Hom(A, B)` together with a way to write homomorphisms given by their
/// values on the generators of `A` in coordinates.
#[derive(Clone, Debug)]
pub struct HomEvaluator {
    hom: HomModule,
    lifter: Elimination,
    nb: usize,
}

impl HomEvaluator {
    pub fn new(a: &PresentedModule, b: &PresentedModule) -> Result<Self> {
        let hom = hom(a, b)?;
        let b_gens = hom.coordinates.target_gens().to_vec();
        let source = ops::source_for(b.ambient(), &b_gens)?;
        let lifter = Elimination::new(&source, b.ambient(), &b_gens, b.relations().gens())?;
        Ok(HomEvaluator {
            nb: b_gens.len(),
            hom,
            lifter,
        })
    }

    pub fn module(&self) -> &PresentedModule {
        &self.hom.module
    }

    /// Generators of `A` on which homomorphisms are evaluated.
    pub fn source_gens(&self) -> &[Vector] {
        &self.hom.source_gens
    }

    /// Coordinates of the homomorphism with the given values on
    /// `source_gens` (vectors of the ambient of `B`).
    pub fn coordinates(&self, values: &[Vector]) -> Result<Vector> {
        let total = self.hom.coordinates.coords().rank();
        let mut x = Vector::zero(total);
        for (j, v) in values.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let c = self.lifter.lift(v)?.ok_or_else(|| {
                CoreError::Counterexample("a pairing value lies outside the target module".into())
            })?;
            for (k, ck) in c.comps().iter().enumerate() {
                *x.comp_mut(j * self.nb + k) = ck.clone();
            }
        }
        Ok(x)
    }
}

/// Kernel and cokernel vanishing of an explicit map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoCheck {
    pub injective: bool,
    pub surjective: bool,
}

impl IsoCheck {
    pub fn of(map: &ModuleMap) -> Result<Self> {
        Ok(IsoCheck {
            injective: map.is_injective()?,
            surjective: map.is_surjective()?,
        })
    }

    pub fn is_iso(&self) -> bool {
        self.injective && self.surjective
    }
}

/// The map `source → Hom(A, B)` sending `s` to `a_j ↦ pair(s, a_j)`.
pub fn pairing_map(
    source: &PresentedModule,
    ev: &HomEvaluator,
    pair: impl Fn(&Vector, &Vector) -> Vector,
) -> Result<ModuleMap> {
    let mut images = Vec::with_capacity(source.gens().len());
    for s in source.gens() {
        let values: Vec<Vector> = ev.source_gens().iter().map(|a| pair(s, a)).collect();
        images.push(ev.coordinates(&values)?);
    }
    let degs = source.generator_degrees();
    let mut degree = 0;
    for (img, d) in images.iter().zip(&degs) {
        if let Some(e) = ev.module().ambient().degree_of(img)? {
            degree = e - d;
            break;
        }
    }
    Ok(ModuleMap::new(source, ev.module(), images, degree)?)
}

/// `0 → IF → M → W → 0` with `M ⊆ F` given by generators.
#[derive(Clone, Debug)]
pub struct IFreeApproximation {
    ctx: IContext,
    free: FreeModule,
    m: Submodule,
    w: PresentedModule,
}

impl IFreeApproximation {
    pub fn new(ctx: &IContext, free: &FreeModule, m_gens: Vec<Vector>) -> Result<Self> {
        for g in &m_gens {
            free.check_len(g)?;
        }
        let m = Submodule::new(free, m_gens)?;
        let i_f = ideal_times(ctx.ideal(), free);
        for g in &i_f {
            if !m.contains(g)? {
                return Err(hypothesis(
                    "containment",
                    format!("I·F ⊄ M: {} is missing", g.display(ctx.ring())),
                ));
            }
        }
        let w = PresentedModule::new(free, m.gens().to_vec(), i_f)?;
        Ok(IFreeApproximation {
            ctx: ctx.clone(),
            free: free.clone(),
            m,
            w,
        })
    }

    /// `M = F`.
    pub fn trivial(ctx: &IContext, free: &FreeModule) -> Result<Self> {
        Self::new(ctx, free, free.basis_vectors())
    }

    /// `M = IF`, so `W = 0`.
    pub fn degenerate(ctx: &IContext, free: &FreeModule) -> Result<Self> {
        Self::new(ctx, free, ideal_times(ctx.ideal(), free))
    }

    pub fn context(&self) -> &IContext {
        &self.ctx
    }

    pub fn free(&self) -> &FreeModule {
        &self.free
    }

    pub fn m(&self) -> &Submodule {
        &self.m
    }

    /// `M` as an `R`-module.
    pub fn m_module(&self) -> PresentedModule {
        PresentedModule::from_submodule(&self.m)
    }

    /// `W = M/IF`.
    pub fn w(&self) -> &PresentedModule {
        &self.w
    }

    /// `κ(m) = ι^{-1}(x·m)/x` on the generators of `M`, for a nonzero `x ∈ I`.
    pub fn kappa(&self, x: &Polynomial) -> Result<Vec<Vector>> {
        if x.is_zero() || !self.ctx.ideal().contains(x)? {
            return Err(hypothesis("kappa", "x must be a nonzero element of I"));
        }
        let i_f = Submodule::new(&self.free, ideal_times(self.ctx.ideal(), &self.free))?;
        let mut out = Vec::with_capacity(self.m.gens().len());
        for m in self.m.gens() {
            let xm = m.scale(x);
            if !i_f.contains(&xm)? {
                return Err(CoreError::Counterexample("x·M ⊄ IF".into()));
            }
            let comps = xm
                .comps()
                .iter()
                .map(|c| c.exact_div(x).expect("x divides x·m"))
                .collect();
            out.push(Vector::from_comps(comps));
        }
        Ok(out)
    }

    /// `κ` for the two lowest-degree generators of `I`, checked to agree
    /// with each other and with the inclusion `M ⊆ F`.
    pub fn kappa_checked(&self) -> Result<Vec<Vector>> {
        let mut gens = self.ctx.ideal().minimal_generators()?;
        gens.truncate(2);
        let mut first: Option<Vec<Vector>> = None;
        for x in &gens {
            let k = self.kappa(x)?;
            if k.as_slice() != self.m.gens() {
                return Err(CoreError::Counterexample(
                    "κ differs from the inclusion".into(),
                ));
            }
            if let Some(f) = &first {
                if f != &k {
                    return Err(CoreError::Counterexample("κ depends on x".into()));
                }
            }
            first = Some(k);
        }
        first.ok_or_else(|| hypothesis("kappa", "I has no generators"))
    }

    /// `M^I = {ψ ∈ F^∨ : ψ(M) ⊆ I}` with `V = F^∨/M^I`.
    pub fn i_dual(&self) -> Result<IDual> {
        let dual = self.free.dual();
        let m_i = annihilating_pairings(&dual, self.m.gens(), self.ctx.ideal())?;
        let v = PresentedModule::new(&dual, dual.basis_vectors(), m_i.clone())?;
        let ker_alpha_bar =
            PresentedModule::new(&dual, m_i.clone(), ideal_times(self.ctx.ideal(), &dual))?;
        Ok(IDual {
            dual: dual.clone(),
            m_i: Submodule::new(&dual, m_i)?,
            v,
            ker_alpha_bar,
        })
    }

    /// `M^{II} = {m ∈ F : ψ(m) ∈ I for ψ ∈ M^I}`.
    pub fn double_dual(&self, d: &IDual) -> Result<Submodule> {
        let gens = annihilating_pairings(&self.free, d.m_i.gens(), self.ctx.ideal())?;
        Ok(Submodule::new(&self.free, gens)?)
    }

    /// Reflexivity two ways: `M^{II} = M`, and bijectivity of the
    /// evaluation map `W → Hom(V, R/I)`, `m ↦ (g ↦ g(m))`.
    pub fn reflexivity(&self, d: &IDual) -> Result<Reflexivity> {
        let double_dual_equal = self.double_dual(d)?.equals(&self.m)?;
        let ev = HomEvaluator::new(&d.v, &self.ctx.quotient())?;
        let map = pairing_map(&self.w, &ev, |m, g| Vector::scalar(dual_pairing(g, m)))?;
        let evaluation = IsoCheck::of(&map)?;
        if double_dual_equal != evaluation.is_iso() {
            return Err(CoreError::Counterexample(format!(
                "M^II = M is {double_dual_equal} but W → Hom(V, R/I) is {evaluation:?}"
            )));
        }
        Ok(Reflexivity {
            double_dual_equal,
            evaluation,
        })
    }

    pub fn is_i_reflexive(&self) -> Result<bool> {
        Ok(self.reflexivity(&self.i_dual()?)?.double_dual_equal)
    }

    /// `ν: V → Hom(W, R/I)`, `g ↦ (w ↦ g(w))`.
    pub fn nu(&self, d: &IDual) -> Result<ModuleMap> {
        let ev = HomEvaluator::new(&self.w, &self.ctx.quotient())?;
        pairing_map(&d.v, &ev, |g, w| Vector::scalar(dual_pairing(g, w)))
    }

    /// The `J`-restriction `M_J = IF :_M J`.
    pub fn j_restrict(&self, j: &Ideal) -> Result<IFreeApproximation> {
        let i = self.ctx.ideal();
        if !j.contains_ideal(i)? {
            return Err(hypothesis("containment", "I ⊄ J"));
        }
        if !j.is_unit() {
            let dim_i = quotient_dimension(i);
            let dim_j = quotient_dimension(j);
            if dim_i != dim_j {
                return Err(hypothesis(
                    "dimension",
                    format!("dim R/I = {dim_i:?} but dim R/J = {dim_j:?}"),
                ));
            }
            let n = self.ctx.ring().nvars();
            let pdim = minimal_resolution(&j.quotient_ring())?.pdim().unwrap_or(0);
            if Some(n - pdim) != dim_j {
                return Err(hypothesis("cohen-macaulay", "R/J is not Cohen–Macaulay"));
            }
        }
        let i_f = ideal_times(i, &self.free);
        let colon = ops::colon(&self.free, &i_f, j.gens())?;
        let mut gens = ops::intersect(&self.free, &colon, self.m.gens())?;
        gens.extend(i_f);
        let gens = ops::minimal_generators(&self.free, &gens, &[])?;
        IFreeApproximation::new(&self.ctx, &self.free, gens)
    }

    /// Series comparison of `Ext^{k-1}(M, R)` against `ker ᾱ` and
    /// `Ext^k(M, R)` against `coker ν`, both twisted by the degree of the
    /// last syzygy of `R/I`.
    pub fn ext_comparison(&self, d: &IDual) -> Result<ExtComparison> {
        let k = self.ctx.k();
        let m = self.m_module();
        let r = PresentedModule::free(&FreeModule::standard(self.ctx.ring(), 1));
        let res = minimal_resolution(&m)?;
        let twist = -self.ctx.top_degree();
        let ext_km1 = hilbert_series(&ext_from_resolution(&res, &r, k - 1)?);
        let ker_alpha_bar = hilbert_series(&d.ker_alpha_bar).shift(twist);
        let ext_k_module = ext_from_resolution(&res, &r, k)?;
        let ext_k = hilbert_series(&ext_k_module);
        let coker_nu = hilbert_series(&self.nu(d)?.cokernel()?).shift(twist);
        Ok(ExtComparison {
            twist,
            ext_k_zero: ext_k_module.is_zero()?,
            nu_surjective: coker_nu.is_zero(),
            ext_km1,
            ker_alpha_bar,
            ext_k,
            coker_nu,
        })
    }

    /// Exactness of `0 ← V ← F^∨ ← M^I ← 0` and `I·V = 0`, `I·W = 0`.
    pub fn exactness(&self, d: &IDual) -> Result<Exactness> {
        let alpha = ModuleMap::new(
            &PresentedModule::free(&d.dual),
            &d.v,
            d.dual.basis_vectors(),
            0,
        )?;
        let ker = alpha.kernel()?;
        let kernel_is_image = ker.span().equals(&d.m_i)?;
        let i = self.ctx.ideal();
        Ok(Exactness {
            kernel_is_image,
            alpha_surjective: alpha.is_surjective()?,
            v_annihilated: d.v.annihilator()?.contains_ideal(i)?,
            w_annihilated: self.w.annihilator()?.contains_ideal(i)?,
        })
    }

    /// The depth criterion for `V` and the bounds on `pdim M` from `W`.
    pub fn freeness_analysis(&self) -> Result<FreenessRecord> {
        if self.w.is_zero()? {
            return Err(hypothesis("nonzero W", "W = M/IF is zero"));
        }
        let d = self.i_dual()?;
        let refl = self.reflexivity(&d)?;
        if !refl.double_dual_equal {
            return Err(hypothesis("reflexive", "M is not I-reflexive"));
        }
        self.record(&d, refl)
    }

    fn record(&self, d: &IDual, refl: Reflexivity) -> Result<FreenessRecord> {
        let k = self.ctx.k();
        let n = self.ctx.ring().nvars();
        let m_res = minimal_resolution(&self.m_module())?;
        let gdim = m_res.pdim().unwrap_or(0);
        let w_pdim = minimal_resolution(&self.w)?.pdim();
        let v_pdim = minimal_resolution(&d.v)?.pdim();
        let v_zero = d.v.is_zero()?;
        let w_mcm = w_pdim == Some(k);
        let v_mcm = v_pdim == Some(k);
        let alpha_bar_injective = d.ker_alpha_bar.is_zero()?;
        let depth_criterion = v_mcm == (gdim + 1 <= k);
        let mut gdim_bounds = true;
        if w_mcm {
            gdim_bounds &= gdim <= k;
            if !alpha_bar_injective {
                gdim_bounds &= gdim + 1 >= k;
            }
        }
        let record = FreenessRecord {
            k,
            gdim,
            betti: m_res.betti(),
            w_nonzero: !self.w.is_zero()?,
            w_depth: w_pdim.map(|p| n - p),
            w_mcm,
            v_depth: v_pdim.map(|p| n - p),
            v_dim: hilbert_series(&d.v).dimension(),
            v_zero,
            v_mcm,
            reflexivity: refl,
            alpha_bar_injective,
            depth_criterion,
            gdim_bounds,
        };
        if !depth_criterion || !gdim_bounds {
            return Err(CoreError::Counterexample(format!(
                "freeness record violates the biconditional: {record:?}"
            )));
        }
        Ok(record)
    }

    /// Freeness analysis of the `J`-restriction, with reflexivity
    /// preservation and the duality `W_T ≅ Hom(V^T, ω_T)`,
    /// `ω_T = (I : J)/I`.
    pub fn restricted_analysis(&self, j: &Ideal) -> Result<RestrictedRecord> {
        let mj = self.j_restrict(j)?;
        if mj.w.is_zero()? {
            return Err(hypothesis("nonzero W", "the restriction W_T is zero"));
        }
        let parent_reflexive = self.is_i_reflexive()?;
        let record = mj.freeness_analysis()?;
        let reflexivity_preserved = !parent_reflexive || record.reflexivity.double_dual_equal;
        let omega_ideal = self.ctx.ideal().colon(j)?;
        let omega_t = self.ctx.ideal_mod(&omega_ideal)?;
        let d = mj.i_dual()?;
        let ev = HomEvaluator::new(&d.v, &omega_t)?;
        let map = pairing_map(&mj.w, &ev, |m, g| Vector::scalar(dual_pairing(g, m)))?;
        Ok(RestrictedRecord {
            m_j: mj.m.clone(),
            record,
            reflexivity_preserved,
            duality: IsoCheck::of(&map)?,
            omega_ideal,
        })
    }
}

/// `I·e_j` for every generator of `I` and basis vector of `F`.
pub fn ideal_times(i: &Ideal, free: &FreeModule) -> Vec<Vector> {
    let mut out = Vec::new();
    for g in i.gens() {
        for j in 0..free.rank() {
            out.push(free.basis(j).scale(g));
        }
    }
    out
}

/// Minimal generators of `{u ∈ U : ⟨u, v⟩ ∈ I for all v}` where `U` is
/// paired coefficientwise
/// with the ambient of the `vs`.
pub fn annihilating_pairings(u: &FreeModule, vs: &[Vector], i: &Ideal) -> Result<Vec<Vector>> {
    let ring = u.ring();
    let target = FreeModule::standard(ring, 1);
    let modulo: Vec<Vector> = i.gens().iter().cloned().map(Vector::scalar).collect();
    let blocks: Vec<Block> = vs
        .iter()
        .map(|v| {
            let images = (0..u.rank())
                .map(|l| Vector::scalar(v.comp(l).clone()))
                .collect();
            Block::new(&target, images, modulo.clone())
        })
        .collect();
    let ker = blocks::kernel(u, &blocks)?;
    Ok(ops::minimal_generators(u, &ker, &[])?)
}

#[derive(Clone, Debug)]
pub struct IDual {
    pub dual: FreeModule,
    pub m_i: Submodule,
    /// `V = F^∨ / M^I`.
    pub v: PresentedModule,
    /// `ker ᾱ = M^I / IF^∨`.
    pub ker_alpha_bar: PresentedModule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Reflexivity {
    pub double_dual_equal: bool,
    pub evaluation: IsoCheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exactness {
    pub kernel_is_image: bool,
    pub alpha_surjective: bool,
    pub v_annihilated: bool,
    pub w_annihilated: bool,
}

impl Exactness {
    pub fn holds(&self) -> bool {
        self.kernel_is_image && self.alpha_surjective && self.v_annihilated && self.w_annihilated
    }
}

#[derive(Clone, Debug)]
pub struct ExtComparison {
    /// Shift applied to the `ᾱ` and `ν` sides.
    pub twist: i64,
    pub ext_km1: HilbertSeries,
    pub ker_alpha_bar: HilbertSeries,
    pub ext_k: HilbertSeries,
    pub coker_nu: HilbertSeries,
    pub ext_k_zero: bool,
    pub nu_surjective: bool,
}

impl ExtComparison {
    pub fn holds(&self) -> bool {
        self.ext_km1 == self.ker_alpha_bar
            && self.ext_k == self.coker_nu
            && self.ext_k_zero == self.nu_surjective
    }
}

#[derive(Clone, Debug)]
pub struct FreenessRecord {
    pub k: usize,
    /// `pdim_R M`, which is the Gorenstein dimension over `R`.
    pub gdim: usize,
    pub betti: BettiTable,
    pub w_nonzero: bool,
    pub w_depth: Option<usize>,
    pub w_mcm: bool,
    pub v_depth: Option<usize>,
    pub v_dim: Option<usize>,
    pub v_zero: bool,
    pub v_mcm: bool,
    pub reflexivity: Reflexivity,
    pub alpha_bar_injective: bool,
    pub depth_criterion: bool,
    pub gdim_bounds: bool,
}

#[derive(Clone, Debug)]
pub struct RestrictedRecord {
    pub m_j: Submodule,
    pub record: FreenessRecord,
    pub reflexivity_preserved: bool,
    pub duality: IsoCheck,
    /// `I : J`, whose quotient by `I` is `ω_T` up to twist.
    pub omega_ideal: Ideal,
}

#[cfg(test)]
mod tests {
    use super::*;
    use mlog_kernel::{parse_polynomial, RingContext};

    fn ideal(r: &Ring, s: &[&str]) -> Ideal {
        Ideal::new(
            r,
            s.iter().map(|p| parse_polynomial(p, r).unwrap()).collect(),
        )
        .unwrap()
    }

    fn xyz() -> Ring {
        RingContext::standard(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn context_accepts_complete_intersections() {
        let r = xyz();
        let c = IContext::new(ideal(&r, &["x", "y"])).unwrap();
        assert_eq!(c.k(), 2);
        assert_eq!(c.betti().totals(), vec![1, 2, 1]);
        assert_eq!(c.top_degree(), 2);
    }

    #[test]
    fn context_rejects_bad_ideals() {
        let r = xyz();
        let e = IContext::new(ideal(&r, &["x"])).unwrap_err();
        assert!(e.to_string().starts_with("height"));
        // Not Cohen–Macaulay: embedded component.
        let e = IContext::new(ideal(&r, &["x^2", "x*y", "x*z", "y*z"])).unwrap_err();
        assert!(e.to_string().contains("height") || e.to_string().contains("cohen"));
        // Cohen–Macaulay of type two.
        let e = IContext::new(ideal(&r, &["x^2", "x*y", "y^2"])).unwrap_err();
        assert!(e.to_string().starts_with("gorenstein"), "{e}");
        assert!(IContext::new(Ideal::unit(&r)).is_err());
    }

    #[test]
    fn approximation_checks_containment() {
        let r = xyz();
        let c = IContext::new(ideal(&r, &["x", "y"])).unwrap();
        let f = FreeModule::standard(&r, 1);
        let z = Vector::scalar(parse_polynomial("z", &r).unwrap());
        let e = IFreeApproximation::new(&c, &f, vec![z.clone()]).unwrap_err();
        assert!(e.to_string().starts_with("containment"));
        let mut gens = ideal_times(c.ideal(), &f);
        gens.push(z);
        let a = IFreeApproximation::new(&c, &f, gens).unwrap();
        let w = a.w();
        assert_eq!(w.minimal_generators().unwrap().len(), 1);
        assert!(w.annihilator().unwrap().equals(c.ideal()).unwrap());
    }

    #[test]
    fn nonzerodivisor_prefers_sums_only_when_needed() {
        let r = xyz();
        let i = ideal(&r, &["x*y", "z"]);
        let cands: Vec<Polynomial> = (0..3).map(Polynomial::var).collect();
        let f = nonzerodivisor_search(&cands, &i).unwrap().unwrap();
        assert_eq!(f.display(&r), "x + y");
    }
}
