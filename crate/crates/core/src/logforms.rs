//! Multi-logarithmic forms along a reduced complete intersection
//! `C = V(h_1, …, h_k)` and along a Cohen–Macaulay `X ⊆ C` of the same
//! dimension, with their dual multi-vector fields, residues, regular forms
//! and Jacobian modules.
//!
//! Forms with simple poles along `h = h_1⋯h_k` are stored by numerator:
//! the module `Ω^q(log X/C)(-D)` is `{a ∈ Ω^q : a/h is logarithmic}`, which
//! always contains `I_C·Ω^q`.

use std::sync::OnceLock;

use mlog_kernel::hilbert::hilbert_series;
use mlog_kernel::homological::{height, hom, is_regular_sequence, quotient_dimension};
use mlog_kernel::ops::Elimination;
use mlog_kernel::{
    minimal_resolution, FreeModule, Ideal, ModuleMap, Monomial, Polynomial, PresentedModule, Ring,
    Submodule, Vector,
};

use crate::approximation::{
    annihilating_pairings, nonzerodivisor_search, IContext, IFreeApproximation,
};
use crate::blocks::{self, Block};
use crate::error::{hypothesis, CoreError, Result};
use crate::forms::Exterior;

/// Monomials of weighted degree `d`, in a fixed order.
pub fn monomials_of_degree(ring: &Ring, d: i64) -> Vec<Monomial> {
    fn rec(w: &[u32], i: usize, left: i64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == w.len() {
            if left == 0 {
                out.push(Monomial::from_exponents(exps));
            }
            return;
        }
        let wi = i64::from(w[i]);
        let mut e = 0;
        while e * wi <= left {
            exps.push(e as u32);
            rec(w, i + 1, left - e * wi, exps, out);
            exps.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    if d >= 0 {
        rec(ring.weights(), 0, d, &mut Vec::new(), &mut out);
    }
    out
}

/// Certificates recorded while validating a geometry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryCertificates {
    pub k: usize,
    pub n: usize,
    pub dim: usize,
    /// `pdim R/I_X`, equal to `k` for Cohen–Macaulay `X`.
    pub x_pdim: usize,
    /// `ht(I_C + minors of the Jacobian of h)`, larger than `k` iff `C` is reduced.
    pub singular_height: usize,
    pub x_equals_c: bool,
}

/// `α_X ∈ Ω^k` with `f·α_X ≡ b·dh̲ mod I_C·Ω^k`.
#[derive(Clone, Debug)]
pub struct FundamentalForm {
    pub alpha: Vector,
    pub degree: i64,
    pub a: Polynomial,
    pub b: Polynomial,
    pub f: Polynomial,
}

/// Validated input: `I_C = (h_1, …, h_k)` and `I_X ⊇ I_C`.
#[derive(Clone, Debug)]
pub struct LogGeometry {
    ext: Exterior,
    h: Vec<Polynomial>,
    ic: IContext,
    ix: Ideal,
    ix_gens: Vec<Polynomial>,
    linked: Ideal,
    certificates: GeometryCertificates,
    degree_bound: i64,
    alpha: FundamentalForm,
    multipliers: OnceLock<Vec<Polynomial>>,
}

impl LogGeometry {
    pub fn new(ring: &Ring, h: Vec<Polynomial>, x_gens: Vec<Polynomial>) -> Result<Self> {
        Self::with_degree_bound(ring, h, x_gens, None)
    }

    /// As `new`, with an explicit bound for the fundamental-form search;
    /// the default is twice the largest generator degree.
    pub fn with_degree_bound(
        ring: &Ring,
        h: Vec<Polynomial>,
        x_gens: Vec<Polynomial>,
        degree_bound: Option<i64>,
    ) -> Result<Self> {
        let k = h.len();
        let n = ring.nvars();
        if k < 2 {
            return Err(hypothesis(
                "codimension",
                format!(
                    "k = {k}; hypersurfaces are covered by the classical theory of free divisors, this tool requires k ≥ 2"
                ),
            ));
        }
        if !is_regular_sequence(ring, &h)? {
            return Err(hypothesis(
                "regular sequence",
                "h_1, …, h_k is not a regular sequence",
            ));
        }
        let ic_ideal = Ideal::new(ring, h.clone())?;
        let ix = Ideal::new(ring, x_gens.clone())?;
        if !ix.contains_ideal(&ic_ideal)? {
            return Err(hypothesis("containment", "I_C is not contained in I_X"));
        }
        let dim = n - k;
        match quotient_dimension(&ix) {
            Some(d) if d == dim => {}
            d => {
                return Err(hypothesis(
                    "dimension",
                    format!("dim R/I_X = {d:?} but dim R/I_C = {dim}"),
                ))
            }
        }
        let x_pdim = minimal_resolution(&ix.quotient_ring())?.pdim().unwrap_or(0);
        if x_pdim != k {
            return Err(hypothesis(
                "cohen-macaulay",
                format!("pdim R/I_X = {x_pdim}, expected {k}"),
            ));
        }
        let ext = Exterior::new(ring);
        let dh = ext.d_wedge(&h);
        let mut sing = h.clone();
        sing.extend(dh.comps().iter().filter(|c| !c.is_zero()).cloned());
        let singular_height = height(&Ideal::new(ring, sing)?);
        if singular_height <= k {
            return Err(hypothesis(
                "reduced",
                format!("singular locus of C has height {singular_height} ≤ k = {k}"),
            ));
        }
        let ic = IContext::new(ic_ideal)?;
        let x_equals_c = ic.ideal().contains_ideal(&ix)?;
        let ix_gens = ix.minimal_generators()?;
        let linked = ic.ideal().colon(&ix)?;
        let max_deg = h
            .iter()
            .chain(&x_gens)
            .filter_map(|p| p.homogeneous_degree(ring).ok().flatten())
            .max()
            .unwrap_or(1);
        let degree_bound = degree_bound.unwrap_or(2 * max_deg);
        let placeholder = FundamentalForm {
            degree: ext.omega(k).degree_of(&dh)?.unwrap_or(0),
            alpha: dh,
            a: Polynomial::zero(),
            b: Polynomial::one(),
            f: Polynomial::one(),
        };
        let mut g = LogGeometry {
            ext,
            h,
            ic,
            ix,
            ix_gens,
            linked,
            certificates: GeometryCertificates {
                k,
                n,
                dim,
                x_pdim,
                singular_height,
                x_equals_c,
            },
            degree_bound,
            alpha: placeholder,
            multipliers: OnceLock::new(),
        };
        if !x_equals_c {
            let first = g.fundamental_form_candidates(1)?;
            g.alpha = first.into_iter().next().ok_or(CoreError::SearchExhausted {
                what: "nonzerodivisor a + b with a ∈ I_X, b ∈ I_C : I_X",
                bound: degree_bound,
            })?;
        }
        g.check_fundamental_form(&g.alpha)?;
        Ok(g)
    }

    /// The same geometry with another certified fundamental form.
    pub fn with_fundamental_form(&self, alpha: FundamentalForm) -> Result<Self> {
        self.check_fundamental_form(&alpha)?;
        let mut g = self.clone();
        g.alpha = alpha;
        g.multipliers = OnceLock::new();
        Ok(g)
    }

    pub fn ring(&self) -> &Ring {
        self.ext.ring()
    }

    pub fn exterior(&self) -> &Exterior {
        &self.ext
    }

    pub fn h(&self) -> &[Polynomial] {
        &self.h
    }

    /// `h = h_1⋯h_k`, the equation of the divisor `D`.
    pub fn h_product(&self) -> Polynomial {
        self.h.iter().fold(Polynomial::one(), |acc, p| &acc * p)
    }

    pub fn k(&self) -> usize {
        self.certificates.k
    }

    pub fn n(&self) -> usize {
        self.certificates.n
    }

    pub fn context(&self) -> &IContext {
        &self.ic
    }

    pub fn i_c(&self) -> &Ideal {
        self.ic.ideal()
    }

    pub fn i_x(&self) -> &Ideal {
        &self.ix
    }

    /// `I_C : I_X`, the ideal of the linked space; `ω_X` is its image in `R/I_C`.
    pub fn linked(&self) -> &Ideal {
        &self.linked
    }

    pub fn certificates(&self) -> &GeometryCertificates {
        &self.certificates
    }

    pub fn degree_bound(&self) -> i64 {
        self.degree_bound
    }

    pub fn fundamental_form(&self) -> &FundamentalForm {
        &self.alpha
    }

    /// `dh_1 ∧ … ∧ dh_k`.
    pub fn dh(&self) -> Vector {
        self.ext.d_wedge(&self.h)
    }

    /// Generators of `I_C·Ω^q`.
    pub fn ic_forms(&self, q: usize) -> Vec<Vector> {
        self.ext
            .ideal_times_basis(self.ext.rank(q), self.i_c().gens())
    }

    pub fn ic_forms_module(&self, q: usize) -> Result<Submodule> {
        Ok(Submodule::new(&self.ext.omega(q), self.ic_forms(q))?)
    }

    fn check_q(&self, q: usize) -> Result<()> {
        if q > self.n() {
            return Err(hypothesis("degree", format!("q = {q} > n = {}", self.n())));
        }
        Ok(())
    }

    fn wedge_block(&self, p: usize, a: &Vector, q: usize, ideal: &Ideal) -> Block {
        let target = self.ext.omega(p + q);
        let images = (0..self.ext.rank(q))
            .map(|j| self.ext.wedge(p, a, q, &self.ext.omega(q).basis(j)))
            .collect();
        let modulo = self.ext.ideal_times_basis(target.rank(), ideal.gens());
        Block::new(&target, images, modulo)
    }

    fn multiply_block(&self, g: &Polynomial, q: usize, ideal: &Ideal) -> Block {
        let target = self.ext.omega(q);
        let images = target.basis_vectors().iter().map(|e| e.scale(g)).collect();
        let modulo = self.ext.ideal_times_basis(target.rank(), ideal.gens());
        Block::new(&target, images, modulo)
    }

    /// Conditions `g·a ∈ I_C·Ω^q` and `dg ∧ a ∈ I_C·Ω^{q+1}` for the generators of `I_X`.
    fn regular_blocks(&self, q: usize) -> Vec<Block> {
        let mut out = Vec::new();
        for g in &self.ix_gens {
            out.push(self.multiply_block(g, q, self.i_c()));
            out.push(self.wedge_block(1, &self.ext.d(g), q, self.i_c()));
        }
        out
    }

    /// `Ω^q(log C)(-D)` or, if `relative`, `Ω^q(log X/C)(-D)`, by numerators.
    pub fn omega_log(&self, q: usize, relative: bool) -> Result<LogFormModule> {
        self.check_q(q)?;
        let source = self.ext.omega(q);
        let mut bl: Vec<Block> = self
            .h
            .iter()
            .map(|hi| self.wedge_block(1, &self.ext.d(hi), q, self.i_c()))
            .collect();
        if relative {
            bl.extend(self.regular_blocks(q));
        }
        let ker = blocks::kernel(&source, &bl)?;
        let gens = mlog_kernel::ops::minimal_generators(&source, &ker, &[])?;
        Ok(LogFormModule {
            q,
            relative,
            numerator: Submodule::new(&source, gens)?,
        })
    }

    /// `Der^q(-log C) = {δ : ⟨δ, dh̲ ∧ Ω^{q-k}⟩ ⊆ I_C}`; all of `Θ^q` for `q < k`.
    pub fn der_log_c(&self, q: usize) -> Result<Submodule> {
        self.check_q(q)?;
        self.contraction_kernel(q, &[self.dh()], self.i_c())
    }

    /// `{δ ∈ Θ^q : ⟨δ, ω ∧ dx_L⟩ ∈ I for ω ∈ forms, |L| = q - k}`.
    fn contraction_kernel(&self, q: usize, forms: &[Vector], ideal: &Ideal) -> Result<Submodule> {
        let theta = self.ext.theta(q);
        let k = self.k();
        if q < k {
            return Ok(Submodule::whole(&theta));
        }
        let target = FreeModule::standard(self.ring(), 1);
        let modulo: Vec<Vector> = ideal.gens().iter().cloned().map(Vector::scalar).collect();
        let mut bl = Vec::new();
        for w in forms {
            for l in self.ext.subsets(q - k) {
                let wl = self.ext.wedge(k, w, q - k, &self.ext.basis(q - k, l));
                let images = wl.comps().iter().cloned().map(Vector::scalar).collect();
                bl.push(Block::new(&target, images, modulo.clone()));
            }
        }
        let ker = blocks::kernel(&theta, &bl)?;
        let gens = mlog_kernel::ops::minimal_generators(&theta, &ker, &[])?;
        Ok(Submodule::new(&theta, gens)?)
    }

    /// `Der^q(-log X)` from `∧^k dI_X` modulo `I_X`, and from `α_X` modulo
    /// `I_X` and modulo `I_C`.
    pub fn der_log_x_variants(&self, q: usize) -> Result<DerVariants> {
        self.check_q(q)?;
        let k = self.k();
        let mut minors = Vec::new();
        for s in subsets(self.ix_gens.len(), k) {
            let gs: Vec<Polynomial> = s.iter().map(|&i| self.ix_gens[i].clone()).collect();
            let w = self.ext.d_wedge(&gs);
            if !w.is_zero() {
                minors.push(w);
            }
        }
        let alpha = std::slice::from_ref(&self.alpha.alpha);
        Ok(DerVariants {
            from_differentials: self.contraction_kernel(q, &minors, &self.ix)?,
            from_alpha_mod_x: self.contraction_kernel(q, alpha, &self.ix)?,
            from_alpha_mod_c: self.contraction_kernel(q, alpha, self.i_c())?,
        })
    }

    /// `Der^q(-log X)`, after checking that all three descriptions agree.
    pub fn der_log_x(&self, q: usize) -> Result<Submodule> {
        let v = self.der_log_x_variants(q)?;
        if !v.agree()? {
            return Err(CoreError::Counterexample(format!(
                "the descriptions of Der^{q}(-log X) disagree"
            )));
        }
        Ok(v.from_differentials)
    }

    /// Certified fundamental forms, one per nonzerodivisor `f = a + b`
    /// found in increasing degree, at most `limit` of them.
    pub fn fundamental_form_candidates(&self, limit: usize) -> Result<Vec<FundamentalForm>> {
        let ring = self.ring();
        let k = self.k();
        if self.certificates.x_equals_c {
            return Ok(vec![self.alpha.clone()]);
        }
        let dh = self.dh();
        let omega = self.ext.omega(k);
        let dh_deg = omega.degree_of(&dh)?.unwrap_or(0);
        let mut b_gens = Vec::new();
        for b in self.linked.minimal_generators()? {
            if !self.i_c().contains(&b)? {
                b_gens.push((b.homogeneous_degree(ring)?.unwrap_or(0), b));
            }
        }
        let mut a_gens = Vec::new();
        for a in &self.ix_gens {
            if !self.i_c().contains(a)? {
                a_gens.push((a.homogeneous_degree(ring)?.unwrap_or(0), a.clone()));
            }
        }
        let lowest = b_gens
            .iter()
            .map(|e| e.0)
            .min()
            .into_iter()
            .chain(a_gens.iter().map(|e| e.0).min())
            .max()
            .unwrap_or(0);
        let multiples = |gens: &[(i64, Polynomial)], d: i64| {
            let mut out = Vec::new();
            for (e, g) in gens {
                for m in monomials_of_degree(ring, d - e) {
                    out.push(g.mul_monomial(&m, &mlog_kernel::poly::rat(1)));
                    if out.len() >= 12 {
                        return out;
                    }
                }
            }
            out
        };
        let mut out = Vec::new();
        for d in lowest..=self.degree_bound {
            let bs = multiples(&b_gens, d);
            let as_ = multiples(&a_gens, d);
            for b in &bs {
                for a in &as_ {
                    let f = a + b;
                    if f.is_zero() || out.iter().any(|c: &FundamentalForm| c.f == f) {
                        continue;
                    }
                    if nonzerodivisor_search(std::slice::from_ref(&f), self.i_c())?.is_none() {
                        continue;
                    }
                    let block = self.multiply_block(&f, k, self.i_c());
                    let Some(alpha) = blocks::lift(&omega, &block, &dh.scale(b), d)? else {
                        continue;
                    };
                    let alpha = self.ic_forms_module(k)?.normal_form(&alpha)?;
                    let ff = FundamentalForm {
                        alpha,
                        degree: dh_deg,
                        a: a.clone(),
                        b: b.clone(),
                        f,
                    };
                    self.check_fundamental_form(&ff)?;
                    out.push(ff);
                    if out.len() >= limit {
                        return Ok(out);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Checks the certificate of `ff`: the regularity conditions along `X`,
    /// `α ∈ (I_C : I_X)·Ω^k`, and `f·α ≡ b·dh̲` modulo the `f`-saturation
    /// of `I_C·Ω^k`, which must equal `I_C·Ω^k`.
    pub fn check_fundamental_form(&self, ff: &FundamentalForm) -> Result<()> {
        let k = self.k();
        let fail = |what: &str| {
            Err(CoreError::Counterexample(format!(
                "fundamental form: {what}"
            )))
        };
        if self.certificates.x_equals_c {
            if ff.alpha != self.dh() {
                return fail("α_C must be dh_1 ∧ … ∧ dh_k");
            }
            return Ok(());
        }
        let icf = self.ic_forms_module(k)?;
        let sat = icf.saturate(&Ideal::new(self.ring(), vec![ff.f.clone()])?)?;
        if !sat.equals(&icf)? {
            return fail("I_C·Ω^k has f-torsion");
        }
        let diff = &ff.alpha.scale(&ff.f) - &self.dh().scale(&ff.b);
        if !icf.contains(&diff)? {
            return fail("f·α ≢ b·dh̲");
        }
        if !self.ix.contains(&ff.a)? || !self.linked.contains(&ff.b)? {
            return fail("a ∉ I_X or b ∉ I_C : I_X");
        }
        let linked_forms = Submodule::new(
            &self.ext.omega(k),
            self.ext
                .ideal_times_basis(self.ext.rank(k), self.linked.gens()),
        )?;
        if !linked_forms.contains(&ff.alpha)? {
            return fail("α ∉ (I_C : I_X)·Ω^k");
        }
        for g in &self.ix_gens {
            if !icf.contains(&ff.alpha.scale(g))? {
                return fail("I_X·α ⊄ I_C·Ω^k");
            }
            let w = self.ext.wedge(1, &self.ext.d(g), k, &ff.alpha);
            if !self.ic_forms_module(k + 1)?.contains(&w)? {
                return fail("dI_X ∧ α ⊄ I_C·Ω^{k+1}");
            }
        }
        Ok(())
    }

    /// Candidate multipliers for residues: products of powers (up to the
    /// third) of `f`, of a nonzerodivisor among the coefficients of `α_X`
    /// and of one among the variables, by increasing degree.
    fn multipliers(&self) -> Result<&[Polynomial]> {
        if let Some(m) = self.multipliers.get() {
            return Ok(m);
        }
        let ring = self.ring();
        let vars: Vec<Polynomial> = (0..self.n()).map(Polynomial::var).collect();
        let coeffs: Vec<Polynomial> = self
            .alpha
            .alpha
            .comps()
            .iter()
            .filter(|c| !c.is_zero())
            .cloned()
            .collect();
        let mut bases: Vec<Polynomial> = Vec::new();
        let f = self.alpha.f.clone();
        let found = [
            (!f.is_one()).then_some(f),
            nonzerodivisor_search(&coeffs, self.i_c())?,
            nonzerodivisor_search(&vars, self.i_c())?,
        ];
        for b in found.into_iter().flatten() {
            if !b.is_one() && !bases.contains(&b) {
                bases.push(b);
            }
        }
        let mut out: Vec<(i64, Polynomial)> = vec![(0, Polynomial::one())];
        for b in &bases {
            let d = b.homogeneous_degree(ring)?.unwrap_or(0);
            let mut next = Vec::new();
            for (e, g) in &out {
                let mut p = g.clone();
                for i in 1..=3 {
                    p = &p * b;
                    next.push((e + i * d, p.clone()));
                }
            }
            out.extend(next);
        }
        out.sort_by_key(|e| e.0);
        let mut seen: Vec<Polynomial> = Vec::new();
        for (_, g) in out {
            if !seen.contains(&g) {
                seen.push(g);
            }
        }
        Ok(self.multipliers.get_or_init(|| seen))
    }

    /// Residue of `a/h` for `a ∈ Ω^q(log X/C)(-D)`: a nonzerodivisor `g` and
    /// `ξ ∈ Ω^{q-k}` with `g·a ≡ α_X ∧ ξ mod I_C·Ω^q`, and the symbol
    /// `[s; h̲]` with `g·s ≡ α_X ∧ ξ`.
    pub fn residue(&self, q: usize, a: &Vector) -> Result<Residue> {
        self.residue_with(q, a, None)
    }

    /// A second residue computation with a multiplier other than the one
    /// used by `first`.
    pub fn residue_alternative(&self, q: usize, a: &Vector, first: &Residue) -> Result<Residue> {
        self.residue_with(q, a, Some(&first.g))
    }

    fn residue_with(&self, q: usize, a: &Vector, exclude: Option<&Polynomial>) -> Result<Residue> {
        self.check_q(q)?;
        let k = self.k();
        if q < k {
            return Err(hypothesis(
                "degree",
                format!("residues need q ≥ k, got q = {q}"),
            ));
        }
        let p = q - k;
        let alpha = &self.alpha.alpha;
        let source = self.ext.omega(p);
        let block = self.wedge_block(k, alpha, p, self.i_c());
        let lifter = Elimination::new(
            &source,
            &block.target.shifted(-self.alpha.degree),
            &block.images,
            &block.modulo,
        )?;
        let icf = self.ic_forms_module(q)?;
        for g in self.multipliers()? {
            if Some(g) == exclude {
                continue;
            }
            let g = g.clone();
            let Some(xi) = lifter.lift(&a.scale(&g))? else {
                continue;
            };
            let wedge = self.ext.wedge(k, alpha, p, &xi);
            let s = if g.is_one() {
                wedge.clone()
            } else {
                let gdeg = g.homogeneous_degree(self.ring())?.unwrap_or(0);
                let mb = self.multiply_block(&g, q, self.i_c());
                blocks::lift(&self.ext.omega(q), &mb, &wedge, gdeg)?.ok_or_else(|| {
                    CoreError::Counterexample("α ∧ ξ is not divisible by g modulo I_C".into())
                })?
            };
            return Ok(Residue {
                g,
                xi,
                symbol: ResidueSymbol {
                    p,
                    form: icf.normal_form(&s)?,
                },
            });
        }
        Err(hypothesis(
            "residue",
            "no multiplier g found; the form is not logarithmic along X",
        ))
    }

    /// Whether `g_2·α∧ξ_1 ≡ g_1·α∧ξ_2` and the symbols agree.
    pub fn residues_agree(&self, q: usize, r1: &Residue, r2: &Residue) -> Result<bool> {
        let k = self.k();
        let alpha = &self.alpha.alpha;
        let w1 = self.ext.wedge(k, alpha, q - k, &r1.xi).scale(&r2.g);
        let w2 = self.ext.wedge(k, alpha, q - k, &r2.xi).scale(&r1.g);
        let icf = self.ic_forms_module(q)?;
        Ok(icf.contains(&(&w1 - &w2))? && self.symbols_equal(&r1.symbol, &r2.symbol)?)
    }

    /// `[s_1; h̲] = [s_2; h̲]` iff `s_1 - s_2 ∈ I_C·Ω^{p+k}`.
    pub fn symbols_equal(&self, s1: &ResidueSymbol, s2: &ResidueSymbol) -> Result<bool> {
        if s1.p != s2.p {
            return Ok(false);
        }
        self.ic_forms_module(s1.p + self.k())?
            .contains(&(&s1.form - &s2.form))
            .map_err(Into::into)
    }

    pub fn symbol_is_zero(&self, s: &ResidueSymbol) -> Result<bool> {
        Ok(self.ic_forms_module(s.p + self.k())?.contains(&s.form)?)
    }

    /// Regular meromorphic `p`-forms on `X` as symbols `[ξ; h̲]`:
    /// `{ξ ∈ Ω^{p+k} : I_X ξ ⊆ I_C Ω^{p+k}, dI_X ∧ ξ ⊆ I_C Ω^{p+k+1}}`
    /// modulo `I_C·Ω^{p+k}`.
    pub fn regular_forms(&self, p: usize) -> Result<RegularForms> {
        let q = p + self.k();
        self.check_q(q)?;
        let source = self.ext.omega(q);
        let ker = blocks::kernel(&source, &self.regular_blocks(q))?;
        let gens = mlog_kernel::ops::minimal_generators(&source, &ker, &self.ic_forms(q))?;
        let module = PresentedModule::new(&source, gens, self.ic_forms(q))?;
        Ok(RegularForms { p, module })
    }

    /// Whether the regular forms along `X` have the Hilbert series of
    /// `Hom_R(R/I_X, ω_C^p)`, with `ω_C^p` the regular forms along `C`.
    pub fn regular_forms_match_hom(&self, p: usize) -> Result<bool> {
        let q = p + self.k();
        let c = self.omega_log(q, false)?;
        let omega_c = PresentedModule::new(
            &self.ext.omega(q),
            c.numerator.gens().to_vec(),
            self.ic_forms(q),
        )?;
        let h = hom(&self.ix.quotient_ring(), &omega_c)?;
        let rf = self.regular_forms(p)?;
        Ok(hilbert_series(&h.module) == hilbert_series(&rf.module))
    }

    /// `{a ∈ Ω^q(log C)(-D) : I_X a ⊆ N}` for `N = I_C·Ω^q` and `N = I_X·Ω^q`,
    /// each compared with `Ω^q(log X/C)(-D)`.
    pub fn colon_law(&self, q: usize) -> Result<ColonLaw> {
        let omega = self.ext.omega(q);
        let c = self.omega_log(q, false)?.numerator;
        let x = self.omega_log(q, true)?.numerator;
        let by_c = self.ic_forms_module(q)?.colon(&self.ix)?.intersect(&c)?;
        let ixf = Submodule::new(
            &omega,
            self.ext.ideal_times_basis(omega.rank(), self.ix.gens()),
        )?;
        let by_x = ixf.colon(&self.ix)?.intersect(&c)?;
        Ok(ColonLaw {
            ic_variant: by_c.equals(&x)?,
            ix_variant: by_x.equals(&x)?,
        })
    }

    /// The fields `Σ_i (-1)^i ∂h_l/∂x_{j_i} ∂_{J∖j_i}` for `|J| = q + 1`.
    pub fn contracted_differentials(&self, q: usize) -> Vec<Vector> {
        let mut out = Vec::new();
        if q + 1 > self.n() {
            return out;
        }
        for hl in &self.h {
            for j in self.ext.subsets(q + 1) {
                let mut v = Vector::zero(self.ext.rank(q));
                for (i, &ji) in j.iter().enumerate() {
                    let c = hl.derivative(ji);
                    if c.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = j.iter().copied().filter(|&t| t != ji).collect();
                    let slot = v.comp_mut(self.ext.index(q, &rest));
                    *slot = if i % 2 == 0 { &*slot + &c } else { &*slot - &c };
                }
                if !v.is_zero() {
                    out.push(v);
                }
            }
        }
        out
    }

    /// The Jacobian module `α^X(Θ^q) ⊆ ⊕_{|L| = q-k} (R/I_X)·dx_L`.
    pub fn jacobian_module(&self, q: usize) -> Result<JacobianModule> {
        let k = self.k();
        self.check_q(q)?;
        if q < k {
            return Err(hypothesis(
                "degree",
                format!("the Jacobian module needs q ≥ k, got q = {q}"),
            ));
        }
        let p = q - k;
        let twists = self
            .ext
            .subsets(p)
            .iter()
            .map(|l| {
                let w: i64 = l.iter().map(|&i| i64::from(self.ring().weights()[i])).sum();
                -(self.alpha.degree + w)
            })
            .collect();
        let ambient = FreeModule::new(self.ring(), twists);
        let theta = self.ext.theta(q);
        let mut images = vec![Vector::zero(ambient.rank()); theta.rank()];
        for (li, l) in self.ext.subsets(p).iter().enumerate() {
            let wl = self
                .ext
                .wedge(k, &self.alpha.alpha, p, &self.ext.basis(p, l));
            for (j, img) in images.iter_mut().enumerate() {
                *img.comp_mut(li) = wl.comp(j).clone();
            }
        }
        let rels = self.ext.ideal_times_basis(ambient.rank(), self.ix.gens());
        let module = PresentedModule::new(&ambient, images.clone(), rels.clone())?;
        let free = PresentedModule::free(&theta);
        let contraction = ModuleMap::new(&free, &module, images.clone(), 0)?;
        let lifter = Elimination::new(&theta, &ambient, &images, &rels)?;
        Ok(JacobianModule {
            q,
            module,
            contraction,
            lifter,
        })
    }

    /// `⟨δ, a⟩ mod I_C`, checked to lie in `(I_C : I_X)/I_C`.
    pub fn pairing(&self, delta: &Vector, a: &Vector) -> Result<Polynomial> {
        let v = self.ext.pair(delta, a);
        if !self.linked.contains(&v)? {
            return Err(CoreError::Counterexample(
                "a pairing value lies outside I_C : I_X".into(),
            ));
        }
        Ok(self.i_c().reduce(&v)?)
    }

    /// `Ω^q(log X/C)(-D)` and `Der^q(-log X)` are each other's duals into `I_C`.
    pub fn sigma_dual_check(&self, q: usize) -> Result<SigmaDual> {
        let n = self.omega_log(q, true)?.numerator;
        let d = self.der_log_x(q)?;
        let fwd = annihilating_pairings(&self.ext.theta(q), n.gens(), self.i_c())?;
        let bwd = annihilating_pairings(&self.ext.omega(q), d.gens(), self.i_c())?;
        Ok(SigmaDual {
            forward: Submodule::new(&self.ext.theta(q), fwd)?.equals(&d)?,
            backward: Submodule::new(&self.ext.omega(q), bwd)?.equals(&n)?,
        })
    }

    /// The ends of the chains: for `q < k` the forms are `I_C·Ω^q` and the
    /// fields all of `Θ^q`; for `q = n` the forms are `Ω^n` and the fields
    /// `I_C·Θ^n`.
    pub fn endpoints(&self) -> Result<Endpoints> {
        let mut below_k = Vec::new();
        for q in 0..self.k() {
            let c = self.omega_log(q, false)?.numerator;
            let ok = c.equals(&self.ic_forms_module(q)?)? && self.der_log_c(q)?.is_whole();
            below_k.push((q, ok));
        }
        let n = self.n();
        let top_forms = self.omega_log(n, false)?.numerator.is_whole();
        let theta = self.ext.theta(n);
        let ic_theta = Submodule::new(
            &theta,
            self.ext.ideal_times_basis(theta.rank(), self.i_c().gens()),
        )?;
        let top_fields = self.der_log_c(n)?.equals(&ic_theta)?;
        Ok(Endpoints {
            below_k,
            top: top_forms && top_fields,
        })
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// A numerator module `I_C·Ω^q ⊆ N ⊆ Ω^q`.
#[derive(Clone, Debug)]
pub struct LogFormModule {
    pub q: usize,
    pub relative: bool,
    pub numerator: Submodule,
}

impl LogFormModule {
    /// `0 → I_C·Ω^q → N → W → 0` as an `I_C`-free approximation.
    pub fn approximation(&self, g: &LogGeometry) -> Result<IFreeApproximation> {
        IFreeApproximation::new(
            g.context(),
            &g.exterior().omega(self.q),
            self.numerator.gens().to_vec(),
        )
    }

    pub fn module(&self) -> PresentedModule {
        PresentedModule::from_submodule(&self.numerator)
    }
}

#[derive(Clone, Debug)]
pub struct DerVariants {
    pub from_differentials: Submodule,
    pub from_alpha_mod_x: Submodule,
    pub from_alpha_mod_c: Submodule,
}

impl DerVariants {
    pub fn agree(&self) -> Result<bool> {
        Ok(self.from_differentials.equals(&self.from_alpha_mod_x)?
            && self.from_differentials.equals(&self.from_alpha_mod_c)?)
    }
}

/// `[form; h_1, …, h_k]` with `form ∈ Ω^{p+k}`, reduced modulo `I_C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSymbol {
    pub p: usize,
    pub form: Vector,
}

#[derive(Clone, Debug)]
pub struct Residue {
    pub g: Polynomial,
    pub xi: Vector,
    pub symbol: ResidueSymbol,
}

/// Regular `p`-forms on `X` inside `Ω^{p+k} / I_C·Ω^{p+k}`.
#[derive(Clone, Debug)]
pub struct RegularForms {
    pub p: usize,
    pub module: PresentedModule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColonLaw {
    pub ic_variant: bool,
    pub ix_variant: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaDual {
    pub forward: bool,
    pub backward: bool,
}

impl SigmaDual {
    pub fn holds(&self) -> bool {
        self.forward && self.backward
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endpoints {
    pub below_k: Vec<(usize, bool)>,
    pub top: bool,
}

impl Endpoints {
    pub fn holds(&self) -> bool {
        self.top && self.below_k.iter().all(|e| e.1)
    }
}

/// `𝒥 = α^X(Θ^q)` with the contraction map `Θ^q → 𝒥`.
#[derive(Clone, Debug)]
pub struct JacobianModule {
    pub q: usize,
    pub module: PresentedModule,
    pub contraction: ModuleMap,
    lifter: Elimination,
}

impl JacobianModule {
    /// A field `δ` with `α^X(δ) = v`.
    pub fn preimage(&self, v: &Vector) -> Result<Option<Vector>> {
        Ok(self.lifter.lift(v)?)
    }

    /// The kernel of `Θ^q → 𝒥`.
    pub fn kernel(&self) -> Result<Submodule> {
        Ok(self.contraction.kernel()?.span().clone())
    }

    /// `pdim_R 𝒥`.
    pub fn pdim(&self) -> Result<usize> {
        Ok(minimal_resolution(&self.module)?.pdim().unwrap_or(0))
    }
}
