//! Gröbner bases of homogeneous submodules of graded free modules.
//!
//! Terms are compared by block (lower block is larger), then by total
//! weighted degree (monomial degree plus the twist of the basis position),
//! then reverse-lexicographically on exponents, then by position (lower
//! position is larger). With a single block this is the weight-graded
//! term-over-position order; with two blocks it eliminates the first block.
//!
//! Pairs are processed in increasing degree, inputs before pairs, ties broken
//! by index, so every run produces the same basis.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{KernelError, Result};
use crate::module::{FreeModule, Vector};
use crate::poly::{Coeff, Polynomial};
use crate::ring::{Monomial, Ring, MAX_VARS};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Key {
    block: Reverse<u8>,
    deg: i64,
    rev: [i16; MAX_VARS],
    comp: Reverse<u32>,
}

/// A monomial module order over a graded free module.
#[derive(Clone, Debug)]
pub struct ModuleOrder {
    ambient: FreeModule,
    blocks: Vec<u8>,
}

impl ModuleOrder {
    /// Weight-graded term-over-position order.
    pub fn graded(ambient: &FreeModule) -> Self {
        ModuleOrder {
            ambient: ambient.clone(),
            blocks: vec![0; ambient.rank()],
        }
    }

    /// Order eliminating the first `eliminated` positions: any term there is
    /// larger than every term in the remaining positions.
    pub fn elimination(ambient: &FreeModule, eliminated: usize) -> Self {
        let blocks = (0..ambient.rank())
            .map(|j| if j < eliminated { 0 } else { 1 })
            .collect();
        ModuleOrder {
            ambient: ambient.clone(),
            blocks,
        }
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn ring(&self) -> &Ring {
        self.ambient.ring()
    }

    fn key(&self, comp: u32, mono: &Monomial) -> Key {
        let ring = self.ambient.ring();
        let n = ring.nvars();
        let mut rev = [0i16; MAX_VARS];
        let raw = mono.raw();
        for i in 0..n {
            rev[i] = -(raw[n - 1 - i] as i16);
        }
        Key {
            block: Reverse(self.blocks[comp as usize]),
            deg: ring.degree(mono) + self.ambient.twists()[comp as usize],
            rev,
            comp: Reverse(comp),
        }
    }

    /// Compare two terms `(position, monomial)`.
    pub fn compare(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        self.key(a.0 as u32, a.1).cmp(&self.key(b.0 as u32, b.1))
    }
}

#[derive(Clone, Debug)]
struct Term {
    key: Key,
    mono: Monomial,
    comp: u32,
    coeff: Coeff,
}

/// Internal element: terms sorted by decreasing key.
type Elem = Vec<Term>;

fn elem_from_vector(ord: &ModuleOrder, v: &Vector) -> Elem {
    let mut terms: Elem = Vec::new();
    for (j, p) in v.comps().iter().enumerate() {
        for (m, c) in p.terms() {
            terms.push(Term {
                key: ord.key(j as u32, m),
                mono: *m,
                comp: j as u32,
                coeff: c.clone(),
            });
        }
    }
    terms.sort_by(|a, b| b.key.cmp(&a.key));
    terms
}

fn elem_to_vector(rank: usize, e: &Elem) -> Vector {
    let mut comps = vec![Polynomial::zero(); rank];
    for t in e {
        comps[t.comp as usize].add_term(t.mono, t.coeff.clone());
    }
    Vector::from_comps(comps)
}

fn elem_degree(e: &Elem) -> Option<i64> {
    e.first().map(|t| t.key.deg)
}

/// `a - c·m·b`, where `a` and the shifted `b` are both sorted descending.
fn sub_mul(ord: &ModuleOrder, a: &[Term], b: &[Term], m: &Monomial, c: &Coeff) -> Elem {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut bi = b.iter().map(|t| {
        let mono = t.mono.mul(m);
        Term {
            key: ord.key(t.comp, &mono),
            mono,
            comp: t.comp,
            coeff: -(&t.coeff * c),
        }
    });
    let mut ai = a.iter();
    let mut na = ai.next();
    let mut nb = bi.next();
    loop {
        match (na, nb.take()) {
            (None, None) => break,
            (Some(x), None) => {
                out.push(x.clone());
                na = ai.next();
            }
            (None, Some(y)) => {
                out.push(y);
                nb = bi.next();
            }
            (Some(x), Some(y)) => match x.key.cmp(&y.key) {
                Ordering::Greater => {
                    out.push(x.clone());
                    na = ai.next();
                    nb = Some(y);
                }
                Ordering::Less => {
                    out.push(y);
                    nb = bi.next();
                }
                Ordering::Equal => {
                    let s = &x.coeff + &y.coeff;
                    if !s.is_zero() {
                        out.push(Term { coeff: s, ..y });
                    }
                    na = ai.next();
                    nb = bi.next();
                }
            },
        }
    }
    out
}

fn make_monic(e: &mut Elem) {
    if let Some(lc) = e.first().map(|t| t.coeff.clone()) {
        if !lc.is_one() {
            let inv = Coeff::one() / lc;
            for t in e.iter_mut() {
                t.coeff = &t.coeff * &inv;
            }
        }
    }
}

/// Basis storage shared by the engine and the finished basis.
#[derive(Clone, Debug, Default)]
struct Basis {
    elems: Vec<Elem>,
    by_comp: Vec<Vec<usize>>,
}

impl Basis {
    fn new(rank: usize) -> Self {
        Basis {
            elems: Vec::new(),
            by_comp: vec![Vec::new(); rank],
        }
    }

    fn push(&mut self, e: Elem) -> usize {
        let idx = self.elems.len();
        self.by_comp[e[0].comp as usize].push(idx);
        self.elems.push(e);
        idx
    }

    fn find_reducer(&self, t: &Term, skip: Option<usize>) -> Option<usize> {
        self.by_comp[t.comp as usize]
            .iter()
            .copied()
            .find(|&i| Some(i) != skip && self.elems[i][0].mono.divides(&t.mono))
    }

    /// Full reduction of `f`; `skip` excludes one basis element (interreduction).
    fn reduce(&self, ord: &ModuleOrder, mut f: Elem, skip: Option<usize>) -> Elem {
        let mut i = 0;
        while i < f.len() {
            match self.find_reducer(&f[i], skip) {
                None => i += 1,
                Some(r) => {
                    let g = &self.elems[r];
                    let m = g[0].mono.quotient_of(&f[i].mono).expect("divisibility");
                    let c = f[i].coeff.clone();
                    let tail = sub_mul(ord, &f[i + 1..], &g[1..], &m, &c);
                    f.truncate(i);
                    f.extend(tail);
                }
            }
        }
        f
    }
}

/// Incremental graded Buchberger engine with degree truncation.
#[derive(Clone, Debug)]
pub struct GroebnerEngine {
    ord: Arc<ModuleOrder>,
    basis: Basis,
    pairs: BTreeSet<(i64, usize, usize)>,
    pending: BTreeSet<(i64, usize)>,
    inputs: Vec<Option<Elem>>,
}

impl GroebnerEngine {
    pub fn new(order: ModuleOrder) -> Self {
        let rank = order.ambient.rank();
        GroebnerEngine {
            ord: Arc::new(order),
            basis: Basis::new(rank),
            pairs: BTreeSet::new(),
            pending: BTreeSet::new(),
            inputs: Vec::new(),
        }
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.ord
    }

    /// Queue a homogeneous generator. Zero vectors are ignored.
    pub fn add_generator(&mut self, v: &Vector) -> Result<()> {
        let Some(deg) = self.ord.ambient.degree_of(v)? else {
            return Ok(());
        };
        let e = elem_from_vector(&self.ord, v);
        let idx = self.inputs.len();
        self.inputs.push(Some(e));
        self.pending.insert((deg, idx));
        Ok(())
    }

    fn lcm_of(&self, i: usize, j: usize) -> Monomial {
        self.basis.elems[i][0]
            .mono
            .lcm(&self.basis.elems[j][0].mono)
    }

    fn insert(&mut self, e: Elem) {
        let comp = e[0].comp;
        let u = e[0].mono;
        let t = self.basis.elems.len();
        let same: Vec<usize> = self.basis.by_comp[comp as usize].clone();

        // Criterion B on queued pairs in the same position.
        let doomed: Vec<(i64, usize, usize)> = self
            .pairs
            .iter()
            .copied()
            .filter(|&(_, i, j)| {
                if self.basis.elems[i][0].comp != comp {
                    return false;
                }
                let l = self.lcm_of(i, j);
                u.divides(&l)
                    && self.basis.elems[i][0].mono.lcm(&u) != l
                    && self.basis.elems[j][0].mono.lcm(&u) != l
            })
            .collect();
        for p in doomed {
            self.pairs.remove(&p);
        }

        self.basis.push(e);

        // Criteria M and F on the new pairs.
        let cands: Vec<(usize, Monomial)> = same
            .iter()
            .map(|&i| (i, self.basis.elems[i][0].mono.lcm(&u)))
            .collect();
        let twist = self.ord.ambient.twists()[comp as usize];
        for (pos, (i, l)) in cands.iter().enumerate() {
            let dominated = cands.iter().any(|(_, l2)| l2 != l && l2.divides(l));
            let duplicate = cands[..pos].iter().any(|(_, l2)| l2 == l);
            if dominated || duplicate {
                continue;
            }
            let deg = self.ord.ring().degree(l) + twist;
            self.pairs.insert((deg, *i, t));
        }
    }

    fn s_vector(&self, i: usize, j: usize) -> Elem {
        let l = self.lcm_of(i, j);
        let gi = &self.basis.elems[i];
        let gj = &self.basis.elems[j];
        let mi = gi[0].mono.quotient_of(&l).unwrap();
        let mj = gj[0].mono.quotient_of(&l).unwrap();
        let a = sub_mul(&self.ord, &[], gi, &mi, &-Coeff::one());
        sub_mul(&self.ord, &a, gj, &mj, &Coeff::one())
    }

    fn next_degree(&self) -> Option<i64> {
        let a = self.pending.first().map(|p| p.0);
        let b = self.pairs.first().map(|p| p.0);
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    /// Process every queued input and pair of degree at most `limit`
    /// (everything, if `None`).
    pub fn complete(&mut self, limit: Option<i64>) {
        while let Some(d) = self.next_degree() {
            if limit.is_some_and(|l| d > l) {
                break;
            }
            let f = if self.pending.first().is_some_and(|p| p.0 == d) {
                let (_, idx) = self.pending.pop_first().unwrap();
                self.inputs[idx].take().unwrap()
            } else {
                let (_, i, j) = self.pairs.pop_first().unwrap();
                self.s_vector(i, j)
            };
            let mut r = self.basis.reduce(&self.ord, f, None);
            if !r.is_empty() {
                make_monic(&mut r);
                self.insert(r);
            }
        }
    }

    /// Whether all work up to degree `d` is done.
    pub fn is_complete_to(&self, d: i64) -> bool {
        self.next_degree().is_none_or(|n| n > d)
    }

    /// Reduce `v` by the current basis. Only meaningful as a normal form once
    /// the engine is complete up to the degree of `v`.
    pub fn reduce(&self, v: &Vector) -> Result<Vector> {
        self.ord.ambient.check_len(v)?;
        let e = elem_from_vector(&self.ord, v);
        let r = self.basis.reduce(&self.ord, e, None);
        Ok(elem_to_vector(self.ord.ambient.rank(), &r))
    }

    /// Membership test; completes the engine up to the degree of `v`.
    pub fn contains(&mut self, v: &Vector) -> Result<bool> {
        let Some(d) = self.ord.ambient.degree_of(v)? else {
            return Ok(true);
        };
        self.complete(Some(d));
        Ok(self.reduce(v)?.is_zero())
    }

    /// Run to completion and return the reduced basis.
    pub fn finish(mut self) -> GroebnerBasis {
        self.complete(None);
        let ord = self.ord.clone();
        let mut basis = self.basis;
        for i in 0..basis.elems.len() {
            let e = std::mem::take(&mut basis.elems[i]);
            let head = e[0].clone();
            let tail = basis.reduce(&ord, e[1..].to_vec(), Some(i));
            let mut full = vec![head];
            full.extend(tail);
            basis.elems[i] = full;
        }
        let mut elems = basis.elems;
        elems.sort_by(|a, b| a[0].key.cmp(&b[0].key));
        let mut out = Basis::new(ord.ambient.rank());
        for e in elems {
            out.push(e);
        }
        GroebnerBasis { ord, basis: out }
    }
}

/// A reduced Gröbner basis together with its order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ord: Arc<ModuleOrder>,
    basis: Basis,
}

impl GroebnerBasis {
    /// Gröbner basis in the graded term-over-position order.
    pub fn compute(ambient: &FreeModule, gens: &[Vector]) -> Result<Self> {
        Self::compute_with_order(ModuleOrder::graded(ambient), gens)
    }

    pub fn compute_with_order(order: ModuleOrder, gens: &[Vector]) -> Result<Self> {
        let mut eng = GroebnerEngine::new(order);
        for g in gens {
            eng.add_generator(g)?;
        }
        Ok(eng.finish())
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.ord
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ord.ambient
    }

    pub fn len(&self) -> usize {
        self.basis.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.elems.is_empty()
    }

    pub fn elements(&self) -> Vec<Vector> {
        let rank = self.ord.ambient.rank();
        self.basis
            .elems
            .iter()
            .map(|e| elem_to_vector(rank, e))
            .collect()
    }

    /// Degrees of the basis elements, in basis order.
    pub fn degrees(&self) -> Vec<i64> {
        self.basis
            .elems
            .iter()
            .map(|e| elem_degree(e).unwrap())
            .collect()
    }

    /// Leading terms as `(position, monomial)`.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.basis
            .elems
            .iter()
            .map(|e| (e[0].comp as usize, e[0].mono))
            .collect()
    }

    /// Position of the leading term of each element.
    pub fn leading_positions(&self) -> Vec<usize> {
        self.basis
            .elems
            .iter()
            .map(|e| e[0].comp as usize)
            .collect()
    }

    pub fn normal_form(&self, v: &Vector) -> Result<Vector> {
        self.ord.ambient.check_len(v)?;
        let e = elem_from_vector(&self.ord, v);
        let r = self.basis.reduce(&self.ord, e, None);
        Ok(elem_to_vector(self.ord.ambient.rank(), &r))
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Whether the basis contains an element whose leading term is a unit
    /// multiple of a basis vector in every position, i.e. spans the ambient.
    pub fn is_whole_ambient(&self) -> bool {
        (0..self.ord.ambient.rank()).all(|j| {
            self.basis.by_comp[j]
                .iter()
                .any(|&i| self.basis.elems[i][0].mono.is_one())
        })
    }

    /// Post-hoc Buchberger criterion: every S-vector reduces to zero.
    pub fn verify(&self) -> bool {
        let n = self.basis.elems.len();
        for i in 0..n {
            for j in i + 1..n {
                let (gi, gj) = (&self.basis.elems[i], &self.basis.elems[j]);
                if gi[0].comp != gj[0].comp {
                    continue;
                }
                let l = gi[0].mono.lcm(&gj[0].mono);
                let mi = gi[0].mono.quotient_of(&l).unwrap();
                let mj = gj[0].mono.quotient_of(&l).unwrap();
                let a = sub_mul(&self.ord, &[], gi, &mi, &-Coeff::one());
                let s = sub_mul(&self.ord, &a, gj, &mj, &Coeff::one());
                if !self.basis.reduce(&self.ord, s, None).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reject inhomogeneous generators, naming the first offender.
pub fn check_homogeneous(ambient: &FreeModule, gens: &[Vector]) -> Result<()> {
    for g in gens {
        ambient
            .degree_of(g)
            .map_err(|_| KernelError::NotHomogeneous(g.display(ambient.ring())))?;
    }
    Ok(())
}
