//! Differential forms `Ω^q` and multi-vector fields `Θ^q` with polynomial
//! coefficients, in the basis `dx_J` resp. `∂_J` for increasing `J`.

use mlog_kernel::{FreeModule, Polynomial, Ring, Vector};

#[derive(Clone, Debug)]
pub struct Exterior {
    ring: Ring,
    subsets: Vec<Vec<Vec<usize>>>,
}

fn subsets_of(n: usize, q: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, q, &mut Vec::new(), &mut out);
    out
}

/// Sign of `dx_a ∧ dx_b` relative to `dx_{a ∪ b}`, or `None` on overlap.
fn merge_sign(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut inversions = 0usize;
    for &i in a {
        for &j in b {
            if i == j {
                return None;
            }
            if i > j {
                inversions += 1;
            }
        }
    }
    let mut u: Vec<usize> = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    Some((u, inversions % 2 == 1))
}

impl Exterior {
    pub fn new(ring: &Ring) -> Self {
        let n = ring.nvars();
        Exterior {
            ring: ring.clone(),
            subsets: (0..=n).map(|q| subsets_of(n, q)).collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.nvars()
    }

    /// Increasing index sets of length `q`, in lexicographic order.
    pub fn subsets(&self, q: usize) -> &[Vec<usize>] {
        self.subsets.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, q: usize) -> usize {
        self.subsets(q).len()
    }

    pub fn index(&self, q: usize, set: &[usize]) -> usize {
        self.subsets(q)
            .binary_search_by(|s| s.as_slice().cmp(set))
            .expect("increasing index set")
    }

    fn weight(&self, set: &[usize]) -> i64 {
        set.iter().map(|&i| i64::from(self.ring.weights()[i])).sum()
    }

    /// `Ω^q`: `dx_J` has degree `Σ_{j∈J} w_j`.
    pub fn omega(&self, q: usize) -> FreeModule {
        let t = self.subsets(q).iter().map(|s| self.weight(s)).collect();
        FreeModule::new(&self.ring, t)
    }

    /// `Θ^q`: `∂_J` has degree `-Σ_{j∈J} w_j`.
    pub fn theta(&self, q: usize) -> FreeModule {
        self.omega(q).dual()
    }

    pub fn basis(&self, q: usize, set: &[usize]) -> Vector {
        Vector::unit(self.rank(q), self.index(q, set))
    }

    pub fn d(&self, f: &Polynomial) -> Vector {
        Vector::from_comps((0..self.n()).map(|i| f.derivative(i)).collect())
    }

    /// `a ∧ b` for `a ∈ Ω^p`, `b ∈ Ω^q`.
    pub fn wedge(&self, p: usize, a: &Vector, q: usize, b: &Vector) -> Vector {
        let mut out = Vector::zero(self.rank(p + q));
        if p + q > self.n() {
            return out;
        }
        for (i, si) in self.subsets(p).iter().enumerate() {
            let ai = a.comp(i);
            if ai.is_zero() {
                continue;
            }
            for (j, sj) in self.subsets(q).iter().enumerate() {
                let bj = b.comp(j);
                if bj.is_zero() {
                    continue;
                }
                let Some((u, neg)) = merge_sign(si, sj) else {
                    continue;
                };
                let t = ai * bj;
                let slot = out.comp_mut(self.index(p + q, &u));
                *slot = if neg { &*slot - &t } else { &*slot + &t };
            }
        }
        out
    }

    /// `ω_1 ∧ … ∧ ω_m` for 1-forms.
    pub fn wedge_all(&self, forms: &[Vector]) -> Vector {
        let mut acc = Vector::scalar(Polynomial::one());
        for (p, f) in forms.iter().enumerate() {
            acc = self.wedge(p, &acc, 1, f);
        }
        acc
    }

    /// `dh_1 ∧ … ∧ dh_k`.
    pub fn d_wedge(&self, hs: &[Polynomial]) -> Vector {
        let ds: Vec<Vector> = hs.iter().map(|h| self.d(h)).collect();
        self.wedge_all(&ds)
    }

    /// The contraction pairing `⟨δ, ω⟩` of `Θ^q` with `Ω^q`.
    pub fn pair(&self, delta: &Vector, omega: &Vector) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, b) in delta.comps().iter().zip(omega.comps()) {
            if !a.is_zero() && !b.is_zero() {
                out = &out + &(a * b);
            }
        }
        out
    }

    /// `I·Ω^q` (or `I·Θ^q`): every generator times every basis vector.
    pub fn ideal_times_basis(&self, rank: usize, gens: &[Polynomial]) -> Vec<Vector> {
        let mut out = Vec::with_capacity(rank * gens.len());
        for g in gens {
            for j in 0..rank {
                let mut v = Vector::zero(rank);
                *v.comp_mut(j) = g.clone();
                out.push(v);
            }
        }
        out
    }

    /// Human-readable form, e.g. `y*dx^dz + x*dy^dz`.
    pub fn display_form(&self, q: usize, v: &Vector) -> String {
        self.display_with(q, v, "d", "^")
    }

    pub fn display_field(&self, q: usize, v: &Vector) -> String {
        self.display_with(q, v, "D", "^")
    }

    fn display_with(&self, q: usize, v: &Vector, prefix: &str, sep: &str) -> String {
        let names = self.ring.names();
        let mut parts = Vec::new();
        for (j, s) in self.subsets(q).iter().enumerate() {
            let c = v.comp(j);
            if c.is_zero() {
                continue;
            }
            let basis: Vec<String> = s.iter().map(|&i| format!("{prefix}{}", names[i])).collect();
            let b = basis.join(sep);
            if b.is_empty() {
                parts.push(c.display(&self.ring));
            } else if c.is_one() {
                parts.push(b);
            } else if c.len() > 1 {
                parts.push(format!("({})*{b}", c.display(&self.ring)));
            } else {
                parts.push(format!("{}*{b}", c.display(&self.ring)));
            }
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            match (i, p.strip_prefix('-')) {
                (0, _) => out.push_str(p),
                (_, Some(rest)) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                _ => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mlog_kernel::{parse_polynomial, RingContext};

    fn xyz() -> Ring {
        RingContext::standard(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn subsets_are_lexicographic() {
        let e = Exterior::new(&xyz());
        assert_eq!(e.subsets(2), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(e.rank(0), 1);
        assert_eq!(e.rank(4), 0);
        assert_eq!(e.index(2, &[1, 2]), 2);
    }

    #[test]
    fn wedge_is_alternating() {
        let r = xyz();
        let e = Exterior::new(&r);
        let dx = e.basis(1, &[0]);
        let dz = e.basis(1, &[2]);
        let xz = e.wedge(1, &dx, 1, &dz);
        let zx = e.wedge(1, &dz, 1, &dx);
        assert_eq!(xz, -&zx);
        assert!(e.wedge(1, &dx, 1, &dx).is_zero());
        let dy = e.basis(1, &[1]);
        let top = e.wedge(2, &xz, 1, &dy);
        assert_eq!(top, -&e.basis(3, &[0, 1, 2]));
    }

    #[test]
    fn product_differential() {
        let r = xyz();
        let e = Exterior::new(&r);
        let h = vec![
            parse_polynomial("x*y", &r).unwrap(),
            parse_polynomial("z", &r).unwrap(),
        ];
        let dh = e.d_wedge(&h);
        assert_eq!(e.display_form(2, &dh), "y*dx^dz + x*dy^dz");
        assert_eq!(e.omega(2).degree_of(&dh).unwrap(), Some(3));
        let neg = e
            .basis(2, &[0, 1])
            .scale(&parse_polynomial("-2*x", &r).unwrap());
        assert_eq!(
            e.display_form(2, &(&dh + &neg)),
            "-2*x*dx^dy + y*dx^dz + x*dy^dz"
        );
    }

    #[test]
    fn pairing_of_dual_bases() {
        let r = xyz();
        let e = Exterior::new(&r);
        let d = e.basis(2, &[0, 2]);
        assert!(e.pair(&d, &e.basis(2, &[0, 2])).is_one());
        assert!(e.pair(&d, &e.basis(2, &[1, 2])).is_zero());
        assert_eq!(e.theta(2).twists(), &[-2, -2, -2]);
    }
}
