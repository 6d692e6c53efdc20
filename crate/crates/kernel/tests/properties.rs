use mlog_kernel::hilbert::{hilbert_series, series_from_resolution};
use mlog_kernel::poly::rat;
use mlog_kernel::{
    minimal_resolution, Coeff, FreeModule, Ideal, Monomial, Polynomial, RingContext, Vector,
};
use num_traits::Zero;
use proptest::prelude::*;

fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            prefix.push(d);
            out.push(Monomial::from_exponents(prefix));
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Rank of a list of polynomials as vectors over Q.
fn rank(polys: &[Polynomial], basis: &[Monomial]) -> usize {
    let mut rows: Vec<Vec<Coeff>> = polys
        .iter()
        .map(|p| basis.iter().map(|m| p.coeff(m)).collect())
        .collect();
    let mut r = 0;
    for col in 0..basis.len() {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let pr = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pr[col];
            for (a, b) in row.iter_mut().zip(&pr) {
                *a = &*a - &(&f * b);
            }
        }
        r += 1;
    }
    r
}

/// `dim_Q (R/I)_d` by spanning `I_d` with monomial multiples of the generators.
fn hilbert_function_by_linear_algebra(gens: &[(u32, Polynomial)], d: u32) -> i64 {
    let basis = monomials_of_degree(3, d);
    let mut span = Vec::new();
    for (g_deg, g) in gens {
        if *g_deg <= d {
            for m in monomials_of_degree(3, d - g_deg) {
                span.push(g.mul_monomial(&m, &rat(1)));
            }
        }
    }
    basis.len() as i64 - rank(&span, &basis) as i64
}

fn homogeneous_poly() -> impl Strategy<Value = (u32, Polynomial)> {
    (1u32..=3).prop_flat_map(|d| {
        let mons = monomials_of_degree(3, d);
        let len = mons.len();
        proptest::collection::vec(-2i64..=2, len).prop_map(move |cs| {
            let mut p = Polynomial::zero();
            for (m, c) in mons.iter().zip(cs) {
                p.add_term(*m, rat(c));
            }
            if p.is_zero() {
                p = Polynomial::monomial(mons[0], rat(1));
            }
            (d, p)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hilbert_function_matches_linear_algebra(gens in proptest::collection::vec(homogeneous_poly(), 1..4)) {
        let r = RingContext::standard(&["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, gens.iter().map(|g| g.1.clone()).collect()).unwrap();
        let m = i.quotient_ring();
        let hs = hilbert_series(&m);
        let values = hs.coefficients(0, 5);
        for d in 0..=5u32 {
            prop_assert_eq!(values[d as usize], hilbert_function_by_linear_algebra(&gens, d));
        }
        let res = minimal_resolution(&m).unwrap();
        prop_assert!(res.is_complex());
        prop_assert_eq!(series_from_resolution(&r, &res), hs);
    }

    #[test]
    fn groebner_basis_is_consistent(gens in proptest::collection::vec(homogeneous_poly(), 1..4)) {
        let r = RingContext::standard(&["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, gens.iter().map(|g| g.1.clone()).collect()).unwrap();
        let gb = i.as_submodule().gb();
        prop_assert!(gb.verify());
        for (_, g) in &gens {
            prop_assert!(i.contains(g).unwrap());
        }
        for e in gb.elements() {
            prop_assert!(gb.normal_form(&e).unwrap().is_zero());
        }
        let lead = gb.leading_terms();
        for (a, (_, ma)) in lead.iter().enumerate() {
            for (b, (_, mb)) in lead.iter().enumerate() {
                prop_assert!(a == b || !ma.divides(mb));
            }
        }
    }

    #[test]
    fn colon_elements_multiply_into_ideal(
        gens in proptest::collection::vec(homogeneous_poly(), 1..3),
        j in homogeneous_poly(),
    ) {
        let r = RingContext::standard(&["x", "y", "z"]).unwrap();
        let i = Ideal::new(&r, gens.iter().map(|g| g.1.clone()).collect()).unwrap();
        let jj = Ideal::new(&r, vec![j.1.clone()]).unwrap();
        let c = i.colon(&jj).unwrap();
        prop_assert!(c.contains_ideal(&i).unwrap());
        for g in c.gens() {
            prop_assert!(i.contains(&(g * &j.1)).unwrap());
        }
    }

    #[test]
    fn syzygies_are_relations(gens in proptest::collection::vec(homogeneous_poly(), 1..4)) {
        let r = RingContext::standard(&["x", "y", "z"]).unwrap();
        let f = FreeModule::standard(&r, 1);
        let vs: Vec<Vector> = gens.iter().map(|g| Vector::scalar(g.1.clone())).collect();
        for s in mlog_kernel::ops::syzygies(&f, &vs, &[]).unwrap() {
            prop_assert!(Vector::combination(1, s.comps(), &vs).is_zero());
        }
    }
}
