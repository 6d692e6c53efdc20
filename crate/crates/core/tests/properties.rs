mod common;

use common::*;
use mlog_core::logforms::{LogGeometry, ResidueSymbol};
use mlog_core::Exterior;
use mlog_kernel::poly::rat;
use mlog_kernel::{Polynomial, RingContext, Vector};
use proptest::prelude::*;

/// Homogeneous combination `Σ c_i m_i g_i` of generators with monomial multipliers.
fn combination(
    g: &LogGeometry,
    gens: &[Vector],
    ambient_q: usize,
    picks: &[(usize, i64, u32)],
    theta: bool,
) -> Vector {
    let e = g.exterior();
    let free = if theta {
        e.theta(ambient_q)
    } else {
        e.omega(ambient_q)
    };
    let degs: Vec<i64> = gens
        .iter()
        .map(|v| free.degree_of(v).unwrap().unwrap())
        .collect();
    let target = degs.iter().max().copied().unwrap_or(0) + 2;
    let mut out = Vector::zero(free.rank());
    for &(i, c, salt) in picks {
        let i = i % gens.len();
        let mons = mlog_core::logforms::monomials_of_degree(g.ring(), target - degs[i]);
        if mons.is_empty() {
            continue;
        }
        let m = mons[salt as usize % mons.len()];
        out = &out + &gens[i].scale(&Polynomial::monomial(m, rat(c)));
    }
    out
}

fn corpus(i: usize) -> (LogGeometry, usize) {
    match i % 4 {
        0 => (two_lines(), 2),
        1 => (line_in_two_lines(), 2),
        2 => (monomial_curve(), 2),
        _ => (koszul(), 3),
    }
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64, u32)>> {
    proptest::collection::vec((0usize..16, -3i64..=3, 0u32..64), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fields_pair_logarithmic_forms_into_the_ideal(which in 0usize..4, a in picks(), d in picks()) {
        let (g, q) = corpus(which);
        let forms = g.omega_log(q, true).unwrap().numerator;
        let fields = g.der_log_x(q).unwrap();
        let a = combination(&g, forms.gens(), q, &a, false);
        let d = combination(&g, fields.gens(), q, &d, true);
        prop_assert!(g.i_c().contains(&g.exterior().pair(&d, &a)).unwrap());
        prop_assert!(g.linked().contains(&g.exterior().pair(&d, &a)).unwrap());
    }

    #[test]
    fn residue_symbol_is_the_class_of_the_numerator(which in 0usize..4, a in picks()) {
        let (g, q) = corpus(which);
        let forms = g.omega_log(q, true).unwrap().numerator;
        let a = combination(&g, forms.gens(), q, &a, false);
        let r = g.residue(q, &a).unwrap();
        let own = ResidueSymbol { p: q - g.k(), form: a.clone() };
        prop_assert!(g.symbols_equal(&r.symbol, &own).unwrap());
        for x in g.i_x().gens() {
            let s = ResidueSymbol { p: q - g.k(), form: r.symbol.form.scale(x) };
            prop_assert!(g.symbol_is_zero(&s).unwrap());
        }
    }

    #[test]
    fn wedge_is_graded_commutative(p in 0usize..=2, q in 0usize..=2, ca in picks(), cb in picks()) {
        let r = RingContext::standard(&["x", "y", "z", "w"]).unwrap();
        let e = Exterior::new(&r);
        let build = |deg: usize, cs: &[(usize, i64, u32)]| {
            let mut v = Vector::zero(e.rank(deg));
            for &(i, c, _) in cs {
                v = &v + &e.omega(deg).basis(i % e.rank(deg)).scale(&Polynomial::constant(rat(c)));
            }
            v
        };
        let a = build(p, &ca);
        let b = build(q, &cb);
        let ab = e.wedge(p, &a, q, &b);
        let ba = e.wedge(q, &b, p, &a);
        if (p * q) % 2 == 0 {
            prop_assert_eq!(ab, ba);
        } else {
            prop_assert_eq!(ab, -&ba);
        }
    }
}
