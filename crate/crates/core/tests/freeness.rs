mod common;

use common::*;
use mlog_core::freeness::{
    approximation_properties, chain_properties, duality_certificate, ext_check, freeness_verdict,
    fundamental_form_ratio, jacobian_modules_correspond, residue_properties,
};
use mlog_core::logforms::LogGeometry;
use mlog_kernel::hilbert::hilbert_series;
use mlog_kernel::{minimal_resolution, parse_polynomial, Submodule};

#[test]
fn two_lines_is_free() {
    let g = two_lines();
    let v = freeness_verdict(&g, 2).unwrap();
    assert_eq!((v.pdim, v.k), (1, 2));
    assert!(v.free && v.jacobian_mcm);
    assert_eq!(v.jacobian_depth, Some(1));
    let d = duality_certificate(&g, 2, true).unwrap();
    assert!(d.holds() && d.reverse.is_some());
}

#[test]
fn monomial_curve_is_free() {
    let g = monomial_curve();
    let rx = g.i_x().quotient_ring();
    let res = minimal_resolution(&rx).unwrap();
    // Hilbert–Burch: one relation matrix of size 3×2.
    assert_eq!(res.betti().totals(), vec![1, 3, 2]);
    assert_eq!(res.betti().degrees(1), vec![8, 9, 10]);
    assert_eq!(res.betti().degrees(2), vec![13, 14]);
    // The semigroup ⟨3, 4, 5⟩ misses only 1 and 2.
    let hf = hilbert_series(&rx).coefficients(0, 20);
    let semigroup: Vec<i64> = (0..=20).map(|d| i64::from(d != 1 && d != 2)).collect();
    assert_eq!(hf, semigroup);

    let v = freeness_verdict(&g, 2).unwrap();
    assert_eq!(v.pdim, 1);
    assert!(v.free && v.jacobian_mcm);
    assert!(duality_certificate(&g, 2, true).unwrap().holds());
    let e = ext_check(&g, 2).unwrap();
    assert!(e.holds());
    assert!(e.comparison.ext_k_zero);
}

#[test]
fn verdicts_outside_the_range_are_rejected() {
    let g = two_lines();
    for q in [0, 1, 3] {
        let e = freeness_verdict(&g, q).unwrap_err();
        assert!(e.to_string().starts_with("range"), "{e}");
    }
}

#[test]
fn isolated_surface_singularity_is_not_free() {
    let g = elliptic_cone();
    for q in [2, 3] {
        let v = freeness_verdict(&g, q).unwrap();
        assert_eq!(v.pdim, 2);
        assert!(!v.free && !v.jacobian_mcm);
        assert_eq!((v.jacobian_depth, v.jacobian_dim), (Some(1), Some(2)));
        let d = duality_certificate(&g, q, false).unwrap();
        assert!(d.forward.is_iso());
        let e = ext_check(&g, q).unwrap();
        assert!(e.holds() && !e.comparison.ext_k_zero);
    }
}

#[test]
fn verdict_does_not_depend_on_the_complete_intersection() {
    let (a, b) = (monomial_curve(), monomial_curve_alt());
    assert!(a
        .der_log_x(2)
        .unwrap()
        .equals(&b.der_log_x(2).unwrap())
        .unwrap());
    // α_C = 5x²y dx∧dy - 4yz dx∧dz + 3xz dy∧dz and α_C' = 5x²z dx∧dy
    // - 4z² dx∧dz + 3yz dy∧dz, so t/s = α_C/α_C' = y/z on X.
    let (s, t) = fundamental_form_ratio(&a, &b).unwrap().unwrap();
    let ring = a.ring();
    let y = parse_polynomial("y", ring).unwrap();
    let z = parse_polynomial("z", ring).unwrap();
    assert!(a.i_x().contains(&(&(&s * &y) - &(&t * &z))).unwrap());
    assert!(jacobian_modules_correspond(&a, &b, 2).unwrap());
    // Without the ratio the two images differ.
    let (ja, jb) = (a.jacobian_module(2).unwrap(), b.jacobian_module(2).unwrap());
    let moved = Submodule::new(ja.module.ambient(), jb.module.span().gens().to_vec()).unwrap();
    assert!(!ja.module.span().equals(&moved).unwrap());
    assert_eq!(
        freeness_verdict(&a, 2).unwrap().free,
        freeness_verdict(&b, 2).unwrap().free
    );
}

fn assert_same_under_alpha_change(g: &LogGeometry, q: usize) {
    let cands = g.fundamental_form_candidates(2).unwrap();
    assert_eq!(cands.len(), 2);
    assert_ne!(cands[0].f, cands[1].f);
    let h = g.with_fundamental_form(cands[1].clone()).unwrap();
    assert!(g
        .der_log_x(q)
        .unwrap()
        .equals(&h.der_log_x(q).unwrap())
        .unwrap());
    let (jg, jh) = (g.jacobian_module(q).unwrap(), h.jacobian_module(q).unwrap());
    assert!(jg.module.span().equals(jh.module.span()).unwrap());
    for a in g.omega_log(q, true).unwrap().numerator.gens() {
        let (rg, rh) = (g.residue(q, a).unwrap(), h.residue(q, a).unwrap());
        assert!(g.symbols_equal(&rg.symbol, &rh.symbol).unwrap());
    }
}

#[test]
fn choice_of_fundamental_form_is_irrelevant() {
    assert_same_under_alpha_change(&line_in_two_lines(), 2);
    assert_same_under_alpha_change(&monomial_curve(), 2);
}

#[test]
fn property_suites_pass_on_the_corpus() {
    let corpus = [
        (two_lines(), 2),
        (line_in_two_lines(), 2),
        (monomial_curve(), 2),
        (monomial_curve_alt(), 2),
        (koszul(), 3),
    ];
    for (g, q) in corpus {
        let mut all = chain_properties(&g).unwrap();
        all.extend(residue_properties(&g, q).unwrap());
        all.extend(approximation_properties(&g, q).unwrap());
        for p in all {
            assert!(p.passed || p.informational, "{}", p.name);
        }
    }
}
