use mlog_core::approximation::{ideal_times, IContext, IFreeApproximation};
use mlog_kernel::hilbert::hilbert_series;
use mlog_kernel::{parse_polynomial, FreeModule, Ideal, Ring, RingContext, Vector};

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

fn line_context() -> IContext {
    IContext::new(ideal(&xyz(), &["x", "y"])).unwrap()
}

#[test]
fn trivial_approximation_is_free_and_consistent() {
    let c = line_context();
    let f = FreeModule::new(c.ring(), vec![0, 1]);
    let a = IFreeApproximation::trivial(&c, &f).unwrap();
    let d = a.i_dual().unwrap();
    assert!(a.exactness(&d).unwrap().holds());
    // M^I = I·F^∨, so V = F^∨/IF^∨ and ker ᾱ = 0.
    assert!(d
        .m_i
        .equals(&mlog_kernel::Submodule::new(&d.dual, ideal_times(c.ideal(), &d.dual)).unwrap())
        .unwrap());
    assert!(d.ker_alpha_bar.is_zero().unwrap());
    let rec = a.freeness_analysis().unwrap();
    assert_eq!(rec.gdim, 0);
    assert!(rec.v_mcm && rec.w_mcm && rec.depth_criterion && rec.gdim_bounds);
    assert!(rec.reflexivity.double_dual_equal && rec.reflexivity.evaluation.is_iso());
    let ext = a.ext_comparison(&d).unwrap();
    assert!(ext.ext_km1.is_zero() && ext.ker_alpha_bar.is_zero());
    assert!(ext.holds(), "{ext:?}");
}

#[test]
fn degenerate_approximation_has_zero_w() {
    let c = line_context();
    let f = FreeModule::standard(c.ring(), 1);
    let a = IFreeApproximation::degenerate(&c, &f).unwrap();
    assert!(a.w().is_zero().unwrap());
    let d = a.i_dual().unwrap();
    // (IF)^I = F^∨ and V = 0.
    assert!(d.m_i.is_whole());
    assert!(d.v.is_zero().unwrap());
    assert!(a.exactness(&d).unwrap().holds());
    assert!(a.reflexivity(&d).unwrap().double_dual_equal);
    let e = a.freeness_analysis().unwrap_err();
    assert!(e.to_string().starts_with("nonzero W"));
    // Ext^1(I, R) = Ext^2(R/I, R) ≅ R/I(2) matches ker ᾱ = R/I.
    let ext = a.ext_comparison(&d).unwrap();
    assert!(!ext.ext_km1.is_zero());
    assert!(ext.holds(), "{ext:?}");
}

#[test]
fn maximal_ideal_inside_line_ideal() {
    let r = xyz();
    let c = line_context();
    let f = FreeModule::standard(&r, 1);
    let m: Vec<Vector> = ["x", "y", "z"]
        .iter()
        .map(|s| Vector::scalar(parse_polynomial(s, &r).unwrap()))
        .collect();
    let a = IFreeApproximation::new(&c, &f, m).unwrap();
    let w = a.w();
    assert_eq!(w.minimal_generators().unwrap().len(), 1);
    assert_eq!(hilbert_series(w), hilbert_series(&c.quotient()).shift(1));
    let d = a.i_dual().unwrap();
    assert!(a.exactness(&d).unwrap().holds());
    // (x, y, z)^I = (x, y) and M^{II} = (x, y)^I = R ≠ M.
    assert!(!a.reflexivity(&d).unwrap().double_dual_equal);
    let ext = a.ext_comparison(&d).unwrap();
    assert!(ext.holds(), "{ext:?}");
}

#[test]
fn kappa_is_the_inclusion() {
    let c = line_context();
    let f = FreeModule::new(c.ring(), vec![0, 2]);
    for a in [
        IFreeApproximation::trivial(&c, &f).unwrap(),
        IFreeApproximation::degenerate(&c, &f).unwrap(),
    ] {
        assert_eq!(a.kappa_checked().unwrap(), a.m().gens());
    }
    let a = IFreeApproximation::trivial(&c, &f).unwrap();
    assert!(a.kappa(&parse_polynomial("z", c.ring()).unwrap()).is_err());
}

#[test]
fn restriction_endpoints() {
    let c = line_context();
    let f = FreeModule::standard(c.ring(), 1);
    let a = IFreeApproximation::trivial(&c, &f).unwrap();
    let same = a.j_restrict(c.ideal()).unwrap();
    assert!(same.m().equals(a.m()).unwrap());
    let unit = a.j_restrict(&Ideal::unit(c.ring())).unwrap();
    assert!(unit.w().is_zero().unwrap());
    assert!(a.restricted_analysis(&Ideal::unit(c.ring())).is_err());
    let rr = a.restricted_analysis(c.ideal()).unwrap();
    assert!(rr.duality.is_iso() && rr.reflexivity_preserved);
    let bad = ideal(c.ring(), &["x"]);
    assert!(a
        .j_restrict(&bad)
        .unwrap_err()
        .to_string()
        .starts_with("containment"));
}
