use mlog_core::logforms::LogGeometry;
use mlog_kernel::{parse_polynomial, Ideal, Polynomial, Ring, RingContext, Submodule, Vector};

fn polys(r: &Ring, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|p| parse_polynomial(p, r).unwrap()).collect()
}

fn xyz() -> Ring {
    RingContext::standard(&["x", "y", "z"]).unwrap()
}

fn geometry(r: &Ring, h: &[&str], x: &[&str]) -> LogGeometry {
    LogGeometry::new(r, polys(r, h), polys(r, x)).unwrap()
}

fn two_lines() -> LogGeometry {
    geometry(&xyz(), &["x*y", "z"], &["x*y", "z"])
}

fn line_in_two_lines() -> LogGeometry {
    geometry(&xyz(), &["x*y", "z"], &["x", "z"])
}

fn form(g: &LogGeometry, q: usize, terms: &[(&str, &[usize])]) -> Vector {
    let e = g.exterior();
    let mut v = Vector::zero(e.rank(q));
    for (c, set) in terms {
        let c = parse_polynomial(c, g.ring()).unwrap();
        v = &v + &e.basis(q, set).scale(&c);
    }
    v
}

#[test]
fn invalid_geometries_name_the_failing_check() {
    let r = xyz();
    let cases: &[(&[&str], &[&str], &str)] = &[
        (&["x", "x*y"], &["x", "y"], "regular sequence"),
        (&["x*y"], &["x*y"], "codimension"),
        (&["x^2", "y"], &["x^2", "y"], "reduced"),
        (&["x*y", "z"], &["x", "y", "z"], "dimension"),
        (&["x*y", "z"], &["x"], "containment"),
    ];
    for (h, x, check) in cases {
        let e = LogGeometry::new(&r, polys(&r, h), polys(&r, x)).unwrap_err();
        assert!(e.to_string().starts_with(check), "{h:?}: {e}");
    }
}

#[test]
fn two_lines_forms_and_fields() {
    let g = two_lines();
    assert_eq!(g.k(), 2);
    assert!(g.certificates().x_equals_c);
    let dh = g.dh();
    assert_eq!(g.exterior().display_form(2, &dh), "y*dx^dz + x*dy^dz");
    assert_eq!(g.fundamental_form().alpha, dh);
    let n2 = g.omega_log(2, false).unwrap().numerator;
    assert!(n2.contains(&dh).unwrap());
    assert!(n2.contains_module(&g.ic_forms_module(2).unwrap()).unwrap());
    assert!(!n2.contains(&form(&g, 2, &[("x", &[0, 2])])).unwrap());

    let der = g.der_log_c(2).unwrap();
    let e = g.exterior();
    let x = parse_polynomial("x", g.ring()).unwrap();
    assert!(der.contains(&e.basis(2, &[0, 2]).scale(&x)).unwrap());
    assert!(!der.contains(&e.basis(2, &[1, 2])).unwrap());
    assert!(g.der_log_x_variants(2).unwrap().agree().unwrap());
    assert!(g.der_log_x(2).unwrap().equals(&der).unwrap());
    for v in g.contracted_differentials(2) {
        assert!(der.contains(&v).unwrap());
    }
}

#[test]
fn two_lines_jacobian_module_is_x_y() {
    let g = two_lines();
    let j = g.jacobian_module(2).unwrap();
    // 2×2 minors of [[y, x, 0], [0, 0, 1]] are y, x and 0.
    let amb = j.module.ambient().clone();
    let mut expect: Vec<Vector> = polys(g.ring(), &["x", "y"])
        .into_iter()
        .map(Vector::scalar)
        .collect();
    expect.extend(g.i_c().gens().iter().cloned().map(Vector::scalar));
    assert!(j
        .module
        .span()
        .equals(&Submodule::new(&amb, expect).unwrap())
        .unwrap());
    assert!(j
        .kernel()
        .unwrap()
        .equals(&g.der_log_x(2).unwrap())
        .unwrap());
    // pdim_R of an MCM module over the curve R/I_C is k.
    assert_eq!(j.pdim().unwrap(), 2);
    // R/I_X ⊗ α^X is not injective below the top degree.
    let theta = g.exterior().theta(2);
    let ixt = Submodule::new(&theta, g.exterior().ideal_times_basis(3, g.i_x().gens())).unwrap();
    assert!(!ixt.contains_module(&g.der_log_x(2).unwrap()).unwrap());
}

#[test]
fn residue_of_the_fundamental_form_is_one() {
    let g = two_lines();
    let dh = g.dh();
    let r = g.residue(2, &dh).unwrap();
    assert!(r.g.is_one());
    assert_eq!(r.xi, Vector::scalar(Polynomial::one()));
    assert_eq!(r.symbol.form, dh);
    let alt = g.residue_alternative(2, &dh, &r).unwrap();
    assert!(!alt.g.is_one());
    assert!(g.residues_agree(2, &r, &alt).unwrap());
    // Elements of I_C·Ω^q have zero residue.
    let eta = form(&g, 2, &[("x*y", &[0, 1]), ("z", &[1, 2])]);
    assert!(g
        .symbol_is_zero(&g.residue(2, &eta).unwrap().symbol)
        .unwrap());
    // Top degree needs a nonconstant multiplier.
    let vol = form(&g, 3, &[("1", &[0, 1, 2])]);
    let rt = g.residue(3, &vol).unwrap();
    assert!(!rt.g.is_one());
    assert_eq!(rt.symbol.form, vol);
}

#[test]
fn line_inside_two_lines_has_fundamental_form_y_dxdz() {
    let g = line_in_two_lines();
    assert!(!g.certificates().x_equals_c);
    let ff = g.fundamental_form();
    let expected = form(&g, 2, &[("y", &[0, 2])]);
    let icf = g.ic_forms_module(2).unwrap();
    assert!(
        icf.contains(&(&ff.alpha - &expected)).unwrap(),
        "{:?}",
        ff.alpha
    );
    assert!(g
        .linked()
        .equals(&Ideal::new(g.ring(), polys(g.ring(), &["y", "z"])).unwrap())
        .unwrap());
    assert!(g.der_log_x_variants(2).unwrap().agree().unwrap());
    // Regular forms along X = V(x, z): the symbols [y·dx∧dz; xy, z].
    let rf = g.regular_forms(0).unwrap();
    assert!(rf.module.contains(&expected).unwrap());
    assert!(g.regular_forms_match_hom(0).unwrap());
    let law = g.colon_law(2).unwrap();
    assert!(law.ic_variant);
    assert!(!law.ix_variant);
}

#[test]
fn duality_and_chain_endpoints() {
    for g in [two_lines(), line_in_two_lines()] {
        for q in 0..=3 {
            assert!(g.sigma_dual_check(q).unwrap().holds(), "q = {q}");
        }
        assert!(g.endpoints().unwrap().holds());
    }
}

#[test]
fn coordinate_plane_line() {
    let r = RingContext::standard(&["x", "y"]).unwrap();
    let g = geometry(&r, &["x", "y"], &["x", "y"]);
    let theta = g.exterior().theta(2);
    let ict = Submodule::new(&theta, g.exterior().ideal_times_basis(1, g.i_c().gens())).unwrap();
    assert!(g.der_log_c(2).unwrap().equals(&ict).unwrap());
    let j = g.jacobian_module(2).unwrap();
    assert!(j.module.span().is_whole());
    let vol = Vector::scalar(Polynomial::one());
    assert!(g.pairing(&vol, &vol).unwrap().is_one());
    let r2 = g.residue(2, &vol).unwrap();
    assert_eq!(r2.symbol.form, vol);
}
