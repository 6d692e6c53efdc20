#![allow(dead_code)]

use mlog_core::logforms::LogGeometry;
use mlog_kernel::{parse_polynomial, Polynomial, Ring, RingContext};

pub fn polys(r: &Ring, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|p| parse_polynomial(p, r).unwrap()).collect()
}

pub fn geometry(names: &[&str], weights: &[u32], h: &[&str], x: &[&str]) -> LogGeometry {
    let r = RingContext::new(names, weights).unwrap();
    LogGeometry::new(&r, polys(&r, h), polys(&r, x)).unwrap()
}

pub const XYZ: &[&str] = &["x", "y", "z"];
pub const CURVE_X: &[&str] = &["x*z - y^2", "x^2*y - z^2", "x^3 - y*z"];

pub fn two_lines() -> LogGeometry {
    geometry(XYZ, &[1, 1, 1], &["x*y", "z"], &["x*y", "z"])
}

pub fn line_in_two_lines() -> LogGeometry {
    geometry(XYZ, &[1, 1, 1], &["x*y", "z"], &["x", "z"])
}

pub fn monomial_curve() -> LogGeometry {
    geometry(XYZ, &[3, 4, 5], &["x*z - y^2", "x^3 - y*z"], CURVE_X)
}

pub fn monomial_curve_alt() -> LogGeometry {
    geometry(XYZ, &[3, 4, 5], &["x*z - y^2", "x^2*y - z^2"], CURVE_X)
}

pub fn koszul() -> LogGeometry {
    geometry(
        &["x", "y", "z", "w"],
        &[1, 1, 1, 1],
        &["x", "y", "z"],
        &["x", "y", "z"],
    )
}

pub fn elliptic_cone() -> LogGeometry {
    let h = ["x^2 + y^2 + z^2 + w^2", "x^2 + 2*y^2 + 3*z^2 + 4*w^2"];
    geometry(&["x", "y", "z", "w"], &[1, 1, 1, 1], &h, &h)
}
