use std::fmt::Write;

use crate::report::{BettiReport, PropertyReport, ReportDocument, SeriesReport};

fn mark(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn monomial(c: i64, e: i64) -> String {
    let t = match e {
        0 => String::new(),
        1 => "t".into(),
        _ => format!("t^{e}"),
    };
    match (c.abs(), t.is_empty()) {
        (1, false) => t,
        (a, true) => a.to_string(),
        (a, false) => format!("{a}{t}"),
    }
}

fn series(s: &SeriesReport) -> String {
    let mut num = String::new();
    for (i, &c) in s.numerator.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let m = monomial(c, s.offset + i as i64);
        match (num.is_empty(), c < 0) {
            (true, false) => num.push_str(&m),
            (true, true) => num.push_str(&format!("-{m}")),
            (false, false) => num.push_str(&format!(" + {m}")),
            (false, true) => num.push_str(&format!(" - {m}")),
        }
    }
    if num.is_empty() {
        return "0".into();
    }
    let den: Vec<String> = s
        .denominator_weights
        .iter()
        .map(|&w| format!("(1 - {})", monomial(1, w as i64)))
        .collect();
    format!("({num}) / {}", den.join(""))
}

fn opt(v: Option<usize>) -> String {
    v.map_or("-".into(), |d| d.to_string())
}

/// One row per internal degree `d`, one column per homological degree `i`,
/// so the entry in column `i` counts generators of degree `d` in `F_i`.
fn betti(b: &BettiReport, out: &mut String, indent: &str) {
    let mut degrees: Vec<i64> = b.entries.iter().map(|e| e.1).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let _ = writeln!(out, "{indent}total: {:?}", b.totals);
    for d in degrees {
        let row: Vec<String> = (0..b.totals.len())
            .map(|i| {
                b.entries
                    .iter()
                    .find(|e| e.0 == i && e.1 == d)
                    .map_or("-".to_string(), |e| e.2.to_string())
            })
            .collect();
        let _ = writeln!(out, "{indent}{d:>5}: {}", row.join(" "));
    }
}

fn properties(ps: &[PropertyReport], out: &mut String, indent: &str) {
    for p in ps {
        let tag = if p.informational {
            " (informational)"
        } else {
            ""
        };
        let _ = writeln!(out, "{indent}{} {}{tag}", mark(p.passed), p.name);
    }
}

pub fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let g = &doc.geometry;
    let p = &doc.problem;
    let _ = writeln!(out, "{} {}", doc.tool.name, doc.tool.version);
    let _ = writeln!(
        out,
        "ring: Q[{}] weights {:?}",
        p.variables.join(", "),
        p.weights
    );
    let _ = writeln!(out, "C: ({})", p.complete_intersection.join(", "));
    let _ = writeln!(out, "X: ({})", p.space.join(", "));
    let _ = writeln!(
        out,
        "n = {}, k = {}, dim X = {}, X = C: {}",
        g.n, g.k, g.dim, g.x_equals_c
    );
    let _ = writeln!(
        out,
        "linked ideal I_C : I_X = ({})",
        g.linked_ideal.join(", ")
    );
    let ff = &g.fundamental_form;
    let _ = writeln!(out, "fundamental form (degree {}): {}", ff.degree, ff.form);
    let _ = writeln!(out, "  a = {}, b = {}, f = {}", ff.a, ff.b, ff.f);
    let _ = writeln!(out, "Betti table of R/I_X:");
    betti(&g.betti_x, &mut out, "  ");
    let _ = writeln!(out, "Hilbert series of R/I_X: {}", series(&g.hilbert_x));

    for r in &doc.results {
        let _ = writeln!(out, "q = {}", r.q);
        if let Some(v) = &r.verdict {
            let _ = writeln!(
                out,
                "  verdict: {} (pdim {}, k - 1 = {}; Jacobian depth {}, dim {})",
                v.verdict.to_uppercase(),
                v.pdim,
                v.k - 1,
                opt(v.jacobian_depth),
                opt(v.jacobian_dim)
            );
            betti(&v.betti, &mut out, "    ");
        }
        if let Some(d) = &r.duality {
            let rev = match &d.reverse {
                Some(x) => format!("injective {}, surjective {}", x.injective, x.surjective),
                None => "not required".into(),
            };
            let _ = writeln!(
                out,
                "  {} duality: forward injective {}, surjective {}; reverse {rev}",
                mark(d.passed),
                d.forward.injective,
                d.forward.surjective
            );
        }
        if let Some(e) = &r.ext_comparison {
            let _ = writeln!(
                out,
                "  {} ext comparison (twist {})",
                mark(e.passed),
                e.twist
            );
            let _ = writeln!(out, "    Ext^(k-1): {}", series(&e.ext_k_minus_1));
            let _ = writeln!(out, "    Ext^k:     {}", series(&e.ext_k));
        }
        properties(&r.properties, &mut out, "  ");
    }
    if !doc.properties.is_empty() {
        let _ = writeln!(out, "all degrees:");
        properties(&doc.properties, &mut out, "  ");
    }
    if let Some(t) = &doc.timings_us {
        let _ = writeln!(out, "time: {} µs total, {} µs setup", t.total, t.geometry);
    }
    let _ = writeln!(out, "{}", if doc.passed { "PASSED" } else { "FAILED" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_is_readable() {
        let s = SeriesReport {
            offset: 0,
            numerator: vec![1, 0, -3, 2],
            denominator_weights: vec![1, 1],
        };
        assert_eq!(series(&s), "(1 - 3t^2 + 2t^3) / (1 - t)(1 - t)");
        let s = SeriesReport {
            offset: -2,
            numerator: vec![-1, 1],
            denominator_weights: vec![3],
        };
        assert_eq!(series(&s), "(-t^-2 + t^-1) / (1 - t^3)");
        let zero = SeriesReport {
            numerator: vec![],
            ..s
        };
        assert_eq!(series(&zero), "0");
    }

    #[test]
    fn betti_rows_by_degree() {
        let b = BettiReport {
            totals: vec![1, 2, 1],
            entries: vec![(0, 0, 1), (1, 2, 2), (2, 4, 1)],
        };
        let mut out = String::new();
        betti(&b, &mut out, "");
        assert_eq!(
            out,
            "total: [1, 2, 1]\n    0: 1 - -\n    2: - 2 -\n    4: - - 1\n"
        );
    }
}
