use std::time::Instant;

use mlog_core::freeness::{
    approximation_properties, chain_properties, duality_certificate, ext_check, freeness_verdict,
    jacobian_modules_correspond, residue_properties,
};
use mlog_core::{CoreError, LogGeometry};
use mlog_kernel::hilbert::hilbert_series;
use mlog_kernel::minimal_resolution;

use crate::problem::{Check, ProblemFile};
use crate::report::{
    DegreeReport, FormReport, GeometryReport, PropertyReport, ReportDocument, Timings, ToolInfo,
    SCHEMA_VERSION,
};
use crate::CliError;

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Replaces the degrees listed in the problem file when nonempty.
    pub degrees: Vec<usize>,
    pub degree_bound: Option<i64>,
    pub timings: bool,
}

fn check_error(e: CoreError) -> CliError {
    match e {
        CoreError::Hypothesis { .. } => CliError::Input(e.to_string()),
        _ => CliError::Check(e.to_string()),
    }
}

fn micros(t: Instant) -> u64 {
    t.elapsed().as_micros() as u64
}

pub fn run(problem: &ProblemFile, opts: &Options) -> Result<ReportDocument, CliError> {
    let start = Instant::now();
    let g = problem.geometry(opts.degree_bound)?;
    let qs = problem.degrees(g.k(), g.n(), &opts.degrees)?;
    let alt = if problem.wants(Check::Freeness) {
        problem.alternative_geometry(opts.degree_bound)?
    } else {
        None
    };
    let geometry = geometry_report(&g).map_err(check_error)?;
    let mut timings = Timings {
        geometry: micros(start),
        ..Timings::default()
    };

    let mut results = Vec::new();
    for &q in &qs {
        let t = Instant::now();
        results.push(degree_report(problem, &g, alt.as_ref(), q).map_err(check_error)?);
        timings.degrees.push((q, micros(t)));
    }

    let t = Instant::now();
    let mut properties = Vec::new();
    if problem.wants(Check::Chains) {
        properties.extend(
            chain_properties(&g)
                .map_err(check_error)?
                .into_iter()
                .map(PropertyReport::from),
        );
    }
    timings.global = micros(t);
    timings.total = micros(start);

    let mut doc = ReportDocument {
        schema_version: SCHEMA_VERSION,
        tool: ToolInfo::current(),
        problem: problem.clone(),
        geometry,
        results,
        properties,
        passed: false,
        timings_us: opts.timings.then_some(timings),
    };
    doc.passed = doc.failures().is_empty();
    Ok(doc)
}

fn geometry_report(g: &LogGeometry) -> mlog_core::Result<GeometryReport> {
    let ring = g.ring();
    let c = g.certificates();
    let quotient = g.i_x().quotient_ring();
    let res = minimal_resolution(&quotient)?;
    let ff = g.fundamental_form();
    Ok(GeometryReport {
        n: c.n,
        k: c.k,
        dim: c.dim,
        x_equals_c: c.x_equals_c,
        x_pdim: c.x_pdim,
        singular_height: c.singular_height,
        degree_bound: g.degree_bound(),
        betti_x: (&res.betti()).into(),
        hilbert_x: (&hilbert_series(&quotient)).into(),
        linked_ideal: g.linked().gens().iter().map(|p| p.display(ring)).collect(),
        fundamental_form: FormReport {
            form: g.exterior().display_form(g.k(), &ff.alpha),
            degree: ff.degree,
            a: ff.a.display(ring),
            b: ff.b.display(ring),
            f: ff.f.display(ring),
        },
    })
}

fn degree_report(
    problem: &ProblemFile,
    g: &LogGeometry,
    alt: Option<&LogGeometry>,
    q: usize,
) -> mlog_core::Result<DegreeReport> {
    let mut out = DegreeReport {
        q,
        verdict: None,
        duality: None,
        ext_comparison: None,
        properties: Vec::new(),
    };
    let verdict = if problem.wants(Check::Freeness) || problem.wants(Check::Duality) {
        Some(freeness_verdict(g, q)?)
    } else {
        None
    };
    if problem.wants(Check::Freeness) {
        out.verdict = verdict.as_ref().map(Into::into);
        out.properties.extend(
            approximation_properties(g, q)?
                .into_iter()
                .map(PropertyReport::from),
        );
        if let (Some(alt), Some(v)) = (alt, &verdict) {
            let w = freeness_verdict(alt, q)?;
            out.properties.push(PropertyReport::new(
                "alternative complete intersection: same fields along X",
                g.der_log_x(q)?.equals(&alt.der_log_x(q)?)?,
            ));
            out.properties.push(PropertyReport::new(
                "alternative complete intersection: Jacobian modules correspond",
                jacobian_modules_correspond(g, alt, q)?,
            ));
            out.properties.push(PropertyReport::new(
                "alternative complete intersection: same verdict",
                w.free == v.free && w.pdim == v.pdim,
            ));
        }
    }
    if problem.wants(Check::Duality) {
        let free = verdict.as_ref().is_some_and(|v| v.free);
        out.duality = Some((&duality_certificate(g, q, free)?).into());
    }
    if problem.wants(Check::ExtComparison) {
        out.ext_comparison = Some((&ext_check(g, q)?).into());
    }
    if problem.wants(Check::Residues) {
        out.properties.extend(
            residue_properties(g, q)?
                .into_iter()
                .map(PropertyReport::from),
        );
    }
    Ok(out)
}
