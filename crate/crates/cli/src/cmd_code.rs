//! `code` subcommand: build a code from a spec file and run pipeline
//! actions against it.
//!
//! The spec schema is the one from `skewcodec_core::config`. Setting
//! `r = 0` (with `ell = []`) or `s = 0` (with empty `t` lists) disables
//! that block, so pure θ-cyclic field codes and pure Θ-cyclic ring codes
//! use the same entry point as the mixed ones.

use clap::Args;
use skewcodec_core::qecc::{self, ClassicalParams};
use skewcodec_core::{
    CodeSpec, Error, FqPoly, GrayMap, LinearCode, MixedCode, Result, SkewRing, Strategy,
};

use crate::cmd_field;
use crate::report::{ClassicalReport, CodeReport, QeccReport};

#[derive(Args, Debug)]
pub struct CodeArgs {
    /// Code spec file (JSON or TOML).
    #[arg(long, value_name = "FILE")]
    pub spec: std::path::PathBuf,
    /// Comma-separated subset of build,gray,distance,dual,qecc.
    #[arg(long, value_delimiter = ',', default_values_t = [
        "build".to_string(), "gray".to_string(), "distance".to_string(),
        "dual".to_string(), "qecc".to_string()
    ])]
    pub actions: Vec<String>,
}

struct Actions {
    gray: bool,
    distance: bool,
    dual: bool,
    qecc: bool,
}

fn parse_actions(list: &[String]) -> Result<Actions> {
    let mut a = Actions { gray: false, distance: false, dual: false, qecc: false };
    for item in list {
        match item.as_str() {
            "build" => {}
            "gray" => a.gray = true,
            "distance" => a.distance = true,
            "dual" => a.dual = true,
            "qecc" => a.qecc = true,
            other => {
                return Err(Error::unsupported(format!(
                    "unknown action {other:?} (expected build, gray, distance, dual, qecc)"
                )));
            }
        }
    }
    // downstream actions imply their inputs
    if a.qecc {
        a.distance = true;
        a.dual = true;
    }
    if a.distance {
        a.gray = true;
    }
    Ok(a)
}

fn parse_polys(ring: &SkewRing, coeffs: &[String]) -> Result<FqPoly> {
    let v = coeffs
        .iter()
        .map(|c| ring.field().parse_element(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(ring.poly(v))
}

pub fn run(args: &CodeArgs, strategy: Strategy, budget: u64) -> Result<CodeReport> {
    let actions = parse_actions(&args.actions)?;
    let spec = CodeSpec::from_path(&args.spec)?;
    let ring = spec.field.build_ring()?;
    let field_report = cmd_field::run(&cmd_field::FieldArgs {
        field: cmd_field::FieldFlags {
            spec: None,
            p: Some(spec.field.p),
            m: Some(spec.field.m),
            modulus: Some(spec.field.modulus.clone()),
            frobenius_power: spec.field.frobenius_power,
        },
    })?;

    let r = spec.code.r;
    let s = spec.code.s;
    let ell = parse_polys(&ring, &spec.code.ell)?;
    let s_poly = parse_polys(&ring, &spec.code.s_poly)?;
    let t: [FqPoly; 4] = [
        parse_polys(&ring, &spec.code.t[0])?,
        parse_polys(&ring, &spec.code.t[1])?,
        parse_polys(&ring, &spec.code.t[2])?,
        parse_polys(&ring, &spec.code.t[3])?,
    ];

    // three families behind one report shape
    let (image, dim, generators, separable, ell_s, s_poly_s, t_s, dc): (
        LinearCode,
        usize,
        Option<usize>,
        bool,
        String,
        String,
        Vec<String>,
        Option<bool>,
    );
    if r > 0 && s > 0 {
        let code = MixedCode::build(ring.clone(), r, s, ell, s_poly, t)?;
        let gray = GrayMap::new(ring.field_arc())?;
        image = gray.image_of(&code)?;
        dim = code.dim();
        generators = Some(code.generating_rows()?.len());
        separable = code.is_separable();
        ell_s = format!("{}", code.ell());
        s_poly_s = format!("{}", code.s_poly());
        t_s = (0..4).map(|i| format!("{}", code.t_component(i))).collect();
        dc = if actions.dual { Some(qecc::dual_containing_mixed(&code)?) } else { None };
    } else if s > 0 {
        let t_monic: [FqPoly; 4] = [t[0].monic()?, t[1].monic()?, t[2].monic()?, t[3].monic()?];
        image = LinearCode::from_sigma_cyclic_r(&ring, s, &t_monic)?;
        dim = image.k();
        generators = None;
        separable = true;
        ell_s = "0".into();
        s_poly_s = "0".into();
        t_s = t_monic.iter().map(|p| format!("{p}")).collect();
        dc = if actions.dual {
            Some(qecc::dual_containing_components(&ring, s, &t_monic)?)
        } else {
            None
        };
    } else if r > 0 {
        let ell_m = ell.monic()?;
        image = LinearCode::from_skew_cyclic(&ring, r, &ell_m)?;
        dim = image.k();
        generators = None;
        separable = true;
        ell_s = format!("{ell_m}");
        s_poly_s = "0".into();
        t_s = vec!["0".into(); 4];
        dc = if actions.dual {
            Some(qecc::dual_containing_skew_cyclic(&ring, r, &ell_m)?)
        } else {
            None
        };
    } else {
        return Err(Error::unsupported("spec has r = 0 and s = 0: nothing to build"));
    }

    let mut report = CodeReport {
        field: field_report,
        r,
        s,
        ell: ell_s,
        s_poly: s_poly_s,
        t: t_s,
        separable,
        dim,
        generators,
        gray: None,
        dual_containing: dc,
        qecc: None,
    };

    if actions.gray {
        let mut gray = ClassicalReport {
            n: image.n(),
            k: image.k(),
            d: 0,
            q: ring.field().q(),
            exact: false,
        };
        if actions.distance {
            let rep = image.min_distance(strategy, budget)?;
            gray.d = rep.upper_bound as usize;
            gray.exact = rep.proved_exact;
        }
        report.gray = Some(gray);
    }

    if actions.qecc {
        let gray = report.gray.as_ref().expect("distance implies gray");
        let dc = report.dual_containing.expect("qecc implies dual");
        let c = ClassicalParams { n: gray.n, k: gray.k, d: gray.d, q: gray.q };
        let p = qecc::css(c, dc, &format!("{}", args.spec.display()))?;
        let defect = qecc::singleton_defect(&p)? as i64;
        report.qecc = Some(QeccReport {
            n: p.n,
            k: p.k,
            d: p.d,
            q: p.q,
            mds: p.mds,
            defect,
            source: p.source,
        });
    }

    Ok(report)
}

pub fn human(report: &CodeReport) -> String {
    let mut lines = vec![format!(
        "code over F_{} with (r, s) = ({}, {}), dim {}{}",
        report.field.q,
        report.r,
        report.s,
        report.dim,
        if report.separable { ", separable" } else { "" }
    )];
    lines.push(format!("  ell = {}", report.ell));
    if report.s_poly != "0" {
        lines.push(format!("  s   = {}", report.s_poly));
    }
    for (i, t) in report.t.iter().enumerate() {
        lines.push(format!("  t{}  = {}", i + 1, t));
    }
    if let Some(g) = &report.gray {
        let d = if g.exact { g.d.to_string() } else { "?".into() };
        lines.push(format!("  gray image [{},{},{}]_{}", g.n, g.k, d, g.q));
    }
    if let Some(dc) = report.dual_containing {
        lines.push(format!("  dual-containing: {dc}"));
    }
    if let Some(q) = &report.qecc {
        lines.push(format!(
            "  qecc [[{},{},{}]]_{} defect {}{}",
            q.n,
            q.k,
            q.d,
            q.q,
            q.defect,
            if q.mds { " (MDS)" } else { "" }
        ));
    }
    lines.join("\n")
}
