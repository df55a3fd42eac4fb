//! `field` subcommand: validate a field description and report its shape.

use clap::Args;
use skewcodec_core::{FieldSpec, Result, SkewRing};

use crate::report::FieldReport;

/// Flags shared by every subcommand that needs a field: either a spec file
/// or inline `--p/--m/--modulus`.
#[derive(Args, Debug)]
pub struct FieldFlags {
    /// Spec file (JSON or TOML) containing a field block.
    #[arg(long, value_name = "FILE")]
    pub spec: Option<std::path::PathBuf>,
    /// Characteristic (with --m and --modulus instead of --spec).
    #[arg(long, requires = "m", requires = "modulus", conflicts_with = "spec")]
    pub p: Option<u32>,
    /// Extension degree.
    #[arg(long)]
    pub m: Option<u32>,
    /// Ascending modulus coefficients over F_p, comma-separated
    /// (e.g. `2,2,1` for x^2 + 2x + 2).
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
    /// Automorphism power i in σ: a ↦ a^(p^i).
    #[arg(long, default_value_t = 1)]
    pub frobenius_power: u32,
}

impl FieldFlags {
    pub fn field_spec(&self) -> Result<FieldSpec> {
        if let Some(path) = &self.spec {
            let text = std::fs::read_to_string(path).map_err(|e| {
                skewcodec_core::Error::unsupported(format!("cannot read {}: {e}", path.display()))
            })?;
            // accept either a bare field spec or a full code spec
            let bare: std::result::Result<FieldSpec, _> = match path
                .extension()
                .and_then(|e| e.to_str())
            {
                Some("toml") => toml::from_str(&text).map_err(|e| e.to_string()),
                _ => serde_json::from_str(&text).map_err(|e| e.to_string()),
            };
            match bare {
                Ok(f) => Ok(f),
                Err(_) => Ok(skewcodec_core::CodeSpec::from_path(path)?.field),
            }
        } else if let (Some(p), Some(m), Some(modulus)) = (self.p, self.m, &self.modulus) {
            Ok(FieldSpec {
                p,
                m,
                modulus: modulus.clone(),
                frobenius_power: self.frobenius_power,
            })
        } else {
            Err(skewcodec_core::Error::unsupported(
                "no field given: use --spec FILE or --p/--m/--modulus",
            ))
        }
    }

    pub fn build_ring(&self) -> Result<SkewRing> {
        self.field_spec()?.build_ring()
    }
}

#[derive(Args, Debug)]
pub struct FieldArgs {
    #[command(flatten)]
    pub field: FieldFlags,
}

pub fn run(args: &FieldArgs) -> Result<FieldReport> {
    let spec = args.field.field_spec()?;
    let ring = spec.build_ring()?;
    let field = ring.field();
    Ok(FieldReport {
        p: spec.p,
        m: spec.m,
        q: field.q(),
        modulus: spec.modulus.clone(),
        frobenius_power: spec.frobenius_power,
        theta_order: ring.aut_order(),
        fixed_subfield: spec.p.pow(num_gcd(spec.m, spec.frobenius_power % spec.m.max(1))),
        omega_vector: field.coords(field.omega()),
    })
}

fn num_gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { num_gcd(b, a % b) }
}

pub fn human(report: &FieldReport) -> String {
    format!(
        "F_{} = F_{}^{} mod {:?}, sigma = x -> x^{}^{} (order {}), fixed subfield F_{}, omega = {:?}",
        report.q,
        report.p,
        report.m,
        report.modulus,
        report.p,
        report.frobenius_power,
        report.theta_order,
        report.fixed_subfield,
        report.omega_vector,
    )
}
