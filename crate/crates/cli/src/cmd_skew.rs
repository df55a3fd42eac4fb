//! `skew` subcommand: an exact calculator on F_q[x;θ].
//!
//! Operands are written either as ascending coefficient lists
//! (`"w^6,w^7,1"`) or as polynomial sums (`"w^6 + w^7*x + x^2"`); field
//! literals follow the `gf` conventions (`0`, integers, `w^k`). Results are
//! printed in the canonical sum form, which re-parses to an equal value.

use clap::Args;
use skewcodec_core::{Error, FqPoly, Result, SkewRing};

use crate::cmd_field::FieldFlags;
use crate::report::SkewReport;

#[derive(Args, Debug)]
pub struct SkewArgs {
    #[command(flatten)]
    pub field: FieldFlags,
    /// Operation: mul, rdiv, ldiv, gcdr, gcdl, lcml, rec, psi.
    pub op: String,
    /// Operands (two polynomials; `rec` takes one, `psi` takes a power
    /// then one polynomial).
    pub operands: Vec<String>,
}

pub fn parse_operand(ring: &SkewRing, s: &str) -> Result<FqPoly> {
    let trimmed = s.trim();
    if trimmed.contains('+') || trimmed.contains('x') {
        ring.parse_fq_poly(trimmed)
    } else {
        let coeffs = trimmed
            .split(',')
            .map(|c| ring.field().parse_element(c.trim()))
            .collect::<Result<Vec<_>>>()?;
        Ok(ring.poly(coeffs))
    }
}

fn need(operands: &[String], n: usize, op: &str) -> Result<()> {
    if operands.len() != n {
        return Err(Error::unsupported(format!(
            "`{op}` takes exactly {n} operand{}",
            if n == 1 { "" } else { "s" }
        )));
    }
    Ok(())
}

pub fn run(args: &SkewArgs) -> Result<SkewReport> {
    let ring = args.field.build_ring()?;
    let op = args.op.as_str();
    let ops = &args.operands;
    let mut report = SkewReport {
        op: op.to_string(),
        operands: ops.clone(),
        result: None,
        quotient: None,
        remainder: None,
    };
    match op {
        "mul" => {
            need(ops, 2, op)?;
            let a = parse_operand(&ring, &ops[0])?;
            let b = parse_operand(&ring, &ops[1])?;
            report.result = Some(format!("{}", a.mul(&b)?));
        }
        "rdiv" | "ldiv" => {
            need(ops, 2, op)?;
            let a = parse_operand(&ring, &ops[0])?;
            let b = parse_operand(&ring, &ops[1])?;
            let (q, r) = if op == "rdiv" { a.divmod_right(&b)? } else { a.divmod_left(&b)? };
            report.quotient = Some(format!("{q}"));
            report.remainder = Some(format!("{r}"));
        }
        "gcdr" | "gcdl" => {
            need(ops, 2, op)?;
            let a = parse_operand(&ring, &ops[0])?;
            let b = parse_operand(&ring, &ops[1])?;
            let g = if op == "gcdr" { a.gcd_right(&b)? } else { a.gcd_left(&b)? };
            report.result = Some(format!("{g}"));
        }
        "lcml" => {
            need(ops, 2, op)?;
            let a = parse_operand(&ring, &ops[0])?;
            let b = parse_operand(&ring, &ops[1])?;
            report.result = Some(format!("{}", a.lcm_left(&b)?));
        }
        "rec" => {
            need(ops, 1, op)?;
            let a = parse_operand(&ring, &ops[0])?;
            report.result = Some(format!("{}", a.reciprocal()?));
        }
        "psi" => {
            need(ops, 2, op)?;
            let k: u64 = ops[0]
                .parse()
                .map_err(|_| Error::parse(0, format!("psi power {:?} is not an integer", ops[0])))?;
            let a = parse_operand(&ring, &ops[1])?;
            report.result = Some(format!("{}", a.psi(k)));
        }
        other => {
            return Err(Error::unsupported(format!(
                "unknown skew op {other:?} (expected mul, rdiv, ldiv, gcdr, gcdl, lcml, rec, psi)"
            )));
        }
    }
    Ok(report)
}

pub fn human(report: &SkewReport) -> String {
    let mut parts = Vec::new();
    if let Some(r) = &report.result {
        parts.push(r.clone());
    }
    if let Some(q) = &report.quotient {
        parts.push(format!("quotient: {q}"));
    }
    if let Some(r) = &report.remainder {
        parts.push(format!("remainder: {r}"));
    }
    parts.join("\n")
}
