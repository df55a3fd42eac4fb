//! On-disk specifications of fields and codes.
//!
//! Spec files come in JSON or TOML and describe everything needed to rebuild
//! a [`MixedCode`]: a field block and a code block. Polynomial coefficients
//! are ascending, written as field literals (`"0"`, `"2"`, `"w^5"`); the
//! field modulus is ascending over the prime field as plain integers.
//!
//! ```json
//! {
//!   "field": { "p": 3, "m": 2, "modulus": [2, 2, 1], "frobenius_power": 1 },
//!   "code": {
//!     "r": 2, "s": 2,
//!     "ell": ["w^2", "1"],
//!     "s_poly": [],
//!     "t": [["w^2", "1"], ["1"], ["1"], ["1"]]
//!   }
//! }
//! ```
//!
//! The same structure as TOML uses `[field]` and `[code]` tables. Format is
//! chosen by file extension in [`CodeSpec::from_path`], defaulting to JSON.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::mixedcode::MixedCode;
use crate::skewpoly::{FqPoly, SkewRing};

/// Field block: `F_{p^m}` with a user-pinned modulus, plus the Frobenius
/// power defining the automorphism (`σ(a) = a^{p^i}`, default `i = 1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    /// Ascending coefficients `c_0..c_m` of a monic irreducible polynomial
    /// over `F_p` whose root generates the multiplicative group.
    pub modulus: Vec<u32>,
    #[serde(default = "default_frobenius_power")]
    pub frobenius_power: u32,
}

fn default_frobenius_power() -> u32 {
    1
}

impl FieldSpec {
    pub fn build_field(&self) -> Result<std::sync::Arc<FieldCtx>> {
        FieldCtx::new(self.p, self.m, &self.modulus)
    }

    pub fn build_ring(&self) -> Result<SkewRing> {
        SkewRing::new(self.build_field()?, self.frobenius_power)
    }
}

/// Code block: block lengths and the generator tuple, coefficientwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeBlock {
    pub r: usize,
    pub s: usize,
    /// Ascending coefficients of the field-side generator `ℓ`.
    pub ell: Vec<String>,
    /// Ascending coefficients of the mixing part `s`; empty means zero
    /// (a separable code).
    #[serde(default)]
    pub s_poly: Vec<String>,
    /// Ascending coefficients of the four ring-side components `t₁..t₄`.
    pub t: [Vec<String>; 4],
}

/// A complete code specification: field plus code block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpec {
    pub field: FieldSpec,
    pub code: CodeBlock,
}

fn parse_coeffs(field: &FieldCtx, coeffs: &[String]) -> Result<Vec<FieldElement>> {
    coeffs.iter().map(|c| field.parse_element(c)).collect()
}

impl CodeSpec {
    pub fn from_json_str(text: &str) -> Result<CodeSpec> {
        serde_json::from_str(text).map_err(|e| Error::parse(0, format!("JSON spec: {e}")))
    }

    pub fn from_toml_str(text: &str) -> Result<CodeSpec> {
        toml::from_str(text).map_err(|e| Error::parse(0, format!("TOML spec: {e}")))
    }

    /// Read a spec file, picking the format from the extension
    /// (`.toml` → TOML, anything else → JSON).
    pub fn from_path(path: &Path) -> Result<CodeSpec> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::unsupported(format!("cannot read {}: {e}", path.display())))?;
        match path.extension().and_then(|e| e.to_str()) {
            Some("toml") => CodeSpec::from_toml_str(&text),
            _ => CodeSpec::from_json_str(&text),
        }
    }

    /// Build the ring and validate the code described by this spec.
    pub fn build(&self) -> Result<(SkewRing, MixedCode)> {
        let ring = self.field.build_ring()?;
        let field = ring.field();
        let ell: FqPoly = ring.poly(parse_coeffs(field, &self.code.ell)?);
        let s_poly: FqPoly = ring.poly(parse_coeffs(field, &self.code.s_poly)?);
        let t: [FqPoly; 4] = [
            ring.poly(parse_coeffs(field, &self.code.t[0])?),
            ring.poly(parse_coeffs(field, &self.code.t[1])?),
            ring.poly(parse_coeffs(field, &self.code.t[2])?),
            ring.poly(parse_coeffs(field, &self.code.t[3])?),
        ];
        let code = MixedCode::build(ring.clone(), self.code.r, self.code.s, ell, s_poly, t)?;
        Ok((ring, code))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const JSON_SPEC: &str = r#"{
        "field": { "p": 3, "m": 2, "modulus": [2, 2, 1] },
        "code": {
            "r": 2, "s": 2,
            "ell": ["1", "1"],
            "t": [["w^2", "1"], ["2", "1"], ["1"], ["1"]]
        }
    }"#;

    const TOML_SPEC: &str = r#"
        [field]
        p = 3
        m = 2
        modulus = [2, 2, 1]
        frobenius_power = 1

        [code]
        r = 2
        s = 2
        ell = ["1", "1"]
        s_poly = []
        t = [["w^2", "1"], ["2", "1"], ["1"], ["1"]]
    "#;

    #[test]
    fn json_and_toml_build_the_same_code() {
        let a = CodeSpec::from_json_str(JSON_SPEC).unwrap();
        let b = CodeSpec::from_toml_str(TOML_SPEC).unwrap();
        assert_eq!(a, b);
        let (_, code_a) = a.build().unwrap();
        let (_, code_b) = b.build().unwrap();
        assert_eq!(code_a.dim(), code_b.dim());
        assert_eq!(code_a.ell(), code_b.ell());
        assert!(code_a.is_separable());
        assert_eq!(code_a.dim(), 1 + 1 + 1 + 2 + 2);
    }

    #[test]
    fn defaults_and_omissions() {
        // frobenius_power defaults to 1, s_poly to empty
        let spec = CodeSpec::from_json_str(JSON_SPEC).unwrap();
        assert_eq!(spec.field.frobenius_power, 1);
        assert!(spec.code.s_poly.is_empty());
    }

    #[test]
    fn bad_inputs_are_rejected_with_parse_errors() {
        // malformed JSON
        assert!(matches!(
            CodeSpec::from_json_str("{"),
            Err(Error::Parse { .. })
        ));
        // unknown fields are typos, not extensions
        let unknown = r#"{
            "field": { "p": 3, "m": 2, "modulus": [2, 2, 1], "extra": 1 },
            "code": { "r": 2, "s": 2, "ell": ["1"], "t": [["1"],["1"],["1"],["1"]] }
        }"#;
        assert!(matches!(CodeSpec::from_json_str(unknown), Err(Error::Parse { .. })));
        // a bad element literal surfaces from the field parser
        let bad_literal = r#"{
            "field": { "p": 3, "m": 2, "modulus": [2, 2, 1] },
            "code": { "r": 2, "s": 2, "ell": ["q"], "t": [["1"],["1"],["1"],["1"]] }
        }"#;
        let spec = CodeSpec::from_json_str(bad_literal).unwrap();
        assert!(spec.build().is_err());
        // an invalid generator tuple surfaces from the code validator
        let bad_code = r#"{
            "field": { "p": 3, "m": 2, "modulus": [2, 2, 1] },
            "code": { "r": 2, "s": 2, "ell": ["w", "1"], "t": [["1"],["1"],["1"],["1"]] }
        }"#;
        let spec = CodeSpec::from_json_str(bad_code).unwrap();
        assert!(matches!(spec.build(), Err(Error::NotADivisor { .. })));
    }

    #[test]
    fn round_trips_through_serde() {
        let spec = CodeSpec::from_json_str(JSON_SPEC).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(CodeSpec::from_json_str(&json).unwrap(), spec);
        let toml_text = toml::to_string(&spec).unwrap();
        assert_eq!(CodeSpec::from_toml_str(&toml_text).unwrap(), spec);
    }
}
