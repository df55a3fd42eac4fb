//! Quantum codes from dual-containing classical codes (CSS construction).
//!
//! A skew-cyclic code `⟨g⟩ ⊆ F_q[x;σ]/⟨x^n−1⟩` contains its Euclidean dual
//! exactly when `x^n − 1` right-divides `h†·h`, where `h` is the left
//! cofactor (`x^n − 1 = h·g`) and `†` the twisted reciprocal. A Σ-cyclic
//! code over `R` contains its dual exactly when each of its four κ
//! components passes the same test, and a separable mixed code does exactly
//! when both blocks do. Since the Gray map preserves duality, a
//! dual-containing mixed code yields an `[[r+4s, 2k−(r+4s), d]]_q` quantum
//! code through the CSS construction applied to its Gray image.
//!
//! [`containment_witness`] exposes the cofactor, the product `h†·h`, and the
//! exact quotient by `x^n − 1`, so callers can audit (or reproduce) the
//! divisibility identity rather than trust a bare boolean.

use crate::error::{Error, Result};
use crate::mixedcode::MixedCode;
use crate::skewpoly::{FqPoly, SkewRing};

/// Evidence for (or against) `⟨g⟩^⊥ ⊆ ⟨g⟩`.
#[derive(Clone, Debug)]
pub struct ContainmentWitness {
    /// Left cofactor `h` with `x^n − 1 = h·g`.
    pub cofactor: FqPoly,
    /// The product `h†·h`.
    pub product: FqPoly,
    /// `Some(q)` with `h†·h = q·(x^n − 1)` when the code is dual-containing,
    /// `None` otherwise.
    pub quotient: Option<FqPoly>,
}

impl ContainmentWitness {
    pub fn holds(&self) -> bool {
        self.quotient.is_some()
    }
}

/// Decide `⟨g⟩^⊥ ⊆ ⟨g⟩` for a σ-cyclic code of length `n`, with evidence.
///
/// Requires `ord(σ) | n` (otherwise the dual is not σ-cyclic and the
/// criterion does not apply) and `g |_r x^n − 1`.
pub fn containment_witness(ring: &SkewRing, n: usize, g: &FqPoly) -> Result<ContainmentWitness> {
    let order = ring.aut_order();
    if n == 0 || n % order as usize != 0 {
        return Err(Error::OrderMismatch { order, n });
    }
    if g.is_zero() {
        return Err(Error::ZeroInput { what: "cyclic generator".into() });
    }
    let g = g.monic()?;
    let modulus: FqPoly = ring.x_pow_minus_one(n);
    let (h, rem) = modulus.divmod_right(&g)?;
    if !rem.is_zero() {
        return Err(Error::NotADivisor {
            what: format!("generator {g} does not right-divide x^{n} - 1"),
        });
    }
    let product = h.reciprocal()?.mul(&h)?;
    let (q, rem) = product.divmod_right(&modulus)?;
    let quotient = if rem.is_zero() { Some(q) } else { None };
    Ok(ContainmentWitness { cofactor: h, product, quotient })
}

/// Does the σ-cyclic code `⟨g⟩` of length `n` contain its Euclidean dual?
pub fn dual_containing_skew_cyclic(ring: &SkewRing, n: usize, g: &FqPoly) -> Result<bool> {
    Ok(containment_witness(ring, n, g)?.holds())
}

/// Does the Σ-cyclic code `⟨Σ κ_i t_i⟩` over `R` contain its dual?
///
/// Equivalent to all four κ-component codes containing theirs.
pub fn dual_containing_components(ring: &SkewRing, s: usize, t: &[FqPoly; 4]) -> Result<bool> {
    for ti in t {
        if !dual_containing_skew_cyclic(ring, s, ti)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Does a separable mixed code contain its dual?
///
/// Conjunction of the field-block and ring-block tests; errors with
/// `NotSeparable` when the code does not split (the blockwise criterion
/// only applies to product codes).
pub fn dual_containing_mixed(code: &MixedCode) -> Result<bool> {
    if !code.is_separable() {
        return Err(Error::NotSeparable);
    }
    let ring = code.ring();
    if !dual_containing_skew_cyclic(ring, code.r(), code.ell())? {
        return Ok(false);
    }
    let t: [FqPoly; 4] = std::array::from_fn(|i| code.t_component(i).clone());
    dual_containing_components(ring, code.s(), &t)
}

/// Parameters of a classical `[n, k, d]_q` linear code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u32,
}

/// Parameters of an `[[n, k, d]]_q` quantum code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QeccParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u32,
    /// Defect zero in the quantum Singleton bound: `2d = n − k + 2`.
    pub mds: bool,
    /// Free-form note on which classical code produced these parameters.
    pub source: String,
}

/// General CSS construction from a pair of classical codes with
/// `D₂^⊥ ⊆ D₁`: an `[[n, k₁+k₂−n, min{d₁, d₂}]]_q` quantum code.
///
/// The containment itself is the caller's obligation (checked upstream by
/// the `dual_containing_*` tests); passing `false` is rejected so a failed
/// test cannot be silently ignored.
pub fn css_pair(
    c1: ClassicalParams,
    c2: ClassicalParams,
    dual_contained: bool,
    source: impl Into<String>,
) -> Result<QeccParams> {
    if c1.n != c2.n || c1.q != c2.q {
        return Err(Error::shape(
            "CSS construction needs codes of the same length over the same field",
        ));
    }
    if !dual_contained {
        return Err(Error::NotDualContaining {
            which: "required containment of the dual was not established".into(),
        });
    }
    let n = c1.n;
    let value = (c1.k + c2.k) as i64 - n as i64;
    if value < 0 {
        return Err(Error::NegativeLogicalDim { n, value });
    }
    let mut p = QeccParams {
        n,
        k: value as usize,
        d: c1.d.min(c2.d),
        q: c1.q,
        mds: false,
        source: source.into(),
    };
    p.mds = singleton_defect(&p)? == 0;
    Ok(p)
}

/// CSS specialization for a single dual-containing code: `[[n, 2k−n, d]]_q`.
pub fn css(
    c: ClassicalParams,
    dual_containing: bool,
    source: impl Into<String>,
) -> Result<QeccParams> {
    css_pair(c, c, dual_containing, source)
}

/// Slack in the quantum Singleton bound: `n − k + 2 − 2d ≥ 0`, with zero
/// exactly for MDS parameters. A negative value is impossible for genuine
/// codes, so it is reported as `BoundViolated` (an upstream distance bug).
pub fn singleton_defect(p: &QeccParams) -> Result<usize> {
    let defect = p.n as i64 - p.k as i64 + 2 - 2 * p.d as i64;
    if defect < 0 {
        return Err(Error::BoundViolated { defect });
    }
    Ok(defect as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;
    use crate::gray::LinearCode;
    use crate::skewpoly::FqPoly;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn f9_ring() -> SkewRing {
        SkewRing::new(FieldCtx::new(3, 2, &[2, 2, 1]).unwrap(), 1).unwrap()
    }

    /// Rowspace oracle: every parity-check row of `⟨g⟩` lies in the code.
    fn contains_own_dual_oracle(ring: &SkewRing, n: usize, g: &FqPoly) -> bool {
        let code = LinearCode::from_skew_cyclic(ring, n, g).unwrap();
        (0..code.parity_check().nrows())
            .all(|i| code.generator().in_rowspace(code.parity_check().row(i)).unwrap())
    }

    fn divisor_pool(ring: &SkewRing, n: usize) -> Vec<FqPoly> {
        let mut pool = vec![ring.one()];
        for d in 1..=n {
            pool.extend(ring.right_divisors(n, d, 1 << 20).unwrap());
        }
        pool
    }

    #[test]
    fn containment_trivial_generators() {
        let ring = f9_ring();
        // g = 1: the whole space contains everything, including its dual
        assert!(dual_containing_skew_cyclic(&ring, 2, &ring.one()).unwrap());
        // g = x^n − 1: the zero code contains nothing
        let modulus: FqPoly = ring.x_pow_minus_one(2);
        assert!(!dual_containing_skew_cyclic(&ring, 2, &modulus).unwrap());
        // length not divisible by the automorphism order
        assert!(matches!(
            dual_containing_skew_cyclic(&ring, 3, &ring.one()),
            Err(Error::OrderMismatch { order: 2, n: 3 })
        ));
        // x + w is not a right divisor of x² − 1 (w has multiplicative
        // order 8, so w·θ(w) = w⁴ ≠ 1)
        let bad = ring.parse_fq_poly("w + x").unwrap();
        assert!(matches!(
            dual_containing_skew_cyclic(&ring, 2, &bad),
            Err(Error::NotADivisor { .. })
        ));
        assert!(matches!(
            dual_containing_skew_cyclic(&ring, 2, &ring.zero()),
            Err(Error::ZeroInput { .. })
        ));
    }

    #[test]
    fn containment_matches_rowspace_oracle() {
        let ring = f9_ring();
        for n in [2usize, 4] {
            let mut holds = 0;
            let mut fails = 0;
            for g in divisor_pool(&ring, n) {
                let by_divisibility = dual_containing_skew_cyclic(&ring, n, &g).unwrap();
                let by_rowspace = contains_own_dual_oracle(&ring, n, &g);
                assert_eq!(
                    by_divisibility, by_rowspace,
                    "divisibility test disagrees with rowspace oracle for g = {g}, n = {n}"
                );
                if by_divisibility {
                    holds += 1;
                } else {
                    fails += 1;
                }
            }
            assert!(holds > 0 && fails > 0, "pool for n = {n} is one-sided");
        }
    }

    #[test]
    fn mixed_containment_matches_gray_and_dual_oracles() {
        let ring = f9_ring();
        let gray = crate::gray::GrayMap::new(ring.field_arc()).unwrap();
        let mut rng = StdRng::seed_from_u64(0xa11ce);
        let (r, s) = (2, 2);
        let ell_pool = divisor_pool(&ring, r);
        let t_pool = divisor_pool(&ring, s);
        // x + w² generates a self-dual length-2 code, giving a guaranteed
        // dual-containing tuple; the all-modulus tuple is a guaranteed
        // non-containing one
        let sd = ring.parse_fq_poly("w^2 + x").unwrap();
        let mut tuples: Vec<(FqPoly, [FqPoly; 4])> = vec![
            (sd.clone(), [sd.clone(), sd.clone(), sd.clone(), sd.clone()]),
            (
                ring.x_pow_minus_one(r),
                std::array::from_fn(|_| ring.x_pow_minus_one(s)),
            ),
        ];
        for _ in 0..20 {
            let ell = ell_pool[rng.gen_range(0..ell_pool.len())].clone();
            let t: [FqPoly; 4] =
                std::array::from_fn(|_| t_pool[rng.gen_range(0..t_pool.len())].clone());
            tuples.push((ell, t));
        }
        let mut holds = 0;
        let mut fails = 0;
        for (ell, t) in tuples {
            let code = MixedCode::build(ring.clone(), r, s, ell, ring.zero(), t).unwrap();
            let dc = dual_containing_mixed(&code).unwrap();
            // oracle 1: the computed dual's generating rows all lie in the code
            let dual_code = crate::duality::dual(&code).unwrap();
            let by_dual = dual_code
                .generating_rows()
                .unwrap()
                .iter()
                .all(|w| code.contains(w).unwrap());
            // oracle 2: parity rows of the Gray image lie in its rowspace
            let image = gray.image_of(&code).unwrap();
            let by_gray = (0..image.parity_check().nrows())
                .all(|i| image.generator().in_rowspace(image.parity_check().row(i)).unwrap());
            assert_eq!(dc, by_dual);
            assert_eq!(dc, by_gray);
            if dc {
                holds += 1;
            } else {
                fails += 1;
            }
        }
        assert!(holds > 0 && fails > 0);
    }

    #[test]
    fn mixed_containment_requires_separable() {
        let ring = f9_ring();
        // valid non-separable tuple: ℓ = x² − 1 with s = 1 forces the
        // compatibility product h₁·s = x² − 1 ≡ 0
        let code = MixedCode::build(
            ring.clone(),
            2,
            2,
            ring.x_pow_minus_one(2),
            ring.one(),
            [ring.one(), ring.one(), ring.one(), ring.one()],
        )
        .unwrap();
        assert!(!code.is_separable());
        assert!(matches!(dual_containing_mixed(&code), Err(Error::NotSeparable)));
    }

    #[test]
    fn pinned_long_containment_instances() {
        let ring = f9_ring();
        // field block: ℓ = (x³ + 2x² + ω³x + ω²)(x + ω²), length 26
        let ell = ring
            .parse_fq_poly("w^2 + w^3*x + 2*x^2 + x^3")
            .unwrap()
            .mul(&ring.parse_fq_poly("w^2 + x").unwrap())
            .unwrap();
        let w = containment_witness(&ring, 26, &ell).unwrap();
        assert!(w.holds());
        let expected_cofactor = ring
            .parse_fq_poly(
                "1 + w^3*x + w^7*x^2 + w^3*x^3 + w^3*x^5 + w*x^6 + w^7*x^7 + w^2*x^8 \
                 + w^3*x^9 + x^10 + w^7*x^11 + w^3*x^12 + w^7*x^13 + 2*x^14 + w^3*x^15 \
                 + w^2*x^16 + w^6*x^18 + w^3*x^19 + w^6*x^20 + w^7*x^21 + x^22",
            )
            .unwrap();
        assert_eq!(w.cofactor, expected_cofactor);
        // constant term of the quotient must be −1·(constant of h†·h) = 2,
        // since h and h† both have constant term 1 here
        let expected_quotient = ring
            .parse_fq_poly(
                "2 + w^6*x + w*x^2 + w^2*x^3 + w^3*x^4 + w^6*x^6 + x^8 + w^2*x^9 \
                 + 2*x^10 + w^2*x^12 + w^7*x^14 + w^2*x^15 + w^5*x^16 + w^6*x^17 + x^18",
            )
            .unwrap();
        assert_eq!(w.quotient.unwrap(), expected_quotient);

        // ring block, length 6: t₁ = (x + 1)(x + ω⁶) and t_i = x + ω⁶
        let t1 = ring
            .parse_fq_poly("1 + x")
            .unwrap()
            .mul(&ring.parse_fq_poly("w^6 + x").unwrap())
            .unwrap();
        let w1 = containment_witness(&ring, 6, &t1).unwrap();
        assert_eq!(
            w1.cofactor,
            ring.parse_fq_poly("w^6 + w^7*x + w*x^2 + w^3*x^3 + x^4").unwrap()
        );
        assert_eq!(
            w1.quotient.as_ref().unwrap(),
            &ring.parse_fq_poly("w^2 + w^6*x^2").unwrap()
        );
        let ti = ring.parse_fq_poly("w^6 + x").unwrap();
        let wi = containment_witness(&ring, 6, &ti).unwrap();
        assert_eq!(
            wi.cofactor,
            ring.parse_fq_poly("w^6 + x + w^6*x^2 + x^3 + w^6*x^4 + x^5").unwrap()
        );
        assert_eq!(
            wi.quotient.as_ref().unwrap(),
            &ring.parse_fq_poly("w^2 + w^2*x^2 + w^2*x^4").unwrap()
        );
        assert!(dual_containing_components(&ring, 6, &[t1, ti.clone(), ti.clone(), ti]).unwrap());
    }

    #[test]
    fn css_parameters_pinned() {
        let p = css(ClassicalParams { n: 50, k: 41, d: 3, q: 9 }, true, "gray image").unwrap();
        assert_eq!((p.n, p.k, p.d, p.q), (50, 32, 3, 9));
        assert!(!p.mds);
        assert_eq!(singleton_defect(&p).unwrap(), 14);

        let p = css(ClassicalParams { n: 6, k: 4, d: 3, q: 9 }, true, "gray image").unwrap();
        assert_eq!((p.n, p.k, p.d), (6, 2, 3));
        assert!(p.mds);
        assert_eq!(singleton_defect(&p).unwrap(), 0);

        let p = css(ClassicalParams { n: 8, k: 6, d: 3, q: 25 }, true, "gray image").unwrap();
        assert_eq!((p.n, p.k, p.d), (8, 4, 3));
        assert!(p.mds);

        let p = css(ClassicalParams { n: 21, k: 15, d: 3, q: 27 }, true, "gray image").unwrap();
        assert_eq!((p.n, p.k, p.d), (21, 9, 3));
        assert_eq!(singleton_defect(&p).unwrap(), 8);

        // self-dual dimension: logical dimension zero is allowed
        let p = css(ClassicalParams { n: 4, k: 2, d: 1, q: 9 }, true, "gray image").unwrap();
        assert_eq!(p.k, 0);
    }

    #[test]
    fn css_guards() {
        let c = ClassicalParams { n: 6, k: 4, d: 3, q: 9 };
        assert!(matches!(
            css(c, false, "x"),
            Err(Error::NotDualContaining { .. })
        ));
        assert!(matches!(
            css(ClassicalParams { n: 6, k: 2, d: 2, q: 9 }, true, "x"),
            Err(Error::NegativeLogicalDim { n: 6, value: -2 })
        ));
        // mismatched pair
        assert!(matches!(
            css_pair(c, ClassicalParams { n: 8, ..c }, true, "x"),
            Err(Error::ShapeMismatch { .. })
        ));
        // a distance too large for the claimed dimensions is an upstream bug
        let fake = QeccParams { n: 4, k: 2, d: 3, q: 9, mds: false, source: String::new() };
        assert!(matches!(singleton_defect(&fake), Err(Error::BoundViolated { defect: -2 })));
    }

    #[test]
    fn css_pair_general_form() {
        let c1 = ClassicalParams { n: 10, k: 6, d: 4, q: 9 };
        let c2 = ClassicalParams { n: 10, k: 7, d: 3, q: 9 };
        let p = css_pair(c1, c2, true, "pair").unwrap();
        assert_eq!((p.n, p.k, p.d), (10, 3, 3));
        // the single-code form is the diagonal of the pair form
        let c = ClassicalParams { n: 6, k: 4, d: 3, q: 9 };
        assert_eq!(css(c, true, "x").unwrap(), css_pair(c, c, true, "x").unwrap());
    }
}
