//! Duals of mixed codes: inner product, bilinear cover pairing, closed-form
//! dual generators and a brute-force oracle.
//!
//! The ambient space `F_q^r × R^s` carries the `R`-valued form
//!
//! ```text
//! d · d′ = κ₁ Σ_j g_j g′_j  +  Σ_i b_i b′_i
//! ```
//!
//! (the field block only touches the κ₁ component). The dual of a code is
//! everything orthogonal to it under this form. Since the form is
//! `F_q`-bilinear and a mixed code is the `F_q`-span of its generating rows,
//! the dual is the nullspace of one small matrix over `F_q` — that nullspace
//! is the *oracle* here, and every closed-form result below is checked
//! against it.
//!
//! The closed forms express the dual's generator tuple `(ℓ̄, s̄, t̄₁..t̄₄)`
//! in terms of the primal tuple via reciprocal polynomials, coefficientwise
//! automorphism twists `Ψ^k`, and exact right divisions of `x^n − 1`. They
//! are derived through a pairing `o(d, d′)` on a common cyclic cover of
//! length `𝔪 = r·s`: `d` and all its joint twisted shifts are orthogonal to
//! `d′` exactly when `o(d, d′) ≡ 0 (mod x^𝔪 − 1)` — see [`o_pairing`].
//!
//! Everything in this module that produces a dual *code* requires the
//! automorphism order to divide both block lengths (otherwise the dual need
//! not be shift-closed and has no generator tuple); the raw oracle matrix
//! does not.

use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::linalg::Matrix;
use crate::mixedcode::{combine_kappa, MixedCode, MixedWord};
use crate::ring_r::RElement;
use crate::skewpoly::{FqPoly, RPoly, SkewRing};

/// The `R`-valued inner product `κ₁⟨g, g′⟩ + ⟨b, b′⟩`.
pub fn inner_product(ring: &SkewRing, a: &MixedWord, b: &MixedWord) -> Result<RElement> {
    if a.g.len() != b.g.len() || a.b.len() != b.b.len() {
        return Err(Error::shape("mixed words have different block lengths"));
    }
    let f = ring.field();
    let mut field_part = FieldElement::Zero;
    for (&x, &y) in a.g.iter().zip(&b.g) {
        field_part = f.add(field_part, f.mul(x, y));
    }
    let mut acc = RElement::from_kappa([
        field_part,
        FieldElement::Zero,
        FieldElement::Zero,
        FieldElement::Zero,
    ]);
    for (&x, &y) in a.b.iter().zip(&b.b) {
        acc = RElement::add(f, acc, RElement::mul(f, x, y));
    }
    Ok(acc)
}

/// Embed a field polynomial into `R[x;Σ]` supported on the κ₁ component.
fn kappa1_embed(ring: &SkewRing, p: &FqPoly) -> RPoly {
    combine_kappa(ring, &[p.clone(), ring.zero(), ring.zero(), ring.zero()])
}

/// The pairing on the common cyclic cover of length `𝔪 = r·s`.
///
/// `o(d, d′) ≡ 0 (mod x^𝔪 − 1)` holds exactly when every joint twisted
/// shift of `d` is orthogonal to `d′` under [`inner_product`]. The result is
/// returned reduced modulo `x^𝔪 − 1`.
pub fn o_pairing(
    ring: &SkewRing,
    r: usize,
    s: usize,
    d: (&FqPoly, &RPoly),
    d_prime: (&FqPoly, &RPoly),
) -> Result<RPoly> {
    if r == 0 || s == 0 {
        return Err(Error::unsupported("block lengths must be positive"));
    }
    let m = r * s;
    let g = d.0.fold_mod_xn_minus_one(r);
    let b = d.1.fold_mod_xn_minus_one(s);
    let gp = d_prime.0.fold_mod_xn_minus_one(r);
    let bp = d_prime.1.fold_mod_xn_minus_one(s);

    let mut total: RPoly = ring.zero();
    if !g.is_zero() && !gp.is_zero() {
        // κ₁ · g · Ψ^{𝔪−deg g′}(g′†) · x^{𝔪−1−deg g′} · Γ_{𝔪/r}(x^r),
        // computed entirely on the field side and embedded at the end
        let dg = gp.degree().expect("nonzero");
        let twisted = gp.reciprocal()?.psi((m - dg) as u64);
        let prod = g
            .mul(&twisted)?
            .mul(&ring.monomial(FieldElement::ONE, m - 1 - dg))?
            .mul(&ring.gamma(m / r, r))?;
        total = total.add(&kappa1_embed(ring, &prod))?;
    }
    if !b.is_zero() && !bp.is_zero() {
        let db = bp.degree().expect("nonzero");
        let twisted = bp.reciprocal()?.psi((m - db) as u64);
        let prod = b
            .mul(&twisted)?
            .mul(&ring.monomial(RElement::ONE, m - 1 - db))?
            .mul(&ring.gamma(m / s, s))?;
        total = total.add(&prod)?;
    }
    Ok(total.fold_mod_xn_minus_one(m))
}

/// The orthogonality conditions against a code's generating rows, as one
/// matrix over `F_q` acting on κ-flattened words of length `r + 4s`.
///
/// Each generating row contributes four rows (one per κ component); the
/// dual code, as a set, is exactly the nullspace.
pub fn dual_form_matrix(code: &MixedCode) -> Result<Matrix> {
    let (r, s) = (code.r(), code.s());
    let rows = code.generating_rows()?;
    let mut data = Vec::with_capacity(rows.len() * 4);
    for w in &rows {
        // κ₁ equation: field block + κ₁ components of the ring block
        let mut row1 = vec![FieldElement::Zero; r + 4 * s];
        row1[..r].copy_from_slice(&w.g);
        for (i, &b) in w.b.iter().enumerate() {
            row1[r + 4 * i] = b.kappa[0];
        }
        data.push(row1);
        // κ_c equations (c = 2, 3, 4): ring block only
        for c in 1..4 {
            let mut row = vec![FieldElement::Zero; r + 4 * s];
            for (i, &b) in w.b.iter().enumerate() {
                row[r + 4 * i + c] = b.kappa[c];
            }
            data.push(row);
        }
    }
    Matrix::from_rows_with_cols(code.ring().field_arc(), data, r + 4 * s)
}

/// Basis of the dual code in κ-flattened coordinates (brute-force oracle).
pub fn dual_oracle_basis(code: &MixedCode) -> Result<Matrix> {
    Ok(dual_form_matrix(code)?.nullspace())
}

/// The dual generator tuple produced by [`dual`], before rebuilding.
#[derive(Clone, Debug)]
pub struct DualGenerators {
    pub ell_bar: FqPoly,
    pub s_bar: FqPoly,
    pub t_bar: [FqPoly; 4],
}

/// Closed-form `ℓ̄` and `t̄₁..t̄₄` (everything the formulas determine).
///
/// `ℓ̄ = (x^r−1) / gcd_left(Ψ^{𝔪−deg ℓ}(ℓ†), Ψ^{𝔪−deg s}(s†))` and
/// `t̄_i = (x^s−1) / Ψ^{𝔪−deg e_i}(e_i†)`, with `e_1 = u·t₁` for the left
/// cofactor `u` satisfying `u·s = lclm(s, ℓ)` (so `e_1 = t₁` when the code
/// is separable) and `e_i = t_i` for `i ≥ 2`. All divisions are exact right
/// divisions; quotients are monic-normalized.
pub fn closed_form_dual_generators(code: &MixedCode) -> Result<(FqPoly, [FqPoly; 4])> {
    let ring = code.ring();
    let (r, s) = (code.r(), code.s());
    let m = r * s;
    let xr: FqPoly = ring.x_pow_minus_one(r);
    let xs: FqPoly = ring.x_pow_minus_one(s);

    let ell = code.ell();
    let dl = ell.degree().expect("generator is nonzero");
    let twist_ell = ell.reciprocal()?.psi((m - dl) as u64);
    // The denominator class is only stable under RIGHT unit scaling (left
    // scaling the divisor changes the left-ideal class of the quotient), so
    // normalize leading coefficients by right multiplication only.
    let denom = if code.s_poly().is_zero() {
        twist_ell.monic_right()?
    } else {
        let ds = code.s_poly().degree().expect("nonzero");
        let twist_s = code.s_poly().reciprocal()?.psi((m - ds) as u64);
        twist_ell.gcd_left(&twist_s)?
    };
    let (ell_bar, rem) = xr.divmod_right(&denom)?;
    if !rem.is_zero() {
        return Err(Error::OracleMismatch {
            what: "twisted reciprocal of the field generator does not divide x^r - 1".into(),
        });
    }
    let ell_bar = ell_bar.monic()?;

    let mut t_bar = [ring.zero(), ring.zero(), ring.zero(), ring.zero()];
    for i in 0..4 {
        let ti = code.t_component(i);
        let e = if i == 0 && !code.s_poly().is_zero() {
            // u·t₁ with u·s = lclm(s, ℓ)
            let lclm = code.s_poly().lcm_left(ell)?;
            let u = lclm.div_exact_right(code.s_poly())?;
            u.mul(ti)?.monic()?
        } else {
            ti.clone()
        };
        let de = e.degree().expect("component generator is nonzero");
        if de > m {
            return Err(Error::OracleMismatch {
                what: format!("dual component degree data out of range: {de} > {m}"),
            });
        }
        let denom_i = e.reciprocal()?.psi((m - de) as u64);
        let (q, rem) = xs.divmod_right(&denom_i)?;
        if !rem.is_zero() {
            return Err(Error::DenominatorNotDivisor {
                what: format!(
                    "twisted reciprocal of component {} does not divide x^{s} - 1",
                    i + 1
                ),
            });
        }
        t_bar[i] = q.monic()?;
    }
    Ok((ell_bar, t_bar))
}

/// Recover `s̄`: fix the ring part of the mixed dual generator to `t̄` and
/// solve the κ₁-component orthogonality equations for the field part, then
/// reduce modulo `ℓ̄`.
fn solve_s_bar(
    code: &MixedCode,
    ell_bar: &FqPoly,
    t_bar: &[FqPoly; 4],
) -> Result<FqPoly> {
    let ring = code.ring();
    let f = ring.field();
    let (r, s) = (code.r(), code.s());
    let rows = code.generating_rows()?;
    // ring-block vector of the candidate generator word; fold first so that
    // a full-modulus component (t̄_c = x^s − 1, i.e. a zero κ_c block)
    // becomes the zero word instead of leaking raw coefficients
    let tb: [FqPoly; 4] = std::array::from_fn(|c| t_bar[c].fold_mod_xn_minus_one(s));
    let t_word: Vec<RElement> = (0..s)
        .map(|i| {
            RElement::from_kappa([
                tb[0].coeff(i),
                tb[1].coeff(i),
                tb[2].coeff(i),
                tb[3].coeff(i),
            ])
        })
        .collect();
    let mut a_rows = Vec::with_capacity(rows.len());
    let mut rhs = Vec::with_capacity(rows.len());
    for w in &rows {
        // κ_c components (c ≥ 2) must vanish with no free unknowns
        for c in 1..4 {
            let mut acc = FieldElement::Zero;
            for (tv, wb) in t_word.iter().zip(&w.b) {
                acc = f.add(acc, f.mul(tv.kappa[c], wb.kappa[c]));
            }
            if !acc.is_zero() {
                return Err(Error::OracleMismatch {
                    what: format!("dual ring components are not orthogonal (kappa {})", c + 1),
                });
            }
        }
        a_rows.push(w.g.clone());
        let mut acc = FieldElement::Zero;
        for (tv, wb) in t_word.iter().zip(&w.b) {
            acc = f.add(acc, f.mul(tv.kappa[0], wb.kappa[0]));
        }
        rhs.push(f.neg(acc));
    }
    let a = Matrix::from_rows_with_cols(ring.field_arc(), a_rows, r)?;
    let y = a.solve_right(&rhs)?.ok_or_else(|| Error::OracleMismatch {
        what: "no field part completes the dual ring generator".into(),
    })?;
    ring.poly(y).rem_right(ell_bar)
}

/// The dual of a mixed code, rebuilt as a mixed code and verified against
/// the brute-force oracle.
///
/// Requires the automorphism order to divide both `r` and `s`. Fails with
/// `OracleMismatch` if the closed-form generators do not regenerate the
/// oracle nullspace exactly.
pub fn dual(code: &MixedCode) -> Result<MixedCode> {
    let ring = code.ring();
    let order = ring.aut_order();
    if code.r() % order as usize != 0 {
        return Err(Error::OrderMismatch { order, n: code.r() });
    }
    if code.s() % order as usize != 0 {
        return Err(Error::OrderMismatch { order, n: code.s() });
    }
    let (ell_bar, t_bar) = closed_form_dual_generators(code)?;
    let s_bar = if code.is_separable() {
        ring.zero()
    } else {
        solve_s_bar(code, &ell_bar, &t_bar)?
    };
    let dual_code = MixedCode::build(
        ring.clone(),
        code.r(),
        code.s(),
        ell_bar,
        s_bar,
        t_bar,
    )?;
    // the rebuilt code must coincide with the oracle nullspace
    let got = dual_code.generator_matrix()?.row_space_basis();
    let want = dual_oracle_basis(code)?.row_space_basis();
    if got != want {
        return Err(Error::OracleMismatch {
            what: "closed-form dual generators do not span the oracle dual".into(),
        });
    }
    Ok(dual_code)
}

/// Cardinality exponents of a code, its punctures, their duals and the
/// punctures of its dual — all base `q`, all determined by generator
/// degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityProfile {
    /// `log_q |D| = deg f + Σ deg h_i`.
    pub dim: usize,
    /// `log_q |D^⊥| = r + 4s − dim`.
    pub dim_dual: usize,
    /// Puncture to the field block: `r − deg gcd_right(ℓ, s)`.
    pub field_puncture: usize,
    /// Puncture to the ring block: `4s − Σ deg t_i`.
    pub ring_puncture: usize,
    /// κ components of the ring puncture: `s − deg t_i`.
    pub ring_puncture_kappa: [usize; 4],
    /// Dual of the field puncture: `deg gcd_right(ℓ, s)`.
    pub field_puncture_dual: usize,
    /// Dual of the ring puncture: `Σ deg t_i`.
    pub ring_puncture_dual: usize,
    /// κ components of the ring puncture's dual: `deg t_i`.
    pub ring_puncture_dual_kappa: [usize; 4],
    /// Field-block puncture of the dual code: `deg ℓ`.
    pub dual_field_puncture: usize,
    /// Ring-block puncture of the dual code.
    pub dual_ring_puncture: usize,
    /// κ components of the dual's ring puncture; the κ₁ entry is
    /// `deg t₁ + deg ℓ − deg gcd_right(ℓ, s)`, the others `deg t_i`.
    pub dual_ring_puncture_kappa: [usize; 4],
}

pub fn duality_profile(code: &MixedCode) -> Result<DualityProfile> {
    let (r, s) = (code.r(), code.s());
    let deg_ell = code.ell().degree().expect("nonzero");
    let deg_gcd = code
        .field_puncture_generator()?
        .degree()
        .expect("nonzero");
    let deg_t: Vec<usize> = (0..4)
        .map(|i| code.t_component(i).degree().expect("nonzero"))
        .collect();
    let sum_t: usize = deg_t.iter().sum();
    let kappa1_dual_s = deg_t[0] + deg_ell - deg_gcd;
    Ok(DualityProfile {
        dim: code.dim(),
        dim_dual: r + 4 * s - code.dim(),
        field_puncture: r - deg_gcd,
        ring_puncture: 4 * s - sum_t,
        ring_puncture_kappa: [
            s - deg_t[0],
            s - deg_t[1],
            s - deg_t[2],
            s - deg_t[3],
        ],
        field_puncture_dual: deg_gcd,
        ring_puncture_dual: sum_t,
        ring_puncture_dual_kappa: [deg_t[0], deg_t[1], deg_t[2], deg_t[3]],
        dual_field_puncture: deg_ell,
        dual_ring_puncture: sum_t + deg_ell - deg_gcd,
        dual_ring_puncture_kappa: [kappa1_dual_s, deg_t[1], deg_t[2], deg_t[3]],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};


    fn f9_ring() -> SkewRing {
        SkewRing::new(FieldCtx::new(3, 2, &[2, 2, 1]).unwrap(), 1).unwrap()
    }

    fn random_word(ring: &SkewRing, rng: &mut StdRng, r: usize, s: usize) -> MixedWord {
        let f = ring.field();
        MixedWord {
            g: (0..r).map(|_| f.element_at(rng.gen_range(0..f.q()))).collect(),
            b: (0..s)
                .map(|_| {
                    RElement::from_kappa([
                        f.element_at(rng.gen_range(0..f.q())),
                        f.element_at(rng.gen_range(0..f.q())),
                        f.element_at(rng.gen_range(0..f.q())),
                        f.element_at(rng.gen_range(0..f.q())),
                    ])
                })
                .collect(),
        }
    }

    /// A pool of valid component generators: monic right divisors of
    /// `x^n − 1` of every degree (small n, exhaustive).
    fn divisor_pool(ring: &SkewRing, n: usize) -> Vec<FqPoly> {
        let mut pool = vec![ring.one()];
        for d in 1..=n {
            pool.extend(ring.right_divisors(n, d, 1 << 20).unwrap());
        }
        pool
    }

    #[test]
    fn inner_product_pinned_and_bilinear() {
        let ring = f9_ring();
        let f = ring.field();
        let mut rng = StdRng::seed_from_u64(0xd0a1);
        // pinned: disjoint κ support ⟹ ring part contributes nothing
        let a = MixedWord {
            g: vec![FieldElement::ONE],
            b: vec![RElement::idempotent(1)],
        };
        let b = MixedWord {
            g: vec![FieldElement::ONE],
            b: vec![RElement::idempotent(2)],
        };
        let ip = inner_product(&ring, &a, &b).unwrap();
        assert_eq!(ip, RElement::idempotent(1));
        // bilinearity over F_q in the first slot
        for _ in 0..50 {
            let x = random_word(&ring, &mut rng, 2, 2);
            let y = random_word(&ring, &mut rng, 2, 2);
            let z = random_word(&ring, &mut rng, 2, 2);
            let c = f.element_at(rng.gen_range(0..f.q()));
            let lhs = {
                let sum = MixedWord {
                    g: x.g.iter().zip(&y.g).map(|(&p, &q)| f.add(f.mul(c, p), q)).collect(),
                    b: x.b
                        .iter()
                        .zip(&y.b)
                        .map(|(&p, &q)| RElement::add(f, RElement::scale(f, c, p), q))
                        .collect(),
                };
                inner_product(&ring, &sum, &z).unwrap()
            };
            let rhs = RElement::add(
                f,
                RElement::scale(f, c, inner_product(&ring, &x, &z).unwrap()),
                inner_product(&ring, &y, &z).unwrap(),
            );
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn cover_pairing_detects_shift_orthogonality() {
        let ring = f9_ring();
        let mut rng = StdRng::seed_from_u64(0xd0a2);
        let (r, s) = (2, 2);
        let m = r * s;
        let mut zero_cases = 0;
        let mut nonzero_cases = 0;
        for _ in 0..300 {
            let d = random_word(&ring, &mut rng, r, s);
            let dp = random_word(&ring, &mut rng, r, s);
            let mut all_orthogonal = true;
            let mut shifted = d.clone();
            for _ in 0..m {
                if !inner_product(&ring, &shifted, &dp).unwrap().is_zero() {
                    all_orthogonal = false;
                    break;
                }
                shifted = shifted.shift(&ring);
            }
            let pairing = o_pairing(
                &ring,
                r,
                s,
                (&d.g_poly(&ring), &d.b_poly(&ring)),
                (&dp.g_poly(&ring), &dp.b_poly(&ring)),
            )
            .unwrap();
            assert_eq!(
                pairing.is_zero(),
                all_orthogonal,
                "cover pairing disagrees with shift orthogonality"
            );
            if all_orthogonal {
                zero_cases += 1;
            } else {
                nonzero_cases += 1;
            }
        }
        assert!(nonzero_cases > 0);
        // random pairs are rarely orthogonal; force zero cases from a code's
        // generating rows paired with its oracle dual (the code is shift
        // closed, so every shift of a row stays orthogonal to dual words)
        let ell = ring.parse_fq_poly("1 + x").unwrap();
        let t1 = ring.parse_fq_poly("w^2 + x").unwrap();
        let code = MixedCode::build(
            ring.clone(),
            r,
            s,
            ell,
            ring.zero(),
            [t1.clone(), t1, ring.one(), ring.one()],
        )
        .unwrap();
        let dual_basis = dual_oracle_basis(&code).unwrap();
        for row in 0..dual_basis.nrows() {
            let dp = MixedWord::from_kappa_vec(r, s, dual_basis.row(row)).unwrap();
            for d in code.generating_rows().unwrap() {
                let pairing = o_pairing(
                    &ring,
                    r,
                    s,
                    (&d.g_poly(&ring), &d.b_poly(&ring)),
                    (&dp.g_poly(&ring), &dp.b_poly(&ring)),
                )
                .unwrap();
                assert!(pairing.is_zero());
                zero_cases += 1;
            }
        }
        assert!(zero_cases > 10);
    }

    #[test]
    fn dual_of_separable_code_verified() {
        let ring = f9_ring();
        let ell = ring.parse_fq_poly("1 + x").unwrap();
        let t1 = ring.parse_fq_poly("w^2 + x").unwrap();
        let t2 = ring.parse_fq_poly("2 + x").unwrap();
        let code = MixedCode::build(
            ring.clone(),
            2,
            2,
            ell,
            ring.zero(),
            [t1, t2, ring.one(), ring.one()],
        )
        .unwrap();
        let d = dual(&code).unwrap();
        // cardinality law |D| · |D^⊥| = q^{r+4s}
        assert_eq!(code.dim() + d.dim(), 2 + 4 * 2);
        assert!(d.is_separable());
        // rows span both codes, so pairwise row orthogonality covers all
        // pairs by bilinearity
        for w in code.generating_rows().unwrap() {
            for v in d.generating_rows().unwrap() {
                assert!(inner_product(&ring, &w, &v).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn dual_matches_oracle_across_separable_codes() {
        let ring = f9_ring();
        let mut rng = StdRng::seed_from_u64(0xd0a3);
        let (r, s) = (2, 2);
        let ell_pool = divisor_pool(&ring, r);
        let t_pool = divisor_pool(&ring, s);
        for _ in 0..25 {
            let ell = ell_pool[rng.gen_range(0..ell_pool.len())].clone();
            let t: [FqPoly; 4] = std::array::from_fn(|_| {
                t_pool[rng.gen_range(0..t_pool.len())].clone()
            });
            let code =
                MixedCode::build(ring.clone(), r, s, ell, ring.zero(), t).unwrap();
            let d = dual(&code).unwrap();
            assert_eq!(code.dim() + d.dim(), r + 4 * s);
            let profile = duality_profile(&code).unwrap();
            assert_eq!(profile.dim_dual, d.dim());
            // dual of the dual is the original code
            let dd = dual(&d).unwrap();
            assert_eq!(
                dd.generator_matrix().unwrap().row_space_basis(),
                code.generator_matrix().unwrap().row_space_basis()
            );
        }
    }

    #[test]
    fn dual_of_nonseparable_code_verified() {
        let ring = f9_ring();
        let mut rng = StdRng::seed_from_u64(0xd0a4);
        let (r, s) = (2, 2);
        let ell_pool: Vec<FqPoly> = divisor_pool(&ring, r)
            .into_iter()
            .filter(|p| p.degree().unwrap_or(0) >= 1)
            .collect();
        let t_pool = divisor_pool(&ring, s);
        let f = ring.field();
        let mut tested = 0;
        'outer: for _ in 0..400 {
            let ell = ell_pool[rng.gen_range(0..ell_pool.len())].clone();
            let t: [FqPoly; 4] = std::array::from_fn(|_| {
                t_pool[rng.gen_range(0..t_pool.len())].clone()
            });
            // random candidate s-part of degree < deg ℓ; keep only tuples
            // the validator accepts
            let ds = ell.degree().unwrap();
            let coeffs: Vec<FieldElement> =
                (0..ds).map(|_| f.element_at(rng.gen_range(0..f.q()))).collect();
            let s_poly = ring.poly(coeffs);
            if s_poly.is_zero() {
                continue;
            }
            let code = match MixedCode::build(ring.clone(), r, s, ell, s_poly, t) {
                Ok(c) => c,
                Err(_) => continue,
            };
            if code.is_separable() {
                continue;
            }
            let d = dual(&code).unwrap();
            assert_eq!(code.dim() + d.dim(), r + 4 * s);
            tested += 1;
            if tested >= 12 {
                break 'outer;
            }
        }
        assert!(tested >= 5, "not enough valid non-separable tuples sampled");
    }

    #[test]
    fn profile_matches_oracle_puncture_ranks() {
        let ring = f9_ring();
        let mut rng = StdRng::seed_from_u64(0xd0a5);
        let (r, s) = (2, 2);
        let ell_pool = divisor_pool(&ring, r);
        let t_pool = divisor_pool(&ring, s);
        for _ in 0..15 {
            let ell = ell_pool[rng.gen_range(0..ell_pool.len())].clone();
            let t: [FqPoly; 4] = std::array::from_fn(|_| {
                t_pool[rng.gen_range(0..t_pool.len())].clone()
            });
            let code =
                MixedCode::build(ring.clone(), r, s, ell, ring.zero(), t).unwrap();
            let profile = duality_profile(&code).unwrap();
            let dual_basis = dual_oracle_basis(&code).unwrap();
            assert_eq!(dual_basis.rank(), profile.dim_dual);
            // puncture the dual basis to the field block
            let field_cols: Vec<Vec<FieldElement>> = (0..dual_basis.nrows())
                .map(|i| dual_basis.row(i)[..r].to_vec())
                .collect();
            let m = Matrix::from_rows(ring.field_arc(), field_cols).unwrap();
            assert_eq!(m.rank(), profile.dual_field_puncture);
            // κ components of the dual's ring puncture
            for c in 0..4 {
                let comp: Vec<Vec<FieldElement>> = (0..dual_basis.nrows())
                    .map(|i| {
                        (0..s).map(|j| dual_basis.at(i, r + 4 * j + c)).collect()
                    })
                    .collect();
                let m = Matrix::from_rows(ring.field_arc(), comp).unwrap();
                assert_eq!(
                    m.rank(),
                    profile.dual_ring_puncture_kappa[c],
                    "kappa {} of the dual ring puncture",
                    c + 1
                );
            }
        }
    }

    #[test]
    fn gray_image_of_dual_is_dual_of_gray_image() {
        let ring = f9_ring();
        let gray = crate::gray::GrayMap::new(ring.field_arc()).unwrap();
        let ell = ring.parse_fq_poly("1 + x").unwrap();
        let t1 = ring.parse_fq_poly("w^2 + x").unwrap();
        let code = MixedCode::build(
            ring.clone(),
            2,
            2,
            ell,
            ring.zero(),
            [t1.clone(), t1, ring.one(), ring.one()],
        )
        .unwrap();
        let d = dual(&code).unwrap();
        let image = gray.image_of(&code).unwrap();
        let image_dual = gray.image_of(&d).unwrap();
        // Careful: the Gray matrix is orthogonal (M·Mᵀ = I), so images of
        // orthogonal complements stay orthogonal complements.
        assert_eq!(
            image_dual.generator().row_space_basis(),
            image.parity_check().row_space_basis()
        );
    }

    #[test]
    fn dual_requires_compatible_block_lengths() {
        let ring = f9_ring();
        // order 2 does not divide r = 3
        let ell = ring.parse_fq_poly("2 + x").unwrap(); // x − 1 divides x³ − 1
        let t1 = ring.parse_fq_poly("2 + x").unwrap();
        let code = MixedCode::build(
            ring.clone(),
            3,
            2,
            ell,
            ring.zero(),
            [t1, ring.one(), ring.one(), ring.one()],
        )
        .unwrap();
        assert!(matches!(
            dual(&code),
            Err(Error::OrderMismatch { order: 2, n: 3 })
        ));
    }

    #[test]
    fn duality_profile_pinned() {
        let ring = f9_ring();
        let ell = ring.parse_fq_poly("1 + x").unwrap();
        let t1 = ring.parse_fq_poly("w^2 + x").unwrap();
        let t2 = ring.parse_fq_poly("2 + x^2").unwrap(); // the whole modulus
        let code = MixedCode::build(
            ring.clone(),
            2,
            2,
            ell,
            ring.zero(),
            [t1, t2, ring.one(), ring.one()],
        )
        .unwrap();
        let p = duality_profile(&code).unwrap();
        assert_eq!(p.dim, 1 + 1 + 0 + 2 + 2);
        assert_eq!(p.dim_dual, 10 - 6);
        assert_eq!(p.field_puncture, 1);
        assert_eq!(p.ring_puncture, 8 - (1 + 2 + 0 + 0));
        assert_eq!(p.ring_puncture_kappa, [1, 0, 2, 2]);
        assert_eq!(p.dual_field_puncture, 1);
        assert_eq!(p.dual_ring_puncture_kappa, [1 + 1 - 1, 2, 0, 0]);
    }
}
