//! Exact computer algebra for skew-cyclic codes over a mixed alphabet.
//!
//! The library works over a finite field `F_q` (odd characteristic, `q ≤ 2^16`)
//! and the semilocal ring `R = F_q + uF_q + vF_q + uvF_q` with `u² = u`,
//! `v² = v`, `uv = vu`. A code here is a left module of words that live partly
//! over `F_q` (a block of length `r`) and partly over `R` (a block of length
//! `s`), closed under a twisted shift built from a Frobenius automorphism.
//!
//! Pipeline, bottom to top:
//!
//! * [`gf`] — `F_{p^m}` arithmetic on Zech-logarithm tables, with validated
//!   user-supplied moduli so that `w^k` literals mean the same thing in input,
//!   output and stored reference data.
//! * [`ring_r`] — the ring `R` in idempotent (κ) coordinates, where
//!   multiplication is componentwise and units are the elements with four
//!   nonzero components.
//! * [`skewpoly`] — skew polynomials with the twisted product
//!   `(a x^i)(b x^j) = a σ^i(b) x^{i+j}`: right/left division, one-sided gcd
//!   and lcm, reciprocals, coefficient twists, bounded divisor enumeration.
//! * [`mixedcode`] — construction of the mixed codes themselves from a
//!   generator triple `(ℓ, s_poly, t₁..t₄)`, their minimal generating sets,
//!   cardinalities, separability and punctured parts.
//! * [`linalg`] + [`gray`] — dense `F_q` linear algebra, the 4×4 Gray matrix,
//!   image codes with generator/check matrices, and the exact minimum-distance
//!   engine (`enumerate` and `support_search` strategies).
//! * [`duality`] — the mixed inner product, the associated bilinear form on a
//!   common cyclic cover, closed-form dual generators and a brute-force dual
//!   oracle that every closed-form result is checked against.
//! * [`qecc`] — dual-containment tests, CSS construction and quantum
//!   Singleton/MDS reporting.
//! * [`config`] — serde schemas for the JSON/TOML spec files that describe
//!   a field and a code on disk.
//!
//! All arithmetic is exact; nothing here uses floating point. Randomness only
//! appears in tests. Deterministic output ordering is part of the contract:
//! the same inputs produce byte-identical reports regardless of thread count.

pub mod config;
pub mod duality;
pub mod error;
pub mod gf;
pub mod gray;
pub mod linalg;
pub mod mixedcode;
pub mod qecc;
pub mod ring_r;
pub mod skewpoly;

pub use config::{CodeBlock, CodeSpec, FieldSpec};
pub use duality::{dual, duality_profile, DualityProfile};
pub use error::{Error, Result};
pub use gf::{FieldCtx, FieldElement};
pub use gray::{DistanceReport, GrayMap, LinearCode, Strategy};
pub use linalg::Matrix;
pub use mixedcode::{MixedCode, MixedWord};
pub use qecc::{ClassicalParams, ContainmentWitness, QeccParams};
pub use ring_r::RElement;
pub use skewpoly::{FqPoly, RPoly, SkewPoly, SkewRing, SkewScalar};
