//! `F_{p^m}` arithmetic on Zech-logarithm tables.
//!
//! A [`FieldCtx`] is built from an odd prime `p`, an extension degree `m` and
//! a user-supplied monic modulus whose root `w` must be a *primitive* element
//! of the field. Keeping the modulus user-supplied (instead of auto-chosen)
//! means that a literal like `w^17` denotes the same element in input files,
//! reports and stored reference data.
//!
//! Elements are stored in log form: either zero or an exponent `k` with the
//! element equal to `w^k`, `0 ≤ k < q−1`. Multiplication is exponent addition;
//! addition goes through the Zech table `z` with `1 + w^d = w^{z(d)}`. Tables
//! are O(q) and built once at context construction; `q ≤ 2^16` is enforced.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on the field size so that the O(q) tables stay small.
pub const MAX_Q: u64 = 1 << 16;

/// An element of `F_q` in log representation. Values are only meaningful
/// relative to the [`FieldCtx`] they were created by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Zero,
    /// `w^k` with `0 ≤ k < q−1`.
    Pow(u32),
}

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement::Zero;
    pub const ONE: FieldElement = FieldElement::Pow(0);

    #[inline]
    pub fn is_zero(self) -> bool {
        matches!(self, FieldElement::Zero)
    }

    /// The exponent if nonzero.
    #[inline]
    pub fn log(self) -> Option<u32> {
        match self {
            FieldElement::Zero => None,
            FieldElement::Pow(k) => Some(k),
        }
    }
}

/// Sentinel in the Zech table for `1 + w^d = 0`.
const ZECH_NONE: u32 = u32::MAX;

/// A validated `F_{p^m}` context: modulus, log tables, Frobenius caches.
pub struct FieldCtx {
    p: u32,
    m: u32,
    q: u32,
    /// q − 1, the order of the multiplicative group.
    q1: u32,
    /// Ascending coefficients `c_0 .. c_m` of the modulus, `c_m = 1`.
    modulus: Vec<u32>,
    /// `pow_enc[k]` = coordinate encoding of `w^k` (base-p digits).
    pow_enc: Vec<u32>,
    /// Encoding → log; `LOG_NONE` for the zero encoding.
    enc_log: Vec<u32>,
    /// Zech logarithms: `1 + w^d = w^{zech[d]}`, `ZECH_NONE` if the sum is 0.
    zech: Vec<u32>,
    /// Log of −1, i.e. (q−1)/2 for odd q.
    neg_log: u32,
    /// `p^i mod (q−1)` for `i = 0..=m`, used by Frobenius application.
    frob_exp: Vec<u32>,
}

const LOG_NONE: u32 = u32::MAX;

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}
impl Eq for FieldCtx {}

impl FieldCtx {
    /// Build and validate a field context.
    ///
    /// `modulus` lists ascending coefficients `c_0..c_m` of a monic degree-`m`
    /// polynomial over `F_p`. It must be irreducible with a primitive root.
    pub fn new(p: u32, m: u32, modulus: &[u32]) -> Result<Arc<FieldCtx>> {
        if p < 3 || !is_prime(p as u64) {
            return Err(Error::NotPrime { p: p as u64 });
        }
        if m == 0 {
            return Err(Error::unsupported("extension degree m must be at least 1"));
        }
        let q64 = (p as u64).checked_pow(m).filter(|&q| q <= MAX_Q).ok_or_else(|| {
            Error::unsupported(format!("q = {p}^{m} exceeds the 2^16 table limit"))
        })?;
        let q = q64 as u32;
        if modulus.len() != m as usize + 1 {
            return Err(Error::unsupported(format!(
                "modulus must list {} ascending coefficients, got {}",
                m + 1,
                modulus.len()
            )));
        }
        let modulus: Vec<u32> = modulus.iter().map(|&c| c % p).collect();
        if modulus[m as usize] != 1 {
            return Err(Error::unsupported("modulus must be monic"));
        }
        if !is_irreducible(p, &modulus) {
            return Err(Error::NotIrreducible { p: p as u64, modulus });
        }

        // Walk w^0, w^1, ... by multiplying by x mod the modulus. An early
        // return to 1 means the root is not primitive.
        let q1 = q - 1;
        let mut pow_enc = vec![0u32; q1 as usize];
        let mut enc_log = vec![LOG_NONE; q as usize];
        let mut v = vec![0u32; m as usize];
        v[0] = 1;
        for k in 0..q1 {
            let enc = encode(&v, p);
            if enc == 1 && k > 0 {
                return Err(Error::NotPrimitive { q: q as u64, modulus });
            }
            pow_enc[k as usize] = enc;
            enc_log[enc as usize] = k;
            mul_by_x(&mut v, p, &modulus);
        }
        if encode(&v, p) != 1 {
            return Err(Error::NotPrimitive { q: q as u64, modulus });
        }

        // Zech table: decode w^d, add 1 to the constant digit, look it up.
        let mut zech = vec![0u32; q1 as usize];
        let mut neg_log = 0u32;
        for d in 0..q1 {
            let enc = pow_enc[d as usize];
            let c0 = enc % p;
            let bumped = enc - c0 + (c0 + 1) % p;
            if bumped == 0 {
                zech[d as usize] = ZECH_NONE;
                neg_log = d;
            } else {
                zech[d as usize] = enc_log[bumped as usize];
            }
        }
        debug_assert_eq!(neg_log, q1 / 2);

        let mut frob_exp = Vec::with_capacity(m as usize + 1);
        let mut e = 1u64;
        for _ in 0..=m {
            frob_exp.push((e % q1 as u64) as u32);
            e = e * p as u64 % q1 as u64;
        }

        Ok(Arc::new(FieldCtx { p, m, q, q1, modulus, pow_enc, enc_log, zech, neg_log, frob_exp }))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }
    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }
    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    /// The primitive root `w` itself.
    #[inline]
    pub fn omega(&self) -> FieldElement {
        if self.q == 2 { FieldElement::ONE } else { FieldElement::Pow(1) }
    }

    // ---- arithmetic ----------------------------------------------------

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        use FieldElement::*;
        match (a, b) {
            (Zero, x) | (x, Zero) => x,
            (Pow(i), Pow(j)) => {
                // w^i + w^j = w^i (1 + w^{j-i})
                let d = self.sub_exp(j, i);
                match self.zech[d as usize] {
                    ZECH_NONE => Zero,
                    z => Pow(self.add_exp(i, z)),
                }
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match a {
            FieldElement::Zero => FieldElement::Zero,
            FieldElement::Pow(i) => FieldElement::Pow(self.add_exp(i, self.neg_log)),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        use FieldElement::*;
        match (a, b) {
            (Zero, _) | (_, Zero) => Zero,
            (Pow(i), Pow(j)) => Pow(self.add_exp(i, j)),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        match a {
            FieldElement::Zero => Err(Error::DivByZero),
            FieldElement::Pow(i) => Ok(FieldElement::Pow(self.sub_exp(0, i))),
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` with `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement> {
        match a {
            FieldElement::Zero => {
                if e > 0 {
                    Ok(FieldElement::Zero)
                } else if e == 0 {
                    Ok(FieldElement::ONE)
                } else {
                    Err(Error::DivByZero)
                }
            }
            FieldElement::Pow(i) => {
                let q1 = self.q1 as i64;
                let k = (i as i64 * (e.rem_euclid(q1))).rem_euclid(q1);
                Ok(FieldElement::Pow(k as u32))
            }
        }
    }

    /// Apply the Frobenius power `θ^i : a ↦ a^{p^i}`.
    #[inline]
    pub fn frob_apply(&self, i: u32, a: FieldElement) -> FieldElement {
        match a {
            FieldElement::Zero => FieldElement::Zero,
            FieldElement::Pow(k) => {
                let e = self.frob_exp[(i % self.m) as usize] as u64;
                FieldElement::Pow((k as u64 * e % self.q1 as u64) as u32)
            }
        }
    }

    /// Order of `θ^i` as a field automorphism: `m / gcd(i, m)`.
    pub fn frob_order(&self, i: u32) -> u32 {
        self.m / gcd(i % self.m, self.m).max(1)
    }

    // ---- representations ----------------------------------------------

    /// Embed an integer via the prime subfield.
    pub fn element_from_int(&self, n: i64) -> FieldElement {
        let c = n.rem_euclid(self.p as i64) as u32;
        if c == 0 {
            FieldElement::Zero
        } else {
            FieldElement::Pow(self.enc_log[c as usize])
        }
    }

    /// Build an element from ascending base-`p` coordinates (length ≤ m).
    pub fn from_coords(&self, coords: &[u32]) -> Result<FieldElement> {
        if coords.len() > self.m as usize {
            return Err(Error::shape(format!(
                "coordinate vector of length {} in a degree-{} extension",
                coords.len(),
                self.m
            )));
        }
        let mut enc = 0u64;
        for (j, &c) in coords.iter().enumerate() {
            enc += (c % self.p) as u64 * (self.p as u64).pow(j as u32);
        }
        Ok(if enc == 0 {
            FieldElement::Zero
        } else {
            FieldElement::Pow(self.enc_log[enc as usize])
        })
    }

    /// Ascending base-`p` coordinates of an element (length m).
    pub fn coords(&self, a: FieldElement) -> Vec<u32> {
        let mut enc = match a {
            FieldElement::Zero => 0,
            FieldElement::Pow(k) => self.pow_enc[k as usize],
        };
        let mut out = Vec::with_capacity(self.m as usize);
        for _ in 0..self.m {
            out.push(enc % self.p);
            enc /= self.p;
        }
        out
    }

    /// Is `a` in the prime subfield `F_p`?
    pub fn in_prime_field(&self, a: FieldElement) -> bool {
        self.as_prime_int(a).is_some()
    }

    /// If `a ∈ F_p`, the integer `0..p` representing it.
    pub fn as_prime_int(&self, a: FieldElement) -> Option<u32> {
        let enc = match a {
            FieldElement::Zero => 0,
            FieldElement::Pow(k) => self.pow_enc[k as usize],
        };
        if enc < self.p {
            Some(enc)
        } else {
            None
        }
    }

    /// All `q` elements: zero first, then `w^0, w^1, ...`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        std::iter::once(FieldElement::Zero).chain((0..self.q1).map(FieldElement::Pow))
    }

    /// Indexable enumeration: `element_at(0) = 0`, `element_at(1+k) = w^k`.
    #[inline]
    pub fn element_at(&self, idx: u32) -> FieldElement {
        if idx == 0 {
            FieldElement::Zero
        } else {
            FieldElement::Pow(idx - 1)
        }
    }

    // ---- text I/O ------------------------------------------------------

    /// Render an element: `0`/`1`/... for prime-subfield values, else `w^k`.
    pub fn format_element(&self, a: FieldElement) -> String {
        if let Some(c) = self.as_prime_int(a) {
            return c.to_string();
        }
        match a {
            FieldElement::Zero => unreachable!("zero is in the prime field"),
            FieldElement::Pow(1) => "w".to_string(),
            FieldElement::Pow(k) => format!("w^{k}"),
        }
    }

    /// Parse `0`, signed integers, `w`, `w^k` (ASCII `w` or Greek `ω`).
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::parse(0, "empty element literal"));
        }
        let (head, rest) = if let Some(r) = t.strip_prefix("w") {
            (true, r)
        } else if let Some(r) = t.strip_prefix("ω") {
            (true, r)
        } else {
            (false, t)
        };
        if head {
            if rest.is_empty() {
                return Ok(self.omega());
            }
            let exp = rest.strip_prefix('^').ok_or_else(|| {
                Error::parse(1, format!("expected `^` after `w` in {t:?}"))
            })?;
            let k: u64 = exp.parse().map_err(|_| {
                Error::parse(2, format!("bad exponent {exp:?} in {t:?}"))
            })?;
            return Ok(FieldElement::Pow((k % self.q1 as u64) as u32));
        }
        let n: i64 = t
            .parse()
            .map_err(|_| Error::parse(0, format!("bad field element literal {t:?}")))?;
        Ok(self.element_from_int(n))
    }

    // ---- exponent helpers ---------------------------------------------

    #[inline]
    fn add_exp(&self, i: u32, j: u32) -> u32 {
        let s = i + j;
        if s >= self.q1 {
            s - self.q1
        } else {
            s
        }
    }

    #[inline]
    fn sub_exp(&self, i: u32, j: u32) -> u32 {
        if i >= j {
            i - j
        } else {
            i + self.q1 - j
        }
    }
}

fn encode(v: &[u32], p: u32) -> u32 {
    let mut enc = 0u32;
    for &c in v.iter().rev() {
        enc = enc * p + c;
    }
    enc
}

/// v ← v·x mod modulus (dense ascending coordinates over F_p).
fn mul_by_x(v: &mut [u32], p: u32, modulus: &[u32]) {
    let m = v.len();
    let top = v[m - 1];
    for j in (1..m).rev() {
        v[j] = v[j - 1];
    }
    v[0] = 0;
    if top != 0 {
        // subtract top * (modulus - x^m)
        for j in 0..m {
            v[j] = (v[j] + (p - modulus[j] % p) % p * top) % p;
        }
    }
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---- dense F_p[x] helpers for the irreducibility test ------------------

fn poly_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_rem(&mut prod, modulus, p);
    prod
}

/// Reduce `v` modulo the monic `modulus` in place (ascending coefficients).
fn poly_rem(v: &mut Vec<u32>, modulus: &[u32], p: u32) {
    let m = modulus.len() - 1;
    poly_trim(v);
    while v.len() > m {
        let lead = *v.last().unwrap();
        let shift = v.len() - 1 - m;
        if lead != 0 {
            for j in 0..m {
                let sub = modulus[j] * lead % p;
                v[shift + j] = (v[shift + j] + p - sub) % p;
            }
        }
        v.pop();
        poly_trim(v);
    }
}

fn poly_pow_mod(base: &[u32], mut e: u64, modulus: &[u32], p: u32) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, modulus, p);
        }
        b = poly_mul_mod(&b, &b, modulus, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // a mod b with b made monic on the fly
        let lead = *b.last().unwrap();
        let inv = mod_inv(lead, p);
        let bm: Vec<u32> = b.iter().map(|&c| c * inv % p).collect();
        poly_rem(&mut a, &bm, p);
        std::mem::swap(&mut a, &mut b);
    }
    a
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // Fermat; p is prime and small.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Rabin's irreducibility test for a monic degree-m polynomial over F_p.
fn is_irreducible(p: u32, modulus: &[u32]) -> bool {
    let m = (modulus.len() - 1) as u32;
    if m == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    // x^(p^m) ≡ x (mod f): iterate p-th powers m times.
    let mut xp = x.clone();
    let mut powers = Vec::with_capacity(m as usize);
    for _ in 0..m {
        xp = poly_pow_mod(&xp, p as u64, modulus, p);
        powers.push(xp.clone());
    }
    let mut last = powers[m as usize - 1].clone();
    // last - x must be 0 mod f
    sub_in_place(&mut last, &x, p);
    if !last.is_empty() {
        return false;
    }
    // For each prime divisor ℓ of m: gcd(x^{p^{m/ℓ}} − x, f) = 1.
    for l in prime_divisors(m) {
        let mut g = powers[(m / l) as usize - 1].clone();
        sub_in_place(&mut g, &x, p);
        let d = poly_gcd(&g, modulus, p);
        if d.len() != 1 {
            return false;
        }
    }
    true
}

fn sub_in_place(a: &mut Vec<u32>, b: &[u32], p: u32) {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (j, &c) in b.iter().enumerate() {
        a[j] = (a[j] + p - c) % p;
    }
    poly_trim(a);
}

fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> Arc<FieldCtx> {
        FieldCtx::new(3, 2, &[2, 2, 1]).unwrap()
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(FieldCtx::new(4, 2, &[1, 1, 1]), Err(Error::NotPrime { p: 4 })));
        assert!(matches!(FieldCtx::new(2, 3, &[1, 1, 0, 1]), Err(Error::NotPrime { .. })));
        // x^2 + x + 1 = (x+2)^2 over F_3
        assert!(matches!(FieldCtx::new(3, 2, &[1, 1, 1]), Err(Error::NotIrreducible { .. })));
        // x^3 + 2x + 2 is irreducible over F_3 but its root has order 13
        assert!(matches!(FieldCtx::new(3, 3, &[2, 2, 0, 1]), Err(Error::NotPrimitive { .. })));
        // non-monic
        assert!(matches!(FieldCtx::new(3, 2, &[2, 2, 2]), Err(Error::Unsupported { .. })));
        // too large: 17^4 > 2^16
        assert!(matches!(FieldCtx::new(17, 4, &[1, 0, 0, 0, 1]), Err(Error::Unsupported { .. })));
    }

    #[test]
    fn accepts_reference_fields() {
        // the contexts used throughout the stored reference data
        for (p, m, modulus) in [
            (3u32, 2u32, vec![2u32, 2, 1]),   // F_9,  w^2 = w + 1
            (3, 2, vec![2, 1, 1]),            // F_9,  alternative primitive quadratic
            (3, 3, vec![1, 2, 0, 1]),         // F_27, w^3 = w + 2
            (3, 3, vec![1, 2, 1, 1]),         // F_27, alternative primitive cubic
            (5, 2, vec![2, 4, 1]),            // F_25
        ] {
            let ctx = FieldCtx::new(p, m, &modulus).unwrap();
            assert_eq!(ctx.q(), p.pow(m));
        }
    }

    #[test]
    fn f9_table_facts() {
        let f = f9();
        let w = f.omega();
        // w^2 = w + 1 under x^2 + 2x + 2
        assert_eq!(f.coords(f.pow(w, 2).unwrap()), vec![1, 1]);
        // w^4 = 2, so 2 is in the prime field with log 4
        assert_eq!(f.element_from_int(2), FieldElement::Pow(4));
        assert_eq!(f.as_prime_int(FieldElement::Pow(4)), Some(2));
        // -1 = 2
        assert_eq!(f.neg(FieldElement::ONE), FieldElement::Pow(4));
    }

    #[test]
    fn arithmetic_matches_coordinate_oracle() {
        // Exhaustive cross-check of the Zech tables against naive coordinate
        // arithmetic mod the modulus, for every pair of elements.
        for (p, m, modulus) in [(3u32, 2u32, vec![2u32, 2, 1]), (3, 3, vec![1, 2, 0, 1])] {
            let f = FieldCtx::new(p, m, &modulus).unwrap();
            let all: Vec<FieldElement> = f.elements().collect();
            for &a in &all {
                for &b in &all {
                    let (va, vb) = (f.coords(a), f.coords(b));
                    // additive oracle
                    let sum: Vec<u32> =
                        va.iter().zip(&vb).map(|(&x, &y)| (x + y) % p).collect();
                    assert_eq!(f.add(a, b), f.from_coords(&sum).unwrap());
                    // multiplicative oracle: schoolbook product reduced mod modulus
                    let mut prod = vec![0u32; 2 * m as usize];
                    for (i, &x) in va.iter().enumerate() {
                        for (j, &y) in vb.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    poly_rem(&mut prod, &modulus, p);
                    prod.resize(m as usize, 0);
                    assert_eq!(f.mul(a, b), f.from_coords(&prod).unwrap());
                }
            }
        }
    }

    #[test]
    fn inverse_and_pow() {
        let f = f9();
        for a in f.elements().skip(1) {
            let inv = f.inv(a).unwrap();
            assert_eq!(f.mul(a, inv), FieldElement::ONE);
            assert_eq!(f.pow(a, -1).unwrap(), inv);
            assert_eq!(f.pow(a, 8).unwrap(), FieldElement::ONE);
        }
        assert!(matches!(f.inv(FieldElement::Zero), Err(Error::DivByZero)));
        assert_eq!(f.pow(FieldElement::Zero, 0).unwrap(), FieldElement::ONE);
        assert_eq!(f.pow(FieldElement::Zero, 5).unwrap(), FieldElement::Zero);
    }

    #[test]
    fn frobenius_is_field_automorphism_of_expected_order() {
        let f = FieldCtx::new(3, 3, &[1, 2, 0, 1]).unwrap();
        let all: Vec<FieldElement> = f.elements().collect();
        for i in 1..=3u32 {
            for &a in &all {
                for &b in &all {
                    let lhs = f.frob_apply(i, f.add(a, b));
                    let rhs = f.add(f.frob_apply(i, a), f.frob_apply(i, b));
                    assert_eq!(lhs, rhs);
                    let lhs = f.frob_apply(i, f.mul(a, b));
                    let rhs = f.mul(f.frob_apply(i, a), f.frob_apply(i, b));
                    assert_eq!(lhs, rhs);
                }
                assert_eq!(f.frob_apply(i, a), f.pow(a, 3i64.pow(i)).unwrap());
            }
        }
        assert_eq!(f.frob_order(1), 3);
        assert_eq!(f.frob_order(2), 3);
        assert_eq!(f.frob_order(3), 1);
        let f9 = f9();
        assert_eq!(f9.frob_order(1), 2);
        // theta(w) = w^3 in F_9
        assert_eq!(f9.frob_apply(1, f9.omega()), FieldElement::Pow(3));
        assert_eq!(f9.frob_apply(2, f9.omega()), f9.omega());
    }

    #[test]
    fn coords_round_trip() {
        let f = FieldCtx::new(5, 2, &[2, 4, 1]).unwrap();
        for a in f.elements() {
            assert_eq!(f.from_coords(&f.coords(a)).unwrap(), a);
        }
    }

    #[test]
    fn parse_format_round_trip() {
        let f = f9();
        for a in f.elements() {
            let s = f.format_element(a);
            assert_eq!(f.parse_element(&s).unwrap(), a);
        }
        assert_eq!(f.parse_element("w").unwrap(), FieldElement::Pow(1));
        assert_eq!(f.parse_element("w^10").unwrap(), FieldElement::Pow(2)); // reduced mod 8
        assert_eq!(f.parse_element("ω^3").unwrap(), FieldElement::Pow(3));
        assert_eq!(f.parse_element("-1").unwrap(), f.element_from_int(2));
        assert_eq!(f.parse_element("5").unwrap(), f.element_from_int(2));
        assert!(f.parse_element("w*").is_err());
        assert!(f.parse_element("").is_err());
        assert!(f.parse_element("x").is_err());
    }

    #[test]
    fn large_field_smoke() {
        // 7^5 = 16807 is the biggest field the reference tables need.
        let f = FieldCtx::new(7, 5, &[4, 1, 0, 0, 0, 1]).unwrap_or_else(|_| {
            // fall back: search the first primitive quintic
            let mut found = None;
            'outer: for enc in 0..7u32.pow(5) {
                let mut mo: Vec<u32> = (0..5)
                    .scan(enc, |st, _| {
                        let c = *st % 7;
                        *st /= 7;
                        Some(c)
                    })
                    .collect();
                mo.push(1);
                if let Ok(ctx) = FieldCtx::new(7, 5, &mo) {
                    found = Some(ctx);
                    break 'outer;
                }
            }
            found.expect("some primitive quintic over F_7 exists")
        });
        assert_eq!(f.q(), 16807);
        let a = FieldElement::Pow(12345);
        assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        assert_eq!(f.add(a, f.neg(a)), FieldElement::Zero);
    }
}
