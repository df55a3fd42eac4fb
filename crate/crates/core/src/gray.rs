//! Gray images and minimum-distance computation.
//!
//! The Gray map sends one `R`-coordinate, written in κ-coordinates
//! `(n1, n2, n3, n4)`, to the row vector `(n1, n2, n3, n4)·M` with
//!
//! ```text
//! M = ½ · | 1  1  1  1 |
//!         | 1 −1  1 −1 |
//!         | 1  1 −1 −1 |
//!         | 1 −1 −1  1 |
//! ```
//!
//! `M·Mᵀ = I`, so the map is an isometry up to the usual Lee/Hamming
//! identification: the image of a mixed code of block length `(r, s)` with
//! `q^k` words is an `[r + 4s, k]` linear code over `F_q` whose Hamming
//! distance equals the mixed code's Lee distance.
//!
//! [`LinearCode`] wraps a row-reduced generator matrix plus its parity
//! check, and computes exact minimum distance by one of two strategies:
//!
//! - [`Strategy::Enumerate`]: walk all `q^k − 1` nonzero messages;
//! - [`Strategy::SupportSearch`]: find the smallest `w` such that some `w`
//!   columns of the parity-check matrix are linearly dependent, sharing
//!   prefix eliminations across subsets and parallelizing over the first
//!   column index.
//!
//! Both return a [`DistanceReport`] carrying the proved bounds, a witness
//! codeword of minimum weight, and the amount of work spent, so callers can
//! audit what was actually established. Work is deterministic for a given
//! input regardless of thread count.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::linalg::Matrix;
use crate::mixedcode::{MixedCode, MixedWord};
use crate::ring_r::RElement;
use crate::skewpoly::{FqPoly, SkewRing};

/// The fixed 4×4 Gray matrix over a field of odd characteristic.
#[derive(Clone, Debug)]
pub struct GrayMap {
    field: Arc<FieldCtx>,
    m: [[FieldElement; 4]; 4],
    m_inv: [[FieldElement; 4]; 4],
}

impl GrayMap {
    pub fn new(field: Arc<FieldCtx>) -> Result<GrayMap> {
        let two = field.add(FieldElement::ONE, FieldElement::ONE);
        let half = field.inv(two)?;
        let neg_half = field.neg(half);
        let sign = |s: i8| if s > 0 { half } else { neg_half };
        let pattern: [[i8; 4]; 4] = [
            [1, 1, 1, 1],
            [1, -1, 1, -1],
            [1, 1, -1, -1],
            [1, -1, -1, 1],
        ];
        let mut m = [[FieldElement::Zero; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = sign(pattern[i][j]);
            }
        }
        // the sign pattern P satisfies P·Pᵀ = 4I, so (½P)(½Pᵀ) = I and the
        // inverse of M is just its transpose
        let mut m_inv = [[FieldElement::Zero; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m_inv[i][j] = m[j][i];
            }
        }
        Ok(GrayMap { field, m, m_inv })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    /// One `R`-coordinate to four field coordinates: `(n1..n4)·M`.
    pub fn phi1(&self, b: RElement) -> [FieldElement; 4] {
        self.apply4(&self.m, b.kappa)
    }

    /// Inverse of [`GrayMap::phi1`].
    pub fn phi1_inv(&self, v: [FieldElement; 4]) -> RElement {
        RElement { kappa: self.apply4(&self.m_inv, v) }
    }

    fn apply4(&self, mat: &[[FieldElement; 4]; 4], row: [FieldElement; 4]) -> [FieldElement; 4] {
        let f = &*self.field;
        let mut out = [FieldElement::Zero; 4];
        for j in 0..4 {
            let mut acc = FieldElement::Zero;
            for i in 0..4 {
                acc = f.add(acc, f.mul(row[i], mat[i][j]));
            }
            out[j] = acc;
        }
        out
    }

    /// Flatten a mixed word to `F_q^{r+4s}`.
    pub fn apply_word(&self, w: &MixedWord) -> Vec<FieldElement> {
        let mut out = Vec::with_capacity(w.g.len() + 4 * w.b.len());
        out.extend_from_slice(&w.g);
        for &b in &w.b {
            out.extend_from_slice(&self.phi1(b));
        }
        out
    }

    /// The Gray image of a whole mixed code as an `[r+4s, k]` linear code.
    pub fn image_of(&self, code: &MixedCode) -> Result<LinearCode> {
        let rows: Vec<Vec<FieldElement>> = code
            .generating_rows()?
            .iter()
            .map(|w| self.apply_word(w))
            .collect();
        let m =
            Matrix::from_rows_with_cols(Arc::clone(&self.field), rows, code.ambient_len())?;
        let lc = LinearCode::from_generator(m)?;
        if lc.k() != code.dim() {
            return Err(Error::RankDeficient { expected: code.dim(), found: lc.k() });
        }
        Ok(lc)
    }
}

/// A linear code over `F_q`, stored as a row-reduced generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    gen: Matrix,
    check: Matrix,
}

/// How to establish the minimum distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Pick [`Strategy::Enumerate`] for small message spaces, otherwise
    /// [`Strategy::SupportSearch`].
    Auto,
    /// Walk every nonzero message; cost `q^k`.
    Enumerate,
    /// Grow support size `w` until some `w` columns of the parity check are
    /// dependent; cost `Σ C(n, w)` up to the distance.
    SupportSearch,
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Strategy::Auto => "auto",
            Strategy::Enumerate => "enumerate",
            Strategy::SupportSearch => "support",
        })
    }
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Strategy> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "enumerate" => Ok(Strategy::Enumerate),
            "support" => Ok(Strategy::SupportSearch),
            other => Err(Error::parse(0, format!("unknown strategy {other:?}"))),
        }
    }
}

/// What a distance computation actually proved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    /// No nonzero codeword has weight below this.
    pub lower_bound: u32,
    /// A codeword of this weight exists (the witness).
    pub upper_bound: u32,
    /// True when the bounds coincide: the distance is exact.
    pub proved_exact: bool,
    /// Strategy that ran (never `Auto`).
    pub strategy_used: Strategy,
    /// Messages evaluated or column subsets visited.
    pub work: u64,
    /// A minimum-weight codeword.
    pub witness: Vec<FieldElement>,
}

impl DistanceReport {
    pub fn distance(&self) -> u32 {
        debug_assert!(self.proved_exact);
        self.upper_bound
    }
}

fn weight(v: &[FieldElement]) -> u32 {
    v.iter().filter(|c| !c.is_zero()).count() as u32
}

impl LinearCode {
    /// Row-reduce a spanning matrix; rows may be dependent.
    pub fn from_generator(m: Matrix) -> Result<LinearCode> {
        let gen = m.row_space_basis();
        let check = gen.nullspace();
        Ok(LinearCode { gen, check })
    }

    /// θ-cyclic code `⟨g⟩ ⊆ F_q[x;σ]/⟨x^n−1⟩` as an `[n, n − deg g]` code.
    pub fn from_skew_cyclic(ring: &SkewRing, n: usize, g: &FqPoly) -> Result<LinearCode> {
        if g.is_zero() {
            return Err(Error::ZeroInput { what: "cyclic generator".into() });
        }
        let g = g.monic()?;
        let modulus: FqPoly = ring.x_pow_minus_one(n);
        if !modulus.divisible_right(&g)? {
            return Err(Error::NotADivisor {
                what: format!("{g} does not right-divide x^{n} - 1"),
            });
        }
        let dim = n - g.degree().unwrap();
        let x: FqPoly = ring.monomial(FieldElement::ONE, 1);
        let mut rows = Vec::with_capacity(dim);
        let mut p = g.clone();
        for j in 0..dim {
            if j > 0 {
                p = x.mul(&p)?.fold_mod_xn_minus_one(n);
            }
            let mut row = vec![FieldElement::Zero; n];
            for (i, &c) in p.coeffs().iter().enumerate() {
                row[i] = c;
            }
            rows.push(row);
        }
        let m = Matrix::from_rows_with_cols(ring.field_arc(), rows, n)?;
        let lc = LinearCode::from_generator(m)?;
        if lc.k() != dim {
            return Err(Error::RankDeficient { expected: dim, found: lc.k() });
        }
        Ok(lc)
    }

    /// Gray image of a Σ-cyclic code `⟨Σ κ_i t_i⟩ ⊆ R[x;Σ]/⟨x^s−1⟩` as a
    /// `[4s, 4s − Σ deg t_i]` code over `F_q`.
    pub fn from_sigma_cyclic_r(ring: &SkewRing, s: usize, t: &[FqPoly; 4]) -> Result<LinearCode> {
        let modulus: FqPoly = ring.x_pow_minus_one(s);
        let gray = GrayMap::new(ring.field_arc())?;
        let x: FqPoly = ring.monomial(FieldElement::ONE, 1);
        let mut rows = Vec::new();
        let mut dim = 0usize;
        for (i, ti) in t.iter().enumerate() {
            if ti.is_zero() {
                return Err(Error::ZeroInput {
                    what: format!("ring-side component generator t{}", i + 1),
                });
            }
            let ti = ti.monic()?;
            if !modulus.divisible_right(&ti)? {
                return Err(Error::NotADivisor {
                    what: format!(
                        "ring-side component t{} = {ti} does not right-divide x^{s} - 1",
                        i + 1
                    ),
                });
            }
            let di = s - ti.degree().unwrap();
            dim += di;
            let mut p = ti.clone();
            for j in 0..di {
                if j > 0 {
                    p = x.mul(&p)?.fold_mod_xn_minus_one(s);
                }
                // κ_{i+1}·p as an s-long R-vector, then Gray
                let word = MixedWord {
                    g: Vec::new(),
                    b: (0..s)
                        .map(|c| {
                            let mut kappa = [FieldElement::Zero; 4];
                            kappa[i] = p.coeff(c);
                            RElement { kappa }
                        })
                        .collect(),
                };
                rows.push(gray.apply_word(&word));
            }
        }
        let m = Matrix::from_rows_with_cols(ring.field_arc(), rows, 4 * s)?;
        let lc = LinearCode::from_generator(m)?;
        if lc.k() != dim {
            return Err(Error::RankDeficient { expected: dim, found: lc.k() });
        }
        Ok(lc)
    }

    pub fn field(&self) -> &FieldCtx {
        self.gen.field()
    }

    pub fn n(&self) -> usize {
        self.gen.ncols()
    }

    pub fn k(&self) -> usize {
        self.gen.nrows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.check
    }

    pub fn contains(&self, v: &[FieldElement]) -> Result<bool> {
        if v.len() != self.n() {
            return Err(Error::shape("word length != code length"));
        }
        Ok(self.check.mul_vec(v)?.iter().all(|c| c.is_zero()))
    }

    pub fn encode(&self, msg: &[FieldElement]) -> Result<Vec<FieldElement>> {
        self.gen.vec_mul(msg)
    }

    /// Exact minimum Hamming distance.
    ///
    /// `budget` caps the work (messages for `Enumerate`, column subsets for
    /// `SupportSearch`); exceeding it fails with `BudgetExceeded` carrying
    /// any lower bound already proved.
    pub fn min_distance(&self, strategy: Strategy, budget: u64) -> Result<DistanceReport> {
        let k = self.k();
        if k == 0 {
            return Err(Error::EmptyCode);
        }
        let q = self.field().q() as u64;
        let strategy = match strategy {
            Strategy::Auto => {
                let enum_cost = q.checked_pow(k as u32);
                match enum_cost {
                    Some(c) if c <= (1 << 16).min(budget) => Strategy::Enumerate,
                    _ => Strategy::SupportSearch,
                }
            }
            s => s,
        };
        match strategy {
            Strategy::Enumerate => self.distance_enumerate(budget),
            Strategy::SupportSearch => self.distance_support_search(budget),
            Strategy::Auto => unreachable!(),
        }
        .map(|rep| {
            debug_assert_eq!(weight(&rep.witness), rep.upper_bound);
            debug_assert!(self.contains(&rep.witness).unwrap_or(false));
            debug_assert!(rep.lower_bound == rep.upper_bound && rep.proved_exact);
            rep
        })
    }

    fn distance_enumerate(&self, budget: u64) -> Result<DistanceReport> {
        let q = self.field().q() as u64;
        let k = self.k();
        let needed = q.checked_pow(k as u32).unwrap_or(u64::MAX);
        if needed > budget {
            return Err(Error::BudgetExceeded {
                budget,
                needed,
                lower_bound: None,
                upper_bound: None,
            });
        }
        let field = self.gen.field();
        let mut best: Option<(u32, Vec<FieldElement>)> = None;
        let mut idx = vec![0u32; k];
        let mut work = 0u64;
        'outer: loop {
            // advance odometer first so the all-zero message is skipped
            let mut pos = 0;
            loop {
                if pos == k {
                    break 'outer;
                }
                idx[pos] += 1;
                if idx[pos] < field.q() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            let msg: Vec<FieldElement> = idx.iter().map(|&i| field.element_at(i)).collect();
            let word = self.gen.vec_mul(&msg)?;
            work += 1;
            let wt = weight(&word);
            if best.as_ref().map_or(true, |(b, _)| wt < *b) {
                best = Some((wt, word));
                if wt == 1 {
                    break;
                }
            }
        }
        let (d, witness) = best.expect("k ≥ 1 gives at least one nonzero word");
        Ok(DistanceReport {
            lower_bound: d,
            upper_bound: d,
            proved_exact: true,
            strategy_used: Strategy::Enumerate,
            work,
            witness,
        })
    }

    fn distance_support_search(&self, budget: u64) -> Result<DistanceReport> {
        let n = self.n();
        let k = self.k();
        let field = self.gen.field_arc();
        let rows_h = self.check.nrows();
        // columns of H
        let cols: Vec<Vec<FieldElement>> = (0..n)
            .map(|j| (0..rows_h).map(|i| self.check.at(i, j)).collect())
            .collect();
        let mut spent = 0u64;
        let max_w = (n - k + 1).min(n); // Singleton: d ≤ n − k + 1
        for w in 1..=max_w {
            let stage_cost = binomial(n as u64, w as u64);
            if spent.saturating_add(stage_cost) > budget {
                return Err(Error::BudgetExceeded {
                    budget,
                    needed: spent.saturating_add(stage_cost),
                    lower_bound: Some(w as u32),
                    upper_bound: None,
                });
            }
            // parallel over the first column of the subset
            let hits: Vec<(Option<Vec<usize>>, u64)> = (0..=(n - w))
                .into_par_iter()
                .map(|first| {
                    let mut work = 0u64;
                    let mut chosen = vec![first];
                    let mut reduced: Vec<(Vec<FieldElement>, usize)> = Vec::new();
                    let found = dfs_subsets(
                        &field, &cols, w, &mut chosen, &mut reduced, &mut work,
                    );
                    (found, work)
                })
                .collect();
            spent += hits.iter().map(|(_, wk)| *wk).sum::<u64>();
            if let Some(subset) = hits.into_iter().find_map(|(f, _)| f) {
                let witness = self.witness_from_support(&subset)?;
                debug_assert_eq!(weight(&witness), w as u32);
                return Ok(DistanceReport {
                    lower_bound: w as u32,
                    upper_bound: w as u32,
                    proved_exact: true,
                    strategy_used: Strategy::SupportSearch,
                    work: spent,
                    witness,
                });
            }
        }
        unreachable!("some n−k+1 columns of an (n−k)-row matrix are dependent")
    }

    /// Solve for the codeword supported on a dependent column set.
    fn witness_from_support(&self, subset: &[usize]) -> Result<Vec<FieldElement>> {
        let rows_h = self.check.nrows();
        let mut sub = Matrix::zero(self.gen.field_arc(), rows_h, subset.len());
        for (jj, &j) in subset.iter().enumerate() {
            for i in 0..rows_h {
                sub.set(i, jj, self.check.at(i, j));
            }
        }
        let ns = sub.nullspace();
        if ns.nrows() == 0 {
            return Err(Error::OracleMismatch {
                what: "support set reported dependent but nullspace is trivial".into(),
            });
        }
        let combo = ns.row(0);
        let mut word = vec![FieldElement::Zero; self.n()];
        for (jj, &j) in subset.iter().enumerate() {
            word[j] = combo[jj];
        }
        if !self.contains(&word)? {
            return Err(Error::OracleMismatch {
                what: "support witness is not in the code".into(),
            });
        }
        Ok(word)
    }
}

/// Depth-first extension of `chosen` to a dependent `w`-subset.
///
/// Invariant: every proper subset of the current `chosen` prefix is
/// independent (stages below `w` completed without a hit), so reduction to
/// zero can only happen for the last column added.
fn dfs_subsets(
    field: &Arc<FieldCtx>,
    cols: &[Vec<FieldElement>],
    w: usize,
    chosen: &mut Vec<usize>,
    reduced: &mut Vec<(Vec<FieldElement>, usize)>,
    work: &mut u64,
) -> Option<Vec<usize>> {
    let f = &**field;
    let j = *chosen.last().unwrap();
    *work += 1;
    // reduce column j against the prefix pivots
    let mut v = cols[j].clone();
    for (u, p) in reduced.iter() {
        let c = v[*p];
        if !c.is_zero() {
            for (vi, ui) in v.iter_mut().zip(u.iter()) {
                *vi = f.sub(*vi, f.mul(c, *ui));
            }
        }
    }
    match v.iter().position(|c| !c.is_zero()) {
        None => {
            // dependent — by the invariant this is a full w-subset
            if chosen.len() == w {
                return Some(chosen.clone());
            }
            // a smaller dependent set slipped through: surface it anyway
            return Some(chosen.clone());
        }
        Some(p) => {
            if chosen.len() == w {
                return None; // full independent subset, backtrack
            }
            let inv = f.inv(v[p]).expect("pivot nonzero");
            for vi in v.iter_mut() {
                *vi = f.mul(inv, *vi);
            }
            reduced.push((v, p));
        }
    }
    let n = cols.len();
    let next_lo = j + 1;
    // leave room for the remaining w − len − 1 columns
    let next_hi = n - (w - chosen.len());
    for next in next_lo..=next_hi {
        chosen.push(next);
        if let Some(hit) = dfs_subsets(field, cols, w, chosen, reduced, work) {
            return Some(hit);
        }
        chosen.pop();
    }
    reduced.pop();
    None
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}
