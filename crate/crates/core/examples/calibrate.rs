//! Temporary calibration harness — not part of the library.
//!
//! Resolves which field moduli reproduce the frozen reference rows, and
//! tests repair hypotheses for ambiguous cells. Output is read by a human;
//! the conclusions get frozen into the reproduction manifests.

use skewcodec_core::qecc;
use skewcodec_core::*;

const BUDGET: u64 = 1 << 28;

fn all_valid_moduli(p: u32, m: u32) -> Vec<Vec<u32>> {
    let total = (p as u64).pow(m);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut coeffs: Vec<u32> = (0..m)
            .map(|_| {
                let d = (c % p as u64) as u32;
                c /= p as u64;
                d
            })
            .collect();
        coeffs.push(1);
        if FieldCtx::new(p, m, &coeffs).is_ok() {
            out.push(coeffs);
        }
    }
    out
}

fn ring_for(p: u32, m: u32, modulus: &[u32]) -> SkewRing {
    SkewRing::new(FieldCtx::new(p, m, modulus).unwrap(), 1).unwrap()
}

fn poly(ring: &SkewRing, terms: &[&str]) -> FqPoly {
    let coeffs = terms
        .iter()
        .map(|t| ring.field().parse_element(t).unwrap())
        .collect();
    ring.poly(coeffs)
}

fn divides(ring: &SkewRing, n: usize, g: &FqPoly) -> bool {
    let modulus: FqPoly = ring.x_pow_minus_one(n);
    modulus.divisible_right(&g.monic().unwrap()).unwrap()
}

// ---------------------------------------------------------------- theta rows

struct ThetaRow {
    label: &'static str,
    p: u32,
    m: u32,
    n: usize,
    ell: &'static [&'static str],
    qn: usize,
    qk: usize,
    qd: usize,
}

const THETA_ROWS: &[ThetaRow] = &[
    ThetaRow { label: "T2#1", p: 3, m: 2, n: 6, ell: &["w^6", "w^7", "1"], qn: 6, qk: 2, qd: 3 },
    ThetaRow { label: "T2#2", p: 3, m: 4, n: 8, ell: &["w^69", "w^28", "1"], qn: 8, qk: 4, qd: 3 },
    ThetaRow { label: "T2#3", p: 5, m: 2, n: 8, ell: &["w^23", "w^10", "1"], qn: 8, qk: 4, qd: 3 },
    ThetaRow { label: "T2#4", p: 13, m: 2, n: 8, ell: &["w^117", "w^109", "1"], qn: 8, qk: 4, qd: 3 },
    ThetaRow { label: "T2#5", p: 3, m: 3, n: 9, ell: &["w^18", "w^19", "1"], qn: 9, qk: 5, qd: 3 },
    ThetaRow { label: "T2#6", p: 5, m: 3, n: 12, ell: &["w^99", "w^38", "1"], qn: 12, qk: 8, qd: 3 },
    ThetaRow { label: "T2#7", p: 5, m: 3, n: 15, ell: &["w^2", "3", "w^76", "1"], qn: 15, qk: 9, qd: 4 },
    ThetaRow { label: "T2#8", p: 7, m: 5, n: 15, ell: &["w^295", "w^96", "1"], qn: 15, qk: 11, qd: 3 },
    ThetaRow { label: "T2#9", p: 3, m: 3, n: 18, ell: &["w^18", "w^19", "1"], qn: 18, qk: 14, qd: 3 },
    ThetaRow { label: "T2#10", p: 7, m: 3, n: 18, ell: &["w^339", "w^212", "1"], qn: 18, qk: 14, qd: 3 },
    ThetaRow { label: "T2#11", p: 5, m: 4, n: 20, ell: &["w^332", "w^292", "1"], qn: 20, qk: 16, qd: 3 },
    ThetaRow { label: "T2#12", p: 7, m: 3, n: 21, ell: &["w^261", "w^17", "w^178", "1"], qn: 21, qk: 15, qd: 4 },
    ThetaRow {
        label: "T2#13",
        p: 5,
        m: 5,
        n: 25,
        ell: &["w^1374", "w^3116", "w^3015", "1"],
        qn: 25,
        qk: 19,
        qd: 4,
    },
    ThetaRow { label: "T2#14", p: 13, m: 2, n: 26, ell: &["1", "w^21", "w^148", "1"], qn: 26, qk: 20, qd: 4 },
];

fn theta_row_structural(ring: &SkewRing, row: &ThetaRow) -> bool {
    divides(ring, row.n, &poly(ring, row.ell))
}

fn theta_row_full(ring: &SkewRing, row: &ThetaRow) -> String {
    let ell = poly(ring, row.ell);
    let code = LinearCode::from_skew_cyclic(ring, row.n, &ell).unwrap();
    let rep = match code.min_distance(Strategy::Auto, BUDGET) {
        Ok(r) => r,
        Err(e) => return format!("distance error: {e}"),
    };
    let dc = qecc::dual_containing_skew_cyclic(ring, row.n, &ell).unwrap();
    let mut out = format!(
        "[{},{},{}] dc={} (want [{},{},{}] from [[{},{},{}]])",
        code.n(),
        code.k(),
        rep.upper_bound,
        dc,
        row.qn,
        (row.qn + row.qk) / 2,
        row.qd,
        row.qn,
        row.qk,
        row.qd
    );
    if dc {
        let c = qecc::ClassicalParams {
            n: code.n(),
            k: code.k(),
            d: rep.upper_bound as usize,
            q: ring.field().q(),
        };
        match qecc::css(c, true, "") {
            Ok(p) => {
                out.push_str(&format!(
                    " css=[[{},{},{}]] mds={}",
                    p.n, p.k, p.d, p.mds
                ));
                let ok = p.n == row.qn && p.k == row.qk && p.d == row.qd;
                out.push_str(if ok { "  OK" } else { "  ** PARAM MISMATCH" });
            }
            Err(e) => out.push_str(&format!(" css error: {e}")),
        }
    } else {
        out.push_str("  ** NOT DUAL CONTAINING");
    }
    out
}

// ---------------------------------------------------------------- sigma rows

struct SigmaRow {
    label: &'static str,
    p: u32,
    m: u32,
    n: usize,
    t: [&'static [&'static str]; 4],
    /// expected image parameters [4n, k, d]
    ik: usize,
    id: usize,
    /// expected quantum parameters, if the row claims one
    qecc: Option<(usize, usize, usize)>,
}

const SIGMA_ROWS: &[SigmaRow] = &[
    // near-optimal/optimal image table
    SigmaRow {
        label: "T1#1",
        p: 3,
        m: 2,
        n: 4,
        t: [&["w^7", "w^3", "1"], &["1", "1"], &["w^5", "1"], &["w"]],
        ik: 12,
        id: 4,
        qecc: None,
    },
    SigmaRow {
        label: "T1#2",
        p: 3,
        m: 2,
        n: 6,
        t: [&["w^2", "w", "1"], &["1", "1"], &["w^6", "1"], &["1"]],
        ik: 20,
        id: 3,
        qecc: None,
    },
    SigmaRow {
        label: "T1#3",
        p: 3,
        m: 2,
        n: 6,
        t: [&["2", "w^5", "w^3", "1"], &["w^2", "1"], &["2", "1"], &["w"]],
        ik: 19,
        id: 4,
        qecc: None,
    },
    // row 4 as printed (degree-5 t2): expected to FAIL the dimension count
    SigmaRow {
        label: "T1#4-printed",
        p: 3,
        m: 2,
        n: 8,
        t: [
            &["w^7", "w^6", "w", "1"],
            &["w^6", "w^3", "1", "w^6", "w^7", "1"],
            &["w^7", "0", "1"],
            &["w^3", "2", "1"],
        ],
        ik: 19,
        id: 8,
        qecc: None,
    },
    // row 4 with a dropped zero restored in t2 (degree 6)
    SigmaRow {
        label: "T1#4-fixed",
        p: 3,
        m: 2,
        n: 8,
        t: [
            &["w^7", "w^6", "w", "1"],
            &["w^6", "w^3", "1", "0", "w^6", "w^7", "1"],
            &["w^7", "0", "1"],
            &["w^3", "2", "1"],
        ],
        ik: 19,
        id: 8,
        qecc: None,
    },
    SigmaRow {
        label: "T1#5",
        p: 3,
        m: 2,
        n: 8,
        t: [
            &["w^7", "w^6", "w", "1"],
            &["w", "w^3", "2", "w^6", "1"],
            &["1", "w^3", "1"],
            &["w", "1", "1"],
        ],
        ik: 21,
        id: 7,
        qecc: None,
    },
    SigmaRow {
        label: "T1#6",
        p: 3,
        m: 2,
        n: 8,
        t: [
            &["w^3", "w^7", "w^2", "1"],
            &["w^5", "w^7", "1"],
            &["w^7", "w", "1"],
            &["1", "1"],
        ],
        ik: 24,
        id: 6,
        qecc: None,
    },
    SigmaRow {
        label: "T1#7",
        p: 3,
        m: 2,
        n: 8,
        t: [&["w^7", "w^5", "2", "1"], &["w^7", "1"], &["w", "1"], &["1"]],
        ik: 27,
        id: 4,
        qecc: None,
    },
    SigmaRow {
        label: "T1#8",
        p: 3,
        m: 2,
        n: 12,
        t: [&["2", "w^6", "w", "1"], &["w^2", "1"], &["w^3", "1"], &["1"]],
        ik: 43,
        id: 3,
        qecc: None,
    },
    SigmaRow {
        label: "T1#9",
        p: 3,
        m: 2,
        n: 12,
        t: [&["w^5", "w^6", "w^6", "2", "1"], &["w^2", "1"], &["w^3", "1"], &["1"]],
        ik: 42,
        id: 4,
        qecc: None,
    },
    // quantum rows from the ring-only construction
    SigmaRow {
        label: "T3#1",
        p: 3,
        m: 2,
        n: 6,
        t: [&["1", "w^5", "w^5", "1"], &["w^2", "1"], &["w^6", "1"], &["1", "1"]],
        ik: 18,
        id: 4,
        qecc: Some((24, 12, 4)),
    },
    SigmaRow {
        label: "T3#2",
        p: 3,
        m: 2,
        n: 6,
        t: [&["w^6", "w^3", "1"], &["2", "1"], &["w^2", "1"], &["w^6", "1"]],
        ik: 19,
        id: 3,
        qecc: Some((24, 14, 3)),
    },
    SigmaRow {
        label: "T3#3",
        p: 3,
        m: 3,
        n: 9,
        t: [&["w^18", "w^19", "1"], &["w^9", "1"], &["w^3", "1"], &["1"]],
        ik: 32,
        id: 3,
        qecc: Some((36, 28, 3)),
    },
    SigmaRow {
        label: "T3#4",
        p: 5,
        m: 2,
        n: 10,
        t: [&["w^4", "4", "w^16", "1"], &["w^20", "1"], &["w^8", "1"], &["4", "1"]],
        ik: 34,
        id: 3,
        qecc: Some((40, 28, 3)),
    },
    SigmaRow {
        label: "T3#5",
        p: 3,
        m: 2,
        n: 12,
        t: [
            &["w^6", "w^3", "w^5", "w^3", "1"],
            &["w^3", "1"],
            &["w^3", "1"],
            &["w^3", "1"],
        ],
        ik: 41,
        id: 3,
        qecc: Some((48, 34, 3)),
    },
    SigmaRow {
        label: "T3#6",
        p: 3,
        m: 2,
        n: 12,
        t: [&["w^3", "w", "1", "2", "1"], &["w^6", "1"], &["1", "1"], &["1"]],
        ik: 42,
        id: 4,
        qecc: Some((48, 36, 4)),
    },
    SigmaRow {
        label: "T3#7",
        p: 7,
        m: 2,
        n: 14,
        t: [&["w^18", "w^15", "1"], &["w^6", "1"], &["w^6", "1"], &["w^6", "1"]],
        ik: 51,
        id: 3,
        qecc: Some((56, 48, 3)),
    },
    SigmaRow {
        label: "T3#8",
        p: 7,
        m: 2,
        n: 14,
        t: [
            &["6", "w", "w^46", "w^47", "1"],
            &["w^18", "1"],
            &["w^6", "1"],
            &["1", "1"],
        ],
        ik: 49,
        id: 4,
        qecc: Some((56, 42, 4)),
    },
    SigmaRow {
        label: "T3#9",
        p: 3,
        m: 2,
        n: 18,
        t: [
            &["w^6", "w^3", "w^2", "1", "1"],
            &["w^6", "1"],
            &["w^2", "1"],
            &["1"],
        ],
        ik: 66,
        id: 3,
        qecc: Some((72, 60, 3)),
    },
    SigmaRow {
        label: "T3#10",
        p: 11,
        m: 2,
        n: 22,
        t: [
            &["w^100", "w^80", "w^38", "w^20", "1"],
            &["w^40", "1"],
            &["w^80", "1"],
            &["1", "1"],
        ],
        ik: 81,
        id: 4,
        qecc: Some((88, 74, 4)),
    },
    SigmaRow {
        label: "T3#11",
        p: 5,
        m: 2,
        n: 20,
        t: [&["w^22", "3", "w^13", "1"], &["w^22", "1"], &["w^8", "1"], &["1"]],
        ik: 75,
        id: 3,
        qecc: Some((80, 70, 3)),
    },
    SigmaRow {
        label: "T3#12",
        p: 11,
        m: 2,
        n: 22,
        t: [
            &["w^20", "w^107", "w^32", "1"],
            &["1", "1"],
            &["w^80", "1"],
            &["w^40", "1"],
        ],
        ik: 82,
        id: 3,
        qecc: Some((88, 76, 3)),
    },
    SigmaRow {
        label: "T3#13",
        p: 13,
        m: 2,
        n: 26,
        t: [&["1", "w^148", "w^21", "1"], &["w^60", "1"], &["w^48", "1"], &["1"]],
        ik: 99,
        id: 4,
        qecc: Some((104, 94, 4)),
    },
];

fn sigma_row_structural(ring: &SkewRing, row: &SigmaRow) -> bool {
    row.t.iter().all(|t| divides(ring, row.n, &poly(ring, t)))
}

fn sigma_row_full(ring: &SkewRing, row: &SigmaRow) -> String {
    let t: [FqPoly; 4] = std::array::from_fn(|i| poly(ring, row.t[i]));
    let code = match LinearCode::from_sigma_cyclic_r(ring, row.n, &t) {
        Ok(c) => c,
        Err(e) => return format!("build error: {e}"),
    };
    let rep = match code.min_distance(Strategy::Auto, BUDGET) {
        Ok(r) => r,
        Err(e) => return format!("distance error: {e}"),
    };
    let mut out = format!(
        "[{},{},{}] (want [{},{},{}])",
        code.n(),
        code.k(),
        rep.upper_bound,
        4 * row.n,
        row.ik,
        row.id
    );
    let ok_params = code.k() == row.ik && rep.upper_bound as usize == row.id;
    if let Some((qn, qk, qd)) = row.qecc {
        let dc = qecc::dual_containing_components(ring, row.n, &t).unwrap();
        if !dc {
            out.push_str("  ** NOT DUAL CONTAINING");
            return out;
        }
        let c = qecc::ClassicalParams {
            n: code.n(),
            k: code.k(),
            d: rep.upper_bound as usize,
            q: ring.field().q(),
        };
        match qecc::css(c, true, "") {
            Ok(p) => {
                let ok = p.n == qn && p.k == qk && p.d == qd;
                out.push_str(&format!(
                    " css=[[{},{},{}]]{}",
                    p.n,
                    p.k,
                    p.d,
                    if ok && ok_params { "  OK" } else { "  ** MISMATCH" }
                ));
            }
            Err(e) => out.push_str(&format!(" css error: {e}")),
        }
    } else {
        out.push_str(if ok_params { "  OK" } else { "  ** MISMATCH" });
    }
    out
}

// ---------------------------------------------------------------- mixed rows

struct MixedRow {
    label: &'static str,
    p: u32,
    m: u32,
    r: usize,
    s: usize,
    ell: &'static [&'static str],
    t: [&'static [&'static str]; 4],
    ik: usize,
    id: usize,
    qecc: (usize, usize, usize),
}

const MIXED_ROWS: &[MixedRow] = &[
    MixedRow {
        label: "T4#1",
        p: 3,
        m: 2,
        r: 12,
        s: 6,
        ell: &["w^3", "w", "1", "2", "1"],
        t: [&["1", "w^5", "w^5", "1"], &["w^2", "1"], &["w^6", "1"], &["w"]],
        ik: 27,
        id: 4,
        qecc: (36, 18, 4),
    },
    // row 2 as printed: t2 a unit constant (k comes out 35, not 34)
    MixedRow {
        label: "T4#2-printed",
        p: 5,
        m: 2,
        r: 8,
        s: 8,
        ell: &["w^23", "w^10", "1"],
        t: [&["w^23", "w^10", "1"], &["w^5"], &["w^3", "1"], &["1"]],
        ik: 34,
        id: 3,
        qecc: (40, 28, 3),
    },
    // row 2 candidate A: t2 completed to w^5 + x
    MixedRow {
        label: "T4#2-candA",
        p: 5,
        m: 2,
        r: 8,
        s: 8,
        ell: &["w^23", "w^10", "1"],
        t: [&["w^23", "w^10", "1"], &["w^5", "1"], &["w^3", "1"], &["1"]],
        ik: 34,
        id: 3,
        qecc: (40, 28, 3),
    },
    // row 2 candidate B: t4 completed to 1 + x
    MixedRow {
        label: "T4#2-candB",
        p: 5,
        m: 2,
        r: 8,
        s: 8,
        ell: &["w^23", "w^10", "1"],
        t: [&["w^23", "w^10", "1"], &["w^5"], &["w^3", "1"], &["1", "1"]],
        ik: 34,
        id: 3,
        qecc: (40, 28, 3),
    },
    MixedRow {
        label: "T4#3",
        p: 3,
        m: 3,
        r: 18,
        s: 9,
        ell: &["w^18", "w^19", "1"],
        t: [&["w^18", "w^19", "1"], &["w^9", "1"], &["w^3", "1"], &["1"]],
        ik: 48,
        id: 3,
        qecc: (54, 42, 3),
    },
    MixedRow {
        label: "T4#4",
        p: 5,
        m: 2,
        r: 40,
        s: 10,
        ell: &["2", "w^4", "w^8", "1"],
        t: [&["w^20", "4", "w^8", "1"], &["w^20", "1"], &["w^20", "1"], &["1"]],
        ik: 72,
        id: 3,
        qecc: (80, 64, 3),
    },
    MixedRow {
        label: "T4#5",
        p: 5,
        m: 2,
        r: 8,
        s: 10,
        ell: &["w^15", "w^16", "1"],
        t: [&["w^20", "4", "w^8", "1"], &["w^20", "1"], &["w^20", "1"], &["1"]],
        ik: 41,
        id: 3,
        qecc: (48, 34, 3),
    },
    MixedRow {
        label: "T4#6",
        p: 3,
        m: 2,
        r: 56,
        s: 6,
        ell: &["1", "0", "2", "2", "w^6", "1"],
        t: [&["w^6", "w^3", "1"], &["2", "1"], &["w^2", "1"], &["w^6", "1"]],
        ik: 70,
        id: 4,
        qecc: (80, 60, 4),
    },
    // row 7 candidate A: t2 = 1 + x, t3 = w^85 + x
    MixedRow {
        label: "T4#7-candA",
        p: 13,
        m: 2,
        r: 8,
        s: 24,
        ell: &["w^117", "w^109", "1"],
        t: [&["w^15", "w^3", "1"], &["1", "1"], &["w^85", "1"], &["1"]],
        ik: 98,
        id: 3,
        qecc: (104, 92, 3),
    },
    // row 7 candidate B: t2 = 1 + x + x², t3 = w^85 (unit)
    MixedRow {
        label: "T4#7-candB",
        p: 13,
        m: 2,
        r: 8,
        s: 24,
        ell: &["w^117", "w^109", "1"],
        t: [&["w^15", "w^3", "1"], &["1", "1", "1"], &["w^85"], &["1"]],
        ik: 98,
        id: 3,
        qecc: (104, 92, 3),
    },
];

fn mixed_row_structural(ring: &SkewRing, row: &MixedRow) -> bool {
    divides(ring, row.r, &poly(ring, row.ell))
        && row.t.iter().all(|t| divides(ring, row.s, &poly(ring, t)))
}

fn mixed_row_full(ring: &SkewRing, row: &MixedRow) -> String {
    let ell = poly(ring, row.ell);
    let t: [FqPoly; 4] = std::array::from_fn(|i| poly(ring, row.t[i]));
    let code = match MixedCode::build(ring.clone(), row.r, row.s, ell, ring.zero(), t) {
        Ok(c) => c,
        Err(e) => return format!("build error: {e}"),
    };
    let gray = GrayMap::new(ring.field_arc()).unwrap();
    let image = gray.image_of(&code).unwrap();
    let rep = match image.min_distance(Strategy::Auto, BUDGET) {
        Ok(r) => r,
        Err(e) => return format!("distance error: {e}"),
    };
    let mut out = format!(
        "[{},{},{}] (want [{},{},{}])",
        image.n(),
        image.k(),
        rep.upper_bound,
        row.r + 4 * row.s,
        row.ik,
        row.id
    );
    let dc = qecc::dual_containing_mixed(&code).unwrap();
    if !dc {
        out.push_str("  ** NOT DUAL CONTAINING");
        return out;
    }
    let c = qecc::ClassicalParams {
        n: image.n(),
        k: image.k(),
        d: rep.upper_bound as usize,
        q: ring.field().q(),
    };
    let (qn, qk, qd) = row.qecc;
    match qecc::css(c, true, "") {
        Ok(p) => {
            let ok = p.n == qn && p.k == qk && p.d == qd && image.k() == row.ik;
            out.push_str(&format!(
                " css=[[{},{},{}]]{}",
                p.n,
                p.k,
                p.d,
                if ok { "  OK" } else { "  ** MISMATCH" }
            ));
        }
        Err(e) => out.push_str(&format!(" css error: {e}")),
    }
    out
}

// ------------------------------------------------------------------- driver

fn main() {
    // 1. enumerate valid moduli per field, filter by structural fit
    let fields: &[(u32, u32)] = &[
        (3, 2),
        (3, 3),
        (3, 4),
        (5, 2),
        (5, 3),
        (5, 4),
        (5, 5),
        (7, 2),
        (7, 3),
        (7, 5),
        (11, 2),
        (13, 2),
    ];
    for &(p, m) in fields {
        let moduli = all_valid_moduli(p, m);
        let mut fits = Vec::new();
        for modulus in &moduli {
            let ring = ring_for(p, m, modulus);
            let th: Vec<&ThetaRow> =
                THETA_ROWS.iter().filter(|r| r.p == p && r.m == m).collect();
            let si: Vec<&SigmaRow> =
                SIGMA_ROWS.iter().filter(|r| r.p == p && r.m == m).collect();
            let mi: Vec<&MixedRow> =
                MIXED_ROWS.iter().filter(|r| r.p == p && r.m == m).collect();
            if th.is_empty() && si.is_empty() && mi.is_empty() {
                continue;
            }
            // variant rows (label contains '-') are hypotheses under test;
            // they must not constrain which modulus is selected
            let ok = th.iter().all(|r| theta_row_structural(&ring, r))
                && si
                    .iter()
                    .filter(|r| !r.label.contains('-'))
                    .all(|r| sigma_row_structural(&ring, r))
                && mi
                    .iter()
                    .filter(|r| !r.label.contains('-'))
                    .all(|r| mixed_row_structural(&ring, r));
            if ok {
                fits.push(modulus.clone());
            }
        }
        println!(
            "field {p}^{m}: {} valid moduli, structural fits: {:?}",
            moduli.len(),
            fits
        );
        // full checks under each structural fit
        for modulus in &fits {
            let ring = ring_for(p, m, modulus);
            println!("  -- modulus {:?}", modulus);
            for r in THETA_ROWS.iter().filter(|r| r.p == p && r.m == m) {
                println!("    {}: {}", r.label, theta_row_full(&ring, r));
            }
            for r in SIGMA_ROWS.iter().filter(|r| r.p == p && r.m == m) {
                if sigma_row_structural(&ring, r) {
                    println!("    {}: {}", r.label, sigma_row_full(&ring, r));
                } else {
                    println!("    {}: STRUCTURAL FAIL", r.label);
                }
            }
            for r in MIXED_ROWS.iter().filter(|r| r.p == p && r.m == m) {
                if mixed_row_structural(&ring, r) {
                    println!("    {}: {}", r.label, mixed_row_full(&ring, r));
                } else {
                    println!("    {}: STRUCTURAL FAIL", r.label);
                }
            }
        }
    }

    // 2. the small worked example with a compatibility-constrained s-part
    println!("\nsection-3 style example (q=27, r=s=3, non-separable):");
    for modulus in all_valid_moduli(3, 3) {
        let ring = ring_for(3, 3, &modulus);
        let ell = poly(&ring, &["w^17", "1"]);
        let t1 = poly(&ring, &["w^5", "1"]);
        let t3 = poly(&ring, &["w^8", "w^6", "1"]);
        let s_poly = poly(&ring, &["w"]);
        if !divides(&ring, 3, &ell) || !divides(&ring, 3, &t1) || !divides(&ring, 3, &t3) {
            continue;
        }
        match MixedCode::build(
            ring.clone(),
            3,
            3,
            ell,
            s_poly,
            [t1.clone(), t1, t3.clone(), t3],
        ) {
            Ok(code) => {
                println!(
                    "  modulus {:?}: builds, dim={}, f={}, h1={}, h3={}",
                    modulus,
                    code.dim(),
                    code.f_cofactor(),
                    code.h_cofactor(0),
                    code.h_cofactor(2),
                );
            }
            Err(e) => println!("  modulus {:?}: {e}", modulus),
        }
    }

    // 3. the length-(8,10) example over F_25: printed modulus is x^2+4x+2;
    //    confirm cofactors, quotients, and end-to-end parameters
    println!("\nlength-(8,10) example over F_25:");
    for modulus in all_valid_moduli(5, 2) {
        let ring = ring_for(5, 2, &modulus);
        let ell = poly(&ring, &["w^9", "1"]).mul(&poly(&ring, &["2", "1"])).unwrap();
        let t1 = poly(&ring, &["w^8", "1"])
            .mul(&poly(&ring, &["w^16", "1"]))
            .unwrap()
            .mul(&poly(&ring, &["w^20", "1"]))
            .unwrap();
        let ti = poly(&ring, &["w^20", "1"]);
        if !divides(&ring, 8, &ell) || !divides(&ring, 10, &t1) || !divides(&ring, 10, &ti) {
            println!("  modulus {:?}: generators do not divide", modulus);
            continue;
        }
        let wf = qecc::containment_witness(&ring, 8, &ell).unwrap();
        let f_exp = poly(&ring, &["w^21", "w^22", "0", "w^4", "w^10", "w^4", "1"]);
        let fq_exp = poly(&ring, &["w^9", "3", "0", "2", "w^21"]);
        let w1 = qecc::containment_witness(&ring, 10, &t1).unwrap();
        let s1_exp = poly(&ring, &["w^16", "4", "w^22", "3", "w^10", "2", "w^4", "1"]);
        let s1q_exp = poly(&ring, &["w^4", "w^20", "w^15", "w^8", "w^8"]);
        let wi = qecc::containment_witness(&ring, 10, &ti).unwrap();
        let si_exp = poly(
            &ring,
            &["w^16", "1", "w^16", "1", "w^16", "1", "w^16", "1", "w^16", "1"],
        );
        let siq_exp = poly(
            &ring,
            &["w^4", "w^8", "w^23", "w^14", "w^21", "w^2", "w^7", "w^20", "w^8"],
        );
        println!(
            "  modulus {:?}: f={} fq={:?} s1={} s1q={:?} si={} siq={:?}",
            modulus,
            wf.cofactor == f_exp,
            wf.quotient.as_ref().map(|q| *q == fq_exp),
            w1.cofactor == s1_exp,
            w1.quotient.as_ref().map(|q| *q == s1q_exp),
            wi.cofactor == si_exp,
            wi.quotient.as_ref().map(|q| *q == siq_exp),
        );
        let code = MixedCode::build(
            ring.clone(),
            8,
            10,
            ell.clone(),
            ring.zero(),
            [t1.clone(), ti.clone(), ti.clone(), ti.clone()],
        )
        .unwrap();
        let gray = GrayMap::new(ring.field_arc()).unwrap();
        let image = gray.image_of(&code).unwrap();
        let rep = image.min_distance(Strategy::Auto, BUDGET).unwrap();
        let cr = LinearCode::from_skew_cyclic(&ring, 8, &ell).unwrap();
        let cr_rep = cr.min_distance(Strategy::Auto, BUDGET).unwrap();
        let cs = LinearCode::from_sigma_cyclic_r(
            &ring,
            10,
            &[t1.clone(), ti.clone(), ti.clone(), ti.clone()],
        )
        .unwrap();
        let cs_rep = cs.min_distance(Strategy::Auto, BUDGET).unwrap();
        let dc = qecc::dual_containing_mixed(&code).unwrap();
        let c = qecc::ClassicalParams {
            n: image.n(),
            k: image.k(),
            d: rep.upper_bound as usize,
            q: 25,
        };
        let p = qecc::css(c, dc, "").unwrap();
        println!(
            "    C_r=[{},{},{}] phi1(C_s)=[{},{},{}] phi(D)=[{},{},{}] css=[[{},{},{}]] (want [8,6,3] [40,34,3] [48,40,3] [[48,32,3]])",
            cr.n(), cr.k(), cr_rep.upper_bound,
            cs.n(), cs.k(), cs_rep.upper_bound,
            image.n(), image.k(), rep.upper_bound,
            p.n, p.k, p.d,
        );
    }

    // 4. the length-(26,6) example over F_9: end-to-end parameter check
    //    (cofactor pins for this one already live in the unit tests)
    println!("\nlength-(26,6) example over F_9:");
    for modulus in all_valid_moduli(3, 2) {
        let ring = ring_for(3, 2, &modulus);
        let ell = poly(&ring, &["w^2", "w^3", "2", "1"])
            .mul(&poly(&ring, &["w^2", "1"]))
            .unwrap();
        let t1 = poly(&ring, &["1", "1"]).mul(&poly(&ring, &["w^6", "1"])).unwrap();
        let ti = poly(&ring, &["w^6", "1"]);
        if !divides(&ring, 26, &ell) || !divides(&ring, 6, &t1) || !divides(&ring, 6, &ti) {
            println!("  modulus {:?}: generators do not divide", modulus);
            continue;
        }
        let code = MixedCode::build(
            ring.clone(),
            26,
            6,
            ell.clone(),
            ring.zero(),
            [t1.clone(), ti.clone(), ti.clone(), ti.clone()],
        )
        .unwrap();
        let gray = GrayMap::new(ring.field_arc()).unwrap();
        let image = gray.image_of(&code).unwrap();
        let rep = image.min_distance(Strategy::Auto, BUDGET).unwrap();
        let dc = qecc::dual_containing_mixed(&code).unwrap();
        let c = qecc::ClassicalParams {
            n: image.n(),
            k: image.k(),
            d: rep.upper_bound as usize,
            q: 9,
        };
        let p = qecc::css(c, dc, "").unwrap();
        println!(
            "  modulus {:?}: phi(D)=[{},{},{}] css=[[{},{},{}]] (want [50,41,3] [[50,32,3]])",
            modulus,
            image.n(),
            image.k(),
            rep.upper_bound,
            p.n,
            p.k,
            p.d,
        );
    }

    // 5. the length-(9,3) example over F_27: which modulus matches the
    //    printed cofactor and quotient data exactly?
    println!("\nlength-(9,3) example over F_27:");
    for modulus in all_valid_moduli(3, 3) {
        let ring = ring_for(3, 3, &modulus);
        let ell = poly(&ring, &["w^9", "1"]).mul(&poly(&ring, &["2", "1"])).unwrap();
        if !divides(&ring, 9, &ell) {
            println!("  modulus {:?}: ell does not divide", modulus);
            continue;
        }
        let w = qecc::containment_witness(&ring, 9, &ell).unwrap();
        let f_expected = poly(
            &ring,
            &["w^17", "w^17", "w^15", "w^12", "w^7", "w^2", "w^16", "1"],
        );
        let q_expected = poly(&ring, &["w^4", "w^22", "w^12", "w^17", "w^9", "w^25"]);
        println!(
            "  modulus {:?}: f match={}, holds={}, quotient match={:?}",
            modulus,
            w.cofactor == f_expected,
            w.holds(),
            w.quotient.as_ref().map(|q| *q == q_expected),
        );
        let t12 = poly(&ring, &["w", "1"]);
        let t34 = poly(&ring, &["w^3", "1"]);
        if divides(&ring, 3, &t12) && divides(&ring, 3, &t34) {
            let w1 = qecc::containment_witness(&ring, 3, &t12).unwrap();
            let w3 = qecc::containment_witness(&ring, 3, &t34).unwrap();
            println!(
                "    t12: cof match={} q match={:?}; t34: cof match={} q match={:?}",
                w1.cofactor == poly(&ring, &["w^12", "w^22", "1"]),
                w1.quotient.as_ref().map(|q| *q == poly(&ring, &["w^25", "w^4"])),
                w3.cofactor == poly(&ring, &["w^10", "w^14", "1"]),
                w3.quotient.as_ref().map(|q| *q == poly(&ring, &["w^23", "w^12"])),
            );
            let code = MixedCode::build(
                ring.clone(),
                9,
                3,
                ell.clone(),
                ring.zero(),
                [t12.clone(), t12.clone(), t34.clone(), t34.clone()],
            )
            .unwrap();
            let gray = GrayMap::new(ring.field_arc()).unwrap();
            let image = gray.image_of(&code).unwrap();
            let rep = image.min_distance(Strategy::Auto, BUDGET).unwrap();
            let cr = LinearCode::from_skew_cyclic(&ring, 9, &ell).unwrap();
            let cr_rep = cr.min_distance(Strategy::Auto, BUDGET).unwrap();
            let cs = LinearCode::from_sigma_cyclic_r(
                &ring,
                3,
                &[t12.clone(), t12.clone(), t34.clone(), t34.clone()],
            )
            .unwrap();
            let cs_rep = cs.min_distance(Strategy::Auto, BUDGET).unwrap();
            let dc = qecc::dual_containing_mixed(&code).unwrap();
            let c = qecc::ClassicalParams {
                n: image.n(),
                k: image.k(),
                d: rep.upper_bound as usize,
                q: 27,
            };
            match qecc::css(c, dc, "") {
                Ok(p) => println!(
                    "    C_r=[{},{},{}] phi1(C_s)=[{},{},{}] phi(D)=[{},{},{}] css=[[{},{},{}]] (want [9,7,3] [12,8,3] [21,15,3] [[21,9,3]])",
                    cr.n(), cr.k(), cr_rep.upper_bound,
                    cs.n(), cs.k(), cs_rep.upper_bound,
                    image.n(), image.k(), rep.upper_bound,
                    p.n, p.k, p.d,
                ),
                Err(e) => println!("    css error: {e}"),
            }
        } else {
            println!("    t components do not divide x^3 - 1");
        }
    }
}
