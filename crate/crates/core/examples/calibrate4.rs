//! Temporary calibration harness, pass 4 — not part of the library.
//!
//! Closes the remaining open rows: the (12,6) mixed row's dual-containment
//! failure, the length-8 quaternary row's degree splits, the (56,6) row's
//! field-side generator, the F_125 cubic repair pool, and final locks for
//! the rows repaired in earlier passes.

use skewcodec_core::qecc;
use skewcodec_core::*;

const BUDGET: u64 = 1 << 28;

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

fn hamming(ring: &SkewRing, a: &FqPoly, b: &FqPoly) -> usize {
    let zero = ring.field().element_from_int(0);
    let ac = a.coeffs();
    let bc = b.coeffs();
    let len = ac.len().max(bc.len());
    (0..len)
        .filter(|&i| {
            ac.get(i).copied().unwrap_or(zero) != bc.get(i).copied().unwrap_or(zero)
        })
        .count()
}

/// Full check of a θ-cyclic row: params, dual containment, CSS image.
fn theta_full(ring: &SkewRing, n: usize, ell: &FqPoly) -> (usize, usize, usize, bool) {
    let code = LinearCode::from_skew_cyclic(ring, n, ell).unwrap();
    let rep = code.min_distance(Strategy::Auto, BUDGET).unwrap();
    let dc = qecc::dual_containing_skew_cyclic(ring, n, ell).unwrap();
    (code.n(), code.k(), rep.upper_bound as usize, dc)
}

/// Full check of a Σ-cyclic row over R: image params + dual containment.
fn sigma_full(ring: &SkewRing, n: usize, t: &[FqPoly; 4]) -> (usize, usize, usize, bool) {
    let code = LinearCode::from_sigma_cyclic_r(ring, n, t).unwrap();
    let rep = code.min_distance(Strategy::Auto, BUDGET).unwrap();
    let dc = qecc::dual_containing_components(ring, n, t).unwrap();
    (code.n(), code.k(), rep.upper_bound as usize, dc)
}

/// Full check of a mixed row: image params + dual containment.
fn mixed_full(
    ring: &SkewRing,
    r: usize,
    s: usize,
    ell: &FqPoly,
    t: &[FqPoly; 4],
) -> std::result::Result<(usize, usize, usize, bool), String> {
    let code = MixedCode::build(ring.clone(), r, s, ell.clone(), ring.zero(), t.clone())
        .map_err(|e| format!("build error: {e}"))?;
    let gray = GrayMap::new(ring.field_arc()).unwrap();
    let image = gray.image_of(&code).unwrap();
    let rep = image
        .min_distance(Strategy::Auto, BUDGET)
        .map_err(|e| format!("distance error: {e}"))?;
    let dc = qecc::dual_containing_mixed(&code).unwrap();
    Ok((image.n(), image.k(), rep.upper_bound as usize, dc))
}

fn main() {
    // ---------------------------------------------------------------- (A)
    // (12,6) mixed row: which block breaks dual containment, and does a
    // one-symbol change in t2 repair the row?
    println!("== (A) (12,6) mixed row diagnostics ==");
    {
        let ring = ring_for(3, 2, &[2, 2, 1]);
        let ell = poly(&ring, &["w^3", "w", "1", "2", "1"]);
        let t: [FqPoly; 4] = [
            poly(&ring, &["1", "w^5", "w^5", "1"]),
            poly(&ring, &["w^2", "1"]),
            poly(&ring, &["w^6", "1"]),
            poly(&ring, &["w"]),
        ];
        let field_dc = qecc::dual_containing_skew_cyclic(&ring, 12, &ell).unwrap();
        println!("field block (r=12) dc: {field_dc}");
        for (i, ti) in t.iter().enumerate() {
            let dc = qecc::dual_containing_skew_cyclic(&ring, 6, ti).unwrap();
            println!("ring component t{} (s=6) dc: {}", i + 1, dc);
        }
        // independent oracle on the as-printed row
        let code = MixedCode::build(ring.clone(), 12, 6, ell.clone(), ring.zero(), t.clone())
            .unwrap();
        let gm = code.generator_matrix().unwrap();
        let dual_basis = duality::dual_oracle_basis(&code).unwrap();
        let oracle_dc = (0..dual_basis.nrows())
            .all(|i| gm.in_rowspace(dual_basis.row(i)).unwrap());
        println!("oracle (dual basis in rowspace): {oracle_dc}");

        // sweep every monic degree-1 t2 candidate
        let consts: Vec<FieldElement> = ring.field().elements().collect();
        for c in consts {
            let cand = ring.poly(vec![c, ring.field().element_from_int(1)]);
            if !divides(&ring, 6, &cand) {
                continue;
            }
            let t_mod: [FqPoly; 4] = [t[0].clone(), cand.clone(), t[2].clone(), t[3].clone()];
            match mixed_full(&ring, 12, 6, &ell, &t_mod) {
                Ok((n, k, d, dc)) => println!(
                    "t2 = {} : [{n},{k},{d}] dc={dc}{}",
                    ring.field().format_element(cand.coeffs()[0]),
                    if k == 27 && d == 4 && dc { "  <-- repairs row" } else { "" }
                ),
                Err(e) => println!("t2 candidate error: {e}"),
            }
        }

        // the printed t1 itself fails dual containment at s=6: sweep every
        // monic degree-3 right divisor of x^6-1 as a t1 replacement
        println!("t1 replacement sweep (degree-3 divisors of x^6-1):");
        let div3 = ring.right_divisors(6, 3, 1 << 20).unwrap();
        for cand in &div3 {
            if !qecc::dual_containing_skew_cyclic(&ring, 6, cand).unwrap() {
                continue;
            }
            let t_mod: [FqPoly; 4] = [cand.clone(), t[1].clone(), t[2].clone(), t[3].clone()];
            match mixed_full(&ring, 12, 6, &ell, &t_mod) {
                Ok((n, k, d, dc)) => {
                    if k == 27 && d == 4 && dc {
                        println!(
                            "  t1 = {cand} : [{n},{k},{d}] dc={dc} (Hamming {} from printed)",
                            hamming(&ring, cand, &t[0])
                        );
                    }
                }
                Err(e) => println!("  t1 candidate error: {e}"),
            }
        }
    }

    // ---------------------------------------------------------------- (B)
    // Length-8 quaternary row: remaining degree splits for (t2, t3) with
    // the printed t1, t4. Target image [32,19,8].
    println!("\n== (B) length-8 row degree splits ==");
    {
        let ring = ring_for(3, 2, &[2, 2, 1]);
        let t1 = poly(&ring, &["w^7", "w^6", "w", "1"]);
        let t4 = poly(&ring, &["w^3", "2", "1"]);
        let mut best: (usize, String) = (0, String::new());
        for (d2, d3) in [(7usize, 1usize), (5, 3), (4, 4), (3, 5), (1, 7)] {
            let div2 = ring.right_divisors(8, d2, 1 << 24).unwrap();
            let div3 = ring.right_divisors(8, d3, 1 << 24).unwrap();
            println!(
                "split ({d2},{d3}): {} x {} divisor pairs",
                div2.len(),
                div3.len()
            );
            let mut hits = 0usize;
            for t2 in &div2 {
                for t3 in &div3 {
                    let t: [FqPoly; 4] =
                        [t1.clone(), t2.clone(), t3.clone(), t4.clone()];
                    let code = LinearCode::from_sigma_cyclic_r(&ring, 8, &t).unwrap();
                    if code.k() != 19 {
                        continue;
                    }
                    let rep = code.min_distance(Strategy::Auto, BUDGET).unwrap();
                    let d = rep.upper_bound as usize;
                    if d > best.0 {
                        best = (d, format!("t2={t2} t3={t3} (split {d2},{d3})"));
                    }
                    if d >= 8 {
                        hits += 1;
                        println!("  HIT d={d}: t2 = {t2}, t3 = {t3}");
                    }
                }
            }
            println!("split ({d2},{d3}) hits: {hits}");
        }
        println!("best distance over all splits: {} via {}", best.0, best.1);
        // the zero-restored reading, full parameters for the record
        let t2fix = poly(&ring, &["w^6", "w^3", "1", "0", "w^6", "w^7", "1"]);
        let t3p = poly(&ring, &["w^7", "0", "1"]);
        let t: [FqPoly; 4] = [t1.clone(), t2fix, t3p, t4.clone()];
        let (n, k, d, dc) = sigma_full(&ring, 8, &t);
        println!("zero-restored reading: [{n},{k},{d}] dc={dc}");
    }

    // ---------------------------------------------------------------- (C)
    // (56,6) row: every monic degree-5 right divisor of x^56-1 over F_9,
    // ranked by Hamming distance to the printed field generator.
    println!("\n== (C) (56,6) row field generator ==");
    {
        let ring = ring_for(3, 2, &[2, 2, 1]);
        let printed = poly(&ring, &["1", "0", "2", "2", "w^6", "1"]);
        let t: [FqPoly; 4] = [
            poly(&ring, &["w^6", "w^3", "1"]),
            poly(&ring, &["2", "1"]),
            poly(&ring, &["w^2", "1"]),
            poly(&ring, &["w^6", "1"]),
        ];
        let ring_dc = qecc::dual_containing_components(&ring, 6, &t).unwrap();
        println!("ring block (s=6) dc: {ring_dc}");
        let divisors = ring.right_divisors(56, 5, 1 << 24).unwrap();
        println!("monic degree-5 right divisors of x^56-1: {}", divisors.len());
        let mut hist = [0usize; 7];
        let mut near: Vec<(usize, FqPoly)> = Vec::new();
        for g in &divisors {
            let h = hamming(&ring, g, &printed);
            hist[h.min(6)] += 1;
            if h <= 2 {
                near.push((h, g.clone()));
            }
        }
        println!("Hamming histogram vs printed: {hist:?}");
        near.sort_by_key(|(h, _)| *h);
        for (h, g) in &near {
            match mixed_full(&ring, 56, 6, g, &t) {
                Ok((n, k, d, dc)) => println!(
                    "dist {h}: ell = {g} : [{n},{k},{d}] dc={dc}{}",
                    if k == 70 && d == 4 && dc { "  <-- repairs row" } else { "" }
                ),
                Err(e) => println!("dist {h}: ell = {g} : {e}"),
            }
        }
        if near.is_empty() {
            println!("no divisor within Hamming distance 2 of the printed cell");
            // full sweep: which divisors give the printed parameters at all?
            let mut full_hits = 0usize;
            for g in &divisors {
                if let Ok((_, k, d, dc)) = mixed_full(&ring, 56, 6, g, &t) {
                    if k == 70 && d == 4 && dc {
                        full_hits += 1;
                        if full_hits <= 5 {
                            println!(
                                "param hit (dist {}): ell = {g}",
                                hamming(&ring, g, &printed)
                            );
                        }
                    }
                }
            }
            println!("divisors giving [80,70,4] with dual containment: {full_hits}");
        }
    }

    // ---------------------------------------------------------------- (D)
    // F_125 cubic: proximity of the repair pool to the printed cell.
    println!("\n== (D) F_125 cubic repair pool ==");
    for modulus in [&[2u32, 3, 0, 1][..], &[3, 3, 0, 1][..]] {
        let ring = ring_for(5, 3, modulus);
        let printed = poly(&ring, &["w^2", "3", "w^76", "1"]);
        let divisors = ring.right_divisors(15, 3, 1 << 22).unwrap();
        let mut pool = 0usize;
        let mut best: Vec<(usize, FqPoly)> = Vec::new();
        for g in &divisors {
            let (_, k, d, dc) = theta_full(&ring, 15, g);
            if k == 12 && d == 4 && dc {
                pool += 1;
                let h = hamming(&ring, g, &printed);
                best.push((h, g.clone()));
            }
        }
        best.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| format!("{}", a.1).cmp(&format!("{}", b.1))));
        println!(
            "modulus {modulus:?}: pool size {pool}; closest hits:"
        );
        for (h, g) in best.iter().take(4) {
            println!("  dist {h}: {g}");
        }
    }

    // ---------------------------------------------------------------- (E)
    // Full F_9 table rows under the frozen modulus [2,2,1].
    println!("\n== (E) F_9 table rows, frozen modulus ==");
    {
        let ring = ring_for(3, 2, &[2, 2, 1]);
        let rows: &[(&str, usize, [&[&str]; 4], usize, usize, Option<(usize, usize, usize)>)] = &[
            ("T3#1", 6, [&["1", "w^5", "w^5", "1"], &["w^6", "1"], &["1", "1"], &["1", "1"]], 18, 4, Some((24, 12, 4))),
            ("T3#2", 8, [&["w^7", "w^6", "w", "1"], &["w^6", "1"], &["2", "1"], &["1"]], 27, 4, Some((32, 22, 4))),
            ("T3#5", 10, [&["w^7", "w^7", "w", "w^5", "1"], &["w^3", "1"], &["w^7", "1"], &["1"]], 34, 4, Some((40, 28, 4))),
            ("T3#6", 12, [&["w^3", "w", "1", "2", "1"], &["w^6", "1"], &["1", "1"], &["1"]], 42, 4, Some((48, 36, 4))),
            ("T3#9", 12, [&["w^2", "1", "w", "1"], &["w^6", "1"], &["w^2", "1"], &["1"]], 43, 3, Some((48, 38, 3))),
        ];
        for (label, n, tt, ik, id, q) in rows {
            let t: [FqPoly; 4] = std::array::from_fn(|i| poly(&ring, tt[i]));
            let (cn, k, d, dc) = sigma_full(&ring, *n, &t);
            let mut line = format!("{label}: [{cn},{k},{d}] dc={dc} (want [{},{},{}])", 4 * n, ik, id);
            if let Some((qn, qk, qd)) = q {
                let ok = dc && k == *ik && d == *id && 2 * k - cn == *qk && cn == *qn && d == *qd;
                line.push_str(if ok { "  OK" } else { "  ** MISMATCH" });
            }
            println!("{line}");
        }
    }

    // ---------------------------------------------------------------- (F)
    // Lock the repaired F_7^5 quadratic and the two length-18 rows.
    println!("\n== (F) final locks ==");
    {
        let ring = ring_for(7, 5, &[4, 1, 0, 0, 0, 1]);
        let g = poly(&ring, &["w^6490", "w^2112", "1"]);
        let (n, k, d, dc) = theta_full(&ring, 15, &g);
        println!("F_7^5 repaired quadratic: [{n},{k},{d}] dc={dc}");
        if dc {
            let c = qecc::ClassicalParams { n, k, d, q: ring.field().q() };
            let p = qecc::css(c, true, "").unwrap();
            println!("  css=[[{},{},{}]] mds={}", p.n, p.k, p.d, p.mds);
        }
    }
    {
        let ring = ring_for(3, 3, &[1, 2, 0, 1]);
        let ell = poly(&ring, &["w^18", "w^19", "1"]);
        let (n, k, d, dc) = theta_full(&ring, 18, &ell);
        println!("length-18 theta row as printed: [{n},{k},{d}] dc={dc}");
        if dc {
            let c = qecc::ClassicalParams { n, k, d, q: ring.field().q() };
            let p = qecc::css(c, true, "").unwrap();
            println!("  css=[[{},{},{}]] mds={}", p.n, p.k, p.d, p.mds);
        }
        let t: [FqPoly; 4] = [
            poly(&ring, &["w^18", "w^19", "1"]),
            poly(&ring, &["w^9", "1"]),
            poly(&ring, &["w^3", "1"]),
            poly(&ring, &["1"]),
        ];
        match mixed_full(&ring, 18, 9, &ell, &t) {
            Ok((n, k, d, dc)) => {
                println!("(18,9) mixed row as printed: [{n},{k},{d}] dc={dc}");
                if dc {
                    let c = qecc::ClassicalParams { n, k, d, q: ring.field().q() };
                    let p = qecc::css(c, true, "").unwrap();
                    println!("  css=[[{},{},{}]] mds={}", p.n, p.k, p.d, p.mds);
                }
            }
            Err(e) => println!("(18,9) mixed row: {e}"),
        }
    }
    {
        // frozen-modulus locks for the two remaining theta rows
        let ring = ring_for(3, 4, &[2, 0, 0, 2, 1]);
        let ell = poly(&ring, &["w^69", "w^28", "1"]);
        let (n, k, d, dc) = theta_full(&ring, 8, &ell);
        println!("F_81 theta row: [{n},{k},{d}] dc={dc}");
        let ring = ring_for(5, 4, &[2, 4, 4, 0, 1]);
        let ell = poly(&ring, &["w^332", "w^292", "1"]);
        let (n, k, d, dc) = theta_full(&ring, 20, &ell);
        println!("F_625 theta row: [{n},{k},{d}] dc={dc}");
    }

    // ---------------------------------------------------------------- (G)
    // Strategy cross-check on the two distance-mismatch rows.
    println!("\n== (G) strategy cross-check, length-8 rows 5 and 6 ==");
    {
        let ring = ring_for(3, 2, &[2, 2, 1]);
        let rows: &[(&str, [&[&str]; 4])] = &[
            ("T1#5", [
                &["w^7", "w^6", "w", "1"],
                &["w", "w^3", "2", "w^6", "1"],
                &["1", "w^3", "1"],
                &["w", "1", "1"],
            ]),
            ("T1#6", [
                &["w^3", "w^7", "w^2", "1"],
                &["w^5", "w^7", "1"],
                &["w^7", "w", "1"],
                &["1", "1"],
            ]),
        ];
        for (label, tt) in rows {
            let t: [FqPoly; 4] = std::array::from_fn(|i| poly(&ring, tt[i]));
            let code = LinearCode::from_sigma_cyclic_r(&ring, 8, &t).unwrap();
            let rep = code.min_distance(Strategy::SupportSearch, BUDGET).unwrap();
            let wt = rep
                .witness
                .iter()
                .filter(|e| **e != FieldElement::Zero)
                .count();
            let member = code.contains(&rep.witness).unwrap();
            println!(
                "{label}: d={} proved_exact={} witness weight={} witness in code={} (k={})",
                rep.upper_bound,
                rep.proved_exact,
                wt,
                member,
                code.k()
            );
        }
    }
}
