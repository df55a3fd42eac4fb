//! Temporary calibration harness, second pass — not part of the library.
//!
//! Digs into the rows the first pass flagged: per-row structural fit over
//! F_9, a repair search for the impossible length-18 quadratic over F_27,
//! and the failed containment for the length-15 cubic over F_125.

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

fn main() {
    // A. per-row structural fit over F_9 for both valid moduli
    println!("F_9 per-row structural fit:");
    let f9_rows: &[(&str, usize, Vec<&[&str]>)] = &[
        ("T1#1", 4, vec![&["w^7", "w^3", "1"], &["1", "1"], &["w^5", "1"], &["w"]]),
        ("T1#2", 6, vec![&["w^2", "w", "1"], &["1", "1"], &["w^6", "1"], &["1"]]),
        ("T1#3", 6, vec![&["2", "w^5", "w^3", "1"], &["w^2", "1"], &["2", "1"], &["w"]]),
        (
            "T1#4-printed-t2",
            8,
            vec![&["w^6", "w^3", "1", "w^6", "w^7", "1"]],
        ),
        (
            "T1#4-fixed",
            8,
            vec![
                &["w^7", "w^6", "w", "1"],
                &["w^6", "w^3", "1", "0", "w^6", "w^7", "1"],
                &["w^7", "0", "1"],
                &["w^3", "2", "1"],
            ],
        ),
        (
            "T1#5",
            8,
            vec![
                &["w^7", "w^6", "w", "1"],
                &["w", "w^3", "2", "w^6", "1"],
                &["1", "w^3", "1"],
                &["w", "1", "1"],
            ],
        ),
        (
            "T1#6",
            8,
            vec![
                &["w^3", "w^7", "w^2", "1"],
                &["w^5", "w^7", "1"],
                &["w^7", "w", "1"],
                &["1", "1"],
            ],
        ),
        ("T1#7", 8, vec![&["w^7", "w^5", "2", "1"], &["w^7", "1"], &["w", "1"], &["1"]]),
        ("T1#8", 12, vec![&["2", "w^6", "w", "1"], &["w^2", "1"], &["w^3", "1"], &["1"]]),
        (
            "T1#9",
            12,
            vec![&["w^5", "w^6", "w^6", "2", "1"], &["w^2", "1"], &["w^3", "1"], &["1"]],
        ),
        ("T2#1", 6, vec![&["w^6", "w^7", "1"]]),
        (
            "T3#1",
            6,
            vec![&["1", "w^5", "w^5", "1"], &["w^2", "1"], &["w^6", "1"], &["1", "1"]],
        ),
        ("T3#2", 6, vec![&["w^6", "w^3", "1"], &["2", "1"], &["w^2", "1"], &["w^6", "1"]]),
        (
            "T3#5",
            12,
            vec![&["w^6", "w^3", "w^5", "w^3", "1"], &["w^3", "1"], &["w^3", "1"], &["w^3", "1"]],
        ),
        ("T3#6", 12, vec![&["w^3", "w", "1", "2", "1"], &["w^6", "1"], &["1", "1"], &["1"]]),
        ("T3#9", 18, vec![&["w^6", "w^3", "w^2", "1", "1"], &["w^6", "1"], &["w^2", "1"], &["1"]]),
        (
            "T4#1-ell12",
            12,
            vec![&["w^3", "w", "1", "2", "1"]],
        ),
        (
            "T4#1-t6",
            6,
            vec![&["1", "w^5", "w^5", "1"], &["w^2", "1"], &["w^6", "1"], &["w"]],
        ),
        ("T4#6-ell56", 56, vec![&["1", "0", "2", "2", "w^6", "1"]]),
        (
            "T4#6-t6",
            6,
            vec![&["w^6", "w^3", "1"], &["2", "1"], &["w^2", "1"], &["w^6", "1"]],
        ),
    ];
    for modulus in [[2u32, 1, 1], [2, 2, 1]] {
        let ring = ring_for(3, 2, &modulus);
        print!("  modulus {:?}: fails:", modulus);
        for (label, n, gens) in f9_rows {
            let bad: Vec<String> = gens
                .iter()
                .enumerate()
                .filter(|(_, g)| !divides(&ring, *n, &poly(&ring, g)))
                .map(|(i, _)| format!("{label}[{i}]"))
                .collect();
            if !bad.is_empty() {
                print!(" {}", bad.join(" "));
            }
        }
        println!();
    }

    // B. repair search for the length-18 quadratic over F_27: the printed
    //    generator divides x^9 - 1, forcing a weight-2 word; find all monic
    //    quadratics dividing x^18 - 1 but not x^9 - 1 with a dual-containing
    //    [18,16,3] code
    println!("\nF_27 length-18 quadratic repair search:");
    for modulus in [[1u32, 2, 0, 1], [1, 2, 1, 1]] {
        let ring = ring_for(3, 3, &modulus);
        let divisors = ring.right_divisors(18, 2, 1 << 12).unwrap();
        let mut hits = Vec::new();
        for g in &divisors {
            if divides(&ring, 9, g) {
                continue;
            }
            if !qecc::dual_containing_skew_cyclic(&ring, 18, g).unwrap() {
                continue;
            }
            let code = LinearCode::from_skew_cyclic(&ring, 18, g).unwrap();
            let rep = code.min_distance(Strategy::Auto, BUDGET).unwrap();
            if rep.upper_bound as usize == 3 {
                hits.push(g.clone());
            }
        }
        println!(
            "  modulus {:?}: {} of {} quadratic divisors give dual-containing [18,16,3]:",
            modulus,
            hits.len(),
            divisors.len()
        );
        for g in &hits {
            // try the same generator as the field part of the (18,9) mixed row
            let t1 = poly(&ring, &["w^18", "w^19", "1"]);
            let t2 = poly(&ring, &["w^9", "1"]);
            let t3 = poly(&ring, &["w^3", "1"]);
            let t4 = poly(&ring, &["1"]);
            let mixed = MixedCode::build(
                ring.clone(),
                18,
                9,
                g.clone(),
                ring.zero(),
                [t1, t2, t3, t4],
            );
            match mixed {
                Ok(code) => {
                    let gray = GrayMap::new(ring.field_arc()).unwrap();
                    let image = gray.image_of(&code).unwrap();
                    let rep = image.min_distance(Strategy::Auto, BUDGET).unwrap();
                    let dc = qecc::dual_containing_mixed(&code).unwrap();
                    println!(
                        "    {g}  -> mixed [{},{},{}] dc={}",
                        image.n(),
                        image.k(),
                        rep.upper_bound,
                        dc
                    );
                }
                Err(e) => println!("    {g}  -> mixed build error: {e}"),
            }
        }
    }

    // C. the length-15 cubic over F_125: confirm the containment failure with
    //    an independent oracle, then search for cubics that do work
    println!("\nF_125 length-15 cubic investigation:");
    for modulus in [[2u32, 3, 0, 1], [3, 3, 0, 1]] {
        let ring = ring_for(5, 3, &modulus);
        let printed = poly(&ring, &["w^2", "3", "w^76", "1"]);
        if divides(&ring, 15, &printed) {
            let code = LinearCode::from_skew_cyclic(&ring, 15, &printed).unwrap();
            let pc = code.parity_check();
            let dual_inside = (0..pc.nrows()).all(|i| code.contains(pc.row(i)).unwrap());
            println!(
                "  modulus {:?}: printed cubic divides; criterion={}, parity-rows-in-code={}",
                modulus,
                qecc::dual_containing_skew_cyclic(&ring, 15, &printed).unwrap(),
                dual_inside
            );
        } else {
            println!("  modulus {:?}: printed cubic does not divide", modulus);
        }
        let divisors = ring.right_divisors(15, 3, 1 << 21).unwrap();
        let mut hits = Vec::new();
        for g in &divisors {
            if !qecc::dual_containing_skew_cyclic(&ring, 15, g).unwrap() {
                continue;
            }
            let code = LinearCode::from_skew_cyclic(&ring, 15, g).unwrap();
            let rep = code.min_distance(Strategy::Auto, BUDGET).unwrap();
            if rep.upper_bound as usize == 4 {
                hits.push(g.clone());
            }
        }
        println!(
            "    {} of {} cubic divisors give dual-containing [15,12,4]:",
            hits.len(),
            divisors.len()
        );
        for g in hits.iter().take(40) {
            println!("      {g}");
        }
    }
}
