//! `search` subcommand: bounded enumeration of dual-containing generator
//! tuples with their Gray parameters and Singleton defects.
//!
//! The candidate stream is the cartesian product of the right divisors of
//! `x^r − 1` (for ℓ) and of `x^s − 1` (for each `t_i`), filtered by degree
//! bounds, in a fixed enumeration order. The work budget is charged for
//! divisor enumeration and for every distance computation; when it runs
//! out the partial results are returned together with a resume token
//! (`--resume N` skips the first N stream positions). Results are sorted
//! by (defect, length, generators), so output is deterministic.

use clap::Args;
use skewcodec_core::qecc::{self, ClassicalParams};
use skewcodec_core::{Error, FqPoly, GrayMap, LinearCode, MixedCode, Result, Strategy};

use crate::cmd_field::FieldFlags;
use crate::report::{Candidate, QeccReport, SearchReport};

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[command(flatten)]
    pub field: FieldFlags,
    /// Field-block length (0 disables the field block).
    #[arg(long, default_value_t = 0)]
    pub r: usize,
    /// Ring-block length (0 disables the ring block).
    #[arg(long, default_value_t = 0)]
    pub s: usize,
    /// Degree bounds for ℓ, as `N` or `LO..HI` (inclusive).
    #[arg(long, default_value = "1..2")]
    pub deg_ell: String,
    /// Degree bounds for each t_i, as `N` or `LO..HI` (inclusive).
    #[arg(long, default_value = "0..1")]
    pub deg_t: String,
    /// Resume token from a previous budget-limited run.
    #[arg(long, default_value_t = 0)]
    pub resume: u64,
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(0, format!("bad degree bound {t:?}")))
    };
    match s.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi)?)),
        None => {
            let n = parse(s)?;
            Ok((n, n))
        }
    }
}

fn divisors_in_range(
    ring: &skewcodec_core::SkewRing,
    n: usize,
    range: (usize, usize),
    budget: &mut u64,
) -> Result<Vec<FqPoly>> {
    let mut out = Vec::new();
    for d in range.0..=range.1 {
        if d > n {
            break;
        }
        let cost = (ring.field().q() as u64).saturating_pow(d as u32);
        if cost > *budget {
            return Err(Error::BudgetExceeded {
                budget: *budget,
                needed: cost,
                lower_bound: None,
                upper_bound: None,
            });
        }
        *budget -= cost;
        out.extend(ring.right_divisors(n, d, cost)?);
    }
    Ok(out)
}

pub fn run(args: &SearchArgs, strategy: Strategy, total_budget: u64) -> Result<SearchReport> {
    if args.r == 0 && args.s == 0 {
        return Err(Error::unsupported("search needs --r or --s to be positive"));
    }
    let ring = args.field.build_ring()?;
    let mut budget = total_budget;

    let ells: Vec<FqPoly> = if args.r > 0 {
        divisors_in_range(&ring, args.r, parse_range(&args.deg_ell)?, &mut budget)?
    } else {
        vec![ring.zero()]
    };
    let ts: Vec<FqPoly> = if args.s > 0 {
        divisors_in_range(&ring, args.s, parse_range(&args.deg_t)?, &mut budget)?
    } else {
        vec![ring.zero()]
    };

    // stream = ells × ts × ts × ts × ts, mixed-radix order
    let t_slots: u64 = if args.s > 0 { (ts.len() as u64).pow(4) } else { 1 };
    let total: u64 = ells.len() as u64 * t_slots;
    let gray = GrayMap::new(ring.field_arc())?;
    let mut candidates: Vec<Candidate> = Vec::new();
    let mut examined = 0u64;
    let mut resume: Option<String> = None;

    for idx in args.resume..total {
        let mut rest = idx;
        let ell = &ells[(rest / t_slots) as usize];
        rest %= t_slots;
        let mut t_idx = [0usize; 4];
        if args.s > 0 {
            for slot in (0..4).rev() {
                t_idx[slot] = (rest % ts.len() as u64) as usize;
                rest /= ts.len() as u64;
            }
        }
        let t: [FqPoly; 4] = std::array::from_fn(|i| ts[t_idx[i]].clone());
        examined += 1;

        // cheap dual-containment filter first
        let dc = if args.r > 0 && args.s > 0 {
            qecc::dual_containing_skew_cyclic(&ring, args.r, ell)?
                && qecc::dual_containing_components(&ring, args.s, &t)?
        } else if args.s > 0 {
            qecc::dual_containing_components(&ring, args.s, &t)?
        } else {
            qecc::dual_containing_skew_cyclic(&ring, args.r, ell)?
        };
        if !dc {
            continue;
        }

        let image: LinearCode = if args.r > 0 && args.s > 0 {
            let code =
                MixedCode::build(ring.clone(), args.r, args.s, ell.clone(), ring.zero(), t.clone())?;
            gray.image_of(&code)?
        } else if args.s > 0 {
            LinearCode::from_sigma_cyclic_r(&ring, args.s, &t)?
        } else {
            LinearCode::from_skew_cyclic(&ring, args.r, ell)?
        };
        if 2 * image.k() < image.n() {
            // dual-containing forces k ≥ n/2; tuples below that are
            // degenerate duplicates (t_i = x^s − 1 style) — skip
            continue;
        }
        let rep = match image.min_distance(strategy, budget) {
            Ok(rep) => rep,
            Err(Error::BudgetExceeded { .. }) => {
                resume = Some(format!("{idx}"));
                break;
            }
            Err(e) => return Err(e),
        };
        budget = budget.saturating_sub(rep.work);
        let c = ClassicalParams {
            n: image.n(),
            k: image.k(),
            d: rep.upper_bound as usize,
            q: ring.field().q(),
        };
        let p = qecc::css(c, true, "search")?;
        let defect = qecc::singleton_defect(&p)? as i64;
        candidates.push(Candidate {
            ell: format!("{ell}"),
            t: if args.s > 0 { t.iter().map(|x| format!("{x}")).collect() } else { vec![] },
            n: c.n,
            k: c.k,
            d: c.d,
            defect,
            qecc: QeccReport {
                n: p.n,
                k: p.k,
                d: p.d,
                q: p.q,
                mds: p.mds,
                defect,
                source: p.source,
            },
        });
    }

    candidates.sort_by(|a, b| {
        a.defect
            .cmp(&b.defect)
            .then(a.n.cmp(&b.n))
            .then(a.ell.cmp(&b.ell))
            .then(a.t.cmp(&b.t))
    });
    Ok(SearchReport { examined, candidates, resume })
}

pub fn human(report: &SearchReport) -> String {
    let mut lines = vec![format!(
        "examined {} tuples, {} dual-containing candidates",
        report.examined,
        report.candidates.len()
    )];
    for c in &report.candidates {
        lines.push(format!(
            "  [[{},{},{}]]_{} defect {} <- ell = {}; t = [{}]",
            c.qecc.n,
            c.qecc.k,
            c.qecc.d,
            c.qecc.q,
            c.defect,
            c.ell,
            c.t.join(", ")
        ));
    }
    if let Some(r) = &report.resume {
        lines.push(format!("budget exhausted; resume with --resume {r}"));
    }
    lines.join("\n")
}
