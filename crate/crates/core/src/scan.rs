//! Exhaustive enumeration of the desk-scale corpus and the conjecture
//! verification harness.

use crate::classifier::{classify_table, Classifier, Rule, Status, Verdict};
use crate::error::Result;
use crate::ladder::{in_g, reduce_line, Parity};
use crate::line::CuspidalLine;
use crate::multisegment::Multisegment;
use crate::product::product_irreducible;
use crate::segment::Segment;

/// All normalized submodule-form multisegments on one principal line with the
/// given total size and exponents within `[0, window]`, plus the single
/// degree-two and degree-three segment patterns of that size.
pub fn corpus(rank: u32, window: i32) -> Vec<Multisegment> {
    let line = CuspidalLine::principal();
    let mut all_segments: Vec<Segment> = Vec::new();
    for b in 0..=window {
        for e in b..=window {
            all_segments.push(Segment::new(line.clone(), b, e).unwrap());
        }
    }
    let mut out: Vec<Multisegment> = Vec::new();
    let mut stack: Vec<Segment> = Vec::new();
    fn rec(
        all: &[Segment],
        from: usize,
        remaining: u32,
        stack: &mut Vec<Segment>,
        out: &mut Vec<Multisegment>,
    ) {
        if remaining == 0 {
            if stack.iter().any(|s| s.start2 == 0) {
                out.push(Multisegment::z(stack.clone()).unwrap());
            }
            return;
        }
        for i in from..all.len() {
            let len = all[i].length();
            if len <= remaining {
                stack.push(all[i].clone());
                rec(all, i, remaining - len, stack, out);
                stack.pop();
            }
        }
    }
    rec(&all_segments, 0, rank, &mut stack, &mut out);
    for degree in [2u32, 3] {
        if rank % degree == 0 && rank / degree >= 1 {
            let line = CuspidalLine::new(format!("r{degree}"), degree);
            let seg = Segment::new(line, 0, (rank / degree) as i32 - 1).unwrap();
            out.push(Multisegment::z(vec![seg]).unwrap());
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Per-rank scan outcome.
#[derive(Debug, Clone)]
pub struct RankReport {
    pub rank: u32,
    pub total: usize,
    pub distinguished: Vec<Multisegment>,
    pub unknown: Vec<Multisegment>,
    /// Inputs whose status disagrees with membership in the ladder-product
    /// set (the conjectural characterization).
    pub g_mismatches: Vec<Multisegment>,
    /// Inputs whose status disagrees with the rank table (ranks 4 and 6).
    pub table_mismatches: Vec<Multisegment>,
    /// Inputs only decided by the table fallback: reported as findings.
    pub table_fallbacks: Vec<Multisegment>,
    /// Inputs where the line-reduction prediction conflicts.
    pub reduction_mismatches: Vec<Multisegment>,
}

impl RankReport {
    pub fn clean(&self) -> bool {
        self.unknown.is_empty()
            && self.g_mismatches.is_empty()
            && self.table_mismatches.is_empty()
            && self.reduction_mismatches.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub window: i32,
    pub ranks: Vec<RankReport>,
}

impl ConjectureReport {
    pub fn clean(&self) -> bool {
        self.ranks.iter().all(RankReport::clean)
    }
}

/// Scan every corpus input of the requested ranks: classify, compare with
/// ladder-set membership, with the rank tables, and with the line-reduction
/// prediction.
pub fn verify_conjectures(window: i32, ranks: &[u32]) -> Result<ConjectureReport> {
    let classifier = Classifier::new();
    let mut reports = Vec::new();
    for &rank in ranks {
        let inputs = corpus(rank, window);
        let mut report = RankReport {
            rank,
            total: inputs.len(),
            distinguished: Vec::new(),
            unknown: Vec::new(),
            g_mismatches: Vec::new(),
            table_mismatches: Vec::new(),
            table_fallbacks: Vec::new(),
            reduction_mismatches: Vec::new(),
        };
        for m in &inputs {
            let verdict = classifier.classify(m)?;
            match verdict.status {
                Status::Distinguished => report.distinguished.push(m.clone()),
                Status::Unknown => report.unknown.push(m.clone()),
                Status::NotDistinguished => {}
            }
            if matches!(verdict.leading_rule(), Some(Rule::Gl4Table) | Some(Rule::Gl6Table)) {
                report.table_fallbacks.push(m.clone());
            }
            let in_ladder_set = in_g(m, product_irreducible)?.is_some();
            if (verdict.status == Status::Distinguished) != in_ladder_set {
                report.g_mismatches.push(m.clone());
            }
            if let Some(in_table) = classify_table(m)? {
                if verdict.status != Status::Unknown
                    && (verdict.status == Status::Distinguished) != in_table
                {
                    report.table_mismatches.push(m.clone());
                }
            }
            if !reduction_ok(&classifier, m, &verdict)? {
                report.reduction_mismatches.push(m.clone());
            }
        }
        reports.push(report);
    }
    Ok(ConjectureReport { window, ranks: reports })
}

fn reduction_ok(classifier: &Classifier, m: &Multisegment, verdict: &Verdict) -> Result<bool> {
    if m.single_line().is_none() {
        return Ok(true);
    }
    let (reduced, parity) = reduce_line(m)?;
    match parity {
        Parity::Odd => Ok(verdict.status != Status::Distinguished),
        Parity::Even => {
            let rv = classifier.classify(&reduced)?;
            Ok(rv.status == verdict.status)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_normalized_and_sized() {
        let c = corpus(4, 6);
        assert!(!c.is_empty());
        for m in &c {
            assert_eq!(m.total_dimension(), 4);
            let min = m.segments().iter().map(|s| s.start2).min().unwrap();
            assert_eq!(min, 0);
        }
        // Contains the degree-two pattern.
        assert!(c.iter().any(|m| m.segments()[0].line.degree == 2));
    }

    #[test]
    fn rank_two_distinguished_is_the_even_segment() {
        let report = verify_conjectures(6, &[2]).unwrap();
        let r = &report.ranks[0];
        assert!(r.clean(), "unknowns: {:?}, mismatches: {:?}", r.unknown, r.g_mismatches);
        assert_eq!(r.distinguished.len(), 1);
        assert_eq!(r.distinguished[0].to_string(), "Z{[0,1]}");
    }
}
