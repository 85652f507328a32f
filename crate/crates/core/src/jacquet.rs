//! Semisimplified Jacquet modules of products of segment factors along a
//! maximal parabolic, at the level of labels.
//!
//! A submodule-form segment splits into a left prefix and a right suffix; a
//! quotient-form segment splits with the suffix on the left, mirroring its
//! quotient convention. A label factor that stays whole lands intact on its
//! side; a genuinely split label goes through the product of its segments,
//! which over-approximates the terms of the irreducible it names and is
//! sound for every vanishing argument built on top.

use std::fmt;

use crate::multisegment::{Form, Multisegment};
use crate::product::{Factor, FormalProduct};
use crate::segment::Segment;

/// One term of a semisimplified Jacquet module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacquetTerm {
    pub left: FormalProduct,
    pub right: FormalProduct,
}

impl fmt::Display for JacquetTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.left, self.right)
    }
}

/// Split one segment factor, giving `points` of its points to the left side.
fn split_segment(form: Form, seg: &Segment, points: u32) -> (Option<Factor>, Option<Factor>) {
    let len = seg.length();
    debug_assert!(points <= len);
    if points == 0 {
        return (None, Some(Factor::Seg(form, seg.clone())));
    }
    if points == len {
        return (Some(Factor::Seg(form, seg.clone())), None);
    }
    let cut = points as i32;
    match form {
        Form::Z => {
            let left = Segment {
                line: seg.line.clone(),
                start2: seg.start2,
                end2: seg.start2 + 2 * (cut - 1),
            };
            let right = Segment {
                line: seg.line.clone(),
                start2: seg.start2 + 2 * cut,
                end2: seg.end2,
            };
            (Some(Factor::Seg(form, left)), Some(Factor::Seg(form, right)))
        }
        Form::Q => {
            let left = Segment {
                line: seg.line.clone(),
                start2: seg.end2 - 2 * (cut - 1),
                end2: seg.end2,
            };
            let right = Segment {
                line: seg.line.clone(),
                start2: seg.start2,
                end2: seg.end2 - 2 * cut,
            };
            (Some(Factor::Seg(form, left)), Some(Factor::Seg(form, right)))
        }
    }
}

/// One way a single factor can contribute to a term: the dimension it gives
/// to the left side and the factor pieces landing on each side.
struct FactorSplit {
    left_dim: u32,
    left: Vec<Factor>,
    right: Vec<Factor>,
}

fn segment_splits(form: Form, seg: &Segment) -> Vec<FactorSplit> {
    let deg = seg.line.degree;
    (0..=seg.length())
        .map(|points| {
            let (l, r) = split_segment(form, seg, points);
            FactorSplit {
                left_dim: points * deg,
                left: l.into_iter().collect(),
                right: r.into_iter().collect(),
            }
        })
        .collect()
}

/// Splits of a label factor. An unsplit label stays intact on its side; a
/// genuine split goes through the product of the label's segments, which
/// over-approximates the terms of the irreducible the label names.
fn label_splits(m: &Multisegment) -> Vec<FactorSplit> {
    let total = m.total_dimension();
    let mut out = vec![
        FactorSplit { left_dim: 0, left: vec![], right: vec![Factor::Label(m.clone())] },
        FactorSplit { left_dim: total, left: vec![Factor::Label(m.clone())], right: vec![] },
    ];
    let segs = m.segments();
    let mut choice: Vec<u32> = Vec::with_capacity(segs.len());
    fn rec(
        form: Form,
        segs: &[Segment],
        i: usize,
        choice: &mut Vec<u32>,
        out: &mut Vec<FactorSplit>,
    ) {
        if i == segs.len() {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut left_dim = 0;
            for (j, seg) in segs.iter().enumerate() {
                let (l, r) = split_segment(form, seg, choice[j]);
                left_dim += choice[j] * seg.line.degree;
                left.extend(l);
                right.extend(r);
            }
            out.push(FactorSplit { left_dim, left, right });
            return;
        }
        for points in 0..=segs[i].length() {
            choice.push(points);
            rec(form, segs, i + 1, choice, out);
            choice.pop();
        }
    }
    let mut inner = Vec::new();
    rec(m.form(), segs, 0, &mut choice, &mut inner);
    // The two extreme inner splits duplicate the intact options.
    out.extend(inner.into_iter().filter(|s| s.left_dim != 0 && s.left_dim != total));
    out
}

/// All terms of the semisimplified Jacquet module of `p` along the parabolic
/// with left block of dimension `k`.
///
/// Impossible split sizes yield an empty multiset rather than an error: a
/// factor of degree `d` only splits in multiples of `d`.
pub fn jacquet_ss(p: &FormalProduct, k: u32) -> Vec<JacquetTerm> {
    let options: Vec<Vec<FactorSplit>> = p
        .factors
        .iter()
        .map(|f| match f {
            Factor::Seg(form, s) => segment_splits(*form, s),
            Factor::Label(m) => label_splits(m),
        })
        .collect();
    let mut terms = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(options.len());
    fn rec(
        options: &[Vec<FactorSplit>],
        i: usize,
        remaining: u32,
        chosen: &mut Vec<usize>,
        terms: &mut Vec<JacquetTerm>,
    ) {
        if i == options.len() {
            if remaining != 0 {
                return;
            }
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (j, &c) in chosen.iter().enumerate() {
                left.extend(options[j][c].left.iter().cloned());
                right.extend(options[j][c].right.iter().cloned());
            }
            terms.push(JacquetTerm {
                left: FormalProduct::new(left),
                right: FormalProduct::new(right),
            });
            return;
        }
        for (c, split) in options[i].iter().enumerate() {
            if split.left_dim > remaining {
                continue;
            }
            chosen.push(c);
            rec(options, i + 1, remaining - split.left_dim, chosen, terms);
            chosen.pop();
        }
    }
    rec(&options, 0, k, &mut chosen, &mut terms);
    terms
}
