//! The combinatorial transpose realizing the Zelevinsky involution, and the
//! Z/Q relabelling it induces.
//!
//! One extraction pass works from the maximal end downwards: start from a
//! segment with the maximal end (preferring the largest start), then
//! repeatedly adjoin a segment whose end is exactly one lower and whose start
//! is strictly smaller than the start of the previously chosen segment, again
//! preferring the largest start. The ends covered by the chain form one
//! segment of the transpose; every chosen segment then loses its last point
//! and the pass repeats until the multiset is exhausted.
//!
//! The strict-start rule is what makes the construction an involution; it is
//! exercised against the certified identities in the tests and against random
//! window multisegments in the property suite.

use std::collections::BTreeMap;

use crate::line::CuspidalLine;
use crate::multisegment::{Form, Multisegment};
use crate::segment::Segment;

/// Transpose a multiset of segments supported on one lattice.
fn transpose_one_line(line: &CuspidalLine, mut pool: Vec<(i32, i32)>) -> Vec<Segment> {
    let mut out = Vec::new();
    while !pool.is_empty() {
        let top = pool.iter().map(|&(_, e)| e).max().unwrap();
        let mut chain: Vec<usize> = Vec::new();
        let mut cur_end = top;
        let mut prev_start: Option<i32> = None;
        loop {
            let cand = pool
                .iter()
                .enumerate()
                .filter(|(_, &(b, e))| e == cur_end && prev_start.is_none_or(|p| b < p))
                .max_by_key(|(_, &(b, _))| b);
            match cand {
                Some((i, &(b, _))) => {
                    chain.push(i);
                    prev_start = Some(b);
                    cur_end -= 2;
                }
                None => break,
            }
        }
        let len = chain.len() as i32;
        out.push(Segment {
            line: line.clone(),
            start2: top - 2 * (len - 1),
            end2: top,
        });
        for &i in &chain {
            pool[i].1 -= 2;
        }
        pool.retain(|&(b, e)| b <= e);
    }
    out
}

/// The transpose of the underlying segment multiset, line by line.
///
/// The form tag is kept: the transpose of a `Z`-label is again presented as a
/// `Z`-label of the dual representation. Use [`to_z_form`]/[`to_q_form`] for
/// the relabelling `Q(a) = Z(transpose(a))`.
pub fn zelevinsky_dual(m: &Multisegment) -> Multisegment {
    let mut by_line: BTreeMap<CuspidalLine, Vec<(i32, i32)>> = BTreeMap::new();
    for s in m.segments() {
        by_line.entry(s.line.clone()).or_default().push((s.start2, s.end2));
    }
    let mut segments = Vec::new();
    for (line, pool) in &by_line {
        segments.extend(transpose_one_line(line, pool.clone()));
    }
    Multisegment::new(m.form(), segments, m.twist2())
        .expect("transpose preserves line consistency")
}

/// Rewrite any label as a `Z`-label of the same irreducible representation.
pub fn to_z_form(m: &Multisegment) -> Multisegment {
    match m.form() {
        Form::Z => m.clone(),
        Form::Q => zelevinsky_dual(m).with_form(Form::Z),
    }
}

/// Rewrite any label as a `Q`-label of the same irreducible representation.
pub fn to_q_form(m: &Multisegment) -> Multisegment {
    match m.form() {
        Form::Q => m.clone(),
        Form::Z => zelevinsky_dual(m).with_form(Form::Q),
    }
}
