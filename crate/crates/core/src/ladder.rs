//! Ladder multisegments: the distinguished-candidate sets, their expansion
//! from Speh data, and the reduction of a single-line pattern to the
//! principal line.

use std::fmt;

use crate::error::{Error, Result};
use crate::line::CuspidalLine;
use crate::multisegment::{Form, Multisegment};
use crate::product::{product_irreducible, IrreducibilityCertificate};
use crate::segment::{linked_intersection, Segment};

/// Which of the four ladder conditions fails first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderViolation {
    /// Condition 1: all segments on one cuspidal line.
    MultipleLines,
    /// Condition 2: every segment of even length.
    OddLength,
    /// Condition 3: all starts pairwise distinct.
    SharedStart,
    /// Condition 4: consecutive intersections of odd (hence nonzero) length.
    EvenIntersection,
}

impl LadderViolation {
    pub fn condition(&self) -> u8 {
        match self {
            LadderViolation::MultipleLines => 1,
            LadderViolation::OddLength => 2,
            LadderViolation::SharedStart => 3,
            LadderViolation::EvenIntersection => 4,
        }
    }
}

impl fmt::Display for LadderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LadderViolation::MultipleLines => "condition 1: segments on multiple lines",
            LadderViolation::OddLength => "condition 2: a segment has odd length",
            LadderViolation::SharedStart => "condition 3: two segments share a start",
            LadderViolation::EvenIntersection => {
                "condition 4: consecutive intersection of even length"
            }
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LadderCheck {
    pub member: bool,
    pub violation: Option<LadderViolation>,
}

/// Membership in the ladder set: one line, even lengths, distinct starts,
/// odd consecutive intersections. Empty input is rejected rather than
/// guessed about.
pub fn in_g_prime(m: &Multisegment) -> Result<LadderCheck> {
    if m.is_empty() {
        return Err(Error::EmptyMultisegment);
    }
    if m.form() != Form::Z {
        return Err(Error::NotZForm { op: "in_g_prime" });
    }
    let fail = |v: LadderViolation| Ok(LadderCheck { member: false, violation: Some(v) });
    if m.single_line().is_none() {
        return fail(LadderViolation::MultipleLines);
    }
    if m.segments().iter().any(|s| s.length() % 2 != 0) {
        return fail(LadderViolation::OddLength);
    }
    let mut segs: Vec<&Segment> = m.segments().iter().collect();
    segs.sort_by_key(|s| s.start2);
    for w in segs.windows(2) {
        if w[0].start2 == w[1].start2 {
            return fail(LadderViolation::SharedStart);
        }
    }
    for w in segs.windows(2) {
        match linked_intersection(w[0], w[1]) {
            Some(int) if int.length() % 2 == 1 => {}
            _ => return fail(LadderViolation::EvenIntersection),
        }
    }
    Ok(LadderCheck { member: true, violation: None })
}

/// The normalized ladder of `d` segments of length `t` with consecutive
/// starts `0, 1, ..., d-1`: the submodule-form pattern of the Speh
/// representation built from a length-`d` discrete series repeated `t` times.
pub fn expand_speh(line: &CuspidalLine, d: u32, t: u32) -> Result<Multisegment> {
    if d < 1 || t < 1 {
        return Err(Error::InvalidParameter(format!(
            "speh parameters must be positive, got d={d}, t={t}"
        )));
    }
    let mut segments = Vec::with_capacity(d as usize);
    for i in 0..d as i32 {
        segments.push(Segment::new(line.clone(), i, i + t as i32 - 1)?);
    }
    Multisegment::z(segments)
}

/// A block pattern `d` segments of equal even length with consecutive starts,
/// i.e. the shape produced by [`expand_speh`] up to shift. Returns `(d, t)`.
pub fn speh_shape(segments: &[&Segment]) -> Option<(u32, u32)> {
    if segments.is_empty() {
        return None;
    }
    let line = &segments[0].line;
    if segments.iter().any(|s| &s.line != line) {
        return None;
    }
    let t = segments[0].length();
    if segments.iter().any(|s| s.length() != t) {
        return None;
    }
    let mut starts: Vec<i32> = segments.iter().map(|s| s.start2).collect();
    starts.sort_unstable();
    for w in starts.windows(2) {
        if w[1] - w[0] != 2 {
            return None;
        }
    }
    Some((segments.len() as u32, t))
}

/// All partitions of `0..n` into unordered blocks, as index lists.
pub(crate) fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    fn rec(i: usize, n: usize, current: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(current.clone());
            return;
        }
        for b in 0..current.len() {
            current[b].push(i);
            rec(i + 1, n, current, out);
            current[b].pop();
        }
        current.push(vec![i]);
        rec(i + 1, n, current, out);
        current.pop();
    }
    rec(0, n, &mut current, &mut out);
    out
}

/// Best partition of the segments into blocks accepted by `block_ok`, whose
/// block labels form a certified irreducible product. Fewest blocks first,
/// ties broken by the lexicographic sequence of sorted block starts.
fn search_partitions<B, F>(
    m: &Multisegment,
    block_ok: B,
    irreducibility: F,
) -> Option<Vec<Multisegment>>
where
    B: Fn(&Multisegment) -> bool,
    F: Fn(&[Multisegment]) -> IrreducibilityCertificate,
{
    let segs = m.segments();
    let mut best: Option<(usize, Vec<(i32, i32)>, Vec<Multisegment>)> = None;
    'part: for partition in set_partitions(segs.len()) {
        let mut blocks = Vec::with_capacity(partition.len());
        for idxs in &partition {
            let block_segs: Vec<Segment> = idxs.iter().map(|&i| segs[i].clone()).collect();
            let block = Multisegment::z(block_segs).ok()?;
            if !block_ok(&block) {
                continue 'part;
            }
            blocks.push(block);
        }
        if !irreducibility(&blocks).is_irreducible() {
            continue;
        }
        blocks.sort();
        let mut key: Vec<(i32, i32)> = Vec::new();
        for b in &blocks {
            for s in b.segments() {
                key.push((s.start2, s.end2));
            }
            key.push((i32::MAX, i32::MAX)); // block separator
        }
        let candidate = (blocks.len(), key, blocks);
        if best.as_ref().map_or(true, |b| (candidate.0, &candidate.1) < (b.0, &b.1)) {
            best = Some(candidate);
        }
    }
    best.map(|(_, _, blocks)| blocks)
}

/// A witnessing partition into ladder blocks whose product is certified
/// irreducible by the supplied oracle, if one exists.
pub fn in_g<F>(m: &Multisegment, irreducibility: F) -> Result<Option<Vec<Multisegment>>>
where
    F: Fn(&[Multisegment]) -> IrreducibilityCertificate,
{
    if m.is_empty() {
        return Err(Error::EmptyMultisegment);
    }
    if m.form() != Form::Z {
        return Err(Error::NotZForm { op: "in_g" });
    }
    let block_ok = |block: &Multisegment| in_g_prime(block).map(|c| c.member).unwrap_or(false);
    Ok(search_partitions(m, block_ok, irreducibility))
}

/// Partition into Speh-shaped blocks of even width with a certified
/// irreducible product: the positive pattern behind the product criterion
/// for distinguished representations.
pub fn speh_partition(m: &Multisegment) -> Option<Vec<Multisegment>> {
    if m.is_empty() || m.form() != Form::Z {
        return None;
    }
    let block_ok = |block: &Multisegment| {
        matches!(
            speh_shape(&block.segments().iter().collect::<Vec<_>>()),
            Some((_, t)) if t % 2 == 0
        )
    };
    search_partitions(m, block_ok, product_irreducible)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Re-base a single-line pattern on the principal degree-one line and report
/// the parity of `total_dimension / degree`.
///
/// Odd parity forces a negative distinction prediction; even parity reduces
/// the question to the principal-line pattern.
pub fn reduce_line(m: &Multisegment) -> Result<(Multisegment, Parity)> {
    if m.is_empty() {
        return Err(Error::EmptyMultisegment);
    }
    let line = m.single_line().ok_or(Error::MixedLines { op: "reduce_line" })?;
    let principal = CuspidalLine::principal();
    let segments: Vec<Segment> = m
        .segments()
        .iter()
        .map(|s| Segment { line: principal.clone(), start2: s.start2, end2: s.end2 })
        .collect();
    let reduced = Multisegment::new(m.form(), segments, m.twist2())?;
    let quotient = m.total_dimension() / line.degree;
    let parity = if quotient % 2 == 0 { Parity::Even } else { Parity::Odd };
    Ok((reduced, parity))
}
