//! Multisegments: finite multisets of segments labelling irreducible
//! representations, together with a global half-integer twist.
//!
//! All comparisons happen on the canonical form: segments sorted by
//! `(line, start, end)`, and a normalized multisegment has the minimal start
//! on each line equal to zero, the residual shift being folded into `twist2`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::line::CuspidalLine;
use crate::segment::{segment_relation, Segment, SegmentRelation};

/// Submodule (`Z`) versus quotient (`Q`) labelling convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Form {
    Z,
    Q,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Z => "Z",
            Form::Q => "Q",
        })
    }
}

/// A multiset of segments with a form tag and a global doubled twist.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multisegment {
    form: Form,
    segments: Vec<Segment>,
    twist2: i64,
}

impl Multisegment {
    /// Assemble and canonicalize a multisegment.
    ///
    /// Rejects multisets where one line label carries two degrees, or where a
    /// line mixes integral and half-integral exponents (those points lie on a
    /// shifted, hence different, line).
    pub fn new(form: Form, segments: Vec<Segment>, twist2: i64) -> Result<Self> {
        let mut degrees: BTreeMap<&str, u32> = BTreeMap::new();
        let mut parity: BTreeMap<&str, i32> = BTreeMap::new();
        for s in &segments {
            match degrees.get(s.line.label.as_str()) {
                None => {
                    degrees.insert(&s.line.label, s.line.degree);
                }
                Some(&d) if d != s.line.degree => {
                    return Err(Error::DegreeConflict {
                        label: s.line.label.clone(),
                        first: d,
                        second: s.line.degree,
                    });
                }
                _ => {}
            }
            match parity.get(s.line.label.as_str()) {
                None => {
                    parity.insert(&s.line.label, s.start2.rem_euclid(2));
                }
                Some(&p) if p != s.start2.rem_euclid(2) => {
                    return Err(Error::MixedParity { label: s.line.label.clone() });
                }
                _ => {}
            }
        }
        let mut segments = segments;
        segments.sort();
        Ok(Multisegment { form, segments, twist2 })
    }

    pub fn z(segments: Vec<Segment>) -> Result<Self> {
        Multisegment::new(Form::Z, segments, 0)
    }

    pub fn q(segments: Vec<Segment>) -> Result<Self> {
        Multisegment::new(Form::Q, segments, 0)
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn with_form(&self, form: Form) -> Multisegment {
        Multisegment { form, segments: self.segments.clone(), twist2: self.twist2 }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn twist2(&self) -> i64 {
        self.twist2
    }

    pub fn with_twist2(&self, twist2: i64) -> Multisegment {
        Multisegment { form: self.form, segments: self.segments.clone(), twist2 }
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    /// Sum of `degree * length` over all segments.
    pub fn total_dimension(&self) -> u32 {
        self.segments.iter().map(Segment::dimension).sum()
    }

    /// The distinct lines carrying segments, in label order.
    pub fn lines(&self) -> Vec<CuspidalLine> {
        let mut lines: Vec<CuspidalLine> = self.segments.iter().map(|s| s.line.clone()).collect();
        lines.sort();
        lines.dedup();
        lines
    }

    pub fn single_line(&self) -> Option<CuspidalLine> {
        let lines = self.lines();
        if lines.len() == 1 {
            Some(lines[0].clone())
        } else {
            None
        }
    }

    /// Cuspidal support: multiplicity of each point `(line, doubled exponent)`.
    pub fn support2(&self) -> BTreeMap<(CuspidalLine, i32), u32> {
        let mut supp = BTreeMap::new();
        for s in &self.segments {
            let mut x = s.start2;
            while x <= s.end2 {
                *supp.entry((s.line.clone(), x)).or_insert(0) += 1;
                x += 2;
            }
        }
        supp
    }

    /// Per line, shift the minimal start to zero and fold the removed shifts
    /// into the twist. Returns the normalized multisegment and the total
    /// doubled shift that was removed. Idempotent.
    ///
    /// For multi-line inputs each line is shifted independently; the twist
    /// then only records the sum and is bookkeeping (every classification
    /// criterion reads exponent differences only).
    pub fn normalize_twist(&self) -> Result<(Multisegment, i64)> {
        if self.segments.is_empty() {
            return Err(Error::EmptyMultisegment);
        }
        let mut mins: BTreeMap<CuspidalLine, i32> = BTreeMap::new();
        for s in &self.segments {
            let e = mins.entry(s.line.clone()).or_insert(s.start2);
            *e = (*e).min(s.start2);
        }
        let mut segments = Vec::with_capacity(self.segments.len());
        for s in &self.segments {
            segments.push(s.shifted(-mins[&s.line]));
        }
        segments.sort();
        let shift2: i64 = mins.values().map(|&m| m as i64).sum();
        Ok((
            Multisegment { form: self.form, segments, twist2: self.twist2 + shift2 },
            shift2,
        ))
    }

    /// Normalized copy, discarding the reported shift. Panics on empty input.
    pub fn normalized(&self) -> Multisegment {
        self.normalize_twist().expect("normalized: empty multisegment").0
    }

    /// The exponent pattern alone: normalized with the twist zeroed.
    /// This is the "up to twist" representative used by all table lookups.
    pub fn pattern(&self) -> Multisegment {
        let mut m = self.normalized();
        m.twist2 = 0;
        m
    }

    /// Fold the global twist into the exponents: every segment shifts by the
    /// twist and the twist becomes zero. A half-integer twist moves the
    /// segments onto the half-shifted lattice of their lines.
    pub fn twist_folded(&self) -> Multisegment {
        let by2 = i32::try_from(self.twist2).expect("twist within exponent range");
        let segments = self.segments.iter().map(|s| s.shifted(by2)).collect();
        Multisegment { form: self.form, segments, twist2: 0 }
    }

    /// `[b,e] -> [-e,-b]` on every segment, twist negated, then renormalized.
    ///
    /// An irreducible representation is distinguished exactly when its
    /// contragredient is, so classification may freely pass to this dual.
    pub fn contragredient(&self) -> Multisegment {
        let segments: Vec<Segment> = self.segments.iter().map(Segment::negated).collect();
        let m = Multisegment { form: self.form, segments, twist2: -self.twist2 };
        if m.segments.is_empty() {
            return m;
        }
        m.normalized()
    }

    /// All ordered pairs of distinct positions with their relation.
    pub fn pairwise_relations(&self) -> Vec<(usize, usize, SegmentRelation)> {
        let mut out = Vec::new();
        for i in 0..self.segments.len() {
            for j in (i + 1)..self.segments.len() {
                out.push((i, j, segment_relation(&self.segments[i], &self.segments[j])));
            }
        }
        out
    }

    /// True when no two segments are linked.
    pub fn pairwise_unlinked(&self) -> bool {
        self.pairwise_relations().iter().all(|(_, _, r)| !r.is_linked())
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.form)?;
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", s)?;
        }
        write!(f, "}}")?;
        if self.twist2 != 0 {
            if self.twist2 % 2 == 0 {
                write!(f, "*v^{}", self.twist2 / 2)?;
            } else {
                write!(f, "*v^{}/2", self.twist2)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(b: i32, e: i32) -> Segment {
        Segment::new(CuspidalLine::principal(), b, e).unwrap()
    }

    fn zm(segs: Vec<Segment>) -> Multisegment {
        Multisegment::z(segs).unwrap()
    }

    #[test]
    fn normalize_examples() {
        // Half-integer input normalizes to integral endpoints with the shift
        // recorded: Z{[-3/2,-1/2],[-1/2,1/2]} -> (Z{[0,1],[1,2]}, -3/2).
        let line = CuspidalLine::principal();
        let m = Multisegment::z(vec![
            Segment::from_doubled(line.clone(), -3, -1).unwrap(),
            Segment::from_doubled(line.clone(), -1, 1).unwrap(),
        ])
        .unwrap();
        let (n, shift2) = m.normalize_twist().unwrap();
        assert_eq!(shift2, -3);
        assert_eq!(n.segments(), zm(vec![seg(0, 1), seg(1, 2)]).segments());

        let (n, shift2) = zm(vec![seg(0, 1)]).normalize_twist().unwrap();
        assert_eq!(shift2, 0);
        assert_eq!(n.segments(), zm(vec![seg(0, 1)]).segments());

        let (n, shift2) = zm(vec![seg(5, 6), seg(7, 8)]).normalize_twist().unwrap();
        assert_eq!(shift2, 10);
        assert_eq!(n.segments(), zm(vec![seg(0, 1), seg(2, 3)]).segments());
    }

    #[test]
    fn normalize_rejects_empty() {
        let m = Multisegment::z(vec![]).unwrap();
        assert_eq!(m.normalize_twist(), Err(Error::EmptyMultisegment));
    }

    #[test]
    fn contragredient_examples() {
        let m = zm(vec![seg(0, 1), seg(1, 4)]);
        assert_eq!(m.contragredient().segments(), zm(vec![seg(0, 3), seg(3, 4)]).segments());
        let c = zm(vec![seg(0, 5)]);
        assert_eq!(c.contragredient().segments(), c.segments());
        let j = zm(vec![seg(0, 1), seg(2, 3)]);
        assert_eq!(j.contragredient().segments(), j.segments());
    }

    #[test]
    fn degree_conflict_rejected() {
        let a = Segment::new(CuspidalLine::new("r", 2), 0, 1).unwrap();
        let b = Segment::new(CuspidalLine::new("r", 3), 0, 0).unwrap();
        assert!(matches!(
            Multisegment::z(vec![a, b]),
            Err(Error::DegreeConflict { .. })
        ));
    }

    #[test]
    fn mixed_parity_rejected() {
        let a = seg(0, 1);
        let b = Segment::from_doubled(CuspidalLine::principal(), 1, 3).unwrap();
        assert!(matches!(Multisegment::z(vec![a, b]), Err(Error::MixedParity { .. })));
    }

    #[test]
    fn dimension_counts_degree() {
        let a = Segment::new(CuspidalLine::new("rho2", 2), 0, 1).unwrap();
        let m = Multisegment::z(vec![a, seg(0, 1)]).unwrap();
        assert_eq!(m.total_dimension(), 6);
    }
}
