//! Segments on a cuspidal line and the relation taxonomy between two of them.
//!
//! A segment `[b,e]` is the set of consecutive points `v^b rho, ..., v^e rho`
//! on the line of `rho`. Exponents are stored doubled so half-integer shifts
//! stay exact; within one segment the two endpoints always share parity, and
//! consecutive points differ by `2` in doubled units.

use std::fmt;

use crate::error::{Error, Result};
use crate::line::CuspidalLine;

/// A nonempty exponent interval on a cuspidal line.
///
/// `start2`/`end2` are doubled exponents: the segment `[v^0, v^1]` is stored
/// as `(0, 2)` and `[v^{-3/2}, v^{-1/2}]` as `(-3, -1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub line: CuspidalLine,
    pub start2: i32,
    pub end2: i32,
}

impl Segment {
    /// Segment with integer endpoints `[start, end]`.
    pub fn new(line: CuspidalLine, start: i32, end: i32) -> Result<Self> {
        Segment::from_doubled(line, 2 * start, 2 * end)
    }

    /// Segment with doubled endpoints, allowing half-integers.
    pub fn from_doubled(line: CuspidalLine, start2: i32, end2: i32) -> Result<Self> {
        if start2 > end2 {
            return Err(Error::InvertedSegment { start: start2, end: end2 });
        }
        if (end2 - start2) % 2 != 0 {
            return Err(Error::HalfIntegerLength { start: start2, end: end2 });
        }
        Ok(Segment { line, start2, end2 })
    }

    /// Number of points `e - b + 1`.
    pub fn length(&self) -> u32 {
        ((self.end2 - self.start2) / 2 + 1) as u32
    }

    /// Dimension of the general linear group carrying `Z(segment)`.
    pub fn dimension(&self) -> u32 {
        self.line.degree * self.length()
    }

    pub fn shifted(&self, by2: i32) -> Segment {
        Segment { line: self.line.clone(), start2: self.start2 + by2, end2: self.end2 + by2 }
    }

    /// `[b,e] -> [-e,-b]`.
    pub fn negated(&self) -> Segment {
        Segment { line: self.line.clone(), start2: -self.end2, end2: -self.start2 }
    }

    pub fn is_point(&self) -> bool {
        self.start2 == self.end2
    }

    fn same_lattice(&self, other: &Segment) -> bool {
        self.line == other.line && (self.start2 - other.start2) % 2 == 0
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn half(x: i32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if x % 2 == 0 {
                write!(f, "{}", x / 2)
            } else {
                write!(f, "{}/2", x)
            }
        }
        write!(f, "[")?;
        half(self.start2, f)?;
        write!(f, ",")?;
        half(self.end2, f)?;
        write!(f, "]")?;
        if !self.line.is_principal() {
            write!(f, "@{}", self.line)?;
        }
        Ok(())
    }
}

/// The mutually exclusive relation between an ordered pair of segments.
///
/// `Linked*` means neither contains the other and the union of the exponent
/// intervals is again an interval; `Juxtaposed*` is the linked case with empty
/// intersection. `Precedes` follows the convention that the earlier-starting
/// segment precedes the later-starting one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentRelation {
    Equal,
    ContainedIn,
    Contains,
    UnlinkedDisjoint,
    JuxtaposedBefore,
    JuxtaposedAfter,
    LinkedPrecedes,
    LinkedPreceded,
    DifferentLines,
}

impl SegmentRelation {
    /// The relation seen from the swapped pair.
    pub fn swapped(self) -> SegmentRelation {
        use SegmentRelation::*;
        match self {
            ContainedIn => Contains,
            Contains => ContainedIn,
            JuxtaposedBefore => JuxtaposedAfter,
            JuxtaposedAfter => JuxtaposedBefore,
            LinkedPrecedes => LinkedPreceded,
            LinkedPreceded => LinkedPrecedes,
            other => other,
        }
    }

    /// Linked in the sense of Zelevinsky, including the juxtaposed case.
    pub fn is_linked(self) -> bool {
        use SegmentRelation::*;
        matches!(self, JuxtaposedBefore | JuxtaposedAfter | LinkedPrecedes | LinkedPreceded)
    }

    pub fn is_juxtaposed(self) -> bool {
        use SegmentRelation::*;
        matches!(self, JuxtaposedBefore | JuxtaposedAfter)
    }

    /// Disjoint as point sets and unlinked (different lines count).
    pub fn is_disjoint_unlinked(self) -> bool {
        use SegmentRelation::*;
        matches!(self, UnlinkedDisjoint | DifferentLines)
    }
}

impl fmt::Display for SegmentRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SegmentRelation::Equal => "Equal",
            SegmentRelation::ContainedIn => "ContainedIn",
            SegmentRelation::Contains => "Contains",
            SegmentRelation::UnlinkedDisjoint => "Unlinked-Disjoint",
            SegmentRelation::JuxtaposedBefore => "Juxtaposed-Before",
            SegmentRelation::JuxtaposedAfter => "Juxtaposed-After",
            SegmentRelation::LinkedPrecedes => "Linked-Precedes",
            SegmentRelation::LinkedPreceded => "Linked-Preceded",
            SegmentRelation::DifferentLines => "DifferentLines",
        };
        f.write_str(s)
    }
}

/// Classify the ordered pair `(a, b)`.
///
/// Segments on the same line but on incommensurable half-shifted lattices are
/// reported as `DifferentLines`: such segments genuinely live on different
/// cuspidal lines even when the labels coincide.
pub fn segment_relation(a: &Segment, b: &Segment) -> SegmentRelation {
    use SegmentRelation::*;
    if !a.same_lattice(b) {
        return DifferentLines;
    }
    if a.start2 == b.start2 && a.end2 == b.end2 {
        return Equal;
    }
    if b.start2 <= a.start2 && a.end2 <= b.end2 {
        return ContainedIn;
    }
    if a.start2 <= b.start2 && b.end2 <= a.end2 {
        return Contains;
    }
    // Neither contains the other, so the starts (and ends) are strictly
    // ordered the same way.
    let (lo, hi, a_first) = if a.start2 < b.start2 { (a, b, true) } else { (b, a, false) };
    if hi.start2 > lo.end2 + 2 {
        return UnlinkedDisjoint;
    }
    if hi.start2 == lo.end2 + 2 {
        return if a_first { JuxtaposedBefore } else { JuxtaposedAfter };
    }
    if a_first {
        LinkedPrecedes
    } else {
        LinkedPreceded
    }
}

/// Union of a linked pair, as a segment.
pub fn linked_union(a: &Segment, b: &Segment) -> Segment {
    Segment {
        line: a.line.clone(),
        start2: a.start2.min(b.start2),
        end2: a.end2.max(b.end2),
    }
}

/// Intersection of a linked pair; `None` when juxtaposed.
pub fn linked_intersection(a: &Segment, b: &Segment) -> Option<Segment> {
    let start2 = a.start2.max(b.start2);
    let end2 = a.end2.min(b.end2);
    if start2 <= end2 {
        Some(Segment { line: a.line.clone(), start2, end2 })
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(b: i32, e: i32) -> Segment {
        Segment::new(CuspidalLine::principal(), b, e).unwrap()
    }

    #[test]
    fn relation_examples() {
        assert_eq!(segment_relation(&seg(0, 1), &seg(1, 2)), SegmentRelation::LinkedPrecedes);
        assert_eq!(segment_relation(&seg(0, 1), &seg(2, 3)), SegmentRelation::JuxtaposedBefore);
        assert_eq!(segment_relation(&seg(0, 3), &seg(1, 2)), SegmentRelation::Contains);
        assert_eq!(segment_relation(&seg(0, 1), &seg(0, 1)), SegmentRelation::Equal);
        assert_eq!(segment_relation(&seg(0, 1), &seg(3, 4)), SegmentRelation::UnlinkedDisjoint);
    }

    #[test]
    fn different_lines_and_lattices() {
        let other = Segment::new(CuspidalLine::new("rho2", 2), 0, 1).unwrap();
        assert_eq!(segment_relation(&seg(0, 1), &other), SegmentRelation::DifferentLines);
        let half = Segment::from_doubled(CuspidalLine::principal(), 1, 3).unwrap();
        assert_eq!(segment_relation(&seg(0, 1), &half), SegmentRelation::DifferentLines);
    }

    #[test]
    fn union_and_intersection() {
        let u = linked_union(&seg(0, 1), &seg(1, 2));
        assert_eq!((u.start2, u.end2), (0, 4));
        let i = linked_intersection(&seg(0, 1), &seg(1, 2)).unwrap();
        assert_eq!((i.start2, i.end2), (2, 2));
        assert!(linked_intersection(&seg(0, 1), &seg(2, 3)).is_none());
    }

    #[test]
    fn invalid_segments_rejected() {
        assert!(Segment::new(CuspidalLine::principal(), 2, 1).is_err());
        assert!(Segment::from_doubled(CuspidalLine::principal(), 0, 3).is_err());
    }
}
