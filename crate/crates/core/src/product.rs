//! Formal products of induced factors, two-segment composition series,
//! irreducibility certificates, and subquotient enumeration.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::multisegment::{Form, Multisegment};
use crate::segment::{
    linked_intersection, linked_union, segment_relation, Segment, SegmentRelation,
};

/// One factor of a parabolically induced product.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    /// `Z(segment)` or `Q(segment)`.
    Seg(Form, Segment),
    /// A full irreducible label used as a single factor.
    Label(Multisegment),
}

impl Factor {
    pub fn dimension(&self) -> u32 {
        match self {
            Factor::Seg(_, s) => s.dimension(),
            Factor::Label(m) => m.total_dimension(),
        }
    }

    /// The underlying segment multiset, regardless of form.
    pub fn segments(&self) -> Vec<Segment> {
        match self {
            Factor::Seg(_, s) => vec![s.clone()],
            Factor::Label(m) => m.segments().to_vec(),
        }
    }

    pub fn form(&self) -> Form {
        match self {
            Factor::Seg(f, _) => *f,
            Factor::Label(m) => m.form(),
        }
    }

    pub fn as_multisegment(&self) -> Multisegment {
        match self {
            Factor::Seg(f, s) => {
                Multisegment::new(*f, vec![s.clone()], 0).expect("single segment is consistent")
            }
            Factor::Label(m) => m.clone(),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Seg(form, s) => write!(f, "{}{{{}}}", form, s),
            Factor::Label(m) => write!(f, "{}", m),
        }
    }
}

/// An ordered induced product, not assumed irreducible.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalProduct {
    pub factors: Vec<Factor>,
    pub twist2: i64,
}

impl FormalProduct {
    pub fn new(factors: Vec<Factor>) -> Self {
        FormalProduct { factors, twist2: 0 }
    }

    pub fn from_segments(form: Form, segments: &[Segment]) -> Self {
        FormalProduct::new(
            segments.iter().map(|s| Factor::Seg(form, s.clone())).collect(),
        )
    }

    pub fn single(factor: Factor) -> Self {
        FormalProduct::new(vec![factor])
    }

    pub fn dimension(&self) -> u32 {
        self.factors.iter().map(Factor::dimension).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Every segment of every factor.
    pub fn all_segments(&self) -> Vec<Segment> {
        self.factors.iter().flat_map(|f| f.segments()).collect()
    }

    /// Cuspidal support as multiplicities of `(line, doubled exponent)`.
    pub fn support2(&self) -> std::collections::BTreeMap<(crate::line::CuspidalLine, i32), u32> {
        let mut supp = std::collections::BTreeMap::new();
        for s in self.all_segments() {
            let mut x = s.start2;
            while x <= s.end2 {
                *supp.entry((s.line.clone(), x)).or_insert(0) += 1;
                x += 2;
            }
        }
        supp
    }

    /// Shift every exponent by `by2` doubled units.
    pub fn shifted(&self, by2: i32) -> FormalProduct {
        let factors = self
            .factors
            .iter()
            .map(|f| match f {
                Factor::Seg(form, s) => Factor::Seg(*form, s.shifted(by2)),
                Factor::Label(m) => {
                    let segs = m.segments().iter().map(|s| s.shifted(by2)).collect();
                    Factor::Label(
                        Multisegment::new(m.form(), segs, m.twist2())
                            .expect("shift preserves consistency"),
                    )
                }
            })
            .collect();
        FormalProduct { factors, twist2: self.twist2 }
    }

    /// Canonical key: per-line minimal start shifted to zero, twist dropped.
    /// Symplectic distinction only depends on this pattern.
    pub fn pattern_key(&self) -> FormalProduct {
        use std::collections::BTreeMap;
        let mut mins: BTreeMap<String, i32> = BTreeMap::new();
        for s in self.all_segments() {
            let e = mins.entry(s.line.label.clone()).or_insert(s.start2);
            *e = (*e).min(s.start2);
        }
        let factors = self
            .factors
            .iter()
            .map(|f| match f {
                Factor::Seg(form, s) => {
                    Factor::Seg(*form, s.shifted(-mins[&s.line.label]))
                }
                Factor::Label(m) => {
                    let segs = m
                        .segments()
                        .iter()
                        .map(|s| s.shifted(-mins[&s.line.label]))
                        .collect();
                    Factor::Label(
                        Multisegment::new(m.form(), segs, 0).expect("shift keeps consistency"),
                    )
                }
            })
            .collect();
        FormalProduct { factors, twist2: 0 }
    }
}

impl fmt::Display for FormalProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{}", x)?;
        }
        Ok(())
    }
}

/// Socle, cosocle and the multiset of composition factors of a two-segment
/// product, as far as the two-segment theorems determine them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionSeries {
    pub socle: Option<Multisegment>,
    pub cosocle: Option<Multisegment>,
    pub all_factors: Vec<Multisegment>,
    pub length: usize,
}

/// Composition series of `Z(a) x Z(b)` or `Q(a) x Q(b)`.
///
/// Unlinked pairs give an irreducible product. A linked pair has length two:
/// the label `{a, b}` on one side and `{union, intersection}` on the other,
/// the sides being decided by which segment precedes the other and by the
/// form. Different lines fall under the unlinked branch. Pairs violating the
/// line invariants (one label with two degrees, or mixed lattices) are
/// rejected.
pub fn decompose_pair(a: &Segment, b: &Segment, form: Form) -> Result<CompositionSeries> {
    let rel = segment_relation(a, b);
    let pair = Multisegment::new(form, vec![a.clone(), b.clone()], 0)?;
    if !rel.is_linked() {
        return Ok(CompositionSeries {
            socle: Some(pair.clone()),
            cosocle: Some(pair.clone()),
            all_factors: vec![pair],
            length: 1,
        });
    }
    let union = linked_union(a, b);
    let mut merged_segs = vec![union];
    if let Some(int) = linked_intersection(a, b) {
        merged_segs.push(int);
    }
    let merged = Multisegment::new(form, merged_segs, 0)?;
    let a_precedes_b = matches!(
        rel,
        SegmentRelation::LinkedPrecedes | SegmentRelation::JuxtaposedBefore
    );
    // Z: the earlier-starting factor preceding means the pair label is the
    // quotient; Q mirrors this.
    let (socle, cosocle) = match (form, a_precedes_b) {
        (Form::Z, true) => (merged.clone(), pair.clone()),
        (Form::Z, false) => (pair.clone(), merged.clone()),
        (Form::Q, true) => (pair.clone(), merged.clone()),
        (Form::Q, false) => (merged.clone(), pair.clone()),
    };
    Ok(CompositionSeries {
        socle: Some(socle),
        cosocle: Some(cosocle),
        all_factors: vec![pair, merged],
        length: 2,
    })
}

/// Outcome of the irreducibility analysis of a product of labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    Irreducible { rule: &'static str },
    Reducible { rule: &'static str },
    Unknown,
}

impl IrreducibilityCertificate {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityCertificate::Irreducible { .. })
    }
}

const RULE_SINGLE: &str = "single factor";
const RULE_UNLINKED: &str = "pairwise unlinked cross segments";
const RULE_CERTIFIED: &str = "certified ladder product";
const RULE_LINKED_PAIR: &str = "linked cross pair of segment factors";

/// Certified products with a linked cross pair. Patterns are pairs
/// (single segment, two-segment label) on one line, jointly normalized and
/// matched up to twist and line relabelling. The base shapes, with the
/// length-two label written as `{low, high}`: `[1,2] * {[0,1],[1,2]}` and
/// `[2,3] * {[0,1],[2,3]}`, together with their contragredient shapes where
/// the single factor sits at the bottom; the single factor may be carried by
/// `Q` instead of `Z` in the first shape.
fn certified_table_match(factors: &[Multisegment]) -> bool {
    if factors.len() != 2 {
        return false;
    }
    let (single, label) = match (factors[0].len(), factors[1].len()) {
        (1, 2) => (&factors[0], &factors[1]),
        (2, 1) => (&factors[1], &factors[0]),
        _ => return false,
    };
    if label.form() != Form::Z {
        return false;
    }
    let mut lines: Vec<_> = single.lines();
    lines.extend(label.lines());
    lines.dedup();
    if lines.len() != 1 {
        return false;
    }
    // Joint normalization: offsets relative to the minimal start overall.
    let shape = |single: &Multisegment, label: &Multisegment| -> Option<(Form, Vec<(i32, i32)>)> {
        let mut segs: Vec<(i32, i32)> = label.segments().iter().map(|s| (s.start2, s.end2)).collect();
        let s = &single.segments()[0];
        segs.push((s.start2, s.end2));
        let min = segs.iter().map(|&(b, _)| b).min()?;
        Some((
            single.form(),
            segs.iter().map(|&(b, e)| (b - min, e - min)).collect(),
        ))
    };
    let matches_base = |form: Form, segs: &[(i32, i32)]| -> bool {
        // segs = [label segments (sorted), single segment]; doubled units.
        let one_d = (segs[0], segs[1], segs[2]);
        match one_d {
            ((0, 2), (2, 4), (2, 4)) => true, // [1,2] * {[0,1],[1,2]}, Z or Q single
            ((0, 2), (2, 4), (0, 2)) => true, // contragredient shape [0,1] * {[0,1],[1,2]}
            ((0, 2), (4, 6), (4, 6)) if form == Form::Z => true, // [2,3] * {[0,1],[2,3]}
            ((0, 2), (4, 6), (0, 2)) if form == Form::Z => true, // its contragredient
            _ => false,
        }
    };
    match shape(single, label) {
        Some((form, segs)) => matches_base(form, &segs),
        None => false,
    }
}

/// Decide irreducibility of `Z(m_1) x ... x Z(m_r)` as far as the two-segment
/// theorems and the certified ladder table reach.
///
/// Every cross pair unlinked gives irreducibility; a certified table entry
/// does too. A linked cross pair between single-segment factors forces
/// reducibility. Everything else is `Unknown`.
pub fn product_irreducible(factors: &[Multisegment]) -> IrreducibilityCertificate {
    if factors.len() <= 1 {
        return IrreducibilityCertificate::Irreducible { rule: RULE_SINGLE };
    }
    let mut linked_cross = false;
    for i in 0..factors.len() {
        for j in (i + 1)..factors.len() {
            for s in factors[i].segments() {
                for t in factors[j].segments() {
                    if segment_relation(s, t).is_linked() {
                        linked_cross = true;
                    }
                }
            }
        }
    }
    if !linked_cross {
        return IrreducibilityCertificate::Irreducible { rule: RULE_UNLINKED };
    }
    if certified_table_match(factors) {
        return IrreducibilityCertificate::Irreducible { rule: RULE_CERTIFIED };
    }
    if factors.iter().all(|m| m.len() == 1) {
        return IrreducibilityCertificate::Reducible { rule: RULE_LINKED_PAIR };
    }
    IrreducibilityCertificate::Unknown
}

/// A set of candidate irreducible subquotients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubquotientSet {
    pub items: BTreeSet<Multisegment>,
    /// Exact for products of at most three segments; larger inputs may
    /// over-approximate.
    pub exact: bool,
}

/// Closure of a segment multiset under the elementary operations: replace a
/// linked pair by union plus nonempty intersection, or by the union alone
/// when juxtaposed.
pub fn enumerate_subquotients(factors: &[Segment], form: Form) -> Result<SubquotientSet> {
    if factors.is_empty() {
        return Err(Error::EmptyMultisegment);
    }
    let lines: BTreeSet<_> = factors.iter().map(|s| &s.line).collect();
    if lines.len() != 1 {
        return Err(Error::MixedLines { op: "enumerate_subquotients" });
    }
    let start = Multisegment::new(form, factors.to_vec(), 0)?;
    let mut seen: BTreeSet<Multisegment> = BTreeSet::new();
    let mut queue = vec![start];
    while let Some(m) = queue.pop() {
        if !seen.insert(m.clone()) {
            continue;
        }
        let segs = m.segments();
        for (i, j, rel) in m.pairwise_relations() {
            if !rel.is_linked() {
                continue;
            }
            let mut next: Vec<Segment> = segs
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i && *k != j)
                .map(|(_, s)| s.clone())
                .collect();
            next.push(linked_union(&segs[i], &segs[j]));
            if let Some(int) = linked_intersection(&segs[i], &segs[j]) {
                next.push(int);
            }
            queue.push(Multisegment::new(form, next, 0)?);
        }
    }
    let exact = factors.len() <= 3;
    Ok(SubquotientSet { items: seen, exact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line::CuspidalLine;

    fn seg(b: i32, e: i32) -> Segment {
        Segment::new(CuspidalLine::principal(), b, e).unwrap()
    }

    fn zm(segs: Vec<Segment>) -> Multisegment {
        Multisegment::z(segs).unwrap()
    }

    #[test]
    fn decompose_linked_z() {
        // [0,1] precedes [1,2]: socle is the merged label, cosocle the pair.
        let cs = decompose_pair(&seg(0, 1), &seg(1, 2), Form::Z).unwrap();
        assert_eq!(cs.length, 2);
        assert_eq!(cs.socle, Some(zm(vec![seg(0, 2), seg(1, 1)])));
        assert_eq!(cs.cosocle, Some(zm(vec![seg(0, 1), seg(1, 2)])));
        // Swapped arguments swap socle and cosocle.
        let cs = decompose_pair(&seg(1, 2), &seg(0, 1), Form::Z).unwrap();
        assert_eq!(cs.socle, Some(zm(vec![seg(0, 1), seg(1, 2)])));
        assert_eq!(cs.cosocle, Some(zm(vec![seg(0, 2), seg(1, 1)])));
    }

    #[test]
    fn decompose_unlinked() {
        let cs = decompose_pair(&seg(0, 1), &seg(3, 4), Form::Z).unwrap();
        assert_eq!(cs.length, 1);
        assert_eq!(cs.socle, cs.cosocle);
    }

    #[test]
    fn decompose_q_mirrors() {
        // For Q the merged side is the quotient when the first factor precedes.
        let cs = decompose_pair(&seg(0, 1), &seg(1, 2), Form::Q).unwrap();
        assert_eq!(cs.cosocle, Some(Multisegment::q(vec![seg(0, 2), seg(1, 1)]).unwrap()));
        assert_eq!(cs.socle, Some(Multisegment::q(vec![seg(0, 1), seg(1, 2)]).unwrap()));
    }

    #[test]
    fn irreducibility_certificates() {
        let c = product_irreducible(&[zm(vec![seg(0, 3)]), zm(vec![seg(1, 2)])]);
        assert!(c.is_irreducible());
        let c = product_irreducible(&[zm(vec![seg(1, 2)]), zm(vec![seg(0, 1), seg(1, 2)])]);
        assert!(c.is_irreducible(), "certified table entry");
        let c = product_irreducible(&[zm(vec![seg(0, 1)]), zm(vec![seg(1, 2)])]);
        assert_eq!(c, IrreducibilityCertificate::Reducible { rule: RULE_LINKED_PAIR });
    }

    #[test]
    fn certified_table_contragredient_closure() {
        // [0,1] * {[0,1],[1,2]} is the contragredient of the first base shape.
        let c = product_irreducible(&[zm(vec![seg(0, 1)]), zm(vec![seg(0, 1), seg(1, 2)])]);
        assert!(c.is_irreducible());
        // [2,3] * {[0,1],[2,3]} and its contragredient [0,1] * {[0,1],[2,3]}.
        let c = product_irreducible(&[zm(vec![seg(2, 3)]), zm(vec![seg(0, 1), seg(2, 3)])]);
        assert!(c.is_irreducible());
        let c = product_irreducible(&[zm(vec![seg(0, 1)]), zm(vec![seg(0, 1), seg(2, 3)])]);
        assert!(c.is_irreducible());
        // The Q-carried variant.
        let q = Multisegment::q(vec![seg(1, 2)]).unwrap();
        let c = product_irreducible(&[q, zm(vec![seg(0, 1), seg(1, 2)])]);
        assert!(c.is_irreducible());
    }

    #[test]
    fn subquotient_closure_small() {
        let s = enumerate_subquotients(&[seg(0, 1), seg(1, 2), seg(3, 4)], Form::Z).unwrap();
        assert_eq!(s.items.len(), 4);
        assert!(s.exact);
        assert!(s.items.contains(&zm(vec![seg(0, 1), seg(1, 4)])));
        assert!(s.items.contains(&zm(vec![seg(0, 4), seg(1, 1)])));

        let s = enumerate_subquotients(&[seg(0, 1), seg(3, 4)], Form::Z).unwrap();
        assert_eq!(s.items.len(), 1);
    }

    #[test]
    fn mixed_lines_rejected() {
        let other = Segment::new(CuspidalLine::new("rho2", 2), 0, 1).unwrap();
        assert!(enumerate_subquotients(&[seg(0, 1), other], Form::Z).is_err());
    }
}
