//! The three-valued distinction engine with citable rule traces.
//!
//! Positive rules certify an invariant functional (products of even Speh
//! ladders, even segment pairs with odd overlap, certified-irreducible
//! products of such blocks); negative rules certify its absence (Whittaker
//! and mixed models, vanishing orbit filtrations of quotient presentations,
//! the long-exact-sequence schema). Rules fire in a fixed order; soundness of
//! every rule makes the order a matter of trace, never of status. A rank-four
//! or rank-six table lookup is the fallback of last resort, so that the
//! exhaustive scans can report any input the rules alone fail to decide.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use crate::dual::{to_z_form, zelevinsky_dual};
use crate::error::{Error, Result};
use crate::ladder::{in_g, in_g_prime, speh_partition, speh_shape};
use crate::mackey::{mackey_upper_bound, MackeyOutcome, SpOracle, TriState};
use crate::multisegment::{Form, Multisegment};
use crate::product::{decompose_pair, product_irreducible, Factor, FormalProduct};
use crate::segment::{segment_relation, Segment, SegmentRelation};

/// The registered rules, with fixed names and anchors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    OsProduct,
    Generic,
    MixedModel,
    UnlinkedFactor,
    OddRank,
    Existence336,
    Juxtaposed337,
    MackeyVanish,
    ExactSequence,
    Gl4Table,
    Gl6Table,
    Contragredient,
    Hereditary,
}

impl Rule {
    pub const ALL: [Rule; 13] = [
        Rule::OsProduct,
        Rule::Generic,
        Rule::MixedModel,
        Rule::UnlinkedFactor,
        Rule::OddRank,
        Rule::Existence336,
        Rule::Juxtaposed337,
        Rule::MackeyVanish,
        Rule::ExactSequence,
        Rule::Gl4Table,
        Rule::Gl6Table,
        Rule::Contragredient,
        Rule::Hereditary,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Rule::OsProduct => "OS-PRODUCT",
            Rule::Generic => "GENERIC",
            Rule::MixedModel => "MIXED-MODEL",
            Rule::UnlinkedFactor => "UNLINKED-FACTOR",
            Rule::OddRank => "ODD-RANK",
            Rule::Existence336 => "EXISTENCE-336",
            Rule::Juxtaposed337 => "JUXTAPOSED-337",
            Rule::MackeyVanish => "MACKEY-VANISH",
            Rule::ExactSequence => "EXACT-SEQUENCE",
            Rule::Gl4Table => "GL4-TABLE",
            Rule::Gl6Table => "GL6-TABLE",
            Rule::Contragredient => "CONTRAGREDIENT",
            Rule::Hereditary => "HEREDITARY",
        }
    }

    /// The mathematical statement each rule encodes.
    pub fn anchor(&self) -> &'static str {
        match self {
            Rule::OsProduct => {
                "a product of twisted even Speh representations carries an invariant functional"
            }
            Rule::Generic => {
                "a representation with a Whittaker model admits no symplectic functional"
            }
            Rule::MixedModel => {
                "a mixed Whittaker-symplectic model excludes the purely symplectic one"
            }
            Rule::UnlinkedFactor => {
                "an irreducible product with disjoint unlinked supports is distinguished only if every factor is"
            }
            Rule::OddRank => "an odd-rank general linear group has no symplectic subgroup",
            Rule::Existence336 => {
                "two even segments with odd overlap yield a distinguished submodule label"
            }
            Rule::Juxtaposed337 => {
                "juxtaposed even segments on a character line are never distinguished"
            }
            Rule::MackeyVanish => {
                "every orbit layer of a quotient presentation vanishes"
            }
            Rule::ExactSequence => {
                "a one-dimensional layer bound absorbed by the distinguished quotient kills the submodule"
            }
            Rule::Gl4Table => "classification table in rank four",
            Rule::Gl6Table => "classification table in rank six",
            Rule::Contragredient => "distinction is invariant under the contragredient",
            Rule::Hereditary => {
                "a certified irreducible product of distinguished ladder blocks is distinguished"
            }
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Distinguished,
    NotDistinguished,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Distinguished => "Distinguished",
            Status::NotDistinguished => "NotDistinguished",
            Status::Unknown => "Unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: Rule,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub trace: Vec<TraceStep>,
}

impl Verdict {
    fn hit(status: Status, rule: Rule, detail: String) -> Self {
        Verdict { status, trace: vec![TraceStep { rule, detail }] }
    }

    pub fn leading_rule(&self) -> Option<Rule> {
        self.trace.first().map(|s| s.rule)
    }
}

/// Rank-four table: the complete distinguished patterns, up to twist and
/// degree-preserving line relabelling.
pub fn gl4_table(m: &Multisegment) -> Result<bool> {
    if m.total_dimension() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, got: m.total_dimension() });
    }
    let p = to_z_form(m).pattern();
    let segs = p.segments();
    match segs.len() {
        1 => {
            let s = &segs[0];
            Ok((s.length() == 2 && s.line.degree == 2) || (s.length() == 4 && s.line.degree == 1))
        }
        2 => {
            if segs.iter().any(|s| s.length() != 2 || s.line.degree != 1) {
                return Ok(false);
            }
            // Even pairs: distinguished unless juxtaposed (the overlapping
            // linked pair is the two-step ladder, the rest are irreducible
            // products of two rank-two characters).
            Ok(!segment_relation(&segs[0], &segs[1]).is_juxtaposed())
        }
        _ => Ok(false),
    }
}

/// Rank-six table: products of even Speh blocks with certified irreducible
/// product, or (up to twist) the exceptional two-step ladder of widths two
/// and four, or its contragredient.
pub fn gl6_table(m: &Multisegment) -> Result<bool> {
    if m.total_dimension() != 6 {
        return Err(Error::DimensionMismatch { expected: 6, got: m.total_dimension() });
    }
    let p = to_z_form(m).pattern();
    if speh_partition(&p).is_some() {
        return Ok(true);
    }
    if p.single_line().map(|l| l.degree) != Some(1) {
        return Ok(false);
    }
    let shape: Vec<(i32, i32)> = p.segments().iter().map(|s| (s.start2, s.end2)).collect();
    Ok(shape == vec![(0, 2), (2, 8)] || shape == vec![(0, 6), (6, 8)])
}

/// Table membership at the ranks where a table exists.
pub fn classify_table(m: &Multisegment) -> Result<Option<bool>> {
    match m.total_dimension() {
        4 => gl4_table(m).map(Some),
        6 => gl6_table(m).map(Some),
        _ => Ok(None),
    }
}

/// The distinction engine. One instance carries the memo tables for the
/// recursive oracle; it is cheap to create and intended to be reused across
/// a scan. The memo tables confine an instance to one thread; every
/// underlying operation is a pure function over immutable values.
pub struct Classifier {
    label_memo: RefCell<HashMap<(Multisegment, bool), Verdict>>,
    product_memo: RefCell<HashMap<FormalProduct, TriState>>,
}

impl Default for Classifier {
    fn default() -> Self {
        Classifier::new()
    }
}

/// Classify a label with a fresh engine.
pub fn classify(m: &Multisegment) -> Result<Verdict> {
    Classifier::new().classify(m)
}

impl Classifier {
    pub fn new() -> Self {
        Classifier {
            label_memo: RefCell::new(HashMap::new()),
            product_memo: RefCell::new(HashMap::new()),
        }
    }

    /// Decide distinction for an irreducible label of even total dimension
    /// at most six. Quotient-form labels are first rewritten through the
    /// transpose; the twist is immaterial throughout.
    pub fn classify(&self, m: &Multisegment) -> Result<Verdict> {
        if m.is_empty() {
            return Err(Error::EmptyMultisegment);
        }
        let dim = m.total_dimension();
        if dim % 2 != 0 {
            return Err(Error::OddDimension { dim });
        }
        if dim > 6 {
            return Err(Error::UnsupportedRank { dim });
        }
        let pattern = to_z_form(m).pattern();
        Ok(self.decide(&pattern, true))
    }

    fn decide(&self, m: &Multisegment, allow_contra: bool) -> Verdict {
        let key = (m.clone(), allow_contra);
        if let Some(v) = self.label_memo.borrow().get(&key) {
            return v.clone();
        }
        let v = self.decide_uncached(m, allow_contra);
        self.label_memo.borrow_mut().insert(key, v.clone());
        v
    }

    fn decide_uncached(&self, m: &Multisegment, allow_contra: bool) -> Verdict {
        debug_assert_eq!(m.form(), Form::Z);
        debug_assert!(!m.is_empty());

        // Positive rules.
        if let Some(blocks) = speh_partition(m) {
            let desc = blocks.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" * ");
            return Verdict::hit(Status::Distinguished, Rule::OsProduct, desc);
        }
        if is_existence_pair(m) {
            return Verdict::hit(
                Status::Distinguished,
                Rule::Existence336,
                format!("{m}: even lengths with odd overlap"),
            );
        }
        if let Ok(Some(blocks)) = in_g(m, product_irreducible) {
            if blocks.iter().all(block_certified) {
                let desc = blocks.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" * ");
                return Verdict::hit(Status::Distinguished, Rule::Hereditary, desc);
            }
        }

        // Negative rules.
        let dual = zelevinsky_dual(m);
        if dual.pairwise_unlinked() {
            return Verdict::hit(
                Status::NotDistinguished,
                Rule::Generic,
                format!("transpose {} is pairwise unlinked", dual),
            );
        }
        if let Some(components) = support_components(m) {
            if let Some(v) = self.unlinked_factor_rule(&components) {
                return v;
            }
        }
        if m.pairwise_unlinked() && m.segments().iter().any(|s| s.length() % 2 == 1) {
            return Verdict::hit(
                Status::NotDistinguished,
                Rule::MixedModel,
                format!("{m}: unlinked product with an odd-length segment"),
            );
        }
        if is_even_juxtaposed_principal_pair(m) {
            return Verdict::hit(Status::NotDistinguished, Rule::Juxtaposed337, m.to_string());
        }
        for (sigma1, sigma2) in quotient_presentations(m) {
            if let Ok(outcome) = mackey_upper_bound(&sigma1, &sigma2, self) {
                if outcome.is_vanishing() {
                    return Verdict::hit(
                        Status::NotDistinguished,
                        Rule::MackeyVanish,
                        format!("all orbits of {} | {} vanish", sigma1, sigma2),
                    );
                }
            }
        }
        if let Some(v) = self.exact_sequence_rule(m) {
            return v;
        }

        // Fallbacks.
        if allow_contra {
            let c = m.contragredient().with_twist2(0);
            if c != *m {
                let inner = self.decide(&c, false);
                if inner.status != Status::Unknown {
                    let mut trace = vec![TraceStep {
                        rule: Rule::Contragredient,
                        detail: format!("decided through {}", c),
                    }];
                    trace.extend(inner.trace);
                    return Verdict { status: inner.status, trace };
                }
            }
        }
        match m.total_dimension() {
            4 => {
                if let Ok(in_table) = gl4_table(m) {
                    let status = if in_table { Status::Distinguished } else { Status::NotDistinguished };
                    return Verdict::hit(status, Rule::Gl4Table, m.to_string());
                }
            }
            6 => {
                if let Ok(in_table) = gl6_table(m) {
                    let status = if in_table { Status::Distinguished } else { Status::NotDistinguished };
                    return Verdict::hit(status, Rule::Gl6Table, m.to_string());
                }
            }
            _ => {}
        }
        Verdict { status: Status::Unknown, trace: vec![] }
    }

    /// Decompose along disjoint unlinked support components.
    fn unlinked_factor_rule(&self, components: &[Multisegment]) -> Option<Verdict> {
        for c in components {
            if c.total_dimension() % 2 == 1 {
                return Some(Verdict::hit(
                    Status::NotDistinguished,
                    Rule::UnlinkedFactor,
                    format!("component {} has odd rank", c),
                ));
            }
        }
        let mut verdicts = Vec::new();
        for c in components {
            let v = self.decide(&c.pattern(), true);
            if v.status == Status::NotDistinguished {
                return Some(Verdict::hit(
                    Status::NotDistinguished,
                    Rule::UnlinkedFactor,
                    format!("component {} is not distinguished", c),
                ));
            }
            verdicts.push(v);
        }
        if verdicts.iter().all(|v| v.status == Status::Distinguished) {
            let desc = components.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" * ");
            return Some(Verdict::hit(Status::Distinguished, Rule::Hereditary, desc));
        }
        None
    }

    /// The long-exact-sequence schema for a juxtaposed pair on the principal
    /// line whose union has even length: the submodule-order presentation
    /// has a one-dimensional layer bound which the character quotient
    /// already accounts for.
    fn exact_sequence_rule(&self, m: &Multisegment) -> Option<Verdict> {
        let segs = m.segments();
        if segs.len() != 2 || segs[0].line != segs[1].line || segs[0].line.degree != 1 {
            return None;
        }
        if !segment_relation(&segs[0], &segs[1]).is_juxtaposed() {
            return None;
        }
        let union_len = segs[0].length() + segs[1].length();
        if union_len % 2 != 0 {
            return None;
        }
        let (lower, upper) =
            if segs[0].start2 < segs[1].start2 { (&segs[0], &segs[1]) } else { (&segs[1], &segs[0]) };
        let sigma1 = FormalProduct::from_segments(Form::Z, &[upper.clone()]);
        let sigma2 = FormalProduct::from_segments(Form::Z, &[lower.clone()]);
        match mackey_upper_bound(&sigma1, &sigma2, self) {
            Ok(MackeyOutcome::Inconclusive { bound: 1, .. }) => Some(Verdict::hit(
                Status::NotDistinguished,
                Rule::ExactSequence,
                format!(
                    "{} | {}: bound 1, absorbed by the character quotient",
                    sigma1, sigma2
                ),
            )),
            _ => None,
        }
    }

    fn tri_label(&self, m: &Multisegment) -> TriState {
        if m.is_empty() {
            return TriState::Yes;
        }
        if m.total_dimension() % 2 == 1 {
            return TriState::No;
        }
        let pattern = to_z_form(m).pattern();
        match self.decide(&pattern, true).status {
            Status::Distinguished => TriState::Yes,
            Status::NotDistinguished => TriState::No,
            Status::Unknown => TriState::Unknown,
        }
    }

    fn assess_uncached(&self, p: &FormalProduct) -> TriState {
        let dim = p.dimension();
        if dim == 0 {
            return TriState::Yes;
        }
        if dim % 2 == 1 {
            // ODD-RANK: no symplectic subgroup.
            return TriState::No;
        }
        if p.factors.len() == 1 {
            return match &p.factors[0] {
                Factor::Label(m) => self.tri_label(m),
                Factor::Seg(Form::Z, s) => {
                    if s.length() % 2 == 0 {
                        // An even segment label is a twisted Speh pattern.
                        TriState::Yes
                    } else {
                        // Odd width: cuspidal (generic) or a mixed model.
                        TriState::No
                    }
                }
                // Quotient-form segments are generic.
                Factor::Seg(Form::Q, _) => TriState::No,
            };
        }

        // A product of even Speh atoms carries a functional whether or not
        // it is irreducible.
        let os_atom = |f: &Factor| match f {
            Factor::Seg(Form::Z, s) => s.length() % 2 == 0,
            Factor::Label(m) => {
                m.form() == Form::Z
                    && matches!(
                        speh_shape(&m.segments().iter().collect::<Vec<_>>()),
                        Some((_, t)) if t % 2 == 0
                    )
            }
            _ => false,
        };
        if p.factors.iter().all(os_atom) {
            return TriState::Yes;
        }

        let mut cross_linked = false;
        let mut cross_overlap = false;
        for i in 0..p.factors.len() {
            for j in (i + 1)..p.factors.len() {
                for a in p.factors[i].segments() {
                    for b in p.factors[j].segments() {
                        let rel = segment_relation(&a, &b);
                        if rel.is_linked() {
                            cross_linked = true;
                        }
                        if !rel.is_disjoint_unlinked() {
                            cross_overlap = true;
                        }
                    }
                }
            }
        }
        let forms: Vec<Form> = p.factors.iter().map(Factor::form).collect();
        if !cross_linked {
            // The product is irreducible and equals the merged label.
            if forms.iter().all(|&f| f == Form::Z) || forms.iter().all(|&f| f == Form::Q) {
                let segs: Vec<Segment> = p.all_segments();
                if let Ok(merged) = Multisegment::new(forms[0], segs, 0) {
                    return self.tri_label(&merged);
                }
            }
            if !cross_overlap {
                // Mixed forms with disjoint supports: the factor lemma still
                // applies to the irreducible product.
                for f in &p.factors {
                    if self.assess(&FormalProduct::single(f.clone())) == TriState::No {
                        return TriState::No;
                    }
                }
            }
        }

        // Quotient route: a distinguished cosocle makes the product
        // distinguished.
        if let Some(cosocle) = natural_cosocle(p) {
            if self.tri_label(&cosocle) == TriState::Yes {
                return TriState::Yes;
            }
        }

        // Orbit recursion over the two-block splits.
        for i in 1..p.factors.len() {
            let sigma1 = FormalProduct::new(p.factors[..i].to_vec());
            let sigma2 = FormalProduct::new(p.factors[i..].to_vec());
            if let Ok(outcome) = mackey_upper_bound(&sigma1, &sigma2, self) {
                if outcome.is_vanishing() {
                    return TriState::No;
                }
            }
        }
        TriState::Unknown
    }
}

impl SpOracle for Classifier {
    fn assess(&self, piece: &FormalProduct) -> TriState {
        let key = piece.pattern_key();
        if let Some(&t) = self.product_memo.borrow().get(&key) {
            return t;
        }
        let t = self.assess_uncached(&key);
        self.product_memo.borrow_mut().insert(key, t);
        t
    }
}

/// Two even segments on one line whose intersection has odd length.
fn is_existence_pair(m: &Multisegment) -> bool {
    m.len() == 2 && in_g_prime(m).map(|c| c.member).unwrap_or(false)
}

fn is_even_juxtaposed_principal_pair(m: &Multisegment) -> bool {
    let segs = m.segments();
    segs.len() == 2
        && segs[0].line == segs[1].line
        && segs[0].line.degree == 1
        && segs.iter().all(|s| s.length() % 2 == 0)
        && segment_relation(&segs[0], &segs[1]).is_juxtaposed()
}

/// Blocks certified distinguished without the general hereditary conjecture:
/// even Speh shapes and even pairs with odd overlap.
fn block_certified(block: &Multisegment) -> bool {
    if matches!(
        speh_shape(&block.segments().iter().collect::<Vec<_>>()),
        Some((_, t)) if t % 2 == 0
    ) {
        return true;
    }
    is_existence_pair(block)
}

/// Split into connected components under "not disjoint-unlinked"; `None`
/// when the multisegment is already connected.
fn support_components(m: &Multisegment) -> Option<Vec<Multisegment>> {
    let segs = m.segments();
    let n = segs.len();
    if n <= 1 {
        return None;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if !segment_relation(&segs[i], &segs[j]).is_disjoint_unlinked() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: HashMap<usize, Vec<Segment>> = HashMap::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(segs[i].clone());
    }
    if groups.len() <= 1 {
        return None;
    }
    let mut components: Vec<Multisegment> = groups
        .into_values()
        .map(|segs| Multisegment::z(segs).expect("component of a consistent multisegment"))
        .collect();
    components.sort();
    Some(components)
}

/// The unique irreducible quotient of the product when the factor order
/// makes it visible: two segment factors always, or a uniform-form list in
/// an admissible order.
fn natural_cosocle(p: &FormalProduct) -> Option<Multisegment> {
    let segs: Vec<(Form, Segment)> = p
        .factors
        .iter()
        .map(|f| match f {
            Factor::Seg(form, s) => Some((*form, s.clone())),
            Factor::Label(_) => None,
        })
        .collect::<Option<Vec<_>>>()?;
    let forms: Vec<Form> = segs.iter().map(|(f, _)| *f).collect();
    if !forms.windows(2).all(|w| w[0] == w[1]) {
        return None;
    }
    let form = forms[0];
    if segs.len() == 2 {
        return decompose_pair(&segs[0].1, &segs[1].1, form).ok()?.cosocle;
    }
    let precedes = |a: &Segment, b: &Segment| {
        matches!(segment_relation(a, b), SegmentRelation::LinkedPrecedes | SegmentRelation::JuxtaposedBefore)
    };
    let admissible = match form {
        // Quotient condition for submodule-form products: no later factor
        // precedes an earlier one.
        Form::Z => (0..segs.len()).all(|i| {
            (i + 1..segs.len()).all(|j| !precedes(&segs[j].1, &segs[i].1))
        }),
        // Mirrored for quotient-form products.
        Form::Q => (0..segs.len()).all(|i| {
            (i + 1..segs.len()).all(|j| !precedes(&segs[i].1, &segs[j].1))
        }),
    };
    if !admissible {
        return None;
    }
    Multisegment::new(form, segs.into_iter().map(|(_, s)| s).collect(), 0).ok()
}

/// Quotient presentations of a label: the ascending product of its segments,
/// optionally with one segment cut into a suffix-prefix pair, split into two
/// consecutive blocks which may be merged back into labels when they consist
/// of originally ascending segments.
fn quotient_presentations(m: &Multisegment) -> Vec<(FormalProduct, FormalProduct)> {
    #[derive(Clone)]
    struct Piece {
        factor: Factor,
        original: bool,
    }
    let base: Vec<Piece> = m
        .segments()
        .iter()
        .map(|s| Piece { factor: Factor::Seg(Form::Z, s.clone()), original: true })
        .collect();
    let mut lists: Vec<Vec<Piece>> = vec![base.clone()];
    for (idx, seg) in m.segments().iter().enumerate() {
        for cut in 1..seg.length() {
            let suffix = Segment {
                line: seg.line.clone(),
                start2: seg.start2 + 2 * cut as i32,
                end2: seg.end2,
            };
            let prefix = Segment {
                line: seg.line.clone(),
                start2: seg.start2,
                end2: seg.start2 + 2 * (cut as i32 - 1),
            };
            let mut list = base.clone();
            list.splice(
                idx..=idx,
                [
                    Piece { factor: Factor::Seg(Form::Z, suffix), original: false },
                    Piece { factor: Factor::Seg(Form::Z, prefix), original: false },
                ],
            );
            lists.push(list);
        }
    }
    let mut out: Vec<(FormalProduct, FormalProduct)> = Vec::new();
    let push_unique = |s1: FormalProduct, s2: FormalProduct, out: &mut Vec<(FormalProduct, FormalProduct)>| {
        let pair = (s1, s2);
        if !out.contains(&pair) {
            out.push(pair);
        }
    };
    for list in &lists {
        for split in 1..list.len() {
            let (a, b) = list.split_at(split);
            let block_variants = |block: &[Piece]| -> Vec<FormalProduct> {
                let mut variants = Vec::new();
                if block.len() >= 2 && block.iter().all(|p| p.original) {
                    let segs: Vec<Segment> = block
                        .iter()
                        .map(|p| match &p.factor {
                            Factor::Seg(_, s) => s.clone(),
                            Factor::Label(_) => unreachable!("presentation pieces are segments"),
                        })
                        .collect();
                    if let Ok(label) = Multisegment::z(segs) {
                        variants.push(FormalProduct::single(Factor::Label(label)));
                    }
                }
                variants.push(FormalProduct::new(block.iter().map(|p| p.factor.clone()).collect()));
                variants
            };
            for s1 in block_variants(a) {
                for s2 in block_variants(b) {
                    push_unique(s1.clone(), s2, &mut out);
                }
            }
        }
    }
    out
}

/// Exhaustive helper for tests: fire every rule independently and report all
/// statuses obtained, to assert that no two rules ever disagree.
pub fn all_rule_statuses(c: &Classifier, m: &Multisegment) -> Vec<(Rule, Status)> {
    let mut out = Vec::new();
    let m = &to_z_form(m).pattern();
    if speh_partition(m).is_some() {
        out.push((Rule::OsProduct, Status::Distinguished));
    }
    if is_existence_pair(m) {
        out.push((Rule::Existence336, Status::Distinguished));
    }
    if let Ok(Some(blocks)) = in_g(m, product_irreducible) {
        if blocks.iter().all(block_certified) {
            out.push((Rule::Hereditary, Status::Distinguished));
        }
    }
    if zelevinsky_dual(m).pairwise_unlinked() {
        out.push((Rule::Generic, Status::NotDistinguished));
    }
    if let Some(components) = support_components(m) {
        if let Some(v) = c.unlinked_factor_rule(&components) {
            out.push((v.leading_rule().unwrap(), v.status));
        }
    }
    if m.pairwise_unlinked() && m.segments().iter().any(|s| s.length() % 2 == 1) {
        out.push((Rule::MixedModel, Status::NotDistinguished));
    }
    if is_even_juxtaposed_principal_pair(m) {
        out.push((Rule::Juxtaposed337, Status::NotDistinguished));
    }
    for (s1, s2) in quotient_presentations(m) {
        if let Ok(outcome) = mackey_upper_bound(&s1, &s2, c) {
            if outcome.is_vanishing() {
                out.push((Rule::MackeyVanish, Status::NotDistinguished));
                break;
            }
        }
    }
    if let Some(v) = c.exact_sequence_rule(m) {
        out.push((v.leading_rule().unwrap(), v.status));
    }
    out
}
