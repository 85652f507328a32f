//! Segment calculus over cuspidal lines of general linear groups, deciding
//! which irreducible representations of even rank at most six carry a
//! symplectic invariant functional.
//!
//! The building blocks are segments and multisegments in the submodule and
//! quotient labelling conventions, their transpose involution, composition
//! series and subquotient closures of induced products, semisimplified
//! Jacquet modules, and the symplectic double-coset orbit analysis. On top of
//! those sits a rule-based classifier with citable traces and an exhaustive
//! verification harness for the rank-four and rank-six classifications.

pub mod error;
pub mod line;
pub mod segment;
pub mod multisegment;
pub mod dual;
pub mod ladder;
pub mod product;
pub mod jacquet;
pub mod mackey;
pub mod classifier;
pub mod scan;

pub use error::{Error, Result};
pub use line::CuspidalLine;
pub use segment::{segment_relation, Segment, SegmentRelation};
pub use multisegment::{Form, Multisegment};
pub use dual::{to_q_form, to_z_form, zelevinsky_dual};
pub use ladder::{expand_speh, in_g, in_g_prime, reduce_line, LadderCheck, LadderViolation, Parity};
pub use product::{
    decompose_pair, enumerate_subquotients, product_irreducible, CompositionSeries, Factor,
    FormalProduct, IrreducibilityCertificate, SubquotientSet,
};
pub use jacquet::{jacquet_ss, JacquetTerm};
pub use mackey::{
    block_modular_exponents, mackey_upper_bound, modular_exponents, orbit_parameters, orbit_term,
    MackeyOutcome, OrbitDatum, OrbitStatus, OrbitVerdict, SpOracle, TriState,
};
pub use classifier::{classify, classify_table, gl4_table, gl6_table, Classifier, Rule, Status, Verdict};
pub use scan::{corpus, verify_conjectures, ConjectureReport, RankReport};
