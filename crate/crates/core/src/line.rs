use std::fmt;

/// A cuspidal line: the set of unramified twists `v^k * rho` of a fixed
/// cuspidal representation `rho` of GL_d.
///
/// Only the label and the degree `d` matter for the calculus; the cuspidal
/// itself is never modelled. Two lines are equal iff their labels are equal,
/// and equal labels must carry equal degrees (checked when multisegments are
/// assembled).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CuspidalLine {
    pub label: String,
    pub degree: u32,
}

impl CuspidalLine {
    pub fn new(label: impl Into<String>, degree: u32) -> Self {
        assert!(degree >= 1, "cuspidal line degree must be positive");
        CuspidalLine { label: label.into(), degree }
    }

    /// The default line of characters of GL_1, written `c1`.
    pub fn principal() -> Self {
        CuspidalLine { label: "c1".to_string(), degree: 1 }
    }

    pub fn is_principal(&self) -> bool {
        self.label == "c1" && self.degree == 1
    }
}

impl fmt::Display for CuspidalLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.label, self.degree)
    }
}
