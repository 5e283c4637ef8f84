use thiserror::Error;

use crate::surface::SlotLabel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("zero polynomial has no canonical sign")]
    ZeroPolynomial,
    #[error("surface spec line {line}: {msg}")]
    SurfaceSyntax { line: usize, msg: String },
    #[error("slot ({pants},{slot}) is used by more than one gluing")]
    DuplicateSlot { pants: usize, slot: SlotLabel },
    #[error("gluing {curve} glues slot ({pants},{slot}) to itself")]
    SelfGluedSlot { curve: usize, pants: usize, slot: SlotLabel },
    #[error("gluing {curve} references pants {pants}, but only {count} pants exist")]
    UnknownPants { curve: usize, pants: usize, count: usize },
    #[error("gluing graph is disconnected")]
    Disconnected,
    #[error("declared genus {genus} / boundary {boundary} do not match {pants} pants and {curves} gluings")]
    TopologyMismatch { genus: usize, boundary: usize, pants: usize, curves: usize },
    #[error("coordinate vectors have length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("intersection numbers around pants {0} have odd sum")]
    ParityViolation(usize),
    #[error("curve {0} has q = 0 and negative twist")]
    NegativeTwistOnZeroLength(usize),
    #[error("slot intersection numbers ({0},{1},{2}) are negative or have odd sum")]
    BadSlotTriple(i64, i64, i64),
    #[error("curve {curve}: twist conversion numerator {numerator} is odd")]
    NonIntegralTwist { curve: usize, numerator: i64 },
    #[error("FLP conversion needs even p, got {0}")]
    OddTwist(i64),
    #[error("({0},{1},{2}) satisfies none of the FLP relations")]
    NoFlpRelation(i64, i64, i64),
    #[error("curve index {0} out of range")]
    BadCurveIndex(usize),
    #[error("component has q = 0 and no holonomy word")]
    EmptyWord,
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("curve has {0} components; the verifier needs a connected curve")]
    NotConnected(usize),
    #[error("Kra parameter undefined at t_K = 0")]
    ZeroKraInput,
    #[error("invalid fuzz config: {0}")]
    BadFuzzConfig(String),
    #[error("coordinate syntax: {0}")]
    CoordSyntax(String),
}

pub type Result<T> = std::result::Result<T, Error>;
