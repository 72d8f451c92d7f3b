use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("the zero ring is not allowed (rings must satisfy 1 != 0)")]
    Trivial,
    #[error("invalid size parameter: {0}")]
    InvalidSize(String),
    #[error("ring order {order} exceeds the configured cap {cap}")]
    OrderCap { order: u128, cap: usize },
    #[error("element {element} is not central in {ring}")]
    NotCentral { ring: String, element: String },
    #[error("not a two-sided ideal of {ring}: {reason}")]
    NotIdeal { ring: String, reason: String },
    #[error("not a unital ring endomorphism of {ring}: {reason}")]
    BadEndomorphism { ring: String, reason: String },
    #[error("swap needs a product of two identical factors, got {0}")]
    SwapShape(String),
    #[error("entry constraints are not closed: {0}")]
    ConstraintsNotClosed(String),
    #[error("ring axiom `{law}` fails in {ring} at {elements}")]
    AxiomViolation {
        ring: String,
        law: &'static str,
        elements: String,
    },
    #[error("order {order} exceeds the nilradical oracle cap {cap}")]
    OracleCap { order: usize, cap: usize },
    #[error("invalid element `{element}` for {ring}")]
    InvalidElement { ring: String, element: String },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
}
