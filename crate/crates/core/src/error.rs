use crate::trees::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("graph order {order} exceeds the cap of {cap} vertices")]
    OrderCap { order: usize, cap: usize },

    #[error("malformed graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("pattern is not a tree: {0}")]
    NotATree(String),

    #[error("{family} requires order at least {min}, got {n}")]
    BelowFamilyMinimum { family: Family, n: usize, min: usize },

    #[error("unsupported family for closed form: {0}")]
    UnsupportedFamily(Family),

    #[error("outside theorem domain: {0}")]
    OutsideDomain(String),

    #[error("corollary hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("invalid degree parameter: {0}")]
    InvalidDegree(String),

    #[error("witness verification failed: {0}")]
    WitnessVerification(String),

    #[error("internal consistency error: {0}")]
    Inconsistent(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
