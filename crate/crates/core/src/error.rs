use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}; the difference group would not be the integers")]
    GcdNotOne(i64),
    #[error("{0} is not a member of the semigroup")]
    NotAMember(i64),
    #[error("operands live over different semigroups")]
    MixedSemigroups,
    #[error("empty word")]
    EmptyWord,
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("division by zero at byte {offset}")]
    DivisionByZero { offset: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("power iteration did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error("{samples} samples cannot resolve index span {span}")]
    TooFewSamples { samples: usize, span: i64 },
    #[error("multiplier {0} does not define a morphism between the given semigroups")]
    InvalidMultiplier(i64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
