use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("non-total transition: missing entry for {0}")]
    NonTotal(String),

    #[error("non-deterministic transition: duplicate entry for {0}")]
    Duplicate(String),

    #[error("undeclared {what} `{name}`")]
    Undeclared { what: &'static str, name: String },

    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },

    #[error("strategy kind {kind} cannot be used for player {player}")]
    KindMismatch { kind: String, player: String },

    #[error("cannot promote a {from} strategy to {to}")]
    InvalidPromotion { from: String, to: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("strategy is skip-divergent: an all-skip cycle is reachable with at most {0} non-skip outputs")]
    SkipDivergent(usize),

    #[error("strategy query failed: {0}")]
    Oracle(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            detail: detail.into(),
        }
    }

    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            message: message.into(),
        }
    }

    /// True for errors caused by exceeding a configured resource bound.
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::SizeGuard(_))
    }
}
