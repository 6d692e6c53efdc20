use mlog_kernel::KernelError;

#[derive(Debug, thiserror::Error)]
pub enum CoreError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    /// A hypothesis of a construction does not hold; `check` names it.
    #[error("{check}: {detail}")]
    Hypothesis { check: &'static str, detail: String },
    #[error("no {what} found up to degree bound {bound}")]
    SearchExhausted { what: &'static str, bound: i64 },
    /// Two computations that must agree did not.
    #[error("internal cross-check failed: {0}")]
    Counterexample(String),
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;

pub(crate) fn hypothesis(check: &'static str, detail: impl Into<String>) -> CoreError {
    CoreError::Hypothesis {
        check,
        detail: detail.into(),
    }
}
