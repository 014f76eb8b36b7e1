use alloc::string::String;
use core::fmt;

/// Invariant violations raised by the model constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    /// Variable index 0 is reserved (DIMACS clause terminator).
    ZeroVariable,
    /// A literal or vertex refers to an index beyond the declared count.
    OutOfRange { index: u32, bound: u32 },
    SelfLoop(u32),
    /// Structured-instance invariant; the message names the broken rule.
    Invalid(String),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::ZeroVariable => write!(f, "variable index 0 is not allowed"),
            ModelError::OutOfRange { index, bound } => {
                write!(f, "index {index} out of range 1..={bound}")
            }
            ModelError::SelfLoop(v) => write!(f, "self-loop on vertex {v}"),
            ModelError::Invalid(msg) => f.write_str(msg),
        }
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> ModelError {
    ModelError::Invalid(msg.into())
}
