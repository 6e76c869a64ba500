use crate::array_model::Index;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A program read a cell that was never written.
    #[error("read of uninitialized array cell {0}")]
    UninitializedRead(Index),
    #[error("argument lies outside the tabulated domain")]
    OutsideDomain,
    #[error("unknown obligation `{0}`")]
    UnknownObligation(String),
    #[error("unknown mutant `{0}`")]
    UnknownMutant(String),
}
