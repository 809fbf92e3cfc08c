use thiserror::Error;

/// Errors raised by graph construction, decision procedures and verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} is outside 1..=64")]
    OrderOutOfRange(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("graph is disconnected")]
    DisconnectedInput,
    #[error("canonical form is limited to order {max}, got {n}")]
    OrderTooLargeForCanonical { n: usize, max: usize },
    #[error("exact Hamilton solver is limited to order {max}, got {n}")]
    OrderTooLargeForExact { n: usize, max: usize },
    #[error("pattern of order {0} exceeds the induced-search limit")]
    PatternTooLarge(usize),
    #[error("vertex {0} is not eligible for local completion")]
    NotEligible(usize),
    #[error("graph is not claw-free")]
    NotClawFree,
    #[error("spectral estimate did not converge")]
    NotConverged,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("target edge count {target} unreachable, stopped at {achieved}")]
    TargetUnreachable { target: usize, achieved: usize },
    #[error("infeasible enumeration: {0}")]
    InfeasibleSpec(String),
    #[error("infeasible verification range: {0}")]
    InfeasibleRange(String),
    #[error("malformed graph6 string: {0}")]
    Graph6(String),
    #[error("checkpoint i/o: {0}")]
    Checkpoint(String),
}

pub type Result<T> = std::result::Result<T, Error>;
