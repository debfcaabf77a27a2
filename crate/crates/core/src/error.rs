use std::io;

use thiserror::Error;

/// Errors raised by digraph construction, the structural operators and the
/// enumeration pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("order {0} is outside the supported range 1..={max}", max = crate::MAX_ORDER)]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} is out of range for a digraph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("arc {0}→{1} is not present")]
    MissingArc(usize, usize),
    #[error("arc {0}→{1} is already present")]
    ArcPresent(usize, usize),
    #[error("external expansion test requires distinct endpoints, got u = w = {0}")]
    EqualEndpoints(usize),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("digraph is acyclic")]
    Acyclic,
    #[error("digraph is not strongly connected")]
    NotStronglyConnected,
    #[error("digraph is not minimal strongly connected")]
    NotMinimalStrong,
    #[error("vertex {0} is not linear")]
    NotLinear(usize),
    #[error("operation requires order at least {required}, got {order}")]
    OrderTooSmall { order: usize, required: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("malformed digraph6 record: {0}")]
    Digraph6(String),
    #[error("characteristic polynomial coefficient overflow")]
    Overflow,
    #[error("invalid catalog: {0}")]
    InvalidCatalog(String),
    #[error("brute-force oracle supports orders 2..=5, got {0}")]
    OracleRange(usize),
    #[error("resources exhausted while generating order {failed_order} (last completed order {last_completed}): {source}")]
    Exhausted {
        last_completed: usize,
        failed_order: usize,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
