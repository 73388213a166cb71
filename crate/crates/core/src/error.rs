use thiserror::Error;

/// Errors raised by graph construction, codecs, index evaluation,
/// family constructors, and enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0} not allowed")]
    Loop(usize),

    #[error("order {0} exceeds the maximum supported order {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph of order {0} is too small for this operation")]
    OrderTooSmall(usize),

    #[error("malformed graph6 byte {byte:#04x} at position {position}")]
    Graph6Byte { byte: u8, position: usize },

    #[error("graph6 string has length {actual}, expected {expected}")]
    Graph6Length { actual: usize, expected: usize },

    #[error("graph6 padding bits are not zero")]
    Graph6Padding,

    #[error("h({0}, {1}) is undefined: degree pair of an isolated edge")]
    IsolatedEdgePair(usize, usize),

    #[error("isolated edge ({0}, {1}): ASO undefined")]
    IsolatedEdge(usize, usize),

    #[error("{graph} contains an isolated edge ({u}, {v})")]
    IsolatedEdgeIn {
        graph: &'static str,
        u: usize,
        v: usize,
    },

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("order {n} unsupported for {class} enumeration (cap {cap}{hint})",
            hint = if *.slow_cap > *.cap { "; pass allow_slow to raise it" } else { "" })]
    UnsupportedOrder {
        class: &'static str,
        n: usize,
        cap: usize,
        slow_cap: usize,
    },

    #[error("no connected graph with n={n}, m={m} exists")]
    InfeasibleEdgeCount { n: usize, m: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
