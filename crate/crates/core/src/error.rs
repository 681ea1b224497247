use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty graph: at least one edge is required")]
    Empty,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: loop edge on vertex {vertex}")]
    Loop { line: usize, vertex: u64 },

    #[error("graph is disconnected: vertex {reached} cannot reach vertex {unreached}")]
    Disconnected { reached: usize, unreached: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("{what} = {value} out of range: {constraint}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        constraint: String,
    },

    #[error("{operation} is capped at {cap} {unit} (got {got})")]
    CapExceeded {
        operation: &'static str,
        unit: &'static str,
        cap: usize,
        got: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("edge {{{0}, {1}}} does not exist")]
    MissingEdge(usize, usize),

    #[error("map is not total: {0}")]
    PartialMap(String),

    #[error("witness does not match the graph: {0}")]
    Mismatch(String),

    #[error("invalid family spec `{spec}`: {reason}")]
    InvalidSpec { spec: String, reason: String },
}
