use thiserror::Error;

use crate::graph::Colour;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{msg} at line {line}")]
    Parse { line: usize, msg: String },

    #[error("vertex {v} out of range for n = {n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("unsupported vertex count {0} (need 2 <= n <= {max})", max = crate::graph::MAX_VERTICES)]
    VertexCount(usize),

    #[error("leaf counts must be positive (got m1 = {m1}, m2 = {m2})")]
    InvalidSpec { m1: usize, m2: usize },

    #[error("edge {{{v},{w}}} is not {colour}")]
    EdgeNotInColour { v: usize, w: usize, colour: Colour },

    #[error("centres ({v},{w}) cannot carry S({m1},{m2}) in {colour}")]
    CentresInfeasible {
        v: usize,
        w: usize,
        m1: usize,
        m2: usize,
        colour: Colour,
    },

    #[error("S({m1},{m2}) is outside the range (1+sqrt5)/2 * m2 < m1 < 3 * m2")]
    OutsideGoldenRange { m1: usize, m2: usize },

    #[error("n = {n} is below the required {needed} vertices")]
    TooFewVertices { n: usize, needed: usize },

    #[error("malformed certificate: {0}")]
    Certificate(String),

    /// No monochromatic copy in a colouring where one is guaranteed to exist.
    #[error("counterexample: no monochromatic S({m1},{m2}) found in\n{colouring}")]
    Counterexample {
        m1: usize,
        m2: usize,
        colouring: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
