//! Monochromatic double stars in red/blue colourings of complete graphs.
//!
//! The double star `S(m1, m2)` joins the centres of a star with `m1` leaves
//! and a star with `m2` leaves. This crate provides
//!
//! * [`graph`]: immutable 2-colourings of `K_n` with bitset neighbourhoods
//!   and a plain text file format,
//! * [`doublestar`]: an exact verifier and witness builder for monochromatic
//!   copies,
//! * [`bounds`]: exact-integer Ramsey bounds for double stars,
//! * [`constructions`]: the canonical lower-bound colourings,
//! * [`extract`]: witness extraction that follows the upper-bound argument,
//! * [`search`]: exhaustive and local search for small Ramsey numbers,
//! * [`cli`]: the `dstar` command line.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod doublestar;
pub mod error;
pub mod extract;
pub mod graph;
pub mod search;

pub use doublestar::{DoubleStarSpec, Embedding};
pub use error::{Error, Result};
pub use graph::{Colour, Colouring2};
