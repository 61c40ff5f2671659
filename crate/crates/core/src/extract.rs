//! Witness extraction that replays the upper-bound argument for golden-range
//! double stars.
//!
//! Set `m3` as in [`crate::bounds::m3_of`] and work in `K_n` with
//! `n >= m1 + m2 + m3 + 1`. If one colour ("minor") has maximum degree at
//! most `m1`, the other ("major") has minimum degree at least `m2 + m3`.
//! Fix a vertex `v` and a set `A` of `m2 + m3` major neighbours of `v`, and
//! let `D` be the rest. Pick `z` in `D` with fewest major neighbours in `A`
//! and `u` a major neighbour of `z` in `A`. Then either `(u, z)` carries a
//! major-colour copy, or some `w` in `A` has more than `m1 - m3` major
//! neighbours in `D`, in which case `(v, w)` carries one.
//!
//! When neither colour has maximum degree at most `m1`, the argument has no
//! starting point and the extractor falls back to a full scan.

use std::fmt::Write as _;

use crate::bounds::{in_golden_range, m3_of};
use crate::doublestar::{
    centre_feasible, embed_at, find_monochromatic, validate_embedding, DoubleStarSpec, Embedding,
};
use crate::error::{Error, Result};
use crate::graph::{intersection_count, iter_bits, popcount, Colour, Colouring2, VertexSet};

/// A colour whose maximum degree is at most `m1`, blue preferred.
pub fn select_low_colour(c: &Colouring2, m1: usize) -> Option<Colour> {
    [Colour::Blue, Colour::Red]
        .into_iter()
        .find(|&colour| c.max_degree(colour) <= m1)
}

/// Every step of one extraction, proof path or not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionTrace {
    pub m3: usize,
    pub minor_colour: Option<Colour>,
    pub major_colour: Option<Colour>,
    pub v: Option<usize>,
    pub a: Vec<usize>,
    pub z: Option<usize>,
    /// `|N_major(z) ∩ A|`.
    pub z_major_into_a: Option<usize>,
    pub u: Option<usize>,
    /// Vertex `w` of `A` with more than `m1 - m3` major neighbours outside
    /// `A ∪ {v}`, used only when `(u, z)` is not a feasible centre pair.
    pub escape: Option<usize>,
    pub embedding: Embedding,
    pub used_fallback: bool,
    pub fallback_reason: Option<String>,
}

impl ExtractionTrace {
    pub fn render(&self) -> String {
        fn opt<T: ToString>(x: Option<T>) -> String {
            x.map_or_else(|| "-".into(), |v| v.to_string())
        }
        let list = |vs: &[usize]| {
            if vs.is_empty() {
                "-".to_string()
            } else {
                vs.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        };
        let e = &self.embedding;
        let mut out = String::new();
        let _ = writeln!(out, "m3 {}", self.m3);
        let _ = writeln!(out, "minor_colour {}", opt(self.minor_colour));
        let _ = writeln!(out, "major_colour {}", opt(self.major_colour));
        let _ = writeln!(out, "v {}", opt(self.v));
        let _ = writeln!(out, "A {}", list(&self.a));
        let _ = writeln!(out, "z {}", opt(self.z));
        let _ = writeln!(out, "z_major_into_A {}", opt(self.z_major_into_a));
        let _ = writeln!(out, "u {}", opt(self.u));
        let _ = writeln!(out, "escape {}", opt(self.escape));
        let _ = writeln!(
            out,
            "embedding {} {} {} | {} | {}",
            e.colour,
            e.centre1,
            e.centre2,
            list(&e.leaves1),
            list(&e.leaves2)
        );
        let _ = writeln!(out, "used_fallback {}", self.used_fallback);
        if let Some(reason) = &self.fallback_reason {
            let _ = writeln!(out, "fallback_reason {reason}");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofOutcome {
    Proof(ExtractionTrace),
    FallbackNeeded {
        reason: String,
        minor_colour: Option<Colour>,
    },
}

fn check_preconditions(c: &Colouring2, spec: DoubleStarSpec) -> Result<usize> {
    if !in_golden_range(spec) {
        return Err(Error::OutsideGoldenRange {
            m1: spec.m1(),
            m2: spec.m2(),
        });
    }
    let m3 = m3_of(spec)?;
    let needed = spec.m1() + spec.m2() + m3 + 1;
    if c.n() < needed {
        return Err(Error::TooFewVertices { n: c.n(), needed });
    }
    Ok(m3)
}

/// Follows the argument with lowest-index choices throughout.
pub fn extract_via_proof(c: &Colouring2, spec: DoubleStarSpec) -> Result<ProofOutcome> {
    let m3 = check_preconditions(c, spec)?;
    let (n, m1, m2) = (c.n(), spec.m1(), spec.m2());
    let fallback = |reason: String, minor| {
        Ok(ProofOutcome::FallbackNeeded {
            reason,
            minor_colour: minor,
        })
    };

    let Some(minor) = select_low_colour(c, m1) else {
        return fallback(format!("both colours have a vertex of degree > {m1}"), None);
    };
    let major = minor.other();

    let v = 0;
    let a: Vec<usize> = iter_bits(c.row(v, major)).take(m2 + m3).collect();
    if a.len() < m2 + m3 {
        return fallback(
            format!("vertex {v} has fewer than {} major neighbours", m2 + m3),
            Some(minor),
        );
    }
    let mut a_set = VertexSet::new(n);
    for &x in &a {
        a_set.insert(x);
    }

    let (z, z_into_a) = (0..n)
        .filter(|&x| x != v && !a_set.contains(x))
        .map(|x| (x, intersection_count(c.row(x, major), a_set.words())))
        .min_by_key(|&(x, k)| (k, x))
        .expect("D is nonempty when n >= m1 + m2 + m3 + 1");
    let mut into_a = VertexSet::from_words(n, c.row(z, major));
    into_a.intersect_with(&a_set);
    let Some(u) = into_a.iter().next() else {
        return fallback(format!("z = {z} has no major edge into A"), Some(minor));
    };

    let mut trace = ExtractionTrace {
        m3,
        minor_colour: Some(minor),
        major_colour: Some(major),
        v: Some(v),
        a: a.clone(),
        z: Some(z),
        z_major_into_a: Some(z_into_a),
        u: Some(u),
        escape: None,
        embedding: Embedding {
            colour: major,
            centre1: u,
            centre2: z,
            leaves1: Vec::new(),
            leaves2: Vec::new(),
        },
        used_fallback: false,
        fallback_reason: None,
    };

    if centre_feasible(c, major, u, z, spec)? {
        trace.embedding = embed_at(c, major, u, z, spec)?;
        return Ok(ProofOutcome::Proof(trace));
    }

    // (u, z) fails only if some w in A sees too much of D in the major colour.
    let mut closed = a_set;
    closed.insert(v);
    let limit = m1 as isize - m3 as isize;
    for &w in &a {
        let outside =
            popcount(c.row(w, major)) - intersection_count(c.row(w, major), closed.words());
        if outside as isize > limit && centre_feasible(c, major, v, w, spec)? {
            trace.escape = Some(w);
            trace.embedding = embed_at(c, major, v, w, spec)?;
            return Ok(ProofOutcome::Proof(trace));
        }
    }
    fallback(
        format!("neither ({u},{z}) nor any (v, w) with w in A is feasible"),
        Some(minor),
    )
}

/// A monochromatic copy of `spec` in `c`, via the proof path when it
/// applies and a full scan otherwise. Finding none is reported as
/// [`Error::Counterexample`].
pub fn extract(c: &Colouring2, spec: DoubleStarSpec) -> Result<ExtractionTrace> {
    match extract_via_proof(c, spec)? {
        ProofOutcome::Proof(trace) => {
            debug_assert!(validate_embedding(c, spec, &trace.embedding));
            Ok(trace)
        }
        ProofOutcome::FallbackNeeded {
            reason,
            minor_colour,
        } => {
            let Some(embedding) = find_monochromatic(c, spec) else {
                return Err(Error::Counterexample {
                    m1: spec.m1(),
                    m2: spec.m2(),
                    colouring: c.serialize(),
                });
            };
            Ok(ExtractionTrace {
                m3: m3_of(spec)?,
                minor_colour,
                major_colour: minor_colour.map(Colour::other),
                v: None,
                a: Vec::new(),
                z: None,
                z_major_into_a: None,
                u: None,
                escape: None,
                embedding,
                used_fallback: true,
                fallback_reason: Some(reason),
            })
        }
    }
}
