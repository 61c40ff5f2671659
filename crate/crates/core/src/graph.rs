//! Red/blue edge 2-colourings of complete graphs.
//!
//! A [`Colouring2`] stores one bitset row per vertex and colour, so that
//! neighbourhood unions and intersections reduce to word-wise `|`/`&` plus
//! popcount. The type is immutable once built.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest vertex count accepted by [`Colouring2`].
pub const MAX_VERTICES: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub const ALL: [Colour; 2] = [Colour::Red, Colour::Blue];

    pub fn other(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }

    #[inline]
    pub(crate) fn index(self) -> usize {
        self as usize
    }

    pub fn as_char(self) -> char {
        match self {
            Colour::Red => 'R',
            Colour::Blue => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Colour> {
        match c {
            'R' => Some(Colour::Red),
            'B' => Some(Colour::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Number of 64-bit words needed for `n` bits.
#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Position of edge `{i, j}` (`i < j`) in lexicographic edge order.
#[inline]
pub fn edge_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// All edges of `K_n` in lexicographic order.
pub fn edges(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// Fixed-width set of vertices in `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn from_words(n: usize, words: &[u64]) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        VertexSet {
            n,
            words: words.to_vec(),
        }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Set bits of a word slice, lowest first.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(k, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k * 64 + b)
            }
        })
    })
}

#[inline]
pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn union_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x | y).count_ones() as usize)
        .sum()
}

#[inline]
pub(crate) fn intersection_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// A red/blue colouring of the edges of `K_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Colouring2 {
    n: usize,
    stride: usize,
    // adj[colour][v * stride .. (v + 1) * stride] is N_colour(v)
    adj: [Vec<u64>; 2],
}

impl Colouring2 {
    /// Builds a colouring by querying `colour(i, j)` once for each `i < j`.
    pub fn from_fn(n: usize, mut colour: impl FnMut(usize, usize) -> Colour) -> Result<Self> {
        let mut c = Self::blank(n)?;
        for i in 0..n {
            for j in i + 1..n {
                c.set(i, j, colour(i, j));
            }
        }
        Ok(c)
    }

    /// Builds a colouring from a colour per edge, edges in lexicographic order.
    pub fn from_edge_colours(n: usize, colours: &[Colour]) -> Result<Self> {
        let expected = n * n.saturating_sub(1) / 2;
        if colours.len() != expected {
            return Err(Error::VertexCount(n));
        }
        let mut it = colours.iter();
        Self::from_fn(n, |_, _| *it.next().unwrap())
    }

    /// Bit `k` of `mask` set means edge `k` (lexicographic order) is blue.
    /// Only valid for `n <= 11` (at most 55 edges).
    pub fn from_blue_mask(n: usize, mask: u64) -> Result<Self> {
        assert!(n * n.saturating_sub(1) / 2 <= 64);
        let mut k = 0;
        Self::from_fn(n, |_, _| {
            let c = if mask >> k & 1 == 1 {
                Colour::Blue
            } else {
                Colour::Red
            };
            k += 1;
            c
        })
    }

    pub fn monochromatic(n: usize, colour: Colour) -> Result<Self> {
        Self::from_fn(n, |_, _| colour)
    }

    fn blank(n: usize) -> Result<Self> {
        if !(2..=MAX_VERTICES).contains(&n) {
            return Err(Error::VertexCount(n));
        }
        let stride = words_for(n);
        Ok(Colouring2 {
            n,
            stride,
            adj: [vec![0; n * stride], vec![0; n * stride]],
        })
    }

    fn set(&mut self, i: usize, j: usize, colour: Colour) {
        let (s, c) = (self.stride, colour.index());
        self.adj[c][i * s + j / 64] |= 1 << (j % 64);
        self.adj[c][j * s + i / 64] |= 1 << (i % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Colour of edge `{i, j}`, `i != j`.
    pub fn colour(&self, i: usize, j: usize) -> Colour {
        assert!(i != j && i < self.n && j < self.n, "no edge {{{i},{j}}}");
        if self.row(i, Colour::Red)[j / 64] >> (j % 64) & 1 == 1 {
            Colour::Red
        } else {
            Colour::Blue
        }
    }

    /// Raw bitset row `N_colour(v)`.
    #[inline]
    pub fn row(&self, v: usize, colour: Colour) -> &[u64] {
        let s = self.stride;
        &self.adj[colour.index()][v * s..(v + 1) * s]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn neighbourhood(&self, v: usize, colour: Colour) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_words(self.n, self.row(v, colour)))
    }

    pub fn degree(&self, v: usize, colour: Colour) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(popcount(self.row(v, colour)))
    }

    pub fn max_degree(&self, colour: Colour) -> usize {
        (0..self.n)
            .map(|v| popcount(self.row(v, colour)))
            .max()
            .unwrap_or(0)
    }

    /// Colours of all edges in lexicographic order.
    pub fn edge_colours(&self) -> Vec<Colour> {
        edges(self.n)
            .into_iter()
            .map(|(i, j)| self.colour(i, j))
            .collect()
    }

    /// Emits the v1 text format.
    pub fn serialize(&self) -> String {
        let mut out = String::with_capacity(self.n * self.n / 2 + 16);
        out.push_str(&format!("n {}\n", self.n));
        for i in 0..self.n - 1 {
            for j in i + 1..self.n {
                out.push(self.colour(i, j).as_char());
            }
            out.push('\n');
        }
        out
    }

    /// Parses the v1 text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .split('\n')
            .enumerate()
            .map(|(k, l)| (k + 1, l.strip_suffix('\r').unwrap_or(l)))
            .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        let bad_header = || Error::Parse {
            line: hline,
            msg: "malformed header (expected `n <integer>`)".into(),
        };
        let mut words = header.split_whitespace();
        if words.next() != Some("n") {
            return Err(bad_header());
        }
        let n: usize = words
            .next()
            .and_then(|w| w.parse().ok())
            .ok_or_else(bad_header)?;
        if words.next().is_some() {
            return Err(bad_header());
        }
        if !(2..=MAX_VERTICES).contains(&n) {
            return Err(Error::Parse {
                line: hline,
                msg: format!("vertex count {n} outside 2..={MAX_VERTICES}"),
            });
        }

        let mut c = Self::blank(n)?;
        let mut last = hline;
        for i in 0..n - 1 {
            let (line, row) = lines.next().ok_or_else(|| Error::Parse {
                line: last + 1,
                msg: format!("missing data line {} of {}", i + 1, n - 1),
            })?;
            last = line;
            let want = n - 1 - i;
            if row.len() != want {
                // Report a bad character in preference to a bad length.
                if let Some(ch) = row.chars().find(|&ch| Colour::from_char(ch).is_none()) {
                    return Err(Error::Parse {
                        line,
                        msg: format!("invalid colour character {ch:?}"),
                    });
                }
                return Err(Error::Parse {
                    line,
                    msg: format!("wrong row length {} (expected {want})", row.len()),
                });
            }
            for (k, ch) in row.chars().enumerate() {
                let colour = Colour::from_char(ch).ok_or_else(|| Error::Parse {
                    line,
                    msg: "invalid colour character".into(),
                })?;
                c.set(i, i + 1 + k, colour);
            }
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                msg: "unexpected trailing data".into(),
            });
        }
        Ok(c)
    }
}

impl FromStr for Colouring2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Colouring2::parse(s)
    }
}

impl fmt::Debug for Colouring2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Colouring2({:?})", self.serialize())
    }
}
