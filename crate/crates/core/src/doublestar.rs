//! Monochromatic double stars `S(m1, m2)` in a 2-coloured `K_n`.
//!
//! A pair of centres `(v, w)` joined by an edge of colour `C` carries a copy
//! of `S(m1, m2)` with `v` holding the `m1` leaves exactly when
//! `d_C(v) > m1`, `d_C(w) > m2` and `|N_C(v) ∪ N_C(w)| >= m1 + m2 + 2`.
//! Sufficiency is the greedy in [`embed_at`]; necessity is counting, since
//! the centres and both leaf sets are disjoint and all lie in the union.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{iter_bits, popcount, union_count, Colour, Colouring2, VertexSet};

/// The double star `S(m1, m2)`, normalized so that `m1 >= m2 >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DoubleStarSpec {
    m1: usize,
    m2: usize,
}

impl DoubleStarSpec {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidSpec { m1: a, m2: b });
        }
        Ok(DoubleStarSpec {
            m1: a.max(b),
            m2: a.min(b),
        })
    }

    pub fn m1(&self) -> usize {
        self.m1
    }

    pub fn m2(&self) -> usize {
        self.m2
    }

    /// Vertex count of the double star.
    pub fn order(&self) -> usize {
        self.m1 + self.m2 + 2
    }
}

impl fmt::Display for DoubleStarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.m1, self.m2)
    }
}

/// A copy of `S(m1, m2)`: `centre1` carries `leaves1`, `centre2` carries `leaves2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub colour: Colour,
    pub centre1: usize,
    pub centre2: usize,
    pub leaves1: Vec<usize>,
    pub leaves2: Vec<usize>,
}

impl Embedding {
    /// Certificate text: one `key value...` line per field.
    pub fn to_certificate(&self) -> String {
        let join = |vs: &[usize]| {
            vs.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "colour {}\ncentre1 {}\ncentre2 {}\nleaves1 {}\nleaves2 {}\n",
            self.colour,
            self.centre1,
            self.centre2,
            join(&self.leaves1),
            join(&self.leaves2)
        )
    }

    pub fn parse_certificate(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Certificate(m.to_string());
        let mut colour = None;
        let mut centre1 = None;
        let mut centre2 = None;
        let mut leaves1 = None;
        let mut leaves2 = None;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let mut parts = line.split_whitespace();
            let key = parts.next().unwrap();
            let rest: Vec<&str> = parts.collect();
            let nums = || -> Result<Vec<usize>> {
                rest.iter()
                    .map(|s| s.parse().map_err(|_| bad(&format!("bad vertex {s:?}"))))
                    .collect()
            };
            let single = || -> Result<usize> {
                match nums()?.as_slice() {
                    [v] => Ok(*v),
                    _ => Err(bad(&format!("`{key}` needs exactly one vertex"))),
                }
            };
            match key {
                "colour" => {
                    colour = match rest.as_slice() {
                        ["R"] => Some(Colour::Red),
                        ["B"] => Some(Colour::Blue),
                        _ => return Err(bad("colour must be R or B")),
                    }
                }
                "centre1" => centre1 = Some(single()?),
                "centre2" => centre2 = Some(single()?),
                "leaves1" => leaves1 = Some(nums()?),
                "leaves2" => leaves2 = Some(nums()?),
                other => return Err(bad(&format!("unknown key {other:?}"))),
            }
        }
        Ok(Embedding {
            colour: colour.ok_or_else(|| bad("missing colour"))?,
            centre1: centre1.ok_or_else(|| bad("missing centre1"))?,
            centre2: centre2.ok_or_else(|| bad("missing centre2"))?,
            leaves1: leaves1.ok_or_else(|| bad("missing leaves1"))?,
            leaves2: leaves2.ok_or_else(|| bad("missing leaves2"))?,
        })
    }
}

fn check_edge(c: &Colouring2, colour: Colour, v: usize, w: usize) -> Result<()> {
    let n = c.n();
    for x in [v, w] {
        if x >= n {
            return Err(Error::VertexOutOfRange { v: x, n });
        }
    }
    if v == w || c.colour(v, w) != colour {
        return Err(Error::EdgeNotInColour { v, w, colour });
    }
    Ok(())
}

#[inline]
fn feasible_unchecked(
    c: &Colouring2,
    colour: Colour,
    v: usize,
    w: usize,
    spec: DoubleStarSpec,
) -> bool {
    let (nv, nw) = (c.row(v, colour), c.row(w, colour));
    popcount(nv) > spec.m1 && popcount(nw) > spec.m2 && union_count(nv, nw) >= spec.order()
}

/// Whether the `colour` edge `{v, w}` can be the central edge of a copy of
/// `spec` with `v` carrying `m1` leaves.
pub fn centre_feasible(
    c: &Colouring2,
    colour: Colour,
    v: usize,
    w: usize,
    spec: DoubleStarSpec,
) -> Result<bool> {
    check_edge(c, colour, v, w)?;
    Ok(feasible_unchecked(c, colour, v, w, spec))
}

/// Builds the copy of `spec` centred on `(v, w)`.
///
/// Leaves of `v` are taken first from `N(v) \ (N(w) ∪ {w})`, then from
/// `N(v) ∩ N(w)`; leaves of `w` from what remains of `N(w) \ {v}`. Lowest
/// indices win every tie.
pub fn embed_at(
    c: &Colouring2,
    colour: Colour,
    v: usize,
    w: usize,
    spec: DoubleStarSpec,
) -> Result<Embedding> {
    if !centre_feasible(c, colour, v, w, spec)? {
        return Err(Error::CentresInfeasible {
            v,
            w,
            m1: spec.m1,
            m2: spec.m2,
            colour,
        });
    }
    let n = c.n();
    let nv = c.neighbourhood(v, colour)?;
    let nw = c.neighbourhood(w, colour)?;

    let mut private = nv.clone();
    private.difference_with(&nw);
    private.remove(w);
    let mut shared = nv;
    shared.intersect_with(&nw);

    let leaves1: Vec<usize> = private.iter().chain(shared.iter()).take(spec.m1).collect();

    let mut taken = VertexSet::new(n);
    taken.insert(v);
    for &x in &leaves1 {
        taken.insert(x);
    }
    let mut pool = nw;
    pool.difference_with(&taken);
    let leaves2: Vec<usize> = pool.iter().take(spec.m2).collect();
    debug_assert_eq!(leaves1.len(), spec.m1);
    debug_assert_eq!(leaves2.len(), spec.m2);

    Ok(Embedding {
        colour,
        centre1: v,
        centre2: w,
        leaves1,
        leaves2,
    })
}

/// First feasible centre pair, scanning red then blue, ordered pairs `(v, w)`
/// in lexicographic order.
pub fn find_feasible_centres(
    c: &Colouring2,
    spec: DoubleStarSpec,
) -> Option<(Colour, usize, usize)> {
    let n = c.n();
    if spec.order() > n {
        return None;
    }
    for colour in Colour::ALL {
        for v in 0..n {
            let nv = c.row(v, colour);
            if popcount(nv) <= spec.m1 {
                continue;
            }
            for w in iter_bits(nv) {
                let nw = c.row(w, colour);
                if popcount(nw) > spec.m2 && union_count(nv, nw) >= spec.order() {
                    return Some((colour, v, w));
                }
            }
        }
    }
    None
}

/// Some monochromatic copy of `spec` in `c`, or `None` if there is none.
pub fn find_monochromatic(c: &Colouring2, spec: DoubleStarSpec) -> Option<Embedding> {
    let (colour, v, w) = find_feasible_centres(c, spec)?;
    Some(embed_at(c, colour, v, w, spec).expect("scan returned a feasible pair"))
}

/// Whether `e` is a copy of `spec` in `c`.
pub fn validate_embedding(c: &Colouring2, spec: DoubleStarSpec, e: &Embedding) -> bool {
    let n = c.n();
    if e.leaves1.len() != spec.m1 || e.leaves2.len() != spec.m2 {
        return false;
    }
    let mut seen = VertexSet::new(n);
    let all = [e.centre1, e.centre2]
        .into_iter()
        .chain(e.leaves1.iter().copied())
        .chain(e.leaves2.iter().copied());
    for x in all {
        if x >= n || seen.contains(x) {
            return false;
        }
        seen.insert(x);
    }
    c.colour(e.centre1, e.centre2) == e.colour
        && e.leaves1
            .iter()
            .all(|&x| c.colour(e.centre1, x) == e.colour)
        && e.leaves2
            .iter()
            .all(|&x| c.colour(e.centre2, x) == e.colour)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(a: usize, b: usize) -> DoubleStarSpec {
        DoubleStarSpec::new(a, b).unwrap()
    }

    /// Red clique on `0..=3`, vertex 4 blue to everything.
    fn canonical_21() -> Colouring2 {
        Colouring2::from_fn(5, |_, j| if j == 4 { Colour::Blue } else { Colour::Red }).unwrap()
    }

    /// Red edges exactly `red`, all others blue.
    fn red_graph(n: usize, red: &[(usize, usize)]) -> Colouring2 {
        Colouring2::from_fn(n, |i, j| {
            if red.contains(&(i, j)) || red.contains(&(j, i)) {
                Colour::Red
            } else {
                Colour::Blue
            }
        })
        .unwrap()
    }

    #[test]
    fn spec_normalizes_order() {
        assert_eq!(spec(1, 3), spec(3, 1));
        assert_eq!(spec(1, 3).m1(), 3);
        assert!(DoubleStarSpec::new(0, 2).is_err());
    }

    #[test]
    fn feasible_in_complete_red() {
        let c = Colouring2::monochromatic(6, Colour::Red).unwrap();
        assert!(centre_feasible(&c, Colour::Red, 0, 1, spec(2, 1)).unwrap());
        assert!(matches!(
            centre_feasible(&c, Colour::Blue, 0, 1, spec(2, 1)),
            Err(Error::EdgeNotInColour { .. })
        ));
    }

    #[test]
    fn canonical_21_has_no_feasible_pair() {
        let c = canonical_21();
        let s = spec(2, 1);
        for v in 0..5 {
            for w in 0..5 {
                if v == w {
                    continue;
                }
                let colour = c.colour(v, w);
                assert!(!centre_feasible(&c, colour, v, w, s).unwrap(), "({v},{w})");
            }
        }
        assert_eq!(find_monochromatic(&c, s), None);
    }

    #[test]
    fn star_leaf_degree_too_small() {
        let c = red_graph(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        assert!(!centre_feasible(&c, Colour::Red, 0, 1, spec(2, 1)).unwrap());
    }

    #[test]
    fn greedy_in_complete_red() {
        let c = Colouring2::monochromatic(6, Colour::Red).unwrap();
        let e = embed_at(&c, Colour::Red, 0, 1, spec(2, 1)).unwrap();
        assert_eq!(e.leaves1, vec![2, 3]);
        assert_eq!(e.leaves2, vec![4]);
        assert_eq!(find_monochromatic(&c, spec(2, 1)), Some(e));
    }

    #[test]
    fn greedy_with_disjoint_neighbourhoods() {
        let c = red_graph(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]);
        let e = embed_at(&c, Colour::Red, 0, 1, spec(2, 2)).unwrap();
        assert_eq!(e.leaves1, vec![2, 3]);
        assert_eq!(e.leaves2, vec![4, 5]);
    }

    #[test]
    fn greedy_draws_from_shared_pool() {
        let c = red_graph(4, &[(0, 1), (0, 2), (1, 2), (1, 3)]);
        let e = embed_at(&c, Colour::Red, 0, 1, spec(1, 1)).unwrap();
        assert_eq!(e.leaves1, vec![2]);
        assert_eq!(e.leaves2, vec![3]);
        assert!(validate_embedding(&c, spec(1, 1), &e));
    }

    #[test]
    fn embed_rejects_infeasible() {
        let c = canonical_21();
        assert!(matches!(
            embed_at(&c, Colour::Red, 0, 1, spec(2, 1)),
            Err(Error::CentresInfeasible { .. })
        ));
    }

    #[test]
    fn too_large_spec_is_absent() {
        let c = Colouring2::monochromatic(5, Colour::Red).unwrap();
        assert_eq!(find_monochromatic(&c, spec(2, 2)), None);
    }

    #[test]
    fn validation_rejects_tampering() {
        let c = red_graph(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]);
        let s = spec(2, 2);
        let good = embed_at(&c, Colour::Red, 0, 1, s).unwrap();
        assert!(validate_embedding(&c, s, &good));

        let mut wrong_colour = good.clone();
        wrong_colour.leaves2[1] = 6;
        assert!(!validate_embedding(&c, s, &wrong_colour));

        let mut overlap = good.clone();
        overlap.leaves2[0] = overlap.leaves1[0];
        assert!(!validate_embedding(&c, s, &overlap));

        let mut short = good.clone();
        short.leaves1.pop();
        assert!(!validate_embedding(&c, s, &short));

        let mut out_of_range = good;
        out_of_range.leaves1[0] = 99;
        assert!(!validate_embedding(&c, s, &out_of_range));
    }

    #[test]
    fn certificate_round_trip() {
        let c = Colouring2::monochromatic(6, Colour::Red).unwrap();
        let e = find_monochromatic(&c, spec(2, 1)).unwrap();
        let text = e.to_certificate();
        assert_eq!(
            text,
            "colour R\ncentre1 0\ncentre2 1\nleaves1 2 3\nleaves2 4\n"
        );
        assert_eq!(Embedding::parse_certificate(&text).unwrap(), e);
        assert!(Embedding::parse_certificate("colour X\n").is_err());
        assert!(Embedding::parse_certificate("colour R\ncentre1 0\n").is_err());
    }

    #[test]
    fn every_colouring_of_k6_contains_s21() {
        let s = spec(2, 1);
        for mask in 0..1u64 << 15 {
            let c = Colouring2::from_blue_mask(6, mask).unwrap();
            let e = find_monochromatic(&c, s).expect("R(S(2,1)) <= 6");
            assert!(validate_embedding(&c, s, &e));
        }
    }

    /// Adding an edge to a colour class never destroys a feasible pair.
    #[test]
    fn feasibility_is_monotone_under_recolouring() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let s = spec(2, 2);
        for _ in 0..2000 {
            let n = 8;
            let cols: Vec<Colour> = (0..28)
                .map(|_| if rng.gen() { Colour::Red } else { Colour::Blue })
                .collect();
            let c = Colouring2::from_edge_colours(n, &cols).unwrap();
            let k = rng.gen_range(0..28);
            if cols[k] == Colour::Red {
                continue;
            }
            let mut more = cols.clone();
            more[k] = Colour::Red;
            let d = Colouring2::from_edge_colours(n, &more).unwrap();
            for v in 0..n {
                for w in 0..n {
                    if v != w
                        && c.colour(v, w) == Colour::Red
                        && centre_feasible(&c, Colour::Red, v, w, s).unwrap()
                    {
                        assert!(centre_feasible(&d, Colour::Red, v, w, s).unwrap());
                    }
                }
            }
        }
    }
}
