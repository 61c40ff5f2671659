//! Canonical colourings showing `R(S(m1, m2)) > r_b - 1`.

use crate::bounds::r_b;
use crate::doublestar::DoubleStarSpec;
use crate::graph::{Colour, Colouring2};

/// Colouring of `K_{r_b - 1}` with no monochromatic `S(m1, m2)`.
///
/// With `t1 = m1 + 1`, `t2 = m2 + 1`: if `t1 > 2 t2`, two red cliques on
/// `0..t1-1` and `t1-1..2t1-2` joined by blue edges. Otherwise red cliques
/// on `0..t1+t2-1` and on the remaining `t2 - 1` vertices, with every edge
/// between the two blue. The blue graph is then `K_{t2-1, t1+t2-1}`, whose
/// small side cannot hold either bipartition class of the tree.
pub fn canonical_colouring(spec: DoubleStarSpec) -> Colouring2 {
    let (t1, t2) = (spec.m1() + 1, spec.m2() + 1);
    let n = r_b(spec) - 1;
    let c = if t1 > 2 * t2 {
        let half = t1 - 1;
        Colouring2::from_fn(n, |i, j| {
            if (i < half) == (j < half) {
                Colour::Red
            } else {
                Colour::Blue
            }
        })
    } else {
        let clique = t1 + t2 - 1;
        Colouring2::from_fn(n, |i, j| {
            if (i < clique) == (j < clique) {
                Colour::Red
            } else {
                Colour::Blue
            }
        })
    };
    c.expect("r_b - 1 >= 4")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublestar::find_monochromatic;

    fn spec(a: usize, b: usize) -> DoubleStarSpec {
        DoubleStarSpec::new(a, b).unwrap()
    }

    #[test]
    fn s21_is_clique_plus_blue_vertex() {
        let c = canonical_colouring(spec(2, 1));
        assert_eq!(c.serialize(), "n 5\nRRRB\nRRB\nRB\nB\n");
        assert_eq!(find_monochromatic(&c, spec(2, 1)), None);
    }

    #[test]
    fn s10_2_is_balanced_split() {
        let s = spec(10, 2);
        let c = canonical_colouring(s);
        assert_eq!(c.n(), 20);
        assert_eq!(c.colour(0, 9), Colour::Red);
        assert_eq!(c.colour(9, 10), Colour::Blue);
        assert_eq!(c.colour(10, 19), Colour::Red);
        assert_eq!(find_monochromatic(&c, s), None);
    }

    #[test]
    fn s11_is_triangle_plus_blue_vertex() {
        let c = canonical_colouring(spec(1, 1));
        assert_eq!(c.serialize(), "n 4\nRRB\nRB\nB\n");
        assert_eq!(find_monochromatic(&c, spec(1, 1)), None);
    }

    #[test]
    fn s22_small_side_is_red_inside() {
        let s = spec(2, 2);
        let c = canonical_colouring(s);
        assert_eq!(c.n(), 7);
        assert_eq!(c.colour(5, 6), Colour::Red);
        assert_eq!(c.colour(4, 5), Colour::Blue);
        assert_eq!(find_monochromatic(&c, s), None);
        // colouring the small side blue as well creates a blue copy
        let naive =
            Colouring2::from_fn(7, |_, j| if j < 5 { Colour::Red } else { Colour::Blue }).unwrap();
        assert_eq!(
            find_monochromatic(&naive, s).map(|e| e.colour),
            Some(Colour::Blue)
        );
    }

    #[test]
    fn red_clique_is_one_short_of_the_star() {
        for m1 in 1..12 {
            for m2 in 1..=m1 {
                let s = spec(m1, m2);
                let c = canonical_colouring(s);
                assert_eq!(c.n(), r_b(s) - 1);
                if m1 < 2 * (m2 + 1) {
                    assert_eq!(c.max_degree(Colour::Red), m1 + m2);
                }
            }
        }
    }
}
