//! Reference implementations used only by the integration tests.

#![allow(dead_code)]

use dstar::{Colour, Colouring2, DoubleStarSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Plain adjacency matrix of one colour class.
pub fn adjacency(c: &Colouring2, colour: Colour) -> Vec<Vec<bool>> {
    let n = c.n();
    (0..n)
        .map(|i| (0..n).map(|j| i != j && c.colour(i, j) == colour).collect())
        .collect()
}

/// Calls `f` on every `k`-subset of `items` until it returns true.
pub fn any_subset(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            if go(items, k, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(items, k, 0, &mut Vec::with_capacity(k), f)
}

/// Naive existence test: every ordered centre pair, every leaf set for the
/// first centre, every leaf set for the second.
pub fn naive_contains(c: &Colouring2, spec: DoubleStarSpec) -> bool {
    let n = c.n();
    let (m1, m2) = (spec.m1(), spec.m2());
    for colour in Colour::ALL {
        let adj = adjacency(c, colour);
        for v in 0..n {
            for w in 0..n {
                if !adj[v][w] {
                    continue;
                }
                let nv: Vec<usize> = (0..n).filter(|&x| adj[v][x] && x != w).collect();
                let found = any_subset(&nv, m1, &mut |l1| {
                    let nw: Vec<usize> = (0..n)
                        .filter(|&x| adj[w][x] && x != v && !l1.contains(&x))
                        .collect();
                    any_subset(&nw, m2, &mut |_| true)
                });
                if found {
                    return true;
                }
            }
        }
    }
    false
}

/// Random colouring in which each edge is blue with probability `p_blue`.
pub fn random_colouring(n: usize, p_blue: f64, rng: &mut ChaCha8Rng) -> Colouring2 {
    Colouring2::from_fn(n, |_, _| {
        if rng.gen_bool(p_blue) {
            Colour::Blue
        } else {
            Colour::Red
        }
    })
    .unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn spec(a: usize, b: usize) -> DoubleStarSpec {
    DoubleStarSpec::new(a, b).unwrap()
}
