//! Exact small Ramsey numbers of double stars by exhaustive search, and a
//! seeded local search for good colourings.
//!
//! The exhaustive search assigns edges in lexicographic order, red before
//! blue, with edge `{0,1}` fixed red. A branch dies as soon as either partial
//! colour class contains the double star; colour classes only grow along a
//! branch, so this never discards a good completion. The first good
//! colouring found is therefore the lexicographically least one with
//! `{0,1}` red, whatever the number of threads.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::r_b;
use crate::constructions::canonical_colouring;
use crate::doublestar::{find_monochromatic, DoubleStarSpec};
use crate::error::{Error, Result};
use crate::graph::{edges, Colour, Colouring2};

/// Largest `n` handled by the search (one word per adjacency row).
pub const MAX_SEARCH_N: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub threads: usize,
    /// Node limit for each independent subtree (and for the prefix stage).
    pub budget: u64,
    /// Number of leading edges enumerated before the work is split.
    pub prefix_depth: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            threads: 1,
            budget: 1 << 32,
            prefix_depth: 12,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Edge assignments tried.
    pub nodes: u64,
    /// Assignments rejected because they completed a monochromatic copy.
    pub prunes: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: SearchStats) {
        self.nodes += other.nodes;
        self.prunes += other.prunes;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(Colouring2),
    No,
    Unknown,
}

/// Partial 2-colouring of `K_n` with one `u64` row per vertex and colour.
#[derive(Clone)]
struct Builder {
    n: usize,
    rows: [Vec<u64>; 2],
    m1: usize,
    m2: usize,
    order: u32,
}

impl Builder {
    fn new(n: usize, spec: DoubleStarSpec) -> Self {
        Builder {
            n,
            rows: [vec![0; n], vec![0; n]],
            m1: spec.m1(),
            m2: spec.m2(),
            order: spec.order() as u32,
        }
    }

    #[inline]
    fn set(&mut self, colour: Colour, a: usize, b: usize) {
        let r = &mut self.rows[colour.index()];
        r[a] |= 1 << b;
        r[b] |= 1 << a;
    }

    #[inline]
    fn unset(&mut self, colour: Colour, a: usize, b: usize) {
        let r = &mut self.rows[colour.index()];
        r[a] &= !(1 << b);
        r[b] &= !(1 << a);
    }

    #[inline]
    fn feasible(&self, rows: &[u64], p: usize, q: usize) -> bool {
        let (np, nq) = (rows[p], rows[q]);
        np.count_ones() as usize > self.m1
            && nq.count_ones() as usize > self.m2
            && (np | nq).count_ones() >= self.order
    }

    /// Number of feasible ordered centre pairs `(p, q)` in `colour` with
    /// `p` or `q` in `{a, b}`.
    fn pairs_touching(&self, colour: Colour, a: usize, b: usize) -> u32 {
        let rows = &self.rows[colour.index()];
        let mut count = 0;
        for p in [a, b] {
            let mut nbrs = rows[p];
            while nbrs != 0 {
                let q = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                // count each unordered {p, q} once when both ends are in {a, b}
                if (q == a || q == b) && q < p {
                    continue;
                }
                count += self.feasible(rows, p, q) as u32 + self.feasible(rows, q, p) as u32;
            }
        }
        count
    }

    /// Whether some copy in `colour` uses a centre in `{a, b}`.
    fn copy_touching(&self, colour: Colour, a: usize, b: usize) -> bool {
        let rows = &self.rows[colour.index()];
        [a, b].into_iter().any(|p| {
            let mut nbrs = rows[p];
            while nbrs != 0 {
                let q = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if self.feasible(rows, p, q) || self.feasible(rows, q, p) {
                    return true;
                }
            }
            false
        })
    }

    fn objective(&self) -> u32 {
        let mut total = 0;
        for colour in Colour::ALL {
            let rows = &self.rows[colour.index()];
            for p in 0..self.n {
                let mut nbrs = rows[p];
                while nbrs != 0 {
                    let q = nbrs.trailing_zeros() as usize;
                    nbrs &= nbrs - 1;
                    total += self.feasible(rows, p, q) as u32;
                }
            }
        }
        total
    }

    fn colour_of(&self, a: usize, b: usize) -> Colour {
        if self.rows[0][a] >> b & 1 == 1 {
            Colour::Red
        } else {
            Colour::Blue
        }
    }

    fn to_colouring(&self) -> Colouring2 {
        Colouring2::from_fn(self.n, |i, j| self.colour_of(i, j)).expect("2 <= n <= 64")
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Dfs<'a> {
    builder: Builder,
    edges: &'a [(usize, usize)],
    stats: SearchStats,
    budget: u64,
    cancel: Option<(&'a AtomicUsize, usize)>,
}

impl Dfs<'_> {
    fn cancelled(&self) -> bool {
        self.cancel
            .is_some_and(|(best, me)| best.load(Ordering::Relaxed) < me)
    }

    /// Extends the assignment of `edges[..k]` down to depth `stop`, calling
    /// `leaf` at each surviving node of that depth. `leaf` returning true
    /// stops the search.
    fn run(&mut self, k: usize, stop: usize, leaf: &mut dyn FnMut(&Builder) -> bool) -> Step {
        if k == stop {
            return if leaf(&self.builder) {
                Step::Found
            } else {
                Step::Exhausted
            };
        }
        if self.stats.nodes & 0xfff == 0 && self.cancelled() {
            return Step::OutOfBudget;
        }
        let (a, b) = self.edges[k];
        let choices: &[Colour] = if k == 0 {
            &[Colour::Red]
        } else {
            &[Colour::Red, Colour::Blue]
        };
        for &colour in choices {
            if self.stats.nodes >= self.budget {
                return Step::OutOfBudget;
            }
            self.stats.nodes += 1;
            self.builder.set(colour, a, b);
            if self.builder.copy_touching(colour, a, b) {
                self.stats.prunes += 1;
            } else {
                match self.run(k + 1, stop, leaf) {
                    Step::Exhausted => {}
                    other => {
                        self.builder.unset(colour, a, b);
                        return other;
                    }
                }
            }
            self.builder.unset(colour, a, b);
        }
        Step::Exhausted
    }
}

fn check_n(n: usize) -> Result<()> {
    if (2..=MAX_SEARCH_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::VertexCount(n))
    }
}

enum TaskResult {
    Yes(Colouring2, SearchStats),
    No(SearchStats),
    Unknown(SearchStats),
    Skipped,
}

/// Decides whether `K_n` has a colouring with no monochromatic `spec`.
pub fn exists_good_colouring(
    n: usize,
    spec: DoubleStarSpec,
    config: &SearchConfig,
) -> Result<(Decision, SearchStats)> {
    check_n(n)?;
    let all_edges = edges(n);
    let depth = config.prefix_depth.clamp(1, all_edges.len());

    // Stage 1: surviving assignments of the first `depth` edges, in order.
    let mut prefixes: Vec<Builder> = Vec::new();
    let mut dfs = Dfs {
        builder: Builder::new(n, spec),
        edges: &all_edges,
        stats: SearchStats::default(),
        budget: config.budget,
        cancel: None,
    };
    let step = dfs.run(0, depth, &mut |b| {
        prefixes.push(b.clone());
        false
    });
    let mut stats = dfs.stats;
    if let Step::OutOfBudget = step {
        return Ok((Decision::Unknown, stats));
    }
    if depth == all_edges.len() {
        let decision = match prefixes.into_iter().next() {
            Some(b) => Decision::Yes(b.to_colouring()),
            None => Decision::No,
        };
        return Ok((decision, stats));
    }

    // Stage 2: one task per prefix; tasks after a known Yes are skipped.
    let best_yes = AtomicUsize::new(usize::MAX);
    let solve = |(idx, prefix): (usize, Builder)| -> TaskResult {
        if best_yes.load(Ordering::Relaxed) < idx {
            return TaskResult::Skipped;
        }
        let mut found = None;
        let mut dfs = Dfs {
            builder: prefix,
            edges: &all_edges,
            stats: SearchStats::default(),
            budget: config.budget,
            cancel: Some((&best_yes, idx)),
        };
        let step = dfs.run(depth, all_edges.len(), &mut |b| {
            found = Some(b.to_colouring());
            true
        });
        match step {
            Step::Found => {
                best_yes.fetch_min(idx, Ordering::Relaxed);
                TaskResult::Yes(found.unwrap(), dfs.stats)
            }
            Step::Exhausted => TaskResult::No(dfs.stats),
            Step::OutOfBudget if dfs.cancelled() => TaskResult::Skipped,
            Step::OutOfBudget => TaskResult::Unknown(dfs.stats),
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.max(1))
        .build()
        .expect("thread pool");
    let results: Vec<TaskResult> =
        pool.install(|| prefixes.into_par_iter().enumerate().map(solve).collect());

    let mut unknown = false;
    for r in results {
        match r {
            TaskResult::Yes(c, s) => {
                stats.absorb(s);
                return Ok((Decision::Yes(c), stats));
            }
            TaskResult::No(s) => stats.absorb(s),
            TaskResult::Unknown(s) => {
                stats.absorb(s);
                unknown = true;
            }
            TaskResult::Skipped => unreachable!("only tasks after the first Yes are skipped"),
        }
    }
    let decision = if unknown {
        Decision::Unknown
    } else {
        Decision::No
    };
    Ok((decision, stats))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub spec: DoubleStarSpec,
    pub ramsey_value: Option<usize>,
    /// Good colourings by vertex count.
    pub witnesses: BTreeMap<usize, Colouring2>,
    /// Vertex count at which every colouring was shown to contain a copy.
    pub exhausted_at: Option<usize>,
    /// Last vertex count examined, with its answer.
    pub last: Option<(usize, &'static str)>,
    pub stats: SearchStats,
    pub wall_time: Duration,
}

impl SearchOutcome {
    /// Deterministic text report; wall time is left out.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let s = self.spec;
        match self.ramsey_value {
            Some(r) => {
                let _ = writeln!(out, "R({s}) = {r}");
            }
            None => {
                let lower = self.witnesses.keys().max().map_or(0, |n| n + 1);
                let _ = writeln!(out, "R({s}) >= {lower} (undecided)");
            }
        }
        for n in self.witnesses.keys() {
            let how = if *n == r_b(s) - 1 {
                "canonical"
            } else {
                "search"
            };
            let _ = writeln!(out, "  n = {n}: good colouring ({how})");
        }
        if let Some(n) = self.exhausted_at {
            let _ = writeln!(
                out,
                "  n = {n}: every colouring contains a copy (exhaustive)"
            );
        } else if let Some((n, what)) = self.last {
            let _ = writeln!(out, "  n = {n}: {what}");
        }
        let _ = writeln!(
            out,
            "  nodes {} prunes {}",
            self.stats.nodes, self.stats.prunes
        );
        out
    }

    pub fn render_record(&self) -> String {
        let opt = |x: Option<usize>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
        format!(
            "m1={} m2={} ramsey_value={} exhausted_at={} max_witness_n={} nodes={} prunes={}",
            self.spec.m1(),
            self.spec.m2(),
            opt(self.ramsey_value),
            opt(self.exhausted_at),
            opt(self.witnesses.keys().max().copied()),
            self.stats.nodes,
            self.stats.prunes
        )
    }
}

/// Walks `n` upward from `r_b - 1` (whose canonical colouring is good) until
/// some `n` has no good colouring, `max_n` is passed, or a budget runs out.
pub fn ramsey_exact(
    spec: DoubleStarSpec,
    max_n: usize,
    config: &SearchConfig,
) -> Result<SearchOutcome> {
    let start = Instant::now();
    let base = r_b(spec) - 1;
    let canonical = canonical_colouring(spec);
    assert!(find_monochromatic(&canonical, spec).is_none());

    let mut outcome = SearchOutcome {
        spec,
        ramsey_value: None,
        witnesses: BTreeMap::from([(base, canonical)]),
        exhausted_at: None,
        last: Some((base, "good colouring (canonical)")),
        stats: SearchStats::default(),
        wall_time: Duration::ZERO,
    };
    for n in base + 1..=max_n {
        let (decision, stats) = exists_good_colouring(n, spec, config)?;
        outcome.stats.absorb(stats);
        match decision {
            Decision::Yes(c) => {
                outcome.witnesses.insert(n, c);
                outcome.last = Some((n, "good colouring (search)"));
            }
            Decision::No => {
                outcome.ramsey_value = Some(n);
                outcome.exhausted_at = Some(n);
                outcome.last = Some((n, "no good colouring"));
                break;
            }
            Decision::Unknown => {
                outcome.last = Some((n, "budget exhausted"));
                break;
            }
        }
    }
    outcome.wall_time = start.elapsed();
    Ok(outcome)
}

/// Seeded steepest-descent search for a good colouring of `K_n`.
///
/// The objective counts feasible monochromatic centre pairs. Each iteration
/// flips the edge with the largest decrease (lowest edge index on ties); if
/// no flip decreases the objective the colouring is redrawn at random.
pub fn random_witness_search(
    n: usize,
    spec: DoubleStarSpec,
    seed: u64,
    iterations: u64,
) -> Result<Option<Colouring2>> {
    check_n(n)?;
    let all_edges = edges(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Builder::new(n, spec);
    let randomize = |b: &mut Builder, rng: &mut ChaCha8Rng| {
        b.rows = [vec![0; n], vec![0; n]];
        for &(i, j) in &all_edges {
            let colour = if rng.gen() { Colour::Red } else { Colour::Blue };
            b.set(colour, i, j);
        }
    };
    randomize(&mut b, &mut rng);
    let mut objective = b.objective();

    for _ in 0..iterations {
        if objective == 0 {
            break;
        }
        let mut best: Option<(i64, usize)> = None;
        for (k, &(i, j)) in all_edges.iter().enumerate() {
            let from = b.colour_of(i, j);
            let before =
                (b.pairs_touching(Colour::Red, i, j) + b.pairs_touching(Colour::Blue, i, j)) as i64;
            b.unset(from, i, j);
            b.set(from.other(), i, j);
            let after =
                (b.pairs_touching(Colour::Red, i, j) + b.pairs_touching(Colour::Blue, i, j)) as i64;
            b.unset(from.other(), i, j);
            b.set(from, i, j);
            let delta = after - before;
            if delta < 0 && best.is_none_or(|(d, _)| delta < d) {
                best = Some((delta, k));
            }
        }
        match best {
            Some((delta, k)) => {
                let (i, j) = all_edges[k];
                let from = b.colour_of(i, j);
                b.unset(from, i, j);
                b.set(from.other(), i, j);
                objective = (objective as i64 + delta) as u32;
                debug_assert_eq!(objective, b.objective());
            }
            None => {
                randomize(&mut b, &mut rng);
                objective = b.objective();
            }
        }
    }
    if objective == 0 {
        let c = b.to_colouring();
        debug_assert!(find_monochromatic(&c, spec).is_none());
        Ok(Some(c))
    } else {
        Ok(None)
    }
}
