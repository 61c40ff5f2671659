//! Exact integer evaluation of the Ramsey bounds for double stars.
//!
//! Every ceiling of a square-root expression is obtained by comparing
//! squares of integers after clearing the denominator 2. Nothing here
//! touches floating point.

use std::fmt;

use num_rational::Ratio;

use crate::doublestar::DoubleStarSpec;
use crate::error::{Error, Result};

pub type Rational = Ratio<u128>;

/// Smallest `s` with `s * s >= x`.
pub fn ceil_sqrt(x: u128) -> u128 {
    let r = x.isqrt();
    if r * r == x {
        r
    } else {
        r + 1
    }
}

fn wide(spec: DoubleStarSpec) -> (u128, u128) {
    (spec.m1() as u128, spec.m2() as u128)
}

/// `8 m1^2 + (2 m1 + m2)^2`, i.e. four times `2 m1^2 + (m1 + m2/2)^2`.
fn radicand_x4(spec: DoubleStarSpec) -> u128 {
    let (m1, m2) = wide(spec);
    8 * m1 * m1 + (2 * m1 + m2) * (2 * m1 + m2)
}

/// Burr's lower bound `max{2 t1, t1 + 2 t2} - 1` with `t_i = m_i + 1`.
pub fn r_b(spec: DoubleStarSpec) -> usize {
    let (t1, t2) = (spec.m1() + 1, spec.m2() + 1);
    (2 * t1).max(t1 + 2 * t2) - 1
}

/// `max{2 m1, m1 + 2 m2} + 2`, the classical upper bound away from the gap range.
pub fn eq1_bound(spec: DoubleStarSpec) -> usize {
    let (m1, m2) = (spec.m1(), spec.m2());
    (2 * m1).max(m1 + 2 * m2) + 2
}

/// `2 m1 + m2 + 2`, valid for every `m1 >= m2`.
pub fn ghk_bound(spec: DoubleStarSpec) -> usize {
    2 * spec.m1() + spec.m2() + 2
}

/// `(1 + sqrt 5)/2 * m2 < m1 < 3 m2`.
pub fn in_golden_range(spec: DoubleStarSpec) -> bool {
    let (m1, m2) = wide(spec);
    2 * m1 > m2 && (2 * m1 - m2) * (2 * m1 - m2) > 5 * m2 * m2 && m1 < 3 * m2
}

/// `1.699 (m2 + 1) < m1 < 3 m2`, with 1.699 read as 1699/1000.
pub fn in_gap_range(spec: DoubleStarSpec) -> bool {
    let (m1, m2) = wide(spec);
    1000 * m1 > 1699 * (m2 + 1) && m1 < 3 * m2
}

pub fn range_flags(spec: DoubleStarSpec) -> (bool, bool) {
    (in_golden_range(spec), in_gap_range(spec))
}

fn require_golden(spec: DoubleStarSpec) -> Result<()> {
    if in_golden_range(spec) {
        Ok(())
    } else {
        Err(Error::OutsideGoldenRange {
            m1: spec.m1(),
            m2: spec.m2(),
        })
    }
}

/// `⌈sqrt(2 m1^2 + (m1 + m2/2)^2) - (m1 + m2/2)⌉`.
pub fn m3_of(spec: DoubleStarSpec) -> Result<usize> {
    require_golden(spec)?;
    let (m1, m2) = wide(spec);
    // least t with 2t + (2 m1 + m2) >= sqrt(radicand)
    let excess = ceil_sqrt(radicand_x4(spec)) - (2 * m1 + m2);
    Ok(excess.div_ceil(2) as usize)
}

/// `⌈sqrt(2 m1^2 + (m1 + m2/2)^2) + m2/2⌉ + 1`.
pub fn theorem_bound(spec: DoubleStarSpec) -> Result<usize> {
    require_golden(spec)?;
    let (m1, m2) = wide(spec);
    let target = radicand_x4(spec);
    let holds = |t: u128| 2 * t >= m2 && (2 * t - m2) * (2 * t - m2) >= target;
    // least t satisfying `holds`; 3 m1 + m2 always does
    let (mut lo, mut hi) = (0u128, 3 * m1 + m2);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if holds(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo as usize + 1)
}

/// `⌈4.27492 m⌉ + 1`.
pub fn corollary_bound(m: u64) -> u64 {
    let scaled = 427_492u128 * m as u128;
    (scaled.div_ceil(100_000) + 1) as u64
}

/// The two asymptotic main terms `5 m1/3 + 5 m2/6` and
/// `189 m1/115 + 21 m2/23` of the known lower bounds. The `o(m2)` terms are
/// not computable, so these are not bounds on their own.
pub fn nsz_lower_main(spec: DoubleStarSpec) -> (Rational, Rational) {
    let (m1, m2) = wide(spec);
    let first = Rational::new(5 * m1, 3) + Rational::new(5 * m2, 6);
    let second = Rational::new(189 * m1, 115) + Rational::new(21 * m2, 23);
    (first, second)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperSource {
    Theorem,
    Eq1,
    Ghk,
}

impl UpperSource {
    pub fn name(self) -> &'static str {
        match self {
            UpperSource::Theorem => "theorem",
            UpperSource::Eq1 => "eq1",
            UpperSource::Ghk => "ghk",
        }
    }
}

impl fmt::Display for UpperSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Least applicable upper bound. Ties go to the theorem, then eq1, then ghk.
pub fn best_upper(spec: DoubleStarSpec) -> (usize, UpperSource) {
    let mut candidates = Vec::with_capacity(3);
    if let Ok(t) = theorem_bound(spec) {
        candidates.push((t, UpperSource::Theorem));
    }
    if !in_gap_range(spec) {
        candidates.push((eq1_bound(spec), UpperSource::Eq1));
    }
    candidates.push((ghk_bound(spec), UpperSource::Ghk));
    // min_by_key keeps the first of equal elements
    candidates.into_iter().min_by_key(|&(v, _)| v).unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub spec: DoubleStarSpec,
    pub t1: usize,
    pub t2: usize,
    pub r_b: usize,
    pub eq1_bound: usize,
    pub ghk_bound: usize,
    pub theorem_bound: Option<usize>,
    pub m3: Option<usize>,
    pub corollary_bound: Option<u64>,
    pub nsz_lower_main_1: Rational,
    pub nsz_lower_main_2: Rational,
    pub in_golden_range: bool,
    pub in_gap_range: bool,
    pub best_upper: usize,
    pub best_upper_source: UpperSource,
}

impl BoundsReport {
    pub fn new(spec: DoubleStarSpec) -> Self {
        let (m1, m2) = (spec.m1(), spec.m2());
        let (nsz1, nsz2) = nsz_lower_main(spec);
        let (best, source) = best_upper(spec);
        BoundsReport {
            spec,
            t1: m1 + 1,
            t2: m2 + 1,
            r_b: r_b(spec),
            eq1_bound: eq1_bound(spec),
            ghk_bound: ghk_bound(spec),
            theorem_bound: theorem_bound(spec).ok(),
            m3: m3_of(spec).ok(),
            corollary_bound: (m1 == 2 * m2).then(|| corollary_bound(m2 as u64)),
            nsz_lower_main_1: nsz1,
            nsz_lower_main_2: nsz2,
            in_golden_range: in_golden_range(spec),
            in_gap_range: in_gap_range(spec),
            best_upper: best,
            best_upper_source: source,
        }
    }

    fn fields(&self) -> Vec<(&'static str, String)> {
        fn opt<T: ToString>(x: Option<T>) -> String {
            x.map_or_else(|| "-".to_string(), |v| v.to_string())
        }
        vec![
            ("m1", self.spec.m1().to_string()),
            ("m2", self.spec.m2().to_string()),
            ("t1", self.t1.to_string()),
            ("t2", self.t2.to_string()),
            ("r_b", self.r_b.to_string()),
            ("theorem_bound", opt(self.theorem_bound)),
            ("best_upper", self.best_upper.to_string()),
            ("best_upper_source", self.best_upper_source.to_string()),
            ("eq1_bound", self.eq1_bound.to_string()),
            ("ghk_bound", self.ghk_bound.to_string()),
            ("m3", opt(self.m3)),
            ("corollary_bound", opt(self.corollary_bound)),
            ("in_golden_range", self.in_golden_range.to_string()),
            ("in_gap_range", self.in_gap_range.to_string()),
            ("nsz_lower_main_1", self.nsz_lower_main_1.to_string()),
            ("nsz_lower_main_2", self.nsz_lower_main_2.to_string()),
        ]
    }

    /// Aligned `key : value` lines.
    pub fn render_text(&self) -> String {
        let fields = self.fields();
        let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = format!("Bounds for {}\n", self.spec);
        for (k, v) in fields {
            out.push_str(&format!("  {k:<width$} : {v}\n"));
        }
        out.push_str("  (nsz_lower_main_* are asymptotic main terms; the o(m2) part is omitted)\n");
        out
    }

    /// Single-line `key=value` record.
    pub fn render_record(&self) -> String {
        self.fields()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(a: usize, b: usize) -> DoubleStarSpec {
        DoubleStarSpec::new(a, b).unwrap()
    }

    #[test]
    fn r_b_values() {
        for m in 1..200 {
            assert_eq!(r_b(spec(2 * m, m)), 4 * m + 2);
        }
        assert_eq!(r_b(spec(1, 1)), 5);
        assert_eq!(r_b(spec(4, 2)), 10);
        assert_eq!(r_b(spec(5, 3)), 13);
        assert_eq!(r_b(spec(7, 4)), 17);
    }

    #[test]
    fn range_flag_examples() {
        assert_eq!(range_flags(spec(2, 1)), (true, false));
        assert_eq!(range_flags(spec(3, 2)), (false, false));
        for (a, b) in [(5, 3), (7, 4)] {
            assert!(in_golden_range(spec(a, b)));
        }
        for m in 1..500 {
            assert!(in_golden_range(spec(2 * m, m)));
        }
        assert!(!in_golden_range(spec(3, 1)));
        assert!(!in_golden_range(spec(1, 1)));
    }

    /// Floating-point reference, only trusted away from integer boundaries.
    fn m3_float(m1: f64, m2: f64) -> f64 {
        ((2.0 * m1 * m1 + (m1 + m2 / 2.0).powi(2)).sqrt() - (m1 + m2 / 2.0)).ceil()
    }

    #[test]
    fn m3_examples() {
        assert_eq!(m3_of(spec(2, 1)).unwrap(), 2);
        assert_eq!(m3_of(spec(4, 2)).unwrap(), 3);
        assert_eq!(m3_of(spec(5, 3)).unwrap(), 4);
        assert_eq!(m3_of(spec(6, 3)).unwrap(), 4);
        assert_eq!(m3_of(spec(7, 4)).unwrap(), 5);
        assert!(matches!(
            m3_of(spec(3, 2)),
            Err(Error::OutsideGoldenRange { .. })
        ));
    }

    #[test]
    fn m3_matches_brute_force_and_float() {
        for m1 in 1..300usize {
            for m2 in 1..=m1 {
                let s = spec(m1, m2);
                let Ok(m3) = m3_of(s) else { continue };
                // brute force: least t with (2t + 2m1 + m2)^2 >= 8 m1^2 + (2m1 + m2)^2
                let k = (2 * m1 + m2) as u128;
                let target = 8 * (m1 as u128).pow(2) + k * k;
                let brute = (0u128..).find(|&t| (2 * t + k).pow(2) >= target).unwrap();
                assert_eq!(m3 as u128, brute, "{s}");
                assert_eq!(m3 as f64, m3_float(m1 as f64, m2 as f64), "{s}");
            }
        }
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(theorem_bound(spec(2, 1)).unwrap(), 6);
        assert_eq!(theorem_bound(spec(4, 2)).unwrap(), 10);
        assert_eq!(theorem_bound(spec(5, 3)).unwrap(), 13);
        assert_eq!(theorem_bound(spec(6, 3)).unwrap(), 14);
        assert!(theorem_bound(spec(3, 2)).is_err());
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(corollary_bound(1), 6);
        assert_eq!(corollary_bound(10), 44);
        assert_eq!(corollary_bound(100_000), 427_493);
        assert_eq!(
            theorem_bound(spec(2, 1)).unwrap() as u64,
            corollary_bound(1)
        );
    }

    #[test]
    fn best_upper_examples() {
        assert_eq!(best_upper(spec(10, 1)), (22, UpperSource::Eq1));
        assert_eq!(best_upper(spec(2, 1)), (6, UpperSource::Theorem));
        assert_eq!(best_upper(spec(5, 3)), (13, UpperSource::Theorem));
        assert!(!in_gap_range(spec(5, 3)));
        // inside the gap range eq1 is not applicable
        let gap = spec(9, 4);
        assert!(in_gap_range(gap));
        assert_eq!(best_upper(gap).1, UpperSource::Theorem);
    }

    #[test]
    fn nsz_main_terms() {
        for m in 1..50u128 {
            let (a, b) = nsz_lower_main(spec(2 * m as usize, m as usize));
            assert_eq!(a, Rational::new(25 * m, 6));
            assert_eq!(b, Rational::new(21 * m, 5));
        }
        let (a, b) = nsz_lower_main(spec(1, 1));
        assert_eq!(a, Rational::new(5, 2));
        assert_eq!(b, Rational::new(294, 115));
    }

    #[test]
    fn gap_range_inside_golden_range() {
        for m1 in 1..=2000usize {
            for m2 in 1..=m1 {
                let s = spec(m1, m2);
                if in_gap_range(s) {
                    assert!(in_golden_range(s), "{s}");
                }
            }
        }
    }

    #[test]
    fn report_record() {
        let r = BoundsReport::new(spec(2, 1));
        let rec = r.render_record();
        assert!(rec.contains("r_b=6 theorem_bound=6 best_upper=6"), "{rec}");
        assert!(rec.contains("corollary_bound=6"));
        assert!(rec.contains("m3=2"));
        let r = BoundsReport::new(spec(3, 2));
        assert!(r.render_record().contains("theorem_bound=- "));
        assert!(r.render_text().contains("in_golden_range"));
    }
}
