//! Twist knots, essential curves on their genus-one Seifert surfaces, and
//! the case dispatch feeding braid synthesis.
//!
//! A homologically essential simple closed curve on the surface is encoded
//! by coprime non-negative wrapping numbers `(m, n)` over the two bands plus
//! a pattern tag: `Loop` when both bands are traversed with the same
//! orientation, `Infinity` when the orientations disagree.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Twist knot `K_t`: `t` full right-handed twists for `t > 0`, `|t|` full
/// left-handed twists for `t < 0`. `K_{-1}` is the right trefoil, `K_1` the
/// figure eight, `K_2` the stevedore knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwistKnot {
    pub t: i64,
}

impl TwistKnot {
    pub fn new(t: i64) -> TwistKnot {
        TwistKnot { t }
    }
}

impl fmt::Display for TwistKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{}", self.t)
    }
}

/// Band traversal pattern of a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Pattern {
    /// Opposite orientations on the two bands (`∞` curve).
    Infinity,
    /// Same orientation on both bands.
    Loop,
}

impl Pattern {
    pub fn as_str(self) -> &'static str {
        match self {
            Pattern::Infinity => "inf",
            Pattern::Loop => "loop",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("wrapping numbers ({m}, {n}) are not coprime")]
    NotCoprime { m: u32, n: u32 },
    #[error("the (0, 0) class is not essential")]
    ZeroCurve,
    #[error("curve text {text:?} is malformed (expected m,n,loop or m,n,inf)")]
    Malformed { text: String },
}

/// An essential simple closed curve `(m, n)` with a pattern tag.
///
/// `(1, 0)` and `(0, 1)` ignore the tag and canonicalize to `Loop`. The two
/// `(1, 1)` curves are kept distinct: both are unknotted but they are
/// different isotopy classes on the surface and carry different
/// self-linking numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EssentialCurve {
    m: u32,
    n: u32,
    pattern: Pattern,
}

impl EssentialCurve {
    pub fn new(m: u32, n: u32, pattern: Pattern) -> Result<EssentialCurve, CurveError> {
        if m == 0 && n == 0 {
            return Err(CurveError::ZeroCurve);
        }
        if gcd(m, n) != 1 {
            return Err(CurveError::NotCoprime { m, n });
        }
        let pattern = if m == 0 || n == 0 { Pattern::Loop } else { pattern };
        Ok(EssentialCurve { m, n, pattern })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn pattern(&self) -> Pattern {
        self.pattern
    }

    /// `(1,0)`, `(0,1)`, or either `(1,1)` class.
    pub fn is_trivial_class(&self) -> bool {
        self.m == 0 || self.n == 0 || (self.m == 1 && self.n == 1)
    }

    /// Text form `m,n,loop` / `m,n,inf`.
    pub fn to_text(&self) -> String {
        format!("{},{},{}", self.m, self.n, self.pattern)
    }

    pub fn parse(text: &str) -> Result<EssentialCurve, CurveError> {
        let mut parts = text.trim().split(',');
        let malformed = || CurveError::Malformed { text: text.to_string() };
        let m: u32 = parts.next().ok_or_else(malformed)?.trim().parse().map_err(|_| malformed())?;
        let n: u32 = parts.next().ok_or_else(malformed)?.trim().parse().map_err(|_| malformed())?;
        let pattern = match parts.next().ok_or_else(malformed)?.trim() {
            "loop" => Pattern::Loop,
            "inf" => Pattern::Infinity,
            _ => return Err(malformed()),
        };
        if parts.next().is_some() {
            return Err(malformed());
        }
        EssentialCurve::new(m, n, pattern)
    }
}

impl fmt::Display for EssentialCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    num_integer::gcd(a, b)
}

/// Case labels of the braid-closure analysis. Exactly one label applies to
/// each valid `(t, curve)` pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseLabel {
    /// `(1,0)`, `(0,1)`, `(1,1)` either pattern.
    Trivial,
    /// t ≤ -1, ∞ curve, m > n.
    NegA,
    /// t ≤ -1, loop curve, m > n.
    NegB,
    /// t ≤ -1, ∞ curve, n > m.
    NegC,
    /// t ≤ -1, loop curve, n > m.
    NegD,
    /// t = 1, loop, m > n: negative braid.
    F8Case1,
    /// t = 1, ∞, m - n = n (only (2,1)): unknot.
    F8Case2a,
    /// t = 1, ∞, m - n > n: negative braid.
    F8Case2b,
    /// t = 1, ∞, m - n < n: recursive reduction (m,n) → (m-n, 2n-m).
    F8Case2c,
    /// t = 1, ∞, n > m: positive braid.
    F8Case3,
    /// t = 1, loop, n - m = m (only (1,2)): unknot.
    F8Case4a,
    /// t = 1, loop, n - m > m: positive braid.
    F8Case4b,
    /// t = 1, loop, n - m < m: recursive reduction (m,n) → (2m-n, n-m).
    F8Case4c,
    /// t ≥ 2, ∞, n > m: positive braid.
    PosCase1,
    /// t ≥ 2, loop, n > m: positive braid.
    PosCase2,
    /// t ≥ 2, ∞, m ≥ tn: negative braid.
    PosCase3a,
    /// t ≥ 2, ∞, n < m < 2n: positive braid.
    PosCase3b,
    /// t ≥ 2, loop, m ≥ tn: negative braid.
    PosCase4a,
    /// t = 2, loop, n < m < 2n: negative braid.
    PosCase4b,
    /// t ≥ 3, ∞, 2n ≤ m < tn: mixed word, not reduced by the case analysis.
    LeftoverInfinity,
    /// t ≥ 3, loop, n < m < tn: mixed word, not reduced by the case analysis.
    LeftoverLoop,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CaseError {
    #[error("t = 0 is the unknot pattern; its curves are not classified")]
    UnknotPattern,
}

/// Route `(K_t, curve)` to its case label. Total over `t ≠ 0`.
pub fn case_of(knot: TwistKnot, curve: &EssentialCurve) -> Result<CaseLabel, CaseError> {
    let t = knot.t;
    if t == 0 {
        return Err(CaseError::UnknotPattern);
    }
    if curve.is_trivial_class() {
        return Ok(CaseLabel::Trivial);
    }
    let m = i64::from(curve.m());
    let n = i64::from(curve.n());
    let pattern = curve.pattern();
    let label = if t <= -1 {
        match (pattern, m > n) {
            (Pattern::Infinity, true) => CaseLabel::NegA,
            (Pattern::Loop, true) => CaseLabel::NegB,
            (Pattern::Infinity, false) => CaseLabel::NegC,
            (Pattern::Loop, false) => CaseLabel::NegD,
        }
    } else if t == 1 {
        match pattern {
            Pattern::Loop if m > n => CaseLabel::F8Case1,
            Pattern::Infinity if m > n => {
                if m - n == n {
                    CaseLabel::F8Case2a
                } else if m - n > n {
                    CaseLabel::F8Case2b
                } else {
                    CaseLabel::F8Case2c
                }
            }
            Pattern::Infinity => CaseLabel::F8Case3,
            Pattern::Loop => {
                if n - m == m {
                    CaseLabel::F8Case4a
                } else if n - m > m {
                    CaseLabel::F8Case4b
                } else {
                    CaseLabel::F8Case4c
                }
            }
        }
    } else {
        // t >= 2
        match pattern {
            Pattern::Infinity if n > m => CaseLabel::PosCase1,
            Pattern::Loop if n > m => CaseLabel::PosCase2,
            Pattern::Infinity => {
                if m - t * n >= 0 {
                    CaseLabel::PosCase3a
                } else if m - n < n {
                    CaseLabel::PosCase3b
                } else {
                    debug_assert!(t >= 3, "t = 2 leaves no ∞ region between 3a and 3b");
                    CaseLabel::LeftoverInfinity
                }
            }
            Pattern::Loop => {
                if m - t * n >= 0 {
                    CaseLabel::PosCase4a
                } else if t == 2 {
                    debug_assert!(m - n < n, "t = 2 loop region splits at m = 2n");
                    CaseLabel::PosCase4b
                } else {
                    CaseLabel::LeftoverLoop
                }
            }
        }
    };
    Ok(label)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(m: u32, n: u32, p: Pattern) -> EssentialCurve {
        EssentialCurve::new(m, n, p).unwrap()
    }

    #[test]
    fn validation() {
        assert!(EssentialCurve::new(2, 1, Pattern::Infinity).is_ok());
        assert_eq!(
            EssentialCurve::new(4, 2, Pattern::Loop).unwrap_err(),
            CurveError::NotCoprime { m: 4, n: 2 }
        );
        assert_eq!(EssentialCurve::new(0, 0, Pattern::Loop).unwrap_err(), CurveError::ZeroCurve);
        // trivial curves canonicalize the tag
        let c = EssentialCurve::new(1, 0, Pattern::Infinity).unwrap();
        assert_eq!(c.pattern(), Pattern::Loop);
    }

    #[test]
    fn text_round_trip() {
        let c = curve(3, 2, Pattern::Infinity);
        assert_eq!(c.to_text(), "3,2,inf");
        assert_eq!(EssentialCurve::parse("3,2,inf").unwrap(), c);
        assert_eq!(EssentialCurve::parse("5,3,loop").unwrap(), curve(5, 3, Pattern::Loop));
        assert!(EssentialCurve::parse("5,3").is_err());
        assert!(EssentialCurve::parse("5,3,twist").is_err());
    }

    #[test]
    fn case_examples() {
        let k = TwistKnot::new(-1);
        assert_eq!(case_of(k, &curve(2, 1, Pattern::Infinity)).unwrap(), CaseLabel::NegA);
        let k3 = TwistKnot::new(3);
        assert_eq!(case_of(k3, &curve(5, 2, Pattern::Infinity)).unwrap(), CaseLabel::LeftoverInfinity);
        let k1 = TwistKnot::new(1);
        assert_eq!(case_of(k1, &curve(8, 5, Pattern::Infinity)).unwrap(), CaseLabel::F8Case2c);
        assert!(case_of(TwistKnot::new(0), &curve(2, 1, Pattern::Loop)).is_err());
    }

    #[test]
    fn boundary_cases() {
        // m = tn sits with the negative-braid region
        assert_eq!(
            case_of(TwistKnot::new(2), &curve(2, 1, Pattern::Infinity)).unwrap(),
            CaseLabel::PosCase3a
        );
        assert_eq!(
            case_of(TwistKnot::new(3), &curve(3, 1, Pattern::Loop)).unwrap(),
            CaseLabel::PosCase4a
        );
        // (2,1) at t >= 3 falls in the leftover strip
        assert_eq!(
            case_of(TwistKnot::new(3), &curve(2, 1, Pattern::Infinity)).unwrap(),
            CaseLabel::LeftoverInfinity
        );
    }

    #[test]
    fn dispatch_is_total_and_unique() {
        for t in -5..=5i64 {
            if t == 0 {
                continue;
            }
            for m in 0..=50u32 {
                for n in 0..=50u32 {
                    if m + n == 0 || m + n > 50 || num_integer::gcd(m, n) != 1 {
                        continue;
                    }
                    for p in [Pattern::Loop, Pattern::Infinity] {
                        let c = EssentialCurve::new(m, n, p).unwrap();
                        case_of(TwistKnot::new(t), &c).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn t2_partition_assertion() {
        // at t = 2 the ∞ region splits exactly at m = 2n: 3a iff m >= 2n,
        // 3b iff m < 2n; no overlap, no gap
        for m in 1..=40u32 {
            for n in 1..m {
                if num_integer::gcd(m, n) != 1 || m == n {
                    continue;
                }
                let c = EssentialCurve::new(m, n, Pattern::Infinity).unwrap();
                if c.is_trivial_class() {
                    continue;
                }
                let label = case_of(TwistKnot::new(2), &c).unwrap();
                let expected = if m >= 2 * n { CaseLabel::PosCase3a } else { CaseLabel::PosCase3b };
                assert_eq!(label, expected);
            }
        }
    }
}
