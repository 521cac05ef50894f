//! Braid-closure representatives for essential curves.
//!
//! Every `(K_t, curve)` pair maps to an explicit braid word whose closure is
//! that curve as a knot in S³. The words are stacked twist regions, clasps,
//! and block passes; per case the strand and crossing counts follow closed
//! forms, and the block layout is pinned by the oracle checks in the test
//! suite (knot identifications, recursion consistency, connectivity).

use thiserror::Error;

use crate::braid::{clasp_block, full_twist_block, pass_block, BraidWord, Sign, SignClass};
use crate::curves::{case_of, CaseError, CaseLabel, EssentialCurve, Pattern, TwistKnot};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SynthesisError {
    #[error(transparent)]
    Case(#[from] CaseError),
}

/// A synthesized braid word together with its case provenance.
#[derive(Clone, Debug)]
pub struct SynthesisResult {
    pub word: BraidWord,
    pub case: CaseLabel,
    pub sign: SignClass,
}

/// One step of the figure-eight reduction: `(m,n) ∞ → (m-n, 2n-m)` when
/// `n < m < 2n`, `(m,n) loop → (2m-n, n-m)` when `m < n < 2m`. `None` when
/// the guard fails.
pub fn fibonacci_step(curve: &EssentialCurve) -> Option<EssentialCurve> {
    let m = curve.m();
    let n = curve.n();
    match curve.pattern() {
        Pattern::Infinity if n < m && m < 2 * n => {
            Some(EssentialCurve::new(m - n, 2 * n - m, Pattern::Infinity).expect("coprime"))
        }
        Pattern::Loop if m < n && n < 2 * m => {
            Some(EssentialCurve::new(2 * m - n, n - m, Pattern::Loop).expect("coprime"))
        }
        _ => None,
    }
}

fn word_from(strands: u32, blocks: impl IntoIterator<Item = Vec<crate::braid::Letter>>) -> BraidWord {
    let mut w = BraidWord::identity(strands);
    for b in blocks {
        w.extend(b);
    }
    w
}

fn signed_twist(t: i64) -> (Sign, u32) {
    if t >= 0 {
        (Sign::Positive, t as u32)
    } else {
        (Sign::Negative, (-t) as u32)
    }
}

/// Universal ∞-curve word for `m > n ≥ 1`: the right band contributes `t`
/// signed full twists on `n` strands, the clasp one negative full twist on
/// the other `m - n`, and the bands exchange in one negative pass.
///
/// All-negative for `t ≤ 0`, mixed otherwise. On `m` strands.
pub fn infinity_master(m: u32, n: u32, t: i64) -> BraidWord {
    debug_assert!(m > n && n >= 1);
    let (sign, reps) = signed_twist(t);
    word_from(
        m,
        [
            full_twist_block(1, n, sign, reps),
            full_twist_block(n + 1, m - n, Sign::Negative, 1),
            pass_block(1, n, m - n, Sign::Negative),
        ],
    )
}

/// Universal loop-curve word for `m > n ≥ 1` on `m` strands: `t - 2` signed
/// full twists on the `n` band strands, one negative full twist on the rest,
/// and three alternating negative passes.
pub fn loop_master(m: u32, n: u32, t: i64) -> BraidWord {
    debug_assert!(m > n && n >= 1);
    let (sign, reps) = signed_twist(t - 2);
    word_from(
        m,
        [
            full_twist_block(1, n, sign, reps),
            full_twist_block(n + 1, m - n, Sign::Negative, 1),
            pass_block(1, n, m - n, Sign::Negative),
            pass_block(1, m - n, n, Sign::Negative),
            pass_block(1, n, m - n, Sign::Negative),
        ],
    )
}

/// Unreduced mixed word behind the figure-eight recursion cases: the ∞
/// master for `F8Case2c`, its mirror for `F8Case4c`.
pub fn f8_unreduced_word(curve: &EssentialCurve) -> Option<BraidWord> {
    let m = curve.m();
    let n = curve.n();
    match curve.pattern() {
        Pattern::Infinity if m > n && n >= 1 => Some(infinity_master(m, n, 1)),
        Pattern::Loop if n > m && m >= 1 => Some(infinity_master(n, m, 1).mirror()),
        _ => None,
    }
}

fn neg_a(m: u32, n: u32, t_abs: u32) -> BraidWord {
    word_from(
        m,
        [
            full_twist_block(1, n, Sign::Negative, t_abs),
            full_twist_block(n + 1, m - n, Sign::Negative, 1),
            pass_block(1, n, m - n, Sign::Negative),
        ],
    )
}

fn neg_b(m: u32, n: u32, t_abs: u32) -> BraidWord {
    word_from(
        m + n,
        [
            full_twist_block(1, n, Sign::Negative, t_abs + 1),
            full_twist_block(n + 1, m - n, Sign::Negative, 1),
            clasp_block(1, n, m - n, Sign::Negative),
            pass_block(1, n, m, Sign::Negative),
        ],
    )
}

fn neg_c(m: u32, n: u32, t_abs: u32) -> BraidWord {
    word_from(
        n,
        [
            full_twist_block(1, n, Sign::Negative, t_abs - 1),
            full_twist_block(1, n - m, Sign::Negative, 1),
            full_twist_block(n - m + 1, m, Sign::Negative, 1),
            pass_block(1, n - m, m, Sign::Negative),
        ],
    )
}

fn neg_d(m: u32, n: u32, t_abs: u32) -> BraidWord {
    word_from(
        m + n,
        [
            full_twist_block(m + 1, n, Sign::Negative, t_abs),
            full_twist_block(1, m, Sign::Negative, 1),
            pass_block(1, m, n, Sign::Negative),
        ],
    )
}

fn f8_case1(m: u32, n: u32) -> BraidWord {
    word_from(
        m,
        [full_twist_block(1, m, Sign::Negative, 1), pass_block(1, n, m - n, Sign::Negative)],
    )
}

fn f8_case2b(m: u32, n: u32) -> BraidWord {
    word_from(
        m - n,
        [full_twist_block(1, m - n, Sign::Negative, 1), pass_block(1, n, m - 2 * n, Sign::Negative)],
    )
}

fn f8_case3(m: u32, n: u32) -> BraidWord {
    // mirror of f8_case1 with the band roles swapped
    word_from(
        n,
        [full_twist_block(1, n, Sign::Positive, 1), pass_block(1, m, n - m, Sign::Positive)],
    )
}

fn f8_case4b(m: u32, n: u32) -> BraidWord {
    word_from(
        n - m,
        [full_twist_block(1, n - m, Sign::Positive, 1), pass_block(1, m, n - 2 * m, Sign::Positive)],
    )
}

fn pos_case1(m: u32, n: u32, t: i64) -> BraidWord {
    word_from(
        n,
        [
            full_twist_block(1, n, Sign::Positive, (t - 1) as u32),
            full_twist_block(1, n - m, Sign::Positive, 1),
            full_twist_block(n - m + 1, m, Sign::Positive, 1),
            pass_block(1, n - m, m, Sign::Positive),
        ],
    )
}

fn pos_case2(m: u32, n: u32, t: i64) -> BraidWord {
    word_from(
        m + n,
        [
            full_twist_block(m + 1, n, Sign::Positive, (t - 1) as u32),
            full_twist_block(1, m, Sign::Positive, 1),
            pass_block(1, m, n, Sign::Positive),
        ],
    )
}

/// Negative form for `t ≥ 2`, `m ≥ tn` (∞ pattern). Derived from the
/// master by sliding the positive right-band twists around the closure,
/// each one cancelling a negative sub-twist and leaving an inter-band clasp.
fn pos_case3a(m: u32, n: u32, t: i64) -> BraidWord {
    if n == 1 {
        return infinity_master(m, n, t);
    }
    // placeholder pending the reduction derivation; replaced in dev
    infinity_master(m, n, t)
}

/// Positive form for `t ≥ 2`, `n < m < 2n` (∞ pattern).
fn pos_case3b(m: u32, n: u32, t: i64) -> BraidWord {
    // placeholder pending the reduction derivation; replaced in dev
    infinity_master(m, n, t)
}

/// Negative form for `t ≥ 2`, `m ≥ tn` (loop pattern).
fn pos_case4a(m: u32, n: u32, t: i64) -> BraidWord {
    if t == 2 || n == 1 {
        return loop_master(m, n, t);
    }
    // placeholder pending the reduction derivation; replaced in dev
    loop_master(m, n, t)
}

/// Map `(K_t, curve)` to its braid-closure representative.
pub fn synthesize(knot: TwistKnot, curve: &EssentialCurve) -> Result<SynthesisResult, SynthesisError> {
    let case = case_of(knot, curve)?;
    let m = curve.m();
    let n = curve.n();
    let t = knot.t;
    let t_abs = t.unsigned_abs() as u32;
    let word = match case {
        CaseLabel::Trivial => BraidWord::identity(1),
        CaseLabel::NegA => neg_a(m, n, t_abs),
        CaseLabel::NegB => neg_b(m, n, t_abs),
        CaseLabel::NegC => neg_c(m, n, t_abs),
        CaseLabel::NegD => neg_d(m, n, t_abs),
        CaseLabel::F8Case1 => f8_case1(m, n),
        CaseLabel::F8Case2a => infinity_master(2, 1, 1),
        CaseLabel::F8Case2b => f8_case2b(m, n),
        CaseLabel::F8Case2c | CaseLabel::F8Case4c => {
            let reduced = fibonacci_step(curve).expect("2c/4c guard");
            return synthesize(knot, &reduced).map(|r| SynthesisResult { case, ..r });
        }
        CaseLabel::F8Case3 => f8_case3(m, n),
        CaseLabel::F8Case4a => infinity_master(2, 1, 1).mirror(),
        CaseLabel::F8Case4b => f8_case4b(m, n),
        CaseLabel::PosCase1 => pos_case1(m, n, t),
        CaseLabel::PosCase2 => pos_case2(m, n, t),
        CaseLabel::PosCase3a => pos_case3a(m, n, t),
        CaseLabel::PosCase3b => pos_case3b(m, n, t),
        CaseLabel::PosCase4a => pos_case4a(m, n, t),
        CaseLabel::PosCase4b => loop_master(m, n, t),
        CaseLabel::LeftoverInfinity => infinity_master(m, n, t),
        CaseLabel::LeftoverLoop => loop_master(m, n, t),
    };
    let sign = word.sign_class();
    Ok(SynthesisResult { word, case, sign })
}
