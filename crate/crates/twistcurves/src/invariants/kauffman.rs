//! Kauffman bracket state sum for braid closures.
//!
//! Crossings are resolved one letter at a time; partial states are planar
//! Temperley-Lieb diagrams with memoized coefficients, so the cost is the
//! number of distinct diagrams reached rather than a bare 2^c sum. A hard
//! crossing budget keeps the exponential tail desk-scale.
//!
//! Output is the Jones polynomial `V(t)` under `A = t^{-1/4}` with writhe
//! correction `(-A³)^{-w}`; mirror braids land on `t ↦ t⁻¹` images.

use std::collections::HashMap;

use thiserror::Error;

use super::poly::LaurentPoly;
use crate::braid::{BraidWord, Sign};

type APoly = LaurentPoly<i64>;

/// Default crossing budget for the state sum.
pub const DEFAULT_MAX_CROSSINGS: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum JonesError {
    #[error("word has {crossings} crossings, over the Kauffman budget {budget}")]
    TooLarge { crossings: usize, budget: usize },
    #[error("closure has {components} components; Jones output in t needs a knot")]
    MultiComponent { components: u32 },
}

/// Planar pairing of `2s` endpoints: `0..s` on top, `s..2s` on bottom.
type Diagram = Vec<u16>;

fn identity_diagram(s: usize) -> Diagram {
    let mut d = vec![0u16; 2 * s];
    for i in 0..s {
        d[i] = (i + s) as u16;
        d[i + s] = i as u16;
    }
    d
}

/// Cup-cap generator e_i (1-based): joins top i-1,i and bottom i-1,i.
fn cup_cap(s: usize, i: usize) -> Diagram {
    let mut d = identity_diagram(s);
    let a = i - 1;
    let b = i;
    d[a] = b as u16;
    d[b] = a as u16;
    d[s + a] = (s + b) as u16;
    d[s + b] = (s + a) as u16;
    d
}

/// Compose `upper` over `lower` (upper's bottom glued to lower's top).
/// Returns the glued diagram and the number of closed loops formed.
fn compose(upper: &Diagram, lower: &Diagram, s: usize) -> (Diagram, u32) {
    let mut out = vec![u16::MAX; 2 * s];
    let mut seen_mid = vec![false; s]; // middle points, by lower-top index
    // walk from every result endpoint to its partner
    for start in 0..2 * s {
        if out[start] != u16::MAX {
            continue;
        }
        // result point: top (< s) lives in upper, bottom (>= s) in lower
        let (mut in_upper, mut p) = if start < s {
            (true, upper[start] as usize)
        } else {
            (false, lower[start] as usize)
        };
        loop {
            if in_upper {
                if p < s {
                    // reached upper top: a result endpoint
                    out[start] = p as u16;
                    out[p] = start as u16;
                    break;
                }
                // upper bottom -> middle -> continue in lower from top p-s
                let mid = p - s;
                seen_mid[mid] = true;
                in_upper = false;
                p = lower[mid] as usize;
            } else {
                if p >= s {
                    // reached lower bottom: a result endpoint
                    out[start] = p as u16;
                    out[p] = start as u16;
                    break;
                }
                // lower top -> middle -> continue in upper from bottom p+s
                seen_mid[p] = true;
                in_upper = true;
                p = upper[p + s] as usize;
            }
        }
    }
    // untouched middle points chain into closed loops, alternating between
    // a lower arc and an upper arc
    let mut loops = 0;
    let mut visited = vec![false; s];
    for m in 0..s {
        if seen_mid[m] || visited[m] {
            continue;
        }
        loops += 1;
        let mut p = m;
        let mut use_lower = true;
        loop {
            visited[p] = true;
            let q = if use_lower {
                let q = lower[p] as usize;
                debug_assert!(q < s, "closed loop stays in the middle");
                q
            } else {
                let q = upper[p + s] as usize;
                debug_assert!(q >= s, "closed loop stays in the middle");
                q - s
            };
            use_lower = !use_lower;
            if q == m {
                break;
            }
            p = q;
        }
    }
    (out, loops)
}

/// Loops in the trace closure (top i joined to bottom i).
fn closure_loops(d: &Diagram, s: usize) -> u32 {
    let mut visited = vec![false; 2 * s];
    let mut loops = 0;
    for start in 0..2 * s {
        if visited[start] {
            continue;
        }
        loops += 1;
        let mut p = start;
        loop {
            visited[p] = true;
            let q = d[p] as usize; // diagram arc
            visited[q] = true;
            // closure arc: top i <-> bottom i
            let r = if q < s { q + s } else { q - s };
            if r == start {
                break;
            }
            p = r;
        }
    }
    loops
}

/// Writhe-corrected Kauffman bracket in the `A` variable. Markov-invariant
/// for arbitrary closures (links included).
pub fn normalized_bracket(word: &BraidWord, max_crossings: usize) -> Result<APoly, JonesError> {
    let c = word.len();
    if c > max_crossings {
        return Err(JonesError::TooLarge { crossings: c, budget: max_crossings });
    }
    let s = word.strands() as usize;
    let delta = APoly::from_terms([(2, -1i64), (-2, -1)]);
    let mut states: HashMap<Diagram, APoly> = HashMap::new();
    states.insert(identity_diagram(s), APoly::one());
    for l in word.letters() {
        let e = cup_cap(s, l.index as usize);
        let (a_coeff, b_coeff) = match l.sign {
            Sign::Positive => (APoly::monomial(1, 1), APoly::monomial(-1, 1)),
            Sign::Negative => (APoly::monomial(-1, 1), APoly::monomial(1, 1)),
        };
        let mut next: HashMap<Diagram, APoly> = HashMap::with_capacity(states.len() * 2);
        for (diag, coeff) in states {
            // identity smoothing
            let entry = next.entry(diag.clone()).or_insert_with(APoly::zero);
            *entry = entry.clone() + coeff.clone() * a_coeff.clone();
            // cup-cap smoothing
            let (glued, loops) = compose(&diag, &e, s);
            let mut add = coeff * b_coeff.clone();
            for _ in 0..loops {
                add = add * delta.clone();
            }
            let entry = next.entry(glued).or_insert_with(APoly::zero);
            *entry = entry.clone() + add;
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
    }
    let mut bracket = APoly::zero();
    for (diag, coeff) in &states {
        let loops = closure_loops(diag, s);
        let mut term = coeff.clone();
        for _ in 0..loops.saturating_sub(1) {
            term = term * delta.clone();
        }
        bracket = bracket + term;
    }
    // (-A³)^{-w}
    let w = word.crossing_counts().writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let correction = APoly::monomial(-3 * w, sign);
    Ok(bracket * correction)
}

/// Jones polynomial of a knot closure in the variable `t`.
pub fn jones_kauffman(word: &BraidWord, max_crossings: usize) -> Result<APoly, JonesError> {
    let components = word.closure_components();
    if components != 1 {
        return Err(JonesError::MultiComponent { components });
    }
    let f = normalized_bracket(word, max_crossings)?;
    // A-exponents of a knot are multiples of 4; t = A^{-4}
    let mut v = APoly::zero();
    for (e, c) in f.terms() {
        assert!(e % 4 == 0, "knot bracket exponents are divisible by 4");
        v.add_term(-e / 4, *c);
    }
    Ok(v)
}
