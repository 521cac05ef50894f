//! Braid words and their combinatorial statistics.
//!
//! A braid on `s` strands is a sequence of signed Artin generators. Positive
//! letters are right-handed crossings (strand `i` passes over strand `i + 1`).
//! Everything downstream (synthesis, invariants, classification) speaks this
//! representation; the text form `B<s>:<l1> <l2> ...` is the wire format.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Crossing sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One Artin generator with a crossing sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    /// Generator index, 1-based; must satisfy `1 <= index < strands`.
    pub index: u32,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: u32, sign: Sign) -> Letter {
        Letter { index, sign }
    }

    /// Encode as a nonzero signed integer (the text form).
    pub fn to_i64(self) -> i64 {
        match self.sign {
            Sign::Positive => i64::from(self.index),
            Sign::Negative => -i64::from(self.index),
        }
    }

    pub fn inverse(self) -> Letter {
        Letter { index: self.index, sign: self.sign.flip() }
    }
}

/// Sign classification of a whole word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SignClass {
    Positive,
    Negative,
    Mixed,
    Empty,
}

/// Positive and negative crossing tallies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingCounts {
    pub k_plus: u64,
    pub k_minus: u64,
}

impl CrossingCounts {
    pub fn total(&self) -> u64 {
        self.k_plus + self.k_minus
    }

    /// Writhe `k+ - k-`.
    pub fn writhe(&self) -> i64 {
        self.k_plus as i64 - self.k_minus as i64
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: u32, strands: u32 },
    #[error("braid must have at least one strand")]
    NoStrands,
}

/// Parse failure for the `B<s>:...` text form, with a byte offset.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("braid parse error at byte {position}: {message}")]
pub struct BraidParseError {
    pub position: usize,
    pub message: String,
}

/// A braid word: strand count plus letter sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Trivial braid on `strands` strands.
    pub fn identity(strands: u32) -> BraidWord {
        assert!(strands >= 1, "braid needs at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn new(strands: u32, letters: Vec<Letter>) -> Result<BraidWord, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(BraidError::IndexOutOfRange { index: l.index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Build from signed integers, e.g. `[1, -2, -2]` on 3 strands.
    pub fn from_signed(strands: u32, signed: &[i64]) -> Result<BraidWord, BraidError> {
        let mut letters = Vec::with_capacity(signed.len());
        for &v in signed {
            let index = v.unsigned_abs() as u32;
            let sign = if v > 0 { Sign::Positive } else { Sign::Negative };
            if v == 0 {
                return Err(BraidError::IndexOutOfRange { index: 0, strands });
            }
            letters.push(Letter::new(index, sign));
        }
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        debug_assert!(letter.index >= 1 && letter.index < self.strands);
        self.letters.push(letter);
    }

    pub fn extend(&mut self, letters: impl IntoIterator<Item = Letter>) {
        for l in letters {
            self.push(l);
        }
    }

    /// Concatenate two words on the same strand count.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    pub fn crossing_counts(&self) -> CrossingCounts {
        let mut counts = CrossingCounts { k_plus: 0, k_minus: 0 };
        for l in &self.letters {
            match l.sign {
                Sign::Positive => counts.k_plus += 1,
                Sign::Negative => counts.k_minus += 1,
            }
        }
        counts
    }

    pub fn sign_class(&self) -> SignClass {
        let c = self.crossing_counts();
        match (c.k_plus, c.k_minus) {
            (0, 0) => SignClass::Empty,
            (_, 0) => SignClass::Positive,
            (0, _) => SignClass::Negative,
            _ => SignClass::Mixed,
        }
    }

    /// Underlying permutation: `perm[i]` is the bottom position of the strand
    /// entering at top position `i` (0-based).
    pub fn permutation(&self) -> Vec<u32> {
        let s = self.strands as usize;
        let mut perm: Vec<u32> = (0..s as u32).collect();
        // perm[p] currently unused; track positions directly: pos[i] = where
        // strand i sits. Swapping adjacent positions per letter.
        let mut pos: Vec<u32> = (0..s as u32).collect(); // pos by strand
        let mut at: Vec<u32> = (0..s as u32).collect(); // strand by position
        for l in &self.letters {
            let a = (l.index - 1) as usize;
            let b = l.index as usize;
            let sa = at[a];
            let sb = at[b];
            at[a] = sb;
            at[b] = sa;
            pos[sa as usize] = b as u32;
            pos[sb as usize] = a as u32;
        }
        for i in 0..s {
            perm[i] = pos[i];
        }
        perm
    }

    /// Number of components of the braid closure (cycles of the permutation).
    pub fn closure_components(&self) -> u32 {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i] as usize;
            }
        }
        cycles
    }

    /// Mirror image: flip every crossing sign. The closure is the mirror knot.
    pub fn mirror(&self) -> BraidWord {
        let letters = self.letters.iter().map(|l| l.inverse()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Rotate the diagram half a turn: index `i` becomes `s - i`, letter order
    /// reverses. Closure-preserving.
    pub fn flip(&self) -> BraidWord {
        let s = self.strands;
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| Letter::new(s - l.index, l.sign))
            .collect();
        BraidWord { strands: s, letters }
    }

    /// Word inverse (reverse order, invert letters). Closure of `w⁻¹` is the
    /// reverse of the closure, same knot type.
    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Conjugate `g w g⁻¹` by a single generator.
    pub fn conjugate(&self, g: Letter) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        letters.push(g.inverse());
        BraidWord { strands: self.strands, letters }
    }

    /// Markov stabilization: add a strand and one crossing `σ_s^{±1}`.
    pub fn stabilize(&self, sign: Sign) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(Letter::new(self.strands, sign));
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Cyclic rotation by one letter (conjugation by the first letter).
    pub fn rotate_left(&self) -> BraidWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters.clone();
        let first = letters.remove(0);
        letters.push(first);
        BraidWord { strands: self.strands, letters }
    }

    /// Remove adjacent inverse pairs (also across the closure seam) and
    /// destabilize unique extremal generators where possible. Cheap cleanup,
    /// not a normal form.
    pub fn simplified(&self) -> BraidWord {
        let mut w = self.clone();
        loop {
            let before = (w.strands, w.len());
            w = w.cancel_free_cyclic();
            w = w.destabilize_all();
            if (w.strands, w.len()) == before {
                return w;
            }
        }
    }

    fn cancel_free_cyclic(&self) -> BraidWord {
        let mut letters = self.letters.clone();
        loop {
            let mut changed = false;
            let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
            for l in letters.iter().copied() {
                if let Some(&last) = out.last() {
                    if last.index == l.index && last.sign != l.sign {
                        out.pop();
                        changed = true;
                        continue;
                    }
                }
                out.push(l);
            }
            // cancellation across the closure seam
            while out.len() >= 2 {
                let first = out[0];
                let last = *out.last().unwrap();
                if first.index == last.index && first.sign != last.sign {
                    out.pop();
                    out.remove(0);
                    changed = true;
                } else {
                    break;
                }
            }
            letters = out;
            if !changed {
                break;
            }
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Markov destabilization wherever the extremal generator occurs exactly
    /// once (cyclic rotation makes a single interior occurrence terminal).
    fn destabilize_all(&self) -> BraidWord {
        let mut w = self.clone();
        loop {
            let mut changed = false;
            // top index s-1 occurring exactly once
            if w.strands > 1 {
                let top = w.strands - 1;
                let hits: Vec<usize> = w
                    .letters
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| l.index == top)
                    .map(|(i, _)| i)
                    .collect();
                if hits.len() == 1 {
                    let mut letters = w.letters.clone();
                    letters.remove(hits[0]);
                    w = BraidWord { strands: w.strands - 1, letters };
                    changed = true;
                }
            }
            // bottom index 1 occurring exactly once: flip, destabilize, flip
            if !changed && w.strands > 1 {
                let hits = w.letters.iter().filter(|l| l.index == 1).count();
                if hits == 1 {
                    let flipped = w.flip();
                    let top = flipped.strands - 1;
                    let idx = flipped.letters.iter().position(|l| l.index == top).unwrap();
                    let mut letters = flipped.letters;
                    letters.remove(idx);
                    w = BraidWord { strands: flipped.strands - 1, letters }.flip();
                    changed = true;
                }
            }
            if !changed {
                return w;
            }
        }
    }

    /// Text form `B<s>:<l1> <l2> ...`, bit-exact wire format.
    pub fn to_text(&self) -> String {
        let mut out = format!("B{}:", self.strands);
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&l.to_i64().to_string());
        }
        out
    }

    /// Parse the text form; errors carry the byte position of the offence.
    pub fn parse(text: &str) -> Result<BraidWord, BraidParseError> {
        let text = text.trim_end_matches(['\n', '\r']);
        if !text.starts_with('B') {
            return Err(BraidParseError { position: 0, message: "expected leading 'B'".into() });
        }
        let colon = text.find(':').ok_or(BraidParseError {
            position: text.len(),
            message: "missing ':' after strand count".into(),
        })?;
        let strands: u32 = text[1..colon].parse().map_err(|_| BraidParseError {
            position: 1,
            message: format!("invalid strand count {:?}", &text[1..colon]),
        })?;
        if strands == 0 {
            return Err(BraidParseError { position: 1, message: "strand count must be positive".into() });
        }
        let mut letters = Vec::new();
        let body = &text[colon + 1..];
        let mut cursor = 0usize;
        while cursor < body.len() {
            let rest = &body[cursor..];
            let skip = rest.len() - rest.trim_start().len();
            cursor += skip;
            if cursor >= body.len() {
                break;
            }
            let tok_len = body[cursor..]
                .find(char::is_whitespace)
                .unwrap_or(body.len() - cursor);
            let tok = &body[cursor..cursor + tok_len];
            let pos = colon + 1 + cursor;
            let v: i64 = tok.parse().map_err(|_| BraidParseError {
                position: pos,
                message: format!("invalid letter {tok:?}"),
            })?;
            if v == 0 {
                return Err(BraidParseError { position: pos, message: "letter 0 is not a generator".into() });
            }
            let index = v.unsigned_abs() as u32;
            if index >= strands {
                return Err(BraidParseError {
                    position: pos,
                    message: format!("generator {v} out of range for {strands} strands"),
                });
            }
            letters.push(Letter::new(index, if v > 0 { Sign::Positive } else { Sign::Negative }));
            cursor += tok_len;
        }
        Ok(BraidWord { strands, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `((σ_a ⋯ σ_{a+k-2})^k)^reps`: `reps` full twists on the `k` strands
/// starting at position `start` (1-based). `k(k-1)` crossings per twist.
pub fn full_twist_block(start: u32, width: u32, sign: Sign, reps: u32) -> Vec<Letter> {
    assert!(start >= 1 && width >= 1);
    let mut letters = Vec::new();
    if width == 1 {
        return letters;
    }
    for _ in 0..reps {
        for _ in 0..width {
            for i in start..start + width - 1 {
                letters.push(Letter::new(i, sign));
            }
        }
    }
    letters
}

/// Block exchange: the `a` strands at `[start, start+a)` trade places with the
/// `b` strands at `[start+a, start+a+b)`, each pair crossing once. `a·b`
/// letters of uniform sign; positive means the left block passes over.
pub fn pass_block(start: u32, a: u32, b: u32, sign: Sign) -> Vec<Letter> {
    assert!(start >= 1);
    let mut letters = Vec::new();
    if a == 0 || b == 0 {
        return letters;
    }
    for j in (0..a).rev() {
        let from = start + j;
        for i in from..from + b {
            letters.push(Letter::new(i, sign));
        }
    }
    letters
}

/// Full relative twist of two adjacent blocks: they wrap around each other
/// once (2ab crossings) and return to their original positions.
pub fn clasp_block(start: u32, a: u32, b: u32, sign: Sign) -> Vec<Letter> {
    let mut letters = pass_block(start, a, b, sign);
    letters.extend(pass_block(start, b, a, sign));
    letters
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(strands: u32, signed: &[i64]) -> BraidWord {
        BraidWord::from_signed(strands, signed).unwrap()
    }

    #[test]
    fn full_twist_counts() {
        assert_eq!(full_twist_block(1, 3, Sign::Negative, 2).len(), 12);
        assert_eq!(full_twist_block(1, 1, Sign::Negative, 5).len(), 0);
        let w = full_twist_block(1, 2, Sign::Positive, 1);
        assert_eq!(w.len(), 2);
        assert!(w.iter().all(|l| l.index == 1 && l.sign == Sign::Positive));
    }

    #[test]
    fn full_twist_is_pure() {
        let mut w = BraidWord::identity(5);
        w.extend(full_twist_block(2, 4, Sign::Negative, 3));
        assert_eq!(w.permutation(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn pass_block_counts_and_permutation() {
        assert_eq!(pass_block(1, 1, 1, Sign::Negative).len(), 1);
        assert_eq!(pass_block(1, 2, 3, Sign::Negative).len(), 6);
        assert_eq!(pass_block(1, 3, 1, Sign::Positive).len(), 3);
        let mut w = BraidWord::identity(5);
        w.extend(pass_block(1, 2, 3, Sign::Positive));
        // block [1,2] trades with [3,4,5]
        assert_eq!(w.permutation(), vec![3, 4, 0, 1, 2]);
    }

    #[test]
    fn crossing_counts_examples() {
        assert_eq!(word(2, &[1, 1, 1]).crossing_counts(), CrossingCounts { k_plus: 3, k_minus: 0 });
        assert_eq!(BraidWord::identity(2).crossing_counts(), CrossingCounts { k_plus: 0, k_minus: 0 });
        let mut w = BraidWord::identity(3);
        w.extend(full_twist_block(1, 3, Sign::Negative, 2));
        assert_eq!(w.crossing_counts(), CrossingCounts { k_plus: 0, k_minus: 12 });
    }

    #[test]
    fn closure_component_examples() {
        assert_eq!(word(2, &[1]).closure_components(), 1);
        assert_eq!(word(2, &[1, 1]).closure_components(), 2);
        assert_eq!(BraidWord::identity(3).closure_components(), 3);
    }

    #[test]
    fn sign_class_examples() {
        assert_eq!(word(3, &[-1, -2]).sign_class(), SignClass::Negative);
        assert_eq!(word(3, &[1, -2]).sign_class(), SignClass::Mixed);
        assert_eq!(word(3, &[1, 2]).sign_class(), SignClass::Positive);
        assert_eq!(BraidWord::identity(1).sign_class(), SignClass::Empty);
    }

    #[test]
    fn counts_additive_under_concat() {
        let a = word(3, &[1, -2, 1]);
        let b = word(3, &[-1, -1]);
        let c = a.concat(&b);
        let (ca, cb, cc) = (a.crossing_counts(), b.crossing_counts(), c.crossing_counts());
        assert_eq!(cc.k_plus, ca.k_plus + cb.k_plus);
        assert_eq!(cc.k_minus, ca.k_minus + cb.k_minus);
    }

    #[test]
    fn components_invariant_under_markov() {
        let w = word(3, &[1, -2, -2, 1]);
        let c = w.closure_components();
        assert_eq!(w.conjugate(Letter::new(2, Sign::Positive)).closure_components(), c);
        assert_eq!(w.stabilize(Sign::Negative).closure_components(), c);
    }

    #[test]
    fn text_round_trip() {
        let w = word(3, &[1, -2, -2]);
        assert_eq!(w.to_text(), "B3:1 -2 -2");
        assert_eq!(BraidWord::parse("B3:1 -2 -2").unwrap(), w);
        assert_eq!(BraidWord::parse("B4:").unwrap(), BraidWord::identity(4));
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = BraidWord::parse("B3:1 x").unwrap_err();
        assert!(e.position > 0);
        assert!(BraidWord::parse("3:1").is_err());
        assert!(BraidWord::parse("B2:2").is_err()); // out of range
        assert!(BraidWord::parse("B2:0").is_err());
    }

    #[test]
    fn simplify_destabilizes() {
        // σ1 σ2 on 3 strands closes to the unknot
        let w = word(3, &[1, 2]).simplified();
        assert_eq!(w.strands(), 1);
        assert!(w.is_empty());
    }
}
