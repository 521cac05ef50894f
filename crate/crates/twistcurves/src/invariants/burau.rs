//! Alexander polynomial of braid closures via the reduced Burau matrix.
//!
//! The reduced Burau representation is taken over `ℤ[x^{±1}]` with exact
//! `BigInt` coefficients. For a braid `β` on `s` strands whose closure is a
//! knot,
//!
//! ```text
//! Δ(x) · (1 + x + ... + x^{s-1}) = ± x^k · det(I - Burau_reduced(β))
//! ```
//!
//! and the unit ambiguity is removed by symmetric centering.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::poly::LaurentPoly;
use crate::braid::{BraidWord, Sign};

type Poly = LaurentPoly<BigInt>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlexanderError {
    #[error("closure has {components} components; the Alexander oracle handles knots only")]
    MultiComponent { components: u32 },
}

/// Dense square matrix over the Laurent ring. Dimensions stay small (braid
/// strand counts), so no sparsity tricks.
#[derive(Clone, Debug, PartialEq)]
struct PolyMatrix {
    n: usize,
    a: Vec<Poly>,
}

impl PolyMatrix {
    fn identity(n: usize) -> PolyMatrix {
        let mut a = vec![Poly::zero(); n * n];
        for i in 0..n {
            a[i * n + i] = Poly::one();
        }
        PolyMatrix { n, a }
    }

    fn at(&self, i: usize, j: usize) -> &Poly {
        &self.a[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.a[i * self.n + j] = v;
    }

    /// `self * rhs` where `rhs` differs from the identity only in the rows
    /// listed in `rows`. Cost `O(n · |rows|)` polynomial operations.
    fn mul_sparse_rows(&self, rhs_rows: &[(usize, Vec<(usize, Poly)>)]) -> PolyMatrix {
        let n = self.n;
        let mut out = self.clone();
        // column j of the product changes only if some row r in rhs with
        // rhs[r][j] != δ_{rj} exists; recompute affected columns directly.
        let mut touched: Vec<usize> = Vec::new();
        for (_, cols) in rhs_rows {
            for (j, _) in cols {
                if !touched.contains(j) {
                    touched.push(*j);
                }
            }
        }
        for &(r, _) in rhs_rows {
            if !touched.contains(&r) {
                touched.push(r);
            }
        }
        for &j in &touched {
            for i in 0..n {
                // (A·B)_{ij} = Σ_k A_{ik} B_{kj}; B_{kj} = δ_{kj} except for
                // rows k present in rhs_rows.
                let mut acc = self.at(i, j).clone();
                let mut replaced_diag = false;
                let mut sum = Poly::zero();
                for (r, cols) in rhs_rows {
                    let b = cols
                        .iter()
                        .find(|(c, _)| *c == j)
                        .map(|(_, p)| p.clone())
                        .unwrap_or_else(Poly::zero);
                    if *r == j {
                        replaced_diag = true;
                    }
                    if !b.is_zero() {
                        sum = sum + self.at(i, *r).clone() * b;
                    }
                }
                if replaced_diag {
                    acc = sum;
                } else {
                    acc = acc + sum;
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Fraction-free Bareiss determinant; divisions are exact in the ring.
    fn determinant(mut self) -> Poly {
        let n = self.n;
        if n == 0 {
            return Poly::one();
        }
        let mut sign_flip = false;
        let mut prev_pivot = Poly::one();
        for k in 0..n - 1 {
            if self.at(k, k).is_zero() {
                let swap = (k + 1..n).find(|&r| !self.at(r, k).is_zero());
                match swap {
                    Some(r) => {
                        for j in 0..n {
                            let tmp = self.at(k, j).clone();
                            let other = self.at(r, j).clone();
                            self.set(k, j, other);
                            self.set(r, j, tmp);
                        }
                        sign_flip = !sign_flip;
                    }
                    None => return Poly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = self.at(i, j).clone() * self.at(k, k).clone()
                        - self.at(i, k).clone() * self.at(k, j).clone();
                    let q = num.div_exact(&prev_pivot).expect("Bareiss division is exact");
                    self.set(i, j, q);
                }
                self.set(i, k, Poly::zero());
            }
            prev_pivot = self.at(k, k).clone();
        }
        let det = self.at(n - 1, n - 1).clone();
        if sign_flip {
            -det
        } else {
            det
        }
    }
}

/// The reduced Burau matrix of one letter, described by the rows that differ
/// from the identity. A listed row replaces the identity row entirely; the
/// entries not given are zero.
///
/// Basis: f_j = image of e_{j+1} in ℤ^s/(1,...,1), j = 0..s-2, so
/// f_{s-1} = -(f_0 + ... + f_{s-2}). The unreduced block of σ_i is
/// [[1-x, x], [1, 0]] acting on columns (e_i, e_{i+1}).
fn reduced_burau_rows(strands: u32, index: u32, sign: Sign) -> Vec<(usize, Vec<(usize, Poly)>)> {
    let s = strands as usize;
    let n = s - 1;
    let i = index as usize;
    let one = Poly::one;
    let x = Poly::variable;
    let xinv = || Poly::monomial(-1, BigInt::one());
    let r = i - 1;
    if i < s - 1 {
        match sign {
            Sign::Positive => vec![
                (r, vec![(r, one() - x()), (r + 1, x())]),
                (r + 1, vec![(r, one())]),
            ],
            Sign::Negative => vec![
                (r, vec![(r + 1, one())]),
                (r + 1, vec![(r, xinv()), (r + 1, one() - xinv())]),
            ],
        }
    } else {
        // last generator: the quotient relation folds strand s into -Σ f_j,
        // so only column r changes: (-1,...,-1,-x) for σ, all -x⁻¹ for σ⁻¹.
        (0..n)
            .map(|j| {
                let col_r = match sign {
                    Sign::Positive if j == r => -x(),
                    Sign::Positive => -one(),
                    Sign::Negative => -xinv(),
                };
                let row = if j == r {
                    vec![(r, col_r)]
                } else {
                    vec![(j, one()), (r, col_r)]
                };
                (j, row)
            })
            .collect()
    }
}

/// Reduced Burau matrix of a whole word.
fn reduced_burau(word: &BraidWord) -> PolyMatrix {
    let s = word.strands();
    let n = (s - 1) as usize;
    let mut acc = PolyMatrix::identity(n);
    for l in word.letters() {
        let rows = reduced_burau_rows(s, l.index, l.sign);
        acc = acc.mul_sparse_rows(&rows);
    }
    acc
}

/// Alexander polynomial of the closure of `word`, symmetric-centered with
/// positive leading coefficient. Errors on multi-component closures.
pub fn alexander(word: &BraidWord) -> Result<Poly, AlexanderError> {
    let components = word.closure_components();
    if components != 1 {
        return Err(AlexanderError::MultiComponent { components });
    }
    let s = word.strands();
    if s == 1 {
        return Ok(Poly::one());
    }
    let n = (s - 1) as usize;
    let burau = reduced_burau(word);
    let mut diff = PolyMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let v = diff.at(i, j).clone() - burau.at(i, j).clone();
            diff.set(i, j, v);
        }
    }
    let det = diff.determinant();
    let cyclotomic = Poly::from_terms((0..s as i64).map(|e| (e, BigInt::one())));
    let quotient = det
        .div_exact(&cyclotomic)
        .expect("det(I - Burau) divisible by 1 + x + ... + x^{s-1} for knot closures");
    let normalized = quotient.unit_normalized();
    debug_assert!(normalized.is_palindromic(), "Alexander polynomial must be palindromic");
    Ok(normalized)
}

/// `|Δ(1)|` computed by specializing the Burau matrix at `x = 1` first.
/// Equals 1 for every knot closure; kept as a cheap pipeline check that a
/// word really closes to a knot.
pub fn alexander_at_one(word: &BraidWord) -> Result<BigInt, AlexanderError> {
    let components = word.closure_components();
    if components != 1 {
        return Err(AlexanderError::MultiComponent { components });
    }
    let s = word.strands() as usize;
    if s == 1 {
        return Ok(BigInt::one());
    }
    let n = s - 1;
    // reduced Burau at x = 1: permutation action on ℤ^s / (1,...,1)
    let mut m = vec![BigInt::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = BigInt::one();
    }
    for l in word.letters() {
        let i = (l.index - 1) as usize; // swap e_i, e_{i+1} (0-based)
        // right-multiply acc by the swap's quotient matrix: exchanges columns
        // i and i+1 when i+1 < n; for i+1 = n, column i becomes -sum of all.
        if i + 1 < n {
            for r in 0..n {
                m.swap(r * n + i, r * n + i + 1);
            }
        } else {
            for r in 0..n {
                let mut sum = BigInt::zero();
                for c in 0..n {
                    sum += &m[r * n + c];
                }
                m[r * n + i] = -sum;
            }
        }
    }
    // det(I - M) = ± s for an s-cycle; return |det| / s
    let mut diff = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let idm = if i == j { BigInt::one() } else { BigInt::zero() };
            diff[i * n + j] = idm - &m[i * n + j];
        }
    }
    let det = bigint_determinant(diff, n);
    let s_big = BigInt::from(s);
    let (q, r) = num_integer::Integer::div_rem(&det.abs(), &s_big);
    assert!(r.is_zero(), "det(I - Burau(1)) must be divisible by the strand count");
    Ok(q)
}

fn bigint_determinant(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let swap = (k + 1..n).find(|&r| !a[r * n + k].is_zero());
            match swap {
                Some(r) => {
                    for j in 0..n {
                        a.swap(k * n + j, r * n + j);
                    }
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                let (q, r) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(r.is_zero());
                a[i * n + j] = q;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = a[k * n + k].clone();
    }
    let det = a[(n - 1) * n + (n - 1)].clone();
    if sign {
        -det
    } else {
        det
    }
}
