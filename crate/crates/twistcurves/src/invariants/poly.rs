//! Exact Laurent polynomials in one variable.
//!
//! Coefficients are any exact signed ring scalar (`i64`, `BigInt`, ...);
//! all invariant computations stay in integer arithmetic, so equality tests
//! are exact. The zero polynomial is the empty coefficient map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

/// Coefficient ring bound: exact signed scalars with certified division.
pub trait Coeff:
    Clone + Eq + Zero + One + Signed + Neg<Output = Self> + fmt::Display + fmt::Debug
{
    /// `Some(a / b)` when `b` divides `a` exactly, `None` otherwise.
    fn div_exact(a: &Self, b: &Self) -> Option<Self>;
}

macro_rules! impl_coeff_int {
    ($($t:ty),*) => {$(
        impl Coeff for $t {
            fn div_exact(a: &Self, b: &Self) -> Option<Self> {
                if *b == 0 || a % b != 0 { None } else { Some(a / b) }
            }
        }
    )*};
}

impl_coeff_int!(i8, i16, i32, i64, i128);

impl Coeff for num_bigint::BigInt {
    fn div_exact(a: &Self, b: &Self) -> Option<Self> {
        use num_integer::Integer;
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

/// Laurent polynomial with exponents in `ℤ`. No zero coefficient is stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C: Coeff> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// The variable `x`.
    pub fn variable() -> Self {
        Self::monomial(1, C::one())
    }

    pub fn monomial(exponent: i64, coeff: C) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn add_term(&mut self, exponent: i64, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(C::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn coeff(&self, exponent: i64) -> C {
        self.terms.get(&exponent).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exponent - min_exponent`, or 0 for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Multiply by `x^k`.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scaled(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (e, k) in &self.terms {
            out.add_term(*e, k.clone() * c.clone());
        }
        out
    }

    /// Substitute `x ↦ x⁻¹`.
    pub fn reciprocal(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Evaluate at a unit (`x = ±1`); the only points where negative
    /// exponents stay in the ring.
    pub fn eval_unit(&self, x: &C) -> C {
        assert!((x.clone() * x.clone()).is_one(), "eval_unit expects x = ±1");
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            if e % 2 == 0 {
                acc = acc + c.clone();
            } else {
                acc = acc + c.clone() * x.clone();
            }
        }
        acc
    }

    /// Long division; `None` if the divisor does not divide exactly.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_hi = divisor.max_exponent().unwrap();
        let d_lead = divisor.coeff(d_hi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            if rem.span() < divisor.span() {
                return None;
            }
            let r_hi = rem.max_exponent().unwrap();
            let q = C::div_exact(&rem.coeff(r_hi), &d_lead)?;
            let shift = r_hi - d_hi;
            quot.add_term(shift, q.clone());
            rem = rem - divisor.shifted(shift).scaled(&q);
        }
        Some(quot)
    }

    /// Invariant under `x ↦ x⁻¹` after centering.
    pub fn is_palindromic(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let lo = self.min_exponent().unwrap();
        let hi = self.max_exponent().unwrap();
        if (lo + hi) % 2 != 0 {
            return false;
        }
        let centered = self.shifted(-(lo + hi) / 2);
        centered == centered.reciprocal()
    }

    /// Multiply by `±x^k` so the exponent range is centered (lowest exponent
    /// `-⌊span/2⌋`) and the leading coefficient is positive.
    pub fn unit_normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lo = self.min_exponent().unwrap();
        let span = self.span();
        let target_lo = -(span / 2);
        let mut out = self.shifted(target_lo - lo);
        if out.coeff(out.max_exponent().unwrap()).is_negative() {
            out = -out;
        }
        out
    }
}

impl<C: Coeff> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self;
        for (e, c) in rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl<C: Coeff> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        self + (-rhs)
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<C: Coeff> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    /// Terms in ascending exponent: `t^-1 - 1 + t`, `2*t^-1 - 3 + 2*t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<i64>;

    #[test]
    fn ring_basics() {
        let x = P::variable();
        let one = P::one();
        let p = (x.clone() - one.clone()) * (x + one);
        assert_eq!(p, P::from_terms([(2, 1), (0, -1)]));
        let q = P::from_terms([(-3, 2), (0, 5)]);
        assert!((q.clone() + (-q)).is_zero());
    }

    #[test]
    fn unit_normalize_examples() {
        // -x^-3 + x^-2 normalizes to x - 1 (span 1, leading coefficient +1)
        let p = P::from_terms([(-3, -1), (-2, 1)]);
        assert_eq!(p.unit_normalized(), P::from_terms([(1, 1), (0, -1)]));
        // trefoil shape centers symmetrically
        let t = P::from_terms([(0, 1), (1, -1), (2, 1)]);
        assert_eq!(t.unit_normalized(), P::from_terms([(-1, 1), (0, -1), (1, 1)]));
    }

    #[test]
    fn display_format() {
        let p = P::from_terms([(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(p.to_string(), "t^-1 - 1 + t");
        let q = P::from_terms([(-1, 2), (0, -3), (1, 2)]);
        assert_eq!(q.to_string(), "2*t^-1 - 3 + 2*t");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::one().to_string(), "1");
        assert_eq!(P::from_terms([(2, -1), (0, 1)]).to_string(), "1 - t^2");
    }

    #[test]
    fn exact_division() {
        // (1 + x + x^2 + x^3) / (1 + x) = 1 + x^2
        let a = P::from_terms([(0, 1), (1, 1), (2, 1), (3, 1)]);
        let b = P::from_terms([(0, 1), (1, 1)]);
        assert_eq!(a.div_exact(&b), Some(P::from_terms([(0, 1), (2, 1)])));
        let c = P::from_terms([(0, 1), (1, 1), (2, 1)]);
        assert_eq!(c.div_exact(&b), None);
    }

    #[test]
    fn palindromic_check() {
        assert!(P::from_terms([(-1, 1), (0, -3), (1, 1)]).is_palindromic());
        assert!(!P::from_terms([(0, 1), (1, 1), (2, -1)]).is_palindromic());
    }

    #[test]
    fn eval_at_units() {
        let p = P::from_terms([(-1, 2), (0, -3), (1, 2)]);
        assert_eq!(p.eval_unit(&1), 1);
        assert_eq!(p.eval_unit(&-1), -7);
    }
}
