//! Sparse multivariate Laurent polynomials with integer coefficients.
//!
//! Exponents are half-integers stored doubled: the monomial `x_j^{1/2}` has
//! doubled exponent `1` in slot `j`. Terms are kept in a `BTreeMap` keyed by
//! the exponent vector, so iteration runs in lexicographic order with the
//! first variable most significant and the leading term is the last entry.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Doubled exponents of a monomial, compared lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(SmallVec<[i32; 6]>);

impl ExponentVector {
    pub fn from_doubled(doubled: &[i32]) -> Self {
        Self(SmallVec::from_slice(doubled))
    }

    pub fn zero(rank: usize) -> Self {
        Self(SmallVec::from_elem(0, rank))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// The stored (doubled) entries.
    pub fn doubled(&self) -> &[i32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i32) -> Self {
        Self(self.0.iter().map(|e| e * k).collect())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}/2", self.0.as_slice())
    }
}

/// Element of `Z[x_1^{±1/2}, …, x_m^{±1/2}]` in canonical form (no zero
/// coefficients are ever stored).
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    rank: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, BigInt::one())
    }

    pub fn constant(rank: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(ExponentVector::zero(rank), c)
    }

    pub fn monomial(exponent: ExponentVector, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let rank = exponent.rank();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        Self { rank, terms }
    }

    /// `x_var^{doubled/2}`.
    pub fn variable_power(rank: usize, var: usize, doubled: i32) -> Self {
        let mut e = ExponentVector::zero(rank);
        e.0[var] = doubled;
        Self::monomial(e, 1)
    }

    /// Builds a polynomial from `(doubled exponents, coefficient)` pairs,
    /// summing repeated exponents.
    pub fn from_terms<I, C>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            if e.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: e.rank(),
                });
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &ExponentVector) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.rank);
        }
        Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Adams operation `ψ^k`: every exponent is multiplied by `k`.
    pub fn adams(&self, k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidAdamsDegree(k));
        }
        let k = i32::try_from(k).map_err(|_| Error::InvalidAdamsDegree(k))?;
        Ok(Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.scale(k), c.clone()))
                .collect(),
        })
    }

    /// The lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.last_key_value()
    }

    /// Sum of coefficients, i.e. the value at `x_1 = … = x_m = 1`.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Divides every coefficient by `d`, failing unless each is a multiple.
    pub fn divide_coefficients_exact(&self, d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "coefficient {c} of {e:?} is not divisible by {d}"
                )));
            }
            terms.insert(e.clone(), q);
        }
        Ok(Self {
            rank: self.rank,
            terms,
        })
    }

    /// Per-coordinate minimum and maximum of the exponents (the bounding box
    /// of the Newton polytope).
    fn exponent_box(&self) -> Option<(Vec<i32>, Vec<i32>)> {
        let mut iter = self.terms.keys();
        let first = iter.next()?;
        let mut lo = first.doubled().to_vec();
        let mut hi = lo.clone();
        for e in iter {
            for (j, &x) in e.doubled().iter().enumerate() {
                lo[j] = lo[j].min(x);
                hi[j] = hi[j].max(x);
            }
        }
        Some((lo, hi))
    }

    /// Exact quotient `self / den` by long division on leading terms.
    ///
    /// Any remainder is an error. The Newton polytope of an exact quotient is
    /// the Minkowski difference of those of `self` and `den`, so candidate
    /// quotient exponents outside that box also fail immediately; this keeps
    /// the loop finite in the Laurent ring, where lex order has no minimum.
    pub fn exact_divide(&self, den: &Self) -> Result<Self> {
        self.check_rank(den)?;
        let (den_lead_exp, den_lead_coeff) = den.leading_term().ok_or(Error::DivisionByZero)?;
        let (den_lead_exp, den_lead_coeff) = (den_lead_exp.clone(), den_lead_coeff.clone());
        let mut quotient = Self::zero(self.rank);
        let Some((num_lo, num_hi)) = self.exponent_box() else {
            return Ok(quotient);
        };
        let (den_lo, den_hi) = den.exponent_box().expect("non-zero divisor");
        let q_lo: Vec<i32> = num_lo.iter().zip(&den_lo).map(|(a, b)| a - b).collect();
        let q_hi: Vec<i32> = num_hi.iter().zip(&den_hi).map(|(a, b)| a - b).collect();

        let mut rem = self.clone();
        while let Some((rem_exp, rem_coeff)) = rem.leading_term() {
            let q_exp = rem_exp.sub(&den_lead_exp);
            let in_box = q_exp
                .doubled()
                .iter()
                .enumerate()
                .all(|(j, &x)| q_lo[j] <= x && x <= q_hi[j]);
            if !in_box {
                return Err(Error::InexactDivision(format!(
                    "remainder term {rem_exp:?} is not reachable by the divisor"
                )));
            }
            let (q_coeff, r) = rem_coeff.div_rem(&den_lead_coeff);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "coefficient {rem_coeff} not divisible by {den_lead_coeff}"
                )));
            }
            for (e, c) in &den.terms {
                rem.add_term(e.add(&q_exp), -(c * &q_coeff));
            }
            quotient.add_term(q_exp, q_coeff);
        }
        Ok(quotient)
    }

    /// Applies `x_j ↦ x_{perm[j]}`.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: perm.len(),
            });
        }
        let mut seen = vec![false; self.rank];
        for &p in perm {
            if p >= self.rank || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out = ExponentVector::zero(self.rank);
                for (j, &x) in e.doubled().iter().enumerate() {
                    out.0[perm[j]] = x;
                }
                (out, c.clone())
            })
            .collect();
        Ok(Self {
            rank: self.rank,
            terms,
        })
    }

    /// Applies `x_var ↦ x_var^{-1}`.
    pub fn invert_variable(&self, var: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out = e.clone();
                out.0[var] = -out.0[var];
                (out, c.clone())
            })
            .collect();
        Self {
            rank: self.rank,
            terms,
        }
    }

    /// Inverts every variable at once.
    pub fn invert_all(&self) -> Self {
        Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.scale(-1), c.clone()))
                .collect(),
        }
    }

    /// True when every coefficient is positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Prints terms from the leading one down, e.g. `x1^(1/2)*x2^(-1) + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut factors = Vec::new();
            for (j, &x) in e.doubled().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let exp = if x % 2 == 0 {
                    (x / 2).to_string()
                } else {
                    format!("{x}/2")
                };
                if exp == "1" {
                    factors.push(format!("x{}", j + 1));
                } else {
                    factors.push(format!("x{}^({exp})", j + 1));
                }
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
