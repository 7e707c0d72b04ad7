//! Representations of `so(2m+1)`: highest weights, Weyl characters,
//! exterior powers through the Adams recurrence, and the peel-off
//! decomposition of a character into irreducibles.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::laurent::{ExponentVector, LaurentPolynomial};

/// Dominant weight `[λ_1, …, λ_m]` with entries stored doubled.
///
/// Ordering is lexicographic on the entries, which is also the order the
/// leading-term search uses.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HighestWeight(SmallVec<[i32; 6]>);

impl HighestWeight {
    /// Validates weakly decreasing, non-negative entries of uniform parity.
    pub fn from_doubled(doubled: &[i32]) -> Result<Self> {
        if doubled.is_empty() {
            return Err(Error::InvalidWeight("empty weight".into()));
        }
        if doubled.iter().any(|&d| d < 0) {
            return Err(Error::InvalidWeight(format!(
                "negative entry in {doubled:?}/2"
            )));
        }
        if doubled.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWeight(format!(
                "entries of {doubled:?}/2 are not weakly decreasing"
            )));
        }
        let parity = doubled[0].rem_euclid(2);
        if doubled.iter().any(|d| d.rem_euclid(2) != parity) {
            return Err(Error::InvalidWeight(format!(
                "entries of {doubled:?}/2 mix integers and half-integers"
            )));
        }
        Ok(Self(SmallVec::from_slice(doubled)))
    }

    pub fn from_exponent(e: &ExponentVector) -> Result<Self> {
        Self::from_doubled(e.doubled())
    }

    pub fn trivial(rank: usize) -> Self {
        Self(SmallVec::from_elem(0, rank))
    }

    /// `[1/2, …, 1/2]`.
    pub fn spin(rank: usize) -> Self {
        Self(SmallVec::from_elem(1, rank))
    }

    /// `[1, 0, …, 0]`.
    pub fn standard(rank: usize) -> Self {
        let mut v = SmallVec::from_elem(0, rank);
        v[0] = 2;
        Self(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn doubled(&self) -> &[i32] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn to_exponent(&self) -> ExponentVector {
        ExponentVector::from_doubled(&self.0)
    }

    /// Entries as exact strings: `"3/2"`, `"1"`, `"0"`.
    pub fn entry_strings(&self) -> Vec<String> {
        self.0.iter().map(|&d| format_half(d)).collect()
    }
}

fn format_half(d: i32) -> String {
    if d % 2 == 0 {
        (d / 2).to_string()
    } else {
        format!("{d}/2")
    }
}

fn parse_half(s: &str) -> Result<i32> {
    let s = s.trim();
    let bad = || Error::InvalidWeight(format!("cannot parse entry {s:?}"));
    match s.split_once('/') {
        Some((p, "2")) => p.trim().parse::<i32>().map_err(|_| bad()),
        Some(_) => Err(bad()),
        None => s
            .parse::<i32>()
            .map_err(|_| bad())?
            .checked_mul(2)
            .ok_or_else(bad),
    }
}

impl HighestWeight {
    /// Parses entries written as `"p"` or `"p/2"`.
    pub fn from_entries<S: AsRef<str>>(entries: &[S]) -> Result<Self> {
        let doubled = entries
            .iter()
            .map(|s| parse_half(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_doubled(&doubled)
    }
}

impl FromStr for HighestWeight {
    type Err = Error;

    /// Comma-separated entries, optionally in brackets: `"3/2,1/2,1/2"`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts: Vec<&str> = inner.split(',').collect();
        Self::from_entries(&parts)
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.entry_strings().join(","))
    }
}

impl fmt::Debug for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for HighestWeight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entry_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HighestWeight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<String>::deserialize(deserializer)?;
        Self::from_entries(&entries).map_err(serde::de::Error::custom)
    }
}

/// Direct sum `⊕ n_λ Γ_λ`, multiplicities strictly positive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    rank: usize,
    parts: BTreeMap<HighestWeight, u64>,
}

impl Decomposition {
    pub fn new(rank: usize) -> Self {
        Self {
            rank,
            parts: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn insert(&mut self, weight: HighestWeight, mult: u64) -> Result<()> {
        if weight.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: weight.rank(),
            });
        }
        if mult > 0 {
            *self.parts.entry(weight).or_default() += mult;
        }
        Ok(())
    }

    pub fn multiplicity(&self, weight: &HighestWeight) -> u64 {
        self.parts.get(weight).copied().unwrap_or(0)
    }

    /// Summands in ascending lexicographic order of highest weight.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&HighestWeight, u64)> + '_ {
        self.parts.iter().map(|(w, &m)| (w, m))
    }

    /// Number of distinct irreducible summands.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of multiplicity times Weyl dimension.
    pub fn dimension(&self) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (w, m) in self.iter() {
            total += weyl_dim(w)? * m;
        }
        Ok(total)
    }
}

/// Which fundamental module [`TypeB::base_character`] returns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseRep {
    Standard,
    Spin,
}

/// Weyl dimension formula for type B, evaluated in exact arithmetic.
pub fn weyl_dim(lam: &HighestWeight) -> Result<BigInt> {
    let m = lam.rank() as i64;
    // Doubled shifted weights: 2(λ_i + m - i + 1/2) and 2(m - i + 1/2), i from 1.
    let l: Vec<i64> = lam
        .doubled()
        .iter()
        .enumerate()
        .map(|(i, &d)| d as i64 + 2 * (m - i as i64) - 1)
        .collect();
    let rho: Vec<i64> = (0..m).map(|i| 2 * (m - i) - 1).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            num *= l[i] * l[i] - l[j] * l[j];
            den *= rho[i] * rho[i] - rho[j] * rho[j];
        }
        num *= l[i];
        den *= rho[i];
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NonIntegralDimension(lam.to_string()));
    }
    Ok(q)
}

/// `so(2m+1)` of a fixed rank with memoized irreducible characters.
pub struct TypeB {
    rank: usize,
    denominator: LaurentPolynomial,
    cache: RwLock<HashMap<HighestWeight, Arc<LaurentPolynomial>>>,
}

impl fmt::Debug for TypeB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TypeB")
            .field("rank", &self.rank)
            .finish_non_exhaustive()
    }
}

impl TypeB {
    pub fn new(rank: usize) -> Self {
        assert!(rank >= 1, "so(2m+1) needs m >= 1");
        let rho: Vec<i32> = (0..rank).map(|i| 2 * (rank - i) as i32 - 1).collect();
        Self {
            rank,
            denominator: alternant(rank, &rho),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn check_weight(&self, lam: &HighestWeight) -> Result<()> {
        if lam.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: lam.rank(),
            });
        }
        Ok(())
    }

    /// Character of `Γ_λ` as a quotient of two alternants.
    pub fn weyl_character(&self, lam: &HighestWeight) -> Result<Arc<LaurentPolynomial>> {
        self.check_weight(lam)?;
        if let Some(c) = self
            .cache
            .read()
            .expect("character cache poisoned")
            .get(lam)
        {
            return Ok(Arc::clone(c));
        }
        let m = self.rank;
        let shifted: Vec<i32> = lam
            .doubled()
            .iter()
            .enumerate()
            .map(|(i, &d)| d + 2 * (m - i) as i32 - 1)
            .collect();
        let numerator = alternant(m, &shifted);
        let c = Arc::new(numerator.exact_divide(&self.denominator)?);
        let mut cache = self.cache.write().expect("character cache poisoned");
        Ok(Arc::clone(cache.entry(lam.clone()).or_insert(c)))
    }

    pub fn base_character(&self, which: BaseRep) -> LaurentPolynomial {
        let m = self.rank;
        match which {
            BaseRep::Standard => {
                let mut terms = vec![(ExponentVector::zero(m), 1)];
                for j in 0..m {
                    for s in [2, -2] {
                        let mut e = vec![0; m];
                        e[j] = s;
                        terms.push((ExponentVector::from_doubled(&e), 1));
                    }
                }
                LaurentPolynomial::from_terms(m, terms).expect("rank-consistent terms")
            }
            BaseRep::Spin => {
                let terms = (0..1u64 << m).map(|mask| {
                    let e: Vec<i32> = (0..m)
                        .map(|j| if mask >> j & 1 == 1 { 1 } else { -1 })
                        .collect();
                    (ExponentVector::from_doubled(&e), 1)
                });
                LaurentPolynomial::from_terms(m, terms).expect("rank-consistent terms")
            }
        }
    }

    /// Peels irreducible characters off `c` by leading term until nothing is
    /// left.
    pub fn decompose(&self, c: &LaurentPolynomial) -> Result<Decomposition> {
        if c.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: c.rank(),
            });
        }
        let mut rest = c.clone();
        let mut out = Decomposition::new(self.rank);
        let mut previous: Option<ExponentVector> = None;
        while let Some((e, n)) = rest.leading_term() {
            if previous.as_ref().is_some_and(|p| e >= p) {
                return Err(Error::NotACharacter(format!(
                    "leading exponent {e:?} did not decrease"
                )));
            }
            let lam = HighestWeight::from_exponent(e).map_err(|err| {
                Error::NotACharacter(format!("leading exponent {e:?} is not dominant ({err})"))
            })?;
            if !n.is_positive() {
                return Err(Error::NotACharacter(format!(
                    "leading coefficient {n} of {lam} is not positive"
                )));
            }
            let mult = n.to_u64().ok_or_else(|| {
                Error::NotACharacter(format!("multiplicity {n} of {lam} is out of range"))
            })?;
            let irreducible = self.weyl_character(&lam)?;
            previous = Some(e.clone());
            rest = rest.sub(&irreducible.scale(&BigInt::from(mult)))?;
            out.insert(lam, mult)?;
        }
        Ok(out)
    }

    /// `Σ n_λ Char(Γ_λ)`.
    pub fn recombine(&self, d: &Decomposition) -> Result<LaurentPolynomial> {
        if d.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: d.rank(),
            });
        }
        let mut total = LaurentPolynomial::zero(self.rank);
        for (w, m) in d.iter() {
            total = total.add(&self.weyl_character(w)?.scale(&BigInt::from(m)))?;
        }
        Ok(total)
    }
}

/// `det(x_j^{e_i/2} - x_j^{-e_i/2})` by Leibniz expansion.
fn alternant(rank: usize, doubled: &[i32]) -> LaurentPolynomial {
    let entry = |i: usize, j: usize| {
        LaurentPolynomial::variable_power(rank, j, doubled[i])
            .sub(&LaurentPolynomial::variable_power(rank, j, -doubled[i]))
            .expect("same rank")
    };
    let mut det = LaurentPolynomial::zero(rank);
    for (perm, sign) in permutations(rank) {
        let mut term = LaurentPolynomial::one(rank);
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(&entry(i, j)).expect("same rank");
        }
        det = if sign > 0 {
            det.add(&term)
        } else {
            det.sub(&term)
        }
        .expect("same rank");
    }
    det
}

/// All permutations of `0..n` with their signs (Heap's algorithm).
fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1;
    let mut out = vec![(perm.clone(), sign)];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            out.push((perm.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `Char(Λ^0 V), …, Char(Λ^d V)` from `c = Char(V)` via the Adams recurrence
/// `d·Λ^d = Σ_{k=1}^{d} (-1)^{k-1} ψ^k(c) Λ^{d-k}`.
pub fn exterior_powers(c: &LaurentPolynomial, d: usize) -> Result<Vec<LaurentPolynomial>> {
    let rank = c.rank();
    let adams: Vec<LaurentPolynomial> =
        (1..=d as i64).map(|k| c.adams(k)).collect::<Result<_>>()?;
    let mut powers = vec![LaurentPolynomial::one(rank)];
    for n in 1..=d {
        let mut sum = LaurentPolynomial::zero(rank);
        for k in 1..=n {
            let term = adams[k - 1].mul(&powers[n - k])?;
            sum = if k % 2 == 1 {
                sum.add(&term)?
            } else {
                sum.sub(&term)?
            };
        }
        let next = sum
            .divide_coefficients_exact(&BigInt::from(n))
            .map_err(|_| {
                Error::InexactDivision(format!(
                    "degree {n} exterior power: input is not the character of a representation"
                ))
            })?;
        powers.push(next);
    }
    Ok(powers)
}

pub fn exterior_power_char(c: &LaurentPolynomial, d: usize) -> Result<LaurentPolynomial> {
    Ok(exterior_powers(c, d)?.pop().expect("at least Λ^0"))
}
