//! Dimensions of the spaces of `Spin(9)`-invariant translation-invariant
//! valuations on `O² = R^16`.
//!
//! The pipeline:
//! - `b_k`: multiplicity of the trivial module in `Λ^k` of the `so(9)` spin
//!   representation;
//! - `n^{(i)}`: decompositions of `Λ^i(O' ⊕ O)` over `so(7)`, where `O'` is
//!   the 7-dimensional standard and `O` the 8-dimensional spin module;
//! - `b_{k,l} = Σ_λ n^{(k)}_λ n^{(l)}_λ`;
//! - `dim Val_k = Σ_{l=0}^{n-k-1} (-1)^{n-k-l-1} (b_{k,l} - b_{k-1,l-1}) + (-1)^{n-k} b_k`
//!   with `n = 16` and every out-of-range `b` equal to zero.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{exterior_powers, BaseRep, Decomposition, HighestWeight, TypeB};

/// Real dimension of `O²`.
pub const AMBIENT_DIM: usize = 16;
/// Dimension of the tangent space `O' ⊕ O` of the unit sphere at `(1,0)`.
pub const TANGENT_DIM: usize = 15;

/// Everything the dimension count needs, computed once.
#[derive(Clone, Debug)]
pub struct ValuationTables {
    /// `Λ^k V` over `so(9)` for `k = 0..=16`.
    pub spin9: Vec<Decomposition>,
    /// `Λ^i(O' ⊕ O)` over `so(7)` for `i = 0..=15`.
    pub so7: Vec<Decomposition>,
    pub bk: [u64; AMBIENT_DIM + 1],
    pub bkl: [[u64; TANGENT_DIM + 1]; TANGENT_DIM + 1],
    pub dimensions: [i64; AMBIENT_DIM + 1],
}

impl ValuationTables {
    pub fn compute() -> Result<Self> {
        let b4 = TypeB::new(4);
        let spin = b4.base_character(BaseRep::Spin);
        let powers9 = exterior_powers(&spin, AMBIENT_DIM)?;
        let spin9 = powers9
            .par_iter()
            .map(|c| b4.decompose(c))
            .collect::<Result<Vec<_>>>()?;

        let b3 = TypeB::new(3);
        let tangent = b3
            .base_character(BaseRep::Standard)
            .add(&b3.base_character(BaseRep::Spin))?;
        let powers7 = exterior_powers(&tangent, TANGENT_DIM)?;
        let so7 = powers7
            .par_iter()
            .map(|c| b3.decompose(c))
            .collect::<Result<Vec<_>>>()?;

        let trivial = HighestWeight::trivial(4);
        let mut bk = [0u64; AMBIENT_DIM + 1];
        for (k, d) in spin9.iter().enumerate() {
            bk[k] = d.multiplicity(&trivial);
        }

        let mut bkl = [[0u64; TANGENT_DIM + 1]; TANGENT_DIM + 1];
        for k in 0..=TANGENT_DIM {
            for l in 0..=TANGENT_DIM {
                bkl[k][l] = schur_pairing(&so7[k], &so7[l]);
            }
        }

        let mut tables = Self {
            spin9,
            so7,
            bk,
            bkl,
            dimensions: [0; AMBIENT_DIM + 1],
        };
        for k in 0..=AMBIENT_DIM {
            tables.dimensions[k] = tables.dimension_formula(k);
        }
        Ok(tables)
    }

    /// `b_k`, zero outside `0..=16`.
    pub fn b(&self, k: i64) -> u64 {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.bk.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// `b_{k,l}`, zero outside `0..=15` in either index.
    pub fn b2(&self, k: i64, l: i64) -> u64 {
        match (usize::try_from(k), usize::try_from(l)) {
            (Ok(k), Ok(l)) if k <= TANGENT_DIM && l <= TANGENT_DIM => self.bkl[k][l],
            _ => 0,
        }
    }

    fn dimension_formula(&self, k: usize) -> i64 {
        let n = AMBIENT_DIM as i64;
        let k = k as i64;
        let sign = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
        let mut total = 0i64;
        for l in 0..n - k {
            let diff = self.b2(k, l) as i64 - self.b2(k - 1, l - 1) as i64;
            total += sign(n - k - l - 1) * diff;
        }
        total + sign(n - k) * self.b(k) as i64
    }

    /// Ascending-lex union of every so(7) highest weight that occurs.
    pub fn so7_weights(&self) -> Vec<HighestWeight> {
        let mut all: Vec<HighestWeight> = self
            .so7
            .iter()
            .flat_map(|d| d.iter().map(|(w, _)| w.clone()))
            .collect();
        all.sort();
        all.dedup();
        all
    }

    pub fn report(&self) -> Report {
        let so7_weights = self.so7_weights();
        let so7_table = so7_weights
            .iter()
            .map(|w| So7Row {
                weight: w.clone(),
                multiplicities: self.so7.iter().map(|d| d.multiplicity(w)).collect(),
            })
            .collect();
        Report {
            bk: self.bk.to_vec(),
            bkl: self.bkl.iter().map(|row| row.to_vec()).collect(),
            dimensions: self.dimensions.to_vec(),
            total: self.dimensions.iter().sum(),
            so7_table,
            spin9_decompositions: self
                .spin9
                .iter()
                .enumerate()
                .map(|(k, d)| summands(k, d))
                .collect(),
            so7_decompositions: self
                .so7
                .iter()
                .enumerate()
                .map(|(k, d)| summands(k, d))
                .collect(),
        }
    }
}

fn schur_pairing(a: &Decomposition, b: &Decomposition) -> u64 {
    a.iter().map(|(w, m)| m * b.multiplicity(w)).sum()
}

fn summands(k: usize, d: &Decomposition) -> DecompositionEntry {
    DecompositionEntry {
        k,
        summands: d
            .iter()
            .rev()
            .map(|(w, m)| Summand {
                weight: w.clone(),
                mult: m,
            })
            .collect(),
    }
}

/// One irreducible summand with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub weight: HighestWeight,
    pub mult: u64,
}

/// Decomposition of one exterior power, summands by descending highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionEntry {
    pub k: usize,
    pub summands: Vec<Summand>,
}

/// One row of the so(7) multiplicity table: `n^{(i)}_λ` for `i = 0..=15`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct So7Row {
    pub weight: HighestWeight,
    pub multiplicities: Vec<u64>,
}

/// Aggregated output of the whole computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub bk: Vec<u64>,
    pub bkl: Vec<Vec<u64>>,
    pub dimensions: Vec<i64>,
    pub total: i64,
    pub so7_table: Vec<So7Row>,
    pub spin9_decompositions: Vec<DecompositionEntry>,
    pub so7_decompositions: Vec<DecompositionEntry>,
}

static TABLES: OnceLock<Result<ValuationTables>> = OnceLock::new();

/// Process-wide tables, computed on first use.
pub fn tables() -> Result<&'static ValuationTables> {
    TABLES
        .get_or_init(ValuationTables::compute)
        .as_ref()
        .map_err(Error::clone)
}

/// `b_k = dim (Λ^k O²)^{Spin(9)}`; zero outside `0..=16`.
pub fn compute_bk(k: i64) -> Result<u64> {
    Ok(tables()?.b(k))
}

/// `n^{(i)}` for `i = 0..=15`.
pub fn compute_so7_table() -> Result<&'static [Decomposition]> {
    Ok(&tables()?.so7)
}

/// `b_{k,l}`; zero outside `0..=15`.
pub fn compute_bkl(k: i64, l: i64) -> Result<u64> {
    Ok(tables()?.b2(k, l))
}

/// `dim Val_k^{Spin(9)}`; zero outside `0..=16`.
pub fn val_dimension(k: i64) -> Result<i64> {
    let t = tables()?;
    Ok(usize::try_from(k)
        .ok()
        .and_then(|k| t.dimensions.get(k))
        .copied()
        .unwrap_or(0))
}

pub fn full_report() -> Result<Report> {
    Ok(tables()?.report())
}

/// `Λ^k` of the so(9) spin representation, `0 <= k <= 16`.
pub fn spin9_exterior_decomposition(k: usize) -> Result<&'static Decomposition> {
    tables()?
        .spin9
        .get(k)
        .ok_or_else(|| Error::InvalidArgument(format!("exterior degree {k} exceeds {AMBIENT_DIM}")))
}
