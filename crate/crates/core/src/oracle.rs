//! Brute-force oracle for the graded symmetric and exterior powers.
//!
//! Instead of generating series, this module enumerates monomials over an
//! explicit graded basis: a symmetric monomial is a multiset over the even
//! generators combined with a square-free subset of the odd ones, and a
//! wedge monomial swaps the two roles. Counting monomials by total degree
//! reproduces the graded dimension, which makes the enumeration an
//! independent ground truth for `GradedDim::sym_power` / `ext_power`.
//!
//! The oracle is meant to be obviously correct, not fast; inputs are capped
//! at [`MAX_ELEMENTS`] generators and power [`MAX_POWER`].

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graded::GradedDim;

/// Enumeration refuses above this many basis elements.
pub const MAX_ELEMENTS: usize = 12;
/// Enumeration refuses above this power.
pub const MAX_POWER: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("enumeration bounds exceeded: {elements} elements, power {power} (limits {MAX_ELEMENTS}, {MAX_POWER})")]
    BoundsExceeded { elements: usize, power: usize },
}

/// An ordered basis of a graded vector space: distinct labels with degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    elements: Vec<(String, i64)>,
}

impl GradedBasis {
    pub fn new<I, S>(elements: I) -> Result<Self, OracleError>
    where
        I: IntoIterator<Item = (S, i64)>,
        S: Into<String>,
    {
        let elements: Vec<(String, i64)> =
            elements.into_iter().map(|(s, d)| (s.into(), d)).collect();
        for (i, (label, _)) in elements.iter().enumerate() {
            if elements[i + 1..].iter().any(|(other, _)| other == label) {
                return Err(OracleError::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self { elements })
    }

    /// A basis realizing the given dimensions, with synthetic labels.
    pub fn from_dims(dims: &GradedDim) -> Result<Self, OracleError> {
        let mut elements = Vec::new();
        for (degree, count) in dims.iter() {
            let count =
                usize::try_from(count.clone()).map_err(|_| OracleError::BoundsExceeded {
                    elements: usize::MAX,
                    power: 0,
                })?;
            for i in 0..count {
                elements.push((format!("e{degree}_{i}"), degree));
            }
        }
        Self::new(elements)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The induced graded dimensions (the bridge to the series route).
    pub fn dims(&self) -> GradedDim {
        GradedDim::from_pairs(self.elements.iter().map(|&(_, d)| (d, 1)))
    }

    /// Counts length-`k` symmetric monomials by total degree: multisets over
    /// even generators, square-free in the odd ones.
    pub fn enumerate_sym(&self, k: usize) -> Result<GradedDim, OracleError> {
        self.enumerate(k, |degree| degree.rem_euclid(2) == 0)
    }

    /// Counts length-`k` wedge monomials by total degree: square-free in the
    /// even generators, multisets over the odd ones.
    pub fn enumerate_ext(&self, k: usize) -> Result<GradedDim, OracleError> {
        self.enumerate(k, |degree| degree.rem_euclid(2) != 0)
    }

    fn enumerate(&self, k: usize, repeats: impl Fn(i64) -> bool) -> Result<GradedDim, OracleError> {
        if self.elements.len() > MAX_ELEMENTS || k > MAX_POWER {
            return Err(OracleError::BoundsExceeded {
                elements: self.elements.len(),
                power: k,
            });
        }
        let mut counts: std::collections::BTreeMap<i64, BigUint> = Default::default();
        // Walk the basis choosing a multiplicity for each generator; repeated
        // use is only allowed where `repeats` says so.
        fn walk(
            elements: &[(String, i64)],
            remaining: usize,
            degree_so_far: i64,
            repeats: &impl Fn(i64) -> bool,
            counts: &mut std::collections::BTreeMap<i64, BigUint>,
        ) {
            if remaining == 0 {
                let entry = counts.entry(degree_so_far).or_insert_with(BigUint::zero);
                *entry += BigUint::one();
                return;
            }
            let Some(((_, degree), rest)) = elements.split_first() else {
                return;
            };
            let max_mult = if repeats(*degree) { remaining } else { 1 };
            for mult in 0..=max_mult {
                walk(
                    rest,
                    remaining - mult,
                    degree_so_far + *degree * mult as i64,
                    repeats,
                    counts,
                );
            }
        }
        walk(&self.elements, k, 0, &repeats, &mut counts);
        Ok(GradedDim::from_big_pairs(counts))
    }
}

/// One disagreement between the enumeration and the series implementation.
#[derive(Clone, Debug, Serialize)]
pub struct SweepMismatch {
    pub dims: GradedDim,
    pub power: usize,
    pub op: &'static str,
    pub enumerated: GradedDim,
    pub series: GradedDim,
}

/// Outcome of an exhaustive oracle-vs-series sweep.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceSweep {
    pub checks: usize,
    pub mismatches: Vec<SweepMismatch>,
}

impl EquivalenceSweep {
    pub fn all_passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `sym_power`/`ext_power` against the enumeration oracle on every
/// graded dimension vector with total dimension at most `max_total` supported
/// in `[degree_lo, degree_hi]`, for all powers up to `max_k`.
pub fn equivalence_sweep(
    max_total: usize,
    degree_lo: i64,
    degree_hi: i64,
    max_k: usize,
) -> Result<EquivalenceSweep, OracleError> {
    if max_total > MAX_ELEMENTS || max_k > MAX_POWER {
        return Err(OracleError::BoundsExceeded {
            elements: max_total,
            power: max_k,
        });
    }
    let mut sweep = EquivalenceSweep {
        checks: 0,
        mismatches: Vec::new(),
    };
    let degrees: Vec<i64> = (degree_lo..=degree_hi).collect();
    let mut counts = vec![0u64; degrees.len()];
    sweep_rec(&degrees, &mut counts, 0, max_total, max_k, &mut sweep)?;
    Ok(sweep)
}

fn sweep_rec(
    degrees: &[i64],
    counts: &mut Vec<u64>,
    index: usize,
    budget: usize,
    max_k: usize,
    sweep: &mut EquivalenceSweep,
) -> Result<(), OracleError> {
    if index == degrees.len() {
        let dims = GradedDim::from_pairs(degrees.iter().zip(counts.iter()).map(|(&d, &c)| (d, c)));
        let basis = GradedBasis::from_dims(&dims)?;
        for k in 0..=max_k {
            let enumerated_sym = basis.enumerate_sym(k)?;
            let series_sym = dims.sym_power(k as i64);
            sweep.checks += 1;
            if enumerated_sym != series_sym {
                sweep.mismatches.push(SweepMismatch {
                    dims: dims.clone(),
                    power: k,
                    op: "sym",
                    enumerated: enumerated_sym,
                    series: series_sym,
                });
            }
            let enumerated_ext = basis.enumerate_ext(k)?;
            let series_ext = dims.ext_power(k as i64);
            sweep.checks += 1;
            if enumerated_ext != series_ext {
                sweep.mismatches.push(SweepMismatch {
                    dims: dims.clone(),
                    power: k,
                    op: "ext",
                    enumerated: enumerated_ext,
                    series: series_ext,
                });
            }
        }
        return Ok(());
    }
    for c in 0..=budget {
        counts[index] = c as u64;
        sweep_rec(degrees, counts, index + 1, budget - c, max_k, sweep)?;
    }
    counts[index] = 0;
    Ok(())
}
