//! Dimension, rank, and Betti-number bookkeeping for the Quot scheme, the
//! flag variety of full zero-dimensional quotient flags, the symmetric
//! product, and the tautological bundles on them.
//!
//! Everything here lives in the topological grading (algebraic classes sit
//! in even degree), as opposed to the sheaf-cohomology grading used by the
//! formula evaluations; the two never mix inside one `GradedDim`.

use serde::Serialize;
use thiserror::Error;

use crate::binomial::choose;
use crate::curve::{BundleClass, CurveModel};
use crate::graded::GradedDim;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("filtration factor {index}: k = {k} out of range [1, {max}]")]
    FilterOutOfRange { index: usize, k: u64, max: u64 },
}

/// Named space with its dimension and, when tractable, Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceInfo {
    pub name: String,
    pub dimension: u64,
    /// Topologically graded Betti numbers; `None` where they are not
    /// derivable from rank and degree data alone.
    pub poincare: Option<GradedDim>,
}

/// `dim Quot_d(E) = d * rk E`.
pub fn dim_quot(e: &BundleClass, d: u32) -> u64 {
    u64::from(d)
        .checked_mul(e.rank)
        .expect("dimension overflow")
}

/// `dim Flag_d(E) = d * rk E`: each induction step adds one dimension for
/// the curve factor and `rk E - 1` for the projective-bundle fibre.
pub fn dim_flag(e: &BundleClass, d: u32) -> u64 {
    dim_quot(e, d)
}

/// Rank `d * rk F` of the tautological bundle attached to `f`.
pub fn taut_rank(f: &BundleClass, d: u32) -> u64 {
    u64::from(d).checked_mul(f.rank).expect("rank overflow")
}

/// Betti numbers of the curve: 1, 2g, 1 in degrees 0, 1, 2.
pub fn poincare_curve(curve: CurveModel) -> GradedDim {
    GradedDim::from_pairs([(0, 1), (1, 2 * u64::from(curve.genus)), (2, 1)])
}

fn poincare_projective_fibre(rank: u64) -> GradedDim {
    GradedDim::from_pairs((0..rank).map(|i| (2 * i as i64, 1)))
}

/// Betti numbers of the flag variety: the d-th tensor power of
/// `P(C) * P(P^{rk E - 1})`, one factor per projective-bundle step.
pub fn poincare_flag(curve: CurveModel, e: &BundleClass, d: u32) -> GradedDim {
    let step = poincare_curve(curve).tensor(&poincare_projective_fibre(e.rank));
    let mut out = GradedDim::one();
    for _ in 0..d {
        out = out.tensor(&step);
    }
    out
}

/// Betti numbers of the d-th symmetric product of the curve: the graded
/// symmetric power of the curve's cohomology, odd part included.
pub fn poincare_sym(curve: CurveModel, d: u32) -> GradedDim {
    poincare_curve(curve).sym_power(i64::from(d))
}

pub fn quot_info(e: &BundleClass, d: u32) -> SpaceInfo {
    SpaceInfo {
        name: format!("Quot_{d}({})", e.label),
        dimension: dim_quot(e, d),
        poincare: None,
    }
}

pub fn flag_info(curve: CurveModel, e: &BundleClass, d: u32) -> SpaceInfo {
    SpaceInfo {
        name: format!("Flag_{d}({})", e.label),
        dimension: dim_flag(e, d),
        poincare: Some(poincare_flag(curve, e, d)),
    }
}

pub fn sym_info(curve: CurveModel, d: u32) -> SpaceInfo {
    SpaceInfo {
        name: format!("C^({d})"),
        dimension: u64::from(d),
        poincare: Some(poincare_sym(curve, d)),
    }
}

/// Checks the rank identity behind the wedge-power filtration: for each
/// split `0 -> F' -> F -> F'' -> 0` with ranks `(r_sub, r_quot)` and a wedge
/// exponent `k`, the wedge of the middle term decomposes into factors
/// `Λ^{k-l} F' ⊗ Λ^l F''` over `0 <= l <= min(k, r_quot)`. On ranks this is
/// the Vandermonde identity, so the check must always return true.
pub fn filtration_rank_check(splits: &[(u64, u64, u64)]) -> Result<bool, GeometryError> {
    for (index, &(r_sub, r_quot, k)) in splits.iter().enumerate() {
        let max = r_sub + r_quot;
        if k < 1 || k > max {
            return Err(GeometryError::FilterOutOfRange { index, k, max });
        }
    }
    let mut lhs = num_bigint::BigUint::from(1u32);
    for &(r_sub, r_quot, k) in splits {
        lhs *= choose(r_sub + r_quot, k);
    }
    // Sum over all tuples (l_1, ..., l_m) of the product of factor ranks.
    fn rhs_rec(splits: &[(u64, u64, u64)]) -> num_bigint::BigUint {
        let Some((&(r_sub, r_quot, k), rest)) = splits.split_first() else {
            return num_bigint::BigUint::from(1u32);
        };
        let tail = rhs_rec(rest);
        let mut acc = num_bigint::BigUint::from(0u32);
        for l in 0..=k.min(r_quot) {
            acc += choose(r_sub, k - l) * choose(r_quot, l) * &tail;
        }
        acc
    }
    Ok(lhs == rhs_rec(splits))
}

/// Rank additivity of the short exact sequences relating the tautological
/// bundle on the flag variety at level d to level d-1:
/// `rk F^<d> = rk F + rk F^<d-1>`.
pub fn taut_ses_rank_check(f: &BundleClass, d: u32) -> bool {
    let prev = if d == 0 { 0 } else { taut_rank(f, d - 1) };
    taut_rank(f, d) == f.rank + prev
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::{BigInt, BigUint};
    use num_traits::One;

    fn bundle(rank: u64) -> BundleClass {
        BundleClass::new("E", rank, 0).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_quot(&bundle(2), 3), 6);
        assert_eq!(dim_quot(&bundle(5), 2), 10);
        assert_eq!(dim_quot(&bundle(3), 0), 0);
        assert_eq!(dim_flag(&bundle(2), 1), 2);
        assert_eq!(dim_flag(&bundle(3), 4), 12);
        assert_eq!(dim_flag(&bundle(7), 0), 0);
    }

    #[test]
    fn tautological_ranks() {
        assert_eq!(taut_rank(&bundle(2), 2), 4);
        assert_eq!(taut_rank(&bundle(1), 5), 5);
        assert_eq!(taut_rank(&bundle(4), 1), 4);
    }

    #[test]
    fn hom_rank_sixteen_versus_eight() {
        // rk F = rk G = 2, d = 2: the Hom bundle of the rank-4 tautological
        // bundles has rank 16, while the tautological bundle of the rank-4
        // Hom class only has rank 8. This asymmetry is what rules out rank-1
        // E contexts.
        let f = BundleClass::new("F", 2, 0).unwrap();
        let g = BundleClass::new("G", 2, 0).unwrap();
        let quot_side = taut_rank(&f, 2) * taut_rank(&g, 2);
        let sym_side = taut_rank(&f.hom(&g), 2);
        assert_eq!(quot_side, 16);
        assert_eq!(sym_side, 8);
    }

    #[test]
    fn flag_betti_examples() {
        let p1 = CurveModel::new(0);
        assert_eq!(
            poincare_flag(p1, &bundle(2), 1),
            GradedDim::from_pairs([(0, 1), (2, 2), (4, 1)])
        );
        assert_eq!(poincare_flag(p1, &bundle(3), 0), GradedDim::one());
        let g1 = CurveModel::new(1);
        assert_eq!(
            poincare_flag(g1, &bundle(2), 1),
            GradedDim::from_pairs([(0, 1), (1, 2), (2, 2), (3, 2), (4, 1)])
        );
    }

    #[test]
    fn flag_betti_invariants() {
        for genus in 0..3u32 {
            let c = CurveModel::new(genus);
            for rank in 2..4u64 {
                for d in 0..4u32 {
                    let p = poincare_flag(c, &bundle(rank), d);
                    let dim = dim_flag(&bundle(rank), d);
                    // top degree and Poincaré duality
                    assert_eq!(p.max_degree().unwrap_or(0), 2 * dim as i64);
                    for (degree, b) in p.iter() {
                        assert_eq!(*b, p.coeff(2 * dim as i64 - degree));
                    }
                    let total_base = BigUint::from((2 + 2 * u64::from(genus)) * rank);
                    assert_eq!(p.total(), num_traits::pow::pow(total_base, d as usize));
                    let euler_base = BigInt::from((2 - 2 * i64::from(genus)) * rank as i64);
                    assert_eq!(p.euler(), num_traits::pow::pow(euler_base, d as usize));
                }
            }
        }
    }

    #[test]
    fn sym_betti_examples() {
        let p1 = CurveModel::new(0);
        for d in 0..6u32 {
            let expected = GradedDim::from_pairs((0..=d).map(|i| (2 * i as i64, 1)));
            assert_eq!(poincare_sym(p1, d), expected, "projective {d}-space");
        }
        let g1 = CurveModel::new(1);
        assert_eq!(
            poincare_sym(g1, 2),
            GradedDim::from_pairs([(0, 1), (1, 2), (2, 2), (3, 2), (4, 1)])
        );
        assert_eq!(
            poincare_sym(g1, 1),
            GradedDim::from_pairs([(0, 1), (1, 2), (2, 1)])
        );
    }

    #[test]
    fn sym_betti_matches_enumeration_and_duality() {
        // Independent route: enumerate symmetric monomials over an explicit
        // basis of the curve's cohomology (one even generator in degree 0 and
        // 2, 2g odd ones in degree 1).
        for genus in 0..=2u32 {
            let c = CurveModel::new(genus);
            let basis = crate::oracle::GradedBasis::from_dims(&poincare_curve(c)).unwrap();
            for d in 0..=4u32 {
                let p = poincare_sym(c, d);
                assert_eq!(p, basis.enumerate_sym(d as usize).unwrap());
                for (degree, b) in p.iter() {
                    assert_eq!(*b, p.coeff(2 * i64::from(d) - degree), "palindrome");
                }
            }
        }
    }

    #[test]
    fn filtration_rank_identity() {
        assert!(filtration_rank_check(&[(1, 1, 1)]).unwrap());
        assert!(filtration_rank_check(&[(2, 1, 2)]).unwrap());
        assert!(filtration_rank_check(&[(1, 1, 1), (2, 2, 3)]).unwrap());
        // C(2,1) = 2 = C(1,1)C(1,0) + C(1,0)C(1,1)
        let lhs = choose(2, 1);
        assert_eq!(lhs, BigUint::one() + BigUint::one());
    }

    #[test]
    fn filtration_rank_check_validates_bounds() {
        assert!(matches!(
            filtration_rank_check(&[(1, 1, 3)]),
            Err(GeometryError::FilterOutOfRange {
                index: 0,
                k: 3,
                max: 2
            })
        ));
        assert!(matches!(
            filtration_rank_check(&[(2, 2, 1), (1, 0, 0)]),
            Err(GeometryError::FilterOutOfRange { index: 1, .. })
        ));
    }

    #[test]
    fn taut_ses_additivity() {
        assert!(taut_ses_rank_check(&bundle(2), 3));
        assert!(taut_ses_rank_check(&bundle(7), 1));
        assert!(taut_ses_rank_check(&bundle(3), 5));
    }

    #[test]
    fn space_info_names() {
        let e = bundle(2);
        let q = quot_info(&e, 3);
        assert_eq!(q.name, "Quot_3(E)");
        assert_eq!(q.dimension, 6);
        assert!(q.poincare.is_none());
        let s = sym_info(CurveModel::new(1), 2);
        assert_eq!(s.name, "C^(2)");
        assert_eq!(s.dimension, 2);
        assert!(s.poincare.is_some());
    }
}
