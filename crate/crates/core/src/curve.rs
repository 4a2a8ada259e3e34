//! The curve, vector-bundle classes on it, and the cohomology policies that
//! turn a class into concrete graded dimensions.
//!
//! A [`BundleClass`] keeps exactly the data the closed formulas consume:
//! rank, degree, an identifying label, and an optional explicit `(h0, h1)`
//! override. Cohomology is produced by Riemann-Roch plus a small set of
//! exact rules; where no rule applies, the [`CohPolicy`] decides between
//! refusing (`Strict`) and assuming a generic bundle (`Generic`), and the
//! generic assumption taints every downstream report.

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::binomial::choose;
use crate::graded::GradedDim;

/// Label of the distinguished trivial class `O_C`.
pub const TRIVIAL_LABEL: &str = "O_C";
/// Label identifying the canonical class; degree alone is not enough, since
/// a non-canonical bundle can share degree 2g-2.
pub const CANONICAL_LABEL: &str = "canonical";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("bundle {label:?} must have rank >= 1")]
    ZeroRank { label: String },
    #[error(
        "cohomology of {label:?} (rank {rank}, degree {degree}) on a genus {genus} curve \
         is not determined by any exact rule; supply an h0/h1 override or use the generic policy"
    )]
    AmbiguousCohomology {
        label: String,
        rank: u64,
        degree: i64,
        genus: u32,
    },
    #[error(
        "cohomology override (h0={h0}, h1={h1}) for {label:?} violates Riemann-Roch: \
         h0 - h1 must equal deg + rk(1-g) = {chi}"
    )]
    InconsistentOverride {
        label: String,
        h0: u64,
        h1: u64,
        chi: i64,
    },
    #[error("wedge exponent {k} out of range [1, {rank}] for {label:?}")]
    WedgeOutOfRange { label: String, k: u64, rank: u64 },
    #[error("rank or degree overflow while forming {context}")]
    Overflow { context: String },
}

/// A smooth projective curve, reduced to the data the formulas see.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveModel {
    pub genus: u32,
}

impl CurveModel {
    pub fn new(genus: u32) -> Self {
        Self { genus }
    }

    /// Degree of the canonical class, 2g - 2.
    pub fn canonical_degree(&self) -> i64 {
        2 * i64::from(self.genus) - 2
    }

    /// `H^*(O_C) = C ⊕ C^g[-1]`, always known exactly.
    pub fn structure_cohomology(&self) -> GradedDim {
        GradedDim::from_pairs([(0, 1), (1, u64::from(self.genus))])
    }

    /// Riemann-Roch: `chi(F) = deg F + rk F (1 - g)`.
    pub fn chi(&self, f: &BundleClass) -> i64 {
        f.degree + f.rank as i64 * (1 - i64::from(self.genus))
    }

    /// Graded dimensions of `H^*(F)`, supported in degrees {0, 1}.
    ///
    /// Resolution order: explicit override (validated against Riemann-Roch),
    /// then the exact rank-1 rules (`O_C`, the canonical class, degree above
    /// 2g-2, negative degree), then the policy: `Generic` assumes
    /// `h0 = max(chi, 0)` and flags the result, `Strict` refuses.
    pub fn cohomology(&self, f: &BundleClass, policy: CohPolicy) -> Result<Cohomology, CurveError> {
        let chi = self.chi(f);
        if let Some((h0, h1)) = f.coh_override {
            if h0 as i64 - h1 as i64 != chi {
                return Err(CurveError::InconsistentOverride {
                    label: f.label.clone(),
                    h0,
                    h1,
                    chi,
                });
            }
            return Ok(Cohomology::exact(h0, h1));
        }
        if f.rank == 1 {
            if f.label == TRIVIAL_LABEL && f.degree == 0 {
                return Ok(Cohomology::exact(1, u64::from(self.genus)));
            }
            if f.label == CANONICAL_LABEL && f.degree == self.canonical_degree() {
                return Ok(Cohomology::exact(u64::from(self.genus), 1));
            }
            if f.degree > self.canonical_degree() {
                return Ok(Cohomology::exact(chi as u64, 0));
            }
            if f.degree < 0 {
                return Ok(Cohomology::exact(0, (-chi) as u64));
            }
        }
        match policy {
            CohPolicy::Generic => Ok(Cohomology::generic(chi.max(0) as u64, (-chi).max(0) as u64)),
            CohPolicy::Strict => Err(CurveError::AmbiguousCohomology {
                label: f.label.clone(),
                rank: f.rank,
                degree: f.degree,
                genus: self.genus,
            }),
        }
    }

    /// `Ext^*(F, G) = H^*(Hom(F, G))`, valid for vector bundles on a curve.
    pub fn ext_groups(
        &self,
        f: &BundleClass,
        g: &BundleClass,
        policy: CohPolicy,
    ) -> Result<Cohomology, CurveError> {
        self.cohomology(&f.hom(g), policy)
    }
}

/// How unresolved cohomology is handled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CohPolicy {
    /// Refuse to guess: error out when no exact rule applies.
    Strict,
    /// Assume a generic bundle (`h0 = max(chi, 0)`) and taint the report.
    Generic,
}

/// Cohomology of a class, remembering whether the generic assumption was
/// used to produce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cohomology {
    pub dims: GradedDim,
    pub generic: bool,
}

impl Cohomology {
    fn exact(h0: u64, h1: u64) -> Self {
        Self {
            dims: GradedDim::from_pairs([(0, h0), (1, h1)]),
            generic: false,
        }
    }

    fn generic(h0: u64, h1: u64) -> Self {
        Self {
            dims: GradedDim::from_pairs([(0, h0), (1, h1)]),
            generic: true,
        }
    }
}

/// A vector bundle on the curve, up to the data the formulas consume.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleClass {
    pub label: String,
    pub rank: u64,
    pub degree: i64,
    /// Explicit `(h0, h1)`, validated against Riemann-Roch at use sites.
    pub coh_override: Option<(u64, u64)>,
}

impl BundleClass {
    pub fn new(label: impl Into<String>, rank: u64, degree: i64) -> Result<Self, CurveError> {
        let label = label.into();
        if rank == 0 {
            return Err(CurveError::ZeroRank { label });
        }
        Ok(Self {
            label,
            rank,
            degree,
            coh_override: None,
        })
    }

    pub fn with_cohomology(
        label: impl Into<String>,
        rank: u64,
        degree: i64,
        h0: u64,
        h1: u64,
    ) -> Result<Self, CurveError> {
        let mut class = Self::new(label, rank, degree)?;
        class.coh_override = Some((h0, h1));
        Ok(class)
    }

    /// A line bundle of the given degree.
    pub fn line(label: impl Into<String>, degree: i64) -> Self {
        Self::new(label, 1, degree).expect("rank 1 is valid")
    }

    /// The distinguished trivial class `O_C`.
    pub fn trivial() -> Self {
        Self::line(TRIVIAL_LABEL, 0)
    }

    /// The canonical class of a genus-g curve.
    pub fn canonical(curve: CurveModel) -> Self {
        Self::line(CANONICAL_LABEL, curve.canonical_degree())
    }

    pub fn is_trivial(&self) -> bool {
        self.label == TRIVIAL_LABEL && self.rank == 1 && self.degree == 0
    }

    /// Tensor product on the level of (rank, degree). Tensoring with the
    /// trivial class is the identity, overrides included.
    pub fn tensor(&self, other: &BundleClass) -> BundleClass {
        if self.is_trivial() {
            return other.clone();
        }
        if other.is_trivial() {
            return self.clone();
        }
        let rank = self
            .rank
            .checked_mul(other.rank)
            .expect("tensor class rank overflow");
        let degree = (self.rank as i128 * other.degree as i128
            + other.rank as i128 * self.degree as i128)
            .try_into()
            .expect("tensor class degree overflow");
        BundleClass {
            label: format!("{}⊗{}", self.label, other.label),
            rank,
            degree,
            coh_override: None,
        }
    }

    /// Dual class: rank unchanged, degree negated, override dropped (the
    /// cohomology of the dual is not determined by the original's).
    pub fn dual(&self) -> BundleClass {
        if self.is_trivial() {
            return self.clone();
        }
        BundleClass {
            label: format!("{}∨", self.label),
            rank: self.rank,
            degree: -self.degree,
            coh_override: None,
        }
    }

    /// The class of `Hom(self, other)`. For a line bundle, `Hom(L, L)` is
    /// the trivial class on the nose.
    pub fn hom(&self, other: &BundleClass) -> BundleClass {
        if self.rank == 1 && self.label == other.label && self.degree == other.degree {
            return BundleClass::trivial();
        }
        self.dual().tensor(other)
    }

    /// `Λ^k` on the level of (rank, degree): rank `C(r, k)`, degree
    /// `C(r-1, k-1) * deg`. Requires `1 <= k <= rank`.
    pub fn wedge_power(&self, k: u64) -> Result<BundleClass, CurveError> {
        if k < 1 || k > self.rank {
            return Err(CurveError::WedgeOutOfRange {
                label: self.label.clone(),
                k,
                rank: self.rank,
            });
        }
        if k == 1 {
            return Ok(self.clone());
        }
        let context = || format!("Λ^{k}({})", self.label);
        let rank = to_u64(choose(self.rank, k), context)?;
        let degree = scaled_degree(choose(self.rank - 1, k - 1), self.degree, context)?;
        Ok(BundleClass {
            label: format!("Λ^{k}({})", self.label),
            rank,
            degree,
            coh_override: None,
        })
    }

    /// `S^k` on the level of (rank, degree): rank `C(r+k-1, k)`, degree
    /// `C(r+k-1, k-1) * deg`. `S^0` is the trivial class, `S^1` the identity.
    pub fn sym_power(&self, k: u64) -> Result<BundleClass, CurveError> {
        if k == 0 {
            return Ok(BundleClass::trivial());
        }
        if k == 1 {
            return Ok(self.clone());
        }
        let context = || format!("S^{k}({})", self.label);
        let rank = to_u64(choose(self.rank + k - 1, k), context)?;
        let degree = scaled_degree(choose(self.rank + k - 1, k - 1), self.degree, context)?;
        Ok(BundleClass {
            label: format!("S^{k}({})", self.label),
            rank,
            degree,
            coh_override: None,
        })
    }
}

fn to_u64(value: BigUint, context: impl Fn() -> String) -> Result<u64, CurveError> {
    u64::try_from(value).map_err(|_| CurveError::Overflow { context: context() })
}

fn scaled_degree(
    factor: BigUint,
    degree: i64,
    context: impl Fn() -> String,
) -> Result<i64, CurveError> {
    let scaled = BigInt::from(factor) * BigInt::from(degree);
    i64::try_from(scaled).map_err(|_| CurveError::Overflow { context: context() })
}
