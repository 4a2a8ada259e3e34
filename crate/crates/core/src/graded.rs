//! Exact calculus of finitely supported graded dimensions.
//!
//! A [`GradedDim`] records the dimension of each graded piece of a finite
//! graded vector space, indexed by integer cohomological degree. It is the
//! universal value type of this crate: curve cohomology, extension groups,
//! and every closed-form prediction evaluate to one. All arithmetic is
//! exact; dimensions are arbitrary-precision non-negative integers.
//!
//! The symmetric and exterior powers are the super-graded ones: inside `S^k`
//! the odd-degree part behaves exterior-ly (square-free) and the even part
//! symmetrically, and inside `Λ^k` the roles swap. Equivalently, `sym_power`
//! extracts the `t^k` coefficient of
//!
//! ```text
//! prod_{d even} (1 - t q^d)^{-a[d]} * prod_{d odd} (1 + t q^d)^{a[d]}
//! ```
//!
//! and `ext_power` of the series with the factor roles exchanged. Expansion
//! is by truncated polynomial multiplication over exact integers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::binomial::choose_big;

/// Dimensions of a graded vector space, indexed by integer degree.
///
/// The coefficient map is canonical: zero entries are never stored, so two
/// values compare equal exactly when they describe the same dimensions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedDim {
    coeffs: BTreeMap<i64, BigUint>,
}

fn is_even(degree: i64) -> bool {
    degree.rem_euclid(2) == 0
}

impl GradedDim {
    /// The zero space.
    pub fn zero() -> Self {
        Self::default()
    }

    /// A one-dimensional space in degree 0 (the tensor unit).
    pub fn one() -> Self {
        Self::from_pairs([(0, 1)])
    }

    /// Builds from `(degree, dimension)` pairs, accumulating repeated degrees
    /// and dropping zeros.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, u64)>,
    {
        Self::from_big_pairs(pairs.into_iter().map(|(d, c)| (d, BigUint::from(c))))
    }

    /// Same as [`GradedDim::from_pairs`] with arbitrary-precision dimensions.
    pub fn from_big_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigUint)>,
    {
        let mut coeffs: BTreeMap<i64, BigUint> = BTreeMap::new();
        for (degree, dim) in pairs {
            if dim.is_zero() {
                continue;
            }
            *coeffs.entry(degree).or_insert_with(BigUint::zero) += dim;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Dimension in a single degree (zero when absent).
    pub fn coeff(&self, degree: i64) -> BigUint {
        self.coeffs
            .get(&degree)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    /// Nonzero `(degree, dimension)` entries in increasing degree order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigUint)> + '_ {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Total dimension: the value of the Poincaré polynomial at `q = 1`.
    pub fn total(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    /// Euler characteristic: the value of the Poincaré polynomial at `q = -1`.
    pub fn euler(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (&d, c) in &self.coeffs {
            let signed = BigInt::from(c.clone());
            if is_even(d) {
                acc += signed;
            } else {
                acc -= signed;
            }
        }
        acc
    }

    /// Degreewise sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (&d, c) in &other.coeffs {
            *coeffs.entry(d).or_insert_with(BigUint::zero) += c;
        }
        Self { coeffs }
    }

    /// Künneth convolution: `out[d] = sum_{i+j=d} self[i] * other[j]`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<i64, BigUint> = BTreeMap::new();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                *coeffs.entry(i + j).or_insert_with(BigUint::zero) += a * b;
            }
        }
        Self { coeffs }
    }

    /// Reflection `out[d] = self[-d]`.
    pub fn dual(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&d, c)| (-d, c.clone())).collect(),
        }
    }

    /// Homological shift: `shift(a, n)[d] = a[d + n]`, so a class in degree 0
    /// shifted by `[-m]` lands in degree `m`.
    pub fn shift(&self, n: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, c)| (d - n, c.clone()))
                .collect(),
        }
    }

    /// Restriction to even degrees.
    pub fn even_part(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&d, _)| is_even(d))
                .map(|(&d, c)| (d, c.clone()))
                .collect(),
        }
    }

    /// Restriction to odd degrees.
    pub fn odd_part(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&d, _)| !is_even(d))
                .map(|(&d, c)| (d, c.clone()))
                .collect(),
        }
    }

    /// Super-graded symmetric power; negative `k` gives the zero space.
    pub fn sym_power(&self, k: i64) -> Self {
        self.graded_power(k, true)
    }

    /// Super-graded exterior power; negative `k` gives the zero space, which
    /// is the convention that turns wedge exponents below zero into
    /// vanishing predictions.
    pub fn ext_power(&self, k: i64) -> Self {
        self.graded_power(k, false)
    }

    fn graded_power(&self, k: i64, symmetric: bool) -> Self {
        if k < 0 {
            return Self::zero();
        }
        let k = k as usize;
        // Truncated polynomial in the counting variable t, with q-polynomial
        // coefficients. Index j holds the t^j coefficient.
        let mut acc: Vec<GradedDim> = vec![GradedDim::zero(); k + 1];
        acc[0] = GradedDim::one();
        for (&degree, mult) in &self.coeffs {
            // Even generators are symmetric inside S^k and square-free inside
            // Λ^k; odd generators swap roles.
            let repeats = is_even(degree) == symmetric;
            let factor = single_degree_series(degree, mult, k, repeats);
            acc = mul_truncated(&acc, &factor, k);
        }
        acc.swap_remove(k)
    }

    /// Renders the Poincaré polynomial in `q`, e.g. `1 + 2q + q^2`.
    pub fn polynomial_string(&self) -> String {
        self.render(false)
    }

    /// LaTeX rendering with braced exponents, e.g. `1 + 2q + q^{2}`.
    pub fn latex_string(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (&d, c) in &self.coeffs {
            let coeff = if c.is_one() && d != 0 {
                String::new()
            } else {
                c.to_string()
            };
            let var = match (d, latex) {
                (0, _) => String::new(),
                (1, _) => "q".to_string(),
                (_, true) => format!("q^{{{d}}}"),
                (_, false) => format!("q^{d}"),
            };
            terms.push(format!("{coeff}{var}"));
        }
        terms.join(" + ")
    }
}

/// Truncated expansion of a single-degree factor of the generating series.
///
/// With `repeats` the generator contributes `(1 - t q^deg)^{-mult}`, whose
/// t^j coefficient is `C(mult + j - 1, j) q^{deg*j}` (multisets). Without, it
/// contributes `(1 + t q^deg)^{mult}` with t^j coefficient `C(mult, j)`
/// (square-free subsets).
fn single_degree_series(degree: i64, mult: &BigUint, k: usize, repeats: bool) -> Vec<GradedDim> {
    let mut out = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let count = if j == 0 {
            BigUint::one()
        } else if repeats {
            choose_big(&(mult + BigUint::from(j as u64 - 1)), j as u64)
        } else {
            choose_big(mult, j as u64)
        };
        let q_degree = degree
            .checked_mul(j as i64)
            .expect("graded power degree overflow");
        out.push(GradedDim::from_big_pairs([(q_degree, count)]));
    }
    out
}

fn mul_truncated(a: &[GradedDim], b: &[GradedDim], k: usize) -> Vec<GradedDim> {
    let mut out = vec![GradedDim::zero(); k + 1];
    for (i, ai) in a.iter().enumerate().take(k + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(k + 1 - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].direct_sum(&ai.tensor(bj));
        }
    }
    out
}

impl fmt::Display for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.polynomial_string())
    }
}

impl std::ops::Add for &GradedDim {
    type Output = GradedDim;

    fn add(self, rhs: &GradedDim) -> GradedDim {
        self.direct_sum(rhs)
    }
}

impl std::ops::Mul for &GradedDim {
    type Output = GradedDim;

    fn mul(self, rhs: &GradedDim) -> GradedDim {
        self.tensor(rhs)
    }
}

impl Serialize for GradedDim {
    /// Serializes as `{"<degree>": <dimension>, ...}` with decimal-string
    /// keys, so negative degrees survive JSON round trips unambiguously.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (&d, c) in &self.coeffs {
            let number: serde_json::Number =
                c.to_string().parse().map_err(serde::ser::Error::custom)?;
            map.serialize_entry(&d.to_string(), &number)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for GradedDim {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct DimVisitor;

        impl<'de> Visitor<'de> for DimVisitor {
            type Value = GradedDim;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from degree strings to non-negative integer dimensions")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut pairs = Vec::new();
                while let Some((key, value)) = access.next_entry::<String, serde_json::Value>()? {
                    let degree: i64 = key
                        .parse()
                        .map_err(|_| de::Error::custom(format!("invalid degree key {key:?}")))?;
                    let text = match &value {
                        serde_json::Value::Number(n) => n.to_string(),
                        serde_json::Value::String(s) => s.clone(),
                        other => {
                            return Err(de::Error::custom(format!(
                                "dimension for degree {degree} must be an integer, got {other}"
                            )))
                        }
                    };
                    let dim: BigUint = text.parse().map_err(|_| {
                        de::Error::custom(format!(
                            "dimension for degree {degree} must be a non-negative integer, got {text}"
                        ))
                    })?;
                    pairs.push((degree, dim));
                }
                Ok(GradedDim::from_big_pairs(pairs))
            }
        }

        deserializer.deserialize_map(DimVisitor)
    }
}
