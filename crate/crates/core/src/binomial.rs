//! Exact binomial coefficients, including the generalized (falling-factorial)
//! form for negative upper arguments.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// C(n, k) for machine-sized inputs; zero when `k > n`.
pub fn choose(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut res = BigUint::one();
    for i in 0..k {
        res = res * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    res
}

/// C(n, k) for an arbitrary-precision non-negative upper argument.
pub fn choose_big(n: &BigUint, k: u64) -> BigUint {
    if &BigUint::from(k) > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= n - BigUint::from(i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// Generalized C(x, k) = x(x-1)...(x-k+1) / k! for any integer x.
///
/// The product of k consecutive integers is always divisible by k!, so the
/// division is exact for every sign of x.
pub fn choose_signed(x: &BigInt, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= x - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}
