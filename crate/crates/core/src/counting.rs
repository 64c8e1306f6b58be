//! Exact counting primitives: binomials, Catalan numbers, and the size of a
//! flip class determined by its triangulated-region fiber.
//!
//! Everything is arbitrary-precision; no floating point.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::Partition;

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Catalan number `C_k`, indexed from 0: 1, 1, 2, 5, 14, 42, ...
pub fn catalan(k: u64) -> BigInt {
    binomial(2 * k, k) / BigInt::from(k + 1)
}

/// Number of triangulations of a convex `gon`-gon (`gon >= 3`), i.e. the
/// Catalan number `C_{gon-2}`.
pub fn triangulation_count(gon: u64) -> BigInt {
    assert!(gon >= 3, "triangulation_count requires a polygon (gon >= 3)");
    catalan(gon - 2)
}

/// Size of every flip class in the fiber `ν`: one factor
/// `triangulation_count(ν_i + 3)` per maximal triangulated region, since a
/// region of `ν_i + 1` triangles is a `(ν_i + 3)`-gon that can be
/// re-triangulated independently. `class_size(∅) = 1`.
pub fn flip_class_size(nu: &Partition) -> BigInt {
    nu.parts()
        .iter()
        .map(|&v| triangulation_count(v as u64 + 3))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(3, 7), BigInt::from(0));
        assert_eq!(binomial(40, 20), "137846528820".parse().unwrap());
    }

    #[test]
    fn catalan_values() {
        let want = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
        for (k, &v) in want.iter().enumerate() {
            assert_eq!(catalan(k as u64), BigInt::from(v));
        }
    }

    #[test]
    fn flip_class_size_values() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(flip_class_size(&Partition::empty()), BigInt::from(1));
        assert_eq!(flip_class_size(&p("1")), BigInt::from(2));
        assert_eq!(flip_class_size(&p("2")), BigInt::from(5));
        assert_eq!(flip_class_size(&p("3")), BigInt::from(14));
        assert_eq!(flip_class_size(&p("1,1")), BigInt::from(4));
    }
}
