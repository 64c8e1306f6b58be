//! Closed-form counting expressions and their brute-force counterparts: the
//! marking multiplicity, the alternating class-count formula, overcount
//! factors with their expansion tables, signed column sums, and the Euler
//! reference sums. All identities are exact integer statements; there are no
//! tolerances anywhere.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::census::{census, check_shape_weight, ShapeCounter};
use crate::counting::binomial;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, union_fiber, Multipartition, Partition};
use crate::tiling::{tilings_with_shape, Diagonal, Tiling};

/// Marking multiplicity `Π^λ_μ`: the number of ways to mark tiles of a
/// tiling of shape `λ ∪ μ⁺ ∪ 1^{-|μ⁺|}` so that the marked sizes realize
/// `μ⁺`. Both product forms are evaluated and must agree:
/// `∏_{s>=1} C(m_{s+1}(λ) + m_s(μ), m_s(μ))` and
/// `∏_{s>=2} C(m_s(λ ∪ μ⁺), m_s(μ⁺))`.
pub fn marking_multiplicity(lambda: &Partition, mu: &Partition) -> BigInt {
    let mut first = BigInt::one();
    for s in 1..=mu.max_part() {
        let m_mu = mu.multiplicity(s) as u64;
        let m_lam = lambda.multiplicity(s + 1) as u64;
        first *= binomial(m_lam + m_mu, m_mu);
    }
    let up = mu.add_column();
    let combined = lambda.combine(&up);
    let mut second = BigInt::one();
    for s in 2..=combined.max_part() {
        second *= binomial(combined.multiplicity(s) as u64, up.multiplicity(s) as u64);
    }
    assert_eq!(
        first, second,
        "marking multiplicity product forms disagree for lambda={lambda} mu={mu}"
    );
    first
}

/// `b^λ_μ`: the size of the marked family, `Π^λ_μ · a_n(λ ∪ μ⁺ ∪ 1^{-|μ⁺|})`,
/// zero when the coarsened shape is not a partition.
pub fn marked_count(n: u32, lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    check_shape_weight(n, lambda)?;
    let Some(coarse) = lambda.coarsen(mu) else {
        return Ok(BigInt::zero());
    };
    let mut counter = ShapeCounter::new();
    Ok(marking_multiplicity(lambda, mu) * counter.count(n as usize, &coarse))
}

/// The closed-form class count: the alternating sum over `μ` of
/// `Π^λ_μ · a_n(λ ∪ μ⁺ ∪ 1^{-|μ⁺|})`. The `μ = ∅` term is always included
/// (for triangle-free `λ` it is the whole sum); all terms with
/// `|μ⁺| > m_1(λ)` vanish because the coarsened shape is not a partition.
pub fn class_count_formula(n: u32, lambda: &Partition) -> Result<BigInt> {
    check_shape_weight(n, lambda)?;
    let mut counter = ShapeCounter::new();
    let mut acc = counter.count(n as usize, lambda);
    let ones = lambda.multiplicity(1);
    for m in 1..ones.max(1) {
        let mut level = BigInt::zero();
        for mu in partitions_of(m) {
            let Some(coarse) = lambda.coarsen(&mu) else {
                continue;
            };
            level += marking_multiplicity(lambda, &mu) * counter.count(n as usize, &coarse);
        }
        if m % 2 == 1 {
            acc -= level;
        } else {
            acc += level;
        }
    }
    Ok(acc)
}

/// Euler reference sum for rank `r`: the alternating sum over `ρ` of
/// `a_{r+3}(fill_up(ρ⁺, r+1))`, which equals the Euler characteristic of the
/// complex on the `(r+3)`-gon and is expected to be 1 for every `r`. The
/// value is computed, not forced.
pub fn euler_sum(r: usize) -> BigInt {
    let mut counter = ShapeCounter::new();
    let mut acc = BigInt::zero();
    for m in 0..=r {
        let mut level = BigInt::zero();
        for rho in partitions_of(m) {
            let filled = rho.add_column().fill_up(r + 1);
            level += counter.count(r + 3, &filled);
        }
        if m % 2 == 1 {
            acc -= level;
        } else {
            acc += level;
        }
    }
    acc
}

/// One expansion term of an overcount factor: a multipartition `γ` in the
/// union fiber of `μ` together with its product
/// `∏_i a_{ν_i + 3}(fill_up(γ^i, ν_i + 1))`.
#[derive(Clone, Debug)]
pub struct OvercountTerm {
    pub parts: Multipartition,
    pub product: BigInt,
}

/// An overcount-factor value together with its expansion terms.
#[derive(Clone, Debug)]
pub struct OvercountCell {
    pub value: BigInt,
    pub terms: Vec<OvercountTerm>,
}

/// The overcount factor `OF_{μ,ν}` with its full expansion. For `ν = ∅` the
/// convention is `OF_{∅,∅} = 1` and `OF_{μ,∅} = 0` otherwise (no expansion
/// terms).
pub fn overcount_expansion(mu: &Partition, nu: &Partition) -> OvercountCell {
    if nu.is_empty() {
        let value = if mu.is_empty() { BigInt::one() } else { BigInt::zero() };
        return OvercountCell { value, terms: Vec::new() };
    }
    let slots = nu.len();
    let mut counter = ShapeCounter::new();
    let mut value = BigInt::zero();
    let mut terms = Vec::new();
    for gamma in union_fiber(mu, slots) {
        let mut product = BigInt::one();
        for (component, &region) in gamma.components().iter().zip(nu.parts()) {
            let filled = component.fill_up(region + 1);
            product *= counter.count(region + 3, &filled);
            if product.is_zero() {
                break;
            }
        }
        value += &product;
        terms.push(OvercountTerm { parts: gamma, product });
    }
    OvercountCell { value, terms }
}

/// The overcount factor `OF_{μ,ν}` (value only).
pub fn overcount_factor(mu: &Partition, nu: &Partition) -> BigInt {
    overcount_expansion(mu, nu).value
}

/// Signed column sum `Σ_m (-1)^m Σ_{μ ⊢ m} OF_{μ,ν}`, truncated at
/// `|ν| + l(ν)`: beyond that bound every `μ⁺` is heavier than the total
/// region capacity `Σ(ν_i + 1)` and every factor vanishes. Expected value 1
/// for every `ν`.
pub fn overcount_column_sum(nu: &Partition) -> BigInt {
    signed_overcount_sum(nu, nu.weight() + nu.len())
}

fn signed_overcount_sum(nu: &Partition, max_weight: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for m in 0..=max_weight {
        let mut level = BigInt::zero();
        for mu in partitions_of(m) {
            level += overcount_factor(&mu, nu);
        }
        if m % 2 == 1 {
            acc -= level;
        } else {
            acc += level;
        }
    }
    acc
}

/// Both sides of the product identity for a column: the signed overcount sum
/// truncated at `max_weight`, and `∏_i euler_sum(ν_i)`. The truncation must
/// be at least `|ν| + l(ν)` so that no non-zero term is dropped.
pub fn overcount_euler_product(nu: &Partition, max_weight: usize) -> Result<(BigInt, BigInt)> {
    let needed = nu.weight() + nu.len();
    if max_weight < needed {
        return Err(Error::Usage(format!(
            "truncation {max_weight} below the vanishing bound {needed} for nu={nu}"
        )));
    }
    let lhs = signed_overcount_sum(nu, max_weight);
    let rhs = nu
        .parts()
        .iter()
        .map(|&v| euler_sum(v))
        .product();
    Ok((lhs, rhs))
}

/// The overcount table over row partitions `μ` and column partitions `ν`.
#[derive(Clone, Debug)]
pub struct OvercountTable {
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub cells: Vec<Vec<OvercountCell>>,
}

/// Builds the overcount table for all `μ`, `ν` of weight at most
/// `max_weight` (the `ν = ∅` column included), rows and columns in graded
/// reverse-lexicographic order.
pub fn overcount_table(max_weight: usize) -> OvercountTable {
    let all: Vec<Partition> = (0..=max_weight).flat_map(partitions_of).collect();
    let cells = all
        .iter()
        .map(|mu| all.iter().map(|nu| overcount_expansion(mu, nu)).collect())
        .collect();
    OvercountTable {
        rows: all.clone(),
        cols: all,
        cells,
    }
}

/// Fan triangulation pivot used when materializing marked families. The
/// alternate pivot exists to check that fibers do not depend on the fan
/// choice; only tests construct it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[allow(dead_code)]
pub(crate) enum FanPivot {
    Lowest,
    SecondLowest,
}

/// Adds fan diagonals triangulating each marked tile of `t` from the chosen
/// pivot vertex.
fn fan_triangulate(t: &Tiling, tiles: &[Vec<u32>], marked: &[usize], pivot: FanPivot) -> Tiling {
    let mut diagonals = t.diagonals().to_vec();
    for &ti in marked {
        let tile = &tiles[ti];
        let k = tile.len();
        let p = match pivot {
            FanPivot::Lowest => 0,
            FanPivot::SecondLowest => 1,
        };
        for step in 2..k - 1 {
            diagonals.push(Diagonal::new(tile[p], tile[(p + step) % k]));
        }
    }
    Tiling::new(t.n(), diagonals).expect("fan chords stay non-crossing")
}

/// Materializes the marked family for `(n, λ, μ)` and counts its members by
/// fiber: tilings of shape `λ ∪ μ⁺ ∪ 1^{-|μ⁺|}` with one marking of tiles
/// realizing `μ⁺` per member (each choice counted separately), the marked
/// tiles triangulated by the canonical fan from their lowest-labeled vertex.
pub fn marked_fiber_counts(
    n: u32,
    lambda: &Partition,
    mu: &Partition,
) -> Result<BTreeMap<Partition, BigInt>> {
    marked_fiber_counts_with(n, lambda, mu, FanPivot::Lowest)
}

pub(crate) fn marked_fiber_counts_with(
    n: u32,
    lambda: &Partition,
    mu: &Partition,
    pivot: FanPivot,
) -> Result<BTreeMap<Partition, BigInt>> {
    check_shape_weight(n, lambda)?;
    let mut counts: BTreeMap<Partition, BigInt> = BTreeMap::new();
    let Some(coarse) = lambda.coarsen(mu) else {
        return Ok(counts);
    };
    let up = mu.add_column();
    let mut marked_sizes: Vec<(usize, usize)> = Vec::new(); // (tile size, how many to mark)
    for &v in up.parts() {
        match marked_sizes.last_mut() {
            Some((size, m)) if *size == v + 2 => *m += 1,
            _ => marked_sizes.push((v + 2, 1)),
        }
    }
    let mut total = BigInt::zero();
    for t in tilings_with_shape(n, &coarse)? {
        let tiles = t.tiles();
        // Per marked size, all ways to choose that many tiles of the size.
        let choices: Vec<Vec<Vec<usize>>> = marked_sizes
            .iter()
            .map(|&(size, m)| {
                let candidates: Vec<usize> = tiles
                    .iter()
                    .enumerate()
                    .filter(|(_, tile)| tile.len() == size)
                    .map(|(i, _)| i)
                    .collect();
                candidates.into_iter().combinations(m).collect()
            })
            .collect();
        let mut markings: Vec<Vec<usize>> = vec![Vec::new()];
        for group in &choices {
            let mut next = Vec::with_capacity(markings.len() * group.len());
            for base in &markings {
                for extra in group {
                    let mut m = base.clone();
                    m.extend_from_slice(extra);
                    next.push(m);
                }
            }
            markings = next;
        }
        for marking in &markings {
            let fanned = fan_triangulate(&t, &tiles, marking, pivot);
            *counts.entry(fanned.fiber()).or_insert_with(BigInt::zero) += 1;
            total += 1;
        }
    }
    debug_assert_eq!(total, marked_count(n, lambda, mu)?);
    Ok(counts)
}

/// The overcount factor measured from first principles: the marked family
/// for `(n, λ, μ)` is materialized, its members with fiber `ν` counted, and
/// the count divided by the number of classes `ae_{λ,ν}`. Requires a
/// non-empty fiber. The result must equal [`overcount_factor`]`(μ, ν)` and
/// be independent of `λ`.
pub fn overcount_factor_bruteforce(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: u32,
) -> Result<BigRational> {
    let cen = census(n)?;
    let classes = cen.fiber_class_count(lambda, nu);
    if classes.is_zero() {
        return Err(Error::Domain(format!(
            "fiber nu={nu} is empty for lambda={lambda} in the {n}-gon"
        )));
    }
    let counts = marked_fiber_counts(n, lambda, mu)?;
    let hits = counts.get(nu).cloned().unwrap_or_else(BigInt::zero);
    Ok(BigRational::new(hits, classes))
}
