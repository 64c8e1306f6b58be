//! Shape and fiber censuses of polygon tilings, flip-equivalence classes,
//! and an independent dynamic-programming shape count used to cross-validate
//! the enumeration.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::tiling::{for_each_tiling, tilings_with_shape, Tiling};

/// Counts for one fiber `ν` inside a shape class: `count` is `a_{λ,ν}`,
/// `class_count` is `ae_{λ,ν}`.
#[derive(Clone, Debug)]
pub struct FiberEntry {
    pub count: BigInt,
    pub class_count: BigInt,
}

/// Counts for one shape `λ`: `count` is `a_n(λ)`, `class_count` is
/// `ae_n(λ)`, and `fibers` breaks both down by the fiber invariant.
#[derive(Clone, Debug)]
pub struct ShapeEntry {
    pub count: BigInt,
    pub class_count: BigInt,
    pub fibers: BTreeMap<Partition, FiberEntry>,
}

/// The full census of the `n`-gon, built by exhaustive enumeration.
#[derive(Clone, Debug)]
pub struct Census {
    pub n: u32,
    pub shapes: BTreeMap<Partition, ShapeEntry>,
}

impl Census {
    /// Total number of tilings `|A_n|`.
    pub fn total(&self) -> BigInt {
        self.shapes.values().map(|s| &s.count).sum()
    }

    /// `a_n(λ)`, zero for absent shapes.
    pub fn count(&self, shape: &Partition) -> BigInt {
        self.shapes.get(shape).map(|s| s.count.clone()).unwrap_or_else(BigInt::zero)
    }

    /// `ae_n(λ)`, zero for absent shapes.
    pub fn class_count(&self, shape: &Partition) -> BigInt {
        self.shapes
            .get(shape)
            .map(|s| s.class_count.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// `ae_{λ,ν}`, zero for absent fibers.
    pub fn fiber_class_count(&self, shape: &Partition, fiber: &Partition) -> BigInt {
        self.shapes
            .get(shape)
            .and_then(|s| s.fibers.get(fiber))
            .map(|f| f.class_count.clone())
            .unwrap_or_else(BigInt::zero)
    }
}

/// Splits a canonically sorted list of same-shape tilings into flip-graph
/// connected components. Classes are sorted internally and ordered by their
/// least member, so the output is independent of traversal order.
fn classes_of(tilings: &[Tiling]) -> Vec<Vec<Tiling>> {
    let index: HashMap<&Tiling, usize> =
        tilings.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut seen = vec![false; tilings.len()];
    let mut classes = Vec::new();
    for start in 0..tilings.len() {
        if seen[start] {
            continue;
        }
        let mut class = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(i) = queue.pop_front() {
            class.push(tilings[i].clone());
            for nb in tilings[i].flip_neighbors() {
                let j = *index.get(&nb).expect("flip preserves shape");
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes.sort_unstable_by(|a, b| a[0].cmp(&b[0]));
    classes
}

/// The flip-equivalence classes of the tilings of shape `shape` in the
/// `n`-gon. The shape weight must be `n - 2`.
pub fn flip_classes(n: u32, shape: &Partition) -> Result<Vec<Vec<Tiling>>> {
    let tilings = tilings_with_shape(n, shape)?;
    Ok(classes_of(&tilings))
}

/// Builds the full census of the `n`-gon: every shape count, class count,
/// and fiber breakdown, by exhaustive enumeration plus flip-graph search.
pub fn census(n: u32) -> Result<Census> {
    let mut by_shape: BTreeMap<Partition, Vec<Tiling>> = BTreeMap::new();
    for_each_tiling(n, |t| by_shape.entry(t.shape()).or_default().push(t.clone()))?;
    let mut shapes = BTreeMap::new();
    for (shape, mut tilings) in by_shape {
        tilings.sort_unstable();
        let mut entry = ShapeEntry {
            count: BigInt::from(tilings.len()),
            class_count: BigInt::zero(),
            fibers: BTreeMap::new(),
        };
        for class in classes_of(&tilings) {
            let fiber = class[0].fiber();
            debug_assert!(class.iter().all(|t| t.fiber() == fiber));
            entry.class_count += 1;
            let f = entry.fibers.entry(fiber).or_insert_with(|| FiberEntry {
                count: BigInt::zero(),
                class_count: BigInt::zero(),
            });
            f.count += BigInt::from(class.len());
            f.class_count += 1;
        }
        shapes.insert(shape, entry);
    }
    Ok(Census { n, shapes })
}

/// Shape counts of the `n`-gon by streaming enumeration, without storing any
/// tiling. Used to cross-check the dynamic programming below.
pub fn shape_counts_enumerated(n: u32) -> Result<BTreeMap<Partition, BigInt>> {
    let mut counts: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for_each_tiling(n, |t| {
        *counts.entry(t.shape()).or_insert_with(BigInt::zero) += 1;
    })?;
    Ok(counts)
}

type ShapeMap = BTreeMap<Partition, BigInt>;

/// Memoized dynamic programming for shape counts, independent of the
/// enumeration path.
///
/// `polygon[k]` maps each shape to the number of dissections of a `k`-gon
/// with that shape. The recurrence fixes a boundary edge, chooses the size
/// `j` of the tile containing it, and convolves the censuses of the
/// sub-polygons hanging off the tile's other `j - 1` sides: `chain(t, v)`
/// accumulates `t` consecutive sides spanning `v` vertex steps in total.
pub struct ShapeCounter {
    polygon: Vec<Option<ShapeMap>>,
    chain: HashMap<(usize, usize), ShapeMap>,
}

fn convolve(a: &ShapeMap, b: &ShapeMap) -> ShapeMap {
    let mut out = ShapeMap::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            *out.entry(ka.combine(kb)).or_insert_with(BigInt::zero) += va * vb;
        }
    }
    out
}

fn add_into(acc: &mut ShapeMap, other: ShapeMap) {
    for (k, v) in other {
        *acc.entry(k).or_insert_with(BigInt::zero) += v;
    }
}

impl ShapeCounter {
    pub fn new() -> Self {
        ShapeCounter {
            polygon: Vec::new(),
            chain: HashMap::new(),
        }
    }

    fn ensure(&mut self, k: usize) {
        if self.polygon.len() <= k {
            self.polygon.resize(k + 1, None);
        }
        for kk in 2..=k {
            if self.polygon[kk].is_some() {
                continue;
            }
            let map = if kk == 2 {
                // Degenerate 2-gon: a bare edge, one empty dissection.
                ShapeMap::from([(Partition::empty(), BigInt::from(1))])
            } else {
                let mut acc = ShapeMap::new();
                for j in 3..=kk {
                    let sides = self.chain_map(j - 1, kk - 1);
                    let tile_part = Partition::from_parts([j - 2]);
                    let mut shifted = ShapeMap::new();
                    for (shape, v) in sides {
                        shifted.insert(shape.combine(&tile_part), v);
                    }
                    add_into(&mut acc, shifted);
                }
                acc
            };
            self.polygon[kk] = Some(map);
        }
    }

    /// `t` consecutive sides spanning `v` vertex steps; each side covers
    /// `m - 1` steps and contributes the `m`-gon census (`m = 2` being the
    /// trivial edge).
    fn chain_map(&mut self, t: usize, v: usize) -> ShapeMap {
        if let Some(hit) = self.chain.get(&(t, v)) {
            return hit.clone();
        }
        let result = if t == 0 {
            if v == 0 {
                ShapeMap::from([(Partition::empty(), BigInt::from(1))])
            } else {
                ShapeMap::new()
            }
        } else {
            let mut acc = ShapeMap::new();
            let mut m = 2;
            // Leave at least one vertex step for each remaining side.
            while m + t <= v + 2 {
                let rest = self.chain_map(t - 1, v - (m - 1));
                if !rest.is_empty() {
                    let gon = self.polygon[m].clone().expect("smaller polygons filled");
                    add_into(&mut acc, convolve(&gon, &rest));
                }
                m += 1;
            }
            acc
        };
        self.chain.insert((t, v), result.clone());
        result
    }

    /// `a_n(shape)`: zero whenever the weight does not match `n - 2` (there
    /// are no tilings of that shape), which downstream alternating sums rely
    /// on.
    pub fn count(&mut self, n: usize, shape: &Partition) -> BigInt {
        if n < 2 || shape.weight() != n - 2 {
            return BigInt::zero();
        }
        self.ensure(n);
        self.polygon[n]
            .as_ref()
            .unwrap()
            .get(shape)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// The full shape row of the `n`-gon.
    pub fn census_row(&mut self, n: usize) -> ShapeMap {
        assert!(n >= 3, "census row needs a polygon");
        self.ensure(n);
        self.polygon[n].clone().unwrap()
    }

    /// `|A_n|` as the row sum.
    pub fn total(&mut self, n: usize) -> BigInt {
        self.census_row(n).values().sum()
    }
}

impl Default for ShapeCounter {
    fn default() -> Self {
        Self::new()
    }
}

/// One-shot `a_n(shape)` via [`ShapeCounter`].
pub fn count_shape_dp(n: usize, shape: &Partition) -> BigInt {
    ShapeCounter::new().count(n, shape)
}

/// One-shot `|A_n|` via dynamic programming (the little Schröder numbers).
pub fn total_count_dp(n: usize) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::Usage(format!("polygon size {n} < 3")));
    }
    Ok(ShapeCounter::new().total(n))
}

/// Convenience: checks that a shape is a plausible tiling shape for `n`.
pub fn check_shape_weight(n: u32, shape: &Partition) -> Result<()> {
    if shape.weight() != (n as usize).saturating_sub(2) {
        return Err(Error::Usage(format!(
            "shape {shape} has weight {} but the {n}-gon needs weight {}",
            shape.weight(),
            n - 2
        )));
    }
    Ok(())
}

/// Shapes for which the census can be non-zero: all partitions of `n - 2`.
pub fn shapes_for(n: u32) -> Vec<Partition> {
    partitions_of((n as usize).saturating_sub(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn big(v: u64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn golden_shape_rows() {
        let mut counter = ShapeCounter::new();
        // n = 5
        assert_eq!(counter.count(5, &p("1,1,1")), big(5));
        assert_eq!(counter.count(5, &p("2,1")), big(5));
        assert_eq!(counter.count(5, &p("3")), big(1));
        // n = 6
        assert_eq!(counter.count(6, &p("1,1,1,1")), big(14));
        assert_eq!(counter.count(6, &p("2,1,1")), big(21));
        assert_eq!(counter.count(6, &p("3,1")), big(6));
        assert_eq!(counter.count(6, &p("2,2")), big(3));
        assert_eq!(counter.count(6, &p("4")), big(1));
        // n = 7
        assert_eq!(counter.count(7, &p("1,1,1,1,1")), big(42));
        assert_eq!(counter.count(7, &p("2,1,1,1")), big(84));
        assert_eq!(counter.count(7, &p("3,1,1")), big(28));
        assert_eq!(counter.count(7, &p("2,2,1")), big(28));
        assert_eq!(counter.count(7, &p("4,1")), big(7));
        assert_eq!(counter.count(7, &p("3,2")), big(7));
        assert_eq!(counter.count(7, &p("5")), big(1));
        // weight mismatch counts as zero
        assert_eq!(counter.count(6, &p("3,2")), big(0));
    }

    #[test]
    fn dp_matches_enumeration() {
        let mut counter = ShapeCounter::new();
        for n in 3..=10u32 {
            let enumerated = shape_counts_enumerated(n).unwrap();
            let dp = counter.census_row(n as usize);
            assert_eq!(enumerated, dp, "n={n}");
        }
    }

    #[test]
    fn totals_are_little_schroeder() {
        let want: [u64; 8] = [1, 3, 11, 45, 197, 903, 4279, 20793];
        let mut counter = ShapeCounter::new();
        for (i, &v) in want.iter().enumerate() {
            assert_eq!(counter.total(i + 3), big(v), "n={}", i + 3);
        }
    }

    #[test]
    fn census_invariants() {
        for n in 3..=8u32 {
            let c = census(n).unwrap();
            assert_eq!(c.total(), total_count_dp(n as usize).unwrap());
            for (shape, entry) in &c.shapes {
                let fiber_sum: BigInt = entry.fibers.values().map(|f| &f.count).sum();
                assert_eq!(&fiber_sum, &entry.count, "n={n} {shape}");
                let class_sum: BigInt = entry.fibers.values().map(|f| &f.class_count).sum();
                assert_eq!(&class_sum, &entry.class_count, "n={n} {shape}");
            }
        }
    }

    #[test]
    fn pentagon_quad_shape_has_five_singleton_classes() {
        let classes = flip_classes(5, &p("2,1")).unwrap();
        assert_eq!(classes.len(), 5);
        assert!(classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn triangulations_form_one_class() {
        for n in 4..=8u32 {
            let shape = Partition::from_parts(std::iter::repeat_n(1, n as usize - 2));
            let classes = flip_classes(n, &shape).unwrap();
            assert_eq!(classes.len(), 1, "n={n}");
        }
    }

    #[test]
    fn hexagon_triangulation_fiber() {
        let c = census(6).unwrap();
        let entry = &c.shapes[&p("1,1,1,1")];
        let fiber = &entry.fibers[&p("3")];
        assert_eq!(fiber.count, big(14));
        assert_eq!(fiber.class_count, big(1));
        assert_eq!(entry.fibers.len(), 1);
    }

    #[test]
    fn shape_weight_guard() {
        assert!(flip_classes(6, &p("2,1")).is_err());
        assert!(check_shape_weight(6, &p("4")).is_ok());
        assert!(check_shape_weight(6, &p("5")).is_err());
    }
}
