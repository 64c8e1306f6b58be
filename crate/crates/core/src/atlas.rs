//! The combinatorial cell structure of the associahedron over tilings of the
//! `n`-gon: cell dimensions, f-vectors, Euler characteristic, orbits under
//! the polygon symmetries, vertex profiles, and the per-dimension
//! classification of cell types.
//!
//! Tilings of the `n`-gon form the complex of dimension `n - 3`; the cells
//! of a tiling are the tilings refining it by extra diagonals. The complex
//! is kept implicit (tilings plus containment on diagonal sets); nothing
//! here builds an explicit face lattice.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::census::ShapeCounter;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::tiling::{enumerate_tilings, tilings_with_shape, Tiling};

/// Dimension of the cell represented by a tiling: `n - 3 - #diagonals`,
/// which also equals the weight of the shape with its first column removed.
pub fn cell_dim(t: &Tiling) -> usize {
    let dim = t.n() as usize - 3 - t.diagonals().len();
    debug_assert_eq!(
        dim,
        t.shape().remove_column().map(|q| q.weight()).unwrap_or(0),
        "dimension formulas disagree for {t}"
    );
    dim
}

/// The f-vector `(f_0, ..., f_{n-3})` of the complex on the `n`-gon.
pub fn f_vector(n: u32) -> Result<Vec<BigInt>> {
    if n < 4 {
        return Err(Error::Usage(format!("f-vector needs n >= 4, got {n}")));
    }
    let mut f = vec![BigInt::zero(); n as usize - 2];
    crate::tiling::for_each_tiling(n, |t| {
        f[cell_dim(t)] += 1;
    })?;
    Ok(f)
}

/// Euler characteristic: the alternating sum of the f-vector. Expected 1
/// for every `n` (the complex is a convex polytope), but computed, never
/// assumed.
pub fn euler_char(n: u32) -> Result<BigInt> {
    let f = f_vector(n)?;
    let mut acc = BigInt::zero();
    for (i, v) in f.iter().enumerate() {
        if i % 2 == 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    Ok(acc)
}

/// Symmetry group of the labeled polygon acting on tilings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryGroup {
    /// Identity only; every orbit is a singleton. Test mode.
    Trivial,
    /// Rotations `i -> i + k (mod n)`, order `n`.
    Cyclic,
    /// Rotations and reflections, order `2n`.
    Dihedral,
}

impl SymmetryGroup {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(SymmetryGroup::Trivial),
            "cyclic" => Ok(SymmetryGroup::Cyclic),
            "dihedral" => Ok(SymmetryGroup::Dihedral),
            other => Err(Error::Usage(format!("unknown symmetry group '{other}'"))),
        }
    }
}

/// The full orbit of one tiling under the chosen group.
fn orbit_of(t: &Tiling, group: SymmetryGroup) -> BTreeSet<Tiling> {
    let mut orbit = BTreeSet::new();
    let mut cur = t.clone();
    for _ in 0..t.n() {
        if group == SymmetryGroup::Dihedral {
            orbit.insert(cur.reflected());
        }
        orbit.insert(cur.clone());
        if group == SymmetryGroup::Trivial {
            break;
        }
        cur = cur.rotated();
    }
    orbit
}

/// Orbits of the tilings of the `n`-gon under polygon symmetries, optionally
/// restricted to cells of one dimension. Orbits are sorted internally and
/// listed by their least member.
pub fn isometry_orbits(
    n: u32,
    group: SymmetryGroup,
    dim_filter: Option<usize>,
) -> Result<Vec<Vec<Tiling>>> {
    let all = enumerate_tilings(n)?;
    let tilings: Vec<Tiling> = match dim_filter {
        Some(d) => all.into_iter().filter(|t| cell_dim(t) == d).collect(),
        None => all,
    };
    orbits_of_set(&tilings, group)
}

/// Orbits of an explicit set of tilings (the set must be closed under the
/// action, which holds for any shape- or dimension-defined family).
fn orbits_of_set(tilings: &[Tiling], group: SymmetryGroup) -> Result<Vec<Vec<Tiling>>> {
    let mut seen: BTreeSet<Tiling> = BTreeSet::new();
    let mut orbits = Vec::new();
    for t in tilings {
        if seen.contains(t) {
            continue;
        }
        let orbit = orbit_of(t, group);
        debug_assert!(orbit.iter().all(|u| u.shape() == t.shape()));
        for u in &orbit {
            seen.insert(u.clone());
        }
        orbits.push(orbit.into_iter().collect::<Vec<_>>());
    }
    orbits.sort_unstable_by(|a, b| a[0].cmp(&b[0]));
    Ok(orbits)
}

/// A facet of the complex is a one-diagonal tiling; its type is the
/// unordered pair of sub-polygon sizes the diagonal creates (`a + b = n + 2`,
/// recorded small side first).
pub fn facet_type(n: u32, d: crate::tiling::Diagonal) -> (u32, u32) {
    let inner = d.b() - d.a() + 1;
    let outer = n + 2 - inner;
    (inner.min(outer), inner.max(outer))
}

/// Sorted multiset of facet types.
pub type FacetMultiset = Vec<(u32, u32)>;

/// Extrinsic profile of a vertex (triangulation) of the complex: the
/// multiset of types of the facets containing it (one per diagonal), plus
/// one refinement round recording the facet multisets of the vertices one
/// flip away.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexProfile {
    pub vertex: Tiling,
    pub facet_types: FacetMultiset,
    pub neighbor_facet_types: Vec<FacetMultiset>,
}

fn facet_multiset(t: &Tiling) -> FacetMultiset {
    let mut types: FacetMultiset = t
        .diagonals()
        .iter()
        .map(|&d| facet_type(t.n(), d))
        .collect();
    types.sort_unstable();
    types
}

/// Profiles of all vertices of the complex on the `n`-gon (`n >= 5`), in
/// canonical vertex order.
pub fn vertex_profiles(n: u32) -> Result<Vec<VertexProfile>> {
    if n < 5 {
        return Err(Error::Usage(format!("vertex profiles need n >= 5, got {n}")));
    }
    let shape = Partition::from_parts(std::iter::repeat_n(1, n as usize - 2));
    let vertices = tilings_with_shape(n, &shape)?;
    Ok(vertices
        .into_iter()
        .map(|v| {
            let mut neighbor_facet_types: Vec<FacetMultiset> = v
                .flip_neighbors()
                .iter()
                .map(facet_multiset)
                .collect();
            neighbor_facet_types.sort_unstable();
            VertexProfile {
                facet_types: facet_multiset(&v),
                neighbor_facet_types,
                vertex: v,
            }
        })
        .collect())
}

/// The partition of the vertices into profile classes, each class sorted,
/// classes ordered by least vertex.
pub fn vertex_profile_classes(n: u32) -> Result<Vec<Vec<Tiling>>> {
    let mut by_profile: BTreeMap<(FacetMultiset, Vec<FacetMultiset>), Vec<Tiling>> =
        BTreeMap::new();
    for profile in vertex_profiles(n)? {
        by_profile
            .entry((profile.facet_types, profile.neighbor_facet_types))
            .or_default()
            .push(profile.vertex);
    }
    let mut classes: Vec<Vec<Tiling>> = by_profile.into_values().collect();
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_unstable_by(|a, b| a[0].cmp(&b[0]));
    Ok(classes)
}

/// Status of one `(dimension, μ)` slot of the classification table.
#[derive(Clone, Debug)]
pub enum CellClassStatus {
    /// `|μ⁺|` exceeds `n - 2`: no cell of the complex carries this label.
    Impossible,
    Present {
        /// The tiling shape `fill_up(μ⁺, n - 2)` of the cells.
        lambda: Partition,
        /// Number of cells, `a_n(λ)`.
        count: BigInt,
        /// Cell type as a product of smaller complexes: the multiset
        /// `{λ_j + 1}` of factor indices, largest first.
        factors: Vec<usize>,
        /// Representative tilings, one per dihedral orbit.
        representatives: Vec<Tiling>,
    },
}

#[derive(Clone, Debug)]
pub struct CellClassEntry {
    pub mu: Partition,
    pub status: CellClassStatus,
}

#[derive(Clone, Debug)]
pub struct DimensionRow {
    pub dim: usize,
    pub entries: Vec<CellClassEntry>,
}

/// Summary of the complex on the `n`-gon: f-vector, Euler characteristic,
/// and the classification of cells by dimension and label `μ`.
#[derive(Clone, Debug)]
pub struct CellComplexSummary {
    pub n: u32,
    pub f_vector: Vec<BigInt>,
    pub euler: BigInt,
    pub dims: Vec<DimensionRow>,
}

/// Builds the classification table for the complex on the `n`-gon
/// (`n >= 4`): for every dimension `i` and every `μ ⊢ i`, the shape
/// `λ = fill_up(μ⁺, n - 2)`, the cell count, the product decomposition, and
/// dihedral-orbit representatives — or an impossibility marker when
/// `|μ⁺| > n - 2`.
pub fn classification_table(n: u32) -> Result<CellComplexSummary> {
    let f = f_vector(n)?;
    let euler = euler_char(n)?;
    let mut counter = ShapeCounter::new();
    let mut dims = Vec::new();
    for dim in 0..=(n as usize - 3) {
        let mut entries = Vec::new();
        for mu in partitions_of(dim) {
            let up = mu.add_column();
            let status = if up.weight() > n as usize - 2 {
                CellClassStatus::Impossible
            } else {
                let lambda = up.fill_up(n as usize - 2);
                let count = counter.count(n as usize, &lambda);
                let factors: Vec<usize> = lambda.parts().iter().map(|&v| v + 1).collect();
                let members = tilings_with_shape(n, &lambda)?;
                let orbits = orbits_of_set(&members, SymmetryGroup::Dihedral)?;
                let representatives = orbits.into_iter().map(|o| o[0].clone()).collect();
                CellClassStatus::Present {
                    lambda,
                    count,
                    factors,
                    representatives,
                }
            };
            entries.push(CellClassEntry { mu, status });
        }
        dims.push(DimensionRow { dim, entries });
    }
    Ok(CellComplexSummary {
        n,
        f_vector: f,
        euler,
        dims,
    })
}
