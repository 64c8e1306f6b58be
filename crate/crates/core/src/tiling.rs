//! Tilings (dissections) of a convex labeled polygon by non-crossing
//! diagonals: enumeration, tile decomposition, shape, maximal triangulated
//! regions, and the flip move.
//!
//! Vertices are labeled `1..=n` clockwise. The canonical form of a tiling is
//! its sorted diagonal list; all set semantics, golden files, and orbit
//! computations key on it.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A diagonal `[a, b]` with `a < b`, joining two non-adjacent vertices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    a: u32,
    b: u32,
}

impl Diagonal {
    /// Builds a diagonal from two distinct vertex labels, in either order.
    /// Polygon-dependent validity (non-adjacency) is checked by
    /// [`Tiling::new`].
    pub fn new(x: u32, y: u32) -> Self {
        assert!(x != y, "degenerate diagonal [{x},{y}]");
        Diagonal {
            a: x.min(y),
            b: x.max(y),
        }
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

impl fmt::Debug for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Strict interleaving test: two diagonals cross iff exactly one endpoint of
/// the second lies strictly between the endpoints of the first.
pub fn crosses(d: Diagonal, e: Diagonal) -> bool {
    (d.a < e.a && e.a < d.b && d.b < e.b) || (e.a < d.a && d.a < e.b && e.b < d.b)
}

/// A tiling of the convex `n`-gon: a set of pairwise non-crossing diagonals,
/// stored sorted. The diagonals cut the polygon into `#diagonals + 1` tiles.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tiling {
    n: u32,
    diagonals: Vec<Diagonal>,
}

impl Tiling {
    /// Validates and canonicalizes a diagonal set for the `n`-gon.
    pub fn new(n: u32, mut diagonals: Vec<Diagonal>) -> Result<Self> {
        if n < 3 {
            return Err(Error::Usage(format!("polygon size {n} < 3")));
        }
        for d in &diagonals {
            if d.a < 1 || d.b > n {
                return Err(Error::Usage(format!("diagonal {d} out of range for n={n}")));
            }
            if d.b - d.a < 2 || (d.a == 1 && d.b == n) {
                return Err(Error::Usage(format!("{d} joins adjacent vertices of the {n}-gon")));
            }
        }
        diagonals.sort_unstable();
        if diagonals.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Usage("duplicate diagonal".into()));
        }
        for i in 0..diagonals.len() {
            for j in i + 1..diagonals.len() {
                if crosses(diagonals[i], diagonals[j]) {
                    return Err(Error::Usage(format!(
                        "diagonals {} and {} cross",
                        diagonals[i], diagonals[j]
                    )));
                }
            }
        }
        Ok(Tiling { n, diagonals })
    }

    /// The empty tiling (single tile).
    pub fn empty(n: u32) -> Result<Self> {
        Tiling::new(n, Vec::new())
    }

    /// Internal constructor for values already known valid and sorted.
    fn from_sorted_unchecked(n: u32, diagonals: Vec<Diagonal>) -> Self {
        debug_assert!(diagonals.windows(2).all(|w| w[0] < w[1]));
        Tiling { n, diagonals }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    /// The tiles as sorted vertex lists, in lexicographic order. A tile's
    /// cyclic boundary order equals its ascending label order because the
    /// polygon is convex.
    pub fn tiles(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(self.diagonals.len() + 1);
        let all: Vec<u32> = (1..=self.n).collect();
        let mut stack = vec![(all, self.diagonals.clone())];
        while let Some((verts, diags)) = stack.pop() {
            let Some(&d) = diags.first() else {
                out.push(verts);
                continue;
            };
            let inner_v: Vec<u32> = verts.iter().copied().filter(|&v| d.a <= v && v <= d.b).collect();
            let outer_v: Vec<u32> = verts.iter().copied().filter(|&v| v <= d.a || v >= d.b).collect();
            let (mut inner_d, mut outer_d) = (Vec::new(), Vec::new());
            for &e in &diags[1..] {
                if d.a <= e.a && e.b <= d.b {
                    inner_d.push(e);
                } else {
                    outer_d.push(e);
                }
            }
            stack.push((inner_v, inner_d));
            stack.push((outer_v, outer_d));
        }
        out.sort_unstable();
        out
    }

    /// The shape: one part `k - 2` per `k`-gonal tile. Its weight is always
    /// `n - 2`.
    pub fn shape(&self) -> Partition {
        Partition::from_parts(self.tiles().iter().map(|t| t.len() - 2))
    }

    /// Tiles plus, for every diagonal (in sorted order), the indices of the
    /// two tiles it separates.
    fn tiles_with_incidence(&self) -> (Vec<Vec<u32>>, Vec<[usize; 2]>) {
        let tiles = self.tiles();
        let mut incidence: Vec<Vec<usize>> = vec![Vec::with_capacity(2); self.diagonals.len()];
        for (ti, tile) in tiles.iter().enumerate() {
            let k = tile.len();
            for i in 0..k {
                let side = Diagonal::new(tile[i], tile[(i + 1) % k]);
                if let Ok(di) = self.diagonals.binary_search(&side) {
                    incidence[di].push(ti);
                }
            }
        }
        let incidence = incidence
            .into_iter()
            .map(|v| {
                debug_assert_eq!(v.len(), 2, "diagonal must bound exactly two tiles");
                [v[0], v[1]]
            })
            .collect();
        (tiles, incidence)
    }

    /// Sizes of the maximal triangulated regions, in triangles: triangle
    /// tiles are grouped by shared diagonals and component sizes collected
    /// into a partition. A region of `s` triangles is an `(s + 2)`-gon.
    pub fn triangulated_regions(&self) -> Partition {
        let (tiles, incidence) = self.tiles_with_incidence();
        let mut parent: Vec<usize> = (0..tiles.len()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for [t1, t2] in &incidence {
            if tiles[*t1].len() == 3 && tiles[*t2].len() == 3 {
                let (r1, r2) = (find(&mut parent, *t1), find(&mut parent, *t2));
                parent[r1] = r2;
            }
        }
        let mut sizes: HashMap<usize, usize> = HashMap::new();
        for (ti, tile) in tiles.iter().enumerate() {
            if tile.len() == 3 {
                *sizes.entry(find(&mut parent, ti)).or_insert(0) += 1;
            }
        }
        Partition::from_parts(sizes.into_values())
    }

    /// The fiber invariant: triangulated-region sizes with the first column
    /// removed (singleton triangles dropped, each larger region recorded as
    /// triangles minus one). Empty for a tiling with no triangles. Constant
    /// on flip classes.
    pub fn fiber(&self) -> Partition {
        let regions = self.triangulated_regions();
        if regions.is_empty() {
            return Partition::empty();
        }
        regions.remove_column().expect("non-empty region partition")
    }

    /// All tilings one flip away: for each diagonal separating two triangle
    /// tiles, the tiling with that diagonal replaced by the opposite
    /// diagonal of the quadrilateral they form. Diagonals bounding larger
    /// tiles are never flippable. The result is in canonical order.
    pub fn flip_neighbors(&self) -> Vec<Tiling> {
        let (tiles, incidence) = self.tiles_with_incidence();
        let mut out = Vec::new();
        for (di, [t1, t2]) in incidence.iter().enumerate() {
            if tiles[*t1].len() != 3 || tiles[*t2].len() != 3 {
                continue;
            }
            let d = self.diagonals[di];
            let mut quad: Vec<u32> = tiles[*t1].iter().chain(tiles[*t2].iter()).copied().collect();
            quad.sort_unstable();
            quad.dedup();
            debug_assert_eq!(quad.len(), 4);
            // The two chords of the quadrilateral w<x<y<z are (w,y) and (x,z).
            let chord1 = Diagonal::new(quad[0], quad[2]);
            let chord2 = Diagonal::new(quad[1], quad[3]);
            let replacement = if chord1 == d { chord2 } else { chord1 };
            let mut diagonals = self.diagonals.clone();
            diagonals[di] = replacement;
            diagonals.sort_unstable();
            out.push(Tiling::from_sorted_unchecked(self.n, diagonals));
        }
        out.sort_unstable();
        out
    }

    /// Face relation of the complex: `self` refines `other` when it
    /// contains every diagonal of `other`, i.e. the cell of `self` lies in
    /// the boundary of the cell of `other`. The complex is never stored
    /// explicitly; this containment test is the whole face structure.
    pub fn refines(&self, other: &Tiling) -> bool {
        self.n == other.n
            && other
                .diagonals
                .iter()
                .all(|d| self.diagonals.binary_search(d).is_ok())
    }

    /// Image under the rotation `i -> i + 1 (mod n)`.
    pub fn rotated(&self) -> Tiling {
        let n = self.n;
        let mut diagonals: Vec<Diagonal> = self
            .diagonals
            .iter()
            .map(|d| Diagonal::new(d.a % n + 1, d.b % n + 1))
            .collect();
        diagonals.sort_unstable();
        Tiling::from_sorted_unchecked(n, diagonals)
    }

    /// Image under the reflection `i -> n + 1 - i`.
    pub fn reflected(&self) -> Tiling {
        let n = self.n;
        let mut diagonals: Vec<Diagonal> = self
            .diagonals
            .iter()
            .map(|d| Diagonal::new(n + 1 - d.a, n + 1 - d.b))
            .collect();
        diagonals.sort_unstable();
        Tiling::from_sorted_unchecked(n, diagonals)
    }
}

impl fmt::Display for Tiling {
    /// Text form `n=6;[1,3],[3,6]` with sorted diagonals; the empty tiling
    /// of the hexagon is `n=6;`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        let mut first = true;
        for d in &self.diagonals {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tiling({self})")
    }
}

impl FromStr for Tiling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (head, rest) = t
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing ';' in tiling '{t}'")))?;
        let n: u32 = head
            .trim()
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad polygon size in '{head}'")))?;
        let mut diagonals = Vec::new();
        for piece in rest.split(']') {
            let piece = piece.trim().trim_start_matches(',').trim();
            if piece.is_empty() {
                continue;
            }
            let body = piece
                .strip_prefix('[')
                .ok_or_else(|| Error::Parse(format!("expected '[' in '{piece}'")))?;
            let (x, y) = body
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected 'a,b' in '{body}'")))?;
            let a: u32 = x.trim().parse().map_err(|_| Error::Parse(format!("bad vertex '{x}'")))?;
            let b: u32 = y.trim().parse().map_err(|_| Error::Parse(format!("bad vertex '{y}'")))?;
            if a == b {
                return Err(Error::Parse(format!("degenerate diagonal [{a},{b}]")));
            }
            diagonals.push(Diagonal::new(a, b));
        }
        Tiling::new(n, diagonals)
    }
}

/// Visits every tiling of the `n`-gon exactly once, built recursively by the
/// tile containing the boundary edge `(1, n)` of each pending sub-polygon.
/// The visit order is deterministic but unspecified; use
/// [`enumerate_tilings`] for the canonical order.
pub fn for_each_tiling<F: FnMut(&Tiling)>(n: u32, mut f: F) -> Result<()> {
    if n < 3 {
        return Err(Error::Usage(format!("polygon size {n} < 3")));
    }
    let mut diagonals: Vec<Diagonal> = Vec::new();
    let mut pending: Vec<(u32, u32)> = vec![(1, n)];
    build(&mut pending, &mut diagonals, n, &mut f);
    Ok(())
}

fn build<F: FnMut(&Tiling)>(
    pending: &mut Vec<(u32, u32)>,
    diagonals: &mut Vec<Diagonal>,
    n: u32,
    f: &mut F,
) {
    let Some((lo, hi)) = pending.pop() else {
        let mut ds = diagonals.clone();
        ds.sort_unstable();
        f(&Tiling::from_sorted_unchecked(n, ds));
        return;
    };
    // Choose the tile containing the base edge (lo, hi): lo, a non-empty
    // subset of the interior vertices, and hi. Each side skipping interior
    // vertices becomes a diagonal with its own pending sub-polygon.
    let interior = (hi - lo - 1) as usize;
    debug_assert!(interior >= 1);
    for mask in 1u64..(1u64 << interior) {
        let mut prev = lo;
        let mut added = 0usize;
        for bit in 0..interior {
            if mask >> bit & 1 == 1 {
                let v = lo + 1 + bit as u32;
                if v > prev + 1 {
                    diagonals.push(Diagonal::new(prev, v));
                    pending.push((prev, v));
                    added += 1;
                }
                prev = v;
            }
        }
        if hi > prev + 1 {
            diagonals.push(Diagonal::new(prev, hi));
            pending.push((prev, hi));
            added += 1;
        }
        build(pending, diagonals, n, f);
        for _ in 0..added {
            diagonals.pop();
            pending.pop();
        }
    }
    pending.push((lo, hi));
}

/// Every tiling of the `n`-gon exactly once, in canonical lexicographic
/// order on the sorted diagonal lists (the empty tiling first).
pub fn enumerate_tilings(n: u32) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    for_each_tiling(n, |t| out.push(t.clone()))?;
    out.sort_unstable();
    Ok(out)
}

/// The tilings of shape `shape`, in canonical order. The shape weight must
/// be `n - 2`.
pub fn tilings_with_shape(n: u32, shape: &Partition) -> Result<Vec<Tiling>> {
    if shape.weight() != (n as usize).saturating_sub(2) {
        return Err(Error::Usage(format!(
            "shape {shape} has weight {} but tilings of the {n}-gon have shape weight {}",
            shape.weight(),
            n - 2
        )));
    }
    let mut out = Vec::new();
    for_each_tiling(n, |t| {
        if &t.shape() == shape {
            out.push(t.clone());
        }
    })?;
    out.sort_unstable();
    Ok(out)
}

/// Subset-filter oracle: enumerates every subset of the full diagonal set
/// and keeps the pairwise non-crossing ones. Exponential; intended as an
/// independent cross-check for small `n` only.
pub fn enumerate_tilings_naive(n: u32) -> Result<Vec<Tiling>> {
    if n < 3 {
        return Err(Error::Usage(format!("polygon size {n} < 3")));
    }
    let mut all = Vec::new();
    for a in 1..=n {
        for b in a + 2..=n {
            if !(a == 1 && b == n) {
                all.push(Diagonal::new(a, b));
            }
        }
    }
    if all.len() > 25 {
        return Err(Error::Usage(format!(
            "{} candidate diagonals is too many for the naive oracle",
            all.len()
        )));
    }
    let mut out = Vec::new();
    'subset: for mask in 0u64..(1u64 << all.len()) {
        let chosen: Vec<Diagonal> = (0..all.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| all[i])
            .collect();
        for i in 0..chosen.len() {
            for j in i + 1..chosen.len() {
                if crosses(chosen[i], chosen[j]) {
                    continue 'subset;
                }
            }
        }
        out.push(Tiling::from_sorted_unchecked(n, chosen));
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(s: &str) -> Tiling {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn square_tilings() {
        let all = enumerate_tilings(4).unwrap();
        assert_eq!(all, vec![t("n=4;"), t("n=4;[1,3]"), t("n=4;[2,4]")]);
    }

    #[test]
    fn triangle_has_one_tiling() {
        assert_eq!(enumerate_tilings(3).unwrap(), vec![t("n=3;")]);
    }

    #[test]
    fn totals_match_naive_oracle() {
        // 1, 3, 11, 45, 197, 903 for n = 3..8.
        let want = [1usize, 3, 11, 45, 197, 903];
        for (i, &count) in want.iter().enumerate() {
            let n = i as u32 + 3;
            let fast = enumerate_tilings(n).unwrap();
            assert_eq!(fast.len(), count, "n={n}");
            assert_eq!(fast, enumerate_tilings_naive(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(enumerate_tilings(2).is_err());
        assert!(Tiling::new(4, vec![Diagonal::new(1, 2)]).is_err());
        assert!(Tiling::new(4, vec![Diagonal::new(1, 4)]).is_err());
        assert!(Tiling::new(6, vec![Diagonal::new(1, 3), Diagonal::new(2, 4)]).is_err());
        assert!(Tiling::new(6, vec![Diagonal::new(1, 3), Diagonal::new(1, 3)]).is_err());
    }

    #[test]
    fn shape_examples() {
        assert_eq!(t("n=4;").shape(), p("2"));
        assert_eq!(t("n=6;[1,3],[1,4],[1,5]").shape(), p("1,1,1,1"));
        assert_eq!(t("n=6;[1,4]").shape(), p("2,2"));
        assert_eq!(t("n=6;[3,6]").shape(), p("2,2"));
    }

    #[test]
    fn tile_decomposition_counts() {
        for n in 3..=7u32 {
            for tiling in enumerate_tilings(n).unwrap() {
                let tiles = tiling.tiles();
                assert_eq!(tiles.len(), tiling.diagonals().len() + 1);
                let total: usize = tiles.iter().map(|tl| tl.len() - 2).sum();
                assert_eq!(total, n as usize - 2);
            }
        }
    }

    #[test]
    fn region_examples() {
        // Full triangulation of the pentagon: one region of 3 triangles.
        let penta = t("n=5;[1,3],[1,4]");
        assert_eq!(penta.triangulated_regions(), p("3"));
        assert_eq!(penta.fiber(), p("2"));
        // Two isolated triangles next to a quadrilateral.
        let hexa = t("n=6;[1,3],[4,6]");
        assert_eq!(hexa.triangulated_regions(), p("1,1"));
        assert_eq!(hexa.fiber(), p("0"));
        // Three pairwise non-adjacent triangles around a central triangle:
        // all four tiles are triangles and share diagonals, one region.
        let inner = t("n=6;[1,3],[3,5],[1,5]");
        assert_eq!(inner.triangulated_regions(), p("4"));
        // No triangles at all.
        assert_eq!(t("n=6;[1,4]").triangulated_regions(), Partition::empty());
        assert_eq!(t("n=6;[1,4]").fiber(), Partition::empty());
        // Region of 3 plus a singleton in an 8-gon: [1,5] splits off a
        // pentagon 1..5 (triangulated) and [5,7] cuts one triangle.
        let oct = t("n=8;[1,3],[1,4],[1,5],[5,7]");
        assert_eq!(oct.shape(), p("2,1,1,1,1"));
        assert_eq!(oct.triangulated_regions(), p("3,1"));
        assert_eq!(oct.fiber(), p("2"));
    }

    #[test]
    fn flip_examples() {
        assert_eq!(t("n=4;[1,3]").flip_neighbors(), vec![t("n=4;[2,4]")]);
        // A quadrilateral next to a triangle: nothing to flip on the
        // diagonal bounding the quadrilateral.
        assert_eq!(t("n=5;[1,3]").flip_neighbors(), Vec::<Tiling>::new());
        // Every hexagon triangulation has exactly 3 flippable diagonals.
        for tri in tilings_with_shape(6, &p("1,1,1,1")).unwrap() {
            assert_eq!(tri.flip_neighbors().len(), 3, "{tri}");
        }
    }

    #[test]
    fn flip_is_involutive_and_preserves_invariants() {
        for n in 4..=7u32 {
            for tiling in enumerate_tilings(n).unwrap() {
                for nb in tiling.flip_neighbors() {
                    assert_eq!(nb.shape(), tiling.shape());
                    assert_eq!(nb.fiber(), tiling.fiber());
                    assert!(
                        nb.flip_neighbors().contains(&tiling),
                        "flip not involutive: {tiling} -> {nb}"
                    );
                }
            }
        }
    }

    #[test]
    fn symmetry_maps_are_valid() {
        for n in 4..=7u32 {
            for tiling in enumerate_tilings(n).unwrap() {
                let r = tiling.rotated();
                let m = tiling.reflected();
                assert!(Tiling::new(n, r.diagonals().to_vec()).is_ok());
                assert!(Tiling::new(n, m.diagonals().to_vec()).is_ok());
                assert_eq!(r.shape(), tiling.shape());
                assert_eq!(m.shape(), tiling.shape());
                assert_eq!(r.fiber(), tiling.fiber());
                assert_eq!(m.fiber(), tiling.fiber());
            }
        }
    }

    #[test]
    fn face_relation() {
        let vertex = t("n=6;[1,3],[1,4],[1,5]");
        let edge = t("n=6;[1,3],[1,5]");
        let top = t("n=6;");
        assert!(vertex.refines(&edge));
        assert!(vertex.refines(&top));
        assert!(edge.refines(&top));
        assert!(!edge.refines(&vertex));
        assert!(!t("n=6;[2,4]").refines(&edge));
        assert!(!vertex.refines(&t("n=7;")));
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["n=6;", "n=6;[1,3],[3,6]", "n=12;[2,12],[3,5]"] {
            assert_eq!(t(s).to_string(), s);
        }
        assert!("6;[1,3]".parse::<Tiling>().is_err());
        assert!("n=6;[1,2]".parse::<Tiling>().is_err());
        assert!("n=6;(1,3)".parse::<Tiling>().is_err());
    }

    proptest! {
        #[test]
        fn enumerated_tilings_are_non_crossing(n in 3u32..=8, seed in 0usize..1000) {
            let all = enumerate_tilings(n).unwrap();
            let tiling = &all[seed % all.len()];
            for (i, &d) in tiling.diagonals().iter().enumerate() {
                for &e in &tiling.diagonals()[i + 1..] {
                    prop_assert!(!crosses(d, e));
                }
            }
            // Canonical form survives a rebuild.
            let rebuilt = Tiling::new(n, tiling.diagonals().to_vec()).unwrap();
            prop_assert_eq!(rebuilt, tiling.clone());
        }
    }
}
