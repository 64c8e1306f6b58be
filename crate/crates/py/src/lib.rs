//! Python bindings for the flip-census library: the `Partition` and
//! `Tiling` types plus the enumeration, census, formula, and atlas
//! operations. Counts come back as Python ints (arbitrary precision);
//! partitions and tilings use the same text forms as the CLI.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyType;

use flip_census::atlas;
use flip_census::census;
use flip_census::counting;
use flip_census::export;
use flip_census::identity;
use flip_census::partition;
use flip_census::tiling;

fn err(e: flip_census::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An integer partition in canonical (non-increasing) form.
#[pyclass(frozen, eq, ord, hash, from_py_object, name = "Partition", module = "flip_census_py")]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyPartition {
    inner: partition::Partition,
}

impl From<partition::Partition> for PyPartition {
    fn from(inner: partition::Partition) -> Self {
        PyPartition { inner }
    }
}

#[pymethods]
impl PyPartition {
    /// Parses the comma form "3,2,1" (empty or "0" for the empty partition)
    /// or the exponential form "1^2 2^3".
    #[new]
    #[pyo3(signature = (text = "0"))]
    fn new(text: &str) -> PyResult<Self> {
        Ok(text.parse::<partition::Partition>().map_err(err)?.into())
    }

    /// Builds a partition from arbitrary non-negative entries.
    #[classmethod]
    fn from_parts(_cls: &Bound<'_, PyType>, parts: Vec<i64>) -> PyResult<Self> {
        Ok(partition::Partition::normalize(&parts).map_err(err)?.into())
    }

    fn parts(&self) -> Vec<usize> {
        self.inner.parts().to_vec()
    }

    fn weight(&self) -> usize {
        self.inner.weight()
    }

    fn length(&self) -> usize {
        self.inner.len()
    }

    fn multiplicity(&self, i: usize) -> usize {
        self.inner.multiplicity(i)
    }

    /// Every part raised by one (a leading column added to the diagram).
    fn add_column(&self) -> Self {
        self.inner.add_column().into()
    }

    /// Every part lowered by one, zeros dropped; error on the empty
    /// partition.
    fn remove_column(&self) -> PyResult<Self> {
        Ok(self.inner.remove_column().map_err(err)?.into())
    }

    /// Multiset union of the parts.
    fn combine(&self, other: &Self) -> Self {
        self.inner.combine(&other.inner).into()
    }

    /// Removes `a` parts equal to 1; None when there are fewer than `a`.
    fn drop_ones(&self, a: usize) -> Option<Self> {
        self.inner.drop_ones(a).map(Into::into)
    }

    /// Pads with 1-parts up to weight `m` (no-op if already heavier).
    fn fill_up(&self, m: usize) -> Self {
        self.inner.fill_up(m).into()
    }

    /// Trades triangle parts for the larger parts of `mu` raised by one,
    /// preserving weight; None when not enough 1-parts are available.
    fn coarsen(&self, mu: &Self) -> Option<Self> {
        self.inner.coarsen(&mu.inner).map(Into::into)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition(\"{}\")", self.inner)
    }
}

/// A tiling of the convex n-gon by pairwise non-crossing diagonals.
#[pyclass(frozen, eq, ord, hash, from_py_object, name = "Tiling", module = "flip_census_py")]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyTiling {
    inner: tiling::Tiling,
}

impl From<tiling::Tiling> for PyTiling {
    fn from(inner: tiling::Tiling) -> Self {
        PyTiling { inner }
    }
}

#[pymethods]
impl PyTiling {
    /// Parses the text form "n=6;[1,3],[3,6]".
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(text.parse::<tiling::Tiling>().map_err(err)?.into())
    }

    /// Builds a tiling from a polygon size and diagonal endpoint pairs.
    #[classmethod]
    fn from_diagonals(_cls: &Bound<'_, PyType>, n: u32, diagonals: Vec<(u32, u32)>) -> PyResult<Self> {
        let ds = diagonals
            .into_iter()
            .map(|(a, b)| {
                if a == b {
                    Err(PyValueError::new_err(format!("degenerate diagonal [{a},{b}]")))
                } else {
                    Ok(tiling::Diagonal::new(a, b))
                }
            })
            .collect::<PyResult<Vec<_>>>()?;
        Ok(tiling::Tiling::new(n, ds).map_err(err)?.into())
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    fn diagonals(&self) -> Vec<(u32, u32)> {
        self.inner.diagonals().iter().map(|d| (d.a(), d.b())).collect()
    }

    /// Tiles as sorted vertex lists.
    fn tiles(&self) -> Vec<Vec<u32>> {
        self.inner.tiles()
    }

    /// The shape: one part (k - 2) per k-gonal tile.
    fn shape(&self) -> PyPartition {
        self.inner.shape().into()
    }

    /// Sizes of maximal triangulated regions, in triangles.
    fn triangulated_regions(&self) -> PyPartition {
        self.inner.triangulated_regions().into()
    }

    /// The fiber invariant (region sizes with first column removed).
    fn fiber(&self) -> PyPartition {
        self.inner.fiber().into()
    }

    /// All tilings one flip away, in canonical order.
    fn flip_neighbors(&self) -> Vec<PyTiling> {
        self.inner.flip_neighbors().into_iter().map(Into::into).collect()
    }

    /// Cell dimension in the complex: n - 3 - #diagonals.
    fn dim(&self) -> usize {
        atlas::cell_dim(&self.inner)
    }

    /// Face relation: true when this tiling contains every diagonal of
    /// `other`.
    fn refines(&self, other: &Self) -> bool {
        self.inner.refines(&other.inner)
    }

    fn rotated(&self) -> PyTiling {
        self.inner.rotated().into()
    }

    fn reflected(&self) -> PyTiling {
        self.inner.reflected().into()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tiling(\"{}\")", self.inner)
    }
}

/// All partitions of `m` in reverse-lexicographic order.
#[pyfunction]
fn partitions_of(m: usize) -> Vec<PyPartition> {
    partition::partitions_of(m).into_iter().map(Into::into).collect()
}

/// All arity-`s` tuples of partitions whose union is `mu` with a column
/// added.
#[pyfunction]
fn union_fiber(mu: &PyPartition, arity: usize) -> PyResult<Vec<Vec<PyPartition>>> {
    if arity == 0 {
        return Err(PyValueError::new_err("fiber arity must be >= 1"));
    }
    Ok(partition::union_fiber(&mu.inner, arity)
        .into_iter()
        .map(|g| g.components().iter().cloned().map(Into::into).collect())
        .collect())
}

#[pyfunction]
fn binomial(n: u64, k: u64) -> BigInt {
    counting::binomial(n, k)
}

#[pyfunction]
fn catalan(k: u64) -> BigInt {
    counting::catalan(k)
}

#[pyfunction]
fn triangulation_count(gon: u64) -> PyResult<BigInt> {
    if gon < 3 {
        return Err(PyValueError::new_err("triangulation_count needs gon >= 3"));
    }
    Ok(counting::triangulation_count(gon))
}

/// Size of every flip class in the fiber `nu`.
#[pyfunction]
fn flip_class_size(nu: &PyPartition) -> BigInt {
    counting::flip_class_size(&nu.inner)
}

/// Every tiling of the n-gon, canonically ordered.
#[pyfunction]
fn enumerate_tilings(n: u32) -> PyResult<Vec<PyTiling>> {
    Ok(tiling::enumerate_tilings(n)
        .map_err(err)?
        .into_iter()
        .map(Into::into)
        .collect())
}

/// The tilings of one shape, canonically ordered.
#[pyfunction]
fn tilings_with_shape(n: u32, shape: &PyPartition) -> PyResult<Vec<PyTiling>> {
    Ok(tiling::tilings_with_shape(n, &shape.inner)
        .map_err(err)?
        .into_iter()
        .map(Into::into)
        .collect())
}

/// Total number of tilings of the n-gon (dynamic programming).
#[pyfunction]
fn count_tilings(n: usize) -> PyResult<BigInt> {
    census::total_count_dp(n).map_err(err)
}

/// Number of tilings of one shape (dynamic programming).
#[pyfunction]
fn count_shape(n: usize, shape: &PyPartition) -> BigInt {
    census::count_shape_dp(n, &shape.inner)
}

/// Shape counts of the n-gon as {shape text: count}.
#[pyfunction]
fn shape_census(n: usize) -> PyResult<Vec<(String, BigInt)>> {
    if n < 3 {
        return Err(PyValueError::new_err("shape_census needs n >= 3"));
    }
    let row = census::ShapeCounter::new().census_row(n);
    Ok(row.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

/// Flip-equivalence classes of one shape.
#[pyfunction]
fn flip_classes(n: u32, shape: &PyPartition) -> PyResult<Vec<Vec<PyTiling>>> {
    Ok(census::flip_classes(n, &shape.inner)
        .map_err(err)?
        .into_iter()
        .map(|c| c.into_iter().map(Into::into).collect())
        .collect())
}

/// The closed-form number of flip classes of one shape.
#[pyfunction]
fn class_count_formula(n: u32, shape: &PyPartition) -> PyResult<BigInt> {
    identity::class_count_formula(n, &shape.inner).map_err(err)
}

/// The marking multiplicity (product of binomial coefficients).
#[pyfunction]
fn marking_multiplicity(lam: &PyPartition, mu: &PyPartition) -> BigInt {
    identity::marking_multiplicity(&lam.inner, &mu.inner)
}

/// Size of the marked family for (n, lambda, mu).
#[pyfunction]
fn marked_count(n: u32, lam: &PyPartition, mu: &PyPartition) -> PyResult<BigInt> {
    identity::marked_count(n, &lam.inner, &mu.inner).map_err(err)
}

/// Euler reference sum for one rank (expected 1).
#[pyfunction]
fn euler_sum(r: usize) -> BigInt {
    identity::euler_sum(r)
}

/// The overcount factor OF(mu, nu).
#[pyfunction]
fn overcount_factor(mu: &PyPartition, nu: &PyPartition) -> BigInt {
    identity::overcount_factor(&mu.inner, &nu.inner)
}

/// Signed overcount column sum (expected 1).
#[pyfunction]
fn overcount_column_sum(nu: &PyPartition) -> BigInt {
    identity::overcount_column_sum(&nu.inner)
}

/// f-vector of the complex on the n-gon.
#[pyfunction]
fn f_vector(n: u32) -> PyResult<Vec<BigInt>> {
    atlas::f_vector(n).map_err(err)
}

/// Euler characteristic of the complex on the n-gon.
#[pyfunction]
fn euler_char(n: u32) -> PyResult<BigInt> {
    atlas::euler_char(n).map_err(err)
}

/// Orbits of tilings under "trivial", "cyclic", or "dihedral" symmetries,
/// optionally restricted to one cell dimension.
#[pyfunction]
#[pyo3(signature = (n, group, dim = None))]
fn isometry_orbits(n: u32, group: &str, dim: Option<usize>) -> PyResult<Vec<Vec<PyTiling>>> {
    let g = atlas::SymmetryGroup::parse(group).map_err(err)?;
    Ok(atlas::isometry_orbits(n, g, dim)
        .map_err(err)?
        .into_iter()
        .map(|o| o.into_iter().map(Into::into).collect())
        .collect())
}

/// Partition of the complex's vertices into extrinsic profile classes.
#[pyfunction]
fn vertex_profile_classes(n: u32) -> PyResult<Vec<Vec<PyTiling>>> {
    Ok(atlas::vertex_profile_classes(n)
        .map_err(err)?
        .into_iter()
        .map(|c| c.into_iter().map(Into::into).collect())
        .collect())
}

/// Full census of the n-gon as a JSON string (same schema as the CLI).
#[pyfunction]
fn census_json(n: u32) -> PyResult<String> {
    let cen = census::census(n).map_err(err)?;
    let doc = export::CensusDoc::from_census(&cen);
    serde_json::to_string(&doc).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Classification table of cells as a JSON string.
#[pyfunction]
fn cells_json(n: u32) -> PyResult<String> {
    let summary = atlas::classification_table(n).map_err(err)?;
    let doc = export::CellsDoc::from_summary(&summary);
    serde_json::to_string(&doc).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Classification table of cells as markdown.
#[pyfunction]
fn cells_markdown(n: u32) -> PyResult<String> {
    let summary = atlas::classification_table(n).map_err(err)?;
    Ok(export::cells_markdown(&summary))
}

#[pymodule]
fn flip_census_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyTiling>()?;
    m.add_function(wrap_pyfunction!(partitions_of, m)?)?;
    m.add_function(wrap_pyfunction!(union_fiber, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(triangulation_count, m)?)?;
    m.add_function(wrap_pyfunction!(flip_class_size, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_tilings, m)?)?;
    m.add_function(wrap_pyfunction!(tilings_with_shape, m)?)?;
    m.add_function(wrap_pyfunction!(count_tilings, m)?)?;
    m.add_function(wrap_pyfunction!(count_shape, m)?)?;
    m.add_function(wrap_pyfunction!(shape_census, m)?)?;
    m.add_function(wrap_pyfunction!(flip_classes, m)?)?;
    m.add_function(wrap_pyfunction!(class_count_formula, m)?)?;
    m.add_function(wrap_pyfunction!(marking_multiplicity, m)?)?;
    m.add_function(wrap_pyfunction!(marked_count, m)?)?;
    m.add_function(wrap_pyfunction!(euler_sum, m)?)?;
    m.add_function(wrap_pyfunction!(overcount_factor, m)?)?;
    m.add_function(wrap_pyfunction!(overcount_column_sum, m)?)?;
    m.add_function(wrap_pyfunction!(f_vector, m)?)?;
    m.add_function(wrap_pyfunction!(euler_char, m)?)?;
    m.add_function(wrap_pyfunction!(isometry_orbits, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_profile_classes, m)?)?;
    m.add_function(wrap_pyfunction!(census_json, m)?)?;
    m.add_function(wrap_pyfunction!(cells_json, m)?)?;
    m.add_function(wrap_pyfunction!(cells_markdown, m)?)?;
    Ok(())
}
