//! Python bindings for `partmatrix`.
//!
//! Partitions cross the boundary as `Partition` objects; functions that take a
//! partition also accept a list of parts or a comma-separated string.

use std::collections::BTreeMap;

use partmatrix::bitmatrix::{self, BitMatrix, Cell, MatrixFamily};
use partmatrix::identities::{self, exactly_k_distinct_even, one_part_repeated_exactly, TheoremCheck};
use partmatrix::{bijections, ClassPredicate, FamilySelector};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(err: partmatrix::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

#[pyclass(name = "Partition", module = "partmatrix", frozen, eq, hash, ord, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PyPartition {
    inner: partmatrix::Partition,
}

impl From<partmatrix::Partition> for PyPartition {
    fn from(inner: partmatrix::Partition) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyPartition {
    #[new]
    #[pyo3(signature = (parts = Vec::new()))]
    fn new(parts: Vec<u64>) -> PyResult<Self> {
        partmatrix::Partition::from_parts(parts).map(Self::from).map_err(value_error)
    }

    /// Parses the comma-separated text form, e.g. "4,2,1,1".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse::<partmatrix::Partition>().map(Self::from).map_err(value_error)
    }

    #[getter]
    fn weight(&self) -> u64 {
        self.inner.weight()
    }

    /// Parts in decreasing order.
    fn parts(&self) -> Vec<u64> {
        self.inner.parts_desc()
    }

    fn multiplicities(&self) -> BTreeMap<u64, u64> {
        self.inner.iter().collect()
    }

    fn multiplicity(&self, part: u64) -> u64 {
        self.inner.multiplicity(part)
    }

    fn num_parts(&self) -> u64 {
        self.inner.num_parts()
    }

    fn num_distinct_parts(&self) -> u64 {
        self.inner.num_distinct_parts()
    }

    fn is_odd(&self) -> bool {
        self.inner.is_odd()
    }

    fn is_distinct(&self) -> bool {
        self.inner.is_distinct()
    }

    fn is_g_member(&self) -> bool {
        identities::is_g_member(&self.inner)
    }

    fn is_h_member(&self) -> bool {
        identities::is_h_member(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.num_parts() as usize
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition([{}])", self.inner)
    }
}

/// Anything that names a partition.
#[derive(FromPyObject)]
enum PartitionArg<'py> {
    Object(PyRef<'py, PyPartition>),
    Parts(Vec<u64>),
    Text(String),
}

impl PartitionArg<'_> {
    fn resolve(self) -> PyResult<partmatrix::Partition> {
        match self {
            Self::Object(p) => Ok(p.inner.clone()),
            Self::Parts(parts) => partmatrix::Partition::from_parts(parts).map_err(value_error),
            Self::Text(text) => text.parse().map_err(value_error),
        }
    }
}

fn class_predicate(name: &str) -> PyResult<ClassPredicate> {
    Ok(match name {
        "all" => ClassPredicate::All,
        "odd" => ClassPredicate::OddParts,
        "distinct" => ClassPredicate::DistinctParts,
        "G" => ClassPredicate::GClass,
        "H" => ClassPredicate::HClass,
        "one-even" => exactly_k_distinct_even(1),
        "one-triple" => one_part_repeated_exactly(3),
        "one-quintuple" => one_part_repeated_exactly(5),
        other => return Err(PyValueError::new_err(format!("unknown partition class {other:?}"))),
    })
}

fn selector(p: u32, name: &str) -> PyResult<FamilySelector> {
    match name {
        "identity" => FamilySelector::identity(p),
        "transpose" => FamilySelector::transpose(p),
        other => return Err(PyValueError::new_err(format!("unknown selector {other:?}"))),
    }
    .map_err(value_error)
}

/// Partitions of `n` in a class, in decreasing-lexicographic order.
#[pyfunction]
#[pyo3(signature = (n, cls = "all"))]
fn gen_partitions(n: u64, cls: &str) -> PyResult<Vec<PyPartition>> {
    Ok(partmatrix::gen_partitions(n, class_predicate(cls)?).map(PyPartition::from).collect())
}

/// `(members, total_parts, total_distinct_parts)` over a class.
#[pyfunction]
#[pyo3(signature = (n, cls = "all"))]
fn class_part_stats(n: u64, cls: &str) -> PyResult<(u64, u64, u64)> {
    let s = partmatrix::class_part_stats(n, class_predicate(cls)?);
    Ok((s.members, s.total_parts, s.total_distinct_parts))
}

#[pyfunction]
fn split_part(v: u64) -> PyResult<(u64, u32)> {
    let key = bitmatrix::split_part(v).map_err(value_error)?;
    Ok((key.odd, key.exponent))
}

/// Matrix family as `{odd base: sorted [(row, col), ...]}`.
#[pyfunction]
fn encode(partition: PartitionArg<'_>) -> PyResult<BTreeMap<u64, Vec<(u32, u32)>>> {
    let family = bitmatrix::encode(&partition.resolve()?);
    Ok(family
        .iter()
        .map(|(x, m)| (x, m.cells().map(|c| (c.row, c.col)).collect()))
        .collect())
}

#[pyfunction]
fn decode(family: BTreeMap<u64, Vec<(u32, u32)>>) -> PyResult<PyPartition> {
    let mut out = MatrixFamily::new();
    for (x, cells) in family {
        let matrix = BitMatrix::from_cells(cells.into_iter().map(Cell::from)).map_err(value_error)?;
        out.insert(x, matrix).map_err(value_error)?;
    }
    Ok(bitmatrix::decode(&out).into())
}

/// Text grids of every matrix, separated by blank lines.
#[pyfunction]
fn render_matrices(partition: PartitionArg<'_>) -> PyResult<String> {
    let family = bitmatrix::encode(&partition.resolve()?);
    let blocks: Vec<String> = family.iter().map(|(x, m)| bitmatrix::render(x, m)).collect();
    Ok(blocks.join("\n"))
}

#[pyfunction]
#[pyo3(signature = (partition, d = 2))]
fn glaisher_forward(partition: PartitionArg<'_>, d: u64) -> PyResult<PyPartition> {
    bijections::glaisher_forward(&partition.resolve()?, d).map(Into::into).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (partition, d = 2))]
fn glaisher_inverse(partition: PartitionArg<'_>, d: u64) -> PyResult<PyPartition> {
    bijections::glaisher_inverse(&partition.resolve()?, d).map(Into::into).map_err(value_error)
}

#[pyfunction]
fn thm3_map(partition: PartitionArg<'_>) -> PyResult<PyPartition> {
    Ok(bijections::thm3_map(&partition.resolve()?).into())
}

#[pyfunction]
fn thm3_inverse(partition: PartitionArg<'_>) -> PyResult<PyPartition> {
    Ok(bijections::thm3_inverse(&partition.resolve()?).into())
}

#[pyfunction]
#[pyo3(signature = (partition, p = 2, selector = "identity"))]
fn thm5_map(partition: PartitionArg<'_>, p: u32, selector: &str) -> PyResult<PyPartition> {
    let sel = self::selector(p, selector)?;
    bijections::thm5_map(&partition.resolve()?, p, &sel).map(Into::into).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (partition, p = 2, selector = "identity"))]
fn thm5_inverse(partition: PartitionArg<'_>, p: u32, selector: &str) -> PyResult<PyPartition> {
    let sel = self::selector(p, selector)?;
    bijections::thm5_inverse(&partition.resolve()?, p, &sel).map(Into::into).map_err(value_error)
}

#[pyclass(name = "TheoremCheck", module = "partmatrix", frozen, get_all)]
struct PyTheoremCheck {
    theorem: String,
    n: u64,
    lhs: i64,
    rhs: i64,
    k: Option<u64>,
    p: Option<u32>,
    d: Option<u64>,
}

impl From<TheoremCheck> for PyTheoremCheck {
    fn from(c: TheoremCheck) -> Self {
        Self {
            theorem: c.theorem.to_string(),
            n: c.n,
            lhs: c.lhs,
            rhs: c.rhs,
            k: c.params.k,
            p: c.params.p,
            d: c.params.d,
        }
    }
}

#[pymethods]
impl PyTheoremCheck {
    #[getter]
    fn passed(&self) -> bool {
        self.lhs == self.rhs
    }

    fn __repr__(&self) -> String {
        format!(
            "TheoremCheck({} n={} lhs={} rhs={} {})",
            self.theorem,
            self.n,
            self.lhs,
            self.rhs,
            if self.passed() { "pass" } else { "fail" }
        )
    }
}

/// Evaluates theorem 1-6 at `n`; `k` is required for 3 and 5, `p` for 5, `d` for 4.
#[pyfunction]
#[pyo3(signature = (theorem, n, k = None, p = None, d = None))]
fn check(theorem: u8, n: u64, k: Option<u64>, p: Option<u32>, d: Option<u64>) -> PyResult<PyTheoremCheck> {
    let missing = |name: &str| PyValueError::new_err(format!("theorem {theorem} needs `{name}`"));
    let c = match theorem {
        1 => identities::thm1_check(n),
        2 => identities::thm2_check(n),
        3 => identities::thm3_check(n, k.ok_or_else(|| missing("k"))?),
        4 => identities::thm4_check(n, d.ok_or_else(|| missing("d"))?).map_err(value_error)?,
        5 => identities::thm5_check(n, k.ok_or_else(|| missing("k"))?, p.ok_or_else(|| missing("p"))?)
            .map_err(value_error)?,
        6 => identities::thm6_check(n),
        other => return Err(PyValueError::new_err(format!("unknown theorem {other}"))),
    };
    Ok(c.into())
}

#[pyfunction]
fn a_exactly_one_even(n: u64) -> u64 {
    identities::a_exactly_one_even(n)
}

#[pyfunction]
fn a1_one_triple(n: u64) -> u64 {
    identities::a1_one_triple(n)
}

#[pyfunction]
fn f_one_quintuple(n: u64) -> u64 {
    identities::f_one_quintuple(n)
}

#[pyfunction]
fn conj1_decomposed(n: u64) -> u64 {
    identities::conj1_decomposed(n)
}

#[pyfunction]
fn conj1_split_count(n: u64) -> u64 {
    identities::conj1_split_count(n)
}

#[pyfunction]
fn conj2_decomposed(n: u64) -> u64 {
    identities::conj2_decomposed(n)
}

#[pyfunction]
fn glaisher_counts(n: u64, d: u64) -> PyResult<(u64, u64)> {
    identities::glaisher_counts(n, d).map_err(value_error)
}

#[pymodule(name = "partmatrix")]
fn partmatrix_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyTheoremCheck>()?;
    m.add_function(wrap_pyfunction!(gen_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(class_part_stats, m)?)?;
    m.add_function(wrap_pyfunction!(split_part, m)?)?;
    m.add_function(wrap_pyfunction!(encode, m)?)?;
    m.add_function(wrap_pyfunction!(decode, m)?)?;
    m.add_function(wrap_pyfunction!(render_matrices, m)?)?;
    m.add_function(wrap_pyfunction!(glaisher_forward, m)?)?;
    m.add_function(wrap_pyfunction!(glaisher_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(thm3_map, m)?)?;
    m.add_function(wrap_pyfunction!(thm3_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(thm5_map, m)?)?;
    m.add_function(wrap_pyfunction!(thm5_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(a_exactly_one_even, m)?)?;
    m.add_function(wrap_pyfunction!(a1_one_triple, m)?)?;
    m.add_function(wrap_pyfunction!(f_one_quintuple, m)?)?;
    m.add_function(wrap_pyfunction!(conj1_decomposed, m)?)?;
    m.add_function(wrap_pyfunction!(conj1_split_count, m)?)?;
    m.add_function(wrap_pyfunction!(conj2_decomposed, m)?)?;
    m.add_function(wrap_pyfunction!(glaisher_counts, m)?)?;
    Ok(())
}
