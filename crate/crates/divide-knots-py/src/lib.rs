use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use divide_knots::atlas::svg::{render_svg, SvgOptions};
use divide_knots::atlas::{row_for, sweep as sweep_rows, AtlasRow, SweepSpec};
use divide_knots::berge::{delta_choice, record_for, BergeType};
use divide_knots::braid::{cp_braid, BraidWord};
use divide_knots::invar::{alexander_link, profile, torus_alexander, AlexanderCaps};
use divide_knots::lshape::{LRegion, Rect};
use divide_knots::sign::Sign;
use divide_knots::trace::{is_immersed_arc, place, place_rect, trace as trace_curve};

fn input_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn sign_from(value: i64, name: &str) -> PyResult<Sign> {
    match value {
        1 => Ok(Sign::Plus),
        -1 => Ok(Sign::Minus),
        other => Err(input_err(format!("{name} must be 1 or -1, got {other}"))),
    }
}

fn type_from(s: &str) -> PyResult<BergeType> {
    match s.to_ascii_uppercase().as_str() {
        "III" => Ok(BergeType::III),
        "IV" => Ok(BergeType::IV),
        "V" => Ok(BergeType::V),
        "VI" => Ok(BergeType::VI),
        other => Err(input_err(format!(
            "unknown type {other:?} (expected III, IV, V or VI)"
        ))),
    }
}

/// Summary of a traced divide curve.
#[pyclass(frozen, get_all)]
struct Trace {
    arcs: usize,
    circles: usize,
    double_points: usize,
    immersed_arc: bool,
    endpoints: Vec<(i64, i64)>,
}

#[pymethods]
impl Trace {
    fn __repr__(&self) -> String {
        format!(
            "Trace(arcs={}, circles={}, double_points={})",
            self.arcs, self.circles, self.double_points
        )
    }
}

fn traced(placed: &divide_knots::trace::PlacedRegion) -> PyResult<Trace> {
    let summary = trace_curve(placed).map_err(input_err)?;
    Ok(Trace {
        arcs: summary.arcs,
        circles: summary.circles,
        double_points: summary.double_point_count,
        immersed_arc: is_immersed_arc(&summary),
        endpoints: summary.endpoints.clone(),
    })
}

/// An L-shaped lattice region [a1,a2;b1,b2].
#[pyclass(frozen)]
struct Region {
    inner: LRegion,
}

#[pymethods]
impl Region {
    #[new]
    fn new(a1: i64, a2: i64, b1: i64, b2: i64) -> PyResult<Self> {
        let inner = LRegion::new(a1, a2, b1, b2).map_err(input_err)?;
        Ok(Region { inner })
    }

    #[getter]
    fn a1(&self) -> i64 {
        self.inner.a1()
    }

    #[getter]
    fn a2(&self) -> i64 {
        self.inner.a2()
    }

    #[getter]
    fn b1(&self) -> i64 {
        self.inner.b1()
    }

    #[getter]
    fn b2(&self) -> i64 {
        self.inner.b2()
    }

    fn area(&self) -> i64 {
        self.inner.area()
    }

    fn double_points(&self) -> PyResult<i64> {
        self.inner.double_points().map_err(input_err)
    }

    fn swapped(&self) -> Region {
        Region {
            inner: self.inner.swap(),
        }
    }

    /// Braid word of the divide-curve knot, as a macro string.
    fn braid(&self) -> String {
        cp_braid(&self.inner).to_macro_string()
    }

    fn trace(&self) -> PyResult<Trace> {
        traced(&place(&self.inner))
    }

    fn svg(&self) -> PyResult<String> {
        render_svg(&place(&self.inner), &SvgOptions::default()).map_err(input_err)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Region({}, {}, {}, {})",
            self.inner.a1(),
            self.inner.a2(),
            self.inner.b1(),
            self.inner.b2()
        )
    }
}

/// One lens-space surgery knot with its derived presentation and invariants.
#[pyclass(frozen)]
struct Knot {
    row: AtlasRow,
}

#[pymethods]
impl Knot {
    #[new]
    #[pyo3(signature = (knot_type, eps, big_a, k=0, t=0, delta=None))]
    fn new(
        knot_type: &str,
        eps: i64,
        big_a: i64,
        k: i64,
        t: i64,
        delta: Option<i64>,
    ) -> PyResult<Self> {
        let knot_type = type_from(knot_type)?;
        let eps = sign_from(eps, "eps")?;
        let delta = match delta {
            Some(d) => sign_from(d, "delta")?,
            None => delta_choice(eps, t),
        };
        let record = record_for(knot_type, delta, eps, big_a, k, t).map_err(input_err)?;
        let row = row_for(&record, AlexanderCaps::default()).map_err(input_err)?;
        Ok(Knot { row })
    }

    #[getter]
    fn knot_type(&self) -> String {
        self.row.record.params.knot_type.to_string()
    }

    #[getter]
    fn delta(&self) -> i64 {
        self.row.record.params.delta.val()
    }

    #[getter]
    fn epsilon(&self) -> i64 {
        self.row.record.params.epsilon.val()
    }

    #[getter]
    fn big_a(&self) -> i64 {
        self.row.record.params.big_a
    }

    #[getter]
    fn k(&self) -> i64 {
        self.row.record.params.k
    }

    #[getter]
    fn t(&self) -> i64 {
        self.row.record.params.t
    }

    #[getter]
    fn small_a(&self) -> i64 {
        self.row.record.small_a
    }

    #[getter]
    fn l(&self) -> i64 {
        self.row.record.l
    }

    #[getter]
    fn big_b(&self) -> i64 {
        self.row.record.big_b
    }

    #[getter]
    fn b(&self) -> i64 {
        self.row.record.b
    }

    /// Surgery coefficient b*B + delta*A.
    #[getter]
    fn coef(&self) -> i64 {
        self.row.record.coef
    }

    #[getter]
    fn area(&self) -> i64 {
        self.row.area
    }

    #[getter]
    fn crossings(&self) -> i64 {
        self.row.double_points
    }

    #[getter]
    fn genus(&self) -> i64 {
        self.row.genus
    }

    #[getter]
    fn braid(&self) -> String {
        self.row.braid.clone()
    }

    /// Alexander coefficients, lowest degree first; None above the size caps.
    #[getter]
    fn alexander(&self) -> Option<Vec<i64>> {
        self.row.alexander.clone()
    }

    fn region(&self) -> Region {
        Region {
            inner: self.row.region,
        }
    }

    /// Area minus |coef|, always 0 or 1.
    #[getter]
    fn gap(&self) -> i64 {
        self.row.checks.area_coef_gap
    }

    fn passes_checks(&self) -> bool {
        let c = self.row.checks;
        c.gap_matches_selector && c.immersed_arc && c.genus_triple_match && c.coef_positive
    }

    /// The same knot with the sign delta flipped.
    fn mirrored(&self) -> PyResult<Knot> {
        let p = self.row.record.params;
        let record = record_for(p.knot_type, -p.delta, p.epsilon, p.big_a, p.k, p.t)
            .map_err(input_err)?;
        let row = row_for(&record, AlexanderCaps::default()).map_err(input_err)?;
        Ok(Knot { row })
    }

    fn __repr__(&self) -> String {
        let p = self.row.record.params;
        format!(
            "K_{}({:+},{:+},{},{},{})",
            p.knot_type,
            p.delta.val(),
            p.epsilon.val(),
            p.big_a,
            p.k,
            p.t
        )
    }
}

/// Alexander polynomial of a braid closure, coefficients lowest degree first.
#[pyfunction]
fn alexander(braid: &str) -> PyResult<Vec<i64>> {
    let word = BraidWord::parse(braid).map_err(input_err)?;
    let poly = alexander_link(&word).map_err(input_err)?;
    let (_, coeffs) = poly.to_i64_parts().map_err(input_err)?;
    Ok(coeffs)
}

/// Genus of a braid closure.
#[pyfunction]
fn genus(braid: &str) -> PyResult<i64> {
    let word = BraidWord::parse(braid).map_err(input_err)?;
    Ok(profile(&word).map_err(input_err)?.genus)
}

/// Alexander polynomial of the (p,q) torus knot.
#[pyfunction]
#[pyo3(name = "torus_alexander")]
fn torus_alexander_py(p: i64, q: i64) -> PyResult<Vec<i64>> {
    let poly = torus_alexander(p, q).map_err(input_err)?;
    let (_, coeffs) = poly.to_i64_parts().map_err(input_err)?;
    Ok(coeffs)
}

/// Trace the divide curve of an a-by-b rectangle.
#[pyfunction]
fn rect_trace(a: i64, b: i64) -> PyResult<Trace> {
    let rect = Rect::new(a, b).map_err(input_err)?;
    traced(&place_rect(&rect))
}

/// Walk a parameter grid, e.g. sweep(grid="A=2..6,k=0..1,t=-1..1", types="III,V").
#[pyfunction]
#[pyo3(signature = (grid=None, types=None))]
fn sweep(grid: Option<&str>, types: Option<&str>) -> PyResult<Vec<Knot>> {
    let mut spec = match grid {
        Some(grid) => SweepSpec::parse_grid(grid).map_err(input_err)?,
        None => SweepSpec::default(),
    };
    if let Some(types) = types {
        spec.types = SweepSpec::parse_types(types).map_err(input_err)?;
    }
    let rows = sweep_rows(&spec).map_err(input_err)?;
    Ok(rows.into_iter().map(|row| Knot { row }).collect())
}

#[pymodule]
fn divide_knots_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Knot>()?;
    m.add_class::<Region>()?;
    m.add_class::<Trace>()?;
    m.add_function(wrap_pyfunction!(alexander, m)?)?;
    m.add_function(wrap_pyfunction!(genus, m)?)?;
    m.add_function(wrap_pyfunction!(torus_alexander_py, m)?)?;
    m.add_function(wrap_pyfunction!(rect_trace, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
