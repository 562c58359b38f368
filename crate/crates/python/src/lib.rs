//! Python bindings for `pwlab-core`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use pwlab_core::chevrep::restrict_to_levi;
use pwlab_core::coordring::{check_multiplication, phi_check, psi_check};
use pwlab_core::peterson::{cell_filter, find_general_translate, orbit_census};
use pwlab_core::principal::regular_element;
use pwlab_core::rootdata::{RootSystem as CoreRootSystem, TypeLetter};

fn err(e: pwlab_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn type_letter(s: &str) -> PyResult<TypeLetter> {
    s.parse().map_err(err)
}

fn zero_based(subset: &[usize]) -> PyResult<Vec<usize>> {
    subset
        .iter()
        .map(|&i| {
            i.checked_sub(1)
                .ok_or_else(|| PyValueError::new_err("simple root indices are 1-based"))
        })
        .collect()
}

#[pyclass(frozen)]
struct RootSystem {
    inner: CoreRootSystem,
}

#[pymethods]
impl RootSystem {
    #[new]
    fn new(letter: &str, rank: usize) -> PyResult<Self> {
        Ok(RootSystem {
            inner: CoreRootSystem::new(type_letter(letter)?, rank).map_err(err)?,
        })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.inner.cartan_matrix().to_vec()
    }

    /// Positive roots in simple-root coordinates.
    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner.positive_roots().to_vec()
    }

    fn weyl_order(&self) -> usize {
        self.inner.weyl_group().len()
    }

    fn exponents(&self) -> Vec<i64> {
        self.inner.exponents()
    }

    /// Dominant weights below `lambda` (fundamental-weight coordinates).
    fn dominant_weights_below(&self, lambda: Vec<i64>) -> PyResult<Vec<Vec<i64>>> {
        let w = self.inner.weight(lambda);
        Ok(self
            .inner
            .dominant_weights_below(&w)
            .map_err(err)?
            .into_iter()
            .map(|w| w.coords)
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.name())
    }
}

/// A root system with its Lie algebra, principal nilpotent and module cache.
#[pyclass(frozen)]
struct Lab {
    inner: pwlab_core::Lab,
}

#[pymethods]
impl Lab {
    #[new]
    #[pyo3(signature = (letter, rank, max_dim = 5000))]
    fn new(letter: &str, rank: usize, max_dim: usize) -> PyResult<Self> {
        Ok(Lab {
            inner: pwlab_core::Lab::with_max_dim(type_letter(letter)?, rank, max_dim).map_err(err)?,
        })
    }

    fn algebra_dim(&self) -> usize {
        self.inner.algebra().dim()
    }

    /// h-degrees of the centralizer basis of the principal nilpotent.
    fn centralizer_degrees(&self) -> Vec<i64> {
        self.inner.principal().degrees.clone()
    }

    /// Dimension of the irreducible module with the given highest weight.
    fn rep_dim(&self, weight: Vec<i64>) -> PyResult<usize> {
        let w = self.inner.root_system().weight(weight);
        Ok(self.inner.rep(&w).map_err(err)?.dim())
    }

    fn weight_multiplicities(&self, weight: Vec<i64>) -> PyResult<Vec<(Vec<i64>, usize)>> {
        let w = self.inner.root_system().weight(weight);
        Ok(self.inner.rep(&w).map_err(err)?.weight_multiplicities())
    }

    /// Census rows as dictionaries; `orbit_count` is `None` for infinitely many orbits.
    fn census(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &orbit_census(self.inner.algebra(), self.inner.principal()))
    }

    fn cell_filter(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &cell_filter(self.inner.algebra(), self.inner.principal()).map_err(err)?)
    }

    /// Degree-`n` isomorphism check over the principal centralizer; `lam` in root coordinates.
    fn phi_check(&self, py: Python<'_>, lam: Vec<i64>, n: i64) -> PyResult<Py<PyAny>> {
        let w = self.inner.lambda_from_root_coords(&lam).map_err(err)?;
        to_py(py, &phi_check(&self.inner, &w, n).map_err(err)?)
    }

    /// Degree-`n` check for `x = s + e_I` with a searched translate; `subset` is 1-based.
    #[pyo3(signature = (lam, n, subset, s_params = None, seed = 0))]
    fn psi_check(
        &self,
        py: Python<'_>,
        lam: Vec<i64>,
        n: i64,
        subset: Vec<usize>,
        s_params: Option<Vec<i64>>,
        seed: u64,
    ) -> PyResult<Py<PyAny>> {
        let lab = &self.inner;
        let w = lab.lambda_from_root_coords(&lam).map_err(err)?;
        let subset = zero_based(&subset)?;
        let re = regular_element(lab.algebra(), &subset, s_params.as_deref()).map_err(err)?;
        let v = lab.rep(&w).map_err(err)?;
        let blocks = restrict_to_levi(lab.root_system(), &v, &re.subset);
        let h = find_general_translate(lab.algebra(), &v, &blocks, seed, 200).map_err(err)?;
        to_py(py, &psi_check(lab, &w, n, &re, &h).map_err(err)?)
    }

    /// The product law on basis pairs of `V_mu ⊗ V_nu` (fundamental-weight coordinates).
    #[pyo3(signature = (mu, nu, samples = 20, seed = 0))]
    fn check_multiplication(
        &self,
        py: Python<'_>,
        mu: Vec<i64>,
        nu: Vec<i64>,
        samples: usize,
        seed: u64,
    ) -> PyResult<Py<PyAny>> {
        let rs = self.inner.root_system();
        let r = check_multiplication(&self.inner, &rs.weight(mu), &rs.weight(nu), samples, seed).map_err(err)?;
        to_py(py, &r)
    }
}

/// Run the command line with the given arguments; returns the exit code.
#[pyfunction]
fn run_cli(args: Vec<String>) -> i32 {
    pwlab_core::cli::run(std::iter::once("pwlab".to_string()).chain(args))
}

#[pymodule]
fn pwlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RootSystem>()?;
    m.add_class::<Lab>()?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
