//! Python bindings: trees and Möbius elements, primitive dimensions,
//! integer relations and Ξ, and the verification front end.

#![allow(clippy::useless_conversion)]

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use magbialg::bialg;
use magbialg::colored::{colored_prim_dim as colored_dim, ColorSet};
use magbialg::error::Error;
use magbialg::intrel;
use magbialg::linalg::LinComb;
use magbialg::order;
use magbialg::trees;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A planar binary tree, written like "(|(||))".
#[pyclass(name = "Tree", frozen, eq, hash, ord)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyTree(trees::Tree);

#[pymethods]
impl PyTree {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyTree).map_err(err)
    }

    #[staticmethod]
    fn from_dyck(word: &str) -> PyResult<Self> {
        trees::Tree::from_dyck(word).map(PyTree).map_err(err)
    }

    #[getter]
    fn leaves(&self) -> usize {
        self.0.leaves()
    }

    fn dyck(&self) -> String {
        self.0.dyck()
    }

    fn __str__(&self) -> String {
        self.0.compact()
    }

    fn __repr__(&self) -> String {
        format!("Tree('{}')", self.0.compact())
    }
}

/// A reflexive relation on [n], given by its off-diagonal arcs.
#[pyclass(name = "IntRel", frozen, eq, hash, ord)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyIntRel(intrel::IntRel);

#[pymethods]
impl PyIntRel {
    #[new]
    #[pyo3(signature = (n, arcs = Vec::new()))]
    fn new(n: usize, arcs: Vec<(u32, u32)>) -> PyResult<Self> {
        intrel::IntRel::new(n, arcs).map(PyIntRel).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(PyIntRel).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    #[getter]
    fn arcs(&self) -> Vec<(u32, u32)> {
        self.0.arcs().to_vec()
    }

    fn restrict(&self, s: Vec<usize>) -> PyResult<Self> {
        self.0.restrict(&s).map(PyIntRel).map_err(err)
    }

    fn is_sqcup_irreducible(&self) -> bool {
        intrel::is_sqcup_irreducible(&self.0)
    }

    fn sqcup_factor(&self) -> Vec<PyIntRel> {
        intrel::sqcup_factor(&self.0).into_iter().map(PyIntRel).collect()
    }

    /// The words (α_{n-1}, …, α_1) rebuilding the relation from #.
    fn canonical_word(&self) -> PyResult<Vec<String>> {
        Ok(intrel::canonical_word(&self.0).map_err(err)?.iter().map(ToString::to_string).collect())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("IntRel({}, {:?})", self.0.size(), self.0.arcs())
    }
}

fn terms<B: Ord + Clone, P>(x: &LinComb<B>, wrap: impl Fn(B) -> P) -> Vec<(P, BigInt)> {
    x.iter().map(|(b, c)| (wrap(b.clone()), c.clone())).collect()
}

fn op(name: &str) -> PyResult<intrel::Op> {
    match name {
        "⊔" | "o" | "disjoint" => Ok(intrel::Op::Disjoint),
        "↑" | "u" | "up" => Ok(intrel::Op::Up),
        "↓" | "d" | "down" => Ok(intrel::Op::Down),
        "↕" | "b" | "both" => Ok(intrel::Op::Both),
        _ => Err(PyValueError::new_err(format!("unknown product {name:?}"))),
    }
}

#[pyfunction]
fn enumerate_trees(n: usize) -> PyResult<Vec<PyTree>> {
    Ok(trees::enumerate(n).map_err(err)?.into_iter().map(PyTree).collect())
}

/// M_t as (tree, coefficient) pairs.
#[pyfunction]
fn moebius_elem(t: &PyTree) -> Vec<(PyTree, BigInt)> {
    terms(&bialg::moebius_elem(&t.0), PyTree)
}

/// M_t from the Möbius function of the Tamari lattice.
#[pyfunction]
fn moebius_elem_oracle(t: &PyTree) -> PyResult<Vec<(PyTree, BigInt)>> {
    Ok(terms(&bialg::moebius_elem_oracle(&t.0).map_err(err)?, PyTree))
}

#[pyfunction]
fn tamari_leq(a: &PyTree, b: &PyTree) -> PyResult<bool> {
    order::tamari_leq(&a.0, &b.0).map_err(err)
}

#[pyfunction]
fn tamari_mobius(a: &PyTree, b: &PyTree) -> PyResult<i64> {
    order::tamari_mobius(&a.0, &b.0).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, colors = None))]
fn prim_dim(n: usize, colors: Option<usize>) -> PyResult<usize> {
    match colors {
        None => bialg::prim_dim(n).map_err(err),
        Some(k) => colored_dim(n, &ColorSet::new(k).map_err(err)?).map_err(err),
    }
}

#[pyfunction]
fn prod_basic(r: &PyIntRel, q: &PyIntRel, product: &str) -> PyResult<PyIntRel> {
    Ok(PyIntRel(intrel::prod_basic(&r.0, &q.0, op(product)?)))
}

/// R ∗_α Q with α written like "↑⊔↓" or "uod".
#[pyfunction]
fn prod_alpha(r: &PyIntRel, q: &PyIntRel, alpha: &str) -> PyResult<PyIntRel> {
    let a: intrel::AlphaMap = alpha.parse().map_err(err)?;
    Ok(PyIntRel(intrel::prod_alpha(&r.0, &q.0, &a)))
}

#[pyfunction]
fn shuffle_prod(r: &PyIntRel, q: &PyIntRel, product: &str) -> PyResult<Vec<(PyIntRel, BigInt)>> {
    Ok(terms(&intrel::shuffle_prod(&r.0, &q.0, op(product)?), PyIntRel))
}

#[pyfunction]
fn xi(r: &PyIntRel) -> PyResult<Vec<(PyIntRel, BigInt)>> {
    Ok(terms(&intrel::xi(&r.0).map_err(err)?, PyIntRel))
}

#[pyfunction]
fn is_primitive_rel(x: Vec<(PyIntRel, BigInt)>) -> bool {
    let x: LinComb<intrel::IntRel> = x.into_iter().map(|(r, c)| (r.0, c)).collect();
    bialg::is_primitive(&x)
}

/// Run the command-line front end; returns (exit status, output).
#[pyfunction]
fn cli(args: Vec<String>) -> (i32, String) {
    magbialg::cli::run(std::iter::once("magbialg".to_string()).chain(args))
}

#[pymodule]
fn magbialg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTree>()?;
    m.add_class::<PyIntRel>()?;
    m.add_function(wrap_pyfunction!(enumerate_trees, m)?)?;
    m.add_function(wrap_pyfunction!(moebius_elem, m)?)?;
    m.add_function(wrap_pyfunction!(moebius_elem_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(tamari_leq, m)?)?;
    m.add_function(wrap_pyfunction!(tamari_mobius, m)?)?;
    m.add_function(wrap_pyfunction!(prim_dim, m)?)?;
    m.add_function(wrap_pyfunction!(prod_basic, m)?)?;
    m.add_function(wrap_pyfunction!(prod_alpha, m)?)?;
    m.add_function(wrap_pyfunction!(shuffle_prod, m)?)?;
    m.add_function(wrap_pyfunction!(xi, m)?)?;
    m.add_function(wrap_pyfunction!(is_primitive_rel, m)?)?;
    m.add_function(wrap_pyfunction!(cli, m)?)?;
    Ok(())
}
