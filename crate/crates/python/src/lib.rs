//! Python bindings. Elements of `Hol(C_n)` are exponent pairs `(a, b)` meaning
//! `x^a y^b`; automorphisms are pairs `(c, j)` meaning `x ↦ x^(k^j)`, `y ↦ x^c y`.

use holomorphy::automorphisms::{self, VerificationOutcome};
use holomorphy::oracle::{self, Presentation};
use holomorphy::verify::{self, Suite, VerifyConfig};
use holomorphy::{numtheory, AutData, Error, HolContext, HolElem};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

type Pair = (i64, i64);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Consistency(_) | Error::Json(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[pyclass(frozen, module = "pyholomorphy")]
struct Holomorph {
    ctx: HolContext,
}

impl Holomorph {
    fn elem(&self, g: Pair) -> HolElem {
        self.ctx.elem(g.0, g.1)
    }

    fn aut(&self, alpha: Pair) -> AutData {
        AutData::new(&self.ctx, alpha.0, alpha.1)
    }
}

fn aut_pair(a: AutData) -> (u64, u64) {
    (a.c(), a.j())
}

#[pymethods]
impl Holomorph {
    /// `Hol(C_n)` for `n = 2p^e`, with `k` defaulting to the least primitive root.
    #[new]
    #[pyo3(signature = (n, k=None))]
    fn new(n: u64, k: Option<u64>) -> PyResult<Self> {
        HolContext::new(n, k).map(|ctx| Self { ctx }).map_err(to_py)
    }

    #[getter]
    fn n(&self) -> u64 {
        self.ctx.n()
    }

    #[getter]
    fn p(&self) -> u64 {
        self.ctx.p()
    }

    #[getter]
    fn e(&self) -> u32 {
        self.ctx.e()
    }

    #[getter]
    fn phi(&self) -> u64 {
        self.ctx.phi()
    }

    #[getter]
    fn k(&self) -> u64 {
        self.ctx.k()
    }

    #[getter]
    fn order(&self) -> u64 {
        self.ctx.group_order()
    }

    fn mul(&self, g: Pair, h: Pair) -> (u64, u64) {
        self.ctx.mul(self.elem(g), self.elem(h)).pair()
    }

    fn inverse(&self, g: Pair) -> (u64, u64) {
        self.ctx.inverse(self.elem(g)).pair()
    }

    /// Negative exponents raise the inverse.
    fn power(&self, g: Pair, m: i64) -> (u64, u64) {
        let g = self.elem(g);
        let base = if m < 0 { self.ctx.inverse(g) } else { g };
        self.ctx.power(base, m.unsigned_abs()).pair()
    }

    fn element_order(&self, g: Pair) -> u64 {
        self.ctx.element_order(self.elem(g))
    }

    fn center(&self) -> Vec<(u64, u64)> {
        self.ctx.center().into_iter().map(HolElem::pair).collect()
    }

    fn elements(&self) -> Vec<(u64, u64)> {
        self.ctx.elements().map(HolElem::pair).collect()
    }

    fn psi(&self, alpha: Pair) -> (u64, u64) {
        automorphisms::psi(&self.ctx, self.aut(alpha)).pair()
    }

    fn psi_inverse(&self, g: Pair) -> (u64, u64) {
        aut_pair(automorphisms::psi_inverse(&self.ctx, self.elem(g)))
    }

    /// `alpha ∘ beta`, with `beta` applied first.
    fn compose(&self, alpha: Pair, beta: Pair) -> (u64, u64) {
        aut_pair(automorphisms::compose(
            &self.ctx,
            self.aut(alpha),
            self.aut(beta),
        ))
    }

    fn apply(&self, alpha: Pair, g: Pair) -> (u64, u64) {
        automorphisms::apply(&self.ctx, self.aut(alpha), self.elem(g)).pair()
    }

    /// `None` when `alpha` extends to an automorphism, else a description of
    /// the failed check and its witness.
    fn validate(&self, alpha: Pair) -> Option<String> {
        match automorphisms::validate_automorphism(&self.ctx, self.aut(alpha)) {
            VerificationOutcome::Pass => None,
            VerificationOutcome::Fail { check, witness } => Some(format!("{check}: {witness}")),
        }
    }

    fn automorphisms(&self) -> Vec<(u64, u64)> {
        automorphisms::enumerate_aut(&self.ctx)
            .into_iter()
            .map(aut_pair)
            .collect()
    }

    /// Conjugation by `g` as an automorphism pair.
    fn inner(&self, g: Pair) -> PyResult<(u64, u64)> {
        automorphisms::inner_automorphism(&self.ctx, self.elem(g))
            .map(aut_pair)
            .map_err(to_py)
    }

    /// The Cayley table as JSON (`size`, `identity`, `generators`, `table`, `labels`).
    fn cayley_table_json(&self) -> PyResult<String> {
        oracle::build_holomorph_table(&self.ctx)
            .to_json()
            .map_err(to_py)
    }

    /// Number of automorphisms found by brute force on the Cayley table.
    fn bruteforce_automorphism_count(&self) -> PyResult<usize> {
        let table = oracle::build_holomorph_table(&self.ctx);
        oracle::enumerate_automorphisms_bruteforce(&table, &Presentation::holomorph(&self.ctx))
            .map(|a| a.len())
            .map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("Holomorph(n={}, k={})", self.ctx.n(), self.ctx.k())
    }
}

#[pyfunction]
fn totient(m: u64) -> PyResult<u64> {
    numtheory::totient(m).map_err(to_py)
}

#[pyfunction]
fn factorize(m: u64) -> PyResult<Vec<(u64, u32)>> {
    numtheory::factorize(m)
        .map(|f| f.pairs().to_vec())
        .map_err(to_py)
}

#[pyfunction]
fn multiplicative_order(k: i64, m: u64) -> PyResult<u64> {
    numtheory::multiplicative_order(k, m).map_err(to_py)
}

#[pyfunction]
fn least_primitive_root(m: u64) -> PyResult<u64> {
    numtheory::least_primitive_root(m).map_err(to_py)
}

/// `(p, e)` with `n = 2p^e`, or `ValueError`.
#[pyfunction]
fn twice_odd_prime_power(n: u64) -> PyResult<(u64, u32)> {
    numtheory::twice_odd_prime_power(n).map_err(to_py)
}

#[pyfunction]
fn power_congruence_holds(k: i64, p: u64, e: u32) -> PyResult<bool> {
    numtheory::power_congruence_holds(k, p, e).map_err(to_py)
}

/// `(p divides k-1, gcd(n, k-1), (1 + k + … + k^(φ-1)) mod n)`.
#[pyfunction]
fn primitive_root_profile(k: i64, n: u64) -> PyResult<(bool, u64, u64)> {
    numtheory::primitive_root_profile(k, n)
        .map(|p| {
            (
                p.p_divides_k_minus_1,
                p.gcd_n_k_minus_1,
                p.geometric_sum_mod_n,
            )
        })
        .map_err(to_py)
}

/// Brute-force `|Aut(Hol(C_n))|` for any `2 ≤ n ≤ 60`, using the full unit group.
#[pyfunction]
fn general_holomorph_aut_count(n: u64) -> PyResult<usize> {
    let group = oracle::build_general_holomorph(n).map_err(to_py)?;
    let pres = Presentation::general_holomorph(n).map_err(to_py)?;
    oracle::enumerate_automorphisms_bruteforce(&group, &pres)
        .map(|a| a.len())
        .map_err(to_py)
}

/// Runs verification suites and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (n, k=None, suites=None, seed=0, max_order=verify::DEFAULT_MAX_ORDER))]
fn run_verification(
    py: Python<'_>,
    n: u64,
    k: Option<u64>,
    suites: Option<Vec<String>>,
    seed: u64,
    max_order: u64,
) -> PyResult<String> {
    let suites = match suites {
        Some(names) => Suite::parse_list(&names.join(",")).map_err(to_py)?,
        None => Suite::ALL.to_vec(),
    };
    let config = VerifyConfig {
        n,
        k,
        suites,
        seed,
        max_order,
        timings: false,
    };
    py.detach(|| verify::run(&config))
        .map(|r| r.to_json())
        .map_err(to_py)
}

#[pymodule]
fn pyholomorphy(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Holomorph>()?;
    m.add_function(wrap_pyfunction!(totient, m)?)?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(multiplicative_order, m)?)?;
    m.add_function(wrap_pyfunction!(least_primitive_root, m)?)?;
    m.add_function(wrap_pyfunction!(twice_odd_prime_power, m)?)?;
    m.add_function(wrap_pyfunction!(power_congruence_holds, m)?)?;
    m.add_function(wrap_pyfunction!(primitive_root_profile, m)?)?;
    m.add_function(wrap_pyfunction!(general_holomorph_aut_count, m)?)?;
    m.add_function(wrap_pyfunction!(run_verification, m)?)?;
    Ok(())
}
