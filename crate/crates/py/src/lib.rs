//! Python bindings.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use ::clusterdomain as cd;
use cd::artheory::{fundamental_domain, ArQuiver, FdTag};
use cd::ctquiver::{cluster_hom_dim, cluster_tilted_quiver, gabriel_quiver, verify_mutation_class};
use cd::quiver::{self as cq, mutation_class};
use cd::tilting::Tilting;
use cd::triplecat::AlgebraInstance;
use cd::verify::{verify_all, Status};

create_exception!(pyclusterdomain, ClusterDomainError, PyException);

fn err(e: cd::Error) -> PyErr {
    ClusterDomainError::new_err(e.to_string())
}

fn field(p: u32) -> PyResult<cd::Field> {
    cd::Field::new(p).map_err(err)
}

/// An acyclic quiver. Vertices are 0-based in this API.
#[pyclass(name = "Quiver", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyQuiver {
    inner: cd::Quiver,
}

#[pymethods]
impl PyQuiver {
    #[new]
    fn new(n: usize, arrows: Vec<(usize, usize)>) -> PyResult<Self> {
        if let Some(&(s, t)) = arrows.iter().find(|&&(s, t)| s >= n || t >= n) {
            return Err(ClusterDomainError::new_err(format!("arrow {s} -> {t} out of range")));
        }
        let inner = cd::Quiver::new(n, arrows);
        if !inner.is_acyclic() {
            return Err(ClusterDomainError::new_err("quiver has an oriented cycle"));
        }
        Ok(PyQuiver { inner })
    }

    /// Parses the text or JSON quiver file format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        cd::parse_quiver(text).map(|inner| PyQuiver { inner }).map_err(err)
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels.clone()
    }

    #[getter]
    fn arrows(&self) -> Vec<(usize, usize)> {
        self.inner.arrows.clone()
    }

    fn dynkin_type(&self) -> PyResult<String> {
        cq::dynkin_type(&self.inner).map(|t| t.to_string()).map_err(err)
    }

    fn mutation_class_size(&self) -> PyResult<usize> {
        mutation_class(&self.inner).map(|c| c.len()).map_err(err)
    }

    fn to_dot(&self) -> String {
        cq::to_dot(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Quiver({})", self.inner.describe())
    }
}

/// The algebra Gamma of a Dynkin quiver with its AR quiver and the
/// fundamental domain of the cluster category inside mod Gamma.
#[pyclass(name = "ClusterDomain", frozen)]
struct PyClusterDomain {
    quiver: cd::Quiver,
    inst: AlgebraInstance,
    ar: ArQuiver,
}

impl PyClusterDomain {
    fn tilting(&self) -> PyResult<Tilting<'_>> {
        Tilting::new(&self.inst, &self.ar).map_err(err)
    }

    fn node(&self, label: &str) -> PyResult<usize> {
        self.ar
            .by_label(label)
            .ok_or_else(|| ClusterDomainError::new_err(format!("no indecomposable labelled {label}")))
    }
}

#[pymethods]
impl PyClusterDomain {
    #[new]
    #[pyo3(signature = (quiver, prime = cd::exactlin::DEFAULT_PRIME))]
    fn new(quiver: &PyQuiver, prime: u32) -> PyResult<Self> {
        let q = quiver.inner.clone();
        cq::require_dynkin(&q).map_err(err)?;
        let inst = AlgebraInstance::gamma(&q, field(prime)?).map_err(err)?;
        let ar = ArQuiver::build(inst.algebra()).map_err(err)?;
        Ok(PyClusterDomain { quiver: q, inst, ar })
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inst.algebra().labels().to_vec()
    }

    /// Arrows of the ordinary quiver of Gamma, as label pairs.
    fn gamma_arrows(&self) -> PyResult<Vec<(String, String)>> {
        let (q, _) = gabriel_quiver(self.inst.algebra()).map_err(err)?;
        Ok(q.arrows
            .iter()
            .map(|&(a, b)| (q.labels[a].clone(), q.labels[b].clone()))
            .collect())
    }

    fn gldim(&self) -> usize {
        self.inst.algebra().gldim()
    }

    /// Labels of all indecomposable Gamma-modules in AR order.
    fn indecomposables(&self) -> Vec<String> {
        self.ar.labels.clone()
    }

    fn dims(&self, label: &str) -> PyResult<Vec<usize>> {
        Ok(self.ar.nodes[self.node(label)?].dims.clone())
    }

    fn tau(&self, label: &str) -> PyResult<Option<String>> {
        Ok(self.ar.tau[self.node(label)?].map(|t| self.ar.labels[t].clone()))
    }

    fn hom_dim(&self, a: &str, b: &str) -> PyResult<usize> {
        let (a, b) = (self.node(a)?, self.node(b)?);
        Ok(self.ar.hom[a][b])
    }

    /// `(label, object)` pairs where the object is `M<k>` or `P<i>[1]`.
    fn fundamental_domain(&self) -> PyResult<Vec<(String, String)>> {
        let fd = fundamental_domain(&self.inst, &self.ar).map_err(err)?;
        Ok(fd
            .iter()
            .map(|o| {
                let tag = match o.tag {
                    FdTag::Module(k) => format!("M{}", k + 1),
                    FdTag::Shift(i) => format!("P{}[1]", self.quiver.labels[i]),
                };
                (self.ar.labels[o.node].clone(), tag)
            })
            .collect())
    }

    fn is_tilting(&self, labels: Vec<String>) -> PyResult<bool> {
        let nodes = labels.iter().map(|l| self.node(l)).collect::<PyResult<Vec<_>>>()?;
        Ok(self.tilting()?.is_tilting(&nodes))
    }

    fn tilting_modules(&self) -> PyResult<Vec<Vec<String>>> {
        let t = self.tilting()?;
        Ok(t.tilting_modules().iter().map(|s| t.labels(&s.summands)).collect())
    }

    fn cluster_tilting_objects(&self) -> PyResult<Vec<Vec<String>>> {
        let t = self.tilting()?;
        let cs = t.cluster_tilting_objects().map_err(err)?;
        Ok(cs.iter().map(|c| t.fd_labels(c)).collect())
    }

    /// The tilting module `theta(T)` attached to a cluster-tilting object.
    fn theta(&self, labels: Vec<String>) -> PyResult<Vec<String>> {
        let t = self.tilting()?;
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let c = t.parse_object(&refs).map_err(err)?;
        Ok(t.labels(&t.theta(&c).summands))
    }

    fn complements(&self, labels: Vec<String>) -> PyResult<Vec<String>> {
        let t = self.tilting()?;
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let c = t.parse_object(&refs).map_err(err)?;
        let ks = t.complements(&c.summands).map_err(err)?;
        Ok(ks.iter().map(|&k| self.ar.labels[t.fundamental_domain()[k].node].clone()).collect())
    }

    /// Dimension of Hom in the cluster category between two
    /// fundamental-domain objects.
    fn cluster_hom_dim(&self, a: &str, b: &str) -> PyResult<usize> {
        let fd = fundamental_domain(&self.inst, &self.ar).map_err(err)?;
        let tag = |l: &str| -> PyResult<FdTag> {
            let node = self.node(l)?;
            fd.iter()
                .find(|o| o.node == node)
                .map(|o| o.tag)
                .ok_or_else(|| ClusterDomainError::new_err(format!("{l} is not in the fundamental domain")))
        };
        let h = self.inst.h();
        let ind = h.indecomposables().map_err(err)?;
        Ok(cluster_hom_dim(h, &ind, tag(a)?, tag(b)?))
    }

    /// Quiver of the cluster-tilted algebra; its vertices are the summand
    /// labels in fundamental-domain order.
    fn cluster_tilted_quiver(&self, labels: Vec<String>) -> PyResult<PyQuiver> {
        let t = self.tilting()?;
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let c = t.parse_object(&refs).map_err(err)?;
        if !t.is_tilting(&t.theta(&c).summands) {
            return Err(ClusterDomainError::new_err("not a cluster-tilting object"));
        }
        let qc = cluster_tilted_quiver(self.inst.algebra(), &t, &c).map_err(err)?;
        Ok(PyQuiver { inner: qc.quiver })
    }

    /// Whether `q` is mutation equivalent to the underlying quiver.
    fn in_mutation_class(&self, q: &PyQuiver) -> PyResult<bool> {
        verify_mutation_class(&q.inner, &self.quiver).map_err(err)
    }

    fn ar_dot(&self) -> String {
        self.ar.to_dot()
    }
}

/// Global dimension of the duplicated algebra.
#[pyfunction]
#[pyo3(signature = (quiver, prime = cd::exactlin::DEFAULT_PRIME))]
fn gldim_lambda(quiver: &PyQuiver, prime: u32) -> PyResult<usize> {
    let inst = AlgebraInstance::lambda(&quiver.inner, field(prime)?).map_err(err)?;
    Ok(inst.algebra().gldim())
}

/// Runs the property suite; returns `(label, status, detail)` triples.
#[pyfunction]
#[pyo3(signature = (quiver, prime = cd::exactlin::DEFAULT_PRIME))]
fn verify(quiver: &PyQuiver, prime: u32) -> PyResult<Vec<(String, String, String)>> {
    let report = verify_all(&quiver.inner, field(prime)?);
    Ok(report
        .checks
        .into_iter()
        .map(|c| {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Skipped => "skipped",
            };
            (c.label.to_string(), status.to_string(), c.detail)
        })
        .collect())
}

#[pymodule]
fn pyclusterdomain(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQuiver>()?;
    m.add_class::<PyClusterDomain>()?;
    m.add_function(wrap_pyfunction!(gldim_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("ClusterDomainError", m.py().get_type::<ClusterDomainError>())?;
    Ok(())
}
