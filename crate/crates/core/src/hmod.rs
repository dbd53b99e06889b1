//! Representations of an acyclic quiver, i.e. modules over H = kQ.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::algebra::{Algebra, Rep, RepMap};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::quiver::{self, Path, Quiver};

/// The path algebra of an acyclic quiver together with its generic module
/// engine. Projectives carry the path basis: `P_i` at vertex `j` has basis
/// the paths `i ~> j` in the order of [`Quiver::paths`].
#[derive(Debug)]
pub struct PathAlgebra {
    quiver: Quiver,
    alg: Algebra,
    paths: Vec<Path>,
    /// `basis[i][j]`: indices into `paths` of the paths `i ~> j`.
    basis: Vec<Vec<Vec<usize>>>,
    path_index: HashMap<(usize, Vec<usize>), usize>,
}

impl PathAlgebra {
    pub fn new(quiver: &Quiver, field: Field) -> Result<Self> {
        if !quiver.is_acyclic() {
            return Err(Error::Invalid("quiver has an oriented cycle".into()));
        }
        let n = quiver.n();
        let paths = quiver.paths();
        let mut basis = vec![vec![vec![]; n]; n];
        let mut path_index = HashMap::new();
        for (k, p) in paths.iter().enumerate() {
            basis[p.src][p.tgt].push(k);
            path_index.insert(path_key(p), k);
        }
        let mut projectives = Vec::with_capacity(n);
        for i in 0..n {
            let dims: Vec<usize> = (0..n).map(|j| basis[i][j].len()).collect();
            let mats = quiver
                .arrows
                .iter()
                .enumerate()
                .map(|(a, &(s, t))| {
                    let mut m = Mat::zeros(field, dims[t], dims[s]);
                    for (col, &pk) in basis[i][s].iter().enumerate() {
                        let mut arrows = paths[pk].arrows.clone();
                        arrows.push(a);
                        let key = (i, arrows);
                        let ext = path_index[&key];
                        let row = basis[i][t].iter().position(|&x| x == ext).unwrap();
                        m.set(row, col, 1);
                    }
                    m
                })
                .collect();
            projectives.push(Rep { dims, mats });
        }
        let alg = Algebra::new(field, quiver.labels.clone(), quiver.arrows.clone(), projectives)?;
        Ok(PathAlgebra {
            quiver: quiver.clone(),
            alg,
            paths,
            basis,
            path_index,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    /// Indices (into [`Self::paths`]) of the paths `i ~> j`.
    pub fn paths_between(&self, i: usize, j: usize) -> &[usize] {
        &self.basis[i][j]
    }

    pub fn path_id(&self, src: usize, arrows: &[usize]) -> Option<usize> {
        self.path_index.get(&(src, arrows.to_vec())).copied()
    }

    pub fn simple(&self, i: usize) -> Rep {
        self.alg.simple(i)
    }

    pub fn projective(&self, i: usize) -> Rep {
        self.alg.projective(i).clone()
    }

    /// Injective envelope of `S_i`; `dims[j]` counts paths `j ~> i`.
    pub fn injective(&self, i: usize) -> Rep {
        self.alg.injective(i).clone()
    }

    pub fn hom_basis(&self, m: &Rep, n: &Rep) -> Vec<RepMap> {
        self.alg.hom_basis(m, n)
    }

    pub fn hom_dim(&self, m: &Rep, n: &Rep) -> usize {
        self.alg.hom_dim(m, n)
    }

    /// `dim Hom(P1, N) - dim Hom(P0, N) + dim Hom(M, N)` for the minimal
    /// projective resolution `0 -> P1 -> P0 -> M -> 0`.
    pub fn ext1_dim(&self, m: &Rep, n: &Rep) -> usize {
        self.alg.ext_dim(m, n, 1)
    }

    pub fn nakayama(&self, m: &Rep) -> Rep {
        self.alg.nakayama(m)
    }

    pub fn tau(&self, m: &Rep) -> Rep {
        self.alg.tau(m)
    }

    pub fn tau_inv(&self, m: &Rep) -> Rep {
        self.alg.tau_inv(m)
    }

    /// All indecomposables as `tau^-k P_i`, ordered by `(k, i)`.
    /// Refuses non-Dynkin quivers, whose module category is infinite.
    pub fn indecomposables(&self) -> Result<Vec<Rep>> {
        quiver::require_dynkin(&self.quiver)?;
        let nodes = preprojective_orbits(&self.alg, 10_000)?;
        let expected: usize = quiver::component_types(&self.quiver)
            .into_iter()
            .map(|t| t.map(|t| t.positive_roots()).unwrap_or(0))
            .sum();
        if nodes.len() != expected {
            return Err(Error::Inconsistent(format!(
                "found {} indecomposables, expected {expected} positive roots",
                nodes.len()
            )));
        }
        Ok(nodes.into_iter().map(|o| o.rep).collect())
    }
}

fn path_key(p: &Path) -> (usize, Vec<usize>) {
    (p.src, p.arrows.clone())
}

/// One indecomposable found while walking `tau^-1` orbits of projectives.
#[derive(Clone, Debug)]
pub struct OrbitNode {
    pub rep: Rep,
    pub vertex: usize,
    pub power: usize,
}

/// `tau^-k P(v)` for all vertices `v` and `k >= 0` until the orbit ends at
/// an injective. Over a representation-directed algebra this is every
/// indecomposable exactly once. Sorted by `(k, v)`.
pub fn preprojective_orbits(alg: &Algebra, limit: usize) -> Result<Vec<OrbitNode>> {
    let mut out = Vec::new();
    for v in 0..alg.n() {
        let mut m = alg.projective(v).clone();
        let mut k = 0;
        loop {
            out.push(OrbitNode {
                rep: m.clone(),
                vertex: v,
                power: k,
            });
            if out.len() > limit {
                return Err(Error::NonDynkin(format!(
                    "more than {limit} indecomposables; the module category looks infinite"
                )));
            }
            let next = alg.tau_inv(&m);
            if next.is_zero() {
                break;
            }
            m = next;
            k += 1;
        }
    }
    out.sort_by_key(|o| (o.power, o.vertex));
    Ok(out)
}

pub fn rep_to_json(m: &Rep, field: Field) -> Value {
    json!({
        "dims": m.dims,
        "mats": m.mats.iter().map(|a| mat_to_json(a, field)).collect::<Vec<_>>(),
    })
}

pub fn mat_to_json(a: &Mat, field: Field) -> Value {
    let rows: Vec<Vec<i64>> = (0..a.rows)
        .map(|r| (0..a.cols).map(|c| field.to_i64(a.get(r, c))).collect())
        .collect();
    json!(rows)
}

/// Parses `{dims, mats}` against the arrows of `q`.
pub fn rep_from_json(v: &Value, q: &Quiver, field: Field) -> Result<Rep> {
    let bad = |m: &str| Error::Invalid(m.to_string());
    let dims: Vec<usize> = serde_json::from_value(v["dims"].clone()).map_err(|e| bad(&e.to_string()))?;
    let mats: Vec<Vec<Vec<i64>>> =
        serde_json::from_value(v["mats"].clone()).map_err(|e| bad(&e.to_string()))?;
    if dims.len() != q.n() || mats.len() != q.arrows.len() {
        return Err(bad("representation does not match the quiver"));
    }
    let mats = mats
        .iter()
        .zip(&q.arrows)
        .map(|(rows, &(s, t))| {
            if rows.is_empty() {
                Mat::zeros(field, dims[t], dims[s])
            } else {
                Mat::from_rows(field, rows)
            }
        })
        .collect();
    Ok(Rep { dims, mats })
}
