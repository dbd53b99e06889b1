//! Auslander-Reiten quivers, the fundamental domain and the left part.

use std::collections::HashMap;

use crate::algebra::{Algebra, HomSpace, Rep};
use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::hmod::preprojective_orbits;
use crate::triplecat::{AlgebraInstance, Triple, TripleMap};

/// Bound on the number of indecomposables we are willing to enumerate.
pub const MAX_NODES: usize = 2_000;

/// The Auslander-Reiten quiver of a representation-directed algebra.
#[derive(Clone, Debug)]
pub struct ArQuiver {
    pub nodes: Vec<Rep>,
    pub labels: Vec<String>,
    /// `(v, k)` when the node is `tau^-k P(v)`.
    pub origin: Vec<(usize, usize)>,
    pub tau: Vec<Option<usize>>,
    pub tau_inv: Vec<Option<usize>>,
    pub projective: Vec<bool>,
    pub injective: Vec<bool>,
    pub pd: Vec<usize>,
    /// `hom[a][b] = dim Hom(node a, node b)`.
    pub hom: Vec<Vec<usize>>,
    /// Irreducible maps `(from, to, multiplicity)`.
    pub arrows: Vec<(usize, usize, usize)>,
    by_dims: HashMap<Vec<usize>, Vec<usize>>,
}

impl ArQuiver {
    pub fn build(alg: &Algebra) -> Result<ArQuiver> {
        let orbits = preprojective_orbits(alg, MAX_NODES)?;
        let nodes: Vec<Rep> = orbits.iter().map(|o| o.rep.clone()).collect();
        let origin: Vec<(usize, usize)> = orbits.iter().map(|o| (o.vertex, o.power)).collect();
        let find_origin = |v: usize, k: usize| origin.iter().position(|&o| o == (v, k));
        let n = nodes.len();
        let tau = (0..n)
            .map(|i| {
                let (v, k) = origin[i];
                if k == 0 {
                    None
                } else {
                    find_origin(v, k - 1)
                }
            })
            .collect();
        let tau_inv: Vec<Option<usize>> = (0..n)
            .map(|i| {
                let (v, k) = origin[i];
                find_origin(v, k + 1)
            })
            .collect();
        let projective = origin.iter().map(|&(_, k)| k == 0).collect();
        let injective = tau_inv.iter().map(Option::is_none).collect();
        let mut by_dims: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (i, m) in nodes.iter().enumerate() {
            by_dims.entry(m.dims.clone()).or_default().push(i);
        }
        let spaces: Vec<Vec<HomSpace>> = nodes
            .iter()
            .map(|a| nodes.iter().map(|b| alg.hom_space(a, b)).collect())
            .collect();
        let hom: Vec<Vec<usize>> = spaces
            .iter()
            .map(|row| row.iter().map(HomSpace::dim).collect())
            .collect();
        let arrows = irreducible_arrows(alg, &nodes, &spaces);
        let pd = nodes.iter().map(|m| alg.pd(m)).collect();
        let labels = nodes.iter().map(|m| layer_label(alg, m)).collect();
        Ok(ArQuiver {
            nodes,
            labels,
            origin,
            tau,
            tau_inv,
            projective,
            injective,
            pd,
            hom,
            arrows,
            by_dims,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node isomorphic to the indecomposable `m`.
    pub fn find(&self, alg: &Algebra, m: &Rep) -> Option<usize> {
        self.by_dims
            .get(&m.dims)?
            .iter()
            .copied()
            .find(|&i| alg.iso_directed(&self.nodes[i], m))
    }

    pub fn by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn arrow_mult(&self, a: usize, b: usize) -> usize {
        self.arrows
            .iter()
            .find(|&&(x, y, _)| (x, y) == (a, b))
            .map_or(0, |&(_, _, m)| m)
    }

    /// `pred[y][x]` is true when there is a chain of nonzero maps from node
    /// `y` to node `x`; every node precedes itself.
    pub fn predecessors(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut reach = vec![vec![false; n]; n];
        for a in 0..n {
            for b in 0..n {
                reach[a][b] = a == b || self.hom[a][b] > 0;
            }
        }
        for k in 0..n {
            for a in 0..n {
                if reach[a][k] {
                    for b in 0..n {
                        if reach[k][b] {
                            reach[a][b] = true;
                        }
                    }
                }
            }
        }
        reach
    }

    pub fn proj_inj(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.projective[i] && self.injective[i])
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph AR {\n  rankdir=LR;\n");
        for l in &self.labels {
            s.push_str(&format!("  \"{l}\";\n"));
        }
        for &(a, b, m) in &self.arrows {
            for _ in 0..m {
                s.push_str(&format!("  \"{}\" -> \"{}\";\n", self.labels[a], self.labels[b]));
            }
        }
        for (i, t) in self.tau.iter().enumerate() {
            if let Some(t) = t {
                s.push_str(&format!(
                    "  \"{}\" -> \"{}\" [style=dashed, constraint=false];\n",
                    self.labels[i], self.labels[*t]
                ));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// `dim rad(X, Y) - dim rad^2(X, Y)` for every pair of nodes.
fn irreducible_arrows(alg: &Algebra, nodes: &[Rep], spaces: &[Vec<HomSpace>]) -> Vec<(usize, usize, usize)> {
    let fld = alg.field();
    let n = nodes.len();
    // radical of each Hom space, as coordinate columns
    let rad: Vec<Vec<Mat>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let d = spaces[a][b].dim();
                    if a == b {
                        alg.endo_radical(&spaces[a][a].basis)
                    } else {
                        Mat::identity(fld, d)
                    }
                })
                .collect()
        })
        .collect();
    let maps = |a: usize, b: usize| -> Vec<crate::algebra::RepMap> {
        let r = &rad[a][b];
        (0..r.cols)
            .map(|c| spaces[a][b].combine(fld, &r.column(c), &nodes[a], &nodes[b]))
            .collect()
    };
    let mut out = vec![];
    for a in 0..n {
        for b in 0..n {
            let r = rad[a][b].cols;
            if r == 0 {
                continue;
            }
            let mut cols: Vec<Vec<u32>> = vec![];
            for z in 0..n {
                if rad[a][z].cols == 0 || rad[z][b].cols == 0 {
                    continue;
                }
                let first = maps(a, z);
                let second = maps(z, b);
                for f in &first {
                    for g in &second {
                        cols.push(spaces[a][b].coords(&f.then(g)));
                    }
                }
            }
            let sq = if cols.is_empty() {
                0
            } else {
                Mat::from_columns(fld, spaces[a][b].dim(), &cols).rank()
            };
            if r > sq {
                out.push((a, b, r - sq));
            }
        }
    }
    out
}

/// Radical layers top-down, e.g. `3'/12/3`. Within a layer vertices appear
/// in vertex order, repeated by multiplicity; when some vertex name has more
/// than one character the tokens of a layer are joined with `+`.
pub fn layer_label(alg: &Algebra, m: &Rep) -> String {
    let long = alg
        .labels()
        .iter()
        .any(|l| l.trim_end_matches('\'').chars().count() > 1);
    let sep = if long { "+" } else { "" };
    alg.radical_layers(m)
        .iter()
        .map(|layer| {
            let mut toks = vec![];
            for (v, &d) in layer.iter().enumerate() {
                for _ in 0..d {
                    toks.push(alg.labels()[v].clone());
                }
            }
            toks.join(sep)
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// How a fundamental-domain object sits in the cluster category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FdTag {
    /// The embedded H-module with this index in the H-indecomposable list.
    Module(usize),
    /// The shifted projective `P_i[1]`, realised as `tau^-1 (0, I_i, 0)`.
    Shift(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdObject {
    pub node: usize,
    pub tag: FdTag,
}

/// Embedded `ind H` followed by `tau^-1 (0, I_i, 0)` for every vertex `i`.
pub fn fundamental_domain(inst: &AlgebraInstance, ar: &ArQuiver) -> Result<Vec<FdObject>> {
    let alg = inst.algebra();
    let h = inst.h();
    let mut out = vec![];
    for (k, m) in h.indecomposables()?.iter().enumerate() {
        let t = inst.embed_h(m)?;
        let node = ar
            .find(alg, &t.module)
            .ok_or_else(|| Error::Inconsistent("H-module missing from the AR quiver".into()))?;
        out.push(FdObject {
            node,
            tag: FdTag::Module(k),
        });
    }
    for i in 0..h.n() {
        let t = inst.embed_h(&h.injective(i))?;
        let shifted = alg.tau_inv(&t.module);
        let node = ar
            .find(alg, &shifted)
            .ok_or_else(|| Error::Inconsistent("shifted projective missing".into()))?;
        out.push(FdObject {
            node,
            tag: FdTag::Shift(i),
        });
    }
    Ok(out)
}

/// Nodes all of whose predecessors have projective dimension at most one.
pub fn left_part(ar: &ArQuiver) -> Vec<usize> {
    let pred = ar.predecessors();
    (0..ar.len())
        .filter(|&x| (0..ar.len()).all(|y| !pred[y][x] || ar.pd[y] <= 1))
        .collect()
}

/// Projective-injective summands of `I_0(soc H)`: the projectives at the
/// primed copies of the sinks.
pub fn i0_soc_h(inst: &AlgebraInstance, ar: &ArQuiver) -> Vec<usize> {
    inst.quiver()
        .sinks()
        .iter()
        .filter_map(|&s| inst.x_vertex(s))
        .filter_map(|v| ar.origin.iter().position(|&o| o == (v, 0)))
        .collect()
}

/// Coordinates (columns, in the basis of `hom`) spanning the maps `X -> Y`
/// that factor through a sum of the modules `zs`.
pub fn factoring_subspace(alg: &Algebra, x: &Rep, y: &Rep, hom: &HomSpace, zs: &[&Rep]) -> Mat {
    let fld = alg.field();
    let mut cols = vec![];
    for z in zs {
        let first = alg.hom_basis(x, z);
        if first.is_empty() {
            continue;
        }
        let second = alg.hom_basis(z, y);
        for f in &first {
            for g in &second {
                cols.push(hom.coords(&f.then(g)));
            }
        }
    }
    if cols.is_empty() {
        Mat::zeros(fld, hom.dim(), 0)
    } else {
        Mat::from_columns(fld, hom.dim(), &cols).column_space()
    }
}

/// Whether `f: X -> Y` factors through `add I_0(soc H)`.
pub fn factors_through_proj_inj(
    inst: &AlgebraInstance,
    ar: &ArQuiver,
    x: &Triple,
    y: &Triple,
    f: &TripleMap,
) -> bool {
    let alg = inst.algebra();
    let hom = alg.hom_space(&x.module, &y.module);
    let zs: Vec<&Rep> = i0_soc_h(inst, ar).iter().map(|&i| &ar.nodes[i]).collect();
    let sub = factoring_subspace(alg, &x.module, &y.module, &hom, &zs);
    let v = hom.coords(&inst.module_map(f));
    sub.solve(&v).is_some()
}

pub fn min_presentation(inst: &AlgebraInstance, m: &Triple) -> Result<(Triple, Triple, TripleMap, TripleMap)> {
    let p = inst.algebra().min_presentation(&m.module);
    let p1 = inst.from_module(p.p1)?;
    let p0 = inst.from_module(p.p0)?;
    let d1 = inst.triple_map(&p1, &p0, &p.d1);
    let eps = inst.triple_map(&p0, m, &p.eps);
    Ok((p1, p0, d1, eps))
}

pub fn pd(inst: &AlgebraInstance, m: &Triple) -> usize {
    inst.algebra().pd(&m.module)
}

pub fn gldim(inst: &AlgebraInstance) -> usize {
    inst.algebra().gldim()
}

pub fn tau(inst: &AlgebraInstance, m: &Triple) -> Result<Triple> {
    inst.from_module(inst.algebra().tau(&m.module))
}

pub fn tau_inv(inst: &AlgebraInstance, m: &Triple) -> Result<Triple> {
    inst.from_module(inst.algebra().tau_inv(&m.module))
}

pub fn ext_dim(inst: &AlgebraInstance, m: &Triple, n: &Triple, k: usize) -> Result<usize> {
    if !(1..=3).contains(&k) {
        return Err(Error::Invalid(format!("Ext^{k} is outside the supported range 1..=3")));
    }
    Ok(inst.algebra().ext_dim(&m.module, &n.module, k))
}
