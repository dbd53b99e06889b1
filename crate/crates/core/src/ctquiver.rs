//! Quivers of cluster-tilted algebras computed from the fundamental domain.
//!
//! Quiver conventions: an arrow `i -> j` of the quiver of an endomorphism
//! algebra stands for an irreducible map `T_j -> T_i`. A relation "from `T_i`
//! to `T_j`" is a relation among paths of maps `T_i -> ... -> T_j`.

use std::collections::HashSet;

use serde::Serialize;

use crate::algebra::{Algebra, HomSpace, Rep, RepMap};
use crate::artheory::{factoring_subspace, ArQuiver, FdTag};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::hmod::PathAlgebra;
use crate::quiver::{mutation_class, ExchangeMatrix, Quiver};
use crate::tilting::{ClusterTiltObj, Tilting};

/// Endomorphism algebra of a sum of pairwise non-isomorphic indecomposables,
/// optionally modulo the maps factoring through a fixed set of modules.
///
/// Hom spaces are stored in quotient coordinates. Products follow the
/// convention `(g . f)` means `f` first.
#[derive(Clone, Debug)]
pub struct BasicAlgebra {
    field: Field,
    labels: Vec<String>,
    objects: Vec<Rep>,
    /// `reps[a][b]`: representatives of a basis of the quotient `E(a, b)`.
    reps: Vec<Vec<Vec<RepMap>>>,
    /// `proj[a][b]`: Hom-coordinates to quotient coordinates.
    proj: Vec<Vec<Mat>>,
    spaces: Vec<Vec<HomSpace>>,
    /// `rad[a][b]`: columns spanning `rad E(a, b)`.
    rad: Vec<Vec<Mat>>,
    /// `irr[a][b]`: columns spanning a complement of `rad^2` in `rad`.
    irr: Vec<Vec<Mat>>,
}

impl BasicAlgebra {
    pub fn new(alg: &Algebra, objects: &[&Rep], labels: Vec<String>) -> Result<Self> {
        Self::modulo(alg, objects, labels, &[])
    }

    /// `End(T)` divided by the ideal of maps factoring through `add Z`.
    pub fn modulo(alg: &Algebra, objects: &[&Rep], labels: Vec<String>, zs: &[&Rep]) -> Result<Self> {
        let fld = alg.field();
        let m = objects.len();
        for (a, x) in objects.iter().enumerate() {
            if !alg.is_indecomposable(x) {
                return Err(Error::Invalid(format!("{} is not indecomposable", labels[a])));
            }
            for y in &objects[..a] {
                if alg.iso_directed(x, y) {
                    return Err(Error::Invalid(format!("{} is repeated", labels[a])));
                }
            }
        }
        let spaces: Vec<Vec<HomSpace>> = objects
            .iter()
            .map(|x| objects.iter().map(|y| alg.hom_space(x, y)).collect())
            .collect();
        let mut reps = vec![vec![vec![]; m]; m];
        let mut proj = vec![vec![Mat::zeros(fld, 0, 0); m]; m];
        for a in 0..m {
            for b in 0..m {
                let hom = &spaces[a][b];
                let ideal = factoring_subspace(alg, objects[a], objects[b], hom, zs);
                let comp = ideal.complement_basis();
                let adapted = Mat::hstack(fld, hom.dim(), &[&ideal, &comp]);
                let inv = adapted.inverse().expect("adapted basis");
                proj[a][b] = inv.block(ideal.cols, 0, comp.cols, hom.dim());
                reps[a][b] = (0..comp.cols)
                    .map(|c| hom.combine(fld, &comp.column(c), objects[a], objects[b]))
                    .collect();
            }
        }
        let mut e = BasicAlgebra {
            field: fld,
            labels,
            objects: objects.iter().map(|&x| x.clone()).collect(),
            reps,
            proj,
            spaces,
            rad: vec![],
            irr: vec![],
        };
        e.rad = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| {
                        let d = e.dim(a, b);
                        if a != b {
                            return Mat::identity(fld, d);
                        }
                        let r = alg.endo_radical(&e.spaces[a][a].basis);
                        let cols: Vec<Vec<u32>> =
                            (0..r.cols).map(|c| e.proj[a][a].mul_vec(&r.column(c))).collect();
                        Mat::from_columns(fld, d, &cols).column_space()
                    })
                    .collect()
            })
            .collect();
        for a in 0..m {
            if e.rad[a][a].cols == e.dim(a, a) {
                return Err(Error::Invalid(format!("{} vanishes in the quotient", e.labels[a])));
            }
        }
        e.irr = (0..m)
            .map(|a| (0..m).map(|b| e.irreducible_basis(a, b)).collect())
            .collect();
        Ok(e)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self, a: usize, b: usize) -> usize {
        self.reps[a][b].len()
    }

    pub fn total_dim(&self) -> usize {
        (0..self.len()).map(|a| (0..self.len()).map(|b| self.dim(a, b)).sum::<usize>()).sum()
    }

    fn element(&self, a: usize, b: usize, coords: &[u32]) -> RepMap {
        let mut out = RepMap::zero(self.field, &self.objects[a], &self.objects[b]);
        for (c, r) in coords.iter().zip(&self.reps[a][b]) {
            if *c != 0 {
                out = out.add(&r.scale(*c));
            }
        }
        out
    }

    /// Quotient coordinates of `g . f` for `f in E(a, b)`, `g in E(b, c)`.
    pub fn product(&self, a: usize, b: usize, c: usize, f: &[u32], g: &[u32]) -> Vec<u32> {
        if self.dim(a, c) == 0 {
            return vec![];
        }
        let comp = self.element(a, b, f).then(&self.element(b, c, g));
        self.proj[a][c].mul_vec(&self.spaces[a][c].coords(&comp))
    }

    /// Quotient coordinates of an actual map `a -> b`.
    pub fn reduce(&self, a: usize, b: usize, f: &RepMap) -> Vec<u32> {
        self.proj[a][b].mul_vec(&self.spaces[a][b].coords(f))
    }

    pub fn identity(&self, a: usize) -> Vec<u32> {
        self.reduce(a, a, &RepMap::identity(self.field, &self.objects[a]))
    }

    pub fn rad(&self, a: usize, b: usize) -> &Mat {
        &self.rad[a][b]
    }

    /// Columns spanning `rad^2 E(a, b)`.
    pub fn rad2(&self, a: usize, c: usize) -> Mat {
        let fld = self.field;
        let mut cols = vec![];
        for b in 0..self.len() {
            let (r1, r2) = (&self.rad[a][b], &self.rad[b][c]);
            for i in 0..r1.cols {
                for j in 0..r2.cols {
                    cols.push(self.product(a, b, c, &r1.column(i), &r2.column(j)));
                }
            }
        }
        if cols.is_empty() {
            Mat::zeros(fld, self.dim(a, c), 0)
        } else {
            Mat::from_columns(fld, self.dim(a, c), &cols).column_space()
        }
    }

    fn irreducible_basis(&self, a: usize, c: usize) -> Mat {
        let fld = self.field;
        let d = self.dim(a, c);
        let sq = self.rad2(a, c);
        let rad = &self.rad[a][c];
        let aug = Mat::hstack(fld, d, &[&sq, rad]);
        let picked: Vec<usize> = aug
            .independent_columns()
            .into_iter()
            .filter(|&k| k >= sq.cols)
            .map(|k| k - sq.cols)
            .collect();
        rad.select_columns(&picked)
    }

    /// Columns spanning a complement of `rad^2 E(a, b)` in `rad E(a, b)`.
    pub fn irreducible_basis_of(&self, a: usize, b: usize) -> &Mat {
        &self.irr[a][b]
    }

    /// Number of irreducible maps `T_a -> T_b`.
    pub fn irreducible(&self, a: usize, b: usize) -> usize {
        self.irr[a][b].cols
    }

    /// The ordinary quiver: `irreducible(j, i)` arrows `i -> j`.
    pub fn quiver(&self) -> Quiver {
        let mut arrows = vec![];
        for i in 0..self.len() {
            for j in 0..self.len() {
                for _ in 0..self.irreducible(j, i) {
                    arrows.push((i, j));
                }
            }
        }
        Quiver::with_labels(self.labels.clone(), arrows)
    }

    /// Modules over `E` as representations of the category with objects
    /// `T_a`: the projective at `a` is `E(a, -)`, generated by the
    /// irreducible maps.
    pub fn module_algebra(&self) -> Result<Algebra> {
        let fld = self.field;
        let m = self.len();
        let mut gens = vec![];
        let mut gen_elems = vec![];
        for s in 0..m {
            for t in 0..m {
                for k in 0..self.irr[s][t].cols {
                    gens.push((s, t));
                    gen_elems.push(self.irr[s][t].column(k));
                }
            }
        }
        let projectives = (0..m)
            .map(|a| {
                let dims: Vec<usize> = (0..m).map(|b| self.dim(a, b)).collect();
                let mats = gens
                    .iter()
                    .zip(&gen_elems)
                    .map(|(&(s, t), g)| {
                        let mut mat = Mat::zeros(fld, dims[t], dims[s]);
                        for k in 0..dims[s] {
                            let mut e = vec![0; dims[s]];
                            e[k] = 1;
                            let img = self.product(a, s, t, &e, g);
                            for (r, v) in img.into_iter().enumerate() {
                                mat.set(r, k, v);
                            }
                        }
                        mat
                    })
                    .collect();
                Rep { dims, mats }
            })
            .collect();
        Algebra::new(fld, self.labels.clone(), gens, projectives)
    }

    /// `rel[i][j]` = number of minimal relations from `T_i` to `T_j`, read
    /// off as `dim Ext^2(S_i, S_j)`. Requires global dimension at most two.
    pub fn min_relation_counts(&self) -> Result<Vec<Vec<usize>>> {
        let e = self.module_algebra()?;
        let gl = e.gldim();
        if gl > 2 {
            return Err(Error::Inconsistent(format!(
                "endomorphism algebra has global dimension {gl} > 2"
            )));
        }
        Ok(Self::ext2_counts(&e))
    }

    /// `dim Ext^2(S_i, S_j)` with no bound on the global dimension.
    pub fn relation_counts(&self) -> Result<Vec<Vec<usize>>> {
        Ok(Self::ext2_counts(&self.module_algebra()?))
    }

    fn ext2_counts(e: &Algebra) -> Vec<Vec<usize>> {
        let m = e.n();
        (0..m)
            .map(|i| (0..m).map(|j| e.ext_dim(&e.simple(i), &e.simple(j), 2)).collect())
            .collect()
    }

    /// Checks `(h . g) . f = h . (g . f)` on all basis triples.
    pub fn is_associative(&self) -> bool {
        let m = self.len();
        let unit = |d: usize, k: usize| {
            let mut v = vec![0; d];
            v[k] = 1;
            v
        };
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    for d in 0..m {
                        for i in 0..self.dim(a, b) {
                            for j in 0..self.dim(b, c) {
                                for k in 0..self.dim(c, d) {
                                    let (f, g, h) = (unit(self.dim(a, b), i), unit(self.dim(b, c), j), unit(self.dim(c, d), k));
                                    let left = self.product(a, c, d, &self.product(a, b, c, &f, &g), &h);
                                    let right = self.product(a, b, d, &f, &self.product(b, c, d, &g, &h));
                                    if left != right {
                                        return false;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

/// The output of the construction, with its two summands kept apart.
#[derive(Clone, Debug, Serialize)]
pub struct ClusterTiltedQuiver {
    pub labels: Vec<String>,
    /// Arrows `i -> j` of the stable endomorphism algebra.
    pub stable: Vec<Vec<usize>>,
    /// Minimal relations from `T_i` to `T_j` in `add(T + I_0(Delta))`.
    pub relations: Vec<Vec<usize>>,
    #[serde(skip)]
    pub quiver: Quiver,
}

impl ClusterTiltedQuiver {
    pub fn arrows(&self, i: usize, j: usize) -> usize {
        self.stable[i][j] + self.relations[i][j]
    }

    /// Pairs receiving both a stable arrow and a relation.
    pub fn overlaps(&self) -> Vec<(usize, usize)> {
        let n = self.labels.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.stable[i][j] > 0 && self.relations[i][j] > 0)
            .collect()
    }
}

fn object_reps<'a>(tl: &'a Tilting, nodes: &[usize]) -> (Vec<&'a Rep>, Vec<String>) {
    let ar = tl.ar();
    (
        nodes.iter().map(|&i| &ar.nodes[i]).collect(),
        nodes.iter().map(|&i| ar.labels[i].clone()).collect(),
    )
}

/// `End(T)` modulo maps factoring through `add I_0(soc H)`.
pub fn stable_end(alg: &Algebra, tl: &Tilting, t: &ClusterTiltObj) -> Result<BasicAlgebra> {
    let nodes: Vec<usize> = t.summands.iter().map(|&k| tl.fundamental_domain()[k].node).collect();
    let (objs, labels) = object_reps(tl, &nodes);
    let (zs, _) = object_reps(tl, tl.delta());
    BasicAlgebra::modulo(alg, &objs, labels, &zs)
}

/// `End(T + I_0(Delta))`, with the summands of `T` first.
pub fn tilting_end(alg: &Algebra, tl: &Tilting, t: &ClusterTiltObj) -> Result<BasicAlgebra> {
    let mut nodes: Vec<usize> = t.summands.iter().map(|&k| tl.fundamental_domain()[k].node).collect();
    nodes.extend(tl.delta().iter().filter(|d| !nodes.contains(d)).collect::<Vec<_>>());
    let (objs, labels) = object_reps(tl, &nodes);
    BasicAlgebra::new(alg, &objs, labels)
}

/// Stable arrows and minimal relations of `T`, without checking that they
/// land on different pairs.
pub fn cluster_tilted_parts(alg: &Algebra, tl: &Tilting, t: &ClusterTiltObj) -> Result<ClusterTiltedQuiver> {
    let b = stable_end(alg, tl, t)?;
    let e = tilting_end(alg, tl, t)?;
    let rel = e.min_relation_counts()?;
    let n = t.summands.len();
    let stable: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| b.irreducible(j, i)).collect()).collect();
    let relations: Vec<Vec<usize>> = (0..n).map(|i| rel[i][..n].to_vec()).collect();
    let mut arrows = vec![];
    for i in 0..n {
        for j in 0..n {
            for _ in 0..stable[i][j] + relations[i][j] {
                arrows.push((i, j));
            }
        }
    }
    Ok(ClusterTiltedQuiver {
        labels: b.labels().to_vec(),
        stable,
        relations,
        quiver: Quiver::with_labels(b.labels().to_vec(), arrows),
    })
}

/// Quiver of `End_C(T)`: stable arrows plus minimal relations through the
/// projective-injectives. Fails if some pair receives both kinds.
pub fn cluster_tilted_quiver(alg: &Algebra, tl: &Tilting, t: &ClusterTiltObj) -> Result<ClusterTiltedQuiver> {
    let qc = cluster_tilted_parts(alg, tl, t)?;
    if let Some(&(i, j)) = qc.overlaps().first() {
        return Err(Error::Inconsistent(format!(
            "both an arrow and a relation from {} to {}",
            qc.labels[i], qc.labels[j]
        )));
    }
    Ok(qc)
}

/// The same count for `T` inside `mod H`: arrows of `End_H(T)` plus one arrow
/// for each minimal relation of `End_H(T)`.
pub fn module_cluster_quiver(h: &PathAlgebra, modules: &[Rep], labels: Vec<String>) -> Result<Quiver> {
    let objs: Vec<&Rep> = modules.iter().collect();
    let e = BasicAlgebra::new(h.algebra(), &objs, labels.clone())?;
    let rel = e.min_relation_counts()?;
    let n = modules.len();
    let mut arrows = vec![];
    for i in 0..n {
        for j in 0..n {
            for _ in 0..e.irreducible(j, i) + rel[i][j] {
                arrows.push((i, j));
            }
        }
    }
    Ok(Quiver::with_labels(labels, arrows))
}

/// The object of the cluster category behind a fundamental-domain tag, on the
/// H side.
fn h_object(h: &PathAlgebra, ind: &[Rep], tag: FdTag) -> (Rep, bool) {
    match tag {
        FdTag::Module(k) => (ind[k].clone(), false),
        FdTag::Shift(i) => (h.projective(i), true),
    }
}

/// `(dim Hom_D(X, Y), dim Hom_D(F^-1 X, Y))` with `F = tau^-1 [1]`.
pub fn cluster_hom_parts(h: &PathAlgebra, ind: &[Rep], x: FdTag, y: FdTag) -> (usize, usize) {
    let (mx, xs) = h_object(h, ind, x);
    let (ny, ys) = h_object(h, ind, y);
    let deg0 = match (xs, ys) {
        (false, false) => h.hom_dim(&mx, &ny),
        (false, true) => h.ext1_dim(&mx, &ny),
        (true, false) => 0,
        (true, true) => h.hom_dim(&mx, &ny),
    };
    let deg1 = match (x, ys) {
        (_, true) => 0,
        (FdTag::Module(_), false) => {
            if h.algebra().is_projective(&mx) {
                0
            } else {
                h.ext1_dim(&h.tau(&mx), &ny)
            }
        }
        (FdTag::Shift(i), false) => h.ext1_dim(&h.injective(i), &ny),
    };
    (deg0, deg1)
}

pub fn cluster_hom_dim(h: &PathAlgebra, ind: &[Rep], x: FdTag, y: FdTag) -> usize {
    let (a, b) = cluster_hom_parts(h, ind, x, y);
    a + b
}

/// Stable Hom dimension between fundamental-domain objects, i.e. modulo maps
/// factoring through `add I_0(soc H)`.
pub fn stable_hom_dim(alg: &Algebra, ar: &ArQuiver, delta: &[usize], a: usize, b: usize) -> usize {
    let (x, y) = (&ar.nodes[a], &ar.nodes[b]);
    let hom = alg.hom_space(x, y);
    let zs: Vec<&Rep> = delta.iter().map(|&i| &ar.nodes[i]).collect();
    hom.dim() - factoring_subspace(alg, x, y, &hom, &zs).cols
}

/// Whether `qc` is a quiver (no loops or 2-cycles) mutation-equivalent to `q`.
pub fn verify_mutation_class(qc: &Quiver, q: &Quiver) -> Result<bool> {
    if qc.n() != q.n() {
        return Ok(false);
    }
    let pairs: HashSet<(usize, usize)> = qc.arrows.iter().copied().collect();
    if pairs.iter().any(|&(s, t)| s == t || pairs.contains(&(t, s))) {
        return Ok(false);
    }
    let class = mutation_class(q)?;
    let b = ExchangeMatrix::from_quiver(qc).canonical();
    Ok(class.binary_search(&b).is_ok())
}

/// Ordinary quiver of an algebra together with its minimal-relation counts,
/// computed from the endomorphism category of its indecomposable projectives.
/// Vertex `a` stands for `P(a)`; the arrows `a -> b` are the irreducible maps
/// `P(b) -> P(a)`.
pub fn gabriel_quiver(alg: &Algebra) -> Result<(Quiver, Vec<Vec<usize>>)> {
    let projectives: Vec<&Rep> = (0..alg.n()).map(|v| alg.projective(v)).collect();
    let e = BasicAlgebra::new(alg, &projectives, alg.labels().to_vec())?;
    Ok((e.quiver(), e.relation_counts()?))
}
