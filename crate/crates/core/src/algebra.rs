//! Finite-dimensional modules over a basic algebra presented by generators.
//!
//! An [`Algebra`] is described by a set of vertices, a list of generators
//! `g: s -> t` spanning the radical modulo its square, and the indecomposable
//! projective modules written as representations of that generator quiver.
//! A module is a [`Rep`]: one vector space per vertex and one matrix per
//! generator. Nothing else about relations is needed; every construction
//! below works from these data alone.
//!
//! Left modules are covariant: the matrix of `g: s -> t` maps `M_s` to `M_t`
//! and so has shape `dims[t] x dims[s]`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    pub dims: Vec<usize>,
    pub mats: Vec<Mat>,
}

/// A morphism of representations, one matrix per vertex of shape
/// `target.dims[v] x source.dims[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMap {
    pub comps: Vec<Mat>,
}

impl Rep {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Vector-space dual. Generators reverse, so the result is a module over
    /// the opposite algebra.
    pub fn dual(&self) -> Rep {
        Rep {
            dims: self.dims.clone(),
            mats: self.mats.iter().map(Mat::transpose).collect(),
        }
    }
}

impl RepMap {
    pub fn zero(field: Field, source: &Rep, target: &Rep) -> RepMap {
        RepMap {
            comps: source
                .dims
                .iter()
                .zip(&target.dims)
                .map(|(&s, &t)| Mat::zeros(field, t, s))
                .collect(),
        }
    }

    pub fn identity(field: Field, m: &Rep) -> RepMap {
        RepMap {
            comps: m.dims.iter().map(|&d| Mat::identity(field, d)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Mat::is_zero)
    }

    /// `other` after `self`.
    pub fn then(&self, other: &RepMap) -> RepMap {
        RepMap {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(f, g)| g.mul(f))
                .collect(),
        }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        RepMap {
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, s: u32) -> RepMap {
        RepMap {
            comps: self.comps.iter().map(|a| a.scale(s)).collect(),
        }
    }

    pub fn dual(&self) -> RepMap {
        RepMap {
            comps: self.comps.iter().map(Mat::transpose).collect(),
        }
    }

    pub fn flatten(&self) -> Vec<u32> {
        self.comps.iter().flat_map(|m| m.data.iter().copied()).collect()
    }

    pub fn rank(&self) -> usize {
        self.comps.iter().map(Mat::rank).sum()
    }
}

/// Composite `g . f` (apply `f` first).
pub fn compose(g: &RepMap, f: &RepMap) -> RepMap {
    f.then(g)
}

/// A basis of `Hom(M, N)` with a fast coordinate map.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub basis: Vec<RepMap>,
    rows: Vec<usize>,
    inv: Mat,
}

impl HomSpace {
    fn new(field: Field, basis: Vec<RepMap>) -> HomSpace {
        if basis.is_empty() {
            return HomSpace {
                basis,
                rows: vec![],
                inv: Mat::zeros(field, 0, 0),
            };
        }
        let cols: Vec<Vec<u32>> = basis.iter().map(RepMap::flatten).collect();
        let flat = Mat::from_columns(field, cols[0].len(), &cols);
        let rows = flat.transpose().independent_columns();
        let inv = flat
            .select_rows(&rows)
            .inverse()
            .expect("hom basis is linearly independent");
        HomSpace { basis, rows, inv }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `f`, assumed to lie in the span of the basis.
    pub fn coords(&self, f: &RepMap) -> Vec<u32> {
        let flat = f.flatten();
        let picked: Vec<u32> = self.rows.iter().map(|&r| flat[r]).collect();
        self.inv.mul_vec(&picked)
    }

    pub fn combine(&self, field: Field, coords: &[u32], src: &Rep, tgt: &Rep) -> RepMap {
        let mut out = RepMap::zero(field, src, tgt);
        for (c, b) in coords.iter().zip(&self.basis) {
            if *c != 0 {
                out = out.add(&b.scale(*c));
            }
        }
        out
    }
}

/// A projective cover `eps: P0 -> M`, with the top vertex of each summand.
#[derive(Clone, Debug)]
pub struct Cover {
    pub p0: Rep,
    pub eps: RepMap,
    pub tops: Vec<usize>,
}

/// Minimal projective presentation `P1 --d1--> P0 --eps--> M -> 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p1: Rep,
    pub p0: Rep,
    pub d1: RepMap,
    pub eps: RepMap,
    pub tops1: Vec<usize>,
    pub tops0: Vec<usize>,
}

#[derive(Debug)]
struct Projective {
    rep: Rep,
    top: Vec<u32>,
    /// Per vertex: words (generator sequences) whose images of `top` form a
    /// basis, and the inverse of the matrix of those images.
    words: Vec<(Vec<Vec<usize>>, Mat)>,
}

#[derive(Debug)]
pub struct Algebra {
    field: Field,
    labels: Vec<String>,
    gens: Vec<(usize, usize)>,
    projectives: Vec<Projective>,
    rho: OnceLock<Vec<RepMap>>,
    injectives: OnceLock<Vec<Rep>>,
    opposite: OnceLock<Box<Algebra>>,
}

impl Algebra {
    /// Builds the algebra from its generator quiver and the indecomposable
    /// projective `P(v)` for every vertex `v`. Fails if some `P(v)` does not
    /// have simple top `S_v`.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        gens: Vec<(usize, usize)>,
        projectives: Vec<Rep>,
    ) -> Result<Algebra> {
        let n = labels.len();
        if projectives.len() != n {
            return Err(Error::Inconsistent("one projective per vertex expected".into()));
        }
        let mut alg = Algebra {
            field,
            labels,
            gens,
            projectives: vec![],
            rho: OnceLock::new(),
            injectives: OnceLock::new(),
            opposite: OnceLock::new(),
        };
        let mut projs = Vec::with_capacity(n);
        for (v, rep) in projectives.into_iter().enumerate() {
            alg.check_rep(&rep)?;
            let top_dims = alg.top_dims(&rep);
            let mut expect = vec![0; n];
            expect[v] = 1;
            if top_dims != expect {
                return Err(Error::Inconsistent(format!(
                    "projective at {} has top {:?}",
                    alg.labels[v], top_dims
                )));
            }
            let top = alg.top_vectors(&rep)[v].column(0);
            let words = alg.word_basis(&rep, v, &top)?;
            projs.push(Projective { rep, top, words });
        }
        alg.projectives = projs;
        Ok(alg)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gens(&self) -> &[(usize, usize)] {
        &self.gens
    }

    pub fn projective(&self, v: usize) -> &Rep {
        &self.projectives[v].rep
    }

    pub fn projective_top(&self, v: usize) -> &[u32] {
        &self.projectives[v].top
    }

    pub fn injective(&self, v: usize) -> &Rep {
        &self.injectives()[v]
    }

    pub fn injectives(&self) -> &[Rep] {
        self.injectives.get_or_init(|| {
            (0..self.n())
                .map(|v| self.nakayama(self.projective(v)))
                .collect()
        })
    }

    /// The opposite algebra: generators reversed, projectives `D I(v)`.
    pub fn opposite(&self) -> &Algebra {
        self.opposite.get_or_init(|| {
            let gens = self.gens.iter().map(|&(s, t)| (t, s)).collect();
            let projs = self.injectives().iter().map(Rep::dual).collect();
            Box::new(
                Algebra::new(self.field, self.labels.clone(), gens, projs)
                    .expect("dual of an injective has simple top"),
            )
        })
    }

    pub fn zero_rep(&self) -> Rep {
        Rep {
            dims: vec![0; self.n()],
            mats: self
                .gens
                .iter()
                .map(|_| Mat::zeros(self.field, 0, 0))
                .collect(),
        }
    }

    pub fn simple(&self, v: usize) -> Rep {
        let mut dims = vec![0; self.n()];
        dims[v] = 1;
        self.rep_with_zero_maps(dims)
    }

    fn rep_with_zero_maps(&self, dims: Vec<usize>) -> Rep {
        let mats = self
            .gens
            .iter()
            .map(|&(s, t)| Mat::zeros(self.field, dims[t], dims[s]))
            .collect();
        Rep { dims, mats }
    }

    pub fn check_rep(&self, m: &Rep) -> Result<()> {
        if m.dims.len() != self.n() || m.mats.len() != self.gens.len() {
            return Err(Error::Invalid("representation has the wrong shape".into()));
        }
        for (g, &(s, t)) in self.gens.iter().enumerate() {
            let a = &m.mats[g];
            if (a.rows, a.cols) != (m.dims[t], m.dims[s]) {
                return Err(Error::Invalid(format!(
                    "matrix of generator {g} is {}x{}, expected {}x{}",
                    a.rows, a.cols, m.dims[t], m.dims[s]
                )));
            }
        }
        Ok(())
    }

    pub fn is_morphism(&self, m: &Rep, n: &Rep, f: &RepMap) -> bool {
        if f.comps.len() != self.n() {
            return false;
        }
        for v in 0..self.n() {
            if (f.comps[v].rows, f.comps[v].cols) != (n.dims[v], m.dims[v]) {
                return false;
            }
        }
        self.gens.iter().enumerate().all(|(g, &(s, t))| {
            n.mats[g].mul(&f.comps[s]) == f.comps[t].mul(&m.mats[g])
        })
    }

    pub fn direct_sum(&self, parts: &[&Rep]) -> Rep {
        let f = self.field;
        let dims = (0..self.n())
            .map(|v| parts.iter().map(|m| m.dims[v]).sum())
            .collect();
        let mats = (0..self.gens.len())
            .map(|g| {
                let blocks: Vec<&Mat> = parts.iter().map(|m| &m.mats[g]).collect();
                Mat::block_diag(f, &blocks)
            })
            .collect();
        Rep { dims, mats }
    }

    /// Canonical inclusions and projections of a direct sum.
    pub fn sum_maps(&self, parts: &[&Rep]) -> (Vec<RepMap>, Vec<RepMap>) {
        let f = self.field;
        let total: Vec<usize> = (0..self.n())
            .map(|v| parts.iter().map(|m| m.dims[v]).sum())
            .collect();
        let mut offs = vec![0usize; self.n()];
        let (mut incs, mut projs) = (vec![], vec![]);
        for m in parts {
            let mut inc = vec![];
            let mut proj = vec![];
            for v in 0..self.n() {
                let mut i = Mat::zeros(f, total[v], m.dims[v]);
                i.set_block(offs[v], 0, &Mat::identity(f, m.dims[v]));
                proj.push(i.transpose());
                inc.push(i);
                offs[v] += m.dims[v];
            }
            incs.push(RepMap { comps: inc });
            projs.push(RepMap { comps: proj });
        }
        (incs, projs)
    }

    /// Basis of `Hom(M, N)` as the null space of the commuting-square
    /// equations, one unknown per matrix entry.
    pub fn hom_basis(&self, m: &Rep, n: &Rep) -> Vec<RepMap> {
        let f = self.field;
        let nv = self.n();
        let mut off = vec![0usize; nv + 1];
        for v in 0..nv {
            off[v + 1] = off[v] + n.dims[v] * m.dims[v];
        }
        let unknowns = off[nv];
        if unknowns == 0 {
            return vec![];
        }
        let idx = |v: usize, r: usize, c: usize| off[v] + r * m.dims[v] + c;
        let neq: usize = self.gens.iter().map(|&(s, t)| n.dims[t] * m.dims[s]).sum();
        let mut a = Mat::zeros(f, neq, unknowns);
        let mut row = 0;
        for (g, &(s, t)) in self.gens.iter().enumerate() {
            let (ng, mg) = (&n.mats[g], &m.mats[g]);
            for r in 0..n.dims[t] {
                for c in 0..m.dims[s] {
                    for k in 0..n.dims[s] {
                        let v = ng.get(r, k);
                        if v != 0 {
                            let j = idx(s, k, c);
                            a.set(row, j, f.add(a.get(row, j), v));
                        }
                    }
                    for k in 0..m.dims[t] {
                        let v = mg.get(k, c);
                        if v != 0 {
                            let j = idx(t, r, k);
                            a.set(row, j, f.sub(a.get(row, j), v));
                        }
                    }
                    row += 1;
                }
            }
        }
        let ker = a.kernel_basis();
        (0..ker.cols)
            .map(|c| {
                let col = ker.column(c);
                RepMap {
                    comps: (0..nv)
                        .map(|v| {
                            let mut mat = Mat::zeros(f, n.dims[v], m.dims[v]);
                            mat.data.copy_from_slice(&col[off[v]..off[v + 1]]);
                            mat
                        })
                        .collect(),
                }
            })
            .collect()
    }

    pub fn hom_space(&self, m: &Rep, n: &Rep) -> HomSpace {
        HomSpace::new(self.field, self.hom_basis(m, n))
    }

    pub fn hom_dim(&self, m: &Rep, n: &Rep) -> usize {
        self.hom_basis(m, n).len()
    }

    /// Subrepresentation spanned per vertex by the columns of `span[v]`,
    /// which must already be closed under the generators.
    fn subrep(&self, m: &Rep, span: Vec<Mat>) -> (Rep, RepMap) {
        let dims: Vec<usize> = span.iter().map(|s| s.cols).collect();
        let mats = self
            .gens
            .iter()
            .enumerate()
            .map(|(g, &(s, t))| {
                let img = m.mats[g].mul(&span[s]);
                span[t]
                    .solve_mat(&img)
                    .expect("span is closed under the generators")
            })
            .collect();
        (Rep { dims, mats }, RepMap { comps: span })
    }

    /// Smallest subrepresentation containing the given vectors.
    pub fn submodule_generated(&self, m: &Rep, seeds: Vec<Mat>) -> (Rep, RepMap) {
        let mut span: Vec<Mat> = seeds.iter().map(Mat::column_space).collect();
        loop {
            let mut changed = false;
            for (g, &(s, t)) in self.gens.iter().enumerate() {
                let img = m.mats[g].mul(&span[s]);
                let joined = Mat::hstack(self.field, m.dims[t], &[&span[t], &img]);
                let cs = joined.column_space();
                if cs.cols > span[t].cols {
                    span[t] = cs;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        self.subrep(m, span)
    }

    pub fn kernel(&self, m: &Rep, f: &RepMap) -> (Rep, RepMap) {
        let span = (0..self.n()).map(|v| f.comps[v].kernel_basis()).collect();
        self.subrep(m, span)
    }

    pub fn image(&self, n: &Rep, f: &RepMap) -> (Rep, RepMap) {
        let span = (0..self.n()).map(|v| f.comps[v].column_space()).collect();
        self.subrep(n, span)
    }

    /// Quotient `N / im f` with its projection.
    pub fn cokernel(&self, n: &Rep, f: &RepMap) -> (Rep, RepMap) {
        let fld = self.field;
        let pis: Vec<Mat> = (0..self.n())
            .map(|v| f.comps[v].transpose().kernel_basis().transpose())
            .collect();
        self.quotient_by_projections(n, pis, fld)
    }

    fn quotient_by_projections(&self, n: &Rep, pis: Vec<Mat>, fld: Field) -> (Rep, RepMap) {
        let sections: Vec<Mat> = pis
            .iter()
            .map(|p| {
                p.solve_mat(&Mat::identity(fld, p.rows))
                    .expect("projection has full row rank")
            })
            .collect();
        let dims: Vec<usize> = pis.iter().map(|p| p.rows).collect();
        let mats = self
            .gens
            .iter()
            .enumerate()
            .map(|(g, &(s, t))| pis[t].mul(&n.mats[g]).mul(&sections[s]))
            .collect();
        (Rep { dims, mats }, RepMap { comps: pis })
    }

    /// Quotient by a subrepresentation given by its inclusion.
    pub fn quotient(&self, n: &Rep, inc: &RepMap) -> (Rep, RepMap) {
        self.cokernel(n, inc)
    }

    pub fn radical(&self, m: &Rep) -> (Rep, RepMap) {
        let f = self.field;
        let span = (0..self.n())
            .map(|t| {
                let imgs: Vec<&Mat> = self
                    .gens
                    .iter()
                    .enumerate()
                    .filter(|(_, &(_, tt))| tt == t)
                    .map(|(g, _)| &m.mats[g])
                    .collect();
                if imgs.is_empty() {
                    Mat::zeros(f, m.dims[t], 0)
                } else {
                    Mat::hstack(f, m.dims[t], &imgs).column_space()
                }
            })
            .collect();
        self.subrep(m, span)
    }

    /// Elements killed by every generator.
    pub fn socle(&self, m: &Rep) -> (Rep, RepMap) {
        let f = self.field;
        let span = (0..self.n())
            .map(|s| {
                let outs: Vec<&Mat> = self
                    .gens
                    .iter()
                    .enumerate()
                    .filter(|(_, &(ss, _))| ss == s)
                    .map(|(g, _)| &m.mats[g])
                    .collect();
                if outs.is_empty() {
                    Mat::identity(f, m.dims[s])
                } else {
                    Mat::vstack(f, m.dims[s], &outs).kernel_basis()
                }
            })
            .collect();
        self.subrep(m, span)
    }

    /// Per vertex, standard basis vectors spanning a complement of the radical.
    pub fn top_vectors(&self, m: &Rep) -> Vec<Mat> {
        let (_, inc) = self.radical(m);
        inc.comps.iter().map(Mat::complement_basis).collect()
    }

    pub fn top_dims(&self, m: &Rep) -> Vec<usize> {
        self.top_vectors(m).iter().map(|t| t.cols).collect()
    }

    pub fn socle_dims(&self, m: &Rep) -> Vec<usize> {
        self.socle(m).0.dims
    }

    fn word_basis(&self, p: &Rep, v: usize, top: &[u32]) -> Result<Vec<(Vec<Vec<usize>>, Mat)>> {
        let f = self.field;
        let n = self.n();
        let mut words: Vec<Vec<Vec<usize>>> = vec![vec![]; n];
        let mut vecs: Vec<Vec<Vec<u32>>> = vec![vec![]; n];
        words[v].push(vec![]);
        vecs[v].push(top.to_vec());
        let mut queue = std::collections::VecDeque::from([(v, vec![], top.to_vec())]);
        while let Some((w, word, vec)) = queue.pop_front() {
            for (g, &(s, t)) in self.gens.iter().enumerate() {
                if s != w || vecs[t].len() == p.dims[t] {
                    continue;
                }
                let img = p.mats[g].mul_vec(&vec);
                let mut cand = vecs[t].clone();
                cand.push(img.clone());
                if Mat::from_columns(f, p.dims[t], &cand).rank() == cand.len() {
                    let mut nw: Vec<usize> = word.clone();
                    nw.push(g);
                    words[t].push(nw.clone());
                    vecs[t].push(img.clone());
                    queue.push_back((t, nw, img));
                }
            }
        }
        let mut out = Vec::with_capacity(n);
        for w in 0..n {
            if vecs[w].len() != p.dims[w] {
                return Err(Error::Inconsistent(format!(
                    "projective at {} is not generated by its top",
                    self.labels[v]
                )));
            }
            let m = Mat::from_columns(f, p.dims[w], &vecs[w]);
            let inv = m.inverse().expect("independent words");
            out.push((std::mem::take(&mut words[w]), inv));
        }
        Ok(out)
    }

    fn apply_word(&self, m: &Rep, word: &[usize], x: &[u32]) -> Vec<u32> {
        word.iter().fold(x.to_vec(), |acc, &g| m.mats[g].mul_vec(&acc))
    }

    /// The map `P(v) -> M` sending the top of `P(v)` to `x` in `M_v`.
    pub fn map_from_projective(&self, v: usize, m: &Rep, x: &[u32]) -> RepMap {
        let f = self.field;
        let proj = &self.projectives[v];
        let comps = (0..self.n())
            .map(|w| {
                let (words, inv) = &proj.words[w];
                let imgs: Vec<Vec<u32>> =
                    words.iter().map(|wd| self.apply_word(m, wd, x)).collect();
                Mat::from_columns(f, m.dims[w], &imgs).mul(inv)
            })
            .collect();
        RepMap { comps }
    }

    /// Projective cover; summands are ordered by vertex.
    pub fn projective_cover(&self, m: &Rep) -> Cover {
        let f = self.field;
        let tops = self.top_vectors(m);
        let mut parts = vec![];
        let mut maps = vec![];
        let mut top_vs = vec![];
        for (v, t) in tops.iter().enumerate() {
            for c in 0..t.cols {
                parts.push(self.projective(v));
                maps.push(self.map_from_projective(v, m, &t.column(c)));
                top_vs.push(v);
            }
        }
        let p0 = if parts.is_empty() {
            self.rep_with_zero_maps(vec![0; self.n()])
        } else {
            self.direct_sum(&parts)
        };
        let comps = (0..self.n())
            .map(|w| {
                let blocks: Vec<&Mat> = maps.iter().map(|mp| &mp.comps[w]).collect();
                if blocks.is_empty() {
                    Mat::zeros(f, m.dims[w], 0)
                } else {
                    Mat::hstack(f, m.dims[w], &blocks)
                }
            })
            .collect();
        Cover {
            p0,
            eps: RepMap { comps },
            tops: top_vs,
        }
    }

    pub fn syzygy(&self, m: &Rep) -> Rep {
        let c = self.projective_cover(m);
        self.kernel(&c.p0, &c.eps).0
    }

    pub fn min_presentation(&self, m: &Rep) -> Presentation {
        let c0 = self.projective_cover(m);
        let (omega, inc) = self.kernel(&c0.p0, &c0.eps);
        let c1 = self.projective_cover(&omega);
        Presentation {
            d1: c1.eps.then(&inc),
            p1: c1.p0,
            p0: c0.p0,
            eps: c0.eps,
            tops1: c1.tops,
            tops0: c0.tops,
        }
    }

    pub fn is_projective(&self, m: &Rep) -> bool {
        self.syzygy(m).is_zero()
    }

    pub fn is_injective(&self, m: &Rep) -> bool {
        self.opposite().is_projective(&m.dual())
    }

    /// Projective dimension, or `None` past `bound` steps.
    pub fn pd_bounded(&self, m: &Rep, bound: usize) -> Option<usize> {
        let mut cur = m.clone();
        for k in 0..=bound {
            let omega = self.syzygy(&cur);
            if omega.is_zero() {
                return Some(k);
            }
            cur = omega;
        }
        None
    }

    pub fn pd(&self, m: &Rep) -> usize {
        self.pd_bounded(m, 64).expect("finite projective dimension")
    }

    /// Global dimension as the largest projective dimension of a simple.
    pub fn gldim(&self) -> usize {
        (0..self.n()).map(|v| self.pd(&self.simple(v))).max().unwrap_or(0)
    }

    /// `dim Ext^k(M, N)` for `k >= 1`, from syzygies and Hom dimensions.
    pub fn ext_dim(&self, m: &Rep, n: &Rep, k: usize) -> usize {
        assert!(k >= 1);
        let mut l = m.clone();
        for _ in 1..k {
            l = self.syzygy(&l);
        }
        let c = self.projective_cover(&l);
        let omega = self.kernel(&c.p0, &c.eps).0;
        let hom_p0: usize = c.tops.iter().map(|&v| n.dims[v]).sum();
        self.hom_dim(&omega, n) + self.hom_dim(&l, n) - hom_p0
    }

    fn rho(&self) -> &[RepMap] {
        self.rho.get_or_init(|| {
            self.gens
                .iter()
                .enumerate()
                .map(|(g, &(s, t))| {
                    let ps = &self.projectives[s];
                    let x = ps.rep.mats[g].mul_vec(&ps.top);
                    self.map_from_projective(t, &ps.rep, &x)
                })
                .collect()
        })
    }

    /// Hom spaces `Hom(M, P(v))` used to build `nu(M)`.
    pub fn nakayama_spaces(&self, m: &Rep) -> Vec<HomSpace> {
        (0..self.n())
            .map(|v| self.hom_space(m, self.projective(v)))
            .collect()
    }

    /// Nakayama functor `nu(M)_v = D Hom(M, P(v))`.
    pub fn nakayama_with(&self, spaces: &[HomSpace]) -> Rep {
        let f = self.field;
        let rho = self.rho();
        let dims: Vec<usize> = spaces.iter().map(HomSpace::dim).collect();
        let mats = self
            .gens
            .iter()
            .enumerate()
            .map(|(g, &(s, t))| {
                let cols: Vec<Vec<u32>> = spaces[t]
                    .basis
                    .iter()
                    .map(|phi| spaces[s].coords(&phi.then(&rho[g])))
                    .collect();
                Mat::from_columns(f, dims[s], &cols).transpose()
            })
            .collect();
        Rep { dims, mats }
    }

    pub fn nakayama(&self, m: &Rep) -> Rep {
        self.nakayama_with(&self.nakayama_spaces(m))
    }

    /// `nu(alpha): nu(M) -> nu(M')` for `alpha: M -> M'`, in the bases fixed
    /// by the given Hom spaces.
    pub fn nakayama_map_with(
        &self,
        alpha: &RepMap,
        src: &[HomSpace],
        tgt: &[HomSpace],
    ) -> RepMap {
        let f = self.field;
        let comps = (0..self.n())
            .map(|v| {
                let cols: Vec<Vec<u32>> = tgt[v]
                    .basis
                    .iter()
                    .map(|phi| src[v].coords(&alpha.then(phi)))
                    .collect();
                Mat::from_columns(f, src[v].dim(), &cols).transpose()
            })
            .collect();
        RepMap { comps }
    }

    pub fn nakayama_map(&self, m: &Rep, n: &Rep, alpha: &RepMap) -> RepMap {
        self.nakayama_map_with(alpha, &self.nakayama_spaces(m), &self.nakayama_spaces(n))
    }

    /// Auslander-Reiten translate `ker(nu(P1) -> nu(P0))`.
    pub fn tau(&self, m: &Rep) -> Rep {
        let pres = self.min_presentation(m);
        let s1 = self.nakayama_spaces(&pres.p1);
        let s0 = self.nakayama_spaces(&pres.p0);
        let nu1 = self.nakayama_with(&s1);
        let nd = self.nakayama_map_with(&pres.d1, &s1, &s0);
        self.kernel(&nu1, &nd).0
    }

    /// Inverse translate `D tau_op D`.
    pub fn tau_inv(&self, m: &Rep) -> Rep {
        self.opposite().tau(&m.dual()).dual()
    }

    /// Indecomposability via the trace form on `End(M)`: its rank is
    /// `dim End(M)/rad End(M)`, which is 1 exactly when `End(M)` is local
    /// with residue field `k`. Valid while `dim M < p`.
    pub fn is_indecomposable(&self, m: &Rep) -> bool {
        if m.is_zero() {
            return false;
        }
        let end = self.hom_basis(m, m);
        self.trace_form(&end).rank() == 1
    }

    fn trace_form(&self, end: &[RepMap]) -> Mat {
        let f = self.field;
        let d = end.len();
        let mut g = Mat::zeros(f, d, d);
        for i in 0..d {
            for j in 0..d {
                let tr = (0..self.n()).fold(0, |acc, v| {
                    f.add(acc, end[i].comps[v].mul(&end[j].comps[v]).trace())
                });
                g.set(i, j, tr);
            }
        }
        g
    }

    /// Coordinates (in the given basis of `End(M)`) spanning `rad End(M)`.
    pub fn endo_radical(&self, end: &[RepMap]) -> Mat {
        self.trace_form(end).kernel_basis()
    }

    /// Isomorphism test for indecomposables over a representation-directed
    /// algebra: equal dimension vectors and nonzero maps both ways.
    pub fn iso_directed(&self, m: &Rep, n: &Rep) -> bool {
        m.dims == n.dims
            && !m.is_zero()
            && self.hom_dim(m, n) > 0
            && self.hom_dim(n, m) > 0
    }

    /// Quotient of `M` by the submodule generated by its spaces at `verts`.
    pub fn kill_vertices(&self, m: &Rep, verts: &[usize]) -> Rep {
        let f = self.field;
        let seeds = (0..self.n())
            .map(|v| {
                if verts.contains(&v) {
                    Mat::identity(f, m.dims[v])
                } else {
                    Mat::zeros(f, m.dims[v], 0)
                }
            })
            .collect();
        let (_, inc) = self.submodule_generated(m, seeds);
        self.quotient(m, &inc).0
    }

    /// Radical layers `rad^k M / rad^{k+1} M` as dimension vectors.
    pub fn radical_layers(&self, m: &Rep) -> Vec<Vec<usize>> {
        let mut layers = vec![];
        let mut cur = m.clone();
        while !cur.is_zero() {
            let (rad, _) = self.radical(&cur);
            layers.push(
                cur.dims
                    .iter()
                    .zip(&rad.dims)
                    .map(|(a, b)| a - b)
                    .collect(),
            );
            cur = rad;
        }
        layers
    }
}
