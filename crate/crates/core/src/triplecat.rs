//! Modules over the duplicated algebra `Lambda = [[H, 0], [DH, H]]` and its
//! subalgebra `Gamma`, written as triples `(X, Y, f: nu(X) -> Y)`.
//!
//! A triple is also stored as a representation of a generator quiver so the
//! generic engine in [`crate::algebra`] can work with it. The vertices are a
//! copy `j` of every vertex allowed in `Y`, followed by a copy `i'` of every
//! vertex allowed in `X`. Generators are the arrows inside each copy, and one
//! connecting generator `i' -> j` per path `q: j ~> i` of the quiver. It acts
//! by `x |-> (f . nu(x^))_j (q*)`, where `x^: P_i -> X` sends the top to `x`
//! and `q*` is the dual path in `nu(P_i)_j`.
//!
//! Every instance is the quotient of `Lambda` by the vertices it omits:
//! `Lambda` keeps all of them, `Gamma` keeps `X` on the sinks only, and the
//! opposite of `Gamma` keeps `Y` on the sources of the opposite quiver.

use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::algebra::{Algebra, HomSpace, Rep, RepMap};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::hmod::{mat_to_json, rep_to_json, PathAlgebra};
use crate::quiver::Quiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    Lambda,
    Gamma,
    /// Opposite of `Gamma`, living on the opposite quiver.
    GammaOp,
}

impl InstanceKind {
    fn opposite(self) -> Self {
        match self {
            InstanceKind::Lambda => InstanceKind::Lambda,
            InstanceKind::Gamma => InstanceKind::GammaOp,
            InstanceKind::GammaOp => InstanceKind::Gamma,
        }
    }
}

/// A module given as a triple. `module` is the same object as a
/// representation of the instance's generator quiver; both views are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub x: Rep,
    pub y: Rep,
    pub f: RepMap,
    pub module: Rep,
}

/// A morphism `(alpha, beta)` of triples with `beta . f = f' . nu(alpha)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleMap {
    pub alpha: RepMap,
    pub beta: RepMap,
}

#[derive(Debug)]
struct Layout {
    left: Vec<usize>,
    right: Vec<usize>,
    gens: Vec<(usize, usize)>,
    yarrows: Vec<(usize, usize)>,
    xarrows: Vec<(usize, usize)>,
    /// `(i, j, k)`: path number `k` among the paths `j ~> i`.
    conn: Vec<(usize, usize, usize, usize)>,
    nu_p: Vec<Vec<HomSpace>>,
    /// `eps[i][j]` has the dual paths `q*` (for `q: j ~> i`) as columns, in
    /// the coordinates of `nu(P_i)_j`.
    eps: Vec<Vec<Mat>>,
}

#[derive(Debug)]
pub struct AlgebraInstance {
    kind: InstanceKind,
    h: PathAlgebra,
    layout: Layout,
    alg: Algebra,
    opposite: OnceLock<Box<AlgebraInstance>>,
}

impl AlgebraInstance {
    /// The duplicated algebra `Lambda` of `kQ`.
    pub fn lambda(q: &Quiver, field: Field) -> Result<Self> {
        let all: Vec<usize> = (0..q.n()).collect();
        Self::build(q, field, InstanceKind::Lambda, all.clone(), all)
    }

    /// `Gamma = [[K, 0], [J, H]]` where `K` is spanned by the sink idempotents.
    pub fn gamma(q: &Quiver, field: Field) -> Result<Self> {
        let all: Vec<usize> = (0..q.n()).collect();
        Self::build(q, field, InstanceKind::Gamma, q.sinks(), all)
    }

    fn build(
        q: &Quiver,
        field: Field,
        kind: InstanceKind,
        left: Vec<usize>,
        right: Vec<usize>,
    ) -> Result<Self> {
        let h = PathAlgebra::new(q, field)?;
        let layout = Layout::new(&h, left, right);
        let projectives = match kind {
            InstanceKind::Lambda => lambda_projectives(&h, &layout)?,
            _ => {
                let full = AlgebraInstance::lambda(q, field)?;
                let n = q.n();
                let mut excluded: Vec<usize> =
                    (0..n).filter(|j| !layout.right.contains(j)).collect();
                excluded.extend((0..n).filter(|i| !layout.left.contains(i)).map(|i| n + i));
                let mut out = vec![];
                let picks = layout
                    .right
                    .iter()
                    .copied()
                    .chain(layout.left.iter().map(|&i| n + i));
                for v in picks {
                    let p = full.alg.kill_vertices(full.alg.projective(v), &excluded);
                    let (x, y, f) = full.layout.decode(&full.h, &p)?;
                    out.push(layout.encode(&h, &x, &y, &f)?);
                }
                out
            }
        };
        let labels = layout
            .right
            .iter()
            .map(|&j| q.labels[j].clone())
            .chain(layout.left.iter().map(|&i| format!("{}'", q.labels[i])))
            .collect();
        let alg = Algebra::new(field, labels, layout.gens.clone(), projectives)?;
        Ok(AlgebraInstance {
            kind,
            h,
            layout,
            alg,
            opposite: OnceLock::new(),
        })
    }

    pub fn kind(&self) -> InstanceKind {
        self.kind
    }

    pub fn quiver(&self) -> &Quiver {
        self.h.quiver()
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    /// The hereditary algebra `H = kQ`.
    pub fn h(&self) -> &PathAlgebra {
        &self.h
    }

    /// The generic engine for this instance.
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    /// Quiver vertices allowed in `X`.
    pub fn left(&self) -> &[usize] {
        &self.layout.left
    }

    /// Quiver vertices allowed in `Y`.
    pub fn right(&self) -> &[usize] {
        &self.layout.right
    }

    /// Engine vertex of the copy of `j` carrying `Y`.
    pub fn y_vertex(&self, j: usize) -> Option<usize> {
        self.layout.right.iter().position(|&v| v == j)
    }

    /// Engine vertex of the primed copy `i'` carrying `X`.
    pub fn x_vertex(&self, i: usize) -> Option<usize> {
        let r = self.layout.right.len();
        self.layout.left.iter().position(|&v| v == i).map(|p| r + p)
    }

    /// Number of simple modules.
    pub fn rank(&self) -> usize {
        self.alg.n()
    }

    /// Opposite instance over the opposite quiver, the target of [`Self::dual`].
    pub fn opposite(&self) -> &AlgebraInstance {
        self.opposite.get_or_init(|| {
            let q = self.quiver().opposite();
            Box::new(
                AlgebraInstance::build(
                    &q,
                    self.field(),
                    self.kind.opposite(),
                    self.layout.right.clone(),
                    self.layout.left.clone(),
                )
                .expect("opposite instance"),
            )
        })
    }

    /// Triple from its components; checks supports and that `f` is a map.
    pub fn triple(&self, x: Rep, y: Rep, f: RepMap) -> Result<Triple> {
        let module = self.layout.encode(&self.h, &x, &y, &f)?;
        Ok(Triple { x, y, f, module })
    }

    /// Triple view of a module of the generator quiver.
    pub fn from_module(&self, module: Rep) -> Result<Triple> {
        let (x, y, f) = self.layout.decode(&self.h, &module)?;
        Ok(Triple { x, y, f, module })
    }

    /// `(0, M, 0)`.
    pub fn embed_h(&self, m: &Rep) -> Result<Triple> {
        let x = self.h.algebra().zero_rep();
        let nux = self.h.nakayama(&x);
        let f = RepMap::zero(self.field(), &nux, m);
        self.triple(x, m.clone(), f)
    }

    /// `(X, 0, 0)` for `X` supported on the allowed left vertices.
    pub fn embed_left(&self, m: &Rep) -> Result<Triple> {
        let y = self.h.algebra().zero_rep();
        let nux = self.h.nakayama(m);
        let f = RepMap::zero(self.field(), &nux, &y);
        self.triple(m.clone(), y, f)
    }

    /// The same triple regarded over another instance on the same quiver.
    pub fn transfer(&self, t: &Triple, other: &AlgebraInstance) -> Result<Triple> {
        other.triple(t.x.clone(), t.y.clone(), t.f.clone())
    }

    pub fn projectives(&self) -> Vec<Triple> {
        (0..self.rank())
            .map(|v| {
                self.from_module(self.alg.projective(v).clone())
                    .expect("projective decodes")
            })
            .collect()
    }

    /// Duals of the projectives of the opposite instance; entry `v` is the
    /// injective envelope of the simple at engine vertex `v`.
    pub fn injectives(&self) -> Vec<Triple> {
        let op = self.opposite();
        let mut out: Vec<(usize, Triple)> = op
            .projectives()
            .iter()
            .map(|p| {
                let d = op.dual(p).expect("dual of a projective");
                let soc = self.alg.socle_dims(&d.module);
                (soc.iter().position(|&s| s > 0).expect("nonzero socle"), d)
            })
            .collect();
        out.sort_by_key(|(v, _)| *v);
        out.into_iter().map(|(_, t)| t).collect()
    }

    pub fn simple(&self, v: usize) -> Triple {
        self.from_module(self.alg.simple(v)).expect("simple decodes")
    }

    pub fn module_map(&self, m: &TripleMap) -> RepMap {
        let mut comps: Vec<Mat> = self
            .layout
            .right
            .iter()
            .map(|&j| m.beta.comps[j].clone())
            .collect();
        comps.extend(self.layout.left.iter().map(|&i| m.alpha.comps[i].clone()));
        RepMap { comps }
    }

    pub fn triple_map(&self, src: &Triple, tgt: &Triple, m: &RepMap) -> TripleMap {
        let f = self.field();
        let n = self.h.n();
        let mut alpha: Vec<Mat> = (0..n).map(|i| Mat::zeros(f, tgt.x.dims[i], src.x.dims[i])).collect();
        let mut beta: Vec<Mat> = (0..n).map(|j| Mat::zeros(f, tgt.y.dims[j], src.y.dims[j])).collect();
        for (p, &j) in self.layout.right.iter().enumerate() {
            beta[j] = m.comps[p].clone();
        }
        let r = self.layout.right.len();
        for (p, &i) in self.layout.left.iter().enumerate() {
            alpha[i] = m.comps[r + p].clone();
        }
        TripleMap {
            alpha: RepMap { comps: alpha },
            beta: RepMap { comps: beta },
        }
    }

    /// Basis of `Hom((X,Y,f), (X',Y',f'))` from the condition
    /// `beta . f = f' . nu(alpha)`, solved on pairs of H-maps.
    pub fn hom_triples(&self, m: &Triple, n: &Triple) -> Vec<TripleMap> {
        let fld = self.field();
        let ha = self.h.algebra();
        let alphas = ha.hom_basis(&m.x, &n.x);
        let betas = ha.hom_basis(&m.y, &n.y);
        let sx = ha.nakayama_spaces(&m.x);
        let sx2 = ha.nakayama_spaces(&n.x);
        let mut cols: Vec<Vec<u32>> = betas.iter().map(|b| m.f.then(b).flatten()).collect();
        for a in &alphas {
            let t = ha.nakayama_map_with(a, &sx, &sx2).then(&n.f);
            cols.push(t.flatten().iter().map(|&v| fld.neg(v)).collect());
        }
        if cols.is_empty() {
            return vec![];
        }
        let sys = Mat::from_columns(fld, cols[0].len(), &cols);
        let ker = sys.kernel_basis();
        let nb = betas.len();
        (0..ker.cols)
            .map(|c| {
                let v = ker.column(c);
                let mut beta = RepMap::zero(fld, &m.y, &n.y);
                for (l, b) in betas.iter().enumerate() {
                    if v[l] != 0 {
                        beta = beta.add(&b.scale(v[l]));
                    }
                }
                let mut alpha = RepMap::zero(fld, &m.x, &n.x);
                for (k, a) in alphas.iter().enumerate() {
                    if v[nb + k] != 0 {
                        alpha = alpha.add(&a.scale(v[nb + k]));
                    }
                }
                TripleMap { alpha, beta }
            })
            .collect()
    }

    /// `rad(X, Y, f) = (rad X, rad Y + Im f)` with the restricted map.
    pub fn radical(&self, m: &Triple) -> Result<Triple> {
        let fld = self.field();
        let ha = self.h.algebra();
        let (rx, incx) = ha.radical(&m.x);
        let (_, incy) = ha.radical(&m.y);
        let span: Vec<Mat> = (0..self.h.n())
            .map(|j| {
                Mat::hstack(fld, m.y.dims[j], &[&incy.comps[j], &m.f.comps[j]]).column_space()
            })
            .collect();
        let seeds = span.clone();
        let (ry, incry) = ha.submodule_generated(&m.y, seeds);
        let nu_inc = ha.nakayama_map(&rx, &m.x, &incx);
        let composite = nu_inc.then(&m.f);
        let comps: Vec<Mat> = (0..self.h.n())
            .map(|j| {
                incry.comps[j]
                    .solve_mat(&composite.comps[j])
                    .expect("f maps into rad Y + Im f")
            })
            .collect();
        self.triple(rx, ry, RepMap { comps })
    }

    /// `M / rad M`, a semisimple triple.
    pub fn top(&self, m: &Triple) -> Result<Triple> {
        let (_, inc) = self.alg.radical(&m.module);
        let (q, _) = self.alg.quotient(&m.module, &inc);
        self.from_module(q)
    }

    /// `soc M`, computed as `D top(D M)`.
    pub fn socle(&self, m: &Triple) -> Result<Triple> {
        let op = self.opposite();
        let d = self.dual(m)?;
        let t = op.top(&d)?;
        op.dual(&t)
    }

    /// Projective cover, as the cover module and the cover map.
    pub fn proj_cover(&self, m: &Triple) -> Result<(Triple, TripleMap)> {
        let c = self.alg.projective_cover(&m.module);
        let p0 = self.from_module(c.p0)?;
        let eps = self.triple_map(&p0, m, &c.eps);
        Ok((p0, eps))
    }

    /// `D(X, Y, f) = (DY, DX, f^)` over the opposite instance. Under
    /// `Hom_op(DY, P_i^op) = Hom(I_i, Y)` the map `f^` at vertex `i` is the
    /// transpose of `x |-> f . nu(x^)`.
    pub fn dual(&self, m: &Triple) -> Result<Triple> {
        let fld = self.field();
        let op = self.opposite();
        let ha = self.h.algebra();
        let hop = op.h.algebra();
        let dy = m.y.dual();
        let dx = m.x.dual();
        let sop = hop.nakayama_spaces(&dy);
        let sx = ha.nakayama_spaces(&m.x);
        let n = self.h.n();
        let mut comps = Vec::with_capacity(n);
        for i in 0..n {
            if m.x.dims[i] == 0 {
                comps.push(Mat::zeros(fld, 0, sop[i].dim()));
                continue;
            }
            let iota = self.iota(op, i);
            let mut cols = vec![];
            for b in 0..m.x.dims[i] {
                let mut e = vec![0; m.x.dims[i]];
                e[b] = 1;
                let xhat = ha.map_from_projective(i, &m.x, &e);
                let hx = ha
                    .nakayama_map_with(&xhat, &self.layout.nu_p[i], &sx)
                    .then(&m.f);
                let g = iota.then(&hx).dual();
                cols.push(sop[i].coords(&g));
            }
            comps.push(Mat::from_columns(fld, sop[i].dim(), &cols).transpose());
        }
        op.triple(dy, dx, RepMap { comps })
    }

    /// `iota_i: D(P_i^op) -> nu(P_i)` sending a dual path to the matching
    /// functional on `Hom(P_i, P_j)`.
    pub fn iota(&self, op: &AlgebraInstance, i: usize) -> RepMap {
        let fld = self.field();
        let n = self.h.n();
        let comps = (0..n)
            .map(|j| {
                let op_paths = op.h.paths_between(i, j);
                let cols: Vec<Vec<u32>> = op_paths
                    .iter()
                    .map(|&pid| {
                        let p = &op.h.paths()[pid];
                        let rev: Vec<usize> = p.arrows.iter().rev().copied().collect();
                        let qid = self.h.path_id(j, &rev).expect("reversed path");
                        let k = self
                            .h
                            .paths_between(j, i)
                            .iter()
                            .position(|&x| x == qid)
                            .unwrap();
                        self.layout.eps[i][j].column(k)
                    })
                    .collect();
                Mat::from_columns(fld, self.layout.eps[i][j].rows, &cols)
            })
            .collect();
        RepMap { comps }
    }

    pub fn triple_to_json(&self, t: &Triple) -> Value {
        let fld = self.field();
        json!({
            "x_dims": t.x.dims,
            "y": rep_to_json(&t.y, fld),
            "x": rep_to_json(&t.x, fld),
            "f": t.f.comps.iter().map(|m| mat_to_json(m, fld)).collect::<Vec<_>>(),
        })
    }
}

impl Layout {
    fn new(h: &PathAlgebra, left: Vec<usize>, right: Vec<usize>) -> Layout {
        let q = h.quiver();
        let yv = |j: usize| right.iter().position(|&v| v == j);
        let xv = |i: usize| left.iter().position(|&v| v == i).map(|p| right.len() + p);
        let mut gens = vec![];
        let mut yarrows = vec![];
        let mut xarrows = vec![];
        for (a, &(s, t)) in q.arrows.iter().enumerate() {
            if let (Some(ys), Some(yt)) = (yv(s), yv(t)) {
                gens.push((ys, yt));
                yarrows.push((a, gens.len() - 1));
            }
        }
        for (a, &(s, t)) in q.arrows.iter().enumerate() {
            if let (Some(xs), Some(xt)) = (xv(s), xv(t)) {
                gens.push((xs, xt));
                xarrows.push((a, gens.len() - 1));
            }
        }
        let mut conn = vec![];
        for &i in &left {
            for &j in &right {
                for k in 0..h.paths_between(j, i).len() {
                    gens.push((xv(i).unwrap(), yv(j).unwrap()));
                    conn.push((i, j, k, gens.len() - 1));
                }
            }
        }
        let ha = h.algebra();
        let n = h.n();
        let nu_p: Vec<Vec<HomSpace>> = (0..n).map(|i| ha.nakayama_spaces(ha.projective(i))).collect();
        let eps = (0..n)
            .map(|i| {
                let top = ha.projective_top(i);
                (0..n)
                    .map(|j| {
                        let paths = h.paths_between(j, i).len();
                        let space = &nu_p[i][j];
                        let mut e = Mat::zeros(h.field(), space.dim(), paths);
                        for (l, phi) in space.basis.iter().enumerate() {
                            let img = phi.comps[i].mul_vec(top);
                            for (k, &v) in img.iter().enumerate() {
                                e.set(l, k, v);
                            }
                        }
                        e
                    })
                    .collect()
            })
            .collect();
        Layout {
            left,
            right,
            gens,
            yarrows,
            xarrows,
            conn,
            nu_p,
            eps,
        }
    }

    fn nv(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// `nu(x^)_j . eps[i][j]` for every basis vector `x^` of `X_i`.
    fn images(&self, h: &PathAlgebra, x: &Rep, sx: &[HomSpace], i: usize) -> Vec<RepMap> {
        let ha = h.algebra();
        (0..x.dims[i])
            .map(|b| {
                let mut e = vec![0; x.dims[i]];
                e[b] = 1;
                let xhat = ha.map_from_projective(i, x, &e);
                let nu = ha.nakayama_map_with(&xhat, &self.nu_p[i], sx);
                RepMap {
                    comps: (0..h.n()).map(|j| nu.comps[j].mul(&self.eps[i][j])).collect(),
                }
            })
            .collect()
    }

    fn encode(&self, h: &PathAlgebra, x: &Rep, y: &Rep, f: &RepMap) -> Result<Rep> {
        let fld = h.field();
        let ha = h.algebra();
        ha.check_rep(x)?;
        ha.check_rep(y)?;
        let n = h.n();
        for v in 0..n {
            if x.dims[v] > 0 && !self.left.contains(&v) {
                return Err(Error::Invalid(format!("X is nonzero at excluded vertex {}", v + 1)));
            }
            if y.dims[v] > 0 && !self.right.contains(&v) {
                return Err(Error::Invalid(format!("Y is nonzero at excluded vertex {}", v + 1)));
            }
        }
        let sx = ha.nakayama_spaces(x);
        let nux = ha.nakayama_with(&sx);
        if !ha.is_morphism(&nux, y, f) {
            return Err(Error::Invalid("f is not a map nu(X) -> Y".into()));
        }
        let mut dims: Vec<usize> = self.right.iter().map(|&j| y.dims[j]).collect();
        dims.extend(self.left.iter().map(|&i| x.dims[i]));
        let mut mats = vec![Mat::zeros(fld, 0, 0); self.gens.len()];
        for &(a, g) in &self.yarrows {
            mats[g] = y.mats[a].clone();
        }
        for &(a, g) in &self.xarrows {
            mats[g] = x.mats[a].clone();
        }
        let images: Vec<Vec<RepMap>> = (0..n)
            .map(|i| {
                if self.left.contains(&i) {
                    self.images(h, x, &sx, i)
                } else {
                    vec![]
                }
            })
            .collect();
        for &(i, j, k, g) in &self.conn {
            let cols: Vec<Vec<u32>> = images[i]
                .iter()
                .map(|img| f.comps[j].mul_vec(&img.comps[j].column(k)))
                .collect();
            mats[g] = Mat::from_columns(fld, y.dims[j], &cols);
        }
        Ok(Rep { dims, mats })
    }

    fn decode(&self, h: &PathAlgebra, m: &Rep) -> Result<(Rep, Rep, RepMap)> {
        let fld = h.field();
        let ha = h.algebra();
        let n = h.n();
        if m.dims.len() != self.nv() || m.mats.len() != self.gens.len() {
            return Err(Error::Invalid("module does not match the instance".into()));
        }
        let r = self.right.len();
        let mut xd = vec![0; n];
        let mut yd = vec![0; n];
        for (p, &j) in self.right.iter().enumerate() {
            yd[j] = m.dims[p];
        }
        for (p, &i) in self.left.iter().enumerate() {
            xd[i] = m.dims[r + p];
        }
        let side = |dims: &[usize], arrows: &[(usize, usize)]| {
            let mut mats: Vec<Mat> = h
                .quiver()
                .arrows
                .iter()
                .map(|&(s, t)| Mat::zeros(fld, dims[t], dims[s]))
                .collect();
            for &(a, g) in arrows {
                mats[a] = m.mats[g].clone();
            }
            Rep {
                dims: dims.to_vec(),
                mats,
            }
        };
        let x = side(&xd, &self.xarrows);
        let y = side(&yd, &self.yarrows);
        let sx = ha.nakayama_spaces(&x);
        let nux = ha.nakayama_with(&sx);
        let images: Vec<Vec<RepMap>> = (0..n)
            .map(|i| {
                if self.left.contains(&i) {
                    self.images(h, &x, &sx, i)
                } else {
                    vec![]
                }
            })
            .collect();
        let mut comps = Vec::with_capacity(n);
        for j in 0..n {
            let mut lhs: Vec<Vec<u32>> = vec![];
            let mut rhs: Vec<Vec<u32>> = vec![];
            for &(i, jj, k, g) in &self.conn {
                if jj != j {
                    continue;
                }
                for (b, img) in images[i].iter().enumerate() {
                    lhs.push(img.comps[j].column(k));
                    rhs.push(m.mats[g].column(b));
                }
            }
            if yd[j] == 0 || nux.dims[j] == 0 {
                comps.push(Mat::zeros(fld, yd[j], nux.dims[j]));
                continue;
            }
            let a = Mat::from_columns(fld, nux.dims[j], &lhs);
            let c = Mat::from_columns(fld, yd[j], &rhs);
            let ft = a
                .transpose()
                .solve_mat(&c.transpose())
                .ok_or_else(|| Error::Inconsistent("connecting maps do not come from a triple".into()))?;
            if a.transpose().mul(&ft) != c.transpose() {
                return Err(Error::Inconsistent("connecting maps do not come from a triple".into()));
            }
            comps.push(ft.transpose());
        }
        let f = RepMap { comps };
        if !ha.is_morphism(&nux, &y, &f) {
            return Err(Error::Inconsistent("decoded f is not a module map".into()));
        }
        Ok((x, y, f))
    }
}

fn lambda_projectives(h: &PathAlgebra, layout: &Layout) -> Result<Vec<Rep>> {
    let ha = h.algebra();
    let fld = h.field();
    let mut out = vec![];
    for &j in &layout.right {
        let x = ha.zero_rep();
        let nux = ha.nakayama(&x);
        let p = h.projective(j);
        out.push(layout.encode(h, &x, &p, &RepMap::zero(fld, &nux, &p))?);
    }
    for &i in &layout.left {
        let p = h.projective(i);
        let nup = ha.nakayama(&p);
        out.push(layout.encode(h, &p, &nup, &RepMap::identity(fld, &nup))?);
    }
    Ok(out)
}
