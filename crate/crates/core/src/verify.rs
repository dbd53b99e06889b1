//! The full property suite run by `verify`.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::artheory::{factoring_subspace, fundamental_domain, i0_soc_h, left_part, ArQuiver};
use crate::ctquiver::{cluster_tilted_parts, tilting_end, verify_mutation_class};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::quiver::{self, Quiver};
use crate::tilting::{gamma_correspondence, lambda_correspondence, Tilting};
use crate::triplecat::AlgebraInstance;
use crate::Rep;

/// Check labels in report order.
pub const LABELS: [&str; 16] = [
    "Z",
    "Y",
    "X",
    "1.5",
    "W",
    "V",
    "T",
    "P1",
    "E",
    "2.5",
    "Juan",
    "14",
    "complements",
    "IR2",
    "final Theorem",
    "Remark",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub label: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let s = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            writeln!(f, "{s:<5}{:<15}{}", c.label, c.detail)?;
        }
        Ok(())
    }
}

/// Outcome of one check: `Err` carries the counterexample.
type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, fail: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(fail())
    }
}

struct Ctx<'a> {
    q: &'a Quiver,
    gamma: &'a AlgebraInstance,
    lambda: &'a AlgebraInstance,
    gar: &'a ArQuiver,
    lar: &'a ArQuiver,
    gt: Tilting<'a>,
    lt: Tilting<'a>,
}

impl Ctx<'_> {
    fn in_mod_h(&self, inst: &AlgebraInstance, m: &Rep) -> bool {
        inst.from_module(m.clone()).map(|t| t.x.is_zero()).unwrap_or(false)
    }

    fn proj_inj(ar: &ArQuiver, i: usize) -> bool {
        ar.projective[i] && ar.injective[i]
    }

    fn z(&self) -> Outcome {
        let (l, ar) = (self.lambda, self.lar);
        for (i, m) in ar.nodes.iter().enumerate() {
            let t = l.algebra().tau(m);
            ensure((ar.pd[i] <= 1) == self.in_mod_h(l, &t), || {
                format!("{}: pd {} but tau has left part {}", ar.labels[i], ar.pd[i], !self.in_mod_h(l, &t))
            })?;
        }
        Ok(format!("{} indecomposable Lambda-modules", ar.len()))
    }

    fn y(&self) -> Outcome {
        let ar = self.lar;
        let mut pairs = 0;
        for x in 0..ar.len() {
            for y in 0..ar.len() {
                if ar.hom[x][y] > 0 && ar.pd[y] == 1 {
                    pairs += 1;
                    ensure(ar.pd[x] <= 1, || format!("{} -> {}", ar.labels[x], ar.labels[y]))?;
                }
            }
        }
        Ok(format!("{pairs} nonzero Hom pairs into pd 1"))
    }

    fn x(&self) -> Outcome {
        let ar = self.lar;
        let lp = left_part(ar);
        for i in 0..ar.len() {
            if ar.pd[i] == 1 {
                ensure(lp.contains(&i), || format!("{} has pd 1 outside the left part", ar.labels[i]))?;
            }
        }
        Ok(format!("left part has {} of {} modules", lp.len(), ar.len()))
    }

    fn thm_1_5(&self) -> Outcome {
        let ar = self.lar;
        let lp = left_part(ar);
        for i in 0..ar.len() {
            if !Self::proj_inj(ar, i) {
                ensure(lp.contains(&i) == (ar.pd[i] <= 1), || format!("(a) fails at {}", ar.labels[i]))?;
            }
        }
        let fd: Vec<usize> = self.lt.fundamental_domain().iter().map(|o| o.node).collect();
        for &i in &fd {
            ensure(lp.contains(&i), || format!("(b) {} not in the left part", ar.labels[i]))?;
        }
        for &i in &lp {
            ensure(fd.contains(&i) || Self::proj_inj(ar, i), || format!("(b) extra {}", ar.labels[i]))?;
        }
        let tl = self.lt.tilting_modules().len();
        let ct = self.gt.cluster_tilting_objects().map_err(|e| e.to_string())?.len();
        ensure(tl == ct, || format!("(c) {tl} tilting Lambda-modules, {ct} cluster-tilting objects"))?;
        Ok(format!("{tl} tilting Lambda-modules"))
    }

    fn w(&self) -> Outcome {
        let gl = self.lambda.algebra().gldim();
        let h = self.lambda.h();
        let semisimple = self.q.arrows.is_empty();
        let tau2_zero = (0..h.n()).all(|i| h.tau_inv(&h.tau_inv(&h.projective(i))).is_zero());
        let expect = if semisimple {
            1
        } else if tau2_zero {
            2
        } else {
            3
        };
        ensure(gl == expect, || format!("gldim Lambda = {gl}, expected {expect}"))?;
        Ok(format!("gldim Lambda = {gl}"))
    }

    fn v(&self) -> Outcome {
        let gl = self.lambda.algebra().gldim();
        let listed = self
            .q
            .components()
            .iter()
            .all(|c| small_quiver(&self.q.restrict(c)));
        ensure((gl <= 2) == listed, || format!("gldim Lambda = {gl}, quiver listed: {listed}"))?;
        Ok(format!("gldim Lambda <= 2: {}", gl <= 2))
    }

    fn t(&self) -> Outcome {
        let l = self.lambda;
        let alg = l.algebra();
        let h = l.h();
        let mut tops = vec![0; alg.n()];
        for i in 0..h.n() {
            let p = h.projective(i);
            let soc = h.algebra().socle_dims(&p);
            let t = l.embed_h(&h.injective(i)).map_err(|e| e.to_string())?;
            let u = l.from_module(alg.tau_inv(&t.module)).map_err(|e| e.to_string())?;
            let mut i1: Vec<i64> = p.dims.iter().map(|&d| -(d as i64)).collect();
            for (s, &m) in soc.iter().enumerate() {
                for (a, d) in i1.iter_mut().zip(&h.injective(s).dims) {
                    *a += (m * d) as i64;
                }
            }
            let got: Vec<i64> = u.y.dims.iter().map(|&d| d as i64).collect();
            ensure(u.x.dims == soc && got == i1, || format!("(3) fails at P{}", i + 1))?;
            for (t, d) in tops.iter_mut().zip(alg.top_dims(&u.module)) {
                *t += d;
            }
        }
        let ps: Vec<Rep> = (0..h.n()).map(|i| h.projective(i)).collect();
        let hh = l
            .embed_h(&h.algebra().direct_sum(&ps.iter().collect::<Vec<_>>()))
            .map_err(|e| e.to_string())?;
        let socs = alg.socle_dims(&hh.module);
        let mut p0 = vec![];
        let mut i0 = vec![];
        for v in 0..alg.n() {
            p0.extend(std::iter::repeat_n(alg.projective(v).dims.clone(), tops[v]));
            i0.extend(std::iter::repeat_n(alg.injectives()[v].dims.clone(), socs[v]));
        }
        p0.sort();
        i0.sort();
        ensure(p0 == i0, || "(4) projective cover differs from injective envelope".into())?;
        Ok("(3) and (4) hold".into())
    }

    fn p1(&self) -> Outcome {
        let (g, l) = (self.gamma, self.lambda);
        let ga = g.algebra();
        let la = l.algebra();
        // engine vertex of Gamma -> engine vertex of Lambda
        let map: Vec<usize> = (0..ga.n())
            .map(|v| {
                la.labels()
                    .iter()
                    .position(|x| x == &ga.labels()[v])
                    .expect("Gamma vertex exists over Lambda")
            })
            .collect();
        for a in 0..ga.n() {
            for b in 0..ga.n() {
                let dg = ga.projective(a).dims[b];
                let dl = la.projective(map[a]).dims[map[b]];
                ensure(dg == dl, || format!("Cartan entry ({}, {})", ga.labels()[a], ga.labels()[b]))?;
            }
        }
        let want = self.q.n() + self.q.sinks().len();
        ensure(ga.n() == want, || format!("Gamma has {} vertices, expected {want}", ga.n()))?;
        Ok(format!("Gamma has {} vertices", ga.n()))
    }

    fn e(&self) -> Outcome {
        let ar = self.gar;
        let small: Vec<usize> = (0..ar.len()).filter(|&i| ar.pd[i] <= 1).collect();
        let pred = ar.predecessors();
        for &x in &small {
            for y in 0..ar.len() {
                ensure(!pred[y][x] || ar.pd[y] <= 1, || {
                    format!("{} precedes {} with pd {}", ar.labels[y], ar.labels[x], ar.pd[y])
                })?;
            }
        }
        let mut expect: Vec<usize> = self.gt.fundamental_domain().iter().map(|o| o.node).collect();
        expect.extend(ar.proj_inj());
        expect.sort_unstable();
        expect.dedup();
        ensure(small == expect, || "pd <= 1 class differs from FD plus projective-injectives".into())?;
        let gl = self.gamma.algebra().gldim();
        ensure(gl <= 2, || format!("gldim Gamma = {gl}"))?;
        ensure(left_part(ar) == small, || "left part differs from the pd <= 1 class".into())?;
        Ok(format!("{} modules of pd <= 1, gldim Gamma = {gl}", small.len()))
    }

    fn cor_2_5(&self) -> Outcome {
        let ar = self.gar;
        for x in 0..ar.len() {
            ensure(ar.pd[x] <= 2, || format!("{} has pd {}", ar.labels[x], ar.pd[x]))?;
            for y in 0..ar.len() {
                if ar.pd[x] == 2 && ar.pd[y] <= 1 {
                    ensure(ar.hom[x][y] == 0, || format!("map {} -> {}", ar.labels[x], ar.labels[y]))?;
                }
            }
        }
        Ok("split torsion pair".into())
    }

    fn juan(&self) -> Outcome {
        let gm = self.gt.tilting_modules();
        let lm = self.lt.tilting_modules();
        ensure(gm.len() == lm.len(), || format!("{} vs {}", gm.len(), lm.len()))?;
        let mut images = HashSet::new();
        for s in &gm {
            let u = lambda_correspondence(&self.gt, &self.lt, s).map_err(|e| e.to_string())?;
            ensure(self.lt.is_tilting(&u.summands), || format!("image of {:?} not tilting", self.gt.labels(&s.summands)))?;
            let back = gamma_correspondence(&self.gt, &self.lt, &u).map_err(|e| e.to_string())?;
            ensure(&back == s, || "round trip fails".into())?;
            images.insert(u);
        }
        ensure(images.len() == lm.len(), || "correspondence is not onto".into())?;
        Ok(format!("{} tilting modules on both sides", gm.len()))
    }

    fn thm_14(&self) -> Outcome {
        let gm = self.gt.tilting_modules();
        for s in &gm {
            for d in self.gt.delta() {
                ensure(s.summands.contains(d), || format!("{:?} misses I0", self.gt.labels(&s.summands)))?;
            }
            let c = self.gt.theta_inv(s).map_err(|e| e.to_string())?;
            ensure(&self.gt.theta(&c) == s, || "theta round trip fails".into())?;
        }
        let expect: u64 = quiver::component_types(self.q)
            .into_iter()
            .map(|t| t.map(|t| t.cluster_number()).unwrap_or(0))
            .product();
        ensure(gm.len() as u64 == expect, || format!("{} tilting modules, {expect} clusters", gm.len()))?;
        Ok(format!("{} cluster-tilting objects", gm.len()))
    }

    fn complements(&self) -> Outcome {
        let mut almost = HashSet::new();
        for c in self.gt.cluster_tilting_objects().map_err(|e| e.to_string())? {
            for k in 0..c.summands.len() {
                let mut a = c.summands.clone();
                a.remove(k);
                almost.insert(a);
            }
        }
        for a in &almost {
            let n = self.gt.complements(a).map_err(|e| e.to_string())?.len();
            ensure(n == 2, || format!("{} complements", n))?;
        }
        Ok(format!("{} almost complete objects", almost.len()))
    }

    fn ir2(&self) -> Outcome {
        let (l, ar) = (self.lambda, self.lar);
        let alg = l.algebra();
        let all: Vec<&Rep> = ar.proj_inj().iter().map(|&i| &ar.nodes[i]).collect();
        let soc: Vec<&Rep> = i0_soc_h(l, ar).iter().map(|&i| &ar.nodes[i]).collect();
        let fd = fundamental_domain(l, ar).map_err(|e| e.to_string())?;
        for a in &fd {
            for b in &fd {
                let (x, y) = (&ar.nodes[a.node], &ar.nodes[b.node]);
                let hom = alg.hom_space(x, y);
                let s1 = factoring_subspace(alg, x, y, &hom, &all);
                let s2 = factoring_subspace(alg, x, y, &hom, &soc);
                let both = Mat::hstack(alg.field(), hom.dim(), &[&s1, &s2]);
                ensure(s1.cols == s2.cols && both.rank() == s1.cols, || {
                    format!("{} -> {}", ar.labels[a.node], ar.labels[b.node])
                })?;
            }
        }
        Ok(format!("{} pairs", fd.len() * fd.len()))
    }

    fn final_theorem(&self) -> (Outcome, Outcome) {
        let objs = match self.gt.cluster_tilting_objects() {
            Ok(o) => o,
            Err(e) => return (Err(e.to_string()), Err(e.to_string())),
        };
        let alg = self.gamma.algebra();
        let mut remark: Outcome = Ok(format!("{} quivers", objs.len()));
        for c in &objs {
            let names = self.gt.fd_labels(c).join(",");
            let qc = match cluster_tilted_parts(alg, &self.gt, c) {
                Ok(qc) => qc,
                Err(e) => return (Err(format!("{names}: {e}")), remark),
            };
            if let Some(&(i, j)) = qc.overlaps().first() {
                remark = Err(format!("{names}: arrow and relation from {} to {}", qc.labels[i], qc.labels[j]));
            }
            match verify_mutation_class(&qc.quiver, self.q) {
                Ok(true) => {}
                Ok(false) => return (Err(format!("{names}: not in the mutation class")), remark),
                Err(e) => return (Err(e.to_string()), remark),
            }
            match tilting_end(alg, &self.gt, c).and_then(|e| e.module_algebra()) {
                Ok(e) if e.gldim() <= 2 => {}
                Ok(_) => return (Err(format!("{names}: gldim End > 2")), remark),
                Err(e) => return (Err(e.to_string()), remark),
            }
        }
        (Ok(format!("{} cluster-tilted quivers", objs.len())), remark)
    }
}

/// A1, A2, or A3 with a sink or source in the middle.
fn small_quiver(q: &Quiver) -> bool {
    let n = q.n();
    let pairs: HashSet<(usize, usize)> = q.arrows.iter().copied().collect();
    let no_paths = (0..n).all(|v| q.arrows.iter().all(|&(s, _)| s != v) || q.arrows.iter().all(|&(_, t)| t != v));
    n <= 3 && q.arrows.len() + 1 == n && pairs.len() == q.arrows.len() && no_paths
}

pub fn verify_all(q: &Quiver, field: Field) -> Report {
    let skipped = |detail: String| Report {
        checks: LABELS
            .iter()
            .map(|&label| Check {
                label,
                status: Status::Skipped,
                detail: detail.clone(),
            })
            .collect(),
    };
    if let Err(e) = quiver::require_dynkin(q) {
        let reason = match e {
            Error::NonDynkin(r) => r,
            e => e.to_string(),
        };
        return skipped(format!("non-Dynkin: skipped ({reason})"));
    }
    match build_and_run(q, field) {
        Ok(r) => r,
        Err(e) => Report {
            checks: LABELS
                .iter()
                .map(|&label| Check {
                    label,
                    status: Status::Fail,
                    detail: e.to_string(),
                })
                .collect(),
        },
    }
}

fn build_and_run(q: &Quiver, field: Field) -> Result<Report> {
    let gamma = AlgebraInstance::gamma(q, field)?;
    let lambda = AlgebraInstance::lambda(q, field)?;
    let gar = ArQuiver::build(gamma.algebra())?;
    let lar = ArQuiver::build(lambda.algebra())?;
    let ctx = Ctx {
        q,
        gamma: &gamma,
        lambda: &lambda,
        gar: &gar,
        lar: &lar,
        gt: Tilting::new(&gamma, &gar)?,
        lt: Tilting::new(&lambda, &lar)?,
    };
    let (fin, remark) = ctx.final_theorem();
    let outcomes = [
        ctx.z(),
        ctx.y(),
        ctx.x(),
        ctx.thm_1_5(),
        ctx.w(),
        ctx.v(),
        ctx.t(),
        ctx.p1(),
        ctx.e(),
        ctx.cor_2_5(),
        ctx.juan(),
        ctx.thm_14(),
        ctx.complements(),
        ctx.ir2(),
        fin,
        remark,
    ];
    let checks = LABELS
        .iter()
        .zip(outcomes)
        .map(|(&label, o)| match o {
            Ok(detail) => Check {
                label,
                status: Status::Pass,
                detail,
            },
            Err(detail) => Check {
                label,
                status: Status::Fail,
                detail,
            },
        })
        .collect();
    Ok(Report { checks })
}
