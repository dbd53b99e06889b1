//! Tilting modules of projective dimension at most one and cluster-tilting
//! objects of the cluster category, related by adding the
//! projective-injectives `I_0(Delta)`.

use serde::Serialize;

use crate::artheory::{fundamental_domain, i0_soc_h, ArQuiver, FdObject};
use crate::error::{Error, Result};
use crate::triplecat::AlgebraInstance;

/// A basic tilting module: sorted node indices into an [`ArQuiver`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TiltingSet {
    pub summands: Vec<usize>,
}

/// A basic cluster-tilting object: sorted indices into the fundamental domain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ClusterTiltObj {
    pub summands: Vec<usize>,
}

/// Ext-compatibility data over one instance.
pub struct Tilting<'a> {
    inst: &'a AlgebraInstance,
    ar: &'a ArQuiver,
    fd: Vec<FdObject>,
    /// Nodes of `I_0(Delta)`.
    delta: Vec<usize>,
    /// `compat[a][b]`: both have pd <= 1 and Ext^1 vanishes both ways.
    compat: Vec<Vec<bool>>,
    candidates: Vec<usize>,
}

impl<'a> Tilting<'a> {
    pub fn new(inst: &'a AlgebraInstance, ar: &'a ArQuiver) -> Result<Self> {
        let alg = inst.algebra();
        let fd = fundamental_domain(inst, ar)?;
        let delta = i0_soc_h(inst, ar);
        let candidates: Vec<usize> = (0..ar.len()).filter(|&i| ar.pd[i] <= 1).collect();
        let n = ar.len();
        let mut ext = vec![vec![usize::MAX; n]; n];
        for &a in &candidates {
            for &b in &candidates {
                ext[a][b] = alg.ext_dim(&ar.nodes[a], &ar.nodes[b], 1);
            }
        }
        let mut compat = vec![vec![false; n]; n];
        for &a in &candidates {
            for &b in &candidates {
                compat[a][b] = ext[a][b] == 0 && ext[b][a] == 0;
            }
        }
        Ok(Tilting {
            inst,
            ar,
            fd,
            delta,
            compat,
            candidates,
        })
    }

    pub fn ar(&self) -> &ArQuiver {
        self.ar
    }

    pub fn fundamental_domain(&self) -> &[FdObject] {
        &self.fd
    }

    pub fn delta(&self) -> &[usize] {
        &self.delta
    }

    /// Number of summands of a basic tilting module.
    pub fn rank(&self) -> usize {
        self.inst.rank()
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        self.compat[a][b]
    }

    pub fn is_tilting(&self, nodes: &[usize]) -> bool {
        let mut s = nodes.to_vec();
        s.sort_unstable();
        s.dedup();
        s.len() == nodes.len()
            && s.len() == self.rank()
            && s.iter().all(|&a| s.iter().all(|&b| self.compat[a][b]))
    }

    /// Every basic tilting module, sorted.
    pub fn tilting_modules(&self) -> Vec<TiltingSet> {
        let rigid: Vec<usize> = self
            .candidates
            .iter()
            .copied()
            .filter(|&a| self.compat[a][a])
            .collect();
        let mut out = vec![];
        self.bron_kerbosch(vec![], rigid, vec![], &mut out);
        let mut out: Vec<TiltingSet> = out
            .into_iter()
            .filter(|c| c.len() == self.rank())
            .map(|mut summands| {
                summands.sort_unstable();
                TiltingSet { summands }
            })
            .collect();
        out.sort();
        out
    }

    fn bron_kerbosch(&self, r: Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let adj = |a: usize, b: usize| a != b && self.compat[a][b];
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| adj(u, v)).count())
            .expect("p or x nonempty");
        let mut p = p;
        let mut x = x;
        let branch: Vec<usize> = p.iter().copied().filter(|&v| !adj(pivot, v)).collect();
        for v in branch {
            let mut r2 = r.clone();
            r2.push(v);
            let p2 = p.iter().copied().filter(|&w| adj(v, w)).collect();
            let x2 = x.iter().copied().filter(|&w| adj(v, w)).collect();
            self.bron_kerbosch(r2, p2, x2, out);
            p.retain(|&w| w != v);
            x.push(v);
        }
    }

    /// `T` plus `I_0(Delta)`.
    pub fn theta(&self, t: &ClusterTiltObj) -> TiltingSet {
        let mut summands: Vec<usize> = t.summands.iter().map(|&k| self.fd[k].node).collect();
        summands.extend(&self.delta);
        summands.sort_unstable();
        summands.dedup();
        TiltingSet { summands }
    }

    /// Strips the `I_0(Delta)` summands; every further summand must lie in
    /// the fundamental domain.
    pub fn theta_inv(&self, s: &TiltingSet) -> Result<ClusterTiltObj> {
        if let Some(d) = self.delta.iter().find(|d| !s.summands.contains(d)) {
            return Err(Error::Inconsistent(format!(
                "tilting module lacks the projective-injective {}",
                self.ar.labels[*d]
            )));
        }
        let mut summands = vec![];
        for &node in s.summands.iter().filter(|i| !self.delta.contains(i)) {
            let k = self.fd.iter().position(|o| o.node == node).ok_or_else(|| {
                Error::Inconsistent(format!("{} is outside the fundamental domain", self.ar.labels[node]))
            })?;
            summands.push(k);
        }
        summands.sort_unstable();
        Ok(ClusterTiltObj { summands })
    }

    pub fn cluster_tilting_objects(&self) -> Result<Vec<ClusterTiltObj>> {
        let mut out = self
            .tilting_modules()
            .iter()
            .map(|s| self.theta_inv(s))
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        Ok(out)
    }

    /// Fundamental-domain objects completing `almost` to a cluster-tilting object.
    pub fn complements(&self, almost: &[usize]) -> Result<Vec<usize>> {
        let n = self.inst.h().n();
        if almost.len() + 1 != n {
            return Err(Error::Invalid(format!(
                "an almost complete object has {} summands, got {}",
                n - 1,
                almost.len()
            )));
        }
        let out: Vec<usize> = (0..self.fd.len())
            .filter(|k| !almost.contains(k))
            .filter(|&k| {
                let mut summands = almost.to_vec();
                summands.push(k);
                self.is_tilting(&self.theta(&ClusterTiltObj { summands }).summands)
            })
            .collect();
        if out.is_empty() {
            return Err(Error::Invalid("object does not extend to a cluster-tilting object".into()));
        }
        Ok(out)
    }

    pub fn labels(&self, nodes: &[usize]) -> Vec<String> {
        nodes.iter().map(|&i| self.ar.labels[i].clone()).collect()
    }

    pub fn fd_labels(&self, t: &ClusterTiltObj) -> Vec<String> {
        t.summands.iter().map(|&k| self.ar.labels[self.fd[k].node].clone()).collect()
    }

    /// Fundamental-domain indices of the given node labels.
    pub fn parse_object(&self, labels: &[&str]) -> Result<ClusterTiltObj> {
        let mut summands = vec![];
        for l in labels {
            let node = self
                .ar
                .by_label(l.trim())
                .ok_or_else(|| Error::Invalid(format!("no indecomposable labelled {l}")))?;
            let k = self
                .fd
                .iter()
                .position(|o| o.node == node)
                .ok_or_else(|| Error::Invalid(format!("{l} is not in the fundamental domain")))?;
            summands.push(k);
        }
        summands.sort_unstable();
        summands.dedup();
        Ok(ClusterTiltObj { summands })
    }
}

/// Projective-injective Lambda-modules outside `add I_0(Delta)`.
fn lambda_extra(lam: &Tilting) -> Vec<usize> {
    lam.ar
        .proj_inj()
        .into_iter()
        .filter(|i| !lam.delta.contains(i))
        .collect()
}

/// A tilting Gamma-module regarded over Lambda, plus the projective-injective
/// Lambda-modules that Gamma does not see.
pub fn lambda_correspondence(gam: &Tilting, lam: &Tilting, s: &TiltingSet) -> Result<TiltingSet> {
    let mut summands = vec![];
    for &i in &s.summands {
        let t = gam.inst.from_module(gam.ar.nodes[i].clone())?;
        let u = gam.inst.transfer(&t, lam.inst)?;
        summands.push(
            lam.ar
                .find(lam.inst.algebra(), &u.module)
                .ok_or_else(|| Error::Inconsistent("Gamma-module not found over Lambda".into()))?,
        );
    }
    summands.extend(lambda_extra(lam));
    summands.sort_unstable();
    summands.dedup();
    Ok(TiltingSet { summands })
}

/// Inverse of [`lambda_correspondence`].
pub fn gamma_correspondence(gam: &Tilting, lam: &Tilting, s: &TiltingSet) -> Result<TiltingSet> {
    let extra = lambda_extra(lam);
    let mut summands = vec![];
    for &i in s.summands.iter().filter(|i| !extra.contains(i)) {
        let t = lam.inst.from_module(lam.ar.nodes[i].clone())?;
        let u = lam.inst.transfer(&t, gam.inst)?;
        summands.push(
            gam.ar
                .find(gam.inst.algebra(), &u.module)
                .ok_or_else(|| Error::Inconsistent("Lambda-module not found over Gamma".into()))?,
        );
    }
    summands.sort_unstable();
    Ok(TiltingSet { summands })
}
