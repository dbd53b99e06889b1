//! Finite acyclic quivers, Dynkin recognition and Fomin-Zelevinsky mutation.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the size of a mutation class before we give up.
pub const DEFAULT_CLASS_CAP: usize = 100_000;

/// A finite quiver with labelled vertices. Arrows are `(source, target)`
/// pairs of 0-based vertex indices; parallel arrows are repeated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub labels: Vec<String>,
    pub arrows: Vec<(usize, usize)>,
}

/// A path in an acyclic quiver, as a list of arrow indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub arrows: Vec<usize>,
}

impl Quiver {
    /// Quiver on vertices labelled `1..=n`.
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Self {
        Quiver {
            labels: (1..=n).map(|i| i.to_string()).collect(),
            arrows,
        }
    }

    pub fn with_labels(labels: Vec<String>, arrows: Vec<(usize, usize)>) -> Self {
        Quiver { labels, arrows }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            labels: self.labels.clone(),
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
        }
    }

    pub fn arrow_count(&self, s: usize, t: usize) -> usize {
        self.arrows.iter().filter(|&&a| a == (s, t)).count()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&v| self.arrows.iter().all(|&(s, _)| s != v))
            .collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&v| self.arrows.iter().all(|&(_, t)| t != v))
            .collect()
    }

    /// Vertices in an order where every arrow points forward, or `None` if
    /// the quiver has an oriented cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut indeg = vec![0usize; n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Connected components of the underlying graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                for &(s, t) in &self.arrows {
                    for (a, b) in [(s, t), (t, s)] {
                        if a == v && !seen[b] {
                            seen[b] = true;
                            comp.push(b);
                        }
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Full subquiver on `verts`, relabelled in the given order.
    pub fn restrict(&self, verts: &[usize]) -> Quiver {
        let pos = |v: usize| verts.iter().position(|&w| w == v);
        let arrows = self
            .arrows
            .iter()
            .filter_map(|&(s, t)| Some((pos(s)?, pos(t)?)))
            .collect();
        Quiver {
            labels: verts.iter().map(|&v| self.labels[v].clone()).collect(),
            arrows,
        }
    }

    /// All paths, trivial ones included, sorted by source, then length, then
    /// arrow sequence. Requires an acyclic quiver.
    pub fn paths(&self) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.n())
            .map(|v| Path {
                src: v,
                tgt: v,
                arrows: vec![],
            })
            .collect();
        let mut frontier = out.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for (a, &(s, t)) in self.arrows.iter().enumerate() {
                    if s == p.tgt {
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        next.push(Path {
                            src: p.src,
                            tgt: t,
                            arrows,
                        });
                    }
                }
            }
            assert!(next.len() < 1_000_000, "path explosion: is the quiver acyclic?");
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort_by(|a, b| {
            (a.src, a.arrows.len(), &a.arrows).cmp(&(b.src, b.arrows.len(), &b.arrows))
        });
        out
    }

    pub fn paths_between(&self, s: usize, t: usize) -> Vec<Path> {
        self.paths()
            .into_iter()
            .filter(|p| p.src == s && p.tgt == t)
            .collect()
    }

    /// Renders vertex labels, arrows as `src -> tgt`.
    pub fn describe(&self) -> String {
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| format!("{}->{}", self.labels[s], self.labels[t]))
            .join(", ");
        format!("vertices [{}]; arrows [{}]", self.labels.join(", "), arrows)
    }
}

#[derive(Deserialize, Serialize)]
struct QuiverJson {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

/// Parses either the line format
///
/// ```text
/// # comment
/// vertices 3
/// arrow 1 3
/// arrow 2 3
/// ```
///
/// or the JSON form `{"vertices": 3, "arrows": [[1,3],[2,3]]}`. Vertices are
/// 1-based in both. Loops and oriented cycles are rejected.
pub fn parse_quiver(text: &str) -> Result<Quiver> {
    let q = if text.trim_start().starts_with('{') {
        parse_json(text)?
    } else {
        parse_lines(text)?
    };
    if !q.is_acyclic() {
        return Err(Error::Parse {
            line: 0,
            msg: "quiver has an oriented cycle".into(),
        });
    }
    Ok(q)
}

fn parse_json(text: &str) -> Result<Quiver> {
    let j: QuiverJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let mut arrows = Vec::new();
    for &(s, t) in &j.arrows {
        arrows.push(check_arrow(j.vertices, s, t, 1)?);
    }
    Ok(Quiver::new(j.vertices, arrows))
}

fn check_arrow(n: usize, s: usize, t: usize, line: usize) -> Result<(usize, usize)> {
    if s == 0 || t == 0 || s > n || t > n {
        return Err(Error::Parse {
            line,
            msg: format!("arrow {s} -> {t} out of range 1..={n}"),
        });
    }
    if s == t {
        return Err(Error::Parse {
            line,
            msg: format!("loop at vertex {s}"),
        });
    }
    Ok((s - 1, t - 1))
}

fn parse_lines(text: &str) -> Result<Quiver> {
    let mut n: Option<usize> = None;
    let mut arrows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        let err = |msg: String| Error::Parse { line, msg };
        let num = |w: &str| {
            w.parse::<usize>()
                .map_err(|_| err(format!("expected a number, found `{w}`")))
        };
        match words.as_slice() {
            ["vertices", k] => {
                if n.is_some() {
                    return Err(err("duplicate `vertices` line".into()));
                }
                n = Some(num(k)?);
            }
            ["arrow", s, t] => {
                let Some(n) = n else {
                    return Err(err("`arrow` before `vertices`".into()));
                };
                arrows.push(check_arrow(n, num(s)?, num(t)?, line)?);
            }
            _ => return Err(err(format!("cannot parse `{content}`"))),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing `vertices` line".into(),
    })?;
    Ok(Quiver::new(n, arrows))
}

/// Simply-laced Dynkin types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    /// Number of positive roots, which is the number of indecomposable
    /// representations by Gabriel's theorem.
    pub fn positive_roots(self) -> usize {
        match self {
            DynkinType::A(n) => n * (n + 1) / 2,
            DynkinType::D(n) => n * (n - 1),
            DynkinType::E(6) => 36,
            DynkinType::E(7) => 63,
            DynkinType::E(8) => 120,
            DynkinType::E(_) => unreachable!(),
        }
    }

    /// Number of clusters of the cluster algebra of this type.
    pub fn cluster_number(self) -> u64 {
        let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
        match self {
            DynkinType::A(n) => {
                let n = n as u64;
                binom(2 * n + 2, n + 1) / (n + 2)
            }
            DynkinType::D(n) => {
                let n = n as u64;
                (3 * n - 2) * binom(2 * n - 2, n - 1) / n
            }
            DynkinType::E(6) => 833,
            DynkinType::E(7) => 4160,
            DynkinType::E(8) => 25080,
            DynkinType::E(_) => unreachable!(),
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

/// Dynkin type of a connected quiver.
pub fn dynkin_type(q: &Quiver) -> Result<DynkinType> {
    let comps = q.components();
    if comps.len() != 1 {
        let parts = comps
            .iter()
            .map(|c| match dynkin_type(&q.restrict(c)) {
                Ok(t) => t.to_string(),
                Err(_) => "non-Dynkin".into(),
            })
            .join(", ");
        return Err(Error::NonDynkin(format!("disconnected quiver with components [{parts}]")));
    }
    component_type(q)
}

/// Dynkin type of each connected component, in order of smallest vertex.
pub fn component_types(q: &Quiver) -> Vec<Result<DynkinType>> {
    q.components()
        .iter()
        .map(|c| component_type(&q.restrict(c)))
        .collect()
}

/// Ok when every component is Dynkin.
pub fn require_dynkin(q: &Quiver) -> Result<()> {
    for t in component_types(q) {
        t?;
    }
    Ok(())
}

fn component_type(q: &Quiver) -> Result<DynkinType> {
    let n = q.n();
    let mut edges = BTreeSet::new();
    for &(s, t) in &q.arrows {
        if !edges.insert((s.min(t), s.max(t))) {
            return Err(Error::NonDynkin("multiple edges".into()));
        }
    }
    if edges.len() + 1 != n {
        return Err(Error::NonDynkin("underlying graph has a cycle".into()));
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    if branch.is_empty() {
        return Ok(DynkinType::A(n));
    }
    if branch.len() > 1 || adj[branch[0]].len() > 3 {
        return Err(Error::NonDynkin("tree is not of type A, D or E".into()));
    }
    let c = branch[0];
    let mut arms: Vec<usize> = adj[c]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (c, start, 1);
            while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => Ok(DynkinType::D(n)),
        [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Ok(DynkinType::E(n)),
        _ => Err(Error::NonDynkin(format!("star with arms {arms:?}"))),
    }
}

/// Skew-symmetric exchange matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExchangeMatrix {
    pub n: usize,
    pub b: Vec<i64>,
}

impl ExchangeMatrix {
    /// `b[i][j]` is the number of arrows `i -> j` minus the number `j -> i`.
    pub fn from_quiver(q: &Quiver) -> Self {
        let n = q.n();
        let mut b = vec![0i64; n * n];
        for &(s, t) in &q.arrows {
            b[s * n + t] += 1;
            b[t * n + s] -= 1;
        }
        ExchangeMatrix { n, b }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i * self.n + j]
    }

    pub fn to_quiver(&self) -> Quiver {
        let mut arrows = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                for _ in 0..self.get(i, j).max(0) {
                    arrows.push((i, j));
                }
            }
        }
        Quiver::new(self.n, arrows)
    }

    /// Fomin-Zelevinsky mutation at `k`.
    pub fn mutate(&self, k: usize) -> Self {
        let n = self.n;
        let mut b = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let bij = self.get(i, j);
                b[i * n + j] = if i == k || j == k {
                    -bij
                } else {
                    let (bik, bkj) = (self.get(i, k), self.get(k, j));
                    bij + (bik.abs() * bkj + bik * bkj.abs()) / 2
                };
            }
        }
        ExchangeMatrix { n, b }
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut b = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                b[i * n + j] = self.get(perm[i], perm[j]);
            }
        }
        ExchangeMatrix { n, b }
    }

    /// Lexicographically smallest matrix over all vertex relabellings.
    pub fn canonical(&self) -> Self {
        (0..self.n)
            .permutations(self.n)
            .map(|p| self.permuted(&p))
            .min()
            .unwrap_or_else(|| self.clone())
    }
}

/// Mutation class of `q` up to isomorphism, as sorted canonical exchange
/// matrices. The class size is capped by `FD_CLUSTER_MAX_CLASS`.
pub fn mutation_class(q: &Quiver) -> Result<Vec<ExchangeMatrix>> {
    let cap = std::env::var("FD_CLUSTER_MAX_CLASS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_CLASS_CAP);
    mutation_class_capped(q, cap)
}

pub fn mutation_class_capped(q: &Quiver, cap: usize) -> Result<Vec<ExchangeMatrix>> {
    let start = ExchangeMatrix::from_quiver(q).canonical();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(b) = queue.pop_front() {
        for k in 0..b.n {
            let m = b.mutate(k).canonical();
            if seen.insert(m.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClassCap(cap));
                }
                queue.push_back(m);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

pub fn mutate(q: &Quiver, k: usize) -> Quiver {
    let mut out = ExchangeMatrix::from_quiver(q).mutate(k).to_quiver();
    out.labels = q.labels.clone();
    out
}

/// Graphviz rendering. Parallel arrows are drawn separately.
pub fn to_dot(q: &Quiver) -> String {
    let mut s = String::from("digraph Q {\n");
    for l in &q.labels {
        s.push_str(&format!("  \"{l}\";\n"));
    }
    for &(a, b) in &q.arrows {
        s.push_str(&format!("  \"{}\" -> \"{}\";\n", q.labels[a], q.labels[b]));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format_round_trip() {
        let q = parse_quiver("# Y shape\nvertices 3\narrow 1 3\narrow 2 3\n").unwrap();
        assert_eq!(q.arrows, vec![(0, 2), (1, 2)]);
        assert_eq!(q.sinks(), vec![2]);
    }

    #[test]
    fn parse_error_carries_line_number() {
        match parse_quiver("vertices 2\n\narrow 1 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn json_format() {
        let q = parse_quiver(r#"{"vertices":2,"arrows":[[1,2]]}"#).unwrap();
        assert_eq!(q.arrows, vec![(0, 1)]);
    }

    #[test]
    fn kronecker_is_not_dynkin() {
        let q = Quiver::new(2, vec![(0, 1), (0, 1)]);
        assert!(matches!(dynkin_type(&q), Err(Error::NonDynkin(_))));
    }

    #[test]
    fn e6_from_star() {
        let q = Quiver::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]);
        assert_eq!(dynkin_type(&q).unwrap(), DynkinType::E(6));
    }
}
