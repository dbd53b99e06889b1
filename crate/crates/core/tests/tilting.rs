use std::collections::{BTreeSet, HashSet, VecDeque};

use clusterdomain::artheory::{ArQuiver, FdTag};
use clusterdomain::exactlin::Field;
use clusterdomain::quiver::Quiver;
use clusterdomain::tilting::{gamma_correspondence, lambda_correspondence, ClusterTiltObj, Tilting, TiltingSet};
use clusterdomain::triplecat::AlgebraInstance;
use clusterdomain::{Algebra, PathAlgebra, Rep};
use itertools::Itertools;

fn a1() -> Quiver {
    Quiver::new(1, vec![])
}

fn a2() -> Quiver {
    Quiver::new(2, vec![(0, 1)])
}

fn a3s() -> Vec<Quiver> {
    vec![
        Quiver::new(3, vec![(0, 1), (1, 2)]),
        Quiver::new(3, vec![(0, 2), (1, 2)]),
        Quiver::new(3, vec![(2, 0), (2, 1)]),
        Quiver::new(3, vec![(1, 0), (1, 2)]),
    ]
}

fn y3() -> Quiver {
    Quiver::new(3, vec![(0, 2), (1, 2)])
}

fn catalan(n: usize) -> usize {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// `Ext^1(M, N) = D Hom(N, tau M)` when pd M <= 1.
fn ext1_ar(alg: &Algebra, m: &Rep, n: &Rep) -> usize {
    alg.hom_dim(n, &alg.tau(m))
}

/// Tilting modules by checking every subset of the right size.
fn exhaustive_tilting(alg: &Algebra, ar: &ArQuiver, rank: usize) -> Vec<Vec<usize>> {
    let small: Vec<usize> = (0..ar.len()).filter(|&i| ar.pd[i] <= 1).collect();
    let mut out: Vec<Vec<usize>> = small
        .iter()
        .copied()
        .combinations(rank)
        .filter(|s| {
            s.iter()
                .all(|&a| s.iter().all(|&b| ext1_ar(alg, &ar.nodes[a], &ar.nodes[b]) == 0))
        })
        .collect();
    out.sort();
    out
}

/// Compatibility of objects of the cluster category described through H:
/// modules `M` and shifted projectives `P_i[1]`.
struct Derived {
    h: PathAlgebra,
    ind: Vec<Rep>,
}

impl Derived {
    fn new(q: &Quiver) -> Self {
        let h = PathAlgebra::new(q, Field::default()).unwrap();
        let ind = h.indecomposables().unwrap();
        Derived { h, ind }
    }

    fn ext(&self, m: &Rep, n: &Rep) -> usize {
        self.h.hom_dim(n, &self.h.tau(m))
    }

    fn compatible(&self, a: FdTag, b: FdTag) -> bool {
        match (a, b) {
            (FdTag::Module(x), FdTag::Module(y)) => {
                self.ext(&self.ind[x], &self.ind[y]) == 0 && self.ext(&self.ind[y], &self.ind[x]) == 0
            }
            (FdTag::Module(x), FdTag::Shift(i)) | (FdTag::Shift(i), FdTag::Module(x)) => self.ind[x].dims[i] == 0,
            (FdTag::Shift(_), FdTag::Shift(_)) => true,
        }
    }

    fn objects(&self) -> Vec<FdTag> {
        let mut v: Vec<FdTag> = (0..self.ind.len()).map(FdTag::Module).collect();
        v.extend((0..self.h.n()).map(FdTag::Shift));
        v
    }

    fn clusters(&self) -> Vec<BTreeSet<FdTag>> {
        let objs = self.objects();
        objs.iter()
            .copied()
            .combinations(self.h.n())
            .filter(|s| s.iter().tuple_combinations().all(|(&a, &b)| self.compatible(a, b)))
            .map(|s| s.into_iter().collect())
            .collect()
    }

    /// Clusters reachable from `H` by exchanging one summand at a time.
    fn mutation_graph_size(&self) -> usize {
        let start: BTreeSet<FdTag> = (0..self.h.n())
            .map(|i| {
                let p = self.h.projective(i);
                FdTag::Module(self.ind.iter().position(|m| m.dims == p.dims).unwrap())
            })
            .collect();
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        let objs = self.objects();
        while let Some(c) = queue.pop_front() {
            for &drop in &c {
                let rest: Vec<FdTag> = c.iter().copied().filter(|&t| t != drop).collect();
                for &x in &objs {
                    if c.contains(&x) || !rest.iter().all(|&r| self.compatible(r, x)) {
                        continue;
                    }
                    let mut next: BTreeSet<FdTag> = rest.iter().copied().collect();
                    next.insert(x);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        seen.len()
    }
}

fn gamma(q: &Quiver) -> (AlgebraInstance, ArQuiver) {
    let g = AlgebraInstance::gamma(q, Field::default()).unwrap();
    let ar = ArQuiver::build(g.algebra()).unwrap();
    (g, ar)
}

fn lambda(q: &Quiver) -> (AlgebraInstance, ArQuiver) {
    let l = AlgebraInstance::lambda(q, Field::default()).unwrap();
    let ar = ArQuiver::build(l.algebra()).unwrap();
    (l, ar)
}

fn as_tags(t: &Tilting, c: &ClusterTiltObj) -> BTreeSet<FdTag> {
    c.summands.iter().map(|&k| t.fundamental_domain()[k].tag).collect()
}

#[test]
fn catalan_numbers() {
    assert_eq!((1..=4).map(catalan).collect::<Vec<_>>(), vec![1, 2, 5, 14]);
}

#[test]
fn tilting_counts_match_exhaustive_oracle() {
    let mut qs = vec![a1(), a2()];
    qs.extend(a3s());
    for q in qs {
        let (g, ar) = gamma(&q);
        let t = Tilting::new(&g, &ar).unwrap();
        let found: Vec<Vec<usize>> = t.tilting_modules().into_iter().map(|s| s.summands).collect();
        assert_eq!(found, exhaustive_tilting(g.algebra(), &ar, g.rank()));
        assert_eq!(found.len(), catalan(q.n() + 1));
    }
}

#[test]
fn cluster_tilting_objects_match_derived_oracle() {
    let mut qs = vec![a1(), a2()];
    qs.extend(a3s());
    for q in qs {
        let (g, ar) = gamma(&q);
        let t = Tilting::new(&g, &ar).unwrap();
        let mut ours: Vec<BTreeSet<FdTag>> =
            t.cluster_tilting_objects().unwrap().iter().map(|c| as_tags(&t, c)).collect();
        let d = Derived::new(&q);
        let mut theirs = d.clusters();
        ours.sort();
        theirs.sort();
        assert_eq!(ours, theirs);
        assert_eq!(d.mutation_graph_size(), catalan(q.n() + 1));
    }
}

#[test]
fn theta_round_trip() {
    for q in a3s() {
        let (g, ar) = gamma(&q);
        let t = Tilting::new(&g, &ar).unwrap();
        let tilts = t.tilting_modules();
        for s in &tilts {
            for d in t.delta() {
                assert!(s.summands.contains(d));
            }
            assert_eq!(&t.theta(&t.theta_inv(s).unwrap()), s);
        }
        let images: HashSet<TiltingSet> = t
            .cluster_tilting_objects()
            .unwrap()
            .iter()
            .map(|c| t.theta(c))
            .collect();
        assert_eq!(images.len(), tilts.len());
    }
}

#[test]
fn theta_examples() {
    let (g, ar) = gamma(&y3());
    let t = Tilting::new(&g, &ar).unwrap();
    let c = t.parse_object(&["2/3", "2", "3'/2"]).unwrap();
    let s = t.theta(&c);
    assert!(t.is_tilting(&s.summands));
    let mut labels = t.labels(&s.summands);
    labels.sort();
    assert_eq!(labels, vec!["2", "2/3", "3'/12/3", "3'/2"]);
    let missing = TiltingSet {
        summands: c.summands.iter().map(|&k| t.fundamental_domain()[k].node).collect(),
    };
    assert!(t.theta_inv(&missing).is_err());

    let (g, ar) = gamma(&a1());
    let t = Tilting::new(&g, &ar).unwrap();
    let shift = t
        .fundamental_domain()
        .iter()
        .position(|o| o.tag == FdTag::Shift(0))
        .unwrap();
    let s = t.theta(&ClusterTiltObj { summands: vec![shift] });
    assert_eq!(s.summands.len(), 2);
    assert!(t.is_tilting(&s.summands));
}

#[test]
fn two_complements() {
    let mut qs = vec![a1(), a2()];
    qs.extend(a3s());
    for q in qs {
        let (g, ar) = gamma(&q);
        let t = Tilting::new(&g, &ar).unwrap();
        let mut almost: BTreeSet<Vec<usize>> = BTreeSet::new();
        for c in t.cluster_tilting_objects().unwrap() {
            for drop in 0..c.summands.len() {
                let mut a = c.summands.clone();
                a.remove(drop);
                almost.insert(a);
            }
        }
        for a in &almost {
            assert_eq!(t.complements(a).unwrap().len(), 2, "{:?}", t.labels(a));
        }
    }
}

#[test]
fn complements_in_a2() {
    let (g, ar) = gamma(&a2());
    let t = Tilting::new(&g, &ar).unwrap();
    let a = t.parse_object(&["2"]).unwrap();
    let comps = t.complements(&a.summands).unwrap();
    let mut labels: Vec<String> = comps
        .iter()
        .map(|&k| ar.labels[t.fundamental_domain()[k].node].clone())
        .collect();
    labels.sort();
    assert_eq!(labels, vec!["1/2", "2'"]);
    assert!(t.complements(&[]).is_err());
}

#[test]
fn lambda_tilting_modules_correspond() {
    for q in [a1(), a2(), y3()] {
        let (g, gar) = gamma(&q);
        let (l, lar) = lambda(&q);
        let gt = Tilting::new(&g, &gar).unwrap();
        let lt = Tilting::new(&l, &lar).unwrap();
        let gmods = gt.tilting_modules();
        let lmods = lt.tilting_modules();
        assert_eq!(gmods.len(), lmods.len());
        let lo: Vec<Vec<usize>> = exhaustive_tilting(l.algebra(), &lar, l.rank());
        assert_eq!(lo, lmods.iter().map(|s| s.summands.clone()).collect::<Vec<_>>());
        let mut images = vec![];
        for s in &gmods {
            let u = lambda_correspondence(&gt, &lt, s).unwrap();
            assert!(lt.is_tilting(&u.summands));
            assert_eq!(u.summands.len() - s.summands.len(), l.rank() - g.rank());
            assert_eq!(&gamma_correspondence(&gt, &lt, &u).unwrap(), s);
            images.push(u);
        }
        images.sort();
        assert_eq!(images, lmods);
    }
}
