use clusterdomain::exactlin::{Field, Mat};
use clusterdomain::hmod::PathAlgebra;
use clusterdomain::quiver::{parse_quiver, Quiver};
use clusterdomain::Rep;
use proptest::prelude::*;

fn fixtures() -> Vec<Quiver> {
    vec![
        Quiver::new(1, vec![]),
        Quiver::new(2, vec![(0, 1)]),
        Quiver::new(3, vec![(0, 1), (1, 2)]),
        Quiver::new(3, vec![(0, 2), (1, 2)]),
        Quiver::new(3, vec![(1, 0), (1, 2)]),
        Quiver::new(4, vec![(0, 1), (1, 3), (2, 3)]),
        Quiver::new(4, vec![(0, 3), (1, 3), (2, 3)]),
    ]
}

/// Cartan matrix `c[j][i]` = number of paths `i ~> j`, counted by a
/// depth-first walk independent of the library's path enumeration.
fn cartan(q: &Quiver) -> Vec<Vec<i64>> {
    fn walk(q: &Quiver, v: usize, row: &mut Vec<i64>) {
        row[v] += 1;
        for &(s, t) in &q.arrows {
            if s == v {
                walk(q, t, row);
            }
        }
    }
    let n = q.n();
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        let mut reach = vec![0; n];
        walk(q, i, &mut reach);
        for j in 0..n {
            c[j][i] = reach[j];
        }
    }
    c
}

/// Coxeter transformation `-C^T C^{-1}` on dimension vectors, by forward
/// substitution along a topological order.
fn coxeter(q: &Quiver, d: &[i64]) -> Vec<i64> {
    let c = cartan(q);
    let order = q.topological_order().unwrap();
    let n = q.n();
    let mut y = vec![0i64; n];
    for (pos, &j) in order.iter().enumerate() {
        let mut v = d[j];
        for &i in &order[..pos] {
            v -= c[j][i] * y[i];
        }
        y[j] = v;
    }
    (0..n).map(|i| -(0..n).map(|j| c[j][i] * y[j]).sum::<i64>()).collect()
}

fn euler(q: &Quiver, m: &[usize], n: &[usize]) -> i64 {
    let mut s: i64 = m.iter().zip(n).map(|(a, b)| (*a * *b) as i64).sum();
    for &(a, b) in &q.arrows {
        s -= (m[a] * n[b]) as i64;
    }
    s
}

fn dims_i64(m: &Rep) -> Vec<i64> {
    m.dims.iter().map(|&d| d as i64).collect()
}

#[test]
fn indecomposable_counts_match_positive_roots() {
    let expect = [1, 3, 6, 6, 6, 10, 12];
    for (q, e) in fixtures().iter().zip(expect) {
        let h = PathAlgebra::new(q, Field::default()).unwrap();
        assert_eq!(h.indecomposables().unwrap().len(), e, "{}", q.describe());
    }
}

#[test]
fn projectives_and_injectives_count_paths() {
    for q in fixtures() {
        let h = PathAlgebra::new(&q, Field::default()).unwrap();
        let c = cartan(&q);
        for i in 0..q.n() {
            let p: Vec<i64> = (0..q.n()).map(|j| c[j][i]).collect();
            let inj: Vec<i64> = (0..q.n()).map(|j| c[i][j]).collect();
            assert_eq!(dims_i64(&h.projective(i)), p);
            assert_eq!(dims_i64(&h.injective(i)), inj);
        }
    }
}

#[test]
fn tau_acts_by_the_coxeter_matrix() {
    for q in fixtures() {
        let h = PathAlgebra::new(&q, Field::default()).unwrap();
        let alg = h.algebra();
        for m in h.indecomposables().unwrap() {
            if alg.is_projective(&m) {
                assert!(h.tau(&m).is_zero());
                continue;
            }
            let t = h.tau(&m);
            assert_eq!(dims_i64(&t), coxeter(&q, &dims_i64(&m)), "{}", q.describe());
            assert!(alg.is_indecomposable(&t));
            assert!(alg.iso_directed(&h.tau_inv(&t), &m));
        }
    }
}

#[test]
fn hom_minus_ext_is_the_euler_form() {
    for q in fixtures() {
        let h = PathAlgebra::new(&q, Field::default()).unwrap();
        let ind = h.indecomposables().unwrap();
        for m in &ind {
            for n in &ind {
                let lhs = h.hom_dim(m, n) as i64 - h.ext1_dim(m, n) as i64;
                assert_eq!(lhs, euler(&q, &m.dims, &n.dims));
                // Auslander-Reiten formula Ext^1(M, N) = D Hom(N, tau M)
                assert_eq!(h.ext1_dim(m, n), h.hom_dim(n, &h.tau(m)));
            }
        }
    }
}

#[test]
fn nakayama_sends_projectives_to_injectives() {
    let q = parse_quiver("vertices 3\narrow 1 3\narrow 2 3\n").unwrap();
    let h = PathAlgebra::new(&q, Field::default()).unwrap();
    for i in 0..3 {
        let nu = h.nakayama(&h.projective(i));
        assert!(h.algebra().iso_directed(&nu, &h.injective(i)));
        assert!(h.algebra().is_injective(&nu));
    }
}

#[test]
fn a2_example_modules() {
    let q = Quiver::new(2, vec![(0, 1)]);
    let h = PathAlgebra::new(&q, Field::default()).unwrap();
    assert_eq!(h.projective(0).dims, vec![1, 1]);
    assert_eq!(h.injective(1).dims, vec![1, 1]);
    assert_eq!(h.hom_dim(&h.simple(1), &h.projective(0)), 1);
    assert_eq!(h.ext1_dim(&h.simple(0), &h.simple(1)), 1);
    assert!(h.tau(&h.simple(0)).dims == vec![0, 1]);
}

#[test]
fn kronecker_indecomposables_are_refused() {
    let q = Quiver::new(2, vec![(0, 1), (0, 1)]);
    let h = PathAlgebra::new(&q, Field::default()).unwrap();
    assert!(h.indecomposables().is_err());
}

fn random_rep(q: &Quiver, f: Field, dims: &[usize], seed: &[i64]) -> Rep {
    let mut k = 0;
    let mats = q
        .arrows
        .iter()
        .map(|&(s, t)| {
            let mut m = Mat::zeros(f, dims[t], dims[s]);
            for r in 0..dims[t] {
                for c in 0..dims[s] {
                    m.set(r, c, f.from_i64(seed[k % seed.len()]));
                    k += 1;
                }
            }
            m
        })
        .collect();
    Rep { dims: dims.to_vec(), mats }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_form_on_random_representations(
        dm in prop::collection::vec(0usize..3, 3),
        dn in prop::collection::vec(0usize..3, 3),
        sm in prop::collection::vec(-2i64..3, 1..12),
        sn in prop::collection::vec(-2i64..3, 1..12),
        shape in 0usize..3,
    ) {
        let q = [
            Quiver::new(3, vec![(0, 1), (1, 2)]),
            Quiver::new(3, vec![(0, 2), (1, 2)]),
            Quiver::new(3, vec![(1, 0), (1, 2)]),
        ][shape].clone();
        let f = Field::new(5).unwrap();
        let h = PathAlgebra::new(&q, f).unwrap();
        let m = random_rep(&q, f, &dm, &sm);
        let n = random_rep(&q, f, &dn, &sn);
        let lhs = h.hom_dim(&m, &n) as i64 - h.ext1_dim(&m, &n) as i64;
        prop_assert_eq!(lhs, euler(&q, &dm, &dn));
        for b in h.hom_basis(&m, &n) {
            prop_assert!(h.algebra().is_morphism(&m, &n, &b));
        }
    }
}
