use clusterdomain::exactlin::{quotient_dim, Field, Mat};
use proptest::prelude::*;

fn small() -> Field {
    Field::new(7).unwrap()
}

fn mat_strategy(max: usize) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..4, r * c)))
}

fn build(f: Field, r: usize, c: usize, v: &[i64]) -> Mat {
    let rows: Vec<Vec<i64>> = v.chunks(c).map(|x| x.to_vec()).collect();
    let _ = r;
    Mat::from_rows(f, &rows)
}

proptest! {
    #[test]
    fn rank_plus_nullity((r, c, v) in mat_strategy(6)) {
        for f in [small(), Field::default()] {
            let m = build(f, r, c, &v);
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.cols, c);
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols);
        }
    }

    #[test]
    fn solve_returns_a_solution((r, c, v) in mat_strategy(5), x in prop::collection::vec(-3i64..4, 5)) {
        let f = Field::default();
        let m = build(f, r, c, &v);
        let x: Vec<u32> = x[..c].iter().map(|&t| f.from_i64(t)).collect();
        let b = m.mul_vec(&x);
        let y = m.solve(&b).expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn rank_is_transpose_invariant((r, c, v) in mat_strategy(6)) {
        let m = build(small(), r, c, &v);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn quotient_dim_of_a_subspace_is_zero((r, c, v) in mat_strategy(5)) {
        let f = small();
        let m = build(f, r, c, &v);
        prop_assert_eq!(quotient_dim(&m, &m.select_columns(&[0])), 0);
        let full = Mat::identity(f, r);
        prop_assert_eq!(quotient_dim(&m, &full), r - m.rank());
    }

    #[test]
    fn inverse_when_full_rank((r, c, v) in mat_strategy(4)) {
        let f = Field::default();
        let m = build(f, r, c, &v);
        if r == c && m.rank() == r {
            let inv = m.inverse().unwrap();
            prop_assert_eq!(m.mul(&inv), Mat::identity(f, r));
        }
    }
}

#[test]
fn arithmetic_mod_p() {
    let f = Field::new(32003).unwrap();
    assert_eq!(f.mul(f.inv(12345), 12345), 1);
    assert_eq!(f.from_i64(-1), 32002);
    assert_eq!(f.to_i64(32002), -1);
}

#[test]
fn kernel_basis_is_rref_derived() {
    let f = Field::default();
    let m = Mat::from_rows(f, &[vec![1, 2, 3]]);
    let k = m.kernel_basis();
    assert_eq!(k.column(0), vec![f.from_i64(-2), 1, 0]);
    assert_eq!(k.column(1), vec![f.from_i64(-3), 0, 1]);
}
