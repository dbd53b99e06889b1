use clusterdomain::ctquiver::{cluster_tilted_quiver, verify_mutation_class};
use clusterdomain::quiver::{dynkin_type, mutation_class, DynkinType, ExchangeMatrix};
use clusterdomain::artheory::ArQuiver;
use clusterdomain::tilting::Tilting;
use clusterdomain::triplecat::AlgebraInstance;
use clusterdomain::{parse_quiver, Field, Quiver};
use proptest::prelude::*;

/// A path `0 - 1 - ... - (n-1)` with arrow directions from `dirs`.
fn path(n: usize, dirs: &[bool]) -> Quiver {
    let arrows = (0..n - 1).map(|i| if dirs[i] { (i, i + 1) } else { (i + 1, i) }).collect();
    Quiver::new(n, arrows)
}

/// The star with centre 0 and three arms.
fn d4(dirs: &[bool]) -> Quiver {
    let arrows = (1..4).map(|i| if dirs[i - 1] { (0, i) } else { (i, 0) }).collect();
    Quiver::new(4, arrows)
}

fn oriented_path() -> impl Strategy<Value = Quiver> {
    (2usize..=7).prop_flat_map(|n| prop::collection::vec(any::<bool>(), n - 1).prop_map(move |d| path(n, &d)))
}

fn text_of(q: &Quiver) -> String {
    let mut s = format!("vertices {}\n", q.n());
    for &(a, b) in &q.arrows {
        s.push_str(&format!("arrow {} {}\n", a + 1, b + 1));
    }
    s
}

#[test]
fn dynkin_recognition() {
    assert_eq!(dynkin_type(&d4(&[true, false, true])).unwrap(), DynkinType::D(4));
    let e6 = Quiver::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]);
    assert_eq!(dynkin_type(&e6).unwrap(), DynkinType::E(6));
    let kronecker = Quiver::new(2, vec![(0, 1), (0, 1)]);
    assert!(dynkin_type(&kronecker).is_err());
    let d4_tilde = Quiver::new(5, vec![(0, 1), (0, 2), (0, 3), (0, 4)]);
    assert!(dynkin_type(&d4_tilde).is_err());
}

#[test]
fn mutation_class_sizes() {
    // up to isomorphism: A3 gives 4 quivers; D4 gives its 4 orientations,
    // the oriented 4-cycle and two 3-cycles sharing an arrow
    assert_eq!(mutation_class(&path(3, &[true, true])).unwrap().len(), 4);
    assert_eq!(mutation_class(&d4(&[true, true, true])).unwrap().len(), 6);
    assert_eq!(mutation_class(&path(4, &[true, true, true])).unwrap().len(), 6);
}

proptest! {
    #[test]
    fn mutation_is_an_involution(q in oriented_path(), k in 0usize..7) {
        let b = ExchangeMatrix::from_quiver(&q);
        let k = k % q.n();
        prop_assert_eq!(b.mutate(k).mutate(k), b);
    }

    #[test]
    fn canonical_form_ignores_vertex_order(q in oriented_path(), seed in any::<u64>()) {
        let n = q.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let b = ExchangeMatrix::from_quiver(&q);
        prop_assert_eq!(b.permuted(&perm).canonical(), b.canonical());
    }

    #[test]
    fn every_orientation_of_a_path_is_type_a(q in oriented_path()) {
        prop_assert_eq!(dynkin_type(&q).unwrap(), DynkinType::A(q.n()));
    }

    #[test]
    fn quiver_files_round_trip(q in oriented_path()) {
        prop_assert_eq!(parse_quiver(&text_of(&q)).unwrap(), q);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn cluster_tilted_quivers_of_random_orientations(dirs in prop::collection::vec(any::<bool>(), 3), star in any::<bool>()) {
        let q = if star { d4(&dirs) } else { path(4, &dirs) };
        let want = dynkin_type(&q).unwrap().cluster_number() as usize;
        let g = AlgebraInstance::gamma(&q, Field::default()).unwrap();
        let ar = ArQuiver::build(g.algebra()).unwrap();
        let t = Tilting::new(&g, &ar).unwrap();
        let cs = t.cluster_tilting_objects().unwrap();
        prop_assert_eq!(cs.len(), want);
        prop_assert_eq!(t.tilting_modules().len(), want);
        for c in cs.iter().step_by(5) {
            let qc = cluster_tilted_quiver(g.algebra(), &t, c).unwrap();
            prop_assert!(verify_mutation_class(&qc.quiver, &q).unwrap());
        }
    }
}
