use proptest::prelude::*;

use qmap_core::assoc::{classify_simple, clifford, clifford_irrep, QuadraticPair, SimpleType};
use qmap_core::cartan::{build_h, odd_part_kills, PsiFunctional};
use qmap_core::coeff::{CoeffAlgebra, Ideal};
use qmap_core::hw::Verma;
use qmap_core::io::{parse_psi, psi_to_json};
use qmap_core::linalg::Mat;
use qmap_core::queer::Queer;
use qmap_core::scalar::tower_scope;
use qmap_core::verify::{pbw_counts, random_form};
use qmap_core::Scalar;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gauss() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=5, -9i64..=9).prop_map(|(a, b, c)| Scalar::frac(a, b) + Scalar::from_int(c) * Scalar::i())
}

fn algebra(k: usize) -> CoeffAlgebra {
    [CoeffAlgebra::complex(), CoeffAlgebra::dual(), CoeffAlgebra::two_point(), CoeffAlgebra::four_point()][k].clone()
}

fn ideals(a: &CoeffAlgebra) -> Vec<Ideal> {
    let mut out = vec![a.zero_ideal(), a.whole(), a.nilradical()];
    for p in 0..a.points.len() {
        out.push(a.max_ideal(p));
        out.push(a.power(&a.max_ideal(p), 2));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_laws(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        if let Some(inv) = a.inv() {
            prop_assert!((a.clone() * inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn adjoined_roots_square_back(n in 2i64..40) {
        tower_scope(|| {
            let s = Scalar::from_int(n).adjoin_sqrt();
            assert_eq!(s.square(), Scalar::from_int(n));
            let t = Scalar::from_int(n + 1).adjoin_sqrt();
            assert_eq!((s.clone() * t.clone()).square(), Scalar::from_int(n * (n + 1)));
        });
    }

    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..5)) {
        let m = Mat::from_dense(&rows.iter().map(|r| r.iter().map(|x| Scalar::from_int(*x)).collect()).collect::<Vec<_>>());
        let ker = m.nullspace();
        prop_assert_eq!(m.rank() + ker.len(), m.ncols());
        prop_assert!(ker.iter().all(|v| m.apply(v).is_empty()));
    }

    #[test]
    fn coefficient_algebras_associative(k in 0usize..4, x in prop::collection::vec(-3i64..=3, 4), y in prop::collection::vec(-3i64..=3, 4), z in prop::collection::vec(-3i64..=3, 4)) {
        let a = algebra(k);
        let v = |w: &[i64]| -> Vec<(usize, Scalar)> { (0..a.dim()).filter(|i| w[*i] != 0).map(|i| (i, Scalar::from_int(w[i]))).collect() };
        let (x, y, z) = (v(&x), v(&y), v(&z));
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
        prop_assert_eq!(a.mul(&x, &y), a.mul(&y, &x));
        prop_assert!(a.points.iter().enumerate().all(|(p, _)| a.max_ideal(p).codim() == 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn clifford_parity_of_rank(r in 1usize..=4, seed in any::<u64>()) {
        tower_scope(|| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let q = QuadraticPair::new(random_form(&mut rng, r, false)).unwrap();
            let c = clifford(&q);
            assert_eq!(c.dim(), 1 << r);
            assert_eq!(clifford_irrep(&q).unwrap().dim(), 1 << r.div_ceil(2));
            let t = classify_simple(&c).unwrap();
            assert_eq!(matches!(t, SimpleType::TypeQ(_)), r % 2 == 1);
            assert!(t != SimpleType::NotSimple);
        });
    }

    #[test]
    fn odd_part_kills_ideals_in_kernel(k in 0usize..3, vals in prop::collection::vec(-2i64..=2, 8), pick in 0usize..16) {
        tower_scope(|| {
            let a = algebra(k);
            let psi = PsiFunctional::new(2, &a, vals[..2 * a.dim()].iter().map(|x| Scalar::from_int(*x)).collect()).unwrap();
            let h = build_h(&psi).unwrap();
            assert_eq!(h.dim(), 1 << h.rank.div_ceil(2));
            let killed: Vec<Ideal> = ideals(&a).into_iter().filter(|i| psi.kills(i)).collect();
            assert!(!killed.is_empty());
            assert!(odd_part_kills(&h, &killed[pick % killed.len()]));
            assert!(odd_part_kills(&h, &psi.ideal));
        });
    }

    #[test]
    fn truncated_verma_obeys_pbw(l1 in 0i64..4, l2 in 0i64..4, depth in 0usize..=3) {
        tower_scope(|| {
            let q = Queer::new(2);
            let psi = PsiFunctional::new(2, &CoeffAlgebra::complex(), vec![Scalar::from_int(l1), Scalar::from_int(l2)]).unwrap();
            let v = Verma::new(&q, &psi, depth).unwrap();
            let law = pbw_counts(&q, 1, depth as i32);
            let total: usize = law.values().sum();
            assert_eq!(v.dim(), total * v.h.dim());
        });
    }

    #[test]
    fn psi_json_roundtrip(vals in prop::collection::vec(gauss(), 2)) {
        let psi = PsiFunctional::new(2, &CoeffAlgebra::complex(), vals).unwrap();
        let back = parse_psi(&psi_to_json(&psi).to_string()).unwrap();
        prop_assert_eq!(back, psi);
    }
}
