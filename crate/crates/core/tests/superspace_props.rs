use proptest::prelude::*;
use qsuper_core::scalar::rat;
use qsuper_core::superspace::{graded_kron_endo, leibniz};
use qsuper_core::{supertrace, tau, BasisVector, Field, Rational, SparseMat, SuperSpace};

fn space(parities: &[u8]) -> SuperSpace {
    let basis = parities
        .iter()
        .enumerate()
        .map(|(i, &p)| BasisVector::new(format!("v{i}"), p, vec![]))
        .collect();
    SuperSpace::new(basis).unwrap()
}

fn parities(max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..2, 1..=max)
}

fn matrix(d: usize) -> impl Strategy<Value = SparseMat<Rational>> {
    prop::collection::vec(-3i64..=3, d * d).prop_map(move |v| {
        let trips = v
            .iter()
            .enumerate()
            .map(|(k, &x)| (k / d, k % d, rat(x, 1)))
            .collect::<Vec<_>>();
        SparseMat::from_triplets(d, d, trips).unwrap()
    })
}

fn homogeneous(m: &SparseMat<Rational>, p: &[u8], parity: u8) -> SparseMat<Rational> {
    let trips = m
        .iter()
        .filter(|&(i, j, _)| p[i] ^ p[j] == parity)
        .map(|(i, j, x)| (i, j, x.clone()))
        .collect::<Vec<_>>();
    SparseMat::from_triplets(m.nrows(), m.ncols(), trips).unwrap()
}

fn sized(max: usize) -> impl Strategy<Value = (Vec<u8>, SparseMat<Rational>, SparseMat<Rational>)> {
    parities(max).prop_flat_map(|p| {
        let d = p.len();
        (Just(p), matrix(d), matrix(d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tau_is_an_involution(p in parities(3), q in parities(3)) {
        let (v, w) = (space(&p), space(&q));
        let t1: SparseMat<Rational> = tau(&v, &w);
        let t2: SparseMat<Rational> = tau(&w, &v);
        prop_assert!(t2.mul(&t1).unwrap().is_identity());
    }

    #[test]
    fn tau_intertwines_graded_kron((p, a, b) in sized(3), (q, c, _) in sized(3), pa in 0u8..2, pc in 0u8..2) {
        // tau (A ⊗ C) = (-1)^{|A||C|} (C ⊗ A) tau for homogeneous A, C
        let (v, w) = (space(&p), space(&q));
        let _ = b;
        let a = homogeneous(&a, &p, pa);
        let c = homogeneous(&c, &q, pc);
        let lhs = tau::<Rational>(&v, &w).mul(&graded_kron_endo(&a, &v, &c, &w).unwrap()).unwrap();
        let mut rhs = graded_kron_endo(&c, &w, &a, &v).unwrap().mul(&tau(&v, &w)).unwrap();
        if pa & pc == 1 {
            rhs = rhs.neg();
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn graded_kron_interchange((p, a, b) in sized(3), (q, c, d) in sized(3), pb in 0u8..2, pc in 0u8..2) {
        // (A ⊗ C)(B ⊗ D) = (-1)^{|C||B|} AB ⊗ CD
        let (v, w) = (space(&p), space(&q));
        let b = homogeneous(&b, &p, pb);
        let c = homogeneous(&c, &q, pc);
        let lhs = graded_kron_endo(&a, &v, &c, &w).unwrap().mul(&graded_kron_endo(&b, &v, &d, &w).unwrap()).unwrap();
        let mut rhs = graded_kron_endo(&a.mul(&b).unwrap(), &v, &c.mul(&d).unwrap(), &w).unwrap();
        if pb & pc == 1 {
            rhs = rhs.neg();
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn supertrace_is_multiplicative_on_even_kron((p, a, _) in sized(3), (q, c, _) in sized(3)) {
        let (v, w) = (space(&p), space(&q));
        let a = homogeneous(&a, &p, 0);
        let c = homogeneous(&c, &q, 0);
        let lhs = supertrace(&graded_kron_endo(&a, &v, &c, &w).unwrap(), &v.tensor(&w)).unwrap();
        let rhs = supertrace(&a, &v).unwrap().mul_ref(&supertrace(&c, &w).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn supertrace_vanishes_on_supercommutators((p, a, b) in sized(4), pa in 0u8..2, pb in 0u8..2) {
        let v = space(&p);
        let a = homogeneous(&a, &p, pa);
        let b = homogeneous(&b, &p, pb);
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        let comm = if pa & pb == 1 { ab.add(&ba) } else { ab.sub(&ba) }.unwrap();
        prop_assert!(supertrace(&comm, &v).unwrap() == rat(0, 1));
    }

    #[test]
    fn leibniz_preserves_supercommutators((p, a, b) in sized(2), pa in 0u8..2, pb in 0u8..2, r in 1usize..=3) {
        let v = space(&p);
        let a = homogeneous(&a, &p, pa);
        let b = homogeneous(&b, &p, pb);
        let bracket = |x: &SparseMat<Rational>, y: &SparseMat<Rational>| {
            let xy = x.mul(y).unwrap();
            let yx = y.mul(x).unwrap();
            if pa & pb == 1 { xy.add(&yx) } else { xy.sub(&yx) }.unwrap()
        };
        let la = leibniz(&a, &v, r).unwrap();
        let lb = leibniz(&b, &v, r).unwrap();
        prop_assert_eq!(leibniz(&bracket(&a, &b), &v, r).unwrap(), bracket(&la, &lb));
    }
}
