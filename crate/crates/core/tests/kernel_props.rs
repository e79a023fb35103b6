//! Property tests for the exact kernel: field axioms for both scalar
//! backends, linearity of plan contraction, and agreement between the
//! dense and sparse evaluation paths.

use proptest::prelude::*;

use ydcheck::kernel::{
    ContractionPlan, Field, Leg, LinMap, Scalar, Space, SparseTensor, Tensor,
};

fn arb_rational() -> impl Strategy<Value = Scalar> {
    (any::<i32>(), 1..200i32).prop_map(|(n, d)| {
        let f = Field::Q;
        &f.from_i64(n as i64) * &f.from_i64(d as i64).inv().unwrap()
    })
}

fn arb_fp(p: u64) -> impl Strategy<Value = Scalar> {
    (0..p).prop_map(move |v| Field::Fp(p).from_i64(v as i64))
}

proptest! {
    #[test]
    fn rational_field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &a.neg()).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        let f = Field::Q;
        prop_assert_eq!(&a + &f.zero(), a.clone());
        prop_assert_eq!(&a * &f.one(), a);
    }

    #[test]
    fn prime_field_axioms(a in arb_fp(101), b in arb_fp(101), c in arb_fp(101)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &a.neg()).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }
}

fn small_legs() -> Vec<Leg> {
    vec![Leg::new(Space::H, 2), Leg::new(Space::Mod, 3)]
}

fn arb_tensor() -> impl Strategy<Value = Tensor> {
    proptest::collection::vec(-4..5i64, 6).prop_map(|vals| {
        let f = Field::Q;
        Tensor::from_data(
            f,
            small_legs(),
            vals.into_iter().map(|v| f.from_i64(v)).collect(),
        )
        .unwrap()
    })
}

/// A fixed family of plans on the 2 x 3 shape, indexed by a seed.
fn plan_for(seed: u8) -> ContractionPlan {
    let f = Field::Q;
    let h2 = Leg::new(Space::H, 2);
    let m3 = Leg::new(Space::Mod, 3);
    let split = LinMap::from_fn(f, vec![h2], vec![h2, h2], |idx| {
        let mut t = Tensor::zeros(f, vec![h2, h2]);
        t.set(&[idx[0], idx[0]], f.one());
        t.set(&[idx[0], 1 - idx[0]], f.from_i64(seed as i64 % 3 - 1));
        Ok(t)
    })
    .unwrap();
    let collapse = LinMap::from_fn(f, vec![m3], vec![], |idx| {
        Ok(Tensor::scalar(f.from_i64(idx[0] as i64 + 1)))
    })
    .unwrap();
    let pairing = LinMap::from_fn(f, vec![h2, h2], vec![], |idx| {
        Ok(Tensor::scalar(if idx[0] == idx[1] {
            f.one()
        } else {
            f.zero()
        }))
    })
    .unwrap();
    match seed % 4 {
        0 => ContractionPlan::new().permute(&[1, 0]).apply(&[1], &split),
        1 => ContractionPlan::new().apply(&[0], &split).contract_pair(0, 1, &pairing),
        2 => ContractionPlan::new()
            .apply(&[1], &collapse)
            .tensor_with(&Tensor::basis(f, vec![m3], &[2])),
        _ => ContractionPlan::new()
            .apply(&[0], &split)
            .permute(&[2, 0, 1])
            .apply(&[0], &collapse),
    }
}

proptest! {
    #[test]
    fn contraction_is_linear(t in arb_tensor(), u in arb_tensor(), a in -5..6i64, seed in 0u8..8) {
        let f = Field::Q;
        let plan = plan_for(seed);
        let lhs = plan.contract(&t.scale(&f.from_i64(a)).add(&u)).unwrap();
        let rhs = plan
            .contract(&t)
            .unwrap()
            .scale(&f.from_i64(a))
            .add(&plan.contract(&u).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sparse_and_dense_pipelines_agree(t in arb_tensor(), seed in 0u8..8) {
        let plan = plan_for(seed);
        let dense = plan.contract(&t).unwrap();
        // replay the same steps through the sparse element
        let mut sp = SparseTensor::from_tensor(&t);
        for step in plan.steps() {
            sp = match step {
                ydcheck::kernel::Step::Apply { at, map } => sp.pipe(map, at).unwrap(),
                ydcheck::kernel::Step::Permute(p) => sp.permute(p).unwrap(),
                ydcheck::kernel::Step::ContractPair { a, b, pairing } => {
                    sp.pipe(pairing, &[*a, *b]).unwrap()
                }
                ydcheck::kernel::Step::TensorWith(c) => sp.tensor(&SparseTensor::from_tensor(c)),
            };
        }
        prop_assert_eq!(sp.to_tensor(), dense);
    }

    #[test]
    fn permutation_of_legs_is_invertible(t in arb_tensor()) {
        let p = t.permute(&[1, 0]).unwrap();
        prop_assert_eq!(p.permute(&[1, 0]).unwrap(), t);
    }
}
