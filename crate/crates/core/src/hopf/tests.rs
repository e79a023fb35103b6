use super::builtins::*;
use super::*;
use crate::kernel::{tensor_equal, ContractionPlan, Field, LinMap};

fn q() -> Field {
    Field::Q
}

fn c2() -> HopfAlgebraData {
    cyclic_group_algebra(q(), 2).unwrap()
}

fn c3() -> HopfAlgebraData {
    cyclic_group_algebra(q(), 3).unwrap()
}

fn s3() -> HopfAlgebraData {
    symmetric_group_algebra_s3(q()).unwrap()
}

fn h4() -> HopfAlgebraData {
    sweedler4(q()).unwrap()
}

#[test]
fn corpus_algebras_pass_all_axioms() {
    for h in [c2(), c3(), s3(), h4(), h4().to_dual()] {
        let report = check_hopf_axioms(&h).unwrap();
        assert!(report.all_pass(), "failures:\n{report}");
    }
}

#[test]
fn group_algebra_of_c2_has_identity_antipode() {
    let h = c2();
    assert_eq!(h.dim, 2);
    assert!(h.antipode.is_identity());
}

#[test]
fn group_algebra_rejects_non_group_table() {
    // row [1,1] is not a bijection
    let table = vec![vec![0, 1], vec![1, 1]];
    assert!(group_algebra(q(), vec!["1".into(), "g".into()], &table).is_err());
}

#[test]
fn sweedler_antipode_squares_to_diagonal_signs() {
    let h = h4();
    let s2 = h.antipode.then(&h.antipode).unwrap();
    // S^2 = diag(1, 1, -1, -1) on (1, g, x, gx)
    let expected = LinMap::from_sparse(
        q(),
        vec![h.h_leg()],
        vec![h.h_leg()],
        &[
            (0, 0, q().one()),
            (1, 1, q().one()),
            (2, 2, q().from_i64(-1)),
            (3, 3, q().from_i64(-1)),
        ],
    )
    .unwrap();
    assert_eq!(s2, expected);
    // in particular S^2 != id
    assert!(!s2.is_identity());
}

#[test]
fn sweedler_rejects_characteristic_two() {
    assert!(sweedler4(Field::fp(2).unwrap()).is_err());
    assert!(sweedler4(Field::fp(7).unwrap()).is_ok());
}

#[test]
fn dual_of_c2_is_isomorphic_to_c2_via_characters() {
    let h = c2();
    let dual = h.to_dual();
    assert!(check_hopf_axioms(&dual).unwrap().all_pass());
    // 1 -> e^1 + e^g, g -> e^1 - e^g
    let theta = LinMap::from_sparse(
        q(),
        vec![h.h_leg()],
        vec![h.h_leg()],
        &[
            (0, 0, q().one()),
            (0, 1, q().one()),
            (1, 0, q().one()),
            (1, 1, q().from_i64(-1)),
        ],
    )
    .unwrap();
    assert!(check_hopf_iso(&h, &dual, &theta));
}

#[test]
fn double_dual_is_the_identity_on_structure_maps() {
    for h in [c2(), c3(), s3(), h4()] {
        let dd = h.to_dual().to_dual();
        let id = h.identity_map();
        assert!(check_hopf_iso(&h, &dd, &id));
        assert_eq!(h.mul, dd.mul);
        assert_eq!(h.comul, dd.comul);
        assert_eq!(h.antipode, dd.antipode);
    }
}

#[test]
fn corrupted_antipode_fails_at_x() {
    let h = h4();
    let broken = HopfAlgebraData {
        antipode: h.identity_map(),
        antipode_inv: h.identity_map(),
        ..h
    };
    let report = check_hopf_axioms(&broken).unwrap();
    let fail = report.check("hopf.antipode-left").unwrap();
    assert!(!fail.pass);
    assert_eq!(fail.counterexample.as_deref(), Some("(x)"));
}

#[test]
fn identity_is_an_automorphism() {
    let h = s3();
    assert!(check_automorphism(&h, &h.identity_map()));
}

#[test]
fn c3_inversion_is_a_hopf_automorphism() {
    let h = c3();
    // g -> g^2 is the basis permutation (0)(1 2)
    let theta = group_automorphism_matrix(&h, &[0, 2, 1]);
    assert!(check_automorphism(&h, &theta));
    // but an arbitrary basis permutation is not
    let swap = group_automorphism_matrix(&h, &[1, 0, 2]);
    assert!(!check_automorphism(&h, &swap));
}

#[test]
fn sweedler_rescaling_is_a_hopf_automorphism() {
    let h = h4();
    let theta = LinMap::from_sparse(
        q(),
        vec![h.h_leg()],
        vec![h.h_leg()],
        &[
            (0, 0, q().one()),
            (1, 1, q().one()),
            (2, 2, q().from_i64(2)),
            (3, 3, q().from_i64(2)),
        ],
    )
    .unwrap();
    assert!(check_automorphism(&h, &theta));
}

#[test]
fn standard_automorphisms_deduplicate_antipode_powers() {
    let h = c2();
    let auts = standard_automorphisms(&h, 3, &[]).unwrap();
    assert_eq!(auts.len(), 1); // S^2 = id on a group algebra
    assert!(auts[0].is_identity());

    let h = h4();
    let auts = standard_automorphisms(&h, 1, &[]).unwrap();
    assert_eq!(auts.len(), 2);
    assert!(auts[0].is_identity());
    assert_eq!(auts[1].map, h.antipode.then(&h.antipode).unwrap());
    // S^4 = id, so l_max = 2 adds nothing
    let auts = standard_automorphisms(&h, 2, &[]).unwrap();
    assert_eq!(auts.len(), 2);
}

#[test]
fn s3_has_six_group_automorphisms_all_hopf() {
    let h = s3();
    let table = s3_table();
    let perms = group_automorphisms(&table);
    assert_eq!(perms.len(), 6);
    for p in &perms {
        assert!(check_automorphism(&h, &group_automorphism_matrix(&h, p)));
    }
    let auts = standard_automorphisms(
        &h,
        1,
        &perms
            .iter()
            .map(|p| group_automorphism_matrix(&h, p))
            .collect::<Vec<_>>(),
    )
    .unwrap();
    assert_eq!(auts.len(), 6); // id and S^2 collapse into the induced maps
}

#[test]
fn regular_actions_on_c2_dual_basis() {
    let h = c2();
    let g = h.basis_elem(1);
    let e1 = h.basis_covector(0);
    let eg = h.basis_covector(1);
    // (g ⇀ e^1)(l) = e^1(l g) is supported only at l = g
    assert_eq!(regular_action(&h, ActionSide::Left, &g, &e1), eg);
    // (e^g ↼ g)(l) = e^g(g l) is supported only at l = 1
    assert_eq!(regular_action(&h, ActionSide::Right, &g, &eg), e1);
    // the unit acts trivially on both sides
    let one = h.basis_elem(0);
    assert_eq!(regular_action(&h, ActionSide::Left, &one, &eg), eg);
    assert_eq!(regular_action(&h, ActionSide::Right, &one, &e1), e1);
}

#[test]
fn harpoons_are_actions_on_all_basis_triples() {
    for h in [c2(), c3(), h4()] {
        for i in 0..h.dim {
            for j in 0..h.dim {
                let hi = h.basis_elem(i);
                let hj = h.basis_elem(j);
                let prod = h.mul_elems(&hi, &hj);
                for k in 0..h.dim {
                    let p = h.basis_covector(k);
                    // (h h') ⇀ p = h ⇀ (h' ⇀ p)
                    let lhs = regular_action(&h, ActionSide::Left, &prod, &p);
                    let rhs = regular_action(
                        &h,
                        ActionSide::Left,
                        &hi,
                        &regular_action(&h, ActionSide::Left, &hj, &p),
                    );
                    assert_eq!(lhs, rhs);
                    // p ↼ (h h') = (p ↼ h) ↼ h'
                    let lhs = regular_action(&h, ActionSide::Right, &prod, &p);
                    let rhs = regular_action(
                        &h,
                        ActionSide::Right,
                        &hj,
                        &regular_action(&h, ActionSide::Right, &hi, &p),
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn iterated_coproduct_base_cases() {
    let h = c2();
    assert!(h.iterated_coproduct(1).unwrap().is_identity());
    // Δ applied to g is g⊗g, via a contraction plan
    let plan = ContractionPlan::new().apply(&[0], &h.comul);
    let g = h.basis_elem(1);
    let gg = g.tensor(&g);
    assert!(tensor_equal(&plan.contract(&g).unwrap(), &gg));
    // group-likes stay group-like under iteration
    let d3 = h.iterated_coproduct(3).unwrap();
    assert_eq!(d3.apply(&g).unwrap(), g.tensor(&g).tensor(&g));
}

#[test]
fn iterated_coproduct_of_sweedler_x() {
    let h = h4();
    let d3 = h.iterated_coproduct(3).unwrap();
    let x = h.basis_elem(2);
    let g = h.basis_elem(1);
    let one = h.basis_elem(0);
    // x⊗1⊗1 + g⊗x⊗1 + g⊗g⊗x
    let expected = x
        .tensor(&one)
        .tensor(&one)
        .add(&g.tensor(&x).tensor(&one))
        .add(&g.tensor(&g).tensor(&x));
    assert_eq!(d3.apply(&x).unwrap(), expected);
}

#[test]
fn iterated_coproduct_brackets_agree_on_corpus() {
    for h in [c2(), c3(), s3(), h4(), h4().to_dual()] {
        let id1 = h.identity_map();
        let left = h.comul.then(&h.comul.tensor_map(&id1)).unwrap();
        let right = h.comul.then(&id1.tensor_map(&h.comul)).unwrap();
        for i in 0..h.dim {
            let e = h.basis_elem(i);
            assert_eq!(left.apply(&e).unwrap(), right.apply(&e).unwrap());
        }
    }
}

#[test]
fn automorphisms_commute_with_antipode() {
    let h = h4();
    for a in standard_automorphisms(&h, 2, &[]).unwrap() {
        let sa = h.antipode.then(&a.map).unwrap();
        let as_ = a.map.then(&h.antipode).unwrap();
        assert!(sa.differs_at(&as_).is_none());
    }
}
