//! Pairs in involution and the isomorphisms they induce.
//!
//! A pair (f, g) — an algebra character and a group-like — conjugates the
//! twisted compatibility of a component into the untwisted one. When one
//! exists, the twisted category is isomorphic to the ordinary one via a
//! pair of inverse functors that act as the identity on morphism matrices,
//! and the underlying crossed products are isomorphic as algebras.
//!
//! Search strategy: group-likes are enumerated by scanning coordinate
//! vectors with entries in {-1, 0, 1} over Q (all residues over a small
//! prime field) and verifying each candidate exactly. That lattice is
//! complete for the corpus this crate ships: group-likes of a group algebra
//! are the group basis itself, and characters — group-likes of the dual —
//! take only root-of-unity values, which in Q means +-1. Characters are
//! exactly the group-likes of the dual algebra.



use crate::dcp::{AlgebraData, QTHopfAlgebraData};
use crate::hopf::{regular_action, ActionSide, HopfAlgebraData, HopfAutomorphism};
use crate::kernel::{Leg, LinMap, Space, Tensor};
use crate::report::{CheckResult, Report};
use crate::tcat::tensor_module;
use crate::ydmod::{
    build_pii_module, check_morphism, covector_map, is_character, is_grouplike, GroupElementG,
    PairInInvolution, YDModule,
};
use crate::Error;

/// Candidate coordinate values for the lattice scan.
fn candidate_entries(h: &HopfAlgebraData) -> Result<Vec<crate::kernel::Scalar>, Error> {
    match h.field {
        crate::kernel::Field::Q => Ok(vec![
            h.field.zero(),
            h.field.one(),
            h.field.from_i64(-1),
        ]),
        crate::kernel::Field::Fp(p) => {
            // all residues when the scan stays small, else the same lattice
            let full_size = (p as f64).powi(h.dim as i32);
            if full_size <= 2_000_000.0 {
                Ok((0..p).map(|v| h.field.from_i64(v as i64)).collect())
            } else {
                Ok(vec![h.field.zero(), h.field.one(), h.field.from_i64(-1)])
            }
        }
    }
}

/// All group-like elements with coordinates in the scan lattice, in
/// deterministic lexicographic order.
pub fn enumerate_grouplikes(h: &HopfAlgebraData) -> Result<Vec<Tensor>, Error> {
    let entries = candidate_entries(h)?;
    let e = entries.len();
    let total = e.checked_pow(h.dim as u32).filter(|&t| t <= 4_000_000);
    let Some(total) = total else {
        return Err(Error::Invalid(format!(
            "group-like scan over dimension {} is too large",
            h.dim
        )));
    };
    let mut out = Vec::new();
    for flat in 0..total {
        let mut rem = flat;
        let mut data = Vec::with_capacity(h.dim);
        for _ in 0..h.dim {
            data.push(entries[rem % e].clone());
            rem /= e;
        }
        let cand = Tensor::from_data(h.field, vec![h.h_leg()], data)?;
        if is_grouplike(h, &cand)? {
            out.push(cand);
        }
    }
    Ok(out)
}

/// All algebra characters H -> k: the group-likes of the dual, returned as
/// covectors on H.
pub fn enumerate_characters(h: &HopfAlgebraData) -> Result<Vec<Tensor>, Error> {
    let dual = h.to_dual();
    let grouplikes = enumerate_grouplikes(&dual)?;
    let mut out = Vec::new();
    for g in grouplikes {
        let f = Tensor::from_data(h.field, vec![h.dual_leg()], g.data().to_vec())?;
        debug_assert!(is_character(h, &f)?);
        out.push(f);
    }
    Ok(out)
}

/// Every (character, group-like) pair satisfying the involution identity
/// for (α, β), ordered by (group-like index, character index).
pub fn find_pairs_in_involution(
    h: &HopfAlgebraData,
    alpha: &HopfAutomorphism,
    beta: &HopfAutomorphism,
) -> Result<Vec<PairInInvolution>, Error> {
    let component = GroupElementG::new(alpha.clone(), beta.clone());
    let grouplikes = enumerate_grouplikes(h)?;
    let characters = enumerate_characters(h)?;
    let mut out = Vec::new();
    for g in &grouplikes {
        for f in &characters {
            if let Ok(pii) =
                PairInInvolution::verified(h, f.clone(), g.clone(), component.clone())
            {
                out.push(pii);
            }
        }
    }
    Ok(out)
}

/// The map h -> f(β⁻¹(S(h_1))) β⁻¹(h_2) used by the untwisting functor.
fn untwist_map(h: &HopfAlgebraData, pii: &PairInInvolution) -> Result<LinMap, Error> {
    let beta_inv = &pii.component.beta.inv;
    let scalar_part = h.antipode.then(beta_inv)?.then(&covector_map(h, &pii.f))?;
    Ok(h.comul.then(&scalar_part.tensor_map(beta_inv))?)
}

/// The map h -> f(h_1) β(h_2) used by the twisting functor.
fn twist_map(h: &HopfAlgebraData, pii: &PairInInvolution) -> Result<LinMap, Error> {
    let scalar_part = covector_map(h, &pii.f);
    Ok(h.comul.then(&scalar_part.tensor_map(&pii.component.beta.map))?)
}

fn right_mul_by(h: &HopfAlgebraData, g: &Tensor) -> Result<LinMap, Error> {
    Ok(LinMap::from_fn(
        h.field,
        vec![h.h_leg()],
        vec![h.h_leg()],
        |idx| Ok(h.mul_elems(&h.basis_elem(idx[0]), g)),
    )?)
}

/// F : the twisted component -> the unit component. Same underlying space;
/// action h·m = f(β⁻¹(S(h_1))) β⁻¹(h_2)·m, coaction m_(0) ⊗ m_(1) g⁻¹.
/// The output is fully re-verified.
pub fn functor_f(m: &YDModule, pii: &PairInInvolution) -> Result<YDModule, Error> {
    if m.component != pii.component {
        return Err(Error::ComponentMismatch(
            "module component does not match the pair's component".into(),
        ));
    }
    let h = m.hopf.as_ref();
    let k = untwist_map(h, pii)?;
    let action = k.tensor_map(&m.identity_map()).then(&m.action)?;
    let coaction = m
        .coaction
        .then(&m.identity_map().tensor_map(&right_mul_by(h, &pii.g_inv)?))?;
    YDModule::validated(
        m.hopf.clone(),
        m.basis_labels.clone(),
        GroupElementG::unit(h),
        action,
        coaction,
    )
}

/// G : the unit component -> the twisted component, inverse to F.
/// Action h·n = f(h_1) β(h_2)·n, coaction n_(0) ⊗ n_(1) g.
pub fn functor_g(n: &YDModule, pii: &PairInInvolution) -> Result<YDModule, Error> {
    if !n.component.is_unit() {
        return Err(Error::ComponentMismatch(
            "the twisting functor starts from the unit component".into(),
        ));
    }
    let h = n.hopf.as_ref();
    let k = twist_map(h, pii)?;
    let action = k.tensor_map(&n.identity_map()).then(&n.action)?;
    let coaction = n
        .coaction
        .then(&n.identity_map().tensor_map(&right_mul_by(h, &pii.g)?))?;
    YDModule::validated(
        n.hopf.clone(),
        n.basis_labels.clone(),
        pii.component.clone(),
        action,
        coaction,
    )
}

/// Functor checks for one module in the pair's component: F lands in the
/// unit component, G comes back, both composites are the identity on
/// structure tensors, G factors as (_f k^g) ⊗ -, and morphism matrices
/// transport unchanged.
pub fn check_functors(m: &YDModule, pii: &PairInInvolution) -> Result<Report, Error> {
    let mut report = Report::new();
    let fm = functor_f(m, pii)?;
    report.push(CheckResult::from_counterexample(
        "pii.f-lands-untwisted",
        "F(M) is a compatible module in the unit component",
        (!fm.component.is_unit()).then(|| "component".to_string()),
    ));
    let gfm = functor_g(&fm, pii)?;
    report.push(CheckResult::from_counterexample(
        "pii.gf-identity",
        "G(F(M)) = M on structure tensors",
        (!gfm.same_object(m)).then(|| "structure tensors differ".to_string()),
    ));
    let fgf = functor_f(&gfm, pii)?;
    report.push(CheckResult::from_counterexample(
        "pii.fg-identity",
        "F(G(N)) = N on structure tensors",
        (!fgf.same_object(&fm)).then(|| "structure tensors differ".to_string()),
    ));
    // G(N) = (_f k^g) ⊗ N with the one-dimensional twisting module
    let kg = build_pii_module(&m.hopf, pii, 1)?;
    let product = tensor_module(&kg, &fm)?;
    report.push(CheckResult::from_counterexample(
        "pii.g-factors",
        "G(N) = (_f k^g) ⊗ N on structure tensors",
        (!product.same_object(&gfm)).then(|| "structure tensors differ".to_string()),
    ));
    // morphism transport: the identity matrix of M is a morphism F(M) -> F(M)
    let ok = check_morphism(&fm, &fm, &m.identity_map())?;
    report.push(CheckResult::from_counterexample(
        "pii.morphism-transport",
        "F acts as the identity on morphism matrices",
        (!ok).then(|| "identity matrix fails".to_string()),
    ));
    Ok(report)
}

/// The mutually inverse algebra maps between D(H) and the twisted crossed
/// product: p⊗h -> (g⁻¹⇀p) ⋈ f(β⁻¹(S(h_1))) β⁻¹(h_2) and
/// p⋈h -> (g⇀p) ⊗ f(h_1) β(h_2).
pub fn pii_algebra_iso(
    h: &HopfAlgebraData,
    pii: &PairInInvolution,
    double: &QTHopfAlgebraData,
    twisted: &AlgebraData,
) -> Result<(LinMap, LinMap), Error> {
    let f = h.field;
    let d = h.dim;
    let untwist = untwist_map(h, pii)?;
    let twist = twist_map(h, pii)?;
    let d_leg = double.hopf.h_leg();
    let a_leg = twisted.alg_leg();

    let assemble = |harpoon_by: &Tensor, hmap: &LinMap, dst: Leg| -> Result<LinMap, Error> {
        Ok(LinMap::from_fn(f, vec![Leg::new(dst.space, d * d)], vec![dst], |idx| {
            let (i, a) = (idx[0] / d, idx[0] % d);
            let p_part = regular_action(h, ActionSide::Left, harpoon_by, &h.basis_covector(i));
            let h_part = hmap.apply(&h.basis_elem(a))?;
            let mut out = Tensor::zeros(f, vec![dst]);
            p_part.for_each_nonzero(|pi, cp| {
                h_part.for_each_nonzero(|hi, ch| {
                    let cur = out.get(&[pi[0] * d + hi[0]]).clone();
                    out.set(&[pi[0] * d + hi[0]], &cur + &(cp * ch));
                });
            });
            Ok(out)
        })?)
    };

    // D(H) carries H-tagged legs, the crossed product Alg-tagged ones
    let to_twisted = assemble(&pii.g_inv, &untwist, a_leg)?
        .with_legs(vec![d_leg], vec![a_leg])?;
    let to_double = assemble(&pii.g, &twist, d_leg)?
        .with_legs(vec![a_leg], vec![d_leg])?;
    Ok((to_twisted, to_double))
}

/// Verifies that the two maps are unital algebra morphisms and mutually
/// inverse.
pub fn check_pii_algebra_iso(
    h: &HopfAlgebraData,
    pii: &PairInInvolution,
    double: &QTHopfAlgebraData,
    twisted: &AlgebraData,
) -> Result<Report, Error> {
    let (to_twisted, to_double) = pii_algebra_iso(h, pii, double, twisted)?;
    let d_alg = double.as_algebra();
    let mut report = Report::new();

    let mult_ce = |map: &LinMap, src: &AlgebraData, dst: &AlgebraData| -> Option<String> {
        let n = src.dim;
        for i in 0..n {
            for j in 0..n {
                let prod = src.mul.row_tensor(i * n + j);
                let lhs = map
                    .apply(&prod.with_leg_space(0, map.src()[0].space))
                    .expect("iso applies");
                let rhs = dst.mul_elems(
                    &map.row_tensor(i).with_leg_space(0, Space::Alg),
                    &map.row_tensor(j).with_leg_space(0, Space::Alg),
                );
                if lhs.data() != rhs.data() {
                    return Some(format!("({}, {})", src.basis_labels[i], src.basis_labels[j]));
                }
            }
        }
        None
    };
    report.push(CheckResult::from_counterexample(
        "pii.iso-to-twisted-multiplicative",
        "Φ(xy) = Φ(x)Φ(y)",
        mult_ce(&to_twisted, &d_alg, twisted),
    ));
    report.push(CheckResult::from_counterexample(
        "pii.iso-to-double-multiplicative",
        "Ψ(xy) = Ψ(x)Ψ(y)",
        mult_ce(&to_double, twisted, &d_alg),
    ));
    let unit_ok = to_twisted
        .apply(&double.hopf.unit)
        .map(|u| u == twisted.unit)
        .unwrap_or(false);
    report.push(CheckResult::from_counterexample(
        "pii.iso-unital",
        "Φ(1) = 1",
        (!unit_ok).then(|| "(1)".to_string()),
    ));
    let round1 = to_twisted.then(&to_double)?;
    let round2 = to_double.then(&to_twisted)?;
    report.push(CheckResult::from_counterexample(
        "pii.iso-inverse-left",
        "Ψ∘Φ = id",
        round1
            .differs_at(&LinMap::identity(h.field, vec![double.hopf.h_leg()]))
            .map(|t| format!("basis {t:?}")),
    ));
    report.push(CheckResult::from_counterexample(
        "pii.iso-inverse-right",
        "Φ∘Ψ = id",
        round2
            .differs_at(&LinMap::identity(h.field, vec![twisted.alg_leg()]))
            .map(|t| format!("basis {t:?}")),
    ));
    Ok(report)
}

/// Consistency of the two descriptions: transporting the crossed-product
/// module structure of M along the algebra isomorphism agrees with the
/// crossed-product structure of F(M) over the double.
pub fn check_iso_transport(
    m: &YDModule,
    pii: &PairInInvolution,
    double: &QTHopfAlgebraData,
    twisted: &AlgebraData,
) -> Result<Report, Error> {
    let h = m.hopf.as_ref();
    let (to_twisted, _) = pii_algebra_iso(h, pii, double, twisted)?;
    let dcp_m = crate::dcp::yd_to_dcp_module(m, twisted)?;
    let fm = functor_f(m, pii)?;
    let d_alg = double.as_algebra();
    let dcp_fm = crate::dcp::yd_to_dcp_module(&fm, &d_alg)?;
    // pull the twisted action back along Φ
    let pulled = to_twisted
        .with_legs(vec![d_alg.alg_leg()], vec![twisted.alg_leg()])?
        .tensor_map(&m.identity_map())
        .then(&dcp_m.action)?;
    let mut report = Report::new();
    report.push(CheckResult::from_counterexample(
        "pii.iso-transport",
        "Φ-pullback of the twisted module equals the module of F(M)",
        pulled
            .differs_at(&dcp_fm.action)
            .map(|t| format!("basis {t:?}")),
    ));
    Ok(report)
}

/// A corpus-level statement: modules of a component with a pair in
/// involution factor through the one-dimensional twisting module,
/// M = (_f k^g) ⊗ F(M) exactly.
pub fn check_factorization(m: &YDModule, pii: &PairInInvolution) -> Result<bool, Error> {
    let fm = functor_f(m, pii)?;
    let kg = build_pii_module(&m.hopf, pii, 1)?;
    let product = tensor_module(&kg, &fm)?;
    Ok(product.same_object(m))
}

/// The trivial pair (ε, 1), valid for any diagonal component (α, α).
pub fn trivial_pair(
    h: &HopfAlgebraData,
    alpha: &HopfAutomorphism,
) -> Result<PairInInvolution, Error> {
    let mut eps = Tensor::zeros(h.field, vec![h.dual_leg()]);
    for i in 0..h.dim {
        eps.set(&[i], h.counit.entry(i, 0).clone());
    }
    let component = GroupElementG::new(alpha.clone(), alpha.clone());
    PairInInvolution::verified(h, eps, h.unit.clone(), component)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::hopf::HopfAutomorphism;
    use crate::dcp::{build_drinfeld_double, build_h_ab_bicomodule, diagonal_crossed_product};
    use crate::hopf::builtins::{cyclic_group_algebra, sweedler4, symmetric_group_algebra_s3};
    use crate::hopf::standard_automorphisms;
    use crate::kernel::Field;
    use crate::ydmod::build_h_alpha_beta;

    fn q() -> Field {
        Field::Q
    }

    #[test]
    fn grouplike_enumeration_matches_the_group_basis() {
        for (h, expected) in [
            (cyclic_group_algebra(q(), 2).unwrap(), 2),
            (cyclic_group_algebra(q(), 3).unwrap(), 3),
            (symmetric_group_algebra_s3(q()).unwrap(), 6),
            (sweedler4(q()).unwrap(), 2),
        ] {
            let gls = enumerate_grouplikes(&h).unwrap();
            assert_eq!(gls.len(), expected);
        }
    }

    #[test]
    fn character_enumeration() {
        // C_2: trivial and sign; C_3 over Q: trivial only; S_3: trivial and
        // sign; Sweedler: ε and the character with f(g) = -1
        for (h, expected) in [
            (cyclic_group_algebra(q(), 2).unwrap(), 2),
            (cyclic_group_algebra(q(), 3).unwrap(), 1),
            (symmetric_group_algebra_s3(q()).unwrap(), 2),
            (sweedler4(q()).unwrap(), 2),
        ] {
            let chars = enumerate_characters(&h).unwrap();
            assert_eq!(chars.len(), expected);
            for f in &chars {
                assert!(is_character(&h, f).unwrap());
            }
        }
        // over F_7, the cyclic group of order 3 picks up its cube roots
        let h = cyclic_group_algebra(Field::fp(7).unwrap(), 3).unwrap();
        assert_eq!(enumerate_characters(&h).unwrap().len(), 3);
    }

    #[test]
    fn sweedler_anti_component_has_the_epsilon_g_pair() {
        let h = sweedler4(q()).unwrap();
        let auts = standard_automorphisms(&h, 1, &[]).unwrap();
        let pairs = find_pairs_in_involution(&h, &auts[1], &auts[0]).unwrap();
        assert!(!pairs.is_empty());
        // the pair (ε, g): character ε and group-like g
        let has_eps_g = pairs.iter().any(|p| {
            p.g == Tensor::basis(q(), vec![h.h_leg()], &[1])
                && (0..h.dim).all(|i| p.f.data()[i] == h.counit.entry(i, 0).clone())
        });
        assert!(has_eps_g);
    }

    #[test]
    fn untwisted_component_search_finds_the_trivial_pair() {
        let h = cyclic_group_algebra(q(), 2).unwrap();
        let id = HopfAutomorphism::identity(&h);
        let pairs = find_pairs_in_involution(&h, &id, &id).unwrap();
        let has_trivial = pairs
            .iter()
            .any(|p| p.g == h.unit && (0..h.dim).all(|i| p.f.data()[i].is_one()));
        assert!(has_trivial);
    }

    #[test]
    fn trivial_pair_exists_for_diagonal_components() {
        for h in [
            cyclic_group_algebra(q(), 3).unwrap(),
            sweedler4(q()).unwrap(),
        ] {
            for a in standard_automorphisms(&h, 1, &[]).unwrap() {
                trivial_pair(&h, &a).unwrap();
            }
        }
    }

    #[test]
    fn functors_invert_each_other_on_sweedler_anti_modules() {
        let h = Arc::new(sweedler4(q()).unwrap());
        let auts = standard_automorphisms(&h, 1, &[]).unwrap();
        let pairs = find_pairs_in_involution(&h, &auts[1], &auts[0]).unwrap();
        let pii = &pairs[0];
        let m = build_h_alpha_beta(&h, &auts[1], &auts[0]).unwrap();
        let report = check_functors(&m, pii).unwrap();
        assert!(report.all_pass(), "{report}");
        assert!(check_factorization(&m, pii).unwrap());
    }

    #[test]
    fn trivial_pair_functors_are_the_identity() {
        let h = Arc::new(cyclic_group_algebra(q(), 2).unwrap());
        let id = HopfAutomorphism::identity(&h);
        let pii = trivial_pair(&h, &id).unwrap();
        let m = build_h_alpha_beta(&h, &id, &id).unwrap();
        let fm = functor_f(&m, &pii).unwrap();
        assert!(fm.same_object(&m));
        let gm = functor_g(&m, &pii).unwrap();
        assert!(gm.same_object(&m));
    }

    #[test]
    fn algebra_iso_between_double_and_twisted_product() {
        let h = sweedler4(q()).unwrap();
        let auts = standard_automorphisms(&h, 1, &[]).unwrap();
        let pairs = find_pairs_in_involution(&h, &auts[1], &auts[0]).unwrap();
        let pii = &pairs[0];
        let double = build_drinfeld_double(&h).unwrap();
        let bico = build_h_ab_bicomodule(&h, &auts[1], &auts[0]).unwrap();
        let twisted = diagonal_crossed_product(&h, &bico).unwrap();
        let report = check_pii_algebra_iso(&h, pii, &double, &twisted).unwrap();
        assert!(report.all_pass(), "{report}");
        // trivial pair at (id, id): both maps are the identity array
        let id = HopfAutomorphism::identity(&h);
        let triv = trivial_pair(&h, &id).unwrap();
        let bico = build_h_ab_bicomodule(&h, &id, &id).unwrap();
        let untwisted = diagonal_crossed_product(&h, &bico).unwrap();
        let (to_t, to_d) = pii_algebra_iso(&h, &triv, &double, &untwisted).unwrap();
        for i in 0..untwisted.dim {
            let mut expected = vec![q().zero(); untwisted.dim];
            expected[i] = q().one();
            assert_eq!(to_t.row(i), &expected[..]);
            assert_eq!(to_d.row(i), &expected[..]);
        }
    }

    #[test]
    fn iso_transport_matches_the_functor() {
        let h = Arc::new(sweedler4(q()).unwrap());
        let auts = standard_automorphisms(&h, 1, &[]).unwrap();
        let pairs = find_pairs_in_involution(&h, &auts[1], &auts[0]).unwrap();
        let pii = &pairs[0];
        let double = build_drinfeld_double(&h).unwrap();
        let bico = build_h_ab_bicomodule(&h, &auts[1], &auts[0]).unwrap();
        let twisted = diagonal_crossed_product(&h, &bico).unwrap();
        let m = build_h_alpha_beta(&h, &auts[1], &auts[0]).unwrap();
        let report = check_iso_transport(&m, pii, &double, &twisted).unwrap();
        assert!(report.all_pass(), "{report}");
    }
}
