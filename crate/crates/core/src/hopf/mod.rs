//! Hopf algebra data given by structure constants, with axiom verification,
//! duals, automorphisms and the regular actions of H on H*.
//!
//! Structure constants are the single source of truth: there is no
//! presentation-by-generators machinery, every check is an exact identity
//! of structure tensors, verified exhaustively over basis tuples.
//!
//! Conventions (fixed once, used everywhere):
//! - `mul` has entry `(i,j) -> k` equal to the coefficient of `e_k` in `e_i e_j`;
//! - `comul` has entry `i -> (j,k)` equal to the coefficient of `e_j (x) e_k`
//!   in `delta(e_i)`, Sweedler's `h_1 (x) h_2`;
//! - the dual multiplication is convolution, `(pq)(h) = p(h_1) q(h_2)`; the
//!   "cop" twist needed by the Drinfeld double is applied at the double's
//!   construction site, never here.

pub mod builtins;

use std::fmt;

use thiserror::Error;

use crate::kernel::{Field, KernelError, Leg, LinMap, Scalar, Space, Tensor};
use crate::report::{CheckResult, Report};

#[derive(Debug, Error)]
pub enum HopfError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("axiom {id} failed at {counterexample}")]
    AxiomFailed { id: String, counterexample: String },
    #[error("{0}")]
    Invalid(String),
}

/// A finite-dimensional Hopf algebra with bijective antipode, presented by
/// structure constants over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebraData {
    pub field: Field,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// H (x) H -> H
    pub mul: LinMap,
    /// Unit element as a vector in H.
    pub unit: Tensor,
    /// H -> H (x) H
    pub comul: LinMap,
    /// H -> k
    pub counit: LinMap,
    /// Antipode S : H -> H.
    pub antipode: LinMap,
    /// Verified linear inverse of S.
    pub antipode_inv: LinMap,
}

impl HopfAlgebraData {
    /// Assembles the data and checks shapes only. Axioms are checked by
    /// [`check_hopf_axioms`]; `validated` runs both.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        field: Field,
        basis_labels: Vec<String>,
        mul: LinMap,
        unit: Tensor,
        comul: LinMap,
        counit: LinMap,
        antipode: LinMap,
        antipode_inv: Option<LinMap>,
    ) -> Result<HopfAlgebraData, HopfError> {
        let dim = basis_labels.len();
        let h = Leg::new(Space::H, dim);
        let expect = |ok: bool, what: &str| -> Result<(), HopfError> {
            if ok {
                Ok(())
            } else {
                Err(HopfError::Invalid(format!("{what} has the wrong shape")))
            }
        };
        expect(mul.src() == [h, h] && mul.dst() == [h], "mul")?;
        expect(unit.legs() == [h], "unit")?;
        expect(comul.src() == [h] && comul.dst() == [h, h], "comul")?;
        expect(counit.src() == [h] && counit.dst().is_empty(), "counit")?;
        expect(antipode.src() == [h] && antipode.dst() == [h], "antipode")?;
        let antipode_inv = match antipode_inv {
            Some(m) => {
                expect(m.src() == [h] && m.dst() == [h], "antipode_inv")?;
                m
            }
            None => antipode.inverse().map_err(|_| {
                HopfError::Invalid("antipode is not bijective".into())
            })?,
        };
        Ok(HopfAlgebraData {
            field,
            dim,
            basis_labels,
            mul,
            unit,
            comul,
            counit,
            antipode,
            antipode_inv,
        })
    }

    /// Like `from_parts`, then rejects the data unless every Hopf axiom holds.
    #[allow(clippy::too_many_arguments)]
    pub fn validated(
        field: Field,
        basis_labels: Vec<String>,
        mul: LinMap,
        unit: Tensor,
        comul: LinMap,
        counit: LinMap,
        antipode: LinMap,
        antipode_inv: Option<LinMap>,
    ) -> Result<HopfAlgebraData, HopfError> {
        let h = HopfAlgebraData::from_parts(
            field,
            basis_labels,
            mul,
            unit,
            comul,
            counit,
            antipode,
            antipode_inv,
        )?;
        let report = check_hopf_axioms(&h)?;
        match report.first_failure() {
            None => Ok(h),
            Some(c) => Err(HopfError::AxiomFailed {
                id: c.id.clone(),
                counterexample: c.counterexample.clone().unwrap_or_default(),
            }),
        }
    }

    pub fn h_leg(&self) -> Leg {
        Leg::new(Space::H, self.dim)
    }

    pub fn dual_leg(&self) -> Leg {
        Leg::new(Space::HDual, self.dim)
    }

    pub fn basis_elem(&self, i: usize) -> Tensor {
        Tensor::basis(self.field, vec![self.h_leg()], &[i])
    }

    pub fn basis_covector(&self, i: usize) -> Tensor {
        Tensor::basis(self.field, vec![self.dual_leg()], &[i])
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis_labels[i]
    }

    pub fn labels_for(&self, idx: &[usize]) -> String {
        let parts: Vec<&str> = idx.iter().map(|&i| self.label(i)).collect();
        format!("({})", parts.join(", "))
    }

    pub fn identity_map(&self) -> LinMap {
        LinMap::identity(self.field, vec![self.h_leg()])
    }

    /// The unit as a map k -> H.
    pub fn unit_map(&self) -> LinMap {
        let data = self.unit.data().to_vec();
        LinMap::from_sparse(
            self.field,
            vec![],
            vec![self.h_leg()],
            &data
                .iter()
                .enumerate()
                .map(|(d, c)| (0usize, d, c.clone()))
                .collect::<Vec<_>>(),
        )
        .expect("unit map shape")
    }

    /// Product of two elements of H, by structure-constant row lookups.
    pub fn mul_elems(&self, x: &Tensor, y: &Tensor) -> Tensor {
        assert_eq!(x.legs(), [self.h_leg()], "left factor lives in H");
        assert_eq!(y.legs(), [self.h_leg()], "right factor lives in H");
        let mut out = Tensor::zeros(self.field, vec![self.h_leg()]);
        x.for_each_nonzero(|xi, cx| {
            y.for_each_nonzero(|yi, cy| {
                let c = cx * cy;
                let row = self.mul.row(xi[0] * self.dim + yi[0]);
                let data = out.data_mut();
                for (k, mc) in row.iter().enumerate() {
                    if !mc.is_zero() {
                        data[k] += &(&c * mc);
                    }
                }
            });
        });
        out
    }

    pub fn counit_of(&self, x: &Tensor) -> Scalar {
        self.counit
            .apply(x)
            .and_then(|t| t.to_scalar())
            .expect("counit evaluates")
    }

    /// The n-fold coproduct H -> H^{(x) n}; `n = 1` is the identity. For
    /// `n >= 3` the two bracketings of the first iteration are compared and
    /// an error is raised if they disagree (they cannot, once coassociativity
    /// has been verified, but the check keeps corrupted data loud).
    pub fn iterated_coproduct(&self, n: usize) -> Result<LinMap, HopfError> {
        assert!(n >= 1, "iterated coproduct needs n >= 1");
        if n == 1 {
            return Ok(self.identity_map());
        }
        if n == 2 {
            return Ok(self.comul.clone());
        }
        // verify the bracketing is immaterial at the first iteration
        let id1 = self.identity_map();
        let left = self.comul.then(&self.comul.tensor_map(&id1))?;
        let right = self.comul.then(&id1.tensor_map(&self.comul))?;
        if let Some(ce) = left.differs_at(&right) {
            return Err(HopfError::AxiomFailed {
                id: "hopf.comul-coassoc".into(),
                counterexample: self.labels_for(&ce),
            });
        }
        let mut d = left;
        for _ in 3..n {
            let rest: Vec<Leg> = d.dst()[1..].to_vec();
            let ext = self.comul.tensor_map(&LinMap::identity(self.field, rest));
            d = d.then(&ext)?;
        }
        Ok(d)
    }

    /// Evaluation pairing H* (x) H -> k in dual bases.
    pub fn pairing(&self) -> LinMap {
        let f = self.field;
        let entries: Vec<(usize, usize, Scalar)> = (0..self.dim)
            .map(|i| (i * self.dim + i, 0usize, f.one()))
            .collect();
        LinMap::from_sparse(f, vec![self.dual_leg(), self.h_leg()], vec![], &entries)
            .expect("pairing shape")
    }

    /// The canonical element sum e_i (x) e^i in H (x) H*.
    pub fn copairing(&self) -> Tensor {
        let mut t = Tensor::zeros(self.field, vec![self.h_leg(), self.dual_leg()]);
        for i in 0..self.dim {
            t.set(&[i, i], self.field.one());
        }
        t
    }

    /// Evaluates a covector on an element.
    pub fn eval(&self, p: &Tensor, x: &Tensor) -> Scalar {
        self.pairing()
            .apply(&p.tensor(x))
            .and_then(|t| t.to_scalar())
            .expect("pairing evaluates")
    }

    /// The dual Hopf algebra: multiplication is convolution, comultiplication
    /// is the transpose of `mul`, antipode the transpose of `S`. No "cop"
    /// twist here.
    pub fn to_dual(&self) -> HopfAlgebraData {
        let labels = self
            .basis_labels
            .iter()
            .map(|l| format!("{l}*"))
            .collect::<Vec<_>>();
        let h = self.h_leg();
        let mul = self
            .comul
            .transpose()
            .with_legs(vec![h, h], vec![h])
            .expect("dual mul shape");
        let unit = Tensor::from_data(
            self.field,
            vec![h],
            (0..self.dim)
                .map(|i| self.counit.entry(i, 0).clone())
                .collect(),
        )
        .expect("dual unit shape");
        let comul = self
            .mul
            .transpose()
            .with_legs(vec![h], vec![h, h])
            .expect("dual comul shape");
        let counit = LinMap::from_sparse(
            self.field,
            vec![h],
            vec![],
            &self
                .unit
                .data()
                .iter()
                .enumerate()
                .map(|(i, c)| (i, 0usize, c.clone()))
                .collect::<Vec<_>>(),
        )
        .expect("dual counit shape");
        let antipode = self.antipode.transpose();
        let antipode_inv = self.antipode_inv.transpose();
        HopfAlgebraData {
            field: self.field,
            dim: self.dim,
            basis_labels: labels,
            mul,
            unit,
            comul,
            counit,
            antipode,
            antipode_inv,
        }
    }
}

/// Multiplies two elements of H^{⊗k} componentwise, with zero skipping.
/// Keeps large instances (doubles, crossed products) cheap: cost scales
/// with the supports, not the ambient dimension.
pub fn mul_in_tensor_power(h: &HopfAlgebraData, k: usize, x: &Tensor, y: &Tensor) -> Tensor {
    let legs = vec![h.h_leg(); k];
    assert_eq!(x.legs(), &legs[..], "left factor lives in H^k");
    assert_eq!(y.legs(), &legs[..], "right factor lives in H^k");
    let mut out = Tensor::zeros(h.field, legs);
    let d = h.dim;
    x.for_each_nonzero(|xi, cx| {
        y.for_each_nonzero(|yi, cy| {
            let c = cx * cy;
            let rows: Vec<Vec<(usize, Scalar)>> = (0..k)
                .map(|q| row_support(h.mul.row(xi[q] * d + yi[q])))
                .collect();
            sparse_outer_accumulate(out.data_mut(), &[d].repeat(k), &rows, &c);
        });
    });
    out
}

/// The nonzero entries of a structure-constant row.
pub fn row_support(row: &[Scalar]) -> Vec<(usize, Scalar)> {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

/// Adds c * (row_0 ⊗ ... ⊗ row_{k-1}) into a dense row-major array, walking
/// only the supports.
pub fn sparse_outer_accumulate(
    out: &mut [Scalar],
    dims: &[usize],
    rows: &[Vec<(usize, Scalar)>],
    c: &Scalar,
) {
    if c.is_zero() || rows.iter().any(|r| r.is_empty()) {
        return;
    }
    let k = rows.len();
    let mut idx = vec![0usize; k];
    loop {
        let mut coeff = c.clone();
        let mut flat = 0usize;
        for q in 0..k {
            let (pos, v) = &rows[q][idx[q]];
            coeff = &coeff * v;
            flat = flat * dims[q] + pos;
        }
        out[flat] += &coeff;
        // odometer over the supports
        let mut q = k as isize - 1;
        loop {
            if q < 0 {
                return;
            }
            idx[q as usize] += 1;
            if idx[q as usize] < rows[q as usize].len() {
                break;
            }
            idx[q as usize] = 0;
            q -= 1;
        }
    }
}

/// Verifies every Hopf axiom, reporting each with the first offending basis
/// tuple on failure. Order is fixed: algebra, coalgebra, bialgebra
/// compatibility, antipode identities, antipode inverse. Each identity is
/// evaluated per basis tuple through the tensor engine, so the check stays
/// cheap even on crossed products and doubles.
pub fn check_hopf_axioms(h: &HopfAlgebraData) -> Result<Report, HopfError> {
    use rayon::prelude::*;
    let d = h.dim;
    let mut report = Report::new();

    // associativity, in parallel over basis triples
    let assoc_ce = (0..d * d * d)
        .into_par_iter()
        .find_first(|&flat| {
            let (i, j, k) = (flat / (d * d), (flat / d) % d, flat % d);
            let ij = h.mul.row_tensor(i * d + j);
            let jk = h.mul.row_tensor(j * d + k);
            h.mul_elems(&ij, &h.basis_elem(k)) != h.mul_elems(&h.basis_elem(i), &jk)
        })
        .map(|flat| h.labels_for(&[flat / (d * d), (flat / d) % d, flat % d]));
    report.push(CheckResult::from_counterexample(
        "hopf.mul-assoc",
        "(ab)c = a(bc)",
        assoc_ce,
    ));
    let unit_ce = |left: bool| {
        (0..d).find_map(|i| {
            let e = h.basis_elem(i);
            let p = if left {
                h.mul_elems(&h.unit, &e)
            } else {
                h.mul_elems(&e, &h.unit)
            };
            (p != e).then(|| h.labels_for(&[i]))
        })
    };
    report.push(CheckResult::from_counterexample(
        "hopf.unit-left",
        "1h = h",
        unit_ce(true),
    ));
    report.push(CheckResult::from_counterexample(
        "hopf.unit-right",
        "h1 = h",
        unit_ce(false),
    ));

    // coassociativity and counit laws
    let coassoc_ce = (0..d).find_map(|i| {
        let dd = h.comul.row_tensor(i);
        let l = dd.pipe(&h.comul, &[0]).expect("comul applies");
        let r = dd.pipe(&h.comul, &[1]).expect("comul applies");
        (l != r).then(|| h.labels_for(&[i]))
    });
    report.push(CheckResult::from_counterexample(
        "hopf.comul-coassoc",
        "(Δ⊗id)Δ = (id⊗Δ)Δ",
        coassoc_ce,
    ));
    let counit_ce = |left: bool| {
        (0..d).find_map(|i| {
            let dd = h.comul.row_tensor(i);
            let at = if left { 0 } else { 1 };
            let r = dd.pipe(&h.counit, &[at]).expect("counit applies");
            (r != h.basis_elem(i)).then(|| h.labels_for(&[i]))
        })
    };
    report.push(CheckResult::from_counterexample(
        "hopf.counit-left",
        "(ε⊗id)Δ = id",
        counit_ce(true),
    ));
    report.push(CheckResult::from_counterexample(
        "hopf.counit-right",
        "(id⊗ε)Δ = id",
        counit_ce(false),
    ));

    // bialgebra compatibility
    let bial_ce = (0..d * d)
        .into_par_iter()
        .find_first(|&flat| {
            let (i, j) = (flat / d, flat % d);
            let prod = h.mul.row_tensor(i * d + j);
            let lhs = h.comul.apply(&prod).expect("comul applies");
            let rhs = mul_in_tensor_power(h, 2, &h.comul.row_tensor(i), &h.comul.row_tensor(j));
            lhs != rhs
        })
        .map(|flat| h.labels_for(&[flat / d, flat % d]));
    report.push(CheckResult::from_counterexample(
        "hopf.bialgebra-mul",
        "Δ(hg) = Δ(h)Δ(g)",
        bial_ce,
    ));
    let delta_unit = h.comul.apply(&h.unit)?;
    report.push(CheckResult::from_counterexample(
        "hopf.bialgebra-unit",
        "Δ(1) = 1⊗1",
        (delta_unit != h.unit.tensor(&h.unit)).then(|| "(1)".to_string()),
    ));
    let eps_mul_ce = (0..d * d).find_map(|flat| {
        let (i, j) = (flat / d, flat % d);
        let prod = h.mul.row_tensor(i * d + j);
        let lhs = h.counit_of(&prod);
        let rhs = h.counit.entry(i, 0) * h.counit.entry(j, 0);
        (lhs != rhs).then(|| h.labels_for(&[i, j]))
    });
    report.push(CheckResult::from_counterexample(
        "hopf.bialgebra-counit",
        "ε(hg) = ε(h)ε(g)",
        eps_mul_ce,
    ));
    report.push(CheckResult::from_counterexample(
        "hopf.counit-unit",
        "ε(1) = 1",
        (!h.counit_of(&h.unit).is_one()).then(|| "(1)".to_string()),
    ));

    // antipode identities
    let antipode_ce = |left: bool| {
        (0..d).find_map(|i| {
            let dd = h.comul.row_tensor(i);
            let at = if left { 0 } else { 1 };
            let t = dd.pipe(&h.antipode, &[at]).expect("antipode applies");
            let got = t.pipe(&h.mul, &[0, 1]).expect("mul applies");
            let want = h.unit.scale(h.counit.entry(i, 0));
            (got != want).then(|| h.labels_for(&[i]))
        })
    };
    report.push(CheckResult::from_counterexample(
        "hopf.antipode-left",
        "m(S⊗id)Δ = ηε",
        antipode_ce(true),
    ));
    report.push(CheckResult::from_counterexample(
        "hopf.antipode-right",
        "m(id⊗S)Δ = ηε",
        antipode_ce(false),
    ));
    let id1 = h.identity_map();
    let si = h.antipode.then(&h.antipode_inv)?;
    let is = h.antipode_inv.then(&h.antipode)?;
    report.push(CheckResult::from_counterexample(
        "hopf.antipode-inv-left",
        "S⁻¹S = id",
        si.differs_at(&id1).map(|t| h.labels_for(&t)),
    ));
    report.push(CheckResult::from_counterexample(
        "hopf.antipode-inv-right",
        "SS⁻¹ = id",
        is.differs_at(&id1).map(|t| h.labels_for(&t)),
    ));

    Ok(report)
}

/// An invertible linear map on H verified to commute with all five
/// structure maps.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfAutomorphism {
    pub map: LinMap,
    pub inv: LinMap,
}

impl HopfAutomorphism {
    pub fn identity(h: &HopfAlgebraData) -> HopfAutomorphism {
        let id = h.identity_map();
        HopfAutomorphism {
            map: id.clone(),
            inv: id,
        }
    }

    /// Verifies `matrix` and wraps it. Errors when it is singular or fails
    /// to commute with a structure map.
    pub fn verified(h: &HopfAlgebraData, map: LinMap) -> Result<HopfAutomorphism, HopfError> {
        if !check_automorphism(h, &map) {
            return Err(HopfError::Invalid(
                "matrix is not a Hopf automorphism".into(),
            ));
        }
        let inv = map.inverse()?;
        Ok(HopfAutomorphism { map, inv })
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_identity()
    }

    /// Function composition: `self` applied after `inner`.
    pub fn after(&self, inner: &HopfAutomorphism) -> HopfAutomorphism {
        HopfAutomorphism {
            map: inner.map.then(&self.map).expect("automorphisms compose"),
            inv: self.inv.then(&inner.inv).expect("automorphisms compose"),
        }
    }

    pub fn inverse(&self) -> HopfAutomorphism {
        HopfAutomorphism {
            map: self.inv.clone(),
            inv: self.map.clone(),
        }
    }

    pub fn apply(&self, x: &Tensor) -> Tensor {
        self.map.apply(x).expect("automorphism applies to H")
    }
}

impl fmt::Display for HopfAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, "id")
        } else {
            write!(f, "aut({})", self.map.src_size())
        }
    }
}

/// True iff `theta` is invertible and commutes with mul, unit, comul,
/// counit and the antipode (hence with its inverse).
pub fn check_automorphism(h: &HopfAlgebraData, theta: &LinMap) -> bool {
    if theta.src() != [h.h_leg()] || theta.dst() != [h.h_leg()] {
        return false;
    }
    if theta.inverse().is_err() {
        return false;
    }
    check_bialgebra_endomorphism(h, h, theta)
        && h
            .antipode
            .then(theta)
            .and_then(|a| Ok(a.differs_at(&theta.then(&h.antipode)?)))
            .map(|d| d.is_none())
            .unwrap_or(false)
}

/// True iff `theta : A -> B` respects multiplication, unit, comultiplication
/// and counit of the two Hopf algebras.
pub fn check_bialgebra_endomorphism(
    a: &HopfAlgebraData,
    b: &HopfAlgebraData,
    theta: &LinMap,
) -> bool {
    let tt = theta.tensor_map(theta);
    let mul_ok = match (a.mul.then(theta), tt.then(&b.mul)) {
        (Ok(x), Ok(y)) => x.same_shape(&y) && x.differs_at(&y).is_none(),
        _ => false,
    };
    let unit_ok = theta
        .apply(&a.unit)
        .map(|u| u == b.unit)
        .unwrap_or(false);
    let comul_ok = match (theta.then(&b.comul), a.comul.then(&tt)) {
        (Ok(x), Ok(y)) => x.same_shape(&y) && x.differs_at(&y).is_none(),
        _ => false,
    };
    let counit_ok = match theta.then(&b.counit) {
        Ok(x) => x.same_shape(&a.counit) && x.differs_at(&a.counit).is_none(),
        _ => false,
    };
    mul_ok && unit_ok && comul_ok && counit_ok
}

/// True iff `theta` is an isomorphism of Hopf algebras A -> B.
pub fn check_hopf_iso(a: &HopfAlgebraData, b: &HopfAlgebraData, theta: &LinMap) -> bool {
    theta.inverse().is_ok()
        && check_bialgebra_endomorphism(a, b, theta)
        && match (a.antipode.then(theta), theta.then(&b.antipode)) {
            (Ok(x), Ok(y)) => x.same_shape(&y) && x.differs_at(&y).is_none(),
            _ => false,
        }
}

/// id, S^2, ..., S^{2 l_max}, deduplicated, plus any extra verified maps
/// (for group algebras: the maps induced by group automorphisms). Every
/// candidate is verified; a failure signals corrupted input.
pub fn standard_automorphisms(
    h: &HopfAlgebraData,
    l_max: usize,
    extra: &[LinMap],
) -> Result<Vec<HopfAutomorphism>, HopfError> {
    let s2 = h.antipode.then(&h.antipode)?;
    let mut out: Vec<HopfAutomorphism> = vec![HopfAutomorphism::identity(h)];
    let mut power = h.identity_map();
    for _ in 1..=l_max {
        power = power.then(&s2)?;
        if out.iter().any(|a| a.map == power) {
            continue;
        }
        out.push(HopfAutomorphism::verified(h, power.clone())?);
    }
    for m in extra {
        if out.iter().any(|a| &a.map == m) {
            continue;
        }
        out.push(HopfAutomorphism::verified(h, m.clone())?);
    }
    Ok(out)
}

/// Which regular action of H on H*.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionSide {
    /// (h ⇀ p)(l) = p(l h)
    Left,
    /// (p ↼ h)(l) = p(h l)
    Right,
}

/// The matrix of p -> h ⇀ p (`Left`) or p -> p ↼ h (`Right`) on H*, for a
/// fixed element h of H.
pub fn regular_action_map(h: &HopfAlgebraData, side: ActionSide, elem: &Tensor) -> LinMap {
    let f = h.field;
    let d = h.dim;
    let mut m = LinMap::zeros(f, vec![h.dual_leg()], vec![h.dual_leg()]);
    // (h ⇀ e^j)(e_l) = e^j(e_l h) = sum_i h_i mul[(l,i) -> j]
    // (e^j ↼ h)(e_l) = e^j(h e_l) = sum_i h_i mul[(i,l) -> j]
    elem.for_each_nonzero(|idx, hi| {
        let i = idx[0];
        for l in 0..d {
            let pair = match side {
                ActionSide::Left => l * d + i,
                ActionSide::Right => i * d + l,
            };
            for j in 0..d {
                let c = h.mul.entry(pair, j);
                if !c.is_zero() {
                    let add = &(hi * c);
                    let cur = m.entry(j, l).clone();
                    m.set_entry(j, l, &cur + add);
                }
            }
        }
    });
    m
}

/// h ⇀ p or p ↼ h as an element of H*.
pub fn regular_action(h: &HopfAlgebraData, side: ActionSide, elem: &Tensor, p: &Tensor) -> Tensor {
    regular_action_map(h, side, elem)
        .apply(p)
        .expect("regular action applies to H*")
}

#[cfg(test)]
mod tests;
