//! Deferred contraction plans.
//!
//! A plan is a sequence of primitive steps applied to a running tensor:
//! apply a linear map to some legs, permute legs, contract a pair of legs
//! against a pairing, or tensor with a constant. Plans make Sweedler
//! expressions first-class: build once, run on every basis input, and get
//! the offending step named when shapes do not line up.

use super::linmap::LinMap;
use super::tensor::Tensor;
use super::KernelError;

#[derive(Clone, Debug)]
pub enum Step {
    /// Contract `map`'s source against the listed legs, splicing the
    /// target legs in at the position of the first listed leg.
    Apply { at: Vec<usize>, map: LinMap },
    /// Reorder legs: output leg `q` is input leg `perm[q]`.
    Permute(Vec<usize>),
    /// Contract legs `a` and `b` (in that order) against a pairing into
    /// the ground field.
    ContractPair { a: usize, b: usize, pairing: LinMap },
    /// Tensor the running tensor with a constant on the right.
    TensorWith(Tensor),
}

#[derive(Clone, Debug, Default)]
pub struct ContractionPlan {
    steps: Vec<Step>,
}

impl ContractionPlan {
    pub fn new() -> ContractionPlan {
        ContractionPlan { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn apply(mut self, at: &[usize], map: &LinMap) -> ContractionPlan {
        self.steps.push(Step::Apply {
            at: at.to_vec(),
            map: map.clone(),
        });
        self
    }

    pub fn permute(mut self, perm: &[usize]) -> ContractionPlan {
        self.steps.push(Step::Permute(perm.to_vec()));
        self
    }

    pub fn contract_pair(mut self, a: usize, b: usize, pairing: &LinMap) -> ContractionPlan {
        self.steps.push(Step::ContractPair {
            a,
            b,
            pairing: pairing.clone(),
        });
        self
    }

    pub fn tensor_with(mut self, t: &Tensor) -> ContractionPlan {
        self.steps.push(Step::TensorWith(t.clone()));
        self
    }

    /// Executes the steps in order. Pure; the input is not modified.
    pub fn contract(&self, input: &Tensor) -> Result<Tensor, KernelError> {
        let mut t = input.clone();
        for (i, step) in self.steps.iter().enumerate() {
            t = run_step(step, &t).map_err(|e| KernelError::Step {
                step: i,
                source: Box::new(e),
            })?;
        }
        Ok(t)
    }
}

fn run_step(step: &Step, t: &Tensor) -> Result<Tensor, KernelError> {
    match step {
        Step::Apply { at, map } => map.apply_at(t, at),
        Step::Permute(perm) => t.permute(perm),
        Step::ContractPair { a, b, pairing } => {
            if pairing.src().len() != 2 || !pairing.dst().is_empty() {
                return Err(KernelError::Shape(format!(
                    "pairing must take two legs to the ground field, has {} -> {}",
                    pairing.src().len(),
                    pairing.dst().len()
                )));
            }
            pairing.apply_at(t, &[*a, *b])
        }
        Step::TensorWith(c) => {
            if c.field() != t.field() {
                return Err(KernelError::FieldMismatch(t.field(), c.field()));
            }
            Ok(t.tensor(c))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::scalar::Field;
    use super::super::tensor::{Leg, Space};
    use super::*;

    fn q() -> Field {
        Field::Q
    }

    #[test]
    fn empty_plan_is_identity() {
        let t = Tensor::basis(q(), vec![Leg::new(Space::H, 3)], &[2]);
        assert_eq!(ContractionPlan::new().contract(&t).unwrap(), t);
    }

    #[test]
    fn double_swap_restores_input() {
        let legs = vec![Leg::new(Space::H, 2), Leg::new(Space::Mod, 3)];
        let mut t = Tensor::zeros(q(), legs);
        t.set(&[1, 2], q().from_i64(4));
        t.set(&[0, 1], q().from_i64(-1));
        let plan = ContractionPlan::new().permute(&[1, 0]).permute(&[1, 0]);
        assert_eq!(plan.contract(&t).unwrap(), t);
    }

    #[test]
    fn shape_error_names_the_step() {
        let t = Tensor::basis(q(), vec![Leg::new(Space::H, 2)], &[0]);
        let plan = ContractionPlan::new()
            .permute(&[0])
            .apply(&[5], &LinMap::identity(q(), vec![Leg::new(Space::H, 2)]));
        let err = plan.contract(&t).unwrap_err();
        match err {
            KernelError::Step { step, .. } => assert_eq!(step, 1),
            other => panic!("expected step error, got {other}"),
        }
    }
}
