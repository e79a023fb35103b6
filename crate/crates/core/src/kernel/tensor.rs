//! Dense tensors with labeled legs.
//!
//! A tensor is an element of a tensor product of finite-dimensional spaces,
//! one leg per factor, coefficients stored row-major (last leg fastest).
//! Legs carry a coarse space tag so that contraction mistakes (pairing a
//! module leg against an algebra leg, say) surface as shape errors instead
//! of silently wrong numbers.

use std::fmt;

use super::scalar::{Field, Scalar};
use super::KernelError;

/// Coarse semantic tag for a tensor leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    /// The ground field (legs of dimension 1, unit objects).
    K,
    /// The Hopf algebra under study.
    H,
    /// Linear functionals on it.
    HDual,
    /// The underlying space of a module.
    Mod,
    /// A constructed algebra (crossed product, double, ...).
    Alg,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Space::K => "k",
            Space::H => "H",
            Space::HDual => "H*",
            Space::Mod => "M",
            Space::Alg => "A",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Leg {
    pub space: Space,
    pub dim: usize,
}

impl Leg {
    pub fn new(space: Space, dim: usize) -> Leg {
        Leg { space, dim }
    }
}

impl fmt::Display for Leg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.space, self.dim)
    }
}

pub(crate) fn size_of(legs: &[Leg]) -> usize {
    legs.iter().map(|l| l.dim).product()
}

pub(crate) fn flatten(legs: &[Leg], idx: &[usize]) -> usize {
    debug_assert_eq!(legs.len(), idx.len());
    let mut f = 0;
    for (leg, &i) in legs.iter().zip(idx) {
        debug_assert!(i < leg.dim);
        f = f * leg.dim + i;
    }
    f
}

pub(crate) fn unflatten(legs: &[Leg], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; legs.len()];
    for k in (0..legs.len()).rev() {
        idx[k] = flat % legs[k].dim;
        flat /= legs[k].dim;
    }
    idx
}

/// Iterates all multi-indices of the given dimensions in row-major order.
pub fn multi_indices(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    let legs: Vec<Leg> = dims.iter().map(|&d| Leg::new(Space::K, d)).collect();
    (0..total).map(move |f| unflatten(&legs, f))
}

/// A dense tensor over an exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    field: Field,
    legs: Vec<Leg>,
    data: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(field: Field, legs: Vec<Leg>) -> Tensor {
        let n = size_of(&legs);
        Tensor {
            field,
            legs,
            data: vec![field.zero(); n],
        }
    }

    /// Basis element e_{idx}.
    pub fn basis(field: Field, legs: Vec<Leg>, idx: &[usize]) -> Tensor {
        assert_eq!(legs.len(), idx.len(), "basis index arity mismatch");
        let mut t = Tensor::zeros(field, legs);
        let f = flatten(&t.legs, idx);
        t.data[f] = field.one();
        t
    }

    /// The 0-leg tensor holding a single scalar.
    pub fn scalar(s: Scalar) -> Tensor {
        Tensor {
            field: s.field(),
            legs: vec![],
            data: vec![s],
        }
    }

    pub fn from_data(field: Field, legs: Vec<Leg>, data: Vec<Scalar>) -> Result<Tensor, KernelError> {
        if data.len() != size_of(&legs) {
            return Err(KernelError::Shape(format!(
                "coefficient array has length {}, legs {} require {}",
                data.len(),
                fmt_legs(&legs),
                size_of(&legs)
            )));
        }
        for s in &data {
            if s.field() != field {
                return Err(KernelError::FieldMismatch(field, s.field()));
            }
        }
        Ok(Tensor { field, legs, data })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn legs(&self) -> &[Leg] {
        &self.legs
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [Scalar] {
        &mut self.data
    }

    pub fn size(&self) -> usize {
        self.data.len()
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[flatten(&self.legs, idx)]
    }

    pub fn set(&mut self, idx: &[usize], s: Scalar) {
        let f = flatten(&self.legs, idx);
        self.data[f] = s;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    /// As a plain scalar; requires zero legs or all legs of dimension 1.
    pub fn to_scalar(&self) -> Result<Scalar, KernelError> {
        if self.data.len() != 1 {
            return Err(KernelError::Shape(format!(
                "tensor with legs {} is not a scalar",
                fmt_legs(&self.legs)
            )));
        }
        Ok(self.data[0].clone())
    }

    /// Visits every nonzero coefficient with its multi-index.
    pub fn for_each_nonzero(&self, mut f: impl FnMut(&[usize], &Scalar)) {
        let mut idx = vec![0usize; self.legs.len()];
        for (flat, s) in self.data.iter().enumerate() {
            if !s.is_zero() {
                let mut rem = flat;
                for k in (0..self.legs.len()).rev() {
                    idx[k] = rem % self.legs[k].dim;
                    rem /= self.legs[k].dim;
                }
                f(&idx, s);
            }
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.legs, other.legs, "tensor addition with mismatched legs");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Tensor {
            field: self.field,
            legs: self.legs.clone(),
            data,
        }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.legs, other.legs, "tensor subtraction with mismatched legs");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Tensor {
            field: self.field,
            legs: self.legs.clone(),
            data,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        if c.is_zero() {
            return Tensor::zeros(self.field, self.legs.clone());
        }
        Tensor {
            field: self.field,
            legs: self.legs.clone(),
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Adds `c * other` into `self` in place.
    pub fn accumulate(&mut self, c: &Scalar, other: &Tensor) {
        assert_eq!(self.legs, other.legs, "tensor accumulate with mismatched legs");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(b * c);
            }
        }
    }

    /// Tensor product, legs concatenated.
    pub fn tensor(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.field, other.field, "tensor product across fields");
        let mut legs = self.legs.clone();
        legs.extend_from_slice(&other.legs);
        let mut data = Vec::with_capacity(self.data.len() * other.data.len());
        for a in &self.data {
            if a.is_zero() {
                data.extend(std::iter::repeat_with(|| self.field.zero()).take(other.data.len()));
            } else {
                data.extend(other.data.iter().map(|b| a * b));
            }
        }
        Tensor {
            field: self.field,
            legs,
            data,
        }
    }

    /// Reorders legs: output leg `q` is input leg `perm[q]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Tensor, KernelError> {
        if !is_permutation(perm, self.legs.len()) {
            return Err(KernelError::Shape(format!(
                "invalid permutation {:?} for {} legs",
                perm,
                self.legs.len()
            )));
        }
        let new_legs: Vec<Leg> = perm.iter().map(|&p| self.legs[p]).collect();
        let mut out = Tensor::zeros(self.field, new_legs);
        let mut new_idx = vec![0usize; perm.len()];
        self.for_each_nonzero(|idx, s| {
            for (q, &p) in perm.iter().enumerate() {
                new_idx[q] = idx[p];
            }
            let f = flatten(&out.legs, &new_idx);
            out.data[f] = s.clone();
        });
        Ok(out)
    }

    /// Reshapes `count` consecutive legs starting at `start` into a single
    /// leg tagged `space`. Row-major layout makes this a relabeling.
    pub fn merge_legs(&self, start: usize, count: usize, space: Space) -> Result<Tensor, KernelError> {
        if count == 0 || start + count > self.legs.len() {
            return Err(KernelError::Shape(format!(
                "cannot merge legs {start}..{} of {}",
                start + count,
                fmt_legs(&self.legs)
            )));
        }
        let merged_dim = self.legs[start..start + count].iter().map(|l| l.dim).product();
        let mut legs = Vec::with_capacity(self.legs.len() - count + 1);
        legs.extend_from_slice(&self.legs[..start]);
        legs.push(Leg::new(space, merged_dim));
        legs.extend_from_slice(&self.legs[start + count..]);
        Ok(Tensor {
            field: self.field,
            legs,
            data: self.data.clone(),
        })
    }

    /// Splits leg `at` into the given parts (dimensions must multiply back).
    pub fn split_leg(&self, at: usize, parts: &[Leg]) -> Result<Tensor, KernelError> {
        if at >= self.legs.len() {
            return Err(KernelError::Shape(format!(
                "leg {at} out of range for {}",
                fmt_legs(&self.legs)
            )));
        }
        if size_of(parts) != self.legs[at].dim {
            return Err(KernelError::Shape(format!(
                "cannot split leg {} into {}",
                self.legs[at],
                fmt_legs(parts)
            )));
        }
        let mut legs = Vec::with_capacity(self.legs.len() + parts.len() - 1);
        legs.extend_from_slice(&self.legs[..at]);
        legs.extend_from_slice(parts);
        legs.extend_from_slice(&self.legs[at + 1..]);
        Ok(Tensor {
            field: self.field,
            legs,
            data: self.data.clone(),
        })
    }

    /// Applies a map to the listed legs; see [`LinMap::apply_at`]. Lets
    /// Sweedler pipelines read left to right.
    pub fn pipe(&self, map: &super::LinMap, at: &[usize]) -> Result<Tensor, KernelError> {
        map.apply_at(self, at)
    }

    /// Retags one leg without touching coefficients.
    pub fn with_leg_space(&self, at: usize, space: Space) -> Tensor {
        let mut t = self.clone();
        t.legs[at].space = space;
        t
    }

    /// Retags every leg.
    pub fn with_all_spaces(&self, space: Space) -> Tensor {
        let mut t = self.clone();
        for l in &mut t.legs {
            l.space = space;
        }
        t
    }
}

pub(crate) fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

pub(crate) fn fmt_legs(legs: &[Leg]) -> String {
    let inner: Vec<String> = legs.iter().map(|l| l.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

/// Exact equality: identical leg lists and coefficient-wise equality.
pub fn tensor_equal(a: &Tensor, b: &Tensor) -> bool {
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Q
    }

    #[test]
    fn basis_and_flatten_roundtrip() {
        let legs = vec![Leg::new(Space::H, 2), Leg::new(Space::H, 3)];
        let t = Tensor::basis(q(), legs.clone(), &[1, 2]);
        assert!(t.get(&[1, 2]).is_one());
        assert_eq!(flatten(&legs, &unflatten(&legs, 5)), 5);
    }

    #[test]
    fn permute_involution_restores() {
        let legs = vec![Leg::new(Space::H, 2), Leg::new(Space::Mod, 3)];
        let mut t = Tensor::zeros(q(), legs);
        t.set(&[0, 2], q().from_i64(5));
        t.set(&[1, 1], q().from_i64(-2));
        let p = t.permute(&[1, 0]).unwrap();
        assert_eq!(p.get(&[2, 0]), &q().from_i64(5));
        assert_eq!(p.permute(&[1, 0]).unwrap(), t);
    }

    #[test]
    fn merge_and_split_are_inverse() {
        let legs = vec![
            Leg::new(Space::HDual, 2),
            Leg::new(Space::H, 3),
            Leg::new(Space::H, 2),
        ];
        let mut t = Tensor::zeros(q(), legs.clone());
        t.set(&[1, 2, 0], q().from_i64(7));
        let m = t.merge_legs(0, 2, Space::Alg).unwrap();
        assert_eq!(m.legs()[0], Leg::new(Space::Alg, 6));
        assert_eq!(m.get(&[5, 0]), &q().from_i64(7));
        let s = m.split_leg(0, &legs[0..2]).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn equality_requires_identical_legs() {
        let a = Tensor::zeros(q(), vec![Leg::new(Space::H, 2)]);
        let b = Tensor::zeros(q(), vec![Leg::new(Space::Mod, 2)]);
        assert!(!tensor_equal(&a, &b));
        assert!(tensor_equal(&a, &a.clone()));
        // adding a nonzero basis tensor breaks equality
        let bump = a.add(&Tensor::basis(q(), vec![Leg::new(Space::H, 2)], &[1]));
        assert!(!tensor_equal(&a, &bump));
    }
}
