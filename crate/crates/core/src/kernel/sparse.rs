//! Sparse elements for pipeline evaluation.
//!
//! Sweedler pipelines thread basis vectors through big intermediate spaces
//! whose dense size dwarfs the handful of nonzero coefficients. This type
//! mirrors the `Tensor` operations on a (flat index, coefficient) list and
//! densifies only at the end, when the result lands back in a small space.
//! Semantics match the dense path exactly; the property tests in the
//! kernel compare the two on random inputs.

use super::linmap::LinMap;
use super::scalar::{Field, Scalar};
use super::tensor::{fmt_legs, is_permutation, size_of, Leg, Space, Tensor};
use super::KernelError;

#[derive(Clone, Debug)]
pub struct SparseTensor {
    field: Field,
    legs: Vec<Leg>,
    /// Flat row-major indices with nonzero coefficients, unordered between
    /// operations; `normalize` sorts and merges.
    entries: Vec<(usize, Scalar)>,
}

impl SparseTensor {
    pub fn basis(field: Field, legs: Vec<Leg>, idx: &[usize]) -> SparseTensor {
        let flat = super::tensor::flatten(&legs, idx);
        SparseTensor {
            field,
            legs,
            entries: vec![(flat, field.one())],
        }
    }

    pub fn from_tensor(t: &Tensor) -> SparseTensor {
        let mut entries = Vec::new();
        for (flat, c) in t.data().iter().enumerate() {
            if !c.is_zero() {
                entries.push((flat, c.clone()));
            }
        }
        SparseTensor {
            field: t.field(),
            legs: t.legs().to_vec(),
            entries,
        }
    }

    pub fn to_tensor(&self) -> Tensor {
        let mut out = Tensor::zeros(self.field, self.legs.clone());
        let data = out.data_mut();
        for (flat, c) in &self.entries {
            data[*flat] += c;
        }
        out
    }

    pub fn legs(&self) -> &[Leg] {
        &self.legs
    }

    fn normalize(&mut self) {
        self.entries.sort_by_key(|(f, _)| *f);
        let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(self.entries.len());
        for (f, c) in self.entries.drain(..) {
            match merged.last_mut() {
                Some((lf, lc)) if *lf == f => *lc += &c,
                _ => merged.push((f, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        self.entries = merged;
    }

    fn decompose(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0usize; self.legs.len()];
        for k in (0..self.legs.len()).rev() {
            idx[k] = flat % self.legs[k].dim;
            flat /= self.legs[k].dim;
        }
        idx
    }

    /// Same splice semantics as `LinMap::apply_at` on dense tensors.
    pub fn pipe(&self, map: &LinMap, at: &[usize]) -> Result<SparseTensor, KernelError> {
        if map.field() != self.field {
            return Err(KernelError::FieldMismatch(self.field, map.field()));
        }
        if at.len() != map.src().len() {
            return Err(KernelError::Shape(format!(
                "map consumes {} legs, {} given",
                map.src().len(),
                at.len()
            )));
        }
        let tl = &self.legs;
        let mut consumed = vec![false; tl.len()];
        for (k, &a) in at.iter().enumerate() {
            if a >= tl.len() {
                return Err(KernelError::Shape(format!(
                    "leg {a} out of range for {}",
                    fmt_legs(tl)
                )));
            }
            if consumed[a] {
                return Err(KernelError::Shape(format!("leg {a} listed twice")));
            }
            consumed[a] = true;
            if tl[a] != map.src()[k] {
                return Err(KernelError::Shape(format!(
                    "leg {a} is {}, map expects {}",
                    tl[a],
                    map.src()[k]
                )));
            }
        }
        let kept: Vec<usize> = (0..tl.len()).filter(|&i| !consumed[i]).collect();
        let insert_pos = if at.is_empty() {
            kept.len()
        } else {
            kept.iter().filter(|&&i| i < at[0]).count()
        };
        let mut out_legs: Vec<Leg> = kept.iter().map(|&i| tl[i]).collect();
        for (j, l) in map.dst().iter().enumerate() {
            out_legs.insert(insert_pos + j, *l);
        }
        let out_dims: Vec<usize> = out_legs.iter().map(|l| l.dim).collect();
        let mut out_strides = vec![1usize; out_dims.len() + 1];
        for k in (0..out_dims.len()).rev() {
            out_strides[k] = out_strides[k + 1] * out_dims[k];
        }
        let dst_block_stride = out_strides[insert_pos + map.dst().len()];
        let kept_out_stride: Vec<usize> = kept
            .iter()
            .enumerate()
            .map(|(q, _)| {
                let out_pos = if q < insert_pos { q } else { q + map.dst().len() };
                out_strides[out_pos + 1]
            })
            .collect();

        let mut out = SparseTensor {
            field: self.field,
            legs: out_legs,
            entries: Vec::with_capacity(self.entries.len()),
        };
        for (flat, c) in &self.entries {
            let idx = self.decompose(*flat);
            let mut s_flat = 0usize;
            for (k, &a) in at.iter().enumerate() {
                s_flat = s_flat * map.src()[k].dim + idx[a];
            }
            let mut base = 0usize;
            for (q, &i) in kept.iter().enumerate() {
                base += idx[i] * kept_out_stride[q];
            }
            let row = map.row(s_flat);
            for (d, coeff) in row.iter().enumerate() {
                if !coeff.is_zero() {
                    out.entries.push((base + d * dst_block_stride, c * coeff));
                }
            }
        }
        out.normalize();
        Ok(out)
    }

    pub fn permute(&self, perm: &[usize]) -> Result<SparseTensor, KernelError> {
        if !is_permutation(perm, self.legs.len()) {
            return Err(KernelError::Shape(format!(
                "invalid permutation {:?} for {} legs",
                perm,
                self.legs.len()
            )));
        }
        let new_legs: Vec<Leg> = perm.iter().map(|&p| self.legs[p]).collect();
        let mut out = SparseTensor {
            field: self.field,
            legs: new_legs,
            entries: Vec::with_capacity(self.entries.len()),
        };
        for (flat, c) in &self.entries {
            let idx = self.decompose(*flat);
            let mut f = 0usize;
            for (q, &p) in perm.iter().enumerate() {
                f = f * out.legs[q].dim + idx[p];
            }
            out.entries.push((f, c.clone()));
        }
        out.normalize();
        Ok(out)
    }

    /// Merging consecutive legs leaves flat indices untouched.
    pub fn merge_legs(&self, start: usize, count: usize, space: Space) -> Result<SparseTensor, KernelError> {
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
        Ok(SparseTensor {
            field: self.field,
            legs,
            entries: self.entries.clone(),
        })
    }

    pub fn tensor(&self, other: &SparseTensor) -> SparseTensor {
        assert_eq!(self.field, other.field, "tensor product across fields");
        let mut legs = self.legs.clone();
        legs.extend_from_slice(&other.legs);
        let other_size = size_of(&other.legs);
        let mut entries = Vec::with_capacity(self.entries.len() * other.entries.len());
        for (fa, ca) in &self.entries {
            for (fb, cb) in &other.entries {
                entries.push((fa * other_size + fb, ca * cb));
            }
        }
        let mut out = SparseTensor {
            field: self.field,
            legs,
            entries,
        };
        out.normalize();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Q
    }

    fn h(d: usize) -> Leg {
        Leg::new(Space::H, d)
    }

    #[test]
    fn sparse_pipe_matches_dense_apply() {
        // a map with multiple outputs per input, applied at shuffled legs
        let m = LinMap::from_fn(q(), vec![h(2), h(3)], vec![h(2), h(2)], |idx| {
            let mut t = Tensor::zeros(q(), vec![h(2), h(2)]);
            t.set(&[idx[0], (idx[1] + 1) % 2], q().from_i64(idx[1] as i64 + 1));
            t.set(&[1 - idx[0], 0], q().from_i64(-2));
            Ok(t)
        })
        .unwrap();
        let legs = vec![h(3), Leg::new(Space::Mod, 2), h(2)];
        let mut dense = Tensor::zeros(q(), legs.clone());
        dense.set(&[1, 0, 1], q().from_i64(3));
        dense.set(&[2, 1, 0], q().from_i64(5));
        let sparse = SparseTensor::from_tensor(&dense);
        let a = m.apply_at(&dense, &[2, 0]).unwrap();
        let b = sparse.pipe(&m, &[2, 0]).unwrap().to_tensor();
        assert_eq!(a, b);
    }

    #[test]
    fn sparse_permute_and_merge_match_dense() {
        let legs = vec![h(2), h(3), h(2)];
        let mut dense = Tensor::zeros(q(), legs.clone());
        dense.set(&[1, 2, 0], q().from_i64(7));
        dense.set(&[0, 1, 1], q().from_i64(-1));
        let sparse = SparseTensor::from_tensor(&dense);
        assert_eq!(
            sparse.permute(&[2, 0, 1]).unwrap().to_tensor(),
            dense.permute(&[2, 0, 1]).unwrap()
        );
        assert_eq!(
            sparse.merge_legs(0, 2, Space::Alg).unwrap().to_tensor(),
            dense.merge_legs(0, 2, Space::Alg).unwrap()
        );
    }
}
