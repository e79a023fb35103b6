//! Linear maps between tensor products of labeled spaces.
//!
//! A `LinMap` sends basis tensors of its source legs to linear combinations
//! of basis tensors of its target legs. Coefficients are stored row-major:
//! `mat[s * dst_size + d]` is the coefficient of target basis `d` in the
//! image of source basis `s`. Structure constants of algebras, coalgebras,
//! actions and coactions are all `LinMap`s; Sweedler-notation expressions
//! become compositions of `apply_at` calls.

use super::scalar::{Field, Scalar};
use super::tensor::{fmt_legs, is_permutation, size_of, unflatten, Leg, Tensor};
use super::KernelError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    field: Field,
    src: Vec<Leg>,
    dst: Vec<Leg>,
    mat: Vec<Scalar>,
}

impl LinMap {
    pub fn zeros(field: Field, src: Vec<Leg>, dst: Vec<Leg>) -> LinMap {
        let n = size_of(&src) * size_of(&dst);
        LinMap {
            field,
            src,
            dst,
            mat: vec![field.zero(); n],
        }
    }

    pub fn identity(field: Field, legs: Vec<Leg>) -> LinMap {
        let n = size_of(&legs);
        let mut m = LinMap::zeros(field, legs.clone(), legs);
        for i in 0..n {
            m.mat[i * n + i] = field.one();
        }
        m
    }

    /// The map permuting legs: basis `I` goes to basis `J` with `J[q] = I[perm[q]]`.
    pub fn permutation(field: Field, src: Vec<Leg>, perm: &[usize]) -> Result<LinMap, KernelError> {
        if !is_permutation(perm, src.len()) {
            return Err(KernelError::Shape(format!(
                "invalid permutation {:?} for {} legs",
                perm,
                src.len()
            )));
        }
        let dst: Vec<Leg> = perm.iter().map(|&p| src[p]).collect();
        LinMap::from_fn(field, src, dst.clone(), |idx| {
            let j: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            Ok(Tensor::basis(field, dst.clone(), &j))
        })
    }

    /// Builds a map row by row from images of source basis tensors.
    pub fn from_fn(
        field: Field,
        src: Vec<Leg>,
        dst: Vec<Leg>,
        f: impl Fn(&[usize]) -> Result<Tensor, KernelError>,
    ) -> Result<LinMap, KernelError> {
        let dst_size = size_of(&dst);
        let mut mat = Vec::with_capacity(size_of(&src) * dst_size);
        for s in 0..size_of(&src) {
            let idx = unflatten(&src, s);
            let row = f(&idx)?;
            if row.field() != field {
                return Err(KernelError::FieldMismatch(field, row.field()));
            }
            if row.legs() != dst.as_slice() {
                return Err(KernelError::Shape(format!(
                    "image of basis {:?} has legs {}, expected {}",
                    idx,
                    fmt_legs(row.legs()),
                    fmt_legs(&dst)
                )));
            }
            mat.extend_from_slice(row.data());
        }
        Ok(LinMap { field, src, dst, mat })
    }

    /// Builds from sparse entries `(src_flat, dst_flat, coefficient)`,
    /// accumulating duplicates.
    pub fn from_sparse(
        field: Field,
        src: Vec<Leg>,
        dst: Vec<Leg>,
        entries: &[(usize, usize, Scalar)],
    ) -> Result<LinMap, KernelError> {
        let mut m = LinMap::zeros(field, src, dst);
        let (ns, nd) = (size_of(&m.src), size_of(&m.dst));
        for (s, d, c) in entries {
            if *s >= ns || *d >= nd {
                return Err(KernelError::Shape(format!(
                    "sparse entry ({s}, {d}) out of range for {ns}x{nd} map"
                )));
            }
            if c.field() != field {
                return Err(KernelError::FieldMismatch(field, c.field()));
            }
            m.mat[s * nd + d] += c;
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn src(&self) -> &[Leg] {
        &self.src
    }

    pub fn dst(&self) -> &[Leg] {
        &self.dst
    }

    pub fn src_size(&self) -> usize {
        size_of(&self.src)
    }

    pub fn dst_size(&self) -> usize {
        size_of(&self.dst)
    }

    pub fn row(&self, s: usize) -> &[Scalar] {
        let nd = self.dst_size();
        &self.mat[s * nd..(s + 1) * nd]
    }

    /// The image of source basis `s` as a tensor.
    pub fn row_tensor(&self, s: usize) -> Tensor {
        Tensor::from_data(self.field, self.dst.clone(), self.row(s).to_vec())
            .expect("row has the right length")
    }

    pub fn entry(&self, s: usize, d: usize) -> &Scalar {
        &self.mat[s * self.dst_size() + d]
    }

    pub fn set_entry(&mut self, s: usize, d: usize, c: Scalar) {
        let nd = self.dst_size();
        self.mat[s * nd + d] = c;
    }

    pub fn same_shape(&self, other: &LinMap) -> bool {
        self.field == other.field && self.src == other.src && self.dst == other.dst
    }

    /// First source basis tuple on which the two maps differ, if any.
    /// Panics when the shapes differ; compare shapes first.
    pub fn differs_at(&self, other: &LinMap) -> Option<Vec<usize>> {
        assert!(
            self.same_shape(other),
            "comparing maps of different shapes: {} -> {} vs {} -> {}",
            fmt_legs(&self.src),
            fmt_legs(&self.dst),
            fmt_legs(&other.src),
            fmt_legs(&other.dst)
        );
        let nd = self.dst_size();
        for s in 0..self.src_size() {
            if self.mat[s * nd..(s + 1) * nd] != other.mat[s * nd..(s + 1) * nd] {
                return Some(unflatten(&self.src, s));
            }
        }
        None
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.differs_at(&LinMap::identity(self.field, self.src.clone())).is_none()
    }

    /// Applies to a tensor whose legs equal the source exactly.
    pub fn apply(&self, t: &Tensor) -> Result<Tensor, KernelError> {
        let at: Vec<usize> = (0..t.legs().len()).collect();
        self.apply_at(t, &at)
    }

    /// Contracts the source against the listed legs of `t` (in the order
    /// given) and splices the target legs in at the position of the first
    /// listed leg. The remaining legs keep their relative order.
    pub fn apply_at(&self, t: &Tensor, at: &[usize]) -> Result<Tensor, KernelError> {
        if t.field() != self.field {
            return Err(KernelError::FieldMismatch(self.field, t.field()));
        }
        if at.len() != self.src.len() {
            return Err(KernelError::Shape(format!(
                "map consumes {} legs, {} given",
                self.src.len(),
                at.len()
            )));
        }
        let tl = t.legs();
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
            if tl[a] != self.src[k] {
                return Err(KernelError::Shape(format!(
                    "leg {a} is {}, map expects {}",
                    tl[a], self.src[k]
                )));
            }
        }
        let kept: Vec<usize> = (0..tl.len()).filter(|&i| !consumed[i]).collect();
        let insert_pos = if at.is_empty() {
            // a map from the ground field: append its output on the right
            kept.len()
        } else {
            kept.iter().filter(|&&i| i < at[0]).count()
        };
        let mut out_legs: Vec<Leg> = kept.iter().map(|&i| tl[i]).collect();
        for (j, l) in self.dst.iter().enumerate() {
            out_legs.insert(insert_pos + j, *l);
        }

        // strides in the output layout
        let out_dims: Vec<usize> = out_legs.iter().map(|l| l.dim).collect();
        let mut out_strides = vec![1usize; out_dims.len() + 1];
        for k in (0..out_dims.len()).rev() {
            out_strides[k] = out_strides[k + 1] * out_dims[k];
        }
        // stride multiplier of the (contiguous, row-major) target block
        let dst_block_stride = out_strides[insert_pos + self.dst.len()];
        // stride of each kept input leg in the output
        let kept_out_stride: Vec<usize> = kept
            .iter()
            .enumerate()
            .map(|(q, _)| {
                let out_pos = if q < insert_pos { q } else { q + self.dst.len() };
                out_strides[out_pos + 1]
            })
            .collect();

        let nd = self.dst_size();
        let mut out = Tensor::zeros(self.field, out_legs);
        let out_data = out_data_mut(&mut out);
        t.for_each_nonzero(|idx, c| {
            let mut s_flat = 0usize;
            for (k, &a) in at.iter().enumerate() {
                s_flat = s_flat * self.src[k].dim + idx[a];
            }
            let mut base = 0usize;
            for (q, &i) in kept.iter().enumerate() {
                base += idx[i] * kept_out_stride[q];
            }
            let row = &self.mat[s_flat * nd..(s_flat + 1) * nd];
            for (d, coeff) in row.iter().enumerate() {
                if !coeff.is_zero() {
                    out_data[base + d * dst_block_stride] += &(c * coeff);
                }
            }
        });
        Ok(out)
    }

    /// Composition `g . self` (apply `self` first, then `g`).
    pub fn then(&self, g: &LinMap) -> Result<LinMap, KernelError> {
        if self.field != g.field {
            return Err(KernelError::FieldMismatch(self.field, g.field));
        }
        if self.dst != g.src {
            return Err(KernelError::Shape(format!(
                "cannot compose: intermediate legs {} vs {}",
                fmt_legs(&self.dst),
                fmt_legs(&g.src)
            )));
        }
        let (ns, nb, nd) = (self.src_size(), self.dst_size(), g.dst_size());
        let mut mat = vec![self.field.zero(); ns * nd];
        for s in 0..ns {
            let row = &self.mat[s * nb..(s + 1) * nb];
            let out = &mut mat[s * nd..(s + 1) * nd];
            for (b, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let grow = &g.mat[b * nd..(b + 1) * nd];
                for (d, gc) in grow.iter().enumerate() {
                    if !gc.is_zero() {
                        out[d] += &(c * gc);
                    }
                }
            }
        }
        Ok(LinMap {
            field: self.field,
            src: self.src.clone(),
            dst: g.dst.clone(),
            mat,
        })
    }

    /// Tensor product of maps, sources and targets concatenated.
    pub fn tensor_map(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.field, other.field, "tensor product across fields");
        let mut src = self.src.clone();
        src.extend_from_slice(&other.src);
        let mut dst = self.dst.clone();
        dst.extend_from_slice(&other.dst);
        let (nd1, nd2) = (self.dst_size(), other.dst_size());
        let nd = nd1 * nd2;
        let mut mat = vec![self.field.zero(); size_of(&src) * nd];
        for s1 in 0..self.src_size() {
            for (d1, c1) in self.row(s1).iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for s2 in 0..other.src_size() {
                    let s = s1 * other.src_size() + s2;
                    for (d2, c2) in other.row(s2).iter().enumerate() {
                        if !c2.is_zero() {
                            mat[s * nd + d1 * nd2 + d2] += &(c1 * c2);
                        }
                    }
                }
            }
        }
        LinMap { field: self.field, src, dst, mat }
    }

    /// Transpose: the matrix flipped, source and target leg lists swapped.
    pub fn transpose(&self) -> LinMap {
        let (ns, nd) = (self.src_size(), self.dst_size());
        let mut mat = vec![self.field.zero(); ns * nd];
        for s in 0..ns {
            for d in 0..nd {
                mat[d * ns + s] = self.mat[s * nd + d].clone();
            }
        }
        LinMap {
            field: self.field,
            src: self.dst.clone(),
            dst: self.src.clone(),
            mat,
        }
    }

    /// Relabels source and target legs (sizes must be preserved).
    pub fn with_legs(&self, src: Vec<Leg>, dst: Vec<Leg>) -> Result<LinMap, KernelError> {
        if size_of(&src) != self.src_size() || size_of(&dst) != self.dst_size() {
            return Err(KernelError::Shape(format!(
                "relabeling {} -> {} does not preserve sizes",
                fmt_legs(&src),
                fmt_legs(&dst)
            )));
        }
        Ok(LinMap {
            field: self.field,
            src,
            dst,
            mat: self.mat.clone(),
        })
    }

    /// Exact inverse by Gauss-Jordan elimination; requires equal source and
    /// target sizes. Errors with `Singular` when not invertible.
    pub fn inverse(&self) -> Result<LinMap, KernelError> {
        let n = self.src_size();
        if n != self.dst_size() {
            return Err(KernelError::Shape(format!(
                "inverse of non-square map {} -> {}",
                fmt_legs(&self.src),
                fmt_legs(&self.dst)
            )));
        }
        let mut a: Vec<Scalar> = self.mat.clone();
        let mut inv: Vec<Scalar> = LinMap::identity(self.field, self.src.clone()).mat;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero());
            let Some(pivot) = pivot else {
                return Err(KernelError::Singular);
            };
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                    inv.swap(pivot * n + k, col * n + k);
                }
            }
            let pinv = a[col * n + col].inv()?;
            for k in 0..n {
                a[col * n + k] = &a[col * n + k] * &pinv;
                inv[col * n + k] = &inv[col * n + k] * &pinv;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for k in 0..n {
                    let d = &(&a[col * n + k] * &factor);
                    a[r * n + k] = &a[r * n + k] - d;
                    let d = &(&inv[col * n + k] * &factor);
                    inv[r * n + k] = &inv[r * n + k] - d;
                }
            }
        }
        Ok(LinMap {
            field: self.field,
            src: self.dst.clone(),
            dst: self.src.clone(),
            mat: inv,
        })
    }
}

fn out_data_mut(t: &mut Tensor) -> &mut [Scalar] {
    t.data_mut()
}

#[cfg(test)]
mod tests {
    use super::super::scalar::Field;
    use super::super::tensor::Space;
    use super::*;

    fn q() -> Field {
        Field::Q
    }

    fn h(d: usize) -> Leg {
        Leg::new(Space::H, d)
    }

    #[test]
    fn apply_at_non_adjacent_legs() {
        // map: H(2) x H(3) -> H(2) defined by m(e_i, e_j) = j * e_i
        let m = LinMap::from_fn(q(), vec![h(2), h(3)], vec![h(2)], |idx| {
            Ok(Tensor::basis(q(), vec![h(2)], &[idx[0]]).scale(&q().from_i64(idx[1] as i64)))
        })
        .unwrap();
        // input basis e_1 x e_0 x e_2 in H(3) x H(4) x H(2), consume legs [2, 0]
        let t = Tensor::basis(q(), vec![h(3), Leg::new(Space::Mod, 4), h(2)], &[1, 0, 1]);
        // map consumes (leg2 in H(2), leg0 in H(3)) = (e_1, e_1): image = 1 * e_1
        let out = m
            .apply_at(
                &{
                    let mut t2 = t.clone();
                    t2 = t2.permute(&[0, 1, 2]).unwrap();
                    t2
                },
                &[2, 0],
            )
            .unwrap();
        // output legs: [Mod(4), H(2)] with H block at position of leg 2 => after Mod
        assert_eq!(out.legs(), &[Leg::new(Space::Mod, 4), h(2)]);
        assert_eq!(out.get(&[0, 1]), &q().from_i64(1));
    }

    #[test]
    fn compose_matches_sequential_apply() {
        let f = LinMap::from_fn(q(), vec![h(2)], vec![h(2)], |i| {
            Ok(Tensor::basis(q(), vec![h(2)], &[1 - i[0]]))
        })
        .unwrap();
        let g = LinMap::from_fn(q(), vec![h(2)], vec![h(2)], |i| {
            Ok(Tensor::basis(q(), vec![h(2)], &[i[0]]).scale(&q().from_i64(3)))
        })
        .unwrap();
        let fg = f.then(&g).unwrap();
        let x = Tensor::basis(q(), vec![h(2)], &[0]);
        assert_eq!(fg.apply(&x).unwrap(), g.apply(&f.apply(&x).unwrap()).unwrap());
    }

    #[test]
    fn inverse_of_permutation_matrix() {
        let m = LinMap::from_sparse(
            q(),
            vec![h(3)],
            vec![h(3)],
            &[
                (0, 1, q().one()),
                (1, 2, q().one()),
                (2, 0, q().one()),
            ],
        )
        .unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.then(&inv).unwrap().is_identity());
        assert!(inv.then(&m).unwrap().is_identity());
    }

    #[test]
    fn singular_map_has_no_inverse() {
        let m = LinMap::zeros(q(), vec![h(2)], vec![h(2)]);
        assert!(matches!(m.inverse(), Err(KernelError::Singular)));
    }
}
