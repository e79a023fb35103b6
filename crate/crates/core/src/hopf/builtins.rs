//! Built-in example algebras: group algebras of small groups, the
//! 4-dimensional Sweedler algebra, and duals of either.
//!
//! These supply the verification corpus. Sign conventions for the Sweedler
//! algebra are pinned here once: basis {1, g, x, gx} with g^2 = 1, x^2 = 0,
//! xg = -gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, S(g) = g, S(x) = -gx. Every
//! expected value in the tests is relative to these constants.

#![allow(clippy::needless_range_loop)] // index-parallel walks over structure tables

use crate::kernel::{Field, LinMap, Scalar, Tensor};

use super::{HopfAlgebraData, HopfError};

/// Validates a multiplication table as a group: row/column bijectivity,
/// two-sided identity at index 0, inverses, associativity.
fn validate_group_table(table: &[Vec<usize>]) -> Result<(), HopfError> {
    let n = table.len();
    let bad = |msg: String| Err(HopfError::Invalid(msg));
    if n == 0 {
        return bad("empty group table".into());
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return bad(format!("group table row {i} has length {}", row.len()));
        }
        if row.iter().any(|&k| k >= n) {
            return bad(format!("group table row {i} has an out-of-range entry"));
        }
    }
    for i in 0..n {
        if table[0][i] != i || table[i][0] != i {
            return bad("index 0 is not a two-sided identity".into());
        }
        if !(0..n).any(|j| table[i][j] == 0 && table[j][i] == 0) {
            return bad(format!("element {i} has no inverse"));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return bad(format!("group table is not associative at ({i},{j},{k})"));
                }
            }
        }
    }
    Ok(())
}

/// The group algebra k[G] from a multiplication table (index 0 is the
/// identity): Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
pub fn group_algebra(
    field: Field,
    labels: Vec<String>,
    table: &[Vec<usize>],
) -> Result<HopfAlgebraData, HopfError> {
    validate_group_table(table)?;
    let n = table.len();
    if labels.len() != n {
        return Err(HopfError::Invalid("label count != group order".into()));
    }
    let scratch = HopfPartsBuilder::new(field, n);
    let mut mul = Vec::new();
    let mut comul = Vec::new();
    let mut antipode = Vec::new();
    for i in 0..n {
        for j in 0..n {
            mul.push((i * n + j, table[i][j], field.one()));
        }
        comul.push((i, i * n + i, field.one()));
        let inv = (0..n).find(|&j| table[i][j] == 0).expect("validated group");
        antipode.push((i, inv, field.one()));
    }
    let counit: Vec<Scalar> = vec![field.one(); n];
    scratch.build(labels, &mul, &[(0, field.one())], &comul, &counit, &antipode)
}

/// k[C_n] with basis 1, g, ..., g^{n-1}.
pub fn cyclic_group_algebra(field: Field, n: usize) -> Result<HopfAlgebraData, HopfError> {
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    group_algebra(field, labels, &table)
}

/// Permutations of {0,1,2} composed as (s*t)(x) = s(t(x)); identity first.
const S3_PERMS: [[usize; 3]; 6] = [
    [0, 1, 2], // e
    [1, 0, 2], // (01)
    [2, 1, 0], // (02)
    [0, 2, 1], // (12)
    [1, 2, 0], // (012)
    [2, 0, 1], // (021)
];

/// k[S_3], the smallest noncommutative group algebra in the corpus.
pub fn symmetric_group_algebra_s3(field: Field) -> Result<HopfAlgebraData, HopfError> {
    let labels = ["e", "(01)", "(02)", "(12)", "(012)", "(021)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    group_algebra(field, labels, &s3_table())
}

pub fn s3_table() -> Vec<Vec<usize>> {
    let compose = |s: &[usize; 3], t: &[usize; 3]| -> [usize; 3] {
        [s[t[0]], s[t[1]], s[t[2]]]
    };
    (0..6)
        .map(|i| {
            (0..6)
                .map(|j| {
                    let st = compose(&S3_PERMS[i], &S3_PERMS[j]);
                    S3_PERMS.iter().position(|p| *p == st).expect("closed")
                })
                .collect()
        })
        .collect()
}

/// All automorphisms of the group presented by `table`, as permutations of
/// indices, found by brute force (group orders here are tiny). Deterministic
/// lexicographic order.
pub fn group_automorphisms(table: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = table.len();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute_rest(&mut perm, 1, &mut |p| {
        let ok = (0..n).all(|i| (0..n).all(|j| p[table[i][j]] == table[p[i]][p[j]]));
        if ok {
            out.push(p.to_vec());
        }
    });
    out.sort();
    out
}

fn permute_rest(perm: &mut Vec<usize>, from: usize, visit: &mut impl FnMut(&[usize])) {
    let n = perm.len();
    if from >= n {
        visit(perm);
        return;
    }
    for k in from..n {
        perm.swap(from, k);
        permute_rest(perm, from + 1, visit);
        perm.swap(from, k);
    }
}

/// Recovers a group multiplication table when the algebra is a group
/// algebra presented in its group basis: every basis vector group-like and
/// every basis product a single basis vector with coefficient one.
pub fn detect_group_table(h: &HopfAlgebraData) -> Option<Vec<Vec<usize>>> {
    let n = h.dim;
    for i in 0..n {
        // group-like: Δ e_i = e_i ⊗ e_i and ε(e_i) = 1
        for j in 0..n {
            for k in 0..n {
                let c = h.comul.entry(i, j * n + k);
                if j == i && k == i {
                    if !c.is_one() {
                        return None;
                    }
                } else if !c.is_zero() {
                    return None;
                }
            }
        }
        if !h.counit.entry(i, 0).is_one() {
            return None;
        }
    }
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            let row = h.mul.row(i * n + j);
            let mut target = None;
            for (k, c) in row.iter().enumerate() {
                if c.is_one() && target.is_none() {
                    target = Some(k);
                } else if !c.is_zero() {
                    return None;
                }
            }
            table[i][j] = target?;
        }
    }
    // the table convention puts the identity at index 0
    if h.unit != Tensor::basis(h.field, vec![h.h_leg()], &[0]) {
        return None;
    }
    validate_group_table(&table).ok()?;
    Some(table)
}

/// The permutation matrix on k[G] induced by a group automorphism.
pub fn group_automorphism_matrix(h: &HopfAlgebraData, perm: &[usize]) -> LinMap {
    let entries: Vec<(usize, usize, Scalar)> = perm
        .iter()
        .enumerate()
        .map(|(i, &j)| (i, j, h.field.one()))
        .collect();
    LinMap::from_sparse(h.field, vec![h.h_leg()], vec![h.h_leg()], &entries)
        .expect("permutation matrix shape")
}

/// The 4-dimensional Sweedler algebra over a field of characteristic != 2.
pub fn sweedler4(field: Field) -> Result<HopfAlgebraData, HopfError> {
    if let Field::Fp(2) = field {
        return Err(HopfError::Invalid(
            "the Sweedler algebra needs characteristic != 2 (its signs degenerate)".into(),
        ));
    }
    let one = field.one();
    let neg = field.from_i64(-1);
    // basis indices: 0 = 1, 1 = g, 2 = x, 3 = gx
    let labels = vec!["1".into(), "g".into(), "x".into(), "gx".into()];
    let e = |i: usize, j: usize| i * 4 + j;
    let mul = vec![
        (e(0, 0), 0, one.clone()),
        (e(0, 1), 1, one.clone()),
        (e(0, 2), 2, one.clone()),
        (e(0, 3), 3, one.clone()),
        (e(1, 0), 1, one.clone()),
        (e(1, 1), 0, one.clone()), // g g = 1
        (e(1, 2), 3, one.clone()), // g x = gx
        (e(1, 3), 2, one.clone()), // g gx = x
        (e(2, 0), 2, one.clone()),
        (e(2, 1), 3, neg.clone()), // x g = -gx
        // x x = 0, x gx = 0
        (e(3, 0), 3, one.clone()),
        (e(3, 1), 2, neg.clone()), // gx g = -x
        // gx x = 0, gx gx = 0
    ];
    let comul = vec![
        (0, e(0, 0), one.clone()),          // Δ1 = 1⊗1
        (1, e(1, 1), one.clone()),          // Δg = g⊗g
        (2, e(2, 0), one.clone()),          // Δx = x⊗1 + g⊗x
        (2, e(1, 2), one.clone()),
        (3, e(3, 1), one.clone()),          // Δ(gx) = gx⊗g + 1⊗gx
        (3, e(0, 3), one.clone()),
    ];
    let counit = vec![one.clone(), one.clone(), field.zero(), field.zero()];
    let antipode = vec![
        (0, 0, one.clone()),
        (1, 1, one.clone()), // S(g) = g
        (2, 3, neg.clone()), // S(x) = -gx
        (3, 2, one.clone()), // S(gx) = x
    ];
    HopfPartsBuilder::new(field, 4).build(
        labels,
        &mul,
        &[(0, one)],
        &comul,
        &counit,
        &antipode,
    )
}

/// Assembles sparse structure constants into validated Hopf data.
struct HopfPartsBuilder {
    field: Field,
    dim: usize,
}

impl HopfPartsBuilder {
    fn new(field: Field, dim: usize) -> HopfPartsBuilder {
        HopfPartsBuilder { field, dim }
    }

    fn build(
        &self,
        labels: Vec<String>,
        mul: &[(usize, usize, Scalar)],
        unit: &[(usize, Scalar)],
        comul: &[(usize, usize, Scalar)],
        counit: &[Scalar],
        antipode: &[(usize, usize, Scalar)],
    ) -> Result<HopfAlgebraData, HopfError> {
        let f = self.field;
        let h = crate::kernel::Leg::new(crate::kernel::Space::H, self.dim);
        let mul = LinMap::from_sparse(f, vec![h, h], vec![h], mul)?;
        let mut unit_t = Tensor::zeros(f, vec![h]);
        for (i, c) in unit {
            unit_t.set(&[*i], c.clone());
        }
        let comul = LinMap::from_sparse(f, vec![h], vec![h, h], comul)?;
        let counit = LinMap::from_sparse(
            f,
            vec![h],
            vec![],
            &counit
                .iter()
                .enumerate()
                .map(|(i, c)| (i, 0usize, c.clone()))
                .collect::<Vec<_>>(),
        )?;
        let antipode = LinMap::from_sparse(f, vec![h], vec![h], antipode)?;
        HopfAlgebraData::validated(f, labels, mul, unit_t, comul, counit, antipode, None)
    }
}
