//! JSON file formats for algebras, automorphisms and modules.
//!
//! Scalars serialize as strings — "n" or "n/d" over Q, the residue over a
//! prime field — and parse back bit-exactly. Structure constants are sparse
//! entry lists; serialization emits entries in index order so the same data
//! always produces the same bytes. Invariant violations are rejected with
//! the failing axiom named, never silently repaired.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hopf::builtins;
use crate::hopf::{
    check_automorphism, check_hopf_axioms, HopfAlgebraData, HopfAutomorphism, HopfError,
};
use crate::kernel::{Field, LinMap, Scalar, Tensor};
use crate::ydmod::{GroupElementG, YDModule};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
    #[error("axiom {id} fails at {counterexample}")]
    AxiomFailed { id: String, counterexample: String },
    #[error(transparent)]
    Kernel(#[from] crate::kernel::KernelError),
}

impl From<HopfError> for ParseError {
    fn from(e: HopfError) -> ParseError {
        match e {
            HopfError::AxiomFailed { id, counterexample } => {
                ParseError::AxiomFailed { id, counterexample }
            }
            HopfError::Kernel(k) => ParseError::Kernel(k),
            HopfError::Invalid(s) => ParseError::Invalid(s),
        }
    }
}

impl From<crate::Error> for ParseError {
    fn from(e: crate::Error) -> ParseError {
        match e {
            crate::Error::Kernel(k) => ParseError::Kernel(k),
            crate::Error::Hopf(h) => h.into(),
            other => ParseError::Invalid(other.to_string()),
        }
    }
}

/// Field descriptor: {"type": "Q"} or {"type": "Fp", "p": 7}.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "type")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field, ParseError> {
        match self {
            FieldSpec::Q => Ok(Field::Q),
            FieldSpec::Fp { p } => Field::fp(*p).map_err(ParseError::Kernel),
        }
    }

    pub fn of(field: Field) -> FieldSpec {
        match field {
            Field::Q => FieldSpec::Q,
            Field::Fp(p) => FieldSpec::Fp { p },
        }
    }
}

/// A scalar literal: a string "n" / "n/d", or a plain integer.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Int(i64),
    Str(String),
}

impl ScalarRepr {
    fn to_scalar(&self, field: Field) -> Result<Scalar, ParseError> {
        match self {
            ScalarRepr::Int(n) => Ok(field.from_i64(*n)),
            ScalarRepr::Str(s) => field.parse(s).map_err(ParseError::Kernel),
        }
    }

    fn of(s: &Scalar) -> ScalarRepr {
        ScalarRepr::Str(s.canonical_string())
    }
}

/// On-disk Hopf algebra: either structure constants or a builtin request.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HopfFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default = "default_field")]
    pub field: FieldSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    /// Sparse entries [i, j, k, c]: coefficient of e_k in e_i e_j.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<(usize, usize, usize, ScalarRepr)>>,
    /// Dense coefficient vector of the unit element.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<ScalarRepr>>,
    /// Sparse entries [i, j, k, c]: coefficient of e_j ⊗ e_k in Δ(e_i).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comul: Option<Vec<(usize, usize, usize, ScalarRepr)>>,
    /// Dense values of ε on the basis.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<ScalarRepr>>,
    /// Sparse entries [i, j, c]: coefficient of e_j in S(e_i).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, ScalarRepr)>>,
    /// Optional sparse entries of S⁻¹ (computed by inversion when absent).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipode_inv: Option<Vec<(usize, usize, ScalarRepr)>>,
}

fn default_field() -> FieldSpec {
    FieldSpec::Q
}

/// Automorphism reference inside module/automorphism files: "id",
/// {"s_power": 2l}, or {"matrix": [[i, j, c], ...]}.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AutRef {
    Name(String),
    SPower { s_power: usize },
    Matrix { matrix: Vec<(usize, usize, ScalarRepr)> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub alpha: AutRef,
    pub beta: AutRef,
}

/// On-disk twisted module, interpreted over a separately supplied algebra.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleFile {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub component: ComponentSpec,
    /// Sparse entries [h, m, m', c]: coefficient of e_m' in e_h · e_m.
    pub action: Vec<(usize, usize, usize, ScalarRepr)>,
    /// Sparse entries [m, m', h, c]: coefficient of e_m' ⊗ e_h in ρ(e_m).
    pub coaction: Vec<(usize, usize, usize, ScalarRepr)>,
}

/// A list of extra automorphisms (e.g. induced by group automorphisms).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AutFile {
    pub list: Vec<AutRef>,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, ParseError> {
    let bytes = std::fs::read(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(serde_json::from_slice(&bytes)?)
}

/// Builds a named builtin algebra.
pub fn builtin_algebra(name: &str, field: Field) -> Result<HopfAlgebraData, ParseError> {
    let h = match name {
        "c2" => builtins::cyclic_group_algebra(field, 2)?,
        "c3" => builtins::cyclic_group_algebra(field, 3)?,
        "c4" => builtins::cyclic_group_algebra(field, 4)?,
        "s3" => builtins::symmetric_group_algebra_s3(field)?,
        "sweedler4" => builtins::sweedler4(field)?,
        other => {
            if let Some(base) = other.strip_prefix("dual:") {
                builtin_algebra(base, field)?.to_dual()
            } else {
                return Err(ParseError::Invalid(format!(
                    "unknown builtin {other:?} (known: c2, c3, c4, s3, sweedler4, dual:<name>)"
                )));
            }
        }
    };
    Ok(h)
}

/// Assembles a Hopf algebra from file data with shape checks only; the
/// hopf suite uses this so axiom failures show up as reported checks
/// instead of parse rejections.
pub fn parse_hopf_shape_only(file: &HopfFile) -> Result<HopfAlgebraData, ParseError> {
    if let Some(name) = &file.builtin {
        return builtin_algebra(name, file.field.to_field()?);
    }
    build_hopf(file)
}

fn build_hopf(file: &HopfFile) -> Result<HopfAlgebraData, ParseError> {
    let field = file.field.to_field()?;
    let dim = file
        .dim
        .ok_or_else(|| ParseError::Invalid("missing dim".into()))?;
    let basis = file
        .basis
        .clone()
        .unwrap_or_else(|| (0..dim).map(|i| format!("e{i}")).collect());
    if basis.len() != dim {
        return Err(ParseError::Invalid("basis length != dim".into()));
    }
    let h = crate::kernel::Leg::new(crate::kernel::Space::H, dim);
    let sparse3 = |entries: &Option<Vec<(usize, usize, usize, ScalarRepr)>>,
                   what: &str,
                   src: Vec<crate::kernel::Leg>,
                   dst: Vec<crate::kernel::Leg>,
                   flat: &dyn Fn(usize, usize, usize) -> (usize, usize)|
     -> Result<LinMap, ParseError> {
        let entries = entries
            .as_ref()
            .ok_or_else(|| ParseError::Invalid(format!("missing {what}")))?;
        let mut sparse = Vec::with_capacity(entries.len());
        for (i, j, k, c) in entries {
            let (s, d) = flat(*i, *j, *k);
            sparse.push((s, d, c.to_scalar(field)?));
        }
        LinMap::from_sparse(field, src, dst, &sparse).map_err(ParseError::Kernel)
    };
    let mul = sparse3(&file.mul, "mul", vec![h, h], vec![h], &|i, j, k| {
        (i * dim + j, k)
    })?;
    let comul = sparse3(&file.comul, "comul", vec![h], vec![h, h], &|i, j, k| {
        (i, j * dim + k)
    })?;
    let unit_entries = file
        .unit
        .as_ref()
        .ok_or_else(|| ParseError::Invalid("missing unit".into()))?;
    if unit_entries.len() != dim {
        return Err(ParseError::Invalid("unit length != dim".into()));
    }
    let unit = Tensor::from_data(
        field,
        vec![h],
        unit_entries
            .iter()
            .map(|c| c.to_scalar(field))
            .collect::<Result<_, _>>()?,
    )?;
    let counit_entries = file
        .counit
        .as_ref()
        .ok_or_else(|| ParseError::Invalid("missing counit".into()))?;
    if counit_entries.len() != dim {
        return Err(ParseError::Invalid("counit length != dim".into()));
    }
    let counit = LinMap::from_sparse(
        field,
        vec![h],
        vec![],
        &counit_entries
            .iter()
            .enumerate()
            .map(|(i, c)| Ok((i, 0usize, c.to_scalar(field)?)))
            .collect::<Result<Vec<_>, ParseError>>()?,
    )?;
    let sparse2 = |entries: &Vec<(usize, usize, ScalarRepr)>| -> Result<LinMap, ParseError> {
        let mut sparse = Vec::with_capacity(entries.len());
        for (i, j, c) in entries {
            sparse.push((*i, *j, c.to_scalar(field)?));
        }
        LinMap::from_sparse(field, vec![h], vec![h], &sparse).map_err(ParseError::Kernel)
    };
    let antipode = sparse2(
        file.antipode
            .as_ref()
            .ok_or_else(|| ParseError::Invalid("missing antipode".into()))?,
    )?;
    let antipode_inv = file.antipode_inv.as_ref().map(sparse2).transpose()?;
    Ok(HopfAlgebraData::from_parts(
        field, basis, mul, unit, comul, counit, antipode, antipode_inv,
    )?)
}

/// Parses and fully validates a Hopf algebra file (builtin request or
/// structure constants); invariant violations are rejected with the
/// failing axiom named.
pub fn parse_hopf(file: &HopfFile) -> Result<HopfAlgebraData, ParseError> {
    if let Some(name) = &file.builtin {
        return builtin_algebra(name, file.field.to_field()?);
    }
    let h = build_hopf(file)?;
    let report = check_hopf_axioms(&h)?;
    match report.first_failure() {
        None => Ok(h),
        Some(c) => Err(ParseError::AxiomFailed {
            id: c.id.clone(),
            counterexample: c.counterexample.clone().unwrap_or_default(),
        }),
    }
}

pub fn parse_hopf_path(path: &Path) -> Result<HopfAlgebraData, ParseError> {
    parse_hopf(&read_json(path)?)
}

/// Resolves an automorphism reference against an algebra and verifies it.
pub fn resolve_aut(
    h: &Arc<HopfAlgebraData>,
    spec: &AutRef,
) -> Result<HopfAutomorphism, ParseError> {
    let map = match spec {
        AutRef::Name(name) if name == "id" => h.identity_map(),
        AutRef::Name(other) => {
            return Err(ParseError::Invalid(format!(
                "unknown automorphism name {other:?} (use \"id\", s_power, or matrix)"
            )))
        }
        AutRef::SPower { s_power } => {
            if s_power % 2 != 0 {
                return Err(ParseError::Invalid(
                    "s_power must be even: odd antipode powers are antihomomorphisms".into(),
                ));
            }
            let mut m = h.identity_map();
            for _ in 0..*s_power {
                m = m.then(&h.antipode).map_err(ParseError::Kernel)?;
            }
            m
        }
        AutRef::Matrix { matrix } => {
            let entries = matrix
                .iter()
                .map(|(i, j, c)| Ok((*i, *j, c.to_scalar(h.field)?)))
                .collect::<Result<Vec<_>, ParseError>>()?;
            LinMap::from_sparse(h.field, vec![h.h_leg()], vec![h.h_leg()], &entries)
                .map_err(ParseError::Kernel)?
        }
    };
    if !check_automorphism(h, &map) {
        return Err(ParseError::Invalid(
            "matrix is not a Hopf automorphism of the supplied algebra".into(),
        ));
    }
    HopfAutomorphism::verified(h, map).map_err(ParseError::from)
}

/// Parses and fully validates a module file over the given algebra. The
/// validation runs the module, comodule and both compatibility checks and
/// reports the first failure.
pub fn parse_module(
    h: &Arc<HopfAlgebraData>,
    file: &ModuleFile,
) -> Result<YDModule, ParseError> {
    let field = h.field;
    let dim = file.dim;
    let basis = file
        .basis
        .clone()
        .unwrap_or_else(|| (0..dim).map(|i| format!("m{i}")).collect());
    if basis.len() != dim {
        return Err(ParseError::Invalid("basis length != dim".into()));
    }
    let alpha = resolve_aut(h, &file.component.alpha)?;
    let beta = resolve_aut(h, &file.component.beta)?;
    let m_leg = crate::kernel::Leg::new(crate::kernel::Space::Mod, dim);
    let action = {
        let mut sparse = Vec::with_capacity(file.action.len());
        for (hh, m, m2, c) in &file.action {
            sparse.push((*hh * dim + *m, *m2, c.to_scalar(field)?));
        }
        LinMap::from_sparse(field, vec![h.h_leg(), m_leg], vec![m_leg], &sparse)
            .map_err(ParseError::Kernel)?
    };
    let coaction = {
        let mut sparse = Vec::with_capacity(file.coaction.len());
        for (m, m2, hh, c) in &file.coaction {
            sparse.push((*m, *m2 * h.dim + *hh, c.to_scalar(field)?));
        }
        LinMap::from_sparse(field, vec![m_leg], vec![m_leg, h.h_leg()], &sparse)
            .map_err(ParseError::Kernel)?
    };
    YDModule::validated(
        h.clone(),
        basis,
        GroupElementG::new(alpha, beta),
        action,
        coaction,
    )
    .map_err(ParseError::from)
}

pub fn parse_module_path(h: &Arc<HopfAlgebraData>, path: &Path) -> Result<YDModule, ParseError> {
    parse_module(h, &read_json(path)?)
}

/// Parses a module file without the validation pass (shape checks only);
/// used by the suites to report failures rather than reject the file.
pub fn parse_module_unchecked(
    h: &Arc<HopfAlgebraData>,
    file: &ModuleFile,
) -> Result<YDModule, ParseError> {
    let field = h.field;
    let dim = file.dim;
    let basis = file
        .basis
        .clone()
        .unwrap_or_else(|| (0..dim).map(|i| format!("m{i}")).collect());
    let alpha = resolve_aut(h, &file.component.alpha)?;
    let beta = resolve_aut(h, &file.component.beta)?;
    let m_leg = crate::kernel::Leg::new(crate::kernel::Space::Mod, dim);
    let mut action = Vec::with_capacity(file.action.len());
    for (hh, m, m2, c) in &file.action {
        action.push((*hh * dim + *m, *m2, c.to_scalar(field)?));
    }
    let action = LinMap::from_sparse(field, vec![h.h_leg(), m_leg], vec![m_leg], &action)
        .map_err(ParseError::Kernel)?;
    let mut coaction = Vec::with_capacity(file.coaction.len());
    for (m, m2, hh, c) in &file.coaction {
        coaction.push((*m, *m2 * h.dim + *hh, c.to_scalar(field)?));
    }
    let coaction = LinMap::from_sparse(field, vec![m_leg], vec![m_leg, h.h_leg()], &coaction)
        .map_err(ParseError::Kernel)?;
    YDModule::from_parts(
        h.clone(),
        basis,
        GroupElementG::new(alpha, beta),
        action,
        coaction,
    )
    .map_err(ParseError::from)
}

/// Serializes a Hopf algebra to the sparse file format; parsing the result
/// reproduces the input bit-exactly.
pub fn serialize_hopf(h: &HopfAlgebraData) -> HopfFile {
    let d = h.dim;
    let mut mul = Vec::new();
    let mut comul = Vec::new();
    let mut antipode = Vec::new();
    let mut antipode_inv = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let c = h.mul.entry(i * d + j, k);
                if !c.is_zero() {
                    mul.push((i, j, k, ScalarRepr::of(c)));
                }
                let c = h.comul.entry(i, j * d + k);
                if !c.is_zero() {
                    comul.push((i, j, k, ScalarRepr::of(c)));
                }
            }
            let c = h.antipode.entry(i, j);
            if !c.is_zero() {
                antipode.push((i, j, ScalarRepr::of(c)));
            }
            let c = h.antipode_inv.entry(i, j);
            if !c.is_zero() {
                antipode_inv.push((i, j, ScalarRepr::of(c)));
            }
        }
    }
    HopfFile {
        builtin: None,
        field: FieldSpec::of(h.field),
        dim: Some(d),
        basis: Some(h.basis_labels.clone()),
        mul: Some(mul),
        unit: Some(h.unit.data().iter().map(ScalarRepr::of).collect()),
        comul: Some(comul),
        counit: Some((0..d).map(|i| ScalarRepr::of(h.counit.entry(i, 0))).collect()),
        antipode: Some(antipode),
        antipode_inv: Some(antipode_inv),
    }
}

/// Serializes a module; the component is written as an explicit matrix so
/// the file stands alone.
pub fn serialize_module(m: &YDModule) -> ModuleFile {
    let h = m.hopf.as_ref();
    let d = m.dim;
    let mut action = Vec::new();
    for hh in 0..h.dim {
        for mm in 0..d {
            for m2 in 0..d {
                let c = m.action.entry(hh * d + mm, m2);
                if !c.is_zero() {
                    action.push((hh, mm, m2, ScalarRepr::of(c)));
                }
            }
        }
    }
    let mut coaction = Vec::new();
    for mm in 0..d {
        for m2 in 0..d {
            for hh in 0..h.dim {
                let c = m.coaction.entry(mm, m2 * h.dim + hh);
                if !c.is_zero() {
                    coaction.push((mm, m2, hh, ScalarRepr::of(c)));
                }
            }
        }
    }
    let aut_matrix = |map: &LinMap| -> AutRef {
        let mut entries = Vec::new();
        for i in 0..h.dim {
            for j in 0..h.dim {
                let c = map.entry(i, j);
                if !c.is_zero() {
                    entries.push((i, j, ScalarRepr::of(c)));
                }
            }
        }
        AutRef::Matrix { matrix: entries }
    };
    ModuleFile {
        dim: d,
        basis: Some(m.basis_labels.clone()),
        component: ComponentSpec {
            alpha: aut_matrix(&m.component.alpha.map),
            beta: aut_matrix(&m.component.beta.map),
        },
        action,
        coaction,
    }
}

/// Parses without rejecting, then reports every axiom; the CLI uses this
/// to show the full verdict for an algebra file.
pub fn validate_hopf_report(file: &HopfFile) -> Result<crate::report::Report, ParseError> {
    let h = if let Some(name) = &file.builtin {
        builtin_algebra(name, file.field.to_field()?)?
    } else {
        build_hopf(file)?
    };
    Ok(check_hopf_axioms(&h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::hopf::builtins::{cyclic_group_algebra, sweedler4};

    #[test]
    fn builtin_request_roundtrip() {
        let file: HopfFile = serde_json::from_str(
            r#"{"builtin": "sweedler4", "field": {"type": "Q"}}"#,
        )
        .unwrap();
        let h = parse_hopf(&file).unwrap();
        assert_eq!(h.dim, 4);
        assert_eq!(h.basis_labels[3], "gx");
    }

    #[test]
    fn serialize_parse_roundtrip_is_exact() {
        for h in [
            cyclic_group_algebra(Field::Q, 2).unwrap(),
            cyclic_group_algebra(Field::Q, 3).unwrap(),
            crate::hopf::builtins::symmetric_group_algebra_s3(Field::Q).unwrap(),
            sweedler4(Field::Q).unwrap(),
            sweedler4(Field::Q).unwrap().to_dual(),
            sweedler4(Field::fp(5).unwrap()).unwrap(),
        ] {
            let file = serialize_hopf(&h);
            let text = serde_json::to_string_pretty(&file).unwrap();
            let back: HopfFile = serde_json::from_str(&text).unwrap();
            let h2 = parse_hopf(&back).unwrap();
            assert_eq!(h, h2);
            // byte-identical re-serialization
            let text2 = serde_json::to_string_pretty(&serialize_hopf(&h2)).unwrap();
            assert_eq!(text, text2);
        }
    }

    #[test]
    fn module_roundtrip_is_exact() {
        let h = Arc::new(sweedler4(Field::Q).unwrap());
        let auts = crate::hopf::standard_automorphisms(&h, 1, &[]).unwrap();
        let m = crate::ydmod::build_h_alpha_beta(&h, &auts[1], &auts[0]).unwrap();
        let file = serialize_module(&m);
        let text = serde_json::to_string(&file).unwrap();
        let back: ModuleFile = serde_json::from_str(&text).unwrap();
        let m2 = parse_module(&h, &back).unwrap();
        assert_eq!(m.action, m2.action);
        assert_eq!(m.coaction, m2.coaction);
        assert_eq!(m.component, m2.component);
    }

    #[test]
    fn corrupted_comultiplication_is_rejected_naming_the_axiom() {
        // k[C_2] with Δ(g) = g⊗g + g⊗1: not coassociative at g
        let file: HopfFile = serde_json::from_str(
            r#"{
                "field": {"type": "Q"},
                "dim": 2,
                "basis": ["1", "g"],
                "mul": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"]],
                "unit": ["1", "0"],
                "comul": [[0,0,0,"1"],[1,1,1,"1"],[1,1,0,"1"]],
                "counit": ["1", "1"],
                "antipode": [[0,0,"1"],[1,1,"1"]]
            }"#,
        )
        .unwrap();
        let err = parse_hopf(&file).unwrap_err();
        match err {
            ParseError::AxiomFailed { id, counterexample } => {
                assert_eq!(id, "hopf.comul-coassoc");
                assert_eq!(counterexample, "(g)");
            }
            other => panic!("expected axiom failure, got {other}"),
        }
    }

    #[test]
    fn sweedler_char_two_is_rejected() {
        let file: HopfFile = serde_json::from_str(
            r#"{"builtin": "sweedler4", "field": {"type": "Fp", "p": 2}}"#,
        )
        .unwrap();
        assert!(parse_hopf(&file).is_err());
    }

    #[test]
    fn aut_refs_resolve_and_verify() {
        let h = Arc::new(sweedler4(Field::Q).unwrap());
        let id = resolve_aut(&h, &AutRef::Name("id".into())).unwrap();
        assert!(id.is_identity());
        let s2 = resolve_aut(&h, &AutRef::SPower { s_power: 2 }).unwrap();
        assert_eq!(s2.map, h.antipode.then(&h.antipode).unwrap());
        // odd powers are rejected
        assert!(resolve_aut(&h, &AutRef::SPower { s_power: 1 }).is_err());
        // a non-automorphism matrix is rejected
        let bad = AutRef::Matrix {
            matrix: vec![(0, 1, ScalarRepr::Int(1)), (1, 0, ScalarRepr::Int(1))],
        };
        assert!(resolve_aut(&h, &bad).is_err());
    }
}
