//! Verification-suite orchestration.
//!
//! A suite takes a list of algebras (builtins or files), derives a
//! deterministic test corpus of automorphisms and modules, runs the
//! checks of one layer of the theory, and assembles a report whose JSON
//! form is byte-identical across runs and parallelism levels.
//!
//! Exhaustive checking is the default. The combinatorial outer loops
//! (which module pairs and triples get checked) are capped by fixed,
//! documented budgets so the full corpus stays at desk scale; `--sample`
//! replaces those outer loops with a seeded random subset, and
//! `--max-dim` refuses instances whose constructed algebras would exceed
//! the requested size. Inner basis-tuple loops are always exhaustive.

use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::dcp;
use crate::dt;
use crate::hopf::builtins::{detect_group_table, group_automorphism_matrix, group_automorphisms};
use crate::hopf::{check_hopf_axioms, check_hopf_iso, standard_automorphisms, HopfAlgebraData, HopfAutomorphism};
use crate::io::{self, AutRef, ModuleFile, ParseError};
use crate::kernel::Field;
use crate::pii;
use crate::report::{CheckResult, InputRecord, VerificationReport};
use crate::tcat;
use crate::ydmod::{self, GroupElementG, YDModule};
use crate::Error;

/// Outer-loop selection: everything, or a seeded random subset.
#[derive(Clone, Copy, Debug)]
pub enum Selection {
    Exhaustive,
    Sample { count: usize, seed: u64 },
}

/// Where the automorphism test set comes from.
#[derive(Clone, Debug)]
pub enum AutSource {
    /// id, S^2, ..., S^{2 l_max}, plus all automorphisms induced by group
    /// automorphisms when the algebra is a group algebra.
    Std { l_max: usize },
    /// Explicit references, resolved and verified against each algebra.
    Refs(Vec<AutRef>),
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub field: Field,
    pub auts: AutSource,
    pub max_dim: usize,
    pub selection: Selection,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            field: Field::Q,
            auts: AutSource::Std { l_max: 1 },
            max_dim: 40,
            selection: Selection::Exhaustive,
        }
    }
}

/// An algebra with its input name and content digest.
#[derive(Clone)]
pub struct NamedAlgebra {
    pub name: String,
    pub hopf: Arc<HopfAlgebraData>,
    pub digest: String,
}

impl NamedAlgebra {
    pub fn builtin(name: &str, field: Field) -> Result<NamedAlgebra, ParseError> {
        let hopf = io::builtin_algebra(name, field)?;
        let canonical = serde_json::to_string(&io::serialize_hopf(&hopf))
            .expect("canonical serialization");
        Ok(NamedAlgebra {
            name: format!("builtin:{name}"),
            hopf: Arc::new(hopf),
            digest: sha256_hex(canonical.as_bytes()),
        })
    }

    pub fn from_path(path: &std::path::Path) -> Result<NamedAlgebra, ParseError> {
        NamedAlgebra::load(path, true)
    }

    /// Shape checks only; the hopf suite reports axiom failures itself.
    pub fn from_path_shape_only(path: &std::path::Path) -> Result<NamedAlgebra, ParseError> {
        NamedAlgebra::load(path, false)
    }

    fn load(path: &std::path::Path, validate: bool) -> Result<NamedAlgebra, ParseError> {
        let bytes = std::fs::read(path).map_err(|source| ParseError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let file: io::HopfFile = serde_json::from_slice(&bytes)?;
        let hopf = if validate {
            io::parse_hopf(&file)?
        } else {
            io::parse_hopf_shape_only(&file)?
        };
        Ok(NamedAlgebra {
            name: path.display().to_string(),
            hopf: Arc::new(hopf),
            digest: sha256_hex(&bytes),
        })
    }

    fn record(&self) -> InputRecord {
        InputRecord {
            name: self.name.clone(),
            sha256: self.digest.clone(),
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// The default corpus: both cyclic groups, the symmetric group, the
/// Sweedler algebra and its dual.
pub fn default_corpus(field: Field) -> Result<Vec<NamedAlgebra>, ParseError> {
    ["c2", "c3", "s3", "sweedler4", "dual:sweedler4"]
        .iter()
        .map(|n| NamedAlgebra::builtin(n, field))
        .collect()
}

fn xorshift(state: &mut u64) -> u64 {
    *state ^= *state << 13;
    *state ^= *state >> 7;
    *state ^= *state << 17;
    *state
}

/// Applies the outer-loop selection to an index range.
fn select(total: usize, selection: Selection) -> Vec<usize> {
    match selection {
        Selection::Exhaustive => (0..total).collect(),
        Selection::Sample { count, seed } => {
            if count >= total {
                return (0..total).collect();
            }
            let mut state = seed | 1;
            let mut picked = std::collections::BTreeSet::new();
            while picked.len() < count {
                picked.insert((xorshift(&mut state) % total as u64) as usize);
            }
            picked.into_iter().collect()
        }
    }
}

fn cap<T: Clone>(items: &[T], cap: usize) -> Vec<T> {
    items.iter().take(cap).cloned().collect()
}

/// The verified automorphism test set for one algebra.
pub fn automorphism_set(
    h: &Arc<HopfAlgebraData>,
    source: &AutSource,
) -> Result<Vec<HopfAutomorphism>, Error> {
    match source {
        AutSource::Std { l_max } => {
            let extras = match detect_group_table(h) {
                Some(table) => group_automorphisms(&table)
                    .iter()
                    .map(|p| group_automorphism_matrix(h, p))
                    .collect(),
                None => Vec::new(),
            };
            Ok(standard_automorphisms(h, *l_max, &extras)?)
        }
        AutSource::Refs(refs) => {
            let mut out = vec![HopfAutomorphism::identity(h)];
            for r in refs {
                let a = io::resolve_aut(h, r).map_err(|e| Error::Invalid(e.to_string()))?;
                if !out.iter().any(|x| x.map == a.map) {
                    out.push(a);
                }
            }
            Ok(out)
        }
    }
}

fn pair_set(auts: &[HopfAutomorphism]) -> Vec<GroupElementG> {
    let mut out = Vec::new();
    for a in auts {
        for b in auts {
            out.push(GroupElementG::new(a.clone(), b.clone()));
        }
    }
    out
}

fn pair_name(auts: &[HopfAutomorphism], p: &GroupElementG) -> String {
    let idx = |m: &HopfAutomorphism| {
        auts.iter()
            .position(|a| a.map == m.map)
            .map(|i| format!("a{i}"))
            .unwrap_or_else(|| "?".into())
    };
    format!("({},{})", idx(&p.alpha), idx(&p.beta))
}

/// The bounded module corpus for category-level checks: the trivial module,
/// the twisted regular modules over the given pairs, a one-dimensional
/// pair-in-involution module when one exists, and left duals of everything.
fn module_corpus(
    h: &Arc<HopfAlgebraData>,
    auts: &[HopfAutomorphism],
    pairs: &[GroupElementG],
    with_duals: bool,
) -> Result<Vec<(String, YDModule)>, Error> {
    let mut out = vec![("k".to_string(), YDModule::trivial(h.clone()))];
    for p in pairs {
        let m = ydmod::build_h_alpha_beta(h, &p.alpha, &p.beta)?;
        out.push((format!("H{}", pair_name(auts, p)), m));
    }
    // a one-dimensional twisting module for the first non-diagonal pair
    // that admits one
    'search: for p in pairs {
        if p.is_unit() {
            continue;
        }
        let found = pii::find_pairs_in_involution(&h.clone(), &p.alpha, &p.beta)?;
        if let Some(pair) = found.first() {
            let m = ydmod::build_pii_module(h, pair, 1)?;
            out.push((format!("kg{}", pair_name(auts, p)), m));
            break 'search;
        }
    }
    if with_duals {
        let duals: Vec<(String, YDModule)> = out
            .iter()
            .map(|(n, m)| {
                let (d, _, _) = tcat::left_dual(m)?;
                Ok((format!("{n}*"), d))
            })
            .collect::<Result<_, Error>>()?;
        out.extend(duals);
    }
    Ok(out)
}

fn err_check(scope: &str, e: &dyn std::fmt::Display) -> (String, CheckResult) {
    (
        scope.to_string(),
        CheckResult::fail("suite.error", "construction succeeds", format!("{e}")),
    )
}

/// Refusal rule: every algebra the suite constructs must fit the budget.
fn check_budget(vr: &mut VerificationReport, scope: &str, dim: usize, cfg: &SuiteConfig) -> bool {
    if dim > cfg.max_dim {
        vr.push(
            scope,
            CheckResult::fail(
                "suite.refused",
                "constructed dimension within --max-dim",
                format!("dimension {dim} exceeds {}", cfg.max_dim),
            ),
        );
        return false;
    }
    true
}

/// Hopf suite: all axioms for every input, plus the double-dual identity.
pub fn run_hopf(algebras: &[NamedAlgebra], _cfg: &SuiteConfig) -> Result<VerificationReport, Error> {
    let mut vr = VerificationReport::new("hopf");
    for a in algebras {
        vr.inputs.push(a.record());
        vr.absorb(&a.name, check_hopf_axioms(&a.hopf)?);
        let dd = a.hopf.to_dual().to_dual();
        vr.push(
            &a.name,
            CheckResult::from_counterexample(
                "hopf.double-dual",
                "dual(dual(H)) = H under the basis identification",
                (!check_hopf_iso(&a.hopf, &dd, &a.hopf.identity_map()))
                    .then(|| "structure maps differ".to_string()),
            ),
        );
    }
    Ok(vr)
}

/// Twisted-module suite: compatibility in both forms for every pair over
/// every algebra, specialization agreement, and user modules when given.
pub fn run_yd(
    algebras: &[NamedAlgebra],
    modules: &[(String, ModuleFile)],
    cfg: &SuiteConfig,
) -> Result<VerificationReport, Error> {
    let mut vr = VerificationReport::new("yd");
    for a in algebras {
        vr.inputs.push(a.record());
        let auts = automorphism_set(&a.hopf, &cfg.auts)?;
        let pairs = pair_set(&auts);
        let idxs = select(pairs.len(), cfg.selection);
        for pi in idxs {
            let p = &pairs[pi];
            let scope = format!("{}/H{}", a.name, pair_name(&auts, p));
            match ydmod::build_h_alpha_beta(&a.hopf, &p.alpha, &p.beta) {
                Ok(m) => {
                    vr.absorb(&scope, ydmod::check_module_axioms(&m)?);
                    vr.absorb(&scope, ydmod::check_comodule_axioms(&m)?);
                    vr.absorb(&scope, ydmod::check_yd_compat(&m)?);
                }
                Err(e) => {
                    let (s, c) = err_check(&scope, &e);
                    vr.push(&s, c);
                }
            }
        }

        // specialization agreement: the anti-twisted and l-twisted checkers
        // must agree with the general one, on passing and failing instances
        let s2 = a.hopf.antipode.then(&a.hopf.antipode)?;
        let id_aut = HopfAutomorphism::identity(&a.hopf);
        for l in 0..=2usize {
            let mut power = a.hopf.identity_map();
            for _ in 0..l {
                power = power.then(&s2)?;
            }
            let alpha = HopfAutomorphism::verified(&a.hopf, power)?;
            let m = ydmod::build_h_alpha_beta(&a.hopf, &alpha, &id_aut)?;
            let general = ydmod::check_yd_compat(&m)?.all_pass();
            let special = ydmod::check_l_twisted_form(&m, l)?;
            let scope = format!("{}/l={l}", a.name);
            vr.push(
                &scope,
                CheckResult::from_counterexample(
                    "yd.specialization-agrees",
                    "the S^{2l}-twisted checker agrees with the general one",
                    (general != special).then(|| "verdicts differ".to_string()),
                ),
            );
            if l == 1 {
                let anti = ydmod::check_anti_yd_form(&m)?;
                vr.push(
                    &scope,
                    CheckResult::from_counterexample(
                        "yd.anti-specialization-agrees",
                        "the anti-twisted checker agrees with the general one",
                        (general != anti).then(|| "verdicts differ".to_string()),
                    ),
                );
            }
        }
        // a deliberately mislabeled module: both checkers must reject it
        if !s2.is_identity() {
            let honest = ydmod::build_h_alpha_beta(&a.hopf, &id_aut, &id_aut)?;
            let mislabeled = YDModule {
                component: GroupElementG::new(
                    HopfAutomorphism::verified(&a.hopf, s2.clone())?,
                    id_aut.clone(),
                ),
                ..honest
            };
            let report = ydmod::check_yd_compat(&mislabeled)?;
            let scope = format!("{}/mislabeled", a.name);
            vr.push(
                &scope,
                CheckResult::from_counterexample(
                    "yd.mislabeled-fails",
                    "a wrong component is detected by both compatibility forms",
                    report.all_pass().then(|| "mislabeled module passed".to_string()),
                ),
            );
            vr.push(
                &scope,
                CheckResult::from_counterexample(
                    "yd.forms-agree-on-failure",
                    "both compatibility forms reject together",
                    (!ydmod::equivalence_of_compat_forms(&mislabeled)?)
                        .then(|| "forms disagree".to_string()),
                ),
            );
        }
    }
    // user-supplied modules, verified over the first algebra
    if let Some(a) = algebras.first() {
        for (name, file) in modules {
            let scope = format!("{}/{}", a.name, name);
            match io::parse_module_unchecked(&a.hopf, file) {
                Ok(m) => {
                    vr.absorb(&scope, ydmod::check_module_axioms(&m)?);
                    vr.absorb(&scope, ydmod::check_comodule_axioms(&m)?);
                    vr.absorb(&scope, ydmod::check_yd_compat(&m)?);
                }
                Err(e) => {
                    let (s, c) = err_check(&scope, &e);
                    vr.push(&s, c);
                }
            }
        }
    }
    Ok(vr)
}

/// Category suite: group axioms, tensor products, conjugation coherence,
/// braiding naturality and invertibility, hexagons, duals with snakes.
pub fn run_tcategory(
    algebras: &[NamedAlgebra],
    cfg: &SuiteConfig,
) -> Result<VerificationReport, Error> {
    let mut vr = VerificationReport::new("tcategory");
    for a in algebras {
        vr.inputs.push(a.record());
        let auts = automorphism_set(&a.hopf, &cfg.auts)?;
        let unit = GroupElementG::unit(&a.hopf);
        let pairs = pair_set(&auts);
        vr.absorb(
            &format!("{}/G", a.name),
            tcat::check_group_axioms(&unit, &pairs),
        );

        // bounded corpora: pair checks over pairs of a capped aut set,
        // triple checks over a further-capped module list
        let capped_auts = cap(&auts, 3);
        let capped_pairs = pair_set(&capped_auts);
        let corpus = module_corpus(&a.hopf, &auts, &capped_pairs, true)?;
        let hex_budget = if a.hopf.dim > 4 { 4 } else { 6 };
        let hex_corpus = cap(&corpus, hex_budget);

        // per-module: compatibility of duals and all four snake identities
        for (name, m) in &corpus {
            let scope = format!("{}/{}", a.name, name);
            vr.absorb(&scope, tcat::check_duals(m)?);
        }

        // per-pair: tensor component law and compatibility, braiding
        let pair_idxs = select(corpus.len() * corpus.len(), cfg.selection);
        for flat in pair_idxs {
            let (mi, ni) = (flat / corpus.len(), flat % corpus.len());
            let (mn_name, m) = &corpus[mi];
            let (nn_name, n) = &corpus[ni];
            let scope = format!("{}/{}⊗{}", a.name, mn_name, nn_name);
            let t = tcat::tensor_module(m, n)?;
            vr.push(
                &scope,
                CheckResult::from_counterexample(
                    "tensor.component",
                    "M⊗N lands in component p∗q",
                    (t.component != tcat::g_mul(&m.component, &n.component))
                        .then(|| "component mismatch".to_string()),
                ),
            );
            vr.absorb(&scope, ydmod::check_yd_compat(&t)?);
            vr.absorb(&scope, tcat::check_braiding(m, n)?);
        }

        // conjugation coherence and braiding invariance over capped sets
        let conj_ps = cap(&capped_pairs, 4);
        let conj_mods = cap(&corpus, 4);
        for (pi, p) in conj_ps.iter().enumerate() {
            for (qi, q) in conj_ps.iter().enumerate() {
                for (name, n) in &conj_mods {
                    let scope = format!("{}/conj(p{pi},p{qi},{name})", a.name);
                    vr.push(
                        &scope,
                        CheckResult::from_counterexample(
                            "conj.composes",
                            "^{p∗q}N = ^p(^qN)",
                            (!tcat::conjugation_composes(p, q, n)?)
                                .then(|| "objects differ".to_string()),
                        ),
                    );
                }
            }
            for (mn, m) in &conj_mods {
                for (nn, n) in &conj_mods {
                    let scope = format!("{}/conj(p{pi},{mn},{nn})", a.name);
                    vr.push(
                        &scope,
                        CheckResult::from_counterexample(
                            "conj.distributes",
                            "^p(M⊗N) = ^pM ⊗ ^pN",
                            (!tcat::conjugation_distributes(p, m, n)?)
                                .then(|| "objects differ".to_string()),
                        ),
                    );
                    vr.push(
                        &scope,
                        CheckResult::from_counterexample(
                            "braid.conjugation-invariant",
                            "c_{^pM,^pN} = c_{M,N}",
                            (!tcat::check_braiding_conjugation_invariance(p, m, n)?)
                                .then(|| "matrices differ".to_string()),
                        ),
                    );
                }
            }
            // conjugation is the identity on morphism matrices
            if let Some((name, m)) = conj_mods.iter().find(|(_, m)| m.dim > 1) {
                let phi = tcat::YDMorphism {
                    source: m.clone(),
                    target: m.clone(),
                    map: m.identity_map(),
                };
                let scope = format!("{}/conj-mor(p{pi},{name})", a.name);
                vr.push(
                    &scope,
                    CheckResult::from_counterexample(
                        "conj.identity-on-morphisms",
                        "a morphism matrix stays a morphism after conjugation",
                        (!tcat::check_conjugation_on_morphisms(p, &phi)?)
                            .then(|| "transport fails".to_string()),
                    ),
                );
            }
        }

        // strict associativity of the tensor product on a fixed triple
        if corpus.len() >= 3 {
            let (m, n, p) = (&corpus[0].1, &corpus[1].1, &corpus[2].1);
            let left = tcat::tensor_module(&tcat::tensor_module(m, n)?, p)?;
            let right = tcat::tensor_module(m, &tcat::tensor_module(n, p)?)?;
            vr.push(
                &format!("{}/assoc", a.name),
                CheckResult::from_counterexample(
                    "tensor.strictly-associative",
                    "(M⊗N)⊗P = M⊗(N⊗P) on structure tensors",
                    (!left.same_object(&right)).then(|| "objects differ".to_string()),
                ),
            );
            let k = YDModule::trivial(a.hopf.clone());
            let m1 = &corpus[1].1;
            vr.push(
                &format!("{}/unit-object", a.name),
                CheckResult::from_counterexample(
                    "tensor.unit-object",
                    "M⊗k = M = k⊗M on structure tensors",
                    (!(tcat::tensor_module(m1, &k)?.same_object(m1)
                        && tcat::tensor_module(&k, m1)?.same_object(m1)))
                    .then(|| "objects differ".to_string()),
                ),
            );
        }

        // hexagons over the capped triple set
        let total = hex_corpus.len().pow(3);
        let idxs = select(total, cfg.selection);
        for flat in idxs {
            let n3 = hex_corpus.len();
            let (i, j, k) = (flat / (n3 * n3), (flat / n3) % n3, flat % n3);
            let scope = format!(
                "{}/hex({},{},{})",
                a.name, hex_corpus[i].0, hex_corpus[j].0, hex_corpus[k].0
            );
            vr.absorb(
                &scope,
                tcat::verify_hexagons(&hex_corpus[i].1, &hex_corpus[j].1, &hex_corpus[k].1)?,
            );
        }
    }
    Ok(vr)
}

/// Double suite: the Drinfeld double with all quasitriangularity checks,
/// bicomodule structures, and the module round trip.
pub fn run_double(
    algebras: &[NamedAlgebra],
    cfg: &SuiteConfig,
) -> Result<VerificationReport, Error> {
    let mut vr = VerificationReport::new("double");
    for a in algebras {
        vr.inputs.push(a.record());
        if !check_budget(&mut vr, &a.name, a.hopf.dim * a.hopf.dim, cfg) {
            continue;
        }
        let double = dcp::build_drinfeld_double(&a.hopf)?;
        vr.absorb(&a.name, dcp::check_drinfeld_double(&double)?);

        let auts = automorphism_set(&a.hopf, &cfg.auts)?;
        let pairs = pair_set(&cap(&auts, 3));
        let idxs = select(pairs.len(), cfg.selection);
        for piidx in idxs {
            let p = &pairs[piidx];
            let scope = format!("{}/A{}", a.name, pair_name(&auts, p));
            let bico = dcp::build_h_ab_bicomodule(&a.hopf, &p.alpha, &p.beta)?;
            vr.absorb(&scope, dcp::check_bicomodule(&bico, &a.hopf)?);
            let alg = dcp::diagonal_crossed_product(&a.hopf, &bico)?;
            vr.absorb(&scope, alg.check());

            // the general-datum compatibility agrees with the
            // component-specific checker on H(α,β)
            let m0 = ydmod::build_h_alpha_beta(&a.hopf, &p.alpha, &p.beta)?;
            let datum_action = m0.action.with_legs(
                vec![bico.algebra.alg_leg(), m0.mod_leg()],
                vec![m0.mod_leg()],
            )?;
            let datum = dcp::check_yd_datum_module(&bico, &a.hopf, &datum_action, &m0.coaction)?;
            let specific_pass = ydmod::check_yd_compat(&m0)?.all_pass();
            let datum_pass = datum.check("datum.compat-one").map(|c| c.pass).unwrap_or(false);
            vr.absorb(&scope, datum);
            vr.push(
                &scope,
                CheckResult::from_counterexample(
                    "datum.matches-component-checker",
                    "the datum and component compatibility checkers agree",
                    (specific_pass != datum_pass).then(|| "verdicts differ".to_string()),
                ),
            );

            // the module round trip, for every corpus module living in
            // this component
            let mut component_modules =
                vec![("H".to_string(), ydmod::build_h_alpha_beta(&a.hopf, &p.alpha, &p.beta)?)];
            if p.is_unit() {
                component_modules.push(("k".to_string(), YDModule::trivial(a.hopf.clone())));
            }
            if !p.is_unit() {
                if let Some(pair) =
                    pii::find_pairs_in_involution(&a.hopf, &p.alpha, &p.beta)?.first()
                {
                    component_modules
                        .push(("kg".to_string(), ydmod::build_pii_module(&a.hopf, pair, 1)?));
                }
            }
            for (mname, m) in &component_modules {
                let scope = format!("{scope}/{mname}");
                match dcp::yd_to_dcp_module(m, &alg) {
                    Ok(dcp_m) => {
                        vr.absorb(&scope, dcp_m.check()?);
                        let back = dcp::dcp_module_to_yd(&a.hopf, &dcp_m, m.component.clone())?;
                        vr.push(
                            &scope,
                            CheckResult::from_counterexample(
                                "dcp.round-trip",
                                "yd→module→yd is the identity on structure tensors",
                                (back.action != m.action || back.coaction != m.coaction)
                                    .then(|| "structures differ".to_string()),
                            ),
                        );
                        let again = dcp::yd_to_dcp_module(&back, &alg)?;
                        vr.push(
                            &scope,
                            CheckResult::from_counterexample(
                                "dcp.round-trip-module",
                                "module→yd→module is the identity on the action",
                                (again.action != dcp_m.action)
                                    .then(|| "actions differ".to_string()),
                            ),
                        );
                    }
                    Err(e) => {
                        let (s, c) = err_check(&scope, &e);
                        vr.push(&s, c);
                    }
                }
            }

            // the double coacts on the crossed product
            let dbico = dcp::dh_bicomodule_on_a(&a.hopf, &p.alpha, &p.beta, &double)?;
            vr.absorb(
                &format!("{scope}/over-D"),
                dcp::check_bicomodule(&dbico, &double.hopf)?,
            );
        }
    }
    Ok(vr)
}

/// T-coalgebra suite: component family, comultiplications, conjugation,
/// antipodes, R-matrices, and the representation equivalence.
pub fn run_dt(algebras: &[NamedAlgebra], cfg: &SuiteConfig) -> Result<VerificationReport, Error> {
    let mut vr = VerificationReport::new("dt");
    for a in algebras {
        vr.inputs.push(a.record());
        // exhaustive pairwise loops on components of dimension dim^2: keep
        // the default corpus at component dimension <= 16
        if !check_budget(&mut vr, &a.name, a.hopf.dim * a.hopf.dim, cfg)
            || a.hopf.dim * a.hopf.dim > 16
        {
            if a.hopf.dim * a.hopf.dim > 16 {
                vr.push(
                    &a.name,
                    CheckResult::pass(
                        "dt.skipped-large",
                        "component checks run on algebras of dimension <= 4 by default",
                    ),
                );
            }
            continue;
        }
        let dtc = dt::TCoalgebraData::new(a.hopf.clone())?;
        let auts = automorphism_set(&a.hopf, &cfg.auts)?;
        // generators: (a, id) and (id, a) for each non-identity automorphism
        let id_aut = HopfAutomorphism::identity(&a.hopf);
        let mut gens = Vec::new();
        for aut in auts.iter().skip(1).take(2) {
            gens.push(GroupElementG::new(aut.clone(), id_aut.clone()));
            gens.push(GroupElementG::new(id_aut.clone(), aut.clone()));
        }
        let family = dtc.closure(&gens, 16)?;
        let fam_name =
            |p: &GroupElementG| format!("p{}", family.iter().position(|x| x == p).unwrap_or(99));

        for p in &family {
            for q in &family {
                let scope = format!("{}/Δ[{},{}]", a.name, fam_name(p), fam_name(q));
                vr.absorb(&scope, dt::check_delta_multiplicative(&dtc, p, q)?);
                for r in &family {
                    let scope = format!(
                        "{}/Δ[{},{},{}]",
                        a.name,
                        fam_name(p),
                        fam_name(q),
                        fam_name(r)
                    );
                    vr.absorb(&scope, dt::check_delta_coassociative(&dtc, p, q, r)?);
                }
            }
            vr.absorb(
                &format!("{}/ε[{}]", a.name, fam_name(p)),
                dt::check_delta_counit(&dtc, p)?,
            );
            vr.absorb(
                &format!("{}/S[{}]", a.name, fam_name(p)),
                dt::check_antipode(&dtc, p)?,
            );
        }
        // conjugation checks over a capped family product
        let fam_cap = cap(&family, 3);
        for p in &fam_cap {
            for p2 in &fam_cap {
                for q in &fam_cap {
                    for r in &fam_cap {
                        let scope = format!(
                            "{}/φ[{},{},{},{}]",
                            a.name,
                            fam_name(p),
                            fam_name(p2),
                            fam_name(q),
                            fam_name(r)
                        );
                        vr.absorb(&scope, dt::check_phi(&dtc, p, p2, q, r)?);
                    }
                }
            }
        }
        // R-matrices: verified inverses, independence of the second index
        for p in &family {
            let (r0, _) = dtc.rmatrix(p, &family[0])?;
            for q in &family {
                let scope = format!("{}/R[{},{}]", a.name, fam_name(p), fam_name(q));
                let (r, _inv) = dtc.rmatrix(p, q)?;
                vr.push(
                    &scope,
                    CheckResult::pass("dt.r-invertible", "R_{p,q} has a verified two-sided inverse"),
                );
                vr.push(
                    &scope,
                    CheckResult::from_counterexample(
                        "dt.r-independent",
                        "R_{p,q} does not depend on q",
                        (r.data() != r0.data()).then(|| "coefficients differ".to_string()),
                    ),
                );
            }
        }
        // representation equivalence over the module corpus in the family
        let mut modules = vec![("k".to_string(), YDModule::trivial(a.hopf.clone()))];
        for p in &family {
            modules.push((
                format!("H[{}]", fam_name(p)),
                ydmod::build_h_alpha_beta(&a.hopf, &p.alpha, &p.beta)?,
            ));
        }
        let idxs = select(modules.len() * modules.len(), cfg.selection);
        for flat in idxs {
            let (mi, ni) = (flat / modules.len(), flat % modules.len());
            let scope = format!("{}/rep({},{})", a.name, modules[mi].0, modules[ni].0);
            vr.absorb(
                &scope,
                dt::verify_rep_equivalence(&dtc, &modules[mi].1, &modules[ni].1)?,
            );
        }
    }
    Ok(vr)
}

/// Pair-in-involution suite: the search, the untwisting functors, the
/// factorization through the one-dimensional module, and the algebra
/// isomorphism with the double.
pub fn run_pii(algebras: &[NamedAlgebra], cfg: &SuiteConfig) -> Result<VerificationReport, Error> {
    let mut vr = VerificationReport::new("pii");
    for a in algebras {
        vr.inputs.push(a.record());
        let auts = automorphism_set(&a.hopf, &cfg.auts)?;

        // the trivial pair proves every diagonal component untwists
        for (i, alpha) in auts.iter().enumerate() {
            let scope = format!("{}/diagonal(a{i})", a.name);
            match pii::trivial_pair(&a.hopf, alpha) {
                Ok(pair) => {
                    let m = ydmod::build_h_alpha_beta(&a.hopf, alpha, alpha)?;
                    vr.absorb(&scope, pii::check_functors(&m, &pair)?);
                }
                Err(e) => {
                    let (s, c) = err_check(&scope, &e);
                    vr.push(&s, c);
                }
            }
        }

        // full search over a capped pair set
        let pairs = pair_set(&cap(&auts, 3));
        let can_build_double = a.hopf.dim * a.hopf.dim <= cfg.max_dim;
        let double = if can_build_double {
            Some(dcp::build_drinfeld_double(&a.hopf)?)
        } else {
            None
        };
        for p in &pairs {
            let scope = format!("{}/pairs{}", a.name, pair_name(&auts, p));
            let found = pii::find_pairs_in_involution(&a.hopf, &p.alpha, &p.beta)?;
            // every returned pair re-verifies
            let all_valid = found
                .iter()
                .map(|pr| pr.satisfies_involution(&a.hopf))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .all(|x| x);
            vr.push(
                &scope,
                CheckResult::from_counterexample(
                    "pii.search-sound",
                    "every returned pair satisfies the involution identity",
                    (!all_valid).then(|| "an invalid pair was returned".to_string()),
                ),
            );
            let Some(pair) = found.first() else {
                continue;
            };
            let m = ydmod::build_h_alpha_beta(&a.hopf, &p.alpha, &p.beta)?;
            vr.absorb(&scope, pii::check_functors(&m, pair)?);
            vr.push(
                &scope,
                CheckResult::from_counterexample(
                    "pii.factorization",
                    "M = (_f k^g) ⊗ F(M) on structure tensors",
                    (!pii::check_factorization(&m, pair)?)
                        .then(|| "factorization fails".to_string()),
                ),
            );
            if let Some(double) = &double {
                let bico = dcp::build_h_ab_bicomodule(&a.hopf, &p.alpha, &p.beta)?;
                let twisted = dcp::diagonal_crossed_product(&a.hopf, &bico)?;
                vr.absorb(
                    &scope,
                    pii::check_pii_algebra_iso(&a.hopf, pair, double, &twisted)?,
                );
                vr.absorb(&scope, pii::check_iso_transport(&m, pair, double, &twisted)?);
            }
        }
    }
    Ok(vr)
}

/// Which suite to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    Hopf,
    Yd,
    Tcategory,
    Double,
    Dt,
    Pii,
    All,
}

impl std::str::FromStr for SuiteName {
    type Err = String;
    fn from_str(s: &str) -> Result<SuiteName, String> {
        Ok(match s {
            "hopf" => SuiteName::Hopf,
            "yd" => SuiteName::Yd,
            "tcategory" => SuiteName::Tcategory,
            "double" => SuiteName::Double,
            "dt" => SuiteName::Dt,
            "pii" => SuiteName::Pii,
            "all" => SuiteName::All,
            other => return Err(format!("unknown suite {other:?}")),
        })
    }
}

/// Runs one suite (or all of them in order) and stamps the duration.
pub fn run_suite(
    name: SuiteName,
    algebras: &[NamedAlgebra],
    modules: &[(String, ModuleFile)],
    cfg: &SuiteConfig,
) -> Result<VerificationReport, Error> {
    let start = std::time::Instant::now();
    let mut vr = match name {
        SuiteName::Hopf => run_hopf(algebras, cfg)?,
        SuiteName::Yd => run_yd(algebras, modules, cfg)?,
        SuiteName::Tcategory => run_tcategory(algebras, cfg)?,
        SuiteName::Double => run_double(algebras, cfg)?,
        SuiteName::Dt => run_dt(algebras, cfg)?,
        SuiteName::Pii => run_pii(algebras, cfg)?,
        SuiteName::All => {
            let mut all = VerificationReport::new("all");
            all.inputs = algebras.iter().map(|a| a.record()).collect();
            all.merge(run_hopf(algebras, cfg)?);
            all.merge(run_yd(algebras, modules, cfg)?);
            all.merge(run_tcategory(algebras, cfg)?);
            all.merge(run_double(algebras, cfg)?);
            all.merge(run_dt(algebras, cfg)?);
            all.merge(run_pii(algebras, cfg)?);
            all
        }
    };
    vr.duration = start.elapsed();
    Ok(vr)
}
