//! Scenario-level verdict engine: given a 4-manifold model, a configuration
//! of embedded surfaces and Seiberg-Witten data, run every applicable
//! obstruction check and report exact-arithmetic verdicts with witnesses.

use crate::cover::{
    cover_dimension, cover_exists, family_indices, normalize_pairing, BranchSphere, SphereConfig,
    SpinCFamily,
};
use crate::error::{Error, Result};
use crate::exactmath::modp::{modp_rank, ModP};
use crate::exactmath::rational::{rat_int, Rational};
use crate::plumbing::cusp_boundary_data;
use crate::swcalc::{
    dim_bound_check, partition_consistency, rp2_consistency, rp2_dimension_data, sw_p2_cases,
    sw_rp2_cases, DimBoundOutcome, P2Outcome, PartitionOutcome,
};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// The ambient 4-manifold: only the topological bookkeeping the theorems
/// consume. `h1_coprime` lists the primes p for which the order of H_1 is
/// known coprime to p (so H_1(X; Z_p) = 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourManifold {
    pub b_plus: i64,
    pub sigma: i64,
    pub simple_type: bool,
    pub h1_coprime: BTreeSet<u64>,
}

/// One spin-c basic-class record: pairings with the surface entries (in
/// order) and the Seiberg-Witten value mod p, plus the optional family of
/// values for the twisted structures of a cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicClass {
    pub pairings: Vec<i64>,
    pub sw_mod_p: u64,
    /// `SW(X, alpha_j + s) mod p` for `j = 0..p-1`, when a cover is named.
    pub sw_family: Option<Vec<u64>>,
    /// Moduli dimension of `(X, s)`; zero for a basic class of a
    /// simple-type manifold.
    pub d: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereEntry {
    /// Self-intersection is `-n`, `n > 0`.
    pub n: u64,
    pub class_mod_p: Vec<i64>,
    /// Normal weight for the branched cover, nonzero mod p.
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rp2Entry {
    pub euler: i64,
    pub class_mod_2: Vec<i64>,
    /// Restriction label of the spin-c structure to the boundary prism
    /// manifold: +1 or -1, when known.
    pub eps: Option<i64>,
    /// Whether the mod-2 class is the second Stiefel-Whitney class.
    pub is_w2: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Handedness {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspEntry {
    pub handedness: Handedness,
    pub self_intersection: i64,
    pub class_mod_2: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Surfaces {
    Spheres(Vec<SphereEntry>),
    Rp2(Vec<Rp2Entry>),
    Cusps(Vec<CuspEntry>),
}

impl Surfaces {
    pub fn len(&self) -> usize {
        match self {
            Surfaces::Spheres(v) => v.len(),
            Surfaces::Rp2(v) => v.len(),
            Surfaces::Cusps(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub manifold: FourManifold,
    pub surfaces: Surfaces,
    pub sw: Vec<BasicClass>,
    /// Prime degree of the branched cover under consideration, when any.
    pub cover_p: Option<u64>,
}

impl Scenario {
    /// Validates the scenario and applies the ingest normalizations
    /// (sphere pairings are made nonnegative by reorienting the spheres).
    pub fn new(
        manifold: FourManifold,
        surfaces: Surfaces,
        sw: Vec<BasicClass>,
        cover_p: Option<u64>,
    ) -> Result<Scenario> {
        let mut scenario = Scenario {
            manifold,
            surfaces,
            sw,
            cover_p,
        };
        scenario.validate()?;
        if let Surfaces::Spheres(_) = scenario.surfaces {
            for class in &mut scenario.sw {
                for c in &mut class.pairings {
                    *c = c.abs();
                }
            }
        }
        Ok(scenario)
    }

    fn validate(&self) -> Result<()> {
        if self.manifold.b_plus <= 1 {
            return Err(Error::MalformedScenario(format!(
                "b_plus = {} must exceed 1",
                self.manifold.b_plus
            )));
        }
        if let Some(p) = self.cover_p {
            ModP::zero(p).map_err(|_| {
                Error::MalformedScenario(format!("cover degree {p} is not prime"))
            })?;
        }
        let r = self.surfaces.len();
        let width = match &self.surfaces {
            Surfaces::Spheres(v) => {
                for e in v {
                    if e.n == 0 {
                        return Err(Error::MalformedScenario(
                            "sphere self-intersections must be negative".into(),
                        ));
                    }
                }
                v.first().map_or(0, |e| e.class_mod_p.len())
            }
            Surfaces::Rp2(v) => {
                for e in v {
                    if let Some(eps) = e.eps {
                        if eps != 1 && eps != -1 {
                            return Err(Error::MalformedScenario(format!(
                                "eps label {eps} must be +1 or -1"
                            )));
                        }
                    }
                }
                v.first().map_or(0, |e| e.class_mod_2.len())
            }
            Surfaces::Cusps(v) => v.first().map_or(0, |e| e.class_mod_2.len()),
        };
        let widths_ok = match &self.surfaces {
            Surfaces::Spheres(v) => v.iter().all(|e| e.class_mod_p.len() == width),
            Surfaces::Rp2(v) => v.iter().all(|e| e.class_mod_2.len() == width),
            Surfaces::Cusps(v) => v.iter().all(|e| e.class_mod_2.len() == width),
        };
        if !widths_ok {
            return Err(Error::MalformedScenario(
                "class coordinate tuples have mismatched lengths".into(),
            ));
        }
        for (i, class) in self.sw.iter().enumerate() {
            if class.pairings.len() != r {
                return Err(Error::MalformedScenario(format!(
                    "basic class {i} has {} pairings for {r} surfaces",
                    class.pairings.len()
                )));
            }
            if self.manifold.simple_type && class.sw_mod_p != 0 && class.d != 0 {
                return Err(Error::MalformedScenario(format!(
                    "basic class {i}: simple type with SW != 0 forces d = 0, got {}",
                    class.d
                )));
            }
            if let Some(family) = &class.sw_family {
                let p = self.cover_p.ok_or_else(|| {
                    Error::MalformedScenario(
                        "an SW family needs a cover degree to index it".into(),
                    )
                })?;
                if family.len() != p as usize {
                    return Err(Error::MalformedScenario(format!(
                        "basic class {i}: SW family has {} entries, expected {p}",
                        family.len()
                    )));
                }
            }
        }
        Ok(())
    }

    /// The prime that mod-p hypotheses refer to: the cover degree when one
    /// is named, otherwise 2.
    pub fn prime(&self) -> u64 {
        self.cover_p.unwrap_or(2)
    }

    fn h1_coprime(&self, p: u64) -> bool {
        self.manifold.h1_coprime.contains(&p)
    }
}

/// Relation kinds for exact-arithmetic witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Lt,
    Ge,
    Eq,
    /// `lhs` is congruent to one of the residues modulo `modulus`
    /// (an integrality demand when `modulus = 1` and residues `[0]`).
    CongruentOneOfMod { modulus: i64, residues: Vec<i64> },
}

/// An inequality or congruence instantiated with the scenario's numbers.
/// Obstructed verdicts carry a witness that evaluates to false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub description: String,
    pub lhs: Rational,
    pub rel: Rel,
    pub rhs: Rational,
}

impl Witness {
    pub fn holds(&self) -> bool {
        match &self.rel {
            Rel::Le => self.lhs <= self.rhs,
            Rel::Lt => self.lhs < self.rhs,
            Rel::Ge => self.lhs >= self.rhs,
            Rel::Eq => self.lhs == self.rhs,
            Rel::CongruentOneOfMod { modulus, residues } => residues.iter().any(|&r| {
                let diff = self.lhs.clone() - rat_int(r);
                diff.is_integer()
                    && diff
                        .to_integer()
                        .mod_floor(&(*modulus).into())
                        .is_zero()
            }),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds() { "TRUE" } else { "FALSE" };
        match &self.rel {
            Rel::Le => write!(f, "{}: {} <= {} is {}", self.description, self.lhs, self.rhs, verdict),
            Rel::Lt => write!(f, "{}: {} < {} is {}", self.description, self.lhs, self.rhs, verdict),
            Rel::Ge => write!(f, "{}: {} >= {} is {}", self.description, self.lhs, self.rhs, verdict),
            Rel::Eq => write!(f, "{}: {} = {} is {}", self.description, self.lhs, self.rhs, verdict),
            Rel::CongruentOneOfMod { modulus, residues } => {
                let set = residues
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(", ");
                write!(
                    f,
                    "{}: {} in {{{}}} (mod {}) is {}",
                    self.description, self.lhs, set, modulus, verdict
                )
            }
        }
    }
}

/// A construction step for a non-simple-type verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecipeStep {
    BranchedCover { degree: u64 },
    BlowUp,
    RemoveSurfaceNeighborhood(String),
    AttachPlumbing(String),
}

impl fmt::Display for RecipeStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecipeStep::BranchedCover { degree } => {
                write!(f, "take the degree-{degree} branched cover")
            }
            RecipeStep::BlowUp => write!(f, "blow up once and sum the surface with the (-1)-sphere"),
            RecipeStep::RemoveSurfaceNeighborhood(s) => {
                write!(f, "remove a tubular neighbourhood of {s}")
            }
            RecipeStep::AttachPlumbing(s) => write!(f, "attach {s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub steps: Vec<RecipeStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Consistent,
    Obstructed,
    NonSimpleTypeConstruction(Recipe),
    NotApplicable,
}

impl Status {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, Status::Obstructed)
    }
}

/// Outcome of one named check, with its audit trail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub check: &'static str,
    pub status: Status,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn not_applicable(check: &'static str, reason: impl Into<String>) -> Verdict {
        Verdict {
            check,
            status: Status::NotApplicable,
            witness: None,
            notes: vec![reason.into()],
        }
    }
}

fn witness_le(description: impl Into<String>, lhs: i64, rhs: i64) -> Witness {
    Witness {
        description: description.into(),
        lhs: rat_int(lhs),
        rel: Rel::Le,
        rhs: rat_int(rhs),
    }
}

fn witness_lt(description: impl Into<String>, lhs: i64, rhs: i64) -> Witness {
    Witness {
        description: description.into(),
        lhs: rat_int(lhs),
        rel: Rel::Lt,
        rhs: rat_int(rhs),
    }
}

/// Mod-p linear dependence pattern the multi-surface theorems hypothesize:
/// the full set of classes is dependent but every r-1 subset is
/// independent.
fn dependence_hypotheses(classes: &[Vec<i64>], p: u64) -> Result<(bool, bool)> {
    let r = classes.len();
    let full: Vec<Vec<i64>> = classes.to_vec();
    let dependent = modp_rank(&full, p)? < r;
    let mut leave_one_out_independent = true;
    for skip in 0..r {
        let subset: Vec<Vec<i64>> = classes
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, v)| v.clone())
            .collect();
        if modp_rank(&subset, p)? != r - 1 {
            leave_one_out_independent = false;
            break;
        }
    }
    Ok((dependent, leave_one_out_independent))
}

fn classes_sum_zero(classes: &[Vec<i64>], p: u64) -> bool {
    if classes.is_empty() {
        return true;
    }
    let width = classes[0].len();
    (0..width).all(|k| {
        classes
            .iter()
            .map(|c| c[k])
            .sum::<i64>()
            .rem_euclid(p as i64)
            == 0
    })
}

/// Basic classes with nonvanishing SW mod p, paired with their index.
fn nonzero_sw(scenario: &Scenario, p: u64) -> Vec<(usize, &BasicClass)> {
    scenario
        .sw
        .iter()
        .enumerate()
        .filter(|(_, c)| c.sw_mod_p % p != 0)
        .collect()
}

/// Adjunction-type bound for a single sphere of class divisible by p:
/// `|<c(s), [S]>| + [S]^2 < 0` must be strict.
pub fn check_sphere_single(scenario: &Scenario) -> Result<Verdict> {
    const CHECK: &str = "sphere-adjunction";
    let Surfaces::Spheres(entries) = &scenario.surfaces else {
        return Ok(Verdict::not_applicable(CHECK, "no sphere configuration"));
    };
    if entries.len() != 1 {
        return Ok(Verdict::not_applicable(
            CHECK,
            format!("needs exactly one sphere, found {}", entries.len()),
        ));
    }
    let p = scenario.prime();
    if !scenario.manifold.simple_type {
        return Ok(Verdict::not_applicable(CHECK, "manifold is not of simple type"));
    }
    if !scenario.h1_coprime(p) {
        return Ok(Verdict::not_applicable(
            CHECK,
            format!("H_1(X; Z_{p}) = 0 not asserted"),
        ));
    }
    let entry = &entries[0];
    if !entry.class_mod_p.iter().all(|&c| c.rem_euclid(p as i64) == 0) {
        return Ok(Verdict::not_applicable(
            CHECK,
            format!("[S] is not divisible by {p}"),
        ));
    }
    let witnesses = nonzero_sw(scenario, p);
    if witnesses.is_empty() {
        return Ok(Verdict::not_applicable(
            CHECK,
            format!("no basic class with SW != 0 mod {p}"),
        ));
    }
    let mut notes = vec![
        format!("hypotheses: simple type, H_1(X; Z_{p}) = 0, [S] divisible by {p} (all asserted or checked)"),
    ];
    let mut worst: Option<Witness> = None;
    for (idx, class) in witnesses {
        let c = class.pairings[0].abs();
        let value = c - entry.n as i64;
        let w = witness_lt(
            format!("basic class {idx}: |<c(s), [S]>| + [S]^2 = {c} - {}", entry.n),
            value,
            0,
        );
        notes.push(w.to_string());
        if !w.holds() && worst.is_none() {
            worst = Some(w);
        }
    }
    Ok(match worst {
        Some(w) => Verdict {
            check: CHECK,
            status: Status::Obstructed,
            witness: Some(w),
            notes,
        },
        None => Verdict {
            check: CHECK,
            status: Status::Consistent,
            witness: Some(witness_lt(
                "adjunction bound for the divisible sphere",
                witnesses_max_value(scenario, entries, p),
                0,
            )),
            notes,
        },
    })
}

fn witnesses_max_value(scenario: &Scenario, entries: &[SphereEntry], p: u64) -> i64 {
    nonzero_sw(scenario, p)
        .iter()
        .map(|(_, class)| {
            class
                .pairings
                .iter()
                .zip(entries)
                .map(|(c, e)| c.abs() - e.n as i64)
                .sum::<i64>()
        })
        .max()
        .unwrap_or(i64::MIN)
}

/// Sum bound for several disjoint spheres with dependent classes:
/// `sum_i |<c(s), [S_i]>| + [S_i]^2 <= 4 - 2r`.
pub fn check_sphere_multi(scenario: &Scenario) -> Result<Verdict> {
    const CHECK: &str = "multi-sphere-adjunction";
    let Surfaces::Spheres(entries) = &scenario.surfaces else {
        return Ok(Verdict::not_applicable(CHECK, "no sphere configuration"));
    };
    if entries.is_empty() {
        return Ok(Verdict::not_applicable(CHECK, "no spheres listed"));
    }
    let p = scenario.prime();
    if !scenario.manifold.simple_type {
        return Ok(Verdict::not_applicable(CHECK, "manifold is not of simple type"));
    }
    if !scenario.h1_coprime(p) {
        return Ok(Verdict::not_applicable(
            CHECK,
            format!("H_1(X; Z_{p}) = 0 not asserted"),
        ));
    }
    let classes: Vec<Vec<i64>> = entries.iter().map(|e| e.class_mod_p.clone()).collect();
    let (dependent, independent) = dependence_hypotheses(&classes, p)?;
    if !dependent || !independent {
        return Ok(Verdict::not_applicable(
            CHECK,
            format!(
                "class hypotheses fail mod {p}: dependent = {dependent}, any r-1 independent = {independent}"
            ),
        ));
    }
    let witnesses = nonzero_sw(scenario, p);
    if witnesses.is_empty() {
        return Ok(Verdict::not_applicable(
            CHECK,
            format!("no basic class with SW != 0 mod {p}"),
        ));
    }
    let r = entries.len() as i64;
    let bound = 4 - 2 * r;
    let mut notes = vec![format!(
        "classes are dependent mod {p} with every {}-subset independent",
        r - 1
    )];
    let mut worst: Option<Witness> = None;
    for (idx, class) in witnesses {
        let total: i64 = class
            .pairings
            .iter()
            .zip(entries)
            .map(|(c, e)| c.abs() - e.n as i64)
            .sum();
        let w = witness_le(
            format!("basic class {idx}: sum of |<c(s), [S_i]>| + [S_i]^2 = {total}"),
            total,
            bound,
        );
        notes.push(w.to_string());
        if !w.holds() && worst.is_none() {
            worst = Some(w);
        }
    }
    Ok(match worst {
        Some(w) => Verdict {
            check: CHECK,
            status: Status::Obstructed,
            witness: Some(w),
            notes,
        },
        None => Verdict {
            check: CHECK,
            status: Status::Consistent,
            witness: Some(witness_le(
                "sphere configuration sum bound",
                witnesses_max_value(scenario, entries, p),
                bound,
            )),
            notes,
        },
    })
}

/// The double-cover case analysis for sphere configurations at p = 2.
pub fn check_double_cover_sw(scenario: &Scenario) -> Result<Verdict> {
    const CHECK: &str = "double-cover-sw";
    let Surfaces::Spheres(entries) = &scenario.surfaces else {
        return Ok(Verdict::not_applicable(CHECK, "no sphere configuration"));
    };
    if scenario.prime() != 2 {
        return Ok(Verdict::not_applicable(CHECK, "cover degree is not 2"));
    }
    if entries.is_empty() {
        return Ok(Verdict::not_applicable(CHECK, "no spheres listed"));
    }
    if !scenario.manifold.simple_type || !scenario.h1_coprime(2) {
        return Ok(Verdict::not_applicable(
            CHECK,
            "needs simple type and H_1(X; Z_2) = 0",
        ));
    }
    if entries.iter().any(|e| e.n % 2 != 0) {
        return Ok(Verdict::not_applicable(
            CHECK,
            "branch spheres must have even self-intersection",
        ));
    }
    let classes: Vec<Vec<i64>> = entries.iter().map(|e| e.class_mod_p.clone()).collect();
    if !classes_sum_zero(&classes, 2) {
        return Ok(Verdict::not_applicable(
            CHECK,
            "[S_1] + ... + [S_r] != 0 mod 2",
        ));
    }
    let Some((idx, class)) = nonzero_sw(scenario, 2).into_iter().next() else {
        return Ok(Verdict::not_applicable(CHECK, "no basic class with odd SW"));
    };
    let Some(family) = &class.sw_family else {
        return Ok(Verdict::not_applicable(
            CHECK,
            "SW(X, L tensor s) not supplied (missing sw_family)",
        ));
    };
    let c: Vec<i64> = class.pairings.iter().map(|&c| c.abs()).collect();
    let n: Vec<u64> = entries.iter().map(|e| e.n).collect();
    let sw_s = ModP::new(family[0] as i64, 2)?;
    let sw_ls = ModP::new(family[1] as i64, 2)?;
    let report = sw_p2_cases(&c, &n, sw_s, sw_ls)?;
    let r = entries.len() as i64;
    let mut notes = vec![format!(
        "basic class {idx}: T = sum c_i + sum [S_i]^2 = {}, d(cover) = {}",
        report.t, report.d_cover
    )];
    let verdict = match report.outcome {
        P2Outcome::Obstructed { bound } => {
            let w = witness_le("double cover bound: T", report.t, bound);
            notes.push(w.to_string());
            Verdict {
                check: CHECK,
                status: Status::Obstructed,
                witness: Some(w),
                notes,
            }
        }
        P2Outcome::DimZero { sw_cover } => {
            notes.push(format!(
                "d(cover) = 0 and SW(cover) = SW(X, s) + SW(X, L tensor s) = {sw_cover} (mod 2)"
            ));
            Verdict {
                check: CHECK,
                status: Status::Consistent,
                witness: Some(witness_le("double cover bound: T", report.t, 4 - 2 * r)),
                notes,
            }
        }
        P2Outcome::NonSimpleType { sw_cover, conflicts } => {
            if conflicts.is_empty() {
                notes.push(format!(
                    "SW(cover) = {sw_cover} (mod 2) in moduli dimension 2: the cover is not of simple type"
                ));
                Verdict {
                    check: CHECK,
                    status: Status::NonSimpleTypeConstruction(Recipe {
                        steps: vec![RecipeStep::BranchedCover { degree: 2 }],
                    }),
                    witness: Some(witness_le("double cover bound: T", report.t, 4 - 2 * r)),
                    notes,
                }
            } else {
                notes.extend(conflicts.iter().cloned());
                let w = Witness {
                    description: "supplied SW values must match the forced odd values".into(),
                    lhs: rat_int(i64::from(sw_s.is_zero() || sw_ls.is_zero())),
                    rel: Rel::Eq,
                    rhs: rat_int(0),
                };
                Verdict {
                    check: CHECK,
                    status: Status::Obstructed,
                    witness: Some(w),
                    notes,
                }
            }
        }
        P2Outcome::Impossible { reason } => {
            let w = Witness {
                description: reason,
                lhs: rat_int(r),
                rel: Rel::Ge,
                rhs: rat_int(4),
            };
            notes.push(w.to_string());
            Verdict {
                check: CHECK,
                status: Status::Obstructed,
                witness: Some(w),
                notes,
            }
        }
        P2Outcome::NoStatement => {
            notes.push("moduli dimension of the cover is odd; no covering formula applies".into());
            Verdict {
                check: CHECK,
                status: Status::Consistent,
                witness: Some(witness_le("double cover bound: T", report.t, 4 - 2 * r)),
                notes,
            }
        }
        P2Outcome::Vanishes => {
            notes.push("d(cover) < 0, so SW(cover) = 0".into());
            Verdict {
                check: CHECK,
                status: Status::Consistent,
                witness: Some(witness_le("double cover bound: T", report.t, 4 - 2 * r)),
                notes,
            }
        }
    };
    Ok(verdict)
}

/// The covering-formula pipeline: cover existence, APS indices of the
/// spin-c family, exact dimension, and partition consistency. Returns the
/// partition verdict and the dimension-bound verdict.
pub fn check_cover_pipeline(scenario: &Scenario) -> Result<(Verdict, Verdict)> {
    const PARTITION: &str = "cover-partition";
    const BOUND: &str = "cover-dimension-bound";
    let na = |reason: &str| {
        (
            Verdict::not_applicable(PARTITION, reason),
            Verdict::not_applicable(BOUND, reason),
        )
    };
    let Surfaces::Spheres(entries) = &scenario.surfaces else {
        return Ok(na("no sphere configuration"));
    };
    let Some(p) = scenario.cover_p else {
        return Ok(na("no cover requested"));
    };
    if entries.is_empty() {
        return Ok(na("no spheres listed"));
    }
    let Some((idx, class)) = scenario
        .sw
        .iter()
        .enumerate()
        .find(|(_, c)| c.sw_family.is_some())
    else {
        return Ok(na("no basic class carries an SW family"));
    };
    let family_values = class.sw_family.as_ref().unwrap();
    let config = SphereConfig::new(
        p,
        entries
            .iter()
            .map(|e| BranchSphere {
                n: e.n,
                phi: e.weight,
                class_mod_p: e.class_mod_p.clone(),
            })
            .collect(),
    )?;
    let existence = cover_exists(&config, scenario.h1_coprime(p))?;
    if !existence.exists {
        return Ok(na(&format!("branched cover does not exist: {}", existence.reason)));
    }
    let mut notes = vec![
        format!("basic class {idx}: {}", existence.reason),
        format!(
            "pairings normalized into (-n_i, n_i]: ({})",
            class
                .pairings
                .iter()
                .zip(entries)
                .map(|(&c, e)| normalize_pairing(e.n, c).to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
    ];
    let sw_vec: Vec<ModP> = family_values
        .iter()
        .map(|&v| ModP::new(v as i64, p))
        .collect::<Result<_>>()?;
    let family = SpinCFamily {
        c: class
            .pairings
            .iter()
            .zip(entries)
            .map(|(&c, e)| normalize_pairing(e.n, c))
            .collect(),
        d_x: class.d,
        b_plus: scenario.manifold.b_plus,
        sw_mod_p: sw_vec.clone(),
    };
    let pairs: Vec<(u64, i64)> = entries
        .iter()
        .zip(&family.c)
        .map(|(e, &c)| (e.n, c))
        .collect();

    let integrality_witness = |value: &str, what: &str| Witness {
        description: format!("{what} must be an integer"),
        lhs: value.parse::<Rational>().unwrap_or_else(|_| rat_int(0)),
        rel: Rel::CongruentOneOfMod {
            modulus: 1,
            residues: vec![0],
        },
        rhs: rat_int(0),
    };

    let d_vec = match family_indices(p, &config, &family) {
        Ok(d) => d,
        Err(Error::NonIntegralIndex { j, value }) => {
            let w = integrality_witness(&value, &format!("APS index d_{j}"));
            notes.push(format!(
                "CONTRADICTION: APS index d_{j} = {value} is not an integer; the scenario is impossible"
            ));
            let verdict = Verdict {
                check: PARTITION,
                status: Status::Obstructed,
                witness: Some(w),
                notes,
            };
            return Ok((
                verdict,
                Verdict::not_applicable(BOUND, "family indices are non-integral"),
            ));
        }
        Err(e) => return Err(e),
    };
    let d_cover = match cover_dimension(p, class.d, &pairs) {
        Ok(d) => d,
        Err(Error::NonIntegralDimension { value }) => {
            let w = integrality_witness(&value, "d(cover)");
            notes.push(format!(
                "CONTRADICTION: d(cover) = {value} is not an integer; the scenario is impossible"
            ));
            let verdict = Verdict {
                check: PARTITION,
                status: Status::Obstructed,
                witness: Some(w),
                notes,
            };
            return Ok((
                verdict,
                Verdict::not_applicable(BOUND, "cover dimension is non-integral"),
            ));
        }
        Err(e) => return Err(e),
    };
    notes.push(format!(
        "APS indices d_j = ({}), d(cover) = {d_cover}",
        d_vec.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
    ));

    let k = sw_vec.iter().filter(|v| !v.is_zero()).count() as u64;
    let bound_verdict = {
        let mut notes = vec![format!(
            "k = {k} family members with SW != 0 mod {p}; d(cover) = {d_cover}"
        )];
        match dim_bound_check(k, d_cover) {
            DimBoundOutcome::ViolatesBound => {
                let w = witness_le("dimension bound: d(cover)", d_cover, 2 * k as i64 - 2);
                notes.push(w.to_string());
                Verdict {
                    check: BOUND,
                    status: Status::Obstructed,
                    witness: Some(w),
                    notes,
                }
            }
            DimBoundOutcome::NonSimpleType => {
                notes.push(
                    "d(cover) meets the bound 2k - 2 with k > 1: the cover is not of simple type"
                        .into(),
                );
                Verdict {
                    check: BOUND,
                    status: Status::NonSimpleTypeConstruction(Recipe {
                        steps: vec![RecipeStep::BranchedCover { degree: p }],
                    }),
                    witness: Some(witness_le(
                        "dimension bound: d(cover)",
                        d_cover,
                        2 * k as i64 - 2,
                    )),
                    notes,
                }
            }
            DimBoundOutcome::Ok => Verdict {
                check: BOUND,
                status: Status::Consistent,
                witness: Some(if k > 0 {
                    witness_le("dimension bound: d(cover)", d_cover, 2 * k as i64 - 2)
                } else {
                    witness_le("dimension bound is vacuous for k = 0", 0, 0)
                }),
                notes,
            },
        }
    };

    let partition_verdict = if d_cover < 0 {
        notes.push("d(cover) < 0: SW(cover) = 0 and there is nothing to compare".into());
        Verdict {
            check: PARTITION,
            status: Status::Consistent,
            witness: Some(witness_lt("d(cover)", d_cover, 0)),
            notes,
        }
    } else {
        let m = num_integer::Integer::div_ceil(&d_cover, &2) as u64;
        match partition_consistency(p, m, &d_vec, scenario.manifold.b_plus, &sw_vec)? {
            PartitionOutcome::Consistent(value) => {
                let unit = if p != 2 { " (up to a unit in Z_p^*)" } else { "" };
                notes.push(format!(
                    "all compositions of m = {m} agree: SW(cover) = {value} (mod {p}){unit}"
                ));
                Verdict {
                    check: PARTITION,
                    status: Status::Consistent,
                    witness: Some(Witness {
                        description: format!("composition-independent value{unit}"),
                        lhs: rat_int(value.value() as i64),
                        rel: Rel::Eq,
                        rhs: rat_int(value.value() as i64),
                    }),
                    notes,
                }
            }
            PartitionOutcome::Contradiction { first, second } => {
                let w = Witness {
                    description: format!(
                        "compositions ({}) and ({}) must agree",
                        first
                            .0
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(", "),
                        second
                            .0
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                    lhs: rat_int(first.1.value() as i64),
                    rel: Rel::Eq,
                    rhs: rat_int(second.1.value() as i64),
                };
                notes.push(format!("CONTRADICTION: {w}"));
                notes.push("the SW family is impossible for this configuration".into());
                Verdict {
                    check: PARTITION,
                    status: Status::Obstructed,
                    witness: Some(w),
                    notes,
                }
            }
        }
    };
    Ok((partition_verdict, bound_verdict))
}

/// Euler-number bounds and non-simple-type constructions for configurations
/// of embedded projective planes with classes summing to zero mod 2.
pub fn check_rp2(scenario: &Scenario) -> Result<Verdict> {
    const CHECK: &str = "rp2-euler-bound";
    let Surfaces::Rp2(entries) = &scenario.surfaces else {
        return Ok(Verdict::not_applicable(CHECK, "no projective plane configuration"));
    };
    if entries.is_empty() {
        return Ok(Verdict::not_applicable(CHECK, "no projective planes listed"));
    }
    if !scenario.manifold.simple_type || !scenario.h1_coprime(2) {
        return Ok(Verdict::not_applicable(
            CHECK,
            "needs simple type and H_1(X; Z_2) = 0",
        ));
    }
    let classes: Vec<Vec<i64>> = entries.iter().map(|e| e.class_mod_2.clone()).collect();
    if !classes_sum_zero(&classes, 2) {
        return Ok(Verdict::not_applicable(CHECK, "[S_1] + ... + [S_r] != 0 mod 2"));
    }
    let (_, independent) = dependence_hypotheses(&classes, 2)?;
    if !independent {
        return Ok(Verdict::not_applicable(
            CHECK,
            "some r-1 of the classes are dependent mod 2",
        ));
    }
    if nonzero_sw(scenario, 2).is_empty() {
        return Ok(Verdict::not_applicable(CHECK, "no basic class with odd SW"));
    }
    let r = entries.len() as i64;
    let n: i64 = entries.iter().map(|e| e.euler).sum();
    let bound = (8 - 2 * r).max(0);
    let mut notes = vec![format!("r = {r} projective planes with total Euler number {n}")];
    let b3mod4 = scenario.manifold.b_plus.rem_euclid(4) == 3;
    if r == 1 && b3mod4 {
        let w = witness_le("refined bound for b_+ = 3 mod 4: e(S)", n, 2);
        notes.push(w.to_string());
        if !w.holds() {
            return Ok(Verdict {
                check: CHECK,
                status: Status::Obstructed,
                witness: Some(w),
                notes,
            });
        }
    }
    let w = witness_le("Euler number bound: sum e(S_i)", n, bound);
    notes.push(w.to_string());
    if !w.holds() {
        return Ok(Verdict {
            check: CHECK,
            status: Status::Obstructed,
            witness: Some(w),
            notes,
        });
    }
    // Borderline construction: r <= 3, every Euler number >= -2 and the sum
    // meets 8 - 2r.
    if r <= 3 && n == 8 - 2 * r && entries.iter().all(|e| e.euler >= -2) && !(r == 1 && b3mod4) {
        let mut steps = Vec::new();
        if r == 1 {
            steps.push(RecipeStep::RemoveSurfaceNeighborhood(format!(
                "the projective plane with e = {n}"
            )));
            steps.push(RecipeStep::AttachPlumbing(format!(
                "the D_{} plumbing",
                n + 2
            )));
        } else {
            steps.push(RecipeStep::BranchedCover { degree: 2 });
            for e in entries {
                steps.push(RecipeStep::RemoveSurfaceNeighborhood(format!(
                    "the preimage of the projective plane with e = {}",
                    e.euler
                )));
                steps.push(RecipeStep::AttachPlumbing(match e.euler {
                    e if e > 0 => format!("the D_{} plumbing", e / 2 + 2),
                    0 => "the boundary connected sum of two X(-2) disc bundles".to_string(),
                    _ => "the X(-4) disc bundle".to_string(),
                }));
            }
        }
        if let Some(sw_note) = rp2_cover_value_note(scenario, entries)? {
            notes.push(sw_note);
        }
        notes.push("the resulting 4-manifold is not of simple type".into());
        return Ok(Verdict {
            check: CHECK,
            status: Status::NonSimpleTypeConstruction(Recipe { steps }),
            witness: Some(w),
            notes,
        });
    }
    Ok(Verdict {
        check: CHECK,
        status: Status::Consistent,
        witness: Some(w),
        notes,
    })
}

/// Computes `SW(cover_0)` for the borderline projective-plane scenario at
/// the composition `(0, m)`, when the epsilon labels are determined.
fn rp2_cover_value_note(scenario: &Scenario, entries: &[Rp2Entry]) -> Result<Option<String>> {
    let n: i64 = entries.iter().map(|e| e.euler).sum();
    if entries.iter().any(|e| e.euler % 2 != 0) {
        return Ok(None);
    }
    // Use supplied labels, otherwise search for an admissible assignment.
    let eps_vec: Vec<i64> = if entries.iter().all(|e| e.eps.is_some()) {
        entries.iter().map(|e| e.eps.unwrap()).collect()
    } else {
        let r = entries.len();
        let Some(found) = (0..(1u32 << r)).map(|mask| {
            (0..r)
                .map(|i| if mask & (1 << i) != 0 { 1i64 } else { -1 })
                .collect::<Vec<i64>>()
        })
        .find(|eps| (eps.iter().sum::<i64>() - n / 2).rem_euclid(4) == 0) else {
            return Ok(None);
        };
        found
    };
    let Some(class) = scenario.sw.iter().find(|c| c.sw_mod_p % 2 != 0) else {
        return Ok(None);
    };
    let data = match rp2_dimension_data(
        &entries.iter().map(|e| e.euler).collect::<Vec<_>>(),
        &eps_vec,
        scenario.manifold.b_plus,
        class.d,
    ) {
        Ok(d) => d,
        Err(_) => return Ok(None),
    };
    let sw_s = ModP::new(class.sw_mod_p as i64, 2)?;
    // SW(X_0, A tensor s_0) is forced odd by partition consistency; evaluate
    // at the composition (0, m) where its coefficient vanishes.
    let value = sw_rp2_cases(
        &entries.iter().map(|e| e.euler).collect::<Vec<_>>(),
        &eps_vec,
        scenario.manifold.b_plus,
        class.d,
        sw_s,
        ModP::new(1, 2)?,
        0,
        data.m,
    )?;
    let forced = match rp2_consistency(&data, sw_s, ModP::new(0, 2)?)? {
        PartitionOutcome::Contradiction { .. } => {
            "SW(X_0, A tensor s_0) = 1 (mod 2) is forced by composition independence"
        }
        PartitionOutcome::Consistent(_) => "SW(X_0, A tensor s_0) is not determined",
    };
    Ok(Some(format!(
        "SW(cover_0) = {} (mod 2) at d(cover_0) = {}; {}",
        value.coeff, data.d_cover, forced
    )))
}

/// Adjunction bound, borderline constructions and the multi-cusp sum bound
/// for spheres with a cusp singularity.
pub fn check_cusp(scenario: &Scenario) -> Result<Verdict> {
    const CHECK: &str = "cusp-adjunction";
    let Surfaces::Cusps(entries) = &scenario.surfaces else {
        return Ok(Verdict::not_applicable(CHECK, "no cusp configuration"));
    };
    if entries.is_empty() {
        return Ok(Verdict::not_applicable(CHECK, "no cusp spheres listed"));
    }
    if !scenario.manifold.simple_type {
        return Ok(Verdict::not_applicable(CHECK, "manifold is not of simple type"));
    }
    let Some((idx, class)) = scenario
        .sw
        .iter()
        .enumerate()
        .find(|(_, c)| c.sw_mod_p != 0)
    else {
        return Ok(Verdict::not_applicable(CHECK, "no basic class with SW != 0"));
    };
    let sw_odd = class.sw_mod_p % 2 != 0;
    let b3mod4 = scenario.manifold.b_plus.rem_euclid(4) == 3;
    let mut notes = vec![format!("using basic class {idx} with SW != 0")];
    let mut obstruction: Option<Witness> = None;
    let mut construction: Option<Recipe> = None;
    for (i, cusp) in entries.iter().enumerate() {
        let m = cusp.self_intersection;
        let c = class.pairings[i].abs();
        let left = cusp.handedness == Handedness::Left;
        let e_rp2 = if left { 6 + m } else { -6 + m };
        notes.push(format!(
            "cusp {i}: {}-handed, [C]^2 = {m}, Moebius-band resolution has e(S) = {e_rp2}",
            if left { "left" } else { "right" }
        ));
        let adj = witness_le(format!("cusp {i} adjunction: |<c(s), [C]>| + [C]^2"), c + m, 0);
        notes.push(adj.to_string());
        if !adj.holds() {
            obstruction.get_or_insert(adj);
            continue;
        }
        if left && c + m == 0 {
            if (-7..=-1).contains(&m) {
                if sw_odd && b3mod4 {
                    let w = witness_lt(
                        format!(
                            "cusp {i}: with b_+ = 3 mod 4 and odd SW the bound is strict"
                        ),
                        c + m,
                        0,
                    );
                    notes.push(w.to_string());
                    obstruction.get_or_insert(w);
                } else {
                    let data = cusp_boundary_data((-m) as u64)?;
                    notes.push(format!(
                        "cusp {i}: borderline left cusp; replacing its neighbourhood (boundary {}) with the W_{} filling (b_2 = {}) gives a non-simple-type manifold",
                        data.boundary,
                        -m,
                        data.filling.b2()
                    ));
                    construction.get_or_insert(Recipe {
                        steps: vec![
                            RecipeStep::RemoveSurfaceNeighborhood(format!(
                                "the cusp sphere with [C]^2 = {m}"
                            )),
                            RecipeStep::AttachPlumbing(format!("the W_{} filling", -m)),
                        ],
                    });
                }
            } else if m == 0 {
                if sw_odd && b3mod4 {
                    let w = witness_lt(
                        format!("cusp {i}: no self-intersection-zero left cusp exists when b_+ = 3 mod 4 and SW is odd"),
                        c + m,
                        0,
                    );
                    notes.push(w.to_string());
                    obstruction.get_or_insert(w);
                } else {
                    notes.push(format!(
                        "cusp {i}: self-intersection-zero left cusp; blowing up and attaching the E8 plumbing gives a non-simple-type manifold"
                    ));
                    construction.get_or_insert(Recipe {
                        steps: vec![
                            RecipeStep::BlowUp,
                            RecipeStep::RemoveSurfaceNeighborhood(
                                "the (-1) left cusp sphere".into(),
                            ),
                            RecipeStep::AttachPlumbing("the E8 plumbing (W_1 filling)".into()),
                        ],
                    });
                }
            }
        }
    }
    // Multi-cusp sum bound via the projective-plane translation, for
    // all-left configurations with classes summing to zero mod 2.
    let all_left = entries.iter().all(|e| e.handedness == Handedness::Left);
    let classes: Vec<Vec<i64>> = entries.iter().map(|e| e.class_mod_2.clone()).collect();
    if all_left && sw_odd && classes_sum_zero(&classes, 2) && scenario.h1_coprime(2) {
        let (_, independent) = dependence_hypotheses(&classes, 2)?;
        if independent {
            let r = entries.len() as i64;
            let total: i64 = entries.iter().map(|e| e.self_intersection).sum();
            let bound = (-6 * r).max(8 - 8 * r);
            let w = witness_le("multi-cusp bound: sum [C_i]^2", total, bound);
            notes.push(w.to_string());
            if !w.holds() {
                obstruction.get_or_insert(w);
            }
        }
    }
    Ok(match (obstruction, construction) {
        (Some(w), _) => Verdict {
            check: CHECK,
            status: Status::Obstructed,
            witness: Some(w),
            notes,
        },
        (None, Some(recipe)) => Verdict {
            check: CHECK,
            status: Status::NonSimpleTypeConstruction(recipe),
            witness: None,
            notes,
        },
        (None, None) => Verdict {
            check: CHECK,
            status: Status::Consistent,
            witness: None,
            notes,
        },
    })
}


/// The classical Euler-number restrictions quoted alongside the
/// Seiberg-Witten bounds: Rokhlin's inequality for null-homologous
/// projective planes and the Guillou-Marin congruence for planes dual to
/// the second Stiefel-Whitney class.
pub fn check_classical(scenario: &Scenario) -> Result<Vec<Verdict>> {
    const ROKHLIN: &str = "rokhlin";
    const GM: &str = "guillou-marin";
    let Surfaces::Rp2(entries) = &scenario.surfaces else {
        return Ok(vec![
            Verdict::not_applicable(ROKHLIN, "no projective plane configuration"),
            Verdict::not_applicable(GM, "no projective plane configuration"),
        ]);
    };
    if entries.len() != 1 {
        return Ok(vec![
            Verdict::not_applicable(ROKHLIN, "needs exactly one projective plane"),
            Verdict::not_applicable(GM, "needs exactly one projective plane"),
        ]);
    }
    let entry = &entries[0];
    let e = entry.euler;
    let b_plus = scenario.manifold.b_plus;
    let b_minus = b_plus - scenario.manifold.sigma;
    let class_zero = entry.class_mod_2.iter().all(|&c| c % 2 == 0);
    let h1_two = scenario.h1_coprime(2);

    let rokhlin = if !(class_zero && h1_two) {
        Verdict::not_applicable(ROKHLIN, "needs [S] = 0 mod 2 and H_1(X; Z_2) = 0")
    } else {
        let upper = witness_le("Rokhlin upper bound: e(S)", e, 2 + 4 * b_plus);
        let lower = Witness {
            description: "Rokhlin lower bound: e(S)".into(),
            lhs: rat_int(e),
            rel: Rel::Ge,
            rhs: rat_int(-2 - 4 * b_minus),
        };
        let mut notes = vec![upper.to_string(), lower.to_string()];
        if e == 2 + 4 * b_plus {
            notes.push("meets the Rokhlin upper bound with equality".into());
        }
        let failing = [&upper, &lower].into_iter().find(|w| !w.holds()).cloned();
        Verdict {
            check: ROKHLIN,
            status: if failing.is_some() {
                Status::Obstructed
            } else {
                Status::Consistent
            },
            witness: failing.or(Some(upper)),
            notes,
        }
    };

    let gm = if !entry.is_w2 || class_zero {
        Verdict::not_applicable(GM, "needs [S] = w_2(X) with X non-spin")
    } else {
        let sigma = scenario.manifold.sigma;
        let w = Witness {
            description: "Guillou-Marin congruence: e(S)".into(),
            lhs: rat_int(e),
            rel: Rel::CongruentOneOfMod {
                modulus: 16,
                residues: vec![(sigma + 2).rem_euclid(16), (sigma - 2).rem_euclid(16)],
            },
            rhs: rat_int(0),
        };
        let notes = vec![w.to_string()];
        Verdict {
            check: GM,
            status: if w.holds() {
                Status::Consistent
            } else {
                Status::Obstructed
            },
            witness: Some(w),
            notes,
        }
    };
    Ok(vec![rokhlin, gm])
}

/// Runs every applicable checker and aggregates the verdicts. The order is
/// fixed and no checker short-circuits another, so contradictory inputs
/// surface as multiple independent witnesses.
pub fn evaluate_scenario(scenario: &Scenario) -> Result<Vec<Verdict>> {
    scenario.validate()?;
    let mut verdicts = Vec::new();
    verdicts.push(check_sphere_single(scenario)?);
    verdicts.push(check_sphere_multi(scenario)?);
    verdicts.push(check_double_cover_sw(scenario)?);
    let (partition, bound) = check_cover_pipeline(scenario)?;
    verdicts.push(partition);
    verdicts.push(bound);
    verdicts.push(check_rp2(scenario)?);
    verdicts.push(check_cusp(scenario)?);
    verdicts.extend(check_classical(scenario)?);
    Ok(verdicts)
}
