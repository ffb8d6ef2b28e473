//! Change of basis from Specht vectors to the Kazhdan-Lusztig basis.
//!
//! A tabloid {R} of shape lambda is identified with the standard basis
//! element M_{w_R} of the parabolic module for J(lambda), where w_R is the
//! coset representative read off R by a MapVariant. Pushing the Specht
//! vector v_T of a standard tableau through this identification and
//! expanding in a KL basis at q = 1 yields an integer matrix a_{x,T}. The
//! claim under test: with the right stack of conventions this matrix is
//! unitriangular, with unit leading entry and support confined to one
//! Bruhat cone per column.
//!
//! Several conventions are genuinely ambiguous: which KL side, which of the
//! four tabloid-to-representative readings, whether a comes from the KL
//! expansion of the embedded vector (p_version) or from pairing the
//! c-matrix with m-polynomials (m_version), whether unit means 1 or +-1,
//! whether the cone opens downward or upward in Bruhat order, and whether
//! the leading row of a column is the map representative w_T or the Bruhat
//! extreme of the column's support. A ConventionProfile fixes all six
//! knobs; there are 128 profiles. discover_conventions runs every profile
//! over a list of shapes and reports which survive, so the certified
//! profile set is an output of the computation rather than an assumption
//! baked into it.

use crate::error::{Error, Result};
use crate::heckemod::{kl_basis, KLSide, KLTable, ModuleVector, ParabolicContext};
use crate::laurent::LaurentPoly;
use crate::shapes::{tableau_to_coset_rep, Composition, MapVariant, Tableau};
use crate::specht::{c_matrix, CMatrix, TabloidCombo};
use crate::weyl::Family;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Which identity defines the a-coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AVariant {
    /// Expand the embedded Specht vector in the KL basis (via the p-table),
    /// then set q = 1.
    PVersion,
    /// a_{x,T} = sum over R of c_{R,T} m_{x,w_R}(1).
    MVersion,
}

impl AVariant {
    pub const ALL: [AVariant; 2] = [AVariant::PVersion, AVariant::MVersion];
}

/// What counts as a unit diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignMode {
    Strict,
    UpToSign,
}

impl SignMode {
    pub const ALL: [SignMode; 2] = [SignMode::Strict, SignMode::UpToSign];
}

/// Which way the Bruhat cone opens: as printed means support below the
/// leading element, reversed means above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    AsPrinted,
    Reversed,
}

impl Orientation {
    pub const ALL: [Orientation; 2] = [Orientation::AsPrinted, Orientation::Reversed];
}

/// How the leading representative sigma(T) of a column is chosen: the map
/// representative w_T, or the Bruhat extreme of the column's support (the
/// maximum when the cone opens downward, the minimum when it opens upward).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Leading {
    MapRep,
    SupportExtreme,
}

impl Leading {
    pub const ALL: [Leading; 2] = [Leading::MapRep, Leading::SupportExtreme];
}

/// One full stack of conventions. Profiles are value-comparable and sort in
/// the declared field order.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct ConventionProfile {
    pub kl_side: KLSide,
    pub map_variant: MapVariant,
    pub a_variant: AVariant,
    pub sign_mode: SignMode,
    pub orientation: Orientation,
    pub leading: Leading,
}

impl ConventionProfile {
    /// All 128 profiles, sorted.
    pub fn all() -> Vec<ConventionProfile> {
        let mut out = Vec::with_capacity(128);
        for kl_side in KLSide::ALL {
            for map_variant in MapVariant::ALL {
                for a_variant in AVariant::ALL {
                    for sign_mode in SignMode::ALL {
                        for orientation in Orientation::ALL {
                            for leading in Leading::ALL {
                                out.push(ConventionProfile {
                                    kl_side,
                                    map_variant,
                                    a_variant,
                                    sign_mode,
                                    orientation,
                                    leading,
                                });
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn label(&self) -> String {
        format!(
            "{}/{}/{}/{}/{}/{}",
            match self.kl_side {
                KLSide::Positive => "positive",
                KLSide::Negative => "negative",
            },
            match self.map_variant {
                MapVariant::InverseTop => "inverse-top",
                MapVariant::InverseBottom => "inverse-bottom",
                MapVariant::PlainTop => "plain-top",
                MapVariant::PlainBottom => "plain-bottom",
            },
            match self.a_variant {
                AVariant::PVersion => "p",
                AVariant::MVersion => "m",
            },
            match self.sign_mode {
                SignMode::Strict => "strict",
                SignMode::UpToSign => "up-to-sign",
            },
            match self.orientation {
                Orientation::AsPrinted => "as-printed",
                Orientation::Reversed => "reversed",
            },
            match self.leading {
                Leading::MapRep => "map-rep",
                Leading::SupportExtreme => "support-extreme",
            },
        )
    }
}

impl fmt::Display for ConventionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Identifies each tabloid {R} with M_{w_R} and maps the combination into
/// the module. Fails if some representative lands outside D_J, which marks
/// the map variant as unusable for this shape.
pub fn embed(
    v: &TabloidCombo,
    ctx: &ParabolicContext,
    map_variant: MapVariant,
) -> Result<ModuleVector> {
    let mut out = ModuleVector::zero(ctx);
    for (tabloid, c) in v.terms() {
        let rep = tableau_to_coset_rep(tabloid.canonical(), map_variant)?;
        let k = ctx.rep_index(&rep).ok_or_else(|| Error::VariantNotBijective {
            variant: format!("{map_variant:?}"),
            shape: format!("{}", tabloid.canonical().shape()),
            reason: format!("{} is not in D_J", rep.one_line()),
        })?;
        out = out.add(&ModuleVector::standard(ctx, k).scale(&LaurentPoly::constant(c)))?;
    }
    Ok(out)
}

/// The integer matrix a_{x,T} for one profile: rows indexed by D_J in table
/// order, columns by the standard tableaux of the shape.
#[derive(Clone)]
pub struct AMatrix {
    ctx: ParabolicContext,
    shape: Composition,
    profile: ConventionProfile,
    cols: Vec<Tableau>,
    col_reps: Vec<usize>,
    entries: Vec<Vec<BigInt>>,
}

impl AMatrix {
    pub fn ctx(&self) -> &ParabolicContext {
        &self.ctx
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn profile(&self) -> ConventionProfile {
        self.profile
    }

    pub fn num_rows(&self) -> usize {
        self.ctx.num_reps()
    }

    pub fn cols(&self) -> &[Tableau] {
        &self.cols
    }

    /// Index in D_J of the map representative w_T of column c.
    pub fn col_rep(&self, c: usize) -> usize {
        self.col_reps[c]
    }

    pub fn entry(&self, x: usize, c: usize) -> &BigInt {
        &self.entries[x][c]
    }

    pub fn column_support(&self, c: usize) -> Vec<usize> {
        (0..self.num_rows())
            .filter(|&x| !self.entries[x][c].is_zero())
            .collect()
    }

    /// Same matrix with one diagonal entry bumped to 2: a negative control
    /// that check_unitriangular must reject.
    pub fn with_corrupted_diagonal(mut self) -> AMatrix {
        let c = 0;
        let x = match self.profile.leading {
            Leading::MapRep => self.col_reps[c],
            Leading::SupportExtreme => self
                .column_support(c)
                .first()
                .copied()
                .unwrap_or(self.col_reps[c]),
        };
        self.entries[x][c] = BigInt::from(2);
        self
    }

    /// Same matrix with the columns rotated by one while the column labels
    /// stay put: a negative control simulating a shuffled c-matrix.
    pub fn with_rotated_columns(mut self) -> AMatrix {
        for row in &mut self.entries {
            row.rotate_right(1);
        }
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.ctx.family(),
            "shape": self.shape.parts(),
            "J": self.ctx.j_set(),
            "profile": self.profile,
            "reps": self.ctx.reps().map(|w| w.one_line()).collect::<Vec<_>>(),
            "cols": self.cols,
            "col_reps": self.col_reps.iter().map(|&k| self.ctx.rep(k).one_line()).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|row| {
                row.iter().map(|v| v.to_string()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Debug for AMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "AMatrix {} [{}] {}x{}",
            self.shape,
            self.profile,
            self.num_rows(),
            self.cols.len()
        )?;
        for x in 0..self.num_rows() {
            write!(f, "  {:>12}", self.ctx.rep(x).one_line())?;
            for c in 0..self.cols.len() {
                write!(f, " {:>4}", self.entries[x][c])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The embedding matrix E_{w,T}: coefficient of M_w in the embedded Specht
/// vector of the c-th standard tableau. Integer entries.
fn embedding_matrix(
    cm: &CMatrix,
    ctx: &ParabolicContext,
    map_variant: MapVariant,
) -> Result<Vec<Vec<BigInt>>> {
    let n = ctx.num_reps();
    let mut e = vec![vec![BigInt::zero(); cm.cols().len()]; n];
    for c in 0..cm.cols().len() {
        let v = embed(&cm.column(c), ctx, map_variant)?;
        for (k, poly) in v.terms() {
            e[k][c] = poly.eval_at_one();
        }
    }
    Ok(e)
}

fn map_rep_indices(
    cols: &[Tableau],
    ctx: &ParabolicContext,
    map_variant: MapVariant,
) -> Result<Vec<usize>> {
    cols.iter()
        .map(|t| {
            let rep = tableau_to_coset_rep(t, map_variant)?;
            ctx.rep_index(&rep).ok_or_else(|| Error::VariantNotBijective {
                variant: format!("{map_variant:?}"),
                shape: format!("{}", t.shape()),
                reason: format!("{} is not in D_J", rep.one_line()),
            })
        })
        .collect()
}

/// Builds the a-matrix from precomputed tables. The KL table must carry a
/// p-table when the profile asks for the p_version and must match the
/// profile's side.
pub fn a_matrix_from_parts(
    kl: &KLTable,
    cm: &CMatrix,
    profile: ConventionProfile,
) -> Result<AMatrix> {
    assert_eq!(kl.side(), profile.kl_side, "KL table side mismatch");
    let ctx = kl.ctx().clone();
    let e = embedding_matrix(cm, &ctx, profile.map_variant)?;
    let col_reps = map_rep_indices(cm.cols(), &ctx, profile.map_variant)?;
    let n = ctx.num_reps();
    let ncols = cm.cols().len();
    let coeff = |x: usize, w: usize| -> BigInt {
        match profile.a_variant {
            AVariant::PVersion => kl.p(x, w).eval_at_one(),
            AVariant::MVersion => kl.m(x, w).eval_at_one(),
        }
    };
    let mut entries = vec![vec![BigInt::zero(); ncols]; n];
    for w in 0..n {
        for c in 0..ncols {
            if e[w][c].is_zero() {
                continue;
            }
            for (x, row) in entries.iter_mut().enumerate() {
                let f = coeff(x, w);
                if !f.is_zero() {
                    row[c] += f * &e[w][c];
                }
            }
        }
    }
    Ok(AMatrix {
        ctx,
        shape: cm.shape().clone(),
        profile,
        cols: cm.cols().to_vec(),
        col_reps,
        entries,
    })
}

/// Computes everything from scratch for one shape and profile.
pub fn a_matrix(shape: &Composition, profile: ConventionProfile) -> Result<AMatrix> {
    let ctx = ParabolicContext::new(shape.family(), shape.d(), &shape.to_j())?;
    let cm = c_matrix(shape)?;
    let mut kl = kl_basis(&ctx, profile.kl_side);
    if profile.a_variant == AVariant::PVersion {
        kl = kl.with_p();
    }
    a_matrix_from_parts(&kl, &cm, profile)
}

/// One failed condition, tied to a column of the a-matrix.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub column: usize,
    pub kind: String,
    pub detail: String,
}

/// Outcome of check_unitriangular: failures are data, never errors.
#[derive(Debug, Clone, Serialize)]
pub struct CertResult {
    pub pass: bool,
    /// Per column: the leading representative (one-line) and the value
    /// found there, when a leading representative could be designated.
    pub diagonal: Vec<DiagonalEntry>,
    pub violations: Vec<Violation>,
    /// Column pairs sharing a leading representative. Possible when the
    /// leading knob is the support extreme; reported as a diagnostic but
    /// not counted against the certificate, which tests exactly the unit
    /// diagonal and the cone condition.
    pub collisions: Vec<Collision>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Collision {
    pub columns: (usize, usize),
    pub rep: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagonalEntry {
    pub column: usize,
    pub rep: Option<String>,
    pub value: Option<String>,
}

/// Tests unitriangularity of an a-matrix under its profile: every column
/// has a designated leading representative sigma(T) with a unit entry
/// there and all other support lies in the profile's Bruhat cone.
pub fn check_unitriangular(a: &AMatrix) -> CertResult {
    let profile = a.profile();
    let mut violations = Vec::new();
    let mut diagonal = Vec::new();
    let mut collisions = Vec::new();
    let mut leaders: BTreeMap<usize, usize> = BTreeMap::new();
    // x below w in the profile's cone ordering.
    let below = |x: usize, w: usize| match profile.orientation {
        Orientation::AsPrinted => a.ctx().rep_bruhat_leq(x, w),
        Orientation::Reversed => a.ctx().rep_bruhat_leq(w, x),
    };
    for c in 0..a.cols().len() {
        let support = a.column_support(c);
        let sigma = match profile.leading {
            Leading::MapRep => Some(a.col_rep(c)),
            Leading::SupportExtreme => {
                if support.is_empty() {
                    violations.push(Violation {
                        column: c,
                        kind: "empty-column".into(),
                        detail: "no support to take an extreme of".into(),
                    });
                    None
                } else {
                    let extreme = support
                        .iter()
                        .copied()
                        .find(|&x| support.iter().all(|&y| below(y, x)));
                    if extreme.is_none() {
                        violations.push(Violation {
                            column: c,
                            kind: "no-extreme".into(),
                            detail: "support has no Bruhat extreme in this orientation".into(),
                        });
                    }
                    extreme
                }
            }
        };
        let Some(sigma) = sigma else {
            diagonal.push(DiagonalEntry {
                column: c,
                rep: None,
                value: None,
            });
            continue;
        };
        let value = a.entry(sigma, c).clone();
        diagonal.push(DiagonalEntry {
            column: c,
            rep: Some(a.ctx().rep(sigma).one_line()),
            value: Some(value.to_string()),
        });
        let unit = match profile.sign_mode {
            SignMode::Strict => value.is_one(),
            SignMode::UpToSign => value.abs().is_one(),
        };
        if !unit {
            violations.push(Violation {
                column: c,
                kind: "diagonal".into(),
                detail: format!(
                    "a({}, col {}) = {}",
                    a.ctx().rep(sigma).one_line(),
                    c,
                    value
                ),
            });
        }
        for &x in &support {
            if !below(x, sigma) {
                violations.push(Violation {
                    column: c,
                    kind: "support".into(),
                    detail: format!(
                        "a({}, col {}) = {} outside the cone of {}",
                        a.ctx().rep(x).one_line(),
                        c,
                        a.entry(x, c),
                        a.ctx().rep(sigma).one_line()
                    ),
                });
            }
        }
        if let Some(&other) = leaders.get(&sigma) {
            collisions.push(Collision {
                columns: (other, c),
                rep: a.ctx().rep(sigma).one_line(),
            });
        } else {
            leaders.insert(sigma, c);
        }
    }
    CertResult {
        pass: violations.is_empty(),
        diagonal,
        violations,
        collisions,
    }
}

/// Violations of the oriented comparability of the c-matrix: nonzero
/// c_{R,T} demands w_R below (as printed) or above (reversed) w_T.
pub fn crt_violations(
    cm: &CMatrix,
    map_variant: MapVariant,
    orientation: Orientation,
) -> Result<Vec<String>> {
    let mut reps_rows = Vec::with_capacity(cm.rows().len());
    for t in cm.rows() {
        reps_rows.push(tableau_to_coset_rep(t, map_variant)?);
    }
    let mut reps_cols = Vec::with_capacity(cm.cols().len());
    for t in cm.cols() {
        reps_cols.push(tableau_to_coset_rep(t, map_variant)?);
    }
    let mut out = Vec::new();
    for (r, wr) in reps_rows.iter().enumerate() {
        for (c, wt) in reps_cols.iter().enumerate() {
            if cm.entry(r, c) == 0 {
                continue;
            }
            let ok = match orientation {
                Orientation::AsPrinted => crate::weyl::bruhat_leq(wr, wt)?,
                Orientation::Reversed => crate::weyl::bruhat_leq(wt, wr)?,
            };
            if !ok {
                out.push(format!(
                    "c({}, {}) = {} but {} is not in the cone of {}",
                    wr.one_line(),
                    wt.one_line(),
                    cm.entry(r, c),
                    wr.one_line(),
                    wt.one_line()
                ));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceDesc {
    pub family: Family,
    pub shape: Vec<usize>,
    pub j: Vec<usize>,
    pub num_reps: usize,
    pub num_standard: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceOutcome {
    pub instance: usize,
    pub pass: bool,
    /// Unitriangularity violations plus CRT violations, or the reason the
    /// profile could not be evaluated (an invalid map variant).
    pub reasons: Vec<String>,
    /// Leading-representative collisions (diagnostic only).
    pub collisions: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileOutcome {
    pub profile: ConventionProfile,
    pub label: String,
    pub outcomes: Vec<InstanceOutcome>,
    pub all_pass: bool,
    /// True when no instance produced a leading collision, i.e. the
    /// leading map was injective everywhere.
    pub injective: bool,
}

/// Whether one orientation of the CRT comparability holds across all
/// instances of a family, for one map variant.
#[derive(Debug, Clone, Serialize)]
pub struct CrtCert {
    pub family: Family,
    pub map_variant: MapVariant,
    pub as_printed_ok: bool,
    pub reversed_ok: bool,
    pub evaluable: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscoveryReport {
    pub instances: Vec<InstanceDesc>,
    pub profiles: Vec<ProfileOutcome>,
    pub survivors: Vec<ConventionProfile>,
    /// Survivors with strict sign mode when any exist, otherwise all
    /// survivors.
    pub preferred: Vec<ConventionProfile>,
    pub crt: Vec<CrtCert>,
}

impl DiscoveryReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// A human-readable summary: one line per profile plus the survivor
    /// and CRT sections.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{} instances, {} profiles, {} survivors\n",
            self.instances.len(),
            self.profiles.len(),
            self.survivors.len()
        ));
        for inst in &self.instances {
            out.push_str(&format!(
                "  instance {:?} {:?}  J={:?}  |D_J|={}  |Std|={}\n",
                inst.family, inst.shape, inst.j, inst.num_reps, inst.num_standard
            ));
        }
        out.push_str("profiles:\n");
        for p in &self.profiles {
            let marks: String = p
                .outcomes
                .iter()
                .map(|o| if o.pass { '+' } else { '.' })
                .collect();
            out.push_str(&format!(
                "  {} {} [{}]{}\n",
                if p.all_pass { "PASS" } else { "fail" },
                p.label,
                marks,
                if p.injective { "" } else { " (leading collisions)" }
            ));
        }
        out.push_str("survivors:\n");
        for s in &self.survivors {
            out.push_str(&format!("  {s}\n"));
        }
        out.push_str("preferred:\n");
        for s in &self.preferred {
            out.push_str(&format!("  {s}\n"));
        }
        out.push_str("crt orientation:\n");
        for c in &self.crt {
            out.push_str(&format!(
                "  {:?} {:?}: as_printed={} reversed={}{}\n",
                c.family,
                c.map_variant,
                c.as_printed_ok,
                c.reversed_ok,
                if c.evaluable { "" } else { " (not evaluable)" }
            ));
        }
        out
    }
}

struct InstanceData {
    desc: InstanceDesc,
    // (side, map_variant, a_variant) -> a-matrix or the reason it cannot
    // be formed.
    matrices: BTreeMap<(KLSide, MapVariant, AVariant), std::result::Result<AMatrix, String>>,
    // map_variant -> crt violation lists per orientation, or reason.
    crt: BTreeMap<MapVariant, std::result::Result<(Vec<String>, Vec<String>), String>>,
}

fn prepare_instance(shape: &Composition) -> Result<InstanceData> {
    let ctx = ParabolicContext::new(shape.family(), shape.d(), &shape.to_j())?;
    let cm = c_matrix(shape)?;
    let desc = InstanceDesc {
        family: shape.family(),
        shape: shape.parts().to_vec(),
        j: ctx.j_set().to_vec(),
        num_reps: ctx.num_reps(),
        num_standard: cm.cols().len(),
    };
    let mut matrices = BTreeMap::new();
    for side in KLSide::ALL {
        let kl = kl_basis(&ctx, side).with_p();
        for variant in MapVariant::ALL {
            for a_variant in AVariant::ALL {
                let profile = ConventionProfile {
                    kl_side: side,
                    map_variant: variant,
                    a_variant,
                    // The remaining knobs do not affect the matrix.
                    sign_mode: SignMode::Strict,
                    orientation: Orientation::AsPrinted,
                    leading: Leading::MapRep,
                };
                let res = a_matrix_from_parts(&kl, &cm, profile).map_err(|e| e.to_string());
                matrices.insert((side, variant, a_variant), res);
            }
        }
    }
    let mut crt = BTreeMap::new();
    for variant in MapVariant::ALL {
        let res = crt_violations(&cm, variant, Orientation::AsPrinted)
            .and_then(|a| Ok((a, crt_violations(&cm, variant, Orientation::Reversed)?)))
            .map_err(|e| e.to_string());
        crt.insert(variant, res);
    }
    Ok(InstanceData {
        desc,
        matrices,
        crt,
    })
}

/// Runs every convention profile over every instance. Per-profile failures
/// are data in the report; only caps and invalid shapes error.
pub fn discover_conventions(instances: &[Composition]) -> Result<DiscoveryReport> {
    let data: Vec<InstanceData> = instances
        .iter()
        .map(prepare_instance)
        .collect::<Result<_>>()?;
    let mut profiles = Vec::new();
    for profile in ConventionProfile::all() {
        let mut outcomes = Vec::new();
        for (idx, inst) in data.iter().enumerate() {
            let key = (profile.kl_side, profile.map_variant, profile.a_variant);
            let mut reasons = Vec::new();
            let mut collisions = 0;
            match &inst.matrices[&key] {
                Err(reason) => reasons.push(format!("a-matrix: {reason}")),
                Ok(base) => {
                    let mut a = base.clone();
                    a.profile = profile;
                    let cert = check_unitriangular(&a);
                    for v in cert.violations {
                        reasons.push(format!("{}: {}", v.kind, v.detail));
                    }
                    collisions = cert.collisions.len();
                }
            }
            match &inst.crt[&profile.map_variant] {
                Err(reason) => reasons.push(format!("crt: {reason}")),
                Ok((as_printed, reversed)) => {
                    let list = match profile.orientation {
                        Orientation::AsPrinted => as_printed,
                        Orientation::Reversed => reversed,
                    };
                    for v in list {
                        reasons.push(format!("crt: {v}"));
                    }
                }
            }
            outcomes.push(InstanceOutcome {
                instance: idx,
                pass: reasons.is_empty(),
                reasons,
                collisions,
            });
        }
        let all_pass = outcomes.iter().all(|o| o.pass);
        let injective = outcomes.iter().all(|o| o.collisions == 0);
        profiles.push(ProfileOutcome {
            profile,
            label: profile.label(),
            outcomes,
            all_pass,
            injective,
        });
    }
    let survivors: Vec<ConventionProfile> = profiles
        .iter()
        .filter(|p| p.all_pass)
        .map(|p| p.profile)
        .collect();
    let strict: Vec<ConventionProfile> = survivors
        .iter()
        .copied()
        .filter(|p| p.sign_mode == SignMode::Strict)
        .collect();
    let preferred = if strict.is_empty() {
        survivors.clone()
    } else {
        strict
    };
    let mut crt = Vec::new();
    let mut families: Vec<Family> = data.iter().map(|d| d.desc.family).collect();
    families.sort();
    families.dedup();
    for family in families {
        for variant in MapVariant::ALL {
            let mut as_printed_ok = true;
            let mut reversed_ok = true;
            let mut evaluable = true;
            for inst in data.iter().filter(|d| d.desc.family == family) {
                match &inst.crt[&variant] {
                    Err(_) => evaluable = false,
                    Ok((a, r)) => {
                        as_printed_ok &= a.is_empty();
                        reversed_ok &= r.is_empty();
                    }
                }
            }
            crt.push(CrtCert {
                family,
                map_variant: variant,
                as_printed_ok: as_printed_ok && evaluable,
                reversed_ok: reversed_ok && evaluable,
                evaluable,
            });
        }
    }
    Ok(DiscoveryReport {
        instances: data.into_iter().map(|d| d.desc).collect(),
        profiles,
        survivors,
        preferred,
        crt,
    })
}
