//! The parabolic module M^J over the Hecke algebra of W.
//!
//! For a subset J of the generators, M^J is the induced trivial module with
//! standard basis {M_w} indexed by the minimal coset representatives D_J.
//! A generator H_i acts by the three-case rule
//!
//!   M_w H_i = M_{w s_i}                        if w s_i in D_J, longer,
//!   M_w H_i = M_{w s_i} + (q^-1 - q) M_w       if w s_i in D_J, shorter,
//!   M_w H_i = q^-1 M_w                         if w s_i not in D_J,
//!
//! so H_i satisfies the quadratic relation H_i^2 = (q^-1 - q) H_i + 1 and
//! H_i^-1 = H_i - (q^-1 - q). The bar involution fixes M_e, inverts q, and
//! sends M_w to M_e H_{i_1}^-1 ... H_{i_k}^-1 for any reduced word
//! w = s_{i_1} ... s_{i_k} (applied left factor first; the result does not
//! depend on the word).
//!
//! The Kazhdan-Lusztig basis is built by length induction: M'_e = M_e, and
//! for w with descent s, the candidate M'_{ws} (H_s + q) is corrected by
//! subtracting, in decreasing length order, the bar-symmetric part of each
//! lower coefficient. The `side` knob replaces H_s + q with H_s - q^-1 and
//! mirrors the splitting, leaving the off-diagonal coefficients in q Z[q]
//! resp. q^-1 Z[q^-1]. Both sides give bar-invariant bases; which one a
//! given normalization convention wants is decided empirically downstream.

use crate::caps;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::weyl::{Family, GroupTable, SignedPerm, group_table};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A fixed enumeration of D_J with index maps in both directions.
#[derive(Clone)]
pub struct ParabolicContext(Arc<CtxInner>);

struct CtxInner {
    table: Arc<GroupTable>,
    j_set: Vec<usize>,
    /// rep index -> group index, sorted by (length, window).
    rep_group: Vec<usize>,
    /// group index -> rep index, usize::MAX when not a representative.
    rep_of_group: Vec<usize>,
}

/// Where right multiplication by a generator takes a representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenStep {
    /// w s_i is a longer representative.
    Up(usize),
    /// w s_i is a shorter representative.
    Down(usize),
    /// w s_i left D_J.
    Out,
}

impl ParabolicContext {
    pub fn new(family: Family, d: usize, j_set: &[usize]) -> Result<Self> {
        let table = group_table(family, d)?;
        let mut j_sorted = j_set.to_vec();
        j_sorted.sort_unstable();
        j_sorted.dedup();
        let rep_group = table.min_coset_rep_indices(&j_sorted)?;
        let cap = caps::coset_cap();
        if rep_group.len() > cap {
            return Err(Error::CapExceeded {
                what: "coset representative count",
                size: rep_group.len(),
                cap,
                env_var: caps::COSET_ENV,
            });
        }
        let mut rep_of_group = vec![usize::MAX; table.order()];
        for (k, &g) in rep_group.iter().enumerate() {
            rep_of_group[g] = k;
        }
        Ok(ParabolicContext(Arc::new(CtxInner {
            table,
            j_set: j_sorted,
            rep_group,
            rep_of_group,
        })))
    }

    pub fn family(&self) -> Family {
        self.0.table.family
    }

    pub fn d(&self) -> usize {
        self.0.table.d
    }

    pub fn j_set(&self) -> &[usize] {
        &self.0.j_set
    }

    pub fn table(&self) -> &Arc<GroupTable> {
        &self.0.table
    }

    pub fn num_reps(&self) -> usize {
        self.0.rep_group.len()
    }

    pub fn rep(&self, k: usize) -> &SignedPerm {
        self.0.table.element(self.0.rep_group[k])
    }

    pub fn reps(&self) -> impl Iterator<Item = &SignedPerm> {
        self.0.rep_group.iter().map(|&g| self.0.table.element(g))
    }

    pub fn rep_length(&self, k: usize) -> usize {
        self.0.table.length_of(self.0.rep_group[k])
    }

    pub fn rep_index(&self, w: &SignedPerm) -> Option<usize> {
        let g = self.0.table.index(w)?;
        match self.0.rep_of_group[g] {
            usize::MAX => None,
            k => Some(k),
        }
    }

    /// Bruhat order between representatives.
    pub fn rep_bruhat_leq(&self, x: usize, w: usize) -> bool {
        self.0
            .table
            .bruhat_leq_idx(self.0.rep_group[x], self.0.rep_group[w])
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if self.family().gen_indices(self.d()).contains(&i) {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange {
                family: self.family(),
                index: i,
                rank: self.d(),
            })
        }
    }

    /// Classifies w s_i for the k-th representative w.
    pub fn step(&self, k: usize, i: usize) -> GenStep {
        let inner = &self.0;
        let g = inner.rep_group[k];
        let gs = inner.table.right_mul_idx(g, i);
        match inner.rep_of_group[gs] {
            usize::MAX => GenStep::Out,
            k2 => {
                if inner.table.length_of(gs) > inner.table.length_of(g) {
                    GenStep::Up(k2)
                } else {
                    GenStep::Down(k2)
                }
            }
        }
    }

    fn same_context(&self, other: &ParabolicContext) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.family() == other.family()
                && self.d() == other.d()
                && self.j_set() == other.j_set())
    }
}

impl fmt::Debug for ParabolicContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ParabolicContext({} d={} J={:?}, {} reps)",
            self.family(),
            self.d(),
            self.j_set(),
            self.num_reps()
        )
    }
}

/// An element of M^J in the standard basis: a sparse map from rep indices to
/// Laurent polynomial coefficients, zero entries never stored.
#[derive(Clone)]
pub struct ModuleVector {
    ctx: ParabolicContext,
    coeffs: BTreeMap<usize, LaurentPoly>,
}

impl PartialEq for ModuleVector {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_context(&other.ctx) && self.coeffs == other.coeffs
    }
}

impl Eq for ModuleVector {}

impl ModuleVector {
    pub fn zero(ctx: &ParabolicContext) -> Self {
        ModuleVector {
            ctx: ctx.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// The standard basis vector M_w for the k-th representative.
    pub fn standard(ctx: &ParabolicContext, k: usize) -> Self {
        assert!(k < ctx.num_reps());
        let mut v = ModuleVector::zero(ctx);
        v.add_term(k, LaurentPoly::one());
        v
    }

    pub fn ctx(&self) -> &ParabolicContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs.get(&k).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> {
        self.coeffs.iter().map(|(k, f)| (*k, f))
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }

    fn add_term(&mut self, k: usize, f: LaurentPoly) {
        if f.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(k) {
            Entry::Vacant(v) => {
                v.insert(f);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &f;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_same(&self, other: &ModuleVector) -> Result<()> {
        if self.ctx.same_context(&other.ctx) {
            Ok(())
        } else {
            Err(Error::FamilyMismatch {
                left: self.ctx.family(),
                right: other.ctx.family(),
            })
        }
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, f) in &other.coeffs {
            out.add_term(*k, f.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, f) in &other.coeffs {
            out.add_term(*k, -f.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, f: &LaurentPoly) -> ModuleVector {
        if f.is_zero() {
            return ModuleVector::zero(&self.ctx);
        }
        ModuleVector {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|(k, g)| (*k, g * f)).collect(),
        }
    }

    /// v H_i by the three-case rule.
    pub fn act_generator(&self, i: usize) -> Result<ModuleVector> {
        self.ctx.check_gen(i)?;
        let q_inv_minus_q = LaurentPoly::from_terms([(-1i64, 1i64), (1, -1)]);
        let mut out = ModuleVector::zero(&self.ctx);
        for (&k, f) in &self.coeffs {
            match self.ctx.step(k, i) {
                GenStep::Up(k2) => out.add_term(k2, f.clone()),
                GenStep::Down(k2) => {
                    out.add_term(k2, f.clone());
                    out.add_term(k, f * &q_inv_minus_q);
                }
                GenStep::Out => out.add_term(k, f * &LaurentPoly::q_inv()),
            }
        }
        Ok(out)
    }

    /// v H_i^-1 = v H_i - (q^-1 - q) v.
    pub fn act_inverse_generator(&self, i: usize) -> Result<ModuleVector> {
        let q_inv_minus_q = LaurentPoly::from_terms([(-1i64, 1i64), (1, -1)]);
        let acted = self.act_generator(i)?;
        acted.sub(&self.scale(&q_inv_minus_q))
    }

    /// The bar involution: coefficients through q -> q^-1 and each M_w
    /// through M_e H_{i_1}^-1 ... H_{i_k}^-1 along a reduced word of w.
    pub fn bar(&self) -> ModuleVector {
        let mut out = ModuleVector::zero(&self.ctx);
        for (&k, f) in &self.coeffs {
            let mut bar_basis = ModuleVector::standard(&self.ctx, 0);
            debug_assert!(self.ctx.rep(0).is_identity());
            for i in self.ctx.rep(k).reduced_word() {
                bar_basis = bar_basis
                    .act_inverse_generator(i)
                    .expect("word uses valid generators");
            }
            let scaled = bar_basis.scale(&f.bar());
            for (k2, g) in scaled.coeffs {
                out.add_term(k2, g);
            }
        }
        out
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, poly) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if poly.is_one() {
                write!(f, "M{}", self.ctx.rep(*k).one_line())?;
            } else {
                write!(f, "({}) M{}", poly, self.ctx.rep(*k).one_line())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleVector({self})")
    }
}

pub fn act_generator(v: &ModuleVector, i: usize) -> Result<ModuleVector> {
    v.act_generator(i)
}

pub fn act_inverse_generator(v: &ModuleVector, i: usize) -> Result<ModuleVector> {
    v.act_inverse_generator(i)
}

pub fn bar_vector(v: &ModuleVector) -> ModuleVector {
    v.bar()
}

/// Which bar-invariant local factor the KL construction multiplies by, and
/// hence where the off-diagonal coefficients live.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KLSide {
    /// H_s + q; off-diagonals in q Z[q].
    Positive,
    /// H_s - q^-1; off-diagonals in q^-1 Z[q^-1].
    Negative,
}

impl KLSide {
    pub const ALL: [KLSide; 2] = [KLSide::Positive, KLSide::Negative];

    /// Splits f = gamma + rho with gamma bar-symmetric and rho strictly on
    /// this side's half-line.
    fn split(self, f: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        match self {
            KLSide::Positive => f.split_symmetric(),
            KLSide::Negative => {
                let (gamma, rho) = f.bar().split_symmetric();
                (gamma, rho.bar())
            }
        }
    }

    /// True when f is allowed as an off-diagonal coefficient.
    pub fn is_strict(self, f: &LaurentPoly) -> bool {
        match self {
            KLSide::Positive => f.min_exp().is_none_or(|m| m >= 1),
            KLSide::Negative => f.max_exp().is_none_or(|m| m <= -1),
        }
    }
}

impl fmt::Display for KLSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KLSide::Positive => write!(f, "positive"),
            KLSide::Negative => write!(f, "negative"),
        }
    }
}

impl std::str::FromStr for KLSide {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "positive" | "+" => Ok(KLSide::Positive),
            "negative" | "-" => Ok(KLSide::Negative),
            other => Err(Error::Parse(format!("unknown KL side {other:?}"))),
        }
    }
}

/// The m and (optionally) p coefficient tables of a KL basis. Columns are
/// expansions: m-column w holds the standard-basis coefficients of the KL
/// element at w, p-column w the KL-basis coefficients of M_w, so that the
/// literal matrix product m p is the identity.
pub struct KLTable {
    ctx: ParabolicContext,
    side: KLSide,
    m_cols: Vec<ModuleVector>,
    p_cols: Option<Vec<BTreeMap<usize, LaurentPoly>>>,
}

impl KLTable {
    pub fn ctx(&self) -> &ParabolicContext {
        &self.ctx
    }

    pub fn side(&self) -> KLSide {
        self.side
    }

    pub fn n(&self) -> usize {
        self.m_cols.len()
    }

    /// m_{x,w}: coefficient of M_x in the KL element at w.
    pub fn m(&self, x: usize, w: usize) -> LaurentPoly {
        self.m_cols[w].coeff(x)
    }

    /// The KL basis element at w as a module vector.
    pub fn kl_vector(&self, w: usize) -> &ModuleVector {
        &self.m_cols[w]
    }

    pub fn has_p(&self) -> bool {
        self.p_cols.is_some()
    }

    /// p_{x,w}: coefficient of the KL element at x in M_w.
    pub fn p(&self, x: usize, w: usize) -> LaurentPoly {
        self.p_cols.as_ref().expect("p table not computed")[w]
            .get(&x)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    /// Fills the p table by back-substitution against the unitriangular m.
    pub fn with_p(mut self) -> KLTable {
        if self.p_cols.is_some() {
            return self;
        }
        let n = self.n();
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut residual: BTreeMap<usize, LaurentPoly> =
                BTreeMap::from([(j, LaurentPoly::one())]);
            let mut col = BTreeMap::new();
            for i in (0..=j).rev() {
                let c = match residual.remove(&i) {
                    Some(c) if !c.is_zero() => c,
                    _ => continue,
                };
                for (x, f) in self.m_cols[i].terms() {
                    if x == i {
                        continue;
                    }
                    let entry = residual.entry(x).or_insert_with(LaurentPoly::zero);
                    *entry = &*entry - &(&c * f);
                    if entry.is_zero() {
                        residual.remove(&x);
                    }
                }
                col.insert(i, c);
            }
            assert!(residual.is_empty(), "back-substitution must consume e_{j}");
            cols.push(col);
        }
        self.p_cols = Some(cols);
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        let n = self.n();
        let dense = |get: &dyn Fn(usize, usize) -> LaurentPoly| -> Vec<Vec<LaurentPoly>> {
            (0..n)
                .map(|x| (0..n).map(|w| get(x, w)).collect())
                .collect()
        };
        let reps: Vec<String> = self.ctx.reps().map(|w| w.one_line()).collect();
        serde_json::json!({
            "family": self.ctx.family(),
            "d": self.ctx.d(),
            "J": self.ctx.j_set(),
            "side": self.side,
            "reps": reps,
            "m": dense(&|x, w| self.m(x, w)),
            "p": self.p_cols.as_ref().map(|_| dense(&|x, w| self.p(x, w))),
        })
    }

    /// CSV with one row per (x, w) pair; the p column is blank when the p
    /// table has not been computed.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,w,m,p\n");
        let n = self.n();
        for x in 0..n {
            for w in 0..n {
                let p = if self.p_cols.is_some() {
                    self.p(x, w).to_string()
                } else {
                    String::new()
                };
                out.push_str(&format!(
                    "\"{}\",\"{}\",{},{}\n",
                    self.ctx.rep(x).one_line(),
                    self.ctx.rep(w).one_line(),
                    self.m(x, w),
                    p
                ));
            }
        }
        out
    }
}

impl fmt::Debug for KLTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "KLTable({:?}, side {}, n={}, p {})",
            self.ctx,
            self.side,
            self.n(),
            if self.p_cols.is_some() { "yes" } else { "no" }
        )
    }
}

/// Builds the KL basis for the context by length induction, correcting each
/// candidate with the side's symmetric split until every off-diagonal
/// coefficient is strict.
pub fn kl_basis(ctx: &ParabolicContext, side: KLSide) -> KLTable {
    let n = ctx.num_reps();
    let local = match side {
        KLSide::Positive => LaurentPoly::q(),
        KLSide::Negative => -LaurentPoly::q_inv(),
    };
    let mut cols: Vec<ModuleVector> = Vec::with_capacity(n);
    for w in 0..n {
        if w == 0 {
            assert!(ctx.rep(0).is_identity());
            cols.push(ModuleVector::standard(ctx, 0));
            continue;
        }
        let s = ctx
            .family()
            .gen_indices(ctx.d())
            .find(|&i| ctx.rep(w).has_right_descent(i))
            .expect("non-identity representative has a descent");
        let parent = match ctx.step(w, s) {
            GenStep::Down(k) => k,
            other => panic!("descent step must stay in D_J, got {other:?}"),
        };
        let mut cand = cols[parent]
            .act_generator(s)
            .expect("valid generator")
            .add(&cols[parent].scale(&local))
            .expect("same context");
        for x in (0..w).rev() {
            let c = cand.coeff(x);
            if c.is_zero() {
                continue;
            }
            let (gamma, _rho) = side.split(&c);
            if gamma.is_zero() {
                continue;
            }
            cand = cand.sub(&cols[x].scale(&gamma)).expect("same context");
        }
        assert!(cand.coeff(w).is_one(), "diagonal coefficient must be 1");
        for (x, f) in cand.terms() {
            assert!(
                x == w || side.is_strict(f),
                "off-diagonal coefficient {f} at x={x} is not strict for side {side}"
            );
            assert!(
                ctx.rep_bruhat_leq(x, w),
                "support must lie below w in Bruhat order"
            );
        }
        cols.push(cand);
    }
    KLTable {
        ctx: ctx.clone(),
        side,
        m_cols: cols,
        p_cols: None,
    }
}

/// Consumes the table and returns it with the p side filled.
pub fn p_table(kl: KLTable) -> KLTable {
    kl.with_p()
}
