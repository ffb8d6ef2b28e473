//! Compositions, Young diagrams, tableaux and tabloids for types A and B.
//!
//! A type A composition (lambda_1, ..., lambda_n) of d has the usual diagram
//! with rows of the given lengths. A type B composition is a centro-symmetric
//! list (lambda_{-r}, ..., lambda_0, ..., lambda_r) with lambda_0 odd and
//! total 2d+1; its diagram has a middle row of width lambda_0 centered at the
//! origin, rows below starting at column 0, and the mirror image above, so
//! the cell set is closed under c -> -c with the center as unique fixed
//! point. Fillings in type B take values in {-d..d} with T(-c) = -T(c);
//! the positive half is a bijection onto [d], so everything is determined by
//! the rows on and below the middle.
//!
//! Row-reading sends a row-standard tableau to a permutation; four variants
//! (rows read top-down or bottom-up, composed with inversion or not) are kept
//! as an explicit knob because only some of them land in the set D_J of
//! minimal coset representatives, and which ones do is checked per shape
//! rather than assumed.

use crate::caps;
use crate::error::{Error, Result};
use crate::weyl::{self, Family, SignedPerm};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// A composition: type A parts (lambda_1..lambda_n), or the full
/// centro-symmetric type B list including the middle part.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    family: Family,
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(family: Family, parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?}: parts must be positive"
            )));
        }
        if family == Family::B {
            let n = parts.len();
            if n % 2 == 0 {
                return Err(Error::InvalidComposition(format!(
                    "{parts:?}: type B stores the full odd-length list"
                )));
            }
            let r = n / 2;
            if parts[r] % 2 == 0 {
                return Err(Error::InvalidComposition(format!(
                    "{parts:?}: middle part must be odd"
                )));
            }
            for i in 0..r {
                if parts[i] != parts[n - 1 - i] {
                    return Err(Error::InvalidComposition(format!(
                        "{parts:?}: not centro-symmetric"
                    )));
                }
            }
            if parts.iter().sum::<usize>() % 2 == 0 {
                return Err(Error::InvalidComposition(format!(
                    "{parts:?}: type B total must be odd"
                )));
            }
        }
        Ok(Composition { family, parts })
    }

    pub fn parse(family: Family, s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {tok:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Composition::new(family, parts)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of letters d of the acting group.
    pub fn d(&self) -> usize {
        let total: usize = self.parts.iter().sum();
        match self.family {
            Family::A => total,
            Family::B => (total - 1) / 2,
        }
    }

    /// Half the number of off-middle rows in type B; 0 in type A.
    pub fn r(&self) -> usize {
        match self.family {
            Family::A => 0,
            Family::B => self.parts.len() / 2,
        }
    }

    /// Middle part lambda_0 (type B only).
    pub fn lambda0(&self) -> usize {
        assert_eq!(self.family, Family::B);
        self.parts[self.r()]
    }

    /// lambda_0^natural = floor(lambda_0 / 2).
    pub fn lambda0_nat(&self) -> usize {
        self.lambda0() / 2
    }

    /// Parts with positive index (lambda_1..lambda_r) in type B; all parts in
    /// type A.
    pub fn positive_parts(&self) -> &[usize] {
        match self.family {
            Family::A => &self.parts,
            Family::B => &self.parts[self.r() + 1..],
        }
    }

    /// Weakly decreasing on the positive side.
    pub fn is_partition(&self) -> bool {
        self.positive_parts().windows(2).all(|w| w[0] >= w[1])
    }

    /// Order of the Young subgroup W_lambda.
    pub fn young_subgroup_order(&self) -> usize {
        let fact = |k: usize| (1..=k).product::<usize>();
        match self.family {
            Family::A => self.parts.iter().map(|&p| fact(p)).product(),
            Family::B => {
                let m = self.lambda0_nat();
                (1 << m) * fact(m)
                    * self
                        .positive_parts()
                        .iter()
                        .map(|&p| fact(p))
                        .product::<usize>()
            }
        }
    }

    /// The generator subset J with W_J = W_lambda: all indices minus the
    /// partial sums that mark row boundaries. In type B the removed indices
    /// are lambda_0^nat, lambda_0^nat + lambda_1, and so on, stopping before
    /// the last row.
    pub fn to_j(&self) -> Vec<usize> {
        let d = self.d();
        let mut removed = BTreeSet::new();
        match self.family {
            Family::A => {
                let mut acc = 0;
                for &p in &self.parts[..self.parts.len() - 1] {
                    acc += p;
                    removed.insert(acc);
                }
            }
            Family::B => {
                let mut acc = self.lambda0_nat();
                removed.insert(acc);
                let pos = self.positive_parts();
                for &p in &pos[..pos.len().saturating_sub(1)] {
                    acc += p;
                    removed.insert(acc);
                }
                if self.r() == 0 {
                    removed.clear();
                }
            }
        }
        self.family
            .gen_indices(d)
            .filter(|i| !removed.contains(i))
            .collect()
    }

    /// Number of row-standard tableaux of this shape, equal to the index of
    /// the Young subgroup.
    pub fn row_standard_count(&self) -> usize {
        self.family.group_order(self.d()).expect("small d") / self.young_subgroup_order()
    }

    /// Diagram row indices, top to bottom: 1..=n in type A, -r..=r in type B.
    pub fn row_indices(&self) -> Vec<i32> {
        match self.family {
            Family::A => (1..=self.parts.len() as i32).collect(),
            Family::B => {
                let r = self.r() as i32;
                (-r..=r).collect()
            }
        }
    }

    /// Column range of a diagram row.
    pub fn row_cols(&self, row: i32) -> std::ops::RangeInclusive<i32> {
        match self.family {
            Family::A => 1..=self.parts[(row - 1) as usize] as i32,
            Family::B => {
                if row == 0 {
                    let m = self.lambda0_nat() as i32;
                    -m..=m
                } else {
                    let len = self.positive_parts()[(row.unsigned_abs() as usize) - 1] as i32;
                    if row > 0 {
                        0..=len - 1
                    } else {
                        -(len - 1)..=0
                    }
                }
            }
        }
    }

    /// All cells sorted by (row, column).
    pub fn cells(&self) -> Vec<(i32, i32)> {
        let mut out = Vec::new();
        for i in self.row_indices() {
            for j in self.row_cols(i) {
                out.push((i, j));
            }
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self)
    }
}

impl Serialize for Composition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Composition", 2)?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("parts", &self.parts)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            family: Family,
            parts: Vec<usize>,
        }
        let raw = Raw::deserialize(d)?;
        Composition::new(raw.family, raw.parts).map_err(serde::de::Error::custom)
    }
}

fn positive_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for rest in positive_compositions(total - first, parts - 1) {
            let mut c = Vec::with_capacity(parts);
            c.push(first);
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

/// All compositions in Lambda(n, d). For type B with n even the set is the
/// n+1 part list with middle part 1, following the odd-length parametrization.
pub fn compositions(family: Family, n: usize, d: usize) -> Vec<Composition> {
    assert!(n >= 1 && d >= 1);
    match family {
        Family::A => positive_compositions(d, n)
            .into_iter()
            .map(|p| Composition::new(family, p).unwrap())
            .collect(),
        Family::B => {
            let mut out = Vec::new();
            let (r, forced_middle) = if n % 2 == 1 {
                ((n - 1) / 2, None)
            } else {
                (n / 2, Some(1usize))
            };
            for m in 0..=d {
                let lambda0 = 2 * m + 1;
                if let Some(f) = forced_middle {
                    if lambda0 != f {
                        continue;
                    }
                }
                if d < m {
                    continue;
                }
                for pos in positive_compositions(d - m, r) {
                    let mut parts: Vec<usize> = pos.iter().rev().copied().collect();
                    parts.push(lambda0);
                    parts.extend(&pos);
                    out.push(Composition::new(family, parts).unwrap());
                }
            }
            out.sort();
            out
        }
    }
}

/// All compositions of d across every part count.
pub fn all_compositions(family: Family, d: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    match family {
        Family::A => {
            for n in 1..=d {
                out.extend(compositions(family, n, d));
            }
        }
        Family::B => {
            for n in (1..=2 * d + 1).step_by(2) {
                out.extend(compositions(family, n, d));
            }
        }
    }
    out
}

/// All partitions of d: compositions weakly decreasing on the positive side.
pub fn all_partitions(family: Family, d: usize) -> Vec<Composition> {
    all_compositions(family, d)
        .into_iter()
        .filter(|c| c.is_partition())
        .collect()
}

pub fn composition_to_j(c: &Composition) -> Vec<usize> {
    c.to_j()
}

/// A filling of the diagram of `shape`. Rows are stored top to bottom in
/// diagram order, entries left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Composition,
    rows: Vec<Vec<i32>>,
}

impl Tableau {
    pub fn new(shape: Composition, rows: Vec<Vec<i32>>) -> Result<Self> {
        let err = |msg: String| Error::InvalidComposition(msg);
        let row_idx = shape.row_indices();
        if rows.len() != row_idx.len() {
            return Err(err(format!(
                "{shape}: expected {} rows, got {}",
                row_idx.len(),
                rows.len()
            )));
        }
        for (k, &i) in row_idx.iter().enumerate() {
            let want = shape.row_cols(i).count();
            if rows[k].len() != want {
                return Err(err(format!(
                    "{shape}: row {i} must have {want} entries, got {}",
                    rows[k].len()
                )));
            }
        }
        let d = shape.d() as i32;
        let mut values: Vec<i32> = rows.iter().flatten().copied().collect();
        values.sort_unstable();
        let expected: Vec<i32> = match shape.family() {
            Family::A => (1..=d).collect(),
            Family::B => (-d..=d).collect(),
        };
        if values != expected {
            return Err(err(format!("{shape}: filling is not a bijection")));
        }
        if shape.family() == Family::B {
            let n = rows.len();
            for k in 0..n {
                let mirror: Vec<i32> = rows[n - 1 - k].iter().rev().map(|&v| -v).collect();
                if rows[k] != mirror {
                    return Err(err(format!("{shape}: filling is not centro-symmetric")));
                }
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn family(&self) -> Family {
        self.shape.family()
    }

    /// Rows top to bottom, entries left to right.
    pub fn rows(&self) -> &[Vec<i32>] {
        &self.rows
    }

    fn storage_row(&self, row: i32) -> usize {
        match self.family() {
            Family::A => (row - 1) as usize,
            Family::B => (row + self.shape.r() as i32) as usize,
        }
    }

    /// Entry at diagram cell (row, col).
    pub fn entry(&self, row: i32, col: i32) -> i32 {
        let cols = self.shape.row_cols(row);
        let offset = (col - cols.start()) as usize;
        self.rows[self.storage_row(row)][offset]
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows
            .iter()
            .all(|row| row.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        if !self.is_row_standard() {
            return false;
        }
        let cells = self.shape.cells();
        let mut cols: std::collections::BTreeMap<i32, Vec<i32>> = Default::default();
        for (i, j) in cells {
            cols.entry(j).or_default().push(self.entry(i, j));
        }
        cols.values()
            .all(|col| col.windows(2).all(|w| w[0] < w[1]))
    }

    /// Right action on letters: (T w)(c) = w^{-1}(T(c)), so that
    /// (T u) v = T (u v).
    pub fn act_on_letters(&self, w: &SignedPerm) -> Result<Tableau> {
        if w.degree() != self.shape.d() || w.family() != self.family() {
            return Err(Error::RankMismatch {
                left: self.shape.d(),
                right: w.degree(),
            });
        }
        let winv = w.inverse();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| if v == 0 { 0 } else { winv.apply(v) })
                    .collect()
            })
            .collect();
        Ok(Tableau {
            shape: self.shape.clone(),
            rows,
        })
    }

    /// The tabloid of T: each row sorted ascending. Centro-symmetry is
    /// preserved because mirrored rows sort to mirrored rows.
    pub fn to_tabloid(&self) -> Tabloid {
        let mut rows = self.rows.clone();
        for row in &mut rows {
            row.sort_unstable();
        }
        Tabloid(Tableau {
            shape: self.shape.clone(),
            rows,
        })
    }

    /// ASCII grid, type B rows aligned on their column offsets.
    pub fn ascii(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let min_col = self
            .shape
            .row_indices()
            .iter()
            .map(|&i| *self.shape.row_cols(i).start())
            .min()
            .unwrap();
        let mut out = String::new();
        for &i in &self.shape.row_indices() {
            let cols = self.shape.row_cols(i);
            let pad = (*cols.start() - min_col) as usize;
            out.push_str(&" ".repeat(pad * (width + 1)));
            let body: Vec<String> = cols
                .clone()
                .map(|j| format!("{:>width$}", self.entry(i, j)))
                .collect();
            out.push_str(&body.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({} {:?})", self.shape, self.rows)
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Tableau", 3)?;
        st.serialize_field("family", &self.family())?;
        st.serialize_field("shape", &self.shape.parts())?;
        st.serialize_field("rows", &self.rows)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            family: Family,
            shape: Vec<usize>,
            rows: Vec<Vec<i32>>,
        }
        let raw = Raw::deserialize(d)?;
        let shape = Composition::new(raw.family, raw.shape).map_err(serde::de::Error::custom)?;
        Tableau::new(shape, raw.rows).map_err(serde::de::Error::custom)
    }
}

/// A row-equivalence class of tableaux, held by its unique row-standard
/// representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tabloid(Tableau);

impl Tabloid {
    pub fn canonical(&self) -> &Tableau {
        &self.0
    }
}

impl fmt::Debug for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tabloid({} {:?})", self.0.shape, self.0.rows)
    }
}

/// The superstandard filling: cells in (row, column) order get 1..d in type A
/// and -d..d in type B. Its row group is exactly W_J for J the generator set
/// of the shape.
pub fn t0(shape: &Composition) -> Tableau {
    let d = shape.d() as i32;
    let mut next = match shape.family() {
        Family::A => 1,
        Family::B => -d,
    };
    let mut rows = Vec::new();
    for i in shape.row_indices() {
        let mut row = Vec::new();
        for _ in shape.row_cols(i) {
            row.push(next);
            next += 1;
        }
        rows.push(row);
    }
    Tableau::new(shape.clone(), rows).expect("t0 is a valid filling")
}

fn k_subsets(pool: &[i32], k: usize) -> Vec<Vec<i32>> {
    if k == 0 {
        return vec![vec![]];
    }
    if pool.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for idx in 0..=pool.len() - k {
        for rest in k_subsets(&pool[idx + 1..], k - 1) {
            let mut s = Vec::with_capacity(k);
            s.push(pool[idx]);
            s.extend(rest);
            out.push(s);
        }
    }
    out
}

fn distribute_rows(pool: &[i32], sizes: &[usize], signed: bool) -> Vec<Vec<Vec<i32>>> {
    if sizes.is_empty() {
        return if pool.is_empty() { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in k_subsets(pool, sizes[0]) {
        let rest_pool: Vec<i32> = pool.iter().copied().filter(|v| !first.contains(v)).collect();
        let sign_choices: Vec<Vec<i32>> = if signed {
            let mut rows = Vec::new();
            for mask in 0u32..(1 << first.len()) {
                let mut row: Vec<i32> = first
                    .iter()
                    .enumerate()
                    .map(|(b, &v)| if mask >> b & 1 == 1 { -v } else { v })
                    .collect();
                row.sort_unstable();
                rows.push(row);
            }
            rows.sort();
            rows
        } else {
            vec![first.clone()]
        };
        for rest in distribute_rows(&rest_pool, &sizes[1..], signed) {
            for row in &sign_choices {
                let mut assignment = Vec::with_capacity(sizes.len());
                assignment.push(row.clone());
                assignment.extend(rest.iter().cloned());
                out.push(assignment);
            }
        }
    }
    out
}

/// All row-standard tableaux of the shape, sorted. Errors when the count
/// would exceed the coset cap, since |rStd| = |W| / |W_lambda|.
pub fn enumerate_row_standard(shape: &Composition) -> Result<Vec<Tableau>> {
    let count = shape.row_standard_count();
    let cap = caps::coset_cap();
    if count > cap {
        return Err(Error::CapExceeded {
            what: "row-standard tableau count",
            size: count,
            cap,
            env_var: caps::COSET_ENV,
        });
    }
    let d = shape.d() as i32;
    let mut out = Vec::with_capacity(count);
    match shape.family() {
        Family::A => {
            let pool: Vec<i32> = (1..=d).collect();
            for rows in distribute_rows(&pool, shape.parts(), false) {
                out.push(Tableau::new(shape.clone(), rows).unwrap());
            }
        }
        Family::B => {
            let m = shape.lambda0_nat();
            let pool: Vec<i32> = (1..=d).collect();
            for middle_abs in k_subsets(&pool, m) {
                let mut middle: Vec<i32> = middle_abs.iter().rev().map(|&v| -v).collect();
                middle.push(0);
                middle.extend(&middle_abs);
                let rest: Vec<i32> = pool
                    .iter()
                    .copied()
                    .filter(|v| !middle_abs.contains(v))
                    .collect();
                for pos_rows in distribute_rows(&rest, shape.positive_parts(), true) {
                    let mut rows: Vec<Vec<i32>> = pos_rows
                        .iter()
                        .rev()
                        .map(|row| row.iter().rev().map(|&v| -v).collect())
                        .collect();
                    rows.push(middle.clone());
                    rows.extend(pos_rows.iter().cloned());
                    out.push(Tableau::new(shape.clone(), rows).unwrap());
                }
            }
        }
    }
    assert_eq!(out.len(), count, "enumeration disagrees with the index formula");
    out.sort();
    Ok(out)
}

/// All standard tableaux: row-standard with strictly increasing columns.
pub fn enumerate_standard(shape: &Composition) -> Result<Vec<Tableau>> {
    Ok(enumerate_row_standard(shape)?
        .into_iter()
        .filter(|t| t.is_standard())
        .collect())
}

/// The four row-reading conventions: rows top-down or bottom-up, composed
/// with inversion or not. The reference is `InverseTop`, the map w_T with
/// w_T(T(c)) = T_0(c) on every cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapVariant {
    InverseTop,
    InverseBottom,
    PlainTop,
    PlainBottom,
}

impl MapVariant {
    pub const ALL: [MapVariant; 4] = [
        MapVariant::InverseTop,
        MapVariant::InverseBottom,
        MapVariant::PlainTop,
        MapVariant::PlainBottom,
    ];

    fn inverse(self) -> bool {
        matches!(self, MapVariant::InverseTop | MapVariant::InverseBottom)
    }

    fn bottom_up(self) -> bool {
        matches!(self, MapVariant::InverseBottom | MapVariant::PlainBottom)
    }
}

impl fmt::Display for MapVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MapVariant::InverseTop => "inverse-top",
            MapVariant::InverseBottom => "inverse-bottom",
            MapVariant::PlainTop => "plain-top",
            MapVariant::PlainBottom => "plain-bottom",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for MapVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inverse-top" => Ok(MapVariant::InverseTop),
            "inverse-bottom" => Ok(MapVariant::InverseBottom),
            "plain-top" => Ok(MapVariant::PlainTop),
            "plain-bottom" => Ok(MapVariant::PlainBottom),
            other => Err(Error::Parse(format!("unknown map variant {other:?}"))),
        }
    }
}

/// Reference filling for a reading order: cells in (row, col) order for
/// top-down reading, (-row, col) for bottom-up, filled with 1..d resp -d..d.
fn reference_filling(shape: &Composition, bottom_up: bool) -> Vec<((i32, i32), i32)> {
    let mut cells = shape.cells();
    if bottom_up {
        cells.sort_by_key(|&(i, j)| (-i, j));
    }
    let d = shape.d() as i32;
    let start = match shape.family() {
        Family::A => 1,
        Family::B => -d,
    };
    cells
        .into_iter()
        .enumerate()
        .map(|(k, c)| (c, start + k as i32))
        .collect()
}

/// The coset representative read off a row-standard tableau. With the
/// reference filling F of the chosen reading order, the plain variants
/// return the letter map F(c) -> T(c) and the inverse variants its inverse.
pub fn tableau_to_coset_rep(t: &Tableau, variant: MapVariant) -> Result<SignedPerm> {
    if !t.is_row_standard() {
        return Err(Error::NotRowStandard(format!("{t:?}")));
    }
    let shape = t.shape();
    let d = shape.d();
    let mut window = vec![0i32; d];
    for (cell, ref_val) in reference_filling(shape, variant.bottom_up()) {
        let t_val = t.entry(cell.0, cell.1);
        let (from, to) = if variant.inverse() {
            (t_val, ref_val)
        } else {
            (ref_val, t_val)
        };
        if from > 0 {
            window[(from - 1) as usize] = to;
        }
    }
    SignedPerm::from_window(shape.family(), window)
}

/// Maps every row-standard tableau through the variant and checks the result
/// is a bijection onto the minimal coset representatives D_J. Returns the
/// pairs sorted by tableau on success.
pub fn coset_rep_bijection(
    shape: &Composition,
    variant: MapVariant,
) -> Result<Vec<(Tableau, SignedPerm)>> {
    let tableaux = enumerate_row_standard(shape)?;
    let j_set = shape.to_j();
    let reps = weyl::minimal_coset_reps(shape.family(), shape.d(), &j_set, caps::coset_cap())?;
    let rep_set: BTreeSet<&SignedPerm> = reps.iter().collect();
    let mut seen = BTreeSet::new();
    let mut pairs = Vec::with_capacity(tableaux.len());
    for t in tableaux {
        let w = tableau_to_coset_rep(&t, variant)?;
        if !rep_set.contains(&w) {
            return Err(Error::VariantNotBijective {
                variant: variant.to_string(),
                shape: shape.to_string(),
                reason: format!("image {w:?} of {t:?} is not a minimal coset representative"),
            });
        }
        if !seen.insert(w.clone()) {
            return Err(Error::VariantNotBijective {
                variant: variant.to_string(),
                shape: shape.to_string(),
                reason: format!("image {w:?} hit twice"),
            });
        }
        pairs.push((t, w));
    }
    if seen.len() != rep_set.len() {
        return Err(Error::VariantNotBijective {
            variant: variant.to_string(),
            shape: shape.to_string(),
            reason: format!("image has {} elements, D_J has {}", seen.len(), rep_set.len()),
        });
    }
    Ok(pairs)
}

/// Elements of the group preserving every row of T as a set of letters.
/// For T = t0 this is the Young subgroup W_J.
pub fn row_group(t: &Tableau) -> Result<Vec<SignedPerm>> {
    let table = weyl::group_table(t.family(), t.shape().d())?;
    let row_sets: Vec<BTreeSet<i32>> = t
        .rows()
        .iter()
        .map(|row| row.iter().copied().collect())
        .collect();
    Ok(table
        .elements()
        .iter()
        .filter(|w| {
            row_sets.iter().all(|set| {
                set.iter()
                    .all(|&v| set.contains(&(if v == 0 { 0 } else { w.apply(v) })))
            })
        })
        .cloned()
        .collect())
}
