//! Weyl groups of types A and B realized as (signed) permutations.
//!
//! An element of the type B group on d letters is a permutation w of
//! {-d, ..., -1, 1, ..., d} with w(-i) = -w(i); it is stored through its
//! window [w(1), ..., w(d)]. The type A group on d letters is the subgroup
//! with no sign changes, i.e. ordinary permutations of {1, ..., d}.
//!
//! Generators: s_i for i >= 1 swaps i with i+1 (and -i with -i-1), and in
//! type B there is additionally s_0 swapping -1 with 1. Products compose as
//! functions: (u v)(i) = u(v(i)), so w s_i swaps window positions while
//! s_i w relabels window values.
//!
//! Lengths come in closed form (inversions, plus the negative-entry
//! correction in type B) and are cross-checked against Cayley-graph
//! distance in the tests. Bruhat order is materialized as a bit matrix
//! using the descent recursion x <= w iff min(x, xs) <= ws for any right
//! descent s of w.

use crate::caps;
use crate::error::{Error, Result};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// Which series the group belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
}

impl Family {
    /// Generator indices: 1..d in type A (on d letters), 0..d in type B.
    pub fn gen_indices(self, d: usize) -> std::ops::Range<usize> {
        match self {
            Family::A => 1..d,
            Family::B => 0..d,
        }
    }

    /// Group order d! resp. 2^d d!, None on overflow.
    pub fn group_order(self, d: usize) -> Option<usize> {
        let mut n: usize = 1;
        for k in 1..=d {
            n = n.checked_mul(k)?;
        }
        if self == Family::B {
            for _ in 0..d {
                n = n.checked_mul(2)?;
            }
        }
        Some(n)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "a" | "A" => Ok(Family::A),
            "b" | "B" => Ok(Family::B),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// A signed permutation in window notation, tagged with its family.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    family: Family,
    window: Vec<i32>,
}

impl SignedPerm {
    pub fn identity(family: Family, d: usize) -> Self {
        SignedPerm {
            family,
            window: (1..=d as i32).collect(),
        }
    }

    /// Builds from a window [w(1), ..., w(d)], validating that the absolute
    /// values are a permutation of 1..=d and that type A has no signs.
    pub fn from_window(family: Family, window: Vec<i32>) -> Result<Self> {
        let d = window.len();
        let mut seen = vec![false; d];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > d {
                return Err(Error::InvalidPermutation(format!(
                    "entry {v} out of range for d = {d}"
                )));
            }
            if seen[a - 1] {
                return Err(Error::InvalidPermutation(format!("letter {a} repeated")));
            }
            seen[a - 1] = true;
            if family == Family::A && v < 0 {
                return Err(Error::InvalidPermutation(format!(
                    "negative entry {v} in type A"
                )));
            }
        }
        Ok(SignedPerm { family, window })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of letters d.
    pub fn degree(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Image of the letter i, for i in {-d..-1, 1..d}.
    pub fn apply(&self, i: i32) -> i32 {
        if i > 0 {
            self.window[(i - 1) as usize]
        } else {
            -self.window[(-i - 1) as usize]
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &v)| v == k as i32 + 1)
    }

    fn check_compatible(&self, other: &SignedPerm) -> Result<()> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch {
                left: self.family,
                right: other.family,
            });
        }
        if self.degree() != other.degree() {
            return Err(Error::RankMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// Composition (self * rhs)(i) = self(rhs(i)).
    pub fn mul(&self, rhs: &SignedPerm) -> Result<SignedPerm> {
        self.check_compatible(rhs)?;
        let window = (1..=self.degree() as i32)
            .map(|i| self.apply(rhs.apply(i)))
            .collect();
        Ok(SignedPerm {
            family: self.family,
            window,
        })
    }

    pub fn inverse(&self) -> SignedPerm {
        let d = self.degree();
        let mut window = vec![0i32; d];
        for i in 1..=d as i32 {
            let j = self.apply(i);
            if j > 0 {
                window[(j - 1) as usize] = i;
            } else {
                window[(-j - 1) as usize] = -i;
            }
        }
        SignedPerm {
            family: self.family,
            window,
        }
    }

    /// Number of window entries that are negative.
    pub fn neg(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    /// Coxeter length. In type A this is the inversion count; in type B the
    /// inversion count plus sum of |w(i)| over negative entries.
    pub fn length(&self) -> usize {
        let d = self.degree();
        let mut len = 0usize;
        for i in 0..d {
            for j in i + 1..d {
                if self.window[i] > self.window[j] {
                    len += 1;
                }
            }
        }
        if self.family == Family::B {
            for &v in &self.window {
                if v < 0 {
                    len += (-v) as usize;
                }
            }
        }
        len
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if self.family.gen_indices(self.degree()).contains(&i) {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange {
                family: self.family,
                index: i,
                rank: self.degree(),
            })
        }
    }

    /// Right product w s_i, in place of window positions.
    pub fn mul_gen_right(&self, i: usize) -> Result<SignedPerm> {
        self.check_gen(i)?;
        let mut window = self.window.clone();
        if i == 0 {
            window[0] = -window[0];
        } else {
            window.swap(i - 1, i);
        }
        Ok(SignedPerm {
            family: self.family,
            window,
        })
    }

    /// Left product s_i w, relabeling window values.
    pub fn mul_gen_left(&self, i: usize) -> Result<SignedPerm> {
        self.check_gen(i)?;
        let mut window = self.window.clone();
        if i == 0 {
            for v in &mut window {
                if v.unsigned_abs() == 1 {
                    *v = -*v;
                }
            }
        } else {
            let (a, b) = (i as i32, i as i32 + 1);
            for v in &mut window {
                if v.unsigned_abs() == a as u32 {
                    *v = v.signum() * b;
                } else if v.unsigned_abs() == b as u32 {
                    *v = v.signum() * a;
                }
            }
        }
        Ok(SignedPerm {
            family: self.family,
            window,
        })
    }

    /// True iff l(w s_i) < l(w).
    pub fn has_right_descent(&self, i: usize) -> bool {
        if i == 0 {
            self.window[0] < 0
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    /// True iff l(s_i w) < l(w).
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        self.family
            .gen_indices(self.degree())
            .filter(|&i| self.has_right_descent(i))
            .collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    /// True iff w is the minimal-length representative of its coset W_J w,
    /// i.e. no j in J is a left descent.
    pub fn is_min_coset_rep(&self, j_set: &[usize]) -> bool {
        let inv = self.inverse();
        j_set.iter().all(|&j| !inv.has_right_descent(j))
    }

    /// A reduced word, greedily stripping the smallest right descent.
    /// The returned word (i_1, ..., i_k) satisfies w = s_{i_1} ... s_{i_k}.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(w.length());
        while !w.is_identity() {
            let i = w
                .family
                .gen_indices(w.degree())
                .find(|&i| w.has_right_descent(i))
                .expect("non-identity element has a right descent");
            rev.push(i);
            w = w.mul_gen_right(i).unwrap();
        }
        rev.reverse();
        rev
    }

    /// One-line notation `|w(1),...,w(d)|`.
    pub fn one_line(&self) -> String {
        let body: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        format!("|{}|", body.join(","))
    }

    /// Parses one-line notation; the family is context the string lacks.
    pub fn parse(family: Family, s: &str) -> Result<SignedPerm> {
        let inner = s
            .trim()
            .strip_prefix('|')
            .and_then(|t| t.strip_suffix('|'))
            .ok_or_else(|| Error::Parse(format!("expected |..| notation, got {s:?}")))?;
        let window = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad window entry {tok:?}")))
            })
            .collect::<Result<Vec<i32>>>()?;
        SignedPerm::from_window(family, window)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line())
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.one_line())
    }
}

impl Serialize for SignedPerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.one_line())
    }
}

/// The generator s_i of the group on d letters.
pub fn generator(family: Family, d: usize, i: usize) -> Result<SignedPerm> {
    SignedPerm::identity(family, d).mul_gen_right(i)
}

/// Product u v with (u v)(i) = u(v(i)).
pub fn product(u: &SignedPerm, v: &SignedPerm) -> Result<SignedPerm> {
    u.mul(v)
}

pub fn neg(w: &SignedPerm) -> usize {
    w.neg()
}

pub fn length(w: &SignedPerm) -> usize {
    w.length()
}

/// Element built from a word in the generators (not necessarily reduced).
pub fn from_word(family: Family, d: usize, word: &[usize]) -> Result<SignedPerm> {
    let mut w = SignedPerm::identity(family, d);
    for &i in word {
        w = w.mul_gen_right(i)?;
    }
    Ok(w)
}

/// Square bit matrix storing one column per group element.
struct BitMatrix {
    words_per_col: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words_per_col = n.div_ceil(64);
        BitMatrix {
            words_per_col,
            bits: vec![0u64; words_per_col * n],
        }
    }

    fn get(&self, row: usize, col: usize) -> bool {
        let w = self.bits[col * self.words_per_col + row / 64];
        (w >> (row % 64)) & 1 == 1
    }

    fn set(&mut self, row: usize, col: usize) {
        self.bits[col * self.words_per_col + row / 64] |= 1 << (row % 64);
    }

    fn col(&self, col: usize) -> &[u64] {
        &self.bits[col * self.words_per_col..(col + 1) * self.words_per_col]
    }

    fn col_rows(&self, col: usize) -> Vec<usize> {
        let mut rows = Vec::new();
        for (wi, &word) in self.col(col).iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                rows.push(wi * 64 + b);
                bits &= bits - 1;
            }
        }
        rows
    }
}

/// Fully enumerated group with index maps, multiplication tables against the
/// generators, and the Bruhat order. Built once per (family, d) and shared.
pub struct GroupTable {
    pub family: Family,
    pub d: usize,
    elements: Vec<SignedPerm>,
    index_of: HashMap<Vec<i32>, usize>,
    lengths: Vec<usize>,
    /// right_mul[x][slot] = index of x s_i where slot runs over gen_indices.
    right_mul: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    bruhat: BitMatrix,
}

impl GroupTable {
    /// Enumerates the whole group and materializes its tables. Fails before
    /// allocating anything if the group order would exceed `cap`.
    pub fn build(family: Family, d: usize, cap: usize) -> Result<GroupTable> {
        assert!(d >= 1, "need at least one letter");
        let order = family.group_order(d).unwrap_or(usize::MAX);
        if order > cap {
            return Err(Error::CapExceeded {
                what: "group order",
                size: order,
                cap,
                env_var: caps::GROUP_ORDER_ENV,
            });
        }

        let gens: Vec<usize> = family.gen_indices(d).collect();
        let mut elements = vec![SignedPerm::identity(family, d)];
        let mut seen: HashMap<Vec<i32>, usize> = HashMap::with_capacity(order);
        seen.insert(elements[0].window.clone(), 0);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &idx in &frontier {
                let w = elements[idx].clone();
                for &i in &gens {
                    let ws = w.mul_gen_right(i).unwrap();
                    if !seen.contains_key(&ws.window) {
                        seen.insert(ws.window.clone(), elements.len());
                        next.push(elements.len());
                        elements.push(ws);
                    }
                }
            }
            frontier = next;
        }
        assert_eq!(elements.len(), order, "BFS must close up at the group order");

        elements.sort_by(|a, b| (a.length(), &a.window).cmp(&(b.length(), &b.window)));
        let index_of: HashMap<Vec<i32>, usize> = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (w.window.clone(), k))
            .collect();
        let lengths: Vec<usize> = elements.iter().map(|w| w.length()).collect();

        let right_mul: Vec<Vec<usize>> = elements
            .iter()
            .map(|w| {
                gens.iter()
                    .map(|&i| index_of[&w.mul_gen_right(i).unwrap().window])
                    .collect()
            })
            .collect();
        let inverse: Vec<usize> = elements
            .iter()
            .map(|w| index_of[&w.inverse().window])
            .collect();

        let n = elements.len();
        let mut bruhat = BitMatrix::new(n);
        bruhat.set(0, 0);
        for w in 1..n {
            let slot = gens
                .iter()
                .position(|&i| elements[w].has_right_descent(i))
                .expect("non-identity element has a right descent");
            let ws = right_mul[w][slot];
            debug_assert!(lengths[ws] < lengths[w]);
            // x <= w iff min(x, x s) <= w s, hence col(w) = col(ws) u col(ws) s.
            let below: Vec<usize> = bruhat.col_rows(ws);
            for x in below {
                bruhat.set(x, w);
                bruhat.set(right_mul[x][slot], w);
            }
        }

        Ok(GroupTable {
            family,
            d,
            elements,
            index_of,
            lengths,
            right_mul,
            inverse,
            bruhat,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements sorted by (length, window), identity first.
    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &SignedPerm {
        &self.elements[idx]
    }

    pub fn index(&self, w: &SignedPerm) -> Option<usize> {
        if w.family != self.family || w.degree() != self.d {
            return None;
        }
        self.index_of.get(&w.window).copied()
    }

    pub fn length_of(&self, idx: usize) -> usize {
        self.lengths[idx]
    }

    fn gen_slot(&self, i: usize) -> usize {
        match self.family {
            Family::A => i - 1,
            Family::B => i,
        }
    }

    /// Index of element * s_i.
    pub fn right_mul_idx(&self, idx: usize, i: usize) -> usize {
        self.right_mul[idx][self.gen_slot(i)]
    }

    pub fn inverse_idx(&self, idx: usize) -> usize {
        self.inverse[idx]
    }

    /// Bruhat order on indices.
    pub fn bruhat_leq_idx(&self, x: usize, w: usize) -> bool {
        self.bruhat.get(x, w)
    }

    /// Indices of all elements below w in Bruhat order, w included.
    pub fn bruhat_below(&self, w: usize) -> Vec<usize> {
        self.bruhat.col_rows(w)
    }

    /// Indices of the minimal coset representatives for W_J \ W, sorted the
    /// same way as `elements`.
    pub fn min_coset_rep_indices(&self, j_set: &[usize]) -> Result<Vec<usize>> {
        for &j in j_set {
            if !self.family.gen_indices(self.d).contains(&j) {
                return Err(Error::InvalidParabolic {
                    j: j_set.to_vec(),
                    rank: self.d,
                });
            }
        }
        Ok((0..self.order())
            .filter(|&k| self.elements[k].is_min_coset_rep(j_set))
            .collect())
    }
}

static TABLES: Lazy<Mutex<HashMap<(Family, usize), Arc<GroupTable>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Shared group table for (family, d), built on first use under the
/// environment-controlled group order cap.
pub fn group_table(family: Family, d: usize) -> Result<Arc<GroupTable>> {
    let mut map = TABLES.lock().unwrap();
    if let Some(t) = map.get(&(family, d)) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(GroupTable::build(family, d, caps::group_order_cap())?);
    map.insert((family, d), Arc::clone(&table));
    Ok(table)
}

/// All group elements sorted by (length, window). Errors when the group
/// order exceeds `cap`.
pub fn enumerate_group(family: Family, d: usize, cap: usize) -> Result<Vec<SignedPerm>> {
    let table = GroupTable::build(family, d, cap)?;
    Ok(table.elements.clone())
}

/// Bruhat order x <= w, via the shared table.
pub fn bruhat_leq(x: &SignedPerm, w: &SignedPerm) -> Result<bool> {
    x.check_compatible(w)?;
    let table = group_table(x.family, x.degree())?;
    let xi = table.index(x).expect("validated window is in the table");
    let wi = table.index(w).expect("validated window is in the table");
    Ok(table.bruhat_leq_idx(xi, wi))
}

/// Minimal-length representatives of the cosets W_J \ W, sorted by
/// (length, window). Errors when there are more than `cap` of them.
pub fn minimal_coset_reps(
    family: Family,
    d: usize,
    j_set: &[usize],
    cap: usize,
) -> Result<Vec<SignedPerm>> {
    let table = group_table(family, d)?;
    let idxs = table.min_coset_rep_indices(j_set)?;
    if idxs.len() > cap {
        return Err(Error::CapExceeded {
            what: "coset representative count",
            size: idxs.len(),
            cap,
            env_var: caps::COSET_ENV,
        });
    }
    Ok(idxs.into_iter().map(|k| table.elements[k].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::{HashSet, VecDeque};

    fn gen(family: Family, d: usize, i: usize) -> SignedPerm {
        generator(family, d, i).unwrap()
    }

    #[test]
    fn generator_windows() {
        assert_eq!(gen(Family::B, 3, 0).window(), &[-1, 2, 3]);
        assert_eq!(gen(Family::B, 3, 1).window(), &[2, 1, 3]);
        assert_eq!(gen(Family::B, 3, 2).window(), &[1, 3, 2]);
        assert_eq!(gen(Family::A, 3, 2).window(), &[1, 3, 2]);
    }

    #[test]
    fn generator_index_validation() {
        assert!(generator(Family::A, 3, 0).is_err());
        assert!(generator(Family::A, 3, 3).is_err());
        assert!(generator(Family::B, 3, 3).is_err());
        assert!(generator(Family::B, 3, 0).is_ok());
    }

    #[test]
    fn products_compose_as_functions() {
        let s0 = gen(Family::B, 3, 0);
        let s1 = gen(Family::B, 3, 1);
        // (s0 s1)(1) = s0(2) = 2, (s0 s1)(2) = s0(1) = -1.
        assert_eq!(product(&s0, &s1).unwrap().window(), &[2, -1, 3]);
        assert_eq!(product(&s1, &s0).unwrap().window(), &[-2, 1, 3]);
    }

    #[test]
    fn family_mismatch_is_rejected() {
        let a = SignedPerm::identity(Family::A, 3);
        let b = SignedPerm::identity(Family::B, 3);
        assert!(product(&a, &b).is_err());
        let small = SignedPerm::identity(Family::B, 2);
        assert!(product(&b, &small).is_err());
    }

    #[test]
    fn closed_form_lengths() {
        assert_eq!(SignedPerm::identity(Family::B, 4).length(), 0);
        let w = SignedPerm::from_window(Family::B, vec![-1, -2]).unwrap();
        assert_eq!(w.length(), 4);
        let rev = SignedPerm::from_window(Family::A, vec![3, 2, 1]).unwrap();
        assert_eq!(rev.length(), 3);
        let cyc = SignedPerm::from_window(Family::A, vec![2, 3, 1]).unwrap();
        assert_eq!(cyc.length(), 2);
        assert_eq!(gen(Family::B, 3, 0).length(), 1);
        assert_eq!(product(&gen(Family::B, 3, 1), &gen(Family::B, 3, 0)).unwrap().length(), 2);
    }

    #[test]
    fn neg_counts_sign_changes() {
        let w = SignedPerm::from_window(Family::B, vec![3, -1, 2]).unwrap();
        assert_eq!(neg(&w), 1);
        assert_eq!(neg(&SignedPerm::identity(Family::B, 3)), 0);
        assert_eq!(neg(&SignedPerm::from_window(Family::B, vec![-1, -2, -3]).unwrap()), 3);
    }

    #[test]
    fn one_line_round_trip() {
        let w = SignedPerm::from_window(Family::B, vec![3, -1, 2]).unwrap();
        assert_eq!(w.one_line(), "|3,-1,2|");
        assert_eq!(SignedPerm::parse(Family::B, "|3,-1,2|").unwrap(), w);
        assert_eq!(SignedPerm::parse(Family::B, " | 3 , -1 , 2 | ").unwrap(), w);
        assert!(SignedPerm::parse(Family::A, "|3,-1,2|").is_err());
        assert!(SignedPerm::parse(Family::B, "3,-1,2").is_err());
        assert!(SignedPerm::parse(Family::B, "|3,1,2,5|").is_err());
        assert!(SignedPerm::parse(Family::B, "|1,1,2|").is_err());
    }

    /// Independent length oracle: distance from the identity in the Cayley
    /// graph under right multiplication by generators.
    fn bfs_lengths(family: Family, d: usize) -> HashMap<Vec<i32>, usize> {
        let mut dist = HashMap::new();
        let e = SignedPerm::identity(family, d);
        dist.insert(e.window().to_vec(), 0usize);
        let mut queue = VecDeque::from([e]);
        while let Some(w) = queue.pop_front() {
            let dw = dist[w.window()];
            for i in family.gen_indices(d) {
                let ws = w.mul_gen_right(i).unwrap();
                if !dist.contains_key(ws.window()) {
                    dist.insert(ws.window().to_vec(), dw + 1);
                    queue.push_back(ws);
                }
            }
        }
        dist
    }

    #[test]
    fn length_matches_cayley_distance() {
        for (family, d) in [(Family::A, 4), (Family::B, 2), (Family::B, 3)] {
            let oracle = bfs_lengths(family, d);
            let elements = enumerate_group(family, d, 10_000).unwrap();
            assert_eq!(elements.len(), oracle.len());
            for w in &elements {
                assert_eq!(w.length(), oracle[w.window()], "length of {w:?}");
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_group(Family::A, 1, 10).unwrap().len(), 1);
        assert_eq!(enumerate_group(Family::A, 3, 10).unwrap().len(), 6);
        assert_eq!(enumerate_group(Family::A, 4, 100).unwrap().len(), 24);
        assert_eq!(enumerate_group(Family::B, 1, 10).unwrap().len(), 2);
        assert_eq!(enumerate_group(Family::B, 2, 10).unwrap().len(), 8);
        assert_eq!(enumerate_group(Family::B, 3, 100).unwrap().len(), 48);
    }

    #[test]
    fn enumeration_is_sorted_and_capped() {
        let elements = enumerate_group(Family::B, 2, 8).unwrap();
        let keys: Vec<(usize, Vec<i32>)> = elements
            .iter()
            .map(|w| (w.length(), w.window().to_vec()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(elements[0].is_identity());

        match enumerate_group(Family::B, 3, 47) {
            Err(Error::CapExceeded { size: 48, cap: 47, .. }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn descent_flags_match_length_drop() {
        for (family, d) in [(Family::A, 4), (Family::B, 3)] {
            for w in enumerate_group(family, d, 100).unwrap() {
                for i in family.gen_indices(d) {
                    let ws = w.mul_gen_right(i).unwrap();
                    assert_eq!(
                        w.has_right_descent(i),
                        ws.length() < w.length(),
                        "right descent {i} of {w:?}"
                    );
                    let sw = w.mul_gen_left(i).unwrap();
                    assert_eq!(
                        w.has_left_descent(i),
                        sw.length() < w.length(),
                        "left descent {i} of {w:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn left_mul_matches_product() {
        for (family, d) in [(Family::A, 3), (Family::B, 2)] {
            for w in enumerate_group(family, d, 100).unwrap() {
                for i in family.gen_indices(d) {
                    let s = gen(family, d, i);
                    assert_eq!(w.mul_gen_left(i).unwrap(), product(&s, &w).unwrap());
                    assert_eq!(w.mul_gen_right(i).unwrap(), product(&w, &s).unwrap());
                }
            }
        }
    }

    #[test]
    fn reduced_words_are_reduced() {
        for (family, d) in [(Family::A, 4), (Family::B, 3)] {
            for w in enumerate_group(family, d, 100).unwrap() {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(from_word(family, d, &word).unwrap(), w);
            }
        }
    }

    /// Independent Bruhat oracle: x <= w iff x is a product of some subword
    /// of a fixed reduced expression for w.
    fn bruhat_oracle(x: &SignedPerm, w: &SignedPerm) -> bool {
        let family = w.family();
        let d = w.degree();
        let mut reach = HashSet::from([SignedPerm::identity(family, d)]);
        for &i in &w.reduced_word() {
            let mut next = reach.clone();
            for u in &reach {
                next.insert(u.mul_gen_right(i).unwrap());
            }
            reach = next;
        }
        reach.contains(x)
    }

    #[test]
    fn bruhat_matrix_matches_subword_oracle() {
        for (family, d) in [(Family::A, 3), (Family::B, 2), (Family::B, 3)] {
            let table = group_table(family, d).unwrap();
            for xi in 0..table.order() {
                for wi in 0..table.order() {
                    let expected = bruhat_oracle(table.element(xi), table.element(wi));
                    assert_eq!(
                        table.bruhat_leq_idx(xi, wi),
                        expected,
                        "{:?} <= {:?}",
                        table.element(xi),
                        table.element(wi)
                    );
                }
            }
        }
    }

    #[test]
    fn bruhat_is_a_graded_partial_order() {
        let table = group_table(Family::B, 3).unwrap();
        let n = table.order();
        let e = table.index(&SignedPerm::identity(Family::B, 3)).unwrap();
        for w in 0..n {
            assert!(table.bruhat_leq_idx(e, w));
            assert!(table.bruhat_leq_idx(w, w));
            for x in 0..n {
                if table.bruhat_leq_idx(x, w) && x != w {
                    assert!(table.length_of(x) < table.length_of(w));
                    assert!(!table.bruhat_leq_idx(w, x));
                }
            }
        }
        // Transitivity on a full pass.
        for x in 0..n {
            let up_x: Vec<usize> = (0..n).filter(|&w| table.bruhat_leq_idx(x, w)).collect();
            for &y in &up_x {
                for w in 0..n {
                    if table.bruhat_leq_idx(y, w) {
                        assert!(table.bruhat_leq_idx(x, w));
                    }
                }
            }
        }
    }

    #[test]
    fn bruhat_leq_public_wrapper() {
        let s1 = gen(Family::B, 2, 1);
        let s0 = gen(Family::B, 2, 0);
        let w = product(&s0, &s1).unwrap();
        assert!(bruhat_leq(&s0, &w).unwrap());
        assert!(bruhat_leq(&s1, &w).unwrap());
        assert!(!bruhat_leq(&w, &s0).unwrap());
        assert!(!bruhat_leq(&s0, &s1).unwrap());
    }

    /// Order of the parabolic subgroup generated by J, by closure.
    fn parabolic_order(family: Family, d: usize, j_set: &[usize]) -> usize {
        let mut seen = HashSet::from([SignedPerm::identity(family, d)]);
        let mut queue: Vec<SignedPerm> = seen.iter().cloned().collect();
        while let Some(w) = queue.pop() {
            for &j in j_set {
                let ws = w.mul_gen_right(j).unwrap();
                if seen.insert(ws.clone()) {
                    queue.push(ws);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn coset_reps_have_the_right_count() {
        let cases: &[(Family, usize, &[usize])] = &[
            (Family::A, 3, &[1]),
            (Family::A, 3, &[1, 2]),
            (Family::A, 4, &[1, 3]),
            (Family::B, 2, &[0]),
            (Family::B, 3, &[0, 1]),
            (Family::B, 3, &[1, 2]),
            (Family::B, 3, &[]),
        ];
        for &(family, d, j_set) in cases {
            let reps = minimal_coset_reps(family, d, j_set, 2_000).unwrap();
            let order = family.group_order(d).unwrap();
            assert_eq!(
                reps.len(),
                order / parabolic_order(family, d, j_set),
                "family {family:?} d {d} J {j_set:?}"
            );
            for w in &reps {
                assert!(w.is_min_coset_rep(j_set));
            }
        }
    }

    #[test]
    fn coset_reps_are_unique_per_coset_and_minimal() {
        let family = Family::B;
        let d = 3;
        let j_set = [0usize, 2];
        let reps = minimal_coset_reps(family, d, &j_set, 2_000).unwrap();
        let all = enumerate_group(family, d, 100).unwrap();
        // Every element factors as u * r with u in W_J and r the unique rep
        // of its coset; the rep has minimal length in the coset.
        let mut subgroup = HashSet::from([SignedPerm::identity(family, d)]);
        let mut queue: Vec<SignedPerm> = subgroup.iter().cloned().collect();
        while let Some(w) = queue.pop() {
            for &j in j_set.iter() {
                let ws = w.mul_gen_right(j).unwrap();
                if subgroup.insert(ws.clone()) {
                    queue.push(ws);
                }
            }
        }
        let mut covered = HashSet::new();
        for r in &reps {
            for u in &subgroup {
                let w = product(u, r).unwrap();
                assert!(r.length() <= w.length());
                assert!(covered.insert(w), "cosets overlap at {r:?}");
            }
        }
        assert_eq!(covered.len(), all.len());
    }

    #[test]
    fn deodhar_descent_stays_in_d_j() {
        let family = Family::B;
        let d = 3;
        for j_set in [vec![0], vec![1], vec![0, 1], vec![1, 2], vec![0, 2]] {
            let reps = minimal_coset_reps(family, d, &j_set, 2_000).unwrap();
            let rep_set: HashSet<_> = reps.iter().cloned().collect();
            for w in &reps {
                for i in family.gen_indices(d) {
                    if w.has_right_descent(i) {
                        let ws = w.mul_gen_right(i).unwrap();
                        assert!(rep_set.contains(&ws), "{w:?} s_{i} left D_J");
                    }
                }
            }
        }
    }

    #[test]
    fn coset_cap_is_enforced() {
        match minimal_coset_reps(Family::B, 3, &[], 47) {
            Err(Error::CapExceeded { size: 48, cap: 47, .. }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    fn arb_b3() -> impl Strategy<Value = SignedPerm> {
        (0usize..48).prop_map(|k| {
            let table = group_table(Family::B, 3).unwrap();
            table.element(k).clone()
        })
    }

    proptest! {
        #[test]
        fn prop_inverse_laws(u in arb_b3(), v in arb_b3()) {
            let uv = product(&u, &v).unwrap();
            prop_assert_eq!(product(&uv.inverse(), &uv).unwrap(), SignedPerm::identity(Family::B, 3));
            prop_assert_eq!(uv.inverse(), product(&v.inverse(), &u.inverse()).unwrap());
            prop_assert_eq!(u.inverse().length(), u.length());
        }

        #[test]
        fn prop_length_subadditive_and_parity(u in arb_b3(), v in arb_b3()) {
            let uv = product(&u, &v).unwrap();
            prop_assert!(uv.length() <= u.length() + v.length());
            prop_assert_eq!(uv.length() % 2, (u.length() + v.length()) % 2);
        }

        #[test]
        fn prop_apply_composes(u in arb_b3(), v in arb_b3(), i in 1i32..=3) {
            let uv = product(&u, &v).unwrap();
            prop_assert_eq!(uv.apply(i), u.apply(v.apply(i)));
            prop_assert_eq!(uv.apply(-i), -uv.apply(i));
        }
    }
}
