//! Filled Young diagrams, partitions and multipartitions.
//!
//! A Young `(k,±)`-diagram is a multiset of rows, each row filled with
//! consecutive labels modulo `k` (decreasing for `+`, increasing for `-`),
//! with `k` identified with `0`. Labels are always kept in `[1, k]`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Fill direction of a diagram's rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    /// Rows read `a, a-1, a-2, ...`; parametrizes orbits in degree `+1`.
    #[serde(rename = "+")]
    Plus,
    /// Rows read `a, a+1, a+2, ...`; parametrizes orbits in degree `-1`.
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Label increment from one box to the next.
    pub fn step(self) -> i64 {
        match self {
            Sign::Plus => -1,
            Sign::Minus => 1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Reduces an integer label into the representative range `[1, k]`.
pub fn reduce_label(label: i64, k: usize) -> usize {
    let r = label.mod_floor(&(k as i64));
    if r == 0 {
        k
    } else {
        r as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FilledRow {
    pub len: usize,
    pub start: usize,
}

impl FilledRow {
    pub fn new(len: usize, start: usize, modulus: usize) -> Result<Self> {
        if len == 0 || start == 0 || start > modulus {
            return Err(Error::InvalidRow {
                len,
                start,
                modulus,
            });
        }
        Ok(FilledRow { len, start })
    }

    /// Box labels from the starting box to the last box.
    pub fn labels(&self, modulus: usize, sign: Sign) -> impl Iterator<Item = usize> {
        let start = self.start as i64;
        let step = sign.step();
        (0..self.len as i64).map(move |t| reduce_label(start + step * t, modulus))
    }

    /// Label of the last box.
    pub fn end(&self, modulus: usize, sign: Sign) -> usize {
        reduce_label(
            self.start as i64 + sign.step() * (self.len as i64 - 1),
            modulus,
        )
    }

    /// Number of boxes carrying each label, indexed by `label - 1`.
    pub fn box_counts(&self, modulus: usize, sign: Sign) -> Vec<usize> {
        let mut counts = vec![0; modulus];
        for label in self.labels(modulus, sign) {
            counts[label - 1] += 1;
        }
        counts
    }
}

/// `d_i` = number of boxes labeled `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimensionVector(Vec<usize>);

impl DimensionVector {
    pub fn new(entries: Vec<usize>) -> Self {
        DimensionVector(entries)
    }

    pub fn zeros(modulus: usize) -> Self {
        DimensionVector(vec![0; modulus])
    }

    /// The all-`c` vector of length `modulus`.
    pub fn uniform(modulus: usize, c: usize) -> Self {
        DimensionVector(vec![c; modulus])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn modulus(&self) -> usize {
        self.0.len()
    }

    /// `d_i` for a label `i` in `[1, k]`.
    pub fn get(&self, label: usize) -> usize {
        self.0[label - 1]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    /// `self - c·1`, or `None` if some entry would go negative.
    pub fn checked_sub_uniform(&self, c: usize) -> Option<DimensionVector> {
        self.0
            .iter()
            .map(|&d| d.checked_sub(c))
            .collect::<Option<Vec<_>>>()
            .map(DimensionVector)
    }

    pub fn add_uniform(&self, c: usize) -> DimensionVector {
        DimensionVector(self.0.iter().map(|&d| d + c).collect())
    }

    /// All vectors of length `modulus` with entry sum `total`, lexicographically descending.
    pub fn all_with_total(modulus: usize, total: usize) -> Vec<DimensionVector> {
        fn rec(slot: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<DimensionVector>) {
            if slot + 1 == cur.len() {
                cur[slot] = left;
                out.push(DimensionVector(cur.clone()));
                return;
            }
            for v in (0..=left).rev() {
                cur[slot] = v;
                rec(slot + 1, left - v, cur, out);
            }
        }
        let mut out = Vec::new();
        if modulus == 0 {
            return out;
        }
        rec(0, total, &mut vec![0; modulus], &mut out);
        out
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A filled Young diagram, rows kept in canonical order (length descending, then start ascending).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram")]
pub struct FilledDiagram {
    modulus: usize,
    sign: Sign,
    rows: Vec<FilledRow>,
}

#[derive(Deserialize)]
struct RawDiagram {
    modulus: usize,
    sign: Sign,
    rows: Vec<FilledRow>,
}

impl TryFrom<RawDiagram> for FilledDiagram {
    type Error = Error;

    fn try_from(raw: RawDiagram) -> Result<Self> {
        let rows: Vec<(usize, usize)> = raw.rows.iter().map(|r| (r.len, r.start)).collect();
        canonicalize(&rows, raw.modulus, raw.sign)
    }
}

/// Builds the canonical diagram for an unordered list of `(length, start)` rows.
pub fn canonicalize(rows: &[(usize, usize)], modulus: usize, sign: Sign) -> Result<FilledDiagram> {
    if modulus == 0 {
        return Err(Error::InvalidGrading("modulus must be at least 1".into()));
    }
    let mut rows = rows
        .iter()
        .map(|&(len, start)| FilledRow::new(len, start, modulus))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(row_order);
    Ok(FilledDiagram {
        modulus,
        sign,
        rows,
    })
}

fn row_order(a: &FilledRow, b: &FilledRow) -> Ordering {
    b.len.cmp(&a.len).then(a.start.cmp(&b.start))
}

impl FilledDiagram {
    pub fn empty(modulus: usize, sign: Sign) -> Self {
        FilledDiagram {
            modulus,
            sign,
            rows: Vec::new(),
        }
    }

    /// Rebuilds a diagram from multiplicities: `table[len]` holds `p^j` for `j = 1..=k` at index `j-1`.
    pub fn from_multiplicities(
        modulus: usize,
        sign: Sign,
        table: &BTreeMap<usize, Vec<usize>>,
    ) -> Result<Self> {
        let mut rows = Vec::new();
        for (&len, mults) in table {
            if mults.len() != modulus {
                return Err(Error::Precondition(format!(
                    "multiplicity vector for length {len} has {} entries, expected {modulus}",
                    mults.len()
                )));
            }
            for (j, &p) in mults.iter().enumerate() {
                rows.extend(std::iter::repeat_n((len, j + 1), p));
            }
        }
        canonicalize(&rows, modulus, sign)
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn rows(&self) -> &[FilledRow] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `|λ|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len).sum()
    }

    pub fn dimension_vector(&self) -> DimensionVector {
        let mut d = vec![0; self.modulus];
        for row in &self.rows {
            for label in row.labels(self.modulus, self.sign) {
                d[label - 1] += 1;
            }
        }
        DimensionVector(d)
    }

    pub fn partition(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len).collect())
    }

    /// Distinct row lengths, descending.
    pub fn part_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.rows.iter().map(|r| r.len).collect();
        lens.dedup();
        lens
    }

    /// `p^j` for a given row length and start label.
    pub fn multiplicity(&self, len: usize, start: usize) -> usize {
        self.rows
            .iter()
            .filter(|r| r.len == len && r.start == start)
            .count()
    }

    /// Row length -> `[p^1, ..., p^k]`.
    pub fn multiplicity_table(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut table: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for row in &self.rows {
            table.entry(row.len).or_insert_with(|| vec![0; self.modulus])[row.start - 1] += 1;
        }
        table
    }

    /// gcd of the row lengths; `0` for the empty diagram.
    pub fn gcd_of_parts(&self) -> usize {
        self.rows.iter().fold(0, |g, r| g.gcd(&r.len))
    }

    /// Disjoint union with another diagram of the same modulus and sign.
    pub fn union(&self, other: &FilledDiagram) -> Result<FilledDiagram> {
        if self.modulus != other.modulus || self.sign != other.sign {
            return Err(Error::Precondition(
                "union of diagrams with different modulus or sign".into(),
            ));
        }
        let mut rows = self.rows.clone();
        rows.extend_from_slice(&other.rows);
        rows.sort_by(row_order);
        Ok(FilledDiagram {
            modulus: self.modulus,
            sign: self.sign,
            rows,
        })
    }

    /// Same rows, sign relabeled without changing start labels.
    pub(crate) fn with_sign_unchecked(&self, sign: Sign, rows: Vec<FilledRow>) -> FilledDiagram {
        let mut rows = rows;
        rows.sort_by(row_order);
        FilledDiagram {
            modulus: self.modulus,
            sign,
            rows,
        }
    }
}

impl PartialOrd for FilledDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Enumeration order: underlying partition descending, then start labels ascending.
impl Ord for FilledDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.modulus
            .cmp(&other.modulus)
            .then(self.sign.cmp(&other.sign))
            .then_with(|| {
                let a = self.rows.iter().map(|r| r.len);
                let b = other.rows.iter().map(|r| r.len);
                b.cmp(a)
            })
            .then_with(|| {
                let a = self.rows.iter().map(|r| r.start);
                let b = other.rows.iter().map(|r| r.start);
                a.cmp(b)
            })
    }
}

/// Compact notation such as `2_1 1^2_3`; `∅` for the empty diagram.
impl fmt::Display for FilledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        let mut groups: Vec<(FilledRow, usize)> = Vec::new();
        for row in &self.rows {
            match groups.last_mut() {
                Some((last, count)) if last == row => *count += 1,
                _ => groups.push((*row, 1)),
            }
        }
        let words: Vec<String> = groups
            .iter()
            .map(|(row, count)| {
                if *count == 1 {
                    format!("{}_{}", row.len, row.start)
                } else {
                    format!("{}^{}_{}", row.len, count, row.start)
                }
            })
            .collect();
        f.write_str(&words.join(" "))
    }
}

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(part, multiplicity)` pairs, parts descending.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, k)) if *q == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An ordered tuple of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition(components)
    }

    /// The tuple of `slots` empty partitions.
    pub fn empty(slots: usize) -> Self {
        MultiPartition(vec![Partition::empty(); slots])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn slots(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// All partitions of `n`, lexicographically descending: `(n), (n-1,1), ...`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All `slots`-tuples of partitions of total size `n`.
///
/// Ordered by the size of the first component descending, then by the
/// first component in [`partitions`] order, then recursively.
pub fn multipartitions(slots: usize, n: usize) -> Vec<MultiPartition> {
    fn rec(slots: usize, n: usize) -> Vec<Vec<Partition>> {
        if slots == 0 {
            return if n == 0 { vec![Vec::new()] } else { Vec::new() };
        }
        if slots == 1 {
            return partitions(n).into_iter().map(|p| vec![p]).collect();
        }
        let mut out = Vec::new();
        for first in (0..=n).rev() {
            let tails = rec(slots - 1, n - first);
            for head in partitions(first) {
                for tail in &tails {
                    let mut v = Vec::with_capacity(slots);
                    v.push(head.clone());
                    v.extend(tail.iter().cloned());
                    out.push(v);
                }
            }
        }
        out
    }
    rec(slots, n).into_iter().map(MultiPartition).collect()
}

struct RowType {
    row: FilledRow,
    counts: Vec<usize>,
}

fn row_types(modulus: usize, sign: Sign, max_len: usize, divisor: usize) -> Vec<RowType> {
    let mut out = Vec::new();
    for len in (1..=max_len).rev().filter(|l| l % divisor == 0) {
        for start in 1..=modulus {
            let row = FilledRow { len, start };
            out.push(RowType {
                counts: row.box_counts(modulus, sign),
                row,
            });
        }
    }
    out
}

/// All `(k,±)`-diagrams with dimension vector `d`, in enumeration order.
pub fn enumerate_diagrams(modulus: usize, sign: Sign, d: &DimensionVector) -> Vec<FilledDiagram> {
    fn rec(
        types: &[RowType],
        idx: usize,
        remaining: &mut [usize],
        left: usize,
        cur: &mut Vec<FilledRow>,
        out: &mut Vec<Vec<FilledRow>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        let Some(ty) = types.get(idx) else { return };
        if ty.row.len <= left {
            let max = ty
                .counts
                .iter()
                .zip(remaining.iter())
                .filter(|(c, _)| **c > 0)
                .map(|(c, r)| r / c)
                .min()
                .unwrap_or(0);
            for c in 1..=max {
                for (r, k) in remaining.iter_mut().zip(&ty.counts) {
                    *r -= k;
                }
                cur.push(ty.row);
                rec(types, idx + 1, remaining, left - c * ty.row.len, cur, out);
            }
            for _ in 0..max {
                cur.pop();
            }
            for (r, k) in remaining.iter_mut().zip(&ty.counts) {
                *r += k * max;
            }
        }
        rec(types, idx + 1, remaining, left, cur, out);
    }

    if d.modulus() != modulus || modulus == 0 {
        return Vec::new();
    }
    let total = d.total();
    let types = row_types(modulus, sign, total, 1);
    let mut raw = Vec::new();
    rec(&types, 0, &mut d.entries().to_vec(), total, &mut Vec::new(), &mut raw);
    finish(modulus, sign, raw)
}

/// All `(k,±)`-diagrams with `n` boxes, in enumeration order.
pub fn enumerate_by_size(modulus: usize, sign: Sign, n: usize) -> Vec<FilledDiagram> {
    enumerate_by_size_divisible(modulus, sign, n, 1)
}

/// All `(k,±)`-diagrams with `n` boxes whose row lengths are multiples of `divisor`.
pub fn enumerate_by_size_divisible(
    modulus: usize,
    sign: Sign,
    n: usize,
    divisor: usize,
) -> Vec<FilledDiagram> {
    fn rec(
        types: &[RowType],
        idx: usize,
        left: usize,
        cur: &mut Vec<FilledRow>,
        out: &mut Vec<Vec<FilledRow>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        let Some(ty) = types.get(idx) else { return };
        let max = left / ty.row.len;
        for c in 1..=max {
            cur.push(ty.row);
            rec(types, idx + 1, left - c * ty.row.len, cur, out);
        }
        cur.truncate(cur.len() - max);
        rec(types, idx + 1, left, cur, out);
    }

    if modulus == 0 || divisor == 0 || !n.is_multiple_of(divisor) {
        return Vec::new();
    }
    let types = row_types(modulus, sign, n, divisor);
    let mut raw = Vec::new();
    rec(&types, 0, n, &mut Vec::new(), &mut raw);
    finish(modulus, sign, raw)
}

fn finish(modulus: usize, sign: Sign, raw: Vec<Vec<FilledRow>>) -> Vec<FilledDiagram> {
    let mut out: Vec<FilledDiagram> = raw
        .into_iter()
        .map(|mut rows| {
            rows.sort_by(row_order);
            FilledDiagram {
                modulus,
                sign,
                rows,
            }
        })
        .collect();
    out.sort();
    out
}
