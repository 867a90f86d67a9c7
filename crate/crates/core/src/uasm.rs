//! U-turn μ-alternating sign matrices, ordinary and Okada ASMs, the
//! signature map and its inverse, statistics, weights, and a brute-force
//! enumerator that is independent of the tableau side.
//!
//! Rows are numbered from the top. Row `2(n - k) + 1` (1-based) carries the
//! unbarred label `k` and the row below it carries `k̄`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::StrictPartition;
use crate::error::{Error, Report, Result, Violation};
use crate::poly::{Coefficient, LaurentPoly};
use crate::tableaux::Level;

/// Largest `2n * m` accepted by [`brute_force_uasms`].
pub const BRUTE_FORCE_LIMIT: usize = 36;

/// 0-based row of `label` in a `2n`-row matrix.
pub fn row_of(n: usize, label: Level) -> usize {
    2 * (n - label.level() as usize) + usize::from(label.is_barred())
}

/// Label of 0-based row `r` in a `2n`-row matrix.
pub fn label_of(n: usize, r: usize) -> Level {
    let level = (n - r / 2) as u32;
    if r % 2 == 1 {
        Level::barred(level)
    } else {
        Level::unbarred(level)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "+" => Ok(Sign::Plus),
            "-" | "\u{2212}" => Ok(Sign::Minus),
            other => Err(Error::Malformed(format!("{other:?} is not a sign"))),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Sign::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// A `2n x m` matrix of signs, the image of `phi` or `psi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignatureMatrix {
    pub cells: Vec<Vec<Sign>>,
}

impl SignatureMatrix {
    pub fn rows(&self) -> usize {
        self.cells.len()
    }

    pub fn cols(&self) -> usize {
        self.cells.first().map_or(0, Vec::len)
    }

    /// Builds a matrix from strings such as `"--+"`, one per row.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let cells = rows
            .iter()
            .map(|r| r.chars().map(|c| Sign::parse(&c.to_string())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { cells })
    }
}

impl fmt::Display for SignatureMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.cells {
            for s in row {
                write!(f, "{}", s.as_str())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A validated μ-UASM.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MuUasm {
    mu: StrictPartition,
    n: usize,
    cells: Vec<Vec<i8>>,
}

impl MuUasm {
    pub fn new(mu: StrictPartition, n: usize, cells: Vec<Vec<i8>>) -> Result<Self> {
        validate_uasm(&cells, &mu, n).into_result()?;
        Ok(Self { mu, n, cells })
    }

    pub fn mu(&self) -> &StrictPartition {
        &self.mu
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.mu.largest()
    }

    pub fn cells(&self) -> &[Vec<i8>] {
        &self.cells
    }

    pub fn validate(&self) -> Report {
        validate_uasm(&self.cells, &self.mu, self.n)
    }

    pub fn stats(&self) -> UasmStats {
        uasm_stats(self)
    }

    pub fn x_weight<C: Coefficient>(&self) -> LaurentPoly<C> {
        let s = self.stats();
        let exps: Vec<i32> = s.m.iter().zip(&s.m_bar).map(|(&a, &b)| a as i32 - b as i32).collect();
        LaurentPoly::monomial(self.n, &exps, 0, C::one())
    }

    /// `t^(ssi + bar) (1 + t)^neg`.
    pub fn t_weight<C: Coefficient>(&self) -> LaurentPoly<C> {
        let s = self.stats();
        &LaurentPoly::t_pow(self.n, (s.ssi + s.bar) as u32) * &LaurentPoly::one_plus_t_pow(self.n, s.neg as u32)
    }
}

/// Checks (UA1)-(UA5) and reports every violation found.
#[allow(clippy::needless_range_loop)]
pub fn validate_uasm(cells: &[Vec<i8>], mu: &StrictPartition, n: usize) -> Report {
    let m = mu.largest();
    if mu.len() != n {
        return Report::Malformed(format!("mu = {mu} has {} parts, expected n = {n}", mu.len()));
    }
    if cells.len() != 2 * n || cells.iter().any(|r| r.len() != m) {
        return Report::Malformed(format!(
            "expected a {}x{m} matrix, got {} rows of lengths {:?}",
            2 * n,
            cells.len(),
            cells.iter().map(Vec::len).collect::<Vec<_>>()
        ));
    }
    let mut v = Vec::new();
    for (i, row) in cells.iter().enumerate() {
        for (q, &a) in row.iter().enumerate() {
            if !(-1..=1).contains(&a) {
                v.push(Violation::new("UA1", Some((i + 1, q + 1)), format!("entry {a}")));
            }
        }
    }
    for (i, row) in cells.iter().enumerate() {
        let mut s = 0i32;
        for q in (0..m).rev() {
            s += i32::from(row[q]);
            if !(0..=1).contains(&s) {
                v.push(Violation::new(
                    "UA2",
                    Some((i + 1, q + 1)),
                    format!("row partial sum from column {} rightwards is {s}", q + 1),
                ));
                break;
            }
        }
    }
    for q in 0..m {
        let mut s = 0i32;
        for i in (0..2 * n).rev() {
            s += i32::from(cells[i][q]);
            if !(0..=1).contains(&s) {
                v.push(Violation::new(
                    "UA3",
                    Some((i + 1, q + 1)),
                    format!("column partial sum from row {} downwards is {s}", i + 1),
                ));
                break;
            }
        }
    }
    for i in 0..n {
        let s: i32 = cells[2 * i].iter().chain(&cells[2 * i + 1]).map(|&a| i32::from(a)).sum();
        if s != 1 {
            v.push(Violation::new("UA4", Some((2 * i + 1, 1)), format!("rows {} and {} sum to {s}", 2 * i + 1, 2 * i + 2)));
        }
    }
    for q in 0..m {
        let s: i32 = cells.iter().map(|r| i32::from(r[q])).sum();
        let want = i32::from(mu.contains_part(q + 1));
        if s != want {
            v.push(Violation::new("UA5", Some((1, q + 1)), format!("column {} sums to {s}, expected {want}", q + 1)));
        }
    }
    Report::from_violations(v)
}

fn alternates_from_one(seq: impl Iterator<Item = i8>) -> bool {
    let mut expect = 1;
    let mut last = 0;
    for a in seq.filter(|&a| a != 0) {
        if a != expect {
            return false;
        }
        last = a;
        expect = -expect;
    }
    last == 1
}

/// Ordinary square ASM: every row and column has non-zero entries that
/// alternate in sign, starting and ending with 1.
pub fn validate_ordinary_asm(cells: &[Vec<i8>]) -> Report {
    let size = cells.len();
    if cells.iter().any(|r| r.len() != size) {
        return Report::Malformed("matrix is not square".into());
    }
    let mut v = Vec::new();
    for (i, row) in cells.iter().enumerate() {
        for (q, &a) in row.iter().enumerate() {
            if !(-1..=1).contains(&a) {
                v.push(Violation::new("entries", Some((i + 1, q + 1)), format!("entry {a}")));
            }
        }
    }
    if !v.is_empty() {
        return Report::Invalid(v);
    }
    for (i, row) in cells.iter().enumerate() {
        if !alternates_from_one(row.iter().copied()) {
            v.push(Violation::new("row", Some((i + 1, 1)), format!("row {} does not alternate 1, -1, ..., 1", i + 1)));
        }
    }
    for q in 0..size {
        if !alternates_from_one(cells.iter().map(|r| r[q])) {
            v.push(Violation::new("column", Some((1, q + 1)), format!("column {} does not alternate 1, -1, ..., 1", q + 1)));
        }
    }
    Report::from_violations(v)
}

/// Okada's `n x m` μ-ASM conditions (O1)-(O5); `m` is the matrix width and
/// must be at least the largest part of `mu`.
#[allow(clippy::needless_range_loop)]
pub fn validate_okada_asm(cells: &[Vec<i8>], mu: &StrictPartition, n: usize) -> Report {
    if mu.len() != n {
        return Report::Malformed(format!("mu = {mu} has {} parts, expected n = {n}", mu.len()));
    }
    let m = cells.first().map_or(0, Vec::len);
    if cells.len() != n || cells.iter().any(|r| r.len() != m) || m < mu.largest() {
        return Report::Malformed(format!("expected an {n}x m matrix with m >= {}", mu.largest()));
    }
    let mut v = Vec::new();
    for (i, row) in cells.iter().enumerate() {
        for (q, &a) in row.iter().enumerate() {
            if !(-1..=1).contains(&a) {
                v.push(Violation::new("O1", Some((i + 1, q + 1)), format!("entry {a}")));
            }
        }
        let mut s = 0i32;
        for q in (0..m).rev() {
            s += i32::from(row[q]);
            if !(0..=1).contains(&s) {
                v.push(Violation::new("O2", Some((i + 1, q + 1)), format!("row partial sum {s}")));
                break;
            }
        }
    }
    for q in 0..m {
        let mut s = 0i32;
        for i in (0..n).rev() {
            s += i32::from(cells[i][q]);
            if !(0..=1).contains(&s) {
                v.push(Violation::new("O3", Some((i + 1, q + 1)), format!("column partial sum {s}")));
                break;
            }
        }
    }
    for (i, row) in cells.iter().enumerate() {
        let s: i32 = row.iter().map(|&a| i32::from(a)).sum();
        if s != 1 {
            v.push(Violation::new("O4", Some((i + 1, 1)), format!("row sum {s}")));
        }
    }
    for q in 0..m {
        let s: i32 = cells.iter().map(|r| i32::from(r[q])).sum();
        let want = i32::from(mu.contains_part(q + 1));
        if s != want {
            v.push(Violation::new("O5", Some((1, q + 1)), format!("column sum {s}, expected {want}")));
        }
    }
    Report::from_violations(v)
}

/// Value of the nearest non-zero entry strictly to the right of `q`, if any.
pub(crate) fn nearest_right(row: &[i8], q: usize) -> Option<i8> {
    row[q + 1..].iter().copied().find(|&a| a != 0)
}

/// Value of the nearest non-zero entry strictly below row `i` in column `q`.
pub(crate) fn nearest_below(cells: &[Vec<i8>], i: usize, q: usize) -> Option<i8> {
    cells[i + 1..].iter().map(|r| r[q]).find(|&a| a != 0)
}

/// `+` for ones and for zeros whose nearest non-zero right neighbour is 1;
/// `-` for everything else.
pub fn phi(ua: &MuUasm) -> SignatureMatrix {
    phi_cells(&ua.cells)
}

pub(crate) fn phi_cells(cells: &[Vec<i8>]) -> SignatureMatrix {
    let cells = cells
        .iter()
        .map(|row| {
            (0..row.len())
                .map(|q| {
                    let plus = row[q] == 1 || (row[q] == 0 && nearest_right(row, q) == Some(1));
                    if plus {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect()
        })
        .collect();
    SignatureMatrix { cells }
}

/// Row by row: the rightmost `+` of every run of `+` becomes 1, the
/// rightmost `-` of a run of `-` becomes -1 when a `+` follows it, and
/// everything else becomes 0. The result is not validated.
pub fn phi_inv(sm: &SignatureMatrix) -> Vec<Vec<i8>> {
    sm.cells
        .iter()
        .map(|row| {
            (0..row.len())
                .map(|q| {
                    let next = row.get(q + 1).copied();
                    match (row[q], next) {
                        (Sign::Plus, Some(Sign::Plus)) => 0,
                        (Sign::Plus, _) => 1,
                        (Sign::Minus, Some(Sign::Plus)) => -1,
                        (Sign::Minus, _) => 0,
                    }
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UasmStats {
    pub neg: usize,
    pub bar: usize,
    pub ssi: usize,
    /// `m[k - 1]`: `+` cells of the signature matrix in the row labelled `k`.
    pub m: Vec<usize>,
    /// `m_bar[k - 1]`: `+` cells in the row labelled `k̄`.
    pub m_bar: Vec<usize>,
}

pub fn uasm_stats(ua: &MuUasm) -> UasmStats {
    let n = ua.n;
    let cells = &ua.cells;
    let sm = phi(ua);
    let plus = |r: usize| sm.cells[r].iter().filter(|&&s| s == Sign::Plus).count();
    let m: Vec<usize> = (1..=n).map(|k| plus(row_of(n, Level::unbarred(k as u32)))).collect();
    let m_bar: Vec<usize> = (1..=n).map(|k| plus(row_of(n, Level::barred(k as u32)))).collect();
    let neg = cells.iter().flatten().filter(|&&a| a == -1).count();
    let bar = (0..2 * n).filter(|r| r % 2 == 1).map(plus).sum();
    let mut ssi = 0;
    for (i, row) in cells.iter().enumerate() {
        for q in 0..row.len() {
            if row[q] != 0 || nearest_right(row, q) != Some(1) {
                continue;
            }
            let below = nearest_below(cells, i, q);
            // i is 0-based: even i is an odd row counted from the top
            let hit = if i % 2 == 0 { below == Some(1) } else { below != Some(1) };
            if hit {
                ssi += 1;
            }
        }
    }
    UasmStats { neg, bar, ssi, m, m_bar }
}

/// All rows of length `m` over {-1, 0, 1} whose non-zero entries, read
/// right to left, alternate starting with 1; sorted lexicographically.
fn admissible_rows(m: usize) -> Vec<Vec<i8>> {
    let mut out = Vec::new();
    let mut row = vec![0i8; m];
    fn rec(q: usize, row: &mut Vec<i8>, out: &mut Vec<Vec<i8>>) {
        if q == row.len() {
            // right-to-left partial sums must stay in {0, 1}
            let mut s = 0;
            for &a in row.iter().rev() {
                s += a;
                if !(0..=1).contains(&s) {
                    return;
                }
            }
            out.push(row.clone());
            return;
        }
        for a in [-1, 0, 1] {
            row[q] = a;
            rec(q + 1, row, out);
        }
    }
    rec(0, &mut row, &mut out);
    out
}

fn check_feasible(mu: &StrictPartition, n: usize) -> Result<()> {
    if mu.len() != n {
        return Err(Error::Rank(format!("mu = {mu} has {} parts, expected n = {n}", mu.len())));
    }
    let cells = 2 * n * mu.largest();
    if cells > BRUTE_FORCE_LIMIT {
        return Err(Error::Infeasible { cells, limit: BRUTE_FORCE_LIMIT });
    }
    Ok(())
}

struct UasmSearch<'a> {
    rows: &'a [Vec<i8>],
    target: Vec<i32>,
    n: usize,
}

impl UasmSearch<'_> {
    /// `prefix[q]` is the sum of column `q` over the rows placed so far.
    fn run(&self, placed: &mut Vec<usize>, prefix: &mut Vec<i32>, pair_sum: i32, emit: &mut dyn FnMut(&[usize])) {
        let r = placed.len();
        if r == 2 * self.n {
            if prefix.iter().zip(&self.target).all(|(p, t)| p == t) {
                emit(placed);
            }
            return;
        }
        for (idx, row) in self.rows.iter().enumerate() {
            let row_sum: i32 = row.iter().map(|&a| i32::from(a)).sum();
            let pair = if r.is_multiple_of(2) { row_sum } else { pair_sum + row_sum };
            if r % 2 == 1 && pair != 1 {
                continue;
            }
            // column suffix sums from the next row down must stay in {0, 1}
            let ok = row.iter().enumerate().all(|(q, &a)| {
                let rest = self.target[q] - prefix[q] - i32::from(a);
                (0..=1).contains(&rest)
            });
            if !ok {
                continue;
            }
            for (q, &a) in row.iter().enumerate() {
                prefix[q] += i32::from(a);
            }
            placed.push(idx);
            self.run(placed, prefix, pair, emit);
            placed.pop();
            for (q, &a) in row.iter().enumerate() {
                prefix[q] -= i32::from(a);
            }
        }
    }
}

fn search_setup(mu: &StrictPartition) -> (Vec<Vec<i8>>, Vec<i32>) {
    let m = mu.largest();
    let target = (1..=m).map(|q| i32::from(mu.contains_part(q))).collect();
    (admissible_rows(m), target)
}

fn build(mu: &StrictPartition, n: usize, rows: &[Vec<i8>], placed: &[usize]) -> MuUasm {
    MuUasm { mu: mu.clone(), n, cells: placed.iter().map(|&i| rows[i].clone()).collect() }
}

/// Every μ-UASM, by row-wise depth-first search over admissible rows with
/// pruning on column partial sums and row-pair sums. Output is sorted
/// lexicographically by rows (with -1 < 0 < 1).
pub fn brute_force_uasms(mu: &StrictPartition, n: usize) -> Result<Vec<MuUasm>> {
    let mut out = Vec::new();
    for_each_uasm(mu, n, |ua| out.push(ua))?;
    Ok(out)
}

/// Streaming form of [`brute_force_uasms`].
pub fn for_each_uasm(mu: &StrictPartition, n: usize, mut visit: impl FnMut(MuUasm)) -> Result<()> {
    check_feasible(mu, n)?;
    let (rows, target) = search_setup(mu);
    let search = UasmSearch { rows: &rows, target, n };
    let mut prefix = vec![0; mu.largest()];
    search.run(&mut Vec::new(), &mut prefix, 0, &mut |p| visit(build(mu, n, &rows, p)));
    Ok(())
}

/// Same output as [`brute_force_uasms`]; first-row branches run on the
/// current rayon pool and are merged in order.
pub fn brute_force_uasms_par(mu: &StrictPartition, n: usize) -> Result<Vec<MuUasm>> {
    check_feasible(mu, n)?;
    let (rows, target) = search_setup(mu);
    let m = mu.largest();
    let parts: Vec<Vec<MuUasm>> = (0..rows.len())
        .into_par_iter()
        .map(|first| {
            let search = UasmSearch { rows: &rows, target: target.clone(), n };
            let row = &rows[first];
            let mut prefix = vec![0; m];
            if row.iter().enumerate().any(|(q, &a)| !(0..=1).contains(&(search.target[q] - i32::from(a)))) {
                return Vec::new();
            }
            for (q, &a) in row.iter().enumerate() {
                prefix[q] += i32::from(a);
            }
            let row_sum: i32 = row.iter().map(|&a| i32::from(a)).sum();
            let mut out = Vec::new();
            search.run(&mut vec![first], &mut prefix, row_sum, &mut |p| out.push(build(mu, n, &rows, p)));
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Every `size x size` ordinary ASM, by filtering all `3^(size^2)` matrices.
pub fn brute_force_asms(size: usize) -> Result<Vec<Vec<Vec<i8>>>> {
    if size > 3 {
        return Err(Error::Infeasible { cells: size * size, limit: 9 });
    }
    let cells = size * size;
    let total = 3usize.pow(cells as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut flat = vec![0i8; cells];
        for v in flat.iter_mut().rev() {
            *v = (c % 3) as i8 - 1;
            c /= 3;
        }
        let mat: Vec<Vec<i8>> = flat.chunks(size.max(1)).map(<[i8]>::to_vec).collect();
        let mat = if size == 0 { Vec::new() } else { mat };
        if validate_ordinary_asm(&mat).is_valid() {
            out.push(mat);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn sp(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn worked_examples_validate() {
        assert_eq!(validate_uasm(&fixtures::running_uasm_cells(), &fixtures::running_mu(), 5), Report::Valid);
        let small = vec![vec![1, 0, 0], vec![-1, 1, 0], vec![0, -1, 1], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]];
        assert_eq!(validate_uasm(&small, &sp(&[3, 2, 1]), 3), Report::Valid);
    }

    #[test]
    fn pair_sum_and_column_sum_violations() {
        let r = validate_uasm(&[vec![1], vec![1]], &sp(&[1]), 1);
        let rules = r.rules();
        assert!(rules.contains(&"UA4") && rules.contains(&"UA5"), "{rules:?}");
        assert!(!rules.contains(&"UA1") && !rules.contains(&"UA2"));
    }

    #[test]
    fn dimension_checked_first() {
        assert!(matches!(validate_uasm(&[vec![1, 0], vec![0, 0]], &sp(&[1]), 1), Report::Malformed(_)));
        assert!(matches!(validate_uasm(&[vec![1]], &sp(&[1]), 1), Report::Malformed(_)));
    }

    #[test]
    fn ordinary_asms() {
        let a = vec![vec![0, 1, 0, 0], vec![1, -1, 0, 1], vec![0, 0, 1, 0], vec![0, 1, 0, 0]];
        assert_eq!(validate_ordinary_asm(&a), Report::Valid);
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(validate_ordinary_asm(&id), Report::Valid);
        let bad = validate_ordinary_asm(&[vec![1, -1], vec![0, 1]]);
        assert!(bad.rules().contains(&"row"));
        assert!(matches!(validate_ordinary_asm(&[vec![1, 0]]), Report::Malformed(_)));
    }

    #[test]
    fn okada_conditions() {
        // a 2x3 μ-ASM for μ = (3, 1)
        let a = vec![vec![0, 0, 1], vec![1, 0, 0]];
        assert_eq!(validate_okada_asm(&a, &sp(&[3, 1]), 2), Report::Valid);
        let b = vec![vec![0, 1, 0], vec![1, 0, 0]];
        assert_eq!(validate_okada_asm(&b, &sp(&[3, 1]), 2).rules(), vec!["O5", "O5"]);
    }

    #[test]
    fn phi_on_running_example() {
        let ua = fixtures::running_uasm();
        assert_eq!(phi(&ua), fixtures::running_signature());
        assert_eq!(phi_inv(&phi(&ua)), ua.cells);
    }

    #[test]
    fn phi_small_rows() {
        let all_zero = phi_cells(&[vec![0, 0, 0]]);
        assert_eq!(all_zero, SignatureMatrix::from_strs(&["---"]).unwrap());
        assert_eq!(phi_cells(&[vec![-1, 1]]), SignatureMatrix::from_strs(&["-+"]).unwrap());
        assert_eq!(phi_inv(&SignatureMatrix::from_strs(&["++-"]).unwrap()), vec![vec![0, 1, 0]]);
        assert_eq!(phi_inv(&SignatureMatrix::from_strs(&["-+"]).unwrap()), vec![vec![-1, 1]]);
    }

    #[test]
    fn running_example_stats() {
        let s = fixtures::running_uasm().stats();
        assert_eq!((s.neg, s.bar, s.ssi), (7, 11, 7));
        assert_eq!(s.m, vec![1, 2, 2, 8, 1]);
        assert_eq!(s.m_bar, vec![1, 3, 2, 4, 1]);
    }

    #[test]
    fn single_column_stats_and_weights() {
        let ua = MuUasm::new(sp(&[1]), 1, vec![vec![1], vec![0]]).unwrap();
        let s = ua.stats();
        assert_eq!((s.neg, s.bar, s.ssi, s.m[0], s.m_bar[0]), (0, 0, 0, 1, 0));
        assert_eq!(ua.x_weight::<i64>(), LaurentPoly::x(1, 1));
        assert_eq!(ua.t_weight::<i64>(), LaurentPoly::one(1));
    }

    #[test]
    fn running_example_weights() {
        let ua = fixtures::running_uasm();
        assert_eq!(ua.x_weight::<i64>(), LaurentPoly::monomial(5, &[0, -1, 0, 4, 0], 0, 1));
        assert_eq!(ua.t_weight::<i64>(), &LaurentPoly::t_pow(5, 18) * &LaurentPoly::one_plus_t_pow(5, 7));
    }

    #[test]
    fn brute_force_small() {
        let one = brute_force_uasms(&sp(&[1]), 1).unwrap();
        let cells: Vec<_> = one.iter().map(|u| u.cells.clone()).collect();
        assert_eq!(cells, vec![vec![vec![0], vec![1]], vec![vec![1], vec![0]]]);
        assert_eq!(brute_force_uasms(&sp(&[2]), 1).unwrap().len(), 3);
        assert_eq!(brute_force_uasms(&sp(&[2, 1]), 2).unwrap().len(), 12);
        assert!(matches!(
            brute_force_uasms(&sp(&[9, 7, 6, 2, 1]), 5),
            Err(Error::Infeasible { cells: 90, .. })
        ));
    }

    #[test]
    fn brute_force_matches_exhaustive_filter() {
        // 3^(2m) candidates filtered directly by the validator
        for mu in [sp(&[1]), sp(&[2]), sp(&[3])] {
            let m = mu.largest();
            let mut expect = Vec::new();
            for code in 0..3usize.pow(2 * m as u32) {
                let mut c = code;
                let mut flat = vec![0i8; 2 * m];
                for v in flat.iter_mut().rev() {
                    *v = (c % 3) as i8 - 1;
                    c /= 3;
                }
                let mat: Vec<Vec<i8>> = flat.chunks(m).map(<[i8]>::to_vec).collect();
                if validate_uasm(&mat, &mu, 1).is_valid() {
                    expect.push(mat);
                }
            }
            let got: Vec<_> = brute_force_uasms(&mu, 1).unwrap().into_iter().map(|u| u.cells).collect();
            assert_eq!(got, expect, "mu = {mu}");
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        for mu in [sp(&[2, 1]), sp(&[3, 2, 1]), sp(&[4, 3, 1])] {
            let n = mu.len();
            assert_eq!(brute_force_uasms(&mu, n).unwrap(), brute_force_uasms_par(&mu, n).unwrap());
        }
    }

    #[test]
    fn ordinary_asm_brute_force_counts() {
        let counts: Vec<usize> = (1..=3).map(|n| brute_force_asms(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 7]);
    }

    #[test]
    fn sign_json() {
        let sm = SignatureMatrix::from_strs(&["+-"]).unwrap();
        assert_eq!(serde_json::to_string(&sm).unwrap(), r#"{"cells":[["+","-"]]}"#);
        let back: SignatureMatrix = serde_json::from_str(r#"{"cells":[["+","−"]]}"#).unwrap();
        assert_eq!(back, sm);
    }

    #[test]
    fn labels() {
        assert_eq!(label_of(5, 0), Level::unbarred(5));
        assert_eq!(label_of(5, 9), Level::barred(1));
        for r in 0..10 {
            assert_eq!(row_of(5, label_of(5, r)), r);
        }
    }
}
