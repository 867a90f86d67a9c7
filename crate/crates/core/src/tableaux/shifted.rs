use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Level;
use crate::combinat::StrictPartition;
use crate::error::{Error, Report, Result, Violation};
use crate::poly::{Coefficient, LaurentPoly};

/// A filling of the shifted frame of `shape`. Row `i` (1-based) covers
/// columns `i ..= shape[i] + i - 1`; `rows[i - 1]` lists it left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftedTableau {
    shape: StrictPartition,
    n: usize,
    rows: Vec<Vec<Level>>,
}

impl ShiftedTableau {
    /// Builds a tableau and checks that it is sp(2n)-standard.
    pub fn new(shape: StrictPartition, n: usize, rows: Vec<Vec<Level>>) -> Result<Self> {
        let st = Self { shape, n, rows };
        st.validate().into_result()?;
        Ok(st)
    }

    pub fn new_unchecked(shape: StrictPartition, n: usize, rows: Vec<Vec<Level>>) -> Self {
        Self { shape, n, rows }
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Level>] {
        &self.rows
    }

    /// Entry of box `(i, j)`, 1-based, if the box exists.
    pub fn get(&self, i: usize, j: usize) -> Option<Level> {
        if i == 0 || j < i {
            return None;
        }
        self.rows.get(i - 1)?.get(j - i).copied()
    }

    /// All boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = ((usize, usize), Level)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &e)| ((r + 1, r + 1 + c), e)))
    }

    /// Checks the frame, then (S1), (S3)-(S5) and the profile rule box by box
    /// in row-major order, reporting the first failure; finally `len(shape) = n`.
    pub fn validate(&self) -> Report {
        if self.rows.len() != self.shape.len() {
            return Report::Malformed(format!(
                "{} rows for shape {} with {} parts",
                self.rows.len(),
                self.shape,
                self.shape.len()
            ));
        }
        for (i, (row, &part)) in self.rows.iter().zip(self.shape.parts()).enumerate() {
            if row.len() != part {
                return Report::Malformed(format!(
                    "row {} has {} boxes, shape {} needs {part}",
                    i + 1,
                    row.len(),
                    self.shape
                ));
            }
        }
        for ((i, j), e) in self.boxes() {
            if e.level() as usize > self.n {
                return invalid("S1", (i, j), format!("entry {e} is outside the alphabet of rank {}", self.n));
            }
            if let Some(left) = self.get(i, j - 1) {
                if left > e {
                    return invalid("S3", (i, j), format!("{left} left of {e}"));
                }
            }
            if let Some(above) = self.get(i - 1, j) {
                if above > e {
                    return invalid("S4", (i, j), format!("{above} above {e}"));
                }
            }
            if let Some(diag) = self.get(i - 1, j - 1) {
                if diag >= e {
                    return invalid("S5", (i, j), format!("{diag} diagonally above-left of {e}"));
                }
            }
            if i == j && e.level() as usize != i {
                return invalid("profile", (i, j), format!("diagonal entry {e} is not {i} or {i}\u{0304}"));
            }
        }
        if self.shape.len() != self.n {
            return Report::Invalid(vec![Violation::new(
                "length",
                None,
                format!("shape {} has {} parts but n = {}", self.shape, self.shape.len(), self.n),
            )]);
        }
        Report::Valid
    }

    /// All boxes holding `e`, with their edge-connected components.
    pub fn ribbon_strip(&self, e: Level) -> RibbonStrip {
        let boxes: BTreeSet<(usize, usize)> =
            self.boxes().filter(|&(_, v)| v == e).map(|(b, _)| b).collect();
        let mut seen = BTreeSet::new();
        let mut components = Vec::new();
        for &start in &boxes {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some((i, j)) = stack.pop() {
                comp.push((i, j));
                let nbrs = [(i + 1, j), (i, j + 1), (i.wrapping_sub(1), j), (i, j.wrapping_sub(1))];
                for nb in nbrs {
                    if boxes.contains(&nb) && seen.insert(nb) {
                        stack.push(nb);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        RibbonStrip { entry: e, boxes: boxes.into_iter().collect(), components }
    }

    /// The `2n` strips in the order `1̄, 1, 2̄, 2, ...`.
    pub fn strips(&self) -> Vec<RibbonStrip> {
        (0..2 * self.n).map(|i| self.ribbon_strip(Level::from_index(i))).collect()
    }

    pub fn stats(&self) -> TableauStats {
        let n = self.n;
        let mut m = vec![0; n];
        let mut m_bar = vec![0; n];
        for (_, e) in self.boxes() {
            let k = e.level() as usize - 1;
            if e.is_barred() {
                m_bar[k] += 1;
            } else {
                m[k] += 1;
            }
        }
        let mut str_count = 0;
        let mut var = 0;
        for strip in self.strips() {
            let con = strip.components.len();
            str_count += con;
            if con == 0 {
                continue;
            }
            // up-steps of an unbarred strip, right-steps of a barred one
            if strip.entry.is_barred() {
                let cols: BTreeSet<usize> = strip.boxes.iter().map(|b| b.1).collect();
                var += cols.len() - con;
            } else {
                let rows: BTreeSet<usize> = strip.boxes.iter().map(|b| b.0).collect();
                var += rows.len() - con;
            }
        }
        TableauStats {
            bar: m_bar.iter().sum(),
            m,
            m_bar,
            str_count,
            var,
        }
    }

    /// `prod_k x_k^(m_k - m_k̄)`.
    pub fn x_weight<C: Coefficient>(&self) -> LaurentPoly<C> {
        let s = self.stats();
        let exps: Vec<i32> = s.m.iter().zip(&s.m_bar).map(|(&a, &b)| a as i32 - b as i32).collect();
        LaurentPoly::monomial(self.n, &exps, 0, C::one())
    }

    /// Entry-by-entry t-weight: an unbarred `k` scores `t` when the box above
    /// also holds `k`; a barred `k̄` scores `t`, or `t^2` when the box to its
    /// right also holds `k̄`. Each strip component without a diagonal box
    /// contributes a factor `1 + t`.
    pub fn t_weight<C: Coefficient>(&self) -> LaurentPoly<C> {
        let mut t_exp = 0u32;
        for ((i, j), e) in self.boxes() {
            if e.is_barred() {
                t_exp += if self.get(i, j + 1) == Some(e) { 2 } else { 1 };
            } else if self.get(i.wrapping_sub(1), j) == Some(e) {
                t_exp += 1;
            }
        }
        let off_diagonal = self
            .strips()
            .iter()
            .flat_map(|s| s.components.iter())
            .filter(|c| !c.iter().any(|&(i, j)| i == j))
            .count() as u32;
        &LaurentPoly::t_pow(self.n, t_exp) * &LaurentPoly::one_plus_t_pow(self.n, off_diagonal)
    }

    /// `t^(var + bar) (1 + t)^(str - n)`.
    pub fn t_weight_closed<C: Coefficient>(&self) -> LaurentPoly<C> {
        let s = self.stats();
        &LaurentPoly::t_pow(self.n, (s.var + s.bar) as u32)
            * &LaurentPoly::one_plus_t_pow(self.n, (s.str_count - self.n) as u32)
    }
}

fn invalid(rule: &'static str, at: (usize, usize), detail: String) -> Report {
    Report::Invalid(vec![Violation::new(rule, Some(at), detail)])
}

/// Boxes of a shifted tableau holding one entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonStrip {
    pub entry: Level,
    /// Sorted row-major.
    pub boxes: Vec<(usize, usize)>,
    /// Edge-connected pieces, each sorted, ordered by their first box.
    pub components: Vec<Vec<(usize, usize)>>,
}

impl RibbonStrip {
    /// No two boxes share a diagonal `j - i`.
    pub fn has_distinct_diagonals(&self) -> bool {
        let diags: BTreeSet<usize> = self.boxes.iter().map(|&(i, j)| j - i).collect();
        diags.len() == self.boxes.len()
    }

    /// Whether the strip meets diagonal `q` (boxes with `j - i + 1 = q`).
    pub fn meets_diagonal(&self, q: usize) -> bool {
        self.boxes.iter().any(|&(i, j)| j + 1 - i == q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableauStats {
    /// `m[k - 1]` is the number of entries `k`.
    pub m: Vec<usize>,
    /// `m_bar[k - 1]` is the number of entries `k̄`.
    pub m_bar: Vec<usize>,
    pub bar: usize,
    /// Total number of connected strip components.
    #[serde(rename = "str")]
    pub str_count: usize,
    pub var: usize,
}

/// Every sp(2n)-standard shifted tableau of shape `mu`, in row-major
/// lexicographic order of entries.
pub fn generate_shifted(mu: &StrictPartition, n: usize) -> Result<Vec<ShiftedTableau>> {
    let mut out = Vec::new();
    for_each_shifted(mu, n, |st| out.push(st))?;
    Ok(out)
}

/// Streams the tableaux of [`generate_shifted`] to `visit` in the same order.
pub fn for_each_shifted(mu: &StrictPartition, n: usize, mut visit: impl FnMut(ShiftedTableau)) -> Result<()> {
    check_rank(mu, n)?;
    let mut fill = Filler::new(mu, n);
    fill.run(0, &mut |g| visit(g.to_tableau()));
    Ok(())
}

/// Same output as [`generate_shifted`]; branches on the completed first row
/// run on the current rayon pool and are concatenated in order.
pub fn generate_shifted_par(mu: &StrictPartition, n: usize) -> Result<Vec<ShiftedTableau>> {
    check_rank(mu, n)?;
    let first_row = mu.parts().first().copied().unwrap_or(0);
    let mut prefixes = Vec::new();
    let mut fill = Filler::new(mu, n);
    fill.stop_at = first_row;
    fill.run(0, &mut |g| prefixes.push(g.grid[0].clone()));
    let parts: Vec<Vec<ShiftedTableau>> = prefixes
        .into_par_iter()
        .map(|row| {
            let mut f = Filler::new(mu, n);
            f.grid[0] = row;
            let mut out = Vec::new();
            f.run(first_row, &mut |g| out.push(g.to_tableau()));
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

fn check_rank(mu: &StrictPartition, n: usize) -> Result<()> {
    if mu.len() != n {
        return Err(Error::Rank(format!("shape {mu} has {} parts, expected n = {n}", mu.len())));
    }
    Ok(())
}

/// Depth-first filler over alphabet indices, boxes in row-major order.
struct Filler<'a> {
    mu: &'a StrictPartition,
    n: usize,
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    stop_at: usize,
}

impl<'a> Filler<'a> {
    fn new(mu: &'a StrictPartition, n: usize) -> Self {
        let cells: Vec<(usize, usize)> = mu
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p).map(move |c| (r, c)))
            .collect();
        let grid = mu.parts().iter().map(|&p| vec![0; p]).collect();
        let stop_at = cells.len();
        Self { mu, n, cells, grid, stop_at }
    }

    // `r`, `c` are 0-based; column offset within the row is `c`, so the
    // absolute column is `r + c`. Above is (r-1, c+1), diagonal is (r-1, c).
    fn run(&mut self, k: usize, emit: &mut dyn FnMut(&Self)) {
        if k == self.stop_at {
            emit(self);
            return;
        }
        let (r, c) = self.cells[k];
        let mut lo = 0;
        if c > 0 {
            lo = lo.max(self.grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(self.grid[r - 1][c + 1]);
            lo = lo.max(self.grid[r - 1][c] + 1);
        }
        let hi = if c == 0 { 2 * r + 1 } else { 2 * self.n - 1 };
        let lo = if c == 0 { lo.max(2 * r) } else { lo };
        for v in lo..=hi.min(2 * self.n - 1) {
            self.grid[r][c] = v;
            self.run(k + 1, emit);
        }
    }

    fn to_tableau(&self) -> ShiftedTableau {
        ShiftedTableau {
            shape: self.mu.clone(),
            n: self.n,
            rows: self
                .grid
                .iter()
                .map(|row| row.iter().map(|&v| Level::from_index(v)).collect())
                .collect(),
        }
    }
}
