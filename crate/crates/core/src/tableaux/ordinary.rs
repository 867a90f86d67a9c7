use serde::{Deserialize, Serialize};

use super::Level;
use crate::combinat::Partition;
use crate::error::{Error, Report, Result, Violation};
use crate::poly::{Coefficient, LaurentPoly};

/// A filling of the Young diagram of `shape`; `rows[i - 1]` is row `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrdinaryTableau {
    shape: Partition,
    n: usize,
    rows: Vec<Vec<Level>>,
}

impl OrdinaryTableau {
    pub fn new(shape: Partition, n: usize, rows: Vec<Vec<Level>>) -> Result<Self> {
        let t = Self { shape, n, rows };
        t.validate().into_result()?;
        Ok(t)
    }

    pub fn new_unchecked(shape: Partition, n: usize, rows: Vec<Vec<Level>>) -> Self {
        Self { shape, n, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Level>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Option<Level> {
        if i == 0 || j == 0 {
            return None;
        }
        self.rows.get(i - 1)?.get(j - 1).copied()
    }

    /// Checks (T1), the row bound `entries of row i >= ī`, (T3) and (T4).
    /// The first failing box in row-major order is reported.
    pub fn validate(&self) -> Report {
        if self.rows.len() != self.shape.len() {
            return Report::Malformed(format!("{} rows for shape {}", self.rows.len(), self.shape));
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
        if self.shape.len() > self.n {
            return Report::Malformed(format!("shape {} has more than n = {} rows", self.shape, self.n));
        }
        for (r, row) in self.rows.iter().enumerate() {
            let i = r + 1;
            for (c, &e) in row.iter().enumerate() {
                let j = c + 1;
                let at = Some((i, j));
                if e.level() as usize > self.n {
                    return one("T1", at, format!("entry {e} is outside the alphabet of rank {}", self.n));
                }
                if (e.level() as usize) < i {
                    return one("row-bound", at, format!("entry {e} in row {i} is below {i}\u{0304}"));
                }
                if let Some(left) = self.get(i, j - 1) {
                    if left > e {
                        return one("T3", at, format!("{left} left of {e}"));
                    }
                }
                if let Some(above) = self.get(i - 1, j) {
                    if above >= e {
                        return one("T4", at, format!("{above} above {e}"));
                    }
                }
            }
        }
        Report::Valid
    }

    pub fn stats(&self) -> OrdinaryStats {
        let mut m = vec![0; self.n];
        let mut m_bar = vec![0; self.n];
        for e in self.rows.iter().flatten() {
            let k = e.level() as usize - 1;
            if e.is_barred() {
                m_bar[k] += 1;
            } else {
                m[k] += 1;
            }
        }
        OrdinaryStats { bar: m_bar.iter().sum(), m, m_bar }
    }

    pub fn x_weight<C: Coefficient>(&self) -> LaurentPoly<C> {
        let s = self.stats();
        let exps: Vec<i32> = s.m.iter().zip(&s.m_bar).map(|(&a, &b)| a as i32 - b as i32).collect();
        LaurentPoly::monomial(self.n, &exps, 0, C::one())
    }
}

fn one(rule: &'static str, at: Option<(usize, usize)>, detail: String) -> Report {
    Report::Invalid(vec![Violation::new(rule, at, detail)])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrdinaryStats {
    pub m: Vec<usize>,
    pub m_bar: Vec<usize>,
    pub bar: usize,
}

/// Every sp(2n)-standard tableau of shape `lam`, in row-major lexicographic order.
pub fn generate_ordinary(lam: &Partition, n: usize) -> Result<Vec<OrdinaryTableau>> {
    if lam.len() > n {
        return Err(Error::Rank(format!("shape {lam} has {} parts, more than n = {n}", lam.len())));
    }
    let cells: Vec<(usize, usize)> = lam
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| (0..p).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lam.parts().iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, n, &mut grid, &mut |g| {
        out.push(OrdinaryTableau {
            shape: lam.clone(),
            n,
            rows: g.iter().map(|row| row.iter().map(|&v| Level::from_index(v)).collect()).collect(),
        })
    });
    Ok(out)
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    n: usize,
    grid: &mut Vec<Vec<usize>>,
    emit: &mut dyn FnMut(&Vec<Vec<usize>>),
) {
    let Some(&(r, c)) = cells.get(k) else {
        emit(grid);
        return;
    };
    // row r (0-based) holds entries >= the barred level r + 1, index 2r
    let mut lo = 2 * r;
    if c > 0 {
        lo = lo.max(grid[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(grid[r - 1][c] + 1);
    }
    for v in lo..2 * n {
        grid[r][c] = v;
        fill(cells, k + 1, n, grid, emit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tableaux::levels;

    fn t(shape: &[usize], n: usize, rows: &[&[i32]]) -> OrdinaryTableau {
        let rows = rows.iter().map(|r| levels(r).unwrap()).collect();
        OrdinaryTableau::new_unchecked(Partition::new(shape.to_vec()).unwrap(), n, rows)
    }

    #[test]
    fn worked_example() {
        let ex = fixtures::ordinary_tableau();
        assert_eq!(ex.validate(), Report::Valid);
        let s = ex.stats();
        assert_eq!(s.bar, 4);
        assert_eq!(ex.x_weight::<i64>(), LaurentPoly::monomial(5, &[-1, 2, 0, 2, -1], 0, 1));
        // with the 5 in row 1 read as a 2 the weight becomes x1^-1 x2^3 x4^2 x5^-2
        let fixed = t(&[4, 3, 3], 5, &[&[-1, -1, 1, 2], &[2, 2, 4], &[4, -5, -5]]);
        assert_eq!(fixed.validate(), Report::Valid);
        assert_eq!(fixed.stats().bar, 4);
        assert_eq!(fixed.x_weight::<i64>(), LaurentPoly::monomial(5, &[-1, 3, 0, 2, -2], 0, 1));
    }

    #[test]
    fn rule_violations() {
        assert_eq!(t(&[1, 1], 2, &[&[2], &[2]]).validate().rules(), vec!["T4"]);
        assert_eq!(t(&[1, 1], 2, &[&[2], &[-2]]).validate().rules(), vec!["T4"]);
        assert_eq!(t(&[2, 1], 2, &[&[-1, -1], &[-1]]).validate().rules(), vec!["row-bound"]);
        assert_eq!(t(&[1], 2, &[&[1]]).validate(), Report::Valid);
        assert_eq!(t(&[1, 1], 3, &[&[2], &[3]]).validate(), Report::Valid);
        let bound = t(&[1, 1], 2, &[&[-1], &[1]]).validate();
        assert_eq!(bound.rules(), vec!["row-bound"]);
        assert_eq!(bound.violations()[0].at, Some((2, 1)));
    }

    #[test]
    fn stats_of_trivial_tableaux() {
        let empty = t(&[], 3, &[]);
        assert_eq!(empty.validate(), Report::Valid);
        assert_eq!(empty.stats().bar, 0);
        assert_eq!(empty.x_weight::<i64>(), LaurentPoly::one(3));
        let single = t(&[1], 1, &[&[-1]]);
        assert_eq!(single.stats().bar, 1);
        assert_eq!(single.x_weight::<i64>(), LaurentPoly::monomial(1, &[-1], 0, 1));
    }

    #[test]
    fn small_generators() {
        let g = generate_ordinary(&Partition::new(vec![1]).unwrap(), 1).unwrap();
        assert_eq!(g, vec![t(&[1], 1, &[&[-1]]), t(&[1], 1, &[&[1]])]);
        assert_eq!(generate_ordinary(&Partition::new(vec![1]).unwrap(), 2).unwrap().len(), 4);
        assert_eq!(generate_ordinary(&Partition::empty(), 3).unwrap().len(), 1);
        assert!(generate_ordinary(&Partition::new(vec![1, 1]).unwrap(), 1).is_err());
        for x in generate_ordinary(&Partition::new(vec![2, 1]).unwrap(), 2).unwrap() {
            assert_eq!(x.validate(), Report::Valid);
        }
    }
}
