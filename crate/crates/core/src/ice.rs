//! Six-vertex (square ice) configurations with a U-turn boundary on the
//! left, and their correspondence with μ-UASMs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::StrictPartition;
use crate::error::{Error, Report, Result, Violation};
use crate::poly::{Coefficient, LaurentPoly};
use crate::tableaux::Level;
use crate::uasm::{label_of, nearest_below, nearest_right, row_of, MuUasm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    N,
    S,
    E,
    W,
}

/// The six vertex types under their conventional two-letter labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexType {
    WE,
    NS,
    NE,
    SW,
    NW,
    SE,
}

impl VertexType {
    pub const ALL: [VertexType; 6] =
        [VertexType::WE, VertexType::NS, VertexType::NE, VertexType::SW, VertexType::NW, VertexType::SE];

    /// The two edges pointing into the vertex.
    pub fn incoming(self) -> [Dir; 2] {
        use Dir::*;
        match self {
            VertexType::WE => [W, E],
            VertexType::NS => [N, S],
            VertexType::NE => [W, S],
            VertexType::SW => [N, E],
            VertexType::NW => [E, S],
            VertexType::SE => [N, W],
        }
    }

    /// The two edges pointing away from the vertex.
    pub fn outgoing(self) -> [Dir; 2] {
        let inc = self.incoming();
        let mut out = [Dir::N; 2];
        let mut k = 0;
        for d in [Dir::N, Dir::S, Dir::E, Dir::W] {
            if !inc.contains(&d) {
                out[k] = d;
                k += 1;
            }
        }
        out
    }

    pub fn is_in(self, d: Dir) -> bool {
        self.incoming().contains(&d)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VertexType::WE => "WE",
            VertexType::NS => "NS",
            VertexType::NE => "NE",
            VertexType::SW => "SW",
            VertexType::NW => "NW",
            VertexType::SE => "SE",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }

    /// Cell weight in the t-deformation; `odd_row` counts rows from 1 at the top.
    pub fn t_weight<C: Coefficient>(self, rank: usize, odd_row: bool) -> LaurentPoly<C> {
        let t_exp = match (self, odd_row) {
            (VertexType::NS, _) => return LaurentPoly::one_plus_t_pow(rank, 1),
            (VertexType::WE, true) => 0,
            (VertexType::WE, false) => 1,
            (VertexType::NE, _) => 1,
            (VertexType::SW | VertexType::NW, _) => 0,
            (VertexType::SE, true) => 0,
            (VertexType::SE, false) => 2,
        };
        LaurentPoly::t_pow(rank, t_exp)
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for VertexType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VertexType::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| Error::Malformed(format!("{s:?} is not a vertex type")))
    }
}

impl Serialize for VertexType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for VertexType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A `2n x m` matrix of vertex types.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConfigMatrix {
    mu: StrictPartition,
    n: usize,
    cells: Vec<Vec<VertexType>>,
}

impl ConfigMatrix {
    pub fn new(mu: StrictPartition, n: usize, cells: Vec<Vec<VertexType>>) -> Result<Self> {
        let cm = Self { mu, n, cells };
        cm.validate().into_result()?;
        Ok(cm)
    }

    pub fn new_unchecked(mu: StrictPartition, n: usize, cells: Vec<Vec<VertexType>>) -> Self {
        Self { mu, n, cells }
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

    pub fn cells(&self) -> &[Vec<VertexType>] {
        &self.cells
    }

    pub fn validate(&self) -> Report {
        validate_cm(self)
    }

    pub fn stats(&self) -> IceStats {
        ice_stats(self)
    }

    pub fn x_weight<C: Coefficient>(&self) -> LaurentPoly<C> {
        let s = self.stats();
        let exps: Vec<i32> = s.m.iter().zip(&s.m_bar).map(|(&a, &b)| a as i32 - b as i32).collect();
        LaurentPoly::monomial(self.n, &exps, 0, C::one())
    }

    /// Product of the per-cell weights.
    pub fn t_weight<C: Coefficient>(&self) -> LaurentPoly<C> {
        let mut acc = LaurentPoly::one(self.n);
        for (i, row) in self.cells.iter().enumerate() {
            for &v in row {
                acc = &acc * &v.t_weight(self.n, i % 2 == 0);
            }
        }
        acc
    }

    /// `t^(ne_o + se_e + wgt_e) (1 + t)^ns`.
    pub fn t_weight_closed<C: Coefficient>(&self) -> LaurentPoly<C> {
        let s = self.stats();
        &LaurentPoly::t_pow(self.n, (s.ne_o + s.se_e + s.wgt_e) as u32)
            * &LaurentPoly::one_plus_t_pow(self.n, s.ns as u32)
    }
}

/// Checks edge agreement between neighbours and the four boundary rules,
/// cell by cell in row-major order; the first failure is reported.
pub fn validate_cm(cm: &ConfigMatrix) -> Report {
    let (n, mu, cells) = (cm.n, &cm.mu, &cm.cells);
    let m = mu.largest();
    if mu.len() != n {
        return Report::Malformed(format!("mu = {mu} has {} parts, expected n = {n}", mu.len()));
    }
    if cells.len() != 2 * n || cells.iter().any(|r| r.len() != m) {
        return Report::Malformed(format!("expected a {}x{m} matrix", 2 * n));
    }
    let fail = |rule, i: usize, q: usize, detail: String| Report::Invalid(vec![Violation::new(rule, Some((i + 1, q + 1)), detail)]);
    for i in 0..2 * n {
        for q in 0..m {
            let v = cells[i][q];
            if i == 0 {
                let want_out = mu.contains_part(q + 1);
                if v.is_in(Dir::N) == want_out {
                    let (want, got) = if want_out { ("outgoing", "incoming") } else { ("incoming", "outgoing") };
                    return fail("top-boundary", i, q, format!("{v}: N edge of column {} is {got}, must be {want}", q + 1));
                }
            }
            if q == 0 && i % 2 == 1 && v.is_in(Dir::W) == cells[i - 1][0].is_in(Dir::W) {
                return fail("u-turn", i, q, format!("rows {} and {} need one W edge in and one out", i, i + 1));
            }
            if q + 1 == m {
                if !v.is_in(Dir::E) {
                    return fail("right-boundary", i, q, format!("{v}: E edge must be incoming"));
                }
            } else if v.is_in(Dir::E) == cells[i][q + 1].is_in(Dir::W) {
                return fail("horizontal-edge", i, q, format!("{v} | {} disagree on their shared edge", cells[i][q + 1]));
            }
            if i + 1 == 2 * n {
                if v.is_in(Dir::S) {
                    return fail("bottom-boundary", i, q, format!("{v}: S edge must be outgoing"));
                }
            } else if v.is_in(Dir::S) == cells[i + 1][q].is_in(Dir::N) {
                return fail("vertical-edge", i, q, format!("{v} over {} disagree on their shared edge", cells[i + 1][q]));
            }
        }
    }
    Report::Valid
}

/// WE to 1, NS to -1, everything else to 0. The input is validated first;
/// an invalid image of a valid configuration is reported as an invariant
/// failure.
pub fn chi(cm: &ConfigMatrix) -> Result<MuUasm> {
    cm.validate().into_result()?;
    let cells = cm
        .cells
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| match v {
                    VertexType::WE => 1,
                    VertexType::NS => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    MuUasm::new(cm.mu.clone(), cm.n, cells)
        .map_err(|e| Error::Invariant(format!("image of a valid configuration is not a mu-UASM: {e}")))
}

/// Zeros are resolved by their nearest non-zero neighbours to the right and
/// below, a missing neighbour counting as -1.
pub fn chi_inv(ua: &MuUasm) -> ConfigMatrix {
    let cells = ua.cells();
    let out = cells
        .iter()
        .enumerate()
        .map(|(i, row)| {
            (0..row.len())
                .map(|q| match row[q] {
                    1 => VertexType::WE,
                    -1 => VertexType::NS,
                    _ => {
                        let right = nearest_right(row, q) == Some(1);
                        let below = nearest_below(cells, i, q) == Some(1);
                        match (right, below) {
                            (true, true) => VertexType::NE,
                            (false, false) => VertexType::SW,
                            (false, true) => VertexType::NW,
                            (true, false) => VertexType::SE,
                        }
                    }
                })
                .collect()
        })
        .collect();
    ConfigMatrix { mu: ua.mu().clone(), n: ua.n(), cells: out }
}

/// Vertex counts of one row.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RowCounts {
    pub label: i32,
    pub we: usize,
    pub ns: usize,
    pub ne: usize,
    pub sw: usize,
    pub nw: usize,
    pub se: usize,
}

impl RowCounts {
    fn bump(&mut self, v: VertexType) {
        *match v {
            VertexType::WE => &mut self.we,
            VertexType::NS => &mut self.ns,
            VertexType::NE => &mut self.ne,
            VertexType::SW => &mut self.sw,
            VertexType::NW => &mut self.nw,
            VertexType::SE => &mut self.se,
        } += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IceStats {
    pub we: usize,
    pub ns: usize,
    pub ne: usize,
    pub sw: usize,
    pub nw: usize,
    pub se: usize,
    /// One entry per row, top to bottom; `label` is the signed row label.
    pub rows: Vec<RowCounts>,
    /// NE vertices in unbarred rows.
    pub ne_o: usize,
    /// SE vertices in barred rows.
    pub se_e: usize,
    /// NE, SE and WE vertices in barred rows.
    pub wgt_e: usize,
    /// `m[k - 1] = ne + se + we` in the row labelled `k`.
    pub m: Vec<usize>,
    /// The same count in the row labelled `k̄`.
    pub m_bar: Vec<usize>,
}

pub fn ice_stats(cm: &ConfigMatrix) -> IceStats {
    let n = cm.n;
    let mut totals = [0usize; 6];
    let rows: Vec<RowCounts> = cm
        .cells
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut rc = RowCounts { label: label_of(n, i).to_signed(), ..Default::default() };
            for &v in row {
                rc.bump(v);
                totals[v.slot()] += 1;
            }
            rc
        })
        .collect();
    let plus = |rc: &RowCounts| rc.ne + rc.se + rc.we;
    let (mut ne_o, mut se_e, mut wgt_e) = (0, 0, 0);
    for (i, rc) in rows.iter().enumerate() {
        if i % 2 == 0 {
            ne_o += rc.ne;
        } else {
            se_e += rc.se;
            wgt_e += plus(rc);
        }
    }
    let m = (1..=n).map(|k| plus(&rows[row_of(n, Level::unbarred(k as u32))])).collect();
    let m_bar = (1..=n).map(|k| plus(&rows[row_of(n, Level::barred(k as u32))])).collect();
    let [we, ns, ne, sw, nw, se] = totals;
    IceStats { we, ns, ne, sw, nw, se, rows, ne_o, se_e, wgt_e, m, m_bar }
}
