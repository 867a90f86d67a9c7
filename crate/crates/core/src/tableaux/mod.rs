//! sp(2n)-standard shifted and ordinary tableaux over the alphabet
//! `1̄ < 1 < 2̄ < 2 < ... < n̄ < n`.

mod ordinary;
mod shifted;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use ordinary::{generate_ordinary, OrdinaryStats, OrdinaryTableau};
pub use shifted::{
    for_each_shifted, generate_shifted, generate_shifted_par, RibbonStrip, ShiftedTableau, TableauStats,
};

/// An entry `k` or `k̄`. Serialized as a signed integer: `+k` or `-k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i32", into = "i32")]
pub struct Level {
    level: u32,
    barred: bool,
}

impl Level {
    pub fn new(level: u32, barred: bool) -> Result<Self> {
        if level == 0 {
            return Err(Error::Malformed("level 0 is not an entry".into()));
        }
        Ok(Self { level, barred })
    }

    pub fn unbarred(level: u32) -> Self {
        Self::new(level, false).expect("level must be positive")
    }

    pub fn barred(level: u32) -> Self {
        Self::new(level, true).expect("level must be positive")
    }

    pub fn level(self) -> u32 {
        self.level
    }

    pub fn is_barred(self) -> bool {
        self.barred
    }

    /// Position in the alphabet: `1̄ -> 0`, `1 -> 1`, `2̄ -> 2`, ...
    pub fn index(self) -> usize {
        2 * (self.level as usize - 1) + usize::from(!self.barred)
    }

    pub fn from_index(i: usize) -> Self {
        Self { level: (i / 2 + 1) as u32, barred: i.is_multiple_of(2) }
    }

    pub fn to_signed(self) -> i32 {
        let v = self.level as i32;
        if self.barred {
            -v
        } else {
            v
        }
    }

    pub fn from_signed(v: i32) -> Result<Self> {
        Self::new(v.unsigned_abs(), v < 0)
    }
}

impl Ord for Level {
    fn cmp(&self, other: &Self) -> Ordering {
        self.index().cmp(&other.index())
    }
}

impl PartialOrd for Level {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<i32> for Level {
    type Error = Error;

    fn try_from(v: i32) -> Result<Self> {
        Level::from_signed(v)
    }
}

impl From<Level> for i32 {
    fn from(l: Level) -> i32 {
        l.to_signed()
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}\u{0304}", self.level)
        } else {
            write!(f, "{}", self.level)
        }
    }
}

/// Parses a row of signed integers into levels.
pub fn levels(row: &[i32]) -> Result<Vec<Level>> {
    row.iter().map(|&v| Level::from_signed(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_order() {
        let order = [-1, 1, -2, 2, -3, 3];
        let ls = levels(&order).unwrap();
        for w in ls.windows(2) {
            assert!(w[0] < w[1]);
        }
        for (i, l) in ls.iter().enumerate() {
            assert_eq!(l.index(), i);
            assert_eq!(Level::from_index(i), *l);
        }
    }

    #[test]
    fn signed_encoding() {
        assert_eq!(serde_json::to_string(&Level::barred(3)).unwrap(), "-3");
        assert_eq!(serde_json::from_str::<Level>("4").unwrap(), Level::unbarred(4));
        assert!(serde_json::from_str::<Level>("0").is_err());
    }
}
