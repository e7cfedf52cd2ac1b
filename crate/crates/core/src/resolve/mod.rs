//! Bigraded Betti numbers by two independent routes (degreewise Koszul
//! homology, Taylor resolution minimalization) and regularity read off the
//! tables.

pub mod koszul;
pub mod taylor;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::BigradedIdeal;
use crate::regularity::Direction;

pub use koszul::{koszul_betti, koszul_strand, KoszulStrand, QuotientRing};
pub use taylor::taylor_betti;

/// Bidegree window `{0..=a_max} x {0..=b_max}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BidegreeBox {
    pub a_max: u32,
    pub b_max: u32,
}

impl BidegreeBox {
    pub fn contains(&self, a: u32, b: u32) -> bool {
        a <= self.a_max && b <= self.b_max
    }
}

/// Finite map `(i, (a, b)) -> beta_{i,(a,b)} >= 1`, together with the window
/// that was actually computed and a completeness certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32, u32), u64>,
    pub bbox: BidegreeBox,
    /// True only when a termination criterion certifies that no entries
    /// exist beyond the box.
    pub complete: bool,
}

impl BettiTable {
    pub fn new(bbox: BidegreeBox, complete: bool) -> Self {
        BettiTable {
            entries: BTreeMap::new(),
            bbox,
            complete,
        }
    }

    pub fn insert(&mut self, i: usize, a: u32, b: u32, beta: u64) {
        if beta > 0 {
            self.entries.insert((i, a, b), beta);
        }
    }

    pub fn get(&self, i: usize, a: u32, b: u32) -> u64 {
        self.entries.get(&(i, a, b)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, a, b), &v)| (i, a, b, v))
    }

    pub fn max_homological_index(&self) -> usize {
        self.entries.keys().map(|&(i, _, _)| i).max().unwrap_or(0)
    }

    /// Entrywise equality of the stored maps.
    pub fn same_entries(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }

    /// Componentwise bounding box of the support.
    pub fn support_box(&self) -> BidegreeBox {
        let a_max = self.entries.keys().map(|&(_, a, _)| a).max().unwrap_or(0);
        let b_max = self.entries.keys().map(|&(_, _, b)| b).max().unwrap_or(0);
        BidegreeBox { a_max, b_max }
    }
}

/// Outcome of reading a regularity off a Betti table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RegOutcome {
    Value(i64),
    /// The table is incomplete and the maximum sits on the box boundary.
    Incomplete,
    /// Empty table (the zero module) carries no regularity.
    Undefined,
}

impl RegOutcome {
    pub fn value(&self) -> Option<i64> {
        match self {
            RegOutcome::Value(v) => Some(*v),
            _ => None,
        }
    }
}

/// `max { a - i }` (direction x) or `max { b - i }` (direction y) over the
/// nonzero entries.
pub fn reg_from_betti(table: &BettiTable, dir: Direction) -> RegOutcome {
    if table.is_empty() {
        return RegOutcome::Undefined;
    }
    let mut best: Option<i64> = None;
    let mut boundary = false;
    for (i, a, b, _) in table.iter() {
        let v = match dir {
            Direction::X => a as i64 - i as i64,
            Direction::Y => b as i64 - i as i64,
        };
        if best.map_or(true, |cur| v > cur) {
            best = Some(v);
            boundary = match dir {
                Direction::X => a == table.bbox.a_max,
                Direction::Y => b == table.bbox.b_max,
            };
        } else if best == Some(v) {
            boundary |= match dir {
                Direction::X => a == table.bbox.a_max,
                Direction::Y => b == table.bbox.b_max,
            };
        }
    }
    if !table.complete && boundary {
        RegOutcome::Incomplete
    } else {
        RegOutcome::Value(best.unwrap())
    }
}

/// Both regularities of the table at once; errors on incomplete reads.
pub fn reg_pair(table: &BettiTable) -> Result<(i64, i64)> {
    let x = reg_from_betti(table, Direction::X);
    let y = reg_from_betti(table, Direction::Y);
    match (x.value(), y.value()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::IncompleteTable),
    }
}

/// Castelnuovo-Mumford regularity of a nonzero homogeneous ideal `I` of the
/// x-subring: `reg(I) = reg(S_x/I) + 1`, the quotient regularity coming from
/// the almost-regular chain specialized to `m = 0`.
pub fn graded_regularity(ideal: &BigradedIdeal, seed: u64) -> Result<i64> {
    if ideal.is_zero_ideal() {
        return Err(Error::ZeroIdeal);
    }
    let q = crate::regularity::graded_regularity_of_quotient(ideal, seed)?;
    Ok(q + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::text::parse_poly;
    use crate::ring::{FieldSpec, RingSignature};

    fn xring(n: usize) -> RingSignature {
        RingSignature::new(n, 0, FieldSpec::Q).unwrap()
    }

    fn xideal(r: &RingSignature, srcs: &[&str]) -> BigradedIdeal {
        let gens = srcs.iter().map(|s| parse_poly(r, s).unwrap()).collect();
        BigradedIdeal::new(r, gens).unwrap()
    }

    #[test]
    fn reg_reads_off_tables() {
        // table of S/(x1 y1): entries (0,(0,0)) and (1,(1,1))
        let mut t = BettiTable::new(BidegreeBox { a_max: 2, b_max: 2 }, true);
        t.insert(0, 0, 0, 1);
        t.insert(1, 1, 1, 1);
        assert_eq!(reg_from_betti(&t, Direction::X), RegOutcome::Value(0));
        assert_eq!(reg_from_betti(&t, Direction::Y), RegOutcome::Value(0));

        let mut single = BettiTable::new(BidegreeBox { a_max: 0, b_max: 0 }, true);
        single.insert(0, 0, 0, 1);
        assert_eq!(reg_pair(&single).unwrap(), (0, 0));

        let empty = BettiTable::new(BidegreeBox { a_max: 0, b_max: 0 }, true);
        assert_eq!(reg_from_betti(&empty, Direction::X), RegOutcome::Undefined);
    }

    #[test]
    fn incomplete_boundary_max_is_flagged() {
        let mut t = BettiTable::new(BidegreeBox { a_max: 3, b_max: 3 }, false);
        t.insert(0, 0, 0, 1);
        t.insert(1, 3, 1, 1);
        assert_eq!(reg_from_betti(&t, Direction::X), RegOutcome::Incomplete);
        assert_eq!(reg_from_betti(&t, Direction::Y), RegOutcome::Value(0));
    }

    #[test]
    fn graded_regularity_examples() {
        // linear form
        let r1 = xring(1);
        assert_eq!(graded_regularity(&xideal(&r1, &["x1"]), 0).unwrap(), 1);
        // m^2 in two variables has a linear resolution: reg = 2
        let r2 = xring(2);
        assert_eq!(
            graded_regularity(&xideal(&r2, &["x1^2", "x1*x2", "x2^2"]), 0).unwrap(),
            2
        );
        // complete intersection (x1^2, x2^3): reg = 2 + 3 - 1 = 4
        assert_eq!(
            graded_regularity(&xideal(&r2, &["x1^2", "x2^3"]), 0).unwrap(),
            4
        );
        assert!(graded_regularity(&BigradedIdeal::zero(&r2), 0).is_err());
    }
}
