//! Regularity bounds for bigraded Veronese algebras `R_(s,t)`, evaluated by
//! ceiling arithmetic on a complete Betti table of `R`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::resolve::BettiTable;

/// Bounds for `reg_x` and `reg_y` of the Veronese algebra along `(s, t)`,
/// with the witnessing table entries. A zero component of the diagonal
/// disables that direction rather than erroring.
#[derive(Clone, Debug, Serialize)]
pub struct VeroneseBoundReport {
    pub s: u32,
    pub t: u32,
    pub bound_x: Option<i64>,
    pub bound_y: Option<i64>,
    /// Entries `(i, a, b)` achieving `bound_x`.
    pub witness_x: Vec<(usize, u32, u32)>,
    pub witness_y: Vec<(usize, u32, u32)>,
}

fn ceil_div(a: u32, s: u32) -> i64 {
    ((a + s - 1) / s) as i64
}

/// `bound_x = max over entries of ceil(a/s) - i`, and the y analogue; these
/// bound the regularities of the Veronese algebra from above.
pub fn veronese_bound(table: &BettiTable, s: u32, t: u32) -> Result<VeroneseBoundReport> {
    if !table.complete {
        return Err(Error::IncompleteTable);
    }
    if s == 0 && t == 0 {
        return Err(Error::InvalidArgument(
            "the diagonal (s, t) must be nonzero".into(),
        ));
    }
    let mut bound_x: Option<i64> = None;
    let mut bound_y: Option<i64> = None;
    let mut witness_x = Vec::new();
    let mut witness_y = Vec::new();
    for (i, a, b, _) in table.iter() {
        if s > 0 {
            let c = ceil_div(a, s) - i as i64;
            if bound_x.map_or(true, |cur| c > cur) {
                bound_x = Some(c);
                witness_x = vec![(i, a, b)];
            } else if bound_x == Some(c) {
                witness_x.push((i, a, b));
            }
        }
        if t > 0 {
            let c = ceil_div(b, t) - i as i64;
            if bound_y.map_or(true, |cur| c > cur) {
                bound_y = Some(c);
                witness_y = vec![(i, a, b)];
            } else if bound_y == Some(c) {
                witness_y.push((i, a, b));
            }
        }
    }
    Ok(VeroneseBoundReport {
        s,
        t,
        bound_x,
        bound_y,
        witness_x,
        witness_y,
    })
}

/// Minimal `s*` (resp. `t*`) with `bound_x <= 0` for all `s >= s*`:
/// closed-form `max over entries with i >= 1 of ceil(a/i)`, floored at 1.
/// `None` when some entry with `i = 0` has a positive degree in the relevant
/// direction (then no diagonal kills the bound).
pub fn veronese_zero_thresholds(table: &BettiTable) -> Result<(Option<u32>, Option<u32>)> {
    if !table.complete {
        return Err(Error::IncompleteTable);
    }
    let mut s_star: Option<u32> = Some(1);
    let mut t_star: Option<u32> = Some(1);
    for (i, a, b, _) in table.iter() {
        if i == 0 {
            if a > 0 {
                s_star = None;
            }
            if b > 0 {
                t_star = None;
            }
            continue;
        }
        // ceil(a/s) <= i iff s >= ceil(a/i)
        let need_s = (a + i as u32 - 1) / i as u32;
        if let Some(cur) = s_star {
            s_star = Some(cur.max(need_s.max(1)));
        }
        let need_t = (b + i as u32 - 1) / i as u32;
        if let Some(cur) = t_star {
            t_star = Some(cur.max(need_t.max(1)));
        }
    }
    Ok((s_star, t_star))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolve::{BettiTable, BidegreeBox};

    fn table(entries: &[(usize, u32, u32, u64)], complete: bool) -> BettiTable {
        let a_max = entries.iter().map(|e| e.1).max().unwrap_or(0);
        let b_max = entries.iter().map(|e| e.2).max().unwrap_or(0);
        let mut t = BettiTable::new(BidegreeBox { a_max, b_max }, complete);
        for &(i, a, b, beta) in entries {
            t.insert(i, a, b, beta);
        }
        t
    }

    #[test]
    fn bound_of_the_principal_plane_table() {
        // S/(x1 y1): entries (0,(0,0)) and (1,(1,1))
        let t = table(&[(0, 0, 0, 1), (1, 1, 1, 1)], true);
        let r = veronese_bound(&t, 1, 1).unwrap();
        assert_eq!(r.bound_x, Some(0));
        assert_eq!(r.bound_y, Some(0));
        let (s, tt) = veronese_zero_thresholds(&t).unwrap();
        assert_eq!((s, tt), (Some(1), Some(1)));
    }

    #[test]
    fn single_entry_table_bounds_are_zero() {
        let t = table(&[(0, 0, 0, 1)], true);
        for s in 1..5 {
            for tt in 1..5 {
                let r = veronese_bound(&t, s, tt).unwrap();
                assert_eq!(r.bound_x, Some(0));
                assert_eq!(r.bound_y, Some(0));
            }
        }
        assert_eq!(veronese_zero_thresholds(&t).unwrap(), (Some(1), Some(1)));
    }

    #[test]
    fn worked_bigin_table_bound() {
        // entries of S/bigin(J): beta_1 at (1,1)x2 and (1,2); beta_2 at
        // (2,2) and (1,2); bound_y at s=t=1 is 1
        let t = table(
            &[
                (0, 0, 0, 1),
                (1, 1, 1, 2),
                (1, 1, 2, 1),
                (2, 2, 2, 1),
                (2, 1, 2, 1),
            ],
            true,
        );
        let r = veronese_bound(&t, 1, 1).unwrap();
        assert_eq!(r.bound_x, Some(0));
        assert_eq!(r.bound_y, Some(1));
        assert!(r.witness_y.contains(&(1, 1, 2)));
    }

    #[test]
    fn synthetic_high_degree_entry() {
        // an entry beta_1 at (5, b) forces s* = 5
        let t = table(&[(0, 0, 0, 1), (1, 5, 1, 1)], true);
        let (s, _) = veronese_zero_thresholds(&t).unwrap();
        assert_eq!(s, Some(5));
        // descending scan agrees with the closed form
        for s_try in 1..=6u32 {
            let r = veronese_bound(&t, s_try, 1).unwrap();
            assert_eq!(r.bound_x.unwrap() <= 0, s_try >= 5, "s = {s_try}");
        }
    }

    #[test]
    fn monotone_in_the_diagonal() {
        let t = table(&[(0, 0, 0, 1), (1, 3, 2, 1), (2, 4, 4, 2)], true);
        let mut prev_x = i64::MAX;
        let mut prev_y = i64::MAX;
        for s in 1..=8u32 {
            let r = veronese_bound(&t, s, s).unwrap();
            let bx = r.bound_x.unwrap();
            let by = r.bound_y.unwrap();
            assert!(bx <= prev_x);
            assert!(by <= prev_y);
            prev_x = bx;
            prev_y = by;
        }
    }

    #[test]
    fn zero_diagonal_component_disables_a_direction() {
        let t = table(&[(0, 0, 0, 1), (1, 1, 1, 1)], true);
        let r = veronese_bound(&t, 0, 2).unwrap();
        assert_eq!(r.bound_x, None);
        assert!(r.bound_y.is_some());
        assert!(veronese_bound(&t, 0, 0).is_err());
    }

    #[test]
    fn incomplete_tables_are_rejected() {
        let t = table(&[(0, 0, 0, 1)], false);
        assert!(veronese_bound(&t, 1, 1).is_err());
        assert!(veronese_zero_thresholds(&t).is_err());
    }
}
