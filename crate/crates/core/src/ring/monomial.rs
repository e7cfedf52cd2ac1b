//! Monomials of a standard bigraded polynomial ring.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A monomial `x^u y^v`, stored as dense exponent vectors.
///
/// Vector lengths must match the ambient ring signature; constructors on the
/// ring types enforce this. `Ord` is the fixed bigraded order used throughout
/// (see [`crate::ring::order::TermOrder::Paper`]), which makes sorted term
/// lists canonical.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BiMonomial {
    pub u: Vec<u32>,
    pub v: Vec<u32>,
}

impl BiMonomial {
    pub fn new(u: Vec<u32>, v: Vec<u32>) -> Self {
        BiMonomial { u, v }
    }

    pub fn one(n: usize, m: usize) -> Self {
        BiMonomial {
            u: vec![0; n],
            v: vec![0; m],
        }
    }

    /// `x_i` with 0-based index `i`.
    pub fn xvar(n: usize, m: usize, i: usize) -> Self {
        let mut z = Self::one(n, m);
        z.u[i] = 1;
        z
    }

    /// `y_j` with 0-based index `j`.
    pub fn yvar(n: usize, m: usize, j: usize) -> Self {
        let mut z = Self::one(n, m);
        z.v[j] = 1;
        z
    }

    pub fn is_one(&self) -> bool {
        self.u.iter().all(|&e| e == 0) && self.v.iter().all(|&e| e == 0)
    }

    pub fn xdeg(&self) -> u32 {
        self.u.iter().sum()
    }

    pub fn ydeg(&self) -> u32 {
        self.v.iter().sum()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.xdeg(), self.ydeg())
    }

    /// Support of the x-exponent vector (0-based indices).
    pub fn supp_x(&self) -> Vec<usize> {
        (0..self.u.len()).filter(|&i| self.u[i] > 0).collect()
    }

    /// `m_x`: the largest index (1-based) with a positive x-exponent, 0 if none.
    pub fn max_x(&self) -> usize {
        (0..self.u.len()).rev().find(|&i| self.u[i] > 0).map_or(0, |i| i + 1)
    }

    /// `m_y`: the largest index (1-based) with a positive y-exponent, 0 if none.
    pub fn max_y(&self) -> usize {
        (0..self.v.len()).rev().find(|&i| self.v[i] > 0).map_or(0, |i| i + 1)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        BiMonomial {
            u: self.u.iter().zip(&rhs.u).map(|(a, b)| a + b).collect(),
            v: self.v.iter().zip(&rhs.v).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, rhs: &Self) -> bool {
        self.u.iter().zip(&rhs.u).all(|(a, b)| a <= b)
            && self.v.iter().zip(&rhs.v).all(|(a, b)| a <= b)
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        if rhs.divides(self) {
            Some(BiMonomial {
                u: self.u.iter().zip(&rhs.u).map(|(a, b)| a - b).collect(),
                v: self.v.iter().zip(&rhs.v).map(|(a, b)| a - b).collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, rhs: &Self) -> Self {
        BiMonomial {
            u: self.u.iter().zip(&rhs.u).map(|(a, b)| *a.max(b)).collect(),
            v: self.v.iter().zip(&rhs.v).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, rhs: &Self) -> Self {
        BiMonomial {
            u: self.u.iter().zip(&rhs.u).map(|(a, b)| *a.min(b)).collect(),
            v: self.v.iter().zip(&rhs.v).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    /// Componentwise partial order `u <= u'` on both blocks.
    pub fn leq_componentwise(&self, rhs: &Self) -> bool {
        self.divides(rhs)
    }

    /// Exchange move `x_i * z / x_s` (0-based `i`, `s`); requires `x_s | z`.
    pub fn exchange_x(&self, i: usize, s: usize) -> Self {
        debug_assert!(self.u[s] > 0);
        let mut z = self.clone();
        z.u[s] -= 1;
        z.u[i] += 1;
        z
    }

    pub fn exchange_y(&self, j: usize, t: usize) -> Self {
        debug_assert!(self.v[t] > 0);
        let mut z = self.clone();
        z.v[t] -= 1;
        z.v[j] += 1;
        z
    }
}

/// The fixed bigraded comparison: `(|u|+|v|, |v|, |u|)` lexicographically,
/// ties broken reverse-lexicographically with respect to
/// `y_1 > ... > y_m > x_1 > ... > x_n` (the last nonzero exponent difference
/// in that listing decides, negative meaning greater).
pub fn paper_cmp(a: &BiMonomial, b: &BiMonomial) -> Ordering {
    let (au, av) = (a.xdeg(), a.ydeg());
    let (bu, bv) = (b.xdeg(), b.ydeg());
    match (au + av, av, au).cmp(&(bu + bv, bv, bu)) {
        Ordering::Equal => revlex_tail(a, b),
        ord => ord,
    }
}

/// Reverse-lex tie-break over the listing `(v_1..v_m, u_1..u_n)`.
fn revlex_tail(a: &BiMonomial, b: &BiMonomial) -> Ordering {
    for i in (0..a.u.len()).rev() {
        match a.u[i].cmp(&b.u[i]) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    for j in (0..a.v.len()).rev() {
        match a.v[j].cmp(&b.v[j]) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    Ordering::Equal
}

/// Reverse-lex tie-break over the mirrored listing `(u_1..u_n, v_1..v_m)`,
/// making `y_m` the cheapest variable.
pub fn revlex_tail_yfirst(a: &BiMonomial, b: &BiMonomial) -> Ordering {
    for j in (0..a.v.len()).rev() {
        match a.v[j].cmp(&b.v[j]) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    for i in (0..a.u.len()).rev() {
        match a.u[i].cmp(&b.u[i]) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    Ordering::Equal
}

impl Ord for BiMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        paper_cmp(self, other)
    }
}

impl PartialOrd for BiMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.u.iter().enumerate() {
            if e > 0 {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        for (j, &e) in self.v.iter().enumerate() {
            if e > 0 {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "y{}", j + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All exponent vectors of given length with given coordinate sum.
pub fn compositions(sum: u32, len: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return if sum == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
    }
    rec(0, sum, &mut cur, &mut out);
    out
}

/// All monomials of exact bidegree `(a, b)` in an `(n, m)` ring.
pub fn monomials_of_bidegree(n: usize, m: usize, a: u32, b: u32) -> Vec<BiMonomial> {
    let us = compositions(a, n);
    let vs = compositions(b, m);
    let mut out = Vec::with_capacity(us.len() * vs.len());
    for u in &us {
        for v in &vs {
            out.push(BiMonomial::new(u.clone(), v.clone()));
        }
    }
    out.sort();
    out.reverse();
    out
}
