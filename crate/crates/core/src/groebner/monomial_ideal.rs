//! Monomial ideals: the unique minimal generating antichain and the small
//! combinatorial toolbox built on it.

use serde::{Deserialize, Serialize};

use super::BigradedIdeal;
use crate::ring::monomial::monomials_of_bidegree;
use crate::ring::{BiMonomial, BiPoly, RingSignature};

/// A monomial ideal, stored by its minimal generators (an antichain under
/// divisibility, sorted descending so equality is structural).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    pub ring: RingSignature,
    gens: Vec<BiMonomial>,
}

impl std::fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

fn minimalize(mut gens: Vec<BiMonomial>) -> Vec<BiMonomial> {
    gens.sort();
    gens.dedup();
    let snapshot = gens.clone();
    gens.retain(|g| !snapshot.iter().any(|h| h != g && h.divides(g)));
    gens.sort();
    gens.reverse();
    gens
}

impl MonomialIdeal {
    pub fn new(ring: &RingSignature, gens: Vec<BiMonomial>) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: minimalize(gens),
        }
    }

    pub fn zero(ring: &RingSignature) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn gens(&self) -> &[BiMonomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, z: &BiMonomial) -> bool {
        self.gens.iter().any(|g| g.divides(z))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `(J : z)` for a single monomial `z`.
    pub fn colon_monomial(&self, z: &BiMonomial) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.div(&g.gcd(z)).unwrap())
            .collect();
        MonomialIdeal::new(&self.ring, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        MonomialIdeal::new(&self.ring, gens)
    }

    /// `(J : I)` for a monomial ideal `I`: intersection of the single colons.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut acc: Option<MonomialIdeal> = None;
        for z in &other.gens {
            let c = self.colon_monomial(z);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c),
            });
        }
        acc.unwrap_or_else(|| MonomialIdeal::zero(&self.ring))
    }

    fn maximal_ideal_block(&self, xs: bool) -> MonomialIdeal {
        let count = if xs { self.ring.n } else { self.ring.m };
        let gens = (0..count)
            .map(|i| {
                if xs {
                    self.ring.xvar(i)
                } else {
                    self.ring.yvar(i)
                }
            })
            .collect();
        MonomialIdeal::new(&self.ring, gens)
    }

    /// Saturation with respect to the irrelevant ideal of the x-block:
    /// `(J : m_x^infinity)`.
    pub fn saturate_x(&self) -> MonomialIdeal {
        let mx = self.maximal_ideal_block(true);
        let mut cur = self.clone();
        loop {
            let next = cur.colon_ideal(&mx);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn saturate_y(&self) -> MonomialIdeal {
        let my = self.maximal_ideal_block(false);
        let mut cur = self.clone();
        loop {
            let next = cur.colon_ideal(&my);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn to_ideal(&self) -> BigradedIdeal {
        let gens = self
            .gens
            .iter()
            .map(|z| BiPoly::from_monomial(&self.ring, z.clone()))
            .collect();
        BigradedIdeal::new_unchecked(&self.ring, gens)
    }

    /// Monomials of bidegree `(a, b)` not in the ideal.
    pub fn standard_monomials(&self, a: u32, b: u32) -> Vec<BiMonomial> {
        monomials_of_bidegree(self.ring.n, self.ring.m, a, b)
            .into_iter()
            .filter(|z| !self.contains(z))
            .collect()
    }

    /// Krull dimension of `S/J`: the largest cardinality of a variable
    /// subset containing no generator's support.
    pub fn dim_quotient(&self) -> usize {
        if self.is_unit() {
            // the empty quotient; conventionally dimension 0 here is not
            // meaningful, return 0
            return 0;
        }
        let total = self.ring.n + self.ring.m;
        let supports: Vec<Vec<usize>> = self
            .gens
            .iter()
            .map(|g| {
                let mut s: Vec<usize> = g.supp_x();
                for j in 0..self.ring.m {
                    if g.v[j] > 0 {
                        s.push(self.ring.n + j);
                    }
                }
                s
            })
            .collect();
        let mut best = 0;
        for mask in 0..(1u32 << total) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let independent = supports
                .iter()
                .all(|s| !s.iter().all(|&v| mask & (1 << v) != 0));
            if independent {
                best = size;
            }
        }
        best
    }

    /// Maxima of the x- and y-degrees over the minimal generators.
    pub fn m_degrees(&self) -> (u32, u32) {
        let mx = self.gens.iter().map(|g| g.xdeg()).max().unwrap_or(0);
        let my = self.gens.iter().map(|g| g.ydeg()).max().unwrap_or(0);
        (mx, my)
    }
}
