//! Bigraded polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use super::field::{scalar_is_negative, Scalar};
use super::monomial::BiMonomial;
use super::order::TermOrder;
use super::RingSignature;
use crate::error::{Error, Result};

/// Bidegree of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bigrading {
    /// The zero polynomial carries no bidegree.
    Zero,
    /// All terms share the bidegree `(a, b)`.
    Of(u32, u32),
    /// Terms of mixed bidegrees.
    Inhomogeneous,
}

/// A polynomial, stored as a term list strictly descending under the fixed
/// monomial order (which is the `Paper` order). The zero polynomial is the
/// empty list; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    pub ring: RingSignature,
    terms: Vec<(Scalar, BiMonomial)>,
}

impl BiPoly {
    pub fn zero(ring: &RingSignature) -> Self {
        BiPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingSignature) -> Self {
        Self::from_monomial(ring, BiMonomial::one(ring.n, ring.m))
    }

    pub fn from_monomial(ring: &RingSignature, z: BiMonomial) -> Self {
        BiPoly {
            ring: ring.clone(),
            terms: vec![(ring.field.one(), z)],
        }
    }

    pub fn variable_x(ring: &RingSignature, i: usize) -> Self {
        Self::from_monomial(ring, ring.xvar(i))
    }

    pub fn variable_y(ring: &RingSignature, j: usize) -> Self {
        Self::from_monomial(ring, ring.yvar(j))
    }

    /// Build from arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(ring: &RingSignature, terms: Vec<(Scalar, BiMonomial)>) -> Self {
        let mut map: BTreeMap<BiMonomial, Scalar> = BTreeMap::new();
        for (c, z) in terms {
            debug_assert_eq!(z.u.len(), ring.n);
            debug_assert_eq!(z.v.len(), ring.m);
            match map.entry(z) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = e.get().add(&c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
            }
        }
        let mut terms: Vec<(Scalar, BiMonomial)> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(z, c)| (c, z))
            .collect();
        terms.reverse();
        BiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Scalar, BiMonomial)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under `order`. For the `Paper` order this is the first
    /// stored term; other orders scan.
    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Scalar, &BiMonomial)> {
        if self.terms.is_empty() {
            return None;
        }
        if matches!(order, TermOrder::Paper) {
            let (c, z) = &self.terms[0];
            return Some((c, z));
        }
        let mut best = 0;
        for k in 1..self.terms.len() {
            if order.cmp(&self.terms[k].1, &self.terms[best].1) == std::cmp::Ordering::Greater {
                best = k;
            }
        }
        let (c, z) = &self.terms[best];
        Some((c, z))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<BiMonomial> {
        self.leading_term(order).map(|(_, z)| z.clone())
    }

    pub fn add(&self, rhs: &BiPoly) -> Result<BiPoly> {
        self.ring.check_same(&rhs.ring)?;
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        Ok(BiPoly::from_terms(&self.ring, terms))
    }

    pub fn sub(&self, rhs: &BiPoly) -> Result<BiPoly> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, z)| (c.neg(), z.clone()))
                .collect(),
        }
    }

    pub fn scalar_mul(&self, c: &Scalar) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero(&self.ring);
        }
        BiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, z)| (a.mul(c), z.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, c: &Scalar, z: &BiMonomial) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero(&self.ring);
        }
        BiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, w)| (a.mul(c), w.mul(z)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, z: &BiMonomial) -> BiPoly {
        BiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, w)| (a.clone(), w.mul(z)))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &BiPoly) -> Result<BiPoly> {
        self.ring.check_same(&rhs.ring)?;
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, za) in &self.terms {
            for (b, zb) in &rhs.terms {
                terms.push((a.mul(b), za.mul(zb)));
            }
        }
        Ok(BiPoly::from_terms(&self.ring, terms))
    }

    /// Scale so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &TermOrder) -> BiPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((c, _)) => self.scalar_mul(&c.inv()),
        }
    }

    /// Bidegree classification of this polynomial.
    pub fn bigrading(&self) -> Bigrading {
        let mut it = self.terms.iter();
        let first = match it.next() {
            None => return Bigrading::Zero,
            Some((_, z)) => z.bidegree(),
        };
        for (_, z) in it {
            if z.bidegree() != first {
                return Bigrading::Inhomogeneous;
            }
        }
        Bigrading::Of(first.0, first.1)
    }

    pub fn is_bihomogeneous(&self) -> bool {
        !matches!(self.bigrading(), Bigrading::Inhomogeneous)
    }

    /// Bidegree as a result, zero and inhomogeneous polynomials being errors.
    pub fn bidegree(&self) -> Result<(u32, u32)> {
        match self.bigrading() {
            Bigrading::Zero => Err(Error::ZeroPolynomial),
            Bigrading::Of(a, b) => Ok((a, b)),
            Bigrading::Inhomogeneous => Err(Error::NotBihomogeneous),
        }
    }

    /// Substitute each variable by a polynomial of the target ring.
    /// `x_subs` has length `n`, `y_subs` length `m`.
    pub fn substitute(
        &self,
        target: &RingSignature,
        x_subs: &[BiPoly],
        y_subs: &[BiPoly],
    ) -> Result<BiPoly> {
        debug_assert_eq!(x_subs.len(), self.ring.n);
        debug_assert_eq!(y_subs.len(), self.ring.m);
        let mut acc = BiPoly::zero(target);
        for (c, z) in &self.terms {
            let mut t = BiPoly::from_terms(
                target,
                vec![(c.clone(), BiMonomial::one(target.n, target.m))],
            );
            for (i, &e) in z.u.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&x_subs[i])?;
                }
            }
            for (j, &e) in z.v.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&y_subs[j])?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// Set the x-variables with index >= `keep_x` and y-variables with index
    /// >= `keep_y` to zero, shrinking the ring signature accordingly.
    pub fn truncate_vars(&self, keep_x: usize, keep_y: usize) -> BiPoly {
        let ring = RingSignature {
            n: keep_x,
            m: keep_y,
            field: self.ring.field,
        };
        let mut terms = Vec::new();
        for (c, z) in &self.terms {
            if z.u[keep_x..].iter().all(|&e| e == 0) && z.v[keep_y..].iter().all(|&e| e == 0) {
                terms.push((
                    c.clone(),
                    BiMonomial::new(z.u[..keep_x].to_vec(), z.v[..keep_y].to_vec()),
                ));
            }
        }
        BiPoly { ring, terms }
    }

    /// Reinterpret in a larger ring with the same field, padding exponents.
    pub fn extend_ring(&self, target: &RingSignature) -> BiPoly {
        debug_assert!(target.n >= self.ring.n && target.m >= self.ring.m);
        let terms = self
            .terms
            .iter()
            .map(|(c, z)| {
                let mut u = z.u.clone();
                u.resize(target.n, 0);
                let mut v = z.v.clone();
                v.resize(target.m, 0);
                (c.clone(), BiMonomial::new(u, v))
            })
            .collect();
        BiPoly {
            ring: target.clone(),
            terms,
        }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, z)) in self.terms.iter().enumerate() {
            let neg = scalar_is_negative(c);
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = if neg { c.neg() } else { c.clone() };
            if z.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{z}")?;
            } else {
                write!(f, "{abs}*{z}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FieldSpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring(n: usize, m: usize) -> RingSignature {
        RingSignature::new(n, m, FieldSpec::Q).unwrap()
    }

    fn rand_poly(r: &RingSignature, rng: &mut ChaCha8Rng, nterms: usize) -> BiPoly {
        let mut terms = Vec::new();
        for _ in 0..nterms {
            let u = (0..r.n).map(|_| rng.gen_range(0..3)).collect();
            let v = (0..r.m).map(|_| rng.gen_range(0..3)).collect();
            let c = r.field.from_i64(rng.gen_range(-5i64..=5));
            terms.push((c, BiMonomial::new(u, v)));
        }
        BiPoly::from_terms(r, terms)
    }

    #[test]
    fn additive_inverse() {
        let r = ring(2, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let p = rand_poly(&r, &mut rng, 5);
            assert!(p.add(&p.neg()).unwrap().is_zero());
        }
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(1, 1);
        let x = BiPoly::variable_x(&r, 0);
        let y = BiPoly::variable_y(&r, 0);
        let lhs = x.add(&y).unwrap().mul(&x.sub(&y).unwrap()).unwrap();
        let rhs = x.mul(&x).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    // Independent oracle: naive double-loop convolution on raw term lists,
    // collected without any of BiPoly's normalization machinery.
    fn naive_mul(p: &BiPoly, q: &BiPoly) -> Vec<(Scalar, BiMonomial)> {
        let mut raw: Vec<(Scalar, BiMonomial)> = Vec::new();
        for (a, za) in p.terms() {
            for (b, zb) in q.terms() {
                let z = za.mul(zb);
                let c = a.mul(b);
                if let Some(slot) = raw.iter_mut().find(|(_, w)| *w == z) {
                    slot.0 = slot.0.add(&c);
                } else {
                    raw.push((c, z));
                }
            }
        }
        raw.retain(|(c, _)| !c.is_zero());
        raw
    }

    #[test]
    fn multiply_matches_naive_convolution() {
        let r = ring(2, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let p = rand_poly(&r, &mut rng, 5);
            let q = rand_poly(&r, &mut rng, 5);
            let fast = p.mul(&q).unwrap();
            let slow = BiPoly::from_terms(&r, naive_mul(&p, &q));
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn bidegrees() {
        let r = ring(3, 3);
        let p = crate::ring::text::parse_poly(&r, "x1^2*y2").unwrap();
        assert_eq!(p.bidegree().unwrap(), (2, 1));
        let q = crate::ring::text::parse_poly(&r, "x1 + y1").unwrap();
        assert_eq!(q.bigrading(), Bigrading::Inhomogeneous);
        let f = crate::ring::text::parse_poly(&r, "y2*x2 - y1*x3").unwrap();
        assert_eq!(f.bidegree().unwrap(), (1, 1));
        assert_eq!(BiPoly::zero(&r).bigrading(), Bigrading::Zero);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let p = BiPoly::one(&ring(1, 1));
        let q = BiPoly::one(&ring(2, 1));
        assert!(p.add(&q).is_err());
    }
}
