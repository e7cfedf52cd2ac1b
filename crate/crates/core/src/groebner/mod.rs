//! Buchberger engine and derived ideal operations: normal forms, colon,
//! elimination, intersection, first syzygies, initial ideals and bigraded
//! component bases.

pub mod monomial_ideal;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::ring::monomial::monomials_of_bidegree;
use crate::ring::{BiMonomial, BiPoly, ElimSpec, RingSignature, Scalar, TermOrder};
pub use monomial_ideal::MonomialIdeal;

/// A finitely generated ideal of the bigraded ring, with a cached reduced
/// Groebner basis per term order.
///
/// Generators are immutable after construction (build a new ideal to change
/// them), which keeps every cache entry valid for the lifetime of the value.
#[derive(Clone)]
pub struct BigradedIdeal {
    pub ring: RingSignature,
    gens: Arc<Vec<BiPoly>>,
    cache: Arc<Mutex<HashMap<TermOrder, Arc<Vec<BiPoly>>>>>,
}

impl std::fmt::Debug for BigradedIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ideal(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl BigradedIdeal {
    /// A bigraded ideal: every generator must be bihomogeneous.
    pub fn new(ring: &RingSignature, gens: Vec<BiPoly>) -> Result<Self> {
        for g in &gens {
            ring.check_same(&g.ring)?;
            if !g.is_bihomogeneous() {
                return Err(Error::NotBihomogeneous);
            }
        }
        Ok(Self::new_unchecked(ring, gens))
    }

    /// Skips the bihomogeneity check; used where the math guarantees it.
    pub fn new_unchecked(ring: &RingSignature, gens: Vec<BiPoly>) -> Self {
        let gens: Vec<BiPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        BigradedIdeal {
            ring: ring.clone(),
            gens: Arc::new(gens),
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn zero(ring: &RingSignature) -> Self {
        Self::new_unchecked(ring, Vec::new())
    }

    pub fn gens(&self) -> &[BiPoly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced Groebner basis under `order`, computed once per order.
    pub fn groebner_basis(&self, order: &TermOrder) -> Arc<Vec<BiPoly>> {
        {
            let cache = self.cache.lock().unwrap();
            if let Some(gb) = cache.get(order) {
                return Arc::clone(gb);
            }
        }
        let gb = Arc::new(reduced_groebner_basis(&self.gens, order));
        let mut cache = self.cache.lock().unwrap();
        cache.entry(order.clone()).or_insert_with(|| Arc::clone(&gb));
        Arc::clone(cache.get(order).unwrap())
    }

    pub fn normal_form(&self, p: &BiPoly, order: &TermOrder) -> BiPoly {
        let gb = self.groebner_basis(order);
        normal_form(p, &gb, order)
    }

    pub fn contains(&self, p: &BiPoly) -> bool {
        self.normal_form(p, &TermOrder::Paper).is_zero()
    }

    pub fn contains_ideal(&self, other: &BigradedIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, other: &BigradedIdeal) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    /// The ideal quotient `J : f` for bihomogeneous nonzero `f`, computed
    /// through a first-syzygy computation so every output stays bigraded.
    pub fn colon(&self, f: &BiPoly) -> Result<BigradedIdeal> {
        self.ring.check_same(&f.ring)?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !f.is_bihomogeneous() {
            return Err(Error::NotBihomogeneous);
        }
        if self.is_zero_ideal() {
            return Ok(BigradedIdeal::zero(&self.ring));
        }
        let mut list = vec![f.clone()];
        list.extend(self.gens.iter().cloned());
        let syz = syzygies(&self.ring, &list)?;
        let mut out: Vec<BiPoly> = self.gens.iter().cloned().collect();
        for s in syz {
            if !s[0].is_zero() {
                out.push(s[0].clone());
            }
        }
        let gb = reduced_groebner_basis(&out, &TermOrder::Paper);
        Ok(BigradedIdeal::new_unchecked(&self.ring, gb))
    }

    /// Intersection of two bigraded ideals, via syzygies of the combined
    /// generator list.
    pub fn intersect(&self, other: &BigradedIdeal) -> Result<BigradedIdeal> {
        self.ring.check_same(&other.ring)?;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(BigradedIdeal::zero(&self.ring));
        }
        let mut list = self.gens.to_vec();
        list.extend(other.gens.iter().cloned());
        let r = self.gens.len();
        let syz = syzygies(&self.ring, &list)?;
        let mut out = Vec::new();
        for s in syz {
            let mut elem = BiPoly::zero(&self.ring);
            for i in 0..r {
                elem = elem.add(&s[i].mul(&self.gens[i])?)?;
            }
            if !elem.is_zero() {
                out.push(elem);
            }
        }
        let gb = reduced_groebner_basis(&out, &TermOrder::Paper);
        Ok(BigradedIdeal::new_unchecked(&self.ring, gb))
    }

    /// The monomial ideal of leading terms under `order`.
    pub fn initial_ideal(&self, order: &TermOrder) -> MonomialIdeal {
        let gb = self.groebner_basis(order);
        MonomialIdeal::new(
            &self.ring,
            gb.iter()
                .filter_map(|g| g.leading_monomial(order))
                .collect(),
        )
    }

    /// Standard monomials of bidegree `(a, b)`: a K-basis of `(S/J)_{(a,b)}`.
    pub fn quotient_basis(&self, a: u32, b: u32) -> Vec<BiMonomial> {
        let leads = self.initial_ideal(&TermOrder::Paper);
        monomials_of_bidegree(self.ring.n, self.ring.m, a, b)
            .into_iter()
            .filter(|z| !leads.contains(z))
            .collect()
    }

    pub fn dim_component(&self, a: u32, b: u32) -> usize {
        self.quotient_basis(a, b).len()
    }

    /// Krull dimension of `S/J`, read off the initial ideal.
    pub fn dim_quotient(&self) -> usize {
        self.initial_ideal(&TermOrder::Paper).dim_quotient()
    }

    pub fn codim(&self) -> usize {
        self.ring.n + self.ring.m - self.dim_quotient()
    }
}

// ---------------------------------------------------------------------------
// division and the Buchberger loop
// ---------------------------------------------------------------------------

/// Full normal form of `p` against `basis` under `order`.
pub fn normal_form(p: &BiPoly, basis: &[BiPoly], order: &TermOrder) -> BiPoly {
    reduce_full(p, basis, order, None)
}

/// Normal form plus division quotients: `p = sum q_k basis_k + nf`.
pub fn normal_form_with_quotients(
    p: &BiPoly,
    basis: &[BiPoly],
    order: &TermOrder,
) -> (BiPoly, Vec<BiPoly>) {
    let mut quotients = vec![BiPoly::zero(&p.ring); basis.len()];
    let nf = reduce_full(p, basis, order, Some(&mut quotients));
    (nf, quotients)
}

fn reduce_full(
    p: &BiPoly,
    basis: &[BiPoly],
    order: &TermOrder,
    mut quotients: Option<&mut Vec<BiPoly>>,
) -> BiPoly {
    let ring = &p.ring;
    let mut cur = p.clone();
    let mut remainder: Vec<(Scalar, BiMonomial)> = Vec::new();
    'outer: while !cur.is_zero() {
        let (c, z) = {
            let (c, z) = cur.leading_term(order).unwrap();
            (c.clone(), z.clone())
        };
        for (k, g) in basis.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let (gc, gz) = g.leading_term(order).unwrap();
            if let Some(q) = z.div(gz) {
                let coeff = c.div(gc);
                cur = cur.sub(&g.mul_term(&coeff, &q)).unwrap();
                if let Some(quot) = quotients.as_deref_mut() {
                    quot[k] = quot[k]
                        .add(&BiPoly::from_terms(ring, vec![(coeff, q)]))
                        .unwrap();
                }
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        remainder.push((c.clone(), z.clone()));
        cur = cur
            .sub(&BiPoly::from_terms(ring, vec![(c, z)]))
            .unwrap();
    }
    BiPoly::from_terms(ring, remainder)
}

struct Tracked {
    poly: BiPoly,
    row: Vec<BiPoly>,
}

fn spair_data<'a>(
    gi: &'a BiPoly,
    gj: &'a BiPoly,
    order: &TermOrder,
) -> (BiMonomial, BiMonomial, BiMonomial, Scalar, Scalar) {
    let (ci, zi) = gi.leading_term(order).unwrap();
    let (cj, zj) = gj.leading_term(order).unwrap();
    let lcm = zi.lcm(zj);
    let mi = lcm.div(zi).unwrap();
    let mj = lcm.div(zj).unwrap();
    (lcm, mi, mj, ci.clone(), cj.clone())
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and the product criterion. Maintains representation rows when
/// `track` is set, so that each basis element is an explicit combination of
/// the input generators.
fn buchberger(gens: &[BiPoly], order: &TermOrder, track: bool) -> Vec<Tracked> {
    let nonzero: Vec<(usize, &BiPoly)> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    let ring = nonzero[0].1.ring.clone();
    let mut basis: Vec<Tracked> = Vec::new();
    for (i, g) in &nonzero {
        let mut row = vec![BiPoly::zero(&ring); gens.len()];
        if track {
            row[*i] = BiPoly::one(&ring);
        }
        basis.push(Tracked {
            poly: (*g).clone(),
            row,
        });
    }
    let mut pairs: Vec<(usize, usize, BiMonomial)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let (lcm, ..) = spair_data(&basis[i].poly, &basis[j].poly, order);
            pairs.push((i, j, lcm));
        }
    }
    while !pairs.is_empty() {
        // normal strategy: smallest lcm under the active order
        let mut best = 0;
        for k in 1..pairs.len() {
            if order.cmp(&pairs[k].2, &pairs[best].2) == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let (i, j, lcm) = pairs.swap_remove(best);
        let (zi, zj) = (
            basis[i].poly.leading_monomial(order).unwrap(),
            basis[j].poly.leading_monomial(order).unwrap(),
        );
        // product criterion: coprime leading monomials reduce to zero
        if zi.mul(&zj) == lcm {
            continue;
        }
        let (_, mi, mj, ci, cj) = spair_data(&basis[i].poly, &basis[j].poly, order);
        let spoly = basis[i]
            .poly
            .mul_term(&ci.inv(), &mi)
            .sub(&basis[j].poly.mul_term(&cj.inv(), &mj))
            .unwrap();
        let polys: Vec<BiPoly> = basis.iter().map(|t| t.poly.clone()).collect();
        let (nf, q) = normal_form_with_quotients(&spoly, &polys, order);
        if nf.is_zero() {
            continue;
        }
        let mut row = vec![BiPoly::zero(&ring); gens.len()];
        if track {
            for (slot, r) in row.iter_mut().zip(basis[i].row.iter()) {
                *slot = slot.add(&r.mul_term(&ci.inv(), &mi)).unwrap();
            }
            for (slot, r) in row.iter_mut().zip(basis[j].row.iter()) {
                *slot = slot.sub(&r.mul_term(&cj.inv(), &mj)).unwrap();
            }
            for (k, qk) in q.iter().enumerate() {
                if !qk.is_zero() {
                    for (slot, r) in row.iter_mut().zip(basis[k].row.iter()) {
                        *slot = slot.sub(&qk.mul(r).unwrap()).unwrap();
                    }
                }
            }
        }
        let new_index = basis.len();
        for k in 0..new_index {
            let (lcm, ..) = spair_data(&basis[k].poly, &nf, order);
            pairs.push((k, new_index, lcm));
        }
        basis.push(Tracked { poly: nf, row });
    }
    basis
}

fn interreduce(mut basis: Vec<Tracked>, order: &TermOrder, track: bool) -> Vec<Tracked> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let zi = basis[i].poly.leading_monomial(order).unwrap();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let zj = basis[j].poly.leading_monomial(order).unwrap();
            if zj.divides(&zi) && (zj != zi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Tracked> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(t, k)| if k { Some(t) } else { None })
        .collect();
    // tail-reduce every element against the others until stable
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<BiPoly> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, t)| t.poly.clone())
                .collect();
            let (nf, q) = normal_form_with_quotients(&minimal[i].poly, &others, order);
            debug_assert!(!nf.is_zero());
            if nf != minimal[i].poly {
                changed = true;
                if track {
                    let mut row = minimal[i].row.clone();
                    let mut others_rows: Vec<&Vec<BiPoly>> = Vec::new();
                    for (k, t) in minimal.iter().enumerate() {
                        if k != i {
                            others_rows.push(&t.row);
                        }
                    }
                    for (qk, orow) in q.iter().zip(others_rows) {
                        if !qk.is_zero() {
                            for (slot, r) in row.iter_mut().zip(orow.iter()) {
                                *slot = slot.sub(&qk.mul(r).unwrap()).unwrap();
                            }
                        }
                    }
                    minimal[i].row = row;
                }
                minimal[i].poly = nf;
            }
        }
        if !changed {
            break;
        }
    }
    // monic normalization
    for t in &mut minimal {
        let (c, _) = t.poly.leading_term(order).unwrap();
        let inv = c.inv();
        if !inv.is_one() {
            t.poly = t.poly.scalar_mul(&inv);
            if track {
                for r in &mut t.row {
                    *r = r.scalar_mul(&inv);
                }
            }
        }
    }
    // deterministic ordering: ascending leading monomials
    minimal.sort_by(|a, b| {
        order.cmp(
            &a.poly.leading_monomial(order).unwrap(),
            &b.poly.leading_monomial(order).unwrap(),
        )
    });
    minimal
}

/// The reduced Groebner basis of the ideal generated by `gens`.
pub fn reduced_groebner_basis(gens: &[BiPoly], order: &TermOrder) -> Vec<BiPoly> {
    let basis = buchberger(gens, order, false);
    if basis.is_empty() {
        return Vec::new();
    }
    interreduce(basis, order, false)
        .into_iter()
        .map(|t| t.poly)
        .collect()
}

/// Reduced Groebner basis plus the transformation matrix `T` with
/// `gb[k] = sum_i T[k][i] * gens[i]`.
pub fn reduced_groebner_basis_with_transform(
    gens: &[BiPoly],
    order: &TermOrder,
) -> (Vec<BiPoly>, Vec<Vec<BiPoly>>) {
    let basis = buchberger(gens, order, true);
    if basis.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let reduced = interreduce(basis, order, true);
    let mut gb = Vec::with_capacity(reduced.len());
    let mut t = Vec::with_capacity(reduced.len());
    for item in reduced {
        #[cfg(debug_assertions)]
        {
            let mut acc = BiPoly::zero(&item.poly.ring);
            for (r, f) in item.row.iter().zip(gens.iter()) {
                acc = acc.add(&r.mul(f).unwrap()).unwrap();
            }
            debug_assert_eq!(acc, item.poly, "transformation row out of sync");
        }
        gb.push(item.poly);
        t.push(item.row);
    }
    (gb, t)
}

/// Buchberger's criterion as a self-check: every S-pair of `basis` reduces
/// to zero against it.
pub fn spairs_reduce_to_zero(basis: &[BiPoly], order: &TermOrder) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let (_, mi, mj, ci, cj) = spair_data(&basis[i], &basis[j], order);
            let s = basis[i]
                .mul_term(&ci.inv(), &mi)
                .sub(&basis[j].mul_term(&cj.inv(), &mj))
                .unwrap();
            if !normal_form(&s, basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Generators of the first syzygy module of `gens`: vectors `(q_1..q_r)`
/// with `sum q_i gens_i = 0` generating all such relations.
pub fn syzygies(ring: &RingSignature, gens: &[BiPoly]) -> Result<Vec<Vec<BiPoly>>> {
    for g in gens {
        ring.check_same(&g.ring)?;
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    let r = gens.len();
    if r <= 1 {
        return Ok(Vec::new());
    }
    let order = TermOrder::Paper;
    let (gb, t) = reduced_groebner_basis_with_transform(gens, &order);
    let s = gb.len();
    let mut out: Vec<Vec<BiPoly>> = Vec::new();
    let push = |vec: Vec<BiPoly>, out: &mut Vec<Vec<BiPoly>>| {
        if vec.iter().any(|p| !p.is_zero()) {
            out.push(vec);
        }
    };
    // Schreyer syzygies of the basis, mapped back through T.
    for i in 0..s {
        for j in (i + 1)..s {
            let (_, mi, mj, ci, cj) = spair_data(&gb[i], &gb[j], &order);
            let spoly = gb[i]
                .mul_term(&ci.inv(), &mi)
                .sub(&gb[j].mul_term(&cj.inv(), &mj))
                .unwrap();
            let (nf, q) = normal_form_with_quotients(&spoly, &gb, &order);
            debug_assert!(nf.is_zero(), "S-pair must reduce to zero over a GB");
            // sigma = mi/ci e_i - mj/cj e_j - q
            let mut sigma = vec![BiPoly::zero(ring); s];
            sigma[i] = sigma[i]
                .add(&BiPoly::from_terms(ring, vec![(ci.inv(), mi)]))
                .unwrap();
            sigma[j] = sigma[j]
                .sub(&BiPoly::from_terms(ring, vec![(cj.inv(), mj)]))
                .unwrap();
            for (k, qk) in q.iter().enumerate() {
                sigma[k] = sigma[k].sub(qk).unwrap();
            }
            // map through T
            let mut vec = vec![BiPoly::zero(ring); r];
            for k in 0..s {
                if sigma[k].is_zero() {
                    continue;
                }
                for (slot, tk) in vec.iter_mut().zip(t[k].iter()) {
                    *slot = slot.add(&sigma[k].mul(tk)?)?;
                }
            }
            push(vec, &mut out);
        }
    }
    // rows of I - U T, where U expresses each generator over the basis
    for (i, f) in gens.iter().enumerate() {
        let (nf, u) = normal_form_with_quotients(f, &gb, &order);
        debug_assert!(nf.is_zero());
        let mut vec = vec![BiPoly::zero(ring); r];
        vec[i] = BiPoly::one(ring);
        for k in 0..s {
            if u[k].is_zero() {
                continue;
            }
            for (slot, tk) in vec.iter_mut().zip(t[k].iter()) {
                *slot = slot.sub(&u[k].mul(tk)?)?;
            }
        }
        push(vec, &mut out);
    }
    #[cfg(debug_assertions)]
    for syz in &out {
        let mut acc = BiPoly::zero(ring);
        for (a, f) in syz.iter().zip(gens.iter()) {
            acc = acc.add(&a.mul(f).unwrap()).unwrap();
        }
        debug_assert!(acc.is_zero(), "syzygy fails to annihilate");
    }
    Ok(out)
}

/// `J ∩ K[kept variables]`, returned in the smaller ring. `keep_x[i]` and
/// `keep_y[j]` select the surviving variables, in order.
pub fn eliminate(
    ring: &RingSignature,
    gens: &[BiPoly],
    keep_x: &[bool],
    keep_y: &[bool],
) -> Result<(RingSignature, Vec<BiPoly>)> {
    debug_assert_eq!(keep_x.len(), ring.n);
    debug_assert_eq!(keep_y.len(), ring.m);
    let elim_x: Vec<usize> = (0..ring.n).filter(|&i| !keep_x[i]).collect();
    let elim_y: Vec<usize> = (0..ring.m).filter(|&j| !keep_y[j]).collect();
    let sub = RingSignature::new(
        keep_x.iter().filter(|&&k| k).count(),
        keep_y.iter().filter(|&&k| k).count(),
        ring.field,
    )?;
    if elim_x.is_empty() && elim_y.is_empty() {
        return Ok((sub, gens.to_vec()));
    }
    let order = TermOrder::Elim(ElimSpec {
        elim_x: elim_x.clone(),
        elim_y: elim_y.clone(),
    });
    let gb = reduced_groebner_basis(gens, &order);
    let mut out = Vec::new();
    for g in gb {
        let free = g.terms().iter().all(|(_, z)| {
            elim_x.iter().all(|&i| z.u[i] == 0) && elim_y.iter().all(|&j| z.v[j] == 0)
        });
        if free {
            out.push(project_poly(&g, &sub, keep_x, keep_y));
        }
    }
    Ok((sub, out))
}

/// Reindex a polynomial supported on the kept variables into the subring.
fn project_poly(
    p: &BiPoly,
    sub: &RingSignature,
    keep_x: &[bool],
    keep_y: &[bool],
) -> BiPoly {
    let terms = p
        .terms()
        .iter()
        .map(|(c, z)| {
            let u: Vec<u32> = z
                .u
                .iter()
                .zip(keep_x)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e)
                .collect();
            let v: Vec<u32> = z
                .v
                .iter()
                .zip(keep_y)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e)
                .collect();
            (c.clone(), BiMonomial::new(u, v))
        })
        .collect();
    BiPoly::from_terms(sub, terms)
}

#[cfg(test)]
pub(crate) mod tests;
