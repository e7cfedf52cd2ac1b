//! Degreewise Koszul homology of `R = S/J`.
//!
//! The strand of the Koszul complex `K.(kx, ky; R)` at a fixed bidegree is a
//! finite complex of K-vector spaces indexed by wedge basis elements paired
//! with standard monomials; exact ranks of its differentials give the
//! bigraded Betti numbers `Tor_i(K, R)_{(a,b)}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::groebner::{normal_form, BigradedIdeal, MonomialIdeal};
use crate::linalg::{SparseMat, SparseVec};
use crate::ring::{BiMonomial, BiPoly, TermOrder};

use super::taylor::{taylor_betti, TAYLOR_GENERATOR_LIMIT};
use super::{BettiTable, BidegreeBox};

/// Standard-monomial basis of one bigraded component of `S/J`.
pub struct ComponentBasis {
    pub monomials: Vec<BiMonomial>,
    pub index: HashMap<BiMonomial, usize>,
}

/// `S/J` with cached component bases and cached multiplication-by-variable
/// matrices. All caches are behind locks, so one value can serve concurrent
/// strand computations.
pub struct QuotientRing {
    pub ideal: BigradedIdeal,
    gb: Arc<Vec<BiPoly>>,
    leads: MonomialIdeal,
    is_monomial: bool,
    basis_cache: Mutex<HashMap<(u32, u32), Arc<ComponentBasis>>>,
    action_cache: Mutex<HashMap<(bool, usize, u32, u32), Arc<Vec<SparseVec>>>>,
}

impl QuotientRing {
    pub fn new(ideal: BigradedIdeal) -> Self {
        let gb = ideal.groebner_basis(&TermOrder::Paper);
        let leads = ideal.initial_ideal(&TermOrder::Paper);
        let is_monomial = ideal.gens().iter().all(|g| g.num_terms() == 1);
        QuotientRing {
            ideal,
            gb,
            leads,
            is_monomial,
            basis_cache: Mutex::new(HashMap::new()),
            action_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn basis(&self, a: u32, b: u32) -> Arc<ComponentBasis> {
        if let Some(hit) = self.basis_cache.lock().unwrap().get(&(a, b)) {
            return Arc::clone(hit);
        }
        let monomials = self.leads.standard_monomials(a, b);
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, z)| (z, k))
            .collect();
        let data = Arc::new(ComponentBasis { monomials, index });
        self.basis_cache
            .lock()
            .unwrap()
            .entry((a, b))
            .or_insert_with(|| Arc::clone(&data));
        data
    }

    pub fn dim(&self, a: u32, b: u32) -> usize {
        self.basis(a, b).monomials.len()
    }

    /// Coordinates of the residue class of `p` in the component basis of its
    /// bidegree.
    pub fn coords(&self, p: &BiPoly, a: u32, b: u32) -> SparseVec {
        let nf = normal_form(p, &self.gb, &TermOrder::Paper);
        let basis = self.basis(a, b);
        let mut out: SparseVec = nf
            .terms()
            .iter()
            .map(|(c, z)| (basis.index[z], c.clone()))
            .collect();
        out.sort_by_key(|(r, _)| *r);
        out
    }

    /// Multiplication by `x_i` (x block) or `y_i` (y block) as a matrix from
    /// the `(a, b)` component to the shifted one, column per basis element.
    pub fn var_action(&self, x_block: bool, idx: usize, a: u32, b: u32) -> Arc<Vec<SparseVec>> {
        let key = (x_block, idx, a, b);
        if let Some(hit) = self.action_cache.lock().unwrap().get(&key) {
            return Arc::clone(hit);
        }
        let source = self.basis(a, b);
        let (ta, tb) = if x_block { (a + 1, b) } else { (a, b + 1) };
        let target = self.basis(ta, tb);
        let var = if x_block {
            self.ideal.ring.xvar(idx)
        } else {
            self.ideal.ring.yvar(idx)
        };
        let mut cols = Vec::with_capacity(source.monomials.len());
        for z in &source.monomials {
            let product = z.mul(&var);
            if self.is_monomial {
                // over a monomial quotient the product is a standard monomial or zero
                let col = match target.index.get(&product) {
                    Some(&row) => vec![(row, self.ideal.ring.field.one())],
                    None => Vec::new(),
                };
                cols.push(col);
            } else {
                let p = BiPoly::from_monomial(&self.ideal.ring, product);
                cols.push(self.coords(&p, ta, tb));
            }
        }
        let data = Arc::new(cols);
        self.action_cache
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| Arc::clone(&data));
        data
    }
}

/// One bidegree strand of `K.(kx, ky; S/J)` with its differentials.
pub struct KoszulStrand {
    pub bidegree: (u32, u32),
    pub kx: usize,
    pub ky: usize,
    /// `dims[i] = dim C_i` for `i = 0..=kx+ky`.
    pub dims: Vec<usize>,
    /// `diffs[i]` is the matrix of the boundary `C_{i+1} -> C_i`.
    pub diffs: Vec<SparseMat>,
}

fn subsets_of_weight(bits: usize) -> Vec<Vec<u32>> {
    let mut by_weight: Vec<Vec<u32>> = vec![Vec::new(); bits + 1];
    for mask in 0u32..(1u32 << bits) {
        by_weight[mask.count_ones() as usize].push(mask);
    }
    by_weight
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&k| mask & (1 << k) != 0).collect()
}

/// Assemble the strand of `K.(kx, ky; S/J)` at bidegree `(a, b)`.
pub fn koszul_strand(quot: &QuotientRing, kx: usize, ky: usize, a: u32, b: u32) -> KoszulStrand {
    let tmasks = subsets_of_weight(kx);
    let umasks = subsets_of_weight(ky);
    let len = kx + ky;
    // wedge blocks per homological degree, each tagged with its component
    // bidegree and basis offset
    struct Block {
        tmask: u32,
        umask: u32,
        bideg: (u32, u32),
        offset: usize,
        dim: usize,
    }
    let mut layers: Vec<Vec<Block>> = Vec::with_capacity(len + 1);
    let mut dims = Vec::with_capacity(len + 1);
    for i in 0..=len {
        let mut blocks = Vec::new();
        let mut offset = 0usize;
        for wt in 0..=i.min(kx) {
            let wu = i - wt;
            if wu > ky {
                continue;
            }
            for &tm in &tmasks[wt] {
                for &um in &umasks[wu] {
                    if (wt as u32) > a || (wu as u32) > b {
                        continue;
                    }
                    let bideg = (a - wt as u32, b - wu as u32);
                    let dim = quot.dim(bideg.0, bideg.1);
                    blocks.push(Block {
                        tmask: tm,
                        umask: um,
                        bideg,
                        offset,
                        dim,
                    });
                    offset += dim;
                }
            }
        }
        dims.push(blocks.iter().map(|bl| bl.dim).sum());
        layers.push(blocks);
    }
    let mut diffs = Vec::with_capacity(len);
    for i in 0..len {
        // boundary C_{i+1} -> C_i
        let rows = dims[i];
        let mut mat = SparseMat::new(rows, dims[i + 1]);
        let target_pos: HashMap<(u32, u32), usize> = layers[i]
            .iter()
            .enumerate()
            .map(|(k, bl)| ((bl.tmask, bl.umask), k))
            .collect();
        for src in &layers[i + 1] {
            if src.dim == 0 {
                continue;
            }
            let ts = members(src.tmask);
            let us = members(src.umask);
            for (pos, &t) in ts.iter().enumerate() {
                let tgt_mask = src.tmask & !(1 << t);
                let tgt = &layers[i][target_pos[&(tgt_mask, src.umask)]];
                let action = quot.var_action(true, t, src.bideg.0, src.bideg.1);
                let negate = pos % 2 == 1;
                scatter(&mut mat, src.offset, tgt.offset, &action, negate);
            }
            for (posu, &u) in us.iter().enumerate() {
                let tgt_mask = src.umask & !(1 << u);
                let tgt = &layers[i][target_pos[&(src.tmask, tgt_mask)]];
                let action = quot.var_action(false, u, src.bideg.0, src.bideg.1);
                let negate = (ts.len() + posu) % 2 == 1;
                scatter(&mut mat, src.offset, tgt.offset, &action, negate);
            }
        }
        mat.normalize();
        diffs.push(mat);
    }
    KoszulStrand {
        bidegree: (a, b),
        kx,
        ky,
        dims,
        diffs,
    }
}

fn scatter(
    mat: &mut SparseMat,
    src_offset: usize,
    tgt_offset: usize,
    action: &[SparseVec],
    negate: bool,
) {
    for (col, entries) in action.iter().enumerate() {
        for (row, value) in entries {
            let v = if negate { value.neg() } else { value.clone() };
            mat.push_entry(src_offset + col, tgt_offset + row, v);
        }
    }
}

impl KoszulStrand {
    /// Rank of the boundary `C_i -> C_{i-1}`; zero outside `1..=kx+ky`.
    pub fn boundary_rank(&self, i: usize) -> usize {
        if i == 0 || i > self.diffs.len() {
            0
        } else {
            self.diffs[i - 1].rank()
        }
    }

    /// `dim H_i` for `i = 0..=kx+ky`.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.diffs.len())
            .map(|i| self.boundary_rank(i))
            .collect();
        (0..self.dims.len())
            .map(|i| {
                let outgoing = ranks.get(i).copied().unwrap_or(0);
                let incoming = ranks.get(i + 1).copied().unwrap_or(0);
                self.dims[i] - outgoing - incoming
            })
            .collect()
    }

    /// Verify the complex property on the assembled matrices.
    pub fn dd_is_zero(&self) -> bool {
        for i in 0..self.diffs.len().saturating_sub(1) {
            let outer = &self.diffs[i];
            let inner = &self.diffs[i + 1];
            for col in 0..inner.cols.len() {
                let mid = inner.cols[col].clone();
                if !outer.apply(&mid).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Bigraded Betti numbers `beta_{i,(a,b)}(S/J)` over the rationals (or the
/// chosen field), by exact rank computations on Koszul strands.
///
/// When the initial ideal is small enough for a Taylor computation, its
/// minimal Betti table bounds the support of the wanted one entrywise (the
/// standard flat-deformation semicontinuity), which both restricts the
/// strands actually computed and certifies completeness. Otherwise the
/// default window is the componentwise maximum of the basis leading
/// bidegrees plus `(n, m)`, and the table is marked complete only when the
/// outer frame of the window carries no entries.
pub fn koszul_betti(ideal: &BigradedIdeal, explicit_box: Option<BidegreeBox>) -> Result<BettiTable> {
    let ring = ideal.ring.clone();
    let quot = QuotientRing::new(ideal.clone());
    if ideal.is_zero_ideal() {
        let bbox = explicit_box.unwrap_or(BidegreeBox { a_max: 0, b_max: 0 });
        let mut t = BettiTable::new(bbox, true);
        t.insert(0, 0, 0, 1);
        return Ok(t);
    }
    let leads = ideal.initial_ideal(&TermOrder::Paper);
    let cert = if leads.gens().len() <= TAYLOR_GENERATOR_LIMIT {
        Some(taylor_betti(&leads)?)
    } else {
        None
    };
    let gb = ideal.groebner_basis(&TermOrder::Paper);
    let gb_box = {
        let mut a_max = 0;
        let mut b_max = 0;
        for g in gb.iter() {
            let z = g.leading_monomial(&TermOrder::Paper).unwrap();
            a_max = a_max.max(z.xdeg());
            b_max = b_max.max(z.ydeg());
        }
        BidegreeBox {
            a_max: a_max + ring.n as u32,
            b_max: b_max + ring.m as u32,
        }
    };
    let bbox = explicit_box.unwrap_or(match &cert {
        Some(c) => c.support_box(),
        None => gb_box,
    });
    let positions: Vec<(u32, u32)> = match &cert {
        Some(c) => {
            let mut ps: Vec<(u32, u32)> = c.iter().map(|(_, a, b, _)| (a, b)).collect();
            ps.sort();
            ps.dedup();
            ps.retain(|&(a, b)| bbox.contains(a, b));
            ps
        }
        None => {
            let mut ps = Vec::new();
            for a in 0..=bbox.a_max {
                for b in 0..=bbox.b_max {
                    ps.push((a, b));
                }
            }
            ps
        }
    };
    let complete = match &cert {
        Some(c) => {
            let support = c.support_box();
            bbox.a_max >= support.a_max && bbox.b_max >= support.b_max
        }
        None => false, // upgraded below by the frame check
    };
    let mut table = BettiTable::new(bbox, complete);
    for (a, b) in positions {
        let strand = koszul_strand(&quot, ring.n, ring.m, a, b);
        for (i, h) in strand.homology_dims().into_iter().enumerate() {
            if h > 0 {
                table.insert(i, a, b, h as u64);
            }
        }
    }
    if cert.is_none() {
        let frame_clear = table
            .iter()
            .all(|(_, a, b, _)| a < bbox.a_max && b < bbox.b_max);
        table.complete = frame_clear && explicit_box.is_none();
    }
    Ok(table)
}
