//! Taylor complex of a monomial ideal and its minimalization.
//!
//! The Taylor complex on the minimal generators (one free summand per
//! subset, twisted by the lcm bidegree) resolves `S/J`; cancelling unit
//! entries of the differentials over K leaves the minimal bigraded Betti
//! table. The result is always complete.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groebner::MonomialIdeal;
use crate::ring::{BiMonomial, BiPoly, Bigrading};

use super::{BettiTable, BidegreeBox};

pub const TAYLOR_GENERATOR_LIMIT: usize = 20;

struct Layer {
    bidegrees: Vec<(u32, u32)>,
    alive: Vec<bool>,
}

/// Minimal bigraded Betti numbers of `S/J` for a nonzero monomial ideal.
pub fn taylor_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    taylor_betti_with_order(ideal, false)
}

/// Same computation with the unit-cancellation scan reversed; exposed so
/// tests can confirm the output does not depend on cancellation order.
pub fn taylor_betti_with_order(ideal: &MonomialIdeal, reverse_scan: bool) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens = ideal.gens();
    let r = gens.len();
    if r > TAYLOR_GENERATOR_LIMIT {
        return Err(Error::TooManyGenerators(r, TAYLOR_GENERATOR_LIMIT));
    }
    let ring = &ideal.ring;

    // subsets of [r] grouped by cardinality; layer i = homological degree i
    let mut subsets_by_size: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
    for mask in 0u32..(1u32 << r) {
        subsets_by_size[mask.count_ones() as usize].push(mask);
    }
    let lcm_of = |mask: u32| -> BiMonomial {
        let mut z = BiMonomial::one(ring.n, ring.m);
        for (k, g) in gens.iter().enumerate() {
            if mask & (1 << k) != 0 {
                z = z.lcm(g);
            }
        }
        z
    };

    let mut layers: Vec<Layer> = Vec::with_capacity(r + 1);
    let mut position: Vec<HashMap<u32, usize>> = Vec::with_capacity(r + 1);
    for masks in &subsets_by_size {
        let mut bidegrees = Vec::with_capacity(masks.len());
        let mut pos = HashMap::new();
        for (idx, &mask) in masks.iter().enumerate() {
            bidegrees.push(lcm_of(mask).bidegree());
            pos.insert(mask, idx);
        }
        layers.push(Layer {
            alive: vec![true; bidegrees.len()],
            bidegrees,
        });
        position.push(pos);
    }

    // diffs[i]: maps layer i+1 -> layer i, entries indexed (row, col)
    let mut diffs: Vec<HashMap<(usize, usize), BiPoly>> = Vec::with_capacity(r);
    for i in 1..=r {
        let mut entries = HashMap::new();
        for (col, &mask) in subsets_by_size[i].iter().enumerate() {
            let lcm_full = lcm_of(mask);
            let mut sign_pos = 0u32;
            for k in 0..r {
                if mask & (1 << k) == 0 {
                    continue;
                }
                let sub = mask & !(1 << k);
                let row = position[i - 1][&sub];
                let quot = lcm_full.div(&lcm_of(sub)).unwrap();
                let coeff = if sign_pos % 2 == 0 {
                    ring.field.one()
                } else {
                    ring.field.one().neg()
                };
                entries.insert(
                    (row, col),
                    BiPoly::from_terms(ring, vec![(coeff, quot)]),
                );
                sign_pos += 1;
            }
        }
        diffs.push(entries);
    }

    // iterated cancellation of unit (bidegree-0) entries
    loop {
        let mut found: Option<(usize, usize, usize)> = None;
        'scan: for i in 0..diffs.len() {
            let mut keys: Vec<(usize, usize)> = diffs[i].keys().copied().collect();
            keys.sort();
            if reverse_scan {
                keys.reverse();
            }
            for (row, col) in keys {
                if !layers[i].alive[row] || !layers[i + 1].alive[col] {
                    continue;
                }
                let entry = &diffs[i][&(row, col)];
                if matches!(entry.bigrading(), Bigrading::Of(0, 0)) {
                    found = Some((i, row, col));
                    break 'scan;
                }
            }
        }
        let (i, brow, acol) = match found {
            Some(f) => f,
            None => break,
        };
        let unit = diffs[i][&(brow, acol)].clone();
        let uinv = unit.terms()[0].0.inv();
        // columns of D_i other than acol with an entry at brow pick up the
        // correction  e -= c * u^{-1} * (column acol)
        let pivot_col: Vec<(usize, BiPoly)> = diffs[i]
            .iter()
            .filter(|((rw, cl), _)| *cl == acol && layers[i].alive[*rw])
            .map(|((rw, _), p)| (*rw, p.clone()))
            .collect();
        let hit_cols: Vec<(usize, BiPoly)> = diffs[i]
            .iter()
            .filter(|((rw, cl), _)| {
                *rw == brow && *cl != acol && layers[i + 1].alive[*cl]
            })
            .map(|((_, cl), p)| (*cl, p.clone()))
            .collect();
        for (cl, c_entry) in hit_cols {
            let factor = c_entry.scalar_mul(&uinv);
            for (rw, p_entry) in &pivot_col {
                if *rw == brow {
                    continue;
                }
                let delta = factor.mul(p_entry).unwrap();
                let slot = diffs[i].entry((*rw, cl)).or_insert_with(|| BiPoly::zero(ring));
                *slot = slot.sub(&delta).unwrap();
                if slot.is_zero() {
                    diffs[i].remove(&(*rw, cl));
                }
            }
            diffs[i].remove(&(brow, cl));
        }
        layers[i].alive[brow] = false;
        layers[i + 1].alive[acol] = false;
        diffs[i].retain(|(rw, cl), _| *rw != brow && *cl != acol);
        if i + 1 < diffs.len() {
            diffs[i + 1].retain(|(rw, _), _| *rw != acol);
        }
        if i > 0 {
            diffs[i - 1].retain(|(_, cl), _| *cl != brow);
        }
    }

    // surviving basis elements are the minimal Betti numbers
    let mut bbox = BidegreeBox { a_max: 0, b_max: 0 };
    for layer in &layers {
        for (k, alive) in layer.alive.iter().enumerate() {
            if *alive {
                bbox.a_max = bbox.a_max.max(layer.bidegrees[k].0);
                bbox.b_max = bbox.b_max.max(layer.bidegrees[k].1);
            }
        }
    }
    let mut table = BettiTable::new(bbox, true);
    for (i, layer) in layers.iter().enumerate() {
        let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
        for (k, alive) in layer.alive.iter().enumerate() {
            if *alive {
                *counts.entry(layer.bidegrees[k]).or_insert(0) += 1;
            }
        }
        for ((a, b), beta) in counts {
            table.insert(i, a, b, beta);
        }
    }
    Ok(table)
}
