//! Almost regular sequences, their s-values, and d-sequence predicates.
//!
//! The s-value route computes `reg_x` and `reg_y` of `R = S/J` from the
//! degree supports of the successive colon modules against a sequence of
//! linear forms. A sequence is accepted only when every stage carries a
//! finiteness certificate (the colon module is killed by a power of the
//! relevant irrelevant ideal), so the reported values are exact whenever the
//! routine returns at all; random coordinates are only a fallback for inputs
//! where the coordinate sequence itself fails the certificate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{reduced_groebner_basis, BigradedIdeal, MonomialIdeal};
use crate::linalg::{invert_dense, Echelon};
use crate::ring::monomial::{compositions, monomials_of_bidegree};
use crate::ring::{BiMonomial, BiPoly, RingSignature, Scalar, TermOrder};

/// Which block of variables a computation runs against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    X,
    Y,
}

/// Certificate produced by [`almost_regular_sequence`].
#[derive(Clone, Debug, Serialize)]
pub struct AlmostRegularCertificate {
    pub direction: Direction,
    /// The linear forms, in sequence order, as elements of the original ring.
    pub forms: Vec<String>,
    /// Per form: the smallest power of the irrelevant ideal that kills the
    /// colon module at that stage.
    pub saturation_indices: Vec<u32>,
    /// Per form: the largest direction-degree where the colon module lives.
    pub s_values: Vec<u32>,
    pub seed: u64,
    /// False when the plain coordinate sequence passed the certificate.
    pub randomized: bool,
}

impl AlmostRegularCertificate {
    pub fn s_max(&self) -> u32 {
        self.s_values.iter().copied().max().unwrap_or(0)
    }
}

const BOX_BOUND: i64 = 1_000_000;
const RETRIES: u64 = 5;

struct Stage {
    s: u32,
    sat: u32,
}

/// One stage of the chain: in the ring with `keep` variables of the active
/// block, colon the ideal by the last variable of the block and read the
/// direction-degree support off the initial ideals.
fn stage_support(
    gens: &[BiPoly],
    ring: &RingSignature,
    dir: Direction,
    keep: usize,
) -> Result<Stage> {
    let (order, truncated_ring) = match dir {
        Direction::X => (
            TermOrder::Paper,
            RingSignature {
                n: keep,
                m: ring.m,
                field: ring.field,
            },
        ),
        Direction::Y => (
            TermOrder::RevLexY,
            RingSignature {
                n: ring.n,
                m: keep,
                field: ring.field,
            },
        ),
    };
    let truncated: Vec<BiPoly> = gens
        .iter()
        .map(|g| match dir {
            Direction::X => g.truncate_vars(keep, ring.m),
            Direction::Y => g.truncate_vars(ring.n, keep),
        })
        .filter(|g| !g.is_zero())
        .collect();
    let gb_a = reduced_groebner_basis(&truncated, &order);
    let in_a = MonomialIdeal::new(
        &truncated_ring,
        gb_a.iter().filter_map(|g| g.leading_monomial(&order)).collect(),
    );
    if in_a.is_unit() {
        // the quotient is zero; the colon module vanishes
        return Ok(Stage { s: 0, sat: 0 });
    }
    // colon by the last variable of the block, via the reverse-lex division
    // shortcut (valid because the order makes that variable cheapest and all
    // basis elements are bihomogeneous)
    let var = match dir {
        Direction::X => truncated_ring.xvar(keep - 1),
        Direction::Y => truncated_ring.yvar(keep - 1),
    };
    let colon_gens: Vec<BiPoly> = gb_a
        .iter()
        .map(|g| {
            let lead = g.leading_monomial(&order).unwrap();
            if var.divides(&lead) {
                divide_poly_by_monomial(g, &var)
            } else {
                g.clone()
            }
        })
        .collect();
    let gb_c = reduced_groebner_basis(&colon_gens, &order);
    let in_c = MonomialIdeal::new(
        &truncated_ring,
        gb_c.iter().filter_map(|g| g.leading_monomial(&order)).collect(),
    );
    // finiteness certificate: every generator of in(C) must die under a
    // power of the irrelevant ideal modulo in(A)
    let saturated = match dir {
        Direction::X => in_a.saturate_x(),
        Direction::Y => in_a.saturate_y(),
    };
    for g in in_c.gens() {
        if !saturated.contains(g) {
            return Err(Error::RetriesExhausted);
        }
    }
    let mut s = 0u32;
    let mut sat = 0u32;
    for g in in_c.gens() {
        let e = killing_exponent(g, &in_a, dir, &truncated_ring)?;
        sat = sat.max(e);
        if e >= 1 {
            let gdeg = match dir {
                Direction::X => g.xdeg(),
                Direction::Y => g.ydeg(),
            };
            s = s.max(gdeg + e - 1);
        }
    }
    Ok(Stage { s, sat })
}

/// The smallest `e` with `g * (block irrelevant ideal)^e` inside `in_a`;
/// 0 when `g` itself is a member.
fn killing_exponent(
    g: &BiMonomial,
    in_a: &MonomialIdeal,
    dir: Direction,
    ring: &RingSignature,
) -> Result<u32> {
    let block_len = match dir {
        Direction::X => ring.n,
        Direction::Y => ring.m,
    };
    for e in 0u32..=200 {
        let contained = compositions(e, block_len).into_iter().all(|c| {
            let mut z = g.clone();
            match dir {
                Direction::X => {
                    for (i, add) in c.iter().enumerate() {
                        z.u[i] += add;
                    }
                }
                Direction::Y => {
                    for (j, add) in c.iter().enumerate() {
                        z.v[j] += add;
                    }
                }
            }
            in_a.contains(&z)
        });
        if contained {
            return Ok(e);
        }
    }
    Err(Error::RetriesExhausted)
}

fn divide_poly_by_monomial(g: &BiPoly, z: &BiMonomial) -> BiPoly {
    let terms = g
        .terms()
        .iter()
        .map(|(c, w)| {
            (
                c.clone(),
                w.div(z)
                    .expect("reverse-lex shortcut: the cheapest variable divides every term"),
            )
        })
        .collect();
    BiPoly::from_terms(&g.ring, terms)
}

fn block_len(ring: &RingSignature, dir: Direction) -> usize {
    match dir {
        Direction::X => ring.n,
        Direction::Y => ring.m,
    }
}

/// Substitute a square coordinate change on one block of variables.
fn apply_block_change(
    gens: &[BiPoly],
    ring: &RingSignature,
    dir: Direction,
    mat: &[Vec<Scalar>],
) -> Result<Vec<BiPoly>> {
    let x_subs: Vec<BiPoly> = (0..ring.n)
        .map(|j| match dir {
            Direction::X => linear_form_x(ring, mat.iter().map(|row| row[j].clone()).collect()),
            Direction::Y => BiPoly::variable_x(ring, j),
        })
        .collect();
    let y_subs: Vec<BiPoly> = (0..ring.m)
        .map(|l| match dir {
            Direction::Y => linear_form_y(ring, mat.iter().map(|row| row[l].clone()).collect()),
            Direction::X => BiPoly::variable_y(ring, l),
        })
        .collect();
    gens.iter()
        .map(|g| g.substitute(ring, &x_subs, &y_subs))
        .collect()
}

fn linear_form_x(ring: &RingSignature, coeffs: Vec<Scalar>) -> BiPoly {
    let terms = coeffs
        .into_iter()
        .enumerate()
        .map(|(i, c)| (c, ring.xvar(i)))
        .collect();
    BiPoly::from_terms(ring, terms)
}

fn linear_form_y(ring: &RingSignature, coeffs: Vec<Scalar>) -> BiPoly {
    let terms = coeffs
        .into_iter()
        .enumerate()
        .map(|(j, c)| (c, ring.yvar(j)))
        .collect();
    BiPoly::from_terms(ring, terms)
}

fn random_invertible(
    rng: &mut ChaCha8Rng,
    size: usize,
    field: &crate::ring::FieldSpec,
) -> Vec<Vec<Scalar>> {
    loop {
        let mat: Vec<Vec<Scalar>> = (0..size)
            .map(|_| {
                (0..size)
                    .map(|_| {
                        if rng.gen_bool(0.9) {
                            field.random_box(rng, BOX_BOUND)
                        } else {
                            field.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        if invert_dense(&mat).is_some() {
            return mat;
        }
    }
}

fn identity_matrix(size: usize, field: &crate::ring::FieldSpec) -> Vec<Vec<Scalar>> {
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect()
}

/// An almost regular sequence for `R = S/J` in the chosen direction, with
/// its s-values. The coordinate sequence `x_n,...,x_1` (resp. `y_m,...,y_1`)
/// is tried first; on certificate failure, fresh random coordinates are
/// drawn from the seed, up to a bounded number of retries.
pub fn almost_regular_sequence(
    ideal: &BigradedIdeal,
    dir: Direction,
    seed: u64,
) -> Result<AlmostRegularCertificate> {
    let ring = &ideal.ring;
    let len = block_len(ring, dir);
    if len == 0 {
        return Ok(AlmostRegularCertificate {
            direction: dir,
            forms: Vec::new(),
            saturation_indices: Vec::new(),
            s_values: Vec::new(),
            seed,
            randomized: false,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..=RETRIES {
        let mat = if attempt == 0 {
            identity_matrix(len, &ring.field)
        } else {
            random_invertible(&mut rng, len, &ring.field)
        };
        let transformed = apply_block_change(ideal.gens(), ring, dir, &mat)?;
        let mut stages = Vec::with_capacity(len);
        let mut ok = true;
        for keep in (1..=len).rev() {
            match stage_support(&transformed, ring, dir, keep) {
                Ok(st) => stages.push(st),
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        // forms in the original coordinates: the inverse change applied to
        // the coordinate sequence x_len, ..., x_1
        let inv = invert_dense(&mat).expect("matrix was drawn invertible");
        let forms: Vec<String> = (0..len)
            .rev()
            .map(|col| {
                let coeffs: Vec<Scalar> = inv.iter().map(|row| row[col].clone()).collect();
                let form = match dir {
                    Direction::X => linear_form_x(ring, coeffs),
                    Direction::Y => linear_form_y(ring, coeffs),
                };
                form.to_string()
            })
            .collect();
        return Ok(AlmostRegularCertificate {
            direction: dir,
            forms,
            saturation_indices: stages.iter().map(|s| s.sat).collect(),
            s_values: stages.iter().map(|s| s.s).collect(),
            seed,
            randomized: attempt > 0,
        });
    }
    Err(Error::RetriesExhausted)
}

/// Regularity report with the certificates that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct RegularityReport {
    pub reg_x: i64,
    pub reg_y: i64,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_certificate: Option<AlmostRegularCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y_certificate: Option<AlmostRegularCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti_witnesses: Option<Vec<(usize, u32, u32)>>,
}

/// `reg_x(R) = max s^x_i` and `reg_y(R) = max s^y_i` for `R = S/J`.
pub fn reg_via_s_values(ideal: &BigradedIdeal, seed: u64) -> Result<RegularityReport> {
    let x = almost_regular_sequence(ideal, Direction::X, seed)?;
    let y = almost_regular_sequence(ideal, Direction::Y, seed)?;
    Ok(RegularityReport {
        reg_x: x.s_max() as i64,
        reg_y: y.s_max() as i64,
        method: "svalues".into(),
        x_certificate: Some(x),
        y_certificate: Some(y),
        betti_witnesses: None,
    })
}

/// Report of the two d-sequence conditions for an explicit sequence.
#[derive(Clone, Debug, Serialize)]
pub struct DSequenceReport {
    pub sequence: Vec<String>,
    pub minimal_generation: bool,
    pub colon_condition: Vec<bool>,
    pub is_d_sequence: bool,
}

/// Check whether `seq` is a d-sequence in `R = S/J`: (i) it generates
/// `I = (seq)` minimally, and (ii) `(f_1..f_{i-1}) : f_i ∩ I = (f_1..f_{i-1})`
/// for every `i`.
pub fn is_d_sequence(seq: &[BiPoly], ambient: &BigradedIdeal) -> Result<DSequenceReport> {
    let ring = &ambient.ring;
    for f in seq {
        ring.check_same(&f.ring)?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !f.is_bihomogeneous() {
            return Err(Error::NotBihomogeneous);
        }
    }
    // (i) graded Nakayama: f_i must stay outside (others) + m*I + J in its
    // own bidegree
    let mut minimal = true;
    for i in 0..seq.len() {
        let mut gens: Vec<BiPoly> = ambient.gens().to_vec();
        for (k, f) in seq.iter().enumerate() {
            if k != i {
                gens.push(f.clone());
            }
        }
        for f in seq {
            for v in 0..ring.n {
                gens.push(f.mul(&BiPoly::variable_x(ring, v))?);
            }
            for v in 0..ring.m {
                gens.push(f.mul(&BiPoly::variable_y(ring, v))?);
            }
        }
        let (a, b) = seq[i].bidegree()?;
        if component_membership(ring, &gens, &seq[i], a, b) {
            minimal = false;
            break;
        }
    }
    // (ii) colon conditions through lifted ideals containing J
    let mut full = ambient.gens().to_vec();
    full.extend(seq.iter().cloned());
    let ideal_i = BigradedIdeal::new_unchecked(ring, full);
    let mut conds = Vec::with_capacity(seq.len());
    for i in 0..seq.len() {
        let mut prefix = ambient.gens().to_vec();
        prefix.extend(seq[..i].iter().cloned());
        let lhs = BigradedIdeal::new_unchecked(ring, prefix);
        let colon = lhs.colon(&seq[i])?;
        let met = colon.intersect(&ideal_i)?;
        conds.push(lhs.contains_ideal(&met));
    }
    let all = conds.iter().all(|&c| c);
    Ok(DSequenceReport {
        sequence: seq.iter().map(|f| f.to_string()).collect(),
        minimal_generation: minimal,
        colon_condition: conds,
        is_d_sequence: minimal && all,
    })
}

/// Membership of a bihomogeneous `p` in the ideal spanned by `gens`, tested
/// inside the single component of bidegree `(a, b)` by exact linear algebra.
fn component_membership(
    ring: &RingSignature,
    gens: &[BiPoly],
    p: &BiPoly,
    a: u32,
    b: u32,
) -> bool {
    let monos = monomials_of_bidegree(ring.n, ring.m, a, b);
    let index: std::collections::HashMap<BiMonomial, usize> = monos
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, z)| (z, k))
        .collect();
    let coords = |q: &BiPoly| -> Vec<(usize, Scalar)> {
        let mut entries: Vec<(usize, Scalar)> = q
            .terms()
            .iter()
            .map(|(c, z)| (index[z], c.clone()))
            .collect();
        entries.sort_by_key(|(r, _)| *r);
        entries
    };
    let mut ech = Echelon::new();
    for g in gens {
        let gd = match g.bidegree() {
            Ok(d) => d,
            Err(_) => continue,
        };
        if gd.0 > a || gd.1 > b {
            continue;
        }
        for z in monomials_of_bidegree(ring.n, ring.m, a - gd.0, b - gd.1) {
            ech.insert(coords(&g.mul_monomial(&z)));
        }
    }
    ech.contains(&coords(p))
}

/// Draw a generic minimal system of `(1,0)`-forms (direction x) or
/// `(0,1)`-forms (direction y) generating the corresponding variable ideal
/// of `R`, and test whether it is a d-sequence. Three independent draws must
/// agree before a verdict is returned.
pub fn generic_forms_d_sequence(
    ideal: &BigradedIdeal,
    dir: Direction,
    seed: u64,
) -> Result<bool> {
    let (a, b) = match dir {
        Direction::X => (1, 0),
        Direction::Y => (0, 1),
    };
    let k = ideal.dim_component(a, b);
    if k == 0 {
        return Ok(true);
    }
    let mut verdicts = Vec::new();
    for trial in 0..3u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial));
        let forms = draw_independent_forms(ideal, dir, k, &mut rng)?;
        let report = is_d_sequence(&forms, ideal)?;
        verdicts.push(report.is_d_sequence);
    }
    if verdicts.iter().all(|&v| v == verdicts[0]) {
        Ok(verdicts[0])
    } else {
        Err(Error::Consensus(format!(
            "d-sequence draws disagree: {verdicts:?}"
        )))
    }
}

fn draw_independent_forms(
    ideal: &BigradedIdeal,
    dir: Direction,
    k: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<BiPoly>> {
    let ring = &ideal.ring;
    let len = block_len(ring, dir);
    let (a, b) = match dir {
        Direction::X => (1u32, 0u32),
        Direction::Y => (0, 1),
    };
    let basis = ideal.quotient_basis(a, b);
    let index: std::collections::HashMap<BiMonomial, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, z)| (z, i))
        .collect();
    for _ in 0..20 {
        let mut forms = Vec::with_capacity(k);
        let mut ech = Echelon::new();
        for _ in 0..k {
            let coeffs: Vec<Scalar> = (0..len)
                .map(|_| ring.field.random_box(rng, 1000))
                .collect();
            let form = match dir {
                Direction::X => linear_form_x(ring, coeffs),
                Direction::Y => linear_form_y(ring, coeffs),
            };
            let nf = ideal.normal_form(&form, &TermOrder::Paper);
            let mut col: Vec<(usize, Scalar)> = nf
                .terms()
                .iter()
                .map(|(c, z)| (index[z], c.clone()))
                .collect();
            col.sort_by_key(|(r, _)| *r);
            ech.insert(col);
            forms.push(form);
        }
        if ech.rank() == k {
            return Ok(forms);
        }
    }
    Err(Error::RetriesExhausted)
}

/// Castelnuovo-Mumford regularity of `S_x / I` for a nonzero homogeneous
/// ideal of the x-subring, by the same chain with no y-variables.
pub fn graded_regularity_of_quotient(ideal: &BigradedIdeal, seed: u64) -> Result<i64> {
    if ideal.ring.m != 0 {
        return Err(Error::Hypothesis(
            "expected an ideal of the x-subring (m = 0)".into(),
        ));
    }
    let cert = almost_regular_sequence(ideal, Direction::X, seed)?;
    Ok(cert.s_max() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::text::parse_poly;
    use crate::ring::FieldSpec;

    fn ring(n: usize, m: usize) -> RingSignature {
        RingSignature::new(n, m, FieldSpec::Q).unwrap()
    }

    fn ideal(r: &RingSignature, srcs: &[&str]) -> BigradedIdeal {
        let gens = srcs.iter().map(|s| parse_poly(r, s).unwrap()).collect();
        BigradedIdeal::new(r, gens).unwrap()
    }

    #[test]
    fn zero_ideal_is_regular() {
        let r = ring(2, 2);
        let rep = reg_via_s_values(&BigradedIdeal::zero(&r), 0).unwrap();
        assert_eq!((rep.reg_x, rep.reg_y), (0, 0));
        assert!(!rep.x_certificate.unwrap().randomized);
    }

    #[test]
    fn principal_monomial_in_the_plane() {
        // n = m = 1: (0 : x1) = (y1)/(x1 y1) is concentrated in x-degree 0
        let r = ring(1, 1);
        let j = ideal(&r, &["x1*y1"]);
        let cert = almost_regular_sequence(&j, Direction::X, 0).unwrap();
        assert_eq!(cert.s_values, vec![0]);
        let rep = reg_via_s_values(&j, 0).unwrap();
        assert_eq!((rep.reg_x, rep.reg_y), (0, 0));
    }

    #[test]
    fn worked_binomial_example_has_zero_regularity() {
        let j = crate::groebner::tests::xbi_ideal();
        let rep = reg_via_s_values(&j, 1).unwrap();
        assert_eq!((rep.reg_x, rep.reg_y), (0, 0));
    }

    #[test]
    fn bistable_pair_example() {
        // taylor table gives reg_x = 1, reg_y = 0
        let r = ring(2, 2);
        let j = ideal(&r, &["x1*y1", "x1^2*y2"]);
        let rep = reg_via_s_values(&j, 3).unwrap();
        assert_eq!((rep.reg_x, rep.reg_y), (1, 0));
    }

    #[test]
    fn coordinate_sequence_accepted_for_bistable_input() {
        let r = ring(2, 2);
        let j = ideal(&r, &["x1*y1", "x1^2*y2"]);
        let cert = almost_regular_sequence(&j, Direction::X, 0).unwrap();
        assert!(!cert.randomized);
        assert_eq!(cert.forms, vec!["x2", "x1"]);
    }

    #[test]
    fn randomization_kicks_in_when_needed() {
        // (x2) with n = 2: x2 is not almost regular, a generic form is
        let r = ring(2, 1);
        let j = ideal(&r, &["x2*y1"]);
        let cert = almost_regular_sequence(&j, Direction::X, 7).unwrap();
        assert_eq!(cert.s_max(), 0);
    }

    #[test]
    fn s_values_spot_check_certificate() {
        // components above each s-value vanish: checked via dimensions
        let r = ring(2, 2);
        let j = ideal(&r, &["x1*y1", "x1^2*y2"]);
        let cert = almost_regular_sequence(&j, Direction::X, 0).unwrap();
        // stage 1: prefix (), colon by x2; stage 2: prefix (x2), colon by x1
        for (idx, keep) in [(0usize, 2usize), (1, 1)] {
            let s = cert.s_values[idx];
            let truncated: Vec<BiPoly> = j
                .gens()
                .iter()
                .map(|g| g.truncate_vars(keep, 2))
                .filter(|g| !g.is_zero())
                .collect();
            let rr = RingSignature::new(keep, 2, FieldSpec::Q).unwrap();
            let a_ideal = BigradedIdeal::new_unchecked(&rr, truncated);
            let var = BiPoly::variable_x(&rr, keep - 1);
            let c_ideal = a_ideal.colon(&var).unwrap();
            for extra in 1..=2u32 {
                let a = s + extra;
                for b in 0..=4u32 {
                    assert_eq!(
                        c_ideal.dim_component(a, b),
                        a_ideal.dim_component(a, b),
                        "colon module must vanish at x-degree {a}"
                    );
                }
            }
        }
    }

    #[test]
    fn regular_sequence_is_a_d_sequence() {
        let r = ring(2, 0);
        let j = BigradedIdeal::zero(&r);
        let seq = vec![parse_poly(&r, "x1").unwrap(), parse_poly(&r, "x2").unwrap()];
        let rep = is_d_sequence(&seq, &j).unwrap();
        assert!(rep.minimal_generation);
        assert!(rep.is_d_sequence);
    }

    #[test]
    fn repeated_generator_is_not_minimal() {
        let r = ring(2, 0);
        let j = BigradedIdeal::zero(&r);
        let seq = vec![parse_poly(&r, "x1").unwrap(), parse_poly(&r, "x1").unwrap()];
        let rep = is_d_sequence(&seq, &j).unwrap();
        assert!(!rep.minimal_generation);
        assert!(!rep.is_d_sequence);
    }

    #[test]
    fn generic_forms_match_regularity_vanishing() {
        // reg_x(S/(x1 y1)) = 0 so generic (1,0)-forms give a d-sequence
        let r = ring(1, 1);
        let j = ideal(&r, &["x1*y1"]);
        assert!(generic_forms_d_sequence(&j, Direction::X, 11).unwrap());
        // J = 0: the variables themselves are regular
        let zero = BigradedIdeal::zero(&ring(2, 2));
        assert!(generic_forms_d_sequence(&zero, Direction::X, 1).unwrap());
        assert!(generic_forms_d_sequence(&zero, Direction::Y, 1).unwrap());
        // reg_x(S/(x1y1, x1^2y2)) = 1, so the generic system must fail
        let r2 = ring(2, 2);
        let j2 = ideal(&r2, &["x1*y1", "x1^2*y2"]);
        assert!(!generic_forms_d_sequence(&j2, Direction::X, 5).unwrap());
    }

    #[test]
    fn determinism() {
        let r = ring(2, 2);
        let j = ideal(&r, &["x1*y1 - x2*y2"]);
        let a = reg_via_s_values(&j, 9).unwrap();
        let b = reg_via_s_values(&j, 9).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
