use super::*;
use crate::linalg::Echelon;
use crate::ring::text::parse_poly;
use crate::ring::FieldSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ring(n: usize, m: usize) -> RingSignature {
    RingSignature::new(n, m, FieldSpec::Q).unwrap()
}

fn ideal(r: &RingSignature, srcs: &[&str]) -> BigradedIdeal {
    let gens = srcs.iter().map(|s| parse_poly(r, s).unwrap()).collect();
    BigradedIdeal::new(r, gens).unwrap()
}

fn poly(r: &RingSignature, s: &str) -> BiPoly {
    parse_poly(r, s).unwrap()
}

/// The worked binomial example used throughout: J = (y2x2 - y1x3, y3x1 - y1x3)
/// in Q[x1..x3, y1..y3].
pub fn xbi_ideal() -> BigradedIdeal {
    let r = ring(3, 3);
    ideal(&r, &["y2*x2 - y1*x3", "y3*x1 - y1*x3"])
}

fn rand_bihom(r: &RingSignature, rng: &mut ChaCha8Rng, a: u32, b: u32, nterms: usize) -> BiPoly {
    let pool = crate::ring::monomial::monomials_of_bidegree(r.n, r.m, a, b);
    let mut terms = Vec::new();
    for _ in 0..nterms {
        let z = pool[rng.gen_range(0..pool.len())].clone();
        let c = r.field.from_i64(rng.gen_range(-4i64..=4));
        terms.push((c, z));
    }
    BiPoly::from_terms(r, terms)
}

#[test]
fn principal_ideal_basis() {
    let r = ring(2, 0);
    let j = ideal(&r, &["x1"]);
    let gb = j.groebner_basis(&TermOrder::Paper);
    assert_eq!(gb.len(), 1);
    assert_eq!(gb[0], poly(&r, "x1"));
}

#[test]
fn xbi_leading_terms() {
    let j = xbi_ideal();
    let leads = j.initial_ideal(&TermOrder::Paper);
    let r = j.ring.clone();
    let y2x2 = poly(&r, "y2*x2").terms()[0].1.clone();
    let y3x1 = poly(&r, "y3*x1").terms()[0].1.clone();
    assert!(leads.contains(&y2x2));
    assert!(leads.contains(&y3x1));
}

#[test]
fn random_spairs_reduce_to_zero() {
    let r = ring(2, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..25 {
        let (a1, b1) = (rng.gen_range(1..=2), rng.gen_range(0..=2));
        let (a2, b2) = (rng.gen_range(0..=2), rng.gen_range(1..=2));
        let f = rand_bihom(&r, &mut rng, a1, b1, 3);
        let g = rand_bihom(&r, &mut rng, a2, b2, 3);
        if f.is_zero() || g.is_zero() {
            continue;
        }
        let j = BigradedIdeal::new(&r, vec![f, g]).unwrap();
        let gb = j.groebner_basis(&TermOrder::Paper);
        assert!(spairs_reduce_to_zero(&gb, &TermOrder::Paper));
    }
}

#[test]
fn normal_form_basics() {
    let r = ring(3, 3);
    let j = xbi_ideal();
    let g = j.gens()[0].clone();
    assert!(j.normal_form(&g, &TermOrder::Paper).is_zero());
    assert!(!j.normal_form(&poly(&r, "1"), &TermOrder::Paper).is_zero());
    // single reduction step by the first generator
    let nf = j.normal_form(&poly(&r, "y2*x2"), &TermOrder::Paper);
    assert_eq!(nf, poly(&r, "y1*x3"));
    assert!(j.contains(&poly(&r, "y2*x2 - y1*x3")));
}

#[test]
fn normal_form_is_idempotent() {
    let r = ring(2, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let j = ideal(&r, &["x1*y1 - x2*y2", "x1^2*y2"]);
    let gb = j.groebner_basis(&TermOrder::Paper);
    for _ in 0..30 {
        let (a, b) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let p = rand_bihom(&r, &mut rng, a, b, 4);
        let nf = normal_form(&p, &gb, &TermOrder::Paper);
        assert_eq!(nf, normal_form(&nf, &gb, &TermOrder::Paper));
    }
}

#[test]
fn membership_soundness() {
    let r = ring(2, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let j = ideal(&r, &["x1*y1 - x2*y2", "x2^2*y1"]);
    for _ in 0..30 {
        // an explicit combination of the generators lies in the ideal
        let q1 = rand_bihom(&r, &mut rng, 1, 0, 2);
        let q2 = rand_bihom(&r, &mut rng, 0, 1, 2);
        let combo = q1
            .mul(&j.gens()[0])
            .unwrap()
            .add(&q2.mul(&j.gens()[1]).unwrap())
            .unwrap();
        assert!(j.contains(&combo));
        // and adding a nonmember keeps the same residue
        let p = poly(&r, "x1*y2");
        let nf1 = j.normal_form(&p, &TermOrder::Paper);
        let nf2 = j.normal_form(&p.add(&combo).unwrap(), &TermOrder::Paper);
        assert_eq!(nf1, nf2);
    }
}

#[test]
fn colon_examples() {
    let r = ring(2, 2);
    // (x1 y1) : x1 = (y1)
    let j = ideal(&r, &["x1*y1"]);
    let c = j.colon(&poly(&r, "x1")).unwrap();
    assert!(c.equals(&ideal(&r, &["y1"])));
    // J : 1 = J
    let c1 = j.colon(&poly(&r, "1")).unwrap();
    assert!(c1.equals(&j));
    assert!(j.colon(&BiPoly::zero(&r)).is_err());
}

#[test]
fn colon_against_brute_force() {
    // ((x1^2, x1 x2) : x2) = (x1), oracle: all monomials of degree <= 3
    let r = ring(2, 0);
    let j = ideal(&r, &["x1^2", "x1*x2"]);
    let f = poly(&r, "x2");
    let c = j.colon(&f).unwrap();
    assert!(c.equals(&ideal(&r, &["x1"])));
    for d in 0..=3u32 {
        for z in crate::ring::monomial::monomials_of_bidegree(2, 0, d, 0) {
            let zp = BiPoly::from_monomial(&r, z);
            let in_colon = c.contains(&zp);
            let oracle = j.contains(&zp.mul(&f).unwrap());
            assert_eq!(in_colon, oracle, "{zp}");
        }
    }
}

#[test]
fn colon_soundness_random() {
    let r = ring(2, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..10 {
        let j = BigradedIdeal::new(
            &r,
            vec![
                rand_bihom(&r, &mut rng, 1, 1, 2),
                rand_bihom(&r, &mut rng, 2, 0, 2),
            ],
        )
        .unwrap();
        if j.gens().len() < 2 {
            continue;
        }
        let f = rand_bihom(&r, &mut rng, 1, 0, 2);
        if f.is_zero() {
            continue;
        }
        let c = j.colon(&f).unwrap();
        for g in c.gens() {
            assert!(j.contains(&g.mul(&f).unwrap()));
        }
    }
}

#[test]
fn eliminate_graph_of_a_variable() {
    // ring Q[x1, t] with t as the only y-variable; (t - x1) ∩ K[x1] = 0
    let r = ring(1, 1);
    let gens = vec![poly(&r, "y1 - x1")];
    let (sub, out) = eliminate(&r, &gens, &[true], &[false]).unwrap();
    assert_eq!(sub.n, 1);
    assert_eq!(sub.m, 0);
    assert!(out.is_empty());
}

#[test]
fn eliminate_rees_kernel_of_two_variables() {
    // eliminate t from (y1 - x1 t, y2 - x2 t): the Koszul relation remains
    let r = ring(2, 3); // y3 plays the role of t
    let gens = vec![poly(&r, "y1 - x1*y3"), poly(&r, "y2 - x2*y3")];
    let (sub, out) = eliminate(&r, &gens, &[true, true], &[true, true, false]).unwrap();
    let expected = ideal(&sub, &["x1*y2 - x2*y1"]);
    let got = BigradedIdeal::new_unchecked(&sub, out);
    assert!(got.equals(&expected));
}

#[test]
fn eliminate_nothing_returns_the_ideal() {
    let j = xbi_ideal();
    let (sub, out) = eliminate(
        &j.ring,
        j.gens(),
        &[true, true, true],
        &[true, true, true],
    )
    .unwrap();
    assert_eq!(sub, j.ring);
    assert_eq!(out.len(), j.gens().len());
}

#[test]
fn syzygies_of_a_regular_sequence() {
    let r = ring(2, 0);
    let gens = vec![poly(&r, "x1"), poly(&r, "x2")];
    let syz = syzygies(&r, &gens).unwrap();
    // everything reduces to the Koszul syzygy (x2, -x1)
    assert!(!syz.is_empty());
    for s in &syz {
        let acc = s[0]
            .mul(&gens[0])
            .unwrap()
            .add(&s[1].mul(&gens[1]).unwrap())
            .unwrap();
        assert!(acc.is_zero());
    }
    // the Koszul syzygy is in the span of the computed ones
    let koszul = vec![poly(&r, "x2"), poly(&r, "x1").neg()];
    assert!(module_element_in_span(&r, &gens, &syz, &koszul));
}

#[test]
fn syzygies_of_the_squared_maximal_ideal() {
    let r = ring(2, 0);
    let gens = vec![poly(&r, "x1^2"), poly(&r, "x1*x2"), poly(&r, "x2^2")];
    let syz = syzygies(&r, &gens).unwrap();
    for s in &syz {
        let mut acc = BiPoly::zero(&r);
        for (a, f) in s.iter().zip(&gens) {
            acc = acc.add(&a.mul(f).unwrap()).unwrap();
        }
        assert!(acc.is_zero());
    }
    // the two linear Hilbert-Burch columns lie in the computed span
    let b1 = vec![poly(&r, "x2"), poly(&r, "x1").neg(), BiPoly::zero(&r)];
    let b2 = vec![BiPoly::zero(&r), poly(&r, "x2"), poly(&r, "x1").neg()];
    assert!(module_element_in_span(&r, &gens, &syz, &b1));
    assert!(module_element_in_span(&r, &gens, &syz, &b2));
    // and the degree-3 syzygy space is 2-dimensional
    assert_eq!(syzygy_space_dim(&r, &gens, &syz, (3, 0)), 2);
}

#[test]
fn single_generator_has_no_syzygies() {
    let r = ring(2, 1);
    let syz = syzygies(&r, &[poly(&r, "x1*y1")]).unwrap();
    assert!(syz.is_empty());
    assert!(syzygies(&r, &[BiPoly::zero(&r)]).is_err());
}

#[test]
fn taylor_syzygies_lie_in_the_span() {
    let r = ring(2, 2);
    let gens = vec![poly(&r, "x1*y1"), poly(&r, "x1^2*y2"), poly(&r, "x2*y2^2")];
    let syz = syzygies(&r, &gens).unwrap();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let zi = gens[i].terms()[0].1.clone();
            let zj = gens[j].terms()[0].1.clone();
            let lcm = zi.lcm(&zj);
            let mut tau = vec![BiPoly::zero(&r); gens.len()];
            tau[i] = BiPoly::from_monomial(&r, lcm.div(&zi).unwrap());
            tau[j] = BiPoly::from_monomial(&r, lcm.div(&zj).unwrap()).neg();
            assert!(module_element_in_span(&r, &gens, &syz, &tau));
        }
    }
}

/// Degreewise membership of a homogeneous module element in the span of the
/// computed syzygies, via exact linear algebra over the monomial basis of
/// the ambient free module with twists `deg(gens[i])`.
pub fn module_element_in_span(
    r: &RingSignature,
    gens: &[BiPoly],
    span: &[Vec<BiPoly>],
    elem: &[BiPoly],
) -> bool {
    let shifts: Vec<(u32, u32)> = gens.iter().map(|g| g.bidegree().unwrap()).collect();
    // the element's total bidegree
    let mut deg: Option<(u32, u32)> = None;
    for (k, p) in elem.iter().enumerate() {
        if let Ok((a, b)) = p.bidegree() {
            deg = Some((a + shifts[k].0, b + shifts[k].1));
        }
    }
    let deg = match deg {
        Some(d) => d,
        None => return true, // zero element
    };
    let (ech, index) = span_echelon(r, &shifts, span, deg);
    let col = vector_coords(r, &shifts, elem, &index);
    ech.contains(&col)
}

fn syzygy_space_dim(
    r: &RingSignature,
    gens: &[BiPoly],
    span: &[Vec<BiPoly>],
    deg: (u32, u32),
) -> usize {
    let shifts: Vec<(u32, u32)> = gens.iter().map(|g| g.bidegree().unwrap()).collect();
    let (ech, _) = span_echelon(r, &shifts, span, deg);
    ech.rank()
}

fn span_echelon(
    r: &RingSignature,
    shifts: &[(u32, u32)],
    span: &[Vec<BiPoly>],
    deg: (u32, u32),
) -> (Echelon, std::collections::HashMap<(usize, BiMonomial), usize>) {
    // row index: (component, monomial of bidegree deg - shift[component])
    let mut index = std::collections::HashMap::new();
    for (k, sh) in shifts.iter().enumerate() {
        if deg.0 >= sh.0 && deg.1 >= sh.1 {
            for z in crate::ring::monomial::monomials_of_bidegree(r.n, r.m, deg.0 - sh.0, deg.1 - sh.1)
            {
                let next = index.len();
                index.insert((k, z), next);
            }
        }
    }
    let mut ech = Echelon::new();
    for s in span {
        // multiply s by every monomial that lands it in degree `deg`
        let sdeg = s.iter().enumerate().find_map(|(k, p)| {
            p.bidegree()
                .ok()
                .map(|(a, b)| (a + shifts[k].0, b + shifts[k].1))
        });
        let sdeg = match sdeg {
            Some(d) => d,
            None => continue,
        };
        if deg.0 < sdeg.0 || deg.1 < sdeg.1 {
            continue;
        }
        for z in
            crate::ring::monomial::monomials_of_bidegree(r.n, r.m, deg.0 - sdeg.0, deg.1 - sdeg.1)
        {
            let shifted: Vec<BiPoly> = s.iter().map(|p| p.mul_monomial(&z)).collect();
            let col = vector_coords(r, shifts, &shifted, &index);
            ech.insert(col);
        }
    }
    (ech, index)
}

fn vector_coords(
    _r: &RingSignature,
    _shifts: &[(u32, u32)],
    v: &[BiPoly],
    index: &std::collections::HashMap<(usize, BiMonomial), usize>,
) -> Vec<(usize, Scalar)> {
    let mut entries = Vec::new();
    for (k, p) in v.iter().enumerate() {
        for (c, z) in p.terms() {
            let row = *index
                .get(&(k, z.clone()))
                .expect("module element outside the indexed degree");
            entries.push((row, c.clone()));
        }
    }
    entries.sort_by_key(|(r, _)| *r);
    entries
}

#[test]
fn quotient_basis_examples() {
    let r = ring(1, 1);
    let zero = BigradedIdeal::zero(&r);
    let basis = zero.quotient_basis(1, 1);
    assert_eq!(basis.len(), 1);
    assert_eq!(basis[0].to_string(), "x1*y1");

    let j = ideal(&r, &["x1*y1"]);
    assert!(j.quotient_basis(1, 1).is_empty());

    // 9 monomials of bidegree (1,1), two independent leading terms
    let xbi = xbi_ideal();
    assert_eq!(xbi.quotient_basis(1, 1).len(), 7);
}

#[test]
fn component_dimension_matches_inclusion_exclusion() {
    let r = ring(2, 2);
    let j = ideal(&r, &["x1*y1", "x2^2*y2", "x1*x2*y2"]);
    let leads = j.initial_ideal(&TermOrder::Paper);
    let gens: Vec<BiMonomial> = leads.gens().to_vec();
    for a in 0..=4u32 {
        for b in 0..=4u32 {
            let total = crate::ring::monomial::monomials_of_bidegree(2, 2, a, b).len();
            // inclusion-exclusion over generator subsets counts monomials in the ideal
            let mut in_ideal: i64 = 0;
            for mask in 1..(1u32 << gens.len()) {
                let mut lcm = BiMonomial::one(2, 2);
                for (k, g) in gens.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        lcm = lcm.lcm(g);
                    }
                }
                let (la, lb) = lcm.bidegree();
                if la <= a && lb <= b {
                    let count = crate::ring::monomial::monomials_of_bidegree(
                        2,
                        2,
                        a - la,
                        b - lb,
                    )
                    .len() as i64;
                    if mask.count_ones() % 2 == 1 {
                        in_ideal += count;
                    } else {
                        in_ideal -= count;
                    }
                }
            }
            let expected = total as i64 - in_ideal;
            assert_eq!(j.dim_component(a, b) as i64, expected, "({a},{b})");
        }
    }
}

#[test]
fn intersection_of_principal_ideals() {
    let r = ring(2, 0);
    let a = ideal(&r, &["x1"]);
    let b = ideal(&r, &["x2"]);
    let c = a.intersect(&b).unwrap();
    assert!(c.equals(&ideal(&r, &["x1*x2"])));
}

#[test]
fn unit_ideal_detection() {
    let r = ring(1, 1);
    let j = ideal(&r, &["x1", "y1"]);
    assert!(j.contains(&poly(&r, "x1 + y1")));
    assert!(!j.contains(&poly(&r, "1")));
}
