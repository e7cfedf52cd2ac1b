//! Deterministic generators of test ideals powering the property suites,
//! plus the pinned fixtures every acceptance run depends on.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gin::is_bistable;
use crate::groebner::{BigradedIdeal, MonomialIdeal};
use crate::ring::{BiMonomial, BiPoly, FieldSpec, RingSignature};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Bistable,
    StronglyBistable,
    Binomial,
    Generic,
    EquigeneratedX,
}

impl std::str::FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bistable" => Ok(Flavor::Bistable),
            "strongly-bistable" => Ok(Flavor::StronglyBistable),
            "binomial" => Ok(Flavor::Binomial),
            "generic" => Ok(Flavor::Generic),
            "equigenerated-x" => Ok(Flavor::EquigeneratedX),
            other => Err(Error::InvalidArgument(format!("unknown flavor '{other}'"))),
        }
    }
}

/// Everything a corpus generation depends on; generation is a pure function
/// of this value.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub max_xdeg: u32,
    pub max_ydeg: u32,
    pub gens_min: usize,
    pub gens_max: usize,
    pub flavor: Flavor,
    pub count: usize,
    pub field: FieldSpec,
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n > 4 || self.m > 4 || self.n + self.m == 0 {
            return Err(Error::InvalidArgument(
                "corpus rings are capped at n, m <= 4".into(),
            ));
        }
        if self.gens_min == 0 || self.gens_min > self.gens_max {
            return Err(Error::InvalidArgument("empty generator range".into()));
        }
        if self.count == 0 {
            return Err(Error::InvalidArgument("empty corpus".into()));
        }
        self.field.validate()
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, spec: &CorpusSpec, force_xy: bool) -> BiMonomial {
    loop {
        let xdeg = rng.gen_range(0..=spec.max_xdeg);
        let ydeg = rng.gen_range(0..=spec.max_ydeg);
        if xdeg + ydeg == 0 {
            continue;
        }
        if force_xy && (xdeg == 0 || ydeg == 0) {
            continue;
        }
        let mut u = vec![0u32; spec.n];
        for _ in 0..xdeg {
            u[rng.gen_range(0..spec.n)] += 1;
        }
        let mut v = vec![0u32; spec.m];
        for _ in 0..ydeg {
            v[rng.gen_range(0..spec.m)] += 1;
        }
        return BiMonomial::new(u, v);
    }
}

/// Close a monomial set under the (strong) exchange moves; degrees are
/// preserved, so the closure is finite.
fn exchange_closure(ring: &RingSignature, seeds: Vec<BiMonomial>, strong: bool) -> MonomialIdeal {
    let mut set = seeds;
    loop {
        let ideal = MonomialIdeal::new(ring, set.clone());
        let mut added = false;
        for z in ideal.gens() {
            let mut moves: Vec<BiMonomial> = Vec::new();
            if strong {
                for s in 0..ring.n {
                    if z.u[s] > 0 {
                        for i in 0..s {
                            moves.push(z.exchange_x(i, s));
                        }
                    }
                }
                for t in 0..ring.m {
                    if z.v[t] > 0 {
                        for j in 0..t {
                            moves.push(z.exchange_y(j, t));
                        }
                    }
                }
            } else {
                let mx = z.max_x();
                for i in 0..mx.saturating_sub(1) {
                    moves.push(z.exchange_x(i, mx - 1));
                }
                let my = z.max_y();
                for j in 0..my.saturating_sub(1) {
                    moves.push(z.exchange_y(j, my - 1));
                }
            }
            for w in moves {
                if !ideal.contains(&w) {
                    set.push(w);
                    added = true;
                }
            }
        }
        if !added {
            return MonomialIdeal::new(ring, set);
        }
    }
}

/// Generate a deterministic corpus of bigraded ideals.
pub fn generate(spec: &CorpusSpec) -> Result<Vec<BigradedIdeal>> {
    spec.validate()?;
    let ring = RingSignature::new(spec.n, spec.m, spec.field)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    if spec.flavor == Flavor::Binomial && spec.n == 3 && spec.m == 3 {
        // pinned fixture so acceptance runs never depend on randomness
        out.push(xbi_fixture(&ring)?);
    }
    while out.len() < spec.count {
        let k = rng.gen_range(spec.gens_min..=spec.gens_max);
        let ideal = match spec.flavor {
            Flavor::Bistable | Flavor::StronglyBistable => {
                let strong = spec.flavor == Flavor::StronglyBistable;
                let seeds: Vec<BiMonomial> = (0..k)
                    .map(|_| random_monomial(&mut rng, spec, false))
                    .collect();
                let closed = exchange_closure(&ring, seeds, strong);
                debug_assert!(is_bistable(&closed));
                closed.to_ideal()
            }
            Flavor::Binomial => {
                let mut gens = Vec::new();
                for _ in 0..k {
                    let z1 = random_monomial(&mut rng, spec, true);
                    let (a, b) = z1.bidegree();
                    let pool = crate::ring::monomial::monomials_of_bidegree(ring.n, ring.m, a, b);
                    let z2 = pool[rng.gen_range(0..pool.len())].clone();
                    if z1 == z2 {
                        continue;
                    }
                    let c = ring.field.from_i64(*[1i64, -1, 2, -2, 3]
                        .iter()
                        .nth(rng.gen_range(0..5))
                        .unwrap());
                    gens.push(BiPoly::from_terms(
                        &ring,
                        vec![(ring.field.one(), z1), (c, z2)],
                    ));
                }
                BigradedIdeal::new(&ring, gens)?
            }
            Flavor::Generic => {
                let mut gens = Vec::new();
                for _ in 0..k {
                    let z = random_monomial(&mut rng, spec, false);
                    let (a, b) = z.bidegree();
                    let pool = crate::ring::monomial::monomials_of_bidegree(ring.n, ring.m, a, b);
                    let terms: Vec<_> = (0..3)
                        .map(|_| {
                            let w = pool[rng.gen_range(0..pool.len())].clone();
                            (ring.field.from_i64(rng.gen_range(-3i64..=3)), w)
                        })
                        .collect();
                    let p = BiPoly::from_terms(&ring, terms);
                    if !p.is_zero() {
                        gens.push(p);
                    }
                }
                BigradedIdeal::new(&ring, gens)?
            }
            Flavor::EquigeneratedX => {
                let d = rng.gen_range(1..=spec.max_xdeg.max(1));
                let pool = crate::ring::monomial::monomials_of_bidegree(ring.n, 0, d, 0);
                let mut gens = Vec::new();
                for _ in 0..k {
                    let w = pool[rng.gen_range(0..pool.len())].clone();
                    let z = BiMonomial::new(w.u.clone(), vec![0; ring.m]);
                    gens.push(BiPoly::from_monomial(&ring, z));
                }
                let leads = MonomialIdeal::new(&ring, gens.iter().map(|g| g.terms()[0].1.clone()).collect());
                leads.to_ideal()
            }
        };
        if ideal.is_zero_ideal() {
            continue;
        }
        out.push(ideal);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// pinned fixtures
// ---------------------------------------------------------------------------

/// `J = (y2 x2 - y1 x3, y3 x1 - y1 x3)` in `Q[x1..x3, y1..y3]`.
pub fn xbi_fixture(ring: &RingSignature) -> Result<BigradedIdeal> {
    let gens = crate::ring::text::parse_polys(
        ring,
        &["y2*x2 - y1*x3".into(), "y3*x1 - y1*x3".into()],
    )?;
    BigradedIdeal::new(ring, gens)
}

pub fn standard_ring_33() -> RingSignature {
    RingSignature::new(3, 3, FieldSpec::Q).unwrap()
}

/// `m^2 = (x1^2, x1 x2, x2^2)` in `Q[x1, x2]`.
pub fn msquare_base() -> Vec<BiPoly> {
    let r = RingSignature::new(2, 0, FieldSpec::Q).unwrap();
    crate::ring::text::parse_polys(&r, &["x1^2".into(), "x1*x2".into(), "x2^2".into()]).unwrap()
}

/// `(x1, x2)` in `Q[x1, x2]`.
pub fn two_variables_base() -> Vec<BiPoly> {
    let r = RingSignature::new(2, 0, FieldSpec::Q).unwrap();
    crate::ring::text::parse_polys(&r, &["x1".into(), "x2".into()]).unwrap()
}

/// `(x1^2, x2^2)` in `Q[x1, x2]`.
pub fn ci_base() -> Vec<BiPoly> {
    let r = RingSignature::new(2, 0, FieldSpec::Q).unwrap();
    crate::ring::text::parse_polys(&r, &["x1^2".into(), "x2^2".into()]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(flavor: Flavor) -> CorpusSpec {
        CorpusSpec {
            seed: 11,
            n: 3,
            m: 3,
            max_xdeg: 2,
            max_ydeg: 2,
            gens_min: 2,
            gens_max: 3,
            flavor,
            count: 6,
            field: FieldSpec::Q,
        }
    }

    #[test]
    fn bistable_flavor_passes_the_predicate() {
        for strong in [false, true] {
            let flavor = if strong {
                Flavor::StronglyBistable
            } else {
                Flavor::Bistable
            };
            let corpus = generate(&spec(flavor)).unwrap();
            assert_eq!(corpus.len(), 6);
            for j in &corpus {
                let leads = j.initial_ideal(&crate::ring::TermOrder::Paper);
                assert!(is_bistable(&leads));
                if strong {
                    assert!(crate::gin::is_strongly_bistable(&leads));
                }
            }
        }
    }

    #[test]
    fn equigenerated_flavor_has_one_degree() {
        let corpus = generate(&spec(Flavor::EquigeneratedX)).unwrap();
        for j in &corpus {
            let degs: Vec<(u32, u32)> = j
                .gens()
                .iter()
                .map(|g| g.bidegree().unwrap())
                .collect();
            assert!(degs.iter().all(|&(_, b)| b == 0));
            assert!(degs.windows(2).all(|w| w[0].0 == w[1].0));
        }
    }

    #[test]
    fn binomial_flavor_pins_the_worked_example() {
        let corpus = generate(&spec(Flavor::Binomial)).unwrap();
        let fixture = xbi_fixture(&standard_ring_33()).unwrap();
        assert!(corpus[0].equals(&fixture));
    }

    #[test]
    fn reproducible() {
        let a = generate(&spec(Flavor::Generic)).unwrap();
        let b = generate(&spec(Flavor::Generic)).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert!(x.equals(y));
        }
    }

    #[test]
    fn bounds_are_checked() {
        let mut s = spec(Flavor::Generic);
        s.n = 5;
        assert!(generate(&s).is_err());
        let mut s2 = spec(Flavor::Generic);
        s2.gens_min = 0;
        assert!(generate(&s2).is_err());
    }
}
