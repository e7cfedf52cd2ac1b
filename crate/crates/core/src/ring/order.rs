//! Term orders on bigraded monomials.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::{paper_cmp, revlex_tail_yfirst, BiMonomial};

/// Variables to eliminate, by 0-based index in each block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElimSpec {
    pub elim_x: Vec<usize>,
    pub elim_y: Vec<usize>,
}

/// Total multiplication-compatible monomial orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    /// `(|u|+|v|, |v|, |u|)` lexicographically, then reverse-lex induced by
    /// `y_1 > ... > y_m > x_1 > ... > x_n`. The order used for bigeneric
    /// initial ideals; `x_n` is the cheapest variable.
    Paper,
    /// Total degree, then reverse-lex over `y_1 > ... > y_m > x_1 > ... > x_n`.
    RevLexX,
    /// `(|u|+|v|, |u|, |v|)` lexicographically, then reverse-lex induced by
    /// `x_1 > ... > x_n > y_1 > ... > y_m`; `y_m` is the cheapest variable.
    RevLexY,
    /// Block elimination order: degree in the eliminated variables first,
    /// then their exponent vector, then `Paper` on the full monomial.
    Elim(ElimSpec),
}

impl TermOrder {
    pub fn cmp(&self, a: &BiMonomial, b: &BiMonomial) -> Ordering {
        match self {
            TermOrder::Paper => paper_cmp(a, b),
            TermOrder::RevLexX => {
                let ta = a.xdeg() + a.ydeg();
                let tb = b.xdeg() + b.ydeg();
                ta.cmp(&tb).then_with(|| revlex_block(a, b))
            }
            TermOrder::RevLexY => {
                let ka = (a.xdeg() + a.ydeg(), a.xdeg(), a.ydeg());
                let kb = (b.xdeg() + b.ydeg(), b.xdeg(), b.ydeg());
                ka.cmp(&kb).then_with(|| revlex_tail_yfirst(a, b))
            }
            TermOrder::Elim(spec) => {
                let da: u32 = spec.elim_x.iter().map(|&i| a.u[i]).sum::<u32>()
                    + spec.elim_y.iter().map(|&j| a.v[j]).sum::<u32>();
                let db: u32 = spec.elim_x.iter().map(|&i| b.u[i]).sum::<u32>()
                    + spec.elim_y.iter().map(|&j| b.v[j]).sum::<u32>();
                da.cmp(&db)
                    .then_with(|| {
                        for &i in &spec.elim_x {
                            match a.u[i].cmp(&b.u[i]) {
                                Ordering::Equal => {}
                                ord => return ord,
                            }
                        }
                        for &j in &spec.elim_y {
                            match a.v[j].cmp(&b.v[j]) {
                                Ordering::Equal => {}
                                ord => return ord,
                            }
                        }
                        Ordering::Equal
                    })
                    .then_with(|| paper_cmp(a, b))
            }
        }
    }

    /// Whether `x_n` (0-based `n-1`) is the revlex-cheapest variable, which
    /// validates the division shortcut for colon by the last x-variable.
    pub fn last_x_is_cheapest(&self) -> bool {
        matches!(self, TermOrder::Paper | TermOrder::RevLexX)
    }

    pub fn last_y_is_cheapest(&self) -> bool {
        matches!(self, TermOrder::RevLexY)
    }
}

fn revlex_block(a: &BiMonomial, b: &BiMonomial) -> Ordering {
    // Same listing as the Paper tie-break.
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::monomial::monomials_of_bidegree;
    use proptest::prelude::*;

    fn arb_mono(n: usize, m: usize, max: u32) -> impl Strategy<Value = BiMonomial> {
        (
            proptest::collection::vec(0..=max, n),
            proptest::collection::vec(0..=max, m),
        )
            .prop_map(|(u, v)| BiMonomial::new(u, v))
    }

    fn orders() -> Vec<TermOrder> {
        vec![
            TermOrder::Paper,
            TermOrder::RevLexX,
            TermOrder::RevLexY,
            TermOrder::Elim(ElimSpec {
                elim_x: vec![],
                elim_y: vec![2],
            }),
        ]
    }

    proptest! {
        // z1 > z2 implies z1*w > z2*w, for every order.
        #[test]
        fn multiplicative(
            a in arb_mono(3, 3, 4),
            b in arb_mono(3, 3, 4),
            w in arb_mono(3, 3, 4),
        ) {
            for ord in orders() {
                let before = ord.cmp(&a, &b);
                let after = ord.cmp(&a.mul(&w), &b.mul(&w));
                prop_assert_eq!(before, after);
            }
        }

        // EQ iff equal, and antisymmetry.
        #[test]
        fn total_and_strict(a in arb_mono(3, 3, 4), b in arb_mono(3, 3, 4)) {
            for ord in orders() {
                let ab = ord.cmp(&a, &b);
                let ba = ord.cmp(&b, &a);
                prop_assert_eq!(ab, ba.reverse());
                prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
            }
        }

        // The paper order refines total bidegree.
        #[test]
        fn refines_total_degree(a in arb_mono(3, 3, 4), b in arb_mono(3, 3, 4)) {
            let (ta, tb) = (a.xdeg() + a.ydeg(), b.xdeg() + b.ydeg());
            if ta > tb {
                prop_assert_eq!(TermOrder::Paper.cmp(&a, &b), std::cmp::Ordering::Greater);
            }
        }
    }

    // Brute-force check of the full degree-(1,1) chain against the order
    // axioms: the sort under Paper must be the unique total order listed.
    #[test]
    fn degree_one_one_chain() {
        let mut ms = monomials_of_bidegree(2, 2, 1, 1);
        ms.sort_by(|a, b| TermOrder::Paper.cmp(b, a));
        let names: Vec<String> = ms.iter().map(|z| z.to_string()).collect();
        assert_eq!(names, vec!["x1*y1", "x1*y2", "x2*y1", "x2*y2"]);
    }

    #[test]
    fn elimination_order_separates_blocks() {
        // Any monomial containing the eliminated variable beats any without.
        let spec = ElimSpec { elim_x: vec![], elim_y: vec![1] };
        let ord = TermOrder::Elim(spec);
        let with_t = BiMonomial::new(vec![0, 0], vec![0, 1]);
        let without = BiMonomial::new(vec![3, 3], vec![2, 0]);
        assert_eq!(ord.cmp(&with_t, &without), Ordering::Greater);
    }
}
