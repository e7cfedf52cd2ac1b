//! The bigraded polynomial ring layer: coefficient fields, monomials,
//! term orders, polynomials and the text grammar for them.

pub mod field;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod text;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use monomial::BiMonomial;
pub use order::{ElimSpec, TermOrder};
pub use poly::{BiPoly, Bigrading};

/// Shape of the ring `K[x_1..x_n, y_1..y_m]` with `deg x_i = (1,0)` and
/// `deg y_j = (0,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSignature {
    pub n: usize,
    pub m: usize,
    pub field: FieldSpec,
}

impl RingSignature {
    pub fn new(n: usize, m: usize, field: FieldSpec) -> Result<Self> {
        if n + m == 0 {
            return Err(Error::InvalidArgument(
                "a ring needs at least one variable".into(),
            ));
        }
        field.validate()?;
        Ok(RingSignature { n, m, field })
    }

    /// The x-only subring `K[x_1..x_n]` with the same field.
    pub fn x_subring(&self) -> RingSignature {
        RingSignature {
            n: self.n,
            m: 0,
            field: self.field,
        }
    }

    pub fn check_same(&self, other: &RingSignature) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.to_string(), other.to_string()))
        }
    }

    pub fn one_monomial(&self) -> BiMonomial {
        BiMonomial::one(self.n, self.m)
    }

    pub fn xvar(&self, i: usize) -> BiMonomial {
        BiMonomial::xvar(self.n, self.m, i)
    }

    pub fn yvar(&self, j: usize) -> BiMonomial {
        BiMonomial::yvar(self.n, self.m, j)
    }
}

impl fmt::Display for RingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[x1..x{}, y1..y{}]", self.field, self.n, self.m)
    }
}
