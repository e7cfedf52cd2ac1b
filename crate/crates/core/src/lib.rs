//! Exact computer algebra for standard bigraded algebras `K[x_1..x_n,
//! y_1..y_m] / J`: Groebner bases, bigeneric initial ideals, bigraded Betti
//! tables by two independent routes, x/y-regularity through almost regular
//! sequences, Rees and symmetric algebra presentations with the regularity
//! of powers, and bounds for bigraded Veronese algebras.

pub mod error;
pub mod linalg;
pub mod ring;

pub mod blowup;
pub mod corpus;
pub mod gin;
pub mod groebner;
pub mod io;
pub mod regularity;
pub mod resolve;
pub mod suite;
pub mod veronese;

pub use error::{Error, Result};
pub use regularity::Direction;
pub use ring::{BiMonomial, BiPoly, FieldSpec, RingSignature, Scalar, TermOrder};
