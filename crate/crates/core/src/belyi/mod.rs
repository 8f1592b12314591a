//! Exact verification of explicit maps over `Q` and quadratic fields:
//! field and polynomial arithmetic, the map-expression parser, fiber
//! profiles, critical values, and the constructed families.

pub mod families;
pub mod map;
pub mod parse;
pub mod poly;
pub mod quad;

pub use families::{belyi_polynomial, chebyshev, chebyshev_belyi, dihedral_belyi, power_map};
pub use map::{
    CriticalValues, FiberProfile, MapError, MapVerdict, RationalMap, Value, VerifyError,
};
pub use parse::{parse_map, ParseError};
pub use poly::QuadPoly;
pub use quad::{rational_sqrt, FieldError, QuadRational};
