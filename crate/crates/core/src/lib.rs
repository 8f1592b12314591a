//! Exact-arithmetic engine for ramified coverings of the sphere branched
//! over `{0, 1, ∞}`: scheme enumeration, covering counts by character sums,
//! exceptionality decisions, dessin export, and verification of explicit
//! maps over the rationals and quadratic fields.
//!
//! Everything is exact — arbitrary-precision integers and rationals, no
//! floating point — and every public computation is deterministic,
//! independently of the `parallel` feature and thread count.

pub mod belyi;
pub mod characters;
pub mod classify;
pub mod counting;
pub mod dessin;
pub mod par;
pub mod partition;
pub mod perm;
pub mod scheme;
pub mod series;
pub mod triples;
pub mod util;

pub use partition::{partitions_of, Partition};
pub use perm::Permutation;
pub use scheme::{enumerate_schemes, Scheme};
