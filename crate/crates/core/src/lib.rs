//! Finite rings, their one-sided ideals, and related tooling.

pub mod ideal;
pub mod opparse;
pub mod ring;
pub mod samples;
pub mod set;
pub mod sparse;
pub mod sublang;
pub mod viz;

pub use ideal::{IdealError, IdealKind, Side};
pub use ring::{AbelianGroup, Element, RingError, RingSpec};
pub use set::ElementSet;
