//! Exact computations in the Burnside and slice Burnside algebras of small
//! finite groups: idempotents, deflation constants, B-groups, T-slices and
//! T°-slices, and the largest quotient T°-slice of a slice.
//!
//! Groups are explicit Cayley tables (order capped, 64 by default). All
//! arithmetic is exact; the linear-combination types are generic over a
//! [`Scalar`] coefficient type and default to [`Rational`].

pub mod bitset;
pub mod burnside;
pub mod error;
pub mod expr;
pub mod families;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod naming;
pub mod perm;
pub mod scalar;
pub mod slice;
pub mod verify;

pub use bitset::ElementSet;
pub use burnside::{beta, deflate_burnside, idempotent_e, is_b_group, m_constant, BurnsideElement};
pub use error::{Error, Result};
pub use expr::GroupExpr;
pub use families::{builtin, Family};
pub use group::{direct_product, group_from_generators, quotient_group, FiniteGroup, GroupMap, Subgroup, DEFAULT_ORDER_CAP};
pub use iso::are_isomorphic;
pub use lattice::{Quotient, RootedSubgroup, SubgroupLattice};
pub use naming::structure_name;
pub use perm::Permutation;
pub use scalar::Scalar;
pub use slice::{
    deflate_slice, is_slice_quotient, is_t_circ_slice, is_t_slice, m_circ, m_slice, slice_normalizer,
    slices_isomorphic, tau_circ, xi_idempotent, Slice, SliceBurnsideElement, SliceClasses, TauCirc,
};

/// Exact rational numbers over arbitrary-precision integers.
pub type Rational = num_rational::BigRational;
/// Burnside element with exact coefficients.
pub type ExactBurnsideElement = BurnsideElement<Rational>;
/// Burnside element with floating-point coefficients, for numeric cross-checks.
pub type FloatBurnsideElement = BurnsideElement<f64>;
/// Slice Burnside element with exact coefficients.
pub type ExactSliceBurnsideElement = SliceBurnsideElement<Rational>;
/// Slice Burnside element with floating-point coefficients.
pub type FloatSliceBurnsideElement = SliceBurnsideElement<f64>;
