use std::fmt;

use num_traits::{FromPrimitive, Num};

/// Coefficient field for Burnside-type linear combinations.
///
/// Exact work uses [`crate::Rational`]; `f64` is accepted for quick numeric
/// cross-checks but equality tests on it are only approximate.
pub trait Scalar: Num + Clone + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type represents every i64")
    }
}

impl<T> Scalar for T where T: Num + Clone + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn half<F: Scalar>() -> F {
        F::from_int(1) / F::from_int(2)
    }

    #[test]
    fn generic_half() {
        assert_eq!(half::<f64>(), 0.5);
        assert_eq!(half::<Rational>().to_string(), "1/2");
        assert_eq!(half::<num_rational::Rational64>(), num_rational::Rational64::new(1, 2));
    }
}
