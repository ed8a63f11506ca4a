//! Semiring instances that the dense linear algebra is generic over.
//!
//! An instance is a value rather than a trait: matrices carry the instance they
//! were built over, the catalog is selectable by name at run time, and tests can
//! assemble deliberately broken instances to make sure the law checks notice.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::scalar::{ComplexScalar, Rational, UnitScalar};

/// Tolerance for complex equality, absolute and componentwise.
pub const COMPLEX_TOL: f64 = 1e-9;

pub const INSTANCE_NAMES: [&str; 6] =
    ["fuzz-mv", "max-min", "viterbi", "boolean", "probability", "complex"];

/// A named semiring: carrier predicate, addition, multiplication and the two
/// identities. Generic code only ever uses the roles (`zero`, `one`), never
/// the numerals.
#[derive(Clone)]
pub struct SemiringInstance<T> {
    name: &'static str,
    add: fn(&T, &T) -> T,
    mul: fn(&T, &T) -> T,
    zero: T,
    one: T,
    idempotent_add: bool,
    contains: fn(&T) -> bool,
    eq: fn(&T, &T) -> bool,
}

impl<T: Clone + PartialEq> SemiringInstance<T> {
    /// Assembles an instance whose carrier is the whole type and whose equality
    /// is `PartialEq`.
    pub fn custom(
        name: &'static str,
        add: fn(&T, &T) -> T,
        mul: fn(&T, &T) -> T,
        zero: T,
        one: T,
        idempotent_add: bool,
    ) -> Self {
        SemiringInstance {
            name,
            add,
            mul,
            zero,
            one,
            idempotent_add,
            contains: |_| true,
            eq: |a, b| a == b,
        }
    }
}

impl<T> SemiringInstance<T> {
    pub fn name(&self) -> &'static str {
        self.name
    }
}

impl<T: Clone> SemiringInstance<T> {
    pub fn with_carrier(mut self, contains: fn(&T) -> bool) -> Self {
        self.contains = contains;
        self
    }

    pub fn with_equality(mut self, eq: fn(&T, &T) -> bool) -> Self {
        self.eq = eq;
        self
    }

    pub fn add(&self, a: &T, b: &T) -> T {
        (self.add)(a, b)
    }

    pub fn mul(&self, a: &T, b: &T) -> T {
        (self.mul)(a, b)
    }

    pub fn zero(&self) -> T {
        self.zero.clone()
    }

    pub fn one(&self) -> T {
        self.one.clone()
    }

    pub fn is_idempotent(&self) -> bool {
        self.idempotent_add
    }

    pub fn contains(&self, a: &T) -> bool {
        (self.contains)(a)
    }

    pub fn eq(&self, a: &T, b: &T) -> bool {
        (self.eq)(a, b)
    }

    pub fn is_zero(&self, a: &T) -> bool {
        self.eq(a, &self.zero)
    }

    pub fn is_one(&self, a: &T) -> bool {
        self.eq(a, &self.one)
    }

    /// Semiring sum of a sequence; the empty sum is `zero`.
    pub fn sum<I: IntoIterator<Item = T>>(&self, items: I) -> T {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, &x))
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.name == other.name
    }

    /// `a ≤ b ⇔ a + b = b`. Only meaningful for idempotent addition.
    pub fn induced_order(&self, a: &T, b: &T) -> Result<bool, AlgebraError> {
        if !self.idempotent_add {
            return Err(AlgebraError::NotIdempotent(self.name.to_string()));
        }
        Ok(self.eq(&self.add(a, b), b))
    }
}

impl<T> fmt::Debug for SemiringInstance<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SemiringInstance").field("name", &self.name).finish()
    }
}

/// `([0,1], ∧, ⊕, 1, 0)`: addition is min, multiplication is truncated sum.
pub fn fuzz_mv() -> SemiringInstance<UnitScalar> {
    SemiringInstance::custom(
        "fuzz-mv",
        |a, b| a.wedge(*b),
        |a, b| a.oplus(*b),
        UnitScalar::ONE,
        UnitScalar::ZERO,
        true,
    )
}

pub fn max_min() -> SemiringInstance<UnitScalar> {
    SemiringInstance::custom(
        "max-min",
        |a, b| a.vee(*b),
        |a, b| a.wedge(*b),
        UnitScalar::ZERO,
        UnitScalar::ONE,
        true,
    )
}

pub fn viterbi() -> SemiringInstance<UnitScalar> {
    SemiringInstance::custom(
        "viterbi",
        |a, b| a.vee(*b),
        |a, b| a.times(*b),
        UnitScalar::ZERO,
        UnitScalar::ONE,
        true,
    )
}

/// `({0,1}, OR, AND, 0, 1)` carried on unit scalars.
pub fn boolean() -> SemiringInstance<UnitScalar> {
    SemiringInstance::custom(
        "boolean",
        |a, b| a.vee(*b),
        |a, b| a.wedge(*b),
        UnitScalar::ZERO,
        UnitScalar::ONE,
        true,
    )
    .with_carrier(|a| a.is_zero() || a.is_one())
}

/// Non-negative rationals under ordinary `+` and `·`.
pub fn probability() -> SemiringInstance<Rational> {
    SemiringInstance::custom(
        "probability",
        |a, b| a + b,
        |a, b| a * b,
        Rational::zero(),
        Rational::one(),
        false,
    )
    .with_carrier(|a| !a.is_negative())
}

pub fn complex() -> SemiringInstance<ComplexScalar> {
    SemiringInstance::custom(
        "complex",
        |a, b| a + b,
        |a, b| a * b,
        ComplexScalar::new(0.0, 0.0),
        ComplexScalar::new(1.0, 0.0),
        false,
    )
    .with_carrier(|a| a.re.is_finite() && a.im.is_finite())
    .with_equality(complex_close)
}

pub fn complex_close(a: &ComplexScalar, b: &ComplexScalar) -> bool {
    (a.re - b.re).abs() <= COMPLEX_TOL && (a.im - b.im).abs() <= COMPLEX_TOL
}

/// A catalog instance, tagged by carrier type.
#[derive(Debug, Clone)]
pub enum AnyInstance {
    Unit(SemiringInstance<UnitScalar>),
    Rational(SemiringInstance<Rational>),
    Complex(SemiringInstance<ComplexScalar>),
}

impl AnyInstance {
    pub fn name(&self) -> &'static str {
        match self {
            AnyInstance::Unit(s) => s.name(),
            AnyInstance::Rational(s) => s.name(),
            AnyInstance::Complex(s) => s.name(),
        }
    }
}

/// Looks up a catalog instance by name.
pub fn make_instance(name: &str) -> Result<AnyInstance, AlgebraError> {
    Ok(match name {
        "fuzz-mv" => AnyInstance::Unit(fuzz_mv()),
        "max-min" => AnyInstance::Unit(max_min()),
        "viterbi" => AnyInstance::Unit(viterbi()),
        "boolean" => AnyInstance::Unit(boolean()),
        "probability" => AnyInstance::Rational(probability()),
        "complex" => AnyInstance::Complex(complex()),
        other => return Err(AlgebraError::UnknownInstance(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(s: &str) -> UnitScalar {
        s.parse().unwrap()
    }

    fn grid() -> Vec<UnitScalar> {
        ["0", "1/4", "1/3", "1/2", "2/3", "3/4", "1"].iter().map(|s| u(s)).collect()
    }

    #[test]
    fn fuzz_mv_roles() {
        let s = fuzz_mv();
        assert_eq!(s.zero(), UnitScalar::ONE);
        assert_eq!(s.one(), UnitScalar::ZERO);
        for a in grid() {
            assert_eq!(s.add(&s.zero(), &a), a);
            assert_eq!(s.mul(&s.one(), &a), a);
            assert_eq!(s.mul(&a, &s.zero()), s.zero());
            assert_eq!(s.add(&a, &a), a);
        }
        assert!(!s.is_zero(&s.one()));
    }

    #[test]
    fn catalog_lookup() {
        for name in INSTANCE_NAMES {
            assert_eq!(make_instance(name).unwrap().name(), name);
        }
        assert!(matches!(make_instance("tropical"), Err(AlgebraError::UnknownInstance(_))));
        let AnyInstance::Unit(b) = make_instance("boolean").unwrap() else { panic!() };
        assert_eq!(b.add(&UnitScalar::ONE, &UnitScalar::ONE), UnitScalar::ONE);
        assert!(!b.contains(&UnitScalar::HALF));
        let AnyInstance::Unit(v) = make_instance("viterbi").unwrap() else { panic!() };
        assert_eq!(v.mul(&UnitScalar::HALF, &UnitScalar::HALF), u("1/4"));
    }

    #[test]
    fn induced_order_examples() {
        let f = fuzz_mv();
        // reversed relative to numeric order, since addition is min
        assert!(f.induced_order(&u("1/2"), &u("1/4")).unwrap());
        assert!(!f.induced_order(&u("1/4"), &u("1/2")).unwrap());
        assert!(max_min().induced_order(&u("1/4"), &u("1/2")).unwrap());
        for a in grid() {
            assert!(f.induced_order(&a, &a).unwrap());
            assert!(max_min().induced_order(&a, &a).unwrap());
        }
        let p = probability();
        assert!(matches!(
            p.induced_order(&Rational::one(), &Rational::one()),
            Err(AlgebraError::NotIdempotent(_))
        ));
    }

    #[test]
    fn complex_equality_is_tolerant() {
        let c = complex();
        let a = ComplexScalar::new(0.5, 0.0);
        assert!(c.eq(&a, &ComplexScalar::new(0.5 + 1e-10, -1e-10)));
        assert!(!c.eq(&a, &ComplexScalar::new(0.5 + 1e-8, 0.0)));
    }
}
