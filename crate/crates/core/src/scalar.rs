//! Exact scalars: arbitrary rationals by default, prime fields for the
//! brute-force operad searches.

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use std::fmt;

/// Exact rational scalar used throughout the algebra layers.
pub type Rat = Ratio<i64>;

/// Ring operations needed by linear combinations. Kept small on purpose:
/// polynomials only ever add, negate and multiply coefficients.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiply by a small natural number (shuffle multiplicities).
    fn mul_nat(&self, k: u32) -> Self;
}

impl Scalar for Rat {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_nat(&self, k: u32) -> Self {
        self * Rat::from_integer(i64::from(k))
    }
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Formats a rational as `n` or `n/d`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom() == &1 {
        format!("{}", r.numer())
    } else if r.is_negative() {
        format!("-{}/{}", -r.numer(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Element of the prime field F_p with a runtime modulus.
///
/// The modulus travels with the value; mixing moduli is a programming error
/// and panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let m = modulus as i64;
        Fp {
            value: (value.rem_euclid(m)) as u64,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Scalar for Fp {
    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Fp {
            value: (self.value + rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Fp {
            value: (self.value * rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn mul_nat(&self, k: u32) -> Self {
        Fp {
            value: (self.value * u64::from(k)) % self.modulus,
            modulus: self.modulus,
        }
    }
}
