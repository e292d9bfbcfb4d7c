//! Exact rational arithmetic on checked 128-bit integers.
//!
//! Every value is kept normalized: positive denominator and
//! `gcd(|numerator|, denominator) = 1` after every operation. Arithmetic is
//! exact; overflow aborts with a panic instead of wrapping silently. The
//! quantities handled here (desk-scale fibration data) stay far below the
//! 128-bit limits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

fn checked(v: Option<i128>) -> i128 {
    v.expect("rational arithmetic overflow")
}

/// An exact fraction. Construct with [`Rational::new`] or via `From` on
/// integers; all operators normalize their result.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Builds `num/den` in lowest terms with a positive denominator.
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Rational {
        assert!(den != 0, "rational with zero denominator");
        let g = gcd(num, den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = checked(num.checked_neg());
            den = checked(den.checked_neg());
        }
        Rational { num, den }
    }

    pub fn from_integer(n: i128) -> Rational {
        Rational { num: n, den: 1 }
    }

    pub fn numerator(self) -> i128 {
        self.num
    }

    pub fn denominator(self) -> i128 {
        self.den
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// The exact integer value, or `None` if the fraction is proper.
    /// Callers that need an integer must check rather than round.
    pub fn as_integer(self) -> Option<i128> {
        (self.den == 1).then_some(self.num)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational::from_integer(n as i128)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Rational {
        Rational::from_integer(n as i128)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        let num = checked(
            checked(self.num.checked_mul(rhs.den))
                .checked_add(checked(rhs.num.checked_mul(self.den))),
        );
        Rational::new(num, checked(self.den.checked_mul(rhs.den)))
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational::new(
            checked(self.num.checked_mul(rhs.num)),
            checked(self.den.checked_mul(rhs.den)),
        )
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(rhs.num != 0, "division by zero rational");
        Rational::new(
            checked(self.num.checked_mul(rhs.den)),
            checked(self.den.checked_mul(rhs.num)),
        )
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: checked(self.num.checked_neg()),
            den: self.den,
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        // Denominators are positive, so cross multiplication preserves order.
        checked(self.num.checked_mul(other.den)).cmp(&checked(other.num.checked_mul(self.den)))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rational({self})")
    }
}
