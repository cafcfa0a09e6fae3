use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b * sqrt(2)` with integer coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZSqrt2 {
    pub a: i128,
    pub b: i128,
}

impl ZSqrt2 {
    pub const ZERO: ZSqrt2 = ZSqrt2 { a: 0, b: 0 };
    pub const ONE: ZSqrt2 = ZSqrt2 { a: 1, b: 0 };
    pub const SQRT2: ZSqrt2 = ZSqrt2 { a: 0, b: 1 };

    pub fn int(a: i128) -> Self {
        ZSqrt2 { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

impl Add for ZSqrt2 {
    type Output = ZSqrt2;
    fn add(self, o: ZSqrt2) -> ZSqrt2 {
        ZSqrt2 { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for ZSqrt2 {
    type Output = ZSqrt2;
    fn sub(self, o: ZSqrt2) -> ZSqrt2 {
        ZSqrt2 { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for ZSqrt2 {
    type Output = ZSqrt2;
    fn neg(self) -> ZSqrt2 {
        ZSqrt2 { a: -self.a, b: -self.b }
    }
}

impl Mul for ZSqrt2 {
    type Output = ZSqrt2;
    fn mul(self, o: ZSqrt2) -> ZSqrt2 {
        ZSqrt2 {
            a: self.a * o.a + 2 * self.b * o.b,
            b: self.a * o.b + self.b * o.a,
        }
    }
}

impl fmt::Display for ZSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}r2"),
            (a, b) if b < 0 => write!(f, "{a}-{}r2", -b),
            (a, b) => write!(f, "{a}+{b}r2"),
        }
    }
}
