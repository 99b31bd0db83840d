use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, normalize_radical, rational_sqrt, Rational};

/// `a + b*sqrt(d)` with `d` squarefree; `d` is 1 exactly when `b` is zero.
///
/// Negative `d` is allowed. Only one square root of `d` is ever meant, so
/// arithmetic is that of the field `Q[x]/(x^2 - d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    a: Rational,
    b: Rational,
    d: BigInt,
}

impl QuadraticNumber {
    /// Builds `a + b*sqrt(d)`. `d` must be squarefree and not 1 unless `b` is zero.
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        if b.is_zero() || d.is_one() {
            let a = if d.is_one() { a + b } else { a };
            return Self::rational(a);
        }
        assert!(!d.is_zero(), "radicand must be nonzero");
        Self { a, b, d }
    }

    pub fn rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            d: BigInt::one(),
        }
    }

    /// `t*sqrt(r)` for an arbitrary rational `r`, normalising the radicand.
    pub fn sqrt_of(r: &Rational) -> Self {
        let (t, d) = normalize_radical(r);
        Self::new(Rational::zero(), t, d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Field radicand shared by two operands, panicking on a mismatch.
    fn common_d(&self, other: &Self) -> BigInt {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(self.d, other.d, "mixed quadratic fields");
                self.d.clone()
            }
        }
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone(), self.d.clone())
    }

    /// `a^2 - d b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(self.d.clone()) * &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Self::new(&c.a / &n, &c.b / &n, c.d))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.a * k, &self.b * k, self.d.clone())
    }

    /// Square root inside `Q(sqrt(d))`, extended for rational inputs to `Q(sqrt(within))`.
    ///
    /// For an irrational value the root must live in its own field. For a
    /// rational value the root is searched in `Q` and then in `Q(sqrt(within))`.
    /// The sign is normalised so that the leading nonzero coefficient is positive.
    pub fn sqrt_in(&self, within: &BigInt) -> Option<Self> {
        if self.is_rational() {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(Self::rational(r));
            }
            if within.is_one() || within.is_zero() {
                return None;
            }
            // a = v^2 d  =>  sqrt(a) = v sqrt(d)
            let v2 = &self.a / Rational::from_integer(within.clone());
            let v = rational_sqrt(&v2)?;
            return Some(Self::new(Rational::zero(), v, within.clone()));
        }
        // (u + v sqrt d)^2 = u^2 + d v^2 + 2uv sqrt d, norm(root)^2 = norm(self)
        let n = rational_sqrt(&self.norm())?;
        let two = Rational::from_integer(BigInt::from(2));
        for candidate in [(&self.a + &n) / &two, (&self.a - &n) / &two] {
            if candidate.is_zero() {
                continue;
            }
            if let Some(u) = rational_sqrt(&candidate) {
                let v = &self.b / (&two * &u);
                let root = Self::new(u, v, self.d.clone());
                if &root * &root == *self {
                    return Some(root.positive_branch());
                }
            }
        }
        None
    }

    /// Square root in the value's own field (rational roots only for rational input).
    pub fn sqrt(&self) -> Option<Self> {
        self.sqrt_in(&self.d.clone())
    }

    pub fn positive_branch(self) -> Self {
        if self.a.is_negative() || (self.a.is_zero() && self.b.is_negative()) {
            -self
        } else {
            self
        }
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", format_rational(&self.a));
        }
        write!(
            f,
            "{} + {}*sqrt({})",
            format_rational(&self.a),
            format_rational(&self.b),
            self.d
        )
    }
}

impl From<Rational> for QuadraticNumber {
    fn from(a: Rational) -> Self {
        Self::rational(a)
    }
}

impl<'a> Add<&'a QuadraticNumber> for &'a QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let d = self.common_d(rhs);
        QuadraticNumber::new(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl<'a> Sub<&'a QuadraticNumber> for &'a QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let d = self.common_d(rhs);
        QuadraticNumber::new(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl<'a> Mul<&'a QuadraticNumber> for &'a QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let d = self.common_d(rhs);
        let dq = Rational::from_integer(d.clone());
        QuadraticNumber::new(
            &self.a * &rhs.a + dq * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
            d,
        )
    }
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber::new(-self.a, -self.b, self.d)
    }
}

impl Add for QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: QuadraticNumber) -> QuadraticNumber {
        &self + &rhs
    }
}

impl Sub for QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: QuadraticNumber) -> QuadraticNumber {
        &self - &rhs
    }
}

impl Mul for QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: QuadraticNumber) -> QuadraticNumber {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use proptest::prelude::*;

    fn q(a: Rational, b: Rational, d: i64) -> QuadraticNumber {
        QuadraticNumber::new(a, b, BigInt::from(d))
    }

    #[test]
    fn sqrt_examples() {
        let b = q(int(3), int(2), 2);
        assert_eq!(b.sqrt(), Some(q(int(1), int(1), 2)));

        let ninth = QuadraticNumber::rational(rat(1, 9));
        assert_eq!(ninth.sqrt_in(&BigInt::from(5)), Some(QuadraticNumber::rational(rat(1, 3))));

        // u^2 + 3v^2 = 2, 2uv = 0 has no rational solution
        let two = QuadraticNumber::rational(int(2));
        assert_eq!(two.sqrt_in(&BigInt::from(3)), None);

        // 12 = (2 sqrt 3)^2
        let twelve = QuadraticNumber::rational(int(12));
        assert_eq!(twelve.sqrt_in(&BigInt::from(3)), Some(q(int(0), int(2), 3)));

        // negative radicand: (1 + sqrt(-23))^2 = -22 + 2 sqrt(-23)
        let c = q(int(-22), int(2), -23);
        let r = c.sqrt().unwrap();
        assert_eq!(&r * &r, c);
    }

    #[test]
    fn inverse_round_trip() {
        let x = q(rat(-11, 12), rat(1, 12), -23);
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, QuadraticNumber::rational(int(1)));
    }

    proptest! {
        #[test]
        fn sqrt_of_square_squares_back(
            an in -40i64..40, ad in 1i64..9, bn in -40i64..40, bd in 1i64..9,
            d in prop::sample::select(vec![-23i64, -7, -3, -1, 2, 3, 5, 6, 7, 10, 13])
        ) {
            let x = q(rat(an, ad), rat(bn, bd), d);
            let sq = &x * &x;
            let y = sq.sqrt_in(&BigInt::from(d)).expect("square must have a root");
            prop_assert_eq!(&y * &y, sq);
        }
    }
}
