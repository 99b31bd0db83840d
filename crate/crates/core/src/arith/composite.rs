use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::quadratic::QuadraticNumber;
use super::rational::{format_rational, normalize_radical, rational_sqrt, Rational};

/// Element of `Q(x, y)` with `x^2 = d1`, `y^2 = d2`, stored as
/// `c0 + c1*x + c2*y + c3*x*y`.
///
/// A radicand equal to 1 means that generator is absent. The constructor folds
/// degenerate components (and the case `d1 == d2`) into the smaller field and
/// drops generators with zero coefficients, so the representation is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompositeNumber {
    d1: BigInt,
    d2: BigInt,
    c: [Rational; 4],
}

impl CompositeNumber {
    pub fn new(d1: BigInt, d2: BigInt, c: [Rational; 4]) -> Self {
        let [mut c0, mut c1, mut c2, mut c3] = c;
        let (mut d1, mut d2) = (d1, d2);
        if d1.is_one() {
            c0 += std::mem::take(&mut c1);
            c2 += std::mem::take(&mut c3);
        }
        if d2.is_one() {
            c0 += std::mem::take(&mut c2);
            c1 += std::mem::take(&mut c3);
        }
        if !d1.is_one() && d1 == d2 {
            // y = x, xy = d1
            c0 += Rational::from_integer(d1.clone()) * std::mem::take(&mut c3);
            c1 += std::mem::take(&mut c2);
            d2 = BigInt::one();
        }
        // drop generators that do not occur, so equality is equality of values
        if c1.is_zero() && c3.is_zero() {
            d1 = BigInt::one();
        }
        if c2.is_zero() && c3.is_zero() {
            d2 = BigInt::one();
        }
        if d1.is_one() && !d2.is_one() {
            std::mem::swap(&mut d1, &mut d2);
            std::mem::swap(&mut c1, &mut c2);
        }
        Self {
            d1,
            d2,
            c: [c0, c1, c2, c3],
        }
    }

    pub fn rational(q: Rational) -> Self {
        Self::new(
            BigInt::one(),
            BigInt::one(),
            [q, Rational::zero(), Rational::zero(), Rational::zero()],
        )
    }

    /// Embeds `a + b*sqrt(d)` into `Q(x, y)` where `sqrt(d) = x*y / g`
    /// and `d1*d2 = g^2 * d`.
    pub fn embed_product(q: &QuadraticNumber, d1: &BigInt, d2: &BigInt) -> Self {
        if q.is_rational() {
            return Self::rational(q.a().clone());
        }
        let g = d1.abs().gcd(&d2.abs());
        assert_eq!(d1 * d2, &g * &g * q.d(), "radicand does not match composite field");
        Self::new(
            d1.clone(),
            d2.clone(),
            [
                q.a().clone(),
                Rational::zero(),
                Rational::zero(),
                q.b() / Rational::from_integer(g),
            ],
        )
    }

    /// Embeds a quadratic number whose radical is the first generator.
    pub fn from_quadratic(q: &QuadraticNumber) -> Self {
        Self::new(
            q.d().clone(),
            BigInt::one(),
            [q.a().clone(), q.b().clone(), Rational::zero(), Rational::zero()],
        )
    }

    pub fn d1(&self) -> &BigInt {
        &self.d1
    }

    pub fn d2(&self) -> &BigInt {
        &self.d2
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    fn common_field(&self, other: &Self) -> (BigInt, BigInt) {
        let gens = |x: &Self| {
            let mut v = Vec::new();
            if !x.d1.is_one() {
                v.push(x.d1.clone());
            }
            if !x.d2.is_one() {
                v.push(x.d2.clone());
            }
            v
        };
        let (a, b) = (gens(self), gens(other));
        // Field is determined by the first operand with two generators, else the union.
        let mut all = if a.len() >= b.len() { a.clone() } else { b.clone() };
        for g in a.iter().chain(b.iter()) {
            if !all.contains(g) {
                all.push(g.clone());
            }
        }
        assert!(all.len() <= 2, "operands live in different composite fields");
        let one = BigInt::one();
        (
            all.first().cloned().unwrap_or_else(|| one.clone()),
            all.get(1).cloned().unwrap_or(one),
        )
    }

    /// Rewrites `self` over generators `(d1, d2)`; the generators of `self`
    /// must appear among them.
    fn lift(&self, d1: &BigInt, d2: &BigInt) -> [Rational; 4] {
        let z = Rational::zero;
        if &self.d1 == d1 && &self.d2 == d2 {
            return self.c.clone();
        }
        if &self.d1 == d2 && &self.d2 == d1 {
            return [self.c[0].clone(), self.c[2].clone(), self.c[1].clone(), self.c[3].clone()];
        }
        assert!(self.d2.is_one(), "cannot lift across fields");
        if self.d1.is_one() {
            return [self.c[0].clone(), z(), z(), z()];
        }
        if &self.d1 == d1 {
            [self.c[0].clone(), self.c[1].clone(), z(), z()]
        } else {
            assert_eq!(&self.d1, d2, "cannot lift across fields");
            [self.c[0].clone(), z(), self.c[1].clone(), z()]
        }
    }

    /// `(c0, c1, c2, c3)` over the given generators.
    pub fn coeffs_over(&self, d1: &BigInt, d2: &BigInt) -> [Rational; 4] {
        self.lift(d1, d2)
    }
}

impl fmt::Display for CompositeNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = [
            String::new(),
            format!("*sqrt({})", self.d1),
            format!("*sqrt({})", self.d2),
            format!("*sqrt({})*sqrt({})", self.d1, self.d2),
        ];
        let mut parts = Vec::new();
        for (c, n) in self.c.iter().zip(names.iter()) {
            if !c.is_zero() {
                parts.push(format!("{}{}", format_rational(c), n));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl<'a> Add<&'a CompositeNumber> for &'a CompositeNumber {
    type Output = CompositeNumber;
    fn add(self, rhs: &CompositeNumber) -> CompositeNumber {
        let (d1, d2) = self.common_field(rhs);
        let (a, b) = (self.lift(&d1, &d2), rhs.lift(&d1, &d2));
        let c = [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2], &a[3] + &b[3]];
        CompositeNumber::new(d1, d2, c)
    }
}

impl<'a> Sub<&'a CompositeNumber> for &'a CompositeNumber {
    type Output = CompositeNumber;
    fn sub(self, rhs: &CompositeNumber) -> CompositeNumber {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a CompositeNumber> for &'a CompositeNumber {
    type Output = CompositeNumber;
    fn mul(self, rhs: &CompositeNumber) -> CompositeNumber {
        let (d1, d2) = self.common_field(rhs);
        let (a, b) = (self.lift(&d1, &d2), rhs.lift(&d1, &d2));
        let p = Rational::from_integer(d1.clone());
        let q = Rational::from_integer(d2.clone());
        let pq = &p * &q;
        // basis 1, x, y, xy with x^2 = p, y^2 = q
        let c0 = &a[0] * &b[0] + &p * &a[1] * &b[1] + &q * &a[2] * &b[2] + &pq * &a[3] * &b[3];
        let c1 = &a[0] * &b[1] + &a[1] * &b[0] + &q * (&a[2] * &b[3] + &a[3] * &b[2]);
        let c2 = &a[0] * &b[2] + &a[2] * &b[0] + &p * (&a[1] * &b[3] + &a[3] * &b[1]);
        let c3 = &a[0] * &b[3] + &a[3] * &b[0] + &a[1] * &b[2] + &a[2] * &b[1];
        CompositeNumber::new(d1, d2, [c0, c1, c2, c3])
    }
}

impl Neg for CompositeNumber {
    type Output = CompositeNumber;
    fn neg(self) -> CompositeNumber {
        let [a, b, c, d] = self.c;
        CompositeNumber::new(self.d1, self.d2, [-a, -b, -c, -d])
    }
}

impl From<&QuadraticNumber> for CompositeNumber {
    fn from(q: &QuadraticNumber) -> Self {
        CompositeNumber::from_quadratic(q)
    }
}

/// Square root of `b = a + b*sqrt(d)` in a composite field when it does not lie in `Q(sqrt(d))`.
///
/// Returns `(root, nu_embedding)` where the second component maps elements of
/// `Q(sqrt(d))` into the same composite field, or `None` when the root has
/// degree four without being biquadratic.
pub fn composite_sqrt(value: &QuadraticNumber) -> Option<(CompositeNumber, EmbedField)> {
    if value.is_zero() {
        return Some((CompositeNumber::rational(Rational::zero()), EmbedField::Same));
    }
    if value.is_rational() {
        // sqrt(a) = t sqrt(e), adjoined as a second generator.
        let (t, e) = normalize_radical(value.a());
        let root = CompositeNumber::new(
            BigInt::one(),
            e.clone(),
            [Rational::zero(), Rational::zero(), t, Rational::zero()],
        );
        return Some((root, EmbedField::SecondGenerator(e)));
    }
    let two = Rational::from_integer(BigInt::from(2));
    let n = rational_sqrt(&value.norm())?;
    let u = (value.a() + &n) / &two;
    let v = (value.a() - &n) / &two;
    if u.is_zero() || v.is_zero() {
        return None;
    }
    let (t1, e1) = normalize_radical(&u);
    let (t2, e2) = normalize_radical(&v);
    if e1.is_one() || e2.is_one() || e1 == e2 {
        // the root would already lie in Q(sqrt(d))
        return None;
    }
    let g = e1.abs().gcd(&e2.abs());
    let sign = value.b() / (&two * &t1 * &t2 * Rational::from_integer(g.clone()));
    let root = CompositeNumber::new(
        e1.clone(),
        e2.clone(),
        [Rational::zero(), t1, &t2 * &sign, Rational::zero()],
    );
    Some((root, EmbedField::Product(e1, e2)))
}

/// How elements of `Q(sqrt(d))` sit inside the field produced by [`composite_sqrt`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbedField {
    Same,
    /// `sqrt(d)` stays the first generator, the root adds `sqrt(e)`.
    SecondGenerator(BigInt),
    /// `sqrt(d) = sqrt(e1) sqrt(e2) / gcd(e1, e2)`.
    Product(BigInt, BigInt),
}

impl EmbedField {
    pub fn embed(&self, q: &QuadraticNumber) -> CompositeNumber {
        match self {
            EmbedField::Same => CompositeNumber::from_quadratic(q),
            EmbedField::SecondGenerator(e) => {
                let base = CompositeNumber::from_quadratic(q);
                if base.is_rational() {
                    return base;
                }
                CompositeNumber::new(
                    q.d().clone(),
                    e.clone(),
                    [q.a().clone(), q.b().clone(), Rational::zero(), Rational::zero()],
                )
            }
            EmbedField::Product(e1, e2) => CompositeNumber::embed_product(q, e1, e2),
        }
    }
}
