use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::composite::CompositeNumber;
use super::rational::{is_integer, lcm, Rational};
use crate::error::{Error, Result};

/// All integer points `base + k*step`, `k` in `Z`, of a line with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Progression {
    pub base: (BigInt, BigInt),
    pub step: (BigInt, BigInt),
}

impl Progression {
    pub fn point(&self, k: &BigInt) -> (BigInt, BigInt) {
        (
            &self.base.0 + k * &self.step.0,
            &self.base.1 + k * &self.step.1,
        )
    }

    /// `r*s` at parameter `k`.
    pub fn product(&self, k: &BigInt) -> BigInt {
        let (r, s) = self.point(k);
        r * s
    }

    /// Leading coefficient of `k -> r*s`; its sign tells which way products are bounded.
    pub fn curvature(&self) -> BigInt {
        &self.step.0 * &self.step.1
    }

    /// Integer nearest below the vertex of the parabola `k -> r*s`.
    pub fn vertex_floor(&self) -> BigInt {
        let (r0, s0) = &self.base;
        let (a, b) = &self.step;
        let num = -(r0 * b + s0 * a);
        let den = BigInt::from(2) * a * b;
        num.div_floor(&den)
    }

    /// Whether some point lies on an axis.
    pub fn crosses_axis(&self) -> bool {
        (&self.base.0 % &self.step.0).is_zero() || (&self.base.1 % &self.step.1).is_zero()
    }
}

/// Integer points found on `r + nu*s + beta = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerPoints {
    /// Points inside the window, ordered by `|r|` then `r`.
    pub points: Vec<(BigInt, BigInt)>,
    /// Present when `nu` and `beta` are rational and the line has integer points.
    pub family: Option<Progression>,
}

impl IntegerPoints {
    pub fn is_infinite(&self) -> bool {
        self.family.is_some()
    }
}

/// Integer points of `r + nu*s + beta = 0`.
///
/// Each composite-basis coefficient gives a rational linear equation in
/// `(r, s)`. When an irrational part of `nu` is nonzero `s` is forced and the
/// answer is finite and independent of `window`. When `nu` and `beta` are
/// rational the solutions form a progression; those with `|r| <= window` are
/// listed and the whole family is returned.
pub fn solve_line_integer_points(
    nu: &CompositeNumber,
    beta: &CompositeNumber,
    window: u64,
) -> Result<IntegerPoints> {
    if window == 0 {
        return Err(Error::InvalidWindow);
    }
    assert!(!nu.is_zero(), "nu vanishes only if 25 = 169");
    let (d1, d2) = field_of(nu, beta);
    let n = nu.coeffs_over(&d1, &d2);
    let b = beta.coeffs_over(&d1, &d2);

    let mut forced: Option<Rational> = None;
    for k in 1..4 {
        if n[k].is_zero() {
            if !b[k].is_zero() {
                return Ok(IntegerPoints { points: vec![], family: None });
            }
            continue;
        }
        let s = -&b[k] / &n[k];
        match &forced {
            Some(prev) if *prev != s => {
                return Ok(IntegerPoints { points: vec![], family: None });
            }
            _ => forced = Some(s),
        }
    }

    if let Some(s) = forced {
        let r = -&n[0] * &s - &b[0];
        let points = if is_integer(&s) && is_integer(&r) {
            vec![(r.to_integer(), s.to_integer())]
        } else {
            vec![]
        };
        return Ok(IntegerPoints { points, family: None });
    }

    let family = rational_progression(&n[0], &b[0]);
    let points = match &family {
        None => vec![],
        Some(p) => points_with_bounded_r(p, window),
    };
    Ok(IntegerPoints { points, family })
}

fn field_of(a: &CompositeNumber, b: &CompositeNumber) -> (BigInt, BigInt) {
    // the sum carries the joint generators
    let s = a + b;
    let pick = |x: &CompositeNumber| (x.d1().clone(), x.d2().clone());
    let candidates = [pick(a), pick(b), pick(&s)];
    candidates
        .into_iter()
        .max_by_key(|(p, q)| (!p.is_one()) as u8 + (!q.is_one()) as u8)
        .unwrap()
}

/// Integer solutions of `r + nu*s + beta = 0` for rational `nu != 0`.
pub fn rational_progression(nu: &Rational, beta: &Rational) -> Option<Progression> {
    // A r + B s + C = 0 with integers
    let l = lcm(nu.denom(), beta.denom());
    let a = l.clone();
    let b = (nu * Rational::from_integer(l.clone())).to_integer();
    let c = (beta * Rational::from_integer(l)).to_integer();
    let eg = a.extended_gcd(&b);
    let g = eg.gcd;
    if !(&c % &g).is_zero() {
        return None;
    }
    // a*x + b*y = g  =>  (r, s) = -(c/g) (x, y)
    let m = -(&c / &g);
    let base = (&eg.x * &m, &eg.y * &m);
    let step = (&b / &g, -(&a / &g));
    debug_assert!((&a * &base.0 + &b * &base.1 + &c).is_zero());
    Some(Progression { base, step })
}

fn points_with_bounded_r(p: &Progression, window: u64) -> Vec<(BigInt, BigInt)> {
    let w = BigInt::from(window);
    let p = if p.step.0.is_negative() {
        Progression {
            base: p.base.clone(),
            step: (-&p.step.0, -&p.step.1),
        }
    } else {
        p.clone()
    };
    // r = r0 + k*a with a > 0, |r| <= w
    let a = &p.step.0;
    let lo = (-&w - &p.base.0).div_ceil(a);
    let hi = (&w - &p.base.0).div_floor(a);
    let mut pts = Vec::new();
    let mut k = lo;
    while k <= hi {
        pts.push(p.point(&k));
        k += BigInt::one();
    }
    pts.sort_by(|x, y| x.0.abs().cmp(&y.0.abs()).then(x.0.cmp(&y.0)));
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::quadratic::QuadraticNumber;
    use crate::arith::rational::{int, rat};

    fn c(q: Rational) -> CompositeNumber {
        CompositeNumber::rational(q)
    }

    fn pairs(v: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        v.iter().map(|&(r, s)| (BigInt::from(r), BigInt::from(s))).collect()
    }

    #[test]
    fn rational_line_window_eight() {
        let res = solve_line_integer_points(&c(rat(-2, 3)), &c(rat(1, 3)), 8).unwrap();
        assert!(res.is_infinite());
        let mut expected = pairs(&[(-1, -1), (1, 2), (-3, -4), (3, 5), (-5, -7), (5, 8), (-7, -10), (7, 11)]);
        let mut got = res.points.clone();
        expected.sort();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn quadratic_line_single_point() {
        let d = BigInt::from(-23);
        let nu = QuadraticNumber::new(rat(-11, 12), rat(1, 12), d.clone());
        let beta = QuadraticNumber::new(rat(-1, 12), rat(-1, 12), d);
        for w in [1u64, 5, 100] {
            let res = solve_line_integer_points(&(&nu).into(), &(&beta).into(), w).unwrap();
            assert!(!res.is_infinite());
            assert_eq!(res.points, pairs(&[(1, 1)]));
        }
    }

    #[test]
    fn radical_mismatch_has_no_points() {
        // nu rational, beta = sqrt 2
        let beta = CompositeNumber::from_quadratic(&QuadraticNumber::sqrt_of(&int(2)));
        let res = solve_line_integer_points(&c(int(-1)), &beta, 10).unwrap();
        assert!(res.points.is_empty() && !res.is_infinite());
    }

    #[test]
    fn rational_line_without_points() {
        // r + 2s + 1/2 = 0
        let res = solve_line_integer_points(&c(int(2)), &c(rat(1, 2)), 10).unwrap();
        assert!(res.points.is_empty() && !res.is_infinite());
    }

    #[test]
    fn zero_window_rejected() {
        assert_eq!(
            solve_line_integer_points(&c(int(1)), &c(int(1)), 0),
            Err(Error::InvalidWindow)
        );
    }
}
