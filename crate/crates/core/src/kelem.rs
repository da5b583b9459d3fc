//! Exact elements `u + v*w` of the quotient field `K = Q(sqrt(d))`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::qint::QuadInt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KElem {
    pub u: BigRational,
    pub v: BigRational,
    d: i64,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
pub(crate) fn rat_frac(n: i64, m: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(m))
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let m = q.denom().sqrt();
    (&n * &n == *q.numer() && &m * &m == *q.denom()).then(|| BigRational::new(n, m))
}

impl KElem {
    pub fn new(u: BigRational, v: BigRational, d: i64) -> Self {
        KElem { u, v, d }
    }

    pub fn zero(d: i64) -> Self {
        KElem::new(BigRational::zero(), BigRational::zero(), d)
    }

    pub fn one(d: i64) -> Self {
        KElem::int(1, d)
    }

    pub fn int(n: i64, d: i64) -> Self {
        KElem::new(rat(n), BigRational::zero(), d)
    }

    pub fn sqrt_d(d: i64) -> Self {
        KElem::new(BigRational::zero(), rat(1), d)
    }

    pub fn rational(q: BigRational, d: i64) -> Self {
        KElem::new(q, BigRational::zero(), d)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    /// Membership in the order `R = Z[w]`.
    pub fn is_integral(&self) -> bool {
        self.u.is_integer() && self.v.is_integer()
    }

    /// Field norm `u^2 - d v^2`.
    pub fn norm(&self) -> BigRational {
        &self.u * &self.u - rat(self.d) * &self.v * &self.v
    }

    pub fn conj(&self) -> Self {
        KElem::new(self.u.clone(), -self.v.clone(), self.d)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(KElem::new(&self.u / &n, -&self.v / &n, self.d))
    }

    pub fn checked_div(&self, rhs: &KElem) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    /// Least positive integer `m` with `m * self` integral.
    pub fn denominator(&self) -> BigInt {
        self.u.denom().lcm(self.v.denom())
    }

    /// Integral coordinates as a ring element, when they fit in `i64`.
    pub fn to_quad(&self) -> Option<QuadInt> {
        if !self.is_integral() {
            return None;
        }
        let a = self.u.to_integer().to_i64()?;
        let b = self.v.to_integer().to_i64()?;
        Some(QuadInt::new(a, b, self.d))
    }

    pub fn to_quad_checked(&self) -> Result<QuadInt> {
        self.to_quad().ok_or_else(|| {
            Error::Domain(format!("{self} is not an element of Z[sqrt({})]", self.d))
        })
    }

    /// A square root in `K`, if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        let d = self.d;
        if self.v.is_zero() {
            if let Some(s) = rational_sqrt(&self.u) {
                return Some(KElem::new(s, BigRational::zero(), d));
            }
            return rational_sqrt(&(&self.u / rat(d)))
                .map(|s| KElem::new(BigRational::zero(), s, d));
        }
        // (x + y w)^2 = x^2 + d y^2 + 2xy w, so x^2 = (u ± sqrt(norm)) / 2.
        let n = rational_sqrt(&self.norm())?;
        for t in [n.clone(), -n] {
            let x2 = (&self.u + &t) / rat(2);
            if let Some(x) = rational_sqrt(&x2) {
                if x.is_zero() {
                    continue;
                }
                let y = &self.v / (rat(2) * &x);
                let cand = KElem::new(x, y, d);
                if &cand * &cand == *self {
                    return Some(cand);
                }
            }
        }
        None
    }
}

impl From<QuadInt> for KElem {
    fn from(x: QuadInt) -> Self {
        KElem::new(rat(x.a), rat(x.b), x.d())
    }
}

impl From<&QuadInt> for KElem {
    fn from(x: &QuadInt) -> Self {
        KElem::from(*x)
    }
}

impl<'a> Add<&'a KElem> for &'a KElem {
    type Output = KElem;
    fn add(self, rhs: &KElem) -> KElem {
        debug_assert_eq!(self.d, rhs.d);
        KElem::new(&self.u + &rhs.u, &self.v + &rhs.v, self.d)
    }
}

impl<'a> Sub<&'a KElem> for &'a KElem {
    type Output = KElem;
    fn sub(self, rhs: &KElem) -> KElem {
        debug_assert_eq!(self.d, rhs.d);
        KElem::new(&self.u - &rhs.u, &self.v - &rhs.v, self.d)
    }
}

impl<'a> Mul<&'a KElem> for &'a KElem {
    type Output = KElem;
    fn mul(self, rhs: &KElem) -> KElem {
        debug_assert_eq!(self.d, rhs.d);
        let u = &self.u * &rhs.u + rat(self.d) * &self.v * &rhs.v;
        let v = &self.u * &rhs.v + &self.v * &rhs.u;
        KElem::new(u, v, self.d)
    }
}

impl Neg for &KElem {
    type Output = KElem;
    fn neg(self) -> KElem {
        KElem::new(-self.u.clone(), -self.v.clone(), self.d)
    }
}

impl Add for KElem {
    type Output = KElem;
    fn add(self, rhs: KElem) -> KElem {
        &self + &rhs
    }
}

impl Sub for KElem {
    type Output = KElem;
    fn sub(self, rhs: KElem) -> KElem {
        &self - &rhs
    }
}

impl Mul for KElem {
    type Output = KElem;
    fn mul(self, rhs: KElem) -> KElem {
        &self * &rhs
    }
}

impl Neg for KElem {
    type Output = KElem;
    fn neg(self) -> KElem {
        -&self
    }
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.denominator();
        let a = (&self.u * BigRational::from_integer(den.clone())).to_integer();
        let b = (&self.v * BigRational::from_integer(den.clone())).to_integer();
        let num = crate::text::format_big_coords(&a, &b);
        if den.is_one() {
            write!(f, "{num}")
        } else if b.is_zero() {
            write!(f, "{num}/{den}")
        } else {
            write!(f, "({num})/{den}")
        }
    }
}

pub(crate) fn rational_to_u64(q: &BigRational) -> Option<u64> {
    if !q.is_integer() {
        return None;
    }
    q.to_integer().to_u64()
}
