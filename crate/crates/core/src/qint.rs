//! Arithmetic in the imaginary quadratic order `Z[w]`, `w = sqrt(d)`, `d < 0`.
//!
//! Elements are `a + b*w` with machine integers. The unit group is finite
//! (`{±1}` or, for `d = -1`, `{±1, ±w}`), so every associate class has a
//! canonical representative and norm equations can be enumerated exhaustively.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith;
use crate::error::{Error, Result};

/// Largest `|d|` accepted by [`RingCfg::new`].
pub const MAX_ABS_D: i64 = 100;

/// Class numbers of the maximal orders `Z[sqrt(d)]`, `d ≡ 2, 3 (mod 4)`,
/// squarefree, `-100 <= d <= -1`.
const CLASS_NUMBERS: &[(i64, u32)] = &[
    (-1, 1),
    (-2, 1),
    (-5, 2),
    (-6, 2),
    (-10, 2),
    (-13, 2),
    (-14, 4),
    (-17, 4),
    (-21, 4),
    (-22, 2),
    (-26, 6),
    (-29, 6),
    (-30, 4),
    (-33, 4),
    (-34, 4),
    (-37, 2),
    (-38, 6),
    (-41, 8),
    (-42, 4),
    (-46, 4),
    (-53, 6),
    (-57, 4),
    (-58, 2),
    (-61, 6),
    (-62, 8),
    (-65, 8),
    (-66, 8),
    (-69, 8),
    (-70, 4),
    (-73, 4),
    (-74, 10),
    (-77, 8),
    (-78, 4),
    (-82, 4),
    (-85, 4),
    (-86, 10),
    (-89, 12),
    (-93, 4),
    (-94, 8),
    (-97, 4),
];

/// Validated description of the order `Z[sqrt(d)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingCfg {
    d: i64,
    is_maximal: bool,
    class_number: Option<u32>,
    is_ufd: bool,
}

impl RingCfg {
    pub fn new(d: i64) -> Result<Self> {
        if d >= 0 {
            return Err(Error::Domain(format!("d = {d} must be negative")));
        }
        if -d > MAX_ABS_D {
            return Err(Error::Resource(format!(
                "|d| = {} exceeds the supported bound {MAX_ABS_D}",
                -d
            )));
        }
        if !arith::is_squarefree(d.unsigned_abs()) {
            return Err(Error::Domain(format!("d = {d} is not squarefree")));
        }
        let is_maximal = d.rem_euclid(4) != 1;
        let class_number = if is_maximal {
            CLASS_NUMBERS
                .iter()
                .find(|&&(dd, _)| dd == d)
                .map(|&(_, h)| h)
        } else {
            None
        };
        Ok(RingCfg {
            d,
            is_maximal,
            class_number,
            is_ufd: is_maximal && class_number == Some(1),
        })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_maximal(&self) -> bool {
        self.is_maximal
    }

    pub fn class_number(&self) -> Option<u32> {
        self.class_number
    }

    pub fn is_ufd(&self) -> bool {
        self.is_ufd
    }

    pub fn elem(&self, a: i64, b: i64) -> QuadInt {
        QuadInt::new(a, b, self.d)
    }

    pub fn int(&self, a: i64) -> QuadInt {
        QuadInt::new(a, 0, self.d)
    }

    pub fn zero(&self) -> QuadInt {
        self.int(0)
    }

    pub fn one(&self) -> QuadInt {
        self.int(1)
    }

    /// The unit group `U(R)`: exactly the elements of norm 1.
    pub fn units(&self) -> Vec<QuadInt> {
        units_of(self.d)
    }

    /// All elements of norm `n`, one canonical representative per associate
    /// class, in canonical order.
    pub fn elements_of_norm(&self, n: u64) -> Vec<QuadInt> {
        elements_of_norm(self.d, n)
    }

    /// Every element with `norm <= bound`, including zero and all associates.
    pub fn elements_up_to_norm(&self, bound: u64) -> Vec<QuadInt> {
        let abs_d = self.d.unsigned_abs();
        let bmax = arith::isqrt(bound / abs_d) as i64;
        let mut out = Vec::new();
        for b in -bmax..=bmax {
            let rest = bound - abs_d * (b * b) as u64;
            let amax = arith::isqrt(rest) as i64;
            for a in -amax..=amax {
                out.push(self.elem(a, b));
            }
        }
        out.sort();
        out
    }
}

/// An element `a + b*w` of `Z[sqrt(d)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub a: i64,
    pub b: i64,
    d: i64,
}

fn units_of(d: i64) -> Vec<QuadInt> {
    let mut u = vec![QuadInt::new(1, 0, d), QuadInt::new(-1, 0, d)];
    if d == -1 {
        u.push(QuadInt::new(0, 1, d));
        u.push(QuadInt::new(0, -1, d));
    }
    u
}

fn elements_of_norm(d: i64, n: u64) -> Vec<QuadInt> {
    if n == 0 {
        return vec![QuadInt::new(0, 0, d)];
    }
    let abs_d = d.unsigned_abs();
    let bmax = arith::isqrt(n / abs_d);
    let mut out: Vec<QuadInt> = Vec::new();
    for b in 0..=bmax {
        let rest = n - abs_d * b * b;
        if let Some(a) = arith::perfect_sqrt(rest) {
            let (a, b) = (a as i64, b as i64);
            for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(QuadInt::new(sa * a, sb * b, d).canonical());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn sign(x: i64) -> i64 {
    x.signum()
}

impl QuadInt {
    pub fn new(a: i64, b: i64, d: i64) -> Self {
        QuadInt { a, b, d }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn norm(&self) -> u64 {
        let n = (self.a as i128) * (self.a as i128)
            + (self.d.unsigned_abs() as i128) * (self.b as i128) * (self.b as i128);
        n as u64
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    pub fn conj(&self) -> Self {
        QuadInt::new(self.a, -self.b, self.d)
    }

    /// Exact quotient `self / y` when `y` divides `self` in `R`.
    ///
    /// Panics if `y` is zero.
    pub fn try_div(&self, y: &QuadInt) -> Option<QuadInt> {
        assert!(!y.is_zero(), "division by zero in Z[sqrt({})]", self.d);
        let n = y.norm() as i128;
        let p = *self * y.conj();
        let (pa, pb) = (p.a as i128, p.b as i128);
        if pa % n == 0 && pb % n == 0 {
            Some(QuadInt::new((pa / n) as i64, (pb / n) as i64, self.d))
        } else {
            None
        }
    }

    pub fn divides(&self, x: &QuadInt) -> bool {
        !self.is_zero() && x.try_div(self).is_some()
    }

    fn assoc_key(&self) -> (i64, i64, i64, i64) {
        (-sign(self.a), self.a.abs(), -sign(self.b), self.b.abs())
    }

    /// Canonical representative of the associate class of `self`.
    pub fn canonical(&self) -> QuadInt {
        units_of(self.d)
            .into_iter()
            .map(|u| u * *self)
            .min_by_key(|x| x.assoc_key())
            .expect("unit group is nonempty")
    }

    /// The unit `u` with `u * self == self.canonical()`.
    pub fn canonical_unit(&self) -> QuadInt {
        units_of(self.d)
            .into_iter()
            .min_by_key(|u| (*u * *self).assoc_key())
            .expect("unit group is nonempty")
    }

    pub fn is_associate(&self, other: &QuadInt) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn pow(&self, e: u32) -> QuadInt {
        (0..e).fold(QuadInt::new(1, 0, self.d), |acc, _| acc * *self)
    }

    /// Irreducibility in `R`: a nonunit with no divisor of intermediate norm.
    pub fn is_irreducible(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::Domain("irreducibility of zero is undefined".into()));
        }
        if self.is_unit() {
            return Ok(false);
        }
        let n = self.norm();
        for m in arith::divisors(n) {
            if m == 1 {
                continue;
            }
            if m.saturating_mul(m) > n {
                break;
            }
            if elements_of_norm(self.d, m)
                .iter()
                .any(|y| self.try_div(y).is_some())
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Primality of the principal ideal `(self)`.
    ///
    /// `R/(x)` is a domain exactly when its order `norm(x)` is a rational
    /// prime, or when `x` is an associate of a rational prime `p` for which
    /// `t^2 - d` stays irreducible mod `p`.
    pub fn is_prime(&self) -> Result<bool> {
        if self.is_zero() || self.is_unit() {
            return Err(Error::Domain(format!(
                "primality is only defined for nonzero nonunits, got {self}"
            )));
        }
        let n = self.norm();
        if arith::is_prime_u64(n) {
            return Ok(true);
        }
        let c = self.canonical();
        if c.b != 0 || c.a < 3 || !arith::is_prime_u64(c.a as u64) {
            return Ok(false);
        }
        Ok(arith::legendre(self.d, c.a as u64) == -1)
    }
}

impl Ord for QuadInt {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |x: &QuadInt| (x.norm(), x.b.abs(), x.b < 0, x.a.abs(), x.a < 0);
        key(self)
            .cmp(&key(other))
            .then_with(|| self.d.cmp(&other.d))
    }
}

impl PartialOrd for QuadInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: QuadInt) -> QuadInt {
        debug_assert_eq!(self.d, rhs.d);
        QuadInt::new(self.a + rhs.a, self.b + rhs.b, self.d)
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: QuadInt) -> QuadInt {
        debug_assert_eq!(self.d, rhs.d);
        QuadInt::new(self.a - rhs.a, self.b - rhs.b, self.d)
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt::new(-self.a, -self.b, self.d)
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: QuadInt) -> QuadInt {
        debug_assert_eq!(self.d, rhs.d);
        QuadInt::new(
            self.a * rhs.a + self.d * self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a,
            self.d,
        )
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::format_coords(self.a, self.b))
    }
}
