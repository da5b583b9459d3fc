//! Dense polynomials over `K = Q(sqrt(d))` and their complete factorization.
//!
//! Rational factorization uses Kronecker's interpolation method
//! ([`factor_q`]); factorization over `K` descends to it through the norm
//! polynomial ([`factor_k`]).

mod kronecker;
mod trager;

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, Integer, One};

use crate::kelem::KElem;

pub use kronecker::{factor_q, QFactorization, FACTOR_Q_MAX_DEGREE};
pub use trager::{factor_k, KFactorization, FACTOR_K_MAX_DEGREE, MAX_SHIFT};

/// Polynomial with coefficients in `K`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KPoly {
    coeffs: Vec<KElem>,
    d: i64,
}

impl KPoly {
    pub fn new(mut coeffs: Vec<KElem>, d: i64) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        KPoly { coeffs, d }
    }

    pub fn zero(d: i64) -> Self {
        KPoly {
            coeffs: Vec::new(),
            d,
        }
    }

    pub fn one(d: i64) -> Self {
        KPoly::constant(KElem::one(d))
    }

    pub fn constant(c: KElem) -> Self {
        let d = c.d();
        KPoly::new(vec![c], d)
    }

    /// The indeterminate `x`.
    pub fn x(d: i64) -> Self {
        KPoly::new(vec![KElem::zero(d), KElem::one(d)], d)
    }

    pub fn from_ints(coeffs: &[i64], d: i64) -> Self {
        KPoly::new(coeffs.iter().map(|&c| KElem::int(c, d)).collect(), d)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn coeffs(&self) -> &[KElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> KElem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| KElem::zero(self.d))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> KElem {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| KElem::zero(self.d))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_rational())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integral())
    }

    pub fn scale(&self, c: &KElem) -> Self {
        KPoly::new(self.coeffs.iter().map(|a| a * c).collect(), self.d)
    }

    pub fn monic(&self) -> Self {
        match self.leading().inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        KPoly::new(self.coeffs.iter().map(|a| -a).collect(), self.d)
    }

    pub fn add(&self, other: &KPoly) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        KPoly::new(
            (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect(),
            self.d,
        )
    }

    pub fn sub(&self, other: &KPoly) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &KPoly) -> Self {
        if self.is_zero() || other.is_zero() {
            return KPoly::zero(self.d);
        }
        let mut out = vec![KElem::zero(self.d); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        KPoly::new(out, self.d)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(KPoly::one(self.d), |acc, _| acc.mul(self))
    }

    pub fn product<'a>(polys: impl IntoIterator<Item = &'a KPoly>, d: i64) -> KPoly {
        polys.into_iter().fold(KPoly::one(d), |acc, p| acc.mul(p))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &KPoly) -> (KPoly, KPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = divisor
            .leading()
            .inv()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (KPoly::zero(self.d), self.clone());
        }
        let mut quot = vec![KElem::zero(self.d); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * b);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (KPoly::new(quot, self.d), KPoly::new(rem, self.d))
    }

    /// `self / divisor` when the division is exact in `K[x]`.
    pub fn exact_div(&self, divisor: &KPoly) -> Option<KPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn derivative(&self) -> Self {
        KPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &KElem::int(i as i64, self.d))
                .collect(),
            self.d,
        )
    }

    pub fn eval(&self, x: &KElem) -> KElem {
        self.coeffs
            .iter()
            .rev()
            .fold(KElem::zero(self.d), |acc, c| &(&acc * x) + c)
    }

    /// `f(x + c)`.
    pub fn shift(&self, c: &KElem) -> Self {
        let lin = KPoly::new(vec![c.clone(), KElem::one(self.d)], self.d);
        self.coeffs
            .iter()
            .rev()
            .fold(KPoly::zero(self.d), |acc, a| {
                acc.mul(&lin).add(&KPoly::constant(a.clone()))
            })
    }

    /// Coefficientwise conjugation `w -> -w`.
    pub fn conj(&self) -> Self {
        KPoly::new(self.coeffs.iter().map(|c| c.conj()).collect(), self.d)
    }

    /// Lowest index with a nonzero coefficient (the `x`-adic valuation).
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops the lowest `k` coefficients, i.e. divides by `x^k`.
    pub fn shift_down(&self, k: usize) -> Self {
        KPoly::new(self.coeffs.iter().skip(k).cloned().collect(), self.d)
    }

    /// Least common denominator of all coefficient coordinates.
    pub fn denominator(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator()))
    }

    /// Rational coefficients, when every coefficient lies in `Q`.
    pub fn rational_coeffs(&self) -> Option<Vec<BigRational>> {
        self.is_rational()
            .then(|| self.coeffs.iter().map(|c| c.u.clone()).collect())
    }

    pub fn from_rationals(coeffs: Vec<BigRational>, d: i64) -> Self {
        KPoly::new(
            coeffs.into_iter().map(|q| KElem::rational(q, d)).collect(),
            d,
        )
    }
}

/// Monic greatest common divisor over `K`; `gcd(0, 0)` is zero.
pub fn poly_gcd(f: &KPoly, g: &KPoly) -> KPoly {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Squarefree decomposition (Yun): monic `f = prod s_i^i`, returned as
/// `(s_i, i)` for the nonconstant parts.
pub fn squarefree_decomposition(f: &KPoly) -> Vec<(KPoly, u32)> {
    let f = f.monic();
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let df = f.derivative();
    let a = poly_gcd(&f, &df);
    let mut b = f.exact_div(&a).expect("gcd divides");
    let mut c = df.exact_div(&a).expect("gcd divides");
    let mut i = 1;
    loop {
        let dsub = c.sub(&b.derivative());
        if dsub.is_zero() {
            if !b.is_constant() {
                out.push((b.monic(), i));
            }
            break;
        }
        let s = poly_gcd(&b, &dsub);
        if !s.is_constant() {
            out.push((s.clone(), i));
        }
        b = b.exact_div(&s).expect("gcd divides");
        c = dsub.exact_div(&s).expect("gcd divides");
        i += 1;
        if b.is_constant() {
            break;
        }
    }
    out
}

pub fn is_squarefree(f: &KPoly) -> bool {
    poly_gcd(f, &f.derivative()).is_constant()
}

impl Ord for KPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for KPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", crate::text::format_poly_terms(&coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kelem::rat_frac;

    fn omega(d: i64) -> KElem {
        // (-1 + sqrt(d)) / 2
        KElem::new(rat_frac(-1, 2), rat_frac(1, 2), d)
    }

    #[test]
    fn gcd_examples() {
        let d = -3;
        let f = KPoly::from_ints(&[-1, 0, 1], d);
        let g = KPoly::from_ints(&[-1, 1], d);
        assert_eq!(poly_gcd(&f, &g), g);
        let h = KPoly::from_ints(&[1, 1, 1], d);
        let lin = KPoly::x(d).sub(&KPoly::constant(omega(d)));
        assert_eq!(h.eval(&omega(d)), KElem::zero(d));
        assert_eq!(poly_gcd(&h, &lin), lin);
        assert_eq!(poly_gcd(&h, &KPoly::one(d)), KPoly::one(d));
    }

    #[test]
    fn division_and_shift() {
        let d = -5;
        let f = KPoly::from_ints(&[3, 2, 2], d);
        let g = KPoly::from_ints(&[1, 1], d);
        let (q, r) = f.div_rem(&g);
        assert_eq!(q.mul(&g).add(&r), f);
        let c = KElem::sqrt_d(d);
        assert_eq!(f.shift(&c).shift(&-&c), f);
        assert_eq!(f.shift(&c).eval(&KElem::zero(d)), f.eval(&c));
    }

    #[test]
    fn squarefree_parts() {
        let d = -2;
        let a = KPoly::from_ints(&[1, 1], d);
        let b = KPoly::from_ints(&[-2, 0, 1], d);
        let f = a.pow(3).mul(&b).scale(&KElem::int(7, d));
        let parts = squarefree_decomposition(&f);
        assert_eq!(parts, vec![(b.clone(), 1), (a.clone(), 3)]);
        assert!(!is_squarefree(&f));
        assert!(is_squarefree(&b));
    }

    #[test]
    fn display_grammar() {
        let d = -5;
        assert_eq!(KPoly::from_ints(&[3, 2, 2], d).to_string(), "2*x^2+2*x+3");
        let p = KPoly::new(
            vec![
                KElem::new(rat_frac(1, 1), rat_frac(1, 1), d),
                KElem::int(2, d),
            ],
            d,
        );
        assert_eq!(p.to_string(), "2*x+(1+w)");
        assert_eq!(KPoly::x(d).to_string(), "x");
        assert_eq!(KPoly::zero(d).to_string(), "0");
    }
}
