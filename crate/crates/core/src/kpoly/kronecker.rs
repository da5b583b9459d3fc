//! Kronecker's method: factor a primitive integer polynomial by evaluating it
//! at small integers, interpolating every combination of divisors of the
//! values, and keeping the candidates that divide exactly.

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use super::KPoly;
use crate::arith;
use crate::error::{Error, Result};

/// Degree guard for direct calls to [`factor_q`].
pub const FACTOR_Q_MAX_DEGREE: usize = 8;

/// Internal degree guard; norm polynomials of degree-6 inputs reach 12.
pub(crate) const NORM_MAX_DEGREE: usize = 12;

const MAX_VALUE: u128 = 1_000_000_000_000_000_000;
const MAX_COMBINATIONS: u128 = 200_000_000;

/// `unit * prod factors`; factors are primitive integer polynomials with
/// positive leading coefficient, sorted, listed with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFactorization {
    pub unit: BigRational,
    pub factors: Vec<KPoly>,
}

impl QFactorization {
    pub fn expand(&self, d: i64) -> KPoly {
        KPoly::product(&self.factors, d).scale(&crate::kelem::KElem::rational(self.unit.clone(), d))
    }
}

/// Complete factorization over `Q` of a polynomial with rational coefficients.
pub fn factor_q(f: &KPoly) -> Result<QFactorization> {
    factor_q_bounded(f, FACTOR_Q_MAX_DEGREE)
}

pub(crate) fn factor_q_bounded(f: &KPoly, max_degree: usize) -> Result<QFactorization> {
    let coeffs = f
        .rational_coeffs()
        .ok_or_else(|| Error::Domain(format!("{f} has non-rational coefficients")))?;
    let deg = f
        .degree()
        .ok_or_else(|| Error::Domain("cannot factor the zero polynomial".into()))?;
    if deg > max_degree {
        return Err(Error::Resource(format!(
            "degree {deg} exceeds the Kronecker guard {max_degree}"
        )));
    }
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.last().is_some_and(|c| c.is_negative()) {
        content = -content;
    }
    let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    let unit = BigRational::new(content, lcm);
    let mut factors: Vec<KPoly> = if deg == 0 {
        Vec::new()
    } else {
        split(prim, 1)?
            .into_iter()
            .map(|g| to_kpoly(&g, f.d()))
            .collect()
    };
    factors.sort();
    Ok(QFactorization { unit, factors })
}

fn to_kpoly(g: &[BigInt], d: i64) -> KPoly {
    KPoly::from_rationals(
        g.iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect(),
        d,
    )
}

fn degree(f: &[BigInt]) -> usize {
    f.len() - 1
}

fn eval(f: &[BigInt], t: i64) -> BigInt {
    let t = BigInt::from(t);
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * &t + c)
}

/// Exact quotient in `Z[x]`, or `None` when `g` does not divide `f`.
fn exact_div(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let (n, m) = (degree(f), degree(g));
    if m > n {
        return None;
    }
    let mut rem = f.to_vec();
    let lead = &g[m];
    let mut quot = vec![BigInt::zero(); n - m + 1];
    for i in (0..=n - m).rev() {
        let (q, r) = rem[i + m].div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, b) in g.iter().enumerate() {
            rem[i + j] -= &q * b;
        }
        quot[i] = q;
    }
    rem.iter().all(|c| c.is_zero()).then_some(quot)
}

/// Splits a primitive polynomial with no factor of degree below `min_k`.
fn split(f: Vec<BigInt>, min_k: usize) -> Result<Vec<Vec<BigInt>>> {
    let n = degree(&f);
    if n <= 1 {
        return Ok(vec![f]);
    }
    for k in min_k.max(1)..=n / 2 {
        if let Some(g) = find_factor(&f, k)? {
            let q = exact_div(&f, &g).expect("candidate was verified to divide");
            let mut out = vec![g];
            out.extend(split(q, k)?);
            return Ok(out);
        }
    }
    Ok(vec![f])
}

fn evaluation_points() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..).flat_map(|t| [t, -t]))
}

/// Searches for a factor of degree exactly `k` (irreducible when no factor of
/// smaller degree exists).
fn find_factor(f: &[BigInt], k: usize) -> Result<Option<Vec<BigInt>>> {
    let mut points = Vec::with_capacity(k + 1);
    let mut values = Vec::with_capacity(k + 1);
    for t in evaluation_points().take(4 * (k + 1) + degree(f) + 2) {
        if points.len() == k + 1 {
            break;
        }
        let v = eval(f, t);
        if v.is_zero() {
            // x - t divides f.
            let g = vec![BigInt::from(-t), BigInt::one()];
            return Ok(Some(g));
        }
        let abs = v
            .abs()
            .to_u128()
            .filter(|&a| a <= MAX_VALUE)
            .ok_or_else(|| Error::Resource(format!("value f({t}) = {v} is too large to factor")))?;
        points.push(t as i128);
        values.push(abs);
    }
    let divisor_sets: Vec<Vec<i128>> = values
        .iter()
        .map(|&v| {
            arith::divisors_u128(v)
                .into_iter()
                .map(|x| x as i128)
                .collect()
        })
        .collect();
    let combos = divisor_sets.iter().enumerate().fold(1u128, |acc, (i, s)| {
        acc.saturating_mul(s.len() as u128 * if i == 0 { 1 } else { 2 })
    });
    if combos > MAX_COMBINATIONS {
        return Err(Error::Resource(format!(
            "Kronecker search for a degree-{k} factor needs {combos} interpolations"
        )));
    }

    // Lagrange basis: L_i = P_i / W_i with P_i = prod_{j != i} (x - t_j).
    let mut basis: Vec<Vec<i128>> = Vec::with_capacity(k + 1);
    let mut weights: Vec<i128> = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let mut p = vec![1i128];
        let mut w = 1i128;
        for j in 0..=k {
            if i == j {
                continue;
            }
            let mut next = vec![0i128; p.len() + 1];
            for (e, c) in p.iter().enumerate() {
                next[e + 1] += c;
                next[e] -= c * points[j];
            }
            p = next;
            w *= points[i] - points[j];
        }
        basis.push(p);
        weights.push(w);
    }
    let denom = weights
        .iter()
        .fold(1i128, |acc, w| acc / arith::gcd_i128(acc, *w) * w.abs());
    let scales: Vec<i128> = weights.iter().map(|w| denom / w).collect();
    let lead_f = f[degree(f)].clone();

    let mut search = Search {
        f,
        k,
        basis: &basis,
        scales: &scales,
        denom,
        divisor_sets: &divisor_sets,
        lead_f: &lead_f,
        found: None,
    };
    let mut acc = vec![0i128; k + 1];
    search.dfs(0, &mut acc);
    Ok(search.found)
}

struct Search<'a> {
    f: &'a [BigInt],
    k: usize,
    basis: &'a [Vec<i128>],
    scales: &'a [i128],
    denom: i128,
    divisor_sets: &'a [Vec<i128>],
    lead_f: &'a BigInt,
    found: Option<Vec<BigInt>>,
}

impl Search<'_> {
    fn dfs(&mut self, i: usize, acc: &mut Vec<i128>) {
        if self.found.is_some() {
            return;
        }
        if i == self.k + 1 {
            self.check(acc);
            return;
        }
        let signs: &[i128] = if i == 0 { &[1] } else { &[1, -1] };
        for &dv in &self.divisor_sets[i] {
            for &s in signs {
                let e = s * dv * self.scales[i];
                for (a, b) in acc.iter_mut().zip(&self.basis[i]) {
                    *a += e * b;
                }
                self.dfs(i + 1, acc);
                for (a, b) in acc.iter_mut().zip(&self.basis[i]) {
                    *a -= e * b;
                }
                if self.found.is_some() {
                    return;
                }
            }
        }
    }

    fn check(&mut self, acc: &[i128]) {
        if acc[self.k] == 0 || acc.iter().any(|c| c % self.denom != 0) {
            return;
        }
        let mut g: Vec<BigInt> = acc.iter().map(|c| BigInt::from(c / self.denom)).collect();
        if g[self.k].is_negative() {
            g.iter_mut().for_each(|c| *c = -c.clone());
        }
        if !(self.lead_f % &g[self.k]).is_zero() {
            return;
        }
        let content = g.iter().fold(BigInt::zero(), |a, c| a.gcd(c));
        if !content.is_one() {
            return;
        }
        if exact_div(self.f, &g).is_some() {
            self.found = Some(g);
        }
    }
}
