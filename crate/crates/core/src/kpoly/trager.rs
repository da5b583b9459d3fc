//! Factorization over `K` by norm descent.
//!
//! For squarefree monic `s`, pick an integer `t` so that the norm
//! `N(x) = g(x) * conj(g)(x)` of `g(x) = s(x - t*w)` is squarefree in `Q[x]`.
//! Each rational irreducible factor `N_j` of `N` then meets `g` in exactly one
//! irreducible factor `gcd(g, N_j)`, and shifting back by `t*w` recovers the
//! factors of `s`.

use super::kronecker::{factor_q_bounded, NORM_MAX_DEGREE};
use super::{is_squarefree, poly_gcd, squarefree_decomposition, KPoly};
use crate::error::{Error, Result};
use crate::kelem::KElem;

/// Degree guard for [`factor_k`].
pub const FACTOR_K_MAX_DEGREE: usize = 6;

/// Largest shift tried before the descent gives up.
pub const MAX_SHIFT: i64 = 20;

/// `unit * prod factors` with monic irreducible factors over `K`, sorted and
/// listed with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KFactorization {
    pub unit: KElem,
    pub factors: Vec<KPoly>,
}

impl KFactorization {
    pub fn expand(&self) -> KPoly {
        KPoly::product(&self.factors, self.unit.d()).scale(&self.unit)
    }

    /// Irreducible over `K`: a single factor of multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn splits(&self) -> bool {
        self.factors.len() >= 2
    }

    /// Distinct factors with multiplicities, in sorted order.
    pub fn grouped(&self) -> Vec<(KPoly, usize)> {
        let mut out: Vec<(KPoly, usize)> = Vec::new();
        for f in &self.factors {
            match out.last_mut() {
                Some((g, m)) if g == f => *m += 1,
                _ => out.push((f.clone(), 1)),
            }
        }
        out
    }
}

/// Complete factorization of `f` over `K = Q(sqrt(d))`.
pub fn factor_k(f: &KPoly) -> Result<KFactorization> {
    let deg = f
        .degree()
        .ok_or_else(|| Error::Domain("cannot factor the zero polynomial".into()))?;
    if deg > FACTOR_K_MAX_DEGREE {
        return Err(Error::Resource(format!(
            "degree {deg} exceeds the K[x] factorization guard {FACTOR_K_MAX_DEGREE}"
        )));
    }
    let unit = f.leading();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        let pieces = factor_squarefree(&part)?;
        for _ in 0..mult {
            factors.extend(pieces.iter().cloned());
        }
    }
    factors.sort();
    Ok(KFactorization { unit, factors })
}

fn factor_squarefree(s: &KPoly) -> Result<Vec<KPoly>> {
    let d = s.d();
    let deg = s.degree().unwrap_or(0);
    if deg <= 1 {
        return Ok(vec![s.monic()]);
    }
    for t in 0..=MAX_SHIFT {
        let c = KElem::sqrt_d(d).scale_int(t);
        let g = s.shift(&-&c);
        let norm = g.mul(&g.conj());
        if !norm.is_rational() {
            return Err(Error::Internal(format!("norm of {g} is not rational")));
        }
        if !is_squarefree(&norm) {
            continue;
        }
        let rational = factor_q_bounded(&norm, NORM_MAX_DEGREE)?;
        let mut out = Vec::new();
        for nj in &rational.factors {
            let h = poly_gcd(&g, nj);
            if !h.is_constant() {
                out.push(h.shift(&c));
            }
        }
        let total: usize = out.iter().filter_map(|p| p.degree()).sum();
        if total != deg {
            return Err(Error::Internal(format!(
                "norm descent for {s} recovered degree {total} of {deg}"
            )));
        }
        return Ok(out);
    }
    Err(Error::Internal(format!(
        "no squarefree norm for {s} with shift up to {MAX_SHIFT}"
    )))
}

impl KElem {
    pub(crate) fn scale_int(&self, n: i64) -> KElem {
        self * &KElem::int(n, self.d())
    }
}
