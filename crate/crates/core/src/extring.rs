//! The subrings `D1 = R + xK[x]` and `D2 = R + Rx + x^2 K[x]` of `K[x]`.
//!
//! Units of both rings are the units of `R`. In `D1`, an element with
//! nonzero constant term `r` factors as `r * u(x)` with `u(0) = 1`, the
//! irreducible factors of `u` over `K` normalized to constant term 1 are
//! prime, and the constant part factors exactly as in `R`.
//!
//! An element with zero constant term has no factorization into
//! irreducibles in `D1` unless `R` is a field: `x * k(x) = r * (x * k(x) / r)`
//! for every nonzero nonunit `r`, so such elements are never atoms and keep
//! splitting off constants.

use std::collections::BTreeSet;

use num::rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{Elasticity, FactorizationSet, Factorizer};
use crate::ideals::common_nonunit_divisor;
use crate::kelem::KElem;
use crate::kpoly::{factor_k, KPoly};
use crate::qint::{QuadInt, RingCfg};
use crate::rpoly::lambda_candidates;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    D1,
    D2,
}

/// An element of `D1` or `D2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElem {
    poly: KPoly,
    level: Level,
    cfg: RingCfg,
}

impl ExtElem {
    /// Validates membership, naming the first coefficient outside `R`.
    pub fn new(poly: KPoly, level: Level, cfg: &RingCfg) -> Result<ExtElem> {
        if poly.d() != cfg.d() {
            return Err(Error::Domain(format!(
                "polynomial over d = {} used with d = {}",
                poly.d(),
                cfg.d()
            )));
        }
        let constrained = match level {
            Level::D1 => 1,
            Level::D2 => 2,
        };
        for i in 0..constrained {
            let c = poly.coeff(i);
            if !c.is_integral() {
                return Err(Error::Domain(format!(
                    "coefficient of x^{i} is {c}, which is not in Z[w] as {level:?} requires"
                )));
            }
        }
        Ok(ExtElem {
            poly,
            level,
            cfg: *cfg,
        })
    }

    pub fn poly(&self) -> &KPoly {
        &self.poly
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn cfg(&self) -> &RingCfg {
        &self.cfg
    }

    fn constant_term(&self) -> QuadInt {
        self.poly
            .coeff(0)
            .to_quad()
            .expect("membership was validated")
    }

    pub fn is_unit(&self) -> bool {
        self.poly.is_constant() && !self.poly.is_zero() && self.constant_term().is_unit()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum D1Class {
    Unit,
    /// A constant of `R`; irreducible and prime exactly as in `R`.
    Constant {
        irreducible: bool,
        prime: bool,
    },
    /// `u * (1 + x f(x))` with `1 + x f(x)` irreducible in `K[x]`; prime.
    OnePlusTail,
    Reducible,
    /// Zero constant term: divisible by every nonunit constant, so neither
    /// an atom nor a product of atoms.
    NotAtomic,
}

impl D1Class {
    pub fn is_irreducible(&self) -> bool {
        matches!(
            self,
            D1Class::OnePlusTail
                | D1Class::Constant {
                    irreducible: true,
                    ..
                }
        )
    }

    pub fn is_prime(&self) -> bool {
        matches!(
            self,
            D1Class::OnePlusTail | D1Class::Constant { prime: true, .. }
        )
    }
}

fn expect_level(g: &ExtElem, level: Level) -> Result<()> {
    if g.level != level {
        return Err(Error::Domain(format!(
            "expected an element of {level:?}, got {:?}",
            g.level
        )));
    }
    if g.poly.is_zero() {
        return Err(Error::Domain("the zero element".into()));
    }
    Ok(())
}

pub fn d1_classify(g: &ExtElem) -> Result<D1Class> {
    expect_level(g, Level::D1)?;
    let r = g.constant_term();
    if g.poly.is_constant() {
        if r.is_unit() {
            return Ok(D1Class::Unit);
        }
        return Ok(D1Class::Constant {
            irreducible: r.is_irreducible()?,
            prime: r.is_prime()?,
        });
    }
    if r.is_zero() {
        return Ok(D1Class::NotAtomic);
    }
    if !r.is_unit() {
        return Ok(D1Class::Reducible);
    }
    Ok(if factor_k(&g.poly)?.is_irreducible() {
        D1Class::OnePlusTail
    } else {
        D1Class::Reducible
    })
}

/// The factors of `u` over `K`, each scaled to constant term 1.
fn normalized_tail(u: &KPoly) -> Result<Vec<KPoly>> {
    if u.is_constant() {
        return Ok(Vec::new());
    }
    let mut out: Vec<KPoly> = factor_k(u)?
        .factors
        .iter()
        .map(|p| {
            let c0 = p
                .coeff(0)
                .inv()
                .expect("u(0) = 1 forces nonzero constant terms");
            p.scale(&c0)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Factorizations in `D1`, factors as polynomials over `K`.
pub fn d1_factorizations(g: &ExtElem) -> Result<FactorizationSet<KPoly>> {
    expect_level(g, Level::D1)?;
    if g.is_unit() {
        return Err(Error::Domain(format!("{} is a unit", g.poly)));
    }
    let r = g.constant_term();
    if r.is_zero() {
        return Err(Error::Domain(format!(
            "{} has zero constant term and no factorization into irreducibles of D1",
            g.poly
        )));
    }
    let inv = KElem::from(r).inv().expect("nonzero");
    let tail = normalized_tail(&g.poly.scale(&inv))?;
    let constant: Vec<Vec<QuadInt>> = if r.is_unit() {
        vec![Vec::new()]
    } else {
        Factorizer::new(&g.cfg).factorizations(&r)?.factorizations
    };
    let mut all = BTreeSet::new();
    for f in constant {
        let mut fac: Vec<KPoly> = f.iter().map(|c| KPoly::constant(KElem::from(c))).collect();
        fac.extend(tail.iter().cloned());
        fac.sort();
        all.insert(fac);
    }
    Ok(FactorizationSet {
        element: g.poly.clone(),
        factorizations: all.into_iter().collect(),
        complete: true,
    })
}

pub fn d1_elasticity(g: &ExtElem) -> Result<Elasticity> {
    Ok(d1_factorizations(g)?.elasticity())
}

/// Irreducibility in `D2` for degree at most 2.
///
/// A split with a constant factor `r` needs `r | a0` and `r | a1` in `R`.
/// A split into two linear factors keeps every coefficient of both factors
/// in `R`, so it needs `a2 ∈ R` and then is a factorization in `R[x]`.
pub fn d2_is_irreducible(g: &ExtElem) -> Result<bool> {
    expect_level(g, Level::D2)?;
    if g.is_unit() {
        return Err(Error::Domain(format!("{} is a unit", g.poly)));
    }
    let deg = g.poly.degree().unwrap_or(0);
    if deg > 2 {
        return Err(Error::Domain(format!(
            "irreducibility in D2 is only decided up to degree 2, got {deg}"
        )));
    }
    let a0 = g.constant_term();
    let a1 = g.poly.coeff(1).to_quad().expect("membership was validated");
    if deg == 0 {
        return a0.is_irreducible();
    }
    if a0.is_zero() && a1.is_zero() {
        return Ok(false);
    }
    if common_nonunit_divisor(&[a0, a1]).is_some() {
        return Ok(false);
    }
    if deg == 1 || !g.poly.coeff(2).is_integral() {
        return Ok(true);
    }
    let kf = factor_k(&g.poly)?;
    if kf.is_irreducible() {
        return Ok(true);
    }
    let lc = KPoly::constant(kf.unit.clone());
    for (i, l) in kf.factors.iter().enumerate() {
        let other = &kf.factors[1 - i];
        if !lambda_candidates(l, &other.mul(&lc)).is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verification of `(π^n + x)(π^n - x) = π^(2n) (1 - x^2/π^(2n))` in `D2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct D2WitnessReport {
    pub pi: String,
    pub n: u32,
    pub identity_holds: bool,
    pub factors_irreducible: bool,
    pub power_factorization_found: bool,
    pub identity_ok: bool,
    /// Lengths of the two displayed factorizations.
    pub lengths: (usize, usize),
    /// Length set of `π^(2n)` in `R`; each `ℓ` gives a factorization of
    /// length `ℓ + 1` of the product.
    pub pi_power_length_set: Vec<usize>,
    pub elasticity_lower_bound: Elasticity,
}

pub const D2_MAX_N: u32 = 6;

pub fn d2_witness_verify(pi: &QuadInt, n: u32) -> Result<D2WitnessReport> {
    let cfg = RingCfg::new(pi.d())?;
    if n == 0 || n > D2_MAX_N {
        return Err(Error::Domain(format!("n = {n} must lie in 1..={D2_MAX_N}")));
    }
    if pi.is_zero() || pi.is_unit() || !pi.is_irreducible()? {
        return Err(Error::Domain(format!("{pi} is not irreducible")));
    }
    let d = cfg.d();
    let pin = KElem::from(pi.pow(n));
    let pi2n = pi.pow(2 * n);
    let x = KPoly::x(d);
    let plus = KPoly::constant(pin.clone()).add(&x);
    let minus = KPoly::constant(pin).sub(&x);
    let inv = KElem::from(pi2n).inv().expect("nonzero");
    let tail = KPoly::one(d).sub(&x.mul(&x).scale(&inv));
    let identity_holds = plus.mul(&minus) == tail.scale(&KElem::from(pi2n));

    let mut factors_irreducible = true;
    for p in [&plus, &minus, &tail] {
        let e = ExtElem::new(p.clone(), Level::D2, &cfg)?;
        factors_irreducible &= d2_is_irreducible(&e)?;
    }
    let fs = Factorizer::new(&cfg).factorizations(&pi2n)?;
    let power = vec![pi.canonical(); 2 * n as usize];
    let power_factorization_found = fs.factorizations.contains(&power);
    let pi_power_length_set: Vec<usize> = fs.length_set().into_iter().collect();

    let long = 2 * n as usize + 1;
    Ok(D2WitnessReport {
        pi: pi.to_string(),
        n,
        identity_holds,
        factors_irreducible,
        power_factorization_found,
        identity_ok: identity_holds && factors_irreducible && power_factorization_found,
        lengths: (2, long),
        pi_power_length_set,
        elasticity_lower_bound: Elasticity::Finite(Ratio::new(long as u64, 2)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_kpoly;

    fn elem(s: &str, level: Level, d: i64) -> ExtElem {
        ExtElem::new(parse_kpoly(s, d).unwrap(), level, &RingCfg::new(d).unwrap()).unwrap()
    }

    #[test]
    fn membership() {
        let cfg = RingCfg::new(-5).unwrap();
        let e = ExtElem::new(parse_kpoly("1/2+x", -5).unwrap(), Level::D1, &cfg).unwrap_err();
        assert!(e.to_string().contains("x^0"));
        assert!(ExtElem::new(parse_kpoly("1+x/2", -5).unwrap(), Level::D1, &cfg).is_ok());
        let e = ExtElem::new(parse_kpoly("1+x/2", -5).unwrap(), Level::D2, &cfg).unwrap_err();
        assert!(e.to_string().contains("x^1"));
        assert!(ExtElem::new(parse_kpoly("1+x+x^2/3", -5).unwrap(), Level::D2, &cfg).is_ok());
    }

    #[test]
    fn classification() {
        assert_eq!(
            d1_classify(&elem("1+x", Level::D1, -5)).unwrap(),
            D1Class::OnePlusTail
        );
        assert_eq!(
            d1_classify(&elem("(1+w)+x/2", Level::D1, -5)).unwrap(),
            D1Class::Reducible
        );
        assert_eq!(
            d1_classify(&elem("81", Level::D1, -14)).unwrap(),
            D1Class::Constant {
                irreducible: false,
                prime: false
            }
        );
        assert_eq!(
            d1_classify(&elem("3", Level::D1, -14)).unwrap(),
            D1Class::Constant {
                irreducible: true,
                prime: false
            }
        );
        assert_eq!(
            d1_classify(&elem("x", Level::D1, -5)).unwrap(),
            D1Class::NotAtomic
        );
        assert_eq!(
            d1_classify(&elem("-1", Level::D1, -5)).unwrap(),
            D1Class::Unit
        );
        assert_eq!(
            d1_classify(&elem("1-x^2", Level::D1, -5)).unwrap(),
            D1Class::Reducible
        );
    }

    #[test]
    fn x_is_not_prime_in_d1() {
        // x = 2 * (x/2), and x divides (x/2)^2 = x * (x/4) but not x/2.
        let d = -5;
        let cfg = RingCfg::new(d).unwrap();
        let half = parse_kpoly("x/2", d).unwrap();
        let x = KPoly::x(d);
        assert_eq!(half.scale(&KElem::int(2, d)), x);
        let q = half.mul(&half).exact_div(&x).unwrap();
        assert!(ExtElem::new(q, Level::D1, &cfg).is_ok());
        let q = half.exact_div(&x).unwrap();
        assert!(ExtElem::new(q, Level::D1, &cfg).is_err());
    }

    #[test]
    fn d1_elasticities() {
        assert_eq!(
            d1_elasticity(&elem("81+x^2", Level::D1, -14)).unwrap(),
            Elasticity::ratio(5, 3)
        );
        let fs = d1_factorizations(&elem("81+x^2", Level::D1, -14)).unwrap();
        assert_eq!(fs.length_set(), BTreeSet::from([3, 5]));
        assert_eq!(
            d1_elasticity(&elem("1+x", Level::D1, -5)).unwrap(),
            Elasticity::ratio(1, 1)
        );
        let fs = d1_factorizations(&elem("6-6*x^2", Level::D1, -5)).unwrap();
        assert_eq!(fs.length_set(), BTreeSet::from([4]));
        assert_eq!(fs.factorizations.len(), 2);
        assert!(d1_factorizations(&elem("81*x", Level::D1, -14)).is_err());
    }

    #[test]
    fn d2_irreducibility() {
        for n in 1..=6 {
            let s = format!("2^{n}+x");
            assert!(d2_is_irreducible(&elem(&s, Level::D2, -5)).unwrap(), "{s}");
            let s = format!("1-x^2/4^{n}");
            assert!(d2_is_irreducible(&elem(&s, Level::D2, -5)).unwrap(), "{s}");
        }
        assert!(!d2_is_irreducible(&elem("x^2", Level::D2, -5)).unwrap());
        assert!(!d2_is_irreducible(&elem("x^2-1", Level::D2, -5)).unwrap());
        assert!(!d2_is_irreducible(&elem("2+2*x+x^2/3", Level::D2, -5)).unwrap());
        assert!(d2_is_irreducible(&elem("x^2+1", Level::D2, -5)).unwrap());
        assert!(d2_is_irreducible(&elem("x^3", Level::D2, -5)).is_err());
    }

    #[test]
    fn d2_witnesses() {
        let pi = QuadInt::new(2, 0, -5);
        for n in 1..=5u32 {
            let r = d2_witness_verify(&pi, n).unwrap();
            assert!(r.identity_ok);
            assert_eq!(r.lengths, (2, 2 * n as usize + 1));
            assert_eq!(
                r.elasticity_lower_bound,
                Elasticity::ratio(2 * n as u64 + 1, 2)
            );
        }
        let r = d2_witness_verify(&QuadInt::new(3, 0, -14), 2).unwrap();
        assert!(r.identity_ok);
        assert_eq!(r.lengths, (2, 5));
        assert_eq!(r.pi_power_length_set, vec![2, 4]);
        assert!(d2_witness_verify(&QuadInt::new(6, 0, -5), 1).is_err());
    }
}
