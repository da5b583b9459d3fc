//! Polynomials over `R = Z[w]`: irreducibility in `R[x]`, complete
//! factorization enumeration and the search for failures of property (P).
//!
//! Any factorization `f = g h` in `R[x]` with both factors nonconstant
//! groups the `K[x]`-factors of `f` into two parts, `g = λ·prod(S)` for a
//! sub-multiset `S` and some `λ ∈ K`. Everything therefore reduces to the
//! finite search for admissible `λ` done by [`lambda_candidates`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num::{BigRational, Integer};

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::factor::{Elasticity, FactorizationSet, Factorizer};
use crate::ideals::common_nonunit_divisor;
use crate::kelem::{rational_to_u64, KElem};
use crate::kpoly::{factor_k, KFactorization, KPoly};
use crate::qint::{QuadInt, RingCfg};

/// Degree guard for irreducibility and factorization in `R[x]`.
pub const RX_MAX_DEGREE: usize = 6;

/// Largest coefficient norm accepted in `R[x]` searches.
pub const RX_MAX_COEFF_NORM: u64 = 1_000_000;

/// A polynomial with coefficients in `R`, lowest degree first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RPoly {
    coeffs: Vec<QuadInt>,
    d: i64,
}

impl RPoly {
    pub fn new(mut coeffs: Vec<QuadInt>, d: i64) -> Self {
        while coeffs.last().is_some_and(QuadInt::is_zero) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| c.d() == d));
        RPoly { coeffs, d }
    }

    pub fn zero(d: i64) -> Self {
        RPoly::new(Vec::new(), d)
    }

    pub fn constant(c: QuadInt) -> Self {
        RPoly::new(vec![c], c.d())
    }

    pub fn x(d: i64) -> Self {
        RPoly::new(vec![QuadInt::new(0, 0, d), QuadInt::new(1, 0, d)], d)
    }

    pub fn from_ints(coeffs: &[i64], d: i64) -> Self {
        RPoly::new(coeffs.iter().map(|&a| QuadInt::new(a, 0, d)).collect(), d)
    }

    /// `None` when some coefficient lies outside `R`.
    pub fn from_kpoly(p: &KPoly) -> Option<RPoly> {
        let coeffs = p
            .coeffs()
            .iter()
            .map(KElem::to_quad)
            .collect::<Option<Vec<_>>>()?;
        Some(RPoly::new(coeffs, p.d()))
    }

    pub fn to_kpoly(&self) -> KPoly {
        KPoly::new(self.coeffs.iter().map(KElem::from).collect(), self.d)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn coeffs(&self) -> &[QuadInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> QuadInt {
        self.coeffs
            .get(i)
            .copied()
            .unwrap_or_else(|| QuadInt::new(0, 0, self.d))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Units of `R[x]` are the units of `R`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_unit()
    }

    pub fn leading(&self) -> QuadInt {
        self.coeff(self.coeffs.len().saturating_sub(1))
    }

    pub fn mul(&self, other: &RPoly) -> RPoly {
        if self.is_zero() || other.is_zero() {
            return RPoly::zero(self.d);
        }
        let mut out = vec![QuadInt::new(0, 0, self.d); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + *a * *b;
            }
        }
        RPoly::new(out, self.d)
    }

    pub fn scale(&self, c: &QuadInt) -> RPoly {
        RPoly::new(self.coeffs.iter().map(|a| *a * *c).collect(), self.d)
    }

    pub fn product<'a>(polys: impl IntoIterator<Item = &'a RPoly>, d: i64) -> RPoly {
        polys
            .into_iter()
            .fold(RPoly::constant(QuadInt::new(1, 0, d)), |acc, p| acc.mul(p))
    }

    /// Exact quotient in `R[x]`.
    pub fn exact_div(&self, divisor: &RPoly) -> Option<RPoly> {
        let q = self.to_kpoly().exact_div(&divisor.to_kpoly())?;
        RPoly::from_kpoly(&q)
    }

    pub fn divides(&self, other: &RPoly) -> bool {
        other.exact_div(self).is_some()
    }

    /// The associate whose leading coefficient is canonical.
    pub fn canonical(&self) -> RPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().canonical_unit())
    }

    pub fn is_associate(&self, other: &RPoly) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    fn shift_down(&self, k: usize) -> RPoly {
        RPoly::new(self.coeffs[k..].to_vec(), self.d)
    }

    fn max_coeff_norm(&self) -> u64 {
        self.coeffs.iter().map(QuadInt::norm).max().unwrap_or(0)
    }
}

impl Ord for RPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for RPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_kpoly().fmt(f)
    }
}

/// Witness that `target = g * h` with `g = λ * prod(subset of K-factors)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupingCertificate {
    /// Indices into the sorted `K[x]` factor list; empty for a content split.
    pub subset: Vec<usize>,
    pub lambda: KElem,
    pub g: RPoly,
    pub h: RPoly,
}

impl GroupingCertificate {
    pub fn verify(&self, target: &RPoly) -> bool {
        self.g.mul(&self.h) == *target && !self.g.is_unit() && !self.h.is_unit()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityVerdict {
    pub irreducible: bool,
    pub certificate: Option<GroupingCertificate>,
    /// Number of `(subset, λ)` pairs examined.
    pub search_size: usize,
}

/// Every `λ ∈ K`, up to units of `R`, with `λ g0 ∈ R[x]` and `λ⁻¹ h0 ∈ R[x]`.
///
/// Fix the coefficient `c` of `g0` of least norm. Then `s = λ c ∈ R` and
/// `λ⁻¹ e ∈ R` for every coefficient `e` of `h0`, so the positive integer
/// `N(λ⁻¹ e) = N(c) N(e) / N(s)` forces `N(c) N(e) ∈ Z` and `N(s) | N(c) N(e)`.
/// Hence `N(s)` divides `G = gcd_e N(c) N(e)`, which is at most
/// `N(c) · min_e N(e)`. Enumerating `s` over the norms dividing `G` and
/// checking both containments directly is sound and complete.
pub fn lambda_candidates(g0: &KPoly, h0: &KPoly) -> Vec<KElem> {
    if g0.is_zero() || h0.is_zero() {
        return Vec::new();
    }
    let d = g0.d();
    let cfg = RingCfg::new(d).expect("polynomials carry a valid d");
    let c = g0
        .coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .min_by(|a, b| a.norm().cmp(&b.norm()))
        .expect("nonzero polynomial")
        .clone();
    let nc = c.norm();
    let mut g = 0u64;
    for e in h0.coeffs().iter().filter(|e| !e.is_zero()) {
        let prod = &nc * e.norm();
        if !prod.is_integer() {
            return Vec::new();
        }
        let Some(p) = rational_to_u64(&prod) else {
            return Vec::new();
        };
        g = g.gcd(&p);
    }
    let min_e = h0
        .coeffs()
        .iter()
        .filter(|e| !e.is_zero())
        .map(KElem::norm)
        .min()
        .expect("nonzero polynomial");
    let bound = &nc * &min_e;
    let mut out = Vec::new();
    for n in divisors(g) {
        debug_assert!(BigRational::from_integer(n.into()) <= bound);
        for s in cfg.elements_of_norm(n) {
            let lambda = KElem::from(s).checked_div(&c).expect("c is nonzero");
            let inv = lambda.inv().expect("s is nonzero");
            if g0.scale(&lambda).is_integral() && h0.scale(&inv).is_integral() {
                out.push(lambda);
            }
        }
    }
    out.sort();
    out
}

fn check_rx_input(f: &RPoly) -> Result<()> {
    if f.is_zero() || f.is_unit() {
        return Err(Error::Domain(format!("{f} is zero or a unit")));
    }
    let deg = f.degree().unwrap_or(0);
    if deg > RX_MAX_DEGREE {
        return Err(Error::Resource(format!(
            "degree {deg} exceeds the R[x] guard {RX_MAX_DEGREE}"
        )));
    }
    if f.max_coeff_norm() > RX_MAX_COEFF_NORM {
        return Err(Error::Resource(format!(
            "coefficient norm {} exceeds the R[x] guard {RX_MAX_COEFF_NORM}",
            f.max_coeff_norm()
        )));
    }
    Ok(())
}

/// Sub-multisets of a multiset given as multiplicities, as count vectors.
fn sub_multisets(mults: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &m in mults {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=m).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

struct Grouping {
    subset: Vec<usize>,
    g0: KPoly,
    h0: KPoly,
}

/// The nonempty groupings of the `K`-factors of `f`, with `g0` the monic
/// grouped product and `h0 = f / g0`. The full grouping is included when
/// `include_full` is set.
fn groupings(kf: &KFactorization, include_full: bool) -> Vec<Grouping> {
    let grouped = kf.grouped();
    let mults: Vec<usize> = grouped.iter().map(|g| g.1).collect();
    let total: usize = mults.iter().sum();
    let d = kf.unit.d();
    let mut out = Vec::new();
    for counts in sub_multisets(&mults) {
        let size: usize = counts.iter().sum();
        if size == 0 || (size == total && !include_full) {
            continue;
        }
        let mut g0 = KPoly::one(d);
        let mut h0 = KPoly::constant(kf.unit.clone());
        let mut subset = Vec::new();
        let mut idx = 0;
        for ((p, m), &k) in grouped.iter().zip(&counts) {
            for j in 0..*m {
                if j < k {
                    g0 = g0.mul(p);
                    subset.push(idx);
                } else {
                    h0 = h0.mul(p);
                }
                idx += 1;
            }
        }
        out.push(Grouping { subset, g0, h0 });
    }
    out
}

fn constant_split(c: &QuadInt) -> Result<Option<(QuadInt, QuadInt)>> {
    let cfg = RingCfg::new(c.d())?;
    let n = c.norm();
    for m in divisors(n) {
        if m == 1 || m == n {
            continue;
        }
        for p in cfg.elements_of_norm(m) {
            if let Some(q) = c.try_div(&p) {
                return Ok(Some((p, q)));
            }
        }
    }
    Ok(None)
}

/// Decides irreducibility in `R[x]`, with a certificate when reducible.
pub fn is_irreducible_rx(f: &RPoly) -> Result<IrreducibilityVerdict> {
    check_rx_input(f)?;
    if f.is_constant() {
        let c = f.coeff(0);
        let split = constant_split(&c)?;
        debug_assert_eq!(split.is_none(), c.is_irreducible()?);
        return Ok(IrreducibilityVerdict {
            irreducible: split.is_none(),
            certificate: split.map(|(p, q)| GroupingCertificate {
                subset: Vec::new(),
                lambda: KElem::from(p),
                g: RPoly::constant(p),
                h: RPoly::constant(q),
            }),
            search_size: 1,
        });
    }
    if let Some(c) = common_nonunit_divisor(f.coeffs()) {
        let h = f.exact_div(&RPoly::constant(c)).expect("common divisor");
        return Ok(IrreducibilityVerdict {
            irreducible: false,
            certificate: Some(GroupingCertificate {
                subset: Vec::new(),
                lambda: KElem::from(c),
                g: RPoly::constant(c),
                h,
            }),
            search_size: 1,
        });
    }
    let kf = factor_k(&f.to_kpoly())?;
    let mut search_size = 1;
    for grp in groupings(&kf, false) {
        search_size += 1;
        if let Some(lambda) = lambda_candidates(&grp.g0, &grp.h0).into_iter().next() {
            let inv = lambda.inv().expect("nonzero");
            let g = RPoly::from_kpoly(&grp.g0.scale(&lambda)).expect("checked integral");
            let h = RPoly::from_kpoly(&grp.h0.scale(&inv)).expect("checked integral");
            let cert = GroupingCertificate {
                subset: grp.subset.clone(),
                lambda,
                g,
                h,
            };
            debug_assert!(cert.verify(f));
            return Ok(IrreducibilityVerdict {
                irreducible: false,
                certificate: Some(cert),
                search_size,
            });
        }
    }
    Ok(IrreducibilityVerdict {
        irreducible: true,
        certificate: None,
        search_size,
    })
}

/// Complete enumeration of the irreducible factorizations of `f` in `R[x]`,
/// factors in canonical associate form.
pub fn factorizations_rx(f: &RPoly) -> Result<FactorizationSet<RPoly>> {
    check_rx_input(f)?;
    let d = f.d();
    let cfg = RingCfg::new(d)?;
    let v = f.x_valuation();
    let rest = f.shift_down(v);
    let xs = vec![RPoly::x(d); v];
    let mut engine = RxEngine {
        factorizer: Factorizer::new(&cfg),
        memo: HashMap::new(),
    };
    let base: Vec<Vec<RPoly>> = if rest.is_unit() {
        vec![Vec::new()]
    } else {
        engine.facts(&rest.canonical())?
    };
    let mut all: BTreeSet<Vec<RPoly>> = BTreeSet::new();
    for mut fac in base {
        fac.extend(xs.iter().cloned());
        fac.sort();
        all.insert(fac);
    }
    Ok(FactorizationSet {
        element: f.clone(),
        factorizations: all.into_iter().collect(),
        complete: true,
    })
}

pub fn elasticity_rx(f: &RPoly) -> Result<Elasticity> {
    Ok(factorizations_rx(f)?.elasticity())
}

struct RxEngine {
    factorizer: Factorizer,
    memo: HashMap<RPoly, Vec<Vec<RPoly>>>,
}

impl RxEngine {
    /// Factorizations of a canonical nonzero nonunit `p` with `p(0) != 0`.
    fn facts(&mut self, p: &RPoly) -> Result<Vec<Vec<RPoly>>> {
        if let Some(f) = self.memo.get(p) {
            return Ok(f.clone());
        }
        let out: Vec<Vec<RPoly>> = if p.is_constant() {
            self.factorizer
                .factorizations(&p.coeff(0))?
                .factorizations
                .into_iter()
                .map(|f| f.into_iter().map(RPoly::constant).collect())
                .collect()
        } else {
            let mut found: BTreeSet<Vec<RPoly>> = BTreeSet::new();
            for q in self.irreducible_divisors(p)? {
                let quot = p.exact_div(&q).expect("candidate divides");
                if quot.is_unit() {
                    found.insert(vec![q]);
                    continue;
                }
                for mut rest in self.facts(&quot.canonical())? {
                    rest.push(q.clone());
                    rest.sort();
                    found.insert(rest);
                }
            }
            found.into_iter().collect()
        };
        self.memo.insert(p.clone(), out.clone());
        Ok(out)
    }

    /// Canonical irreducible divisors of a nonconstant `p`.
    fn irreducible_divisors(&mut self, p: &RPoly) -> Result<Vec<RPoly>> {
        let mut out: BTreeSet<RPoly> = BTreeSet::new();
        let g = p
            .coeffs()
            .iter()
            .filter(|c| !c.is_zero())
            .fold(0u64, |acc, c| acc.gcd(&c.norm()));
        for m in divisors(g).into_iter().skip(1) {
            for pi in self.factorizer.atoms_of_norm(m).iter() {
                if p.coeffs().iter().all(|c| pi.divides(c)) {
                    out.insert(RPoly::constant(*pi));
                }
            }
        }
        let kf = factor_k(&p.to_kpoly())?;
        for grp in groupings(&kf, true) {
            for lambda in lambda_candidates(&grp.g0, &grp.h0) {
                let q = RPoly::from_kpoly(&grp.g0.scale(&lambda)).expect("checked integral");
                if is_irreducible_rx(&q)?.irreducible {
                    out.insert(q.canonical());
                }
            }
        }
        Ok(out.into_iter().collect())
    }
}

/// First polynomial in canonical order with coefficient norms at most
/// `max_norm` and degree at most `max_deg` that is irreducible in `R[x]` but
/// splits over `K`.
///
/// Candidates have a canonical leading coefficient, nonzero constant term and
/// degree at least 2 (linear polynomials never split over `K`); they are
/// ordered by degree, then total coefficient norm, then coefficients from the
/// top down.
pub fn property_p_witness(cfg: &RingCfg, max_norm: u64, max_deg: usize) -> Result<Option<RPoly>> {
    if max_deg > 4 {
        return Err(Error::Resource(format!("degree bound {max_deg} exceeds 4")));
    }
    if max_norm > RX_MAX_COEFF_NORM {
        return Err(Error::Resource(format!(
            "norm bound {max_norm} exceeds {RX_MAX_COEFF_NORM}"
        )));
    }
    let d = cfg.d();
    let pool = cfg.elements_up_to_norm(max_norm);
    let nonzero: Vec<QuadInt> = pool.iter().copied().filter(|c| !c.is_zero()).collect();
    let leads: Vec<QuadInt> = nonzero
        .iter()
        .copied()
        .filter(|c| c.canonical() == *c)
        .collect();
    for deg in 2..=max_deg {
        let mut cands: Vec<(u64, RPoly)> = Vec::new();
        let mut stack: Vec<Vec<QuadInt>> = nonzero.iter().map(|c| vec![*c]).collect();
        // Build coefficient vectors from the constant term upwards.
        while let Some(v) = stack.pop() {
            if v.len() == deg {
                for l in &leads {
                    let mut c = v.clone();
                    c.push(*l);
                    let weight = c.iter().map(QuadInt::norm).sum();
                    cands.push((weight, RPoly::new(c, d)));
                }
                continue;
            }
            for c in &pool {
                let mut w = v.clone();
                w.push(*c);
                stack.push(w);
            }
        }
        cands.sort();
        for (_, f) in cands {
            if splits_over_k(&f)? && is_irreducible_rx(&f)?.irreducible {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}

fn splits_over_k(f: &RPoly) -> Result<bool> {
    if f.degree() == Some(2) {
        let [c, b, a] = [f.coeff(0), f.coeff(1), f.coeff(2)].map(KElem::from);
        let disc = &(&b * &b) - &(&KElem::int(4, f.d()) * &(&a * &c));
        return Ok(disc.sqrt().is_some());
    }
    Ok(factor_k(&f.to_kpoly())?.splits())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_kpoly, parse_rpoly};

    fn rp(s: &str, d: i64) -> RPoly {
        parse_rpoly(s, d).unwrap()
    }

    fn kp(s: &str, d: i64) -> KPoly {
        parse_kpoly(s, d).unwrap()
    }

    #[test]
    fn lambda_examples() {
        let g0 = kp("x-(-1+w)/2", -3);
        let h0 = kp("x-(-1-w)/2", -3);
        assert!(lambda_candidates(&g0, &h0).is_empty());
        let g0 = kp("2*(x-(-1+w)/2)", -3);
        let h0 = kp("2*(x-(-1-w)/2)", -3);
        assert!(lambda_candidates(&g0, &h0).contains(&KElem::one(-3)));
        let m = kp("x+w", -5);
        assert_eq!(lambda_candidates(&m, &kp("x-3", -5)), vec![KElem::one(-5)]);
    }

    #[test]
    fn irreducibility_examples() {
        let v = is_irreducible_rx(&rp("2*x^2+2*x+3", -5)).unwrap();
        assert!(v.irreducible);
        assert!(factor_k(&kp("2*x^2+2*x+3", -5)).unwrap().splits());
        assert!(is_irreducible_rx(&rp("x^2+x+1", -3)).unwrap().irreducible);
        let v = is_irreducible_rx(&rp("81*x", -14)).unwrap();
        assert!(!v.irreducible);
        let cert = v.certificate.unwrap();
        assert!(cert.verify(&rp("81*x", -14)));
        assert_eq!(cert.g, RPoly::constant(QuadInt::new(3, 0, -14)));
        let v = is_irreducible_rx(&rp("4*x^2+4*x+4", -3)).unwrap();
        assert!(!v.irreducible);
        let v = is_irreducible_rx(&rp("x^2-1", -5)).unwrap();
        assert!(v.certificate.unwrap().verify(&rp("x^2-1", -5)));
        assert!(is_irreducible_rx(&rp("0", -5)).is_err());
        assert!(is_irreducible_rx(&rp("x^7+1", -5)).is_err());
    }

    #[test]
    fn factorizations_of_81x() {
        let fs = factorizations_rx(&rp("81*x", -14)).unwrap();
        assert_eq!(fs.length_set(), BTreeSet::from([3, 5]));
        assert_eq!(fs.factorizations.len(), 2);
        assert_eq!(fs.elasticity(), Elasticity::ratio(5, 3));
    }

    #[test]
    fn factorizations_over_minus_5() {
        let fs = factorizations_rx(&rp("4*x^2+4*x+6", -5)).unwrap();
        let want: BTreeSet<Vec<RPoly>> = [
            vec![rp("2", -5), rp("2*x^2+2*x+3", -5)],
            vec![rp("2*x+1+w", -5), rp("2*x+1-w", -5)],
        ]
        .into_iter()
        .map(|mut v| {
            v.iter_mut().for_each(|p| *p = p.canonical());
            v.sort();
            v
        })
        .collect();
        let got: BTreeSet<Vec<RPoly>> = fs.factorizations.iter().cloned().collect();
        assert_eq!(got, want);
        assert_eq!(fs.elasticity(), Elasticity::ratio(1, 1));
    }

    #[test]
    fn factorizations_over_minus_3() {
        let fs = factorizations_rx(&rp("4*x^2+4*x+4", -3)).unwrap();
        assert_eq!(fs.length_set(), BTreeSet::from([2, 3]));
        let mut a = vec![rp("2", -3), rp("2", -3), rp("x^2+x+1", -3)];
        a.sort();
        assert!(fs.factorizations.contains(&a));
        assert_eq!(fs.elasticity(), Elasticity::ratio(3, 2));
    }

    #[test]
    fn witnesses() {
        let w = property_p_witness(&RingCfg::new(-3).unwrap(), 10, 2).unwrap();
        assert_eq!(w, Some(rp("x^2+x+1", -3)));
        assert_eq!(
            property_p_witness(&RingCfg::new(-1).unwrap(), 10, 2).unwrap(),
            None
        );
        let w = property_p_witness(&RingCfg::new(-5).unwrap(), 10, 2)
            .unwrap()
            .unwrap();
        assert!(w <= rp("2*x^2+2*x+3", -5));
    }

    #[test]
    fn canonical_form() {
        let p = rp("-x-1", -5);
        assert_eq!(p.canonical(), rp("x+1", -5));
        assert!(p.is_associate(&rp("x+1", -5)));
        assert_eq!(rp("1*x", -5).to_string(), "x");
    }
}
