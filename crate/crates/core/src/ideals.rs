//! Finitely generated fractional ideals of `R = Z[w]` as rank-2 lattices.
//!
//! An ideal is stored as `(1/den) * (Z*a + Z*(b + c*w))` in Hermite normal
//! form (`a > 0`, `c > 0`, `0 <= b < a`) with minimal `den`, so two ideals are
//! equal exactly when their representations are. Colon ideals come from
//! lattice duality: `(R : I)` is the intersection of the lattices `g^-1 R`
//! over a Z-basis `g` of `I`, and intersections are duals of sums of duals.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, ToPrimitive, Zero};

use crate::arith::{ext_gcd, gcd_i128};
use crate::error::{Error, Result};
use crate::kelem::KElem;
use crate::qint::{QuadInt, RingCfg};
use crate::rpoly::RPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Lattice {
    a: i128,
    b: i128,
    c: i128,
    den: i128,
}

fn big_to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128()
        .ok_or_else(|| Error::Resource(format!("lattice entry {x} overflows 128 bits")))
}

fn q(n: i128, m: i128) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(m))
}

impl Lattice {
    /// Z-span of rational vectors; `None` when the span has rank below 2.
    fn span(vecs: &[(BigRational, BigRational)]) -> Result<Option<Lattice>> {
        let den_big = vecs.iter().fold(BigInt::one(), |acc, (x, y)| {
            acc.lcm(x.denom()).lcm(y.denom())
        });
        let den = big_to_i128(&den_big)?;
        let scale = BigRational::from_integer(den_big);
        let mut ints = Vec::with_capacity(vecs.len());
        for (x, y) in vecs {
            ints.push((
                big_to_i128(&(x * &scale).to_integer())?,
                big_to_i128(&(y * &scale).to_integer())?,
            ));
        }
        Ok(Self::hnf(&ints).map(|(a, b, c)| Lattice { a, b, c, den }.reduced()))
    }

    fn hnf(vecs: &[(i128, i128)]) -> Option<(i128, i128, i128)> {
        let (mut px, mut py) = (0i128, 0i128);
        let mut a = 0i128;
        for &(x, y) in vecs {
            if y == 0 {
                a = gcd_i128(a, x);
                continue;
            }
            let (g, s, t) = ext_gcd(py, y);
            let other = (y / g) * px - (py / g) * x;
            a = gcd_i128(a, other);
            px = s * px + t * x;
            py = g;
        }
        if a == 0 || py == 0 {
            return None;
        }
        Some((a, px.rem_euclid(a), py))
    }

    fn reduced(self) -> Lattice {
        let g = gcd_i128(gcd_i128(self.a, self.b), gcd_i128(self.c, self.den));
        Lattice {
            a: self.a / g,
            b: self.b / g,
            c: self.c / g,
            den: self.den / g,
        }
    }

    fn basis(&self) -> [(BigRational, BigRational); 2] {
        [
            (q(self.a, self.den), BigRational::zero()),
            (q(self.b, self.den), q(self.c, self.den)),
        ]
    }

    fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        let den = BigRational::from_integer(BigInt::from(self.den));
        let (xs, ys) = (x * &den, y * &den);
        if !xs.is_integer() || !ys.is_integer() {
            return false;
        }
        let (xs, ys) = (xs.to_integer(), ys.to_integer());
        let c = BigInt::from(self.c);
        if !(&ys % &c).is_zero() {
            return false;
        }
        let m = &ys / &c;
        let rest = xs - m * BigInt::from(self.b);
        (rest % BigInt::from(self.a)).is_zero()
    }

    fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis().iter().all(|(x, y)| self.contains(x, y))
    }

    fn sum(&self, other: &Lattice) -> Result<Lattice> {
        let mut v = self.basis().to_vec();
        v.extend(other.basis());
        Ok(Lattice::span(&v)?.expect("sum of full-rank lattices is full rank"))
    }

    /// Dual lattice under the standard inner product on `Q^2`.
    fn dual(&self) -> Result<Lattice> {
        let (a, b, c, den) = (self.a, self.b, self.c, self.den);
        let v = [
            (q(den, a), q(-b * den, a * c)),
            (BigRational::zero(), q(den, c)),
        ];
        Ok(Lattice::span(&v)?.expect("dual of a full-rank lattice is full rank"))
    }

    fn intersect(&self, other: &Lattice) -> Result<Lattice> {
        self.dual()?.sum(&other.dual()?)?.dual()
    }
}

/// A nonzero finitely generated fractional ideal of `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FracIdeal {
    lat: Lattice,
    cfg: RingCfg,
}

impl FracIdeal {
    /// The smallest `R`-module containing `gens`.
    pub fn from_gens(cfg: &RingCfg, gens: &[KElem]) -> Result<FracIdeal> {
        let w = KElem::sqrt_d(cfg.d());
        let mut vecs = Vec::new();
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let gw = g * &w;
            vecs.push((g.u.clone(), g.v.clone()));
            vecs.push((gw.u, gw.v));
        }
        if vecs.is_empty() {
            return Err(Error::Domain("ideal generators are all zero".into()));
        }
        let lat = Lattice::span(&vecs)?.expect("a nonzero R-module has rank 2");
        Ok(FracIdeal { lat, cfg: *cfg })
    }

    pub fn from_quads(cfg: &RingCfg, gens: &[QuadInt]) -> Result<FracIdeal> {
        let k: Vec<KElem> = gens.iter().map(KElem::from).collect();
        FracIdeal::from_gens(cfg, &k)
    }

    pub fn principal(g: &KElem, cfg: &RingCfg) -> Result<FracIdeal> {
        FracIdeal::from_gens(cfg, std::slice::from_ref(g))
    }

    /// `R` itself.
    pub fn whole(cfg: &RingCfg) -> FracIdeal {
        FracIdeal::from_gens(cfg, &[KElem::one(cfg.d())]).expect("1 generates R")
    }

    fn from_lattice(lat: Lattice, cfg: &RingCfg) -> FracIdeal {
        let out = FracIdeal { lat, cfg: *cfg };
        debug_assert!(out.is_module(), "lattice {lat:?} is not an R-module");
        out
    }

    pub fn cfg(&self) -> &RingCfg {
        &self.cfg
    }

    /// Z-basis `{a/den, (b + c w)/den}`.
    pub fn basis(&self) -> [KElem; 2] {
        let d = self.cfg.d();
        self.lat.basis().map(|(x, y)| KElem::new(x, y, d))
    }

    /// `(a, b, c, den)` of the Hermite normal form.
    pub fn hnf(&self) -> (i128, i128, i128, i128) {
        (self.lat.a, self.lat.b, self.lat.c, self.lat.den)
    }

    fn is_module(&self) -> bool {
        let w = KElem::sqrt_d(self.cfg.d());
        self.basis().iter().all(|g| self.contains(&(g * &w)))
    }

    pub fn contains(&self, z: &KElem) -> bool {
        self.lat.contains(&z.u, &z.v)
    }

    pub fn is_subset_of(&self, other: &FracIdeal) -> bool {
        other.lat.contains_lattice(&self.lat)
    }

    /// Contained in `R`.
    pub fn is_integral(&self) -> bool {
        self.lat.den == 1
    }

    pub fn is_whole(&self) -> bool {
        *self == FracIdeal::whole(&self.cfg)
    }

    /// Ideal norm `[R : den*I] / den^2`.
    pub fn norm(&self) -> BigRational {
        q(self.lat.a * self.lat.c, self.lat.den * self.lat.den)
    }

    pub fn mul(&self, other: &FracIdeal) -> Result<FracIdeal> {
        let mut gens = Vec::with_capacity(4);
        for x in self.basis() {
            for y in other.basis() {
                gens.push(&x * &y);
            }
        }
        FracIdeal::from_gens(&self.cfg, &gens)
    }

    /// `(R : I) = { z in K : z I ⊆ R }`.
    pub fn colon(&self) -> Result<FracIdeal> {
        let w = KElem::sqrt_d(self.cfg.d());
        let mut acc: Option<Lattice> = None;
        for g in self.basis() {
            let inv = g.inv().expect("basis elements are nonzero");
            let iw = &inv * &w;
            let lat = Lattice::span(&[(inv.u.clone(), inv.v.clone()), (iw.u, iw.v)])?
                .expect("g^-1 R has rank 2");
            acc = Some(match acc {
                None => lat,
                Some(prev) => prev.intersect(&lat)?,
            });
        }
        Ok(FracIdeal::from_lattice(
            acc.expect("two basis elements"),
            &self.cfg,
        ))
    }

    /// `I_v = (I^-1)^-1`.
    pub fn v_closure(&self) -> Result<FracIdeal> {
        self.colon()?.colon()
    }

    /// A generator `g` with `(g) = I_v`, if `I_v` is principal.
    ///
    /// A generator of `den * I_v` must have norm equal to its lattice index,
    /// so scanning that single norm is exhaustive.
    pub fn principal_generator(&self) -> Result<Option<KElem>> {
        let v = self.v_closure()?;
        let (a, _, c, den) = v.hnf();
        let Some(index) = u64::try_from(a * c).ok() else {
            return Err(Error::Resource(format!("ideal index {} too large", a * c)));
        };
        let den_k = KElem::int(den as i64, self.cfg.d());
        for h in self.cfg.elements_of_norm(index) {
            let g = KElem::from(h)
                .checked_div(&den_k)
                .expect("denominator is positive");
            if FracIdeal::principal(&g, &self.cfg)? == v {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }

    pub fn is_principal(&self) -> Result<Option<KElem>> {
        self.principal_generator()
    }
}

impl fmt::Display for FracIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [g1, g2] = self.basis();
        write!(f, "<{g1}; {g2}>")
    }
}

/// The content ideal `A_f` generated by the coefficients of `f`.
pub fn content_ideal(f: &RPoly) -> Result<FracIdeal> {
    let cfg = RingCfg::new(f.d())?;
    FracIdeal::from_quads(&cfg, f.coeffs())
}

/// A nonunit of `R` dividing every element, if any, least in canonical order.
///
/// Any such divisor has norm dividing the gcd of the element norms.
pub fn common_nonunit_divisor(elems: &[QuadInt]) -> Option<QuadInt> {
    let nonzero: Vec<&QuadInt> = elems.iter().filter(|e| !e.is_zero()).collect();
    let first = nonzero.first()?;
    let d = first.d();
    let g = nonzero
        .iter()
        .fold(0u64, |acc, e| crate::arith::gcd_u64(acc, e.norm()));
    for m in crate::arith::divisors(g).into_iter().skip(1) {
        for c in crate::qint::RingCfg::new(d).ok()?.elements_of_norm(m) {
            if nonzero.iter().all(|e| c.divides(e)) {
                return Some(c);
            }
        }
    }
    None
}

/// No nonunit of `R` divides every coefficient.
pub fn is_primitive(f: &RPoly) -> bool {
    common_nonunit_divisor(f.coeffs()).is_none()
}

/// Superprimitivity: `(R : A_f) ⊆ R`. On failure returns some `z` in
/// `(R : A_f)` outside `R`.
///
/// With `A_f` in Hermite form `(1/den)(Z a + Z beta)`, the element
/// `den * conj(beta) / a` always lies in the colon ideal and is tried first.
pub fn is_superprimitive(f: &RPoly) -> Result<(bool, Option<KElem>)> {
    if f.is_zero() {
        return Err(Error::Domain(
            "the zero polynomial has no content ideal".into(),
        ));
    }
    let a_f = content_ideal(f)?;
    let col = a_f.colon()?;
    if col.is_integral() {
        return Ok((true, None));
    }
    let d = f.d();
    let (a, b, c, den) = a_f.hnf();
    let beta_conj = KElem::new(q(b, 1), q(-c, 1), d);
    let cand = &beta_conj * &KElem::rational(q(den, a), d);
    if col.contains(&cand) && !cand.is_integral() {
        return Ok((false, Some(cand)));
    }
    let z = col
        .basis()
        .into_iter()
        .find(|z| !z.is_integral())
        .expect("a non-integral lattice has a non-integral basis vector");
    Ok((false, Some(z)))
}

/// `[a_1, ..., a_n]`: a generator of `(a_1, ..., a_n)_v` when it is principal.
pub fn gcd_v(elems: &[QuadInt]) -> Result<Option<QuadInt>> {
    let first = elems
        .iter()
        .find(|e| !e.is_zero())
        .ok_or_else(|| Error::Domain("gcd of zeros is undefined".into()))?;
    let cfg = RingCfg::new(first.d())?;
    let ideal = FracIdeal::from_quads(&cfg, elems)?;
    Ok(ideal.principal_generator()?.map(|g| {
        g.to_quad()
            .expect("v-closure of an integral ideal is integral")
            .canonical()
    }))
}

/// Checks `[b a_1, ..., b a_n] = b [a_1, ..., a_n]`. `None` means the
/// precondition (the gcd exists, `b != 0`) fails.
pub fn gcd_distributivity_check(elems: &[QuadInt], b: &QuadInt) -> Result<Option<bool>> {
    if b.is_zero() {
        return Ok(None);
    }
    let Some(g) = gcd_v(elems)? else {
        return Ok(None);
    };
    let scaled: Vec<QuadInt> = elems.iter().map(|e| *e * *b).collect();
    Ok(Some(match gcd_v(&scaled)? {
        Some(h) => h.is_associate(&(g * *b)),
        None => false,
    }))
}

/// Gauss's lemma on one pair: is `f * g` primitive? `None` when either
/// factor is not primitive.
pub fn gauss_product_check(f: &RPoly, g: &RPoly) -> Option<bool> {
    if !is_primitive(f) || !is_primitive(g) {
        return None;
    }
    Some(is_primitive(&f.mul(g)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaVerdict {
    /// `(BC)_v != R`.
    Vacuous,
    /// `(BC)_v = R` and `B_v` is principal.
    Holds,
    /// `(BC)_v = R` but `B_v` is not principal.
    Fails,
}

pub fn gamma_verdict(b: &FracIdeal, c: &FracIdeal) -> Result<GammaVerdict> {
    if !b.mul(c)?.v_closure()?.is_whole() {
        return Ok(GammaVerdict::Vacuous);
    }
    Ok(if b.principal_generator()?.is_some() {
        GammaVerdict::Holds
    } else {
        GammaVerdict::Fails
    })
}

/// If `(BC)_v = R` then `B_v` is principal.
pub fn gamma_check(b: &FracIdeal, c: &FracIdeal) -> Result<bool> {
    Ok(gamma_verdict(b, c)? != GammaVerdict::Fails)
}
