//! Irreducible factorizations of elements of `R`, length sets and elasticity.
//!
//! Factorizations are enumerated by recursive descent: every irreducible
//! divisor of `x` has norm dividing `N(x)`, so the atoms of each such norm are
//! tried, the quotient is factored recursively and the resulting multisets
//! are deduplicated. Lengths are bounded by the number of prime factors of
//! `N(x)`, so length sets are finite and the supremum defining the
//! elasticity is a maximum.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::rc::Rc;

use num::rational::Ratio;
use num::Zero;
use serde::{Serialize, Serializer};

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::qint::{QuadInt, RingCfg};

/// Largest norm accepted by [`factorizations`].
pub const MAX_FACTOR_NORM: u64 = 1_000_000_000_000;

const MEMO_CAPACITY: usize = 1 << 16;

/// All factorizations of `element` into irreducibles, up to order and units.
///
/// Each factorization is sorted; the list of factorizations is sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationSet<T> {
    pub element: T,
    pub factorizations: Vec<Vec<T>>,
    pub complete: bool,
}

impl<T> FactorizationSet<T> {
    pub fn length_set(&self) -> BTreeSet<usize> {
        self.factorizations.iter().map(Vec::len).collect()
    }

    pub fn elasticity(&self) -> Elasticity {
        Elasticity::of_lengths(&self.length_set())
    }
}

/// `max L / min L` as an exact rational, or one of the degenerate cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Elasticity {
    Finite(Ratio<u64>),
    Infinite,
    Undefined,
}

impl Elasticity {
    pub fn of_lengths(lengths: &BTreeSet<usize>) -> Elasticity {
        match (lengths.first(), lengths.last()) {
            (Some(&lo), Some(&hi)) if lo > 0 => {
                Elasticity::Finite(Ratio::new(hi as u64, lo as u64))
            }
            (Some(_), Some(_)) => Elasticity::Infinite,
            _ => Elasticity::Undefined,
        }
    }

    pub fn ratio(num: u64, den: u64) -> Elasticity {
        Elasticity::Finite(Ratio::new(num, den))
    }

    /// Comparison key: undefined below every finite value, infinite above.
    fn rank(&self) -> (u8, Ratio<u64>) {
        match self {
            Elasticity::Undefined => (0, Ratio::zero()),
            Elasticity::Finite(r) => (1, *r),
            Elasticity::Infinite => (2, Ratio::zero()),
        }
    }
}

impl PartialOrd for Elasticity {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Elasticity {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for Elasticity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elasticity::Finite(r) => write!(f, "{r}"),
            Elasticity::Infinite => f.write_str("infinite"),
            Elasticity::Undefined => f.write_str("undefined"),
        }
    }
}

impl Serialize for Elasticity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Frac {
            num: u64,
            den: u64,
        }
        match self {
            Elasticity::Finite(r) => Frac {
                num: *r.numer(),
                den: *r.denom(),
            }
            .serialize(s),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

type Facts = Rc<Vec<Vec<QuadInt>>>;

/// Factorization engine with a bounded memo table.
///
/// Eviction is first-in first-out, so results and timings are reproducible.
/// Results never depend on cache state.
pub struct Factorizer {
    cfg: RingCfg,
    memo: HashMap<QuadInt, Facts>,
    order: VecDeque<QuadInt>,
    capacity: usize,
    atoms: HashMap<u64, Rc<Vec<QuadInt>>>,
}

impl Factorizer {
    pub fn new(cfg: &RingCfg) -> Self {
        Self::with_capacity(cfg, MEMO_CAPACITY)
    }

    pub fn with_capacity(cfg: &RingCfg, capacity: usize) -> Self {
        Factorizer {
            cfg: *cfg,
            memo: HashMap::new(),
            order: VecDeque::new(),
            capacity: capacity.max(1),
            atoms: HashMap::new(),
        }
    }

    /// Canonical irreducible elements of norm `n`.
    pub fn atoms_of_norm(&mut self, n: u64) -> Rc<Vec<QuadInt>> {
        if let Some(a) = self.atoms.get(&n) {
            return Rc::clone(a);
        }
        let list: Vec<QuadInt> = self
            .cfg
            .elements_of_norm(n)
            .into_iter()
            .filter(|e| e.is_irreducible().unwrap_or(false))
            .collect();
        let rc = Rc::new(list);
        self.atoms.insert(n, Rc::clone(&rc));
        rc
    }

    pub fn factorizations(&mut self, x: &QuadInt) -> Result<FactorizationSet<QuadInt>> {
        self.check(x)?;
        let facts = self.facts(x.canonical());
        Ok(FactorizationSet {
            element: *x,
            factorizations: facts.as_ref().clone(),
            complete: true,
        })
    }

    fn check(&self, x: &QuadInt) -> Result<()> {
        if x.d() != self.cfg.d() {
            return Err(Error::Domain(format!(
                "{x} is not in Z[sqrt({})]",
                self.cfg.d()
            )));
        }
        if x.is_zero() || x.is_unit() {
            return Err(Error::Domain(format!(
                "{x} is zero or a unit and has no factorization into irreducibles"
            )));
        }
        if x.norm() > MAX_FACTOR_NORM {
            return Err(Error::Resource(format!(
                "norm {} exceeds the factorization guard {MAX_FACTOR_NORM}",
                x.norm()
            )));
        }
        Ok(())
    }

    fn facts(&mut self, x: QuadInt) -> Facts {
        if let Some(f) = self.memo.get(&x) {
            return Rc::clone(f);
        }
        let mut found: BTreeSet<Vec<QuadInt>> = BTreeSet::new();
        for m in divisors(x.norm()).into_iter().skip(1) {
            let atoms = self.atoms_of_norm(m);
            for pi in atoms.iter() {
                let Some(y) = x.try_div(pi) else { continue };
                if y.is_unit() {
                    found.insert(vec![*pi]);
                    continue;
                }
                for rest in self.facts(y.canonical()).iter() {
                    let mut f = rest.clone();
                    f.push(*pi);
                    f.sort();
                    found.insert(f);
                }
            }
        }
        let out: Facts = Rc::new(found.into_iter().collect());
        debug_assert!(out.iter().all(|f| f
            .iter()
            .fold(self.cfg.one(), |a, b| a * *b)
            .is_associate(&x)));
        if self.order.len() >= self.capacity {
            if let Some(old) = self.order.pop_front() {
                self.memo.remove(&old);
            }
        }
        self.order.push_back(x);
        self.memo.insert(x, Rc::clone(&out));
        out
    }
}

/// Complete set of irreducible factorizations of `x`.
pub fn factorizations(x: &QuadInt) -> Result<FactorizationSet<QuadInt>> {
    let cfg = RingCfg::new(x.d())?;
    Factorizer::new(&cfg).factorizations(x)
}

pub fn length_set(x: &QuadInt) -> Result<BTreeSet<usize>> {
    Ok(factorizations(x)?.length_set())
}

pub fn elasticity_elem(x: &QuadInt) -> Result<Elasticity> {
    Ok(factorizations(x)?.elasticity())
}

/// `max ρ(x)` over nonzero nonunits with `N(x) <= norm_bound`: a lower bound
/// for the elasticity of the ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RingElasticityBound {
    pub lower_bound: Elasticity,
    pub argmax: Option<QuadInt>,
    pub norm_bound: u64,
}

pub fn ring_elasticity_lower_bound(cfg: &RingCfg, norm_bound: u64) -> Result<RingElasticityBound> {
    if norm_bound < 2 {
        return Err(Error::Domain(format!("norm bound {norm_bound} is below 2")));
    }
    if norm_bound > MAX_FACTOR_NORM {
        return Err(Error::Resource(format!(
            "norm bound {norm_bound} exceeds {MAX_FACTOR_NORM}"
        )));
    }
    let mut fz = Factorizer::new(cfg);
    let mut best = Elasticity::Undefined;
    let mut argmax = None;
    for n in 2..=norm_bound {
        for x in cfg.elements_of_norm(n) {
            let e = fz.factorizations(&x)?.elasticity();
            if e > best {
                best = e;
                argmax = Some(x);
            }
        }
    }
    Ok(RingElasticityBound {
        lower_bound: best,
        argmax,
        norm_bound,
    })
}
