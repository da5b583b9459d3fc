//! Independent brute-force oracles. Elements are plain `(a, b)` tuples with
//! their own arithmetic; nothing here calls into the library.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

pub type Tup = (i64, i64);

pub struct Oracle {
    pub d: i64,
    pub bound: u64,
    by_norm: HashMap<u64, Vec<Tup>>,
    units: Vec<Tup>,
    memo: HashMap<Tup, BTreeSet<Vec<Tup>>>,
}

impl Oracle {
    /// Lists every element of norm at most `bound` by scanning a box.
    pub fn new(d: i64, bound: u64) -> Oracle {
        let mut by_norm: HashMap<u64, Vec<Tup>> = HashMap::new();
        let lim = (bound as f64).sqrt() as i64 + 1;
        for a in -lim..=lim {
            for b in -lim..=lim {
                let n = (a * a - d * b * b) as u64;
                if n <= bound {
                    by_norm.entry(n).or_default().push((a, b));
                }
            }
        }
        let units = by_norm.get(&1).cloned().unwrap_or_default();
        Oracle {
            d,
            bound,
            by_norm,
            units,
            memo: HashMap::new(),
        }
    }

    pub fn norm(&self, x: Tup) -> u64 {
        (x.0 * x.0 - self.d * x.1 * x.1) as u64
    }

    pub fn mul(&self, x: Tup, y: Tup) -> Tup {
        (x.0 * y.0 + self.d * x.1 * y.1, x.0 * y.1 + x.1 * y.0)
    }

    /// `x / y` when it lies in `Z[w]`.
    pub fn div(&self, x: Tup, y: Tup) -> Option<Tup> {
        let n = self.norm(y) as i64;
        let num = self.mul(x, (y.0, -y.1));
        (num.0 % n == 0 && num.1 % n == 0).then(|| (num.0 / n, num.1 / n))
    }

    /// Least associate in plain lexicographic order.
    pub fn canon(&self, x: Tup) -> Tup {
        self.units.iter().map(|&u| self.mul(x, u)).min().unwrap()
    }

    pub fn elements_of_norm(&self, n: u64) -> &[Tup] {
        self.by_norm.get(&n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn all(&self) -> Vec<Tup> {
        let mut v: Vec<Tup> = self.by_norm.values().flatten().copied().collect();
        v.sort();
        v
    }

    /// No element with norm strictly between 1 and `N(x)` divides `x`.
    pub fn is_irreducible(&self, x: Tup) -> bool {
        let n = self.norm(x);
        if n <= 1 {
            return false;
        }
        for m in 2..n {
            if !n.is_multiple_of(m) {
                continue;
            }
            for &y in self.elements_of_norm(m) {
                if self.div(x, y).is_some() {
                    return false;
                }
            }
        }
        true
    }

    /// Divisor tree: try every irreducible divisor, recurse on the cofactor.
    pub fn factorizations(&mut self, x: Tup) -> BTreeSet<Vec<Tup>> {
        let x = self.canon(x);
        if let Some(r) = self.memo.get(&x) {
            return r.clone();
        }
        let n = self.norm(x);
        let mut out = BTreeSet::new();
        for m in 2..=n {
            if !n.is_multiple_of(m) {
                continue;
            }
            let cands: Vec<Tup> = self.elements_of_norm(m).to_vec();
            for y in cands {
                if !self.is_irreducible(y) {
                    continue;
                }
                let Some(q) = self.div(x, y) else { continue };
                let yc = self.canon(y);
                if self.norm(q) == 1 {
                    out.insert(vec![yc]);
                } else {
                    for mut f in self.factorizations(q) {
                        f.push(yc);
                        f.sort();
                        out.insert(f);
                    }
                }
            }
        }
        self.memo.insert(x, out.clone());
        out
    }

    pub fn length_set(&mut self, x: Tup) -> BTreeSet<usize> {
        self.factorizations(x).iter().map(Vec::len).collect()
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `max/min` of a nonempty length set as a reduced pair.
pub fn ratio(lengths: &BTreeSet<usize>) -> (u64, u64) {
    let hi = *lengths.last().unwrap() as u64;
    let lo = *lengths.first().unwrap() as u64;
    let g = gcd(hi, lo);
    (hi / g, lo / g)
}
