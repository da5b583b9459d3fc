use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quadfac::extring::{d1_classify, d1_factorizations, d2_witness_verify, ExtElem, Level};
use quadfac::factor::{elasticity_elem, length_set, ring_elasticity_lower_bound, Elasticity};
use quadfac::ideals::{is_primitive, is_superprimitive};
use quadfac::kpoly::factor_k;
use quadfac::rpoly::{elasticity_rx, is_irreducible_rx};
use quadfac::text::parse_rpoly;
use quadfac::{KElem, KPoly, QuadInt, RPoly, RingCfg};

fn random_rpoly(cfg: &RingCfg, rng: &mut ChaCha8Rng, max_deg: usize, r: i64) -> RPoly {
    let deg = rng.gen_range(1..=max_deg);
    let mut coeffs: Vec<QuadInt> = (0..=deg)
        .map(|_| cfg.elem(rng.gen_range(-r..=r), rng.gen_range(-2..=2)))
        .collect();
    if coeffs[deg].is_zero() {
        coeffs[deg] = cfg.one();
    }
    RPoly::new(coeffs, cfg.d())
}

#[test]
fn property_p_holds_for_ufds() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for d in [-1, -2] {
        let cfg = RingCfg::new(d).unwrap();
        let mut found = 0;
        while found < 120 {
            let f = random_rpoly(&cfg, &mut rng, 3, 6);
            if !is_irreducible_rx(&f).unwrap().irreducible {
                continue;
            }
            found += 1;
            assert!(
                factor_k(&f.to_kpoly()).unwrap().is_irreducible(),
                "d = {d}: {f}"
            );
        }
    }
}

#[test]
fn non_superprimitive_polynomials_give_witnesses() {
    // For I primitive but not superprimitive with z in (R : A_I) \ R, the
    // polynomial (x + z) I lies in R[x], splits over K and is irreducible
    // in R[x] when R is integrally closed and deg I is minimal.
    for (d, i) in [
        (-5, "2+(1+w)*x"),
        (-6, "2+w*x"),
        (-10, "2+w*x"),
        (-14, "3+(1+w)*x"),
    ] {
        let i = parse_rpoly(i, d).unwrap();
        assert!(is_primitive(&i));
        let (sp, z) = is_superprimitive(&i).unwrap();
        assert!(!sp, "d = {d}");
        let z = z.unwrap();
        let f = KPoly::x(d).add(&KPoly::constant(z)).mul(&i.to_kpoly());
        let f = RPoly::from_kpoly(&f).expect("z A_I lies in R");
        assert!(is_irreducible_rx(&f).unwrap().irreducible, "d = {d}: {f}");
        assert!(factor_k(&f.to_kpoly()).unwrap().splits());
    }
}

/// Some linear `a + b x` with small coefficients is primitive but not
/// superprimitive.
fn fails_psp(cfg: &RingCfg) -> bool {
    let small = cfg.elements_up_to_norm(30);
    small.iter().any(|a| {
        small.iter().any(|b| {
            let f = RPoly::new(vec![*a, *b], cfg.d());
            !b.is_zero() && is_primitive(&f) && !is_superprimitive(&f).unwrap().0
        })
    })
}

/// Some `z = (u + v w)/2` outside `R` has a monic minimal polynomial over `R`.
fn fails_integral_closure(cfg: &RingCfg) -> bool {
    let d = cfg.d();
    let half = KElem::int(2, d).inv().unwrap();
    (0..2).any(|u| {
        (0..2).any(|v| {
            let z = &KElem::from(cfg.elem(u, v)) * &half;
            let trace = &z + &z.conj();
            let norm = &z * &z.conj();
            !z.is_integral() && trace.is_integral() && norm.is_integral()
        })
    })
}

#[test]
fn irreducible_splitting_polynomials_break_psp_or_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for d in [-1, -2, -3, -5, -6, -7] {
        let cfg = RingCfg::new(d).unwrap();
        let mut hits = 0;
        for _ in 0..3000 {
            let f = random_rpoly(&cfg, &mut rng, 2, 4);
            if f.degree() != Some(2) || f.coeff(0).is_zero() {
                continue;
            }
            if factor_k(&f.to_kpoly()).unwrap().splits()
                && is_irreducible_rx(&f).unwrap().irreducible
            {
                hits += 1;
            }
        }
        let broken = fails_psp(&cfg) || fails_integral_closure(&cfg);
        assert_eq!(hits > 0, broken, "d = {d}: {hits} witnesses");
        assert_eq!(fails_integral_closure(&cfg), !cfg.is_maximal());
    }
}

#[test]
fn shrink_lemma_in_polynomial_ring() {
    // x is prime in R[x], so rho(c) >= rho(c x).
    for (d, c) in [(-14, 81), (-5, 6), (-6, 10), (-14, 27), (-10, 14), (-3, 4)] {
        let cfg = RingCfg::new(d).unwrap();
        let rc = elasticity_elem(&cfg.int(c)).unwrap();
        let f = RPoly::new(vec![cfg.zero(), cfg.int(c)], d);
        let rcx = elasticity_rx(&f).unwrap();
        assert!(rc >= rcx, "d = {d}, c = {c}: {rc} < {rcx}");
    }
}

#[test]
fn shrink_lemma_against_elasticity_lower_bound() {
    let cfg = RingCfg::new(-14).unwrap();
    let b = ring_elasticity_lower_bound(&cfg, 7000).unwrap();
    assert!(b.lower_bound >= Elasticity::ratio(2, 1));
    let b = ring_elasticity_lower_bound(&RingCfg::new(-5).unwrap(), 5000).unwrap();
    assert_eq!(b.lower_bound, Elasticity::ratio(1, 1));
}

fn random_d1(cfg: &RingCfg, rng: &mut ChaCha8Rng, allow_zero_constant: bool) -> KPoly {
    let d = cfg.d();
    let c0 = loop {
        let c = cfg.elem(rng.gen_range(-9..=9), rng.gen_range(-2..=2));
        if allow_zero_constant || !c.is_zero() {
            break c;
        }
    };
    let mut coeffs = vec![KElem::from(c0)];
    for _ in 0..rng.gen_range(1..=2) {
        let num = cfg.elem(rng.gen_range(-4..=4), rng.gen_range(-1..=1));
        coeffs.push(
            KElem::from(num)
                .checked_div(&KElem::int(rng.gen_range(1..=3), d))
                .unwrap(),
        );
    }
    KPoly::new(coeffs, d)
}

/// Exact division in D1: the quotient must exist in K[x] with constant term in R.
fn d1_divides(a: &KPoly, b: &KPoly, cfg: &RingCfg) -> bool {
    match b.exact_div(a) {
        Some(q) => ExtElem::new(q, Level::D1, cfg).is_ok(),
        None => false,
    }
}

#[test]
fn d1_primes_behave_like_primes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in [-5, -14] {
        let cfg = RingCfg::new(d).unwrap();
        let primes: Vec<KPoly> = (0..400)
            .map(|_| random_d1(&cfg, &mut rng, false))
            .filter(|p| {
                let e = ExtElem::new(p.clone(), Level::D1, &cfg).unwrap();
                !e.is_unit() && d1_classify(&e).unwrap().is_prime()
            })
            .take(5)
            .collect();
        assert!(!primes.is_empty());
        for q in &primes {
            let mut checked = 0;
            while checked < 100 {
                let a = random_d1(&cfg, &mut rng, true);
                let b = random_d1(&cfg, &mut rng, true);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let a = if rng.gen_bool(0.3) { a.mul(q) } else { a };
                checked += 1;
                if d1_divides(q, &a.mul(&b), &cfg) {
                    assert!(
                        d1_divides(q, &a, &cfg) || d1_divides(q, &b, &cfg),
                        "{q} | ({a})({b})"
                    );
                }
            }
        }
    }
}

#[test]
fn d1_length_sets_are_translates() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for d in [-5, -6, -14] {
        let cfg = RingCfg::new(d).unwrap();
        for _ in 0..60 {
            let g = random_d1(&cfg, &mut rng, false);
            let e = ExtElem::new(g.clone(), Level::D1, &cfg).unwrap();
            if e.is_unit() {
                continue;
            }
            let c = g.coeff(0).to_quad().unwrap();
            let tail = factor_k(&g).unwrap().factors.len();
            let got = d1_factorizations(&e).unwrap().length_set();
            let want: BTreeSet<usize> = if c.is_unit() {
                BTreeSet::from([tail])
            } else {
                length_set(&c)
                    .unwrap()
                    .into_iter()
                    .map(|l| l + tail)
                    .collect()
            };
            assert_eq!(got, want, "{g}");
            if !c.is_unit() && tail == 0 {
                assert_eq!(Elasticity::of_lengths(&got), elasticity_elem(&c).unwrap());
            }
        }
    }
}

#[test]
fn d2_bounds_increase() {
    for (d, pi) in [(-5, (2, 0)), (-14, (3, 0)), (-5, (1, 1)), (-6, (2, 0))] {
        let pi = QuadInt::new(pi.0, pi.1, d);
        let mut prev = Elasticity::ratio(1, 1);
        for n in 1..=6 {
            let r = d2_witness_verify(&pi, n).unwrap();
            assert!(r.identity_ok, "{pi}, {n}");
            assert!(r.elasticity_lower_bound > prev);
            assert_eq!(
                r.elasticity_lower_bound,
                Elasticity::ratio(2 * n as u64 + 1, 2)
            );
            prev = r.elasticity_lower_bound;
        }
    }
}
