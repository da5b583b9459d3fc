//! Reference battery behind `paper-suite`. Each entry names the claim it
//! reproduces; sampled entries draw from a ChaCha stream seeded by `--seed`.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use quadfac::extring::{d1_elasticity, d2_witness_verify, ExtElem, Level};
use quadfac::factor::{Elasticity, Factorizer};
use quadfac::ideals::{
    gamma_verdict, gauss_product_check, is_primitive, is_superprimitive, GammaVerdict,
};
use quadfac::kpoly::factor_k;
use quadfac::rpoly::{factorizations_rx, is_irreducible_rx, property_p_witness};
use quadfac::text::{parse_ideal, parse_kelem, parse_kpoly, parse_rpoly};
use quadfac::{Error, FracIdeal, KElem, KPoly, QuadInt, RPoly, RingCfg};

#[derive(Debug, Serialize)]
pub struct Entry {
    pub id: &'static str,
    pub anchor: &'static str,
    pub observed: String,
    pub pass: bool,
}

type Check = Result<(bool, String), Error>;

fn entry(id: &'static str, anchor: &'static str, check: Check) -> Entry {
    let (pass, observed) = match check {
        Ok(r) => r,
        Err(e) => (false, e.to_string()),
    };
    Entry {
        id,
        anchor,
        observed,
        pass,
    }
}

fn canon_sorted(v: &[RPoly]) -> Vec<RPoly> {
    let mut v: Vec<RPoly> = v.iter().map(RPoly::canonical).collect();
    v.sort();
    v
}

fn eighty_one() -> Check {
    let r = RingCfg::new(-14)?;
    let fs = Factorizer::new(&r).factorizations(&r.int(81))?;
    let rho = fs.elasticity();
    Ok((
        fs.factorizations.len() == 2 && rho == Elasticity::ratio(2, 1),
        format!("{} factorizations, rho = {rho}", fs.factorizations.len()),
    ))
}

fn eighty_one_x() -> Check {
    let fs = factorizations_rx(&parse_rpoly("81*x", -14)?)?;
    let rho = fs.elasticity();
    Ok((
        rho == Elasticity::ratio(5, 3),
        format!("lengths {:?}, rho = {rho}", fs.length_set()),
    ))
}

fn identity(d: i64, lhs: &[&str], rhs: &[&str], expect_lengths: &[usize]) -> Check {
    let l = lhs
        .iter()
        .map(|s| parse_rpoly(s, d))
        .collect::<Result<Vec<_>, _>>()?;
    let r = rhs
        .iter()
        .map(|s| parse_rpoly(s, d))
        .collect::<Result<Vec<_>, _>>()?;
    let f = RPoly::product(&l, d);
    let mut ok = f == RPoly::product(&r, d);
    for p in l.iter().chain(&r) {
        ok &= is_irreducible_rx(p)?.irreducible;
    }
    let fs = factorizations_rx(&f)?;
    ok &= fs.factorizations.contains(&canon_sorted(&l));
    ok &= fs.factorizations.contains(&canon_sorted(&r));
    let lengths = fs.length_set();
    ok &= lengths == expect_lengths.iter().copied().collect::<BTreeSet<_>>();
    Ok((
        ok,
        format!("{f}: lengths {lengths:?}, rho = {}", fs.elasticity()),
    ))
}

fn hfd() -> Check {
    let cfg = RingCfg::new(-5)?;
    let mut fz = Factorizer::new(&cfg);
    let (mut classes, mut nonunique) = (0, 0);
    for n in 2..=5000 {
        for x in cfg.elements_of_norm(n) {
            let fs = fz.factorizations(&x)?;
            if fs.length_set().len() != 1 {
                return Ok((false, format!("{x} has lengths {:?}", fs.length_set())));
            }
            classes += 1;
            nonunique += usize::from(fs.factorizations.len() > 1);
        }
    }
    Ok((
        nonunique > 0,
        format!("{classes} classes half-factorial, {nonunique} non-unique"),
    ))
}

fn consistency() -> Check {
    let mut total = 0;
    for d in [-1, -2, -3, -5, -14] {
        let cfg = RingCfg::new(d)?;
        let mut fz = Factorizer::new(&cfg);
        for n in 2..=2000 {
            for x in cfg.elements_of_norm(n) {
                for f in fz.factorizations(&x)?.factorizations {
                    let prod = f.iter().fold(cfg.one(), |a, b| a * *b);
                    if !prod.is_associate(&x) {
                        return Ok((false, format!("{x}: bad factorization {f:?}")));
                    }
                }
                total += 1;
            }
        }
    }
    Ok((true, format!("{total} classes multiply back")))
}

fn shrink(rng: &mut ChaCha8Rng) -> Check {
    let ds = [-1, -3, -5, -6, -10, -14];
    let mut pairs = 0;
    while pairs < 200 {
        let cfg = RingCfg::new(ds[pairs % ds.len()])?;
        let a = cfg.elem(rng.gen_range(-30..=30), rng.gen_range(-6..=6));
        let p = cfg.elem(rng.gen_range(-12..=12), rng.gen_range(-4..=4));
        if a.is_zero() || a.is_unit() || p.is_zero() || p.is_unit() || !p.is_prime()? {
            continue;
        }
        let mut fz = Factorizer::new(&cfg);
        let ra = fz.factorizations(&a)?.elasticity();
        let rap = fz.factorizations(&(a * p))?.elasticity();
        if ra < rap {
            return Ok((false, format!("rho({a}) = {ra} < rho({a}*{p}) = {rap}")));
        }
        pairs += 1;
    }
    Ok((true, format!("{pairs} pairs, 0 violations")))
}

fn psp() -> Check {
    let f = parse_rpoly("2+(1+w)*x", -5)?;
    let (sp, z) = is_superprimitive(&f)?;
    let want = parse_kelem("(1-w)/2", -5)?;
    let ok = is_primitive(&f)
        && !sp
        && z.as_ref() == Some(&want)
        && f.coeffs()
            .iter()
            .all(|c| (&want * &KElem::from(c)).is_integral());
    Ok((
        ok,
        format!("witness {}", z.map(|z| z.to_string()).unwrap_or_default()),
    ))
}

fn property_p() -> Check {
    let mut parts = Vec::new();
    let mut ok = true;
    for d in [-1, -2, -3, -5, -6, -10, -14] {
        let cfg = RingCfg::new(d)?;
        let w = property_p_witness(&cfg, 20, 2)?;
        ok &= w.is_some() != cfg.is_ufd();
        parts.push(format!(
            "{d}: {}",
            w.map(|f| f.to_string()).unwrap_or("none".into())
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn d2() -> Check {
    let pi = QuadInt::new(2, 0, -5);
    let mut ok = true;
    let mut bounds = Vec::new();
    for n in 1..=5 {
        let r = d2_witness_verify(&pi, n)?;
        ok &= r.identity_ok && r.lengths == (2, 2 * n as usize + 1);
        bounds.push(r.elasticity_lower_bound.to_string());
    }
    Ok((ok, format!("bounds {}", bounds.join(", "))))
}

fn d1(rng: &mut ChaCha8Rng) -> Check {
    let cfg = RingCfg::new(-5)?;
    let mut sampled = 0;
    while sampled < 50 {
        let c0 = cfg.elem(rng.gen_range(-12..=12), rng.gen_range(-3..=3));
        if c0.is_zero() {
            continue;
        }
        let mut coeffs = vec![KElem::from(c0)];
        for _ in 0..rng.gen_range(1..=3) {
            let num = KElem::from(cfg.elem(rng.gen_range(-5..=5), rng.gen_range(-2..=2)));
            let den = KElem::int(rng.gen_range(1..=6), -5);
            coeffs.push(num.checked_div(&den).expect("nonzero"));
        }
        let g = ExtElem::new(KPoly::new(coeffs, -5), Level::D1, &cfg)?;
        if g.is_unit() {
            continue;
        }
        let rho = d1_elasticity(&g)?;
        if rho != Elasticity::ratio(1, 1) {
            return Ok((false, format!("{}: rho = {rho}", g.poly())));
        }
        sampled += 1;
    }
    let cfg14 = RingCfg::new(-14)?;
    let g = ExtElem::new(parse_kpoly("81+x^2", -14)?, Level::D1, &cfg14)?;
    let rho = d1_elasticity(&g)?;
    Ok((
        rho == Elasticity::ratio(5, 3),
        format!("50 samples rho = 1; rho(81+x^2) = {rho}"),
    ))
}

fn ideal_laws(rng: &mut ChaCha8Rng) -> Check {
    let mut checked = 0;
    for d in [-1, -2, -3, -5, -6, -14] {
        let cfg = RingCfg::new(d)?;
        for _ in 0..30 {
            let a = cfg.elem(rng.gen_range(1..=15), rng.gen_range(-5..=5));
            let b = cfg.elem(rng.gen_range(-15..=15), rng.gen_range(1..=5));
            let i = FracIdeal::from_quads(&cfg, &[a])?;
            let j = FracIdeal::from_quads(&cfg, &[a, b])?;
            let v = j.v_closure()?;
            if v.v_closure()? != v || !j.colon()?.is_subset_of(&i.colon()?) {
                return Ok((false, format!("law fails on {i} ⊆ {j}")));
            }
            checked += 1;
        }
    }
    let f = parse_rpoly("2+(1+w)*x", -5)?;
    let g = parse_rpoly("2+(1-w)*x", -5)?;
    let gl = gauss_product_check(&f, &g);
    Ok((
        gl == Some(false),
        format!("{checked} pairs; ({f})({g}) = {} not primitive", f.mul(&g)),
    ))
}

fn gamma() -> Check {
    let cfg = RingCfg::new(-5)?;
    let p = parse_ideal("<2; 1+w>", &cfg)?;
    let verdict = gamma_verdict(&p, &p.colon()?)?;
    Ok((
        verdict == GammaVerdict::Fails,
        format!("{verdict:?} for B = {p}, C = B^-1"),
    ))
}

fn k_split() -> Check {
    let f = parse_kpoly("2*x^2+2*x+3", -5)?;
    let kf = factor_k(&f)?;
    let shown: Vec<String> = kf.factors.iter().map(ToString::to_string).collect();
    Ok((kf.splits(), format!("{} * {}", kf.unit, shown.join(" * "))))
}

pub fn run(seed: u64) -> Vec<Entry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vec![
        entry(
            "factor-81",
            "81 has precisely two irreducible factorizations in Z[sqrt(-14)]; rho(81) = 2",
            eighty_one(),
        ),
        entry(
            "rho-81x",
            "rho(81x) = 5/3 < 2 in Z[sqrt(-14)][x]",
            eighty_one_x(),
        ),
        entry(
            "minus-3-identity",
            "(2x+1+w)(2x+1-w) = (2)(2)(x^2+x+1) over Z[sqrt(-3)]",
            identity(-3, &["2*x+1+w", "2*x+1-w"], &["2", "2", "x^2+x+1"], &[2, 3]),
        ),
        entry(
            "minus-5-identity",
            "(2)(2x^2+2x+3) = (2x+1+w)(2x+1-w) over Z[sqrt(-5)], all factors in Irr(R[x])",
            identity(-5, &["2", "2*x^2+2*x+3"], &["2*x+1+w", "2*x+1-w"], &[2]),
        ),
        entry(
            "minus-5-k-split",
            "2x^2+2x+3 splits over Q(sqrt(-5))",
            k_split(),
        ),
        entry(
            "hfd",
            "Z[sqrt(-5)] is an HFD without unique factorization",
            hfd(),
        ),
        entry(
            "factor-consistency",
            "factorizations multiply back, norms up to 2000",
            consistency(),
        ),
        entry("shrink", "rho(a) >= rho(ap) for p prime", shrink(&mut rng)),
        entry(
            "psp-witness",
            "2+(1+w)x is primitive but not superprimitive over Z[sqrt(-5)]",
            psp(),
        ),
        entry(
            "property-p",
            "R[x] has property (P) if and only if R is a UFD",
            property_p(),
        ),
        entry(
            "d2-family",
            "(pi^n+x)(pi^n-x) = pi^(2n)(1-x^2/pi^(2n)) has lengths 2 and 2n+1",
            d2(),
        ),
        entry(
            "d1-theorem",
            "rho(R) = rho(R+xK[x]) when R has an atom",
            d1(&mut rng),
        ),
        entry(
            "ideal-laws",
            "v-closure idempotent, colon antitone, Gauss's lemma fails",
            ideal_laws(&mut rng),
        ),
        entry(
            "gamma",
            "(BC)_v = R does not force B_v principal in Z[sqrt(-5)]",
            gamma(),
        ),
    ]
}
