//! Runs every identity of the library as a named check, grouped in suites.
//! Sizes grow with the depth; random rational arguments come from a seeded
//! ChaCha stream keyed by the check name, so reports are reproducible.

use std::fmt::{self, Write};
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bernoulli::*;
use crate::error::Error;
use crate::eulerian::*;
use crate::exact::{big, binomial, fallfac_eval, int, integer_power, ratio, render, risefac_eval, sign};
use crate::exact::{term_power, ProgressionParams};
use crate::fps::Fps;
use crate::lah::*;
use crate::poly::Polynomial;
use crate::powersum::*;
use crate::scalar::Scalar;
use crate::sheffer::Family;
use crate::stirling::*;
use crate::symfunc::*;
use crate::{ExactRational, RationalFps, RationalPair, RationalPoly, RationalTriangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    S2,
    S1,
    Eulerian,
    Bernoulli,
    Faulhaber,
    Lah,
    Fps,
    Symfunc,
}

impl Suite {
    /// Every concrete suite in report order.
    pub const MEMBERS: [Suite; 8] = [
        Suite::Fps,
        Suite::S2,
        Suite::S1,
        Suite::Eulerian,
        Suite::Bernoulli,
        Suite::Faulhaber,
        Suite::Lah,
        Suite::Symfunc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::S2 => "s2",
            Suite::S1 => "s1",
            Suite::Eulerian => "eulerian",
            Suite::Bernoulli => "bernoulli",
            Suite::Faulhaber => "faulhaber",
            Suite::Lah => "lah",
            Suite::Fps => "fps",
            Suite::Symfunc => "symfunc",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::MEMBERS)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub depth: usize,
    /// Adds the three-term Lah recurrence with coefficient `n` as an
    /// expected failure for `d >= 2`.
    pub include_printed_three_term: bool,
    pub seed: u64,
}

impl VerifyOptions {
    pub const DEFAULT_SEED: u64 = 0x5eed_f00d;

    pub fn new(depth: usize) -> Self {
        VerifyOptions { depth, include_printed_three_term: false, seed: Self::DEFAULT_SEED }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    ExpectedFail,
    UnexpectedPass,
}

impl Outcome {
    pub fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::ExpectedFail => "XFAIL",
            Outcome::UnexpectedPass => "XPASS",
        }
    }

    pub fn is_ok(self) -> bool {
        matches!(self, Outcome::Pass | Outcome::ExpectedFail)
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub outcome: Outcome,
    /// First mismatching entry or coefficient, when there was one.
    pub mismatch: Option<String>,
    /// Coefficientwise generating-function identity.
    pub generating_function: bool,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.outcome.is_ok())
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.results.iter().filter(|r| r.outcome == outcome).count()
    }

    /// One line per check, then a summary. With `explain`, the first
    /// mismatch of the first failing check is printed below it, and every
    /// expected failure shows its mismatch.
    pub fn render(&self, explain: bool) -> String {
        let mut out = String::new();
        let mut explained = false;
        for r in &self.results {
            writeln!(out, "{:<5} {}", r.outcome.label(), r.name).unwrap();
            let show = match r.outcome {
                Outcome::Fail if !explained => {
                    explained = true;
                    true
                }
                Outcome::ExpectedFail => true,
                _ => false,
            };
            if explain && show {
                if let Some(m) = &r.mismatch {
                    writeln!(out, "      first mismatch: {m}").unwrap();
                }
            }
        }
        writeln!(
            out,
            "summary: {} passed, {} failed, {} expected failures, {} unexpected passes",
            self.count(Outcome::Pass),
            self.count(Outcome::Fail),
            self.count(Outcome::ExpectedFail),
            self.count(Outcome::UnexpectedPass)
        )
        .unwrap();
        out
    }
}

pub fn run(suite: Suite, options: &VerifyOptions) -> Report {
    let ctx = Ctx { depth: options.depth.max(1), seed: options.seed };
    let suites: Vec<Suite> = if suite == Suite::All { Suite::MEMBERS.to_vec() } else { vec![suite] };
    let mut results = Vec::new();
    for s in suites {
        for check in registry(s, options) {
            let start = Instant::now();
            let verdict = (check.run)(&ctx);
            let elapsed = start.elapsed();
            let (outcome, mismatch) = match (verdict, check.expected_fail) {
                (Ok(()), false) => (Outcome::Pass, None),
                (Ok(()), true) => (Outcome::UnexpectedPass, None),
                (Err(m), false) => (Outcome::Fail, Some(m.0)),
                (Err(m), true) => (Outcome::ExpectedFail, Some(m.0)),
            };
            results.push(CheckResult {
                suite: s,
                name: format!("{}: {}", s.name(), check.name),
                outcome,
                mismatch,
                generating_function: check.gf,
                elapsed,
            });
        }
    }
    Report { results }
}

struct Mismatch(String);

impl From<Error> for Mismatch {
    fn from(e: Error) -> Self {
        Mismatch(format!("error: {e}"))
    }
}

type Verdict = Result<(), Mismatch>;

struct Ctx {
    depth: usize,
    seed: u64,
}

impl Ctx {
    fn size(&self) -> usize {
        self.depth + 2
    }

    fn big(&self) -> usize {
        self.depth + 4
    }

    fn poly_n(&self) -> usize {
        self.depth.min(8)
    }

    fn rng(&self, tag: &str) -> ChaCha8Rng {
        // FNV-1a, so the stream depends only on the tag.
        let h = tag.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> ExactRational {
    ratio(rng.gen_range(-12..=12), rng.gen_range(1..=7)).unwrap()
}

/// Five distinct points, avoiding `x = 1`.
fn sample_points(ctx: &Ctx, tag: &str) -> Vec<ExactRational> {
    let mut rng = ctx.rng(tag);
    let mut xs: Vec<ExactRational> = Vec::new();
    while xs.len() < 5 {
        let x = random_rational(&mut rng);
        if !x.is_one() && !xs.contains(&x) {
            xs.push(x);
        }
    }
    xs
}

fn random_series(rng: &mut ChaCha8Rng, order: usize) -> RationalFps {
    Fps::from_fn(order, |_| random_rational(rng))
}

fn with_constant(f: RationalFps, c0: ExactRational) -> RationalFps {
    let mut cs = f.into_coeffs();
    cs[0] = c0;
    Fps::new(cs)
}

fn nonzero(rng: &mut ChaCha8Rng) -> ExactRational {
    loop {
        let x = random_rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// `f(0) = 0`, `f'(0) != 0`.
fn random_admissible(rng: &mut ChaCha8Rng, order: usize) -> RationalFps {
    let c1 = nonzero(rng);
    let mut cs = random_series(rng, order).into_coeffs();
    cs[0] = int(0);
    cs[1] = c1;
    Fps::new(cs)
}

fn grid(max_d: u32) -> Vec<ProgressionParams> {
    (1..=max_d)
        .flat_map(|d| (0..=d).map(move |a| ProgressionParams::new(d, a).unwrap()))
        .collect()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(Mismatch(what()))
    }
}

fn same_value(lhs: &ExactRational, rhs: &ExactRational, what: impl FnOnce() -> String) -> Verdict {
    ensure(lhs == rhs, || format!("{}: {} vs {}", what(), render(lhs), render(rhs)))
}

fn same_triangle(lhs: &RationalTriangle, rhs: &RationalTriangle, what: impl FnOnce() -> String) -> Verdict {
    if lhs.size() != rhs.size() {
        return Err(Mismatch(format!("{}: sizes {} vs {}", what(), lhs.size(), rhs.size())));
    }
    match lhs.first_mismatch(rhs) {
        None => Ok(()),
        Some((n, m)) => Err(Mismatch(format!(
            "{}: entry ({n},{m}): {} vs {}",
            what(),
            render(&lhs.get(n, m)),
            render(&rhs.get(n, m))
        ))),
    }
}

fn same_series(lhs: &RationalFps, rhs: &RationalFps, what: impl FnOnce() -> String) -> Verdict {
    let order = lhs.order().min(rhs.order());
    match (0..=order).find(|&k| lhs.coeff(k) != rhs.coeff(k)) {
        None => Ok(()),
        Some(k) => Err(Mismatch(format!(
            "{}: coefficient t^{k}: {} vs {}",
            what(),
            render(lhs.coeff(k)),
            render(rhs.coeff(k))
        ))),
    }
}

fn same_poly(lhs: &RationalPoly, rhs: &RationalPoly, what: impl FnOnce() -> String) -> Verdict {
    let len = lhs.coeffs().len().max(rhs.coeffs().len());
    match (0..len).find(|&k| lhs.coeff(k) != rhs.coeff(k)) {
        None => Ok(()),
        Some(k) => Err(Mismatch(format!(
            "{}: coefficient x^{k}: {} vs {}",
            what(),
            render(&lhs.coeff(k)),
            render(&rhs.coeff(k))
        ))),
    }
}

fn entrywise(
    t: &RationalTriangle,
    what: &str,
    mut entry: impl FnMut(usize, usize) -> crate::Result<ExactRational>,
) -> Verdict {
    for n in 0..=t.size() {
        for m in 0..=n {
            let v = entry(n, m)?;
            same_value(&t.get(n, m), &v, || format!("{what}{} ({n},{m})", t.params()))?;
        }
    }
    Ok(())
}

/// `n! [t^n] g f^m / m!` built from the pair's own series is the column entry.
fn pair_columns(pair: &RationalPair, t: &RationalTriangle) -> Verdict {
    let mut col = pair.g.clone();
    for m in 0..=t.size() {
        if m > 0 {
            col = col.mul(&pair.f).scale(&(int(1) / int(m as i64)));
        }
        for n in m..=t.size() {
            same_value(&col.egf_coeff(n), &t.get(n, m), || format!("{} column {m} at n = {n}", pair.label))?;
        }
    }
    Ok(())
}

/// `sum_n P_n(x) t^n / n! = g(t) e^{x f(t)}` at the sample points.
fn row_egf(pair: &RationalPair, t: &RationalTriangle, xs: &[ExactRational]) -> Verdict {
    for x in xs {
        let egf = pair.row_polynomial_egf(x)?;
        for n in 0..=t.size() {
            let v = t.row_polynomial(n).eval(x);
            same_value(&egf.egf_coeff(n), &v, || format!("{} at x = {}, n = {n}", pair.label, render(x)))?;
        }
    }
    Ok(())
}

struct Check {
    name: String,
    gf: bool,
    expected_fail: bool,
    run: Box<dyn Fn(&Ctx) -> Verdict>,
}

fn check(name: &str, run: impl Fn(&Ctx) -> Verdict + 'static) -> Check {
    Check { name: name.into(), gf: false, expected_fail: false, run: Box::new(run) }
}

fn gf_check(name: &str, run: impl Fn(&Ctx) -> Verdict + 'static) -> Check {
    Check { gf: true, ..check(name, run) }
}

fn registry(suite: Suite, options: &VerifyOptions) -> Vec<Check> {
    match suite {
        Suite::All => Vec::new(),
        Suite::Fps => fps_checks(),
        Suite::S2 => s2_checks(),
        Suite::S1 => s1_checks(),
        Suite::Eulerian => eulerian_checks(),
        Suite::Bernoulli => bernoulli_checks(),
        Suite::Faulhaber => faulhaber_checks(),
        Suite::Lah => lah_checks(options.include_printed_three_term),
        Suite::Symfunc => symfunc_checks(),
    }
}

fn fps_checks() -> Vec<Check> {
    vec![
        check("ring laws of the Cauchy product", |c| {
            let order = (2 * c.depth).min(16);
            let mut rng = c.rng("ring");
            for _ in 0..3 {
                let (f, g, h) = (random_series(&mut rng, order), random_series(&mut rng, order), random_series(&mut rng, order));
                same_series(&f.mul(&g).mul(&h), &f.mul(&g.mul(&h)), || "associativity".into())?;
                same_series(&f.mul(&g), &g.mul(&f), || "commutativity".into())?;
                same_series(&f.mul(&(&g + &h)), &(&f.mul(&g) + &f.mul(&h)), || "distributivity".into())?;
            }
            Ok(())
        }),
        check("reversion roundtrip", |c| {
            let order = c.size().min(12);
            let mut rng = c.rng("reversion");
            for _ in 0..3 {
                let f = random_admissible(&mut rng, order);
                let r = f.reverse()?;
                same_series(&r.reverse()?, &f, || "reverse of reverse".into())?;
                same_series(&f.compose(&r)?, &Fps::identity(order), || "f o f^[-1]".into())?;
                same_series(&r.compose(&f)?, &Fps::identity(order), || "f^[-1] o f".into())?;
            }
            Ok(())
        }),
        check("Newton reversion against Lagrange coefficients", |c| {
            let order = c.size().min(10);
            let mut rng = c.rng("lagrange");
            let em1 = &Fps::exp_linear(&int(1), order) - &Fps::one(order);
            same_series(&em1.reverse()?, &em1.lagrange_reverse()?, || "e^t - 1".into())?;
            same_series(&em1.reverse()?, &Fps::log_one_plus(&int(1), order), || "log(1 + t)".into())?;
            for _ in 0..3 {
                let f = random_admissible(&mut rng, order);
                same_series(&f.reverse()?, &f.lagrange_reverse()?, || format!("random series {f}"))?;
            }
            Ok(())
        }),
        check("exp and log are inverse", |c| {
            let order = c.size();
            let mut rng = c.rng("explog");
            for _ in 0..3 {
                let f = with_constant(random_series(&mut rng, order), int(1));
                same_series(&f.log()?.exp()?, &f, || "exp(log f)".into())?;
                let g = with_constant(random_series(&mut rng, order), int(0));
                same_series(&g.exp()?.log()?, &g, || "log(exp g)".into())?;
            }
            Ok(())
        }),
        check("rational powers add and reciprocals invert", |c| {
            let order = c.size();
            let mut rng = c.rng("powers");
            for _ in 0..3 {
                let f = with_constant(random_series(&mut rng, order), int(1));
                let (p, q) = (random_rational(&mut rng), random_rational(&mut rng));
                let lhs = f.pow(&p)?.mul(&f.pow(&q)?);
                same_series(&lhs, &f.pow(&(&p + &q))?, || format!("p = {}, q = {}", render(&p), render(&q)))?;
                let u = with_constant(random_series(&mut rng, order), nonzero(&mut rng));
                same_series(&u.mul(&u.reciprocal()?), &Fps::one(order), || "f / f".into())?;
            }
            Ok(())
        }),
        check("rising and falling factorial duality", |c| {
            let mut rng = c.rng("factorials");
            for params in grid(4) {
                let x = random_rational(&mut rng);
                let ordinary = ProgressionParams::ordinary();
                let (d, a): (ExactRational, ExactRational) = (params.d_scalar(), params.a_scalar());
                for n in 0..=c.big() {
                    let lhs = risefac_eval(params, &x, n);
                    let rhs = sign::<ExactRational>(n) * fallfac_eval(params, &-&x, n);
                    same_value(&lhs, &rhs, || format!("risefac{params} n = {n}"))?;
                    let scaled = integer_power(&d, n) * fallfac_eval(ordinary, &((&x - &a) / &d), n);
                    same_value(&fallfac_eval(params, &x, n), &scaled, || format!("fallfac{params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        check("Sheffer pairs reproduce the recurrence triangles", |c| {
            let size = c.big();
            for params in grid(4) {
                let cases: [(RationalPair, RationalTriangle); 7] = [
                    (s2_pair(params, size), s2_triangle(params, size)),
                    (s2hat_pair(params, size), s2hat_triangle(params, size)),
                    (s1_pair(params, size), s1_triangle(params, size)),
                    (s1phat_pair(params, size), s1phat_triangle(params, size)),
                    (s1hat_pair(params, size), s1hat_triangle(params, size)),
                    (lah_pair(params, size), lah_triangle(params, size)),
                    (lahinv_pair(params, size), lah_inverse(params, size)),
                ];
                for (pair, t) in &cases {
                    let from_pair = pair.triangle(size, t.family(), params)?;
                    same_triangle(&from_pair, t, || pair.label.clone())?;
                }
            }
            Ok(())
        }),
        check("group law matches the triangle product", |c| {
            let size = c.size();
            for params in grid(3) {
                let pairs = [
                    (s2_pair(params, size), s1phat_pair(params, size)),
                    (s1phat_pair(params, size), s2hat_pair(params, size)),
                    (lah_pair(params, size), s2_pair(params, size)),
                ];
                for (p1, p2) in &pairs {
                    let t1 = p1.triangle(size, Family::Generic, params)?;
                    let t2 = p2.triangle(size, Family::Generic, params)?;
                    let prod = p1.multiply(p2)?.triangle(size, Family::Generic, params)?;
                    same_triangle(&t1.multiply(&t2)?, &prod, || format!("{} * {}", p1.label, p2.label))?;
                }
            }
            Ok(())
        }),
        check("pair inverse matches the triangle inverse", |c| {
            let size = c.size();
            for params in grid(3) {
                for pair in [s2_pair(params, size), lah_pair(params, size), s1phat_pair(params, size)] {
                    let t = pair.triangle(size, Family::Generic, params)?;
                    let inv = pair.inverse()?.triangle(size, Family::Generic, params)?;
                    same_triangle(&t.inverse()?, &inv, || format!("inverse of {}", pair.label))?;
                }
            }
            Ok(())
        }),
        gf_check("Sheffer transform of a sequence", |c| {
            let size = c.size();
            let mut rng = c.rng("transform");
            for params in grid(3) {
                let seq: Vec<ExactRational> = (0..=size).map(|_| random_rational(&mut rng)).collect();
                let a = Fps::from_fn(size, |k| &seq[k] / ExactRational::factorial(k));
                for pair in [s2_pair(params, size), s1phat_pair(params, size), lah_pair(params, size)] {
                    let t = pair.triangle(size, Family::Generic, params)?;
                    let b = pair.transform(&a)?;
                    let applied = t.apply(&seq);
                    for (n, v) in applied.iter().enumerate() {
                        same_value(&b.egf_coeff(n), v, || format!("{} at n = {n}", pair.label))?;
                    }
                }
            }
            Ok(())
        }),
    ]
}

fn s2_checks() -> Vec<Check> {
    vec![
        check("recurrence, explicit sum, ordinary route and Sheffer pair agree", |c| {
            let size = c.size();
            for params in grid(4) {
                let t = s2_triangle(params, size);
                entrywise(&t, "explicit sum", |n, m| s2_explicit(params, n, m))?;
                entrywise(&t, "ordinary route", |n, m| s2_from_ordinary(params, n, m))?;
                entrywise(&t, "pair element", |n, m| s2_pair(params, size).element(n, m))?;
                let s2fac = s2fac_triangle(params, size);
                entrywise(&s2fac, "S2 m!", |n, m| Ok(t.get(n, m) * ExactRational::factorial(m)))?;
            }
            Ok(())
        }),
        gf_check("column e.g.f.", |c| {
            for params in grid(4) {
                same_pair_columns(s2_pair(params, c.size()), s2_triangle(params, c.size()))?;
            }
            Ok(())
        }),
        gf_check("column o.g.f. and its partial fractions", |c| {
            let size = c.size();
            for params in grid(4) {
                let t = s2_triangle(params, size);
                for m in 0..=c.depth.min(6) {
                    let col = s2_column_ogf(params, m, size)?;
                    let pf = s2_column_ogf_partial_fractions(params, m, size);
                    same_series(&col, &pf, || format!("{params} column {m}"))?;
                    for n in 0..=size {
                        let entry = if m <= n { t.get(n, m) } else { int(0) };
                        same_value(col.coeff(n), &entry, || format!("{params} column {m} at n = {n}"))?;
                    }
                }
            }
            Ok(())
        }),
        check("ordinary numbers recovered from general ones", |c| {
            let ordinary = s2_triangle(ProgressionParams::ordinary(), c.size());
            for params in grid(4).into_iter().filter(|p| p.a() > 0) {
                entrywise(&ordinary, &format!("from {params}"), |n, m| s2_ordinary_from_general(params, n, m))?;
            }
            Ok(())
        }),
        check("row polynomial recurrence", |c| {
            for params in grid(4) {
                let t = s2_triangle(params, c.size());
                for n in 1..=c.size() {
                    let step = s2_row_step(params, &t.row_polynomial(n - 1));
                    same_poly(&step, &t.row_polynomial(n), || format!("{params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        check("Meixner recurrences of S2 and scaled S2 rows", |c| {
            for params in grid(4) {
                let s2 = s2_triangle(params, c.poly_n());
                let hat = s2hat_triangle(params, c.poly_n());
                for n in 1..=c.poly_n() {
                    let lhs = s2.row_polynomial(n).apply_d_series(&s2_meixner_coeffs(params, n));
                    same_poly(&lhs, &meixner_rhs(&s2, n), || format!("S2{params} n = {n}"))?;
                    let lhs = hat.row_polynomial(n).apply_d_series(&s2hat_meixner_coeffs(params, n));
                    same_poly(&lhs, &meixner_rhs(&hat, n), || format!("S2hat{params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        check("monomials expand in the falling-factorial basis", |c| {
            for params in grid(4) {
                for n in 0..=c.poly_n() {
                    let lhs = expand_in_fallfac(params, &monomial_in_fallfac(params, n));
                    same_poly(&lhs, &Polynomial::monomial(int(1), n), || format!("{params} x^{n}"))?;
                }
            }
            Ok(())
        }),
        gf_check("row polynomial e.g.f.", |c| {
            let xs = sample_points(c, "s2 rows");
            for params in grid(4) {
                row_egf(&s2_pair(params, c.size()), &s2_triangle(params, c.size()), &xs)?;
            }
            Ok(())
        }),
        gf_check("row sums of S2 m! by e.g.f.", |c| {
            for params in grid(4) {
                let (lhs, rhs) = s2fac_row_sum_egf_sides(params, c.size())?;
                same_series(&lhs, &rhs, || params.to_string())?;
            }
            Ok(())
        }),
    ]
}

fn same_pair_columns(pair: RationalPair, t: RationalTriangle) -> Verdict {
    pair_columns(&pair, &t)
}

fn s1_checks() -> Vec<Check> {
    vec![
        check("scaled S1p by recurrence, sigma formula, ordinary route and both Schlomilch forms", |c| {
            let n_max = c.poly_n();
            for params in grid(3) {
                let t = s1phat_triangle(params, n_max);
                entrywise(&t, "sigma formula", |n, m| s1phat_from_sigma(params, n, m))?;
                entrywise(&t, "ordinary route", |n, m| s1phat_from_ordinary(params, n, m))?;
                entrywise(&t, "Schlomilch", |n, m| s1phat_schlomilch(params, n, m))?;
                entrywise(&t, "second Schlomilch", |n, m| s1phat_schlomilch_v2(params, n, m))?;
                for n in 0..=n_max {
                    same_value(&t.get(n, 0), &s1phat_column0(params, n), || format!("column 0{params} n = {n}"))?;
                }
            }
            let ordinary = s1p_triangle(ProgressionParams::ordinary(), n_max);
            entrywise(&ordinary, "ordinary Schlomilch", s1p_ordinary_schlomilch)
        }),
        check("S2 times S1 is the identity", |c| {
            let size = c.big();
            let id = RationalTriangle::identity(size);
            for params in grid(4) {
                let s2 = s2_triangle(params, size);
                let s1 = s1_pair(params, size).triangle(size, Family::S1, params)?;
                same_triangle(&s2.multiply(&s1)?, &id, || format!("S2{params} S1{params}"))?;
                same_triangle(&s1.multiply(&s2)?, &id, || format!("S1{params} S2{params}"))?;
                same_triangle(&s2.inverse()?, &s1, || format!("inverse of S2{params}"))?;
            }
            Ok(())
        }),
        check("signed inverse of scaled S2 is scaled S1p", |c| {
            let size = c.big();
            for params in grid(4) {
                let inv = s2hat_triangle(params, size).inverse()?;
                let s1p = s1phat_triangle(params, size);
                entrywise(&s1p, "|inverse|", |n, m| Ok(sign::<ExactRational>(n - m) * inv.get(n, m)))?;
            }
            Ok(())
        }),
        check("scaled S1p rows are rising factorials", |c| {
            let xs = sample_points(c, "s1 rising");
            for params in grid(4) {
                let t = s1phat_triangle(params, c.size());
                for n in 0..=c.size() {
                    let p = t.row_polynomial(n);
                    same_poly(&p, &Polynomial::risefac(params, n), || format!("{params} n = {n}"))?;
                    for x in &xs {
                        same_value(&p.eval(x), &risefac_eval(params, x, n), || format!("{params} n = {n} x = {}", render(x)))?;
                    }
                }
            }
            Ok(())
        }),
        check("scaled S1 rows are falling factorials", |c| {
            for params in grid(4) {
                let t = s1hat_triangle(params, c.size());
                for n in 0..=c.size() {
                    same_poly(&t.row_polynomial(n), &Polynomial::fallfac(params, n), || format!("{params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        check("Meixner recurrence of scaled S1p rows", |c| {
            for params in grid(4) {
                let t = s1phat_triangle(params, c.poly_n());
                for n in 1..=c.poly_n() {
                    let lhs = t.row_polynomial(n).apply_d_series(&s1phat_meixner_coeffs(params, n));
                    same_poly(&lhs, &meixner_rhs(&t, n), || format!("{params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        check("shifted forward recurrence of scaled S1p rows", |c| {
            for params in grid(4) {
                let t = s1phat_triangle(params, c.size());
                for n in 1..=c.size() {
                    let step = s1phat_row_step(params, &t.row_polynomial(n - 1));
                    same_poly(&step, &t.row_polynomial(n), || format!("{params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        gf_check("column e.g.f. of scaled S1p", |c| {
            for params in grid(4) {
                same_pair_columns(s1phat_pair(params, c.size()), s1phat_triangle(params, c.size()))?;
            }
            Ok(())
        }),
        gf_check("row polynomial e.g.f. of scaled S1p", |c| {
            let xs = sample_points(c, "s1 rows");
            for params in grid(4) {
                row_egf(&s1phat_pair(params, c.size()), &s1phat_triangle(params, c.size()), &xs)?;
            }
            Ok(())
        }),
        gf_check("falling factorial e.g.f.", |c| {
            let xs = sample_points(c, "fallfac egf");
            for params in grid(4) {
                for x in &xs {
                    let (lhs, rhs) = fallfac_egf_sides(params, x, c.size());
                    same_series(&lhs, &rhs, || format!("{params} x = {}", render(x)))?;
                }
            }
            Ok(())
        }),
    ]
}

fn eulerian_checks() -> Vec<Check> {
    vec![
        check("recurrence, explicit sum, S2fac reordering and ordinary route agree", |c| {
            for params in grid(4) {
                let t = reu_triangle(params, c.size());
                entrywise(&t, "explicit sum", |n, k| reu_explicit(params, n, k))?;
                entrywise(&t, "from S2fac", |n, k| reu_from_s2fac(params, n, k))?;
                entrywise(&t, "ordinary route", |n, k| reu_from_ordinary(params, n, k))?;
                let s2fac = s2fac_triangle(params, c.size());
                entrywise(&s2fac, "S2fac from rEu", |n, m| s2fac_from_reu(params, n, m))?;
            }
            Ok(())
        }),
        check("row sums are d^n n!", |c| {
            for params in grid(4) {
                let t = reu_triangle(params, c.size());
                let d: ExactRational = params.d_scalar();
                for n in 0..=c.size() {
                    let sum = t.row(n).iter().fold(ExactRational::zero(), |acc, v| acc + v);
                    let expect = integer_power(&d, n) * ExactRational::factorial(n);
                    same_value(&sum, &expect, || format!("{params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        check("row reversal under a to d - a", |c| {
            for d in 2..=5u32 {
                for a in 1..d {
                    let p = ProgressionParams::new(d, a).unwrap();
                    let q = ProgressionParams::new(d, d - a).unwrap();
                    let rev = reverse_rows(&reu_triangle(p, c.poly_n()));
                    same_triangle(&reu_triangle(q, c.poly_n()), &rev.with_family(Family::REu, q), || format!("{q} vs {p}"))?;
                }
            }
            Ok(())
        }),
        check("first column and degree bound", |c| {
            for params in grid(4) {
                let t = reu_triangle(params, c.size());
                let a: ExactRational = params.a_scalar();
                for n in 0..=c.size() {
                    same_value(&t.get(n, 0), &integer_power(&a, n), || format!("{params} rEu({n},0)"))?;
                    let sigma: Vec<ExactRational> = (0..=n + 1).map(|j| sigma_s2(params, n, j)).collect();
                    let a_coeffs = reorder_b_to_a(&sigma, n + 1)?;
                    same_value(&a_coeffs[n + 1], &int(0), || format!("{params} top coefficient n = {n}"))?;
                    for k in 0..=n {
                        same_value(&a_coeffs[k], &t.get(n, k), || format!("{params} reordered ({n},{k})"))?;
                    }
                }
            }
            Ok(())
        }),
        gf_check("powers o.g.f. over (1 - x)^{n+1}", |c| {
            for params in grid(4) {
                for n in 0..=c.poly_n() {
                    let (lhs, rhs) = powers_ogf_sides(params, n, c.big())?;
                    same_series(&lhs, &rhs, || format!("{params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        check("numerator polynomial from S2fac rows", |c| {
            for params in grid(4) {
                for n in 0..=c.poly_n() {
                    let lhs = preu_polynomial(params, n);
                    same_poly(&lhs, &preu_from_s2fac_polynomial(params, n), || format!("{params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        gf_check("bivariate e.g.f. of the numerator polynomials", |c| {
            let xs = sample_points(c, "eulerian egf");
            for params in grid(4) {
                for x in &xs {
                    let (lhs, rhs) = preu_egf_sides(params, x, c.size())?;
                    same_series(&lhs, &rhs, || format!("{params} x = {}", render(x)))?;
                }
            }
            Ok(())
        }),
    ]
}

/// `(e^{d t} - 1) / (d t)` to `order`.
fn bernoulli_denominator(params: ProgressionParams, order: usize) -> RationalFps {
    let d: ExactRational = params.d_scalar();
    (&Fps::exp_linear(&d, order + 1) - &Fps::one(order + 1)).shift_down().scale(&(int(1) / d))
}

fn bernoulli_checks() -> Vec<Check> {
    vec![
        check("Bernoulli numbers by recursion and by Stirling sums", |c| {
            let count = c.big() + 1;
            let b = bernoulli_numbers(count);
            let via = b_gen_numbers(ProgressionParams::ordinary(), count);
            for n in 0..count {
                same_value(&b[n], &via[n], || format!("B({n})"))?;
            }
            let known = [(0, int(1)), (1, ratio(-1, 2).unwrap()), (2, ratio(1, 6).unwrap()), (12, ratio(-691, 2730).unwrap())];
            for (n, v) in known.iter().filter(|(n, _)| *n < count) {
                same_value(&b[*n], v, || format!("B({n})"))?;
            }
            Ok(())
        }),
        check("Stirling and ordinary routes agree", |c| {
            for params in grid(4) {
                let nums = b_gen_numbers(params, c.size() + 1);
                for n in 0..=c.size() {
                    same_value(&nums[n], &b_gen_via_ordinary(params, n), || format!("B{params}({n})"))?;
                    let (lhs, rhs) = (b_gen_poly(params, n), b_gen_poly_via_ordinary(params, n));
                    same_poly(&lhs, &rhs, || format!("B{params}({n},x)"))?;
                }
            }
            Ok(())
        }),
        gf_check("e.g.f. d t e^{a t} / (e^{d t} - 1)", |c| {
            let order = c.big();
            for params in grid(4) {
                let nums = b_gen_numbers(params, order + 1);
                let egf = Fps::exp_linear(&params.a_scalar(), order).div(&bernoulli_denominator(params, order))?;
                let lhs = Fps::from_fn(order, |n| &nums[n] / ExactRational::factorial(n));
                same_series(&lhs, &egf, || params.to_string())?;
                same_series(&b_gen_egf(params, order)?, &egf, || format!("library e.g.f. {params}"))?;
            }
            Ok(())
        }),
        gf_check("bivariate e.g.f. of the polynomials", |c| {
            let order = c.size();
            let xs = sample_points(c, "bernoulli egf");
            for params in grid(4) {
                let polys: Vec<RationalPoly> = (0..=order).map(|n| b_gen_poly(params, n)).collect();
                for x in &xs {
                    let lhs = Fps::from_fn(order, |n| polys[n].eval(x) / ExactRational::factorial(n));
                    let num = Fps::exp_linear(&(params.a_scalar::<ExactRational>() + x), order);
                    let rhs = num.div(&bernoulli_denominator(params, order))?;
                    same_series(&lhs, &rhs, || format!("{params} x = {}", render(x)))?;
                }
            }
            Ok(())
        }),
        gf_check("Appell e.g.f. of the one-parameter polynomials", |c| {
            let order = c.size();
            let xs = sample_points(c, "appell egf");
            for d in 1..=4u32 {
                let params = ProgressionParams::new(d, 0).unwrap();
                let polys: Vec<RationalPoly> = (0..=order).map(|n| b_d_poly(d, n)).collect();
                for x in &xs {
                    let lhs = Fps::from_fn(order, |n| polys[n].eval(x) / ExactRational::factorial(n));
                    let rhs = Fps::exp_linear(x, order).div(&bernoulli_denominator(params, order))?;
                    same_series(&lhs, &rhs, || format!("d = {d} x = {}", render(x)))?;
                }
            }
            Ok(())
        }),
        check("Appell derivative property", |c| {
            for params in grid(4) {
                for n in 1..=c.big() {
                    let lhs = b_d_poly(params.d(), n).derivative();
                    same_poly(&lhs, &b_d_poly(params.d(), n - 1).scale(&int(n as i64)), || format!("d = {} n = {n}", params.d()))?;
                    let lhs = b_gen_poly(params, n).derivative();
                    same_poly(&lhs, &b_gen_poly(params, n - 1).scale(&int(n as i64)), || format!("{params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        check("offset drops out of the binomial convolution", |c| {
            let count = c.big() + 1;
            for d in 1..=4u32 {
                let target = b_d_numbers(d, count);
                for a in 0..=4u32 {
                    let params = ProgressionParams::new(d, a).unwrap();
                    let nums = b_gen_numbers(params, count);
                    let minus_a = -params.a_scalar::<ExactRational>();
                    for n in 0..count {
                        let s = (0..=n).fold(ExactRational::zero(), |acc, m| {
                            acc + big(binomial(n, m)) * &nums[n - m] * integer_power(&minus_a, m)
                        });
                        same_value(&s, &target[n], || format!("{params} n = {n}"))?;
                    }
                }
            }
            Ok(())
        }),
        check("parity under a to d - a", |c| {
            let count = c.big() + 1;
            for d in 2..=5u32 {
                for a in 1..d {
                    let lhs = b_gen_numbers(ProgressionParams::new(d, d - a).unwrap(), count);
                    let rhs = b_gen_numbers(ProgressionParams::new(d, a).unwrap(), count);
                    for n in 0..count {
                        same_value(&lhs[n], &(sign::<ExactRational>(n) * &rhs[n]), || format!("[{d},{a}] n = {n}"))?;
                    }
                }
            }
            Ok(())
        }),
    ]
}

fn faulhaber_checks() -> Vec<Check> {
    vec![
        gf_check("direct, ordinary, Faulhaber, e.g.f. and both o.g.f. routes agree", |c| {
            let max_m = c.big();
            for params in grid(4) {
                for n in 0..=c.poly_n() {
                    let eps = eps_coefficients(params, n, max_m);
                    let stacked = gps_coefficients(params, n, max_m, OgfRoute::Stacked)?;
                    let eulerian = gps_coefficients(params, n, max_m, OgfRoute::Eulerian)?;
                    for m in 0..=max_m {
                        let q = PowerSumQuery::new(params, n, m);
                        let oracle = ps_direct(q);
                        let at = || format!("PS{params}({n},{m})");
                        same_value(&ps_via_ordinary(q), &oracle, || format!("ordinary {}", at()))?;
                        same_value(&ps_faulhaber(q), &oracle, || format!("faulhaber {}", at()))?;
                        same_value(&eps[m], &oracle, || format!("egf {}", at()))?;
                        same_value(&stacked[m], &oracle, || format!("ogf-stacked {}", at()))?;
                        same_value(&eulerian[m], &oracle, || format!("ogf-eulerian {}", at()))?;
                    }
                }
            }
            Ok(())
        }),
        check("spot value with the one-parameter Bernoulli polynomial", |_| {
            let params = ProgressionParams::new(2, 1).unwrap();
            same_value(&ps_faulhaber(PowerSumQuery::new(params, 2, 2)), &int(35), || "PS[2,1](2,2)".into())?;
            let expect = Polynomial::new(vec![int(0), int(2), int(-3), int(1)]);
            same_poly(&b_d_poly(2, 3), &expect, || "B(2;3,x)".into())
        }),
        gf_check("powers by e.g.f. and o.g.f. of S2 rows", |c| {
            for params in grid(4) {
                for n in 0..=c.poly_n() {
                    let egf = powers_egf(params, n, c.size());
                    let ogf = powers_ogf(params, n, c.size())?;
                    for m in 0..=c.size() {
                        let v = term_power(params, m, n);
                        same_value(&egf.egf_coeff(m), &v, || format!("e.g.f. {params} n = {n} m = {m}"))?;
                        same_value(ogf.coeff(m), &v, || format!("o.g.f. {params} n = {n} m = {m}"))?;
                    }
                }
            }
            Ok(())
        }),
        check("binomial splitting into ordinary power sums", |c| {
            let ordinary = ProgressionParams::ordinary();
            for params in grid(4) {
                let (d, a): (ExactRational, ExactRational) = (params.d_scalar(), params.a_scalar());
                for n in 0..=c.poly_n() {
                    for m in 0..=c.big() {
                        let split = (0..=n).fold(ExactRational::zero(), |acc, k| {
                            acc + big(binomial(n, k))
                                * integer_power(&a, n - k)
                                * integer_power(&d, k)
                                * ps_direct(PowerSumQuery::new(ordinary, k, m))
                        });
                        same_value(&ps_direct(PowerSumQuery::new(params, n, m)), &split, || format!("{params} n = {n} m = {m}"))?;
                    }
                }
            }
            Ok(())
        }),
        check("sigma coefficients from reordered Eulerian rows", |c| {
            for params in grid(4) {
                let t = reu_triangle(params, c.poly_n());
                for n in 0..=c.poly_n() {
                    let mut row = t.row(n).to_vec();
                    row.push(int(0));
                    let b = reorder_a_to_b(&row, n + 1)?;
                    for (j, v) in b.iter().enumerate() {
                        same_value(v, &sigma_s2(params, n, j), || format!("{params} n = {n} j = {j}"))?;
                    }
                }
            }
            Ok(())
        }),
    ]
}

fn lah_checks(include_printed: bool) -> Vec<Check> {
    let mut checks = vec![
        check("product, Sheffer pair, four-term and three-term routes agree", |c| {
            let size = c.size();
            for params in grid(4) {
                let l = lah_triangle(params, size);
                same_triangle(&lah_sheffer_triangle(params, size), &l, || format!("pair {params}"))?;
                same_triangle(&lah_four_term(params, size), &l, || format!("four-term {params}"))?;
                same_triangle(&lah_three_term(params, size), &l, || format!("three-term {params}"))?;
                let col0 = lah_column0(params, size);
                for n in 0..=size {
                    same_value(&l.get(n, 0), &col0[n], || format!("column 0 {params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        check("inverse by signs, by its recurrence and by its pair", |c| {
            let size = c.size();
            let id = RationalTriangle::identity(size);
            for params in grid(4) {
                let l = lah_triangle(params, size);
                let inv = lah_inverse(params, size);
                same_triangle(&l.multiply(&inv)?, &id, || format!("L L^-1 {params}"))?;
                same_triangle(&l.inverse()?.with_family(Family::LahInv, params), &inv, || format!("inverse {params}"))?;
                same_triangle(&lahinv_four_term(params, size), &inv, || format!("four-term {params}"))?;
                let from_pair = lahinv_pair(params, size).triangle(size, Family::LahInv, params)?;
                same_triangle(&from_pair, &inv, || format!("pair {params}"))?;
            }
            Ok(())
        }),
        check("rising factorials in the falling-factorial basis and back", |c| {
            for params in grid(3) {
                let l = lah_triangle(params, c.poly_n());
                let inv = lah_inverse(params, c.poly_n());
                for n in 0..=c.poly_n() {
                    let lhs = expand_in_fallfac(params, l.row(n));
                    same_poly(&lhs, &Polynomial::risefac(params, n), || format!("risefac{params} n = {n}"))?;
                    let lhs = expand_in_risefac(params, inv.row(n));
                    same_poly(&lhs, &Polynomial::fallfac(params, n), || format!("fallfac{params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        check("Meixner recurrences of L and its inverse", |c| {
            for params in grid(4) {
                let l = lah_triangle(params, c.poly_n());
                let inv = lah_inverse(params, c.poly_n());
                for n in 1..=c.poly_n() {
                    let lhs = l.row_polynomial(n).apply_d_series(&lah_meixner_coeffs(params, n));
                    same_poly(&lhs, &meixner_rhs(&l, n), || format!("L{params} n = {n}"))?;
                    let lhs = inv.row_polynomial(n).apply_d_series(&lahinv_meixner_coeffs(params, n));
                    same_poly(&lhs, &meixner_rhs(&inv, n), || format!("L^-1{params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        check("second-order differential recurrences of L and its inverse", |c| {
            for params in grid(4) {
                let l = lah_triangle(params, c.poly_n());
                let inv = lah_inverse(params, c.poly_n());
                for n in 1..=c.poly_n() {
                    let step = lah_roman_step(params, &l.row_polynomial(n - 1));
                    same_poly(&step, &l.row_polynomial(n), || format!("L{params} n = {n}"))?;
                    let step = lahinv_roman_step(params, &inv.row_polynomial(n - 1));
                    same_poly(&step, &inv.row_polynomial(n), || format!("L^-1{params} n = {n}"))?;
                }
            }
            Ok(())
        }),
        check("a- and z-sequences", |c| {
            let order = c.depth.min(8);
            for params in grid(4) {
                let (d, a) = (params.d() as i64, params.a() as i64);
                let (aseq, z) = lah_pair(params, order + 1).a_z_sequences(order)?;
                let one_plus_dy = Fps::from_polynomial(&Polynomial::linear(int(1), int(d)), order);
                same_series(&aseq, &one_plus_dy, || format!("a-sequence {params}"))?;
                let pw = Fps::one_plus_pow(&int(d), &ratio(-2 * a, d).unwrap(), order + 1);
                let closed = (&Fps::one(order + 1) - &pw).shift_down().mul(&one_plus_dy);
                same_series(&z, &closed, || format!("z-sequence {params}"))?;
            }
            Ok(())
        }),
        gf_check("column e.g.f.", |c| {
            for params in grid(4) {
                same_pair_columns(lah_pair(params, c.size()), lah_triangle(params, c.size()))?;
            }
            Ok(())
        }),
        gf_check("row polynomial e.g.f.", |c| {
            let xs = sample_points(c, "lah rows");
            for params in grid(4) {
                row_egf(&lah_pair(params, c.size()), &lah_triangle(params, c.size()), &xs)?;
            }
            Ok(())
        }),
        check("three-term recurrence with coefficient n holds for d = 1", |c| {
            for params in grid(1) {
                let lhs = lah_three_term_printed(params, c.size());
                same_triangle(&lhs, &lah_triangle(params, c.size()), || params.to_string())?;
            }
            Ok(())
        }),
    ];
    if include_printed {
        for d in 2..=3u32 {
            checks.push(Check {
                expected_fail: true,
                ..check(&format!("three-term recurrence with coefficient n, d = {d}"), move |c| {
                    for a in 0..=d {
                        let params = ProgressionParams::new(d, a).unwrap();
                        let lhs = lah_three_term_printed(params, c.size());
                        same_triangle(&lhs, &lah_triangle(params, c.size()), || params.to_string())?;
                    }
                    Ok(())
                })
            });
        }
    }
    checks
}

fn symfunc_checks() -> Vec<Check> {
    vec![
        check("cuboid examples by recurrence, symmetric functions and enumeration", |_| {
            let cases: [(&str, u32, u32, usize, usize, i64); 6] = [
                ("S2hat", 1, 0, 3, 2, 3),
                ("S2hat", 2, 1, 3, 2, 9),
                ("S2hat", 3, 2, 3, 1, 39),
                ("S1phat", 1, 0, 4, 2, 11),
                ("S1phat", 2, 1, 4, 1, 176),
                ("S1phat", 3, 1, 4, 0, 280),
            ];
            for (family, d, a, n, m, expect) in cases {
                let params = ProgressionParams::new(d, a).unwrap();
                let at = || format!("{family}{params}({n},{m})");
                let (rec, sym, oracle) = if family == "S2hat" {
                    let alphabet = Alphabet::progression(params, m + 1);
                    (
                        s2hat_triangle(params, n).get(n, m),
                        complete_h(&alphabet, n - m),
                        cuboid_volume_oracle(&alphabet, n - m, false)?.volume,
                    )
                } else {
                    let alphabet = Alphabet::progression(params, n);
                    (
                        s1phat_triangle(params, n).get(n, m),
                        elementary_sigma(&alphabet, n - m)?,
                        cuboid_volume_oracle(&alphabet, n - m, true)?.volume,
                    )
                };
                same_value(&rec, &int(expect), || format!("recurrence {}", at()))?;
                same_value(&sym, &int(expect), || format!("symmetric function {}", at()))?;
                same_value(&oracle, &int(expect), || format!("enumeration {}", at()))?;
            }
            Ok(())
        }),
        check("scaled S2 entries are complete homogeneous functions", |c| {
            let size = c.size().min(9);
            for params in grid(3) {
                let t = s2hat_triangle(params, size);
                entrywise(&t, "h", |n, m| Ok(complete_h(&Alphabet::progression(params, m + 1), n - m)))?;
            }
            Ok(())
        }),
        check("scaled S1p entries are elementary symmetric functions", |c| {
            let size = c.size().min(9);
            for params in grid(3) {
                let t = s1phat_triangle(params, size);
                entrywise(&t, "sigma", |n, m| elementary_sigma(&Alphabet::progression(params, n), n - m))?;
            }
            Ok(())
        }),
        check("zero symbol can be dropped for ordinary S2", |c| {
            let t = s2_triangle(ProgressionParams::ordinary(), c.size());
            entrywise(&t, "h without 0", |n, m| {
                if m == 0 {
                    return Ok(t.get(n, 0));
                }
                let alphabet = Alphabet::progression(ProgressionParams::ordinary(), m + 1).without_zeros();
                Ok(complete_h(&alphabet, n - m))
            })
        }),
        check("enumeration oracle against generating products", |c| {
            let max = c.depth.min(6);
            let mut rng = c.rng("oracle");
            let mut alphabets: Vec<Alphabet> = Vec::new();
            for params in grid(3) {
                alphabets.extend((0..=max).map(|k| Alphabet::progression(params, k)));
            }
            alphabets.extend((0..=max).map(|k| Alphabet::from_symbols((0..k).map(|_| random_rational(&mut rng)).collect())));
            for alphabet in &alphabets {
                let k = alphabet.count();
                for degree in 0..=max {
                    let multi = cuboid_volume_oracle(alphabet, degree, false)?;
                    same_value(&multi.volume, &complete_h(alphabet, degree), || format!("h_{degree} over {k} symbols"))?;
                    ensure(multi.cuboids == multichoose(k, degree), || format!("multiset count {k} choose {degree}"))?;
                    if degree <= k {
                        let sub = cuboid_volume_oracle(alphabet, degree, true)?;
                        same_value(&sub.volume, &elementary_sigma(alphabet, degree)?, || format!("sigma_{degree} over {k} symbols"))?;
                        ensure(sub.cuboids == binomial(k, degree), || format!("subset count {k} choose {degree}"))?;
                    }
                }
            }
            Ok(())
        }),
        check("elementary and complete functions are dual", |c| {
            let mut rng = c.rng("duality");
            for k in 1..=c.depth.min(6) {
                let alphabet = Alphabet::from_symbols((0..k).map(|_| random_rational(&mut rng)).collect());
                for r in 1..=c.depth {
                    let s = (0..=r.min(k)).try_fold(ExactRational::zero(), |acc, j| {
                        Ok::<_, Error>(acc + sign::<ExactRational>(j) * elementary_sigma(&alphabet, j)? * complete_h(&alphabet, r - j))
                    })?;
                    same_value(&s, &int(0), || format!("r = {r} over {k} symbols"))?;
                }
            }
            Ok(())
        }),
    ]
}
