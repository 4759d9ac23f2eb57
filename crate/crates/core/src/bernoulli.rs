//! Bernoulli numbers and polynomials: ordinary `B(n)` with `B(1) = -1/2`,
//! the two-parameter `B(d,a;n)` and the one-parameter `B(d;n) = d^n B(n)`.

use num_traits::Zero;

use crate::error::Result;
use crate::exact::{big, binomial, int, integer_power, sign, ProgressionParams};
use crate::fps::Fps;
use crate::poly::Polynomial;
use crate::stirling::s2_triangle;
use crate::{ExactRational, RationalFps, RationalPoly};

/// `B(0..=count-1)` from
/// `B(n) = (delta_{n,0} - sum_{k<n} binom(n+1,k) B(k)) / (n+1)`.
pub fn bernoulli_numbers(count: usize) -> Vec<ExactRational> {
    let mut out: Vec<ExactRational> = Vec::with_capacity(count);
    for n in 0..count {
        let delta = if n == 0 { int(1) } else { int(0) };
        let sum = (0..n).fold(ExactRational::zero(), |acc, k| acc + big(binomial(n + 1, k)) * &out[k]);
        out.push((delta - sum) / int(n as i64 + 1));
    }
    out
}

/// `B(n,x) = sum_m binom(n,m) B(n-m) x^m`.
pub fn bernoulli_poly(n: usize) -> RationalPoly {
    appell_poly(&bernoulli_numbers(n + 1), n)
}

fn appell_poly(numbers: &[ExactRational], n: usize) -> RationalPoly {
    Polynomial::new((0..=n).map(|m| big(binomial(n, m)) * &numbers[n - m]).collect())
}

/// `B(d,a;0..=count-1)` from `sum_m (-1)^m S2(d,a;n,m) m! / (m+1)`.
pub fn b_gen_numbers(params: ProgressionParams, count: usize) -> Vec<ExactRational> {
    if count == 0 {
        return Vec::new();
    }
    let s2 = s2_triangle(params, count - 1);
    (0..count)
        .map(|n| {
            (0..=n).fold(ExactRational::zero(), |acc, m| {
                acc + sign::<ExactRational>(m) * s2.get(n, m) * ExactRational::from_integer(crate::exact::factorial(m))
                    / int(m as i64 + 1)
            })
        })
        .collect()
}

pub fn b_gen(params: ProgressionParams, n: usize) -> ExactRational {
    b_gen_numbers(params, n + 1).swap_remove(n)
}

/// `sum_m binom(n,m) a^{n-m} d^m B(m)`.
pub fn b_gen_via_ordinary(params: ProgressionParams, n: usize) -> ExactRational {
    let b = bernoulli_numbers(n + 1);
    let (d, a): (ExactRational, ExactRational) = (params.d_scalar(), params.a_scalar());
    (0..=n).fold(ExactRational::zero(), |acc, m| {
        acc + big(binomial(n, m)) * integer_power(&a, n - m) * integer_power(&d, m) * &b[m]
    })
}

/// `B(d,a;n,x) = sum_m binom(n,m) B(d,a;n-m) x^m`.
pub fn b_gen_poly(params: ProgressionParams, n: usize) -> RationalPoly {
    appell_poly(&b_gen_numbers(params, n + 1), n)
}

/// `B(d,a;n,x) = sum_m binom(n,m) d^m B(m) (a + x)^{n-m}`.
pub fn b_gen_poly_via_ordinary(params: ProgressionParams, n: usize) -> RationalPoly {
    let b = bernoulli_numbers(n + 1);
    let d: ExactRational = params.d_scalar();
    let a_plus_x = Polynomial::linear(params.a_scalar(), int(1));
    (0..=n).fold(Polynomial::zero(), |acc, m| {
        let c = big(binomial(n, m)) * integer_power(&d, m) * &b[m];
        &acc + &a_plus_x.pow(n - m).scale(&c)
    })
}

/// `B(d;n) = d^n B(n)`, `n < count`.
pub fn b_d_numbers(d: u32, count: usize) -> Vec<ExactRational> {
    let d = int(d as i64);
    bernoulli_numbers(count)
        .into_iter()
        .enumerate()
        .map(|(n, b)| integer_power(&d, n) * b)
        .collect()
}

/// `B(d;n,x) = sum_m binom(n,m) B(d;n-m) x^m`.
pub fn b_d_poly(d: u32, n: usize) -> RationalPoly {
    appell_poly(&b_d_numbers(d, n + 1), n)
}

/// `d t e^{a t} / (e^{d t} - 1)` to `order`, through the unit-constant
/// series `(e^{d t} - 1) / (d t)`.
pub fn b_gen_egf(params: ProgressionParams, order: usize) -> Result<RationalFps> {
    let d: ExactRational = params.d_scalar();
    let em1 = &Fps::exp_linear(&d, order + 1) - &Fps::one(order + 1);
    let ratio = em1.shift_down().scale(&(int(1) / d));
    Fps::exp_linear(&params.a_scalar(), order).div(&ratio)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn p(d: u32, a: u32) -> ProgressionParams {
        ProgressionParams::new(d, a).unwrap()
    }

    fn r(n: i64, d: i64) -> ExactRational {
        ratio(n, d).unwrap()
    }

    #[test]
    fn ordinary_numbers() {
        let b = bernoulli_numbers(13);
        assert_eq!(b[..5], [int(1), r(-1, 2), r(1, 6), int(0), r(-1, 30)]);
        assert_eq!(b[12], r(-691, 2730));
        assert!(bernoulli_numbers(0).is_empty());
    }

    #[test]
    fn ordinary_polynomials() {
        assert_eq!(bernoulli_poly(1), Polynomial::linear(r(-1, 2), int(1)));
        assert_eq!(bernoulli_poly(0), Polynomial::one());
        let b2 = bernoulli_poly(2);
        assert_eq!(b2.eval(&int(1)) - b2.eval(&int(0)), int(0));
        for x in -3..4 {
            assert_eq!(b2.eval(&int(x + 1)) - b2.eval(&int(x)), int(2 * x));
        }
    }

    #[test]
    fn generalized_numbers() {
        for n in 0..10 {
            assert_eq!(b_gen(p(1, 0), n), bernoulli_numbers(n + 1)[n]);
        }
        assert_eq!(b_gen(p(2, 1), 1), int(0));
        assert_eq!(b_gen(p(2, 1), 2), r(-1, 3));
        assert_eq!(b_gen_via_ordinary(p(2, 1), 2), r(-1, 3));
        assert_eq!(b_gen_via_ordinary(p(3, 2), 1), r(1, 2));
        for n in 0..8 {
            assert_eq!(b_gen_via_ordinary(p(3, 0), n), b_d_numbers(3, n + 1)[n]);
        }
    }

    #[test]
    fn generalized_polynomials() {
        assert_eq!(b_gen_poly(p(1, 0), 4), bernoulli_poly(4));
        assert_eq!(b_gen_poly(p(2, 1), 1), Polynomial::x());
        let expect = Polynomial::new(vec![int(0), int(2), int(-3), int(1)]);
        assert_eq!(b_gen_poly(p(2, 0), 3), expect);
        assert_eq!(b_d_poly(2, 3), expect);
        assert_eq!(b_d_numbers(2, 3)[2], r(2, 3));
        assert_eq!(b_d_numbers(1, 6), bernoulli_numbers(6));
        for n in 0..10 {
            assert_eq!(b_gen_poly(p(3, 2), n), b_gen_poly_via_ordinary(p(3, 2), n));
            assert_eq!(b_d_poly(4, n).eval(&int(0)), b_d_numbers(4, n + 1)[n]);
        }
    }

    #[test]
    fn egf_and_symmetries() {
        for d in 1..=4u32 {
            for a in 0..=d {
                let egf = b_gen_egf(p(d, a), 12).unwrap();
                let nums = b_gen_numbers(p(d, a), 13);
                for n in 0..=12 {
                    assert_eq!(egf.egf_coeff(n), nums[n]);
                }
            }
        }
        for d in 2..=5u32 {
            for a in 1..d {
                let lhs = b_gen_numbers(p(d, d - a), 13);
                let rhs = b_gen_numbers(p(d, a), 13);
                for n in 0..=12 {
                    assert_eq!(lhs[n], sign::<ExactRational>(n) * &rhs[n]);
                }
            }
        }
        for n in 1..=10 {
            assert_eq!(b_d_poly(3, n).derivative(), b_d_poly(3, n - 1).scale(&int(n as i64)));
        }
    }
}
