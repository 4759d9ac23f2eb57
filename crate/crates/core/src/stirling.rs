//! Generalized Stirling numbers of both kinds for the progression `a + j d`.
//!
//! Second kind: `S2` (recurrence canonical), `Ŝ2 = S2 / d^m`,
//! `S2fac = S2 m!`. First kind: `Ŝ1p` (recurrence canonical),
//! `S1p = Ŝ1p / d^n`, and the signed `S1 = S2^{-1}`, `Ŝ1 = Ŝ2^{-1}`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{big, binomial, binomial_general, int, integer_power, ratio, sign, term_power};
use crate::exact::{risefac_eval, ProgressionParams};
use crate::fps::Fps;
use crate::poly::Polynomial;
use crate::sheffer::{Family, ShefferPair, Triangle};
use crate::symfunc::{elementary_sigma, Alphabet};
use crate::{ExactRational, RationalFps, RationalPair, RationalPoly, RationalTriangle};

fn check_entry(n: usize, m: usize) -> Result<()> {
    if m > n {
        return Err(Error::OutOfTriangle { n, m });
    }
    Ok(())
}

fn d_of(params: ProgressionParams) -> ExactRational {
    params.d_scalar()
}

fn a_of(params: ProgressionParams) -> ExactRational {
    params.a_scalar()
}

/// `S2(n,m) = d S2(n-1,m-1) + (a + d m) S2(n-1,m)`.
pub fn s2_triangle(params: ProgressionParams, size: usize) -> RationalTriangle {
    let d = d_of(params);
    Triangle::from_rows_with(size, Family::S2, params, |n, prev| {
        if n == 0 {
            return vec![int(1)];
        }
        let p = &prev[n - 1];
        (0..=n)
            .map(|m| {
                let left = if m > 0 { &d * &p[m - 1] } else { int(0) };
                let here = p.get(m).map_or_else(ExactRational::zero, |v| int(params.term(m)) * v);
                left + here
            })
            .collect()
    })
}

/// Column `m` of `S2` divided by `d^m`.
pub fn s2hat_triangle(params: ProgressionParams, size: usize) -> RationalTriangle {
    let d = d_of(params);
    let t = s2_triangle(params, size)
        .map(|_, m, v| v / integer_power(&d, m))
        .with_family(Family::S2Hat, params);
    debug_assert!(t.all_integer());
    t
}

/// `S2fac(n,m) = m d S2fac(n-1,m-1) + (a + d m) S2fac(n-1,m)`, i.e. `S2(n,m) m!`.
pub fn s2fac_triangle(params: ProgressionParams, size: usize) -> RationalTriangle {
    let d = d_of(params);
    Triangle::from_rows_with(size, Family::S2Fac, params, |n, prev| {
        if n == 0 {
            return vec![int(1)];
        }
        let p = &prev[n - 1];
        (0..=n)
            .map(|m| {
                let left = if m > 0 { int(m as i64) * &d * &p[m - 1] } else { int(0) };
                let here = p.get(m).map_or_else(ExactRational::zero, |v| int(params.term(m)) * v);
                left + here
            })
            .collect()
    })
}

/// `Ŝ1p(n,m) = Ŝ1p(n-1,m-1) + (d n - (d - a)) Ŝ1p(n-1,m)`.
pub fn s1phat_triangle(params: ProgressionParams, size: usize) -> RationalTriangle {
    Triangle::from_rows_with(size, Family::S1pHat, params, |n, prev| {
        if n == 0 {
            return vec![int(1)];
        }
        let p = &prev[n - 1];
        let factor = int(params.term(n - 1));
        (0..=n)
            .map(|m| {
                let left = if m > 0 { p[m - 1].clone() } else { int(0) };
                let here = p.get(m).map_or_else(ExactRational::zero, |v| &factor * v);
                left + here
            })
            .collect()
    })
}

/// Row `n` of `Ŝ1p` divided by `d^n`.
pub fn s1p_triangle(params: ProgressionParams, size: usize) -> RationalTriangle {
    let d = d_of(params);
    s1phat_triangle(params, size)
        .map(|n, _, v| v / integer_power(&d, n))
        .with_family(Family::S1p, params)
}

/// `(-1)^{n-m} S1p(n,m)`, the inverse of `S2`.
pub fn s1_triangle(params: ProgressionParams, size: usize) -> RationalTriangle {
    s1p_triangle(params, size)
        .map(|n, m, v| sign::<ExactRational>(n - m) * v)
        .with_family(Family::S1, params)
}

/// `(-1)^{n-m} Ŝ1p(n,m)`, the inverse of `Ŝ2`.
pub fn s1hat_triangle(params: ProgressionParams, size: usize) -> RationalTriangle {
    s1phat_triangle(params, size)
        .map(|n, m, v| sign::<ExactRational>(n - m) * v)
        .with_family(Family::Generic, params)
}

/// `(e^{a t}, e^{d t} - 1)`.
pub fn s2_pair(params: ProgressionParams, order: usize) -> RationalPair {
    let g = Fps::exp_linear(&a_of(params), order);
    let f = &Fps::exp_linear(&d_of(params), order) - &Fps::one(order);
    ShefferPair { g, f, label: format!("S2{params}") }
}

/// `(e^{a t}, (e^{d t} - 1) / d)`.
pub fn s2hat_pair(params: ProgressionParams, order: usize) -> RationalPair {
    let mut p = s2_pair(params, order);
    p.f = p.f.scale(&(int(1) / d_of(params)));
    p.label = format!("S2hat{params}");
    p
}

/// `((1 + y)^{-a/d}, log(1 + y) / d)`.
pub fn s1_pair(params: ProgressionParams, order: usize) -> RationalPair {
    let (d, a) = (d_of(params), a_of(params));
    let g = Fps::one_plus_pow(&int(1), &(-a / &d), order);
    let f = Fps::log_one_plus(&int(1), order).scale(&(int(1) / d));
    ShefferPair { g, f, label: format!("S1{params}") }
}

/// `((1 - d y)^{-a/d}, -log(1 - d y) / d)`.
pub fn s1phat_pair(params: ProgressionParams, order: usize) -> RationalPair {
    let (d, a) = (d_of(params), a_of(params));
    let g = Fps::one_plus_pow(&-d.clone(), &(-a / &d), order);
    let f = Fps::log_one_plus(&-d.clone(), order).scale(&(int(-1) / d));
    ShefferPair { g, f, label: format!("S1phat{params}") }
}

/// `((1 + d y)^{-a/d}, log(1 + d y) / d)`.
pub fn s1hat_pair(params: ProgressionParams, order: usize) -> RationalPair {
    let (d, a) = (d_of(params), a_of(params));
    let g = Fps::one_plus_pow(&d, &(-a / &d), order);
    let f = Fps::log_one_plus(&d, order).scale(&(int(1) / d));
    ShefferPair { g, f, label: format!("S1hat{params}") }
}

/// `(1/m!) sum_k (-1)^{m-k} binom(m,k) (a + d k)^n`.
pub fn s2_explicit(params: ProgressionParams, n: usize, m: usize) -> Result<ExactRational> {
    check_entry(n, m)?;
    let sum = (0..=m).fold(ExactRational::zero(), |acc, k| {
        acc + sign::<ExactRational>(m - k) * big(binomial(m, k)) * term_power(params, k, n)
    });
    Ok(sum / ExactRational::from_integer(crate::exact::factorial(m)))
}

/// `sum_k binom(n,k) a^{n-k} d^k S2(k,m)` with ordinary `S2`.
pub fn s2_from_ordinary(params: ProgressionParams, n: usize, m: usize) -> Result<ExactRational> {
    check_entry(n, m)?;
    let ord = s2_triangle(ProgressionParams::ordinary(), n);
    let (d, a) = (d_of(params), a_of(params));
    Ok((m..=n).fold(ExactRational::zero(), |acc, k| {
        acc + big(binomial(n, k)) * integer_power(&a, n - k) * integer_power(&d, k) * ord.get(k, m)
    }))
}

/// Ordinary `S2(n,m) = (-a/d)^n sum_k (-1)^k binom(n,k) a^{-k} S2(d,a;k,m)`.
/// Needs `a >= 1`.
pub fn s2_ordinary_from_general(params: ProgressionParams, n: usize, m: usize) -> Result<ExactRational> {
    check_entry(n, m)?;
    if params.a() == 0 {
        return Err(Error::Domain("inversion needs a >= 1".into()));
    }
    let gen = s2_triangle(params, n);
    let (d, a) = (d_of(params), a_of(params));
    let inv_a = int(1) / &a;
    let sum = (m..=n).fold(ExactRational::zero(), |acc, k| {
        acc + sign::<ExactRational>(k) * big(binomial(n, k)) * integer_power(&inv_a, k) * gen.get(k, m)
    });
    Ok(integer_power(&(-a / d), n) * sum)
}

/// Column `m` of `S2` as an o.g.f.: `(d x)^m / prod_{j<=m} (1 - (a + d j) x)`.
pub fn s2_column_ogf(params: ProgressionParams, m: usize, order: usize) -> Result<RationalFps> {
    let num = Fps::monomial(integer_power(&d_of(params), m), m, order);
    let den = (0..=m).fold(Fps::one(order), |acc, j| {
        let factor = Fps::from_polynomial(&Polynomial::linear(int(1), int(-params.term(j))), order);
        acc.mul(&factor)
    });
    num.div(&den)
}

/// The same column by partial fractions: `sum_j (-1)^{m-j} / (j! (m-j)!) / (1 - (a + d j) x)`.
pub fn s2_column_ogf_partial_fractions(params: ProgressionParams, m: usize, order: usize) -> RationalFps {
    (0..=m).fold(Fps::zero(order), |acc, j| {
        let c = sign::<ExactRational>(m - j)
            / ExactRational::from_integer(crate::exact::factorial(j) * crate::exact::factorial(m - j));
        &acc + &Fps::geometric(&int(params.term(j)), order).scale(&c)
    })
}

/// `sigma_{n-m}` over the first `n` symbols `a + j d`.
pub fn s1phat_from_sigma(params: ProgressionParams, n: usize, m: usize) -> Result<ExactRational> {
    check_entry(n, m)?;
    elementary_sigma(&Alphabet::progression(params, n), n - m)
}

/// `sum_{j=m}^n binom(j,m) S1p(n,j) a^{j-m} d^{n-j}` with ordinary `S1p`.
pub fn s1phat_from_ordinary(params: ProgressionParams, n: usize, m: usize) -> Result<ExactRational> {
    check_entry(n, m)?;
    let ord = s1phat_triangle(ProgressionParams::ordinary(), n);
    let (d, a) = (d_of(params), a_of(params));
    Ok((m..=n).fold(ExactRational::zero(), |acc, j| {
        acc + big(binomial(j, m)) * ord.get(n, j) * integer_power(&a, j - m) * integer_power(&d, n - j)
    }))
}

/// Ordinary unsigned Stirling numbers of the first kind from ordinary `S2`:
/// `(-1)^{n-m} sum_k (-1)^k binom(n+k-1, n-m+k) binom(2n-m, n-m-k) S2(n-m+k, k)`.
pub fn s1p_ordinary_schlomilch(n: usize, m: usize) -> Result<ExactRational> {
    check_entry(n, m)?;
    let s2 = s2_triangle(ProgressionParams::ordinary(), 2 * n);
    let (n_i, m_i) = (n as i64, m as i64);
    let sum = (0..=n - m).fold(ExactRational::zero(), |acc, k| {
        let k_i = k as i64;
        acc + sign::<ExactRational>(k)
            * binomial_general(n_i + k_i - 1, n_i - m_i + k_i)
            * binomial_general(2 * n_i - m_i, n_i - m_i - k_i)
            * s2.get(n - m + k, k)
    });
    Ok(sign::<ExactRational>(n - m) * sum)
}

/// `Ŝ1p` from `Ŝ2` by the triple sum
/// `sum_j binom(j,m) sum_k binom(n+k-1, n-j+k) binom(2n-j, n-j-k)
///  sum_l (-1)^l binom(n-j+k, l) a^{n-m+k-l} Ŝ2(l,k)`, with `0^0 = 1`.
pub fn s1phat_schlomilch(params: ProgressionParams, n: usize, m: usize) -> Result<ExactRational> {
    check_entry(n, m)?;
    let hat = s2hat_triangle(params, 2 * n);
    let a = a_of(params);
    let (n_i, m_i) = (n as i64, m as i64);
    let mut total = ExactRational::zero();
    for j in m..=n {
        let j_i = j as i64;
        for k in 0..=n - j {
            let k_i = k as i64;
            let outer = big(binomial(j, m))
                * binomial_general(n_i + k_i - 1, n_i - j_i + k_i)
                * binomial_general(2 * n_i - j_i, n_i - j_i - k_i);
            if outer.is_zero() {
                continue;
            }
            let top = n - j + k;
            let inner = (k..=top).fold(ExactRational::zero(), |acc, l| {
                acc + sign::<ExactRational>(l)
                    * big(binomial(top, l))
                    * integer_power(&a, (n_i - m_i + k_i - l as i64) as usize)
                    * hat.get(l, k)
            });
            total += outer * inner;
        }
    }
    Ok(total)
}

/// `Ŝ1p` by the second triple sum, with `risefac` prefactors; column 0 is
/// `risefac(d,a;0,n)` directly.
pub fn s1phat_schlomilch_v2(params: ProgressionParams, n: usize, m: usize) -> Result<ExactRational> {
    check_entry(n, m)?;
    let zero = ExactRational::zero();
    if m == 0 {
        return Ok(risefac_eval(params, &zero, n));
    }
    let hat = s2hat_triangle(params, 2 * n);
    let a = a_of(params);
    let fact = |k: usize| ExactRational::from_integer(crate::exact::factorial(k));
    let mut total = ExactRational::zero();
    for r in 0..=n - m {
        for k in r..=n - m {
            let inner = (0..=k).fold(ExactRational::zero(), |acc, p| {
                acc + sign::<ExactRational>(p) * big(binomial(k, p)) / big(binomial(p + r, r))
                    * integer_power(&a, k - p)
                    * hat.get(p + r, r)
            });
            total += sign::<ExactRational>(r) / fact(r)
                * risefac_eval(params, &zero, n - k - m)
                * big(binomial(2 * k + m, k + m))
                / int((k + m + r) as i64)
                / fact(n - m - k)
                / fact(k - r)
                * inner;
        }
    }
    Ok(fact(n) / fact(m - 1) * total)
}

/// Row `n` of `Ŝ2`: the coefficients of `x^n` in the basis `fallfac(d,a;x,m)`.
pub fn monomial_in_fallfac(params: ProgressionParams, n: usize) -> Vec<ExactRational> {
    s2hat_triangle(params, n).row(n).to_vec()
}

/// `sum_m c_m fallfac(d,a;x,m)`.
pub fn expand_in_fallfac(params: ProgressionParams, coeffs: &[ExactRational]) -> RationalPoly {
    coeffs.iter().enumerate().fold(Polynomial::zero(), |acc, (m, c)| {
        &acc + &Polynomial::fallfac(params, m).scale(c)
    })
}

/// One step of the row-polynomial recurrence of `S2`:
/// `P(n,x) = [x d (1 + D) + a] P(n-1,x)`.
pub fn s2_row_step(params: ProgressionParams, prev: &RationalPoly) -> RationalPoly {
    let (d, a) = (d_of(params), a_of(params));
    let xd = Polynomial::monomial(d, 1);
    &(&xd * &(prev + &prev.derivative())) + &prev.scale(&a)
}

/// One step of the forward recurrence of `Ŝ1p` row polynomials:
/// `P(n,x) = (x + a) P(n-1, x + d)`.
pub fn s1phat_row_step(params: ProgressionParams, prev: &RationalPoly) -> RationalPoly {
    let (d, a) = (d_of(params), a_of(params));
    &Polynomial::linear(a, int(1)) * &prev.shift(&d)
}

/// Operator coefficients `(1/d) (-1)^{k+1} / k`, `k = 0..=n`, of the Meixner
/// recurrence for unscaled `S2` row polynomials.
pub fn s2_meixner_coeffs(params: ProgressionParams, n: usize) -> Vec<ExactRational> {
    let d = params.d() as i64;
    (0..=n)
        .map(|k| if k == 0 { int(0) } else { sign::<ExactRational>(k + 1) * ratio(1, k as i64 * d).unwrap() })
        .collect()
}

/// `(-1)^{k+1} d^{k-1} / k`, the Meixner coefficients for `Ŝ2` rows.
pub fn s2hat_meixner_coeffs(params: ProgressionParams, n: usize) -> Vec<ExactRational> {
    let d = d_of(params);
    (0..=n)
        .map(|k| {
            if k == 0 {
                int(0)
            } else {
                sign::<ExactRational>(k + 1) * integer_power(&d, k - 1) / int(k as i64)
            }
        })
        .collect()
}

/// `(-1)^{k-1} d^{k-1} / k!`, the Meixner coefficients for `Ŝ1p` rows.
pub fn s1phat_meixner_coeffs(params: ProgressionParams, n: usize) -> Vec<ExactRational> {
    let d = d_of(params);
    (0..=n)
        .map(|k| {
            if k == 0 {
                int(0)
            } else {
                sign::<ExactRational>(k - 1) * integer_power(&d, k - 1)
                    / ExactRational::from_integer(crate::exact::factorial(k))
            }
        })
        .collect()
}

/// `n` times row `n-1`, the right side of every Meixner recurrence.
pub fn meixner_rhs(t: &RationalTriangle, n: usize) -> RationalPoly {
    t.row_polynomial(n - 1).scale(&int(n as i64))
}

/// `sum_m fallfac(d,a;x,m) t^m / m!` and `(1 + d t)^{(x - a)/d}` at one `x`.
pub fn fallfac_egf_sides(params: ProgressionParams, x: &ExactRational, order: usize) -> (RationalFps, RationalFps) {
    let lhs = Fps::from_fn(order, |m| {
        crate::exact::fallfac_eval(params, x, m) / ExactRational::from_integer(crate::exact::factorial(m))
    });
    let (d, a) = (d_of(params), a_of(params));
    let rhs = Fps::one_plus_pow(&d, &((x - a) / &d), order);
    (lhs, rhs)
}

/// `sum_n (sum_m S2fac(n,m)) t^n / n!` against `e^{a t} / (2 - e^{d t})`.
pub fn s2fac_row_sum_egf_sides(params: ProgressionParams, order: usize) -> Result<(RationalFps, RationalFps)> {
    let t = s2fac_triangle(params, order);
    let lhs = Fps::from_fn(order, |n| {
        let s = t.row(n).iter().fold(ExactRational::zero(), |acc, v| acc + v);
        s / ExactRational::from_integer(crate::exact::factorial(n))
    });
    let den = &Fps::constant(int(2), order) - &Fps::exp_linear(&d_of(params), order);
    let rhs = Fps::exp_linear(&a_of(params), order).div(&den)?;
    Ok((lhs, rhs))
}

/// `Ŝ1p(d,a;n,0) = prod_{j<n} (a + j d)`.
pub fn s1phat_column0(params: ProgressionParams, n: usize) -> ExactRational {
    risefac_eval(params, &ExactRational::zero(), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: u32, a: u32) -> ProgressionParams {
        ProgressionParams::new(d, a).unwrap()
    }

    fn ints(t: &RationalTriangle) -> Vec<Vec<i64>> {
        t.rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_integer().try_into().unwrap()).collect())
            .collect()
    }

    // Independent oracle: entries computed by hand from the defining recurrences.
    #[test]
    fn s2_rows() {
        assert_eq!(ints(&s2_triangle(p(2, 1), 3)), vec![vec![1], vec![1, 2], vec![1, 8, 4], vec![1, 26, 36, 8]]);
        assert_eq!(ints(&s2hat_triangle(p(2, 1), 3))[3], vec![1, 13, 9, 1]);
        assert_eq!(
            ints(&s2_triangle(p(1, 0), 3)),
            vec![vec![1], vec![0, 1], vec![0, 1, 1], vec![0, 1, 3, 1]]
        );
        assert_eq!(ints(&s2_triangle(p(5, 3), 0)), vec![vec![1]]);
    }

    #[test]
    fn s2_closed_forms() {
        assert_eq!(s2_explicit(p(2, 1), 3, 2).unwrap(), int(36));
        assert_eq!(s2_explicit(p(1, 0), 5, 5).unwrap(), int(1));
        assert_eq!(s2_explicit(p(3, 2), 3, 1).unwrap(), int(117));
        assert_eq!(s2hat_triangle(p(3, 2), 3).get(3, 1), int(39));
        assert_eq!(s2_explicit(p(1, 0), 1, 2), Err(Error::OutOfTriangle { n: 1, m: 2 }));
        assert_eq!(s2_from_ordinary(p(2, 1), 2, 1).unwrap(), int(8));
        assert_eq!(s2_from_ordinary(p(2, 1), 0, 0).unwrap(), int(1));
        assert_eq!(s2_ordinary_from_general(p(2, 1), 3, 2).unwrap(), int(3));
        assert_eq!(s2_ordinary_from_general(p(2, 1), 1, 1).unwrap(), int(1));
        assert_eq!(s2_ordinary_from_general(p(3, 2), 2, 1).unwrap(), int(1));
        assert!(matches!(s2_ordinary_from_general(p(2, 0), 2, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn s2fac_rows() {
        assert_eq!(
            ints(&s2fac_triangle(p(1, 0), 3)),
            vec![vec![1], vec![0, 1], vec![0, 1, 2], vec![0, 1, 6, 6]]
        );
        assert_eq!(s2fac_triangle(p(2, 1), 2).get(2, 2), int(8));
    }

    #[test]
    fn s1phat_rows() {
        assert_eq!(ints(&s1phat_triangle(p(2, 1), 4))[4], vec![105, 176, 86, 16, 1]);
        assert_eq!(s1phat_triangle(p(1, 0), 4).get(4, 2), int(11));
        assert_eq!(s1phat_triangle(p(3, 1), 4).get(4, 0), int(280));
        assert_eq!(s1phat_column0(p(3, 1), 4), int(280));
        assert_eq!(s1p_triangle(p(2, 1), 2).get(2, 1), ratio(1, 1).unwrap());
        assert_eq!(s1_triangle(p(2, 1), 2).get(2, 0), ratio(3, 4).unwrap());
    }

    #[test]
    fn s1phat_closed_forms() {
        assert_eq!(s1phat_from_sigma(p(2, 1), 4, 1).unwrap(), int(176));
        assert_eq!(s1phat_from_sigma(p(2, 1), 3, 3).unwrap(), int(1));
        assert_eq!(s1phat_from_sigma(p(1, 0), 4, 2).unwrap(), int(11));
        assert_eq!(s1phat_from_ordinary(p(2, 1), 3, 1).unwrap(), int(23));
        assert_eq!(s1phat_from_ordinary(p(3, 1), 2, 0).unwrap(), int(4));
        assert_eq!(s1p_ordinary_schlomilch(4, 2).unwrap(), int(11));
        assert_eq!(s1p_ordinary_schlomilch(3, 3).unwrap(), int(1));
        assert_eq!(s1p_ordinary_schlomilch(5, 1).unwrap(), int(24));
        assert_eq!(s1p_ordinary_schlomilch(0, 0).unwrap(), int(1));
        assert_eq!(s1phat_schlomilch(p(2, 1), 4, 1).unwrap(), int(176));
        assert_eq!(s1phat_schlomilch(p(5, 0), 3, 1).unwrap(), int(50));
        assert_eq!(s1phat_schlomilch(p(2, 1), 3, 3).unwrap(), int(1));
        assert_eq!(s1phat_schlomilch_v2(p(2, 1), 3, 1).unwrap(), int(23));
        assert_eq!(s1phat_schlomilch_v2(p(2, 1), 4, 0).unwrap(), int(105));
        assert_eq!(s1phat_schlomilch_v2(p(1, 0), 4, 2).unwrap(), int(11));
        assert!(s1phat_schlomilch(p(2, 1), 2, 3).is_err());
    }

    #[test]
    fn schlomilch_forms_match_recurrence() {
        for d in 1..=3 {
            for a in 0..=d {
                let t = s1phat_triangle(p(d, a), 8);
                for n in 0..=8 {
                    for m in 0..=n {
                        assert_eq!(s1phat_schlomilch(p(d, a), n, m).unwrap(), t.get(n, m), "v1 {d} {a} {n} {m}");
                        assert_eq!(s1phat_schlomilch_v2(p(d, a), n, m).unwrap(), t.get(n, m), "v2 {d} {a} {n} {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn fallfac_transition() {
        let row = monomial_in_fallfac(p(1, 0), 2);
        assert_eq!(row, vec![int(0), int(1), int(1)]);
        assert_eq!(monomial_in_fallfac(p(2, 1), 2), vec![int(1), int(4), int(1)]);
        assert_eq!(monomial_in_fallfac(p(4, 3), 0), vec![int(1)]);
        for n in 0..7 {
            let c = monomial_in_fallfac(p(3, 2), n);
            assert_eq!(expand_in_fallfac(p(3, 2), &c), Polynomial::monomial(int(1), n));
        }
    }

    #[test]
    fn pairs_and_inverses() {
        for (d, a) in [(1, 0), (2, 1), (3, 2), (4, 0)] {
            let q = p(d, a);
            assert!(s2_pair(q, 8).triangle(8, Family::S2, q).unwrap().same_entries(&s2_triangle(q, 8)));
            assert!(s2hat_pair(q, 8).triangle(8, Family::S2Hat, q).unwrap().same_entries(&s2hat_triangle(q, 8)));
            assert!(s1phat_pair(q, 8).triangle(8, Family::S1pHat, q).unwrap().same_entries(&s1phat_triangle(q, 8)));
            assert!(s1_pair(q, 8).triangle(8, Family::S1, q).unwrap().same_entries(&s1_triangle(q, 8)));
            assert!(s1hat_pair(q, 8).triangle(8, Family::Generic, q).unwrap().same_entries(&s1hat_triangle(q, 8)));
            let id = s2_triangle(q, 8).multiply(&s1_triangle(q, 8)).unwrap();
            assert!(id.same_entries(&Triangle::identity(8)));
        }
    }

    #[test]
    fn row_recurrences() {
        for (d, a) in [(1, 0), (2, 1), (3, 3)] {
            let q = p(d, a);
            let s2 = s2_triangle(q, 8);
            let hat = s2hat_triangle(q, 8);
            let s1 = s1phat_triangle(q, 8);
            for n in 1..=8 {
                assert_eq!(s2_row_step(q, &s2.row_polynomial(n - 1)), s2.row_polynomial(n));
                assert_eq!(s1phat_row_step(q, &s1.row_polynomial(n - 1)), s1.row_polynomial(n));
                let lhs = s2.row_polynomial(n).apply_d_series(&s2_meixner_coeffs(q, n));
                assert_eq!(lhs, meixner_rhs(&s2, n));
                let lhs = hat.row_polynomial(n).apply_d_series(&s2hat_meixner_coeffs(q, n));
                assert_eq!(lhs, meixner_rhs(&hat, n));
                let lhs = s1.row_polynomial(n).apply_d_series(&s1phat_meixner_coeffs(q, n));
                assert_eq!(lhs, meixner_rhs(&s1, n));
                assert_eq!(s1.row_polynomial(n), Polynomial::risefac(q, n));
            }
        }
    }

    #[test]
    fn column_generating_functions() {
        let q = p(3, 1);
        let t = s2_triangle(q, 10);
        for m in 0..=6 {
            let col = s2_column_ogf(q, m, 10).unwrap();
            assert_eq!(col, s2_column_ogf_partial_fractions(q, m, 10));
            for n in 0..=10 {
                assert_eq!(col.coeff(n), &t.get(n, m).clone());
            }
        }
        let (l, r) = s2fac_row_sum_egf_sides(q, 10).unwrap();
        assert_eq!(l, r);
        let (l, r) = fallfac_egf_sides(q, &ratio(7, 3).unwrap(), 10);
        assert_eq!(l, r);
    }
}
