//! Generalized Eulerian numbers `rEu[d,a]`, stored row-reversed relative to
//! the classical triangle, and the `(1 - x)`-denominator reordering.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{big, binomial, int, integer_power, sign, term_power, ProgressionParams};
use crate::fps::Fps;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::sheffer::{Family, Triangle};
use crate::stirling::s2fac_triangle;
use crate::{ExactRational, RationalFps, RationalPoly, RationalTriangle};

/// The two coefficient sets of
/// `sum_j b_j x^j / (1 - x)^{j+1} = sum_i a_i x^i / (1 - x)^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReorderCoefficients<T> {
    pub n: usize,
    pub a_coeffs: Vec<T>,
    pub b_coeffs: Vec<T>,
}

impl<T: Scalar> ReorderCoefficients<T> {
    pub fn from_b(b: Vec<T>, n: usize) -> Result<Self> {
        let a = reorder_b_to_a(&b, n)?;
        Ok(ReorderCoefficients { n, a_coeffs: a, b_coeffs: b })
    }

    pub fn from_a(a: Vec<T>, n: usize) -> Result<Self> {
        let b = reorder_a_to_b(&a, n)?;
        Ok(ReorderCoefficients { n, a_coeffs: a, b_coeffs: b })
    }
}

fn check_len(len: usize, n: usize) -> Result<()> {
    if len != n + 1 {
        return Err(Error::Shape { expected: n + 1, found: len });
    }
    Ok(())
}

/// `a_i = sum_j (-1)^{i-j} binom(n-j, i-j) b_j`.
pub fn reorder_b_to_a<T: Scalar>(b: &[T], n: usize) -> Result<Vec<T>> {
    check_len(b.len(), n)?;
    Ok((0..=n)
        .map(|i| {
            (0..=i).fold(T::zero(), |acc, j| {
                let c = T::from_int(binomial_i64(n - j, i - j)) * sign::<T>(i - j);
                acc + c * &b[j]
            })
        })
        .collect())
}

/// `b_j = sum_i binom(n-i, j-i) a_i`.
pub fn reorder_a_to_b<T: Scalar>(a: &[T], n: usize) -> Result<Vec<T>> {
    check_len(a.len(), n)?;
    Ok((0..=n)
        .map(|j| {
            (0..=j).fold(T::zero(), |acc, i| acc + T::from_int(binomial_i64(n - i, j - i)) * &a[i])
        })
        .collect())
}

fn binomial_i64(n: usize, k: usize) -> i64 {
    i64::try_from(binomial(n, k)).expect("binomial fits in i64")
}

fn check_entry(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::OutOfTriangle { n, m: k });
    }
    Ok(())
}

/// `sum_j (-1)^{k-j} binom(n+1, k-j) (a + d j)^n`.
pub fn reu_explicit(params: ProgressionParams, n: usize, k: usize) -> Result<ExactRational> {
    check_entry(n, k)?;
    Ok((0..=k).fold(ExactRational::zero(), |acc, j| {
        acc + sign::<ExactRational>(k - j) * big(binomial(n + 1, k - j)) * term_power(params, j, n)
    }))
}

/// `rEu(n,m) = (d(n-m) + (d-a)) rEu(n-1,m-1) + (a + d m) rEu(n-1,m)`.
pub fn reu_triangle(params: ProgressionParams, size: usize) -> RationalTriangle {
    let (d, a) = (params.d() as i64, params.a() as i64);
    Triangle::from_rows_with(size, Family::REu, params, |n, prev| {
        if n == 0 {
            return vec![int(1)];
        }
        let p = &prev[n - 1];
        (0..=n)
            .map(|m| {
                let left = if m > 0 {
                    int(d * (n - m) as i64 + d - a) * &p[m - 1]
                } else {
                    int(0)
                };
                let here = p.get(m).map_or_else(ExactRational::zero, |v| int(params.term(m)) * v);
                left + here
            })
            .collect()
    })
}

/// `sum_j (-1)^{k-j} binom(n-j, k-j) S2(n,j) j!`.
pub fn reu_from_s2fac(params: ProgressionParams, n: usize, k: usize) -> Result<ExactRational> {
    check_entry(n, k)?;
    let row = s2fac_triangle(params, n).row(n).to_vec();
    Ok(reorder_b_to_a(&row, n)?.swap_remove(k))
}

/// `S2(n,m) m! = sum_k binom(n-k, m-k) rEu(n,k)`.
pub fn s2fac_from_reu(params: ProgressionParams, n: usize, m: usize) -> Result<ExactRational> {
    check_entry(n, m)?;
    let row = reu_triangle(params, n).row(n).to_vec();
    Ok(reorder_a_to_b(&row, n)?.swap_remove(m))
}

/// `sum_m binom(n,m) a^{n-m} d^m sum_p (-1)^{k-p} binom(n-m, k-p) rEu(m,p)`
/// with ordinary `rEu`.
pub fn reu_from_ordinary(params: ProgressionParams, n: usize, k: usize) -> Result<ExactRational> {
    check_entry(n, k)?;
    let ord = reu_triangle(ProgressionParams::ordinary(), n);
    let (d, a): (ExactRational, ExactRational) = (params.d_scalar(), params.a_scalar());
    Ok((0..=n).fold(ExactRational::zero(), |acc, m| {
        let inner = (0..=k.min(m)).fold(ExactRational::zero(), |acc, p| {
            if k - p > n - m {
                return acc;
            }
            acc + sign::<ExactRational>(k - p) * big(binomial(n - m, k - p)) * ord.get(m, p)
        });
        acc + big(binomial(n, m)) * integer_power(&a, n - m) * integer_power(&d, m) * inner
    }))
}

/// `PrEu(d,a;n,x) = sum_k rEu(n,k) x^k`.
pub fn preu_polynomial(params: ProgressionParams, n: usize) -> RationalPoly {
    reu_triangle(params, n).row_polynomial(n)
}

/// `(1 - x)^n PS2fac(n, x / (1 - x)) = sum_m S2fac(n,m) x^m (1 - x)^{n-m}`.
pub fn preu_from_s2fac_polynomial(params: ProgressionParams, n: usize) -> RationalPoly {
    let row = s2fac_triangle(params, n).row(n).to_vec();
    let one_minus_x = Polynomial::linear(int(1), int(-1));
    row.iter().enumerate().fold(Polynomial::zero(), |acc, (m, c)| {
        &acc + &one_minus_x.pow(n - m).mul_x_pow(m).scale(c)
    })
}

/// `sum_m (a + d m)^n x^m` and `PrEu(n,x) / (1 - x)^{n+1}`, both to `order`.
pub fn powers_ogf_sides(params: ProgressionParams, n: usize, order: usize) -> Result<(RationalFps, RationalFps)> {
    let direct = Fps::from_fn(order, |m| term_power(params, m, n));
    let den = Fps::from_polynomial(&Polynomial::linear(int(1), int(-1)).pow(n + 1), order);
    let via = Fps::from_polynomial(&preu_polynomial(params, n), order).div(&den)?;
    Ok((direct, via))
}

/// `sum_n PrEu(n,x) t^n / n!` and `(1 - x) e^{a(1-x)t} / (1 - x e^{d(1-x)t})`
/// at a fixed `x != 1`.
pub fn preu_egf_sides(params: ProgressionParams, x: &ExactRational, order: usize) -> Result<(RationalFps, RationalFps)> {
    let t = reu_triangle(params, order);
    let lhs = Fps::from_fn(order, |n| t.row_polynomial(n).eval(x) / ExactRational::factorial(n));
    let (d, a): (ExactRational, ExactRational) = (params.d_scalar(), params.a_scalar());
    let y = int(1) - x;
    let num = Fps::exp_linear(&(a * &y), order).scale(&y);
    let den = &Fps::one(order) - &Fps::exp_linear(&(d * &y), order).scale(x);
    Ok((lhs, num.div(&den)?))
}

/// The same triangle with each row reversed (the classical orientation).
pub fn reverse_rows(t: &RationalTriangle) -> RationalTriangle {
    t.map(|n, k, _| t.get(n, n - k))
}
