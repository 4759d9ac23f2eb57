//! Generalized Lah numbers `L[d,a] = Ŝ1p[d,a] Ŝ2[d,a]`, the transition
//! matrix from generalized rising to falling factorials, and the signed
//! inverse `L^{-1}(n,m) = (-1)^{n-m} L(n,m)`.

use num_traits::Zero;

use crate::exact::{int, integer_power, ratio, sign, ProgressionParams};
use crate::fps::Fps;
use crate::poly::Polynomial;
use crate::sheffer::{Family, ShefferPair, Triangle};
use crate::stirling::{s1phat_triangle, s2hat_triangle};
use crate::{ExactRational, RationalPair, RationalPoly, RationalTriangle};

/// `((1 - d t)^{-2a/d}, t / (1 - d t))`.
pub fn lah_pair(params: ProgressionParams, order: usize) -> RationalPair {
    let (d, a) = (params.d() as i64, params.a() as i64);
    let g = Fps::one_plus_pow(&int(-d), &ratio(-2 * a, d).unwrap(), order);
    let f = Fps::identity(order).mul(&Fps::geometric(&int(d), order));
    ShefferPair { g, f, label: format!("L{params}") }
}

/// `((1 + d t)^{-2a/d}, t / (1 + d t))`.
pub fn lahinv_pair(params: ProgressionParams, order: usize) -> RationalPair {
    let (d, a) = (params.d() as i64, params.a() as i64);
    let g = Fps::one_plus_pow(&int(d), &ratio(-2 * a, d).unwrap(), order);
    let f = Fps::identity(order).mul(&Fps::geometric(&int(-d), order));
    ShefferPair { g, f, label: format!("Linv{params}") }
}

/// The matrix product `Ŝ1p Ŝ2`.
pub fn lah_triangle(params: ProgressionParams, size: usize) -> RationalTriangle {
    let t = s1phat_triangle(params, size)
        .multiply(&s2hat_triangle(params, size))
        .expect("same size")
        .with_family(Family::Lah, params);
    debug_assert!(t.all_integer());
    t
}

pub fn lah_sheffer_triangle(params: ProgressionParams, size: usize) -> RationalTriangle {
    lah_pair(params, size).triangle(size, Family::Lah, params).expect("pair order matches size")
}

/// Column 0, `n! [t^n] (1 - d t)^{-2a/d} = prod_{j<n} (2a + j d)`.
pub fn lah_column0(params: ProgressionParams, size: usize) -> Vec<ExactRational> {
    let g = lah_pair(params, size).g;
    (0..=size).map(|n| g.egf_coeff(n)).collect()
}

fn four_term(params: ProgressionParams, size: usize, sgn: i64, family: Family) -> RationalTriangle {
    let (d, a) = (sgn * params.d() as i64, sgn * params.a() as i64);
    Triangle::from_rows_with(size, family, params, |n, prev| {
        if n == 0 {
            return vec![int(1)];
        }
        let at = |r: usize, m: usize| prev[r].get(m).cloned().unwrap_or_else(ExactRational::zero);
        let ni = n as i64;
        (0..=n)
            .map(|m| {
                let mut v = if m > 0 { at(n - 1, m - 1) } else { int(0) };
                v += int(2 * (a + d * (ni - 1))) * at(n - 1, m);
                if n >= 2 {
                    v -= int(d * (ni - 1) * (2 * a + d * (ni - 2))) * at(n - 2, m);
                }
                v
            })
            .collect()
    })
}

/// `L(n,m) = L(n-1,m-1) + 2(a + d(n-1)) L(n-1,m) - d(n-1)(2a + d(n-2)) L(n-2,m)`.
pub fn lah_four_term(params: ProgressionParams, size: usize) -> RationalTriangle {
    four_term(params, size, 1, Family::Lah)
}

/// The four-term recurrence with `a -> -a`, `d -> -d`.
pub fn lahinv_four_term(params: ProgressionParams, size: usize) -> RationalTriangle {
    four_term(params, size, -1, Family::LahInv)
}

fn three_term(params: ProgressionParams, size: usize, right_factor: i64) -> RationalTriangle {
    let col0 = lah_column0(params, size);
    Triangle::from_rows_with(size, Family::Lah, params, |n, prev| {
        let mut row = vec![col0[n].clone()];
        for m in 1..=n {
            let p = &prev[n - 1];
            let mut v = ratio(n as i64, m as i64).unwrap() * &p[m - 1];
            if m < n {
                v += int(right_factor * n as i64) * &p[m];
            }
            row.push(v);
        }
        row
    })
}

/// `L(n,m) = (n/m) L(n-1,m-1) + d n L(n-1,m)` for `m >= 1`, column 0 from the e.g.f.
pub fn lah_three_term(params: ProgressionParams, size: usize) -> RationalTriangle {
    three_term(params, size, params.d() as i64)
}

/// The same recurrence with right coefficient `n` instead of `d n`; agrees
/// with the product only for `d = 1`.
pub fn lah_three_term_printed(params: ProgressionParams, size: usize) -> RationalTriangle {
    three_term(params, size, 1)
}

/// `(-1)^{n-m} L(n,m)`.
pub fn lah_inverse(params: ProgressionParams, size: usize) -> RationalTriangle {
    lah_triangle(params, size)
        .map(|n, m, v| sign::<ExactRational>(n - m) * v)
        .with_family(Family::LahInv, params)
}

/// `sum_m c_m risefac(d,a;x,m)`.
pub fn expand_in_risefac(params: ProgressionParams, coeffs: &[ExactRational]) -> RationalPoly {
    coeffs.iter().enumerate().fold(Polynomial::zero(), |acc, (m, c)| {
        &acc + &Polynomial::risefac(params, m).scale(c)
    })
}

/// Operator coefficients of `D / (1 + d D) = sum_k (-1)^k d^k D^{k+1}` through `D^n`.
pub fn lah_meixner_coeffs(params: ProgressionParams, n: usize) -> Vec<ExactRational> {
    let d = int(params.d() as i64);
    (0..=n)
        .map(|k| if k == 0 { int(0) } else { sign::<ExactRational>(k - 1) * integer_power(&d, k - 1) })
        .collect()
}

/// `sum_k d^k D^{k+1}`, the `L^{-1}` counterpart.
pub fn lahinv_meixner_coeffs(params: ProgressionParams, n: usize) -> Vec<ExactRational> {
    let d = int(params.d() as i64);
    (0..=n).map(|k| if k == 0 { int(0) } else { integer_power(&d, k - 1) }).collect()
}

fn roman_step(a: i64, d: i64, prev: &RationalPoly) -> RationalPoly {
    let x = Polynomial::x();
    let c0 = Polynomial::linear(int(2 * a), int(1));
    let c1 = Polynomial::linear(int(2 * d * a), int(2 * d));
    let c2 = x.scale(&int(d * d));
    let d1 = prev.derivative();
    let d2 = d1.derivative();
    &(&(&c0 * prev) + &(&c1 * &d1)) + &(&c2 * &d2)
}

/// `P(n,x) = ((2a + x) + 2d(a + x) D + d^2 x D^2) P(n-1,x)`.
pub fn lah_roman_step(params: ProgressionParams, prev: &RationalPoly) -> RationalPoly {
    roman_step(params.a() as i64, params.d() as i64, prev)
}

/// `P(n,x) = ((x - 2a) - 2d(x - a) D + d^2 x D^2) P(n-1,x)`.
pub fn lahinv_roman_step(params: ProgressionParams, prev: &RationalPoly) -> RationalPoly {
    roman_step(-(params.a() as i64), -(params.d() as i64), prev)
}
