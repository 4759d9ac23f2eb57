//! Power sums `PS(d,a;n,m) = sum_{j=0}^m (a + d j)^n` by direct summation,
//! two Faulhaber formulas and three generating-function extractions.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::bernoulli::{b_d_poly, bernoulli_poly};
use crate::error::{Error, Result};
use crate::eulerian::preu_polynomial;
use crate::exact::{big, binomial, int, integer_power, term_power, ProgressionParams};
use crate::fps::Fps;
use crate::poly::Polynomial;
use crate::stirling::{s2_triangle, s2fac_triangle};
use crate::scalar::Scalar;
use crate::{ExactRational, RationalFps, RationalTriangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PowerSumQuery {
    pub params: ProgressionParams,
    pub n: usize,
    pub m: usize,
}

impl PowerSumQuery {
    pub fn new(params: ProgressionParams, n: usize, m: usize) -> Self {
        PowerSumQuery { params, n, m }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Ordinary,
    Faulhaber,
    Egf,
    OgfStacked,
    OgfEulerian,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Direct,
        Method::Ordinary,
        Method::Faulhaber,
        Method::Egf,
        Method::OgfStacked,
        Method::OgfEulerian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Ordinary => "ordinary",
            Method::Faulhaber => "faulhaber",
            Method::Egf => "egf",
            Method::OgfStacked => "ogf-stacked",
            Method::OgfEulerian => "ogf-eulerian",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OgfRoute {
    /// `sum_k S2(n,k) k! x^k / (1 - x)^{k+2}`
    Stacked,
    /// `PrEu(n,x) / (1 - x)^{n+2}`
    Eulerian,
}

fn delta(n: usize) -> ExactRational {
    if n == 0 {
        int(1)
    } else {
        int(0)
    }
}

/// `sum_{j=0}^m (a + d j)^n` with `0^0 = 1`.
pub fn ps_direct(q: PowerSumQuery) -> ExactRational {
    (0..=q.m).fold(ExactRational::zero(), |acc, j| acc + term_power(q.params, j, q.n))
}

/// `sum_k binom(n,k) a^{n-k} d^k [delta_{k,0} + (B(k+1, m+1) - B(k+1, 1)) / (k+1)]`.
pub fn ps_via_ordinary(q: PowerSumQuery) -> ExactRational {
    let (d, a): (ExactRational, ExactRational) = (q.params.d_scalar(), q.params.a_scalar());
    let top = int(q.m as i64 + 1);
    (0..=q.n).fold(ExactRational::zero(), |acc, k| {
        let b = bernoulli_poly(k + 1);
        let ordinary = delta(k) + (b.eval(&top) - b.eval(&int(1))) / int(k as i64 + 1);
        acc + big(binomial(q.n, k)) * integer_power(&a, q.n - k) * integer_power(&d, k) * ordinary
    })
}

/// `[B(d;n+1, a+d(m+1)) - B(d;n+1, d) - B(d;n+1, a) + B(d;n+1, 0) + d delta_{n,0}] / (d (n+1))`.
pub fn ps_faulhaber(q: PowerSumQuery) -> ExactRational {
    let (d, a): (ExactRational, ExactRational) = (q.params.d_scalar(), q.params.a_scalar());
    let b = b_d_poly(q.params.d(), q.n + 1);
    let top = &a + &d * int(q.m as i64 + 1);
    let bracket = b.eval(&top) - b.eval(&d) - b.eval(&a) + b.eval(&int(0)) + &d * delta(q.n);
    bracket / (d * int(q.n as i64 + 1))
}

/// `S2(n,j) j! + S2(n,j-1) (j-1)!` for `0 <= j <= n+1`; zero beyond.
pub fn sigma_s2(params: ProgressionParams, n: usize, j: usize) -> ExactRational {
    sigma_from_s2fac(&s2fac_triangle(params, n), n, j)
}

fn sigma_from_s2fac(t: &RationalTriangle, n: usize, j: usize) -> ExactRational {
    let here = if j <= n { t.get(n, j) } else { int(0) };
    let left = if j >= 1 && j - 1 <= n { t.get(n, j - 1) } else { int(0) };
    here + left
}

/// `PS(n, 0..=max_m)` from `e^t sum_j sigma_s2(n,j) t^j / j!`.
pub fn eps_coefficients(params: ProgressionParams, n: usize, max_m: usize) -> Vec<ExactRational> {
    let t = s2fac_triangle(params, n);
    let inner = Fps::from_fn(max_m, |j| sigma_from_s2fac(&t, n, j) / ExactRational::factorial(j));
    let egf = Fps::exp_linear(&int(1), max_m).mul(&inner);
    (0..=max_m).map(|m| egf.egf_coeff(m)).collect()
}

/// `PS(n, 0..=max_m)` as o.g.f. coefficients.
pub fn gps_coefficients(params: ProgressionParams, n: usize, max_m: usize, route: OgfRoute) -> Result<Vec<ExactRational>> {
    let one_minus_x = Polynomial::linear(int(1), int(-1));
    let series = match route {
        OgfRoute::Stacked => {
            let t = s2fac_triangle(params, n);
            let mut acc = Fps::zero(max_m);
            for k in 0..=n {
                let den = Fps::from_polynomial(&one_minus_x.pow(k + 2), max_m);
                let num = Fps::monomial(t.get(n, k), k, max_m);
                acc = &acc + &num.div(&den)?;
            }
            acc
        }
        OgfRoute::Eulerian => {
            let den = Fps::from_polynomial(&one_minus_x.pow(n + 2), max_m);
            Fps::from_polynomial(&preu_polynomial(params, n), max_m).div(&den)?
        }
    };
    Ok(series.into_coeffs())
}

pub fn power_sum(q: PowerSumQuery, method: Method) -> Result<ExactRational> {
    Ok(match method {
        Method::Direct => ps_direct(q),
        Method::Ordinary => ps_via_ordinary(q),
        Method::Faulhaber => ps_faulhaber(q),
        Method::Egf => eps_coefficients(q.params, q.n, q.m).swap_remove(q.m),
        Method::OgfStacked => gps_coefficients(q.params, q.n, q.m, OgfRoute::Stacked)?.swap_remove(q.m),
        Method::OgfEulerian => gps_coefficients(q.params, q.n, q.m, OgfRoute::Eulerian)?.swap_remove(q.m),
    })
}

/// `m! [t^m] e^t sum_k S2(n,k) t^k`, which should be `(a + d m)^n`.
pub fn powers_egf(params: ProgressionParams, n: usize, order: usize) -> RationalFps {
    let t = s2_triangle(params, n);
    let inner = Fps::from_fn(order, |k| if k <= n { t.get(n, k) } else { int(0) });
    Fps::exp_linear(&int(1), order).mul(&inner)
}

/// `sum_k S2(n,k) k! x^k / (1 - x)^{k+1}`, whose coefficients should be `(a + d m)^n`.
pub fn powers_ogf(params: ProgressionParams, n: usize, order: usize) -> Result<RationalFps> {
    let t = s2fac_triangle(params, n);
    let one_minus_x = Polynomial::linear(int(1), int(-1));
    let mut acc = Fps::zero(order);
    for k in 0..=n {
        let den = Fps::from_polynomial(&one_minus_x.pow(k + 1), order);
        acc = &acc + &Fps::monomial(t.get(n, k), k, order).div(&den)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(d: u32, a: u32, n: usize, m: usize) -> PowerSumQuery {
        PowerSumQuery::new(ProgressionParams::new(d, a).unwrap(), n, m)
    }

    fn v(xs: &[i64]) -> Vec<ExactRational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn spot_values() {
        assert_eq!(ps_direct(q(2, 1, 2, 2)), int(35));
        assert_eq!(ps_direct(q(1, 0, 0, 5)), int(6));
        assert_eq!(ps_direct(q(1, 0, 1, 3)), int(6));
        assert_eq!(ps_via_ordinary(q(2, 1, 2, 2)), int(35));
        assert_eq!(ps_via_ordinary(q(1, 0, 1, 3)), int(6));
        assert_eq!(ps_via_ordinary(q(3, 2, 0, 7)), int(8));
        assert_eq!(ps_faulhaber(q(2, 1, 2, 2)), int(35));
        assert_eq!(ps_faulhaber(q(1, 0, 0, 0)), int(1));
        assert_eq!(ps_faulhaber(q(3, 1, 1, 2)), int(12));
    }

    #[test]
    fn eps_and_sigma() {
        let p10 = ProgressionParams::ordinary();
        let p21 = ProgressionParams::new(2, 1).unwrap();
        assert_eq!((0..3).map(|j| sigma_s2(p10, 2, j)).collect::<Vec<_>>(), v(&[0, 1, 3]));
        assert_eq!(sigma_s2(p21, 1, 0), int(1));
        assert_eq!(sigma_s2(p21, 3, 4), int(48));
        assert_eq!(eps_coefficients(p10, 2, 2), v(&[0, 1, 5]));
        assert_eq!(eps_coefficients(ProgressionParams::new(3, 2).unwrap(), 0, 3), v(&[1, 2, 3, 4]));
        assert_eq!(eps_coefficients(p21, 2, 2), v(&[1, 10, 35]));
    }

    #[test]
    fn ogf_routes() {
        let p10 = ProgressionParams::ordinary();
        let p21 = ProgressionParams::new(2, 1).unwrap();
        for route in [OgfRoute::Stacked, OgfRoute::Eulerian] {
            assert_eq!(gps_coefficients(p10, 1, 4, route).unwrap(), v(&[0, 1, 3, 6, 10]));
            assert_eq!(gps_coefficients(p10, 0, 3, route).unwrap(), v(&[1, 2, 3, 4]));
        }
        assert_eq!(gps_coefficients(p21, 2, 2, OgfRoute::Stacked).unwrap(), v(&[1, 10, 35]));
    }

    #[test]
    fn method_names() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("bernoulli".parse::<Method>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn all_methods_agree(d in 1u32..=4, a in 0u32..=4, n in 0usize..=8, m in 0usize..=12) {
                prop_assume!(a <= d);
                let query = q(d, a, n, m);
                let oracle = ps_direct(query);
                for method in Method::ALL {
                    prop_assert_eq!(power_sum(query, method).unwrap(), oracle.clone(), "{}", method);
                }
            }

            #[test]
            fn powers_from_generating_functions(d in 1u32..=4, a in 0u32..=4, n in 0usize..=8) {
                prop_assume!(a <= d);
                let params = ProgressionParams::new(d, a).unwrap();
                let egf = powers_egf(params, n, 10);
                let ogf = powers_ogf(params, n, 10).unwrap();
                for m in 0..=10 {
                    prop_assert_eq!(egf.egf_coeff(m), term_power(params, m, n));
                    prop_assert_eq!(ogf.coeff(m), &term_power(params, m, n));
                }
            }
        }
    }
}
