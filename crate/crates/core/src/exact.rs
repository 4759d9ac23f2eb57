//! Exact rational scalars and the combinatorial primitives built on them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::ExactRational;

/// Common difference `d >= 1` and initial term `a >= 0` of the progression
/// `a, a + d, a + 2d, ...`.
///
/// `gcd(a, d) = 1` is not required.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProgressionParams {
    d: u32,
    a: u32,
}

impl ProgressionParams {
    pub fn new(d: u32, a: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParams("common difference d must be >= 1".into()));
        }
        Ok(ProgressionParams { d, a })
    }

    /// The classical case `[d, a] = [1, 0]`.
    pub fn ordinary() -> Self {
        ProgressionParams { d: 1, a: 0 }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    /// The `j`-th term `a + j d`.
    pub fn term(&self, j: usize) -> i64 {
        self.a as i64 + j as i64 * self.d as i64
    }

    pub fn d_scalar<T: Scalar>(&self) -> T {
        T::from_int(self.d as i64)
    }

    pub fn a_scalar<T: Scalar>(&self) -> T {
        T::from_int(self.a as i64)
    }
}

impl Default for ProgressionParams {
    fn default() -> Self {
        Self::ordinary()
    }
}

impl fmt::Display for ProgressionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.d, self.a)
    }
}

pub fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

pub fn big(v: BigInt) -> ExactRational {
    ExactRational::from_integer(v)
}

/// `numer / denom`, reduced. A zero denominator is an error.
pub fn ratio(numer: i64, denom: i64) -> Result<ExactRational> {
    if denom == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(ExactRational::new(BigInt::from(numer), BigInt::from(denom)))
}

pub fn checked_div(lhs: &ExactRational, rhs: &ExactRational) -> Result<ExactRational> {
    if rhs.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(lhs / rhs)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient for non-negative arguments; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient with arbitrary integer upper entry:
/// `r (r-1) ... (r-k+1) / k!` for `k >= 0` and zero for `k < 0`.
pub fn binomial_general(r: i64, k: i64) -> ExactRational {
    if k < 0 {
        return ExactRational::zero();
    }
    let mut numer = BigInt::one();
    for i in 0..k {
        numer *= BigInt::from(r - i);
    }
    let (q, rem) = numer.div_rem(&factorial(k as usize));
    debug_assert!(rem.is_zero());
    big(q)
}

/// `base^n` with `0^0 = 1`.
pub fn integer_power<T: Scalar>(base: &T, n: usize) -> T {
    let mut acc = T::one();
    for _ in 0..n {
        acc = acc * base;
    }
    acc
}

/// `(a + j d)^n` as an exact value, with `0^0 = 1`.
pub fn term_power(params: ProgressionParams, j: usize, n: usize) -> ExactRational {
    big(num_traits::pow(BigInt::from(params.term(j)), n))
}

/// Generalized falling factorial `prod_{j<m} (x - (a + j d))`.
pub fn fallfac_eval<T: Scalar>(params: ProgressionParams, x: &T, m: usize) -> T {
    (0..m).fold(T::one(), |acc, j| acc * (x.clone() - T::from_int(params.term(j))))
}

/// Generalized rising factorial `prod_{j<n} (x + (a + j d))`.
pub fn risefac_eval<T: Scalar>(params: ProgressionParams, x: &T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, j| acc * (x.clone() + T::from_int(params.term(j))))
}

/// Canonical text form: `p/q`, or just `p` when `q = 1`.
pub fn render(value: &ExactRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses the canonical text form (also accepts a leading `+` and spaces).
pub fn parse_rational(text: &str) -> Result<ExactRational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    match text.split_once('/') {
        None => BigInt::from_str(text).map(big).map_err(|_| bad()),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(ExactRational::new(p, q))
        }
    }
}

pub fn is_integer(value: &ExactRational) -> bool {
    value.denom().is_one()
}

/// `(-1)^k` as a scalar.
pub fn sign<T: Scalar>(k: usize) -> T {
    if k % 2 == 0 {
        T::one()
    } else {
        -T::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    #[test]
    fn binomial_general_examples() {
        assert_eq!(binomial_general(5, 2), int(10));
        assert_eq!(binomial_general(4, -1), int(0));
        // (-1)^3 binom(4, 3)
        assert_eq!(binomial_general(-2, 3), int(-4));
        assert_eq!(binomial_general(-1, 0), int(1));
        assert_eq!(binomial_general(2, 5), int(0));
    }

    #[test]
    fn binomial_negative_upper_identity() {
        for r in 1..8i64 {
            for k in 0..8i64 {
                let expect = sign::<ExactRational>(k as usize) * binomial_general(k - 1 + r, k);
                assert_eq!(binomial_general(-r, k), expect);
            }
        }
    }

    #[test]
    fn factorials_and_products() {
        let p = |d, a| ProgressionParams::new(d, a).unwrap();
        assert_eq!(fallfac_eval(p(1, 0), &int(4), 2), int(12));
        assert_eq!(fallfac_eval(p(7, 3), &ratio(2, 9).unwrap(), 0), int(1));
        assert_eq!(fallfac_eval(p(2, 1), &int(6), 3), int(15));
        assert_eq!(risefac_eval(p(3, 1), &int(0), 4), int(280));
        assert_eq!(risefac_eval(p(5, 2), &int(-3), 0), int(1));
        assert_eq!(risefac_eval(p(2, 1), &int(0), 2), int(3));
    }

    #[test]
    fn powers() {
        assert_eq!(integer_power(&int(0), 0), int(1));
        assert_eq!(integer_power(&int(3), 2), int(9));
        assert_eq!(integer_power(&ratio(-1, 2).unwrap(), 3), ratio(-1, 8).unwrap());
        assert_eq!(term_power(ProgressionParams::ordinary(), 0, 0), int(1));
    }

    #[test]
    fn rendering_roundtrip() {
        for (v, s) in [(ratio(-1, 2).unwrap(), "-1/2"), (int(7), "7"), (int(0), "0")] {
            assert_eq!(render(&v), s);
            assert_eq!(parse_rational(s).unwrap(), v);
        }
        assert_eq!(parse_rational("4/-6").unwrap(), ratio(-2, 3).unwrap());
        assert_eq!(parse_rational("1/0"), Err(Error::DivisionByZero));
        assert!(matches!(parse_rational("x"), Err(Error::Parse(_))));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(ratio(1, 0), Err(Error::DivisionByZero));
        assert_eq!(checked_div(&int(1), &int(0)), Err(Error::DivisionByZero));
        assert_eq!(checked_div(&int(1), &int(4)), ratio(1, 4));
    }

    #[test]
    fn params_validation() {
        assert!(ProgressionParams::new(0, 1).is_err());
        let p = ProgressionParams::new(3, 2).unwrap();
        assert_eq!((p.term(0), p.term(2)), (2, 8));
        assert_eq!(p.to_string(), "[3,2]");
    }

    #[test]
    fn small_ratio_scalar() {
        let p = ProgressionParams::new(2, 1).unwrap();
        let x = Ratio::new(1i64, 3);
        assert_eq!(risefac_eval(p, &x, 2), Ratio::new(4, 3) * Ratio::new(10, 3));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn rat() -> impl Strategy<Value = ExactRational> {
            (-40i64..40, 1i64..12).prop_map(|(p, q)| ratio(p, q).unwrap())
        }

        fn normalized(v: &ExactRational) -> bool {
            use num_traits::Signed;
            v.denom().is_positive() && v.numer().gcd(v.denom()).is_one()
        }

        proptest! {
            #[test]
            fn arithmetic_stays_normalized(x in rat(), y in rat(), z in rat()) {
                let s = (&x + &y) * &z - &x;
                prop_assert!(normalized(&s));
                if !z.is_zero() {
                    let q = checked_div(&s, &z).unwrap();
                    prop_assert!(normalized(&q));
                }
                if (&x - &x).is_zero() {
                    prop_assert!((&x - &x).denom().is_one());
                }
            }

            #[test]
            fn rise_is_signed_fall_of_negated(x in rat(), d in 1u32..5, a in 0u32..6, n in 0usize..12) {
                let p = ProgressionParams::new(d, a).unwrap();
                let lhs = risefac_eval(p, &x, n);
                let rhs = sign::<ExactRational>(n) * fallfac_eval(p, &-x.clone(), n);
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn fall_is_scaled_ordinary_fall(x in rat(), d in 1u32..5, a in 0u32..6, m in 0usize..10) {
                let p = ProgressionParams::new(d, a).unwrap();
                let y = (x.clone() - int(a as i64)) / int(d as i64);
                let rhs = integer_power(&int(d as i64), m) * fallfac_eval(ProgressionParams::ordinary(), &y, m);
                prop_assert_eq!(fallfac_eval(p, &x, m), rhs);
            }

            #[test]
            fn binomial_symmetry(n in 0i64..30, k in 0i64..30) {
                prop_assume!(k <= n);
                prop_assert_eq!(binomial_general(n, k), binomial_general(n, n - k));
                prop_assert_eq!(big(binomial(n as usize, k as usize)), binomial_general(n, k));
            }
        }
    }
}
