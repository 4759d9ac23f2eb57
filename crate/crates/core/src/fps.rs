//! Truncated formal power series.
//!
//! A series of order `N` carries the coefficients of `t^0 .. t^N`. Binary
//! operations truncate to the smaller operand order and never pad with
//! zeros they did not compute.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fps<T> {
    coeffs: Vec<T>,
}

/// Coefficient-wise factorial scaling between ordinary and exponential
/// generating functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BorelDirection {
    /// `c_n -> c_n / n!`
    OgfToEgf,
    /// `c_n -> c_n * n!`
    EgfToOgf,
}

impl<T: Scalar> Fps<T> {
    /// Series whose order is `coeffs.len() - 1`. An empty vector is read as
    /// the zero series of order 0.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        Fps { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        Fps { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| T::zero())
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    /// The series `t`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(T::one(), 1, order)
    }

    /// `c t^k`, dropped entirely when `k > order`.
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_polynomial(p: &Polynomial<T>, order: usize) -> Self {
        Self::from_fn(order, |k| p.coeff(k))
    }

    /// `e^{c t}`.
    pub fn exp_linear(c: &T, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = T::one();
        for n in 0..=order {
            if n > 0 {
                term = term * c / T::from_int(n as i64);
            }
            coeffs.push(term.clone());
        }
        Fps { coeffs }
    }

    /// `1 / (1 - c t)`.
    pub fn geometric(c: &T, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = T::one();
        for n in 0..=order {
            if n > 0 {
                term = term * c;
            }
            coeffs.push(term.clone());
        }
        Fps { coeffs }
    }

    /// `(1 + c t)^p` for a scalar exponent.
    pub fn one_plus_pow(c: &T, exponent: &T, order: usize) -> Self {
        let base = Self::from_polynomial(&Polynomial::linear(T::one(), c.clone()), order);
        base.pow(exponent).expect("unit constant term")
    }

    /// `log(1 + c t)`.
    pub fn log_one_plus(c: &T, order: usize) -> Self {
        let base = Self::from_polynomial(&Polynomial::linear(T::one(), c.clone()), order);
        base.log().expect("unit constant term")
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`; panics past the order.
    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn get(&self, k: usize) -> Option<&T> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Drops coefficients above `order`. Asking for a higher order than the
    /// series carries is an error.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InsufficientOrder { needed: order, available: self.order() });
        }
        Ok(Fps { coeffs: self.coeffs[..=order].to_vec() })
    }

    fn truncated(&self, order: usize) -> Self {
        Fps { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    pub fn scale(&self, c: &T) -> Self {
        Fps { coeffs: self.coeffs.iter().map(|v| v.clone() * c).collect() }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b;
            }
        }
        Fps { coeffs: out }
    }

    pub fn pow_int(&self, n: usize) -> Self {
        (0..n).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// Multiplicative inverse; the constant term must be non-zero.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let inv0 = T::one() / c0.clone();
        let mut out: Vec<T> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = T::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].clone() * &out[n - k];
            }
            out.push(-(acc * &inv0));
        }
        Ok(Fps { coeffs: out })
    }

    /// `self / rhs` up to the smaller order.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.reciprocal()?))
    }

    /// `self(inner(t))` by Horner's scheme. `inner(0)` must be zero.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionDomain);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncated(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse `f^{[-1]}` with `f(f^{[-1]}(y)) = y` up to the
    /// order, by Newton iteration with precision doubling.
    pub fn reverse(&self) -> Result<Self> {
        let n = self.order();
        if n < 1 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::ReversionDomain);
        }
        let inv1 = T::one() / self.coeffs[1].clone();
        let mut g = Fps { coeffs: vec![T::zero(), inv1] };
        let mut prec = 1;
        let deriv = self.derivative();
        while prec < n {
            let next = (2 * prec).min(n);
            g = g.padded(next);
            let residual = &self.truncated(next).compose(&g)? - &Self::identity(next);
            // residual vanishes through t^prec, so only the first next - prec - 1
            // coefficients of f'(g) matter; the zero padding never reaches them.
            let slope = deriv.compose(&g.truncated(next - 1))?.padded(next);
            g = &g - &residual.div(&slope)?;
            prec = next;
        }
        Ok(g)
    }

    /// Coefficients of `f^{[-1]}` from `[y^n] f^{[-1]} = (1/n) [t^{n-1}] (f(t)/t)^{-n}`,
    /// one power per coefficient (slow, independent of [`Fps::reverse`]).
    pub fn lagrange_reverse(&self) -> Result<Self> {
        let n_max = self.order();
        if n_max < 1 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::ReversionDomain);
        }
        let phi_inv = self.shift_down().reciprocal()?;
        let mut out = vec![T::zero()];
        for n in 1..=n_max {
            out.push(phi_inv.pow_int(n).coeff(n - 1).clone() / T::from_int(n as i64));
        }
        Ok(Fps { coeffs: out })
    }

    fn padded(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, T::zero());
        coeffs.truncate(order + 1);
        Fps { coeffs }
    }

    /// Coefficient-wise derivative; the order drops by one (an order-0
    /// series maps to the zero series of order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Fps {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_int(k as i64))
                .collect(),
        }
    }

    /// Antiderivative with zero constant term; the order rises by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.clone() / T::from_int(k as i64 + 1));
        }
        Fps { coeffs }
    }

    /// `log f` for `f(0) = 1`, as the integral of `f'/f`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogDomain);
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        Ok(self.derivative().mul(&self.reciprocal()?).integrate())
    }

    /// `exp f` for `f(0) = 0`, from `g' = f' g`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpDomain);
        }
        let mut out: Vec<T> = Vec::with_capacity(self.coeffs.len());
        out.push(T::one());
        for n in 1..=self.order() {
            let mut acc = T::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].clone() * T::from_int(k as i64) * &out[n - k];
            }
            out.push(acc / T::from_int(n as i64));
        }
        Ok(Fps { coeffs: out })
    }

    /// `f^p = exp(p log f)` for `f(0) = 1` and any scalar exponent.
    pub fn pow(&self, exponent: &T) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::PowDomain);
        }
        self.log()?.scale(exponent).exp()
    }

    pub fn borel(&self, direction: BorelDirection) -> Self {
        let mut fact = T::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact = fact.clone() * T::from_int(n as i64);
                }
                match direction {
                    BorelDirection::OgfToEgf => c.clone() / fact.clone(),
                    BorelDirection::EgfToOgf => c.clone() * &fact,
                }
            })
            .collect();
        Fps { coeffs }
    }

    /// `(f(t) - f(0)) / t`; the order drops by one.
    pub fn shift_down(&self) -> Self {
        Fps::new(self.coeffs[1..].to_vec())
    }

    /// `t f(t)`; the order rises by one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Fps { coeffs }
    }

    /// `n! [t^n]`, the exponential coefficient.
    pub fn egf_coeff(&self, n: usize) -> T {
        self.coeffs[n].clone() * T::factorial(n)
    }
}

impl<T: Scalar> Add for &Fps<T> {
    type Output = Fps<T>;

    fn add(self, rhs: Self) -> Fps<T> {
        let order = self.order().min(rhs.order());
        Fps::from_fn(order, |k| self.coeffs[k].clone() + &rhs.coeffs[k])
    }
}

impl<T: Scalar> Sub for &Fps<T> {
    type Output = Fps<T>;

    fn sub(self, rhs: Self) -> Fps<T> {
        let order = self.order().min(rhs.order());
        Fps::from_fn(order, |k| self.coeffs[k].clone() - &rhs.coeffs[k])
    }
}

impl<T: Scalar> Mul for &Fps<T> {
    type Output = Fps<T>;

    fn mul(self, rhs: Self) -> Fps<T> {
        Fps::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for &Fps<T> {
    type Output = Fps<T>;

    fn neg(self) -> Fps<T> {
        Fps { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

/// `c0 + c1*t + ... + cN*t^N ; order=N`
impl<T: Scalar> fmt::Display for Fps<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, " + {c}*t")?,
                _ => write!(f, " + {c}*t^{k}")?,
            }
        }
        write!(f, " ; order={}", self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use crate::{ExactRational, RationalFps};
    use num_rational::Ratio;

    fn s(cs: &[(i64, i64)]) -> RationalFps {
        Fps::new(cs.iter().map(|&(p, q)| ratio(p, q).unwrap()).collect())
    }

    fn si(cs: &[i64]) -> RationalFps {
        Fps::new(cs.iter().map(|&c| int(c)).collect())
    }

    fn exp_t(order: usize) -> RationalFps {
        Fps::exp_linear(&int(1), order)
    }

    #[test]
    fn multiplication() {
        assert_eq!(si(&[1, 1, 0]).mul(&si(&[1, -1, 0])), si(&[1, 0, -1]));
        assert_eq!(exp_t(3).mul(&exp_t(3)), s(&[(1, 1), (2, 1), (2, 1), (4, 3)]));
        let f = s(&[(3, 2), (-1, 1), (0, 1), (7, 5)]);
        assert_eq!(f.mul(&Fps::one(3)), f);
        // truncation to the smaller order
        assert_eq!(si(&[1, 1, 1, 1]).mul(&si(&[1, 1])).order(), 1);
    }

    #[test]
    fn reciprocal() {
        assert_eq!(si(&[1, -1, 0, 0]).reciprocal().unwrap(), si(&[1, 1, 1, 1]));
        assert_eq!(si(&[2, 0, 0]).reciprocal().unwrap(), s(&[(1, 2), (0, 1), (0, 1)]));
        assert_eq!(si(&[1, -2, 0]).reciprocal().unwrap(), si(&[1, 2, 4]));
        assert_eq!(si(&[0, 1]).reciprocal(), Err(Error::NonInvertibleSeries));
    }

    #[test]
    fn composition() {
        let log1p = si(&[1, 1, 0, 0, 0]).log().unwrap();
        assert_eq!(exp_t(4).compose(&log1p).unwrap(), si(&[1, 1, 0, 0, 0]));
        let outer = Fps::geometric(&int(1), 3);
        let inner = si(&[0, 1, 1, 1]);
        assert_eq!(outer.compose(&inner).unwrap(), si(&[1, 1, 2, 4]));
        let f = si(&[5, 3, -2, 8]);
        assert_eq!(f.compose(&Fps::zero(3)).unwrap(), Fps::constant(int(5), 3));
        assert_eq!(f.compose(&si(&[1, 1])), Err(Error::CompositionDomain));
    }

    #[test]
    fn reversion() {
        let em1 = &exp_t(3) - &Fps::one(3);
        assert_eq!(em1.reverse().unwrap(), s(&[(0, 1), (1, 1), (-1, 2), (1, 3)]));
        assert_eq!(RationalFps::identity(6).reverse().unwrap(), RationalFps::identity(6));
        // t/(1+t) reverses to t/(1-t)
        let f = si(&[0, 1, -1, 1, -1, 1, -1]);
        assert_eq!(f.reverse().unwrap(), si(&[0, 1, 1, 1, 1, 1, 1]));
        assert_eq!(si(&[1, 1]).reverse(), Err(Error::ReversionDomain));
        assert_eq!(si(&[0, 0, 1]).reverse(), Err(Error::ReversionDomain));
        assert_eq!(si(&[0]).reverse(), Err(Error::ReversionDomain));
    }

    #[test]
    fn logarithm() {
        assert_eq!(si(&[1, 1, 0, 0]).log().unwrap(), s(&[(0, 1), (1, 1), (-1, 2), (1, 3)]));
        assert_eq!(RationalFps::one(5).log().unwrap(), Fps::zero(5));
        assert_eq!(si(&[1, -2, 0]).log().unwrap(), si(&[0, -2, -2]));
        assert_eq!(si(&[2, 1]).log(), Err(Error::LogDomain));
    }

    #[test]
    fn exponential() {
        assert_eq!(RationalFps::identity(3).exp().unwrap(), exp_t(3));
        assert_eq!(RationalFps::zero(4).exp().unwrap(), Fps::one(4));
        assert_eq!(si(&[0, 2, 0]).exp().unwrap(), si(&[1, 2, 2]));
        assert_eq!(si(&[1, 2]).exp(), Err(Error::ExpDomain));
    }

    #[test]
    fn rational_power() {
        let f = si(&[1, -2, 0, 0]);
        let half = ratio(-1, 2).unwrap();
        let g = f.pow(&half).unwrap();
        assert_eq!(g, s(&[(1, 1), (1, 1), (3, 2), (5, 2)]));
        let egf: Vec<ExactRational> = (0..4).map(|n| g.egf_coeff(n)).collect();
        assert_eq!(egf, vec![int(1), int(1), int(3), int(15)]);
        assert_eq!(f.pow(&int(0)).unwrap(), Fps::one(3));
        assert_eq!(si(&[3, 1]).pow(&int(2)), Err(Error::PowDomain));
    }

    #[test]
    fn derivative_and_integral() {
        assert_eq!(si(&[0, 0, 1]).derivative(), si(&[0, 2]));
        let geo = Fps::geometric(&int(1), 2);
        assert_eq!(geo.integrate(), s(&[(0, 1), (1, 1), (1, 2), (1, 3)]));
        let f = s(&[(4, 1), (1, 3), (-2, 7), (5, 1)]);
        assert_eq!(f.derivative().integrate(), &f - &Fps::constant(int(4), 3));
        assert_eq!(si(&[7]).derivative(), Fps::zero(0));
    }

    #[test]
    fn borel_transform() {
        let g = Fps::geometric(&int(1), 5);
        assert_eq!(g.borel(BorelDirection::OgfToEgf), exp_t(5));
        let e2 = Fps::exp_linear(&int(2), 5);
        assert_eq!(e2.borel(BorelDirection::EgfToOgf), Fps::geometric(&int(2), 5));
        let f = s(&[(1, 3), (2, 5), (-7, 1), (0, 1), (9, 4)]);
        assert_eq!(f.borel(BorelDirection::OgfToEgf).borel(BorelDirection::EgfToOgf), f);
    }

    #[test]
    fn text_form() {
        assert_eq!(s(&[(1, 1), (-1, 2), (0, 1)]).to_string(), "1 + -1/2*t + 0*t^2 ; order=2");
    }

    #[test]
    fn truncation_is_explicit() {
        let f = si(&[1, 2, 3]);
        assert_eq!(f.truncate(1).unwrap(), si(&[1, 2]));
        assert_eq!(f.truncate(5), Err(Error::InsufficientOrder { needed: 5, available: 2 }));
    }

    #[test]
    fn works_over_small_ratios() {
        let f: Fps<Ratio<i64>> = Fps::new(vec![Ratio::from(0), Ratio::from(1), Ratio::from(1)]);
        let r = f.reverse().unwrap();
        assert_eq!(f.compose(&r).unwrap(), Fps::identity(2));
    }

    #[test]
    fn newton_reversion_matches_lagrange() {
        let em1 = &exp_t(10) - &Fps::one(10);
        assert_eq!(em1.lagrange_reverse().unwrap(), em1.reverse().unwrap());
        let f = s(&[(0, 1), (3, 2), (-1, 3), (5, 1), (0, 1), (-7, 4), (1, 9)]);
        assert_eq!(f.lagrange_reverse().unwrap(), f.reverse().unwrap());
    }

    mod props {
        use super::*;
        use num_traits::Zero;
        use proptest::prelude::*;

        fn rat() -> impl Strategy<Value = ExactRational> {
            (-9i64..10, 1i64..6).prop_map(|(p, q)| ratio(p, q).unwrap())
        }

        fn series(order: usize) -> impl Strategy<Value = RationalFps> {
            prop::collection::vec(rat(), order + 1).prop_map(Fps::new)
        }

        /// `f(0) = 0`, `f'(0) != 0`.
        fn admissible(order: usize) -> impl Strategy<Value = RationalFps> {
            (series(order), rat().prop_filter("nonzero", |c| !c.is_zero())).prop_map(|(f, c1)| {
                let mut cs = f.into_coeffs();
                cs[0] = int(0);
                cs[1] = c1;
                Fps::new(cs)
            })
        }

        fn unit(order: usize) -> impl Strategy<Value = RationalFps> {
            series(order).prop_map(|f| {
                let mut cs = f.into_coeffs();
                cs[0] = int(1);
                Fps::new(cs)
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn ring_laws(a in series(16), b in series(16), c in series(16)) {
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                prop_assert_eq!(a.mul(&(&b + &c)), &a.mul(&b) + &a.mul(&c));
            }

            #[test]
            fn reversion_roundtrip(f in admissible(12)) {
                let r = f.reverse().unwrap();
                prop_assert_eq!(r.reverse().unwrap(), f.clone());
                prop_assert_eq!(f.compose(&r).unwrap(), Fps::identity(12));
            }

            #[test]
            fn lagrange_cross_check(f in admissible(10)) {
                prop_assert_eq!(f.lagrange_reverse().unwrap(), f.reverse().unwrap());
            }

            #[test]
            fn exp_log_inverse(f in unit(12)) {
                prop_assert_eq!(f.log().unwrap().exp().unwrap(), f);
            }

            #[test]
            fn power_exponents_add(f in unit(8), p in rat(), q in rat()) {
                let lhs = f.pow(&p).unwrap().mul(&f.pow(&q).unwrap());
                prop_assert_eq!(lhs, f.pow(&(p + q)).unwrap());
            }

            #[test]
            fn reciprocal_is_inverse(f in unit(12), c in rat().prop_filter("nonzero", |c| !c.is_zero())) {
                let g = f.scale(&c);
                prop_assert_eq!(g.mul(&g.reciprocal().unwrap()), Fps::one(12));
            }
        }
    }
}
