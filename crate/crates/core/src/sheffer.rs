//! Exponential Riordan (Sheffer) arrays and finite lower-triangular matrices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{is_integer, ProgressionParams};
use crate::fps::Fps;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::ExactRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    S2,
    S2Hat,
    S2Fac,
    S1,
    S1p,
    S1pHat,
    REu,
    Lah,
    LahInv,
    Generic,
}

impl Family {
    pub const NAMED: [Family; 9] = [
        Family::S2,
        Family::S2Hat,
        Family::S2Fac,
        Family::S1,
        Family::S1p,
        Family::S1pHat,
        Family::REu,
        Family::Lah,
        Family::LahInv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::S2 => "s2",
            Family::S2Hat => "s2hat",
            Family::S2Fac => "s2fac",
            Family::S1 => "s1",
            Family::S1p => "s1p",
            Family::S1pHat => "s1phat",
            Family::REu => "reu",
            Family::Lah => "lah",
            Family::LahInv => "lahinv",
            Family::Generic => "generic",
        }
    }

    /// Whether every entry of the family is an integer for all `[d, a]`.
    /// `s1` and `s1p` carry powers of `d` in their denominators.
    pub fn integer_valued(self) -> bool {
        !matches!(self, Family::S1 | Family::S1p | Family::Generic)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::NAMED
            .into_iter()
            .chain([Family::Generic])
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// Rows `0..=N` of a lower-triangular matrix; row `n` holds columns `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle<T> {
    rows: Vec<Vec<T>>,
    family: Family,
    params: ProgressionParams,
}

impl<T: Scalar> Triangle<T> {
    pub fn new(rows: Vec<Vec<T>>, family: Family, params: ProgressionParams) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Shape { expected: 1, found: 0 });
        }
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Shape { expected: n + 1, found: row.len() });
            }
        }
        Ok(Triangle { rows, family, params })
    }

    pub fn from_fn(
        size: usize,
        family: Family,
        params: ProgressionParams,
        mut entry: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let rows = (0..=size).map(|n| (0..=n).map(|m| entry(n, m)).collect()).collect();
        Triangle { rows, family, params }
    }

    /// Builds row by row, handing the builder all finished rows.
    pub fn from_rows_with(
        size: usize,
        family: Family,
        params: ProgressionParams,
        mut next_row: impl FnMut(usize, &[Vec<T>]) -> Vec<T>,
    ) -> Self {
        let mut rows: Vec<Vec<T>> = Vec::with_capacity(size + 1);
        for n in 0..=size {
            let row = next_row(n, &rows);
            debug_assert_eq!(row.len(), n + 1);
            rows.push(row);
        }
        Triangle { rows, family, params }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, Family::Generic, ProgressionParams::ordinary(), |n, m| {
            if n == m {
                T::one()
            } else {
                T::zero()
            }
        })
    }

    pub fn size(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> ProgressionParams {
        self.params
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[T] {
        &self.rows[n]
    }

    /// Entry `(n, m)`, zero above the diagonal. Panics past the last row.
    pub fn get(&self, n: usize, m: usize) -> T {
        self.rows[n].get(m).cloned().unwrap_or_else(T::zero)
    }

    pub fn with_family(mut self, family: Family, params: ProgressionParams) -> Self {
        self.family = family;
        self.params = params;
        self
    }

    pub fn map(&self, mut f: impl FnMut(usize, usize, &T) -> T) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(n, row)| row.iter().enumerate().map(|(m, v)| f(n, m, v)).collect())
            .collect();
        Triangle { rows, family: self.family, params: self.params }
    }

    pub fn same_entries(&self, other: &Self) -> bool {
        self.rows == other.rows
    }

    /// First `(n, m)` where the entries differ, when both have the same size.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, usize)> {
        if self.size() != other.size() {
            return Some((self.size().min(other.size()) + 1, 0));
        }
        for (n, (r1, r2)) in self.rows.iter().zip(&other.rows).enumerate() {
            if let Some(m) = r1.iter().zip(r2).position(|(x, y)| x != y) {
                return Some((n, m));
            }
        }
        None
    }

    /// Rows `0..=size`, failing if the triangle is smaller.
    pub fn truncate(&self, size: usize) -> Result<Self> {
        if size > self.size() {
            return Err(Error::InsufficientOrder { needed: size, available: self.size() });
        }
        Ok(Triangle { rows: self.rows[..=size].to_vec(), family: self.family, params: self.params })
    }

    /// Matrix product; both operands must have the same size.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        if self.size() != rhs.size() {
            return Err(Error::Shape { expected: self.size(), found: rhs.size() });
        }
        Ok(Self::from_fn(self.size(), Family::Generic, self.params, |n, m| {
            (m..=n).fold(T::zero(), |acc, k| acc + self.rows[n][k].clone() * &rhs.rows[k][m])
        }))
    }

    /// Inverse by forward substitution, column by column.
    pub fn inverse(&self) -> Result<Self> {
        let size = self.size();
        if let Some(row) = (0..=size).find(|&n| self.rows[n][n].is_zero()) {
            return Err(Error::SingularTriangle { row });
        }
        let mut inv: Vec<Vec<T>> = (0..=size).map(|n| vec![T::zero(); n + 1]).collect();
        for n in 0..=size {
            let diag = self.rows[n][n].clone();
            inv[n][n] = T::one() / diag.clone();
            for m in (0..n).rev() {
                let mut acc = T::zero();
                for k in m..n {
                    acc = acc + self.rows[n][k].clone() * &inv[k][m];
                }
                inv[n][m] = -(acc / diag.clone());
            }
        }
        Ok(Triangle { rows: inv, family: Family::Generic, params: self.params })
    }

    /// `b_n = sum_m T(n,m) a_m` for `n` up to the shorter of the two.
    pub fn apply(&self, seq: &[T]) -> Vec<T> {
        let len = seq.len().min(self.size() + 1);
        (0..len)
            .map(|n| (0..=n).fold(T::zero(), |acc, m| acc + self.rows[n][m].clone() * &seq[m]))
            .collect()
    }

    /// `sum_m T(n, m) x^m`.
    pub fn row_polynomial(&self, n: usize) -> Polynomial<T> {
        Polynomial::new(self.rows[n].clone())
    }
}

impl Triangle<ExactRational> {
    pub fn all_integer(&self) -> bool {
        self.rows.iter().flatten().all(is_integer)
    }
}

/// One row per line, entries separated by single spaces.
impl<T: Scalar> fmt::Display for Triangle<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A Sheffer pair `(g, f)`: column `m` of its array has e.g.f. `g f^m / m!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShefferPair<T> {
    pub g: Fps<T>,
    pub f: Fps<T>,
    pub label: String,
}

impl<T: Scalar> ShefferPair<T> {
    pub fn new(g: Fps<T>, f: Fps<T>, label: impl Into<String>) -> Result<Self> {
        if g.coeff(0).is_zero() {
            return Err(Error::Domain("g(0) must be non-zero".into()));
        }
        if f.order() < 1 || !f.coeff(0).is_zero() || f.coeff(1).is_zero() {
            return Err(Error::Domain("f needs f(0) = 0 and f'(0) != 0".into()));
        }
        Ok(ShefferPair { g, f, label: label.into() })
    }

    /// `(1, t)`, the group identity.
    pub fn identity(order: usize) -> Self {
        ShefferPair { g: Fps::one(order), f: Fps::identity(order), label: "identity".into() }
    }

    pub fn order(&self) -> usize {
        self.g.order().min(self.f.order())
    }

    /// `n! [t^n] g f^m / m!`.
    pub fn element(&self, n: usize, m: usize) -> Result<T> {
        if n > self.order() {
            return Err(Error::InsufficientOrder { needed: n, available: self.order() });
        }
        if m > n {
            return Ok(T::zero());
        }
        let col = self.g.mul(&self.f.pow_int(m));
        Ok(col.egf_coeff(n) / T::factorial(m))
    }

    /// Rows `0..=size`, one column e.g.f. at a time.
    pub fn triangle(&self, size: usize, family: Family, params: ProgressionParams) -> Result<Triangle<T>> {
        if size > self.order() {
            return Err(Error::InsufficientOrder { needed: size, available: self.order() });
        }
        let g = self.g.truncate(size)?;
        let f = self.f.truncate(size)?;
        let mut rows: Vec<Vec<T>> = (0..=size).map(|n| Vec::with_capacity(n + 1)).collect();
        let mut col = g;
        for m in 0..=size {
            if m > 0 {
                col = col.mul(&f).scale(&(T::one() / T::from_int(m as i64)));
            }
            for (n, row) in rows.iter_mut().enumerate().skip(m) {
                row.push(col.egf_coeff(n));
            }
        }
        Triangle::new(rows, family, params)
    }

    /// E.g.f. of the transformed sequence, `g (A o f)`.
    pub fn transform(&self, a: &Fps<T>) -> Result<Fps<T>> {
        Ok(self.g.mul(&a.compose(&self.f)?))
    }

    /// `g(t) e^{x f(t)}`, the e.g.f. of the row polynomials at `x`.
    pub fn row_polynomial_egf(&self, x: &T) -> Result<Fps<T>> {
        Ok(self.g.mul(&self.f.scale(x).exp()?))
    }

    /// Group law: `(g1, f1) * (g2, f2) = (g1 (g2 o f1), f2 o f1)`.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        let g = self.g.mul(&rhs.g.compose(&self.f)?);
        let f = rhs.f.compose(&self.f)?;
        Ok(ShefferPair { g, f, label: format!("{}*{}", self.label, rhs.label) })
    }

    /// `(1 / (g o f^{-1}), f^{-1})`.
    pub fn inverse(&self) -> Result<Self> {
        let finv = self.f.reverse()?;
        let g = self.g.compose(&finv)?.reciprocal()?;
        Ok(ShefferPair { g, f: finv, label: format!("inv({})", self.label) })
    }

    /// The a- and z-sequence series `a(y) = y / f^{-1}(y)` and
    /// `z(y) = (1 - 1/g(f^{-1}(y))) / f^{-1}(y)`, truncated at `order`.
    /// Needs `g(0) = 1` and pair order at least `order + 1`.
    pub fn a_z_sequences(&self, order: usize) -> Result<(Fps<T>, Fps<T>)> {
        if !self.g.coeff(0).is_one() {
            return Err(Error::Domain("z-sequence needs g(0) = 1".into()));
        }
        let finv = self.f.reverse()?;
        let a = finv.shift_down().reciprocal()?;
        let h = &Fps::one(finv.order()) - &self.g.compose(&finv)?.reciprocal()?;
        let z = h.shift_down().mul(&a);
        Ok((a.truncate(order)?, z.truncate(order)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use crate::{ExactRational, RationalFps, RationalPair, RationalTriangle};

    fn params(d: u32, a: u32) -> ProgressionParams {
        ProgressionParams::new(d, a).unwrap()
    }

    fn s2_pair(d: i64, a: i64, order: usize) -> RationalPair {
        let g = Fps::exp_linear(&int(a), order);
        let f = &Fps::exp_linear(&int(d), order) - &Fps::one(order);
        ShefferPair::new(g, f, "s2").unwrap()
    }

    fn s1phat_pair(d: i64, a: i64, order: usize) -> RationalPair {
        let base = one_plus(-d, order);
        let g = base.pow(&ratio(-a, d).unwrap()).unwrap();
        let f = base.log().unwrap().scale(&ratio(-1, d).unwrap());
        ShefferPair::new(g, f, "s1phat").unwrap()
    }

    fn s2hat_pair(d: i64, a: i64, order: usize) -> RationalPair {
        let mut p = s2_pair(d, a, order);
        p.f = p.f.scale(&ratio(1, d).unwrap());
        p
    }

    fn rows(t: &RationalTriangle) -> Vec<Vec<i64>> {
        t.rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_integer().try_into().unwrap()).collect())
            .collect()
    }

    /// `1 + c t` at the given order.
    fn one_plus(c: i64, order: usize) -> RationalFps {
        Fps::from_polynomial(&Polynomial::linear(int(1), int(c)), order)
    }

    #[test]
    fn element_extraction() {
        assert_eq!(s2_pair(2, 1, 4).element(3, 2).unwrap(), int(36));
        assert_eq!(s2_pair(1, 0, 4).element(3, 2).unwrap(), int(3));
        assert_eq!(s2_pair(2, 1, 4).element(0, 0).unwrap(), int(1));
        assert_eq!(
            s2_pair(2, 1, 2).element(3, 1),
            Err(Error::InsufficientOrder { needed: 3, available: 2 })
        );
    }

    #[test]
    fn triangles_from_pairs() {
        let p = params(2, 1);
        let t = s2_pair(2, 1, 2).triangle(2, Family::S2, p).unwrap();
        assert_eq!(rows(&t), vec![vec![1], vec![1, 2], vec![1, 8, 4]]);
        let id = RationalPair::identity(3).triangle(3, Family::Generic, p).unwrap();
        assert!(id.same_entries(&Triangle::identity(3)));
        let s = s1phat_pair(2, 1, 3).triangle(3, Family::S1pHat, p).unwrap();
        assert_eq!(rows(&s), vec![vec![1], vec![1, 1], vec![3, 4, 1], vec![15, 23, 9, 1]]);
        assert!(s2_pair(2, 1, 2).triangle(3, Family::S2, p).is_err());
    }

    #[test]
    fn group_law() {
        let p = params(2, 1);
        let prod = s1phat_pair(2, 1, 2).multiply(&s2hat_pair(2, 1, 2)).unwrap();
        let t = prod.triangle(2, Family::Lah, p).unwrap();
        assert_eq!(rows(&t), vec![vec![1], vec![2, 1], vec![8, 8, 1]]);

        let q = s2_pair(3, 2, 6);
        assert_eq!(q.multiply(&RationalPair::identity(6)).unwrap().g, q.g);
        let inv = q.inverse().unwrap();
        let back = q.multiply(&inv).unwrap();
        assert_eq!(back.g, Fps::one(6));
        assert_eq!(back.f, Fps::identity(6));
    }

    #[test]
    fn inverse_of_s2_pair() {
        let inv = s2_pair(2, 1, 6).inverse().unwrap();
        let one_plus_y = one_plus(1, 6);
        assert_eq!(inv.g, one_plus_y.pow(&ratio(-1, 2).unwrap()).unwrap());
        assert_eq!(inv.f, one_plus_y.log().unwrap().scale(&ratio(1, 2).unwrap()));
        let twice = inv.inverse().unwrap();
        assert_eq!((twice.g, twice.f), (s2_pair(2, 1, 6).g, s2_pair(2, 1, 6).f));
        let id = RationalPair::identity(5).inverse().unwrap();
        assert_eq!((id.g, id.f), (Fps::one(5), Fps::identity(5)));
    }

    #[test]
    fn triangle_inverse() {
        let p = params(2, 1);
        let s2hat = s2hat_pair(2, 1, 4).triangle(4, Family::S2Hat, p).unwrap();
        let inv = s2hat.inverse().unwrap();
        assert!(s2hat.multiply(&inv).unwrap().same_entries(&Triangle::identity(4)));
        let s1phat = s1phat_pair(2, 1, 4).triangle(4, Family::S1pHat, p).unwrap();
        for n in 0..=4 {
            for m in 0..=n {
                let sign = if (n - m) % 2 == 0 { int(1) } else { int(-1) };
                assert_eq!(inv.get(n, m), sign * s1phat.get(n, m));
            }
        }
        let id = RationalTriangle::identity(4);
        assert!(id.multiply(&s2hat).unwrap().same_entries(&s2hat));
        let singular = RationalTriangle::new(vec![vec![int(1)], vec![int(1), int(0)]], Family::Generic, p)
            .unwrap();
        assert_eq!(singular.inverse(), Err(Error::SingularTriangle { row: 1 }));
    }

    #[test]
    fn row_polynomials() {
        let p = params(2, 1);
        let s = s1phat_pair(2, 1, 3).triangle(3, Family::S1pHat, p).unwrap();
        assert_eq!(s.row_polynomial(2), Polynomial::new(vec![int(3), int(4), int(1)]));
        assert_eq!(s.row_polynomial(0), Polynomial::one());
        let pair = s2_pair(2, 1, 8);
        let t = pair.triangle(8, Family::S2, p).unwrap();
        for x in [int(3), ratio(-2, 5).unwrap()] {
            let egf = pair.row_polynomial_egf(&x).unwrap();
            for n in 0..=8 {
                assert_eq!(egf.egf_coeff(n), t.row_polynomial(n).eval(&x));
            }
        }
    }

    #[test]
    fn transform_of_a_sequence() {
        let p = params(3, 2);
        let pair = s1phat_pair(3, 2, 8);
        let t = pair.triangle(8, Family::S1pHat, p).unwrap();
        let seq: Vec<ExactRational> = (0..=8).map(|k| ratio(k * k - 3, k + 1).unwrap()).collect();
        let a = Fps::from_fn(8, |k| &seq[k] / ExactRational::factorial(k));
        let b = pair.transform(&a).unwrap();
        let applied = t.apply(&seq);
        for n in 0..=8 {
            assert_eq!(b.egf_coeff(n), applied[n]);
        }
    }

    #[test]
    fn a_and_z_sequences() {
        let lah = |d: i64, a: i64, order: usize| {
            let base = one_plus(-d, order);
            let g = base.pow(&ratio(-2 * a, d).unwrap()).unwrap();
            let f = RationalFps::identity(order).div(&base).unwrap();
            ShefferPair::new(g, f, "lah").unwrap()
        };
        let (a, z) = lah(2, 1, 9).a_z_sequences(8).unwrap();
        assert_eq!(a, one_plus(2, 8));
        assert_eq!(z, RationalFps::constant(int(2), 8));
        let (_, z0) = lah(1, 0, 9).a_z_sequences(8).unwrap();
        assert_eq!(z0, Fps::zero(8));
        assert!(lah(1, 0, 5).a_z_sequences(8).is_err());
    }

    #[test]
    fn text_form_and_family_names() {
        let t = RationalTriangle::new(
            vec![vec![int(1)], vec![ratio(-1, 2).unwrap(), int(3)]],
            Family::Generic,
            params(1, 0),
        )
        .unwrap();
        assert_eq!(t.to_string(), "1\n-1/2 3\n");
        for f in Family::NAMED {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("eulerian".parse::<Family>().is_err());
        assert!(!Family::S1p.integer_valued() && Family::Lah.integer_valued());
        let _: ExactRational = t.get(0, 3);
    }
}
