//! Elementary and complete homogeneous symmetric functions, with a
//! brute-force enumeration of cuboid volumes as an oracle for both.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, int, ProgressionParams};
use crate::fps::Fps;
use crate::poly::Polynomial;
use crate::ExactRational;

/// Enumeration limits of [`cuboid_volume_oracle`].
pub const ORACLE_MAX_COUNT: usize = 8;
pub const ORACLE_MAX_DIMENSION: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<ExactRational>,
}

impl Alphabet {
    /// `a, a + d, ..., a + (count - 1) d`.
    pub fn progression(params: ProgressionParams, count: usize) -> Self {
        Alphabet { symbols: (0..count).map(|j| int(params.term(j))).collect() }
    }

    pub fn from_symbols(symbols: Vec<ExactRational>) -> Self {
        Alphabet { symbols }
    }

    pub fn symbols(&self) -> &[ExactRational] {
        &self.symbols
    }

    pub fn count(&self) -> usize {
        self.symbols.len()
    }

    /// The same alphabet without its zero symbols.
    pub fn without_zeros(&self) -> Self {
        Alphabet { symbols: self.symbols.iter().filter(|s| !s.is_zero()).cloned().collect() }
    }
}

/// `prod_j (1 + a_j x)`; coefficient `k` is `sigma_k`.
pub fn elementary_polynomial(alphabet: &Alphabet) -> Polynomial<ExactRational> {
    alphabet.symbols.iter().fold(Polynomial::one(), |acc, s| {
        &acc * &Polynomial::linear(ExactRational::one(), s.clone())
    })
}

pub fn elementary_sigma(alphabet: &Alphabet, degree: usize) -> Result<ExactRational> {
    if degree > alphabet.count() {
        return Err(Error::Domain(format!(
            "sigma_{degree} over {} symbols",
            alphabet.count()
        )));
    }
    Ok(elementary_polynomial(alphabet).coeff(degree))
}

/// `[x^degree] prod_j 1 / (1 - a_j x)`.
pub fn complete_h(alphabet: &Alphabet, degree: usize) -> ExactRational {
    alphabet
        .symbols
        .iter()
        .fold(Fps::one(degree), |acc, s| acc.mul(&Fps::geometric(s, degree)))
        .coeff(degree)
        .clone()
}

/// `binom(n + k - 1, k)`, the number of `k`-multisets from `n` symbols.
pub fn multichoose(n: usize, k: usize) -> BigInt {
    if n == 0 {
        return if k == 0 { BigInt::one() } else { BigInt::zero() };
    }
    binomial(n + k - 1, k)
}

/// Total volume of all cuboids of the given dimension whose side lengths
/// are drawn from the alphabet, with the number of cuboids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuboidEnumeration {
    pub volume: ExactRational,
    pub cuboids: BigInt,
}

/// Explicit enumeration: side lengths are distinct symbols when `distinct`
/// is set (subsets), otherwise repetition is allowed (multisets).
pub fn cuboid_volume_oracle(
    alphabet: &Alphabet,
    dimension: usize,
    distinct: bool,
) -> Result<CuboidEnumeration> {
    if alphabet.count() > ORACLE_MAX_COUNT || dimension > ORACLE_MAX_DIMENSION {
        return Err(Error::Domain(format!(
            "enumeration is capped at {ORACLE_MAX_COUNT} symbols and dimension {ORACLE_MAX_DIMENSION}"
        )));
    }
    if distinct && dimension > alphabet.count() {
        return Err(Error::Domain(format!(
            "no {dimension} distinct sides among {} symbols",
            alphabet.count()
        )));
    }
    let mut out = CuboidEnumeration { volume: ExactRational::zero(), cuboids: BigInt::zero() };
    enumerate(&alphabet.symbols, dimension, 0, distinct, ExactRational::one(), &mut out);
    Ok(out)
}

fn enumerate(
    symbols: &[ExactRational],
    remaining: usize,
    start: usize,
    distinct: bool,
    product: ExactRational,
    out: &mut CuboidEnumeration,
) {
    if remaining == 0 {
        out.volume += product;
        out.cuboids += 1;
        return;
    }
    for i in start..symbols.len() {
        let next = if distinct { i + 1 } else { i };
        enumerate(symbols, remaining - 1, next, distinct, &product * &symbols[i], out);
    }
}
