//! Two-adic number theory: valuations, torsion exponents, Bernoulli denominators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A 2-adic valuation, with `Inf` standing for the valuation of zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Val {
    Fin(u32),
    Inf,
}

impl Val {
    pub fn of(n: i128) -> Val {
        if n == 0 {
            Val::Inf
        } else {
            Val::Fin(n.trailing_zeros())
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Val::Fin(e) => Some(e),
            Val::Inf => None,
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Fin(e) => write!(f, "{e}"),
            Val::Inf => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("2-adic valuation of zero is not a finite integer")]
    ZeroValuation,
    #[error("{0} is not a power of an odd prime")]
    NotOddPrimePower(u64),
    #[error("argument must be positive")]
    NonPositive,
}

/// Largest `e` with `2^e | n`.
pub fn nu2(n: u64) -> Result<u32, NumError> {
    if n == 0 {
        return Err(NumError::ZeroValuation);
    }
    Ok(n.trailing_zeros())
}

/// `nu2` on big integers; zero maps to `Val::Inf`.
pub fn nu2_big(n: &BigInt) -> Val {
    if n.is_zero() {
        return Val::Inf;
    }
    Val::Fin(n.trailing_zeros().unwrap_or(0) as u32)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An odd prime power q, remembered together with q mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OddPrimePower {
    q: u64,
}

impl OddPrimePower {
    pub fn new(q: u64) -> Result<Self, NumError> {
        if q < 3 || q % 2 == 0 {
            return Err(NumError::NotOddPrimePower(q));
        }
        let mut p = 3;
        while q % p != 0 {
            p += 2;
        }
        let mut r = q;
        while r % p == 0 {
            r /= p;
        }
        if r != 1 || !is_prime(p) {
            return Err(NumError::NotOddPrimePower(q));
        }
        Ok(OddPrimePower { q })
    }

    pub fn q(self) -> u64 {
        self.q
    }

    pub fn residue(self) -> u64 {
        self.q % 4
    }

    pub fn is_prime(self) -> bool {
        is_prime(self.q)
    }
}

impl fmt::Display for OddPrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// Torsion exponent of `x_q tau^i` in the integral coefficients over F_q.
pub fn s_q(q: OddPrimePower, i: u64) -> u32 {
    let qq = q.q();
    let vi = (i + 1).trailing_zeros();
    if q.residue() == 1 {
        (qq - 1).trailing_zeros() + vi
    } else if i % 2 == 0 {
        1
    } else {
        let q2 = (qq as u128) * (qq as u128) - 1;
        q2.trailing_zeros() + vi - 1
    }
}

/// `nu2(3^c - 1)`, the order exponent of the top cell of the c-th slice of L.
pub fn a_q(c: u32) -> Result<u32, NumError> {
    if c == 0 {
        return Err(NumError::NonPositive);
    }
    let n = num_traits::pow(BigInt::from(3), c as usize) - BigInt::one();
    Ok(nu2_big(&n).finite().expect("3^c - 1 is nonzero"))
}

/// Tangent numbers T_1..=T_n (tan x = sum T_k x^{2k-1}/(2k-1)!), integer-only.
pub fn tangent_numbers(n: usize) -> Vec<BigInt> {
    let mut t: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = BigInt::one();
    for k in 2..=n {
        t[k] = &t[k - 1] * BigInt::from(k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * BigInt::from(j - k) + &t[j] * BigInt::from(j - k + 2);
        }
    }
    t
}

/// Bernoulli numbers B_0..=B_n (B_1 = -1/2), exact.
/// B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1)).
pub fn bernoulli_upto(n: usize) -> Vec<BigRational> {
    let t = tangent_numbers(n / 2);
    (0..=n)
        .map(|m| match m {
            0 => BigRational::one(),
            1 => BigRational::new(BigInt::from(-1), BigInt::from(2)),
            _ if m % 2 == 1 => BigRational::zero(),
            _ => {
                let k = m / 2;
                let four_k = BigInt::one() << (2 * k);
                let den = &four_k * (&four_k - BigInt::one());
                let x = BigRational::new(&t[k] * BigInt::from(2 * k), den);
                if k % 2 == 1 {
                    x
                } else {
                    -x
                }
            }
        })
        .collect()
}

/// Denominator of B_{2k} by von Staudt-Clausen: product of primes p with (p-1) | 2k.
pub fn von_staudt_denominator(k: u64) -> BigInt {
    let n = 2 * k;
    let mut d = BigInt::one();
    for p in 2..=n + 1 {
        if n % (p - 1) == 0 && is_prime(p) {
            d *= BigInt::from(p);
        }
    }
    d
}

fn two_part_of_denominator(b2k: &BigRational, k: u64) -> u32 {
    let x = b2k / BigRational::from_integer(BigInt::from(4 * k));
    nu2_big(x.denom()).finite().unwrap_or(0)
}

/// The 2-part of the denominator of B_{2k}/4k, as an integer power of two.
pub fn bernoulli_denom_two_part(k: u64) -> Result<u64, NumError> {
    if k == 0 {
        return Err(NumError::NonPositive);
    }
    let b = bernoulli_upto(2 * k as usize);
    let b2k = &b[2 * k as usize];
    let e = two_part_of_denominator(b2k, k);
    let vsc = von_staudt_denominator(k);
    assert_eq!(
        b2k.denom().abs(),
        vsc,
        "recurrence and von Staudt-Clausen disagree at k={k}"
    );
    Ok(1u64 << e)
}

/// All 2-parts for k = 1..=kmax, sharing one Bernoulli table.
pub fn bernoulli_denom_two_parts(kmax: u64) -> Vec<u64> {
    let b = bernoulli_upto(2 * kmax as usize);
    (1..=kmax)
        .map(|k| {
            let b2k = &b[2 * k as usize];
            assert_eq!(b2k.denom().abs(), von_staudt_denominator(k));
            1u64 << two_part_of_denominator(b2k, k)
        })
        .collect()
}

/// Integer value of a small rational, if it is one.
pub fn rational_to_i64(r: &BigRational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(nu2(8), Ok(3));
        assert_eq!(nu2(1), Ok(0));
        assert_eq!(nu2(12), Ok(2));
        assert_eq!(nu2(0), Err(NumError::ZeroValuation));
        assert_eq!(Val::of(0), Val::Inf);
    }

    #[test]
    fn prime_powers() {
        assert!(OddPrimePower::new(9).is_ok());
        assert!(OddPrimePower::new(15).is_err());
        assert!(OddPrimePower::new(2).is_err());
        assert_eq!(OddPrimePower::new(7).unwrap().residue(), 3);
    }

    fn by_recurrence(n: usize) -> Vec<BigRational> {
        let mut b = vec![BigRational::one()];
        for m in 1..=n {
            let mut binom = BigInt::one();
            let mut acc = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                acc += BigRational::from_integer(binom.clone()) * bj;
                binom = binom * BigInt::from((m + 1 - j) as u64) / BigInt::from((j + 1) as u64);
            }
            b.push(-acc / BigRational::from_integer(BigInt::from((m + 1) as u64)));
        }
        b
    }

    #[test]
    fn tangent_route_matches_recurrence() {
        assert_eq!(bernoulli_upto(60), by_recurrence(60));
    }

    #[test]
    fn bernoulli_small() {
        let b = bernoulli_upto(4);
        assert_eq!(b[2], BigRational::new(1.into(), 6.into()));
        assert_eq!(b[4], BigRational::new((-1).into(), 30.into()));
    }
}
