use super::{Field, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use std::fmt;

/// The two smallest primes above 2^30.
pub const DEFAULT_PRIMES: [u64; 2] = [1_073_741_827, 1_073_741_831];

/// Residue modulo a runtime prime `p < 2^63`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    v: u64,
    p: u64,
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

impl Fp {
    /// Residue of `v` modulo `p`; `p` must be prime.
    pub fn new(v: i64, p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 63 {
            return Err(Error::domain(format!("{p} is not a usable prime modulus")));
        }
        Ok(Self::from_i64(v, p))
    }

    fn from_i64(v: i64, p: u64) -> Self {
        let r = (v as i128).rem_euclid(p as i128) as u64;
        Fp { v: r, p }
    }

    pub fn residue(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn from_bigint(v: &BigInt, p: u64) -> Self {
        let r = v % BigInt::from(p);
        let r = if r.is_negative() { r + BigInt::from(p) } else { r };
        Fp { v: r.to_u64().unwrap_or(0), p }
    }

    pub fn pow(&self, e: u64) -> Self {
        Fp { v: pow_mod(self.v, e, self.p), p: self.p }
    }
}

impl Field for Fp {
    type Ctx = u64;

    fn ctx(&self) -> u64 {
        self.p
    }
    fn zero(p: &u64) -> Self {
        Fp { v: 0, p: *p }
    }
    fn one(p: &u64) -> Self {
        Fp { v: 1, p: *p }
    }
    fn from_int(p: &u64, v: i64) -> Self {
        Fp::from_i64(v, *p)
    }
    fn from_rational(p: &u64, r: &Rational) -> Result<Self> {
        let d = Fp::from_bigint(r.denom(), *p);
        Fp::from_bigint(r.numer(), *p).div(&d)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn is_one(&self) -> bool {
        self.v == 1
    }
    fn add(&self, o: &Self) -> Self {
        let s = self.v + o.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        Fp { v: if self.v >= o.v { self.v - o.v } else { self.v + self.p - o.v }, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        Fp { v: mul_mod(self.v, o.v, self.p), p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
    fn inv(&self) -> Result<Self> {
        if self.v == 0 {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid
        let (mut r0, mut r1) = (self.p as i128, self.v as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        Ok(Fp { v: s0.rem_euclid(self.p as i128) as u64, p: self.p })
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        let p = DEFAULT_PRIMES[0];
        assert_eq!(Fp::new(1, p).unwrap().inv().unwrap(), Fp::new(1, p).unwrap());
        assert_eq!(Fp::new(2, 5).unwrap().inv().unwrap().residue(), 3);
        assert_eq!(Fp::new(4, 7).unwrap().inv().unwrap().residue(), 2);
        assert_eq!(Fp::new(0, 7).unwrap().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn default_primes_are_next_primes_after_2_30() {
        assert_eq!(next_prime(1 << 30), DEFAULT_PRIMES[0]);
        assert_eq!(next_prime(DEFAULT_PRIMES[0]), DEFAULT_PRIMES[1]);
        assert!(Fp::new(1, 91).is_err());
    }

    #[test]
    fn rational_images() {
        let r = Rational::new(3, 4).unwrap();
        let x = Fp::from_rational(&7, &r).unwrap();
        assert_eq!(x.mul(&Fp::from_int(&7, 4)).residue(), 3);
        assert!(Fp::from_rational(&7, &Rational::new(1, 14).unwrap()).is_err());
    }
}
