//! Exact scalar fields: rationals, prime fields and rational functions in `t`.

mod prime_field;
mod rational;
mod ratfun;
mod realroots;
mod upoly;

pub use prime_field::{is_prime, next_prime, Fp, DEFAULT_PRIMES};
pub use rational::{normalize_rational, Rational};
pub use ratfun::{ratfun_reduce, RatFun};
pub use realroots::{isolate_real_roots, rational_roots, squarefree_part, RootInterval};
pub use upoly::UPoly;

use crate::error::Result;
use std::fmt;

/// A field with exact arithmetic. `Ctx` carries runtime parameters such as a modulus.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, v: i64) -> Self;
    /// Image of a rational; fails when the denominator is not invertible.
    fn from_rational(ctx: &Self::Ctx, r: &Rational) -> Result<Self>;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }
    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }
    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.sub(&a.mul(b));
    }
    /// Whether the text form needs parentheses when used as a coefficient.
    fn is_compound(&self) -> bool {
        false
    }
}
