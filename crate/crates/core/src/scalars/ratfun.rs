use super::{Field, Rational, UPoly};
use crate::error::{Error, Result};
use std::fmt;

/// Element of Q(t) as a reduced fraction with monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFun {
    num: UPoly<Rational>,
    den: UPoly<Rational>,
}

/// Canonical form of `num/den`.
pub fn ratfun_reduce(num: UPoly<Rational>, den: UPoly<Rational>) -> Result<RatFun> {
    if den.is_zero() {
        return Err(Error::domain("zero denominator"));
    }
    if num.is_zero() {
        return Ok(RatFun::zero(&()));
    }
    if den.degree() == Some(0) {
        let s = den.lc().inv()?;
        return Ok(RatFun { num: num.scale(&s), den: UPoly::one(&()) });
    }
    let g = num.gcd(&den);
    let (n, d) = if g.is_one() { (num, den) } else { (num.div_exact(&g)?, den.div_exact(&g)?) };
    let s = d.lc().inv()?;
    Ok(RatFun { num: n.scale(&s), den: d.scale(&s) })
}

impl RatFun {
    pub fn from_poly(p: UPoly<Rational>) -> Self {
        RatFun { num: p, den: UPoly::one(&()) }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    /// The parameter `t`.
    pub fn t() -> Self {
        Self::from_poly(UPoly::var(&()))
    }

    pub fn num(&self) -> &UPoly<Rational> {
        &self.num
    }

    pub fn den(&self) -> &UPoly<Rational> {
        &self.den
    }

    /// The value when this is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() && self.num.degree().unwrap_or(0) == 0 {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn derivative(&self) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.derivative());
        }
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        ratfun_reduce(n, self.den.mul(&self.den)).expect("nonzero denominator")
    }

    /// Evaluate at a rational point; fails at poles.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        self.num.eval(x).div(&d)
    }

    /// Order of vanishing at `t = a` (negative for poles); `None` for zero.
    pub fn valuation_at(&self, a: &Rational) -> Option<i64> {
        if self.num.is_zero() {
            return None;
        }
        let shift = UPoly::from_coeffs(&(), vec![a.clone(), Rational::int(1)]);
        let vn = self.num.compose(&shift).valuation()? as i64;
        let vd = self.den.compose(&shift).valuation()? as i64;
        Some(vn - vd)
    }

    /// Order of vanishing at infinity in `s = 1/t`; `None` for zero.
    pub fn valuation_at_infinity(&self) -> Option<i64> {
        Some(self.den.degree()? as i64 - self.num.degree()? as i64)
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFun { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&());
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }
}

impl Field for RatFun {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        RatFun { num: UPoly::zero(&()), den: UPoly::one(&()) }
    }
    fn one(_: &()) -> Self {
        RatFun { num: UPoly::one(&()), den: UPoly::one(&()) }
    }
    fn from_int(_: &(), v: i64) -> Self {
        Self::constant(Rational::int(v))
    }
    fn from_rational(_: &(), r: &Rational) -> Result<Self> {
        Ok(Self::constant(r.clone()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return ratfun_reduce(self.num.add(&o.num), self.den.clone()).expect("nonzero denominator");
        }
        let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        ratfun_reduce(n, self.den.mul(&o.den)).expect("nonzero denominator")
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&());
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let s = den.lc().inv().expect("nonzero");
        RatFun { num: num.scale(&s), den: den.scale(&s) }
    }
    fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        ratfun_reduce(self.den.clone(), self.num.clone())
    }
    fn is_compound(&self) -> bool {
        !self.den.is_one() || self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> UPoly<Rational> {
        UPoly::from_coeffs(&(), v.iter().map(|&x| Rational::int(x)).collect())
    }

    #[test]
    fn reduce_examples() {
        let r = ratfun_reduce(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!((r.num().clone(), r.den().clone()), (p(&[1, 1]), p(&[1])));
        let z = ratfun_reduce(p(&[0]), p(&[2, 0, 0, 1])).unwrap();
        assert_eq!((z.num().clone(), z.den().clone()), (p(&[]), p(&[1])));
        let h = ratfun_reduce(p(&[0, 2]), p(&[4])).unwrap();
        assert_eq!(h.num().coeff(1), Rational::new(1, 2).unwrap());
        assert!(h.den().is_one());
        assert!(ratfun_reduce(p(&[1]), p(&[])).is_err());
    }

    #[test]
    fn valuations() {
        let r = ratfun_reduce(p(&[0, 0, 1]), p(&[-27, 0, 0, 1])).unwrap();
        assert_eq!(r.valuation_at(&Rational::int(0)), Some(2));
        assert_eq!(r.valuation_at(&Rational::int(3)), Some(-1));
        assert_eq!(r.valuation_at_infinity(), Some(1));
        assert_eq!(r.to_string(), "(t^2)/(t^3 - 27)");
    }
}
