use crate::error::{Error, Result};
use crate::scalars::{rational_roots, squarefree_part, Field, RatFun, Rational, UPoly};
use serde::Serialize;

/// `sum c_i (d/dt)^i` with rational-function coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PFOperator {
    coeffs: Vec<RatFun>,
}

/// `sum b_j theta^j` with `theta = t d/dt`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThetaOperator {
    pub coeffs: Vec<RatFun>,
}

fn t_pow(k: i64) -> RatFun {
    let one = UPoly::one(&());
    let tk = UPoly::monomial(Rational::int(1), k.unsigned_abs() as usize);
    if k >= 0 {
        RatFun::from_poly(tk)
    } else {
        crate::scalars::ratfun_reduce(one, tk).expect("nonzero")
    }
}

/// Signed Stirling numbers of the first kind: `[x]_n = sum s(n,k) x^k`.
pub(crate) fn stirling1(n: usize) -> Vec<Vec<i64>> {
    let mut s = vec![vec![0i64; n + 1]; n + 1];
    s[0][0] = 1;
    for i in 0..n {
        for k in 1..=i + 1 {
            s[i + 1][k] = s[i][k - 1] - i as i64 * s[i][k];
        }
    }
    s
}

/// Stirling numbers of the second kind: `x^n = sum S(n,k) [x]_k`.
pub(crate) fn stirling2(n: usize) -> Vec<Vec<i64>> {
    let mut s = vec![vec![0i64; n + 1]; n + 1];
    s[0][0] = 1;
    for i in 0..n {
        for k in 1..=i + 1 {
            s[i + 1][k] = k as i64 * s[i][k] + s[i][k - 1];
        }
    }
    s
}

impl PFOperator {
    pub fn new(coeffs: Vec<RatFun>) -> Result<Self> {
        let mut c = coeffs;
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        if c.is_empty() {
            return Err(Error::domain("zero operator"));
        }
        Ok(PFOperator { coeffs: c })
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        let inv = self.coeffs.last().expect("nonempty").inv().expect("nonzero leading coefficient");
        PFOperator { coeffs: self.coeffs.iter().map(|c| c.mul(&inv)).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    pub fn to_theta(&self) -> ThetaOperator {
        let r = self.order();
        let s = stirling1(r);
        let mut b = vec![RatFun::zero(&()); r + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            let ci = c.mul(&t_pow(-(i as i64)));
            for (j, bj) in b.iter_mut().enumerate().take(i + 1) {
                if s[i][j] != 0 {
                    *bj = bj.add(&ci.mul(&RatFun::from_int(&(), s[i][j])));
                }
            }
        }
        ThetaOperator { coeffs: b }
    }

    /// Finite singular points: poles of the coefficients of the monic operator.
    pub fn singular_locus(&self) -> UPoly<Rational> {
        let m = self.monic();
        let mut l = UPoly::one(&());
        for c in &m.coeffs {
            let g = l.gcd(c.den());
            l = l.mul(&c.den().div_exact(&g).expect("gcd divides"));
        }
        squarefree_part(&l)
    }

    /// Whether `t = infinity` is a singular point.
    pub fn singular_at_infinity(&self) -> bool {
        // rewrite in s = 1/t and look for poles at s = 0
        let th = self.to_theta();
        let flipped = ThetaOperator {
            coeffs: th
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, b)| {
                    let v = invert_variable(b);
                    if j % 2 == 1 {
                        v.neg()
                    } else {
                        v
                    }
                })
                .collect(),
        };
        let d = flipped.to_d_form().monic();
        d.coeffs.iter().any(|c| c.valuation_at(&Rational::int(0)).is_some_and(|v| v < 0))
    }

    /// Apply to a polynomial-coefficient Laurent series `sum a_k t^(e_k)` given as (exponent, coefficient) pairs.
    pub fn polynomial_form(&self) -> Vec<UPoly<Rational>> {
        let mut l = UPoly::one(&());
        for c in &self.coeffs {
            let g = l.gcd(c.den());
            l = l.mul(&c.den().div_exact(&g).expect("gcd divides"));
        }
        self.coeffs
            .iter()
            .map(|c| c.num().mul(&l.div_exact(c.den()).expect("lcm")))
            .collect()
    }
}

/// `b(t) -> b(1/t)`
pub(crate) fn invert_variable(b: &RatFun) -> RatFun {
    if b.is_zero() {
        return b.clone();
    }
    let rev = |p: &UPoly<Rational>| UPoly::from_coeffs(&(), p.coeffs().iter().rev().cloned().collect());
    let dn = b.num().degree().expect("nonzero") as i64;
    let dd = b.den().degree().expect("nonzero") as i64;
    // num(1/s)/den(1/s) = s^(dd - dn) rev(num)/rev(den)
    let base = crate::scalars::ratfun_reduce(rev(b.num()), rev(b.den())).expect("nonzero");
    base.mul(&t_pow(dd - dn))
}

impl ThetaOperator {
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn to_d_form(&self) -> PFOperator {
        let r = self.order();
        let s = stirling2(r);
        let mut c = vec![RatFun::zero(&()); r + 1];
        for (j, b) in self.coeffs.iter().enumerate() {
            for (i, ci) in c.iter_mut().enumerate().take(j + 1) {
                if s[j][i] != 0 {
                    *ci = ci.add(&b.mul(&t_pow(i as i64)).mul(&RatFun::from_int(&(), s[j][i])));
                }
            }
        }
        PFOperator::new(c).expect("nonzero")
    }

    /// Operator for `t^a y` when `self` annihilates `y`: `theta -> theta - a`.
    pub fn gauge(&self, a: &Rational) -> Self {
        let r = self.order();
        let mut out = vec![RatFun::zero(&()); r + 1];
        // (theta - a)^j = sum_k binom(j,k) (-a)^(j-k) theta^k
        for (j, b) in self.coeffs.iter().enumerate() {
            let mut binom = Rational::int(1);
            for k in (0..=j).rev() {
                let coef = binom.mul(&a.neg().pow((j - k) as i32));
                out[k] = out[k].add(&b.scale(&coef));
                if k > 0 {
                    binom = binom.mul(&Rational::int(k as i64)).div(&Rational::int((j - k + 1) as i64)).expect("nonzero");
                }
            }
        }
        ThetaOperator { coeffs: out }
    }

    /// Rewrite in `z = t^(-d)`; fails when the coefficients are not functions of `t^d` up to a common power.
    pub fn pushforward(&self, d: u32) -> Result<ZOperator> {
        if d == 0 {
            return Err(Error::domain("d must be positive"));
        }
        let lead = self.coeffs.last().ok_or_else(|| Error::domain("zero operator"))?;
        let inv = lead.inv()?;
        let monic: Vec<RatFun> = self.coeffs.iter().map(|b| b.mul(&inv)).collect();
        let mut l = UPoly::<Rational>::one(&());
        for c in &monic {
            let g = l.gcd(c.den());
            l = l.mul(&c.den().div_exact(&g)?);
        }
        let polys: Vec<UPoly<Rational>> = monic.iter().map(|c| c.num().mul(&l.div_exact(c.den()).expect("lcm"))).collect();
        let exps: Vec<usize> = polys
            .iter()
            .flat_map(|p| p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, _)| k).collect::<Vec<_>>())
            .collect();
        let kmax = *exps.iter().max().ok_or_else(|| Error::domain("zero operator"))?;
        if exps.iter().any(|&k| (kmax - k) % d as usize != 0) {
            return Err(Error::domain(format!("coefficients are not functions of t^{d}")));
        }
        let dd = -(d as i64);
        let mut coeffs = Vec::new();
        for (j, p) in polys.iter().enumerate() {
            let mut zc = vec![Rational::int(0); kmax / d as usize + 1];
            for (k, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    zc[(kmax - k) / d as usize] = c.mul(&Rational::int(dd).pow(j as i32));
                }
            }
            coeffs.push(UPoly::from_coeffs(&(), zc));
        }
        Ok(ZOperator { d, coeffs })
    }
}

/// `sum q_j(z) theta_z^j` with polynomial coefficients in `z = t^(-d)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ZOperator {
    pub d: u32,
    #[serde(serialize_with = "ser_polys")]
    pub coeffs: Vec<UPoly<Rational>>,
}

fn ser_polys<S: serde::Serializer>(v: &[UPoly<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|p| p.render("z")))
}

impl ZOperator {
    /// As a theta-form operator in the variable `z`.
    pub fn as_theta(&self) -> ThetaOperator {
        ThetaOperator { coeffs: self.coeffs.iter().map(|p| RatFun::from_poly(p.clone())).collect() }
    }

    /// `self = c * other` for some nonzero rational `c`.
    pub fn proportional_to(&self, other: &ZOperator) -> Option<Rational> {
        if self.coeffs.len() != other.coeffs.len() {
            return None;
        }
        let mut ratio: Option<Rational> = None;
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            let n = a.coeffs().len().max(b.coeffs().len());
            for k in 0..n {
                let (x, y) = (a.coeff(k), b.coeff(k));
                match (x.is_zero(), y.is_zero()) {
                    (true, true) => continue,
                    (false, false) => {
                        let r = x.div(&y).ok()?;
                        if ratio.as_ref().is_some_and(|q| *q != r) {
                            return None;
                        }
                        ratio = Some(r);
                    }
                    _ => return None,
                }
            }
        }
        ratio
    }

    /// Finite singular points in `z` other than 0 are roots of the leading coefficient.
    pub fn rational_singular_points(&self) -> Vec<Rational> {
        let lead = self.coeffs.last().expect("nonempty");
        let mut pts = rational_roots(lead);
        if !pts.contains(&Rational::int(0)) {
            pts.insert(0, Rational::int(0));
        }
        pts
    }
}
