use super::{Field, Rational, UPoly};
use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Open-closed interval `(lo, hi]` holding exactly one real root; `lo == hi` marks an exact root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

/// `p / gcd(p, p')`, monic.
pub fn squarefree_part(p: &UPoly<Rational>) -> UPoly<Rational> {
    if p.degree().unwrap_or(0) == 0 {
        return p.monic();
    }
    let g = p.gcd(&p.derivative());
    p.div_exact(&g).expect("gcd divides").monic()
}

fn sturm_chain(p: &UPoly<Rational>) -> Vec<UPoly<Rational>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].divrem(&chain[n - 1]).expect("nonzero").1;
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    chain
}

fn sign_changes(chain: &[UPoly<Rational>], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for q in chain {
        let v = q.eval(x);
        let s = if v.is_zero() { 0 } else if v.is_negative() { -1 } else { 1 };
        if s != 0 {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
    }
    n
}

/// Isolating intervals for the distinct real roots, in increasing order.
pub fn isolate_real_roots(p: &UPoly<Rational>) -> Vec<RootInterval> {
    let sf = squarefree_part(p);
    if sf.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = sturm_chain(&sf);
    // Cauchy bound
    let lc = sf.lc();
    let bound = sf.coeffs().iter().fold(Rational::int(0), |m, c| {
        let r = c.div(&lc).expect("nonzero").abs();
        if r > m {
            r
        } else {
            m
        }
    });
    let b = bound.add(&Rational::int(1));
    let mut out = Vec::new();
    let mut stack = vec![(b.neg(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let k = sign_changes(&chain, &lo) - sign_changes(&chain, &hi);
        if k == 0 {
            continue;
        }
        if k == 1 {
            out.push(RootInterval { lo, hi });
            continue;
        }
        let mid = lo.add(&hi).mul(&Rational::new(1, 2).expect("nonzero"));
        if sf.eval(&mid).is_zero() {
            out.push(RootInterval { lo: mid.clone(), hi: mid.clone() });
        }
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    // drop duplicates of exact midpoints also counted by the neighbouring interval
    let mut res: Vec<RootInterval> = Vec::new();
    for iv in out {
        if let Some(last) = res.last() {
            if last.lo == last.hi && iv.hi == last.lo {
                continue;
            }
            if iv.lo == iv.hi && last.hi == iv.lo {
                let l = res.len();
                res[l - 1] = iv;
                continue;
            }
        }
        res.push(iv);
    }
    res
}

/// Distinct rational roots, increasing.
pub fn rational_roots(p: &UPoly<Rational>) -> Vec<Rational> {
    let sf = squarefree_part(p);
    if sf.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    // integer leading coefficient of the primitive integer multiple
    let den = sf.coeffs().iter().fold(BigInt::one(), |a, c| num_integer::Integer::lcm(&a, c.denom()));
    let an = sf.lc().mul(&Rational::from_bigint(den)).numer().abs();
    let step = Rational(num_rational::BigRational::new(BigInt::one(), an.clone()));
    let mut roots = Vec::new();
    for iv in isolate_real_roots(&sf) {
        let (mut lo, mut hi) = (iv.lo, iv.hi);
        if lo == hi {
            roots.push(lo);
            continue;
        }
        let chain = sturm_chain(&sf);
        while hi.sub(&lo) >= step {
            let mid = lo.add(&hi).mul(&Rational::new(1, 2).expect("nonzero"));
            if sf.eval(&mid).is_zero() {
                lo = mid.clone();
                hi = mid;
                break;
            }
            if sign_changes(&chain, &lo) - sign_changes(&chain, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if lo == hi {
            roots.push(lo);
            continue;
        }
        // the only candidate k/an in (lo, hi]
        let k = lo.mul(&Rational::from_bigint(an.clone())).floor() + BigInt::one();
        let cand = Rational(num_rational::BigRational::new(k, an.clone()));
        if cand <= hi && sf.eval(&cand).is_zero() {
            roots.push(cand);
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> UPoly<Rational> {
        UPoly::from_coeffs(&(), v.iter().map(|&x| Rational::int(x)).collect())
    }

    #[test]
    fn roots_of_products() {
        // (t - 3)(t^2 + 3t + 9) = t^3 - 27
        assert_eq!(rational_roots(&p(&[-27, 0, 0, 1])), vec![Rational::int(3)]);
        // (2t - 1)(3t + 2)^2 (t^2 - 2)
        let q = p(&[-1, 2]).mul(&p(&[2, 3]).pow(2)).mul(&p(&[-2, 0, 1]));
        assert_eq!(rational_roots(&q), vec![Rational::new(-2, 3).unwrap(), Rational::new(1, 2).unwrap()]);
        assert_eq!(isolate_real_roots(&q).len(), 4);
        assert_eq!(rational_roots(&p(&[0, 0, 1])), vec![Rational::int(0)]);
        assert!(rational_roots(&p(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn isolation_separates_close_roots() {
        let q = p(&[-1, 100]).mul(&p(&[-1, 101])).mul(&p(&[-3, 0, 1]));
        let iv = isolate_real_roots(&q);
        assert_eq!(iv.len(), 4);
        for w in iv.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
    }
}
