use super::*;
use crate::scalars::{Field, RatFun, Rational};
use std::collections::BTreeMap;

type P = Polynomial<Rational>;

fn x(n: usize, i: usize) -> P {
    P::var(n, i, &())
}

#[test]
fn difference_of_squares_and_identity() {
    let (a, b) = (x(2, 0), x(2, 1));
    let prod = a.add(&b).mul(&a.sub(&b));
    assert_eq!(prod, a.mul(&a).sub(&b.mul(&b)));
    assert_eq!(prod.mul(&P::one(2, &())), prod);
    assert!(P::one(2, &()).try_mul(&P::one(3, &())).is_err());
}

#[test]
fn p2_times_p3_matches_distributive_expansion() {
    let n = 6;
    let p2 = power_sum::<Rational>(2, n, &()).unwrap();
    let p3 = power_sum::<Rational>(3, n, &()).unwrap();
    let prod = p2.mul(&p3);
    let mut oracle: BTreeMap<Vec<u16>, i64> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let mut e = vec![0u16; n];
            e[i] += 2;
            e[j] += 3;
            *oracle.entry(e).or_default() += 1;
        }
    }
    assert_eq!(prod.len(), 36);
    assert_eq!(oracle.len(), 36);
    for (m, c) in prod.terms() {
        assert_eq!(Rational::int(oracle[&m.exps().to_vec()]), *c);
    }
    let diag = prod.terms().iter().filter(|(m, _)| m.exps().iter().any(|&e| e == 5)).count();
    assert_eq!(diag, 6);
    assert_eq!(prod.is_homogeneous(), (true, Some(5)));
}

fn nodal_pencil(n: usize) -> Polynomial<RatFun> {
    let p5 = power_sum::<Rational>(5, n, &()).unwrap();
    let p2 = power_sum::<Rational>(2, n, &()).unwrap();
    let p3 = power_sum::<Rational>(3, n, &()).unwrap();
    pencil_poly(&p5, &p2.mul(&p3))
}

#[test]
fn homogeneity() {
    let a = x(2, 0);
    let b = x(2, 1);
    assert_eq!(a.mul(&a).add(&a.mul(&b)).is_homogeneous(), (true, Some(2)));
    assert!(!a.mul(&a).add(&a).is_homogeneous().0);
    assert_eq!(P::zero(2, &()).is_homogeneous(), (true, None));
    assert_eq!(nodal_pencil(6).is_homogeneous(), (true, Some(5)));
}

#[test]
fn symmetric_constructors() {
    assert_eq!(power_sum::<Rational>(1, 3, &()).unwrap(), x(3, 0).add(&x(3, 1)).add(&x(3, 2)));
    let p5 = power_sum::<Rational>(5, 6, &()).unwrap();
    assert_eq!(p5.len(), 6);
    assert_eq!(p5.is_homogeneous(), (true, Some(5)));
    assert_eq!(power_sum::<Rational>(2, 2, &()).unwrap().to_string(), "x0^2 + x1^2");
    let e5 = elementary_symmetric::<Rational>(5, 5, &()).unwrap();
    assert_eq!(e5.to_string(), "x0*x1*x2*x3*x4");
    for n in 1..6 {
        assert_eq!(elementary_symmetric::<Rational>(1, n, &()).unwrap(), power_sum::<Rational>(1, n, &()).unwrap());
    }
    assert_eq!(elementary_symmetric::<Rational>(2, 3, &()).unwrap().len(), 3);
    assert_eq!(elementary_symmetric::<Rational>(3, 6, &()).unwrap().len(), 20);
    assert!(elementary_symmetric::<Rational>(4, 3, &()).is_err());
}

#[test]
fn derivatives() {
    let mut e = vec![0u16; 5];
    e[0] = 5;
    let f = P::term(Monomial::from_exps(&e), Rational::int(1));
    let d = f.partial_derivatives();
    assert_eq!(d[0].to_string(), "5*x0^4");
    assert!(d[1..].iter().all(|p| p.is_zero()));

    let ft = nodal_pencil(6);
    let p2 = power_sum::<Rational>(2, 6, &()).unwrap().to_ratfun();
    let p3 = power_sum::<Rational>(3, 6, &()).unwrap().to_ratfun();
    let t = RatFun::t();
    for (i, di) in ft.partial_derivatives().iter().enumerate() {
        let xi = Polynomial::<RatFun>::var(6, i, &());
        let xi2 = xi.mul(&xi);
        let x4 = xi2.mul(&xi2);
        let expected = x4
            .scale(&RatFun::from_int(&(), 5))
            .sub(&xi.mul(&p3).scale(&RatFun::from_int(&(), 2)).add(&xi2.mul(&p2).scale(&RatFun::from_int(&(), 3))).scale(&t));
        assert_eq!(*di, expected);
    }
}

#[test]
fn hyperplane_restriction() {
    for n in 2..6 {
        let p1 = power_sum::<Rational>(1, n, &()).unwrap();
        assert!(p1.restrict_to_hyperplane().unwrap().is_zero());
    }
    let p2 = power_sum::<Rational>(2, 2, &()).unwrap();
    assert_eq!(p2.restrict_to_hyperplane().unwrap().to_string(), "2*x0^2");
    let r = nodal_pencil(6).restrict_to_hyperplane().unwrap();
    assert_eq!(r.nvars(), 5);
    assert_eq!(r.is_homogeneous(), (true, Some(5)));
    assert!(P::one(1, &()).restrict_to_hyperplane().is_err());
}

#[test]
fn monomial_bases() {
    assert_eq!(monomial_basis(0, 5).len(), 1);
    assert_eq!(monomial_basis(5, 5).len(), 126);
    let b = monomial_basis(1, 4);
    assert_eq!(b.iter().map(|m| m.to_string()).collect::<Vec<_>>(), ["x0", "x1", "x2", "x3"]);
    for deg in 0..=10u32 {
        for n in 1..=6usize {
            assert_eq!(monomial_basis(deg, n).len() as u64, binomial(deg as u64 + n as u64 - 1, n as u64 - 1));
        }
    }
}

#[test]
fn complete_intersection_series() {
    // oracle: convolve (1 + t + t^2 + t^3) five times
    let mut s = vec![1i64];
    for _ in 0..5 {
        let mut n = vec![0i64; s.len() + 3];
        for (i, c) in s.iter().enumerate() {
            for j in 0..4 {
                n[i + j] += c;
            }
        }
        s = n;
    }
    for k in 0..=25u32 {
        let want = s.get(k as usize).copied().unwrap_or(0) as u64;
        assert_eq!(ci_hilbert_series_coeff(5, 5, k).unwrap(), want);
    }
    assert_eq!(ci_hilbert_series_coeff(5, 5, 0).unwrap(), 1);
    assert_eq!(ci_hilbert_series_coeff(5, 5, 5).unwrap(), 101);
    assert_eq!(ci_hilbert_series_coeff(5, 5, 20).unwrap(), 0);
    assert!(ci_hilbert_series_coeff(1, 5, 0).is_err());
}

#[test]
fn render_forms() {
    let t = RatFun::t();
    let p = Polynomial::<RatFun>::var(2, 0, &()).scale(&t.sub(&RatFun::one(&()))).add(&Polynomial::var(2, 1, &()).scale(&t.neg()));
    assert_eq!(p.to_string(), "(t - 1)*x0 - t*x1");
    let q = x(2, 0).scale(&Rational::new(-1, 2).unwrap()).add(&P::one(2, &()));
    assert_eq!(q.to_string(), "-1/2*x0 + 1");
}
