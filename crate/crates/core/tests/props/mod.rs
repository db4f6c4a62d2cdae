//! Randomized invariants shared by the property tests and the acceptance run.
#![allow(dead_code)]

use nodal_hodge::groebner::{buchberger, ZeroDim};
use nodal_hodge::hodge::{euler_blowup, euler_nodal_threefold, euler_of_pn, euler_point, euler_resolution, mhs_dims, smooth_hodge_numbers};
use nodal_hodge::linalg::{vanishing_matrix, Matrix};
use nodal_hodge::pencil::{indicial_exponents, Point, ThetaOperator};
use nodal_hodge::polyring::{binomial, elementary_symmetric, monomial_basis, power_sum, Monomial, MonomialOrder, OrderKind, Polynomial};
use nodal_hodge::scalars::{ratfun_reduce, Field, Fp, RatFun, Rational, UPoly};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

pub const P: u64 = 1_073_741_827;
pub const Q: u64 = 1_073_741_831;

pub type Outcome = Result<(), String>;

pub const CASES: u32 = 100;

fn check<S: Strategy>(strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new(config).run(&strategy, test).map_err(|e| e.to_string())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..25).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn fp() -> impl Strategy<Value = Fp> {
    (0i64..P as i64).prop_map(|v| Fp::new(v, P).unwrap())
}

fn upoly(len: usize) -> impl Strategy<Value = UPoly<Rational>> {
    prop::collection::vec(rational(), 0..=len).prop_map(|c| UPoly::from_coeffs(&(), c))
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (upoly(3), upoly(3).prop_filter("nonzero", |d| !d.is_zero())).prop_map(|(n, d)| ratfun_reduce(n, d).unwrap())
}

fn poly(nvars: usize, max_exp: u16, max_terms: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), rational()), 0..=max_terms).prop_map(move |ts| {
        let terms = ts.into_iter().map(|(e, c)| (Monomial::from_exps(&e), c)).collect();
        Polynomial::from_terms(nvars, &(), terms)
    })
}

fn form(nvars: usize, deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    let basis = monomial_basis(deg, nvars);
    let n = basis.len();
    prop::collection::vec((0..n, -9i64..10), 1..=max_terms).prop_map(move |ts| {
        let terms = ts.into_iter().map(|(i, c)| (basis[i].clone(), Rational::int(c))).collect();
        Polynomial::from_terms(nvars, &(), terms)
    })
}

fn int_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..10, c), r))
}

fn field_laws<F: Field>(a: &F, b: &F, c: &F) -> std::result::Result<(), TestCaseError> {
    prop_assert_eq!(a.add(b), b.add(a));
    prop_assert_eq!(a.mul(b), b.mul(a));
    prop_assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    prop_assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    prop_assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    prop_assert!(a.sub(a).is_zero());
    prop_assert!(a.add(&a.neg()).is_zero());
    if a.is_zero() {
        prop_assert!(a.inv().is_err());
    } else {
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        prop_assert_eq!(b.mul(a).div(a).unwrap(), b.clone());
    }
    Ok(())
}

pub fn rational_field_laws() -> Outcome {
    check((rational(), rational(), rational()), |(a, b, c)| {
        field_laws(&a, &b, &c)?;
        Ok(())
    })
}

pub fn prime_field_laws() -> Outcome {
    check((fp(), fp(), fp()), |(a, b, c)| {
        field_laws(&a, &b, &c)?;
        Ok(())
    })
}

pub fn ratfun_field_laws() -> Outcome {
    check((ratfun(), ratfun(), ratfun()), |(a, b, c)| {
        field_laws(&a, &b, &c)?;
        Ok(())
    })
}

pub fn reduction_mod_p_is_a_homomorphism() -> Outcome {
    check((rational(), rational()), |(a, b)| {
        let r = |x: &Rational| Fp::from_rational(&P, x).unwrap();
        prop_assert_eq!(r(&a.add(&b)), r(&a).add(&r(&b)));
        prop_assert_eq!(r(&a.mul(&b)), r(&a).mul(&r(&b)));
        prop_assert_eq!(r(&a.neg()), r(&a).neg());
        Ok(())
    })
}

pub fn ratfun_reduce_is_idempotent() -> Outcome {
    check((ratfun(), upoly(2).prop_filter("nonzero", |p| !p.is_zero())), |(x, s)| {
        let again = ratfun_reduce(x.num().clone(), x.den().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        let scaled = ratfun_reduce(x.num().mul(&s), x.den().mul(&s)).unwrap();
        prop_assert_eq!(scaled, x);
        Ok(())
    })
}

pub fn polynomial_ring_laws() -> Outcome {
    check((poly(3, 3, 5), poly(3, 3, 5), poly(3, 3, 5)), |(f, g, h)| {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
        Ok(())
    })
}

pub fn euler_relation() -> Outcome {
    check((1u32..6).prop_flat_map(|d| (Just(d), form(4, d, 6))), |(d, f)| {
        let mut lhs = Polynomial::zero(4, &());
        for (i, df) in f.partial_derivatives().iter().enumerate() {
            lhs = lhs.add(&Polynomial::var(4, i, &()).mul(df));
        }
        prop_assert_eq!(lhs, f.scale(&Rational::int(d as i64)));
        Ok(())
    })
}

pub fn restriction_is_a_homomorphism() -> Outcome {
    check((poly(4, 3, 5), poly(4, 3, 5)), |(f, g)| {
        let r = |p: &Polynomial<Rational>| p.restrict_to_hyperplane().unwrap();
        prop_assert_eq!(r(&f.mul(&g)), r(&f).mul(&r(&g)));
        prop_assert_eq!(r(&f.add(&g)), r(&f).add(&r(&g)));
        prop_assert_eq!(r(&f).nvars(), 3);
        Ok(())
    })
}

pub fn rank_nullity() -> Outcome {
    check(int_matrix(7), |rows| {
        let m = Matrix::<Rational>::from_ints(&(), &rows).unwrap();
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        Ok(())
    })
}

pub fn modular_rank_matches_rational() -> Outcome {
    check(int_matrix(6), |rows| {
        // entries below 10 in size keep every minor below 6! * 9^6 < P, Q
        let m = Matrix::<Rational>::from_ints(&(), &rows).unwrap();
        for p in [P, Q] {
            let mp = Matrix::<Fp>::from_ints(&p, &rows).unwrap();
            prop_assert_eq!(mp.rank(), m.rank());
            let ker = mp.kernel_basis();
            prop_assert_eq!(mp.rank() + ker.len(), mp.cols());
            for v in &ker {
                prop_assert!(mp.mul_vec(v).iter().all(|x| x.is_zero()));
            }
        }
        Ok(())
    })
}

pub fn generic_points_impose_independent_conditions() -> Outcome {
    check((1u32..4, prop::collection::vec(prop::collection::vec(-1_000_000i64..1_000_000, 2), 1..12)), |(deg, pts)| {
        let points: Vec<Vec<Rational>> = pts.iter()
            .map(|p| vec![Rational::int(p[0]), Rational::int(p[1]), Rational::int(1)])
            .collect();
        let m = vanishing_matrix(&points, deg, 1, 3, &()).unwrap();
        let cols = monomial_basis(deg, 3).len();
        let mut distinct = pts.clone();
        distinct.sort();
        distinct.dedup();
        prop_assume!(distinct.len() == pts.len());
        prop_assert_eq!(m.rank(), points.len().min(cols));
        Ok(())
    })
}

pub fn buchberger_criterion_and_membership() -> Outcome {
    check(prop::collection::vec(form(3, 2, 3), 1..4), |gens| {
        for kind in [OrderKind::Grevlex, OrderKind::Grlex, OrderKind::Lex] {
            let gb = buchberger(&gens, &MonomialOrder::new(kind, 3)).unwrap();
            prop_assert!(gb.satisfies_buchberger_criterion());
            prop_assert!(gb.is_reduced());
            for g in &gens {
                prop_assert!(gb.normal_form(g).unwrap().is_zero());
            }
        }
        Ok(())
    })
}

pub fn normal_form_is_multiplicative() -> Outcome {
    check((prop::collection::vec(form(3, 2, 3), 1..3), poly(3, 3, 4), poly(3, 3, 4)), |(gens, f, g)| {
        let gb = buchberger(&gens, &MonomialOrder::grevlex(3)).unwrap();
        let nf = |p: &Polynomial<Rational>| gb.normal_form(p).unwrap();
        prop_assert_eq!(nf(&f.mul(&g)), nf(&nf(&f).mul(&nf(&g))));
        prop_assert_eq!(nf(&f.add(&g)), nf(&f).add(&nf(&g)));
        Ok(())
    })
}

pub fn zero_dim_degree_is_order_independent() -> Outcome {
    check((form(3, 1, 3), form(3, 2, 4)), |(a, b)| {
        let gens = [a, b];
        let degrees: Vec<ZeroDim> = [OrderKind::Grevlex, OrderKind::Grlex, OrderKind::Lex]
            .into_iter()
            .map(|k| buchberger(&gens, &MonomialOrder::new(k, 3)).unwrap().zero_dim_degree().unwrap())
            .collect();
        prop_assert_eq!(degrees[0], degrees[1]);
        prop_assert_eq!(degrees[0], degrees[2]);
        Ok(())
    })
}

pub fn hilbert_function_survives_reduction_mod_p() -> Outcome {
    check(prop::collection::vec(form(3, 2, 3), 1..4), |gens| {
        let order = MonomialOrder::grevlex(3);
        let gq = buchberger(&gens, &order).unwrap();
        let modp: Vec<Polynomial<Fp>> = gens.iter().map(|g| g.map_coeffs(&P, |c| Fp::from_rational(&P, c)).unwrap()).collect();
        let gp = buchberger(&modp, &order).unwrap();
        for k in 0..8 {
            prop_assert_eq!(gq.hilbert_function(k).unwrap(), gp.hilbert_function(k).unwrap());
        }
        Ok(())
    })
}

pub fn gauge_shifts_exponents() -> Outcome {
    check((rational(), rational(), rational(), -5i64..6), |(r1, r2, a, c)| {
        // (theta - r1)(theta - r2) + c t theta^2
        let k = |x: Rational| RatFun::constant(x);
        let t = RatFun::t().mul(&RatFun::from_int(&(), c));
        let op = ThetaOperator {
            coeffs: vec![k(r1.mul(&r2)), k(r1.add(&r2).neg()), k(Rational::int(1)).add(&t)],
        };
        let shifted = indicial_exponents(&op.gauge(&a).to_d_form(), &Point::Finite(Rational::int(0)));
        let mut got: Vec<Rational> = shifted.exponents.iter().map(|e| e.as_rational().unwrap().clone()).collect();
        let mut want = vec![r1.add(&a), r2.add(&a)];
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
        Ok(())
    })
}

pub fn euler_identities() -> Outcome {
    check((0u64..=101, 0u64..5), |(m, a)| {
        let b = 101;
        let nodal = euler_nodal_threefold(m, a, b).unwrap();
        let res = euler_resolution(m, a, b).unwrap();
        let p1 = euler_of_pn(1);
        let exc = p1.mul(&p1).sub(&euler_point());
        prop_assert_eq!(res.sub(&exc.scale(m as i64)), nodal.clone());
        prop_assert!(nodal.is_symmetric());
        prop_assert!(res.is_symmetric());
        let blown = euler_blowup(&euler_of_pn(4), &euler_point().scale(m as i64), 3).unwrap();
        for k in 1..=3 {
            prop_assert_eq!(blown.coeff(k, k), m as i64 + 1);
        }
        prop_assert_eq!(blown.coeff(0, 0), 1);
        prop_assert_eq!(blown.coeff(4, 4), 1);
        prop_assert!(blown.is_symmetric());
        Ok(())
    })
}

pub fn mhs_sequence_is_exact() -> Outcome {
    check((0u64..=101, 0u64..5, 1u64..5), |(m, a, h2)| {
        let r = mhs_dims(m, a, 101, Some(h2)).unwrap();
        prop_assert_eq!(r.alternating_sum(), 0);
        let lhs = r.h2x as i64 - r.h2_resolution as i64 + r.h2_exceptional as i64 - r.h3_total as i64 + r.h3_resolution as i64;
        prop_assert_eq!(lhs, 0);
        Ok(())
    })
}

pub fn newton_identity_small_ranks() -> Outcome {
    for n in 2..=8 {
        let e1 = elementary_symmetric::<Rational>(1, n, &()).unwrap();
        let e2 = elementary_symmetric::<Rational>(2, n, &()).unwrap();
        let p2 = power_sum::<Rational>(2, n, &()).unwrap();
        if p2 != e1.mul(&e1).sub(&e2.scale(&Rational::int(2))) {
            return Err(format!("p2 = e1^2 - 2 e2 fails for n = {n}"));
        }
        if n < 3 {
            continue;
        }
        let e3 = elementary_symmetric::<Rational>(3, n, &()).unwrap();
        let p1 = power_sum::<Rational>(1, n, &()).unwrap();
        let p3 = power_sum::<Rational>(3, n, &()).unwrap();
        // 3 e3 = e2 p1 - e1 p2 + p3
        if e3.scale(&Rational::int(3)) != e2.mul(&p1).sub(&e1.mul(&p2)).add(&p3) {
            return Err(format!("3 e3 identity fails for n = {n}"));
        }
    }
    Ok(())
}

pub fn monomial_counts_are_stars_and_bars() -> Outcome {
    for n in 1..=6usize {
        for d in 0..=10u32 {
            let want = binomial(d as u64 + n as u64 - 1, n as u64 - 1);
            if monomial_basis(d, n).len() as u64 != want {
                return Err(format!("degree {d} in {n} variables"));
            }
        }
    }
    Ok(())
}

pub fn smooth_hodge_symmetry() -> Outcome {
    for d in 2..=8 {
        let h = smooth_hodge_numbers(d).map_err(|e| e.to_string())?;
        if h.h30 != h.h03 || h.h21 != h.h12 {
            return Err(format!("asymmetric Hodge numbers for d = {d}"));
        }
    }
    Ok(())
}

pub const ALL: &[(&str, fn() -> Outcome)] = &[
    ("rational_field_laws", rational_field_laws),
    ("prime_field_laws", prime_field_laws),
    ("ratfun_field_laws", ratfun_field_laws),
    ("reduction_mod_p_is_a_homomorphism", reduction_mod_p_is_a_homomorphism),
    ("ratfun_reduce_is_idempotent", ratfun_reduce_is_idempotent),
    ("polynomial_ring_laws", polynomial_ring_laws),
    ("euler_relation", euler_relation),
    ("restriction_is_a_homomorphism", restriction_is_a_homomorphism),
    ("rank_nullity", rank_nullity),
    ("modular_rank_matches_rational", modular_rank_matches_rational),
    ("generic_points_impose_independent_conditions", generic_points_impose_independent_conditions),
    ("buchberger_criterion_and_membership", buchberger_criterion_and_membership),
    ("normal_form_is_multiplicative", normal_form_is_multiplicative),
    ("zero_dim_degree_is_order_independent", zero_dim_degree_is_order_independent),
    ("hilbert_function_survives_reduction_mod_p", hilbert_function_survives_reduction_mod_p),
    ("gauge_shifts_exponents", gauge_shifts_exponents),
    ("euler_identities", euler_identities),
    ("mhs_sequence_is_exact", mhs_sequence_is_exact),
    ("newton_identity_small_ranks", newton_identity_small_ranks),
    ("monomial_counts_are_stars_and_bars", monomial_counts_are_stars_and_bars),
    ("smooth_hodge_symmetry", smooth_hodge_symmetry),
];
