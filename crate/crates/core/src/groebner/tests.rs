use super::*;
use crate::polyring::{ci_hilbert_series_coeff, power_sum, OrderKind};
use crate::scalars::{Fp, Rational, DEFAULT_PRIMES};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type P = Polynomial<Rational>;

fn parse(s: &str, n: usize) -> P {
    crate::cli::parse_polynomial(s, n, false).unwrap().to_rational().unwrap()
}

#[test]
fn single_division_step() {
    let lex = MonomialOrder::new(OrderKind::Lex, 2);
    let gb = buchberger(&[parse("x0^4 - x1", 2)], &lex).unwrap();
    assert_eq!(gb.normal_form(&parse("x0^4", 2)).unwrap(), parse("x1", 2));
    assert!(gb.contains(&parse("x0^8 - x1^2", 2)).unwrap());
    assert_eq!(gb.normal_form(&P::one(2, &())).unwrap(), P::one(2, &()));
}

#[test]
fn trivial_bases() {
    let o = MonomialOrder::grevlex(2);
    let gb = buchberger(&[parse("x0", 2), parse("x1", 2)], &o).unwrap();
    assert_eq!(gb.generators(), vec![parse("x1", 2), parse("x0", 2)]);
    let gb = buchberger(&[parse("x0^2 - 1", 2)], &o).unwrap();
    assert_eq!(gb.generators(), vec![parse("x0^2 - 1", 2)]);
}

#[test]
fn two_parabolas_have_four_standard_monomials() {
    let o = MonomialOrder::grevlex(2);
    let gb = buchberger(&[parse("x0 - x1^2", 2), parse("x1 - x0^2", 2)], &o).unwrap();
    assert!(gb.satisfies_buchberger_criterion());
    assert!(gb.is_reduced());
    // oracle: substituting x0 = x1^2 gives x1 - x1^4, four roots
    let mut count = 0;
    for a in 0..4u16 {
        for b in 0..4u16 {
            if gb.is_standard(&Monomial::from_exps(&[a, b])) {
                count += 1;
            }
        }
    }
    assert_eq!(count, 4);
}

#[test]
fn cofactors_reproduce_basis() {
    let gens = vec![parse("x0^2*x1 - 1", 3), parse("x0*x1^2 - x2", 3), parse("x2^2 - x0", 3)];
    let (gb, cof) = buchberger_with_cofactors(&gens, &MonomialOrder::grevlex(3)).unwrap();
    for (g, c) in gb.generators().iter().zip(&cof) {
        let sum = c.iter().zip(&gens).fold(P::zero(3, &()), |acc, (a, b)| acc.add(&a.mul(b)));
        assert_eq!(&sum, g);
    }
    let f = parse("x0^3*x1^2 + x2^5", 3);
    let d = gb.divide(&f).unwrap();
    let back = d.quotients.iter().zip(gb.generators()).fold(d.remainder.clone(), |acc, (q, g)| acc.add(&q.mul(&g)));
    assert_eq!(back, f);
}

fn fermat_jacobian<F: Field>(d: u32, n: usize, ctx: &F::Ctx) -> GroebnerBasis<F> {
    let f = power_sum::<F>(d, n, ctx).unwrap();
    buchberger(&f.partial_derivatives(), &MonomialOrder::grevlex(n)).unwrap()
}

#[test]
fn fermat_hilbert_function() {
    let gb = fermat_jacobian::<Rational>(5, 5, &());
    assert_eq!(gb.hilbert_function(5).unwrap(), 101);
    assert_eq!(gb.hilbert_function(0).unwrap(), 1);
    assert_eq!(gb.hilbert_function(16).unwrap(), 0);
    for k in 0..=20 {
        assert_eq!(gb.hilbert_function(k).unwrap(), ci_hilbert_series_coeff(5, 5, k).unwrap());
    }
    assert_eq!(gb.zero_dim_degree().unwrap(), ZeroDim::Degree(0));
}

#[test]
fn quadric_cone_has_one_reduced_point() {
    let f = parse("x0^2 + x1^2 + x2^2", 4);
    let gb = buchberger(&f.partial_derivatives(), &MonomialOrder::grevlex(4)).unwrap();
    assert_eq!(gb.zero_dim_degree().unwrap(), ZeroDim::Degree(1));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    assert!(gb.reducedness_probe(3, &mut rng).unwrap());
}

#[test]
fn double_point_is_not_reduced() {
    let gb = buchberger(&[parse("x0^2", 2)], &MonomialOrder::grevlex(2)).unwrap();
    assert_eq!(gb.zero_dim_degree().unwrap(), ZeroDim::Degree(2));
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    assert!(!gb.reducedness_probe(3, &mut rng).unwrap());
}

#[test]
fn positive_dimensional_detection() {
    let gb = buchberger(&[parse("x0*x1", 3)], &MonomialOrder::grevlex(3)).unwrap();
    assert_eq!(gb.zero_dim_degree().unwrap(), ZeroDim::NotZeroDimensional);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    assert!(gb.reducedness_probe(1, &mut rng).is_err());
    let nh = buchberger(&[parse("x0 - 1", 2)], &MonomialOrder::grevlex(2)).unwrap();
    assert!(nh.hilbert_function(1).is_err());
}

#[test]
fn three_points_in_the_plane() {
    // ideal of (1:0:0), (0:1:0), (0:0:1)
    let gens = [parse("x0*x1", 3), parse("x0*x2", 3), parse("x1*x2", 3)];
    for kind in [OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex] {
        let gb = buchberger(&gens, &MonomialOrder::new(kind, 3)).unwrap();
        assert_eq!(gb.zero_dim_degree().unwrap(), ZeroDim::Degree(3));
    }
    let gbp = buchberger(
        &gens.iter().map(|g| g.map_coeffs(&DEFAULT_PRIMES[0], |c| Fp::from_rational(&DEFAULT_PRIMES[0], c))).collect::<Result<Vec<_>>>().unwrap(),
        &MonomialOrder::grevlex(3),
    )
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    assert!(gbp.reducedness_probe(3, &mut rng).unwrap());
}
