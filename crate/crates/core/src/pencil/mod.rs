//! One-parameter pencils `F - t*G`: pole-order reduction, Picard-Fuchs operators and local exponents.

mod general;
mod indicial;
mod lattice;
mod operator;
mod symmetric;

pub use general::{gd_reduce, GdStep, JacobianReduction};
pub use indicial::{indicial_exponents, roots_with_multiplicity, unipotency_class, Exponent, IndicialData, Point, UnipotencyClass};
pub use lattice::Lattice;
pub use operator::{PFOperator, ThetaOperator, ZOperator};
pub use symmetric::{symmetric_reduce, SymmetricTables};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, ZeroDim};
use crate::linalg::Matrix;
use crate::polyring::{pencil_poly, MonomialOrder, Polynomial};
use crate::scalars::{Field, Fp, RatFun, Rational, DEFAULT_PRIMES};
use rand::Rng;

/// The family `f_t = F - t*G` of homogeneous forms.
#[derive(Clone, Debug)]
pub struct Pencil {
    f: Polynomial<Rational>,
    g: Polynomial<Rational>,
    degree: u32,
    fiber: Polynomial<RatFun>,
}

impl Pencil {
    pub fn new(f: Polynomial<Rational>, g: Polynomial<Rational>) -> Result<Self> {
        if f.nvars() != g.nvars() {
            return Err(Error::domain("F and G have different numbers of variables"));
        }
        if f.nvars() < 2 {
            return Err(Error::domain("a pencil needs at least two variables"));
        }
        let (hf, df) = f.is_homogeneous();
        let (hg, dg) = g.is_homogeneous();
        let degree = df.ok_or_else(|| Error::domain("F is zero"))?;
        if !hf || !hg {
            return Err(Error::domain("F and G must be homogeneous"));
        }
        if dg.is_some_and(|e| e != degree) {
            return Err(Error::domain(format!("deg F = {degree} but deg G = {}", dg.unwrap_or(0))));
        }
        let fiber = pencil_poly(&f, &g);
        Ok(Pencil { f, g, degree, fiber })
    }

    /// From a polynomial whose coefficients are affine in `t`.
    pub fn from_fiber(p: &Polynomial<RatFun>) -> Result<Self> {
        let (f, g) = p.split_pencil()?;
        Self::new(f, g)
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn f(&self) -> &Polynomial<Rational> {
        &self.f
    }

    pub fn g(&self) -> &Polynomial<Rational> {
        &self.g
    }

    pub fn fiber(&self) -> &Polynomial<RatFun> {
        &self.fiber
    }

    pub fn at(&self, t: &Rational) -> Polynomial<Rational> {
        self.f.sub(&self.g.scale(t))
    }

    /// Invariant under all permutations of the variables.
    pub fn is_symmetric(&self) -> bool {
        let n = self.nvars();
        let swap: Vec<usize> = (0..n).map(|i| [1, 0].get(i).copied().unwrap_or(i)).collect();
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        [&self.f, &self.g].iter().all(|p| permute(p, &swap) == **p && permute(p, &cycle) == **p)
    }

    /// Checks that the fiber at a random parameter is smooth, working modulo a large prime.
    /// Smoothness of the reduction implies smoothness over Q.
    pub fn check_generic_smoothness<R: Rng>(&self, rng: &mut R) -> Result<()> {
        for attempt in 0..4 {
            let p = DEFAULT_PRIMES[attempt % DEFAULT_PRIMES.len()];
            let t = Fp::new(rng.gen_range(1..1_000_000), p)?;
            let to_fp = |c: &Rational| Fp::from_rational(&p, c);
            let fp = self.f.map_coeffs(&p, to_fp)?.sub(&self.g.map_coeffs(&p, to_fp)?.scale(&t));
            let gb = buchberger(&fp.partial_derivatives(), &MonomialOrder::grevlex(self.nvars()))?;
            if gb.zero_dim_degree()? == ZeroDim::Degree(0) {
                return Ok(());
            }
        }
        Err(Error::Validation("the generic fiber appears to be singular".into()))
    }
}

fn permute<F: Field>(p: &Polynomial<F>, perm: &[usize]) -> Polynomial<F> {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut e = vec![0u16; perm.len()];
            for (i, &x) in m.exps().iter().enumerate() {
                e[perm[i]] = x;
            }
            (crate::polyring::Monomial::from_exps(&e), c.clone())
        })
        .collect();
    Polynomial::from_terms(p.nvars(), p.ctx(), terms)
}

/// The class of `numerator * Omega / f_t^pole_order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFormRep {
    pub numerator: Polynomial<RatFun>,
    pub pole_order: u32,
}

/// A pole-order reduction strategy: reduced forms are lists of numerators indexed by pole order.
pub trait Reduction {
    fn pencil(&self) -> &Pencil;
    /// Dimension of the coordinate space.
    fn space_dim(&self) -> usize;
    /// Reduce `parts[k] * Omega / f^k` (summed over k) to standard numerators.
    fn reduce(&self, parts: Vec<Polynomial<RatFun>>) -> Result<Vec<Polynomial<RatFun>>>;
    /// Coordinates of a reduced list.
    fn coordinates(&self, reduced: &[Polynomial<RatFun>]) -> Vec<RatFun>;
}

/// Which reduction produced an operator.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionPath {
    General,
    Symmetric,
}

/// `d/dt` of a reduced list, before reduction.
pub fn differentiate(pencil: &Pencil, parts: &[Polynomial<RatFun>]) -> Vec<Polynomial<RatFun>> {
    let n = pencil.nvars();
    let g = pencil.g().to_ratfun();
    let mut out = vec![Polynomial::zero(n, &()); parts.len() + 1];
    for (k, p) in parts.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        out[k] = out[k].add(&p.t_derivative());
        // d/dt f^-k = k G f^-(k+1)
        out[k + 1] = out[k + 1].add(&p.mul(&g).scale(&RatFun::from_int(&(), k as i64)));
    }
    while out.len() > 1 && out.last().is_some_and(|p| p.is_zero()) {
        out.pop();
    }
    out
}

/// The holomorphic form `Omega / f` as a reduction input.
pub fn holomorphic_form(pencil: &Pencil) -> Result<Vec<Polynomial<RatFun>>> {
    if pencil.degree() as usize != pencil.nvars() {
        return Err(Error::domain("Omega/f is a holomorphic form only when the degree equals the number of variables"));
    }
    let n = pencil.nvars();
    Ok(vec![Polynomial::zero(n, &()), Polynomial::one(n, &())])
}

/// Minimal linear relation `sum c_i v_i = 0` with `c_last = 1`, if the vectors are dependent.
pub fn dependency(vectors: &[Vec<RatFun>]) -> Option<Vec<RatFun>> {
    let dim = vectors.first()?.len();
    let rows: Vec<Vec<RatFun>> = (0..dim).map(|i| vectors.iter().map(|v| v[i].clone()).collect()).collect();
    let m = if dim == 0 {
        Matrix::zeros(0, vectors.len(), &())
    } else {
        Matrix::from_rows(&(), vectors.len(), rows).expect("rectangular")
    };
    let ker = m.kernel_basis();
    let v = ker.into_iter().find(|v| !v.last().expect("nonempty").is_zero())?;
    let inv = v.last().expect("nonempty").inv().ok()?;
    Some(v.iter().map(|c| c.mul(&inv)).collect())
}

/// A Picard-Fuchs operator with the data used to derive it.
#[derive(Clone, Debug)]
pub struct PicardFuchs {
    pub operator: PFOperator,
    pub space_dim: usize,
    pub path: ReductionPath,
    /// Coordinates of the successive derivatives of the holomorphic form.
    pub derivatives: Vec<Vec<RatFun>>,
}

/// Coordinates of the first `count` derivatives of the holomorphic form.
pub fn derivative_coordinates(red: &dyn Reduction, count: usize) -> Result<Vec<Vec<RatFun>>> {
    let mut state = red.reduce(holomorphic_form(red.pencil())?)?;
    let mut out = vec![red.coordinates(&state)];
    for _ in 1..count {
        state = red.reduce(differentiate(red.pencil(), &state))?;
        out.push(red.coordinates(&state));
    }
    Ok(out)
}

/// Minimal-order operator annihilating the period of `Omega / f_t`, searched up to `max_order`.
pub fn picard_fuchs_with(red: &dyn Reduction, max_order: Option<usize>, path: ReductionPath) -> Result<PicardFuchs> {
    let space_dim = red.space_dim();
    let max_order = max_order.unwrap_or(space_dim);
    if max_order == 0 {
        return Err(Error::domain("max_order must be positive"));
    }
    let mut state = red.reduce(holomorphic_form(red.pencil())?)?;
    let mut coords = vec![red.coordinates(&state)];
    if coords[0].iter().all(|c| c.is_zero()) {
        return Err(Error::Invariant("the holomorphic form reduced to zero".into()));
    }
    for _ in 1..=max_order {
        state = red.reduce(differentiate(red.pencil(), &state))?;
        coords.push(red.coordinates(&state));
        if let Some(c) = dependency(&coords) {
            let operator = PFOperator::new(c)?;
            return Ok(PicardFuchs { operator, space_dim, path, derivatives: coords });
        }
    }
    Err(Error::NoOperatorFound { max_order, space_dim })
}

/// Picard-Fuchs operator of a pencil with smooth generic fiber.
/// `symmetric` selects the reduction restricted to permutation invariants.
pub fn picard_fuchs<R: Rng>(pencil: &Pencil, max_order: Option<usize>, symmetric: bool, rng: &mut R) -> Result<PicardFuchs> {
    pencil.check_generic_smoothness(rng)?;
    if symmetric {
        let tables = symmetric_reduce(pencil)?;
        picard_fuchs_with(&tables, max_order, ReductionPath::Symmetric)
    } else {
        let red = JacobianReduction::new(pencil)?;
        picard_fuchs_with(&red, max_order, ReductionPath::General)
    }
}

/// Same as [`picard_fuchs`] without the smoothness precondition. Results on singular pencils carry no guarantee.
pub fn picard_fuchs_experimental(pencil: &Pencil, max_order: Option<usize>, symmetric: bool) -> Result<PicardFuchs> {
    if symmetric {
        picard_fuchs_with(&symmetric_reduce(pencil)?, max_order, ReductionPath::Symmetric)
    } else {
        picard_fuchs_with(&JacobianReduction::new(pencil)?, max_order, ReductionPath::General)
    }
}
