use crate::error::{Error, Result};
use crate::groebner::{buchberger, ZeroDim, DEFAULT_PROBE_TRIALS};
use crate::linalg::{vanishing_matrix, Matrix};
use crate::polyring::{binomial, monomial_basis, Monomial, MonomialOrder, Polynomial};
use crate::scalars::{Field, Fp, Rational};
use rand::Rng;
use serde::Serialize;

/// Numerators of a given degree with prescribed multiplicity at the nodes.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AdjointReport {
    pub pole_order: u32,
    pub adjoint_order: u32,
    pub numerator_degree: u32,
    pub monomials: u64,
    pub conditions: u64,
    pub rank: u64,
    pub dimension: u64,
}

fn numerator_degree(f: &Polynomial<Rational>, pole: u32) -> Result<u32> {
    if f.nvars() != 5 {
        return Err(Error::domain("the hypersurface must live in P^4 (5 variables)"));
    }
    let d = match f.is_homogeneous() {
        (true, Some(d)) => d,
        _ => return Err(Error::domain("f must be a nonzero form")),
    };
    let deg = pole as i64 * d as i64 - 5;
    if deg < 0 {
        return Err(Error::domain(format!("numerator degree {deg} is negative")));
    }
    Ok(deg as u32)
}

/// Dimension of the space of degree `n d - 5` numerators with multiplicity `>= m` at every point of `sigma`.
pub fn adjoint_space_dim(f: &Polynomial<Rational>, sigma: &[Vec<Rational>], pole: u32, order: u32) -> Result<AdjointReport> {
    let deg = numerator_degree(f, pole)?;
    let partials = f.partial_derivatives();
    for (i, p) in sigma.iter().enumerate() {
        if p.len() != 5 {
            return Err(Error::Validation(format!("point {} does not have 5 coordinates", i + 1)));
        }
        if p.iter().all(|c| c.is_zero()) {
            return Err(Error::Validation(format!("point {} is the zero vector", i + 1)));
        }
        if !f.eval(p).is_zero() || partials.iter().any(|g| !g.eval(p).is_zero()) {
            return Err(Error::Validation(format!("point {} is not a singular point of the hypersurface", i + 1)));
        }
    }
    let m = vanishing_matrix(sigma, deg, order, 5, &())?;
    let rank = m.rank() as u64;
    let cols = m.cols() as u64;
    Ok(AdjointReport {
        pole_order: pole,
        adjoint_order: order,
        numerator_degree: deg,
        monomials: cols,
        conditions: m.rows() as u64,
        rank,
        dimension: cols - rank,
    })
}

/// Rank of the node-evaluation matrix computed mod `p` through the singular scheme.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ModpAdjointReport {
    pub prime: u64,
    pub pole_order: u32,
    pub numerator_degree: u32,
    pub nodes: u64,
    pub reduced: bool,
    pub monomials: u64,
    pub rank: u64,
    pub dimension: u64,
    /// Degree at which the quotient ring is identified with functions on the nodes.
    pub evaluation_degree: u32,
}

/// First-order adjoint conditions at the singular points, without extracting their coordinates.
///
/// The evaluation map on degree-`e` forms factors through the saturated singular
/// scheme; multiplying by a power of a general linear form carries degree `e`
/// into a degree where the Hilbert function has stabilized, and the rank of the
/// resulting map equals the rank of the evaluation matrix.
pub fn adjoint_rank_mod_p<R: Rng>(f: &Polynomial<Rational>, pole: u32, prime: u64, rng: &mut R) -> Result<ModpAdjointReport> {
    let deg = numerator_degree(f, pole)?;
    let fp = f.map_coeffs(&prime, |c| Fp::from_rational(&prime, c))?;
    let gb = buchberger(&fp.partial_derivatives(), &MonomialOrder::grevlex(5))?;
    let nodes = match gb.zero_dim_degree()? {
        ZeroDim::Degree(d) => d,
        ZeroDim::NotZeroDimensional => return Err(Error::NotZeroDimensional),
    };
    let reduced = gb.reducedness_probe(DEFAULT_PROBE_TRIALS, rng)?;
    if !reduced {
        return Err(Error::Validation("singular scheme is not reduced; points are not all nodes".into()));
    }
    let basis = monomial_basis(deg, 5);
    let cols = basis.len() as u64;
    if nodes == 0 {
        return Ok(ModpAdjointReport {
            prime,
            pole_order: pole,
            numerator_degree: deg,
            nodes,
            reduced,
            monomials: cols,
            rank: 0,
            dimension: cols,
            evaluation_degree: deg,
        });
    }
    let k = gb.stable_degree(nodes, deg)?;
    let mut best = 0u64;
    for _ in 0..2 {
        let h = Polynomial::from_terms(
            5,
            &prime,
            (0..5).map(|i| (Monomial::var(5, i), Fp::from_int(&prime, rng.gen_range(1..1_000_000)))).collect(),
        );
        let hj = h.pow(k - deg);
        let std = gb.standard_monomials(k);
        let index: std::collections::HashMap<Monomial, usize> = std.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut mat = Matrix::zeros(std.len(), basis.len(), &prime);
        for (j, u) in basis.iter().enumerate() {
            let nf = gb.normal_form(&hj.mul_term(u, &Fp::one(&prime)))?;
            for (mm, c) in nf.terms() {
                mat.set(index[mm], j, *c);
            }
        }
        best = best.max(mat.rank() as u64);
    }
    Ok(ModpAdjointReport {
        prime,
        pole_order: pole,
        numerator_degree: deg,
        nodes,
        reduced,
        monomials: cols,
        rank: best,
        dimension: cols - best,
        evaluation_degree: k,
    })
}

/// `binomial(n d - 1, 4)`: numerator count with no conditions.
pub fn unconstrained_dimension(d: u32, pole: u32) -> u64 {
    binomial((pole * d) as u64 - 1, 4)
}
