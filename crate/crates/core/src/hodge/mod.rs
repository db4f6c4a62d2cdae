//! Hodge numbers, node bounds, adjoint conditions, Euler polynomials and
//! mixed Hodge bookkeeping for hypersurfaces in P^4.

mod adjoint;
mod euler;
mod mhs;

pub use adjoint::{adjoint_rank_mod_p, adjoint_space_dim, unconstrained_dimension, AdjointReport, ModpAdjointReport};
pub use euler::{
    euler_blowup, euler_nodal_threefold, euler_of_pn, euler_point, euler_product, euler_resolution, euler_sum, EulerPolynomial,
};
pub use mhs::{mhs_dims, MhsReport, DEFAULT_H2X};

use crate::error::{Error, Result};
use crate::groebner::buchberger;
use crate::polyring::{power_sum, MonomialOrder};
use crate::scalars::Rational;
use serde::Serialize;

/// Primitive middle Hodge numbers of a smooth threefold hypersurface.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct HodgeDiamondH3 {
    pub h30: u64,
    pub h21: u64,
    pub h12: u64,
    pub h03: u64,
}

/// Hodge numbers of a smooth degree-`d` hypersurface in P^4 from the Fermat Jacobian ring.
pub fn smooth_hodge_numbers(d: u32) -> Result<HodgeDiamondH3> {
    if d < 2 {
        return Err(Error::domain("degree must be at least 2"));
    }
    let f = power_sum::<Rational>(d, 5, &())?;
    let gb = buchberger(&f.partial_derivatives(), &MonomialOrder::grevlex(5))?;
    let mut h = [0u64; 4];
    for (k, slot) in h.iter_mut().enumerate() {
        let deg = (k as i64 + 1) * d as i64 - 5;
        if deg >= 0 {
            *slot = gb.hilbert_function(deg as u32)?;
        }
    }
    Ok(HodgeDiamondH3 { h30: h[0], h21: h[1], h12: h[2], h03: h[3] })
}

/// Largest possible node count of a degree-`d` threefold hypersurface.
pub fn node_bound(d: u32) -> Result<u64> {
    Ok(smooth_hodge_numbers(d)?.h21)
}

/// `N = 2n - 3` for pole order `n >= 2`.
pub fn pole_adjoint_threshold(n: i64) -> Result<i64> {
    if n < 2 {
        return Err(Error::domain("pole order must be at least 2"));
    }
    Ok(2 * n - 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ci_hilbert_series_coeff;

    #[test]
    fn smooth_numbers() {
        let h = smooth_hodge_numbers(5).unwrap();
        assert_eq!((h.h30, h.h21, h.h12, h.h03), (1, 101, 101, 1));
        let h = smooth_hodge_numbers(2).unwrap();
        assert_eq!((h.h30, h.h21, h.h12, h.h03), (0, 0, 0, 0));
        let h = smooth_hodge_numbers(4).unwrap();
        assert_eq!((h.h30, h.h21, h.h12, h.h03), (0, 30, 30, 0));
        assert_eq!(ci_hilbert_series_coeff(4, 5, 3).unwrap(), 30);
        for d in 2..=8 {
            let h = smooth_hodge_numbers(d).unwrap();
            assert_eq!(h.h30, h.h03);
            assert_eq!(h.h21, h.h12);
        }
        assert!(smooth_hodge_numbers(1).is_err());
    }

    #[test]
    fn bounds_and_thresholds() {
        assert_eq!(node_bound(5).unwrap(), 101);
        assert_eq!(node_bound(2).unwrap(), 0);
        assert_eq!(node_bound(3).unwrap(), 5);
        assert_eq!(ci_hilbert_series_coeff(3, 5, 1).unwrap(), 5);
        let table: Vec<i64> = (2..=8).map(|n| pole_adjoint_threshold(n).unwrap()).collect();
        assert_eq!(table, vec![1, 3, 5, 7, 9, 11, 13]);
        assert!(pole_adjoint_threshold(1).is_err());
    }
}
