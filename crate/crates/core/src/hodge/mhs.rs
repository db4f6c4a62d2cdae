use super::euler::euler_nodal_threefold;
use crate::error::{Error, Result};
use serde::Serialize;

/// Assumed dimension of H^2 of the nodal threefold when none is supplied.
pub const DEFAULT_H2X: u64 = 1;

/// Weight-graded dimensions of H^3 of a nodal threefold.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MhsReport {
    pub m: u64,
    /// Hodge types (3,0), (2,1), (1,2), (0,3) of the weight-3 quotient.
    pub gr3_types: [u64; 4],
    pub h3_resolution: u64,
    pub w2_dim: u64,
    pub h3_total: u64,
    pub h2_resolution: u64,
    pub h2_exceptional: u64,
    pub h2x: u64,
    pub l_range: [i64; 2],
    pub s_range: [i64; 2],
    /// `e^{1,1}(W) = 1 - m`, which also equals `l - s`.
    pub e11_w: i64,
    pub relation: String,
    pub assumptions: Vec<String>,
}

pub fn mhs_dims(m: u64, a: u64, b: u64, h2x: Option<u64>) -> Result<MhsReport> {
    // validates m <= b
    euler_nodal_threefold(m, a, b)?;
    let mut assumptions = Vec::new();
    let h2x = match h2x {
        Some(v) => v,
        None => {
            assumptions.push(format!("h2X = {DEFAULT_H2X} (hyperplane class only; not computed)"));
            DEFAULT_H2X
        }
    };
    if h2x < 1 {
        return Err(Error::domain("h2X must be at least 1"));
    }
    let h3_resolution = 2 * a + 2 * (b - m);
    let h2_resolution = m + 1;
    let h2_exceptional = 2 * m;
    // exactness: h2X - (m+1) + 2m - h3(X) + h3(res) = 0
    let w2 = (h2x + h2_exceptional)
        .checked_sub(h2_resolution)
        .ok_or_else(|| Error::Invariant("negative weight-2 dimension".into()))?;
    let h3_total = h3_resolution + w2;
    let mi = m as i64;
    Ok(MhsReport {
        m,
        gr3_types: [a, b - m, b - m, a],
        h3_resolution,
        w2_dim: w2,
        h3_total,
        h2_resolution,
        h2_exceptional,
        h2x,
        l_range: [0, mi + 1],
        s_range: [mi - 1, 2 * mi],
        e11_w: 1 - mi,
        relation: "l - s = 1 - m".into(),
        assumptions,
    })
}

impl MhsReport {
    /// Alternating sum along the five-term sequence.
    pub fn alternating_sum(&self) -> i64 {
        self.h2x as i64 - self.h2_resolution as i64 + self.h2_exceptional as i64 - self.h3_total as i64 + self.h3_resolution as i64
    }
}
