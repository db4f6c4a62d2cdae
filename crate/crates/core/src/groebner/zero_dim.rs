use super::GroebnerBasis;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::polyring::{monomial_basis_in, Monomial, Polynomial};
use crate::scalars::Field;
use rand::Rng;
use std::collections::HashMap;

pub const DEFAULT_PROBE_TRIALS: usize = 3;

/// Outcome of a degree query on a projective scheme.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZeroDim {
    Degree(u64),
    NotZeroDimensional,
}

impl<F: Field> GroebnerBasis<F> {
    fn require_homogeneous(&self) -> Result<()> {
        if !self.homogeneous {
            return Err(Error::domain("ideal is not homogeneous"));
        }
        Ok(())
    }

    /// Standard monomials of degree `k`, descending in the basis order.
    pub fn standard_monomials(&self, k: u32) -> Vec<Monomial> {
        monomial_basis_in(k, &self.order).into_iter().filter(|m| self.is_standard(m)).collect()
    }

    /// Dimension of the degree-`k` part of the quotient ring.
    pub fn hilbert_function(&self, k: u32) -> Result<u64> {
        self.require_homogeneous()?;
        if self.is_unit() {
            return Ok(0);
        }
        let mut count = 0u64;
        let mut cur = vec![0u16; self.nvars];
        self.count_standard(0, k, &mut cur, &mut count);
        Ok(count)
    }

    fn count_standard(&self, i: usize, left: u32, cur: &mut Vec<u16>, count: &mut u64) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            if self.is_standard(&Monomial::from_exps(cur)) {
                *count += 1;
            }
            return;
        }
        for e in 0..=left {
            cur[i] = e as u16;
            self.count_standard(i + 1, left - e, cur, count);
        }
        cur[i] = 0;
    }

    /// Largest independent set size of the leading-monomial ideal (Krull dimension of the quotient).
    pub fn krull_dimension(&self) -> usize {
        let n = self.nvars;
        let supports: Vec<u64> = self
            .elems
            .iter()
            .map(|e| e.lm.exps().iter().enumerate().fold(0u64, |a, (i, &x)| if x > 0 { a | 1 << i } else { a }))
            .collect();
        let mut best = 0;
        for set in 0u64..(1u64 << n) {
            let size = set.count_ones() as usize;
            if size > best && supports.iter().all(|s| s & !set != 0) {
                best = size;
            }
        }
        best
    }

    /// Degree of the projective scheme when it is zero-dimensional.
    pub fn zero_dim_degree(&self) -> Result<ZeroDim> {
        self.require_homogeneous()?;
        if self.nvars > 20 {
            return Err(Error::domain("too many variables for the dimension test"));
        }
        let kd = if self.is_unit() { 0 } else { self.krull_dimension() };
        if kd > 1 {
            return Ok(ZeroDim::NotZeroDimensional);
        }
        let d = if kd == 0 { 0 } else { self.limit_count() };
        // stabilization check at the conservative bound
        let maxgen = self.elems.iter().map(|e| e.lm.degree()).max().unwrap_or(0);
        let k0 = (self.nvars as u32 * maxgen).max(maxgen + 1);
        let mut k = k0;
        loop {
            let (a, b) = (self.hilbert_function(k)?, self.hilbert_function(k + 1)?);
            if a == d && b == d {
                return Ok(ZeroDim::Degree(d));
            }
            if k > k0 + 2 * self.nvars as u32 * (maxgen + 1) {
                return Err(Error::Invariant(format!("Hilbert function did not stabilize at {d} (H({k}) = {a})")));
            }
            k += 1;
        }
    }

    // eventual value of the Hilbert function for a one-dimensional quotient
    fn limit_count(&self) -> u64 {
        let n = self.nvars;
        let maxe: Vec<u16> = (0..n).map(|j| self.elems.iter().map(|e| e.lm.exps()[j]).max().unwrap_or(0)).collect();
        let mut total = 0;
        for free in 0..n {
            let pure = self.elems.iter().any(|e| e.lm.exps().iter().enumerate().all(|(j, &x)| j == free || x == 0));
            if pure {
                continue;
            }
            let others: Vec<usize> = (0..n).filter(|&j| j != free).collect();
            let mut u = vec![0u16; n];
            total += self.count_limit(&others, 0, &maxe, &mut u, free);
        }
        total
    }

    fn count_limit(&self, others: &[usize], pos: usize, maxe: &[u16], u: &mut Vec<u16>, free: usize) -> u64 {
        if pos == others.len() {
            let blocked = self
                .elems
                .iter()
                .any(|e| e.lm.exps().iter().enumerate().all(|(j, &g)| j == free || g <= u[j]));
            return u64::from(!blocked);
        }
        let j = others[pos];
        let mut s = 0;
        for e in 0..maxe[j].max(1) {
            u[j] = e;
            s += self.count_limit(others, pos + 1, maxe, u, free);
        }
        u[j] = 0;
        s
    }

    /// Smallest degree `k >= min` with `H(k) = H(k+1) = target`.
    pub fn stable_degree(&self, target: u64, min: u32) -> Result<u32> {
        let maxgen = self.elems.iter().map(|e| e.lm.degree()).max().unwrap_or(0);
        let limit = (self.nvars as u32 + 2) * (maxgen + 1) + min;
        let mut k = min.max(maxgen);
        while k <= limit {
            if self.hilbert_function(k)? == target && self.hilbert_function(k + 1)? == target {
                return Ok(k);
            }
            k += 1;
        }
        Err(Error::Invariant("Hilbert function never reached its limit".into()))
    }

    /// Matrix of `g -> NF(g * p)` from degree-`k` standard monomials to degree-`k + deg p` ones.
    pub fn multiplication_matrix(&self, p: &Polynomial<F>, k: u32) -> Result<Matrix<F>> {
        let (hom, dp) = p.is_homogeneous();
        let dp = match (hom, dp) {
            (true, Some(d)) => d,
            _ => return Err(Error::domain("multiplier must be a nonzero form")),
        };
        let src = self.standard_monomials(k);
        let dst = self.standard_monomials(k + dp);
        let index: HashMap<Monomial, usize> = dst.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut mat = Matrix::zeros(dst.len(), src.len(), &self.ctx);
        for (j, m) in src.iter().enumerate() {
            let nf = self.normal_form(&p.mul_term(m, &F::one(&self.ctx)))?;
            for (mm, c) in nf.terms() {
                mat.set(index[mm], j, c.clone());
            }
        }
        Ok(mat)
    }

    /// Probabilistic test that the zero-dimensional scheme is reduced.
    pub fn reducedness_probe<R: Rng>(&self, trials: usize, rng: &mut R) -> Result<bool> {
        let d = match self.zero_dim_degree()? {
            ZeroDim::NotZeroDimensional => return Err(Error::NotZeroDimensional),
            ZeroDim::Degree(d) => d,
        };
        if d == 0 {
            return Ok(true);
        }
        let k = self.stable_degree(d, 0)?;
        for _ in 0..trials.max(1) {
            let mut mh = None;
            for _ in 0..20 {
                let h = self.random_linear_form(rng);
                let m = self.multiplication_matrix(&h, k)?;
                if let Ok(inv) = m.inverse() {
                    mh = Some(inv);
                    break;
                }
            }
            let Some(mh_inv) = mh else {
                return Err(Error::Invariant("no linear form avoids the scheme".into()));
            };
            let l = self.random_linear_form(rng);
            let ml = self.multiplication_matrix(&l, k)?;
            let a = mh_inv.mul(&ml)?;
            let chi = a.charpoly()?;
            if chi.degree() != Some(d as usize) || !chi.is_squarefree() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn random_linear_form<R: Rng>(&self, rng: &mut R) -> Polynomial<F> {
        let terms = (0..self.nvars)
            .map(|i| (Monomial::var(self.nvars, i), F::from_int(&self.ctx, rng.gen_range(-1000..=1000))))
            .collect();
        Polynomial::from_terms(self.nvars, &self.ctx, terms)
    }
}
