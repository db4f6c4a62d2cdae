use super::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::scalars::Field;

/// `x_0^k + ... + x_{n-1}^k`
pub fn power_sum<F: Field>(k: u32, nvars: usize, ctx: &F::Ctx) -> Result<Polynomial<F>> {
    if k == 0 || nvars == 0 {
        return Err(Error::domain("power sum needs k >= 1 and at least one variable"));
    }
    let terms = (0..nvars)
        .map(|i| {
            let mut m = Monomial::one(nvars);
            m.0[i] = k as u16;
            (m, F::one(ctx))
        })
        .collect();
    Ok(Polynomial::from_terms(nvars, ctx, terms))
}

/// Sum of all squarefree monomials of degree `k`.
pub fn elementary_symmetric<F: Field>(k: usize, nvars: usize, ctx: &F::Ctx) -> Result<Polynomial<F>> {
    if k == 0 || k > nvars {
        return Err(Error::domain(format!("e_{k} undefined in {nvars} variables")));
    }
    let mut terms = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut m = Monomial::one(nvars);
        for &i in &idx {
            m.0[i] = 1;
        }
        terms.push((m, F::one(ctx)));
        // next k-subset in lexicographic order
        let mut j = k;
        while j > 0 && idx[j - 1] == nvars - k + j - 1 {
            j -= 1;
        }
        if j == 0 {
            break;
        }
        idx[j - 1] += 1;
        for l in j..k {
            idx[l] = idx[l - 1] + 1;
        }
    }
    Ok(Polynomial::from_terms(nvars, ctx, terms))
}

/// All monomials of total degree `deg`, descending in `order`.
pub fn monomial_basis_in(deg: u32, order: &MonomialOrder) -> Vec<Monomial> {
    let n = order.nvars();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut cur = vec![0u16; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(Monomial::from_exps(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
    }
    rec(0, deg, &mut cur, &mut out);
    out.sort_by(|a, b| order.cmp(b, a));
    out
}

/// All monomials of total degree `deg` in grevlex order.
pub fn monomial_basis(deg: u32, nvars: usize) -> Vec<Monomial> {
    monomial_basis_in(deg, &MonomialOrder::grevlex(nvars))
}

/// Coefficient of `t^k` in `((1 - t^(d-1)) / (1 - t))^nvars`.
pub fn ci_hilbert_series_coeff(d: u32, nvars: usize, k: u32) -> Result<u64> {
    if d < 2 {
        return Err(Error::domain("degree must be at least 2"));
    }
    let k = k as usize;
    let mut series = vec![0u128; k + 1];
    series[0] = 1;
    let width = (d - 1) as usize;
    for _ in 0..nvars {
        // multiply by 1 + t + ... + t^(d-2) via a sliding window
        let mut next = vec![0u128; k + 1];
        let mut acc = 0u128;
        for i in 0..=k {
            acc += series[i];
            if i >= width {
                acc -= series[i - width];
            }
            next[i] = acc;
        }
        series = next;
    }
    u64::try_from(series[k]).map_err(|_| Error::domain("coefficient overflow"))
}

/// Number of monomials of degree `deg` in `nvars` variables.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as u64
}
