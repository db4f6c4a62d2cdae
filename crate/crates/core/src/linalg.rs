//! Dense exact linear algebra.

use crate::error::{Error, Result};
use crate::polyring::{monomial_basis, Monomial};
use crate::scalars::{Field, UPoly};
use std::fmt::Write;

/// Row-major dense matrix over a field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    ctx: F::Ctx,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, ctx: &F::Ctx) -> Self {
        Matrix { rows, cols, ctx: ctx.clone(), data: vec![F::zero(ctx); rows * cols] }
    }

    pub fn identity(n: usize, ctx: &F::Ctx) -> Self {
        let mut m = Self::zeros(n, n, ctx);
        for i in 0..n {
            m.set(i, i, F::one(ctx));
        }
        m
    }

    pub fn from_rows(ctx: &F::Ctx, cols: usize, rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::domain("ragged matrix rows"));
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols, ctx: ctx.clone(), data })
    }

    pub fn from_ints(ctx: &F::Ctx, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(ctx, cols, rows.iter().map(|r| r.iter().map(|&v| F::from_int(ctx, v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<F>) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::domain("row length mismatch"));
        }
        self.data.extend(row);
        self.rows += 1;
        Ok(())
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero(&self.ctx);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_assign(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::domain("dimension mismatch"));
        }
        let mut out = Self::zeros(self.rows, o.cols, &self.ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        out.data[idx].add_assign(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> Result<G>) -> Result<Matrix<G>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, ctx: ctx.clone(), data })
    }

    /// Rank by fraction-free elimination with full pivoting.
    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (r, c) = (self.rows, self.cols);
        let mut colp: Vec<usize> = (0..c).collect();
        let mut prev = F::one(&self.ctx);
        let mut k = 0;
        while k < r.min(c) {
            // full pivot search: first nonzero entry in the trailing block
            let mut piv = None;
            'search: for i in k..r {
                for jj in k..c {
                    if !a[i * c + colp[jj]].is_zero() {
                        piv = Some((i, jj));
                        break 'search;
                    }
                }
            }
            let Some((pi, pj)) = piv else { break };
            if pi != k {
                for j in 0..c {
                    a.swap(k * c + j, pi * c + j);
                }
            }
            colp.swap(k, pj);
            let pv = a[k * c + colp[k]].clone();
            for i in k + 1..r {
                let f = a[i * c + colp[k]].clone();
                for jj in k + 1..c {
                    let j = colp[jj];
                    // Bareiss step: (pv * a_ij - f * a_kj) / prev
                    let v = pv.mul(&a[i * c + j]).sub(&f.mul(&a[k * c + j]));
                    a[i * c + j] = if prev.is_one() { v } else { v.div(&prev).expect("nonzero pivot") };
                }
                a[i * c + colp[k]] = F::zero(&self.ctx);
            }
            prev = pv;
            k += 1;
        }
        k
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !m.get(i, col).is_zero()) else { continue };
            if p != row {
                for j in 0..self.cols {
                    m.data.swap(row * self.cols + j, p * self.cols + j);
                }
            }
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for j in col..self.cols {
                let v = m.get(row, j).mul(&inv);
                m.set(row, j, v);
            }
            for i in 0..self.rows {
                if i == row {
                    continue;
                }
                let f = m.get(i, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let v = m.get(row, j).clone();
                    if !v.is_zero() {
                        let idx = i * self.cols + j;
                        m.data[idx].sub_mul_assign(&f, &v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Basis of the right null space.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (m, pivots) = self.rref();
        let mut is_piv = vec![false; self.cols];
        for &p in &pivots {
            is_piv[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_piv[j]) {
            let mut v = vec![F::zero(&self.ctx); self.cols];
            v[free] = F::one(&self.ctx);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = m.get(r, free).neg();
            }
            out.push(v);
        }
        out
    }

    /// Some solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::domain("right-hand side length mismatch"));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1, &self.ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(&self.ctx); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = m.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::domain("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n, &self.ctx);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one(&self.ctx));
        }
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut out = Self::zeros(n, n, &self.ctx);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, m.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    /// Characteristic polynomial `det(x I - A)` via Hessenberg reduction.
    pub fn charpoly(&self) -> Result<UPoly<F>> {
        if self.rows != self.cols {
            return Err(Error::domain("characteristic polynomial of a non-square matrix"));
        }
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else { continue };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for j in 0..n {
                    h.data.swap(j * n + i, j * n + m);
                }
            }
            let inv = h.get(m, m - 1).inv()?;
            for i in m + 1..n {
                let u = h.get(i, m - 1).mul(&inv);
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = h.get(m, j).clone();
                    h.data[i * n + j].sub_mul_assign(&u, &v);
                }
                for j in 0..n {
                    let v = h.get(j, i).clone();
                    let idx = j * n + m;
                    h.data[idx] = h.data[idx].add(&u.mul(&v));
                }
            }
        }
        // recurrence on leading principal minors
        let x = UPoly::var(&self.ctx);
        let mut p: Vec<UPoly<F>> = vec![UPoly::one(&self.ctx)];
        for m in 1..=n {
            let mut cur = x.sub(&UPoly::constant(h.get(m - 1, m - 1).clone())).mul(&p[m - 1]);
            let mut t = F::one(&self.ctx);
            for i in 1..m {
                t = t.mul(h.get(m - i, m - i - 1));
                let c = t.mul(h.get(m - i - 1, m - 1));
                cur = cur.sub(&p[m - i - 1].scale(&c));
            }
            p.push(cur);
        }
        Ok(p.pop().expect("nonempty"))
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "{}", row.join("\t"));
        }
        s
    }
}

/// Conditions for a degree-`deg` form to have multiplicity at least `order` at each point.
///
/// Each point is scaled so its last nonzero coordinate is 1 and the form is
/// dehomogenized in that chart; one row per derivative multi-index of order `< order`.
pub fn vanishing_matrix<F: Field>(points: &[Vec<F>], deg: u32, order: u32, nvars: usize, ctx: &F::Ctx) -> Result<Matrix<F>> {
    if order == 0 {
        return Err(Error::domain("adjoint order must be positive"));
    }
    let basis = monomial_basis(deg, nvars);
    let mut m = Matrix::zeros(0, basis.len(), ctx);
    for pt in points {
        if pt.len() != nvars {
            return Err(Error::domain("point has the wrong number of coordinates"));
        }
        let Some(chart) = pt.iter().rposition(|c| !c.is_zero()) else {
            return Err(Error::domain("zero vector is not a projective point"));
        };
        let s = pt[chart].inv()?;
        let p: Vec<F> = pt.iter().map(|c| c.mul(&s)).collect();
        let others: Vec<usize> = (0..nvars).filter(|&i| i != chart).collect();
        for k in 0..order {
            for alpha in monomial_basis(k, others.len()) {
                let row = basis.iter().map(|mono| derivative_at(mono, &alpha, &others, &p, ctx)).collect();
                m.push_row(row)?;
            }
        }
    }
    Ok(m)
}

// d^alpha of the dehomogenized monomial, evaluated at p
fn derivative_at<F: Field>(mono: &Monomial, alpha: &Monomial, others: &[usize], p: &[F], ctx: &F::Ctx) -> F {
    let mut v = F::one(ctx);
    for (k, &i) in others.iter().enumerate() {
        let e = mono.exps()[i] as i64;
        let a = alpha.exps()[k] as i64;
        if a > e {
            return F::zero(ctx);
        }
        let mut fall = 1i64;
        for j in 0..a {
            fall *= e - j;
        }
        v = v.mul(&F::from_int(ctx, fall));
        for _ in 0..e - a {
            v = v.mul(&p[i]);
        }
    }
    v
}
