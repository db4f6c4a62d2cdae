use super::{Lattice, Pencil, Reduction};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::polyring::{monomial_basis, Monomial, Polynomial};
use crate::scalars::{Field, RatFun};
use rayon::prelude::*;

/// Reduction data for one pole order, on permutation-invariant numerators.
#[derive(Clone, Debug)]
pub struct DegreeTable {
    pub degree: u32,
    /// Sorted exponent vectors labelling the invariant orbit sums.
    pub orbit_reps: Vec<Monomial>,
    /// Orbit representatives whose sums span the invariants modulo the Jacobian ideal.
    pub complement: Vec<Monomial>,
    inv: Matrix<RatFun>,
    nsel: usize,
    lower: Vec<Polynomial<RatFun>>,
    complement_polys: Vec<Polynomial<RatFun>>,
}

/// Reduction tables for a pencil with permutation-symmetric `F` and `G`.
#[derive(Clone, Debug)]
pub struct SymmetricTables {
    pencil: Pencil,
    lattice: Lattice,
    tables: Vec<Option<DegreeTable>>,
}

fn non_increasing(e: &[u16]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

fn distinct_perms(v: &[u16]) -> Vec<Vec<u16>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

fn orbit_sum(nvars: usize, e: &[u16], fix_first: bool) -> Polynomial<RatFun> {
    let one = RatFun::one(&());
    let terms = if fix_first {
        distinct_perms(&e[1..])
            .into_iter()
            .map(|rest| {
                let mut v = vec![e[0]];
                v.extend(rest);
                (Monomial::from_exps(&v), one.clone())
            })
            .collect()
    } else {
        distinct_perms(e).into_iter().map(|v| (Monomial::from_exps(&v), one.clone())).collect()
    };
    Polynomial::from_terms(nvars, &(), terms)
}

fn swap_vars(p: &Polynomial<RatFun>, i: usize) -> Polynomial<RatFun> {
    if i == 0 {
        return p.clone();
    }
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut e = m.exps().to_vec();
            e.swap(0, i);
            (Monomial::from_exps(&e), c.clone())
        })
        .collect();
    Polynomial::from_terms(p.nvars(), &(), terms)
}

fn exps_i64(m: &Monomial) -> Vec<i64> {
    m.exps().iter().map(|&x| x as i64).collect()
}

/// Build the invariant reduction tables.
pub fn symmetric_reduce(pencil: &Pencil) -> Result<SymmetricTables> {
    if !pencil.is_symmetric() {
        return Err(Error::domain("F and G must be invariant under permutations of the variables"));
    }
    let n = pencil.nvars();
    let mut gens: Vec<Vec<i64>> = pencil.f().terms().iter().chain(pencil.g().terms()).map(|(m, _)| exps_i64(m)).collect();
    gens.push(vec![1; n]);
    let lattice = Lattice::span(n, &gens);
    let partials = pencil.fiber().partial_derivatives();
    let d = pencil.degree() as i64;
    let tables = (0..=n as i64)
        .into_par_iter()
        .map(|k| {
            let e = k * d - n as i64;
            if k == 0 || e < 0 {
                return Ok(None);
            }
            build_table(n, e as u32, d as u32, &lattice, &partials).map(Some)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymmetricTables { pencil: pencil.clone(), lattice, tables })
}

fn build_table(n: usize, e: u32, d: u32, lattice: &Lattice, partials: &[Polynomial<RatFun>]) -> Result<DegreeTable> {
    let reps: Vec<Monomial> = monomial_basis(e, n).into_iter().filter(|m| non_increasing(m.exps()) && lattice.contains(&exps_i64(m))).collect();
    let m = reps.len();
    let mut domain: Vec<Monomial> = Vec::new();
    if e + 1 >= d {
        for c in monomial_basis(e + 1 - d, n) {
            let mut v = exps_i64(&c);
            v[0] -= 1;
            if non_increasing(&c.exps()[1..]) && lattice.contains(&v) {
                domain.push(c);
            }
        }
    }
    let q = domain.len();
    let mut images = Vec::with_capacity(q);
    let mut lowers = Vec::with_capacity(q);
    for a in &domain {
        let a0 = orbit_sum(n, a.exps(), true);
        let mut img = Polynomial::zero(n, &());
        let mut low = Polynomial::zero(n, &());
        for (i, pi) in partials.iter().enumerate() {
            let ai = swap_vars(&a0, i);
            img = img.add(&ai.mul(pi));
            low = low.add(&ai.derivative(i));
        }
        images.push(reps.iter().map(|r| img.coeff(r)).collect::<Vec<_>>());
        lowers.push(low);
    }
    // unit vectors in order of preference: most balanced exponents first
    let mut pref: Vec<usize> = (0..m).collect();
    pref.sort_by_key(|&i| (reps[i].exps().iter().max().copied().unwrap_or(0), std::cmp::Reverse(reps[i].exps().to_vec())));
    let mut aug = Matrix::zeros(m, q + m, &());
    for (j, col) in images.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            aug.set(i, j, v.clone());
        }
    }
    for (slot, &i) in pref.iter().enumerate() {
        aug.set(i, q + slot, RatFun::one(&()));
    }
    let (_, pivots) = aug.rref();
    let selected: Vec<usize> = pivots.iter().copied().filter(|&p| p < q).collect();
    let comp: Vec<usize> = pivots.iter().filter(|&&p| p >= q).map(|&p| pref[p - q]).collect();
    let mut b = Matrix::zeros(m, m, &());
    for (col, &j) in selected.iter().enumerate() {
        for i in 0..m {
            b.set(i, col, images[j][i].clone());
        }
    }
    for (off, &i) in comp.iter().enumerate() {
        b.set(i, selected.len() + off, RatFun::one(&()));
    }
    let inv = if m == 0 { b } else { b.inverse()? };
    Ok(DegreeTable {
        degree: e,
        complement: comp.iter().map(|&i| reps[i].clone()).collect(),
        complement_polys: comp.iter().map(|&i| orbit_sum(n, reps[i].exps(), false)).collect(),
        orbit_reps: reps,
        inv,
        nsel: selected.len(),
        lower: selected.iter().map(|&j| lowers[j].clone()).collect(),
    })
}

impl SymmetricTables {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Table for pole order `k`.
    pub fn table(&self, k: u32) -> Option<&DegreeTable> {
        self.tables.get(k as usize).and_then(|t| t.as_ref())
    }
}

impl Reduction for SymmetricTables {
    fn pencil(&self) -> &Pencil {
        &self.pencil
    }

    fn space_dim(&self) -> usize {
        self.tables.iter().flatten().map(|t| t.complement.len()).sum()
    }

    fn reduce(&self, mut parts: Vec<Polynomial<RatFun>>) -> Result<Vec<Polynomial<RatFun>>> {
        let n = self.pencil.nvars();
        for k in (1..parts.len()).rev() {
            let p = std::mem::replace(&mut parts[k], Polynomial::zero(n, &()));
            if p.is_zero() {
                continue;
            }
            let t = self.table(k as u32).ok_or_else(|| Error::Invariant(format!("no reduction table at pole order {k}")))?;
            let v: Vec<RatFun> = t.orbit_reps.iter().map(|r| p.coeff(r)).collect();
            let x = t.inv.mul_vec(&v);
            let mut rem = Polynomial::zero(n, &());
            for (b, poly) in x[t.nsel..].iter().zip(&t.complement_polys) {
                if !b.is_zero() {
                    rem = rem.add(&poly.scale(b));
                }
            }
            if t.nsel > 0 {
                let mut low = Polynomial::zero(n, &());
                for (a, poly) in x[..t.nsel].iter().zip(&t.lower) {
                    if !a.is_zero() {
                        low = low.add(&poly.scale(a));
                    }
                }
                let s = RatFun::from_int(&(), k as i64 - 1).inv()?;
                parts[k - 1] = parts[k - 1].add(&low.scale(&s));
            }
            parts[k] = rem;
        }
        Ok(parts)
    }

    fn coordinates(&self, reduced: &[Polynomial<RatFun>]) -> Vec<RatFun> {
        let mut out = Vec::new();
        for (k, t) in self.tables.iter().enumerate() {
            if let Some(t) = t {
                for r in &t.complement {
                    out.push(reduced.get(k).map(|p| p.coeff(r)).unwrap_or_else(|| RatFun::zero(&())));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_of_multiset() {
        assert_eq!(distinct_perms(&[1, 0, 1]).len(), 3);
        assert_eq!(distinct_perms(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_perms(&[]).len(), 1);
    }
}
