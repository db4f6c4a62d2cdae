/// Sublattice of `Z^n` in row echelon form.
#[derive(Clone, Debug)]
pub struct Lattice {
    n: usize,
    rows: Vec<Vec<i128>>,
}

impl Lattice {
    pub fn span(n: usize, gens: &[Vec<i64>]) -> Self {
        let mut pending: Vec<Vec<i128>> = gens.iter().map(|g| g.iter().map(|&x| x as i128).collect()).collect();
        let mut rows = Vec::new();
        for col in 0..n {
            // gcd-combine every pending row with a nonzero entry in this column
            let mut piv: Option<Vec<i128>> = None;
            let mut rest = Vec::new();
            for r in pending {
                if r[col] == 0 {
                    rest.push(r);
                    continue;
                }
                match piv.take() {
                    None => piv = Some(r),
                    Some(p) => {
                        let (p2, r2) = gcd_rows(p, r, col);
                        piv = Some(p2);
                        if r2.iter().any(|&x| x != 0) {
                            rest.push(r2);
                        }
                    }
                }
            }
            if let Some(mut p) = piv {
                if p[col] < 0 {
                    p.iter_mut().for_each(|x| *x = -*x);
                }
                rows.push(p);
            }
            pending = rest;
        }
        Lattice { n, rows }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.n);
        let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for r in &self.rows {
            let c = r.iter().position(|&x| x != 0).expect("nonzero row");
            if w[c] % r[c] != 0 {
                return false;
            }
            let q = w[c] / r[c];
            for (a, b) in w.iter_mut().zip(r) {
                *a -= q * b;
            }
        }
        w.iter().all(|&x| x == 0)
    }
}

// unimodular combination leaving gcd in `a[col]` and zero in `b[col]`
fn gcd_rows(mut a: Vec<i128>, mut b: Vec<i128>, col: usize) -> (Vec<i128>, Vec<i128>) {
    while b[col] != 0 {
        let q = a[col].div_euclid(b[col]);
        for (x, y) in a.iter_mut().zip(&b) {
            *x -= q * y;
        }
        std::mem::swap(&mut a, &mut b);
    }
    (a, b)
}
