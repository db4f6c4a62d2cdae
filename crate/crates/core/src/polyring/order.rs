use super::Monomial;
use crate::error::{Error, Result};
use std::cmp::Ordering;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum OrderKind {
    Lex,
    Grlex,
    Grevlex,
}

/// Monomial order with a variable ranking: `perm[0]` is the largest variable.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    perm: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder { kind, perm: (0..nvars).collect() }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::Grevlex, nvars)
    }

    pub fn with_perm(kind: OrderKind, perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::domain("variable ranking is not a permutation"));
            }
            seen[p] = true;
        }
        Ok(MonomialOrder { kind, perm })
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_graded(&self) -> bool {
        self.kind != OrderKind::Lex
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exps(), b.exps());
        match self.kind {
            OrderKind::Lex => self.lex(a, b),
            OrderKind::Grlex => deg(a).cmp(&deg(b)).then_with(|| self.lex(a, b)),
            OrderKind::Grevlex => deg(a).cmp(&deg(b)).then_with(|| {
                for &i in self.perm.iter().rev() {
                    if a[i] != b[i] {
                        return b[i].cmp(&a[i]);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex(&self, a: &[u16], b: &[u16]) -> Ordering {
        for &i in &self.perm {
            if a[i] != b[i] {
                return a[i].cmp(&b[i]);
            }
        }
        Ordering::Equal
    }
}

fn deg(a: &[u16]) -> u32 {
    a.iter().map(|&e| e as u32).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn classic_orders() {
        let lex = MonomialOrder::new(OrderKind::Lex, 3);
        let grlex = MonomialOrder::new(OrderKind::Grlex, 3);
        let grevlex = MonomialOrder::grevlex(3);
        // x y^2 vs y^3 z ... textbook comparisons
        assert_eq!(lex.cmp(&m(&[1, 2, 0]), &m(&[0, 3, 4])), Ordering::Greater);
        assert_eq!(grlex.cmp(&m(&[1, 2, 3]), &m(&[3, 2, 0])), Ordering::Greater);
        assert_eq!(grlex.cmp(&m(&[1, 2, 4]), &m(&[1, 1, 5])), Ordering::Greater);
        assert_eq!(grevlex.cmp(&m(&[4, 7, 1]), &m(&[4, 2, 3])), Ordering::Greater);
        assert_eq!(grevlex.cmp(&m(&[1, 5, 2]), &m(&[4, 1, 3])), Ordering::Greater);
        let rev = MonomialOrder::with_perm(OrderKind::Lex, vec![2, 1, 0]).unwrap();
        assert_eq!(rev.cmp(&m(&[1, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
        assert!(MonomialOrder::with_perm(OrderKind::Lex, vec![0, 0]).is_err());
    }
}
