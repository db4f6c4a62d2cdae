use crate::polyring::{Monomial, MonomialOrder};
use std::cmp::Ordering;

/// Critical pair between basis elements `i < j`.
#[derive(Clone, Debug)]
pub(crate) struct Pair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
}

/// Gebauer-Moller update after appending basis element `h`.
///
/// `lms[k]` is the leading monomial of element `k`; `active[k]` marks elements
/// still in the basis. Returns the indices deactivated by `h`.
pub(crate) fn update(pairs: &mut Vec<Pair>, lms: &[Monomial], active: &mut [bool], h: usize) -> Vec<usize> {
    let lh = &lms[h];
    let cand: Vec<Pair> = (0..h).filter(|&g| active[g]).map(|g| Pair { i: g, j: h, lcm: lh.lcm(&lms[g]) }).collect();

    // drop pairs whose lcm is a multiple of another new pair's lcm
    let mut kept: Vec<Pair> = Vec::new();
    for (idx, p) in cand.iter().enumerate() {
        let coprime = lh.coprime(&lms[p.i]);
        let dominated = !coprime
            && (cand[idx + 1..].iter().any(|q| q.lcm.divides(&p.lcm)) || kept.iter().any(|q| q.lcm.divides(&p.lcm)));
        if !dominated {
            kept.push(p.clone());
        }
    }
    // product criterion
    kept.retain(|p| !lh.coprime(&lms[p.i]));

    // chain criterion on old pairs
    pairs.retain(|p| {
        !(lh.divides(&p.lcm) && lh.lcm(&lms[p.i]) != p.lcm && lh.lcm(&lms[p.j]) != p.lcm)
    });
    pairs.extend(kept);

    let mut dropped = Vec::new();
    for g in 0..h {
        if active[g] && lh.divides(&lms[g]) {
            active[g] = false;
            dropped.push(g);
        }
    }
    dropped
}

/// Index of the pair with smallest lcm degree, ties broken by the order.
pub(crate) fn select(pairs: &[Pair], order: &MonomialOrder) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, p) in pairs.iter().enumerate() {
        best = match best {
            None => Some(k),
            Some(b) => {
                let q = &pairs[b];
                let c = p.lcm.degree().cmp(&q.lcm.degree()).then_with(|| order.cmp(&p.lcm, &q.lcm));
                if c == Ordering::Less {
                    Some(k)
                } else {
                    Some(b)
                }
            }
        };
    }
    best
}
