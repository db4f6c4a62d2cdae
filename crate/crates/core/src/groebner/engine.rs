use super::pairs::{self, Pair};
use crate::polyring::{Monomial, MonomialOrder, OrderKind, Polynomial};
use crate::scalars::Field;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::BinaryHeap;

pub(crate) type Terms<F> = Vec<(Monomial, F)>;
type Key = SmallVec<[i32; 10]>;

/// Lexicographic comparison of keys reproduces the monomial order.
pub(crate) fn order_key(order: &MonomialOrder, m: &Monomial) -> Key {
    let e = m.exps();
    let mut k = Key::new();
    match order.kind {
        OrderKind::Lex => k.extend(order.perm().iter().map(|&i| e[i] as i32)),
        OrderKind::Grlex => {
            k.push(m.degree() as i32);
            k.extend(order.perm().iter().map(|&i| e[i] as i32));
        }
        OrderKind::Grevlex => {
            k.push(m.degree() as i32);
            k.extend(order.perm().iter().rev().map(|&i| -(e[i] as i32)));
        }
    }
    k
}

pub(crate) fn support_mask(m: &Monomial) -> u64 {
    m.exps().iter().enumerate().fold(0u64, |acc, (i, &e)| if e > 0 { acc | 1 << (i % 64) } else { acc })
}

#[derive(PartialEq, Eq)]
struct HeapItem {
    key: Key,
    mon: Monomial,
}

impl Ord for HeapItem {
    fn cmp(&self, o: &Self) -> Ordering {
        self.key.cmp(&o.key)
    }
}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Monic basis element; `terms[0]` is the leading term.
#[derive(Clone, Debug)]
pub(crate) struct Elem<F: Field> {
    pub lm: Monomial,
    pub mask: u64,
    pub terms: Terms<F>,
    /// Expression in the input generators, when tracked.
    pub cof: Option<Vec<Polynomial<F>>>,
}

/// Accumulator for polynomial reduction: coefficient map plus a max-heap of pending monomials.
pub(crate) struct Accum<'o, F: Field> {
    order: &'o MonomialOrder,
    coeffs: FxHashMap<Monomial, F>,
    heap: BinaryHeap<HeapItem>,
}

impl<'o, F: Field> Accum<'o, F> {
    pub fn new(order: &'o MonomialOrder) -> Self {
        Accum { order, coeffs: FxHashMap::default(), heap: BinaryHeap::new() }
    }

    pub fn add(&mut self, m: Monomial, c: F) {
        match self.coeffs.entry(m) {
            Entry::Occupied(mut e) => e.get_mut().add_assign(&c),
            Entry::Vacant(e) => {
                let key = order_key(self.order, e.key());
                self.heap.push(HeapItem { key, mon: e.key().clone() });
                e.insert(c);
            }
        }
    }

    /// `self -= c * mult * terms`
    pub fn sub_scaled(&mut self, c: &F, mult: &Monomial, terms: &[(Monomial, F)]) {
        for (m, a) in terms {
            self.add(m.mul(mult), a.mul(c).neg());
        }
    }

    /// Largest monomial with nonzero coefficient.
    pub fn pop(&mut self) -> Option<(Monomial, F)> {
        while let Some(item) = self.heap.pop() {
            let c = self.coeffs.remove(&item.mon).expect("heap and map agree");
            if !c.is_zero() {
                return Some((item.mon, c));
            }
        }
        None
    }

    pub fn drain_sorted(mut self) -> Terms<F> {
        let mut out = Vec::new();
        while let Some(t) = self.pop() {
            out.push(t);
        }
        out
    }
}

/// Buchberger state.
pub(crate) struct Engine<F: Field> {
    pub nvars: usize,
    pub ctx: F::Ctx,
    pub order: MonomialOrder,
    pub elems: Vec<Elem<F>>,
    pub active: Vec<bool>,
    pub track: bool,
    pub ngens: usize,
}

pub(crate) struct Reduced<F: Field> {
    pub rem: Terms<F>,
    /// `(element, multiplier, coefficient)` for each reduction step.
    pub steps: Vec<(usize, Monomial, F)>,
}

impl<F: Field> Engine<F> {
    pub fn new(nvars: usize, ctx: F::Ctx, order: MonomialOrder, track: bool, ngens: usize) -> Self {
        Engine { nvars, ctx, order, elems: Vec::new(), active: Vec::new(), track, ngens }
    }

    pub fn find_reducer(&self, m: &Monomial, only_active: bool) -> Option<usize> {
        let mm = support_mask(m);
        let mut best: Option<usize> = None;
        for (k, e) in self.elems.iter().enumerate() {
            if only_active && !self.active[k] {
                continue;
            }
            if e.mask & !mm != 0 || !e.lm.divides(m) {
                continue;
            }
            // prefer short reducers
            if best.is_none_or(|b| self.elems[b].terms.len() > e.terms.len()) {
                best = Some(k);
            }
        }
        best
    }

    /// Reduce the accumulator; `full` also reduces non-leading terms.
    pub fn reduce(&self, mut acc: Accum<'_, F>, full: bool, record: bool) -> Reduced<F> {
        let mut rem = Vec::new();
        let mut steps = Vec::new();
        while let Some((m, c)) = acc.pop() {
            match self.find_reducer(&m, true) {
                Some(k) => {
                    let e = &self.elems[k];
                    let mult = e.lm.quotient_of(&m);
                    acc.sub_scaled(&c, &mult, &e.terms[1..]);
                    if record {
                        steps.push((k, mult, c));
                    }
                }
                None => {
                    rem.push((m, c));
                    if !full {
                        rem.extend(acc.drain_sorted());
                        break;
                    }
                }
            }
        }
        Reduced { rem, steps }
    }

    fn cofactor_combination(&self, base: Vec<Polynomial<F>>, steps: &[(usize, Monomial, F)]) -> Vec<Polynomial<F>> {
        let mut cof = base;
        for (k, mult, c) in steps {
            let ck = self.elems[*k].cof.as_ref().expect("tracked");
            for (a, b) in cof.iter_mut().zip(ck) {
                *a = a.sub(&b.mul_term(mult, c));
            }
        }
        cof
    }

    /// Make monic and append; returns the new index.
    pub fn push(&mut self, mut terms: Terms<F>, cof: Option<Vec<Polynomial<F>>>) -> usize {
        let inv = terms[0].1.inv().expect("nonzero leading coefficient");
        for t in terms.iter_mut() {
            t.1 = t.1.mul(&inv);
        }
        let cof = cof.map(|v| v.into_iter().map(|p| p.scale(&inv)).collect());
        let lm = terms[0].0.clone();
        self.elems.push(Elem { mask: support_mask(&lm), lm, terms, cof });
        self.active.push(true);
        self.elems.len() - 1
    }

    fn accum_of(&self, terms: &[(Monomial, F)]) -> Accum<'_, F> {
        let mut acc = Accum::new(&self.order);
        for (m, c) in terms {
            acc.add(m.clone(), c.clone());
        }
        acc
    }

    /// Run the completion on the given (nonzero) generators.
    pub fn run(&mut self, gens: &[Terms<F>]) {
        let mut pairs: Vec<Pair> = Vec::new();
        for (gi, g) in gens.iter().enumerate() {
            let r = self.reduce(self.accum_of(g), true, self.track);
            if r.rem.is_empty() {
                continue;
            }
            let cof = self.track.then(|| {
                let mut base = vec![Polynomial::zero(self.nvars, &self.ctx); self.ngens];
                base[gi] = Polynomial::one(self.nvars, &self.ctx);
                self.cofactor_combination(base, &r.steps)
            });
            let h = self.push(r.rem, cof);
            self.add_pairs(&mut pairs, h);
        }
        while let Some(k) = pairs::select(&pairs, &self.order) {
            let p = pairs.swap_remove(k);
            let (a, b) = (&self.elems[p.i], &self.elems[p.j]);
            let ma = a.lm.quotient_of(&p.lcm);
            let mb = b.lm.quotient_of(&p.lcm);
            let mut acc = Accum::new(&self.order);
            let one = F::one(&self.ctx);
            for (m, c) in &a.terms[1..] {
                acc.add(m.mul(&ma), c.clone());
            }
            acc.sub_scaled(&one, &mb, &b.terms[1..]);
            let r = self.reduce(acc, true, self.track);
            if r.rem.is_empty() {
                continue;
            }
            let cof = self.track.then(|| {
                let (ca, cb) = (a.cof.as_ref().expect("tracked"), b.cof.as_ref().expect("tracked"));
                let base = ca
                    .iter()
                    .zip(cb)
                    .map(|(x, y)| x.mul_term(&ma, &one).sub(&y.mul_term(&mb, &one)))
                    .collect();
                self.cofactor_combination(base, &r.steps)
            });
            let h = self.push(r.rem, cof);
            self.add_pairs(&mut pairs, h);
        }
    }

    fn add_pairs(&mut self, pairs: &mut Vec<Pair>, h: usize) {
        let lms: Vec<Monomial> = self.elems.iter().map(|e| e.lm.clone()).collect();
        pairs::update(pairs, &lms, &mut self.active, h);
    }

    /// Reduced basis: minimal leading monomials, fully reduced tails, sorted by leading monomial.
    pub fn finish(mut self) -> Vec<Elem<F>> {
        let idx: Vec<usize> = (0..self.elems.len()).filter(|&k| self.active[k]).collect();
        let mut out = Vec::with_capacity(idx.len());
        for &k in &idx {
            let e = &self.elems[k];
            let acc = self.accum_of(&e.terms[1..]);
            let r = self.reduce(acc, true, self.track);
            let mut terms = vec![e.terms[0].clone()];
            terms.extend(r.rem);
            let cof = self.track.then(|| self.cofactor_combination(e.cof.clone().expect("tracked"), &r.steps));
            out.push(Elem { lm: e.lm.clone(), mask: e.mask, terms, cof });
        }
        let order = self.order.clone();
        out.sort_by(|a, b| order.cmp(&a.lm, &b.lm));
        self.elems.clear();
        out
    }
}
