//! Planar (m → n) Temperley–Lieb morphisms over ℚ(A).
//!
//! A diagram is a non-crossing perfect matching of m bottom and n top points;
//! morphisms are finite ℚ(A)-combinations of diagrams with closed loops folded
//! into the scalar d = −A² − A^{−2}. Crossings are not stored: they are
//! expanded through the Kauffman relation at construction time.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use crate::error::OpError;
use crate::ring::{loop_value, RatFunc};

/// Non-crossing perfect matching of `dom` bottom points (left to right) and
/// `cod` top points (left to right). `pairs[i]` is the partner of point `i`;
/// bottom points come first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Pairing {
    pub dom: u16,
    pub cod: u16,
    pub pairs: Vec<u16>,
}

impl Pairing {
    pub fn identity(n: u16) -> Pairing {
        let total = 2 * n as usize;
        let mut pairs = vec![0u16; total];
        for i in 0..n {
            pairs[i as usize] = n + i;
            pairs[(n + i) as usize] = i;
        }
        Pairing {
            dom: n,
            cod: n,
            pairs,
        }
    }

    /// Points in the disk-boundary cyclic order: bottom left→right, then top
    /// right→left.
    fn boundary_order(&self) -> Vec<u16> {
        let mut v: Vec<u16> = (0..self.dom).collect();
        v.extend((self.dom..self.dom + self.cod).rev());
        v
    }

    pub fn is_planar(&self) -> bool {
        let order = self.boundary_order();
        let mut pos = vec![0usize; order.len()];
        for (i, &p) in order.iter().enumerate() {
            pos[p as usize] = i;
        }
        let mut stack: Vec<u16> = Vec::new();
        for &p in &order {
            if let Some(&top) = stack.last() {
                if self.pairs[p as usize] == top {
                    stack.pop();
                    continue;
                }
            }
            stack.push(p);
        }
        stack.is_empty()
    }
}

/// A ℚ(A)-linear combination of planar diagrams with common boundary.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TLMor {
    pub dom: u16,
    pub cod: u16,
    pub terms: BTreeMap<Pairing, RatFunc>,
}

fn d_loop() -> RatFunc {
    loop_value()
}

impl TLMor {
    pub fn zero(dom: u16, cod: u16) -> TLMor {
        TLMor {
            dom,
            cod,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: u16) -> TLMor {
        let mut terms = BTreeMap::new();
        terms.insert(Pairing::identity(n), RatFunc::one());
        TLMor {
            dom: n,
            cod: n,
            terms,
        }
    }

    pub fn from_pairing(p: Pairing) -> TLMor {
        debug_assert!(p.is_planar());
        let (dom, cod) = (p.dom, p.cod);
        let mut terms = BTreeMap::new();
        terms.insert(p, RatFunc::one());
        TLMor { dom, cod, terms }
    }

    /// `∪`: 0 → 2.
    pub fn cup() -> TLMor {
        TLMor::from_pairing(Pairing {
            dom: 0,
            cod: 2,
            pairs: vec![1, 0],
        })
    }

    /// `∩`: 2 → 0.
    pub fn cap() -> TLMor {
        TLMor::from_pairing(Pairing {
            dom: 2,
            cod: 0,
            pairs: vec![1, 0],
        })
    }

    /// The hook generator e at position `i` in TL_n (0-based strand index).
    pub fn hook(n: u16, i: u16) -> TLMor {
        assert!(i + 1 < n);
        let total = 2 * n as usize;
        let mut pairs = vec![0u16; total];
        for k in 0..n {
            pairs[k as usize] = n + k;
            pairs[(n + k) as usize] = k;
        }
        // bottom i–i+1 capped, top i–i+1 cupped
        pairs[i as usize] = i + 1;
        pairs[(i + 1) as usize] = i;
        pairs[(n + i) as usize] = n + i + 1;
        pairs[(n + i + 1) as usize] = n + i;
        TLMor::from_pairing(Pairing {
            dom: n,
            cod: n,
            pairs,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, p: Pairing, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &TLMor) -> TLMor {
        assert_eq!((self.dom, self.cod), (other.dom, other.cod));
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.insert(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TLMor) -> TLMor {
        self.add(&other.scale(&RatFunc::int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> TLMor {
        if c.is_zero() {
            return TLMor::zero(self.dom, self.cod);
        }
        TLMor {
            dom: self.dom,
            cod: self.cod,
            terms: self
                .terms
                .iter()
                .map(|(p, x)| (p.clone(), x.mul(c)))
                .collect(),
        }
    }

    /// Compose diagrams: `self` first (bottom), then `other` on top.
    pub fn then(&self, other: &TLMor) -> Result<TLMor, OpError> {
        if self.cod != other.dom {
            return Err(OpError::StrandMismatch(
                self.cod as usize,
                other.dom as usize,
            ));
        }
        let mut out = TLMor::zero(self.dom, other.cod);
        let mid = self.cod as usize;
        let d = d_loop();
        for (p1, c1) in &self.terms {
            for (p2, c2) in &other.terms {
                // trace through the composite
                // points: self.dom bottom (0..), mid middle, other.cod top
                let nb = self.dom as usize;
                let nt = other.cod as usize;
                let mut pairs = vec![u16::MAX; nb + nt];
                let mut visited = vec![false; mid];
                let mut loops = 0u32;
                // walk from each bottom point of self
                let step1 = |pt: usize| p1.pairs[pt] as usize; // within p1 indexing
                let step2 = |pt: usize| p2.pairs[pt] as usize;
                // p1 points: 0..nb bottom, nb..nb+mid top(middle)
                // p2 points: 0..mid bottom(middle), mid..mid+nt top
                let trace_from = |start_is_bottom: bool,
                                  start: usize,
                                  visited: &mut Vec<bool>|
                 -> (bool, usize) {
                    // returns (ends_on_bottom, endpoint index in final numbering)
                    let mut in_p1 = start_is_bottom;
                    let mut pt = if start_is_bottom { start } else { start + mid };
                    loop {
                        if in_p1 {
                            let q = step1(pt);
                            if q < nb {
                                return (true, q);
                            }
                            // q is a middle point (p1 top): cross to p2 bottom
                            let m = q - nb;
                            visited[m] = true;
                            in_p1 = false;
                            pt = m;
                        } else {
                            let q = step2(pt);
                            if q >= mid {
                                return (false, q - mid);
                            }
                            visited[q] = true;
                            in_p1 = true;
                            pt = q + nb;
                        }
                    }
                };
                for b in 0..nb {
                    if pairs[b] != u16::MAX {
                        continue;
                    }
                    let (on_bottom, end) = trace_from(true, b, &mut visited);
                    let endpt = if on_bottom { end } else { nb + end };
                    pairs[b] = endpt as u16;
                    pairs[endpt] = b as u16;
                }
                for t in 0..nt {
                    if pairs[nb + t] != u16::MAX {
                        continue;
                    }
                    let (on_bottom, end) = trace_from(false, t, &mut visited);
                    debug_assert!(!on_bottom);
                    let endpt = nb + end;
                    pairs[nb + t] = endpt as u16;
                    pairs[endpt] = (nb + t) as u16;
                }
                // remaining middle points form closed loops
                let mut mvis = visited;
                for m in 0..mid {
                    if mvis[m] {
                        continue;
                    }
                    // walk the loop
                    let mut cur = m;
                    loop {
                        mvis[cur] = true;
                        let q1 = step1(cur + nb);
                        debug_assert!(q1 >= nb, "loop strand may not exit");
                        let mm = q1 - nb;
                        mvis[mm] = true;
                        let q2 = step2(mm);
                        debug_assert!(q2 < mid);
                        cur = q2;
                        if cur == m {
                            break;
                        }
                    }
                    loops += 1;
                }
                let mut coeff = c1.mul(c2);
                for _ in 0..loops {
                    coeff = coeff.mul(&d);
                }
                out.insert(
                    Pairing {
                        dom: self.dom,
                        cod: other.cod,
                        pairs,
                    },
                    coeff,
                );
            }
        }
        Ok(out)
    }

    /// Horizontal juxtaposition: `self` on the left.
    pub fn tensor(&self, other: &TLMor) -> TLMor {
        let dom = self.dom + other.dom;
        let cod = self.cod + other.cod;
        let mut out = TLMor::zero(dom, cod);
        for (p1, c1) in &self.terms {
            for (p2, c2) in &other.terms {
                let mut pairs = vec![0u16; (dom + cod) as usize];
                let remap1 = |i: u16| -> u16 {
                    if i < self.dom {
                        i
                    } else {
                        i + other.dom
                    }
                };
                let remap2 = |i: u16| -> u16 {
                    if i < other.dom {
                        i + self.dom
                    } else {
                        i + self.dom + self.cod
                    }
                };
                for i in 0..p1.pairs.len() {
                    pairs[remap1(i as u16) as usize] = remap1(p1.pairs[i]);
                }
                for i in 0..p2.pairs.len() {
                    pairs[remap2(i as u16) as usize] = remap2(p2.pairs[i]);
                }
                out.insert(Pairing { dom, cod, pairs }, c1.mul(c2));
            }
        }
        out
    }

    /// Pad with identity strands: `left` to the left, `right` to the right.
    pub fn padded(&self, left: u16, right: u16) -> TLMor {
        let mut out = self.clone();
        if left > 0 {
            out = TLMor::identity(left).tensor(&out);
        }
        if right > 0 {
            out = out.tensor(&TLMor::identity(right));
        }
        out
    }

    /// Vertical mirror: swap bottom and top. Coefficients are unchanged
    /// (diagrams carry no crossings).
    pub fn transpose(&self) -> TLMor {
        let mut out = TLMor::zero(self.cod, self.dom);
        for (p, c) in &self.terms {
            let remap = |i: u16| -> u16 {
                if i < p.dom {
                    p.cod + i
                } else {
                    i - p.dom
                }
            };
            let mut pairs = vec![0u16; p.pairs.len()];
            for i in 0..p.pairs.len() {
                pairs[remap(i as u16) as usize] = remap(p.pairs[i]);
            }
            out.insert(
                Pairing {
                    dom: p.cod,
                    cod: p.dom,
                    pairs,
                },
                c.clone(),
            );
        }
        out
    }

    /// The scalar value of a (0 → 0) morphism.
    pub fn scalar(&self) -> RatFunc {
        assert_eq!((self.dom, self.cod), (0, 0));
        self.terms
            .values()
            .fold(RatFunc::zero(), |acc, c| acc.add(c))
    }

    /// Positive crossing of two single strands, normalized so that closing a
    /// positive kink yields −A³: A^{−1}·identity + A·hook.
    pub fn cross_pos() -> TLMor {
        TLMor::identity(2)
            .scale(&RatFunc::a_pow(-1))
            .add(&TLMor::hook(2, 0).scale(&RatFunc::a_pow(1)))
    }

    /// Negative crossing: the mirror of `cross_pos`.
    pub fn cross_neg() -> TLMor {
        TLMor::identity(2)
            .scale(&RatFunc::a_pow(1))
            .add(&TLMor::hook(2, 0).scale(&RatFunc::a_pow(-1)))
    }

    /// Braid a single strand at position `pos` across the `w` strands to its
    /// right, with `positive` crossings throughout. (2-strand blocks applied
    /// in sequence; the strand ends `w` places to the right.)
    pub fn slide_right(n: u16, pos: u16, w: u16, positive: bool) -> Result<TLMor, OpError> {
        let mut out = TLMor::identity(n);
        for k in 0..w {
            let c = if positive {
                TLMor::cross_pos()
            } else {
                TLMor::cross_neg()
            };
            out = out.then(&c.padded(pos + k, n - pos - k - 2))?;
        }
        Ok(out)
    }

    /// Braid a single strand at position `pos` across the `w` strands to its
    /// left.
    pub fn slide_left(n: u16, pos: u16, w: u16, positive: bool) -> Result<TLMor, OpError> {
        let mut out = TLMor::identity(n);
        for k in 0..w {
            let c = if positive {
                TLMor::cross_pos()
            } else {
                TLMor::cross_neg()
            };
            out = out.then(&c.padded(pos - k - 1, n - pos + k - 1))?;
        }
        Ok(out)
    }
}

/// Jones–Wenzl idempotent f_n in TL_n, by the Wenzl recursion, cached
/// process-wide.
pub fn jw(n: u16) -> TLMor {
    static CACHE: OnceLock<Mutex<Vec<TLMor>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![TLMor::identity(0), TLMor::identity(1)]));
    {
        let c = cache.lock().unwrap();
        if let Some(m) = c.get(n as usize) {
            return m.clone();
        }
    }
    let mut k = {
        let c = cache.lock().unwrap();
        c.len() as u16
    };
    while k <= n {
        let prev = jw(k - 1);
        // f_k = f_{k-1}⊗1 − (Δ_{k-2}/Δ_{k-1}) (f_{k-1}⊗1) e_{k-1} (f_{k-1}⊗1)
        let base = prev.padded(0, 1);
        let ratio = quantum_dim(k as i64 - 2)
            .div(&quantum_dim(k as i64 - 1))
            .expect("Δ_{k-1} ≠ 0");
        let mid = base
            .then(&TLMor::hook(k, k - 2))
            .and_then(|m| m.then(&base))
            .expect("composable");
        let f = base.sub(&mid.scale(&ratio));
        let mut c = cache.lock().unwrap();
        if c.len() == k as usize {
            c.push(f);
        }
        k += 1;
    }
    cache.lock().unwrap()[n as usize].clone()
}

/// Δ_n: the Markov closure of f_n, (−1)^n {n+1}/{1}; Δ_{-1} = 0, Δ_0 = 1.
pub fn quantum_dim(n: i64) -> RatFunc {
    if n < 0 {
        return RatFunc::zero();
    }
    let v = RatFunc::quantum(n + 1)
        .div(&RatFunc::quantum(1))
        .expect("{1} ≠ 0");
    if n % 2 == 1 {
        v.neg()
    } else {
        v
    }
}

/// Close off an (n → n) morphism into a scalar: cap the i-th top point to the
/// i-th bottom point around the right side (Markov trace, picking up d per
/// loop).
pub fn markov_close(m: &TLMor) -> RatFunc {
    assert_eq!(m.dom, m.cod);
    let n = m.dom;
    // build nested cups on the left of the bottom and nested caps on the top:
    // trace(m) = (cups) ∘ (id_n ⊗ m) ∘ (caps) with the nesting joining
    // strand i of m's bottom to strand i of m's top through the left block.
    let mut cups = TLMor::identity(0);
    for _ in 0..n {
        // grow nested cups: 0 → 2k
        cups = cups
            .then(&TLMor::cup().padded(0, 2 * cups.cod - cups.cod))
            .unwrap_or_else(|_| unreachable!());
    }
    // the nested-cup construction above stacks cups at the left; rebuild
    // explicitly instead for clarity
    let mut pairs = vec![0u16; 2 * n as usize];
    for i in 0..n {
        // point i pairs with 2n-1-i (nested)
        pairs[i as usize] = 2 * n - 1 - i;
        pairs[(2 * n - 1 - i) as usize] = i;
    }
    let nested_cup = TLMor::from_pairing(Pairing {
        dom: 0,
        cod: 2 * n,
        pairs: pairs.clone(),
    });
    let nested_cap = TLMor::from_pairing(Pairing {
        dom: 2 * n,
        cod: 0,
        pairs,
    });
    let _ = cups;
    let mid = TLMor::identity(n).tensor(m);
    nested_cup
        .then(&mid)
        .and_then(|x| x.then(&nested_cap))
        .expect("closure composable")
        .scalar()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_relations() {
        // e1 e1 = d e1 in TL_2
        let e = TLMor::hook(2, 0);
        let ee = e.then(&e).unwrap();
        assert_eq!(ee, e.scale(&d_loop()));
        // id · x = x
        let x = TLMor::cross_pos();
        assert_eq!(TLMor::identity(2).then(&x).unwrap(), x);
        // e1 e2 e1 = e1 in TL_3
        let e1 = TLMor::hook(3, 0);
        let e2 = TLMor::hook(3, 1);
        let p = e1.then(&e2).unwrap().then(&e1).unwrap();
        assert_eq!(p, e1);
    }

    #[test]
    fn compose_associative_on_random_triples() {
        let ms = [
            TLMor::hook(3, 0),
            TLMor::hook(3, 1),
            TLMor::cross_pos().padded(0, 1),
            TLMor::cross_neg().padded(1, 0),
        ];
        for a in &ms {
            for b in &ms {
                for c in &ms {
                    let l = a.then(b).unwrap().then(c).unwrap();
                    let r = a.then(&b.then(c).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn jw_small_values() {
        // jw(1) = identity strand
        assert_eq!(jw(1), TLMor::identity(1));
        // jw(2) = id − (1/d) e1
        let expect = TLMor::identity(2).sub(&TLMor::hook(2, 0).scale(&d_loop().inv().unwrap()));
        assert_eq!(jw(2), expect);
    }

    #[test]
    fn jw_idempotent_and_killed_by_hooks() {
        for n in 2..=6u16 {
            let f = jw(n);
            assert_eq!(f.then(&f).unwrap(), f, "f_{} not idempotent", n);
            for i in 0..n - 1 {
                let killed = f.then(&TLMor::hook(n, i)).unwrap();
                assert!(killed.is_zero(), "e_{} does not kill f_{}", i, n);
            }
        }
    }

    #[test]
    fn markov_trace_of_jw() {
        for n in 0..=6u16 {
            let t = markov_close(&jw(n));
            assert_eq!(t, quantum_dim(n as i64), "closure of f_{}", n);
        }
    }

    #[test]
    fn reidemeister_one_curl() {
        // closing one strand of a positive crossing gives a kink: -A^3 · strand
        let curl = TLMor::cup()
            .padded(1, 0)
            .then(&TLMor::cross_pos().padded(0, 1))
            .unwrap()
            .then(&TLMor::cap().padded(0, 1))
            .unwrap();
        assert_eq!(curl, TLMor::identity(1).scale(&RatFunc::a_pow(3).neg()));
    }

    #[test]
    fn reidemeister_two() {
        let rtwo = TLMor::cross_pos().then(&TLMor::cross_neg()).unwrap();
        assert_eq!(rtwo, TLMor::identity(2));
    }
}
