//! Colored trivalent networks assembled from Temperley–Lieb morphisms.
//!
//! A colored edge of weight n is an n-strand bundle carrying the Jones–Wenzl
//! projector; a trivalent vertex (a,b → c) is the clasped wye. Networks are
//! evaluated by sweeping: the running state is a (0 → w) morphism and layers
//! are applied with identity padding.

use crate::error::OpError;
use crate::ring::RatFunc;

use super::mor::{jw, markov_close, quantum_dim, Pairing, TLMor};

/// Is (a,b,c) an admissible triple: all ≥ 0, triangle inequalities, even sum.
pub fn admissible_triple(a: i64, b: i64, c: i64) -> bool {
    a >= 0
        && b >= 0
        && c >= 0
        && (a + b + c) % 2 == 0
        && a + b >= c
        && b + c >= a
        && a + c >= b
}

/// The clasped trivalent vertex as an (a+b → c) morphism.
pub fn vertex_mor(a: u16, b: u16, c: u16) -> Result<TLMor, OpError> {
    if !admissible_triple(a as i64, b as i64, c as i64) {
        return Err(OpError::InadmissibleVertex(a as i64, b as i64, c as i64));
    }
    let i = (a + b - c) / 2; // strands turning back between the blocks
    let dom = a + b;
    let cod = c;
    let mut pairs = vec![0u16; (dom + cod) as usize];
    // nested arcs between the right of the a-block and the left of the b-block
    for k in 0..i {
        let p = a - 1 - k;
        let q = a + k;
        pairs[p as usize] = q;
        pairs[q as usize] = p;
    }
    // through strands
    for k in 0..(a - i) {
        let p = k;
        let q = dom + k;
        pairs[p as usize] = q;
        pairs[q as usize] = p;
    }
    for k in 0..(b - i) {
        let p = a + i + k;
        let q = dom + (a - i) + k;
        pairs[p as usize] = q;
        pairs[q as usize] = p;
    }
    let wye = TLMor::from_pairing(Pairing { dom, cod, pairs });
    let bottom = jw(a).tensor(&jw(b));
    let top = jw(c);
    bottom.then(&wye)?.then(&top)
}

/// Splitting vertex: (c → a ⊗ b).
pub fn split_vertex(c: u16, a: u16, b: u16) -> Result<TLMor, OpError> {
    Ok(vertex_mor(a, b, c)?.transpose())
}

/// Source vertex with all three legs upward: (0 → a ⊗ b ⊗ c).
pub fn source_vertex(a: u16, b: u16, c: u16) -> Result<TLMor, OpError> {
    if !admissible_triple(a as i64, b as i64, c as i64) {
        return Err(OpError::InadmissibleVertex(a as i64, b as i64, c as i64));
    }
    let kab = (a + b - c) / 2;
    let kbc = (b + c - a) / 2;
    let kac = (a + c - b) / 2;
    let cod = a + b + c;
    let mut pairs = vec![0u16; cod as usize];
    let mut link = |p: u16, q: u16| {
        pairs[p as usize] = q;
        pairs[q as usize] = p;
    };
    // a-block: [0,a): left kac wrap to the right of the c-block, right kab
    // pair with the left of the b-block
    for k in 0..kab {
        link(a - 1 - k, a + k);
    }
    for k in 0..kbc {
        link(a + b - 1 - k, a + b + k);
    }
    for k in 0..kac {
        // k-th from the left of a with k-th from the right of c
        link(k, cod - 1 - k);
    }
    let arcs = TLMor::from_pairing(Pairing {
        dom: 0,
        cod,
        pairs,
    });
    let projectors = jw(a).tensor(&jw(b)).tensor(&jw(c));
    arcs.then(&projectors)
}

/// Sink vertex: (a ⊗ b ⊗ c → 0).
pub fn sink_vertex(a: u16, b: u16, c: u16) -> Result<TLMor, OpError> {
    Ok(source_vertex(a, b, c)?.transpose())
}

/// Sweep state: a (0 → width) morphism under construction.
#[derive(Clone)]
pub struct NetState {
    pub mor: TLMor,
}

impl NetState {
    pub fn start(m: TLMor) -> NetState {
        assert_eq!(m.dom, 0);
        NetState { mor: m }
    }

    pub fn empty() -> NetState {
        NetState {
            mor: TLMor::identity(0),
        }
    }

    pub fn width(&self) -> u16 {
        self.mor.cod
    }

    /// Apply `m` to the strands starting at position `at`.
    pub fn apply(&mut self, at: u16, m: &TLMor) -> Result<(), OpError> {
        let w = self.width();
        if at + m.dom > w {
            return Err(OpError::StrandMismatch(
                (at + m.dom) as usize,
                w as usize,
            ));
        }
        let layer = m.padded(at, w - at - m.dom);
        self.mor = self.mor.then(&layer)?;
        Ok(())
    }

    /// Insert fresh strands at position `at` via a (0 → k) morphism.
    pub fn inject(&mut self, at: u16, m: &TLMor) -> Result<(), OpError> {
        assert_eq!(m.dom, 0);
        let w = self.width();
        let layer = m.padded(at, w - at);
        // padded gives dom = at + 0 + (w - at) = w
        self.mor = self.mor.then(&layer)?;
        Ok(())
    }

    /// Finish: the state must have width 0; returns the scalar.
    pub fn finish(self) -> RatFunc {
        assert_eq!(self.width(), 0, "network not closed");
        self.mor.scalar()
    }
}

/// Closed loop colored n.
pub fn circle_value(n: u16) -> RatFunc {
    markov_close(&jw(n))
}

/// Theta network θ(a,b,c).
pub fn theta(a: u16, b: u16, c: u16) -> Result<RatFunc, OpError> {
    let up = vertex_mor(a, b, c)?;
    let down = split_vertex(c, a, b)?;
    Ok(markov_close(&up.then(&down)?))
}

/// Tetrahedron network; edge colors: a=v1v2, b=v1v3, c=v1v4, d=v2v3, e=v2v4,
/// f=v3v4, drawn with v1 inside the triangle v2v3v4.
pub fn tetrahedron(
    a: u16,
    b: u16,
    c: u16,
    d: u16,
    e: u16,
    f: u16,
) -> Result<RatFunc, OpError> {
    let mut st = NetState::start(source_vertex(d, a, e)?);
    // v1: consume a, emit b ⊗ c
    st.apply(d, &split_vertex(a, b, c)?)?;
    // state: d, b, c, e — v3 consumes (d, b) into f
    st.apply(0, &vertex_mor(d, b, f)?)?;
    // state: f, c, e — v4 closes
    st.apply(0, &sink_vertex(f, c, e)?)?;
    Ok(st.finish())
}

/// Value of a meridian circle around an n-colored bundle, divided out:
/// encircling jw(n) multiplies it by −A^{2+2n} − A^{−2−2n}.
pub fn encircle_mor(n: u16) -> Result<TLMor, OpError> {
    // create a cup to the right of the block, slide its left strand across
    // the block in front, then back behind, and close; no projector is
    // inserted (the block may mix bundles)
    let mut m = TLMor::identity(n).tensor(&TLMor::cup());
    // m: (n -> n+2); strand at position n is the circle's left end
    m = m.then(&TLMor::slide_left(n + 2, n, n, true)?)?;
    // now circle-left at 0, bundle at 1..=n, circle-right at n+1
    m = m.then(&TLMor::slide_right(n + 2, 0, n, true)?)?;
    // back to (circle-left at n): cap the pair
    m = m.then(&TLMor::cap().padded(n, 0))?;
    Ok(m)
}

/// The eigenvalue of the encirclement on jw(n).
pub fn encircle_value(n: u16) -> Result<RatFunc, OpError> {
    let m = jw(n).then(&encircle_mor(n)?)?;
    // m = λ·jw(n); extract λ via the Markov trace
    let t = markov_close(&m);
    t.div(&quantum_dim(n as i64)).map_err(OpError::Ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::OpError;
    use crate::ring::{loop_value, quantum_integer, RatFunc};

    #[test]
    fn circle_values() {
        assert_eq!(circle_value(0), RatFunc::one());
        assert_eq!(circle_value(1), loop_value());
        for n in 0..=6i64 {
            // (−1)^n {n+1}/{1}
            let expect = {
                let v = quantum_integer(n + 1).div(&quantum_integer(1)).unwrap();
                if n % 2 == 1 {
                    v.neg()
                } else {
                    v
                }
            };
            assert_eq!(circle_value(n as u16), expect);
        }
    }

    #[test]
    fn theta_basics() {
        // theta(1,1,0) = d (a single 1-colored loop)
        assert_eq!(theta(1, 1, 0).unwrap(), loop_value());
        // theta(n,n,0) = circle(n)
        for n in 0..=4 {
            assert_eq!(theta(n, n, 0).unwrap(), circle_value(n));
        }
        // theta(a,b,c) symmetric in a,b
        for (a, b, c) in [(1, 2, 3), (2, 2, 2), (3, 2, 1), (2, 4, 2)] {
            assert_eq!(theta(a, b, c).unwrap(), theta(b, a, c).unwrap());
        }
        // inadmissible triple rejected
        assert!(theta(1, 1, 1).is_err());
    }

    #[test]
    fn encirclement_eigenvalue() {
        for n in 0..=4i64 {
            let expect = RatFunc::a_pow(2 + 2 * n)
                .neg()
                .sub(&RatFunc::a_pow(-2 - 2 * n));
            assert_eq!(encircle_value(n as u16).unwrap(), expect, "n = {}", n);
        }
    }

    #[test]
    fn tetrahedron_values() {
        // all-ones coloring has odd vertex triples: rejected
        assert!(matches!(
            tetrahedron(1, 1, 1, 1, 1, 1),
            Err(OpError::InadmissibleVertex(..))
        ));
        // an edge colored 0 degenerates the tetrahedron toward a theta
        let t0 = tetrahedron(0, 1, 1, 1, 1, 2).unwrap();
        assert!(!t0.is_zero());
        let t1 = tetrahedron(2, 1, 1, 1, 1, 2).unwrap();
        assert!(!t1.is_zero());
    }
}
