//! The (n → n) diagram algebra surface: `TLDiagram` and loop-free
//! `TLElement` combinations, with stacking composition.

use crate::error::OpError;
use crate::ring::RatFunc;

use super::mor::{Pairing, TLMor};

/// A planar diagram on n strands: a non-crossing perfect matching of the 2n
/// boundary points together with a count of closed loops.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TLDiagram {
    pub strands: u16,
    /// pairs[i] = partner of point i; points 0..n bottom, n..2n top.
    pub pairs: Vec<u16>,
    pub closed_loops: u32,
}

impl TLDiagram {
    pub fn identity(n: u16) -> TLDiagram {
        let p = Pairing::identity(n);
        TLDiagram {
            strands: n,
            pairs: p.pairs,
            closed_loops: 0,
        }
    }

    pub fn hook(n: u16, i: u16) -> TLDiagram {
        let m = TLMor::hook(n, i);
        let p = m.terms.keys().next().unwrap().clone();
        TLDiagram {
            strands: n,
            pairs: p.pairs,
            closed_loops: 0,
        }
    }

    pub fn is_planar(&self) -> bool {
        Pairing {
            dom: self.strands,
            cod: self.strands,
            pairs: self.pairs.clone(),
        }
        .is_planar()
    }

    fn to_mor(&self) -> TLMor {
        let base = TLMor::from_pairing(Pairing {
            dom: self.strands,
            cod: self.strands,
            pairs: self.pairs.clone(),
        });
        let mut d = crate::ring::loop_value();
        let mut c = RatFunc::one();
        for _ in 0..self.closed_loops {
            c = c.mul(&d);
        }
        d = c;
        base.scale(&d)
    }
}

/// Loop-free formal ℚ(A)-combination of diagrams with equal strand count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TLElement(pub TLMor);

impl TLElement {
    pub fn identity(n: u16) -> TLElement {
        TLElement(TLMor::identity(n))
    }

    pub fn from_diagram(d: &TLDiagram) -> TLElement {
        TLElement(d.to_mor())
    }

    pub fn strands(&self) -> u16 {
        self.0.dom
    }

    pub fn add(&self, other: &TLElement) -> TLElement {
        TLElement(self.0.add(&other.0))
    }

    pub fn scale(&self, c: &RatFunc) -> TLElement {
        TLElement(self.0.scale(c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// Bilinear stacking with closed loops folded into d = −A²−A^{−2}.
pub fn tl_compose(x: &TLElement, y: &TLElement) -> Result<TLElement, OpError> {
    Ok(TLElement(x.0.then(&y.0)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::loop_value;
    use crate::tl::mor::{jw, markov_close, quantum_dim};

    #[test]
    fn stacking_examples() {
        // e1·e1 = d·e1 in TL_2
        let e1 = TLElement::from_diagram(&TLDiagram::hook(2, 0));
        let sq = tl_compose(&e1, &e1).unwrap();
        assert_eq!(sq, e1.scale(&loop_value()));
        // id·x = x
        let x = TLElement(jw(2));
        assert_eq!(tl_compose(&TLElement::identity(2), &x).unwrap(), x);
        // e1·e2·e1 = e1 in TL_3
        let a = TLElement::from_diagram(&TLDiagram::hook(3, 0));
        let b = TLElement::from_diagram(&TLDiagram::hook(3, 1));
        let p = tl_compose(&tl_compose(&a, &b).unwrap(), &a).unwrap();
        assert_eq!(p, a);
        // strand mismatch is an error
        assert!(tl_compose(&TLElement::identity(2), &TLElement::identity(3)).is_err());
    }

    #[test]
    fn loop_folding() {
        let d = TLDiagram {
            strands: 1,
            pairs: vec![1, 0],
            closed_loops: 2,
        };
        let e = TLElement::from_diagram(&d);
        let dd = loop_value().mul(&loop_value());
        assert_eq!(e, TLElement::identity(1).scale(&dd));
    }

    #[test]
    fn markov_trace_matches_quantum_dimension() {
        for n in 0..=6 {
            assert_eq!(markov_close(&jw(n)), quantum_dim(n as i64));
        }
    }
}
