//! Curve operators as finite shift tables, skein vectors, application and
//! composition.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::OpError;
use crate::graph::{is_admissible, Coloring, EdgeId, LollipopGraph};
use crate::ring::{ExpCoeff, MultiRat};

/// A primitive curve: the generators every operator is composed from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PrimOp {
    Alpha(EdgeId),
    BetaLoop(EdgeId),
    BetaArc(Vec<EdgeId>),
}

/// Element of Sk(H) in the φ basis: finite map from admissible colorings to
/// coefficients; the convention φ_c = 0 for non-admissible c is enforced at
/// insertion.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SkeinVector {
    pub terms: BTreeMap<Coloring, MultiRat>,
}

impl SkeinVector {
    pub fn zero() -> SkeinVector {
        SkeinVector::default()
    }

    pub fn basis(g: &LollipopGraph, c: Coloring) -> SkeinVector {
        let mut v = SkeinVector::zero();
        v.insert(g, c, MultiRat::one());
        v
    }

    /// Add `coeff`·φ_c, dropping non-admissible targets and zeros.
    pub fn insert(&mut self, g: &LollipopGraph, c: Coloring, coeff: MultiRat) {
        if coeff.is_zero() || !is_admissible(g, &c) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(c) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&coeff);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, g: &LollipopGraph, other: &SkeinVector) -> SkeinVector {
        let mut out = self.clone();
        for (c, x) in &other.terms {
            out.insert(g, c.clone(), x.clone());
        }
        out
    }

    pub fn scale(&self, s: &MultiRat) -> SkeinVector {
        if s.is_zero() {
            return SkeinVector::zero();
        }
        SkeinVector {
            terms: self
                .terms
                .iter()
                .map(|(c, x)| (c.clone(), x.mul(s)))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_color(&self) -> i64 {
        self.terms
            .keys()
            .flat_map(|c| c.0.iter().copied())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for SkeinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, x)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·φ{}", x, c)?;
        }
        Ok(())
    }
}

/// A curve operator: finite shift table with a conservative validity margin
/// and the primitive factorization used for exact boundary application.
/// `factors[0]` acts first.
#[derive(Clone, Debug)]
pub struct CurveOp {
    pub num_edges: usize,
    pub table: BTreeMap<Vec<i64>, ExpCoeff>,
    pub margin: i64,
    pub factors: Vec<PrimOp>,
    pub mirror: bool,
}

impl CurveOp {
    pub fn shifts(&self) -> Vec<Vec<i64>> {
        self.table
            .iter()
            .filter(|(_, f)| !f.is_zero())
            .map(|(x, _)| x.clone())
            .collect()
    }

    /// Compose: `self ∘ other` (other acts first).
    pub fn compose(&self, other: &CurveOp) -> CurveOp {
        assert_eq!(self.num_edges, other.num_edges);
        assert_eq!(self.mirror, other.mirror);
        let mut table: BTreeMap<Vec<i64>, ExpCoeff> = BTreeMap::new();
        for (x2, f2) in &other.table {
            for (x1, f1) in &self.table {
                // re-center f1 at c + x2
                let mut f1s = f1.clone();
                for (e, k) in x2.iter().enumerate() {
                    if *k != 0 {
                        f1s = f1s.shift(e as u32, *k);
                    }
                }
                let x: Vec<i64> = x1.iter().zip(x2).map(|(a, b)| a + b).collect();
                let prod = f1s.mul(f2);
                use std::collections::btree_map::Entry;
                match table.entry(x) {
                    Entry::Vacant(e) => {
                        if !prod.is_zero() {
                            e.insert(prod);
                        }
                    }
                    Entry::Occupied(mut e) => {
                        let s = e.get().add(&prod);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
        let mut factors = other.factors.clone();
        factors.extend(self.factors.iter().cloned());
        CurveOp {
            num_edges: self.num_edges,
            table,
            margin: self.margin + other.margin,
            factors,
            mirror: self.mirror,
        }
    }

    /// Orientation reversal A ↦ A^{−1} of every coefficient.
    pub fn mirror_a(&self) -> CurveOp {
        CurveOp {
            num_edges: self.num_edges,
            table: self
                .table
                .iter()
                .map(|(x, f)| (x.clone(), f.mirror_a()))
                .collect(),
            margin: self.margin,
            factors: self.factors.clone(),
            mirror: !self.mirror,
        }
    }

    pub fn identity(num_edges: usize) -> CurveOp {
        let mut table = BTreeMap::new();
        table.insert(vec![0; num_edges], ExpCoeff::one());
        CurveOp {
            num_edges,
            table,
            margin: 0,
            factors: Vec::new(),
            mirror: false,
        }
    }

    pub fn power(&self, n: u32) -> CurveOp {
        let mut out = CurveOp::identity(self.num_edges);
        out.mirror = self.mirror;
        for _ in 0..n {
            out = self.compose(&out);
        }
        out
    }
}

/// Apply the operator exactly to a skein vector: every key coloring is
/// processed through the primitive factorization (valid at any admissible
/// coloring, including the boundary of Δ).
pub fn apply(g: &LollipopGraph, op: &CurveOp, v: &SkeinVector) -> Result<SkeinVector, OpError> {
    let mut cur = v.clone();
    for prim in &op.factors {
        let mut next = SkeinVector::zero();
        for (c, coeff) in &cur.terms {
            for (t, f) in super::build::apply_prim(g, prim, op.mirror, c)? {
                next.insert(g, t, f.mul(coeff));
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// Apply via the symbolic table (valid when every key coloring is at L∞
/// distance ≥ `op.margin` from ∂Δ); used by tests to cross-check `apply`.
pub fn apply_symbolic(
    g: &LollipopGraph,
    op: &CurveOp,
    v: &SkeinVector,
) -> Result<SkeinVector, OpError> {
    let mut out = SkeinVector::zero();
    for (c, coeff) in &v.terms {
        for (x, f) in &op.table {
            let t = c.shifted(x);
            if !is_admissible(g, &t) {
                continue;
            }
            let val = f
                .eval(&c.as_fn())
                .map_err(|_| OpError::BoundaryFallbackFailed(c.0.clone()))?;
            out.insert(g, t, val.mul(coeff));
        }
    }
    Ok(out)
}

/// A polynomial in named operators with coefficients in ℚ(A, λ̄).
#[derive(Clone, Debug, Default)]
pub struct OpPolynomial {
    pub terms: Vec<(MultiRat, Vec<Arc<CurveOp>>)>,
}

impl OpPolynomial {
    pub fn monomial(coeff: MultiRat, ops: Vec<Arc<CurveOp>>) -> OpPolynomial {
        OpPolynomial {
            terms: vec![(coeff, ops)],
        }
    }

    pub fn add(&self, other: &OpPolynomial) -> OpPolynomial {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        OpPolynomial { terms }
    }

    /// Expand into a single symbolic shift table.
    pub fn expand(&self, num_edges: usize) -> CurveOp {
        let mut acc: BTreeMap<Vec<i64>, ExpCoeff> = BTreeMap::new();
        let mut margin = 0i64;
        for (coeff, ops) in &self.terms {
            let mut m = CurveOp::identity(num_edges);
            if let Some(first) = ops.first() {
                m.mirror = first.mirror;
            }
            for op in ops.iter().rev() {
                m = m.compose(op);
                // compose requires matching mirror flags; identity adopts it
            }
            margin = margin.max(m.margin);
            let ce = coeff.to_exp();
            for (x, f) in m.table {
                let scaled = f.scale_multi(&MultiRat(ce.0.clone()));
                use std::collections::btree_map::Entry;
                match acc.entry(x) {
                    Entry::Vacant(e) => {
                        if !scaled.is_zero() {
                            e.insert(scaled);
                        }
                    }
                    Entry::Occupied(mut e) => {
                        let s = e.get().add(&scaled);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
        CurveOp {
            num_edges,
            table: acc,
            margin,
            factors: Vec::new(),
            mirror: self
                .terms
                .first()
                .and_then(|(_, ops)| ops.first())
                .map(|o| o.mirror)
                .unwrap_or(false),
        }
    }

    /// Exact application: each monomial applied through its factorizations.
    pub fn apply(&self, g: &LollipopGraph, v: &SkeinVector) -> Result<SkeinVector, OpError> {
        let mut out = SkeinVector::zero();
        for (coeff, ops) in &self.terms {
            let mut cur = v.clone();
            for op in ops.iter().rev() {
                cur = apply(g, op, &cur)?;
            }
            out = out.add(g, &cur.scale(coeff));
        }
        Ok(out)
    }

    /// Total degree in the listed operators (each factor counts once).
    pub fn degree(&self) -> usize {
        self.terms.iter().map(|(_, ops)| ops.len()).max().unwrap_or(0)
    }
}
