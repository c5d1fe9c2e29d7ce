//! Lollipop trees with ribbon structure, integer edge-colorings, the
//! admissibility polytope, and paths.
//!
//! A lollipop tree is a trivalent graph obtained from a tree by gluing loop
//! edges onto the leaves; it is the spine of a genus-g handlebody and its
//! edges are dual to a pants decomposition of the boundary. Edge and vertex
//! identifiers are their input positions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub type VertexId = u32;
pub type EdgeId = u32;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct HalfEdge {
    pub edge: EdgeId,
    pub end: u8,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub ends: [VertexId; 2],
    #[serde(default)]
    pub is_loop: bool,
}

/// Trivalent ribbon graph: a tree with loop edges glued onto leaves.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LollipopGraph {
    pub num_vertices: u32,
    pub edges: Vec<Edge>,
    /// Cyclic (counterclockwise) order of the three half-edges at each vertex.
    pub ribbon: Vec<Vec<HalfEdge>>,
    #[serde(skip)]
    genus: usize,
}

/// JSON input document for a graph.
#[derive(Deserialize)]
struct GraphDoc {
    vertices: u32,
    edges: Vec<EdgeDoc>,
    ribbon_order: Vec<Vec<HalfEdgeDoc>>,
}

#[derive(Deserialize)]
struct EdgeDoc {
    ends: [u32; 2],
    #[serde(default)]
    r#loop: Option<bool>,
}

#[derive(Deserialize)]
struct HalfEdgeDoc {
    edge: u32,
    end: u8,
}

impl LollipopGraph {
    /// Parse and validate the JSON graph document.
    pub fn from_json(text: &str) -> Result<LollipopGraph, GraphError> {
        let doc: GraphDoc = serde_json::from_str(text)
            .map_err(|e| GraphError::Input(e.to_string(), "/".into()))?;
        let mut edges = Vec::with_capacity(doc.edges.len());
        for (i, e) in doc.edges.iter().enumerate() {
            let at = format!("/edges/{}", i);
            for (j, v) in e.ends.iter().enumerate() {
                if *v >= doc.vertices {
                    return Err(GraphError::Input(
                        format!("endpoint {} out of range", v),
                        format!("{}/ends/{}", at, j),
                    ));
                }
            }
            let is_loop = e.ends[0] == e.ends[1];
            if let Some(flag) = e.r#loop {
                if flag != is_loop {
                    return Err(GraphError::Input(
                        "loop flag disagrees with endpoints".into(),
                        format!("{}/loop", at),
                    ));
                }
            }
            edges.push(Edge {
                ends: e.ends,
                is_loop,
            });
        }
        if doc.ribbon_order.len() != doc.vertices as usize {
            return Err(GraphError::Input(
                format!(
                    "ribbon_order has {} entries for {} vertices",
                    doc.ribbon_order.len(),
                    doc.vertices
                ),
                "/ribbon_order".into(),
            ));
        }
        let mut ribbon = Vec::with_capacity(doc.ribbon_order.len());
        for (v, hs) in doc.ribbon_order.iter().enumerate() {
            let at = format!("/ribbon_order/{}", v);
            let mut out = Vec::with_capacity(hs.len());
            for (k, h) in hs.iter().enumerate() {
                if h.edge as usize >= edges.len() || h.end > 1 {
                    return Err(GraphError::Input(
                        "half-edge out of range".into(),
                        format!("{}/{}", at, k),
                    ));
                }
                out.push(HalfEdge {
                    edge: h.edge,
                    end: h.end,
                });
            }
            ribbon.push(out);
        }
        let mut g = LollipopGraph {
            num_vertices: doc.vertices,
            edges,
            ribbon,
            genus: 0,
        };
        let genus = g.validate()?;
        g.genus = genus;
        Ok(g)
    }

    /// Build from parts and validate.
    pub fn new(
        num_vertices: u32,
        edges: Vec<Edge>,
        ribbon: Vec<Vec<HalfEdge>>,
    ) -> Result<LollipopGraph, GraphError> {
        let mut g = LollipopGraph {
            num_vertices,
            edges,
            ribbon,
            genus: 0,
        };
        let genus = g.validate()?;
        g.genus = genus;
        Ok(g)
    }

    /// Check all structural invariants; returns the genus.
    pub fn validate(&self) -> Result<usize, GraphError> {
        if self.num_vertices == 0 {
            return Err(GraphError::NotTrivalent(0, "/vertices".into()));
        }
        // incident half-edges per vertex
        let mut incident: Vec<Vec<HalfEdge>> = vec![Vec::new(); self.num_vertices as usize];
        for (i, e) in self.edges.iter().enumerate() {
            if e.is_loop != (e.ends[0] == e.ends[1]) {
                return Err(GraphError::Input(
                    "loop flag disagrees with endpoints".into(),
                    format!("/edges/{}", i),
                ));
            }
            for end in 0..2u8 {
                incident[e.ends[end as usize] as usize].push(HalfEdge {
                    edge: i as EdgeId,
                    end,
                });
            }
        }
        for (v, inc) in incident.iter().enumerate() {
            if inc.len() != 3 {
                return Err(GraphError::NotTrivalent(
                    v as u32,
                    format!("/vertices/{}", v),
                ));
            }
        }
        // ribbon order must list exactly the incident half-edges
        if self.ribbon.len() != self.num_vertices as usize {
            return Err(GraphError::MissingRibbonOrder("/ribbon_order".into()));
        }
        for (v, hs) in self.ribbon.iter().enumerate() {
            let mut a: Vec<HalfEdge> = hs.clone();
            let mut b = incident[v].clone();
            a.sort();
            b.sort();
            if a != b {
                return Err(GraphError::MissingRibbonOrder(format!(
                    "/ribbon_order/{}",
                    v
                )));
            }
        }
        // non-loop edges must form a spanning tree
        let nonloop: Vec<usize> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_loop)
            .map(|(i, _)| i)
            .collect();
        if nonloop.len() + 1 != self.num_vertices as usize {
            return Err(GraphError::NotLollipopTree("/edges".into()));
        }
        // union-find acyclicity
        let mut parent: Vec<u32> = (0..self.num_vertices).collect();
        fn find(parent: &mut Vec<u32>, x: u32) -> u32 {
            let mut x = x;
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for &i in &nonloop {
            let [a, b] = self.edges[i].ends;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(GraphError::NotLollipopTree(format!("/edges/{}", i)));
            }
            parent[ra as usize] = rb;
        }
        let genus = self.edges.len() - self.num_vertices as usize + 1;
        if genus < 1 {
            return Err(GraphError::NotLollipopTree("/edges".into()));
        }
        Ok(genus)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        self.edges[e as usize].is_loop
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        0..self.edges.len() as EdgeId
    }

    /// Edges incident to `v`, with multiplicity (a loop appears twice).
    pub fn incident_edges(&self, v: VertexId) -> Vec<EdgeId> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            for end in 0..2 {
                if e.ends[end] == v {
                    out.push(i as EdgeId);
                }
            }
        }
        out
    }

    /// Distinct edges incident to `v`.
    pub fn incident_edge_set(&self, v: VertexId) -> Vec<EdgeId> {
        let mut out = self.incident_edges(v);
        out.dedup();
        out.sort();
        out.dedup();
        out
    }

    /// The stem of a loop edge: the unique non-loop edge at its vertex.
    pub fn loop_stem(&self, e: EdgeId) -> Option<EdgeId> {
        if !self.is_loop(e) {
            return None;
        }
        let v = self.edges[e as usize].ends[0];
        self.incident_edge_set(v).into_iter().find(|&f| f != e)
    }

    /// Directed-vertex forms `d(v,e) = d(e1) + d(e2) − d(e)`, one per
    /// distinct (vertex, incident edge) pair, as dense edge-coefficient rows.
    pub fn vertex_forms(&self) -> Vec<(VertexId, EdgeId, Vec<i64>)> {
        let mut out = Vec::new();
        for v in 0..self.num_vertices {
            let inc = self.incident_edges(v); // 3 entries with multiplicity
            let mut seen = BTreeSet::new();
            for &e in &inc {
                if !seen.insert(e) {
                    continue;
                }
                let mut row = vec![0i64; self.edges.len()];
                // others = incident multiset minus one copy of e
                let mut removed = false;
                for &f in &inc {
                    if f == e && !removed {
                        removed = true;
                        continue;
                    }
                    row[f as usize] += 1;
                }
                row[e as usize] -= 1;
                out.push((v, e, row));
            }
        }
        out
    }
}

/// Integer edge-coloring, dense over the graph's edges.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Coloring(pub Vec<i64>);

impl Coloring {
    pub fn zero(g: &LollipopGraph) -> Coloring {
        Coloring(vec![0; g.num_edges()])
    }

    pub fn get(&self, e: EdgeId) -> i64 {
        self.0[e as usize]
    }

    pub fn shifted(&self, delta: &[i64]) -> Coloring {
        Coloring(
            self.0
                .iter()
                .zip(delta.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn as_fn(&self) -> impl Fn(u32) -> Option<i64> + '_ {
        move |e| self.0.get(e as usize).copied()
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// One facet of the admissibility polytope: `row · c ≥ bound`, with `parity`
/// demanding `row · c` even.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Facet {
    pub row: Vec<i64>,
    pub bound: i64,
    pub parity: bool,
}

/// The polytope Δ of admissible colorings of a lollipop tree.
#[derive(Clone, Debug)]
pub struct AdmissiblePolytope {
    pub facets: Vec<Facet>,
    num_edges: usize,
}

impl AdmissiblePolytope {
    pub fn of(g: &LollipopGraph) -> AdmissiblePolytope {
        let mut facets: Vec<Facet> = Vec::new();
        let mut push = |f: Facet| {
            if !facets.iter().any(|x| x == &f) {
                facets.push(f);
            }
        };
        for e in g.edge_ids() {
            let mut row = vec![0i64; g.num_edges()];
            row[e as usize] = 1;
            push(Facet {
                row,
                bound: 0,
                parity: false,
            });
        }
        for (_, _, row) in g.vertex_forms() {
            push(Facet {
                row,
                bound: 0,
                parity: true,
            });
        }
        AdmissiblePolytope {
            facets,
            num_edges: g.num_edges(),
        }
    }

    pub fn contains(&self, c: &Coloring) -> bool {
        debug_assert_eq!(c.0.len(), self.num_edges);
        self.facets.iter().all(|f| {
            let v: i64 = f.row.iter().zip(&c.0).map(|(a, b)| a * b).sum();
            v >= f.bound && (!f.parity || v % 2 == 0)
        })
    }

    /// Is `c + x` admissible for every `‖x‖∞ ≤ margin` (polytope part only;
    /// the parity sublattice is translation-invariant under even shifts and
    /// is handled by the facet's parity flag on `c` itself)?
    pub fn is_interior(&self, c: &Coloring, margin: i64) -> bool {
        if !self.contains(c) {
            return false;
        }
        self.facets.iter().all(|f| {
            let v: i64 = f.row.iter().zip(&c.0).map(|(a, b)| a * b).sum();
            let l1: i64 = f.row.iter().map(|a| a.abs()).sum();
            v - margin * l1 >= f.bound
        })
    }
}

/// Clause-by-clause admissibility test (Def of the polytope).
pub fn is_admissible(g: &LollipopGraph, c: &Coloring) -> bool {
    if c.0.len() != g.num_edges() {
        return false;
    }
    if c.0.iter().any(|&x| x < 0) {
        return false;
    }
    for (_, _, row) in g.vertex_forms() {
        let v: i64 = row.iter().zip(&c.0).map(|(a, b)| a * b).sum();
        if v < 0 || v % 2 != 0 {
            return false;
        }
    }
    true
}

/// All admissible colorings with every color ≤ `bound`, in lexicographic order.
pub fn enumerate_admissible(g: &LollipopGraph, bound: i64) -> Vec<Coloring> {
    let n = g.num_edges();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        let c = Coloring(cur.clone());
        if is_admissible(g, &c) {
            out.push(c);
        }
        // increment (last coordinate fastest would be colex; spec wants lex
        // order on the output list, and incrementing the last coordinate
        // fastest emits vectors in lexicographic order)
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < bound {
                cur[i] += 1;
                for x in cur.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// A path: ordered edge list with loop edges only at the extremities.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GraphPath {
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathClass {
    ArcOfNonLoopEdges,
    LoopTerminated,
    SingleLoop,
}

impl GraphPath {
    pub fn new(edges: Vec<EdgeId>) -> GraphPath {
        GraphPath { edges }
    }

    /// Loop edges of the path (∂γ).
    pub fn boundary_loops(&self, g: &LollipopGraph) -> Vec<EdgeId> {
        self.edges
            .iter()
            .copied()
            .filter(|&e| g.is_loop(e))
            .collect()
    }

    /// The interior arc (∘γ): the path with loop edges removed.
    pub fn interior_arc(&self, g: &LollipopGraph) -> Vec<EdgeId> {
        self.edges
            .iter()
            .copied()
            .filter(|&e| !g.is_loop(e))
            .collect()
    }
}

/// Validate a path per the path condition (connected, at most two distinct
/// path edges at each vertex, loops only at the extremities) and classify it.
pub fn classify_path(g: &LollipopGraph, p: &GraphPath) -> Result<PathClass, GraphError> {
    if p.edges.is_empty() {
        return Err(GraphError::InvalidPath("empty path".into()));
    }
    let mut seen = BTreeSet::new();
    for &e in &p.edges {
        if e as usize >= g.num_edges() {
            return Err(GraphError::InvalidPath(format!("unknown edge {}", e)));
        }
        if !seen.insert(e) {
            return Err(GraphError::InvalidPath(format!("repeated edge {}", e)));
        }
    }
    // loops only at the two extremities
    for (i, &e) in p.edges.iter().enumerate() {
        if g.is_loop(e) && i != 0 && i != p.edges.len() - 1 {
            return Err(GraphError::InvalidPath(format!(
                "loop edge {} in the interior",
                e
            )));
        }
    }
    // consecutive edges share a vertex
    for w in p.edges.windows(2) {
        let (a, b) = (&g.edges[w[0] as usize], &g.edges[w[1] as usize]);
        let shares = a.ends.iter().any(|v| b.ends.contains(v));
        if !shares {
            return Err(GraphError::InvalidPath(format!(
                "edges {} and {} are not adjacent",
                w[0], w[1]
            )));
        }
    }
    // at each vertex, at most two distinct path edges
    let mut at_vertex: BTreeMap<VertexId, BTreeSet<EdgeId>> = BTreeMap::new();
    for &e in &p.edges {
        for &v in &g.edges[e as usize].ends {
            at_vertex.entry(v).or_default().insert(e);
        }
    }
    for (v, es) in &at_vertex {
        if es.len() > 2 {
            return Err(GraphError::InvalidPath(format!(
                "three path edges meet at vertex {}",
                v
            )));
        }
    }
    let loops = p.boundary_loops(g).len();
    if loops == 0 {
        Ok(PathClass::ArcOfNonLoopEdges)
    } else if p.edges.len() == 1 {
        Ok(PathClass::SingleLoop)
    } else {
        Ok(PathClass::LoopTerminated)
    }
}

/// Validate a graph document and report the genus (the spec's `validate_graph`).
pub fn validate_graph(g: &LollipopGraph) -> Result<usize, GraphError> {
    g.validate()
}

// ---- catalog graphs used throughout the test suites ----

/// Genus-2 dumbbell: loops e0, e1 joined by the middle edge e2.
pub fn dumbbell() -> LollipopGraph {
    LollipopGraph::new(
        2,
        vec![
            Edge {
                ends: [0, 0],
                is_loop: true,
            },
            Edge {
                ends: [1, 1],
                is_loop: true,
            },
            Edge {
                ends: [0, 1],
                is_loop: false,
            },
        ],
        vec![
            vec![
                HalfEdge { edge: 0, end: 0 },
                HalfEdge { edge: 0, end: 1 },
                HalfEdge { edge: 2, end: 0 },
            ],
            vec![
                HalfEdge { edge: 2, end: 1 },
                HalfEdge { edge: 1, end: 0 },
                HalfEdge { edge: 1, end: 1 },
            ],
        ],
    )
    .expect("dumbbell is valid")
}

/// Genus-3 lollipop tree: central vertex 0 with stems e0,e1,e2 to leaves
/// carrying loops e3,e4,e5.
pub fn genus3_tree() -> LollipopGraph {
    LollipopGraph::new(
        4,
        vec![
            Edge {
                ends: [0, 1],
                is_loop: false,
            },
            Edge {
                ends: [0, 2],
                is_loop: false,
            },
            Edge {
                ends: [0, 3],
                is_loop: false,
            },
            Edge {
                ends: [1, 1],
                is_loop: true,
            },
            Edge {
                ends: [2, 2],
                is_loop: true,
            },
            Edge {
                ends: [3, 3],
                is_loop: true,
            },
        ],
        vec![
            vec![
                HalfEdge { edge: 0, end: 0 },
                HalfEdge { edge: 1, end: 0 },
                HalfEdge { edge: 2, end: 0 },
            ],
            vec![
                HalfEdge { edge: 0, end: 1 },
                HalfEdge { edge: 3, end: 0 },
                HalfEdge { edge: 3, end: 1 },
            ],
            vec![
                HalfEdge { edge: 1, end: 1 },
                HalfEdge { edge: 4, end: 0 },
                HalfEdge { edge: 4, end: 1 },
            ],
            vec![
                HalfEdge { edge: 2, end: 1 },
                HalfEdge { edge: 5, end: 0 },
                HalfEdge { edge: 5, end: 1 },
            ],
        ],
    )
    .expect("genus-3 tree is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dumbbell_genus_and_forms() {
        let g = dumbbell();
        assert_eq!(g.genus(), 2);
        assert_eq!(g.loop_stem(0), Some(2));
        assert_eq!(g.loop_stem(1), Some(2));
        assert_eq!(g.loop_stem(2), None);
        let forms = g.vertex_forms();
        // v0: d(v0,e0)=c2, d(v0,e2)=2c0-c2; v1 symmetric
        assert_eq!(forms.len(), 4);
        assert!(forms.contains(&(0, 0, vec![0, 0, 1])));
        assert!(forms.contains(&(0, 2, vec![2, 0, -1])));
        assert!(forms.contains(&(1, 1, vec![0, 0, 1])));
        assert!(forms.contains(&(1, 2, vec![0, 2, -1])));
    }

    #[test]
    fn genus3_tree_genus() {
        let g = genus3_tree();
        assert_eq!(g.genus(), 3);
    }

    #[test]
    fn single_loop_no_vertex_rejected() {
        // a single loop with one vertex: that vertex has only 2 half-edges
        let r = LollipopGraph::new(
            1,
            vec![Edge {
                ends: [0, 0],
                is_loop: true,
            }],
            vec![vec![
                HalfEdge { edge: 0, end: 0 },
                HalfEdge { edge: 0, end: 1 },
            ]],
        );
        assert!(matches!(r, Err(GraphError::NotTrivalent(0, _))));
    }

    #[test]
    fn admissibility_examples() {
        let g = dumbbell();
        assert!(is_admissible(&g, &Coloring(vec![0, 0, 0])));
        assert!(!is_admissible(&g, &Coloring(vec![1, 1, 1]))); // c2 odd
        assert!(is_admissible(&g, &Coloring(vec![1, 1, 2])));
        assert!(!is_admissible(&g, &Coloring(vec![0, 1, 2]))); // 2c0-c2 < 0
    }

    #[test]
    fn facets_match_membership_on_box() {
        for g in [dumbbell(), genus3_tree()] {
            let poly = AdmissiblePolytope::of(&g);
            let n = g.num_edges();
            let bound = if n <= 3 { 8 } else { 4 };
            let mut cur = vec![0i64; n];
            loop {
                let c = Coloring(cur.clone());
                assert_eq!(poly.contains(&c), is_admissible(&g, &c), "at {:?}", c);
                let mut i = n;
                loop {
                    if i == 0 {
                        return;
                    }
                    i -= 1;
                    if cur[i] < bound {
                        cur[i] += 1;
                        for x in cur.iter_mut().skip(i + 1) {
                            *x = 0;
                        }
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn dumbbell_facet_list() {
        let g = dumbbell();
        let poly = AdmissiblePolytope::of(&g);
        // {c0>=0, c1>=0, c2>=0} + {c2 even, 2c0-c2>=0 even, 2c1-c2>=0 even};
        // the two d(v,loop) forms coincide and are deduplicated
        assert_eq!(poly.facets.len(), 6);
        assert!(poly.facets.len() <= g.num_edges() + 3 * g.num_vertices as usize);
    }

    #[test]
    fn enumerate_admissible_counts() {
        let g = dumbbell();
        assert_eq!(enumerate_admissible(&g, 0), vec![Coloring(vec![0, 0, 0])]);
        let list = enumerate_admissible(&g, 2);
        assert_eq!(list.len(), 13);
        // independent box scan
        let mut count = 0;
        for c0 in 0..=2 {
            for c1 in 0..=2 {
                for c2 in 0..=2 {
                    if is_admissible(&g, &Coloring(vec![c0, c1, c2])) {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(count, 13);
        // lexicographic order
        let mut sorted = list.clone();
        sorted.sort();
        assert_eq!(list, sorted);
    }

    #[test]
    fn sum_of_admissible_is_admissible() {
        let g = genus3_tree();
        let all = enumerate_admissible(&g, 2);
        for a in all.iter().take(20) {
            for b in all.iter().take(20) {
                let s = Coloring(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
                assert!(is_admissible(&g, &s));
            }
        }
    }

    #[test]
    fn path_classification() {
        let g = dumbbell();
        assert_eq!(
            classify_path(&g, &GraphPath::new(vec![2])).unwrap(),
            PathClass::ArcOfNonLoopEdges
        );
        assert_eq!(
            classify_path(&g, &GraphPath::new(vec![0, 2, 1])).unwrap(),
            PathClass::LoopTerminated
        );
        assert_eq!(
            classify_path(&g, &GraphPath::new(vec![0])).unwrap(),
            PathClass::SingleLoop
        );
        // three stems at the center of the genus-3 tree: invalid
        let g3 = genus3_tree();
        assert!(classify_path(&g3, &GraphPath::new(vec![0, 1, 2])).is_err());
        // but two stems form an arc
        assert_eq!(
            classify_path(&g3, &GraphPath::new(vec![0, 1])).unwrap(),
            PathClass::ArcOfNonLoopEdges
        );
    }

    #[test]
    fn json_roundtrip_and_errors() {
        let text = r#"{
            "vertices": 2,
            "edges": [
                {"ends": [0,0], "loop": true},
                {"ends": [1,1]},
                {"ends": [0,1]}
            ],
            "ribbon_order": [
                [{"edge":0,"end":0},{"edge":0,"end":1},{"edge":2,"end":0}],
                [{"edge":2,"end":1},{"edge":1,"end":0},{"edge":1,"end":1}]
            ]
        }"#;
        let g = LollipopGraph::from_json(text).unwrap();
        assert_eq!(g.genus(), 2);
        let bad = text.replace("[0,1]", "[0,7]");
        let err = LollipopGraph::from_json(&bad).unwrap_err();
        match err {
            GraphError::Input(_, loc) => assert!(loc.starts_with("/edges/2/ends/")),
            e => panic!("unexpected {e:?}"),
        }
    }
}
