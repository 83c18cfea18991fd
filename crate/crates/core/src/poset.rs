//! 2-dimensional simplicial posets and the constructions that produce
//! ternary relations: cones, complete and doubled skeletons, vector
//! configurations and the A/B/D root systems.
//!
//! A poset here is vertices, edges with endpoint pairs, and triangles with
//! three facet edges.  Multi-edges between the same vertex pair are allowed,
//! loops are not.  A triangle is valid when its three edges are pairwise
//! distinct and their endpoint pairs are exactly the three pairs over a
//! 3-element vertex set, which is the boolean-interval condition for a
//! rank-3 simplex.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::relation::{RelationError, TernaryRelation};
use crate::Rat;

#[derive(Debug, Error)]
pub enum PosetError {
    #[error("invalid simplicial poset:\n{}", format_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("operation requires a graph (no triangles), found {0} triangles")]
    NotAGraph(usize),
    #[error("relation construction failed: {0}")]
    Relation(#[from] RelationError),
    #[error("root system {kind}_{n} is not defined (need n ≥ {min})")]
    BadRootSystemRank { kind: RootSystemKind, n: usize, min: usize },
    #[error("doubled skeleton needs n ≥ 2, got {0}")]
    DoubledTooSmall(usize),
    #[error("invalid vector configuration: {0}")]
    BadConfiguration(String),
    #[error("bad rational literal {0:?}")]
    BadRational(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|x| format!("  - {x}")).collect::<Vec<_>>().join("\n")
}

/// One named defect found by validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateId(String),
    UnknownVertex { edge: String, vertex: String },
    LoopEdge { edge: String },
    UnknownEdge { triangle: String, edge: String },
    RepeatedEdge { triangle: String },
    /// The three facet edges do not cover the three vertex pairs of a
    /// 3-element set, so the lower interval is not a boolean cube.
    NotBoolean { triangle: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateId(id) => write!(f, "id {id:?} is used more than once"),
            Violation::UnknownVertex { edge, vertex } => {
                write!(f, "edge {edge:?} references unknown vertex {vertex:?}")
            }
            Violation::LoopEdge { edge } => write!(f, "edge {edge:?} is a loop"),
            Violation::UnknownEdge { triangle, edge } => {
                write!(f, "triangle {triangle:?} references unknown edge {edge:?}")
            }
            Violation::RepeatedEdge { triangle } => {
                write!(f, "triangle {triangle:?} repeats a facet edge")
            }
            Violation::NotBoolean { triangle } => write!(
                f,
                "triangle {triangle:?}: facet edges do not span the three pairs of a 3-vertex set"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Edge {
    id: String,
    ends: [usize; 2], // sorted
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Triangle {
    id: String,
    edges: [usize; 3],    // sorted
    vertices: [usize; 3], // sorted
}

/// Validated 2-dimensional simplicial poset. Immutable after construction.
#[derive(Debug, Clone)]
pub struct SimplicialPoset2 {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    triangles: Vec<Triangle>,
    triangles_of_edge: Vec<Vec<usize>>,
    edges_of_vertex: Vec<Vec<usize>>,
}

impl SimplicialPoset2 {
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<(String, [String; 2])>,
        triangles: Vec<(String, [String; 3])>,
    ) -> Result<Self, PosetError> {
        let violations = Self::violations(&vertices, &edges, &triangles);
        if !violations.is_empty() {
            return Err(PosetError::Invalid(violations));
        }
        let vidx: HashMap<String, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let eidx: HashMap<String, usize> =
            edges.iter().enumerate().map(|(i, (id, _))| (id.clone(), i)).collect();
        let edges: Vec<Edge> = edges
            .into_iter()
            .map(|(id, [a, b])| {
                let mut ends = [vidx[&a], vidx[&b]];
                ends.sort_unstable();
                Edge { id, ends }
            })
            .collect();
        let triangles: Vec<Triangle> = triangles
            .into_iter()
            .map(|(id, es)| {
                let mut eidx3 = [eidx[&es[0]], eidx[&es[1]], eidx[&es[2]]];
                eidx3.sort_unstable();
                let mut vs: Vec<usize> =
                    eidx3.iter().flat_map(|&e| edges[e].ends).collect();
                vs.sort_unstable();
                vs.dedup();
                Triangle { id, edges: eidx3, vertices: [vs[0], vs[1], vs[2]] }
            })
            .collect();
        let mut triangles_of_edge = vec![Vec::new(); edges.len()];
        for (ti, t) in triangles.iter().enumerate() {
            for &e in &t.edges {
                triangles_of_edge[e].push(ti);
            }
        }
        let mut edges_of_vertex = vec![Vec::new(); vertices.len()];
        for (ei, e) in edges.iter().enumerate() {
            edges_of_vertex[e.ends[0]].push(ei);
            edges_of_vertex[e.ends[1]].push(ei);
        }
        Ok(SimplicialPoset2 { vertices, edges, triangles, triangles_of_edge, edges_of_vertex })
    }

    /// All invariant violations of the raw data; empty iff valid.
    pub fn violations(
        vertices: &[String],
        edges: &[(String, [String; 2])],
        triangles: &[(String, [String; 3])],
    ) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut ids = HashSet::new();
        for id in vertices
            .iter()
            .chain(edges.iter().map(|(id, _)| id))
            .chain(triangles.iter().map(|(id, _)| id))
        {
            if !ids.insert(id.clone()) {
                out.push(Violation::DuplicateId(id.clone()));
            }
        }
        let vset: HashSet<&str> = vertices.iter().map(|s| s.as_str()).collect();
        let mut ends_of: HashMap<&str, [&str; 2]> = HashMap::new();
        for (id, [a, b]) in edges {
            let mut ok = true;
            for v in [a, b] {
                if !vset.contains(v.as_str()) {
                    out.push(Violation::UnknownVertex { edge: id.clone(), vertex: v.clone() });
                    ok = false;
                }
            }
            if a == b {
                out.push(Violation::LoopEdge { edge: id.clone() });
                ok = false;
            }
            if ok {
                ends_of.insert(id.as_str(), [a.as_str(), b.as_str()]);
            }
        }
        for (id, es) in triangles {
            if es[0] == es[1] || es[0] == es[2] || es[1] == es[2] {
                out.push(Violation::RepeatedEdge { triangle: id.clone() });
                continue;
            }
            let mut pairs = Vec::new();
            let mut ok = true;
            for e in es {
                match ends_of.get(e.as_str()) {
                    Some(&[a, b]) => {
                        let mut p = [a, b];
                        p.sort_unstable();
                        pairs.push(p);
                    }
                    None => {
                        out.push(Violation::UnknownEdge { triangle: id.clone(), edge: e.clone() });
                        ok = false;
                    }
                }
            }
            if !ok {
                continue;
            }
            let mut vs: Vec<&str> = pairs.iter().flatten().copied().collect();
            vs.sort_unstable();
            vs.dedup();
            pairs.sort_unstable();
            let spans = vs.len() == 3 && {
                let want =
                    [[vs[0], vs[1]], [vs[0], vs[2]], [vs[1], vs[2]]];
                let mut have = pairs.clone();
                have.dedup();
                have.len() == 3 && have == want
            };
            if !spans {
                out.push(Violation::NotBoolean { triangle: id.clone() });
            }
        }
        out
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }
    pub fn n_triangles(&self) -> usize {
        self.triangles.len()
    }
    pub fn vertex_ids(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(|s| s.as_str())
    }
    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }
    pub fn edge_id(&self, e: usize) -> &str {
        &self.edges[e].id
    }
    pub fn triangle_id(&self, t: usize) -> &str {
        &self.triangles[t].id
    }
    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }
    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }
    pub fn edge_ends(&self, e: usize) -> [usize; 2] {
        self.edges[e].ends
    }
    pub fn triangle_edges(&self, t: usize) -> [usize; 3] {
        self.triangles[t].edges
    }
    pub fn triangle_vertices(&self, t: usize) -> [usize; 3] {
        self.triangles[t].vertices
    }
    pub fn triangles_of_edge(&self, e: usize) -> &[usize] {
        &self.triangles_of_edge[e]
    }
    pub fn edges_of_vertex(&self, v: usize) -> &[usize] {
        &self.edges_of_vertex[v]
    }

    /// Edges joining `u` and `w` (there may be several).
    pub fn edges_between(&self, u: usize, w: usize) -> Vec<usize> {
        let mut p = [u, w];
        p.sort_unstable();
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.ends == p)
            .map(|(i, _)| i)
            .collect()
    }

    /// The facet edge of `t` other than `e1`, `e2`.
    pub fn third_edge(&self, t: usize, e1: usize, e2: usize) -> usize {
        *self.triangles[t]
            .edges
            .iter()
            .find(|&&e| e != e1 && e != e2)
            .expect("two distinct facets given")
    }

    pub fn is_graph(&self) -> bool {
        self.triangles.is_empty()
    }

    /// Pure 2-dimensional: every maximal simplex is a triangle.
    pub fn is_pure2(&self) -> bool {
        !self.triangles.is_empty()
            && self.triangles_of_edge.iter().all(|ts| !ts.is_empty())
            && self.edges_of_vertex.iter().all(|es| !es.is_empty())
    }

    /// Relation of the poset: elements are the edges, one triple per
    /// triangle (duplicate triangles collapse).
    pub fn ternary_relation(&self) -> TernaryRelation {
        let elements = self.edges.iter().map(|e| e.id.clone()).collect();
        let triples = self.triangles.iter().map(|t| t.edges);
        TernaryRelation::new(elements, triples).expect("validated poset yields a valid relation")
    }

    /// Relation of a bare graph: elements are vertices ⊔ edges, one triple
    /// `[v₁, e, v₂]` per edge.
    pub fn graph_relation(&self) -> Result<TernaryRelation, PosetError> {
        if !self.is_graph() {
            return Err(PosetError::NotAGraph(self.triangles.len()));
        }
        let nv = self.vertices.len();
        let elements: Vec<String> = self
            .vertices
            .iter()
            .cloned()
            .chain(self.edges.iter().map(|e| e.id.clone()))
            .collect();
        let triples = self
            .edges
            .iter()
            .enumerate()
            .map(|(ei, e)| [e.ends[0], nv + ei, e.ends[1]]);
        Ok(TernaryRelation::new(elements, triples)?)
    }

    /// 2-skeleton of the cone: a fresh apex, one spoke edge per vertex, and
    /// one new triangle {spoke(u), e, spoke(w)} per old edge. Old simplices
    /// of dimension ≤ 2 are kept. For a graph input this is exactly the
    /// cone construction.
    pub fn cone_skeleton2(&self) -> SimplicialPoset2 {
        let taken: HashSet<&str> = self
            .vertices
            .iter()
            .map(|s| s.as_str())
            .chain(self.edges.iter().map(|e| e.id.as_str()))
            .chain(self.triangles.iter().map(|t| t.id.as_str()))
            .collect();
        let fresh = |base: String| -> String {
            if !taken.contains(base.as_str()) {
                return base;
            }
            let mut k = 1;
            loop {
                let cand = format!("{base}_{k}");
                if !taken.contains(cand.as_str()) {
                    return cand;
                }
                k += 1;
            }
        };

        let apex = fresh("v0".to_string());
        let mut vertices = self.vertices.clone();
        vertices.push(apex.clone());

        let mut edges: Vec<(String, [String; 2])> = self
            .edges
            .iter()
            .map(|e| {
                (e.id.clone(), [self.vertices[e.ends[0]].clone(), self.vertices[e.ends[1]].clone()])
            })
            .collect();
        let mut spoke = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            let id = fresh(format!("s_{v}"));
            edges.push((id.clone(), [v.clone(), apex.clone()]));
            spoke.push(id);
        }

        let mut triangles: Vec<(String, [String; 3])> = self
            .triangles
            .iter()
            .map(|t| {
                (
                    t.id.clone(),
                    [
                        self.edges[t.edges[0]].id.clone(),
                        self.edges[t.edges[1]].id.clone(),
                        self.edges[t.edges[2]].id.clone(),
                    ],
                )
            })
            .collect();
        for e in &self.edges {
            let id = fresh(format!("c_{}", e.id));
            triangles.push((id, [spoke[e.ends[0]].clone(), e.id.clone(), spoke[e.ends[1]].clone()]));
        }

        SimplicialPoset2::new(vertices, edges, triangles).expect("cone of a valid poset is valid")
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    id: e.id.clone(),
                    ends: [self.vertices[e.ends[0]].clone(), self.vertices[e.ends[1]].clone()],
                })
                .collect(),
            triangles: self
                .triangles
                .iter()
                .map(|t| TriangleJson {
                    id: t.id.clone(),
                    edges: [
                        self.edges[t.edges[0]].id.clone(),
                        self.edges[t.edges[1]].id.clone(),
                        self.edges[t.edges[2]].id.clone(),
                    ],
                })
                .collect(),
        }
    }
}

/// 2-skeleton of the boolean lattice on `n` atoms: the complete graph Kₙ
/// with one triangle per vertex triple.
pub fn complete_skeleton(n: usize) -> SimplicialPoset2 {
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((format!("e{i}_{j}"), [format!("v{i}"), format!("v{j}")]));
        }
    }
    let mut triangles = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                triangles.push((
                    format!("t{i}_{j}_{k}"),
                    [format!("e{i}_{j}"), format!("e{j}_{k}"), format!("e{i}_{k}")],
                ));
            }
        }
    }
    SimplicialPoset2::new(vertices, edges, triangles).expect("complete skeleton is valid")
}

/// Doubled complete skeleton: two parallel edges `e{i}_{j}` / `E{i}_{j}`
/// per vertex pair, and the triangles with an even number of capital
/// edges: `t{i}_{j}_{k}` on {e_ij, e_jk, e_ik} and `T{i}_{j}_{k}` on
/// {E_ij, E_ik, e_jk}.
pub fn doubled_skeleton(n: usize) -> Result<SimplicialPoset2, PosetError> {
    if n < 2 {
        return Err(PosetError::DoubledTooSmall(n));
    }
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((minus_edge(i, j), [format!("v{i}"), format!("v{j}")]));
            edges.push((plus_edge(i, j), [format!("v{i}"), format!("v{j}")]));
        }
    }
    let mut triangles = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                triangles.push((
                    format!("t{i}_{j}_{k}"),
                    [minus_edge(i, j), minus_edge(j, k), minus_edge(i, k)],
                ));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in j + 1..=n {
                if i == j || i == k {
                    continue;
                }
                triangles.push((
                    format!("T{i}_{j}_{k}"),
                    [plus_edge(i, j), plus_edge(i, k), minus_edge(j, k)],
                ));
            }
        }
    }
    SimplicialPoset2::new(vertices, edges, triangles)
}

pub fn minus_edge(i: usize, j: usize) -> String {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    format!("e{i}_{j}")
}

pub fn plus_edge(i: usize, j: usize) -> String {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    format!("E{i}_{j}")
}

/// Wire form of a poset; a graph is the same schema with an empty (or
/// omitted) triangle list.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetJson {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
    #[serde(default)]
    pub triangles: Vec<TriangleJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: String,
    pub ends: [String; 2],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TriangleJson {
    pub id: String,
    pub edges: [String; 3],
}

impl TryFrom<PosetJson> for SimplicialPoset2 {
    type Error = PosetError;

    fn try_from(j: PosetJson) -> Result<Self, Self::Error> {
        SimplicialPoset2::new(
            j.vertices,
            j.edges.into_iter().map(|e| (e.id, e.ends)).collect(),
            j.triangles.into_iter().map(|t| (t.id, t.edges)).collect(),
        )
    }
}

/// A ±-symmetric configuration of rational vectors, one representative per
/// ± pair.
#[derive(Debug, Clone)]
pub struct VectorConfiguration {
    dim: usize,
    labels: Vec<String>,
    vectors: Vec<Vec<Rat>>,
}

impl VectorConfiguration {
    pub fn new(
        dim: usize,
        entries: impl IntoIterator<Item = (String, Vec<Rat>)>,
    ) -> Result<Self, PosetError> {
        let mut labels = Vec::new();
        let mut vectors: Vec<Vec<Rat>> = Vec::new();
        let mut seen = HashSet::new();
        for (label, v) in entries {
            if v.len() != dim {
                return Err(PosetError::BadConfiguration(format!(
                    "vector {label:?} has length {}, expected {dim}",
                    v.len()
                )));
            }
            if v.iter().all(|x| x == &Rat::from_integer(0.into())) {
                return Err(PosetError::BadConfiguration(format!("vector {label:?} is zero")));
            }
            if !seen.insert(label.clone()) {
                return Err(PosetError::BadConfiguration(format!("duplicate label {label:?}")));
            }
            for (other_label, other) in labels.iter().zip(&vectors) {
                let neg: Vec<Rat> = other.iter().map(|x: &Rat| -x.clone()).collect();
                if *other == v || neg == v {
                    return Err(PosetError::BadConfiguration(format!(
                        "vectors {other_label:?} and {label:?} lie on the same ± pair"
                    )));
                }
            }
            labels.push(label);
            vectors.push(v);
        }
        Ok(VectorConfiguration { dim, labels, vectors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn len(&self) -> usize {
        self.vectors.len()
    }
    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.vectors
    }

    /// Relation with a triple `[i, j, k]` whenever `±αᵢ ±αⱼ ±αₖ = 0` for
    /// some distribution of signs (four sign classes up to global negation).
    pub fn ternary_relation(&self) -> TernaryRelation {
        let n = self.len();
        let mut triples = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.signed_sum_vanishes(i, j, k) {
                        triples.push([i, j, k]);
                    }
                }
            }
        }
        TernaryRelation::new(self.labels.clone(), triples)
            .expect("configuration labels are unique")
    }

    fn signed_sum_vanishes(&self, i: usize, j: usize, k: usize) -> bool {
        let (a, b, c) = (&self.vectors[i], &self.vectors[j], &self.vectors[k]);
        for (sj, sk) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let zero = (0..self.dim).all(|d| {
                let mut x = a[d].clone();
                x = if sj > 0 { x + b[d].clone() } else { x - b[d].clone() };
                x = if sk > 0 { x + c[d].clone() } else { x - c[d].clone() };
                x == Rat::from_integer(0.into())
            });
            if zero {
                return true;
            }
        }
        false
    }

    pub fn to_json(&self) -> VectorConfigurationJson {
        VectorConfigurationJson {
            dim: self.dim,
            vectors: self
                .labels
                .iter()
                .zip(&self.vectors)
                .map(|(l, v)| (l.clone(), v.iter().map(|x| x.to_string()).collect()))
                .collect(),
        }
    }
}

/// Wire form; rationals as strings, vectors keyed (and ordered) by label.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VectorConfigurationJson {
    pub dim: usize,
    pub vectors: BTreeMap<String, Vec<String>>,
}

impl TryFrom<VectorConfigurationJson> for VectorConfiguration {
    type Error = PosetError;

    fn try_from(j: VectorConfigurationJson) -> Result<Self, Self::Error> {
        let mut entries = Vec::new();
        for (label, coords) in j.vectors {
            let mut v = Vec::with_capacity(coords.len());
            for c in coords {
                v.push(Rat::from_str(&c).map_err(|_| PosetError::BadRational(c.clone()))?);
            }
            entries.push((label, v));
        }
        VectorConfiguration::new(j.dim, entries)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootSystemKind {
    A,
    B,
    D,
}

impl fmt::Display for RootSystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSystemKind::A => write!(f, "A"),
            RootSystemKind::B => write!(f, "B"),
            RootSystemKind::D => write!(f, "D"),
        }
    }
}

impl FromStr for RootSystemKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(RootSystemKind::A),
            "B" | "b" => Ok(RootSystemKind::B),
            "D" | "d" => Ok(RootSystemKind::D),
            other => Err(format!("unknown root system kind {other:?} (expected A, B or D)")),
        }
    }
}

/// Classical root systems, one representative per ± pair:
/// Aₙ = {εᵢ−εⱼ} ⊂ Qⁿ⁺¹, Dₙ = {εᵢ−εⱼ, εᵢ+εⱼ} ⊂ Qⁿ,
/// Bₙ = Dₙ ⊔ {εᵢ} ⊂ Qⁿ.
pub fn root_system(kind: RootSystemKind, n: usize) -> Result<VectorConfiguration, PosetError> {
    let min = match kind {
        RootSystemKind::A => 1,
        RootSystemKind::B | RootSystemKind::D => 2,
    };
    if n < min {
        return Err(PosetError::BadRootSystemRank { kind, n, min });
    }
    let dim = match kind {
        RootSystemKind::A => n + 1,
        _ => n,
    };
    let unit = |i: usize, sign: i64| -> Vec<Rat> {
        let mut v = vec![Rat::from_integer(0.into()); dim];
        v[i] = Rat::from_integer(sign.into());
        v
    };
    let sum = |a: Vec<Rat>, b: Vec<Rat>| -> Vec<Rat> {
        a.into_iter().zip(b).map(|(x, y)| x + y).collect()
    };
    let mut entries = Vec::new();
    match kind {
        RootSystemKind::A => {
            for i in 0..dim {
                for j in i + 1..dim {
                    entries.push((format!("a{}_{}", i + 1, j + 1), sum(unit(i, 1), unit(j, -1))));
                }
            }
        }
        RootSystemKind::D | RootSystemKind::B => {
            for i in 0..dim {
                for j in i + 1..dim {
                    entries.push((format!("m{}_{}", i + 1, j + 1), sum(unit(i, 1), unit(j, -1))));
                    entries.push((format!("p{}_{}", i + 1, j + 1), sum(unit(i, 1), unit(j, 1))));
                }
            }
            if kind == RootSystemKind::B {
                for i in 0..dim {
                    entries.push((format!("u{}", i + 1), unit(i, 1)));
                }
            }
        }
    }
    VectorConfiguration::new(dim, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_skeleton_counts() {
        for (n, e, t) in [(3usize, 3usize, 1usize), (4, 6, 4), (5, 10, 10)] {
            let p = complete_skeleton(n);
            assert_eq!((p.n_vertices(), p.n_edges(), p.n_triangles()), (n, e, t));
            assert!(SimplicialPoset2::violations(
                &p.to_json().vertices,
                &p.to_json().edges.into_iter().map(|e| (e.id, e.ends)).collect::<Vec<_>>(),
                &p.to_json().triangles.into_iter().map(|t| (t.id, t.edges)).collect::<Vec<_>>(),
            )
            .is_empty());
        }
    }

    #[test]
    fn doubled_skeleton_counts() {
        let p = doubled_skeleton(3).unwrap();
        assert_eq!((p.n_vertices(), p.n_edges(), p.n_triangles()), (3, 6, 4));
        let p = doubled_skeleton(4).unwrap();
        assert_eq!((p.n_vertices(), p.n_edges(), p.n_triangles()), (4, 12, 16));
        let p = doubled_skeleton(2).unwrap();
        assert_eq!((p.n_vertices(), p.n_edges(), p.n_triangles()), (2, 2, 0));
        assert!(doubled_skeleton(1).is_err());
    }

    #[test]
    fn doubled_triples_at_three() {
        let rel = doubled_skeleton(3).unwrap().ternary_relation();
        assert_eq!(rel.triples().len(), 4);
    }

    #[test]
    fn invalid_triangle_two_vertices() {
        // three edges over only two vertices cannot span a 3-set
        let violations = SimplicialPoset2::violations(
            &["v1".into(), "v2".into()],
            &[
                ("a".into(), ["v1".into(), "v2".into()]),
                ("b".into(), ["v1".into(), "v2".into()]),
                ("c".into(), ["v1".into(), "v2".into()]),
            ],
            &[("t".into(), ["a".into(), "b".into(), "c".into()])],
        );
        assert!(violations.iter().any(|v| matches!(v, Violation::NotBoolean { .. })));
    }

    #[test]
    fn cone_over_single_edge() {
        let g = SimplicialPoset2::new(
            vec!["v1".into(), "v2".into()],
            vec![("e".into(), ["v1".into(), "v2".into()])],
            vec![],
        )
        .unwrap();
        let c = g.cone_skeleton2();
        assert_eq!((c.n_vertices(), c.n_edges(), c.n_triangles()), (3, 3, 1));
    }

    #[test]
    fn cone_over_parallel_edges() {
        let g = SimplicialPoset2::new(
            vec!["v1".into(), "v2".into()],
            vec![
                ("e1".into(), ["v1".into(), "v2".into()]),
                ("e2".into(), ["v1".into(), "v2".into()]),
            ],
            vec![],
        )
        .unwrap();
        let c = g.cone_skeleton2();
        assert_eq!((c.n_vertices(), c.n_edges(), c.n_triangles()), (3, 4, 2));
    }

    #[test]
    fn cone_of_doubled_counts() {
        for n in 2..=4 {
            let kbar = doubled_skeleton(n).unwrap();
            let c = kbar.cone_skeleton2();
            assert_eq!(c.n_vertices(), n + 1);
            assert_eq!(c.n_edges(), n * (n - 1) + n);
            assert_eq!(c.n_triangles(), kbar.n_triangles() + n * (n - 1));
        }
    }

    #[test]
    fn root_system_sizes() {
        assert_eq!(root_system(RootSystemKind::A, 2).unwrap().len(), 3);
        assert_eq!(root_system(RootSystemKind::D, 3).unwrap().len(), 6);
        assert_eq!(root_system(RootSystemKind::B, 2).unwrap().len(), 4);
        assert!(root_system(RootSystemKind::A, 0).is_err());
        assert!(root_system(RootSystemKind::D, 1).is_err());
    }

    #[test]
    fn a2_single_triple() {
        let rel = root_system(RootSystemKind::A, 2).unwrap().ternary_relation();
        assert_eq!(rel.triples(), &[[0, 1, 2]]);
    }

    #[test]
    fn orthogonal_basis_no_triples() {
        let cfg = VectorConfiguration::new(
            3,
            (0..3).map(|i| {
                let mut v = vec![Rat::from_integer(0.into()); 3];
                v[i] = Rat::from_integer(1.into());
                (format!("u{i}"), v)
            }),
        )
        .unwrap();
        assert!(cfg.ternary_relation().triples().is_empty());
    }

    #[test]
    fn b2_has_two_triples() {
        let rel = root_system(RootSystemKind::B, 2).unwrap().ternary_relation();
        assert_eq!(rel.triples().len(), 2);
        assert_eq!(rel.dual_cone_rows().len(), 6);
    }

    #[test]
    fn graph_relation_matches_edge_count() {
        let g = complete_skeleton(2); // a single edge
        let rel = g.graph_relation().unwrap();
        assert_eq!(rel.n(), 3);
        assert_eq!(rel.triples().len(), 1);
        assert!(complete_skeleton(3).graph_relation().is_err());
    }

    #[test]
    fn purity_flags() {
        assert!(complete_skeleton(3).is_pure2());
        assert!(!complete_skeleton(2).is_pure2());
        let mut j = complete_skeleton(3).to_json();
        j.vertices.push("lonely".into());
        let p = SimplicialPoset2::try_from(j).unwrap();
        assert!(!p.is_pure2());
    }
}
