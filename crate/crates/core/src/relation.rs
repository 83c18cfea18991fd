//! Ternary relations: element sets with unordered triples of distinct
//! elements, their signed generator points, the dual-cone inequality
//! system, and isomorphism testing.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::num::int;
use crate::Int;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RelationError {
    #[error("duplicate element id {0:?}")]
    DuplicateElement(String),
    #[error("unknown element id {0:?} in triple")]
    UnknownElement(String),
    #[error("triple index {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("triple {0:?} repeats an element")]
    RepeatedIndex([usize; 3]),
}

/// A finite element set with a set of unordered triples of distinct
/// elements.  Triples are stored sorted and deduplicated; all operations
/// work on dense indices into `elements`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryRelation {
    elements: Vec<String>,
    triples: Vec<[usize; 3]>,
}

impl TernaryRelation {
    pub fn new(
        elements: Vec<String>,
        triples: impl IntoIterator<Item = [usize; 3]>,
    ) -> Result<Self, RelationError> {
        let n = elements.len();
        let mut seen = HashSet::new();
        for e in &elements {
            if !seen.insert(e.clone()) {
                return Err(RelationError::DuplicateElement(e.clone()));
            }
        }
        let mut canon: Vec<[usize; 3]> = Vec::new();
        for mut t in triples {
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(RelationError::RepeatedIndex(t));
            }
            if t[2] >= n {
                return Err(RelationError::IndexOutOfRange { index: t[2], n });
            }
            canon.push(t);
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(TernaryRelation { elements, triples: canon })
    }

    pub fn from_named(
        elements: Vec<String>,
        triples: impl IntoIterator<Item = [String; 3]>,
    ) -> Result<Self, RelationError> {
        let index: HashMap<&str, usize> =
            elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
        let mut idx_triples = Vec::new();
        for t in triples {
            let mut it = [0usize; 3];
            for (slot, name) in it.iter_mut().zip(t.iter()) {
                *slot = *index
                    .get(name.as_str())
                    .ok_or_else(|| RelationError::UnknownElement(name.clone()))?;
            }
            idx_triples.push(it);
        }
        Self::new(elements, idx_triples)
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn n(&self) -> usize {
        self.elements.len()
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    /// Number of triples each element sits in.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n()];
        for t in &self.triples {
            for &i in t {
                d[i] += 1;
            }
        }
        d
    }

    /// The signed 0/±1 generator points, deduplicated and sorted
    /// lexicographically by coordinates.
    pub fn generator_points(&self) -> Vec<GeneratorPoint> {
        let n = self.n();
        let mut pts: Vec<GeneratorPoint> = Vec::with_capacity(3 * self.triples.len());
        for (ti, t) in self.triples.iter().enumerate() {
            for (pos, &neg) in t.iter().enumerate() {
                let mut coords = vec![Int::from(0); n];
                for &i in t {
                    coords[i] = if i == neg { int(-1) } else { int(1) };
                }
                pts.push(GeneratorPoint { coords, source: (ti, pos) });
            }
        }
        pts.sort_by(|a, b| a.coords.cmp(&b.coords).then(a.source.cmp(&b.source)));
        pts.dedup_by(|a, b| a.coords == b.coords);
        pts
    }

    /// Integer inequality rows of the dual cone: one row `x_i + x_j − x_k ≥ 0`
    /// per (triple, negated element), canonically sorted and deduplicated.
    pub fn dual_cone_rows(&self) -> Vec<Vec<Int>> {
        let mut rows: Vec<Vec<Int>> = self
            .generator_points()
            .into_iter()
            .map(|p| p.coords)
            .collect();
        rows.sort();
        rows.dedup();
        rows
    }

    /// Search for a bijection sending the triples of `self` onto the triples
    /// of `other`; returns the first witness in lexicographic backtracking
    /// order, as a map from self-indices to other-indices.
    pub fn isomorphism_to(&self, other: &TernaryRelation) -> Option<Vec<usize>> {
        iso_search(self, other)
    }

    /// Canonical JSON form: elements and name-triples sorted lexicographically.
    pub fn to_json(&self) -> RelationJson {
        let mut elements = self.elements.clone();
        elements.sort();
        let mut triples: Vec<[String; 3]> = self
            .triples
            .iter()
            .map(|t| {
                let mut names =
                    [self.elements[t[0]].clone(), self.elements[t[1]].clone(), self.elements[t[2]].clone()];
                names.sort();
                names
            })
            .collect();
        triples.sort();
        RelationJson { elements, triples }
    }
}

/// Wire form of a relation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationJson {
    pub elements: Vec<String>,
    pub triples: Vec<[String; 3]>,
}

impl TryFrom<RelationJson> for TernaryRelation {
    type Error = RelationError;

    fn try_from(j: RelationJson) -> Result<Self, Self::Error> {
        TernaryRelation::from_named(j.elements, j.triples)
    }
}

/// One generator point `1_i + 1_j − 1_k` of a triple, tagged with the triple
/// index and the position of the negated element inside the sorted triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorPoint {
    pub coords: Vec<Int>,
    pub source: (usize, usize),
}

/// Pair profile: number of triples containing both elements. Used to prune
/// the isomorphism backtracking; the worst case stays exponential but the
/// relations this crate builds collapse quickly.
struct IsoContext<'a> {
    a: &'a TernaryRelation,
    b: &'a TernaryRelation,
    deg_a: Vec<usize>,
    deg_b: Vec<usize>,
    pair_a: HashMap<(usize, usize), usize>,
    pair_b: HashMap<(usize, usize), usize>,
    triples_b: HashSet<[usize; 3]>,
    tri_of_a: Vec<Vec<usize>>,
}

fn pair_counts(r: &TernaryRelation) -> HashMap<(usize, usize), usize> {
    let mut m = HashMap::new();
    for t in r.triples() {
        for (x, y) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            *m.entry((x, y)).or_insert(0) += 1;
        }
    }
    m
}

fn iso_search(a: &TernaryRelation, b: &TernaryRelation) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.triples().len() != b.triples().len() {
        return None;
    }
    let deg_a = a.degrees();
    let deg_b = b.degrees();
    let mut da = deg_a.clone();
    let mut db = deg_b.clone();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let mut tri_of_a = vec![Vec::new(); a.n()];
    for (ti, t) in a.triples().iter().enumerate() {
        for &i in t {
            tri_of_a[i].push(ti);
        }
    }
    let ctx = IsoContext {
        a,
        b,
        deg_a,
        deg_b,
        pair_a: pair_counts(a),
        pair_b: pair_counts(b),
        triples_b: b.triples().iter().copied().collect(),
        tri_of_a,
    };
    let mut map = vec![usize::MAX; a.n()];
    let mut used = vec![false; b.n()];
    if extend(&ctx, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(ctx: &IsoContext, next: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    if next == ctx.a.n() {
        return true;
    }
    'candidates: for y in 0..ctx.b.n() {
        if used[y] || ctx.deg_a[next] != ctx.deg_b[y] {
            continue;
        }
        for x in 0..next {
            let ca = ctx.pair_a.get(&key(next, x)).copied().unwrap_or(0);
            let cb = ctx.pair_b.get(&key(y, map[x])).copied().unwrap_or(0);
            if ca != cb {
                continue 'candidates;
            }
        }
        // triples of `a` fully assigned once `next` is mapped must land in R_b
        for &ti in &ctx.tri_of_a[next] {
            let t = ctx.a.triples()[ti];
            if t.iter().all(|&i| i == next || map[i] != usize::MAX) {
                let mut img = t.map(|i| if i == next { y } else { map[i] });
                img.sort_unstable();
                if !ctx.triples_b.contains(&img) {
                    continue 'candidates;
                }
            }
        }
        map[next] = y;
        used[y] = true;
        if extend(ctx, next + 1, map, used) {
            return true;
        }
        map[next] = usize::MAX;
        used[y] = false;
    }
    false
}

fn key(x: usize, y: usize) -> (usize, usize) {
    if x < y {
        (x, y)
    } else {
        (y, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(names: &[&str], triples: &[[&str; 3]]) -> TernaryRelation {
        TernaryRelation::from_named(
            names.iter().map(|s| s.to_string()).collect(),
            triples
                .iter()
                .map(|t| [t[0].to_string(), t[1].to_string(), t[2].to_string()]),
        )
        .unwrap()
    }

    #[test]
    fn rejects_repeated_index() {
        let err = TernaryRelation::new(vec!["a".into(), "b".into()], [[0, 0, 1]]).unwrap_err();
        assert_eq!(err, RelationError::RepeatedIndex([0, 0, 1]));
    }

    #[test]
    fn single_triple_generators() {
        let r = rel(&["a", "b", "c"], &[["a", "b", "c"]]);
        let pts = r.generator_points();
        let coords: Vec<Vec<i64>> = pts
            .iter()
            .map(|p| p.coords.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect();
        assert_eq!(coords, vec![vec![-1, 1, 1], vec![1, -1, 1], vec![1, 1, -1]]);
        for p in &pts {
            let sum: Int = p.coords.iter().sum();
            assert_eq!(sum, Int::from(1));
        }
    }

    #[test]
    fn empty_relation_yields_nothing() {
        let r = rel(&["a", "b", "c"], &[]);
        assert!(r.generator_points().is_empty());
        assert!(r.dual_cone_rows().is_empty());
    }

    #[test]
    fn dual_rows_for_one_triple() {
        let r = rel(&["a", "b", "c"], &[["a", "b", "c"]]);
        let rows = r.dual_cone_rows();
        assert_eq!(rows.len(), 3);
    }

    #[test]
    fn identity_isomorphism_found() {
        let r = rel(&["a", "b", "c", "d"], &[["a", "b", "c"], ["b", "c", "d"]]);
        let m = r.isomorphism_to(&r).unwrap();
        assert_eq!(m, vec![0, 1, 2, 3]);
    }

    #[test]
    fn triple_count_mismatch_rejected() {
        let r1 = rel(&["a", "b", "c"], &[["a", "b", "c"]]);
        let r2 = rel(&["a", "b", "c"], &[]);
        assert!(r1.isomorphism_to(&r2).is_none());
    }

    #[test]
    fn witness_maps_triples_onto_triples() {
        // same shape, scrambled names
        let r1 = rel(&["a", "b", "c", "d"], &[["a", "b", "c"], ["a", "b", "d"]]);
        let r2 = rel(&["w", "x", "y", "z"], &[["z", "y", "w"], ["y", "z", "x"]]);
        let m = r1.isomorphism_to(&r2).unwrap();
        let tb: HashSet<[usize; 3]> = r2.triples().iter().copied().collect();
        for t in r1.triples() {
            let mut img = t.map(|i| m[i]);
            img.sort_unstable();
            assert!(tb.contains(&img));
        }
    }

    #[test]
    fn canonical_json_sorted() {
        let r = rel(&["z", "a", "m"], &[["z", "m", "a"]]);
        let j = r.to_json();
        assert_eq!(j.elements, vec!["a", "m", "z"]);
        assert_eq!(j.triples, vec![["a".to_string(), "m".into(), "z".into()]]);
    }
}
