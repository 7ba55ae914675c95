//! Vertices, paths, cycles, difference multisets, translates and orbits.
//!
//! Two vertex domains are used throughout: the 2-pyramidal one, where the
//! vertex set is a group G together with the two fixed points `inf` and
//! `inf'`, and the semiregular bipartite one, whose vertices are pairs
//! (z, side) with z a residue mod w.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::group::{GroupElement, GroupSpec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("repeated vertex {0}")]
    RepeatedVertex(Vertex),
    #[error("vertex {0} does not belong to {1}")]
    WrongGroup(Vertex, GroupSpec),
    #[error("bipartite vertex {0} in a group-difference context; use oriented_delta")]
    BipartiteInDelta(Vertex),
    #[error("vertex {0} is not a bipartite vertex mod {1}")]
    NotBipartite(Vertex, u32),
    #[error("sides do not alternate at vertex {0}")]
    SidesNotAlternating(Vertex),
    #[error("empty path")]
    EmptyPath,
}

/// A point of a host graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Group(GroupElement),
    Infty,
    InftyPrime,
    /// (z, side) on Z_w x Z_2; the modulus w is carried by the context.
    Bi { z: u32, side: u8 },
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Group(g) => write!(f, "{g}"),
            Vertex::Infty => write!(f, "inf"),
            Vertex::InftyPrime => write!(f, "inf'"),
            Vertex::Bi { z, side } => write!(f, "{z}@{side}"),
        }
    }
}

/// A cycle, stored in canonical form: the lexicographically minimal sequence
/// over all rotations and both traversal directions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    verts: Vec<Vertex>,
}

impl Cycle {
    pub fn new(verts: Vec<Vertex>) -> Result<Cycle, CycleError> {
        if verts.len() < 3 {
            return Err(CycleError::TooShort(verts.len()));
        }
        let mut seen = BTreeSet::new();
        for v in &verts {
            if !seen.insert(*v) {
                return Err(CycleError::RepeatedVertex(*v));
            }
        }
        Ok(Cycle { verts: canonical_rotation(&verts) })
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.verts.contains(v)
    }

    /// Adjacent pairs, including the wrap-around edge.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.verts.len();
        (0..n).map(move |i| (self.verts[i], self.verts[(i + 1) % n]))
    }
}

/// Minimal sequence over all rotations in both directions.
fn canonical_rotation(verts: &[Vertex]) -> Vec<Vertex> {
    let n = verts.len();
    let mut best: Option<Vec<Vertex>> = None;
    let mut consider = |cand: Vec<Vertex>| {
        if best.as_ref().map_or(true, |b| cand < *b) {
            best = Some(cand);
        }
    };
    for start in 0..n {
        let fwd: Vec<Vertex> = (0..n).map(|i| verts[(start + i) % n]).collect();
        let rev: Vec<Vertex> = (0..n).map(|i| verts[(start + n - i) % n]).collect();
        consider(fwd);
        consider(rev);
    }
    best.unwrap()
}

/// A path on one or more distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    verts: Vec<Vertex>,
}

impl Path {
    pub fn new(verts: Vec<Vertex>) -> Result<Path, CycleError> {
        if verts.is_empty() {
            return Err(CycleError::EmptyPath);
        }
        let mut seen = BTreeSet::new();
        for v in &verts {
            if !seen.insert(*v) {
                return Err(CycleError::RepeatedVertex(*v));
            }
        }
        Ok(Path { verts })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.verts.windows(2).map(|w| (w[0], w[1]))
    }
}

/// A multiset of group elements with explicit multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiffMultiset {
    counts: BTreeMap<GroupElement, u32>,
}

impl DiffMultiset {
    pub fn new() -> DiffMultiset {
        DiffMultiset::default()
    }

    pub fn insert(&mut self, g: GroupElement) {
        self.insert_times(g, 1);
    }

    pub fn insert_times(&mut self, g: GroupElement, k: u32) {
        if k > 0 {
            *self.counts.entry(g).or_insert(0) += k;
        }
    }

    pub fn extend(&mut self, other: &DiffMultiset) {
        for (g, k) in &other.counts {
            self.insert_times(*g, *k);
        }
    }

    pub fn multiplicity(&self, g: &GroupElement) -> u32 {
        self.counts.get(g).copied().unwrap_or(0)
    }

    pub fn support(&self) -> BTreeSet<GroupElement> {
        self.counts.keys().copied().collect()
    }

    /// Total count, with multiplicities.
    pub fn total(&self) -> u32 {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupElement, &u32)> {
        self.counts.iter()
    }
}

fn group_vertex(v: Vertex, spec: &GroupSpec) -> Result<Option<GroupElement>, CycleError> {
    match v {
        Vertex::Group(g) if g.spec() == *spec => Ok(Some(g)),
        Vertex::Group(_) => Err(CycleError::WrongGroup(v, *spec)),
        Vertex::Infty | Vertex::InftyPrime => Ok(None),
        Vertex::Bi { .. } => Err(CycleError::BipartiteInDelta(v)),
    }
}

fn delta_edges<I>(edges: I, spec: &GroupSpec) -> Result<DiffMultiset, CycleError>
where
    I: Iterator<Item = (Vertex, Vertex)>,
{
    let mut out = DiffMultiset::new();
    for (a, b) in edges {
        let (ga, gb) = (group_vertex(a, spec)?, group_vertex(b, spec)?);
        if let (Some(ga), Some(gb)) = (ga, gb) {
            // Right quotient a*b^{-1}; invariant under right translation.
            let d = ga.compose(&gb.inverse()).expect("same spec");
            out.insert(d);
            out.insert(d.inverse());
        }
    }
    Ok(out)
}

/// The list of differences of a cycle: the multiset of +-(x - y) (or right
/// quotients x*y^{-1} for dihedral groups) over adjacent non-infinity
/// vertices. Edges touching `inf` or `inf'` contribute nothing.
pub fn delta(c: &Cycle, spec: &GroupSpec) -> Result<DiffMultiset, CycleError> {
    delta_edges(c.edges(), spec)
}

/// The list of differences of a path (no wrap-around edge).
pub fn delta_path(p: &Path, spec: &GroupSpec) -> Result<DiffMultiset, CycleError> {
    delta_edges(p.edges(), spec)
}

/// The list of oriented differences of a bipartite cycle: for every edge
/// {(g,1),(h,0)} the value g - h mod w, recorded as an element of Z_w.
pub fn oriented_delta(c: &Cycle, w: u32) -> Result<DiffMultiset, CycleError> {
    let zw = GroupSpec::cyclic(w);
    let mut out = DiffMultiset::new();
    for (a, b) in c.edges() {
        let (za, sa) = match a {
            Vertex::Bi { z, side } if z < w => (z, side),
            _ => return Err(CycleError::NotBipartite(a, w)),
        };
        let (zb, sb) = match b {
            Vertex::Bi { z, side } if z < w => (z, side),
            _ => return Err(CycleError::NotBipartite(b, w)),
        };
        if sa == sb {
            return Err(CycleError::SidesNotAlternating(b));
        }
        let (g, h) = if sa == 1 { (za, zb) } else { (zb, za) };
        out.insert(zw.element(i64::from(g) - i64::from(h), false));
    }
    Ok(out)
}

/// The translate of a cycle by g: group vertices are right-multiplied by g,
/// `inf` and `inf'` are fixed, bipartite vertices get g added to their
/// residue on both sides (g must then be cyclic of order w).
pub fn translate(c: &Cycle, g: &GroupElement) -> Result<Cycle, CycleError> {
    let mut verts = Vec::with_capacity(c.len());
    for v in c.vertices() {
        let moved = match *v {
            Vertex::Group(x) => {
                if x.spec() != g.spec() {
                    return Err(CycleError::WrongGroup(*v, g.spec()));
                }
                Vertex::Group(x.compose(g).expect("same spec"))
            }
            Vertex::Infty => Vertex::Infty,
            Vertex::InftyPrime => Vertex::InftyPrime,
            Vertex::Bi { z, side } => match g.spec() {
                GroupSpec::Cyclic { n } if z < n => {
                    Vertex::Bi { z: (z + g.rot()) % n, side }
                }
                spec => return Err(CycleError::WrongGroup(*v, spec)),
            },
        };
        verts.push(moved);
    }
    Cycle::new(verts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitClass {
    /// Fixed by some non-identity translation; |orbit| < |G|.
    Short,
    Long,
}

/// All distinct translates of `c` under `spec`, together with the
/// short/long classification.
pub fn orbit(c: &Cycle, spec: &GroupSpec) -> Result<(Vec<Cycle>, OrbitClass), CycleError> {
    let mut seen = BTreeSet::new();
    for g in spec.elements() {
        seen.insert(translate(c, &g)?);
    }
    let class = if seen.len() < spec.order() as usize {
        OrbitClass::Short
    } else {
        OrbitClass::Long
    };
    Ok((seen.into_iter().collect(), class))
}
