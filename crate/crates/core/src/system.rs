//! Label-level cycle systems: the common currency of the verifier, the
//! gluing construction and the serialization layer.
//!
//! Construction output is always re-expressed over integer labels so that
//! systems built over different groups can be combined and checked with one
//! edge-level machinery.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SystemError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("repeated label {0} in cycle")]
    RepeatedLabel(u32),
}

/// A cycle over integer labels, stored in canonical form (minimal rotation,
/// either direction).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledCycle {
    verts: Vec<u32>,
}

impl LabeledCycle {
    pub fn new(verts: Vec<u32>) -> Result<LabeledCycle, SystemError> {
        if verts.len() < 3 {
            return Err(SystemError::TooShort(verts.len()));
        }
        let mut seen = BTreeSet::new();
        for &v in &verts {
            if !seen.insert(v) {
                return Err(SystemError::RepeatedLabel(v));
            }
        }
        Ok(LabeledCycle { verts: canonical(&verts) })
    }

    /// No distinctness check and no canonicalization guarantee loss: the
    /// sequence is still canonicalized, but repeated labels are allowed.
    /// Used by the mutation tests; the verifier reports such cycles as
    /// malformed instead of rejecting them up front.
    pub fn new_unchecked(verts: Vec<u32>) -> LabeledCycle {
        LabeledCycle { verts: canonical(&verts) }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn vertices(&self) -> &[u32] {
        &self.verts
    }

    pub fn vertex_set(&self) -> BTreeSet<u32> {
        self.verts.iter().copied().collect()
    }

    pub fn is_well_formed(&self) -> bool {
        self.verts.len() >= 3 && self.vertex_set().len() == self.verts.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let n = self.verts.len();
        (0..n).map(move |i| (self.verts[i], self.verts[(i + 1) % n]))
    }
}

fn canonical(verts: &[u32]) -> Vec<u32> {
    let n = verts.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<u32>> = None;
    for start in 0..n {
        let fwd: Vec<u32> = (0..n).map(|i| verts[(start + i) % n]).collect();
        let rev: Vec<u32> = (0..n).map(|i| verts[(start + n - i) % n]).collect();
        for cand in [fwd, rev] {
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// The graph a cycle system is supposed to decompose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HostGraph {
    /// K_v minus a 1-factor, on labels 0..v. When the factor is known it is
    /// carried explicitly; otherwise the checker recovers it from the
    /// uncovered edges.
    CompleteMinusFactor { v: u32, factor: Option<Vec<(u32, u32)>> },
    /// K_n minus a 1-factor on an arbitrary label set (a relabeled copy of
    /// the variant above).
    CompleteMinusFactorOn { labels: Vec<u32>, factor: Option<Vec<(u32, u32)>> },
    /// Complete bipartite graph on two explicit label sets.
    CompleteBipartite { left: Vec<u32>, right: Vec<u32> },
}

impl HostGraph {
    pub fn kv_minus_i(v: u32) -> HostGraph {
        HostGraph::CompleteMinusFactor { v, factor: None }
    }

    pub fn vertex_labels(&self) -> Vec<u32> {
        match self {
            HostGraph::CompleteMinusFactor { v, .. } => (0..*v).collect(),
            HostGraph::CompleteMinusFactorOn { labels, .. } => labels.clone(),
            HostGraph::CompleteBipartite { left, right } => {
                let mut all = left.clone();
                all.extend_from_slice(right);
                all
            }
        }
    }

    pub fn order(&self) -> usize {
        match self {
            HostGraph::CompleteMinusFactor { v, .. } => *v as usize,
            HostGraph::CompleteMinusFactorOn { labels, .. } => labels.len(),
            HostGraph::CompleteBipartite { left, right } => left.len() + right.len(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            HostGraph::CompleteMinusFactor { .. } | HostGraph::CompleteMinusFactorOn { .. } => {
                let v = self.order();
                v * (v - 1) / 2 - v / 2
            }
            HostGraph::CompleteBipartite { left, right } => left.len() * right.len(),
        }
    }

    /// The removed 1-factor, when carried explicitly.
    pub fn factor(&self) -> Option<&Vec<(u32, u32)>> {
        match self {
            HostGraph::CompleteMinusFactor { factor, .. }
            | HostGraph::CompleteMinusFactorOn { factor, .. } => factor.as_ref(),
            HostGraph::CompleteBipartite { .. } => None,
        }
    }
}

impl fmt::Display for HostGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HostGraph::CompleteMinusFactor { v, .. } => write!(f, "K_{v} - I"),
            HostGraph::CompleteMinusFactorOn { labels, .. } => {
                write!(f, "K_{} - I (relabeled)", labels.len())
            }
            HostGraph::CompleteBipartite { left, right } => {
                write!(f, "K_{{{},{}}}", left.len(), right.len())
            }
        }
    }
}

/// A set of cycles together with the host graph they claim to decompose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSystem {
    pub cycles: Vec<LabeledCycle>,
    pub host: HostGraph,
}

impl CycleSystem {
    pub fn new(mut cycles: Vec<LabeledCycle>, host: HostGraph) -> CycleSystem {
        cycles.sort();
        CycleSystem { cycles, host }
    }
}

/// Which construction produced a system. The enumeration is closed: every
/// output of the library carries one of these tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Four { s: u32 },
    Int1 { t: u32 },
    Int2 { t: u32 },
    Strong1 { t: u32 },
    Strong3,
    Strong5,
    Strong2 { t: u32 },
    Hamiltonian { v: u32 },
    GenericBipartite { t: u32 },
    Glue { v: u32, t: u32 },
    Relabeled(Box<Provenance>),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Four { s } => write!(f, "four(s={s})"),
            Provenance::Int1 { t } => write!(f, "int1(t={t})"),
            Provenance::Int2 { t } => write!(f, "int2(t={t})"),
            Provenance::Strong1 { t } => write!(f, "strong1(t={t})"),
            Provenance::Strong3 => write!(f, "strong3"),
            Provenance::Strong5 => write!(f, "strong5"),
            Provenance::Strong2 { t } => write!(f, "strong2(t={t})"),
            Provenance::Hamiltonian { v } => write!(f, "ham(v={v})"),
            Provenance::GenericBipartite { t } => write!(f, "gen2t4t(t={t})"),
            Provenance::Glue { v, t } => write!(f, "glue(v={v},t={t})"),
            Provenance::Relabeled(p) => write!(f, "relabel({p})"),
        }
    }
}

/// A cycle system with an ordered vertex-label list, a provenance tag, and
/// an optional distinguished anchor set (the part X of an intersecting
/// bipartite system).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledSystem {
    pub system: CycleSystem,
    pub vertex_set: Vec<u32>,
    pub provenance: Provenance,
    pub anchors: Option<BTreeSet<u32>>,
}

impl LabeledSystem {
    pub fn new(system: CycleSystem, provenance: Provenance) -> LabeledSystem {
        let vertex_set = system.host.vertex_labels();
        LabeledSystem { system, vertex_set, provenance, anchors: None }
    }

    pub fn with_anchors(mut self, anchors: BTreeSet<u32>) -> LabeledSystem {
        debug_assert!(anchors.iter().all(|a| self.vertex_set.contains(a)));
        self.anchors = Some(anchors);
        self
    }

    pub fn cycle_count(&self) -> usize {
        self.system.cycles.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_cycle_rejects_bad_input() {
        assert!(matches!(LabeledCycle::new(vec![0, 1]), Err(SystemError::TooShort(2))));
        assert!(matches!(
            LabeledCycle::new(vec![0, 1, 0, 2]),
            Err(SystemError::RepeatedLabel(0))
        ));
    }

    #[test]
    fn canonical_form_quotients_rotation_and_direction() {
        let a = LabeledCycle::new(vec![3, 1, 4, 2]).unwrap();
        let b = LabeledCycle::new(vec![4, 1, 3, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vertices()[0], 1);
    }

    #[test]
    fn host_edge_counts() {
        assert_eq!(HostGraph::kv_minus_i(8).edge_count(), 24);
        let b = HostGraph::CompleteBipartite {
            left: (0..6).collect(),
            right: (6..12).collect(),
        };
        assert_eq!(b.edge_count(), 36);
    }
}
