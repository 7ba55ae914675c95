//! Relabeling and the recursive gluing step: a CS(u, 2t) on X, a CS(w, 2t)
//! on Y, and a 2t-cycle system of K_{X_i, Y_j} for every pair of parts
//! together form a CS(u + w, 2t).

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::system::{CycleSystem, HostGraph, LabeledCycle, LabeledSystem, Provenance};
use crate::verifier::check_decomposition;

#[derive(Debug, Error)]
pub enum GlueError {
    #[error("relabeling map is missing label {0}")]
    MissingLabel(u32),
    #[error("relabeling map sends two labels to {0}")]
    NotInjective(u32),
    #[error("vertex sets of the two systems overlap at {0}")]
    OverlappingLabels(u32),
    #[error("part size {0} is not a positive multiple of 2t = {1}")]
    BadPartSize(usize, u32),
    #[error("parts do not partition the {side} vertex set")]
    BadPartition { side: &'static str },
    #[error("block ({0}, {1}) is not a bipartite system on (X_{0}, Y_{1})")]
    BlockMismatch(usize, usize),
    #[error("expected an {0}x{1} block matrix, got {2}x{3}")]
    BlockShape(usize, usize, usize, usize),
    #[error("a cycle has length {0}, expected {1}")]
    CycleLength(usize, u32),
    #[error("input system does not decompose its host, so its 1-factor cannot be recovered")]
    UnrecoverableFactor,
}

fn apply_map(map: &BTreeMap<u32, u32>, x: u32) -> Result<u32, GlueError> {
    map.get(&x).copied().ok_or(GlueError::MissingLabel(x))
}

/// Applies a vertex bijection to every component of a system: cycles, host,
/// anchors and vertex list. The map must cover the vertex set injectively.
pub fn relabel(sys: &LabeledSystem, map: &BTreeMap<u32, u32>) -> Result<LabeledSystem, GlueError> {
    let mut seen = BTreeSet::new();
    for &l in &sys.vertex_set {
        let img = apply_map(map, l)?;
        if !seen.insert(img) {
            return Err(GlueError::NotInjective(img));
        }
    }

    let cycles = sys
        .system
        .cycles
        .iter()
        .map(|c| {
            let verts: Result<Vec<u32>, GlueError> =
                c.vertices().iter().map(|&x| apply_map(map, x)).collect();
            Ok(LabeledCycle::new(verts?).expect("bijections preserve distinctness"))
        })
        .collect::<Result<Vec<_>, GlueError>>()?;

    let map_factor = |factor: &Option<Vec<(u32, u32)>>| -> Result<Option<Vec<(u32, u32)>>, GlueError> {
        factor
            .as_ref()
            .map(|f| {
                f.iter()
                    .map(|&(a, b)| {
                        let (a, b) = (apply_map(map, a)?, apply_map(map, b)?);
                        Ok(if a <= b { (a, b) } else { (b, a) })
                    })
                    .collect::<Result<Vec<_>, GlueError>>()
            })
            .transpose()
    };

    let host = match &sys.system.host {
        HostGraph::CompleteMinusFactor { v, factor } => {
            let labels: BTreeSet<u32> =
                (0..*v).map(|x| apply_map(map, x)).collect::<Result<_, _>>()?;
            let factor = map_factor(factor)?;
            if labels.iter().copied().eq(0..*v) {
                HostGraph::CompleteMinusFactor { v: *v, factor }
            } else {
                HostGraph::CompleteMinusFactorOn { labels: labels.into_iter().collect(), factor }
            }
        }
        HostGraph::CompleteMinusFactorOn { labels, factor } => {
            let labels: BTreeSet<u32> =
                labels.iter().map(|&x| apply_map(map, x)).collect::<Result<_, _>>()?;
            let n = labels.len() as u32;
            let factor = map_factor(factor)?;
            if labels.iter().copied().eq(0..n) {
                HostGraph::CompleteMinusFactor { v: n, factor }
            } else {
                HostGraph::CompleteMinusFactorOn { labels: labels.into_iter().collect(), factor }
            }
        }
        HostGraph::CompleteBipartite { left, right } => HostGraph::CompleteBipartite {
            left: left.iter().map(|&x| apply_map(map, x)).collect::<Result<_, _>>()?,
            right: right.iter().map(|&x| apply_map(map, x)).collect::<Result<_, _>>()?,
        },
    };

    let anchors = sys
        .anchors
        .as_ref()
        .map(|a| a.iter().map(|&x| apply_map(map, x)).collect::<Result<BTreeSet<u32>, _>>())
        .transpose()?;

    let mut out = LabeledSystem::new(
        CycleSystem::new(cycles, host),
        Provenance::Relabeled(Box::new(sys.provenance.clone())),
    );
    out.anchors = anchors;
    Ok(out)
}

/// Convenience: the map x -> x + offset on a system's whole vertex set.
pub fn shift_map(sys: &LabeledSystem, offset: u32) -> BTreeMap<u32, u32> {
    sys.vertex_set.iter().map(|&x| (x, x + offset)).collect()
}

fn explicit_factor(sys: &LabeledSystem) -> Result<Vec<(u32, u32)>, GlueError> {
    if let Some(f) = sys.system.host.factor() {
        return Ok(f.clone());
    }
    let rep = check_decomposition(&sys.system);
    rep.recovered_factor.ok_or(GlueError::UnrecoverableFactor)
}

/// Construction-1 gluing. `u` and `w` are K-I systems on disjoint label
/// sets; `x_parts` / `y_parts` partition their vertex sets into parts of
/// size ≡ 0 (mod 2t); `blocks[i][j]` is a 2t-cycle system of K_{X_i, Y_j}.
/// Structural requirements are errors; edge-coverage of the result is the
/// decomposition checker's job (so defective blocks surface there).
pub fn glue(
    u: &LabeledSystem,
    w: &LabeledSystem,
    x_parts: &[Vec<u32>],
    y_parts: &[Vec<u32>],
    blocks: &[Vec<LabeledSystem>],
    t: u32,
) -> Result<LabeledSystem, GlueError> {
    let u_set: BTreeSet<u32> = u.vertex_set.iter().copied().collect();
    let w_set: BTreeSet<u32> = w.vertex_set.iter().copied().collect();
    if let Some(&x) = u_set.intersection(&w_set).next() {
        return Err(GlueError::OverlappingLabels(x));
    }

    let check_partition = |parts: &[Vec<u32>],
                           whole: &BTreeSet<u32>,
                           side: &'static str|
     -> Result<Vec<BTreeSet<u32>>, GlueError> {
        let mut covered = BTreeSet::new();
        let mut out = Vec::new();
        for p in parts {
            if p.is_empty() || p.len() % (2 * t as usize) != 0 {
                return Err(GlueError::BadPartSize(p.len(), 2 * t));
            }
            let set: BTreeSet<u32> = p.iter().copied().collect();
            if set.len() != p.len() || !set.is_subset(whole) {
                return Err(GlueError::BadPartition { side });
            }
            if !covered.is_disjoint(&set) {
                return Err(GlueError::BadPartition { side });
            }
            covered.extend(&set);
            out.push(set);
        }
        if covered != *whole {
            return Err(GlueError::BadPartition { side });
        }
        Ok(out)
    };
    let xs = check_partition(x_parts, &u_set, "X")?;
    let ys = check_partition(y_parts, &w_set, "Y")?;

    if blocks.len() != xs.len() || blocks.iter().any(|row| row.len() != ys.len()) {
        return Err(GlueError::BlockShape(
            xs.len(),
            ys.len(),
            blocks.len(),
            blocks.first().map_or(0, |r| r.len()),
        ));
    }
    for (i, row) in blocks.iter().enumerate() {
        for (j, block) in row.iter().enumerate() {
            match &block.system.host {
                HostGraph::CompleteBipartite { left, right } => {
                    let l: BTreeSet<u32> = left.iter().copied().collect();
                    let r: BTreeSet<u32> = right.iter().copied().collect();
                    if l != xs[i] || r != ys[j] {
                        return Err(GlueError::BlockMismatch(i, j));
                    }
                }
                _ => return Err(GlueError::BlockMismatch(i, j)),
            }
        }
    }

    let mut cycles = Vec::new();
    for source in [u, w] {
        for c in &source.system.cycles {
            if c.len() != 2 * t as usize {
                return Err(GlueError::CycleLength(c.len(), 2 * t));
            }
            cycles.push(c.clone());
        }
    }
    for row in blocks {
        for block in row {
            for c in &block.system.cycles {
                if c.len() != 2 * t as usize {
                    return Err(GlueError::CycleLength(c.len(), 2 * t));
                }
                cycles.push(c.clone());
            }
        }
    }

    let mut factor = explicit_factor(u)?;
    factor.extend(explicit_factor(w)?);
    factor.sort_unstable();

    let all_labels: BTreeSet<u32> = u_set.union(&w_set).copied().collect();
    let v = all_labels.len() as u32;
    let host = if all_labels.iter().copied().eq(0..v) {
        HostGraph::CompleteMinusFactor { v, factor: Some(factor) }
    } else {
        HostGraph::CompleteMinusFactorOn {
            labels: all_labels.into_iter().collect(),
            factor: Some(factor),
        }
    };
    Ok(LabeledSystem::new(
        CycleSystem::new(cycles, host),
        Provenance::Glue { v, t },
    ))
}
