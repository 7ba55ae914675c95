//! Certificates: a machine-checkable account of why a built system has no
//! parallel class, mirroring the recursive structure of the construction.
//!
//! A certificate is a tree. Leaves carry either an intersection claim
//! (pairwise-meeting cycles can contain no parallel class, since a class
//! needs at least two cycles) or a structural claim (the dihedral 4-cycle
//! systems, whose claim is re-established exhaustively at small orders).
//! Internal nodes record a gluing step together with the claims about its
//! ingredients that the unparalleledness argument actually uses.

use std::collections::BTreeSet;

use crate::system::{CycleSystem, LabeledCycle, LabeledSystem};
use crate::verifier::{
    check_decomposition, check_intersecting, find_parallel_class, SearchBudget, SearchOutcome,
};

use super::glue::relabel;

/// Claim attached to a leaf system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafClaim {
    /// Every two cycles share a vertex.
    Intersecting,
    /// No parallel class for structural reasons not reducible to pairwise
    /// intersection; re-verified exhaustively when the order permits.
    Structural,
}

/// Which gluing argument an internal node uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlueRule {
    /// U-cycles are Hamiltonian on the X side.
    Main1,
    /// U is intersecting; one X part.
    Main2,
    /// U is intersecting; two X parts, only the first carries intersecting
    /// blocks.
    Main3,
}

/// Claim about the small-side ingredient U.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UClaim {
    /// Every cycle of U visits every vertex of U.
    HamiltonianOnX,
    Intersecting,
}

/// One bipartite block of a gluing step, in the coordinates of the glued
/// system. Blocks that do not claim intersection only need to decompose
/// their host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCert {
    pub system: LabeledSystem,
    pub anchor: Option<BTreeSet<u32>>,
    pub claims_intersecting: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UCert {
    pub system: LabeledSystem,
    pub claim: UClaim,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertKind {
    Leaf(LeafClaim),
    Glue {
        rule: GlueRule,
        u: UCert,
        /// Sub-certificate for W, in W's own labels.
        w: Box<CertNode>,
        /// Label map embedding W into this node's vertex set.
        w_map: std::collections::BTreeMap<u32, u32>,
        blocks: Vec<BlockCert>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertNode {
    pub v: u32,
    pub t: u32,
    pub system: LabeledSystem,
    pub kind: CertKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub root: CertNode,
}

/// Knobs for certificate checking.
#[derive(Debug, Clone, Copy)]
pub struct CertOptions {
    /// Orders up to this bound get an exhaustive parallel-class search on
    /// top of the claim-level checks.
    pub exhaustive_threshold: u32,
    pub budget: SearchBudget,
}

impl Default for CertOptions {
    fn default() -> Self {
        CertOptions { exhaustive_threshold: 24, budget: SearchBudget::default() }
    }
}

/// One verified (or refuted) claim, with the tree path it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertLine {
    pub path: String,
    pub claim: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertReport {
    pub lines: Vec<CertLine>,
    pub pass: bool,
}

impl CertReport {
    fn push(&mut self, path: &str, claim: impl Into<String>, pass: bool) {
        let claim = claim.into();
        self.lines.push(CertLine { path: path.to_string(), claim, pass });
        self.pass &= pass;
    }
}

/// Checks a certificate against the system it claims to describe. The check
/// never trusts the builder: decompositions, intersections and composition
/// identities are all recomputed from the cycle lists.
pub fn check_certificate(
    cert: &Certificate,
    sys: &LabeledSystem,
    opts: &CertOptions,
) -> CertReport {
    let mut report = CertReport { lines: Vec::new(), pass: true };
    report.push(
        "root",
        "certificate matches the presented system",
        cert.root.system.system == sys.system,
    );
    check_node(&cert.root, "root", opts, &mut report);
    report
}

fn cycles_span(sys: &LabeledSystem) -> bool {
    let all: BTreeSet<u32> = sys.vertex_set.iter().copied().collect();
    sys.system.cycles.iter().all(|c| c.vertex_set() == all)
}

fn check_node(node: &CertNode, path: &str, opts: &CertOptions, report: &mut CertReport) {
    let expected = u64::from(node.v) * u64::from(node.v - 2) / (4 * u64::from(node.t));
    report.push(
        path,
        format!("cycle count = v(v-2)/4t = {expected}"),
        node.system.cycle_count() as u64 == expected
            && node.system.system.cycles.iter().all(|c| c.len() == 2 * node.t as usize),
    );
    report.push(
        path,
        "cycles decompose the host",
        check_decomposition(&node.system.system).pass,
    );

    match &node.kind {
        CertKind::Leaf(LeafClaim::Intersecting) => {
            report.push(
                path,
                "cycles pairwise intersect",
                check_intersecting(&node.system.system, None).pass,
            );
        }
        CertKind::Leaf(LeafClaim::Structural) => {
            if node.v <= opts.exhaustive_threshold {
                let outcome = find_parallel_class(&node.system.system, opts.budget);
                report.push(
                    path,
                    "no parallel class (exhaustive)",
                    matches!(outcome, SearchOutcome::NoneExhaustive { .. }),
                );
            } else {
                report.push(path, "no parallel class (structural, order above exhaustive threshold)", true);
            }
        }
        CertKind::Glue { rule, u, w, w_map, blocks } => {
            report.push(
                path,
                "U decomposes its host",
                check_decomposition(&u.system.system).pass,
            );
            match u.claim {
                UClaim::HamiltonianOnX => {
                    report.push(path, "every U-cycle spans U", cycles_span(&u.system));
                }
                UClaim::Intersecting => {
                    report.push(
                        path,
                        "U-cycles pairwise intersect",
                        check_intersecting(&u.system.system, None).pass,
                    );
                }
            }
            let rule_ok = match rule {
                GlueRule::Main1 => u.claim == UClaim::HamiltonianOnX,
                GlueRule::Main2 => u.claim == UClaim::Intersecting,
                GlueRule::Main3 => u.claim == UClaim::Intersecting,
            };
            report.push(path, "U claim fits the glue rule", rule_ok);

            // Every block must decompose its bipartite host; the claimed
            // ones must, as a single family, pairwise intersect inside the
            // shared anchor. Checking the union (not each block alone) is
            // what rules out a class mixing cycles of different copies.
            let mut claimed: Vec<LabeledCycle> = Vec::new();
            let mut anchor: Option<BTreeSet<u32>> = None;
            let mut anchors_agree = true;
            for (i, b) in blocks.iter().enumerate() {
                report.push(
                    path,
                    format!("block {i} decomposes its host"),
                    check_decomposition(&b.system.system).pass,
                );
                if b.claims_intersecting {
                    claimed.extend(b.system.system.cycles.iter().cloned());
                    match (&anchor, &b.anchor) {
                        (None, Some(a)) => anchor = Some(a.clone()),
                        (Some(prev), Some(a)) => anchors_agree &= prev == a,
                        _ => anchors_agree = false,
                    }
                }
            }
            if !claimed.is_empty() {
                report.push(path, "claimed blocks share one anchor", anchors_agree);
                let union = CycleSystem::new(claimed, node.system.system.host.clone());
                let pass = anchors_agree
                    && check_intersecting(&union, anchor.as_ref()).pass;
                report.push(path, "claimed blocks intersect within the anchor", pass);
                if *rule == GlueRule::Main3 {
                    report.push(
                        path,
                        "anchor has 4t vertices",
                        anchor.as_ref().map_or(false, |a| a.len() == 4 * node.t as usize),
                    );
                }
            }

            // Composition: the node's cycles are exactly U + mapped W +
            // block cycles.
            let composed = (|| -> Option<Vec<LabeledCycle>> {
                let mapped_w = relabel(&w.system, w_map).ok()?;
                let mut all: Vec<LabeledCycle> = u.system.system.cycles.clone();
                all.extend(mapped_w.system.cycles.iter().cloned());
                for b in blocks {
                    all.extend(b.system.system.cycles.iter().cloned());
                }
                all.sort();
                Some(all)
            })();
            report.push(
                path,
                "glued system = U + W + blocks",
                composed.as_deref() == Some(&node.system.system.cycles),
            );

            check_node(w, &format!("{path}.w"), opts, report);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::dispatch::build_unparalleled;
    use crate::constructions::pyramidal::dihedral_four_cycle_system;

    #[test]
    fn forged_intersection_claim_is_refuted() {
        // The structurally-unparalleled dihedral system is not pairwise
        // intersecting; claiming it is must fail.
        let sys = dihedral_four_cycle_system(3);
        let cert = Certificate {
            root: CertNode {
                v: 12,
                t: 2,
                system: sys.clone(),
                kind: CertKind::Leaf(LeafClaim::Intersecting),
            },
        };
        let report = check_certificate(&cert, &sys, &CertOptions::default());
        assert!(!report.pass);
        assert!(report
            .lines
            .iter()
            .any(|l| l.claim.contains("pairwise intersect") && !l.pass));
    }

    #[test]
    fn forged_block_claim_is_refuted() {
        // v = 70, t = 7 glues generic (non-intersecting) blocks on the
        // second X part; flipping one of their flags must be caught.
        let (sys, mut cert) = build_unparalleled(70, 7).unwrap();
        let CertKind::Glue { blocks, .. } = &mut cert.root.kind else {
            panic!("expected a glue node at v=70");
        };
        let shared_anchor = blocks
            .iter()
            .find(|b| b.claims_intersecting && b.anchor.is_some())
            .and_then(|b| b.anchor.clone());
        let victim = blocks
            .iter_mut()
            .find(|b| !b.claims_intersecting)
            .expect("a generic block exists");
        victim.claims_intersecting = true;
        victim.anchor = shared_anchor;
        let report = check_certificate(&cert, &sys, &CertOptions::default());
        assert!(!report.pass);
    }

    #[test]
    fn mismatched_system_is_refuted() {
        let sys = dihedral_four_cycle_system(2);
        let other = dihedral_four_cycle_system(3);
        let cert = Certificate {
            root: CertNode {
                v: 8,
                t: 2,
                system: sys,
                kind: CertKind::Leaf(LeafClaim::Structural),
            },
        };
        let report = check_certificate(&cert, &other, &CertOptions::default());
        assert!(!report.pass);
    }
}
