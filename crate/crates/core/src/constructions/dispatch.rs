//! Top-level dispatch: an unparalleled CS(v, 2t) plus its certificate for
//! every admissible (v, t).
//!
//! Admissible means t >= 2, v > 2t and v ≡ 0 (mod 2t). The recursion:
//!
//! * t = 2: the dihedral 4-cycle system (structural leaf).
//! * t even, or t in {3, 5}: base CS(4t, 2t) intersecting leaf, then grow
//!   by 2t using a Hamiltonian CS(2t, 2t) and intersecting K_{2t,2t}
//!   blocks (rule Main1).
//! * t odd > 5, v ≡ 0 (mod 4t): base CS(4t, 2t) leaf, then grow by 4t
//!   using the intersecting CS(4t, 2t) and intersecting K_{4t,4t} blocks
//!   (rule Main2).
//! * t odd > 5, v ≡ 2t (mod 4t): CS(6t, 2t) intersecting leaf at v = 6t;
//!   above that, glue the CS(6t, 2t) to a Main2 system on v - 6t with
//!   intersecting blocks on one X part and plain K_{2t,4t} decompositions
//!   on the other (rule Main3).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::system::LabeledSystem;

use super::bipartite::{
    bipartite_generic_2t_4t, bipartite_intersecting_2t, bipartite_intersecting_4t,
};
use super::certificate::{
    BlockCert, CertKind, CertNode, Certificate, GlueRule, LeafClaim, UCert, UClaim,
};
use super::glue::{glue, relabel, shift_map};
use super::pyramidal::{
    dihedral_four_cycle_system, hamiltonian_cs, intersecting_cs_4t, intersecting_cs_6t,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error(
        "no unparalleled CS({v}, {two_t}) is built: an unparalleled CS(v, 2t) exists here \
         if and only if t >= 2, v > 2t and v ≡ 0 (mod 2t)"
    )]
    NotAdmissible { v: u32, two_t: u32 },
}

/// Builds an unparalleled 2t-cycle system of K_v - I together with a
/// certificate of its construction.
pub fn build_unparalleled(v: u32, t: u32) -> Result<(LabeledSystem, Certificate), BuildError> {
    if t < 2 || v <= 2 * t || v % (2 * t) != 0 {
        return Err(BuildError::NotAdmissible { v, two_t: 2 * t });
    }
    let root = build_node(v, t);
    debug_assert_eq!(
        root.system.cycle_count() as u64,
        u64::from(v) * u64::from(v - 2) / (4 * u64::from(t))
    );
    let sys = root.system.clone();
    Ok((sys, Certificate { root }))
}

fn build_node(v: u32, t: u32) -> CertNode {
    if t == 2 {
        let sys = dihedral_four_cycle_system(v / 4);
        return CertNode { v, t, system: sys, kind: CertKind::Leaf(LeafClaim::Structural) };
    }
    if t % 2 == 0 || t == 3 || t == 5 {
        build_main1(v, t)
    } else if v % (4 * t) == 0 {
        build_main2(v, t)
    } else {
        build_main3(v, t)
    }
}

fn leaf(v: u32, t: u32, sys: LabeledSystem) -> CertNode {
    CertNode { v, t, system: sys, kind: CertKind::Leaf(LeafClaim::Intersecting) }
}

/// One bipartite-template row of a gluing step.
struct BlockRow {
    template: LabeledSystem,
    claims_intersecting: bool,
}

/// Shared assembly: place U on [0, u), shift the W sub-system up by `u`,
/// tile the Y side with relabeled copies of each row's template, glue, and
/// record everything in a certificate node.
fn assemble(
    v: u32,
    t: u32,
    rule: GlueRule,
    u_sys: LabeledSystem,
    u_claim: UClaim,
    x_parts: Vec<Vec<u32>>,
    rows: Vec<BlockRow>,
    w_node: CertNode,
) -> CertNode {
    let u = u_sys.vertex_set.len() as u32;
    let w_map = shift_map(&w_node.system, u);
    let w_final = relabel(&w_node.system, &w_map).expect("shift is a bijection");

    let part_size = match &rows[0].template.system.host {
        crate::system::HostGraph::CompleteBipartite { right, .. } => right.len() as u32,
        _ => unreachable!("block templates are bipartite"),
    };
    let y_parts: Vec<Vec<u32>> = (u..v)
        .step_by(part_size as usize)
        .map(|start| (start..start + part_size).collect())
        .collect();

    let mut block_matrix: Vec<Vec<LabeledSystem>> = Vec::new();
    let mut block_certs: Vec<BlockCert> = Vec::new();
    for (row, x) in rows.iter().zip(&x_parts) {
        let (left, right) = match &row.template.system.host {
            crate::system::HostGraph::CompleteBipartite { left, right } => (left, right),
            _ => unreachable!(),
        };
        let mut matrix_row = Vec::new();
        for y in &y_parts {
            let map: BTreeMap<u32, u32> = left
                .iter()
                .zip(x.iter())
                .chain(right.iter().zip(y.iter()))
                .map(|(&from, &to)| (from, to))
                .collect();
            let block = relabel(&row.template, &map).expect("part sizes match the template");
            block_certs.push(BlockCert {
                anchor: if row.claims_intersecting { block.anchors.clone() } else { None },
                system: block.clone(),
                claims_intersecting: row.claims_intersecting,
            });
            matrix_row.push(block);
        }
        block_matrix.push(matrix_row);
    }

    let glued = glue(&u_sys, &w_final, &x_parts, &y_parts, &block_matrix, t)
        .expect("construction produces structurally valid glue input");
    CertNode {
        v,
        t,
        system: glued,
        kind: CertKind::Glue {
            rule,
            u: UCert { system: u_sys, claim: u_claim },
            w: Box::new(w_node),
            w_map,
            blocks: block_certs,
        },
    }
}

fn build_main1(v: u32, t: u32) -> CertNode {
    if v == 4 * t {
        return leaf(v, t, intersecting_cs_4t(t));
    }
    assemble(
        v,
        t,
        GlueRule::Main1,
        hamiltonian_cs(2 * t),
        UClaim::HamiltonianOnX,
        vec![(0..2 * t).collect()],
        vec![BlockRow { template: bipartite_intersecting_2t(t), claims_intersecting: true }],
        build_main1(v - 2 * t, t),
    )
}

fn build_main2(v: u32, t: u32) -> CertNode {
    if v == 4 * t {
        return leaf(v, t, intersecting_cs_4t(t));
    }
    assemble(
        v,
        t,
        GlueRule::Main2,
        intersecting_cs_4t(t),
        UClaim::Intersecting,
        vec![(0..4 * t).collect()],
        vec![BlockRow { template: bipartite_intersecting_4t(t), claims_intersecting: true }],
        build_main2(v - 4 * t, t),
    )
}

fn build_main3(v: u32, t: u32) -> CertNode {
    if v == 6 * t {
        return leaf(v, t, intersecting_cs_6t(t));
    }
    assemble(
        v,
        t,
        GlueRule::Main3,
        intersecting_cs_6t(t),
        UClaim::Intersecting,
        vec![(0..4 * t).collect(), (4 * t..6 * t).collect()],
        vec![
            BlockRow { template: bipartite_intersecting_4t(t), claims_intersecting: true },
            BlockRow { template: bipartite_generic_2t_4t(t), claims_intersecting: false },
        ],
        build_main2(v - 6 * t, t),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::certificate::{check_certificate, CertOptions};
    use crate::verifier::check_decomposition;

    fn counts_ok(v: u32, t: u32) {
        let (sys, cert) = build_unparalleled(v, t).unwrap();
        assert_eq!(
            sys.cycle_count() as u64,
            u64::from(v) * u64::from(v - 2) / (4 * u64::from(t)),
            "cycle count at v={v}, t={t}"
        );
        assert!(check_decomposition(&sys.system).pass, "decomposition at v={v}, t={t}");
        let report = check_certificate(&cert, &sys, &CertOptions::default());
        assert!(
            report.pass,
            "certificate at v={v}, t={t}: {:?}",
            report.lines.iter().filter(|l| !l.pass).collect::<Vec<_>>()
        );
    }

    #[test]
    fn admissibility_gate() {
        assert!(build_unparalleled(10, 3).is_err());
        assert!(build_unparalleled(6, 3).is_err());
        assert!(build_unparalleled(8, 1).is_err());
        assert!(build_unparalleled(4, 2).is_err());
        let msg = build_unparalleled(10, 3).unwrap_err().to_string();
        assert!(msg.contains("if and only if"));
    }

    #[test]
    fn four_leaf_at_v8() {
        let (sys, cert) = build_unparalleled(8, 2).unwrap();
        assert_eq!(sys.cycle_count(), 6);
        assert!(matches!(cert.root.kind, CertKind::Leaf(LeafClaim::Structural)));
        counts_ok(8, 2);
    }

    #[test]
    fn main1_tree_at_v24_t3() {
        let (_, cert) = build_unparalleled(24, 3).unwrap();
        // 24 -> 18 -> 12 (leaf).
        let CertKind::Glue { rule, w, .. } = &cert.root.kind else { panic!() };
        assert_eq!(*rule, GlueRule::Main1);
        let CertKind::Glue { w: w2, .. } = &w.kind else { panic!() };
        assert!(matches!(w2.kind, CertKind::Leaf(LeafClaim::Intersecting)));
        counts_ok(24, 3);
    }

    #[test]
    fn int2_leaf_at_v42_t7() {
        let (sys, cert) = build_unparalleled(42, 7).unwrap();
        assert!(matches!(cert.root.kind, CertKind::Leaf(LeafClaim::Intersecting)));
        assert_eq!(sys.cycle_count(), 60);
        counts_ok(42, 7);
    }

    #[test]
    fn main2_and_main3_small() {
        counts_ok(56, 7); // Main2: 56 = 28 + 28.
        counts_ok(70, 7); // Main3: 70 = 42 + 28.
        counts_ok(40, 5); // Main1 via strong5 blocks.
        counts_ok(36, 3);
        counts_ok(32, 4);
    }
}
