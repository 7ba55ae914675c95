//! Intersecting semiregular cycle systems of complete bipartite graphs,
//! plus the plain (non-intersecting) CS(K_{2t,4t}, 2t) used by the glue
//! step for v ≡ 2t (mod 4t).
//!
//! Bipartite vertices are labeled side-0 first: x_0 -> x, x_1 -> w + x.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Mutex, OnceLock};

use crate::cycle::{Cycle, Vertex};
use crate::starter::{expand_bipartite, BipartiteStarter};
use crate::system::{CycleSystem, HostGraph, LabeledCycle, LabeledSystem, Provenance};

fn bi(z: i64, side: u8, w: i64) -> Vertex {
    Vertex::Bi { z: z.rem_euclid(w) as u32, side }
}

/// The single-cycle CS(K_{2t,2t}, 2t) starter for even t = 2s >= 4.
pub fn strong1_starter(t: u32) -> BipartiteStarter {
    assert!(t >= 4 && t % 2 == 0, "the K_{{2t,2t}} starter needs even t >= 4");
    let s = i64::from(t / 2);
    let w = 2 * i64::from(t);
    let mut c = Vec::new();
    for i in 1..=s {
        c.push(bi(4 * s - i, 1, w));
        c.push(bi(i, 0, w));
    }
    for j in 1..=s {
        c.push(bi(s - j, 1, w));
        c.push(bi(3 * s - 1 + j, 0, w));
    }
    BipartiteStarter {
        cycles: vec![Cycle::new(c).expect("distinct")],
        w: w as u32,
        t,
    }
}

/// The hardcoded intersecting CS(K_{6,6}, 6): cycles C_0..C_5 over
/// Z_6 x Z_2 given as (z, side) pairs.
pub const STRONG3_TABLE: [[(u32, u8); 6]; 6] = [
    [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)],
    [(2, 0), (0, 1), (3, 0), (1, 1), (4, 0), (3, 1)],
    [(4, 0), (0, 1), (5, 0), (1, 1), (0, 0), (4, 1)],
    [(0, 0), (3, 1), (3, 0), (4, 1), (1, 0), (5, 1)],
    [(2, 0), (4, 1), (5, 0), (2, 1), (3, 0), (5, 1)],
    [(1, 0), (2, 1), (4, 0), (5, 1), (5, 0), (3, 1)],
];

/// The hardcoded intersecting CS(K_{10,10}, 10): cycles C_0..C_9.
pub const STRONG5_TABLE: [[(u32, u8); 10]; 10] = [
    [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (3, 1), (4, 0), (4, 1)],
    [(2, 0), (0, 1), (3, 0), (1, 1), (4, 0), (2, 1), (5, 0), (3, 1), (6, 0), (4, 1)],
    [(4, 0), (0, 1), (5, 0), (1, 1), (6, 0), (2, 1), (7, 0), (3, 1), (8, 0), (9, 1)],
    [(6, 0), (0, 1), (7, 0), (1, 1), (8, 0), (2, 1), (9, 0), (3, 1), (0, 0), (8, 1)],
    [(8, 0), (0, 1), (9, 0), (1, 1), (0, 0), (2, 1), (1, 0), (3, 1), (2, 0), (8, 1)],
    [(1, 0), (5, 1), (2, 0), (6, 1), (3, 0), (7, 1), (4, 0), (8, 1), (7, 0), (9, 1)],
    [(3, 0), (5, 1), (4, 0), (6, 1), (5, 0), (7, 1), (6, 0), (9, 1), (9, 0), (8, 1)],
    [(5, 0), (5, 1), (6, 0), (6, 1), (7, 0), (7, 1), (8, 0), (4, 1), (1, 0), (8, 1)],
    [(7, 0), (5, 1), (8, 0), (6, 1), (9, 0), (7, 1), (0, 0), (9, 1), (3, 0), (4, 1)],
    [(9, 0), (5, 1), (0, 0), (6, 1), (1, 0), (7, 1), (2, 0), (9, 1), (5, 0), (4, 1)],
];

/// The hardcoded second starter cycle of the K_{28,28} system (t=7, s=3).
pub const STRONG2_C1_S3: [(u32, u8); 14] = [
    (0, 0),
    (26, 1),
    (7, 0),
    (4, 1),
    (12, 0),
    (2, 1),
    (14, 0),
    (13, 1),
    (20, 0),
    (5, 1),
    (21, 0),
    (8, 1),
    (25, 0),
    (14, 1),
];

/// The two-cycle CS(K_{4t,4t}, 2t) starter for odd t = 2s+1 >= 7.
pub fn strong2_starter(t: u32) -> BipartiteStarter {
    assert!(t >= 7 && t % 2 == 1, "the K_{{4t,4t}} starter needs odd t >= 7");
    let s = i64::from((t - 1) / 2);
    let w = 4 * i64::from(t); // = 8s + 4

    let mut c0 = vec![
        bi(0, 0, w),
        bi(1, 1, w),
        bi(2 * s + 1, 0, w),
        bi(2 * s + 3, 1, w),
        bi(4 * s + 2, 0, w),
        bi(4 * s + 5, 1, w),
    ];
    for i in 0..=2 * s - 3 {
        c0.push(bi(6 * s + 3 - i, 0, w));
        c0.push(bi(6 * s + 7 + i, 1, w));
    }

    let c1 = if s == 3 {
        STRONG2_C1_S3
            .iter()
            .map(|&(z, side)| Vertex::Bi { z, side })
            .collect()
    } else {
        let mut c1 = vec![
            bi(6 * s + 3, 1, w),
            bi(0, 0, w),
            bi(8 * s + 1, 1, w),
            bi(2 * s + 1, 0, w),
            bi(2 * s - 1, 1, w),
            bi(4 * s + 2, 0, w),
            bi(4 * s + 1, 1, w),
            bi(6 * s + 3, 0, w),
            bi(6 * s - 2, 1, w),
        ];
        for i in 0..=s - 5 {
            c1.push(bi(8 * s + 3 - i, 0, w));
            c1.push(bi(6 * s + 6 + i, 1, w));
        }
        c1.push(bi(7 * s + 7, 0, w));
        c1.push(bi(5 * s, 1, w));
        c1.push(bi(7 * s + 6, 0, w));
        for j in 1..=s - 1 {
            c1.push(bi(3 * s + j, 1, w));
            c1.push(bi(7 * s + 6 - j, 0, w));
        }
        c1
    };

    BipartiteStarter {
        cycles: vec![Cycle::new(c0).expect("distinct"), Cycle::new(c1).expect("distinct")],
        w: w as u32,
        t,
    }
}

fn table_system(table: &[&[(u32, u8)]], w: u32, provenance: Provenance) -> LabeledSystem {
    let cycles = table
        .iter()
        .map(|row| {
            LabeledCycle::new(row.iter().map(|&(z, side)| u32::from(side) * w + z).collect())
                .expect("distinct")
        })
        .collect();
    let host = HostGraph::CompleteBipartite {
        left: (0..w).collect(),
        right: (w..2 * w).collect(),
    };
    LabeledSystem::new(CycleSystem::new(cycles, host), provenance)
        .with_anchors((0..w).collect())
}

/// Intersecting CS(K_{2t,2t}, 2t) with anchor X = side 0: the semiregular
/// starter for even t >= 4, the explicit tables for t = 3 and t = 5.
pub fn bipartite_intersecting_2t(t: u32) -> LabeledSystem {
    match t {
        3 => {
            let rows: Vec<&[(u32, u8)]> = STRONG3_TABLE.iter().map(|r| &r[..]).collect();
            table_system(&rows, 6, Provenance::Strong3)
        }
        5 => {
            let rows: Vec<&[(u32, u8)]> = STRONG5_TABLE.iter().map(|r| &r[..]).collect();
            table_system(&rows, 10, Provenance::Strong5)
        }
        _ => {
            let starter = strong1_starter(t);
            let sys = expand_bipartite(&starter).expect("the strong1 starter is valid");
            LabeledSystem::new(sys, Provenance::Strong1 { t })
                .with_anchors((0..2 * t).collect())
        }
    }
}

/// Intersecting CS(K_{4t,4t}, 2t) with anchor X = side 0, for odd t >= 7.
pub fn bipartite_intersecting_4t(t: u32) -> LabeledSystem {
    let starter = strong2_starter(t);
    let sys = expand_bipartite(&starter).expect("the strong2 starter is valid");
    LabeledSystem::new(sys, Provenance::Strong2 { t })
        .with_anchors((0..4 * t).collect())
}

/// A semiregular starter cycle for K_{2t,4t}: alternates X = Z_{2t} x {0}
/// and Y = Z_{2t} x {1,2}, stored as (z, side) with side 0 = X.
type GenericCycle = Vec<(u32, u8)>;

/// Depth-first search for two starter 2t-cycles whose oriented differences
/// hit every (difference, Y-half) pair exactly once. Deterministic choice
/// order, so the result is reproducible.
fn generic_starter_search(t: u32) -> Option<[GenericCycle; 2]> {
    let n = 2 * t as usize;
    let mut used = vec![[false; 2]; n]; // used[d][h-1]
    let mut cycles: [GenericCycle; 2] = [Vec::new(), Vec::new()];

    fn extend(
        n: usize,
        pairs_left: usize,
        cur: &mut GenericCycle,
        xs: &mut Vec<bool>,
        ys: &mut Vec<[bool; 2]>,
        used: &mut Vec<[bool; 2]>,
        rest: &mut dyn FnMut(&mut Vec<[bool; 2]>) -> Option<GenericCycle>,
    ) -> Option<(GenericCycle, GenericCycle)> {
        if pairs_left == 0 {
            // Close the cycle: the edge from the last Y back to x_0 = 0.
            let done = cur.clone();
            if let Some(second) = rest(used) {
                return Some((done, second));
            }
            return None;
        }
        let x = cur.last().expect("cycle starts with an x").0 as usize;
        for h in 1u8..=2 {
            for z in 0..n {
                let d1 = (z + n - x) % n;
                if used[d1][(h - 1) as usize] || ys[z][(h - 1) as usize] {
                    continue;
                }
                used[d1][(h - 1) as usize] = true;
                ys[z][(h - 1) as usize] = true;
                cur.push((z as u32, h));
                if pairs_left == 1 {
                    // Closing edge back to x_0 = 0.
                    let d2 = z % n;
                    if !used[d2][(h - 1) as usize] {
                        used[d2][(h - 1) as usize] = true;
                        if let Some(found) = extend(n, 0, cur, xs, ys, used, rest) {
                            return Some(found);
                        }
                        used[d2][(h - 1) as usize] = false;
                    }
                } else {
                    for x2 in 0..n {
                        if xs[x2] {
                            continue;
                        }
                        let d2 = (z + n - x2) % n;
                        if used[d2][(h - 1) as usize] {
                            continue;
                        }
                        used[d2][(h - 1) as usize] = true;
                        xs[x2] = true;
                        cur.push((x2 as u32, 0));
                        if let Some(found) = extend(n, pairs_left - 1, cur, xs, ys, used, rest) {
                            return Some(found);
                        }
                        cur.pop();
                        xs[x2] = false;
                        used[d2][(h - 1) as usize] = false;
                    }
                }
                cur.pop();
                ys[z][(h - 1) as usize] = false;
                used[d1][(h - 1) as usize] = false;
            }
        }
        None
    }

    let t_us = t as usize;
    let mut first = vec![(0u32, 0u8)];
    let mut xs1 = vec![false; n];
    xs1[0] = true;
    let mut ys1 = vec![[false; 2]; n];
    let result = extend(
        n,
        t_us,
        &mut first,
        &mut xs1,
        &mut ys1,
        &mut used,
        &mut |used| {
            // Second cycle, also rooted at x_0 = 0.
            let mut cur = vec![(0u32, 0u8)];
            let mut xs = vec![false; n];
            xs[0] = true;
            let mut ys = vec![[false; 2]; n];
            let mut nothing = |_: &mut Vec<[bool; 2]>| -> Option<GenericCycle> {
                Some(Vec::new())
            };
            extend(n, t_us, &mut cur, &mut xs, &mut ys, used, &mut nothing)
                .map(|(second, _)| second)
        },
    );
    result.map(|(c1, c2)| {
        cycles[0] = c1;
        cycles[1] = c2;
        cycles
    })
}

/// Any (not necessarily intersecting) CS(K_{2t,4t}, 2t) for odd t > 5,
/// found by semiregular starter search over Z_{2t} and memoized per t.
/// X = labels [0, 2t); Y-half h occupies [h * 2t, (h+1) * 2t).
pub fn bipartite_generic_2t_4t(t: u32) -> LabeledSystem {
    assert!(t > 5 && t % 2 == 1, "the generic K_{{2t,4t}} system needs odd t > 5");
    static MEMO: OnceLock<Mutex<BTreeMap<u32, LabeledSystem>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(hit) = memo.lock().expect("memo lock").get(&t) {
        return hit.clone();
    }

    let n = 2 * t;
    let starters =
        generic_starter_search(t).expect("starter search for K_{2t,4t} must succeed");
    let mut cycles = BTreeSet::new();
    for c in &starters {
        for g in 0..n {
            let verts = c
                .iter()
                .map(|&(z, side)| {
                    let z = (z + g) % n;
                    u32::from(side) * n + z
                })
                .collect();
            cycles.insert(LabeledCycle::new(verts).expect("distinct"));
        }
    }
    let host = HostGraph::CompleteBipartite {
        left: (0..n).collect(),
        right: (n..3 * n).collect(),
    };
    let sys = LabeledSystem::new(
        CycleSystem::new(cycles.into_iter().collect(), host),
        Provenance::GenericBipartite { t },
    );
    memo.lock().expect("memo lock").insert(t, sys.clone());
    sys
}
