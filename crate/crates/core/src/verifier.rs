//! Independent checking: edge-partition verification, intersection
//! certificates, the difference-cover test, and exhaustive parallel-class
//! search by exact cover.
//!
//! Everything here is data-in, data-out: findings are returned as witness
//! lists so tests can assert on them.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use crate::system::{CycleSystem, HostGraph, LabeledCycle};

pub type Edge = (u32, u32);

fn norm(a: u32, b: u32) -> Edge {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Outcome of an edge-partition check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub duplicated: Vec<Edge>,
    pub uncovered: Vec<Edge>,
    /// Edges covered by some cycle but not present in the host.
    pub foreign: Vec<Edge>,
    /// Cycles with repeated vertices or fewer than 3 of them.
    pub malformed: Vec<LabeledCycle>,
    /// For K_v - I hosts without an explicit factor: the uncovered K_v edges,
    /// when they form a perfect matching.
    pub recovered_factor: Option<Vec<Edge>>,
    pub pass: bool,
}

/// PASS iff every host edge is covered exactly once and no non-host edge is
/// covered. For `CompleteMinusFactor` without an explicit factor the host is
/// taken to be K_v; the uncovered edges must then form a perfect matching,
/// which is returned.
pub fn check_decomposition(sys: &CycleSystem) -> DecompositionReport {
    let mut counts: BTreeMap<Edge, u32> = BTreeMap::new();
    let mut malformed = Vec::new();
    for c in &sys.cycles {
        if !c.is_well_formed() {
            malformed.push(c.clone());
            continue;
        }
        for (a, b) in c.edges() {
            *counts.entry(norm(a, b)).or_insert(0) += 1;
        }
    }

    let mut duplicated = Vec::new();
    let mut uncovered = Vec::new();
    let mut foreign = Vec::new();
    let mut recovered_factor = None;

    match &sys.host {
        HostGraph::CompleteMinusFactor { .. } | HostGraph::CompleteMinusFactorOn { .. } => {
            let labels: BTreeSet<u32> = sys.host.vertex_labels().into_iter().collect();
            let explicit: Option<BTreeSet<Edge>> = sys
                .host
                .factor()
                .map(|f| f.iter().map(|&(a, b)| norm(a, b)).collect());
            let ordered: Vec<u32> = labels.iter().copied().collect();
            let mut missing_kv = Vec::new();
            for (i, &a) in ordered.iter().enumerate() {
                for &b in &ordered[i + 1..] {
                    let e = (a, b);
                    let in_factor = explicit.as_ref().is_some_and(|f| f.contains(&e));
                    let k = counts.get(&e).copied().unwrap_or(0);
                    if in_factor {
                        if k > 0 {
                            foreign.push(e);
                        }
                    } else {
                        match k {
                            0 => missing_kv.push(e),
                            1 => {}
                            _ => duplicated.push(e),
                        }
                    }
                }
            }
            for (&e, _) in counts.iter().filter(|(_, &k)| k > 0) {
                if !labels.contains(&e.0) || !labels.contains(&e.1) || e.0 == e.1 {
                    foreign.push(e);
                }
            }
            if explicit.is_some() {
                uncovered = missing_kv;
            } else {
                // The uncovered K_v edges should be the removed 1-factor.
                if is_perfect_matching(&missing_kv, &labels) {
                    recovered_factor = Some(missing_kv);
                } else {
                    uncovered = missing_kv;
                }
            }
        }
        HostGraph::CompleteBipartite { left, right } => {
            let ls: BTreeSet<u32> = left.iter().copied().collect();
            let rs: BTreeSet<u32> = right.iter().copied().collect();
            for &a in &ls {
                for &b in &rs {
                    let e = norm(a, b);
                    match counts.get(&e).copied().unwrap_or(0) {
                        0 => uncovered.push(e),
                        1 => {}
                        _ => duplicated.push(e),
                    }
                }
            }
            for (&(a, b), _) in counts.iter() {
                let crosses = (ls.contains(&a) && rs.contains(&b))
                    || (rs.contains(&a) && ls.contains(&b));
                if !crosses {
                    foreign.push((a, b));
                }
            }
        }
    }

    foreign.sort_unstable();
    foreign.dedup();
    let pass = duplicated.is_empty()
        && uncovered.is_empty()
        && foreign.is_empty()
        && malformed.is_empty();
    DecompositionReport { duplicated, uncovered, foreign, malformed, recovered_factor, pass }
}

fn is_perfect_matching(edges: &[Edge], labels: &BTreeSet<u32>) -> bool {
    if edges.len() * 2 != labels.len() {
        return false;
    }
    let mut seen = BTreeSet::new();
    for &(a, b) in edges {
        if a == b || !labels.contains(&a) || !seen.insert(a) || !seen.insert(b) {
            return false;
        }
    }
    seen.len() == labels.len()
}

/// A set of vertex-disjoint cycles of the system covering every host vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelClass {
    pub cycles: Vec<LabeledCycle>,
}

impl ParallelClass {
    /// Self-validation: membership, disjointness and coverage.
    pub fn validate(&self, sys: &CycleSystem) -> bool {
        let mut covered = BTreeSet::new();
        for c in &self.cycles {
            if !sys.cycles.contains(c) {
                return false;
            }
            for &x in c.vertices() {
                if !covered.insert(x) {
                    return false;
                }
            }
        }
        covered == sys.host.vertex_labels().into_iter().collect()
    }
}

/// Node / wall-clock limits for the exact-cover search.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 100_000_000, max_time: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(ParallelClass),
    /// The whole search space was exhausted without finding a class.
    NoneExhaustive { nodes: u64 },
    BudgetExceeded { nodes: u64 },
}

/// Exhaustive parallel-class search: exact cover with rows = cycles and
/// columns = host vertices. Column choice is fewest-candidates-first with
/// deterministic tie-breaking by label order.
pub fn find_parallel_class(sys: &CycleSystem, budget: SearchBudget) -> SearchOutcome {
    let labels = sys.host.vertex_labels();
    let v = labels.len();
    // A class exists only if the cycle lengths can tile the vertex count;
    // with uniform length k this is the k | v condition.
    if let Some(c) = sys.cycles.first() {
        if c.len() > 0 && v % c.len() != 0 && sys.cycles.iter().all(|d| d.len() == c.len()) {
            return SearchOutcome::NoneExhaustive { nodes: 0 };
        }
    }
    let col_of: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let words = v.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(sys.cycles.len());
    for c in &sys.cycles {
        let mut mask = vec![0u64; words];
        for &x in c.vertices() {
            let i = col_of[&x];
            mask[i / 64] |= 1 << (i % 64);
        }
        rows.push(mask);
    }
    let mut rows_at_col: Vec<Vec<usize>> = vec![Vec::new(); v];
    for (r, c) in sys.cycles.iter().enumerate() {
        for &x in c.vertices() {
            rows_at_col[col_of[&x]].push(r);
        }
    }

    struct Ctx<'a> {
        rows: &'a [Vec<u64>],
        rows_at_col: &'a [Vec<usize>],
        v: usize,
        nodes: u64,
        budget: SearchBudget,
        start: Instant,
        chosen: Vec<usize>,
    }

    enum Step {
        Found,
        Exhausted,
        Budget,
    }

    fn covered_count(mask: &[u64]) -> usize {
        mask.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn recurse(ctx: &mut Ctx, covered: &mut [u64]) -> Step {
        if covered_count(covered) == ctx.v {
            return Step::Found;
        }
        // Fewest-candidates-first column.
        let mut best: Option<(usize, usize)> = None;
        for col in 0..ctx.v {
            if covered[col / 64] >> (col % 64) & 1 == 1 {
                continue;
            }
            let cand = ctx.rows_at_col[col]
                .iter()
                .filter(|&&r| disjoint(&ctx.rows[r], covered))
                .count();
            if best.map_or(true, |(n, _)| cand < n) {
                best = Some((cand, col));
                if cand == 0 {
                    break;
                }
            }
        }
        let (n_cand, col) = best.expect("some column uncovered");
        if n_cand == 0 {
            return Step::Exhausted;
        }
        let cands: Vec<usize> = ctx.rows_at_col[col]
            .iter()
            .copied()
            .filter(|&r| disjoint(&ctx.rows[r], covered))
            .collect();
        for r in cands {
            ctx.nodes += 1;
            if ctx.nodes >= ctx.budget.max_nodes {
                return Step::Budget;
            }
            if ctx.nodes % 65536 == 0 {
                if let Some(limit) = ctx.budget.max_time {
                    if ctx.start.elapsed() > limit {
                        return Step::Budget;
                    }
                }
            }
            for (w, m) in covered.iter_mut().zip(&ctx.rows[r]) {
                *w |= m;
            }
            ctx.chosen.push(r);
            match recurse(ctx, covered) {
                Step::Found => return Step::Found,
                Step::Budget => return Step::Budget,
                Step::Exhausted => {}
            }
            ctx.chosen.pop();
            for (w, m) in covered.iter_mut().zip(&ctx.rows[r]) {
                *w &= !m;
            }
        }
        Step::Exhausted
    }

    fn disjoint(a: &[u64], b: &[u64]) -> bool {
        a.iter().zip(b).all(|(x, y)| x & y == 0)
    }

    let mut ctx = Ctx {
        rows: &rows,
        rows_at_col: &rows_at_col,
        v,
        nodes: 0,
        budget,
        start: Instant::now(),
        chosen: Vec::new(),
    };
    let mut covered = vec![0u64; words];
    match recurse(&mut ctx, &mut covered) {
        Step::Found => {
            let class = ParallelClass {
                cycles: ctx.chosen.iter().map(|&r| sys.cycles[r].clone()).collect(),
            };
            debug_assert!(class.validate(sys));
            SearchOutcome::Found(class)
        }
        Step::Exhausted => SearchOutcome::NoneExhaustive { nodes: ctx.nodes },
        Step::Budget => SearchOutcome::BudgetExceeded { nodes: ctx.nodes },
    }
}

/// Outcome of a pairwise-intersection check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionReport {
    pub pass: bool,
    /// A pair of cycles with empty (anchored) intersection, if any.
    pub witness: Option<(LabeledCycle, LabeledCycle)>,
}

/// PASS iff every two cycles share a vertex (restricted to `anchor` when
/// given).
pub fn check_intersecting(
    sys: &CycleSystem,
    anchor: Option<&BTreeSet<u32>>,
) -> IntersectionReport {
    let all_labels = sys.host.vertex_labels();
    let lab_idx: BTreeMap<u32, usize> =
        all_labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let words = all_labels.len().div_ceil(64);
    let masks: Vec<Vec<u64>> = sys
        .cycles
        .iter()
        .map(|c| {
            let mut m = vec![0u64; words];
            for &x in c.vertices() {
                if let Some(&i) = lab_idx.get(&x) {
                    if anchor.map_or(true, |a| a.contains(&x)) {
                        m[i / 64] |= 1 << (i % 64);
                    }
                }
            }
            m
        })
        .collect();
    for i in 0..masks.len() {
        for j in (i + 1)..masks.len() {
            let meets = masks[i].iter().zip(&masks[j]).any(|(a, b)| a & b != 0);
            if !meets {
                return IntersectionReport {
                    pass: false,
                    witness: Some((sys.cycles[i].clone(), sys.cycles[j].clone())),
                };
            }
        }
    }
    IntersectionReport { pass: true, witness: None }
}

/// True iff {v1 - v2 mod w} covers all of Z_w; by the translate lemma this is
/// equivalent to every pair of translates of V1 and V2 intersecting.
pub fn difference_cover(v1: &BTreeSet<u32>, v2: &BTreeSet<u32>, w: u32) -> bool {
    let mut hit = vec![false; w as usize];
    let mut remaining = w;
    for &a in v1 {
        for &b in v2 {
            let d = ((i64::from(a) - i64::from(b)).rem_euclid(i64::from(w))) as usize;
            if !hit[d] {
                hit[d] = true;
                remaining -= 1;
                if remaining == 0 {
                    return true;
                }
            }
        }
    }
    false
}
