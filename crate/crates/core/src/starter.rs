//! Starter-system validation and orbit expansion.
//!
//! A 2-pyramidal starter is a small set of 2t-cycles over G u {inf, inf'}
//! whose G-orbits generate a CS(v, 2t) of K_v - I with v = |G| + 2; a
//! semiregular bipartite starter plays the same role for K_{w,w} under Z_w.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::cycle::{delta, orbit, oriented_delta, Cycle, OrbitClass, Vertex};
use crate::group::{GroupElement, GroupSpec};
use crate::system::{CycleSystem, HostGraph, LabeledCycle};

/// Identifier of one validated condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// Cycles are 2t-cycles over the right vertex domain.
    Shape,
    /// Exactly one cycle through inf, one through inf' (possibly the same),
    /// and the inf-cycle has a short orbit.
    InfinityCycles,
    /// Differences cover G minus the identity and the involution.
    DeltaCoverage,
    /// Orbit-weighted differences hit each required element exactly once and
    /// never hit the identity or the involution. A surplus here would break
    /// the edge count, so it is an error rather than a warning.
    DeltaExactness,
    /// s + 2*l <= v / 2t.
    OrbitBound,
    /// Bipartite: oriented differences equal Z_w with multiplicity one.
    OrientedDeltaExact,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub condition: Condition,
    pub pass: bool,
    pub witnesses: Vec<String>,
}

/// Structured pass/fail record, one entry per condition.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self, cond: Condition) -> bool {
        self.checks.iter().any(|c| c.condition == cond && !c.pass)
    }

    fn push(&mut self, condition: Condition, pass: bool, witnesses: Vec<String>) {
        self.checks.push(CheckResult { condition, pass, witnesses });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{:?}: {} {}",
                c.condition,
                if c.pass { "pass" } else { "FAIL" },
                c.witnesses.join(", ")
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
#[error("invalid starter system:\n{report}")]
pub struct InvalidStarter {
    pub report: ValidationReport,
}

/// A candidate 2-pyramidal starter (Definition-1 shape).
#[derive(Debug, Clone)]
pub struct PyramidalStarter {
    pub cycles: Vec<Cycle>,
    pub group: GroupSpec,
    /// The involution whose 1-factor {x, lambda*x} is removed.
    pub lambda: GroupElement,
    /// Half cycle length: every cycle must be a 2t-cycle.
    pub t: u32,
}

impl PyramidalStarter {
    pub fn order(&self) -> u32 {
        self.group.order() + 2
    }
}

pub fn validate_pyramidal(s: &PyramidalStarter) -> ValidationReport {
    let mut report = ValidationReport::default();
    let g = &s.group;
    let v = s.order();
    let two_t = (2 * s.t) as usize;

    // Shape: length, domain, and the involution input itself.
    let mut shape_witness = Vec::new();
    if s.lambda.spec() != *g || !s.lambda.compose(&s.lambda).map_or(false, |x| x.is_identity())
        || s.lambda.is_identity()
    {
        shape_witness.push(format!("{} is not an involution of {}", s.lambda, g));
    }
    if v % (2 * s.t) != 0 {
        shape_witness.push(format!("order {} is not a multiple of {}", v, 2 * s.t));
    }
    for c in &s.cycles {
        if c.len() != two_t {
            shape_witness.push(format!("cycle of length {} (expected {})", c.len(), two_t));
        }
        for vx in c.vertices() {
            match vx {
                Vertex::Group(e) if e.spec() == *g => {}
                Vertex::Infty | Vertex::InftyPrime => {}
                other => shape_witness.push(format!("vertex {other} outside {g} u {{inf,inf'}}")),
            }
        }
    }
    report.push(Condition::Shape, shape_witness.is_empty(), shape_witness);
    if !report.is_valid() {
        return report;
    }

    // Orbits are reused by several conditions.
    let orbits: Vec<(Vec<Cycle>, OrbitClass)> =
        s.cycles.iter().map(|c| orbit(c, g).expect("domain checked")).collect();

    // Condition 1.
    let mut w1 = Vec::new();
    let inf_cycles: Vec<usize> = (0..s.cycles.len())
        .filter(|&i| s.cycles[i].contains(&Vertex::Infty))
        .collect();
    let inf_prime_cycles: Vec<usize> = (0..s.cycles.len())
        .filter(|&i| s.cycles[i].contains(&Vertex::InftyPrime))
        .collect();
    if inf_cycles.len() != 1 {
        w1.push(format!("{} cycles contain inf", inf_cycles.len()));
    }
    if inf_prime_cycles.len() != 1 {
        w1.push(format!("{} cycles contain inf'", inf_prime_cycles.len()));
    }
    if let [i] = inf_cycles[..] {
        if orbits[i].1 != OrbitClass::Short {
            w1.push("the inf-cycle has a long orbit".to_string());
        }
    }
    report.push(Condition::InfinityCycles, w1.is_empty(), w1);

    // Condition 2: coverage of G \ {1, lambda}.
    let mut total = crate::cycle::DiffMultiset::new();
    let mut weighted = crate::cycle::DiffMultiset::new();
    for (c, (orb, _)) in s.cycles.iter().zip(&orbits) {
        let d = delta(c, g).expect("domain checked");
        total.extend(&d);
        for (el, k) in d.iter() {
            weighted.insert_times(*el, k * orb.len() as u32);
        }
    }
    let mut missing = Vec::new();
    for el in g.elements() {
        if el.is_identity() || el == s.lambda {
            continue;
        }
        if total.multiplicity(&el) == 0 {
            missing.push(format!("difference {el} uncovered"));
        }
    }
    report.push(Condition::DeltaCoverage, missing.is_empty(), missing);

    // Exactness: each required element must get weight exactly |G|, the
    // identity and lambda weight 0 (each starter edge, spread over its
    // orbit, covers |orbit| edges of its difference class).
    let mut exact = Vec::new();
    for el in g.elements() {
        let target = if el.is_identity() || el == s.lambda { 0 } else { g.order() };
        let got = weighted.multiplicity(&el);
        if got != target {
            exact.push(format!("difference {el}: weight {got}, expected {target}"));
        }
    }
    report.push(Condition::DeltaExactness, exact.is_empty(), exact);

    // Condition 3.
    let short = orbits.iter().filter(|(_, c)| *c == OrbitClass::Short).count() as u32;
    let long = orbits.len() as u32 - short;
    let bound_ok = 2 * s.t * (short + 2 * long) <= v;
    let w3 = if bound_ok {
        vec![]
    } else {
        vec![format!("s + 2l = {} exceeds v/2t = {}", short + 2 * long, v / (2 * s.t))]
    };
    report.push(Condition::OrbitBound, bound_ok, w3);

    report
}

/// Label of a pyramidal vertex: group elements by index, then inf, inf'.
pub fn pyramidal_label(g: &GroupSpec, v: &Vertex) -> u32 {
    match v {
        Vertex::Group(e) => g.element_index(e),
        Vertex::Infty => g.order(),
        Vertex::InftyPrime => g.order() + 1,
        Vertex::Bi { .. } => panic!("bipartite vertex in pyramidal labeling"),
    }
}

fn labeled(g: &GroupSpec, c: &Cycle) -> LabeledCycle {
    LabeledCycle::new(c.vertices().iter().map(|v| pyramidal_label(g, v)).collect())
        .expect("distinct vertices stay distinct under labeling")
}

/// The removed 1-factor {{x, lambda*x}} u {{inf, inf'}}, in label form.
pub fn pyramidal_factor(g: &GroupSpec, lambda: &GroupElement) -> Vec<(u32, u32)> {
    let mut factor = Vec::new();
    let mut seen = BTreeSet::new();
    for x in g.elements() {
        let y = lambda.compose(&x).expect("same spec");
        let (a, b) = (g.element_index(&x), g.element_index(&y));
        let e = if a <= b { (a, b) } else { (b, a) };
        if seen.insert(e) {
            factor.push(e);
        }
    }
    factor.push((g.order(), g.order() + 1));
    factor
}

/// Union of the starter orbits as a labeled CS(v, 2t) of K_v - I, with the
/// removed 1-factor carried explicitly.
pub fn expand_pyramidal(s: &PyramidalStarter) -> Result<CycleSystem, InvalidStarter> {
    let report = validate_pyramidal(s);
    if !report.is_valid() {
        return Err(InvalidStarter { report });
    }
    let g = &s.group;
    let mut cycles = BTreeSet::new();
    for c in &s.cycles {
        let (orb, _) = orbit(c, g).expect("validated");
        for tc in orb {
            cycles.insert(labeled(g, &tc));
        }
    }
    let host = HostGraph::CompleteMinusFactor {
        v: s.order(),
        factor: Some(pyramidal_factor(g, &s.lambda)),
    };
    Ok(CycleSystem::new(cycles.into_iter().collect(), host))
}

/// A candidate semiregular bipartite starter (Definition-3 shape).
#[derive(Debug, Clone)]
pub struct BipartiteStarter {
    pub cycles: Vec<Cycle>,
    pub w: u32,
    pub t: u32,
}

pub fn validate_bipartite(s: &BipartiteStarter) -> ValidationReport {
    let mut report = ValidationReport::default();
    let two_t = (2 * s.t) as usize;

    let mut shape = Vec::new();
    for c in &s.cycles {
        if c.len() != two_t {
            shape.push(format!("cycle of length {} (expected {})", c.len(), two_t));
        }
        for v in c.vertices() {
            match v {
                Vertex::Bi { z, side } if *z < s.w && *side < 2 => {}
                other => shape.push(format!("vertex {other} outside Z_{} x Z_2", s.w)),
            }
        }
    }
    report.push(Condition::Shape, shape.is_empty(), shape);
    if !report.is_valid() {
        return report;
    }

    let mut all = crate::cycle::DiffMultiset::new();
    let mut alternation = Vec::new();
    for c in &s.cycles {
        match oriented_delta(c, s.w) {
            Ok(d) => all.extend(&d),
            Err(e) => alternation.push(e.to_string()),
        }
    }
    if !alternation.is_empty() {
        report.push(Condition::Shape, false, alternation);
        return report;
    }

    let zw = GroupSpec::cyclic(s.w);
    let mut bad = Vec::new();
    for el in zw.elements() {
        match all.multiplicity(&el) {
            1 => {}
            0 => bad.push(format!("oriented difference {el} missing")),
            k => bad.push(format!("oriented difference {el} has multiplicity {k}")),
        }
    }
    report.push(Condition::OrientedDeltaExact, bad.is_empty(), bad);
    report
}

/// Label of a bipartite vertex: side 0 first, then side 1 offset by w.
pub fn bipartite_label(w: u32, v: &Vertex) -> u32 {
    match v {
        Vertex::Bi { z, side } => u32::from(*side) * w + z,
        other => panic!("non-bipartite vertex {other} in bipartite labeling"),
    }
}

/// Union of the Z_w-orbits as a labeled CS(K_{w,w}, 2t).
pub fn expand_bipartite(s: &BipartiteStarter) -> Result<CycleSystem, InvalidStarter> {
    let report = validate_bipartite(s);
    if !report.is_valid() {
        return Err(InvalidStarter { report });
    }
    let zw = GroupSpec::cyclic(s.w);
    let mut cycles = BTreeSet::new();
    for c in &s.cycles {
        let (orb, _) = orbit(c, &zw).expect("validated");
        for tc in orb {
            cycles.insert(LabeledCycle::new(
                tc.vertices().iter().map(|v| bipartite_label(s.w, v)).collect(),
            )
            .expect("distinct"));
        }
    }
    let host = HostGraph::CompleteBipartite {
        left: (0..s.w).collect(),
        right: (s.w..2 * s.w).collect(),
    };
    Ok(CycleSystem::new(cycles.into_iter().collect(), host))
}
