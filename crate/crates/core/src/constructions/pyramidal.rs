//! 2-pyramidal constructions: the dihedral CS(4s, 4), the intersecting
//! CS(4t, 2t) and CS(6t, 2t), and the Hamiltonian control system.

use crate::cycle::Cycle;
use crate::group::GroupSpec;
use crate::starter::{expand_pyramidal, PyramidalStarter};
use crate::system::{CycleSystem, HostGraph, LabeledCycle, LabeledSystem, Provenance};
use crate::verifier::check_decomposition;

use super::paths::paths_ab;

/// The CS(4s, 4) starter over D_{4s-2}: C_0 = (inf, 1, inf', xλ) and
/// C_i = (x^i, x^{-i}, λx^i, λx^{-i}).
pub fn four_starter(s: u32) -> PyramidalStarter {
    assert!(s >= 2, "the dihedral construction needs s >= 2");
    let g = GroupSpec::dihedral(s);
    let l = g.element(0, true);
    let mut cycles = vec![Cycle::new(vec![
        crate::cycle::Vertex::Infty,
        crate::cycle::Vertex::Group(g.identity()),
        crate::cycle::Vertex::InftyPrime,
        crate::cycle::Vertex::Group(g.element(1, true)),
    ])
    .expect("distinct")];
    for i in 1..i64::from(s) {
        let xi = g.element(i, false);
        let xmi = g.element(-i, false);
        cycles.push(
            Cycle::new(vec![
                crate::cycle::Vertex::Group(xi),
                crate::cycle::Vertex::Group(xmi),
                crate::cycle::Vertex::Group(l.compose(&xi).expect("same spec")),
                crate::cycle::Vertex::Group(l.compose(&xmi).expect("same spec")),
            ])
            .expect("distinct"),
        );
    }
    PyramidalStarter { cycles, group: g, lambda: l, t: 2 }
}

/// Unparalleled CS(4s, 4) over the dihedral group, s >= 2.
pub fn dihedral_four_cycle_system(s: u32) -> LabeledSystem {
    let starter = four_starter(s);
    let sys = expand_pyramidal(&starter).expect("the dihedral starter is valid for all s >= 2");
    LabeledSystem::new(sys, Provenance::Four { s })
}

fn cyclic_vertex(g: &GroupSpec, r: i64) -> crate::cycle::Vertex {
    crate::cycle::Vertex::Group(g.element(r, false))
}

/// The CS(4t, 2t) starter over Z_{4t-2}: C_1 doubles the path A at distance
/// 2t-1; C_2 threads inf and inf' through b_0 = 2t-1 and the path B.
pub fn int1_starter(t: u32) -> PyramidalStarter {
    assert!(t >= 3, "the intersecting CS(4t,2t) needs t >= 3");
    let g = GroupSpec::cyclic(4 * t - 2);
    let pair = paths_ab(t);
    let half = i64::from(2 * t - 1);

    let mut c1 = Vec::new();
    for &a in &pair.a {
        c1.push(cyclic_vertex(&g, a));
    }
    for &a in &pair.a {
        c1.push(cyclic_vertex(&g, a + half));
    }

    let mut c2 = vec![crate::cycle::Vertex::Infty, cyclic_vertex(&g, half)];
    for &b in &pair.b {
        c2.push(cyclic_vertex(&g, b));
    }
    c2.push(crate::cycle::Vertex::InftyPrime);
    for &b in pair.b.iter().rev() {
        c2.push(cyclic_vertex(&g, b + half));
    }
    c2.push(cyclic_vertex(&g, half + half));

    PyramidalStarter {
        cycles: vec![Cycle::new(c1).expect("distinct"), Cycle::new(c2).expect("distinct")],
        group: g,
        lambda: g.element(half, false),
        t,
    }
}

/// Intersecting CS(4t, 2t), t >= 3.
pub fn intersecting_cs_4t(t: u32) -> LabeledSystem {
    let starter = int1_starter(t);
    let sys = expand_pyramidal(&starter).expect("the CS(4t,2t) starter is valid for all t >= 3");
    LabeledSystem::new(sys, Provenance::Int1 { t })
}

/// The CS(6t, 2t) starter over Z_{6t-2} for odd t >= 3.
pub fn int2_starter(t: u32) -> PyramidalStarter {
    assert!(t >= 3 && t % 2 == 1, "the intersecting CS(6t,2t) needs odd t >= 3");
    if t == 3 {
        let g = GroupSpec::cyclic(16);
        let c1 = Cycle::new(vec![
            crate::cycle::Vertex::Infty,
            cyclic_vertex(&g, 0),
            cyclic_vertex(&g, 2),
            crate::cycle::Vertex::InftyPrime,
            cyclic_vertex(&g, 10),
            cyclic_vertex(&g, 8),
        ])
        .expect("distinct");
        let c2 = Cycle::new(
            [0, 3, 8, 7, 14, 4].iter().map(|&r| cyclic_vertex(&g, r)).collect(),
        )
        .expect("distinct");
        return PyramidalStarter {
            cycles: vec![c1, c2],
            group: g,
            lambda: g.element(8, false),
            t,
        };
    }
    let s = i64::from((t - 1) / 2);
    let g = GroupSpec::cyclic(6 * t - 2);
    let half = 3 * i64::from(t) - 1; // = 6s + 2, the involution of Z_{6t-2}

    // A = (0, 1, -1, 2, -2, ..., s-1, -(s-1), 3s+5), a (t-1)-path.
    let mut a = vec![0];
    for i in 1..s {
        a.push(i);
        a.push(-i);
    }
    a.push(3 * s + 5);

    let mut c1 = vec![crate::cycle::Vertex::Infty];
    for &x in &a {
        c1.push(cyclic_vertex(&g, x));
    }
    c1.push(crate::cycle::Vertex::InftyPrime);
    for &x in a.iter().rev() {
        c1.push(cyclic_vertex(&g, x + half));
    }

    let mut c2 = Vec::new();
    for i in 0..=s + 1 {
        c2.push(cyclic_vertex(&g, i));
        c2.push(cyclic_vertex(&g, 10 * s + 5 - i));
    }
    for j in s + 2..=2 * s - 1 {
        c2.push(cyclic_vertex(&g, j));
        c2.push(cyclic_vertex(&g, 10 * s + 3 - j));
    }
    c2.push(cyclic_vertex(&g, 2 * s));
    c2.push(cyclic_vertex(&g, 8 * s + 1));

    PyramidalStarter {
        cycles: vec![Cycle::new(c1).expect("distinct"), Cycle::new(c2).expect("distinct")],
        group: g,
        lambda: g.element(half, false),
        t,
    }
}

/// Intersecting CS(6t, 2t) for odd t >= 3.
pub fn intersecting_cs_6t(t: u32) -> LabeledSystem {
    let starter = int2_starter(t);
    let sys = expand_pyramidal(&starter).expect("the CS(6t,2t) starter is valid for all odd t >= 3");
    LabeledSystem::new(sys, Provenance::Int2 { t })
}

/// CS(v, v): a zig-zag decomposition of K_v - I into (v-2)/2 Hamiltonian
/// cycles on Z_{v-1} u {inf}, with inf labeled v-1.
pub fn hamiltonian_cs(v: u32) -> LabeledSystem {
    assert!(v >= 4 && v % 2 == 0, "hamiltonian_cs needs even v >= 4");
    let m = v / 2;
    let n = v - 1; // rotation modulus; label v-1 plays inf
    let modn = |x: i64| -> u32 { x.rem_euclid(i64::from(n)) as u32 };

    let mut base: Vec<i64> = vec![0];
    for k in 1..i64::from(m) {
        base.push(k);
        base.push(-k);
    }
    // base now has v-1 entries; prepend the fixed point.
    let mut cycles = Vec::new();
    for shift in 0..i64::from(m - 1) {
        let mut verts = vec![n];
        verts.extend(base.iter().map(|&x| modn(x + shift)));
        cycles.push(LabeledCycle::new(verts).expect("distinct"));
    }
    let sys = CycleSystem::new(cycles, HostGraph::kv_minus_i(v));
    let rep = check_decomposition(&sys);
    let factor = rep
        .recovered_factor
        .unwrap_or_else(|| panic!("zig-zag leftover is not a perfect matching for v={v}"));
    assert!(rep.pass, "zig-zag decomposition failed for v={v}");
    let host = HostGraph::CompleteMinusFactor { v, factor: Some(factor) };
    LabeledSystem::new(
        CycleSystem::new(sys.cycles, host),
        Provenance::Hamiltonian { v },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::{delta, orbit};
    use crate::starter::validate_pyramidal;
    use crate::verifier::{check_intersecting, find_parallel_class, SearchBudget, SearchOutcome};
    use std::collections::BTreeSet;

    #[test]
    fn four_system_shapes() {
        let sys = dihedral_four_cycle_system(2);
        assert_eq!(sys.cycle_count(), 6);
        assert!(check_decomposition(&sys.system).pass);
        // v(v-2)/8 cycles at v = 4s.
        let sys = dihedral_four_cycle_system(3);
        assert_eq!(sys.cycle_count(), 15);
        assert!(check_decomposition(&sys.system).pass);
    }

    #[test]
    fn four_has_no_parallel_class_at_small_orders() {
        for s in [2, 3] {
            let sys = dihedral_four_cycle_system(s);
            assert!(matches!(
                find_parallel_class(&sys.system, SearchBudget::default()),
                SearchOutcome::NoneExhaustive { .. }
            ));
        }
    }

    #[test]
    fn int1_starter_is_valid_and_short_orbit() {
        for t in 3..=10 {
            let st = int1_starter(t);
            let rep = validate_pyramidal(&st);
            assert!(rep.is_valid(), "t={t}: {rep}");
            for c in &st.cycles {
                let (orb, class) = orbit(c, &st.group).unwrap();
                assert_eq!(class, crate::cycle::OrbitClass::Short, "t={t}");
                assert_eq!(orb.len(), (2 * t - 1) as usize);
            }
        }
    }

    #[test]
    fn int1_system_is_intersecting() {
        for t in [3, 4, 5, 6] {
            let sys = intersecting_cs_4t(t);
            assert!(check_decomposition(&sys.system).pass, "t={t}");
            assert!(check_intersecting(&sys.system, None).pass, "t={t}");
        }
    }

    #[test]
    fn int1_t3_cycle_count_and_unparalleled() {
        let sys = intersecting_cs_4t(3);
        assert_eq!(sys.cycle_count(), 10);
        assert!(matches!(
            find_parallel_class(&sys.system, SearchBudget::default()),
            SearchOutcome::NoneExhaustive { .. }
        ));
    }

    #[test]
    fn int2_delta_c2_claims() {
        // t=3: ΔC_2 = Z_16 \ {0, ±2, 8}.
        let st = int2_starter(3);
        let d = delta(&st.cycles[1], &st.group).unwrap();
        let got: BTreeSet<u32> = d.support().iter().map(|e| e.rot()).collect();
        let want: BTreeSet<u32> = (0..16u32).filter(|&x| ![0, 2, 14, 8].contains(&x)).collect();
        assert_eq!(got, want);

        // t=2s+1 > 3: ΔC_2 = ±([2s-1, 4s+3] ∪ [4s+5, 6s+1]).
        for t in [5u32, 7, 9, 11] {
            let s = i64::from((t - 1) / 2);
            let w = 6 * i64::from(t) - 2;
            let st = int2_starter(t);
            let d = delta(&st.cycles[1], &st.group).unwrap();
            let got: BTreeSet<u32> = d.support().iter().map(|e| e.rot()).collect();
            let mut want = BTreeSet::new();
            for x in (2 * s - 1..=4 * s + 3).chain(4 * s + 5..=6 * s + 1) {
                want.insert(x.rem_euclid(w) as u32);
                want.insert((-x).rem_euclid(w) as u32);
            }
            assert_eq!(got, want, "t={t}");
        }
    }

    #[test]
    fn int2_system_checks() {
        for t in [3u32, 5, 7] {
            let sys = intersecting_cs_6t(t);
            assert!(check_decomposition(&sys.system).pass, "t={t}");
            assert!(check_intersecting(&sys.system, None).pass, "t={t}");
        }
        assert_eq!(intersecting_cs_6t(3).cycle_count(), 24);
    }

    #[test]
    fn hamiltonian_counts_and_class() {
        for v in [4u32, 6, 8, 10, 12] {
            let sys = hamiltonian_cs(v);
            assert_eq!(sys.cycle_count() as u32, (v - 2) / 2);
            assert!(check_decomposition(&sys.system).pass, "v={v}");
        }
        match find_parallel_class(&hamiltonian_cs(8).system, SearchBudget::default()) {
            SearchOutcome::Found(class) => assert_eq!(class.cycles.len(), 1),
            other => panic!("expected Found, got {other:?}"),
        }
    }
}
