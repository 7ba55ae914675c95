//! The integer paths A and B feeding the intersecting CS(4t, 2t)
//! construction.
//!
//! For every t >= 3 there are a t-path A and a (t-2)-path B over Z with
//! a_t - a_1 = +-1, b_1 = 2t-2, and ΔA ⊎ ΔB = +-[2, 2t-3], each difference
//! exactly once. Four closed formulas cover t = 4s-1, 4s, 4s+1, 4s+2; the
//! two s=1 instances where a formula misses its postcondition (t = 3, 5)
//! use verified hand-built pairs instead.

use std::collections::BTreeSet;

/// A (t-path, (t-2)-path) pair over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbPair {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    /// True for the substituted small cases (t = 3 and t = 5) where the
    /// closed formulas fail their postcondition.
    pub fallback: bool,
}

/// Case split t = 4s + i with i in {-1, 0, 1, 2}: returns (s, i).
fn case_split(t: u32) -> (i64, i32) {
    let t = i64::from(t);
    match t % 4 {
        3 => ((t + 1) / 4, -1),
        0 => (t / 4, 0),
        1 => ((t - 1) / 4, 1),
        _ => ((t - 2) / 4, 2),
    }
}

/// Builds the (A, B) pair for any t >= 3.
pub fn paths_ab(t: u32) -> AbPair {
    assert!(t >= 3, "paths_ab requires t >= 3");
    // The s=1 instances of the i=-1 and i=1 formulas miss the endpoint or
    // difference postcondition; these fixed pairs satisfy it (and, for t=3,
    // also the tabulated vertex and difference sets).
    if t == 3 {
        return AbPair { a: vec![1, 3, 0], b: vec![4], fallback: true };
    }
    if t == 5 {
        return AbPair { a: vec![2, 0, 4, 10, 3], b: vec![8, 5, 10], fallback: true };
    }
    let (s, case) = case_split(t);
    let mut a = Vec::new();
    let mut b = Vec::new();
    match case {
        -1 => {
            a.push(2 * s - 1);
            for i in 0..s {
                a.push(i);
                a.push(4 * s - 1 - i);
            }
            for i in s..=2 * s - 2 {
                a.push(i);
                a.push(4 * s - 2 - i);
            }
            for i in 1..=2 * s - 2 {
                b.push(8 * s - 3 - i);
                b.push(i);
            }
            b.push(6 * s - 2);
        }
        0 => {
            a.push(2 * s);
            for i in 0..s {
                a.push(i);
                a.push(4 * s - i);
            }
            for i in s..=2 * s - 2 {
                a.push(i);
                a.push(4 * s - 1 - i);
            }
            a.push(2 * s - 1);
            for i in 1..=2 * s - 1 {
                b.push(8 * s - 1 - i);
                b.push(i);
            }
        }
        1 => {
            a.push(2 * s);
            for i in 0..=s {
                a.push(i);
                a.push(4 * s + 2 - i);
            }
            for i in s + 1..=2 * s - 1 {
                a.push(i);
                a.push(4 * s - i);
            }
            for i in 1..=2 * s - 1 {
                b.push(8 * s + 1 - i);
                b.push(i);
            }
            b.push(4 * s - 2);
        }
        _ => {
            a.push(2 * s + 1);
            for i in 0..=s {
                a.push(i);
                a.push(4 * s + 3 - i);
            }
            for i in s + 1..=2 * s - 1 {
                a.push(i);
                a.push(4 * s + 1 - i);
            }
            a.push(2 * s);
            for i in 1..=2 * s - 1 {
                b.push(8 * s + 3 - i);
                b.push(i);
            }
            b.push(6 * s + 3);
            b.push(4 * s + 3);
        }
    }
    AbPair { a, b, fallback: false }
}

/// Absolute differences of consecutive vertices (paths live in Z, so the
/// absolute value is the canonical representative of +-d).
pub fn path_deltas(p: &[i64]) -> Vec<i64> {
    p.windows(2).map(|w| (w[1] - w[0]).abs()).collect()
}

fn interval(lo: i64, hi: i64) -> BTreeSet<i64> {
    (lo..=hi).collect()
}

/// The tabulated (ΔA, ΔB) sets as absolute values, or `None` for t = 5
/// where the tabulated row is infeasible (five differences claimed for the
/// four edges of A).
pub fn expected_deltas(t: u32) -> Option<(BTreeSet<i64>, BTreeSet<i64>)> {
    assert!(t >= 3);
    let (s, case) = case_split(t);
    match case {
        -1 => Some((interval(2, 4 * s - 1), interval(4 * s, 8 * s - 5))),
        0 => Some((interval(2, 4 * s), interval(4 * s + 1, 8 * s - 3))),
        1 => {
            if s == 1 {
                return None;
            }
            let mut da = interval(2, 4 * s + 2);
            da.remove(&(2 * s - 1));
            let mut db = interval(4 * s + 3, 8 * s - 1);
            db.insert(2 * s - 1);
            Some((da, db))
        }
        _ => {
            let mut da = interval(2, 4 * s + 3);
            da.remove(&(2 * s));
            let mut db = interval(4 * s + 4, 8 * s + 1);
            db.insert(2 * s);
            Some((da, db))
        }
    }
}

/// The tabulated vertex sets (V(A), V(B)), or `None` for the t = 5
/// substitution whose vertex set differs from the table.
pub fn expected_vertex_sets(t: u32) -> Option<(BTreeSet<i64>, BTreeSet<i64>)> {
    assert!(t >= 3);
    if t == 5 {
        return None;
    }
    let (s, case) = case_split(t);
    Some(match case {
        -1 => {
            let mut va = interval(0, 4 * s - 1);
            va.remove(&(3 * s - 1));
            let vb: BTreeSet<i64> = interval(1, 2 * s - 2)
                .union(&interval(6 * s - 2, 8 * s - 4))
                .copied()
                .collect();
            (va, vb)
        }
        0 => {
            let mut va = interval(0, 4 * s);
            va.remove(&(3 * s));
            let vb = interval(1, 2 * s - 1)
                .union(&interval(6 * s, 8 * s - 2))
                .copied()
                .collect();
            (va, vb)
        }
        1 => {
            let mut va = interval(0, 4 * s + 2);
            va.remove(&(3 * s));
            va.remove(&(3 * s + 1));
            let mut vb: BTreeSet<i64> = interval(1, 2 * s - 1)
                .union(&interval(6 * s + 2, 8 * s))
                .copied()
                .collect();
            vb.insert(4 * s - 2);
            (va, vb)
        }
        _ => {
            let mut va = interval(0, 4 * s + 3);
            va.remove(&(3 * s + 1));
            va.remove(&(3 * s + 2));
            let mut vb: BTreeSet<i64> = interval(1, 2 * s - 1)
                .union(&interval(6 * s + 3, 8 * s + 2))
                .copied()
                .collect();
            vb.insert(4 * s + 3);
            (va, vb)
        }
    })
}

/// Checks the postcondition every (A, B) pair must satisfy, fallback or not.
pub fn check_postconditions(t: u32, p: &AbPair) -> Result<(), String> {
    let t64 = i64::from(t);
    if p.a.len() != t as usize {
        return Err(format!("A has {} vertices, expected {}", p.a.len(), t));
    }
    if p.b.len() != (t - 2) as usize {
        return Err(format!("B has {} vertices, expected {}", p.b.len(), t - 2));
    }
    let end = p.a[p.a.len() - 1] - p.a[0];
    if end.abs() != 1 {
        return Err(format!("a_t - a_1 = {end}, expected +-1"));
    }
    if p.b[0] != 2 * t64 - 2 {
        return Err(format!("b_1 = {}, expected {}", p.b[0], 2 * t64 - 2));
    }
    for path in [&p.a, &p.b] {
        let set: BTreeSet<i64> = path.iter().copied().collect();
        if set.len() != path.len() {
            return Err("repeated vertex within a path".to_string());
        }
    }
    let mut all = path_deltas(&p.a);
    all.extend(path_deltas(&p.b));
    all.sort_unstable();
    let want: Vec<i64> = (2..=2 * t64 - 3).collect();
    if all != want {
        return Err(format!("ΔA ⊎ ΔB = {all:?}, expected [2, {}] once each", 2 * t64 - 3));
    }
    Ok(())
}
