//! Finite-group arithmetic for the two acting groups: the cyclic group Z_n
//! and the dihedral group D_{4s-2} of order 4s-2.
//!
//! Dihedral elements are stored in the canonical form x^j * l^e with
//! j reduced mod 2s-1 and e in {0,1}; the product rule follows from the
//! defining relation l*x = x^{-1}*l, so no word rewriting is needed.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("elements belong to different groups: {0} vs {1}")]
    SpecMismatch(GroupSpec, GroupSpec),
}

/// One of the two group families used by the constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupSpec {
    /// Z_n, n >= 1.
    Cyclic { n: u32 },
    /// D_{4s-2} = <x, l | x^{2s-1} = l^2 = 1, l*x = x^{-1}*l>, s >= 2.
    Dihedral { s: u32 },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic { n } => write!(f, "Z_{n}"),
            GroupSpec::Dihedral { s } => write!(f, "D_{}", 4 * s - 2),
        }
    }
}

impl GroupSpec {
    pub fn cyclic(n: u32) -> GroupSpec {
        assert!(n >= 1, "cyclic group order must be positive");
        GroupSpec::Cyclic { n }
    }

    pub fn dihedral(s: u32) -> GroupSpec {
        assert!(s >= 2, "dihedral parameter s must be at least 2");
        GroupSpec::Dihedral { s }
    }

    pub fn order(&self) -> u32 {
        match *self {
            GroupSpec::Cyclic { n } => n,
            GroupSpec::Dihedral { s } => 4 * s - 2,
        }
    }

    /// Order of the rotation part: n for Z_n, 2s-1 for D_{4s-2}.
    fn rot_order(&self) -> u32 {
        match *self {
            GroupSpec::Cyclic { n } => n,
            GroupSpec::Dihedral { s } => 2 * s - 1,
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { spec: *self, rot: 0, refl: false }
    }

    /// The rotation generator: 1 in Z_n, x in D_{4s-2}.
    pub fn rotation(&self) -> GroupElement {
        self.element(i64::from(1 % self.rot_order()), false)
    }

    /// Builds the element with rotation exponent `rot` (reduced) and, for
    /// dihedral groups, reflection bit `refl`.
    pub fn element(&self, rot: i64, refl: bool) -> GroupElement {
        let m = i64::from(self.rot_order());
        let rot = rot.rem_euclid(m) as u32;
        match self {
            GroupSpec::Cyclic { .. } => {
                assert!(!refl, "cyclic groups have no reflection part");
                GroupElement { spec: *self, rot, refl: false }
            }
            GroupSpec::Dihedral { .. } => GroupElement { spec: *self, rot, refl },
        }
    }

    /// All elements in index order (see [`GroupSpec::element_index`]).
    pub fn elements(&self) -> Vec<GroupElement> {
        let m = self.rot_order();
        let mut out = Vec::with_capacity(self.order() as usize);
        for j in 0..m {
            out.push(GroupElement { spec: *self, rot: j, refl: false });
        }
        if matches!(self, GroupSpec::Dihedral { .. }) {
            for j in 0..m {
                out.push(GroupElement { spec: *self, rot: j, refl: true });
            }
        }
        out
    }

    /// A stable index in [0, order): residues for Z_n; for D_{4s-2} the
    /// rotations come first, then the reflections x^j*l.
    pub fn element_index(&self, g: &GroupElement) -> u32 {
        assert_eq!(*self, g.spec);
        if g.refl {
            self.rot_order() + g.rot
        } else {
            g.rot
        }
    }

    /// All elements g != 1 with g*g = 1.
    pub fn involutions(&self) -> Vec<GroupElement> {
        self.elements()
            .into_iter()
            .filter(|g| {
                !g.is_identity() && g.compose(g).expect("same spec").is_identity()
            })
            .collect()
    }

    /// The involution used to form the removed 1-factor: the unique
    /// involution n/2 of an even-order cyclic group, or the generator l of a
    /// dihedral group. `None` for odd-order cyclic groups.
    pub fn canonical_involution(&self) -> Option<GroupElement> {
        match *self {
            GroupSpec::Cyclic { n } if n % 2 == 0 => Some(self.element(i64::from(n / 2), false)),
            GroupSpec::Cyclic { .. } => None,
            GroupSpec::Dihedral { .. } => Some(self.element(0, true)),
        }
    }
}

/// An element of a [`GroupSpec`], always kept in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    spec: GroupSpec,
    /// Residue in Z_n, or the exponent j of x^j * l^e.
    rot: u32,
    /// The e bit of x^j * l^e; always false for cyclic elements.
    refl: bool,
}

impl GroupElement {
    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn rot(&self) -> u32 {
        self.rot
    }

    pub fn refl(&self) -> bool {
        self.refl
    }

    pub fn is_identity(&self) -> bool {
        self.rot == 0 && !self.refl
    }

    /// Group product. Cyclic: modular addition. Dihedral:
    /// (x^a l^e)(x^b l^f) = x^{a + (-1)^e b} l^{e xor f}.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        if self.spec != other.spec {
            return Err(GroupError::SpecMismatch(self.spec, other.spec));
        }
        let b = if self.refl { -i64::from(other.rot) } else { i64::from(other.rot) };
        Ok(self
            .spec
            .element(i64::from(self.rot) + b, self.refl ^ other.refl))
    }

    pub fn inverse(&self) -> GroupElement {
        if self.refl {
            // Reflections are involutions: (x^j l)^{-1} = x^j l.
            *self
        } else {
            self.spec.element(-i64::from(self.rot), false)
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.spec {
            GroupSpec::Cyclic { .. } => write!(f, "{}", self.rot),
            GroupSpec::Dihedral { .. } => {
                if self.refl {
                    write!(f, "x^{}*l", self.rot)
                } else {
                    write!(f, "x^{}", self.rot)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d6() -> GroupSpec {
        GroupSpec::dihedral(2)
    }

    #[test]
    fn cyclic_compose_and_inverse() {
        let z16 = GroupSpec::cyclic(16);
        let a = z16.element(7, false);
        let b = z16.element(14, false);
        assert_eq!(a.compose(&b).unwrap(), z16.element(5, false));
        assert_eq!(z16.element(3, false).inverse(), z16.element(13, false));
        assert_eq!(z16.identity().inverse(), z16.identity());
    }

    #[test]
    fn dihedral_relations() {
        let g = d6();
        let x = g.element(1, false);
        let xl = g.element(1, true);
        let l = g.element(0, true);
        // (x^j l)^2 = 1
        assert!(xl.compose(&xl).unwrap().is_identity());
        assert_eq!(xl.inverse(), xl);
        // l x = x^{-1} l = x^2 l in D_6
        assert_eq!(l.compose(&x).unwrap(), g.element(2, true));
    }

    #[test]
    fn involutions_of_each_family() {
        let z16 = GroupSpec::cyclic(16);
        assert_eq!(z16.involutions(), vec![z16.element(8, false)]);
        assert!(GroupSpec::cyclic(15).involutions().is_empty());
        let g = d6();
        assert_eq!(
            g.involutions(),
            vec![g.element(0, true), g.element(1, true), g.element(2, true)]
        );
    }

    #[test]
    fn spec_mismatch_is_an_error() {
        let a = GroupSpec::cyclic(5).identity();
        let b = GroupSpec::cyclic(7).identity();
        assert!(matches!(a.compose(&b), Err(GroupError::SpecMismatch(_, _))));
    }

    fn all_small_specs() -> Vec<GroupSpec> {
        let mut specs: Vec<GroupSpec> = (1..=64).map(GroupSpec::cyclic).collect();
        specs.extend((2..=16).map(GroupSpec::dihedral).filter(|g| g.order() <= 64));
        specs
    }

    #[test]
    fn group_axioms_up_to_order_64() {
        for spec in all_small_specs() {
            let els = spec.elements();
            assert_eq!(els.len(), spec.order() as usize);
            let e = spec.identity();
            for a in &els {
                assert_eq!(a.compose(&e).unwrap(), *a);
                assert_eq!(e.compose(a).unwrap(), *a);
                assert!(a.compose(&a.inverse()).unwrap().is_identity());
            }
            // Associativity: exhaustive for small orders, sampled above 24.
            let step = if spec.order() > 24 { 5 } else { 1 };
            for a in els.iter().step_by(step) {
                for b in els.iter().step_by(step) {
                    for c in els.iter().step_by(step) {
                        let lhs = a.compose(b).unwrap().compose(c).unwrap();
                        let rhs = a.compose(&b.compose(c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn dihedral_even_rotations_exhaust_nontrivial_rotations() {
        // <x> \ {1} = {x^{+-2i} | 1 <= i <= s-1}
        for s in 2..=20u32 {
            let g = GroupSpec::dihedral(s);
            let mut seen = std::collections::BTreeSet::new();
            for i in 1..=(s - 1) as i64 {
                seen.insert(g.element(2 * i, false));
                seen.insert(g.element(-2 * i, false));
            }
            let expected: std::collections::BTreeSet<_> = g
                .elements()
                .into_iter()
                .filter(|e| !e.refl() && !e.is_identity())
                .collect();
            assert_eq!(seen, expected);
        }
    }

    #[test]
    fn dihedral_coset_decomposition_is_unique() {
        // D_{4s-2} = {1, x^j l} . <x>: every element is uniquely (1 or x^j l) * x^a.
        for s in 2..=6u32 {
            let g = GroupSpec::dihedral(s);
            for j in 0..(2 * s - 1) as i64 {
                let xjl = g.element(j, true);
                let mut seen = std::collections::BTreeSet::new();
                for a in 0..(2 * s - 1) as i64 {
                    let xa = g.element(a, false);
                    seen.insert(xa);
                    seen.insert(xjl.compose(&xa).unwrap());
                }
                assert_eq!(seen.len(), g.order() as usize);
            }
        }
    }
}
