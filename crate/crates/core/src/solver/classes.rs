//! Strongly connected orientations up to automorphism (and optionally reversal).

use std::collections::BTreeMap;

use serde::Serialize;

use super::space::{OrientationSpace, ScanOptions};
use super::SolverError;
use crate::graph::{automorphism_group, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientationClass {
    /// Orbit-minimal direction bits.
    pub representative: u64,
    pub size: usize,
    /// Deletable set of the representative.
    pub deletable: u64,
}

impl OrientationClass {
    pub fn deletable_count(&self) -> usize {
        self.deletable.count_ones() as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientationClasses {
    pub include_reversal: bool,
    pub group_order: usize,
    pub sc_orientations: usize,
    /// Sorted by representative.
    pub classes: Vec<OrientationClass>,
}

impl OrientationClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

/// How one automorphism moves direction bits.
struct EdgeAction {
    target: Vec<usize>,
    flip: u64,
}

impl EdgeAction {
    fn apply(&self, bits: u64) -> u64 {
        let bits = bits ^ self.flip;
        self.target
            .iter()
            .enumerate()
            .filter(|&(e, _)| bits >> e & 1 == 1)
            .fold(0, |acc, (_, &t)| acc | 1 << t)
    }
}

pub fn orientation_classes(
    g: &Graph,
    include_reversal: bool,
) -> Result<OrientationClasses, SolverError> {
    let group = automorphism_group(g)?;
    let space = OrientationSpace::new(g)?;
    let full = space.full_mask();
    let actions: Vec<EdgeAction> = group
        .elements
        .iter()
        .map(|perm| {
            let mut target = Vec::with_capacity(g.m());
            let mut flip = 0u64;
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                let (a, b) = (perm[u], perm[v]);
                target.push(g.edge_index(a, b).expect("automorphisms preserve edges"));
                if a > b {
                    flip |= 1 << e;
                }
            }
            EdgeAction { target, flip }
        })
        .collect();

    let opts = ScanOptions {
        fix_first_edge: false,
        ..ScanOptions::default()
    };
    let all = space.sc_orientations(&opts)?;
    let mut classes: BTreeMap<u64, OrientationClass> = BTreeMap::new();
    for &(bits, _) in &all {
        let mut rep = u64::MAX;
        for action in &actions {
            rep = rep.min(action.apply(bits));
            if include_reversal {
                rep = rep.min(action.apply(bits ^ full));
            }
        }
        classes
            .entry(rep)
            .or_insert_with(|| OrientationClass {
                representative: rep,
                size: 0,
                deletable: space
                    .deletable(rep, true)
                    .expect("images of SC orientations are SC"),
            })
            .size += 1;
    }
    Ok(OrientationClasses {
        include_reversal,
        group_order: group.order(),
        sc_orientations: all.len(),
        classes: classes.into_values().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, k4};

    #[test]
    fn cycle_circuits() {
        assert_eq!(orientation_classes(&cycle(5), true).unwrap().count(), 1);
        // reflections of C_5 reverse the circuit
        assert_eq!(orientation_classes(&cycle(5), false).unwrap().count(), 1);
    }

    #[test]
    fn k4_classes_by_hand() {
        // K4 has 24 strongly connected tournaments: each is a Hamiltonian
        // 4-circuit plus two chords, and all are equivalent under S4.
        let classes = orientation_classes(&k4(), false).unwrap();
        assert_eq!(classes.sc_orientations, 24);
        assert_eq!(classes.count(), 1);
        assert_eq!(classes.classes[0].size, 24);
        assert_eq!(orientation_classes(&k4(), true).unwrap().count(), 1);
    }

    #[test]
    fn class_sizes_sum_to_total() {
        let g = crate::graph::generate_family(&crate::graph::FamilySpec::Prism(3)).unwrap();
        for rev in [false, true] {
            let c = orientation_classes(&g, rev).unwrap();
            assert_eq!(
                c.classes.iter().map(|x| x.size).sum::<usize>(),
                c.sc_orientations
            );
        }
    }
}
