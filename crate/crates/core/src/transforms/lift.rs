//! Lifting a Frank certificate through a truncation.
//!
//! Each orientation is first reversed if necessary so that two arcs leave
//! the truncated vertex `v`; `a` is the tail of the arc entering `v` and
//! `b < c` are the other two neighbours. Edges away from `v` keep their
//! direction, spokes `v_x x` copy the direction of `v x`, and the triangle
//! `v_a v_b v_c` receives one of eight patterns. A smallest set `S` of
//! orientations (lexicographically first among the smallest) that makes
//! all three edges at `v` deletable decides the triangle: patterns for the
//! orientations in `S` are searched, all others use the default pattern.

use itertools::Itertools;
use serde::Serialize;

use super::{TransformError, TransformKind, TransformTrace};
use crate::certificate::{verify_certificate, Certificate};
use crate::graph::Graph;
use crate::orientation::Orientation;

/// Directions of the triangle edges: bit 0 orients `v_a v_b` as
/// `v_a -> v_b`, bit 1 orients `v_b v_c` as `v_b -> v_c`, bit 2 orients
/// `v_c v_a` as `v_c -> v_a`; a cleared bit reverses the arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TrianglePattern(pub u8);

impl TrianglePattern {
    /// The circuit `v_a -> v_b -> v_c -> v_a`.
    pub const DEFAULT: TrianglePattern = TrianglePattern(0b111);

    fn arcs(self, [va, vb, vc]: [usize; 3]) -> [[usize; 2]; 3] {
        let pick = |bit: u8, x: usize, y: usize| {
            if self.0 >> bit & 1 == 1 {
                [x, y]
            } else {
                [y, x]
            }
        };
        [pick(0, va, vb), pick(1, vb, vc), pick(2, vc, va)]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftRecord {
    /// Orientations that were reversed so that two arcs leave `v`.
    pub reversed: Vec<usize>,
    /// Roles `[a, b, c]` per orientation (source labels).
    pub roles: Vec<[usize; 3]>,
    /// The covering set `S`.
    pub cover: Vec<usize>,
    pub patterns: Vec<TrianglePattern>,
}

pub fn lift_certificate(
    g: &Graph,
    c: &Certificate,
    trace: &TransformTrace,
) -> Result<(Certificate, LiftRecord), TransformError> {
    if trace.kind != TransformKind::Truncate {
        return Err(TransformError::WrongTrace("truncation"));
    }
    let report = verify_certificate(g, c);
    if let Some(failure) = report.failure {
        return Err(TransformError::CertificateInvalid(failure.to_string()));
    }
    let g_v = crate::graph::parse_graph6(&trace.result)
        .map_err(|e| TransformError::CertificateInvalid(e.to_string()))?;
    let v = trace.vertex;
    let at_v = g.incident_edges(v).to_vec();

    let mut reversed = Vec::new();
    let mut normalized = Vec::with_capacity(c.claimed_k);
    for i in 0..c.claimed_k {
        let o = c.orientation(g, i).expect("verified");
        if o.in_degree(v) == 2 {
            reversed.push(i);
            normalized.push(o.reverse());
        } else {
            normalized.push(o);
        }
    }
    let roles: Vec<[usize; 3]> = normalized
        .iter()
        .map(|o| {
            let a = o.in_neighbors(v)[0];
            let mut rest = g.neighbors(v).iter().copied().filter(|&x| x != a);
            [
                a,
                rest.next().expect("degree 3"),
                rest.next().expect("degree 3"),
            ]
        })
        .collect();
    let deletable: Vec<u64> = normalized
        .iter()
        .map(|o| {
            o.deletable_set()
                .expect("verified")
                .iter()
                .fold(0, |acc, e| acc | 1 << e)
        })
        .collect();
    let needed = at_v.iter().fold(0u64, |acc, &e| acc | 1 << e);
    let cover = (1..=c.claimed_k)
        .flat_map(|size| (0..c.claimed_k).combinations(size))
        .find(|s| s.iter().fold(0, |acc, &i| acc | deletable[i]) & needed == needed)
        .expect("a verified certificate covers the edges at v");

    // the cycle vertex attached to each neighbour of v
    let corner = |x: usize| {
        let spoke =
            trace.edge_map[g.edge_index(v, x).expect("neighbour")].expect("spokes are kept");
        let (p, q) = g_v.edge(spoke);
        if p == x {
            q
        } else {
            p
        }
    };
    let base: Vec<Vec<[usize; 2]>> = normalized
        .iter()
        .map(|o| {
            let mut arcs = vec![[0, 0]; g_v.m()];
            for (e, slot) in trace.edge_map.iter().enumerate() {
                let image = slot.expect("truncation keeps every edge");
                let (t, h) = o.arc(e);
                let (p, q) = g_v.edge(image);
                let t_v = if t == v {
                    if p == h {
                        q
                    } else {
                        p
                    }
                } else {
                    t
                };
                let h_v = if h == v {
                    if p == t {
                        q
                    } else {
                        p
                    }
                } else {
                    h
                };
                arcs[image] = [t_v, h_v];
            }
            arcs
        })
        .collect();
    let build = |patterns: &[TrianglePattern]| -> Vec<Vec<[usize; 2]>> {
        base.iter()
            .zip(&roles)
            .zip(patterns)
            .map(|((arcs, &[a, b, cc]), &p)| {
                let mut arcs = arcs.clone();
                for [t, h] in p.arcs([corner(a), corner(b), corner(cc)]) {
                    arcs[g_v.edge_index(t, h).expect("triangle edge")] = [t, h];
                }
                arcs
            })
            .collect()
    };

    let choices = cover.iter().map(|_| 0u8..8).multi_cartesian_product();
    for choice in choices {
        let mut patterns = vec![TrianglePattern::DEFAULT; c.claimed_k];
        for (&i, &p) in cover.iter().zip(&choice) {
            patterns[i] = TrianglePattern(p);
        }
        let arc_lists = build(&patterns);
        let Ok(orientations) = arc_lists
            .iter()
            .map(|arcs| Orientation::from_arcs(&g_v, arcs))
            .collect::<Result<Vec<_>, _>>()
        else {
            continue;
        };
        if let Ok(lifted) = Certificate::from_orientations(&g_v, &orientations) {
            if verify_certificate(&g_v, &lifted).valid {
                let record = LiftRecord {
                    reversed,
                    roles,
                    cover,
                    patterns,
                };
                return Ok((lifted, record));
            }
        }
    }
    Err(TransformError::CertificateInvalid(
        "no triangle pattern completes the lift".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, k4, FamilySpec};
    use crate::solver::{frank_number_exact, Budget};
    use crate::transforms::truncate;

    fn exact_certificate(g: &Graph) -> Certificate {
        frank_number_exact(g, 3, &Budget::default())
            .unwrap()
            .certificate
            .unwrap()
    }

    #[test]
    fn k4_to_prism() {
        let g = k4();
        let c = exact_certificate(&g);
        for v in 0..4 {
            let (h, trace) = truncate(&g, v).unwrap();
            let (lifted, record) = lift_certificate(&g, &c, &trace).unwrap();
            assert_eq!(lifted.claimed_k, 2);
            assert!(verify_certificate(&h, &lifted).valid);
            assert_eq!(record.cover.len(), 2);
        }
    }

    #[test]
    fn petersen_to_tietze() {
        let g = generate_family(&FamilySpec::Petersen).unwrap();
        let c = exact_certificate(&g);
        let (h, trace) = truncate(&g, 0).unwrap();
        let (lifted, record) = lift_certificate(&g, &c, &trace).unwrap();
        assert_eq!(lifted.claimed_k, 3);
        assert!(verify_certificate(&h, &lifted).valid);
        assert!((2..=3).contains(&record.cover.len()));
    }

    #[test]
    fn rejects_other_traces() {
        let prism = generate_family(&FamilySpec::Prism(3)).unwrap();
        let (_, trace) = crate::transforms::contract_triangle(&prism, [0, 1, 2]).unwrap();
        let c = exact_certificate(&prism);
        assert!(matches!(
            lift_certificate(&prism, &c, &trace),
            Err(TransformError::WrongTrace(_))
        ));
    }
}
