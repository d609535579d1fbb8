//! Explicit pairs of orientations proving Frank number 2 for wheels,
//! Möbius ladders, prisms and the generalized Petersen graphs GP(2s+1, s).
//!
//! The rules are written in the family labelings of [`generate_family`]:
//! wheel hub `v_0 = 0` and rim `v_i = i`; Möbius rim `v_i = i - 1`; prism
//! outer `v_i = i - 1` and inner `u_i = k + i - 1`; GP outer `u_i = i - 1`
//! and inner `v_i = n + i - 1`. Indices in comments are 1-based and cyclic.
//! Every certificate is checked before it is returned; a rule that does not
//! verify is reported as an error rather than repaired.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use thiserror::Error;

use crate::certificate::{verify_certificate, Certificate, CertificateError};
use crate::graph::{generate_family, FamilyError, FamilySpec, Graph};
use crate::orientation::Orientation;
use crate::solver::OrientationSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    InvalidParameter(#[from] FamilyError),
    #[error("the {family} rule does not yield a certificate: {reason}")]
    Unverified { family: String, reason: String },
    #[error("no inner-cycle completion found for GP({n}, {s})", n = 2 * .0 + 1, s = .0)]
    CompletionNotFound(usize),
}

/// Collects arcs given as `(tail, head)` pairs; every edge must be set,
/// and setting an edge twice must agree.
struct Arcs<'g> {
    g: &'g Graph,
    arcs: Vec<Option<[usize; 2]>>,
}

impl<'g> Arcs<'g> {
    fn new(g: &'g Graph) -> Self {
        Arcs {
            g,
            arcs: vec![None; g.m()],
        }
    }

    fn set(&mut self, t: usize, h: usize) -> &mut Self {
        let e = self
            .g
            .edge_index(t, h)
            .unwrap_or_else(|| panic!("rule names a non-edge {t} {h}"));
        if let Some(old) = self.arcs[e] {
            assert_eq!(old, [t, h], "rule orients edge {e} both ways");
        }
        self.arcs[e] = Some([t, h]);
        self
    }

    /// Sets every edge still unset by `rule`, which receives its endpoints.
    fn rest(&mut self, rule: impl Fn(usize, usize) -> [usize; 2]) -> &mut Self {
        for (e, slot) in self.arcs.iter_mut().enumerate() {
            if slot.is_none() {
                let (u, v) = self.g.edge(e);
                *slot = Some(rule(u, v));
            }
        }
        self
    }

    fn orientation(&self) -> Orientation<'g> {
        let arcs: Vec<[usize; 2]> = self
            .arcs
            .iter()
            .enumerate()
            .map(|(e, a)| a.unwrap_or_else(|| panic!("rule leaves edge {e} unoriented")))
            .collect();
        Orientation::from_arcs(self.g, &arcs).expect("arcs follow the edges")
    }
}

fn certify(
    family: String,
    g: &Graph,
    orientations: &[Orientation<'_>],
) -> Result<Certificate, ConstructionError> {
    let unverified = |reason: String| ConstructionError::Unverified {
        family: family.clone(),
        reason,
    };
    let c = Certificate::from_orientations(g, orientations)
        .map_err(|e: CertificateError| unverified(e.to_string()))?;
    match verify_certificate(g, &c).failure {
        None => Ok(c),
        Some(f) => Err(unverified(f.to_string())),
    }
}

/// The two orientations of the wheel `W_n`.
pub fn wheel_orientations(g: &Graph, n: usize) -> [Orientation<'_>; 2] {
    let v = |i: usize| (i - 1) % n + 1;
    let mut first = Arcs::new(g);
    let mut second = Arcs::new(g);
    if n.is_multiple_of(2) {
        // rim circuit; spokes alternate, v_1 -> v_0 first; then all spokes reversed
        for i in 1..=n {
            first.set(v(i), v(i + 1));
            second.set(v(i), v(i + 1));
            if i % 2 == 1 {
                first.set(i, 0);
                second.set(0, i);
            } else {
                first.set(0, i);
                second.set(i, 0);
            }
        }
    } else {
        // path v_1 .. v_n plus v_1 -> v_n; spokes out to v_1 and v_2, then alternating
        for i in 1..n {
            first.set(i, i + 1);
        }
        first.set(1, n).set(0, 1).set(0, 2);
        for i in 3..=n {
            if i % 2 == 1 {
                first.set(i, 0);
            } else {
                first.set(0, i);
            }
        }
        // circuit v_n, v_{n-1}, .., v_1, v_n; odd rim vertices send their spokes to v_0
        for i in 1..=n {
            second.set(v(i + 1), v(i));
            if i % 2 == 1 {
                second.set(i, 0);
            } else {
                second.set(0, i);
            }
        }
    }
    [first.orientation(), second.orientation()]
}

pub fn wheel_certificate(n: usize) -> Result<Certificate, ConstructionError> {
    let g = generate_family(&FamilySpec::Wheel(n))?;
    certify(format!("wheel:{n}"), &g, &wheel_orientations(&g, n))
}

/// The two orientations of the Möbius ladder `M_n`.
pub fn mobius_orientations(g: &Graph, n: usize) -> [Orientation<'_>; 2] {
    let h = n / 2;
    let v = |i: usize| (i + n - 1) % n;
    let mut first = Arcs::new(g);
    let mut second = Arcs::new(g);
    for i in 1..=n {
        first.set(v(i), v(i + 1));
    }
    if h % 2 == 1 {
        // diagonals leave their odd endpoint; the second orientation reverses them
        for i in 1..=n {
            second.set(v(i), v(i + 1));
        }
        for i in 1..=h {
            let (odd, even) = if i % 2 == 1 { (i, i + h) } else { (i + h, i) };
            first.set(v(odd), v(even));
            second.set(v(even), v(odd));
        }
    } else {
        // diagonals alternate, ending with the arc into v_h
        for i in 1..=h {
            if i % 2 == 1 {
                first.set(v(i), v(i + h));
            } else {
                first.set(v(i + h), v(i));
            }
        }
        // v_1, v_2, v_{h+2}, v_{h+3}, v_3, v_4, .., v_{h-1}, v_h, v_n misses only v_{h+1}
        let mut circuit = Vec::new();
        for j in 0..h / 2 {
            circuit.extend([2 * j + 1, 2 * j + 2]);
            if j + 1 < h / 2 {
                circuit.extend([h + 2 * j + 2, h + 2 * j + 3]);
            }
        }
        circuit.push(n);
        for w in 0..circuit.len() {
            second.set(v(circuit[w]), v(circuit[(w + 1) % circuit.len()]));
        }
        second
            .set(v(h), v(h + 1))
            .set(v(h + 2), v(h + 1))
            .set(v(h + 1), v(1))
            .set(v(n), v(n - 1))
            .rest(|a, b| {
                // remaining chords run forward along the rim
                if (a + 1) % n == b {
                    [a, b]
                } else {
                    [b, a]
                }
            });
    }
    [first.orientation(), second.orientation()]
}

pub fn mobius_certificate(n: usize) -> Result<Certificate, ConstructionError> {
    let g = generate_family(&FamilySpec::Mobius(n))?;
    certify(format!("mobius:{n}"), &g, &mobius_orientations(&g, n))
}

/// The two orientations of the prism `P_k`.
pub fn prism_orientations(g: &Graph, k: usize) -> [Orientation<'_>; 2] {
    let v = |i: usize| (i + k - 1) % k;
    let u = |i: usize| k + (i + k - 1) % k;
    let mut first = Arcs::new(g);
    let mut second = Arcs::new(g);
    if k.is_multiple_of(2) {
        // outer circuit forward, inner circuit backward, odd v_i send their
        // spoke; the second orientation reverses the spokes
        for i in 1..=k {
            first.set(v(i), v(i + 1)).set(u(i + 1), u(i));
            second.set(v(i), v(i + 1)).set(u(i + 1), u(i));
            if i % 2 == 1 {
                first.set(v(i), u(i));
                second.set(u(i), v(i));
            } else {
                first.set(u(i), v(i));
                second.set(v(i), u(i));
            }
        }
    } else {
        // the second orientation has the circuits
        // v_1, u_1, u_2, v_2, v_3, .., v_k and u_1, u_k, .., u_2, v_2, v_1,
        // with odd v_i sending their spoke; the first uses the same circuits
        // as the even case and reverses every spoke of the second but v_1's
        second.set(v(2), v(1)).set(u(1), u(2));
        for i in 1..=k {
            first.set(v(i), v(i + 1)).set(u(i + 1), u(i));
            if i >= 2 {
                second.set(v(i), v(i + 1)).set(u(i + 1), u(i));
            }
            if i % 2 == 1 {
                second.set(v(i), u(i));
            } else {
                second.set(u(i), v(i));
            }
            if i == 1 || i % 2 == 0 {
                first.set(v(i), u(i));
            } else {
                first.set(u(i), v(i));
            }
        }
    }
    [first.orientation(), second.orientation()]
}

pub fn prism_certificate(k: usize) -> Result<Certificate, ConstructionError> {
    let g = generate_family(&FamilySpec::Prism(k))?;
    certify(format!("prism:{k}"), &g, &prism_orientations(&g, k))
}

/// The first orientation of GP(2s+1, s): a circuit through every vertex
/// but `v_{s+1}`,
/// `u_1, .., u_{2s+1}, v_{2s+1}, v_s, v_{2s}, v_{s-1}, .., v_2, v_{s+2}, v_1, u_1`,
/// both inner edges at `v_{s+1}` pointing into it, and the spoke at `u_i`
/// (`2 <= i <= 2s`) pointing to `u_i` exactly when `i` is odd. For odd `s`
/// the spoke at `v_{s+1}` points into it as well, so the inner edge
/// `v_{s+1} v_{2s+1}` is turned around to leave `v_{s+1}`.
pub fn gp_first_orientation(g: &Graph, s: usize) -> Orientation<'_> {
    let n = 2 * s + 1;
    let u = |i: usize| (i + n - 1) % n;
    let v = |i: usize| n + (i + n - 1) % n;
    let mut arcs = Arcs::new(g);
    for i in 1..=n {
        arcs.set(u(i), u(i + 1));
    }
    let mut inner = vec![n];
    for j in 0..s - 1 {
        inner.extend([s - j, 2 * s - j]);
    }
    inner.push(1);
    arcs.set(u(n), v(n));
    for w in inner.windows(2) {
        arcs.set(v(w[0]), v(w[1]));
    }
    arcs.set(v(1), u(1));
    arcs.set(v(1), v(s + 1));
    if s.is_multiple_of(2) {
        arcs.set(v(n), v(s + 1));
    } else {
        arcs.set(v(s + 1), v(n));
    }
    for i in 2..=2 * s {
        if i % 2 == 1 {
            arcs.set(v(i), u(i));
        } else {
            arcs.set(u(i), v(i));
        }
    }
    arcs.orientation()
}

/// The fixed part of the second orientation: the outer cycle reversed
/// except for `u_{2s-1} -> u_{2s}`, spokes as in the first orientation.
/// Inner edges are left to the completion search.
fn gp_second_base(g: &Graph, s: usize, first: &Orientation<'_>) -> (u64, Vec<usize>) {
    let n = 2 * s + 1;
    let u = |i: usize| (i + n - 1) % n;
    let mut bits = 0u64;
    let mut inner = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let forward = if a < n && b < n {
            let keep = (a, b) == (u(2 * s - 1), u(2 * s));
            let (t, _) = first.arc(e);
            // reversing the arc flips its direction bit
            (t == a) == keep
        } else if a < n {
            first.arc(e).0 == a
        } else {
            inner.push(e);
            false
        };
        if forward {
            bits |= 1 << e;
        }
    }
    (bits, inner)
}

fn gp_cache() -> &'static Mutex<HashMap<usize, Option<u64>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Option<u64>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Direction bits of the second orientation, found by exhausting the
/// `2^(2s+1)` inner-cycle assignments for the first one that makes the
/// pair a certificate. Cached per `s`.
pub fn gp_second_bits(g: &Graph, s: usize) -> Option<u64> {
    if let Some(&hit) = gp_cache().lock().expect("cache lock").get(&s) {
        return hit;
    }
    let first = gp_first_orientation(g, s);
    let space = OrientationSpace::new(g).expect("GP graphs up to s = 10 fit the packed engine");
    let first_bits = first.to_u64().expect("fits in 64 bits");
    let first_set = space.deletable(first_bits, true)?;
    let (base, inner) = gp_second_base(g, s, &first);
    let full = space.full_mask();
    let found = (0..1u64 << inner.len())
        .into_par_iter()
        .map(|assignment| {
            inner
                .iter()
                .enumerate()
                .filter(|&(j, _)| assignment >> j & 1 == 1)
                .fold(base, |acc, (_, &e)| acc | 1 << e)
        })
        .find_first(|&bits| {
            space
                .deletable(bits, true)
                .is_some_and(|d| d | first_set == full)
        });
    gp_cache().lock().expect("cache lock").insert(s, found);
    found
}

pub fn gp_orientations(g: &Graph, s: usize) -> Result<[Orientation<'_>; 2], ConstructionError> {
    let bits = gp_second_bits(g, s).ok_or(ConstructionError::CompletionNotFound(s))?;
    Ok([gp_first_orientation(g, s), Orientation::from_u64(g, bits)])
}

pub fn gp_certificate(s: usize) -> Result<Certificate, ConstructionError> {
    if s < 3 {
        return Err(FamilyError::InvalidParameter {
            family: "gp",
            reason: "s must be at least 3".into(),
        }
        .into());
    }
    if s > 10 {
        return Err(FamilyError::InvalidParameter {
            family: "gp",
            reason: "s above 10 exceeds 64 edges".into(),
        }
        .into());
    }
    let g = generate_family(&FamilySpec::GeneralizedPetersen { n: 2 * s + 1, k: s })?;
    let pair = gp_orientations(&g, s)?;
    certify(format!("gp:{},{s}", 2 * s + 1), &g, &pair)
}

/// The constructive certificate for a family member, if there is one.
pub fn family_certificate(spec: &FamilySpec) -> Option<Result<Certificate, ConstructionError>> {
    match *spec {
        FamilySpec::Wheel(n) => Some(wheel_certificate(n)),
        FamilySpec::Mobius(n) => Some(mobius_certificate(n)),
        FamilySpec::Prism(k) => Some(prism_certificate(k)),
        FamilySpec::GeneralizedPetersen { n, k } if n == 2 * k + 1 && k >= 3 => {
            Some(gp_certificate(k))
        }
        FamilySpec::K4 => Some(wheel_certificate(3).map(|c| Certificate {
            graph6: crate::graph::write_graph6(&crate::graph::k4()),
            ..c
        })),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheels() {
        for n in 3..=12 {
            let c = wheel_certificate(n).unwrap();
            assert_eq!(c.claimed_k, 2);
        }
        // odd case: the only spokes not deletable in the first orientation are v_n -> v_0 and v_0 -> v_1
        let n = 5;
        let g = generate_family(&FamilySpec::Wheel(n)).unwrap();
        let [first, _] = wheel_orientations(&g, n);
        let set = first.deletable_set().unwrap();
        let stuck: Vec<(usize, usize)> = (1..=n)
            .map(|i| g.edge_index(0, i).unwrap())
            .filter(|&e| !set.contains(e))
            .map(|e| first.arc(e))
            .collect();
        assert_eq!(stuck, vec![(0, 1), (5, 0)]);
    }

    #[test]
    fn mobius_ladders() {
        for n in (4..=16).step_by(2) {
            assert_eq!(mobius_certificate(n).unwrap().claimed_k, 2, "n = {n}");
        }
        assert!(mobius_certificate(7).is_err());
    }

    #[test]
    fn mobius_six_rotates() {
        let g = generate_family(&FamilySpec::Mobius(6)).unwrap();
        let [a, b] = mobius_orientations(&g, 6);
        let diagonals: Vec<usize> = (0..3).map(|i| g.edge_index(i, i + 3).unwrap()).collect();
        assert_eq!(a.flip_all(&diagonals), b);
    }

    #[test]
    fn prisms() {
        for k in 3..=12 {
            assert_eq!(prism_certificate(k).unwrap().claimed_k, 2, "k = {k}");
        }
    }

    #[test]
    fn gp_first_has_long_circuit_with_chords() {
        for s in 3..=6 {
            let n = 2 * s + 1;
            let g = generate_family(&FamilySpec::GeneralizedPetersen { n, k: s }).unwrap();
            let o = gp_first_orientation(&g, s);
            assert!(o.is_strongly_connected());
            let set = o.deletable_set().unwrap();
            // spokes u_i v_i for 2 <= i <= 2s, i != s + 1, are chords of the long circuit
            for i in (2..=2 * s).filter(|&i| i != s + 1) {
                assert!(
                    set.contains(g.edge_index(i - 1, n + i - 1).unwrap()),
                    "s = {s}, spoke {i}"
                );
            }
            assert_eq!(o.in_degree(n + s), 2);
        }
    }

    #[test]
    fn gp_small() {
        for s in 3..=6 {
            assert_eq!(gp_certificate(s).unwrap().claimed_k, 2, "s = {s}");
        }
        assert!(gp_certificate(2).is_err());
    }
}
