//! Local cubic modification, truncation and triangle contraction, with
//! traces that map orientations and certificates between the graphs.
//!
//! A local cubic modification at `v` keeps every other vertex label, gives
//! the first new cycle vertex the label of `v` and appends the rest.

mod lift;

pub use lift::{lift_certificate, LiftRecord, TrianglePattern};

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{cut_vertices, edge_connectivity, find_triangles, write_graph6, Graph};
use crate::orientation::Orientation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("vertex {vertex} has degree {degree}; at least 3 is needed")]
    DegreeTooSmall { vertex: usize, degree: usize },
    #[error("vertex {vertex} has degree {degree}; truncation needs degree 3")]
    WrongDegree { vertex: usize, degree: usize },
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("matching must list the {expected} neighbours of the vertex exactly once")]
    InvalidMatching { expected: usize },
    #[error("{0:?} is not a triangle")]
    NotATriangle([usize; 3]),
    #[error("contracting {0:?} would create a multiple edge")]
    WouldCreateMultiedge([usize; 3]),
    #[error("graph is only {0}-edge-connected")]
    NotThreeEdgeConnected(usize),
    #[error("no matching at vertex {0} keeps the graph 3-edge-connected")]
    MatchingNotFound(usize),
    #[error("orientation is not strongly connected")]
    NotStronglyConnected,
    #[error("trace does not describe a {0}")]
    WrongTrace(&'static str),
    #[error("certificate is invalid: {0}")]
    CertificateInvalid(String),
    #[error("cannot parse transform {0:?}")]
    Parse(String),
}

/// The neighbours of `vertex` in the order they are attached to the new
/// cycle `v_1, ..., v_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub vertex: usize,
    pub order: Vec<usize>,
}

impl Matching {
    /// Neighbours in increasing order.
    pub fn ascending(g: &Graph, vertex: usize) -> Self {
        Matching {
            vertex,
            order: g.neighbors(vertex).to_vec(),
        }
    }

    fn validate(&self, g: &Graph) -> Result<(), TransformError> {
        let mut sorted = self.order.clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(self.vertex) {
            return Err(TransformError::InvalidMatching {
                expected: g.degree(self.vertex),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransformKind {
    Lcm,
    Truncate,
    Contract,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformTrace {
    pub kind: TransformKind,
    pub source: String,
    pub result: String,
    /// Source vertex of each result vertex.
    pub vertex_origin: Vec<usize>,
    /// Result edge of each source edge; `None` for contracted triangle edges.
    pub edge_map: Vec<Option<usize>>,
    /// New cycle in cycle order (result labels) for a modification; the
    /// contracted triangle (source labels) for a contraction.
    pub cycle: Vec<usize>,
    /// The modified vertex (source label), or the new vertex `v_T` (result label).
    pub vertex: usize,
}

/// Replaces `v` by a cycle on `deg(v)` new vertices, attaching
/// `matching.order[j]` to the `j`-th cycle vertex.
pub fn local_cubic_modification(
    g: &Graph,
    matching: &Matching,
) -> Result<(Graph, TransformTrace), TransformError> {
    let v = matching.vertex;
    if v >= g.n() {
        return Err(TransformError::VertexOutOfRange(v));
    }
    let d = g.degree(v);
    if d < 3 {
        return Err(TransformError::DegreeTooSmall {
            vertex: v,
            degree: d,
        });
    }
    matching.validate(g)?;
    let n = g.n();
    let cycle: Vec<usize> = std::iter::once(v).chain(n..n + d - 1).collect();
    let mut pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| a != v && b != v)
        .collect();
    for (j, &x) in matching.order.iter().enumerate() {
        pairs.push((cycle[j], x));
        pairs.push((cycle[j], cycle[(j + 1) % d]));
    }
    let result = Graph::new(n + d - 1, pairs).expect("modification keeps the graph simple");
    let edge_map = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (a, b) = if a == v {
                (cycle[position(&matching.order, b)], b)
            } else if b == v {
                (a, cycle[position(&matching.order, a)])
            } else {
                (a, b)
            };
            result.edge_index(a, b)
        })
        .collect();
    let vertex_origin = (0..result.n())
        .map(|w| if w >= n { v } else { w })
        .collect();
    let trace = TransformTrace {
        kind: if d == 3 {
            TransformKind::Truncate
        } else {
            TransformKind::Lcm
        },
        source: write_graph6(g),
        result: write_graph6(&result),
        vertex_origin,
        edge_map,
        cycle,
        vertex: v,
    };
    Ok((result, trace))
}

fn position(order: &[usize], x: usize) -> usize {
    order
        .iter()
        .position(|&y| y == x)
        .expect("matching covers every neighbour")
}

/// Replaces a degree-3 vertex by a triangle.
pub fn truncate(g: &Graph, v: usize) -> Result<(Graph, TransformTrace), TransformError> {
    if v >= g.n() {
        return Err(TransformError::VertexOutOfRange(v));
    }
    if g.degree(v) != 3 {
        return Err(TransformError::WrongDegree {
            vertex: v,
            degree: g.degree(v),
        });
    }
    local_cubic_modification(g, &Matching::ascending(g, v))
}

const MATCHING_RETRIES: u64 = 64;

/// A matching at `v` whose local cubic modification is 3-edge-connected.
///
/// When `v` is a cut vertex, or has degree above 5, the neighbours are
/// grouped by the component of `G - v` they lie in and the groups are
/// interleaved around the new cycle, so that any two cycle edges separate
/// some group. The result is always checked; seeded shuffles of the
/// interleaving are tried if the check fails.
pub fn good_matching(g: &Graph, v: usize) -> Result<Matching, TransformError> {
    if v >= g.n() {
        return Err(TransformError::VertexOutOfRange(v));
    }
    let connectivity = edge_connectivity(g);
    if connectivity < 3 {
        return Err(TransformError::NotThreeEdgeConnected(connectivity));
    }
    let works = |m: &Matching| {
        local_cubic_modification(g, m).is_ok_and(|(h, _)| edge_connectivity(&h) >= 3)
    };
    let first = if g.degree(v) <= 5 && !cut_vertices(g).contains(&v) {
        Matching::ascending(g, v)
    } else {
        Matching {
            vertex: v,
            order: interleave(neighbor_groups(g, v)),
        }
    };
    if works(&first) {
        return Ok(first);
    }
    let mut groups = neighbor_groups(g, v);
    for attempt in 0..MATCHING_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(attempt);
        for group in &mut groups {
            group.shuffle(&mut rng);
        }
        groups.shuffle(&mut rng);
        let m = Matching {
            vertex: v,
            order: interleave(groups.clone()),
        };
        if works(&m) {
            return Ok(m);
        }
    }
    Err(TransformError::MatchingNotFound(v))
}

/// Neighbours of `v` grouped by component of `G - v`, largest group first.
fn neighbor_groups(g: &Graph, v: usize) -> Vec<Vec<usize>> {
    let mut component = vec![usize::MAX; g.n()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &start in g.neighbors(v) {
        if component[start] != usize::MAX {
            groups[component[start]].push(start);
            continue;
        }
        let id = groups.len();
        groups.push(vec![start]);
        component[start] = id;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if y != v && component[y] == usize::MAX {
                    component[y] = id;
                    stack.push(y);
                }
            }
        }
    }
    groups.sort_by_key(|group| std::cmp::Reverse(group.len()));
    groups
}

fn interleave(groups: Vec<Vec<usize>>) -> Vec<usize> {
    let longest = groups.iter().map(Vec::len).max().unwrap_or(0);
    (0..longest)
        .flat_map(|i| groups.iter().filter_map(move |group| group.get(i).copied()))
        .collect()
}

/// Identifies the vertices of triangle `t` into one vertex `v_T`, which
/// takes the smallest of the three labels; the other labels are compacted.
pub fn contract_triangle(
    g: &Graph,
    t: [usize; 3],
) -> Result<(Graph, TransformTrace), TransformError> {
    let mut tri = t;
    tri.sort_unstable();
    let [a, b, c] = tri;
    if c >= g.n() {
        return Err(TransformError::VertexOutOfRange(c));
    }
    if a == b || b == c || !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
        return Err(TransformError::NotATriangle(t));
    }
    if tri.iter().any(|&x| g.degree(x) != 3) {
        return Err(TransformError::WrongDegree {
            vertex: *tri
                .iter()
                .find(|&&x| g.degree(x) != 3)
                .expect("found above"),
            degree: tri
                .iter()
                .map(|&x| g.degree(x))
                .find(|&d| d != 3)
                .expect("found above"),
        });
    }
    let outside: Vec<usize> = tri
        .iter()
        .flat_map(|&x| g.neighbors(x).iter().copied().filter(|y| !tri.contains(y)))
        .collect();
    let mut distinct = outside.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != outside.len() {
        return Err(TransformError::WouldCreateMultiedge(t));
    }
    let relabel = |x: usize| -> usize {
        if tri.contains(&x) {
            a
        } else {
            x - usize::from(x > b) - usize::from(x > c)
        }
    };
    let pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(x, y)| !(tri.contains(&x) && tri.contains(&y)))
        .map(|&(x, y)| (relabel(x), relabel(y)))
        .collect();
    let result =
        Graph::new(g.n() - 2, pairs).expect("distinct outside neighbours keep the graph simple");
    let edge_map = g
        .edges()
        .iter()
        .map(|&(x, y)| {
            if tri.contains(&x) && tri.contains(&y) {
                None
            } else {
                result.edge_index(relabel(x), relabel(y))
            }
        })
        .collect();
    let mut vertex_origin = vec![0; result.n()];
    for x in (0..g.n()).rev() {
        vertex_origin[relabel(x)] = x;
    }
    let trace = TransformTrace {
        kind: TransformKind::Contract,
        source: write_graph6(g),
        result: write_graph6(&result),
        vertex_origin,
        edge_map,
        cycle: tri.to_vec(),
        vertex: a,
    };
    Ok((result, trace))
}

fn is_k4(g: &Graph) -> bool {
    g.n() == 4 && g.m() == 6
}

/// Contracts triangles, first in [`find_triangles`] order, until the graph
/// is triangle-free or is `K_4`.
pub fn reduce_to_triangle_free(g: &Graph) -> Result<(Graph, Vec<TransformTrace>), TransformError> {
    let mut current = g.clone();
    let mut traces = Vec::new();
    while !is_k4(&current) {
        let Some(&t) = find_triangles(&current).first() else {
            break;
        };
        let (next, trace) = contract_triangle(&current, t)?;
        traces.push(trace);
        current = next;
    }
    Ok((current, traces))
}

/// The inherited orientation of the source graph of a modification: each
/// source edge takes the direction of its image, with the new cycle
/// collapsed back to the modified vertex.
pub fn project_orientation<'g>(
    source: &'g Graph,
    o_v: &Orientation<'_>,
    trace: &TransformTrace,
) -> Result<Orientation<'g>, TransformError> {
    if trace.kind == TransformKind::Contract {
        return Err(TransformError::WrongTrace("local cubic modification"));
    }
    if !o_v.is_strongly_connected() {
        return Err(TransformError::NotStronglyConnected);
    }
    let arcs: Vec<[usize; 2]> = (0..source.m())
        .map(|e| {
            let image = trace.edge_map[e].expect("modifications map every edge");
            let (t, h) = o_v.arc(image);
            [trace.vertex_origin[t], trace.vertex_origin[h]]
        })
        .collect();
    let projected = Orientation::from_arcs(source, &arcs)
        .map_err(|_| TransformError::WrongTrace("this source graph"))?;
    if !projected.is_strongly_connected() {
        return Err(TransformError::NotStronglyConnected);
    }
    Ok(projected)
}

/// A transform as written on the command line: `truncate:v`,
/// `lcm:v[:x1,x2,...]` or `contract:a,b,c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransformSpec {
    Truncate(usize),
    Lcm {
        vertex: usize,
        order: Option<Vec<usize>>,
    },
    Contract([usize; 3]),
}

impl TransformSpec {
    pub fn apply(&self, g: &Graph) -> Result<(Graph, TransformTrace), TransformError> {
        match self {
            TransformSpec::Truncate(v) => truncate(g, *v),
            TransformSpec::Lcm {
                vertex,
                order: Some(order),
            } => local_cubic_modification(
                g,
                &Matching {
                    vertex: *vertex,
                    order: order.clone(),
                },
            ),
            TransformSpec::Lcm {
                vertex,
                order: None,
            } => local_cubic_modification(g, &good_matching(g, *vertex)?),
            TransformSpec::Contract(t) => contract_triangle(g, *t),
        }
    }
}

fn parse_list(text: &str) -> Option<Vec<usize>> {
    text.split(',').map(|x| x.trim().parse().ok()).collect()
}

impl FromStr for TransformSpec {
    type Err = TransformError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TransformError::Parse(s.to_string());
        let mut parts = s.splitn(3, ':');
        let kind = parts.next().ok_or_else(bad)?;
        let first = parts.next().ok_or_else(bad)?;
        let rest = parts.next();
        match (kind, rest) {
            ("truncate", None) => Ok(TransformSpec::Truncate(first.parse().map_err(|_| bad())?)),
            ("lcm", _) => Ok(TransformSpec::Lcm {
                vertex: first.parse().map_err(|_| bad())?,
                order: rest.map(|r| parse_list(r).ok_or_else(bad)).transpose()?,
            }),
            ("contract", None) => {
                let list = parse_list(first).ok_or_else(bad)?;
                let t: [usize; 3] = list.try_into().map_err(|_| bad())?;
                Ok(TransformSpec::Contract(t))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformSpec::Truncate(v) => write!(f, "truncate:{v}"),
            TransformSpec::Lcm {
                vertex,
                order: None,
            } => write!(f, "lcm:{vertex}"),
            TransformSpec::Lcm {
                vertex,
                order: Some(order),
            } => {
                let list: Vec<String> = order.iter().map(ToString::to_string).collect();
                write!(f, "lcm:{vertex}:{}", list.join(","))
            }
            TransformSpec::Contract([a, b, c]) => write!(f, "contract:{a},{b},{c}"),
        }
    }
}

/// Two copies of `K_4` glued at vertex 0, which becomes a cut vertex of
/// degree 6. The graph is 3-edge-connected.
pub fn glued_k4_pair() -> Graph {
    let block = |o: usize| {
        [
            (0, o),
            (0, o + 1),
            (0, o + 2),
            (o, o + 1),
            (o, o + 2),
            (o + 1, o + 2),
        ]
    };
    Graph::new(7, block(1).into_iter().chain(block(4))).expect("valid glued blocks")
}
