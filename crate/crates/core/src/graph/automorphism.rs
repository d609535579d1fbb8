//! Automorphisms, isomorphism and canonical forms for small graphs.
//!
//! Automorphisms and isomorphisms come from a permutation search that maps
//! vertices in breadth-first order and prunes on degree and on adjacency to
//! the already mapped vertices. Canonical forms use partition refinement
//! with individualization, exploring every leaf of the search tree and
//! keeping the lexicographically largest relabeled graph6 string.

use thiserror::Error;

use super::{write_graph6, Graph};

/// Largest order accepted by [`automorphism_group`].
pub const MAX_AUTOMORPHISM_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomorphismError {
    #[error(
        "graph has {0} vertices; automorphism enumeration is limited to {MAX_AUTOMORPHISM_ORDER}"
    )]
    TooLarge(usize),
}

/// The full automorphism group of a graph as an explicit element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    /// Every automorphism as a vertex map `v -> perm[v]`; the identity is first.
    pub elements: Vec<Vec<usize>>,
    /// A generating subset of `elements`.
    pub generators: Vec<Vec<usize>>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

pub fn automorphism_group(g: &Graph) -> Result<AutGroup, AutomorphismError> {
    if g.n() > MAX_AUTOMORPHISM_ORDER {
        return Err(AutomorphismError::TooLarge(g.n()));
    }
    let elements = automorphisms(g);
    let generators = generators_of(g.n(), &elements);
    Ok(AutGroup {
        elements,
        generators,
    })
}

/// All automorphisms of `g`, identity first, then in lexicographic order.
/// No size limit; intended for sparse graphs where the search stays small.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    Matcher::new(g, g).search(&mut |perm| {
        out.push(perm.to_vec());
        true
    });
    out.sort();
    // the identity is the lexicographically smallest permutation
    out
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.m() != h.m() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let mut found = None;
    Matcher::new(g, h).search(&mut |perm| {
        found = Some(perm.to_vec());
        false
    });
    found
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

fn generators_of(n: usize, elements: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let identity: Vec<usize> = (0..n).collect();
    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut closure: Vec<Vec<usize>> = vec![identity];
    for element in elements {
        if closure.contains(element) {
            continue;
        }
        generators.push(element.clone());
        closure = close(&generators, n);
    }
    generators
}

fn close(generators: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut members: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut i = 0;
    while i < members.len() {
        for gen in generators {
            let composed: Vec<usize> = (0..n).map(|v| gen[members[i][v]]).collect();
            if !members.contains(&composed) {
                members.push(composed);
            }
        }
        i += 1;
    }
    members
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    // for each position in `order`, an earlier position adjacent to it
    anchor: Vec<Option<usize>>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a Graph, h: &'a Graph) -> Self {
        let n = g.n();
        let mut order = Vec::with_capacity(n);
        let mut position = vec![usize::MAX; n];
        let mut anchor = Vec::with_capacity(n);
        for root in 0..n {
            if position[root] != usize::MAX {
                continue;
            }
            position[root] = order.len();
            order.push(root);
            anchor.push(None);
            let mut head = order.len() - 1;
            while head < order.len() {
                let v = order[head];
                for &w in g.neighbors(v) {
                    if position[w] == usize::MAX {
                        position[w] = order.len();
                        order.push(w);
                        anchor.push(Some(head));
                    }
                }
                head += 1;
            }
        }
        Matcher {
            g,
            h,
            order,
            anchor,
        }
    }

    /// Calls `visit` with each isomorphism; stops when it returns false.
    fn search(&self, visit: &mut dyn FnMut(&[usize]) -> bool) {
        let n = self.g.n();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend(0, &mut image, &mut used, visit);
    }

    fn extend(
        &self,
        depth: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == self.order.len() {
            return visit(image);
        }
        let v = self.order[depth];
        let candidates: Vec<usize> = match self.anchor[depth] {
            Some(p) => self.h.neighbors(image[self.order[p]]).to_vec(),
            None => (0..self.h.n()).collect(),
        };
        for c in candidates {
            if used[c] || self.h.degree(c) != self.g.degree(v) {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.g.has_edge(u, v) == self.h.has_edge(image[u], c));
            if !consistent {
                continue;
            }
            image[v] = c;
            used[c] = true;
            let keep_going = self.extend(depth + 1, image, used, visit);
            used[c] = false;
            image[v] = usize::MAX;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// A canonical relabeling of `g`: isomorphic graphs map to identical graphs.
///
/// Returns the relabeled graph and the vertex map used (`v -> perm[v]`).
pub fn canonical_form(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (g.clone(), Vec::new());
    }
    let initial = refine(g, vec![(0..n).collect()]);
    let mut best: Option<(String, Vec<usize>)> = None;
    explore(g, initial, &mut best);
    let (_, perm) = best.expect("search tree has at least one leaf");
    (g.relabel(&perm), perm)
}

fn explore(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(String, Vec<usize>)>) {
    let target = cells.iter().position(|c| c.len() > 1);
    let Some(target) = target else {
        let mut perm = vec![0; g.n()];
        for (label, cell) in cells.iter().enumerate() {
            perm[cell[0]] = label;
        }
        let code = write_graph6(&g.relabel(&perm));
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, perm));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = cells.clone();
        let rest: Vec<usize> = cells[target].iter().copied().filter(|&w| w != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        explore(g, refine(g, next), best);
    }
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Split cells are ordered by neighbor count into the splitting cell, which
/// keeps the result independent of vertex labels.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut cell_of = vec![0; n];
    'outer: loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        for splitter in 0..cells.len() {
            for target in 0..cells.len() {
                if cells[target].len() < 2 {
                    continue;
                }
                let count = |v: usize| {
                    g.neighbors(v)
                        .iter()
                        .filter(|&&w| cell_of[w] == splitter)
                        .count()
                };
                let first = count(cells[target][0]);
                if cells[target].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> =
                    cells[target].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut pieces: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        pieces.push(Vec::new());
                        last = Some(k);
                    }
                    pieces.last_mut().unwrap().push(v);
                }
                cells.splice(target..=target, pieces);
                continue 'outer;
            }
        }
        return cells;
    }
}
