//! Graphic hyperplane arrangements and their chambers.
//!
//! A simple graph G on 0..n gives the arrangement of hyperplanes x_i = x_j,
//! one per edge. A point with pairwise distinct coordinates lies in the
//! chamber recorded by the sign of x_j - x_i at every edge (i, j) with
//! i < j, and any permutation of 0..n, read as the coordinate order, is a
//! witness for the chamber containing it. The graph of interest here is the
//! complete graph minus the boundary cycle of the polygon, whose hyperplanes
//! are the polygon's diagonals.

use std::collections::{BTreeSet, VecDeque};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::arcperm::ArcClass;
use crate::error::{Error, Result};

/// An undirected simple graph on vertices 0..n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// Build from an edge list; endpoints are normalized to ascending order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidClass(format!("edge ({u}, {v}) is not valid on 0..{n}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self { n, edges: set })
    }

    /// The complete graph on 0..n minus the boundary cycle: its edges are the
    /// diagonals of the n-gon.
    pub fn k_prime(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::SizeTooSmall { n, min: 4 });
        }
        let mut edges = BTreeSet::new();
        for u in 0..n {
            for v in u + 1..n {
                if !crate::polygon::cyclically_adjacent(n, u, v) {
                    edges.insert((u, v));
                }
            }
        }
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|(a, b)| *a == v || *b == v).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(a, b) in &self.edges {
                let next = if a == u { b } else if b == u { a } else { continue };
                if !seen[next] {
                    seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }
}

/// The graphic arrangement of a simple graph: one hyperplane x_i = x_j per
/// edge, listed in ascending edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    graph: SimpleGraph,
    hyperplanes: Vec<(usize, usize)>,
}

impl Arrangement {
    pub fn new(graph: SimpleGraph) -> Arrangement {
        let hyperplanes = graph.edges().iter().copied().collect();
        Arrangement { graph, hyperplanes }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn hyperplanes(&self) -> &[(usize, usize)] {
        &self.hyperplanes
    }

    pub fn hyperplane_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.hyperplanes.binary_search(&key).ok()
    }
}

/// A chamber of a graphic arrangement, as one sign per hyperplane plus the
/// witness permutation that produced it. At hyperplane (i, j) with i < j the
/// sign is false when i precedes j in the witness (x_i < x_j there).
///
/// Equality and hashing look at the arrangement and the signs only: two
/// witnesses in the same region give equal chambers.
#[derive(Debug, Clone)]
pub struct Chamber {
    arrangement: Arc<Arrangement>,
    signs: Vec<bool>,
    witness: Vec<usize>,
}

impl Chamber {
    /// The chamber containing the points whose coordinates increase along
    /// the given permutation of 0..n.
    pub fn of_permutation(arrangement: &Arc<Arrangement>, witness: &[usize]) -> Result<Chamber> {
        let n = arrangement.graph.n();
        if witness.len() != n {
            return Err(Error::NotPermutation(n));
        }
        let mut position = vec![usize::MAX; n];
        for (k, &x) in witness.iter().enumerate() {
            if x >= n || position[x] != usize::MAX {
                return Err(Error::NotPermutation(n));
            }
            position[x] = k;
        }
        let signs = arrangement
            .hyperplanes
            .iter()
            .map(|&(i, j)| position[i] > position[j])
            .collect();
        Ok(Chamber {
            arrangement: Arc::clone(arrangement),
            signs,
            witness: witness.to_vec(),
        })
    }

    /// The chamber of a class of arc permutations. The four members differ
    /// only in the order within cyclically adjacent pairs, which are never
    /// edges of the polygon's diagonal graph, so they share one chamber; the
    /// canonical member is kept as the witness.
    pub fn of_arc_class(arrangement: &Arc<Arrangement>, class: &ArcClass) -> Result<Chamber> {
        if arrangement.graph.n() != class.n() {
            return Err(Error::ArrangementMismatch);
        }
        Chamber::of_permutation(arrangement, class.canonical().letters())
    }

    pub fn arrangement(&self) -> &Arc<Arrangement> {
        &self.arrangement
    }

    pub fn signs(&self) -> &[bool] {
        &self.signs
    }

    pub fn witness(&self) -> &[usize] {
        &self.witness
    }

    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|s| if *s { '+' } else { '-' }).collect()
    }

    /// The opposite chamber, with every sign flipped; its witness is the
    /// reversed permutation.
    pub fn negative(&self) -> Chamber {
        Chamber {
            arrangement: Arc::clone(&self.arrangement),
            signs: self.signs.iter().map(|s| !s).collect(),
            witness: self.witness.iter().rev().copied().collect(),
        }
    }

    /// Indices of the hyperplanes separating the two chambers.
    pub fn separating_set(&self, other: &Chamber) -> Result<Vec<usize>> {
        if self.arrangement.as_ref() != other.arrangement.as_ref() {
            return Err(Error::ArrangementMismatch);
        }
        Ok((0..self.signs.len())
            .filter(|&k| self.signs[k] != other.signs[k])
            .collect())
    }
}

impl PartialEq for Chamber {
    fn eq(&self, other: &Self) -> bool {
        self.signs == other.signs && self.arrangement.as_ref() == other.arrangement.as_ref()
    }
}

impl Eq for Chamber {}

impl Hash for Chamber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.signs.hash(state);
    }
}

/// Every chamber of the arrangement, one witness each, found by scanning all
/// permutations in lexicographic order. Sorted by sign vector.
pub fn all_chambers(arrangement: &Arc<Arrangement>) -> Result<Vec<Chamber>> {
    let n = arrangement.graph.n();
    if n > 8 {
        return Err(Error::SizeTooLarge { n, max: 8, what: "chamber enumeration by permutations" });
    }
    let mut found: Vec<Chamber> = Vec::new();
    let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
    for witness in lex_permutations(n) {
        let chamber = Chamber::of_permutation(arrangement, &witness)?;
        if seen.insert(chamber.signs.clone()) {
            found.push(chamber);
        }
    }
    found.sort_by(|a, b| a.signs.cmp(&b.signs));
    Ok(found)
}

fn lex_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                current.push(x);
                rec(n, current, used, out);
                current.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A set of chambers of one arrangement, with an edge between chambers
/// separated by exactly one hyperplane.
#[derive(Debug, Clone)]
pub struct ChamberGraph {
    chambers: Vec<Chamber>,
    adjacency: Vec<Vec<usize>>,
}

impl ChamberGraph {
    /// Deduplicate the chambers, sort them by sign vector, and connect pairs
    /// at separation one.
    pub fn new(chambers: Vec<Chamber>) -> Result<ChamberGraph> {
        let mut chambers = chambers;
        if let Some(first) = chambers.first() {
            let arrangement = Arc::clone(&first.arrangement);
            if chambers.iter().any(|c| c.arrangement.as_ref() != arrangement.as_ref()) {
                return Err(Error::ArrangementMismatch);
            }
        }
        chambers.sort_by(|a, b| a.signs.cmp(&b.signs));
        chambers.dedup_by(|a, b| a.signs == b.signs);
        let mut adjacency = vec![Vec::new(); chambers.len()];
        for i in 0..chambers.len() {
            for j in i + 1..chambers.len() {
                let differing = chambers[i]
                    .signs
                    .iter()
                    .zip(&chambers[j].signs)
                    .filter(|(a, b)| a != b)
                    .count();
                if differing == 1 {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        Ok(ChamberGraph { chambers, adjacency })
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn adjacency(&self, index: usize) -> &[usize] {
        &self.adjacency[index]
    }

    pub fn vertex_count(&self) -> usize {
        self.chambers.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn index_of(&self, chamber: &Chamber) -> Result<usize> {
        self.chambers
            .binary_search_by(|c| c.signs.cmp(&chamber.signs))
            .map_err(|_| Error::ChamberNotInGraph)
    }

    /// Length of a shortest path between two chambers of the graph.
    pub fn distance(&self, from: &Chamber, to: &Chamber) -> Result<usize> {
        let src = self.index_of(from)?;
        let dst = self.index_of(to)?;
        let mut dist = vec![usize::MAX; self.chambers.len()];
        let mut queue = VecDeque::from([src]);
        dist[src] = 0;
        while let Some(u) = queue.pop_front() {
            if u == dst {
                return Ok(dist[u]);
            }
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        Err(Error::NoPath)
    }

    pub fn is_cycle(&self) -> bool {
        let count = self.chambers.len();
        if count < 3 || self.adjacency.iter().any(|a| a.len() != 2) {
            return false;
        }
        // walk the cycle and count what it visits
        let mut visited = 1;
        let mut prev = 0;
        let mut here = self.adjacency[0][0];
        while here != 0 {
            visited += 1;
            let next = self.adjacency[here]
                .iter()
                .copied()
                .find(|v| *v != prev)
                .expect("degree two");
            prev = here;
            here = next;
        }
        visited == count
    }
}
