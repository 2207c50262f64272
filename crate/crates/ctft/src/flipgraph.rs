//! The flip graph on colored triangle-free triangulations.
//!
//! Vertices are the codes of the n-gon's colored triangle-free
//! triangulations; each label whose flip actually moves contributes an edge.
//! Every edge shifts the rank by exactly one mod n(n-3), which orients the
//! graph: an edge is ascending when the rank goes up. Between a
//! triangulation and its label reversal the distance is n(n-3)/2, and the
//! geodesics are exactly the rank-monotone paths, which this module
//! enumerates, counts, and exports. The graph is also checked against the
//! chamber graph of the polygon's diagonal arrangement.

use std::collections::BTreeSet;
use std::collections::VecDeque;
use std::fmt;
use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arcperm::ArcClass;
use crate::arrangement::{Arrangement, Chamber, SimpleGraph};
use crate::codec::{enumerate_codes, Code};
use crate::error::{Error, Result};
use crate::polygon::Diagonal;

/// Which rank-monotone paths to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Plus,
    Minus,
    Both,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Plus => "plus",
            Direction::Minus => "minus",
            Direction::Both => "both",
        })
    }
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// What to write on exported edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeLabelKind {
    /// The diagonal erased along the ascending direction of the edge.
    Diagonal,
    /// The index of the flipped label.
    Generator,
    /// The hyperplane separating the chambers of the two endpoint classes.
    Hyperplane,
}

/// One directed half of a flip-graph edge.
#[derive(Debug, Clone)]
pub struct FlipEdge {
    to: usize,
    generator: usize,
    erased: Diagonal,
    created: Diagonal,
    ascending: bool,
}

impl FlipEdge {
    pub fn to(&self) -> usize {
        self.to
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    /// The chord present at the source but not at the target.
    pub fn erased(&self) -> Diagonal {
        self.erased
    }

    pub fn created(&self) -> Diagonal {
        self.created
    }

    /// True when the rank increases by one along this direction.
    pub fn is_ascending(&self) -> bool {
        self.ascending
    }
}

/// The flip graph for one polygon size, with vertices in code order and each
/// vertex's edges sorted by erased diagonal.
#[derive(Debug, Clone)]
pub struct FlipGraph {
    n: usize,
    codes: Vec<Code>,
    adjacency: Vec<Vec<FlipEdge>>,
}

impl FlipGraph {
    pub fn build(n: usize) -> Result<FlipGraph> {
        let codes = enumerate_codes(n)?;
        let modulus = (n * (n - 3)) as u64;
        let mut adjacency = vec![Vec::new(); codes.len()];
        for (u, code) in codes.iter().enumerate() {
            for label in 0..=n - 4 {
                let next = code.apply_generator(label).expect("label in range");
                if &next == code {
                    continue;
                }
                let to = codes.binary_search(&next).expect("closed under generators");
                let erased = code.chord_of_label(label).expect("label in range");
                let created = next.chord_of_label(label).expect("label in range");
                let ascending = (next.rank() + modulus - code.rank()) % modulus == 1;
                adjacency[u].push(FlipEdge { to, generator: label, erased, created, ascending });
            }
            adjacency[u].sort_by_key(|e| e.erased);
        }
        Ok(FlipGraph { n, codes, adjacency })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn codes(&self) -> &[Code] {
        &self.codes
    }

    pub fn vertex_count(&self) -> usize {
        self.codes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn adjacency(&self, index: usize) -> &[FlipEdge] {
        &self.adjacency[index]
    }

    pub fn degree(&self, index: usize) -> usize {
        self.adjacency[index].len()
    }

    pub fn index_of(&self, code: &Code) -> Result<usize> {
        self.codes.binary_search(code).map_err(|_| Error::CodeNotInGraph)
    }

    /// The chord present in `from` but not in `to`, read off the edge between
    /// them.
    pub fn edge_diagonal(&self, from: &Code, to: &Code) -> Result<Diagonal> {
        let u = self.index_of(from)?;
        let v = self.index_of(to)?;
        self.adjacency[u]
            .iter()
            .find(|e| e.to == v)
            .map(|e| e.erased)
            .ok_or(Error::NotAnEdge)
    }

    fn distances_from(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.codes.len()];
        let mut queue = VecDeque::from([start]);
        dist[start] = 0;
        while let Some(u) = queue.pop_front() {
            for e in &self.adjacency[u] {
                if dist[e.to] == usize::MAX {
                    dist[e.to] = dist[u] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        dist
    }

    pub fn distance(&self, from: &Code, to: &Code) -> Result<usize> {
        let u = self.index_of(from)?;
        let v = self.index_of(to)?;
        let dist = self.distances_from(u);
        if dist[v] == usize::MAX {
            return Err(Error::NoPath);
        }
        Ok(dist[v])
    }

    pub fn diameter(&self) -> usize {
        (0..self.codes.len())
            .map(|u| {
                self.distances_from(u)
                    .into_iter()
                    .filter(|d| *d != usize::MAX)
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    /// Lazily enumerate the rank-monotone paths from a code to its label
    /// reversal; between such antipodes these are exactly the geodesics.
    /// Ascending paths come first when both directions are requested, and
    /// within a direction the paths appear in lexicographic order of their
    /// erased-diagonal sequences.
    pub fn geodesics(&self, from: &Code, to: &Code, direction: Direction) -> Result<Geodesics<'_>> {
        if *to != from.reversed() {
            return Err(Error::NotAntipodal);
        }
        let src = self.index_of(from)?;
        let target = self.index_of(to)?;
        let length = self.n * (self.n - 3) / 2;
        let phases = match direction {
            Direction::Plus => vec![true],
            Direction::Minus => vec![false],
            Direction::Both => vec![true, false],
        };
        Ok(Geodesics {
            graph: self,
            src,
            target,
            length,
            dist_to_target: self.distances_from(target),
            phases,
            phase: 0,
            want_ascending: true,
            path: Vec::new(),
            diagonals: Vec::new(),
            cursor: Vec::new(),
        })
    }

    /// Count the rank-monotone paths to the label reversal by a layered sum
    /// over path lengths, without materializing any path.
    pub fn count_monotone_paths(
        &self,
        from: &Code,
        to: &Code,
        direction: Direction,
    ) -> Result<BigUint> {
        if *to != from.reversed() {
            return Err(Error::NotAntipodal);
        }
        let src = self.index_of(from)?;
        let dst = self.index_of(to)?;
        let length = self.n * (self.n - 3) / 2;
        Ok(match direction {
            Direction::Plus => self.count_directed_walks(src, dst, true, length),
            Direction::Minus => self.count_directed_walks(src, dst, false, length),
            Direction::Both => {
                self.count_directed_walks(src, dst, true, length)
                    + self.count_directed_walks(src, dst, false, length)
            }
        })
    }

    fn count_directed_walks(&self, src: usize, dst: usize, ascending: bool, length: usize) -> BigUint {
        let zero = BigUint::from(0u8);
        let mut current = vec![zero.clone(); self.codes.len()];
        current[src] = BigUint::from(1u8);
        for _ in 0..length {
            let mut next = vec![zero.clone(); self.codes.len()];
            for (u, count) in current.iter().enumerate() {
                if *count == zero {
                    continue;
                }
                for e in &self.adjacency[u] {
                    if e.ascending == ascending {
                        next[e.to] += count;
                    }
                }
            }
            current = next;
        }
        current[dst].clone()
    }

    /// Count all shortest paths between two codes, by dynamic programming
    /// over the breadth-first layers. This makes no use of ranks, so it
    /// checks the monotone count independently.
    pub fn count_shortest_paths(&self, from: &Code, to: &Code) -> Result<BigUint> {
        let src = self.index_of(from)?;
        let dst = self.index_of(to)?;
        let dist = self.distances_from(src);
        if dist[dst] == usize::MAX {
            return Err(Error::NoPath);
        }
        let mut order: Vec<usize> = (0..self.codes.len())
            .filter(|u| dist[*u] != usize::MAX)
            .collect();
        order.sort_by_key(|u| dist[*u]);
        let mut paths = vec![BigUint::from(0u8); self.codes.len()];
        paths[src] = BigUint::from(1u8);
        for &u in &order {
            let here = paths[u].clone();
            if here == BigUint::from(0u8) {
                continue;
            }
            for e in &self.adjacency[u] {
                if dist[e.to] == dist[u] + 1 {
                    paths[e.to] += &here;
                }
            }
        }
        Ok(paths[dst].clone())
    }

    fn edges_once(&self) -> impl Iterator<Item = (usize, &FlipEdge)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, edges)| edges.iter().map(move |e| (u, e)))
            .filter(|(_, e)| e.ascending)
    }

    fn edge_labels(&self, kind: EdgeLabelKind) -> Vec<(usize, usize, String)> {
        let chambers: Option<Vec<Chamber>> = match kind {
            EdgeLabelKind::Hyperplane => Some(self.class_chambers()),
            _ => None,
        };
        self.edges_once()
            .map(|(u, e)| {
                let label = match kind {
                    EdgeLabelKind::Diagonal => e.erased.to_string(),
                    EdgeLabelKind::Generator => e.generator.to_string(),
                    EdgeLabelKind::Hyperplane => {
                        let chambers = chambers.as_ref().expect("chambers prepared");
                        let separating = chambers[u]
                            .separating_set(&chambers[e.to])
                            .expect("one arrangement");
                        assert_eq!(separating.len(), 1, "adjacent chambers share a wall");
                        let (a, b) = chambers[u].arrangement().hyperplanes()[separating[0]];
                        format!("{a},{b}")
                    }
                };
                (u, e.to, label)
            })
            .collect()
    }

    fn class_chambers(&self) -> Vec<Chamber> {
        let arrangement = Arc::new(Arrangement::new(
            SimpleGraph::k_prime(self.n).expect("polygon sizes start at 5"),
        ));
        self.codes
            .iter()
            .map(|code| {
                let class = ArcClass::of_triangulation(&code.to_triangulation());
                Chamber::of_arc_class(&arrangement, &class).expect("matching arrangement")
            })
            .collect()
    }

    /// Graphviz export. Unoriented edges are written from their ascending
    /// side, so the diagonal and hyperplane labelings produce identical
    /// bytes.
    pub fn to_dot(&self, oriented: bool, labels: EdgeLabelKind) -> String {
        let mut out = String::new();
        let keyword = if oriented { "digraph" } else { "graph" };
        let connector = if oriented { "->" } else { "--" };
        writeln!(out, "{keyword} flips_{} {{", self.n).expect("string write");
        for code in &self.codes {
            writeln!(out, "  \"{code}\";").expect("string write");
        }
        for (u, v, label) in self.edge_labels(labels) {
            writeln!(
                out,
                "  \"{}\" {connector} \"{}\" [label=\"{label}\"];",
                self.codes[u], self.codes[v]
            )
            .expect("string write");
        }
        writeln!(out, "}}").expect("string write");
        out
    }

    /// JSON export with the same vertex and edge order as the DOT form.
    pub fn to_json(&self, oriented: bool, labels: EdgeLabelKind) -> serde_json::Value {
        let vertices: Vec<String> = self.codes.iter().map(|c| c.to_string()).collect();
        let edges: Vec<serde_json::Value> = self
            .edge_labels(labels)
            .into_iter()
            .map(|(u, v, label)| {
                serde_json::json!({
                    "from": self.codes[u].to_string(),
                    "to": self.codes[v].to_string(),
                    "label": label,
                })
            })
            .collect();
        let kind = match labels {
            EdgeLabelKind::Diagonal => "diagonal",
            EdgeLabelKind::Generator => "generator",
            EdgeLabelKind::Hyperplane => "hyperplane",
        };
        serde_json::json!({
            "n": self.n,
            "oriented": oriented,
            "labels": kind,
            "vertices": vertices,
            "edges": edges,
        })
    }
}

/// Outcome of checking the flip graph against the chamber graph of the
/// diagonal arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsomorphismCheck {
    pub vertex_count: usize,
    pub edge_count: usize,
}

/// Check that mapping a triangulation to the chamber of its class is a graph
/// isomorphism between the flip graph and the class chambers under
/// separation one: the map is injective, every flip edge crosses exactly one
/// hyperplane (the diagonal erased by its ascending direction), and every
/// pair of class chambers at separation one comes from a flip edge.
pub fn verify_chamber_isomorphism(n: usize) -> Result<IsomorphismCheck> {
    let graph = FlipGraph::build(n)?;
    let chambers = graph.class_chambers();
    let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
    for chamber in &chambers {
        if !seen.insert(chamber.signs().to_vec()) {
            return Err(Error::VerificationFailed(format!(
                "two triangulations of the {n}-gon share the chamber {}",
                chamber.sign_string()
            )));
        }
    }
    let mut edge_count = 0;
    for (u, e) in graph.edges_once() {
        let separating = chambers[u].separating_set(&chambers[e.to])?;
        if separating.len() != 1 {
            return Err(Error::VerificationFailed(format!(
                "flip edge {} - {} separates {} hyperplanes",
                graph.codes[u],
                graph.codes[e.to],
                separating.len()
            )));
        }
        let wall = chambers[u].arrangement().hyperplanes()[separating[0]];
        let erased = (e.erased.a(), e.erased.b());
        if wall != erased {
            return Err(Error::VerificationFailed(format!(
                "ascending flip {} -> {} erases {} but crosses the wall ({},{})",
                graph.codes[u],
                graph.codes[e.to],
                e.erased,
                wall.0,
                wall.1
            )));
        }
        edge_count += 1;
    }
    // conversely, class chambers at separation one must be flip edges
    for i in 0..chambers.len() {
        for j in i + 1..chambers.len() {
            let separation = chambers[i].separating_set(&chambers[j])?.len();
            let adjacent = graph.adjacency[i].iter().any(|e| e.to == j);
            if (separation == 1) != adjacent {
                return Err(Error::VerificationFailed(format!(
                    "codes {} and {} disagree with their chambers: separation {}, edge {}",
                    graph.codes[i], graph.codes[j], separation, adjacent
                )));
            }
        }
    }
    Ok(IsomorphismCheck { vertex_count: chambers.len(), edge_count })
}

/// Iterator over the rank-monotone paths between a pair of antipodal codes.
pub struct Geodesics<'g> {
    graph: &'g FlipGraph,
    src: usize,
    target: usize,
    length: usize,
    dist_to_target: Vec<usize>,
    phases: Vec<bool>,
    phase: usize,
    want_ascending: bool,
    path: Vec<usize>,
    diagonals: Vec<Diagonal>,
    cursor: Vec<usize>,
}

impl Geodesics<'_> {
    fn start_next_phase(&mut self) -> bool {
        while self.phase < self.phases.len() {
            self.want_ascending = self.phases[self.phase];
            self.phase += 1;
            if self.dist_to_target[self.src] <= self.length {
                self.path.push(self.src);
                self.cursor.push(0);
                return true;
            }
        }
        false
    }

    fn backtrack(&mut self) {
        self.path.pop();
        self.cursor.pop();
        self.diagonals.pop();
    }

    fn snapshot(&self) -> GeodesicPath {
        GeodesicPath {
            codes: self.path.iter().map(|&i| self.graph.codes[i].clone()).collect(),
            diagonals: self.diagonals.clone(),
        }
    }
}

impl Iterator for Geodesics<'_> {
    type Item = GeodesicPath;

    fn next(&mut self) -> Option<GeodesicPath> {
        loop {
            if self.path.is_empty() {
                if !self.start_next_phase() {
                    return None;
                }
                continue;
            }
            let depth = self.path.len() - 1;
            let here = *self.path.last().expect("path is nonempty");
            if depth == self.length {
                // the distance bound has already pinned this to the target
                debug_assert_eq!(here, self.target);
                let found = self.snapshot();
                self.backtrack();
                return Some(found);
            }
            let edges = self.graph.adjacency(here);
            let mut k = self.cursor[depth];
            let mut advanced = false;
            while k < edges.len() {
                let e = &edges[k];
                k += 1;
                if e.ascending == self.want_ascending
                    && self.dist_to_target[e.to] <= self.length - depth - 1
                {
                    self.cursor[depth] = k;
                    self.path.push(e.to);
                    self.diagonals.push(e.erased);
                    self.cursor.push(0);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                self.backtrack();
            }
        }
    }
}

/// A single monotone path through the flip graph, with the diagonal erased
/// at each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicPath {
    codes: Vec<Code>,
    diagonals: Vec<Diagonal>,
}

impl GeodesicPath {
    pub fn codes(&self) -> &[Code] {
        &self.codes
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    pub fn n(&self) -> usize {
        self.codes[0].n()
    }

    /// Plus when the rank increases along the path.
    pub fn direction(&self) -> Direction {
        let n = self.n();
        let modulus = (n * (n - 3)) as u64;
        let delta = (self.codes[1].rank() + modulus - self.codes[0].rank()) % modulus;
        if delta == 1 {
            Direction::Plus
        } else {
            Direction::Minus
        }
    }

    /// True when every diagonal of the polygon is erased exactly once.
    pub fn covers_all_diagonals(&self) -> bool {
        let n = self.n();
        let distinct: BTreeSet<Diagonal> = self.diagonals.iter().copied().collect();
        distinct.len() == self.diagonals.len() && self.diagonals.len() == n * (n - 3) / 2
    }
}

impl Serialize for GeodesicPath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("GeodesicPath", 4)?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("direction", &self.direction())?;
        s.serialize_field("path", &self.codes)?;
        s.serialize_field("diagonals", &self.diagonals)?;
        s.end()
    }
}
