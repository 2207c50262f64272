//! Chords, triangulations, proper colorings, and flips of a convex polygon.
//!
//! Vertices of the convex n-gon are the elements of Z_n in cyclic order. A
//! triangulation is a maximal set of pairwise non-crossing chords; it is
//! triangle-free when no triangle of the triangulation has all three sides
//! internal, which happens exactly when the dual tree is a path. The chords
//! of a triangle-free triangulation admit exactly two proper colorings by
//! 0..n-4, and flipping the chord with a given label (when the result stays
//! properly colored) defines the generator action studied by the rest of the
//! crate.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Smallest polygon with a triangle-free triangulation.
pub const MIN_POLYGON: usize = 5;

pub(crate) fn check_polygon_size(n: usize) -> Result<()> {
    if n < MIN_POLYGON {
        return Err(Error::SizeTooSmall { n, min: MIN_POLYGON });
    }
    Ok(())
}

/// True when `u` and `v` are neighbors on the boundary cycle of the n-gon.
pub fn cyclically_adjacent(n: usize, u: usize, v: usize) -> bool {
    (u + 1) % n == v || (v + 1) % n == u
}

/// A chord of the convex n-gon, with endpoints normalized so that `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    a: usize,
    b: usize,
}

impl Diagonal {
    /// Chord between vertices `u` and `v`. The endpoints must be distinct,
    /// below `n`, and not neighbors on the boundary.
    pub fn new(n: usize, u: usize, v: usize) -> Result<Self> {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if b >= n || a == b || b - a < 2 || b - a > n - 2 {
            return Err(Error::InvalidDiagonal { n, a: u, b: v });
        }
        Ok(Diagonal { a, b })
    }

    /// Chord between two vertices given as arbitrary residues mod n.
    pub(crate) fn from_residues(n: usize, u: i64, v: i64) -> Self {
        let m = n as i64;
        let u = u.rem_euclid(m) as usize;
        let v = v.rem_euclid(m) as usize;
        Diagonal::new(n, u, v).expect("residues span a diagonal")
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn endpoints(&self) -> [usize; 2] {
        [self.a, self.b]
    }

    /// A short chord cuts off a single vertex of the boundary.
    pub fn is_short(&self, n: usize) -> bool {
        self.b - self.a == 2 || self.b - self.a == n - 2
    }

    /// The boundary vertex a short chord cuts off, if the chord is short.
    pub fn short_tip(&self, n: usize) -> Option<usize> {
        if self.b - self.a == 2 {
            Some(self.a + 1)
        } else if self.b - self.a == n - 2 {
            Some((self.b + 1) % n)
        } else {
            None
        }
    }

    /// True when the open segments intersect. Chords sharing an endpoint do
    /// not cross.
    pub fn crosses(&self, other: &Diagonal) -> bool {
        if other.a == self.a || other.a == self.b || other.b == self.a || other.b == self.b {
            return false;
        }
        let inside = |x: usize| self.a < x && x < self.b;
        inside(other.a) != inside(other.b)
    }

    /// Image under the reflection of the polygon sending every vertex i to
    /// n - i.
    pub fn reflected(&self, n: usize) -> Diagonal {
        Diagonal::from_residues(n, -(self.a as i64), -(self.b as i64))
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

impl Serialize for Diagonal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.a, self.b).serialize(serializer)
    }
}

/// A triangulation of the n-gon without chord labels: n-3 pairwise
/// non-crossing chords.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UncoloredTriangulation {
    n: usize,
    chords: BTreeSet<Diagonal>,
}

impl UncoloredTriangulation {
    pub fn new(n: usize, chords: impl IntoIterator<Item = Diagonal>) -> Result<Self> {
        check_polygon_size(n)?;
        let chords: BTreeSet<Diagonal> = chords.into_iter().collect();
        for d in &chords {
            Diagonal::new(n, d.a, d.b)?;
        }
        if chords.len() != n - 3 {
            return Err(Error::NotTriangulation(format!(
                "expected {} distinct chords, got {}",
                n - 3,
                chords.len()
            )));
        }
        let list: Vec<Diagonal> = chords.iter().copied().collect();
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                if list[i].crosses(&list[j]) {
                    return Err(Error::NotTriangulation(format!(
                        "chords {} and {} cross",
                        list[i], list[j]
                    )));
                }
            }
        }
        Ok(Self { n, chords })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> &BTreeSet<Diagonal> {
        &self.chords
    }

    pub fn has_chord(&self, d: &Diagonal) -> bool {
        self.chords.contains(d)
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        cyclically_adjacent(self.n, u, v)
            || Diagonal::new(self.n, u, v)
                .map(|d| self.chords.contains(&d))
                .unwrap_or(false)
    }

    /// The triangles of the triangulation as ascending vertex triples. With
    /// vertices in convex position, three pairwise joined vertices always
    /// bound a face, so the faces are exactly these triples.
    pub fn faces(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::with_capacity(self.n - 2);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    continue;
                }
                for w in v + 1..self.n {
                    if self.has_edge(v, w) && self.has_edge(u, w) {
                        out.push([u, v, w]);
                    }
                }
            }
        }
        debug_assert_eq!(out.len(), self.n - 2);
        out
    }

    fn face_chords(&self, face: &[usize; 3]) -> Vec<Diagonal> {
        let [u, v, w] = *face;
        [(u, v), (v, w), (u, w)]
            .into_iter()
            .filter_map(|(x, y)| Diagonal::new(self.n, x, y).ok())
            .filter(|d| self.chords.contains(d))
            .collect()
    }

    /// No face has all three sides internal.
    pub fn is_triangle_free(&self) -> bool {
        self.faces().iter().all(|f| self.face_chords(f).len() < 3)
    }

    pub fn short_chords(&self) -> Vec<Diagonal> {
        self.chords
            .iter()
            .filter(|d| d.is_short(self.n))
            .copied()
            .collect()
    }

    /// The two proper colorings of a triangle-free triangulation. The pair is
    /// ordered by the chord that receives label 0.
    pub fn proper_colorings(&self) -> Result<(ColoredTriangulation, ColoredTriangulation)> {
        if !self.is_triangle_free() {
            return Err(Error::NotTriangleFree);
        }
        let order = self.dual_path_chords();
        let forward =
            ColoredTriangulation::new(self.n, order.clone()).expect("path order is a proper coloring");
        let mut reversed = order;
        reversed.reverse();
        let backward =
            ColoredTriangulation::new(self.n, reversed).expect("path order is a proper coloring");
        if forward.chords()[0] <= backward.chords()[0] {
            Ok((forward, backward))
        } else {
            Ok((backward, forward))
        }
    }

    /// Chords in the order crossed when walking the dual path from ear to
    /// ear, starting at the first ear in face order.
    fn dual_path_chords(&self) -> Vec<Diagonal> {
        let faces = self.faces();
        let internal: Vec<Vec<Diagonal>> = faces.iter().map(|f| self.face_chords(f)).collect();
        let start = internal
            .iter()
            .position(|c| c.len() == 1)
            .expect("a triangle-free triangulation has an ear");
        let mut order = Vec::with_capacity(self.n - 3);
        let mut here = start;
        let mut entry: Option<Diagonal> = None;
        loop {
            let next = internal[here].iter().copied().find(|c| Some(*c) != entry);
            let Some(chord) = next else { break };
            order.push(chord);
            here = (0..faces.len())
                .find(|&k| k != here && internal[k].contains(&chord))
                .expect("every chord bounds two faces");
            entry = Some(chord);
        }
        debug_assert_eq!(order.len(), self.n - 3);
        order
    }
}

/// A properly colored triangle-free triangulation. The chord with label i is
/// `chords()[i]`.
///
/// A proper coloring puts label 0 on a short chord and consecutive labels on
/// the two internal sides of any face that has exactly two.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredTriangulation {
    n: usize,
    chords: Vec<Diagonal>,
}

impl ColoredTriangulation {
    pub fn new(n: usize, chords: Vec<Diagonal>) -> Result<Self> {
        let uncolored = UncoloredTriangulation::new(n, chords.iter().copied())?;
        if uncolored.chords().len() != chords.len() {
            return Err(Error::NotTriangulation("duplicate chord in labeling".into()));
        }
        if !uncolored.is_triangle_free() {
            return Err(Error::NotTriangleFree);
        }
        if !chords[0].is_short(n) {
            return Err(Error::NotProperlyColored(
                "chord labeled 0 is not short".into(),
            ));
        }
        for face in uncolored.faces() {
            let inner = uncolored.face_chords(&face);
            if inner.len() == 2 {
                let i = chords.iter().position(|d| *d == inner[0]).unwrap();
                let j = chords.iter().position(|d| *d == inner[1]).unwrap();
                if i.abs_diff(j) != 1 {
                    return Err(Error::NotProperlyColored(format!(
                        "labels {i} and {j} share a face but are not consecutive"
                    )));
                }
            }
        }
        Ok(Self { n, chords })
    }

    /// The fan at vertex 0, labeled outward: chords `[0,2]`, `[0,3]`, ...,
    /// `[0,n-2]` with labels 0, 1, ..., n-4.
    pub fn canonical_star(n: usize) -> Result<Self> {
        check_polygon_size(n)?;
        let chords = (2..n - 1)
            .map(|k| Diagonal::new(n, 0, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(n, chords).expect("the star is properly colored"))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> &[Diagonal] {
        &self.chords
    }

    pub fn uncolored(&self) -> UncoloredTriangulation {
        UncoloredTriangulation::new(self.n, self.chords.iter().copied())
            .expect("colored triangulations are triangulations")
    }

    /// Flip the chord with the given label when the result stays triangle-free
    /// and properly colored; otherwise return the triangulation unchanged.
    pub fn flip_label(&self, label: usize) -> Result<ColoredTriangulation> {
        if label >= self.chords.len() {
            return Err(Error::IndexOutOfRange {
                index: label,
                max: self.chords.len() - 1,
            });
        }
        let chord = self.chords[label];
        let uncolored = self.uncolored();
        let apexes: Vec<usize> = uncolored
            .faces()
            .into_iter()
            .filter(|f| f.contains(&chord.a()) && f.contains(&chord.b()))
            .flat_map(|f| f.into_iter().filter(|v| *v != chord.a() && *v != chord.b()))
            .collect();
        debug_assert_eq!(apexes.len(), 2);
        let replacement = Diagonal::new(self.n, apexes[0], apexes[1])
            .expect("opposite corners of a quadrilateral are not adjacent");
        let mut chords = self.chords.clone();
        chords[label] = replacement;
        Ok(Self::new(self.n, chords).unwrap_or_else(|_| self.clone()))
    }

    /// Same chords with the labels reversed end to end: label i becomes
    /// n - 4 - i.
    pub fn reversed(&self) -> ColoredTriangulation {
        let mut chords = self.chords.clone();
        chords.reverse();
        Self::new(self.n, chords).expect("label reversal preserves proper coloring")
    }
}

impl Serialize for ColoredTriangulation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ColoredTriangulation", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("chords", &self.chords)?;
        s.end()
    }
}

/// All colored triangle-free triangulations of the n-gon, as the orbit
/// closure of the canonical star under the label flips. Sorted by chord list.
pub fn enumerate_ctft(n: usize) -> Result<Vec<ColoredTriangulation>> {
    let start = ColoredTriangulation::canonical_star(n)?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(t) = queue.pop_front() {
        for label in 0..=n - 4 {
            let next = t.flip_label(label).expect("label in range");
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// All triangulations of the n-gon, by recursive choice of the triangle
/// resting on the edge between the first and last vertex of a range.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<UncoloredTriangulation>> {
    check_polygon_size(n)?;
    let verts: Vec<usize> = (0..n).collect();
    Ok(range_triangulations(n, &verts)
        .into_iter()
        .map(|chords| {
            UncoloredTriangulation::new(n, chords).expect("recursion yields triangulations")
        })
        .collect())
}

fn range_triangulations(n: usize, verts: &[usize]) -> Vec<Vec<Diagonal>> {
    let m = verts.len();
    if m < 3 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 1..m - 1 {
        let left = range_triangulations(n, &verts[..=k]);
        let right = range_triangulations(n, &verts[k..]);
        for l in &left {
            for r in &right {
                let mut chords = l.clone();
                chords.extend_from_slice(r);
                if k > 1 {
                    chords.push(Diagonal::new(n, verts[0], verts[k]).expect("range chord"));
                }
                if m - 1 - k > 1 {
                    chords.push(Diagonal::new(n, verts[k], verts[m - 1]).expect("range chord"));
                }
                out.push(chords);
            }
        }
    }
    out
}
