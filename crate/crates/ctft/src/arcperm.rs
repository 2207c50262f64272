//! Arc permutations, their adjacent-swap moves, and their four-element
//! classes.
//!
//! A permutation of Z_n written as a word is an arc permutation when every
//! prefix is a cyclic interval. Swapping two adjacent letters, when the
//! result is again an arc permutation, gives one move per position. Modding
//! out the order within the first two and the last two letters groups the
//! arc permutations into classes of four; the classes are in bijection with
//! the colored triangle-free triangulations of the same polygon, and the
//! induced moves on classes mirror the label flips.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::codec::Code;
use crate::error::{Error, Result};
use crate::polygon::ColoredTriangulation;

fn step_up(n: usize, x: usize) -> usize {
    (x + 1) % n
}

fn step_down(n: usize, x: usize) -> usize {
    (x + n - 1) % n
}

fn check_permutation(letters: &[usize]) -> Result<()> {
    let n = letters.len();
    let mut seen = vec![false; n];
    for &x in letters {
        if x >= n || seen[x] {
            return Err(Error::NotPermutation(n));
        }
        seen[x] = true;
    }
    Ok(())
}

fn prefixes_are_intervals(letters: &[usize]) -> bool {
    let n = letters.len();
    let mut lo = letters[0];
    let mut hi = letters[0];
    for &x in &letters[1..] {
        if x == step_down(n, lo) {
            lo = x;
        } else if x == step_up(n, hi) {
            hi = x;
        } else {
            return false;
        }
    }
    true
}

/// True when the word is an arc permutation: a permutation of 0..len whose
/// every prefix is a cyclic interval.
pub fn is_arc_permutation(letters: &[usize]) -> Result<bool> {
    if letters.len() < 2 {
        return Err(Error::SizeTooSmall { n: letters.len(), min: 2 });
    }
    check_permutation(letters)?;
    Ok(prefixes_are_intervals(letters))
}

/// An arc permutation of Z_n, stored as its word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcPermutation {
    letters: Vec<usize>,
}

impl ArcPermutation {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if is_arc_permutation(&letters)? {
            Ok(Self { letters })
        } else {
            Err(Error::NotArcPermutation)
        }
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Swap the letters at positions i and i + 1 when the result is still an
    /// arc permutation; otherwise return the word unchanged. The first and
    /// last positions always act.
    pub fn apply_generator(&self, position: usize) -> Result<ArcPermutation> {
        let n = self.n();
        if position > n - 2 {
            return Err(Error::IndexOutOfRange { index: position, max: n - 2 });
        }
        let mut letters = self.letters.clone();
        letters.swap(position, position + 1);
        if prefixes_are_intervals(&letters) {
            Ok(Self { letters })
        } else {
            Ok(self.clone())
        }
    }

    /// The word read backwards, again an arc permutation.
    pub fn reversed(&self) -> ArcPermutation {
        let letters = self.letters.iter().rev().copied().collect();
        Self::new(letters).expect("reversal preserves the interval property")
    }

    /// The head-and-directions form of the word.
    pub fn to_vector(&self) -> ArcVector {
        let n = self.n();
        let mut hi = self.letters[0];
        let mut dirs = Vec::with_capacity(n - 2);
        for &x in &self.letters[1..n - 1] {
            if x == step_up(n, hi) {
                dirs.push(1);
                hi = x;
            } else {
                dirs.push(0);
            }
        }
        ArcVector { head: self.letters[0], dirs }
    }

    /// The class of this word under reordering of its first two and last two
    /// letters.
    pub fn equivalence_class(&self) -> Result<ArcClass> {
        let n = self.n();
        if n < 4 {
            return Err(Error::SizeTooSmall { n, min: 4 });
        }
        let mut subsets = Vec::with_capacity(n - 2);
        subsets.push(vec![self.letters[0], self.letters[1]]);
        for &x in &self.letters[2..n - 2] {
            subsets.push(vec![x]);
        }
        subsets.push(vec![self.letters[n - 2], self.letters[n - 1]]);
        ArcClass::new(n, subsets)
    }
}

impl Serialize for ArcPermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(serializer)
    }
}

impl fmt::Display for ArcPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// An arc permutation as its first letter plus one direction per later
/// position except the forced last one: 1 extends the interval upward, 0
/// downward.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcVector {
    head: usize,
    dirs: Vec<u8>,
}

impl ArcVector {
    /// Build from a head letter and directions; the word length is
    /// `dirs.len() + 2`.
    pub fn new(head: usize, dirs: Vec<u8>) -> Result<Self> {
        let n = dirs.len() + 2;
        if head >= n {
            return Err(Error::NotArcPermutation);
        }
        if dirs.iter().any(|d| *d > 1) {
            return Err(Error::NotArcPermutation);
        }
        Ok(Self { head, dirs })
    }

    pub fn n(&self) -> usize {
        self.dirs.len() + 2
    }

    pub fn head(&self) -> usize {
        self.head
    }

    pub fn dirs(&self) -> &[u8] {
        &self.dirs
    }

    pub fn to_permutation(&self) -> ArcPermutation {
        let n = self.n();
        let mut letters = Vec::with_capacity(n);
        let mut lo = self.head;
        let mut hi = self.head;
        letters.push(self.head);
        for &d in &self.dirs {
            if d == 1 {
                hi = step_up(n, hi);
                letters.push(hi);
            } else {
                lo = step_down(n, lo);
                letters.push(lo);
            }
        }
        letters.push(step_up(n, hi));
        ArcPermutation::new(letters).expect("vectors build arc permutations")
    }

    /// The swap moves rewritten on the vector: position 0 steps the head
    /// against its first direction and flips it, a middle position swaps the
    /// two adjacent directions (identity when they agree), and the last
    /// position flips the final direction.
    pub fn apply_generator(&self, position: usize) -> Result<ArcVector> {
        let n = self.n();
        if position > n - 2 {
            return Err(Error::IndexOutOfRange { index: position, max: n - 2 });
        }
        let mut out = self.clone();
        if n == 2 {
            // the only move swaps the two letters
            out.head = step_up(n, out.head);
        } else if position == 0 {
            if out.dirs[0] == 1 {
                out.head = step_up(n, out.head);
            } else {
                out.head = step_down(n, out.head);
            }
            out.dirs[0] = 1 - out.dirs[0];
        } else if position == n - 2 {
            let last = out.dirs.last_mut().expect("dirs are nonempty for n > 2");
            *last = 1 - *last;
        } else if out.dirs[position - 1] != out.dirs[position] {
            out.dirs.swap(position - 1, position);
        }
        Ok(out)
    }
}

/// All arc permutations of Z_n, sorted by word.
pub fn enumerate_arc_perms(n: usize) -> Result<Vec<ArcPermutation>> {
    if n < 2 {
        return Err(Error::SizeTooSmall { n, min: 2 });
    }
    let width = n - 2;
    let mut out = Vec::with_capacity(n << width);
    for head in 0..n {
        for mask in 0..1u64 << width {
            let dirs = (0..width)
                .map(|j| ((mask >> (width - 1 - j)) & 1) as u8)
                .collect();
            out.push(ArcVector { head, dirs }.to_permutation());
        }
    }
    out.sort();
    Ok(out)
}

/// A class of four arc permutations agreeing up to the order of their first
/// two and last two letters, stored as the sequence of letter sets: a pair,
/// then singletons, then a pair. Each set is kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcClass {
    n: usize,
    subsets: Vec<Vec<usize>>,
}

impl ArcClass {
    pub fn new(n: usize, subsets: Vec<Vec<usize>>) -> Result<Self> {
        if n < 4 {
            return Err(Error::SizeTooSmall { n, min: 4 });
        }
        if subsets.len() != n - 2 {
            return Err(Error::InvalidClass(format!(
                "expected {} subsets, got {}",
                n - 2,
                subsets.len()
            )));
        }
        let mut subsets = subsets;
        for s in &mut subsets {
            s.sort_unstable();
        }
        let sizes_ok = subsets[0].len() == 2
            && subsets[n - 3].len() == 2
            && subsets[1..n - 3].iter().all(|s| s.len() == 1);
        if !sizes_ok {
            return Err(Error::InvalidClass("subset sizes must be 2, 1, ..., 1, 2".into()));
        }
        let mut seen = vec![false; n];
        for &x in subsets.iter().flatten() {
            if x >= n || seen[x] {
                return Err(Error::InvalidClass(format!("values must partition 0..{n}")));
            }
            seen[x] = true;
        }
        let [a, b] = [subsets[0][0], subsets[0][1]];
        if step_up(n, a) != b && step_up(n, b) != a {
            return Err(Error::InvalidClass(format!(
                "first pair {{{a},{b}}} is not cyclically adjacent"
            )));
        }
        let (mut lo, mut hi) = if step_up(n, a) == b { (a, b) } else { (b, a) };
        for s in &subsets[1..n - 3] {
            let x = s[0];
            if x == step_down(n, lo) {
                lo = x;
            } else if x == step_up(n, hi) {
                hi = x;
            } else {
                return Err(Error::InvalidClass(format!(
                    "singleton {x} does not extend the interval [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { n, subsets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    /// The four arc permutations in the class, sorted by word.
    pub fn members(&self) -> Vec<ArcPermutation> {
        let n = self.n;
        let first = &self.subsets[0];
        let last = &self.subsets[n - 3];
        let middle: Vec<usize> = self.subsets[1..n - 3].iter().map(|s| s[0]).collect();
        let mut out = Vec::with_capacity(4);
        for first_order in [[first[0], first[1]], [first[1], first[0]]] {
            for last_order in [[last[0], last[1]], [last[1], last[0]]] {
                let mut letters = Vec::with_capacity(n);
                letters.extend_from_slice(&first_order);
                letters.extend_from_slice(&middle);
                letters.extend_from_slice(&last_order);
                out.push(ArcPermutation::new(letters).expect("class members are arc permutations"));
            }
        }
        out.sort();
        out
    }

    /// The lexicographically least member.
    pub fn canonical(&self) -> ArcPermutation {
        self.members().remove(0)
    }

    /// The induced moves on classes, one per label 0..=n-4. A middle label
    /// swaps two adjacent singletons when the result is still a class; the
    /// two end labels shift the boundary between the end pair and its
    /// neighboring singleton, and always act.
    pub fn apply_generator(&self, label: usize) -> Result<ArcClass> {
        let n = self.n;
        if n < 5 {
            return Err(Error::SizeTooSmall { n, min: 5 });
        }
        if label > n - 4 {
            return Err(Error::IndexOutOfRange { index: label, max: n - 4 });
        }
        let mut subsets = self.subsets.clone();
        if label == 0 {
            let c = cyclic_lower(n, &subsets[0]);
            let s = subsets[1][0];
            if s == step_up(n, step_up(n, c)) {
                subsets[0] = vec![step_up(n, c), s];
                subsets[1] = vec![c];
            } else {
                debug_assert_eq!(s, step_down(n, c));
                subsets[0] = vec![s, c];
                subsets[1] = vec![step_up(n, c)];
            }
        } else if label == n - 4 {
            let c = cyclic_lower(n, &subsets[n - 3]);
            let s = subsets[n - 4][0];
            if s == step_up(n, step_up(n, c)) {
                subsets[n - 3] = vec![step_up(n, c), s];
                subsets[n - 4] = vec![c];
            } else {
                debug_assert_eq!(s, step_down(n, c));
                subsets[n - 3] = vec![s, c];
                subsets[n - 4] = vec![step_up(n, c)];
            }
        } else {
            subsets.swap(label, label + 1);
            if ArcClass::new(n, subsets.clone()).is_err() {
                return Ok(self.clone());
            }
        }
        ArcClass::new(n, subsets)
    }

    /// The class of the reversed words: the same subsets in reverse order.
    pub fn reversed(&self) -> ArcClass {
        let subsets = self.subsets.iter().rev().cloned().collect();
        ArcClass::new(self.n, subsets).expect("reversal preserves the interval chain")
    }

    /// The class attached to a colored triangle-free triangulation: the pair
    /// of vertices below the tip of chord 0, then for each later chord the
    /// vertex its flip direction leaves behind, then the final pair.
    pub fn of_triangulation(t: &ColoredTriangulation) -> ArcClass {
        let n = t.n();
        let tip = t.chords()[0].short_tip(n).expect("chord labeled 0 is short");
        let mut subsets = Vec::with_capacity(n - 2);
        subsets.push(vec![step_down(n, tip), tip]);
        let mut used = vec![false; n];
        used[step_down(n, tip)] = true;
        used[tip] = true;
        for label in 1..=n - 4 {
            let prev = t.chords()[label - 1];
            let cur = t.chords()[label];
            let d_prev = prev
                .endpoints()
                .into_iter()
                .find(|v| !cur.endpoints().contains(v))
                .expect("consecutive chords share exactly one endpoint");
            let d_cur = cur
                .endpoints()
                .into_iter()
                .find(|v| !prev.endpoints().contains(v))
                .expect("consecutive chords share exactly one endpoint");
            let s = if d_cur == step_down(n, d_prev) { d_cur } else { d_prev };
            subsets.push(vec![s]);
            used[s] = true;
        }
        let rest: Vec<usize> = (0..n).filter(|v| !used[*v]).collect();
        debug_assert_eq!(rest.len(), 2);
        subsets.push(rest);
        ArcClass::new(n, subsets).expect("triangulations map to classes")
    }

    /// Invert the map from triangulations: recover the tip from the first
    /// pair and one extension bit from each singleton.
    pub fn to_triangulation(&self) -> Result<ColoredTriangulation> {
        let n = self.n;
        if n < 5 {
            return Err(Error::SizeTooSmall { n, min: 5 });
        }
        let tip = step_up(n, cyclic_lower(n, &self.subsets[0]));
        let mut left = step_down(n, tip);
        let mut right = step_up(n, tip);
        let mut bits = Vec::with_capacity(n - 4);
        for s in &self.subsets[1..n - 3] {
            let x = s[0];
            if x == step_down(n, left) {
                bits.push(0);
                left = x;
            } else {
                debug_assert_eq!(x, right);
                bits.push(1);
                right = step_up(n, right);
            }
        }
        let code = Code::new(tip, bits).expect("class walk yields a code");
        Ok(code.to_triangulation())
    }
}

fn cyclic_lower(n: usize, pair: &[usize]) -> usize {
    debug_assert_eq!(pair.len(), 2);
    if step_up(n, pair[0]) == pair[1] {
        pair[0]
    } else {
        pair[1]
    }
}

impl fmt::Display for ArcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, subset) in self.subsets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, x) in subset.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl Serialize for ArcClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ArcClass", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("subsets", &self.subsets)?;
        s.end()
    }
}

/// All classes for Z_n, sorted by subset sequence.
pub fn enumerate_classes(n: usize) -> Result<Vec<ArcClass>> {
    if n < 4 {
        return Err(Error::SizeTooSmall { n, min: 4 });
    }
    let width = n - 4;
    let mut out = Vec::with_capacity(n << width);
    for c in 0..n {
        for mask in 0..1u64 << width {
            let mut subsets = Vec::with_capacity(n - 2);
            subsets.push(vec![c, step_up(n, c)]);
            let mut lo = c;
            let mut hi = step_up(n, c);
            let mut used = vec![false; n];
            used[lo] = true;
            used[hi] = true;
            for j in 0..width {
                if (mask >> (width - 1 - j)) & 1 == 1 {
                    hi = step_up(n, hi);
                    subsets.push(vec![hi]);
                    used[hi] = true;
                } else {
                    lo = step_down(n, lo);
                    subsets.push(vec![lo]);
                    used[lo] = true;
                }
            }
            subsets.push((0..n).filter(|v| !used[*v]).collect());
            out.push(ArcClass::new(n, subsets).expect("interval chains are classes"));
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::enumerate_ctft;
    use std::collections::BTreeSet;

    fn perm(letters: &[usize]) -> ArcPermutation {
        ArcPermutation::new(letters.to_vec()).unwrap()
    }

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        let mut used = vec![false; n];
        fn rec(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
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
        rec(n, &mut current, &mut used, &mut out);
        out
    }

    #[test]
    fn membership_examples() {
        assert!(is_arc_permutation(&[0, 1, 4, 3, 2]).unwrap());
        assert!(is_arc_permutation(&[2, 3, 1, 4, 0]).unwrap());
        assert!(!is_arc_permutation(&[0, 2, 1, 3, 4]).unwrap());
        assert!(!is_arc_permutation(&[0, 1, 4, 3, 2, 5]).unwrap());
        assert!(is_arc_permutation(&[0, 0, 1]).is_err());
        assert!(is_arc_permutation(&[1]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        for n in 2..=7 {
            let expected = n << (n - 2);
            assert_eq!(enumerate_arc_perms(n).unwrap().len(), expected, "n = {n}");
        }
        assert!(enumerate_arc_perms(1).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 3..=6 {
            let brute: Vec<Vec<usize>> = all_permutations(n)
                .into_iter()
                .filter(|p| is_arc_permutation(p).unwrap())
                .collect();
            let listed: Vec<Vec<usize>> = enumerate_arc_perms(n)
                .unwrap()
                .into_iter()
                .map(|p| p.letters().to_vec())
                .collect();
            assert_eq!(listed, brute, "n = {n}");
        }
    }

    #[test]
    fn vector_roundtrip() {
        let v = perm(&[0, 1, 4, 3, 2]).to_vector();
        assert_eq!(v.head(), 0);
        assert_eq!(v.dirs(), &[1, 0, 0]);
        for n in 2..=6 {
            for p in enumerate_arc_perms(n).unwrap() {
                assert_eq!(p.to_vector().to_permutation(), p);
            }
        }
    }

    #[test]
    fn generator_edges_and_vector_rules_agree() {
        for n in 2..=6 {
            for p in enumerate_arc_perms(n).unwrap() {
                for i in 0..=n - 2 {
                    let swapped = p.apply_generator(i).unwrap();
                    assert_eq!(swapped.apply_generator(i).unwrap(), p);
                    assert_eq!(
                        swapped.to_vector(),
                        p.to_vector().apply_generator(i).unwrap(),
                        "word {p}, position {i}"
                    );
                    if i == 0 || i == n - 2 {
                        assert_ne!(swapped, p, "end positions always act");
                    } else {
                        let dirs = p.to_vector().dirs().to_vec();
                        assert_eq!(swapped != p, dirs[i - 1] != dirs[i]);
                    }
                }
                assert!(p.apply_generator(n - 1).is_err());
            }
        }
    }

    #[test]
    fn head_steps_with_the_first_direction() {
        let p = perm(&[2, 3, 4, 0, 1]);
        let v = p.to_vector();
        assert_eq!(v.dirs()[0], 1);
        assert_eq!(p.apply_generator(0).unwrap().to_vector().head(), 3);
        let q = perm(&[2, 1, 0, 4, 3]);
        assert_eq!(q.apply_generator(0).unwrap().to_vector().head(), 1);
    }

    #[test]
    fn reversal_is_an_arc_involution() {
        for n in 2..=6 {
            for p in enumerate_arc_perms(n).unwrap() {
                assert_eq!(p.reversed().reversed(), p);
            }
        }
    }

    #[test]
    fn classes_partition_the_arc_permutations() {
        for n in 4..=7 {
            let perms = enumerate_arc_perms(n).unwrap();
            let mut seen: BTreeSet<ArcClass> = BTreeSet::new();
            for p in &perms {
                let class = p.equivalence_class().unwrap();
                let members = class.members();
                assert_eq!(members.len(), 4);
                assert!(members.contains(p));
                for m in &members {
                    assert_eq!(m.equivalence_class().unwrap(), class);
                }
                assert_eq!(&class.canonical(), &members[0]);
                seen.insert(class);
            }
            assert_eq!(seen.len(), n << (n - 4), "n = {n}");
            let listed = enumerate_classes(n).unwrap();
            assert_eq!(listed, seen.into_iter().collect::<Vec<_>>());
        }
    }

    #[test]
    fn class_validation() {
        let ok = ArcClass::new(6, vec![vec![0, 1], vec![2], vec![3], vec![4, 5]]);
        assert!(ok.is_ok());
        // first pair must be cyclically adjacent
        assert!(ArcClass::new(6, vec![vec![0, 2], vec![1], vec![3], vec![4, 5]]).is_err());
        // singleton 3 does not extend {5, 0}
        assert!(ArcClass::new(6, vec![vec![5, 0], vec![3], vec![2], vec![1, 4]]).is_err());
        // wrong shape
        assert!(ArcClass::new(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).is_err());
        assert!(ArcClass::new(6, vec![vec![0, 1], vec![2], vec![2], vec![4, 5]]).is_err());
        // wraparound pair is fine
        assert!(ArcClass::new(6, vec![vec![5, 0], vec![1], vec![2], vec![3, 4]]).is_ok());
    }

    #[test]
    fn class_moves_examples() {
        let class = ArcClass::new(6, vec![vec![0, 1], vec![2], vec![3], vec![4, 5]]).unwrap();
        let moved = class.apply_generator(0).unwrap();
        assert_eq!(moved.subsets(), &[vec![1, 2], vec![0], vec![3], vec![4, 5]]);
        // swapping the singletons 2 and 3 breaks the chain, so nothing moves
        assert_eq!(class.apply_generator(1).unwrap(), class);
        let end = class.apply_generator(2).unwrap();
        assert_eq!(end.subsets(), &[vec![0, 1], vec![2], vec![5], vec![3, 4]]);
        let swappable = ArcClass::new(6, vec![vec![0, 1], vec![5], vec![2], vec![3, 4]]).unwrap();
        let swapped = swappable.apply_generator(1).unwrap();
        assert_eq!(swapped.subsets(), &[vec![0, 1], vec![2], vec![5], vec![3, 4]]);
    }

    #[test]
    fn class_moves_are_involutive() {
        for n in [5, 6, 7] {
            for class in enumerate_classes(n).unwrap() {
                for label in 0..=n - 4 {
                    let moved = class.apply_generator(label).unwrap();
                    assert_eq!(moved.apply_generator(label).unwrap(), class);
                    if label == 0 || label == n - 4 {
                        assert_ne!(moved, class, "end labels always act");
                    }
                }
                assert!(class.apply_generator(n - 3).is_err());
            }
        }
    }

    #[test]
    fn classes_biject_with_triangulations() {
        for n in 5..=8 {
            let triangulations = enumerate_ctft(n).unwrap();
            let mut images: Vec<ArcClass> = triangulations
                .iter()
                .map(ArcClass::of_triangulation)
                .collect();
            for (t, class) in triangulations.iter().zip(&images) {
                assert_eq!(&class.to_triangulation().unwrap(), t);
            }
            images.sort();
            assert_eq!(images, enumerate_classes(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn triangulation_map_example() {
        let star = ColoredTriangulation::canonical_star(6).unwrap();
        let class = ArcClass::of_triangulation(&star);
        assert_eq!(class.subsets(), &[vec![0, 1], vec![2], vec![3], vec![4, 5]]);
        let flipped = ArcClass::of_triangulation(&star.flip_label(0).unwrap());
        assert_eq!(flipped.subsets(), &[vec![1, 2], vec![0], vec![3], vec![4, 5]]);
    }

    #[test]
    fn class_moves_track_label_flips() {
        for n in 5..=7 {
            for t in enumerate_ctft(n).unwrap() {
                let class = ArcClass::of_triangulation(&t);
                for label in 0..=n - 4 {
                    assert_eq!(
                        ArcClass::of_triangulation(&t.flip_label(label).unwrap()),
                        class.apply_generator(label).unwrap(),
                        "n = {n}, label {label}"
                    );
                }
            }
        }
    }

    #[test]
    fn reversal_tracks_label_reversal() {
        for n in [5, 6] {
            for t in enumerate_ctft(n).unwrap() {
                assert_eq!(
                    ArcClass::of_triangulation(&t.reversed()),
                    ArcClass::of_triangulation(&t).reversed()
                );
            }
        }
    }

    #[test]
    fn serialization_shapes() {
        let class = ArcClass::new(6, vec![vec![0, 1], vec![2], vec![3], vec![4, 5]]).unwrap();
        assert_eq!(
            serde_json::to_string(&class).unwrap(),
            r#"{"n":6,"subsets":[[0,1],[2],[3],[4,5]]}"#
        );
        assert_eq!(
            serde_json::to_string(&perm(&[0, 1, 4, 3, 2])).unwrap(),
            "[0,1,4,3,2]"
        );
    }
}
