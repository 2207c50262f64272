//! Compact codes for colored triangle-free triangulations.
//!
//! A colored triangle-free triangulation of the n-gon is determined by the
//! tip of its chord labeled 0 together with one bit per remaining label: the
//! chord labeled 0 is [v0-1, v0+1], and each later chord extends the previous
//! one by a single step, to the left (bit 0) or to the right (bit 1). This
//! gives a bijection with pairs (v0, bits) in Z_n x {0,1}^(n-4), under which
//! the label flips become local rewriting rules on the code and the flip
//! graph acquires an exact rank function mod n(n-3).

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polygon::{check_polygon_size, ColoredTriangulation, Diagonal};

/// The code (v0; bits) of a colored triangle-free triangulation of the
/// (bits.len() + 4)-gon.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Code {
    v0: usize,
    bits: Vec<u8>,
}

impl Code {
    /// Build a code from its tip vertex and extension bits. The polygon size
    /// is `bits.len() + 4`, so at least one bit is required.
    pub fn new(v0: usize, bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidCode("a code needs at least one bit".into()));
        }
        let n = bits.len() + 4;
        if v0 >= n {
            return Err(Error::InvalidCode(format!("tip {v0} out of range for n = {n}")));
        }
        if let Some(bad) = bits.iter().find(|b| **b > 1) {
            return Err(Error::InvalidCode(format!("bit value {bad} is not 0 or 1")));
        }
        Ok(Self { v0, bits })
    }

    pub fn n(&self) -> usize {
        self.bits.len() + 4
    }

    /// Tip of the chord labeled 0: that chord is [v0 - 1, v0 + 1].
    pub fn tip(&self) -> usize {
        self.v0
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// The chord carrying the given label, computed from the code alone.
    pub fn chord_of_label(&self, label: usize) -> Result<Diagonal> {
        let n = self.n();
        if label > n - 4 {
            return Err(Error::IndexOutOfRange { index: label, max: n - 4 });
        }
        let steps_right: i64 = self.bits[..label].iter().map(|b| *b as i64).sum();
        let v0 = self.v0 as i64;
        Ok(Diagonal::from_residues(
            n,
            v0 - 1 - label as i64 + steps_right,
            v0 + 1 + steps_right,
        ))
    }

    /// Decode into the triangulation the code describes.
    pub fn to_triangulation(&self) -> ColoredTriangulation {
        let n = self.n();
        let chords = (0..=n - 4)
            .map(|label| self.chord_of_label(label).expect("label in range"))
            .collect();
        ColoredTriangulation::new(n, chords).expect("codes decode to proper colorings")
    }

    /// Encode a colored triangle-free triangulation.
    pub fn from_triangulation(t: &ColoredTriangulation) -> Code {
        let n = t.n();
        let v0 = t.chords()[0]
            .short_tip(n)
            .expect("chord labeled 0 is short");
        let mut bits = Vec::with_capacity(n - 4);
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
            if (d_prev + n - 1) % n == d_cur {
                bits.push(0);
            } else {
                debug_assert_eq!((d_prev + 1) % n, d_cur);
                bits.push(1);
            }
        }
        Code { v0, bits }
    }

    /// Rank in the cyclic order on the flip graph: each generator edge moves
    /// the rank by exactly 1 mod n(n-3).
    pub fn rank(&self) -> u64 {
        let n = self.n();
        let modulus = (n * (n - 3)) as u64;
        let mut total = ((n - 3) * self.v0) as u64;
        for (j, bit) in self.bits.iter().enumerate() {
            total += ((n - 4 - j) as u64) * u64::from(*bit);
        }
        total % modulus
    }

    /// Code of the same triangulation with labels reversed end to end.
    pub fn reversed(&self) -> Code {
        let n = self.n();
        let steps_right: usize = self.bits.iter().map(|b| *b as usize).sum();
        let v0 = (self.v0 + 2 + steps_right) % n;
        let bits = self.bits.iter().rev().map(|b| 1 - *b).collect();
        Code { v0, bits }
    }

    /// Apply the flip of the chord with the given label, rewritten as a rule
    /// on the code:
    ///
    /// * label 0 steps the tip (down when the first bit is 0, up when it is 1)
    ///   and flips the first bit;
    /// * a middle label i swaps bits i and i + 1 (1-indexed), which is the
    ///   identity when they agree;
    /// * the last label flips the last bit.
    pub fn apply_generator(&self, label: usize) -> Result<Code> {
        let n = self.n();
        if label > n - 4 {
            return Err(Error::IndexOutOfRange { index: label, max: n - 4 });
        }
        let mut out = self.clone();
        if label == 0 {
            if out.bits[0] == 0 {
                out.v0 = (out.v0 + n - 1) % n;
            } else {
                out.v0 = (out.v0 + 1) % n;
            }
            out.bits[0] = 1 - out.bits[0];
        } else if label == n - 4 {
            let last = out.bits.last_mut().expect("codes are nonempty");
            *last = 1 - *last;
        } else {
            out.bits.swap(label - 1, label);
        }
        Ok(out)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.v0)?;
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl Serialize for Code {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All codes for the n-gon, sorted by tip and then lexicographically by bits.
pub fn enumerate_codes(n: usize) -> Result<Vec<Code>> {
    check_polygon_size(n)?;
    let width = n - 4;
    let mut out = Vec::with_capacity(n << width);
    for v0 in 0..n {
        for mask in 0..1u64 << width {
            let bits = (0..width)
                .map(|j| ((mask >> (width - 1 - j)) & 1) as u8)
                .collect();
            out.push(Code { v0, bits });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::enumerate_ctft;
    use proptest::prelude::*;

    fn code(v0: usize, bits: &[u8]) -> Code {
        Code::new(v0, bits.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Code::new(0, vec![]).is_err());
        assert!(Code::new(6, vec![0, 1]).is_err());
        assert!(Code::new(5, vec![0, 2]).is_err());
        assert!(Code::new(5, vec![0, 1]).is_ok());
    }

    #[test]
    fn star_codes() {
        let star = ColoredTriangulation::canonical_star(6).unwrap();
        assert_eq!(Code::from_triangulation(&star), code(1, &[1, 1]));
        assert_eq!(Code::from_triangulation(&star.reversed()), code(5, &[0, 0]));
        assert_eq!(code(1, &[1, 1]).to_triangulation(), star);
    }

    #[test]
    fn chord_formula_matches_decoding() {
        for n in 5..=8 {
            for c in enumerate_codes(n).unwrap() {
                let t = c.to_triangulation();
                for label in 0..=n - 4 {
                    assert_eq!(c.chord_of_label(label).unwrap(), t.chords()[label]);
                }
                assert!(c.chord_of_label(n - 3).is_err());
            }
        }
    }

    #[test]
    fn roundtrips_are_bijective() {
        for n in 5..=8 {
            let codes = enumerate_codes(n).unwrap();
            assert_eq!(codes.len(), n << (n - 4));
            for c in &codes {
                assert_eq!(&Code::from_triangulation(&c.to_triangulation()), c);
            }
            let triangulations = enumerate_ctft(n).unwrap();
            assert_eq!(triangulations.len(), codes.len());
            for t in &triangulations {
                assert_eq!(&Code::from_triangulation(t).to_triangulation(), t);
            }
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(code(1, &[1, 1]).rank(), 6);
        assert_eq!(code(5, &[0, 0]).rank(), 15);
        assert_eq!(code(0, &[0]).rank(), 0);
        assert_eq!(code(4, &[1]).rank(), 9);
    }

    #[test]
    fn reversal_examples_and_involution() {
        assert_eq!(code(1, &[1, 1]).reversed(), code(5, &[0, 0]));
        for n in 5..=8 {
            for c in enumerate_codes(n).unwrap() {
                assert_eq!(c.reversed().reversed(), c);
                assert_eq!(c.reversed().to_triangulation(), c.to_triangulation().reversed());
            }
        }
    }

    #[test]
    fn reversal_shifts_rank_by_half_the_modulus() {
        for n in 5..=9 {
            let modulus = (n * (n - 3)) as u64;
            let half = modulus / 2;
            for c in enumerate_codes(n).unwrap() {
                assert_eq!((c.rank() + half) % modulus, c.reversed().rank());
            }
        }
    }

    #[test]
    fn generator_examples() {
        assert_eq!(code(1, &[1, 1]).apply_generator(0).unwrap(), code(2, &[0, 1]));
        assert_eq!(code(1, &[1, 1]).apply_generator(2).unwrap(), code(1, &[1, 0]));
        assert_eq!(code(1, &[0, 1]).apply_generator(1).unwrap(), code(1, &[1, 0]));
        assert_eq!(code(1, &[1, 1]).apply_generator(1).unwrap(), code(1, &[1, 1]));
        assert!(code(1, &[1, 1]).apply_generator(3).is_err());
    }

    #[test]
    fn generators_match_label_flips() {
        for n in 5..=8 {
            for c in enumerate_codes(n).unwrap() {
                let t = c.to_triangulation();
                for label in 0..=n - 4 {
                    assert_eq!(
                        c.apply_generator(label).unwrap(),
                        Code::from_triangulation(&t.flip_label(label).unwrap()),
                        "code {c}, label {label}"
                    );
                }
            }
        }
    }

    #[test]
    fn generators_are_involutive_and_move_rank_by_one() {
        for n in 5..=9 {
            let modulus = (n * (n - 3)) as u64;
            for c in enumerate_codes(n).unwrap() {
                for label in 0..=n - 4 {
                    let next = c.apply_generator(label).unwrap();
                    assert_eq!(next.apply_generator(label).unwrap(), c);
                    if next != c {
                        let delta = (next.rank() + modulus - c.rank()) % modulus;
                        assert!(delta == 1 || delta == modulus - 1, "{c} -> {next}");
                    }
                }
            }
        }
    }

    #[test]
    fn reversal_conjugates_the_generators() {
        for n in [6, 7] {
            for c in enumerate_codes(n).unwrap() {
                for label in 0..=n - 4 {
                    assert_eq!(
                        c.reversed().apply_generator(label).unwrap(),
                        c.apply_generator(n - 4 - label).unwrap().reversed()
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        for n in 5..=9 {
            let codes = enumerate_codes(n).unwrap();
            assert!(codes.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(enumerate_codes(4).is_err());
    }

    #[test]
    fn display_and_serialization() {
        assert_eq!(code(1, &[1, 1]).to_string(), "1;11");
        assert_eq!(code(3, &[0]).to_string(), "3;0");
        assert_eq!(serde_json::to_string(&code(1, &[1, 1])).unwrap(), r#""1;11""#);
    }

    fn arbitrary_code() -> impl Strategy<Value = Code> {
        (5usize..=32).prop_flat_map(|n| {
            (0..n, proptest::collection::vec(0u8..=1, n - 4))
                .prop_map(|(v0, bits)| Code::new(v0, bits).unwrap())
        })
    }

    proptest! {
        #[test]
        fn roundtrip_for_larger_polygons(c in arbitrary_code()) {
            prop_assert_eq!(Code::from_triangulation(&c.to_triangulation()), c);
        }

        #[test]
        fn reversal_involution_for_larger_polygons(c in arbitrary_code()) {
            let n = c.n();
            let modulus = (n * (n - 3)) as u64;
            prop_assert_eq!(c.reversed().reversed(), c.clone());
            prop_assert_eq!((c.rank() + modulus / 2) % modulus, c.reversed().rank());
        }
    }
}
