//! Fixed-width bit sets used for zero sets (coordinate indices) and
//! facet sets (facet ids).

use std::fmt;

const BLOCK: usize = 64;

/// A set of indices `0..width` stored as a packed bit vector.
///
/// Index `i` corresponds to coordinate (or facet) `i + 1` in the usual
/// one-based notation; `Display` prints the one-based form, e.g. `{1,2,3}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    width: usize,
    blocks: Vec<u64>,
}

/// Set of standard-form coordinate indices vanishing on a face.
pub type ZeroSet = BitSet;

/// Set of facet ids.
pub type FacetSet = BitSet;

impl BitSet {
    pub fn empty(width: usize) -> Self {
        Self {
            width,
            blocks: vec![0; width.div_ceil(BLOCK)],
        }
    }

    pub fn full(width: usize) -> Self {
        let mut set = Self::empty(width);
        for i in 0..width {
            set.insert(i);
        }
        set
    }

    /// Builds a set from zero-based indices. Panics if an index is `>= width`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut set = Self::empty(width);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.width, "index {i} out of range for width {}", self.width);
        self.blocks[i / BLOCK] |= 1 << (i % BLOCK);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.width, "index {i} out of range for width {}", self.width);
        self.blocks[i / BLOCK] &= !(1 << (i % BLOCK));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.width && self.blocks[i / BLOCK] >> (i % BLOCK) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// Intersection of two sets of equal width.
    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        Self {
            width: self.width,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        Self {
            width: self.width,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        Self {
            width: self.width,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    /// True if the two sets share no element.
    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    /// Size of the intersection without materialising it.
    pub fn intersection_len(&self, other: &Self) -> usize {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Zero-based members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.width).filter(move |&i| self.contains(i))
    }
}

impl fmt::Display for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitSet<{}>{}", self.width, self)
    }
}
