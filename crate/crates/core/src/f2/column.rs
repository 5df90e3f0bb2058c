//! Column types for elimination over F₂.
//!
//! Two representations share one trait: packed words for small, dense
//! problems and sorted index lists for the large sparse boundary matrices.

/// A vector over F₂ that can take part in column reduction.
pub trait F2Column: Clone + Send + Sync {
    fn zeros(len: usize) -> Self;
    fn len(&self) -> usize;
    /// Lowest set index, if any.
    fn pivot(&self) -> Option<usize>;
    fn add_assign(&mut self, other: &Self);
    fn get(&self, i: usize) -> bool;
    fn flip(&mut self, i: usize);
    fn ones(&self) -> Vec<usize>;

    fn is_zero(&self) -> bool {
        self.pivot().is_none()
    }

    fn from_indices(len: usize, idx: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in idx {
            v.flip(i);
        }
        v
    }
}

/// Packed bit vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Concatenate two vectors (used for pair spaces).
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.ones() {
            out.flip(i);
        }
        for i in other.ones() {
            out.flip(self.len + i);
        }
        out
    }

    /// Split at `mid` into two vectors.
    pub fn split(&self, mid: usize) -> (BitVec, BitVec) {
        let mut a = BitVec::zeros(mid);
        let mut b = BitVec::zeros(self.len - mid);
        for i in self.ones() {
            if i < mid {
                a.flip(i);
            } else {
                b.flip(i - mid);
            }
        }
        (a, b)
    }
}

impl F2Column for BitVec {
    fn zeros(len: usize) -> Self {
        BitVec { words: vec![0; len.div_ceil(64)], len }
    }

    fn len(&self) -> usize {
        self.len
    }

    fn pivot(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, w)| **w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    fn add_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    fn ones(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (k, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(k * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }
}

/// Sorted list of set indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec {
    idx: Vec<u32>,
    len: usize,
}

impl SparseVec {
    pub fn indices(&self) -> &[u32] {
        &self.idx
    }
}

impl F2Column for SparseVec {
    fn zeros(len: usize) -> Self {
        SparseVec { idx: Vec::new(), len }
    }

    fn len(&self) -> usize {
        self.len
    }

    fn pivot(&self) -> Option<usize> {
        self.idx.first().map(|&i| i as usize)
    }

    fn add_assign(&mut self, other: &Self) {
        let (a, b) = (&self.idx, &other.idx);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        self.idx = out;
    }

    fn get(&self, i: usize) -> bool {
        self.idx.binary_search(&(i as u32)).is_ok()
    }

    fn flip(&mut self, i: usize) {
        match self.idx.binary_search(&(i as u32)) {
            Ok(p) => {
                self.idx.remove(p);
            }
            Err(p) => self.idx.insert(p, i as u32),
        }
    }

    fn ones(&self) -> Vec<usize> {
        self.idx.iter().map(|&i| i as usize).collect()
    }

    fn from_indices(len: usize, idx: &[usize]) -> Self {
        let mut v: Vec<u32> = idx.iter().map(|&i| i as u32).collect();
        v.sort_unstable();
        // pairs cancel over F₂
        let mut out: Vec<u32> = Vec::with_capacity(v.len());
        for i in v {
            if out.last() == Some(&i) {
                out.pop();
            } else {
                out.push(i);
            }
        }
        SparseVec { idx: out, len }
    }
}
