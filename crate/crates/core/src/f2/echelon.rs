//! Incremental column echelon form with optional combination tracking.

use super::column::F2Column;

/// A set of linearly independent columns with distinct lowest-index pivots.
///
/// When tracking is enabled every stored column carries a tag recording
/// which inserted inputs were summed to produce it, so a successful
/// reduction also yields a preimage.
#[derive(Clone, Debug)]
pub struct Echelon<C: F2Column> {
    ambient: usize,
    cols: Vec<C>,
    tags: Vec<Option<C>>,
    pivot_of: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl<C: F2Column> Echelon<C> {
    pub fn new(ambient: usize) -> Self {
        Echelon { ambient, cols: Vec::new(), tags: Vec::new(), pivot_of: vec![NONE; ambient] }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.cols.len()
    }

    pub fn basis(&self) -> &[C] {
        &self.cols
    }

    pub fn has_pivot(&self, p: usize) -> bool {
        self.pivot_of[p] != NONE
    }

    /// Reduce `v` in place against the stored columns, mirroring every
    /// step in `tag` when one is given.
    pub fn reduce(&self, v: &mut C, mut tag: Option<&mut C>) {
        while let Some(p) = v.pivot() {
            let k = self.pivot_of[p];
            if k == NONE {
                break;
            }
            v.add_assign(&self.cols[k as usize]);
            if let (Some(t), Some(Some(s))) = (tag.as_deref_mut(), self.tags.get(k as usize)) {
                t.add_assign(s);
            }
        }
    }

    /// Clear every pivot position of `v`, giving the canonical
    /// representative of `v` modulo the span.
    pub fn reduce_full(&self, v: &mut C, mut tag: Option<&mut C>) {
        for p in 0..v.len() {
            if !v.get(p) {
                continue;
            }
            let k = self.pivot_of[p];
            if k == NONE {
                continue;
            }
            v.add_assign(&self.cols[k as usize]);
            if let (Some(t), Some(Some(s))) = (tag.as_deref_mut(), self.tags.get(k as usize)) {
                t.add_assign(s);
            }
        }
    }

    pub fn contains(&self, v: &C) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w, None);
        w.is_zero()
    }

    /// Insert `v`. Returns `Ok(())` if it enlarged the span, otherwise
    /// `Err(tag)` with the reduced tag, a relation among tracked inputs.
    pub fn insert(&mut self, mut v: C, mut tag: Option<C>) -> Result<(), Option<C>> {
        self.reduce(&mut v, tag.as_mut());
        match v.pivot() {
            None => Err(tag),
            Some(p) => {
                self.pivot_of[p] = self.cols.len() as u32;
                self.cols.push(v);
                self.tags.push(tag);
                Ok(())
            }
        }
    }

    /// Express `v` as a combination of tracked inputs, if it lies in the span.
    pub fn preimage(&self, v: &C, tag_len: usize) -> Option<C> {
        let mut w = v.clone();
        let mut t = C::zeros(tag_len);
        self.reduce(&mut w, Some(&mut t));
        w.is_zero().then_some(t)
    }
}

/// Rank of a list of columns.
pub fn rank<C: F2Column>(ambient: usize, cols: impl IntoIterator<Item = C>) -> usize {
    let mut e = Echelon::new(ambient);
    for c in cols {
        let _ = e.insert(c, None);
    }
    e.rank()
}
