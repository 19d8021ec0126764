//! The Bruhat order on `S_n` through the dot criterion, and explicit induced
//! subposets (Hasse diagrams) over arbitrary sets of permutations.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::moves::RiseLabel;
use crate::perm::{Permutation, MAX_N};

/// `σ[k, l] = |{i <= k : σ(i) >= l}|` for all `1 <= k, l <= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DotTable {
    n: usize,
    counts: [u8; MAX_N * MAX_N],
}

impl DotTable {
    pub fn new(p: &Permutation) -> Self {
        let n = p.n();
        let mut counts = [0u8; MAX_N * MAX_N];
        for k in 1..=n {
            let v = p.at(k);
            for l in 1..=n {
                let prev = if k > 1 { counts[(k - 2) * n + (l - 1)] } else { 0 };
                counts[(k - 1) * n + (l - 1)] = prev + u8::from(v >= l);
            }
        }
        DotTable { n, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(k, l)`, both 1-based.
    pub fn get(&self, k: usize, l: usize) -> usize {
        self.counts[(k - 1) * self.n + (l - 1)] as usize
    }

    /// Entrywise `self <= other`.
    pub fn dominated_by(&self, other: &DotTable) -> bool {
        let len = self.n * self.n;
        self.counts[..len]
            .iter()
            .zip(&other.counts[..len])
            .all(|(a, b)| a <= b)
    }
}

impl std::fmt::Debug for DotTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<Vec<usize>> = (1..=self.n)
            .map(|k| (1..=self.n).map(|l| self.get(k, l)).collect())
            .collect();
        f.debug_struct("DotTable").field("rows", &rows).finish()
    }
}

pub fn dot_table(p: &Permutation) -> DotTable {
    DotTable::new(p)
}

pub fn bruhat_leq(p: &Permutation, q: &Permutation) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::SizeMismatch(p.n(), q.n()));
    }
    Ok(leq_unchecked(p, q))
}

/// Dot criterion for permutations of equal size, built row by row without
/// materialising either table.
pub(crate) fn leq_unchecked(p: &Permutation, q: &Permutation) -> bool {
    let n = p.n();
    let mut pc = [0u8; MAX_N + 1];
    let mut qc = [0u8; MAX_N + 1];
    for k in 1..=n {
        for c in &mut pc[1..=p.at(k)] {
            *c += 1;
        }
        for c in &mut qc[1..=q.at(k)] {
            *c += 1;
        }
        if pc[1..=n].iter().zip(&qc[1..=n]).any(|(a, b)| a > b) {
            return false;
        }
    }
    true
}

/// `{z ∈ universe : p <= z <= q}`, in the order of `universe`.
pub fn interval(p: &Permutation, q: &Permutation, universe: &[Permutation]) -> Result<Vec<Permutation>> {
    if !bruhat_leq(p, q)? {
        return Err(Error::NotComparable(*p, *q));
    }
    let (pt, qt) = (DotTable::new(p), DotTable::new(q));
    let mut out = Vec::new();
    for z in universe {
        if z.n() != p.n() {
            return Err(Error::SizeMismatch(p.n(), z.n()));
        }
        let zt = DotTable::new(z);
        if pt.dominated_by(&zt) && zt.dominated_by(&qt) {
            out.push(*z);
        }
    }
    Ok(out)
}

/// A covering pair `lower ⋖ upper` of a [`PosetView`], by element index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub label: Option<RiseLabel>,
}

/// A finite poset given by its elements and its covering relation.
#[derive(Debug, Clone)]
pub struct PosetView {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    covers: Vec<Cover>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl PosetView {
    /// Builds a view from elements and cover pairs `(lower, upper)` given as
    /// indices into `elements`. Elements are kept in the given order.
    pub fn from_covers(elements: Vec<Permutation>, covers: Vec<Cover>) -> Self {
        let index = elements.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let mut covers = covers;
        covers.sort_by_key(|c| (c.lower, c.upper));
        let mut up = vec![Vec::new(); elements.len()];
        let mut down = vec![Vec::new(); elements.len()];
        for (ci, c) in covers.iter().enumerate() {
            up[c.lower].push(ci);
            down[c.upper].push(ci);
        }
        PosetView {
            elements,
            index,
            covers,
            up,
            down,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn upper_covers(&self, i: usize) -> impl Iterator<Item = &Cover> + '_ {
        self.up[i].iter().map(move |&c| &self.covers[c])
    }

    pub fn lower_covers(&self, i: usize) -> impl Iterator<Item = &Cover> + '_ {
        self.down[i].iter().map(move |&c| &self.covers[c])
    }

    pub fn cover_between(&self, lower: usize, upper: usize) -> Option<&Cover> {
        self.upper_covers(lower).find(|c| c.upper == upper)
    }

    pub fn is_cover(&self, lower: &Permutation, upper: &Permutation) -> bool {
        match (self.index_of(lower), self.index_of(upper)) {
            (Some(a), Some(b)) => self.cover_between(a, b).is_some(),
            _ => false,
        }
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].is_empty()).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].is_empty()).collect()
    }

    /// Elements below or equal to `top`, as a bit set over indices.
    pub fn down_set(&self, top: usize) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.len());
        let mut stack = vec![top];
        seen.insert(top);
        while let Some(x) = stack.pop() {
            for c in self.lower_covers(x) {
                if !seen.put(c.lower) {
                    stack.push(c.lower);
                }
            }
        }
        seen
    }

    /// Elements above or equal to `bottom`.
    pub fn up_set(&self, bottom: usize) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.len());
        let mut stack = vec![bottom];
        seen.insert(bottom);
        while let Some(x) = stack.pop() {
            for c in self.upper_covers(x) {
                if !seen.put(c.upper) {
                    stack.push(c.upper);
                }
            }
        }
        seen
    }

    /// Order relation of the view, `x <= y`, following covers.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up_set(x).contains(y)
    }

    /// Indices in an order compatible with the poset (every cover goes from an
    /// earlier to a later index).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut indegree: Vec<usize> = self.down.iter().map(Vec::len).collect();
        let mut ready: Vec<usize> = (0..self.len()).filter(|&i| indegree[i] == 0).rev().collect();
        let mut order = Vec::with_capacity(self.len());
        while let Some(x) = ready.pop() {
            order.push(x);
            for c in self.upper_covers(x) {
                indegree[c.upper] -= 1;
                if indegree[c.upper] == 0 {
                    ready.push(c.upper);
                }
            }
        }
        order
    }

    /// Replaces every cover label by `label(lower, upper)`.
    pub fn relabel<F>(mut self, mut label: F) -> Self
    where
        F: FnMut(&Permutation, &Permutation) -> Option<RiseLabel>,
    {
        for c in &mut self.covers {
            c.label = label(&self.elements[c.lower], &self.elements[c.upper]);
        }
        self
    }
}

/// The Hasse diagram of the Bruhat order restricted to `universe`: `x ⋖ y`
/// whenever `x < y` and no element of `universe` lies strictly between.
///
/// Elements are deduplicated and sorted lexicographically; covers are
/// unlabelled.
pub fn poset_view(universe: &[Permutation]) -> Result<PosetView> {
    let mut elements = universe.to_vec();
    elements.sort();
    elements.dedup();
    if let Some(first) = elements.first() {
        if let Some(bad) = elements.iter().find(|p| p.n() != first.n()) {
            return Err(Error::SizeMismatch(first.n(), bad.n()));
        }
    }
    let count = elements.len();
    let tables: Vec<DotTable> = elements.iter().map(DotTable::new).collect();
    let inv: Vec<usize> = elements.iter().map(Permutation::inversions).collect();

    let mut above = vec![FixedBitSet::with_capacity(count); count];
    let mut below = vec![FixedBitSet::with_capacity(count); count];
    for x in 0..count {
        for y in 0..count {
            // x < y forces inv(x) < inv(y)
            if inv[x] < inv[y] && tables[x].dominated_by(&tables[y]) {
                above[x].insert(y);
                below[y].insert(x);
            }
        }
    }
    let mut covers = Vec::new();
    for x in 0..count {
        for y in above[x].ones() {
            if above[x].is_disjoint(&below[y]) {
                covers.push(Cover {
                    lower: x,
                    upper: y,
                    label: None,
                });
            }
        }
    }
    Ok(PosetView::from_covers(elements, covers))
}
