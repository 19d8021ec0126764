//! Permutations of `{1..n}` in one-line notation, and the statistics the rank
//! formulas are built from.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported size. `|I_12| = 140152` still fits comfortably in memory.
pub const MAX_N: usize = 12;

/// A permutation of `{1..n}` stored in one-line notation: position `i` holds
/// `σ(i)`. Values and positions are 1-based throughout the public API.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation {
    len: u8,
    images: [u8; MAX_N],
}

impl Permutation {
    pub fn new(window: &[usize]) -> Result<Self> {
        let n = window.len();
        if n == 0 || n > MAX_N {
            return Err(Error::SizeOutOfRange(n));
        }
        let mut seen = [false; MAX_N + 1];
        let mut images = [0u8; MAX_N];
        for (slot, &v) in images.iter_mut().zip(window) {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse(
                    format_window(window),
                    "not a permutation of 1..n",
                ));
            }
            seen[v] = true;
            *slot = v as u8;
        }
        Ok(Permutation {
            len: n as u8,
            images,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(&(1..=n).collect::<Vec<_>>())
    }

    /// The Bruhat maximum `n(n-1)...1`.
    pub fn reversal(n: usize) -> Result<Self> {
        Self::new(&(1..=n).rev().collect::<Vec<_>>())
    }

    /// Builds a permutation from raw images without validation. The caller
    /// guarantees `images[..n]` is a permutation of `1..=n`.
    pub(crate) fn from_array(len: usize, images: [u8; MAX_N]) -> Self {
        debug_assert!((1..=MAX_N).contains(&len));
        Permutation {
            len: len as u8,
            images,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.len as usize
    }

    /// `σ(i)` for `1 <= i <= n`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn window(&self) -> Vec<usize> {
        self.raw().iter().map(|&v| v as usize).collect()
    }

    #[inline]
    pub(crate) fn raw(&self) -> &[u8] {
        &self.images[..self.n()]
    }

    /// `(self ∘ other)(x) = self(other(x))`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        let mut images = [0u8; MAX_N];
        for (x, slot) in images.iter_mut().take(self.n()).enumerate() {
            *slot = self.images[other.images[x] as usize - 1];
        }
        Ok(Permutation::from_array(self.n(), images))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [0u8; MAX_N];
        for (i, &v) in self.raw().iter().enumerate() {
            images[v as usize - 1] = (i + 1) as u8;
        }
        Permutation::from_array(self.n(), images)
    }

    pub fn is_involution(&self) -> bool {
        self.raw()
            .iter()
            .enumerate()
            .all(|(i, &v)| self.images[v as usize - 1] as usize == i + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.raw().iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inversions(&self) -> usize {
        let w = self.raw();
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn exceedances(&self) -> usize {
        self.raw()
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v as usize > i + 1)
            .count()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.at(i) == i).collect()
    }

    pub fn fixed_point_count(&self) -> usize {
        (1..=self.n()).filter(|&i| self.at(i) == i).count()
    }

    pub fn statistics(&self) -> Statistics {
        Statistics {
            inv: self.inversions(),
            exc: self.exceedances(),
            fixed: self.fixed_points(),
        }
    }

    /// Digit form such as `426153`; only meaningful for `n <= 9`.
    pub fn compact(&self) -> Option<String> {
        (self.n() <= 9).then(|| self.raw().iter().map(|v| v.to_string()).collect())
    }
}

/// Inversions, exceedances and fixed points of a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statistics {
    pub inv: usize,
    pub exc: usize,
    pub fixed: Vec<usize>,
}

pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

pub fn is_involution(p: &Permutation) -> bool {
    p.is_involution()
}

pub fn statistics(p: &Permutation) -> Statistics {
    p.statistics()
}

/// All involutions of `S_n`, in lexicographic order of their one-line words.
///
/// Built by choosing, position by position, the smallest available image; an
/// unassigned position either stays fixed or is paired with a later
/// unassigned position. That visits the words in lexicographic order.
pub fn enumerate_involutions(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 || n > MAX_N {
        return Err(Error::SizeOutOfRange(n));
    }
    let mut out = Vec::new();
    let mut images = [0u8; MAX_N];
    fill_involutions(n, 0, &mut images, &mut out);
    Ok(out)
}

fn fill_involutions(n: usize, pos: usize, images: &mut [u8; MAX_N], out: &mut Vec<Permutation>) {
    if pos == n {
        out.push(Permutation::from_array(n, *images));
        return;
    }
    if images[pos] != 0 {
        fill_involutions(n, pos + 1, images, out);
        return;
    }
    // Smallest possible image for an unassigned position is the position itself.
    images[pos] = (pos + 1) as u8;
    fill_involutions(n, pos + 1, images, out);
    for partner in pos + 1..n {
        if images[partner] == 0 {
            images[pos] = (partner + 1) as u8;
            images[partner] = (pos + 1) as u8;
            fill_involutions(n, pos + 1, images, out);
            images[partner] = 0;
        }
    }
    images[pos] = 0;
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.raw().cmp(other.raw()))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn format_window(window: &[usize]) -> String {
    window
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.raw().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `4,2,6,1,5,3`, or the digit form `426153` when `n <= 9`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let window: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|part| part.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(s.to_string(), "expected comma-separated integers"))?
        } else if !s.is_empty() && s.len() <= 9 && s.bytes().all(|b| b.is_ascii_digit()) {
            s.bytes().map(|b| (b - b'0') as usize).collect()
        } else {
            return Err(Error::Parse(
                s.to_string(),
                "expected comma-separated values or at most 9 digits",
            ));
        };
        Permutation::new(&window).map_err(|e| match e {
            Error::Parse(_, why) => Error::Parse(s.to_string(), why),
            other => other,
        })
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
