//! Saturated chains in `I_n`: the increasing and decreasing chain of an
//! interval, and exhaustive enumeration.

use serde::{Deserialize, Serialize};

use crate::bruhat::leq_unchecked;
use crate::error::{Error, Result};
use crate::moves::{covers_unchecked, RiseLabel};
use crate::perm::Permutation;

/// Default cap on the number of chains [`all_saturated_chains`] will produce.
pub const DEFAULT_CHAIN_LIMIT: usize = 10_000;

/// A saturated chain of `I_n`, bottom to top, with the label of every cover.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain {
    pub elements: Vec<Permutation>,
    pub labels: Vec<RiseLabel>,
}

impl Chain {
    pub fn trivial(p: Permutation) -> Self {
        Chain {
            elements: vec![p],
            labels: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn bottom(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn top(&self) -> &Permutation {
        self.elements.last().expect("chain has at least one element")
    }

    /// Elements strictly between bottom and top.
    pub fn interior(&self) -> &[Permutation] {
        let k = self.elements.len();
        if k <= 2 {
            &[]
        } else {
            &self.elements[1..k - 1]
        }
    }

    /// Labels weakly increase in the lexicographic order.
    pub fn is_increasing(&self) -> bool {
        self.labels.windows(2).all(|w| w[0] <= w[1])
    }

    /// Labels strictly decrease in the lexicographic order.
    pub fn is_decreasing(&self) -> bool {
        self.labels.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.labels.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn fixed_point_profile(&self) -> Vec<usize> {
        self.elements.iter().map(Permutation::fixed_point_count).collect()
    }
}

/// Least position where the one-line words of `p` and `q` differ.
pub fn di(p: &Permutation, q: &Permutation) -> Result<usize> {
    if p.n() != q.n() {
        return Err(Error::SizeMismatch(p.n(), q.n()));
    }
    (1..=p.n())
        .find(|&i| p.at(i) != q.at(i))
        .ok_or(Error::EqualEndpoints)
}

fn check_endpoints(p: &Permutation, q: &Permutation) -> Result<()> {
    if p.n() != q.n() {
        return Err(Error::SizeMismatch(p.n(), q.n()));
    }
    for x in [p, q] {
        if !x.is_involution() {
            return Err(Error::NotInvolution(*x));
        }
    }
    if !leq_unchecked(p, q) {
        return Err(Error::NotComparable(*p, *q));
    }
    Ok(())
}

/// Walks up from `p`, taking at each step the cover below `q` that `pick`
/// selects from the label-sorted candidates.
fn greedy_chain<F>(p: &Permutation, q: &Permutation, mut pick: F) -> Chain
where
    F: FnMut(Vec<(RiseLabel, Permutation)>) -> (RiseLabel, Permutation),
{
    let mut chain = Chain::trivial(*p);
    let mut current = *p;
    while current != *q {
        let candidates: Vec<_> = covers_unchecked(&current)
            .into_iter()
            .filter(|(_, c)| leq_unchecked(c, q))
            .collect();
        // I_n is graded, so below q there is always a next step.
        let (label, next) = pick(candidates);
        chain.labels.push(label);
        chain.elements.push(next);
        current = next;
    }
    chain
}

/// The unique chain from `p` to `q` whose labels weakly increase.
///
/// Built greedily: the increasing chain is lex-minimal, and so is each of its
/// suffixes within its own subinterval, so taking the smallest available label
/// at each step reproduces it.
pub fn increasing_chain(p: &Permutation, q: &Permutation) -> Result<Chain> {
    check_endpoints(p, q)?;
    let chain = greedy_chain(p, q, |c| c[0]);
    if chain.is_increasing() {
        return Ok(chain);
    }
    search_chain(p, q, Chain::is_increasing)
}

/// The unique chain from `p` to `q` whose labels strictly decrease.
///
/// Built greedily as the lex-maximal chain; verified afterwards, with
/// exhaustive search as the fallback.
pub fn decreasing_chain(p: &Permutation, q: &Permutation) -> Result<Chain> {
    check_endpoints(p, q)?;
    let chain = greedy_chain(p, q, |c| *c.last().expect("nonempty candidates"));
    if chain.is_decreasing() {
        return Ok(chain);
    }
    search_chain(p, q, Chain::is_decreasing)
}

fn search_chain(p: &Permutation, q: &Permutation, accept: fn(&Chain) -> bool) -> Result<Chain> {
    all_saturated_chains(p, q)?
        .into_iter()
        .find(accept)
        .ok_or(Error::NotComparable(*p, *q))
}

/// Every saturated chain from `p` to `q` in `I_n`, in lexicographic order of
/// the label sequences. Fails once more than [`DEFAULT_CHAIN_LIMIT`] chains
/// would be produced.
pub fn all_saturated_chains(p: &Permutation, q: &Permutation) -> Result<Vec<Chain>> {
    all_saturated_chains_with_limit(p, q, DEFAULT_CHAIN_LIMIT)
}

pub fn all_saturated_chains_with_limit(
    p: &Permutation,
    q: &Permutation,
    limit: usize,
) -> Result<Vec<Chain>> {
    check_endpoints(p, q)?;
    let mut out = Vec::new();
    let mut prefix = Chain::trivial(*p);
    extend_chains(q, &mut prefix, &mut out, limit)?;
    Ok(out)
}

fn extend_chains(q: &Permutation, prefix: &mut Chain, out: &mut Vec<Chain>, limit: usize) -> Result<()> {
    let current = *prefix.top();
    if current == *q {
        if out.len() == limit {
            return Err(Error::ChainLimit(limit));
        }
        out.push(prefix.clone());
        return Ok(());
    }
    for (label, next) in covers_unchecked(&current) {
        if !leq_unchecked(&next, q) {
            continue;
        }
        prefix.labels.push(label);
        prefix.elements.push(next);
        let res = extend_chains(q, prefix, out, limit);
        prefix.labels.pop();
        prefix.elements.pop();
        res?;
    }
    Ok(())
}
