//! EL-labellings of class posets.
//!
//! Induced covers of `F_n^A` that are also covers of `I_n` inherit their
//! `I_n` label. With the lexicographic order on labels reversed, this is an
//! EL-labelling of the fixed-point-free involutions, because the decreasing
//! `I_n`-chain of any interval of `F_n^0` never leaves `F_n^0`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::bruhat::PosetView;
use crate::chains::{decreasing_chain, increasing_chain, Chain};
use crate::classes::{class_view, enumerate_class, rank_in_involutions, FixedPointSpec};
use crate::error::{Error, Result};
use crate::moves::{cover_label, RiseLabel};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LabelOrder {
    /// `(i1, j1) < (i2, j2)` iff `i1 < i2`, or `i1 = i2` and `j1 < j2`.
    StandardLex,
    /// `(i1, j1) < (i2, j2)` iff `i1 > i2`, or `i1 = i2` and `j1 > j2`.
    ReversedLex,
}

impl LabelOrder {
    pub fn cmp(self, a: &RiseLabel, b: &RiseLabel) -> Ordering {
        match self {
            LabelOrder::StandardLex => a.cmp(b),
            LabelOrder::ReversedLex => b.cmp(a),
        }
    }

    pub fn cmp_words(self, a: &[RiseLabel], b: &[RiseLabel]) -> Ordering {
        for (x, y) in a.iter().zip(b) {
            match self.cmp(x, y) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        a.len().cmp(&b.len())
    }

    pub fn is_increasing(self, word: &[RiseLabel]) -> bool {
        word.windows(2).all(|w| self.cmp(&w[0], &w[1]) != Ordering::Greater)
    }
}

impl std::fmt::Display for LabelOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LabelOrder::StandardLex => "standard-lex",
            LabelOrder::ReversedLex => "reversed-lex",
        })
    }
}

/// The class poset with every induced cover that is also an `I_n` cover
/// carrying its `I_n` label; the remaining covers stay unlabelled.
pub fn labelled_class_view(spec: &FixedPointSpec) -> PosetView {
    class_view(spec).relabel(cover_label)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ElStatus {
    El,
    NotEl,
    /// Some cover has no label.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "reason")]
pub enum ViolationKind {
    /// Number of weakly increasing chains is not one.
    IncreasingChains { count: u64 },
    /// Several chains share the lexicographically smallest label word.
    TiedMinimum { count: u64 },
    /// The unique increasing chain is not the lex-minimal one.
    NotLexMinimal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElViolation {
    pub bottom: Permutation,
    pub top: Permutation,
    #[serde(flatten)]
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElCheck {
    pub order: LabelOrder,
    pub status: ElStatus,
    pub violations: Vec<ElViolation>,
    pub unlabelled: Vec<(Permutation, Permutation)>,
}

impl ElCheck {
    pub fn is_el(&self) -> bool {
        self.status == ElStatus::El
    }
}

fn check_shape(view: &PosetView) -> Result<Option<ElCheck>> {
    if !crate::classes::is_graded_bruteforce(view).graded {
        return Err(Error::NotGraded);
    }
    if view.minimal().len() != 1 || view.maximal().len() != 1 {
        return Err(Error::NotBounded);
    }
    Ok(None)
}

fn unlabelled(view: &PosetView) -> Vec<(Permutation, Permutation)> {
    view.covers()
        .iter()
        .filter(|c| c.label.is_none())
        .map(|c| (*view.element(c.lower), *view.element(c.upper)))
        .collect()
}

/// Checks that every interval `[x, y]` has exactly one weakly increasing
/// saturated chain under `order`, and that its label word is strictly smaller
/// than that of every other `x`-`y` chain.
///
/// For each top element `y`, one pass down the interval below `y` records for
/// every `z`: the number of increasing `z`-`y` chains by first label, the
/// lexicographically smallest label word of a `z`-`y` chain, and how many
/// chains carry that word.
pub fn el_check(view: &PosetView, order: LabelOrder) -> Result<ElCheck> {
    check_shape(view)?;
    let missing = unlabelled(view);
    if !missing.is_empty() {
        return Ok(ElCheck {
            order,
            status: ElStatus::NotApplicable,
            violations: Vec::new(),
            unlabelled: missing,
        });
    }
    let label = |c: &crate::bruhat::Cover| c.label.expect("all covers labelled");
    let extension = view.linear_extension();
    let mut violations = Vec::new();
    let len = view.len();

    for top in 0..len {
        let below = view.down_set(top);
        let mut inc_first: Vec<Vec<(RiseLabel, u64)>> = vec![Vec::new(); len];
        let mut min_word: Vec<Vec<RiseLabel>> = vec![Vec::new(); len];
        let mut min_count = vec![0u64; len];
        min_count[top] = 1;

        for &z in extension.iter().rev() {
            if z == top || !below.contains(z) {
                continue;
            }
            let mut best: Option<Vec<RiseLabel>> = None;
            let mut best_count = 0u64;
            for c in view.upper_covers(z).filter(|c| below.contains(c.upper)) {
                let l = label(c);
                let w = c.upper;
                let increasing = if w == top {
                    1
                } else {
                    inc_first[w]
                        .iter()
                        .filter(|(first, _)| order.cmp(&l, first) != Ordering::Greater)
                        .fold(0u64, |acc, (_, k)| acc.saturating_add(*k))
                };
                match inc_first[z].iter_mut().find(|(first, _)| *first == l) {
                    Some(slot) => slot.1 = slot.1.saturating_add(increasing),
                    None => inc_first[z].push((l, increasing)),
                }

                let mut candidate = Vec::with_capacity(min_word[w].len() + 1);
                candidate.push(l);
                candidate.extend_from_slice(&min_word[w]);
                let ord = best
                    .as_ref()
                    .map_or(Ordering::Less, |b| order.cmp_words(&candidate, b));
                match ord {
                    Ordering::Less => {
                        best = Some(candidate);
                        best_count = min_count[w];
                    }
                    Ordering::Equal => best_count = best_count.saturating_add(min_count[w]),
                    Ordering::Greater => {}
                }
            }
            min_word[z] = best.expect("a non-top element of the interval has an upper cover in it");
            min_count[z] = best_count;

            let increasing_total = inc_first[z].iter().fold(0u64, |acc, (_, k)| acc.saturating_add(*k));
            let kind = if increasing_total != 1 {
                Some(ViolationKind::IncreasingChains {
                    count: increasing_total,
                })
            } else if min_count[z] != 1 {
                Some(ViolationKind::TiedMinimum { count: min_count[z] })
            } else if !order.is_increasing(&min_word[z]) {
                Some(ViolationKind::NotLexMinimal)
            } else {
                None
            };
            if let Some(kind) = kind {
                violations.push(ElViolation {
                    bottom: *view.element(z),
                    top: *view.element(top),
                    kind,
                });
            }
        }
    }
    violations.sort_by_key(|a| (a.bottom, a.top));
    Ok(ElCheck {
        order,
        status: if violations.is_empty() {
            ElStatus::El
        } else {
            ElStatus::NotEl
        },
        violations,
        unlabelled: Vec::new(),
    })
}

/// Same verdict as [`el_check`], obtained by listing every saturated chain of
/// every interval. Fails with [`Error::ChainLimit`] once an interval holds more
/// than `limit` chains.
pub fn el_check_by_enumeration(view: &PosetView, order: LabelOrder, limit: usize) -> Result<ElCheck> {
    check_shape(view)?;
    let missing = unlabelled(view);
    if !missing.is_empty() {
        return Ok(ElCheck {
            order,
            status: ElStatus::NotApplicable,
            violations: Vec::new(),
            unlabelled: missing,
        });
    }
    let mut violations = Vec::new();
    for bottom in 0..view.len() {
        let above = view.up_set(bottom);
        for top in above.ones().filter(|&t| t != bottom) {
            let below = view.down_set(top);
            let mut words: Vec<Vec<RiseLabel>> = Vec::new();
            let mut prefix = Vec::new();
            collect_words(view, bottom, top, &below, &mut prefix, &mut words, limit)?;
            let increasing: Vec<&Vec<RiseLabel>> = words.iter().filter(|w| order.is_increasing(w)).collect();
            let kind = if increasing.len() != 1 {
                Some(ViolationKind::IncreasingChains {
                    count: increasing.len() as u64,
                })
            } else {
                let chosen = increasing[0];
                let equal = words.iter().filter(|w| *w == chosen).count();
                if equal != 1 {
                    Some(ViolationKind::TiedMinimum { count: equal as u64 })
                } else if words
                    .iter()
                    .any(|w| w != chosen && order.cmp_words(chosen, w) != Ordering::Less)
                {
                    Some(ViolationKind::NotLexMinimal)
                } else {
                    None
                }
            };
            if let Some(kind) = kind {
                violations.push(ElViolation {
                    bottom: *view.element(bottom),
                    top: *view.element(top),
                    kind,
                });
            }
        }
    }
    violations.sort_by_key(|a| (a.bottom, a.top));
    Ok(ElCheck {
        order,
        status: if violations.is_empty() {
            ElStatus::El
        } else {
            ElStatus::NotEl
        },
        violations,
        unlabelled: Vec::new(),
    })
}

fn collect_words(
    view: &PosetView,
    at: usize,
    top: usize,
    below: &fixedbitset::FixedBitSet,
    prefix: &mut Vec<RiseLabel>,
    out: &mut Vec<Vec<RiseLabel>>,
    limit: usize,
) -> Result<()> {
    if at == top {
        if out.len() == limit {
            return Err(Error::ChainLimit(limit));
        }
        out.push(prefix.clone());
        return Ok(());
    }
    for c in view.upper_covers(at).filter(|c| below.contains(c.upper)) {
        prefix.push(c.label.expect("checked labelled"));
        let res = collect_words(view, c.upper, top, below, prefix, out, limit);
        prefix.pop();
        res?;
    }
    Ok(())
}

fn check_fixed_point_free(p: &Permutation) -> Result<()> {
    if !p.is_involution() || p.fixed_point_count() != 0 {
        return Err(Error::NotInClass(*p));
    }
    Ok(())
}

/// The decreasing `I_n`-chain from `p` to `q` and whether all its interior
/// elements are fixed-point-free. For `p <= q` in `F_n^0` it always is.
pub fn decreasing_chain_stays_fixed_point_free(p: &Permutation, q: &Permutation) -> Result<(bool, Chain)> {
    check_fixed_point_free(p)?;
    check_fixed_point_free(q)?;
    let chain = decreasing_chain(p, q)?;
    let holds = chain.interior().iter().all(|x| x.fixed_point_count() == 0);
    Ok((holds, chain))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainKind {
    Increasing,
    Decreasing,
}

/// Endpoints in a class whose increasing or decreasing `I_n`-chain has
/// length 2 and passes outside the class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EscapingInterval {
    pub bottom: Permutation,
    pub top: Permutation,
    pub midpoint: Permutation,
    pub kind: ChainKind,
}

fn check_escape_preconditions(spec: &FixedPointSpec) -> Result<()> {
    let n = spec.n();
    let counts: Vec<usize> = spec.counts().iter().copied().collect();
    if counts == [0] || counts == [n] || spec.is_all_involutions() {
        return Err(Error::InvalidParameters(format!(
            "{spec} is excluded: the class must differ from F_n^{{0}}, F_n^{{n}} and I_n"
        )));
    }
    Ok(())
}

/// Searches the class for an escaping interval, trying increasing chains
/// first. `None` means no such pair exists for this `n`.
pub fn find_escaping_interval(spec: &FixedPointSpec) -> Result<Option<EscapingInterval>> {
    check_escape_preconditions(spec)?;
    Ok(search_escape(spec, ChainKind::Increasing).or_else(|| search_escape(spec, ChainKind::Decreasing)))
}

pub fn find_escaping_interval_of_kind(spec: &FixedPointSpec, kind: ChainKind) -> Result<Option<EscapingInterval>> {
    check_escape_preconditions(spec)?;
    Ok(search_escape(spec, kind))
}

fn search_escape(spec: &FixedPointSpec, kind: ChainKind) -> Option<EscapingInterval> {
    let members = enumerate_class(spec);
    let ranks: Vec<usize> = members
        .iter()
        .map(|p| rank_in_involutions(p).expect("class members are involutions"))
        .collect();
    for (a, bottom) in members.iter().enumerate() {
        for (b, top) in members.iter().enumerate() {
            if ranks[b] != ranks[a] + 2 || !crate::bruhat::leq_unchecked(bottom, top) {
                continue;
            }
            let chain = match kind {
                ChainKind::Increasing => increasing_chain(bottom, top),
                ChainKind::Decreasing => decreasing_chain(bottom, top),
            }
            .expect("comparable involutions");
            let midpoint = chain.elements[1];
            if !spec.contains(&midpoint) {
                return Some(EscapingInterval {
                    bottom: *bottom,
                    top: *top,
                    midpoint,
                    kind,
                });
            }
        }
    }
    None
}
