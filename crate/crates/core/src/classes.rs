//! Conjugation-invariant sets of involutions `F_n^A`: involutions of `S_n`
//! whose number of fixed points lies in `A`, under the induced Bruhat order.
//!
//! Gradedness is decided two ways, by walking the Hasse diagram and by the
//! closed-form characterisation on the shape of `A`; [`rank_value`] gives the
//! rank function of the graded ones.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bruhat::{leq_unchecked, poset_view, PosetView};
use crate::error::{Error, Result};
use crate::moves::{cover_label, ct, RiseLabel};
use crate::perm::{enumerate_involutions, Permutation, MAX_N};

/// The pair `(n, A)` describing `F_n^A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FixedPointSpec {
    n: usize,
    counts: BTreeSet<usize>,
}

impl FixedPointSpec {
    pub fn new(n: usize, counts: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::SizeOutOfRange(n));
        }
        let counts: BTreeSet<usize> = counts.into_iter().collect();
        if counts.is_empty() {
            return Err(Error::InvalidClass("empty set of fixed-point counts".into()));
        }
        if let Some(&big) = counts.iter().find(|&&a| a > n) {
            return Err(Error::InvalidClass(format!("{big} fixed points exceeds n = {n}")));
        }
        if let Some(&odd) = counts.iter().find(|&&a| a % 2 != n % 2) {
            return Err(Error::InvalidClass(format!(
                "{odd} fixed points has the wrong parity for n = {n}"
            )));
        }
        Ok(FixedPointSpec { n, counts })
    }

    /// `F_n^{<=a}`: at most `a` fixed points.
    pub fn at_most(n: usize, a: usize) -> Result<Self> {
        Self::new(n, (n % 2..=a).step_by(2))
    }

    /// `F_n^{>=a}`: at least `a` fixed points.
    pub fn at_least(n: usize, a: usize) -> Result<Self> {
        Self::new(n, (a..=n).step_by(2))
    }

    /// `F_n^{a1:a2}`, defined for `a1 < a2` of equal parity.
    pub fn between(n: usize, a1: usize, a2: usize) -> Result<Self> {
        if a1 >= a2 {
            return Err(Error::InvalidClass(format!("need a1 < a2, got {a1}:{a2}")));
        }
        Self::new(n, (a1..=a2).step_by(2))
    }

    /// All of `I_n`.
    pub fn all_involutions(n: usize) -> Result<Self> {
        Self::new(n, (n % 2..=n).step_by(2))
    }

    /// Every valid spec for size `n`: each nonempty subset of the counts with
    /// the parity of `n`, ordered by the bit pattern of the subset.
    pub fn all_for(n: usize) -> Result<Vec<Self>> {
        let valid: Vec<usize> = (n % 2..=n).step_by(2).collect();
        (1u32..(1 << valid.len()))
            .map(|mask| {
                Self::new(
                    n,
                    valid
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask & (1 << b) != 0)
                        .map(|(_, &a)| a),
                )
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &BTreeSet<usize> {
        &self.counts
    }

    pub fn min_count(&self) -> usize {
        *self.counts.iter().next().expect("nonempty")
    }

    pub fn max_count(&self) -> usize {
        *self.counts.iter().next_back().expect("nonempty")
    }

    pub fn contains_identity(&self) -> bool {
        self.counts.contains(&self.n)
    }

    /// `A - {n}`.
    pub fn proper_counts(&self) -> BTreeSet<usize> {
        self.counts.iter().copied().filter(|&a| a != self.n).collect()
    }

    /// `max(A - {n})`, if `A - {n}` is nonempty.
    pub fn tilde(&self) -> Option<usize> {
        self.proper_counts().iter().next_back().copied()
    }

    /// `(a1, a2)` when `A - {n}` is the run `a1, a1 + 2, ..., a2`.
    pub fn run(&self) -> Option<(usize, usize)> {
        let proper = self.proper_counts();
        let a1 = *proper.iter().next()?;
        let a2 = *proper.iter().next_back()?;
        ((a2 - a1) / 2 + 1 == proper.len()).then_some((a1, a2))
    }

    /// `m = (a2 - a1) / 2` for run-shaped `A - {n}`.
    pub fn run_half_width(&self) -> Option<usize> {
        self.run().map(|(a1, a2)| (a2 - a1) / 2)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.n() == self.n && p.is_involution() && self.counts.contains(&p.fixed_point_count())
    }

    pub fn is_all_involutions(&self) -> bool {
        (self.n % 2..=self.n).step_by(2).all(|a| self.counts.contains(&a))
    }

    pub fn without_identity(&self) -> Option<Self> {
        let proper = self.proper_counts();
        (!proper.is_empty()).then_some(FixedPointSpec {
            n: self.n,
            counts: proper,
        })
    }
}

impl fmt::Display for FixedPointSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<String> = self.counts.iter().map(|a| a.to_string()).collect();
        write!(f, "F_{}^{{{}}}", self.n, counts.join(","))
    }
}

pub fn make_spec(n: usize, counts: &[usize]) -> Result<FixedPointSpec> {
    FixedPointSpec::new(n, counts.iter().copied())
}

/// Members of `F_n^A` in lexicographic order.
pub fn enumerate_class(spec: &FixedPointSpec) -> Vec<Permutation> {
    enumerate_involutions(spec.n)
        .expect("spec size is validated")
        .into_iter()
        .filter(|p| spec.counts.contains(&p.fixed_point_count()))
        .collect()
}

/// Hasse diagram of `F_n^A` under the induced order, covers unlabelled.
pub fn class_view(spec: &FixedPointSpec) -> PosetView {
    poset_view(&enumerate_class(spec)).expect("class members share n")
}

/// Outcome of the Hasse-diagram gradedness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gradedness {
    pub graded: bool,
    /// Rank of every element of the view (by index) when graded.
    pub rank_map: Option<Vec<usize>>,
}

impl Gradedness {
    /// Length of the maximal chains, when graded.
    pub fn height(&self) -> Option<usize> {
        self.rank_map.as_ref().map(|r| r.iter().copied().max().unwrap_or(0))
    }
}

/// A finite poset is graded when all its maximal chains have one length.
///
/// For every element the longest and shortest saturated chains up from a
/// minimal element are computed over a linear extension; the poset is graded
/// exactly when the two agree everywhere and agree on all maximal elements.
pub fn is_graded_bruteforce(view: &PosetView) -> Gradedness {
    let len = view.len();
    let mut longest = vec![0usize; len];
    let mut shortest = vec![0usize; len];
    let mut graded = true;
    for x in view.linear_extension() {
        let mut lo = usize::MAX;
        let mut hi = 0;
        let mut any = false;
        for c in view.lower_covers(x) {
            any = true;
            lo = lo.min(shortest[c.lower] + 1);
            hi = hi.max(longest[c.lower] + 1);
        }
        if any {
            shortest[x] = lo;
            longest[x] = hi;
            graded &= lo == hi;
        }
    }
    let maximal = view.maximal();
    if let Some(&first) = maximal.first() {
        graded &= maximal.iter().all(|&m| longest[m] == longest[first] && shortest[m] == shortest[first]);
    }
    Gradedness {
        graded,
        rank_map: graded.then_some(longest),
    }
}

/// Gradedness decided from the shape of `A` alone: `A - {n}` is empty, or it
/// is a run `a1, a1 + 2, ..., a2` with `a1 <= 1`, `a2 = n - 2`, or
/// `a2 - a1 >= 2`.
pub fn is_graded_theorem1(spec: &FixedPointSpec) -> bool {
    if spec.proper_counts().is_empty() {
        return true;
    }
    match spec.run() {
        Some((a1, a2)) => a1 <= 1 || a2 + 2 == spec.n || a2 - a1 >= 2,
        None => false,
    }
}

/// `(inv + exc) / 2`, the rank of an involution in `I_n`.
pub fn rank_in_involutions(p: &Permutation) -> Result<usize> {
    if !p.is_involution() {
        return Err(Error::NotInvolution(*p));
    }
    Ok((p.inversions() + p.exceedances()) / 2)
}

/// Rank of `p` in a graded `F_n^A`:
/// `(inv + exc - n + max(A - {n})) / 2`, plus one when `n ∈ A`.
///
/// When `n ∈ A` the identity is the minimum and has rank 0; the shifted
/// expression only covers the other elements (it gives `-2` for the identity
/// of `F_6^{0,6}`).
pub fn rank_value(p: &Permutation, spec: &FixedPointSpec) -> Result<usize> {
    if !spec.contains(p) {
        return Err(Error::NotInClass(*p));
    }
    if !is_graded_theorem1(spec) {
        return Err(Error::NotGraded);
    }
    let Some(tilde) = spec.tilde() else {
        return Ok(0);
    };
    if p.is_identity() {
        return Ok(0);
    }
    let numer = (p.inversions() + p.exceedances() + tilde) as i64 - spec.n as i64;
    debug_assert!(numer % 2 == 0, "{p} in {spec}");
    let rank = numer / 2 + i64::from(spec.contains_identity());
    debug_assert!(rank >= 0, "{p} in {spec}");
    Ok(rank as usize)
}

/// The maximum of `F_n^A`:
/// `n (n-1) ... (β+1) (α+1) (α+2) ... β α (α-1) ... 1`
/// with `α = (n - a)/2`, `β = (n + a)/2` and `a = min A`.
pub fn top_element(spec: &FixedPointSpec) -> Permutation {
    let n = spec.n;
    let a = spec.min_count();
    let alpha = (n - a) / 2;
    let beta = (n + a) / 2;
    let window: Vec<usize> = (beta + 1..=n)
        .rev()
        .chain(alpha + 1..=beta)
        .chain((1..=alpha).rev())
        .collect();
    Permutation::new(&window).expect("word is a permutation")
}

/// Height of a graded `F_n^A`, read off as the rank of its maximum.
pub fn poset_rank(spec: &FixedPointSpec) -> Result<usize> {
    rank_value(&top_element(spec), spec)
}

/// The global-rank expression `((n-a)/2 (n+a-1) - n + ã) / 2 (+1 if n ∈ A)`,
/// which leaves out `exc` of the maximum. It is not a valid rank (it is 9/2 on
/// `F_6^{0}`) and is exposed only so reports can show the gap against
/// [`poset_rank`]. `None` when `A = {n}`.
pub fn global_rank_without_exceedances(spec: &FixedPointSpec) -> Option<f64> {
    let n = spec.n as f64;
    let a = spec.min_count() as f64;
    let tilde = spec.tilde()? as f64;
    let bump = if spec.contains_identity() { 1.0 } else { 0.0 };
    Some(((n - a) / 2.0 * (n + a - 1.0) - n + tilde) / 2.0 + bump)
}

/// Minimal elements of `F_n^A`, lexicographically sorted.
pub fn minimal_elements(spec: &FixedPointSpec) -> Vec<Permutation> {
    let view = class_view(spec);
    view.minimal().into_iter().map(|i| *view.element(i)).collect()
}

/// Involutions consisting of `a` fixed points and `(n - a)/2` disjoint
/// adjacent transpositions, lexicographically sorted.
pub fn adjacent_transposition_products(n: usize, a: usize) -> Vec<Permutation> {
    fn place(pos: usize, n: usize, left: usize, window: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if pos > n {
            if left == 0 {
                out.push(Permutation::new(window).expect("valid"));
            }
            return;
        }
        // Smallest word first: a fixed point keeps `pos` in place.
        window.push(pos);
        place(pos + 1, n, left, window, out);
        window.pop();
        if left > 0 && pos < n {
            window.push(pos + 1);
            window.push(pos);
            place(pos + 2, n, left - 1, window, out);
            window.pop();
            window.pop();
        }
    }
    if a > n || !(n - a).is_multiple_of(2) {
        return Vec::new();
    }
    let mut out = Vec::new();
    place(1, n, (n - a) / 2, &mut Vec::with_capacity(n), &mut out);
    out
}

/// A chain of a class poset with the `I_n` label of each step, where the step
/// is also an `I_n` cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessChain {
    pub elements: Vec<Permutation>,
    pub labels: Vec<Option<RiseLabel>>,
}

impl WitnessChain {
    fn new(elements: Vec<Permutation>) -> Self {
        let labels = elements.windows(2).map(|w| cover_label(&w[0], &w[1])).collect();
        WitnessChain { elements, labels }
    }

    pub fn len(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn fixed_point_profile(&self) -> Vec<usize> {
        self.elements.iter().map(Permutation::fixed_point_count).collect()
    }
}

/// Two saturated chains of different lengths between the same endpoints of a
/// class poset, certifying that the class is not graded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonGradedWitness {
    pub spec: FixedPointSpec,
    pub bottom: Permutation,
    pub top: Permutation,
    pub long_chain: WitnessChain,
    pub short_chain: WitnessChain,
    /// Every step of both chains was rechecked to be a cover of the class
    /// poset, and all elements belong to the class.
    pub verified: bool,
}

/// `x ⋖ y` in the order induced on `members`.
pub fn is_induced_cover(x: &Permutation, y: &Permutation, members: &[Permutation]) -> bool {
    x != y
        && leq_unchecked(x, y)
        && !members
            .iter()
            .any(|z| z != x && z != y && leq_unchecked(x, z) && leq_unchecked(z, y))
}

fn verify_witness(spec: &FixedPointSpec, chains: [&WitnessChain; 2]) -> bool {
    let members = enumerate_class(spec);
    chains.iter().all(|c| {
        c.elements.iter().all(|p| spec.contains(p))
            && c.elements.windows(2).all(|w| is_induced_cover(&w[0], &w[1], &members))
    })
}

fn pad(core: &[usize], fixed_through: usize, n: usize) -> Permutation {
    let mut window = core.to_vec();
    window.extend(core.len() + 1..=fixed_through);
    let mut next = fixed_through + 1;
    while next < n {
        window.push(next + 1);
        window.push(next);
        next += 2;
    }
    Permutation::new(&window).expect("padded word is a permutation")
}

fn word(s: &str) -> Vec<usize> {
    s.bytes().map(|b| (b - b'0') as usize).collect()
}

/// Two chains in `F_n^{{i}}` of lengths 3 and 2 with common endpoints, for
/// `2 <= i <= n - 4` with `i ≡ n (mod 2)`.
///
/// The core lives on `{1..6}` (`124365` to `426153`, two fixed points); it is
/// extended by fixed points `7 .. i+4` and adjacent transpositions
/// `(i+5, i+6), ..., (n-1, n)`.
pub fn isolated_count_witness(n: usize, i: usize) -> Result<NonGradedWitness> {
    if n > MAX_N || i < 2 || i + 4 > n || i % 2 != n % 2 {
        return Err(Error::InvalidParameters(format!(
            "need 2 <= i <= n - 4 and i ≡ n (mod 2), got n = {n}, i = {i}"
        )));
    }
    let spec = FixedPointSpec::new(n, [i])?;
    let padded = |s: &str| pad(&word(s), i + 4, n);
    let long_chain = WitnessChain::new(["124365", "143265", "423165", "426153"].map(padded).to_vec());
    let short_chain = WitnessChain::new(["124365", "216453", "426153"].map(padded).to_vec());
    let verified = verify_witness(&spec, [&long_chain, &short_chain]);
    Ok(NonGradedWitness {
        bottom: long_chain.elements[0],
        top: *long_chain.elements.last().expect("nonempty"),
        spec,
        long_chain,
        short_chain,
        verified,
    })
}

/// Two chains of lengths `k - 2` and `2` (with `k = 2m + 4`) in
/// `F_n^{{i-2, i+2m}}`, for `m >= 1`, `i >= 2`, `i ≡ n (mod 2)` and
/// `i + 2m <= n - 2`.
///
/// On `{1..k}` the long chain climbs from `12...(k-2)k(k-1)` to
/// `k23...(k-1)1` by the fe-moves `(k-2,k-1), (k-3,k-2), ..., (1,2)`; the short
/// one passes through the fixed-point-free `π` reached by the ff-moves
/// `(1,2), (3,4), ..., (k-3,k-2)` and then takes the crossing ee-moves
/// `(k-3,k-1), (k-5,k-3), ..., (1,3)`, keeping only `σ ⋖ π ⋖ τ`. The words are
/// extended by fixed points `k+1 .. k+i-2` and adjacent transpositions up to
/// `n`.
pub fn gapped_counts_witness(n: usize, i: usize, m: usize) -> Result<NonGradedWitness> {
    if n > MAX_N || m == 0 || i < 2 || i % 2 != n % 2 || i + 2 * m + 2 > n {
        return Err(Error::InvalidParameters(format!(
            "need m >= 1, i >= 2, i ≡ n (mod 2) and i + 2m <= n - 2, got n = {n}, i = {i}, m = {m}"
        )));
    }
    let k = 2 * m + 4;
    let spec = FixedPointSpec::new(n, [i - 2, i + 2 * m])?;
    let mut core: Vec<usize> = (1..=k - 2).collect();
    core.extend([k, k - 1]);
    let bottom = pad(&core, k + i - 2, n);

    let walk = |start: Permutation, labels: &[(usize, usize)]| -> Result<Vec<Permutation>> {
        let mut out = vec![start];
        for &(a, b) in labels {
            let next = ct(out.last().expect("nonempty"), RiseLabel::new(a, b)?)?;
            out.push(next);
        }
        Ok(out)
    };
    let fe: Vec<(usize, usize)> = (1..=k - 2).rev().map(|a| (a, a + 1)).collect();
    let ff: Vec<(usize, usize)> = (1..=k - 3).step_by(2).map(|a| (a, a + 1)).collect();
    let ee: Vec<(usize, usize)> = ff.iter().rev().map(|&(a, _)| (a, a + 2)).collect();

    let long = walk(bottom, &fe)?;
    let through_pi = walk(bottom, &ff)?;
    let pi = *through_pi.last().expect("nonempty");
    let up = walk(pi, &ee)?;
    let top = *long.last().expect("nonempty");
    if *up.last().expect("nonempty") != top {
        return Err(Error::InvalidParameters("short route misses the top".into()));
    }
    let long_chain = WitnessChain::new(long);
    let short_chain = WitnessChain::new(vec![bottom, pi, top]);
    let verified = verify_witness(&spec, [&long_chain, &short_chain]);
    Ok(NonGradedWitness {
        spec,
        bottom,
        top,
        long_chain,
        short_chain,
        verified,
    })
}
