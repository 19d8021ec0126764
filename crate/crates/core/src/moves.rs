//! Rise classification and the covering transformations of `I_n`.
//!
//! Every upper cover of an involution `σ` in `I_n` is `ct_(i,j)(σ)` for a
//! suitable rise `(i, j)`, and that rise is the label of the cover. Cycle
//! products are read right to left: `ct(σ) = σ ∘ c` with `c` applied first.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_N};

/// An index pair `(i, j)` with `1 <= i < j`. The derived order is the
/// lexicographic one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RiseLabel {
    i: u8,
    j: u8,
}

impl RiseLabel {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j || j > MAX_N {
            return Err(Error::InvalidLabel(i, j, MAX_N));
        }
        Ok(RiseLabel {
            i: i as u8,
            j: j as u8,
        })
    }

    pub(crate) fn new_unchecked(i: usize, j: usize) -> Self {
        debug_assert!(0 < i && i < j && j <= MAX_N);
        RiseLabel {
            i: i as u8,
            j: j as u8,
        }
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    /// All labels `(i, j)` with `1 <= i < j <= n`, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = RiseLabel> {
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| RiseLabel::new_unchecked(i, j)))
    }
}

impl fmt::Display for RiseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl fmt::Debug for RiseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for RiseLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.i, self.j).serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for RiseLabel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (i, j) = <(usize, usize)>::deserialize(deserializer)?;
        RiseLabel::new(i, j).map_err(serde::de::Error::custom)
    }
}

/// How a pair `(i, j)` sits in an involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RiseClass {
    NotARise,
    NonFreeRise,
    /// A free rise whose fixed/exceedance/deficiency pattern is none of the
    /// six suitable ones (fd, df, dd, de).
    UnsuitableFreeRise,
    Type1FixedFixed,
    Type2FixedExceedance,
    Type3ExceedanceFixed,
    Type4NonCrossing,
    Type5Crossing,
    Type6ExceedanceDeficiency,
}

impl RiseClass {
    pub fn is_suitable(self) -> bool {
        self.suitable_type().is_some()
    }

    /// `Some(1..=6)` for suitable rises.
    pub fn suitable_type(self) -> Option<u8> {
        match self {
            RiseClass::Type1FixedFixed => Some(1),
            RiseClass::Type2FixedExceedance => Some(2),
            RiseClass::Type3ExceedanceFixed => Some(3),
            RiseClass::Type4NonCrossing => Some(4),
            RiseClass::Type5Crossing => Some(5),
            RiseClass::Type6ExceedanceDeficiency => Some(6),
            _ => None,
        }
    }

    /// Change in the number of fixed points caused by the move.
    pub fn fixed_point_delta(self) -> Option<i32> {
        match self {
            RiseClass::Type1FixedFixed => Some(-2),
            RiseClass::Type5Crossing => Some(2),
            c if c.is_suitable() => Some(0),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Fixed,
    Exceedance,
    Deficiency,
}

fn kind(p: &Permutation, i: usize) -> Kind {
    match p.at(i).cmp(&i) {
        std::cmp::Ordering::Equal => Kind::Fixed,
        std::cmp::Ordering::Greater => Kind::Exceedance,
        std::cmp::Ordering::Less => Kind::Deficiency,
    }
}

fn check_label(p: &Permutation, label: RiseLabel) -> Result<()> {
    if label.j() > p.n() {
        return Err(Error::InvalidLabel(label.i(), label.j(), p.n()));
    }
    Ok(())
}

pub fn classify_rise(p: &Permutation, label: RiseLabel) -> Result<RiseClass> {
    if !p.is_involution() {
        return Err(Error::NotInvolution(*p));
    }
    check_label(p, label)?;
    Ok(classify_unchecked(p, label))
}

fn classify_unchecked(p: &Permutation, label: RiseLabel) -> RiseClass {
    let (i, j) = (label.i(), label.j());
    let (vi, vj) = (p.at(i), p.at(j));
    if vi > vj {
        return RiseClass::NotARise;
    }
    if (i + 1..j).any(|k| (vi + 1..vj).contains(&p.at(k))) {
        return RiseClass::NonFreeRise;
    }
    match (kind(p, i), kind(p, j)) {
        (Kind::Fixed, Kind::Fixed) => RiseClass::Type1FixedFixed,
        (Kind::Fixed, Kind::Exceedance) => RiseClass::Type2FixedExceedance,
        (Kind::Exceedance, Kind::Fixed) => RiseClass::Type3ExceedanceFixed,
        (Kind::Exceedance, Kind::Exceedance) if vi < j => RiseClass::Type5Crossing,
        (Kind::Exceedance, Kind::Exceedance) => RiseClass::Type4NonCrossing,
        (Kind::Exceedance, Kind::Deficiency) => RiseClass::Type6ExceedanceDeficiency,
        _ => RiseClass::UnsuitableFreeRise,
    }
}

/// Right-multiplies `p` by the cycle `(c[0] c[1] ... c[k-1])`.
fn times_cycle(p: &Permutation, cycle: &[usize]) -> Permutation {
    let mut images = [0u8; MAX_N];
    images[..p.n()].copy_from_slice(p.raw());
    for (t, &from) in cycle.iter().enumerate() {
        let to = cycle[(t + 1) % cycle.len()];
        images[from - 1] = p.at(to) as u8;
    }
    Permutation::from_array(p.n(), images)
}

/// Right-multiplies `p` by the inverse of the cycle `(c[0] ... c[k-1])`.
fn times_inverse_cycle(p: &Permutation, cycle: &[usize]) -> Permutation {
    let reversed: Vec<usize> = cycle.iter().rev().copied().collect();
    times_cycle(p, &reversed)
}

/// The cycles whose product (right to left, all disjoint) the move multiplies by.
fn move_cycles(p: &Permutation, label: RiseLabel, class: RiseClass) -> Option<Vec<Vec<usize>>> {
    let (i, j) = (label.i(), label.j());
    let (vi, vj) = (p.at(i), p.at(j));
    let cycles = match class {
        RiseClass::Type1FixedFixed => vec![vec![i, j]],
        RiseClass::Type2FixedExceedance => vec![vec![i, j, vj]],
        RiseClass::Type3ExceedanceFixed => vec![vec![i, j, vi]],
        RiseClass::Type4NonCrossing | RiseClass::Type6ExceedanceDeficiency => {
            vec![vec![i, j], vec![vi, vj]]
        }
        RiseClass::Type5Crossing => vec![vec![i, j, vj, vi]],
        _ => return None,
    };
    Some(cycles)
}

fn apply_move(p: &Permutation, label: RiseLabel, class: RiseClass) -> Option<Permutation> {
    let cycles = move_cycles(p, label, class)?;
    // Disjoint cycles commute, so the order of multiplication is immaterial.
    Some(cycles.iter().fold(*p, |acc, c| times_cycle(&acc, c)))
}

/// The covering transformation `ct_(i,j)(p)`.
pub fn ct(p: &Permutation, label: RiseLabel) -> Result<Permutation> {
    let class = classify_rise(p, label)?;
    apply_move(p, label, class).ok_or(Error::NotSuitable(label, *p))
}

/// The unique `p` with `ct(p, label) = q`, if there is one.
///
/// Each move type is undone by solving its cycle for the unknown values of
/// `p` from `q`: types 2, 4 and 6 recover them directly, types 3 and 5 leave
/// one value that must be a fixed point of `q` strictly between `i` and `j`.
pub fn ict(q: &Permutation, label: RiseLabel) -> Result<Option<Permutation>> {
    if !q.is_involution() {
        return Err(Error::NotInvolution(*q));
    }
    check_label(q, label)?;
    let (i, j) = (label.i(), label.j());
    if q.at(i) < q.at(j) {
        return Err(Error::NotInversion(label, *q));
    }
    let mut candidates: Vec<Vec<Vec<usize>>> = Vec::new();
    // Type 1: c = (i j)
    candidates.push(vec![vec![i, j]]);
    // Type 2: c = (i j s), s = p(j) = q(i)
    let s = q.at(i);
    if s != i && s != j {
        candidates.push(vec![vec![i, j, s]]);
    }
    // Types 4 and 6: c = (i j)(r s), r = p(i) = q(j), s = p(j) = q(i)
    let r = q.at(j);
    if r != s && ![i, j].contains(&r) && ![i, j].contains(&s) {
        candidates.push(vec![vec![i, j], vec![r, s]]);
    }
    for r in (i + 1..j).filter(|&r| q.at(r) == r) {
        // Type 3: c = (i j r), r = p(i)
        candidates.push(vec![vec![i, j, r]]);
        // Type 5: c = (i j s r), r = p(i), s = p(j) = q(i)
        if ![i, j, r].contains(&s) {
            candidates.push(vec![vec![i, j, s, r]]);
        }
    }
    for cycles in candidates {
        let p = cycles.iter().fold(*q, |acc, c| times_inverse_cycle(&acc, c));
        if !p.is_involution() {
            continue;
        }
        let class = classify_unchecked(&p, label);
        if apply_move(&p, label, class) == Some(*q) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Upper covers of `p` in `I_n` with their labels, sorted by label.
pub fn covers(p: &Permutation) -> Result<Vec<(RiseLabel, Permutation)>> {
    if !p.is_involution() {
        return Err(Error::NotInvolution(*p));
    }
    Ok(covers_unchecked(p))
}

pub(crate) fn covers_unchecked(p: &Permutation) -> Vec<(RiseLabel, Permutation)> {
    RiseLabel::all(p.n())
        .filter_map(|label| {
            let class = classify_unchecked(p, label);
            apply_move(p, label, class).map(|q| (label, q))
        })
        .collect()
}

/// Label of the `I_n` cover `lower ⋖ upper`, or `None` if it is not one.
pub fn cover_label(lower: &Permutation, upper: &Permutation) -> Option<RiseLabel> {
    if !lower.is_involution() || lower.n() != upper.n() {
        return None;
    }
    covers_unchecked(lower)
        .into_iter()
        .find(|(_, q)| q == upper)
        .map(|(l, _)| l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_involutions;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn l(i: usize, j: usize) -> RiseLabel {
        RiseLabel::new(i, j).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_rise(&p("1234"), l(1, 2)).unwrap(), RiseClass::Type1FixedFixed);
        assert_eq!(classify_rise(&p("124365"), l(3, 5)).unwrap(), RiseClass::Type5Crossing);
        assert_eq!(classify_rise(&p("3412"), l(1, 2)).unwrap(), RiseClass::Type4NonCrossing);
        assert_eq!(classify_rise(&p("1234"), l(1, 3)).unwrap(), RiseClass::NonFreeRise);
        assert_eq!(classify_rise(&p("2143"), l(1, 2)).unwrap(), RiseClass::NotARise);
        // 2 is a deficiency, 3 an exceedance
        assert_eq!(classify_rise(&p("2143"), l(2, 3)).unwrap(), RiseClass::UnsuitableFreeRise);
        assert!(matches!(classify_rise(&p("2314"), l(1, 2)), Err(Error::NotInvolution(_))));
        assert!(matches!(classify_rise(&p("123"), l(1, 4)), Err(Error::InvalidLabel(..))));
    }

    #[test]
    fn ct_examples() {
        assert_eq!(ct(&p("124365"), l(3, 5)).unwrap(), p("126453"));
        assert_eq!(ct(&p("1234"), l(1, 2)).unwrap(), p("2134"));
        assert_eq!(ct(&p("2143"), l(1, 4)).unwrap(), p("3412"));
        assert_eq!(ct(&p("3412"), l(1, 2)).unwrap(), p("4321"));
        assert_eq!(ct(&p("123465"), l(4, 5)).unwrap(), p("123654"));
        assert!(matches!(ct(&p("1234"), l(1, 3)), Err(Error::NotSuitable(..))));
    }

    #[test]
    fn ict_examples() {
        assert_eq!(ict(&p("2134"), l(1, 2)).unwrap(), Some(p("1234")));
        assert_eq!(ict(&p("126453"), l(3, 5)).unwrap(), Some(p("124365")));
        assert!(matches!(ict(&p("1234"), l(1, 2)), Err(Error::NotInversion(..))));
    }

    #[test]
    fn ict_agrees_with_search() {
        for n in 1..=6 {
            let all = enumerate_involutions(n).unwrap();
            for q in &all {
                for label in RiseLabel::all(n) {
                    if q.at(label.i()) < q.at(label.j()) {
                        continue;
                    }
                    let searched: Vec<_> = all
                        .iter()
                        .filter(|x| ct(x, label).ok() == Some(*q))
                        .copied()
                        .collect();
                    assert!(searched.len() <= 1);
                    assert_eq!(ict(q, label).unwrap(), searched.first().copied(), "{q} {label}");
                }
            }
        }
    }

    #[test]
    fn covers_examples() {
        assert!(covers(&p("4321")).unwrap().is_empty());
        assert_eq!(
            covers(&p("1234")).unwrap(),
            vec![(l(1, 2), p("2134")), (l(2, 3), p("1324")), (l(3, 4), p("1243"))]
        );
        let c = covers(&p("124365")).unwrap();
        assert!(c.contains(&(l(3, 5), p("126453"))));
        assert!(c.contains(&(l(2, 3), p("143265"))));
    }

    #[test]
    fn label_order_is_lexicographic() {
        let labels: Vec<_> = RiseLabel::all(4).collect();
        assert!(labels.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(labels.len(), 6);
        assert!(l(1, 4) < l(2, 3));
        assert!(RiseLabel::new(2, 2).is_err());
        assert_eq!(l(3, 5).to_string(), "(3,5)");
    }
}
