//! Subset arithmetic on the cyclically ordered ground set `[m]`.
//!
//! Subsets are stored as `m`-bit masks with element `e` at bit `e - 1`,
//! so all set algebra is O(1) word operations. The supported ambient
//! range is `1..=64`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_AMBIENT: usize = 64;

/// A subset of `[m]` together with its ambient size `m`.
///
/// Two sets compare equal iff both the ambient and the members agree;
/// the derived `Ord` sorts by ambient, then by ascending mask value,
/// which is the canonical order used for deterministic enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicSet {
    ambient: usize,
    mask: u64,
}

fn check_ambient(m: usize) -> Result<()> {
    if m == 0 || m > MAX_AMBIENT {
        return Err(Error::domain(format!(
            "ambient size {m} outside supported range 1..={MAX_AMBIENT}"
        )));
    }
    Ok(())
}

fn check_element(e: usize, m: usize) -> Result<()> {
    if e == 0 || e > m {
        return Err(Error::domain(format!("element {e} outside [1, {m}]")));
    }
    Ok(())
}

fn full_mask(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

impl CyclicSet {
    pub fn new(ambient: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_ambient(ambient)?;
        let mut mask = 0u64;
        for e in elems {
            check_element(e, ambient)?;
            mask |= 1u64 << (e - 1);
        }
        Ok(CyclicSet { ambient, mask })
    }

    pub fn from_mask(ambient: usize, mask: u64) -> Result<Self> {
        check_ambient(ambient)?;
        if mask & !full_mask(ambient) != 0 {
            return Err(Error::domain(format!(
                "mask {mask:#x} has bits outside ambient {ambient}"
            )));
        }
        Ok(CyclicSet { ambient, mask })
    }

    pub fn empty(ambient: usize) -> Result<Self> {
        check_ambient(ambient)?;
        Ok(CyclicSet { ambient, mask: 0 })
    }

    pub fn full(ambient: usize) -> Result<Self> {
        check_ambient(ambient)?;
        Ok(CyclicSet {
            ambient,
            mask: full_mask(ambient),
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.ambient && self.mask & (1u64 << (e - 1)) != 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (1..=self.ambient).filter(move |e| mask & (1u64 << (e - 1)) != 0)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn with(&self, e: usize) -> Result<Self> {
        check_element(e, self.ambient)?;
        Ok(CyclicSet {
            ambient: self.ambient,
            mask: self.mask | (1u64 << (e - 1)),
        })
    }

    pub fn without(&self, e: usize) -> Result<Self> {
        check_element(e, self.ambient)?;
        Ok(CyclicSet {
            ambient: self.ambient,
            mask: self.mask & !(1u64 << (e - 1)),
        })
    }

    pub fn union(&self, other: &CyclicSet) -> CyclicSet {
        debug_assert_eq!(self.ambient, other.ambient);
        CyclicSet {
            ambient: self.ambient,
            mask: self.mask | other.mask,
        }
    }

    pub fn intersection(&self, other: &CyclicSet) -> CyclicSet {
        debug_assert_eq!(self.ambient, other.ambient);
        CyclicSet {
            ambient: self.ambient,
            mask: self.mask & other.mask,
        }
    }

    pub fn difference(&self, other: &CyclicSet) -> CyclicSet {
        debug_assert_eq!(self.ambient, other.ambient);
        CyclicSet {
            ambient: self.ambient,
            mask: self.mask & !other.mask,
        }
    }

    pub fn complement(&self) -> CyclicSet {
        CyclicSet {
            ambient: self.ambient,
            mask: full_mask(self.ambient) & !self.mask,
        }
    }

    pub fn is_subset_of(&self, other: &CyclicSet) -> bool {
        self.ambient == other.ambient && self.mask & !other.mask == 0
    }
}

impl fmt::Display for CyclicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, e) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for CyclicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/[{}]", self, self.ambient)
    }
}

/// Parses the textual form `{1,3,6}`; the ambient is carried separately,
/// so use [`CyclicSet::new`] with the parsed elements, or
/// [`parse_set`] which takes the ambient as an argument.
pub fn parse_set(text: &str, ambient: usize) -> Result<CyclicSet> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::domain(format!("set literal must be braced: {text:?}")))?;
    let mut elems = Vec::new();
    let mut prev: Option<usize> = None;
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            if inner.trim().is_empty() {
                break;
            }
            return Err(Error::domain(format!("empty element in set literal {text:?}")));
        }
        let e = usize::from_str(part)
            .map_err(|_| Error::domain(format!("bad element {part:?} in set literal")))?;
        if let Some(p) = prev {
            if e <= p {
                return Err(Error::domain(format!(
                    "set literal elements must be strictly increasing: {text:?}"
                )));
            }
        }
        prev = Some(e);
        elems.push(e);
    }
    CyclicSet::new(ambient, elems)
}

/// Classification of the pair `{a, a'}` relative to a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairType {
    Full,
    Half,
    Empty,
}

/// Which side of the vertical axis an admissible set falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Handedness {
    Left,
    Right,
    OnAxis,
}

/// Rank of `x` in the shifted linear order `a < a+1 < ... < m < 1 < ... < a-1`.
fn cyclic_rank(a: usize, x: usize, m: usize) -> usize {
    (x + m - a) % m
}

/// True iff `i` precedes-or-equals `j` in the rotation of the linear
/// order starting at `a`.
pub fn cyclic_leq(a: usize, i: usize, j: usize, m: usize) -> Result<bool> {
    check_ambient(m)?;
    check_element(a, m)?;
    check_element(i, m)?;
    check_element(j, m)?;
    Ok(cyclic_rank(a, i, m) <= cyclic_rank(a, j, m))
}

/// Gale order `I <=_a J`: componentwise comparison after sorting both
/// sets by the shifted order starting at `a`.
pub fn gale_leq(a: usize, lhs: &CyclicSet, rhs: &CyclicSet) -> Result<bool> {
    if lhs.ambient() != rhs.ambient() {
        return Err(Error::domain("gale_leq: ambient mismatch"));
    }
    if lhs.len() != rhs.len() {
        return Err(Error::domain("gale_leq: cardinality mismatch"));
    }
    let m = lhs.ambient();
    check_element(a, m)?;
    let mut left: Vec<usize> = lhs.iter().map(|e| cyclic_rank(a, e, m)).collect();
    let mut right: Vec<usize> = rhs.iter().map(|e| cyclic_rank(a, e, m)).collect();
    left.sort_unstable();
    right.sort_unstable();
    Ok(left.iter().zip(right.iter()).all(|(l, r)| l <= r))
}

/// The cyclic interval `{a, ..., b}`, wrapping past `m` when `a > b`.
pub fn cyclic_interval(a: usize, b: usize, m: usize) -> Result<CyclicSet> {
    check_ambient(m)?;
    check_element(a, m)?;
    check_element(b, m)?;
    let mut set = CyclicSet::empty(m)?;
    let mut e = a;
    loop {
        set = set.with(e)?;
        if e == b {
            break;
        }
        e = e % m + 1;
    }
    Ok(set)
}

/// Weak separation of two equal-size subsets of the same ambient.
///
/// Walking once around the circle `1..m`, the elements of the symmetric
/// difference must change membership class at most twice.
pub fn is_weakly_separated(lhs: &CyclicSet, rhs: &CyclicSet) -> Result<bool> {
    if lhs.ambient() != rhs.ambient() {
        return Err(Error::domain("is_weakly_separated: ambient mismatch"));
    }
    if lhs.len() != rhs.len() {
        return Err(Error::domain("is_weakly_separated: cardinality mismatch"));
    }
    let only_left = lhs.difference(rhs);
    let only_right = rhs.difference(lhs);
    if only_left.is_empty() || only_right.is_empty() {
        return Ok(true);
    }
    let mut classes: Vec<bool> = Vec::new();
    for e in 1..=lhs.ambient() {
        if only_left.contains(e) {
            classes.push(true);
        } else if only_right.contains(e) {
            classes.push(false);
        }
    }
    let n = classes.len();
    let changes = (0..n)
        .filter(|&i| classes[i] != classes[(i + 1) % n])
        .count();
    Ok(changes <= 2)
}

/// The type-C bar map `I -> [2n] \ {2n - i + 1 : i in I}`; an involution.
pub fn bar(set: &CyclicSet) -> Result<CyclicSet> {
    let m = set.ambient();
    if m % 2 != 0 {
        return Err(Error::domain("bar: ambient must be even"));
    }
    let reflected = set.mask().reverse_bits() >> (64 - m);
    CyclicSet::from_mask(m, full_mask(m) & !reflected)
}

/// The mirror element `i' = 2n - i + 1`.
pub fn mirror_element(i: usize, m: usize) -> usize {
    m - i + 1
}

/// Classifies the pair `{a, a'}` as full, half, or empty in `set`.
pub fn pair_type(set: &CyclicSet, a: usize) -> Result<PairType> {
    let m = set.ambient();
    if m % 2 != 0 {
        return Err(Error::domain("pair_type: ambient must be even"));
    }
    let n = m / 2;
    if a == 0 || a > n {
        return Err(Error::domain(format!("pair_type: index {a} outside [1, {n}]")));
    }
    let lo = set.contains(a);
    let hi = set.contains(mirror_element(a, m));
    Ok(match (lo, hi) {
        (true, true) => PairType::Full,
        (false, false) => PairType::Empty,
        _ => PairType::Half,
    })
}

/// True iff every pair is half; equivalently `bar(set) == set`.
pub fn is_pair_free(set: &CyclicSet) -> Result<bool> {
    let m = set.ambient();
    if m % 2 != 0 {
        return Err(Error::domain("is_pair_free: ambient must be even"));
    }
    let n = m / 2;
    for a in 1..=n {
        if pair_type(set, a)? != PairType::Half {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Admissibility: `set` is weakly separated from its own bar image.
pub fn is_admissible(set: &CyclicSet) -> Result<bool> {
    let m = set.ambient();
    if m % 2 != 0 {
        return Err(Error::domain("is_admissible: ambient must be even"));
    }
    if set.len() != m / 2 {
        return Err(Error::domain(format!(
            "is_admissible: set has {} elements, expected n = {}",
            set.len(),
            m / 2
        )));
    }
    is_weakly_separated(set, &bar(set)?)
}

/// Pair-pattern characterization of admissibility: no full pair with
/// empty pairs both above and below it, and vice versa. "Above" means a
/// smaller index.
pub fn admissible_by_pairs(set: &CyclicSet) -> Result<bool> {
    let m = set.ambient();
    if m % 2 != 0 {
        return Err(Error::domain("admissible_by_pairs: ambient must be even"));
    }
    if set.len() != m / 2 {
        return Err(Error::domain(format!(
            "admissible_by_pairs: set has {} elements, expected n = {}",
            set.len(),
            m / 2
        )));
    }
    let n = m / 2;
    let types: Vec<PairType> = (1..=n)
        .map(|a| pair_type(set, a))
        .collect::<Result<_>>()?;
    let sandwiched = |target: PairType, other: PairType| -> bool {
        (0..n).any(|i| {
            types[i] == target
                && types[..i].contains(&other)
                && types[i + 1..].contains(&other)
        })
    };
    Ok(!sandwiched(PairType::Full, PairType::Empty)
        && !sandwiched(PairType::Empty, PairType::Full))
}

/// Handedness of an admissible set: the side of the vertical axis its
/// tiling vertex falls on. `OnAxis` iff pair-free; `Left` iff the
/// topmost non-half pair is full.
pub fn handedness(set: &CyclicSet) -> Result<Handedness> {
    if !is_admissible(set)? {
        return Err(Error::domain(format!("handedness: {set} is not admissible")));
    }
    let n = set.ambient() / 2;
    for a in 1..=n {
        match pair_type(set, a)? {
            PairType::Full => return Ok(Handedness::Left),
            PairType::Empty => return Ok(Handedness::Right),
            PairType::Half => {}
        }
    }
    Ok(Handedness::OnAxis)
}

/// True iff the distinct elements appear in clockwise cyclic order on
/// the circle `1..m`.
pub fn is_cyclically_ordered(seq: &[usize], m: usize) -> bool {
    debug_assert!(seq.iter().all(|&e| e >= 1 && e <= m));
    if seq.len() <= 2 {
        return true;
    }
    let wraps = (0..seq.len())
        .filter(|&i| seq[(i + 1) % seq.len()] < seq[i])
        .count();
    wraps == 1
}

/// All `k`-element subsets of `[m]` in ascending mask order.
pub fn k_subsets(m: usize, k: usize) -> Result<Vec<CyclicSet>> {
    check_ambient(m)?;
    if k > m {
        return Err(Error::domain(format!("k_subsets: k = {k} exceeds m = {m}")));
    }
    if k == 0 {
        return Ok(vec![CyclicSet::empty(m)?]);
    }
    let mut out = Vec::new();
    let limit = full_mask(m);
    // Gosper's hack walks masks of fixed popcount in ascending order.
    let mut mask: u64 = (1u64 << k) - 1;
    loop {
        out.push(CyclicSet::from_mask(m, mask)?);
        if k == m {
            break;
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        if r > limit || r == 0 {
            break;
        }
        mask = (((r ^ mask) >> 2) / c) | r;
        if mask > limit {
            break;
        }
    }
    Ok(out)
}

/// Binomial coefficient, saturating; used for enumeration budget checks.
pub fn binomial(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (m - i) as u128 / (i + 1) as u128;
    }
    acc
}
