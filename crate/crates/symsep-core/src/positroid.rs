//! Decorated permutations, Grassmann necklaces, and positroids.

use std::sync::OnceLock;

use crate::cyclic::{
    bar, binomial, cyclic_leq, gale_leq, is_cyclically_ordered, k_subsets, CyclicSet,
};
use crate::error::{Error, Result};

/// Color of a fixed point of a decorated permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedColor {
    Black,
    White,
}

/// A permutation of `[m]` with black/white-colored fixed points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecoratedPermutation {
    m: usize,
    image: Vec<usize>,
    white_fixed: u64,
}

impl DecoratedPermutation {
    /// Builds a decorated permutation from a 1-based image array and the
    /// colors of its fixed points. Every fixed point must be listed in
    /// exactly one of the two color lists, and nothing else may be.
    pub fn new(image: Vec<usize>, white_fixed: &[usize], black_fixed: &[usize]) -> Result<Self> {
        let m = image.len();
        if m == 0 || m > 64 {
            return Err(Error::domain(format!(
                "permutation size {m} outside supported range 1..=64"
            )));
        }
        let mut seen = vec![false; m + 1];
        for &v in &image {
            if v == 0 || v > m || seen[v] {
                return Err(Error::domain("image is not a bijection of [1, m]"));
            }
            seen[v] = true;
        }
        let mut white_mask = 0u64;
        let mut black_mask = 0u64;
        for &i in white_fixed {
            if i == 0 || i > m {
                return Err(Error::domain(format!("white fixed point {i} out of range")));
            }
            white_mask |= 1u64 << (i - 1);
        }
        for &i in black_fixed {
            if i == 0 || i > m {
                return Err(Error::domain(format!("black fixed point {i} out of range")));
            }
            black_mask |= 1u64 << (i - 1);
        }
        if white_mask & black_mask != 0 {
            return Err(Error::domain("a fixed point cannot be both black and white"));
        }
        let fixed_mask: u64 = (1..=m)
            .filter(|&i| image[i - 1] == i)
            .map(|i| 1u64 << (i - 1))
            .sum();
        if white_mask | black_mask != fixed_mask {
            return Err(Error::domain(
                "fixed-point colors must cover exactly the fixed points",
            ));
        }
        Ok(DecoratedPermutation {
            m,
            image,
            white_fixed: white_mask,
        })
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn inverse(&self, v: usize) -> usize {
        self.image.iter().position(|&x| x == v).unwrap() + 1
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.image[i - 1] == i
    }

    pub fn fixed_color(&self, i: usize) -> Option<FixedColor> {
        if !self.is_fixed(i) {
            None
        } else if self.white_fixed & (1u64 << (i - 1)) != 0 {
            Some(FixedColor::White)
        } else {
            Some(FixedColor::Black)
        }
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.m).filter(|&i| self.is_fixed(i)).collect()
    }

    pub fn white_fixed_points(&self) -> Vec<usize> {
        (1..=self.m)
            .filter(|&i| self.fixed_color(i) == Some(FixedColor::White))
            .collect()
    }

    pub fn black_fixed_points(&self) -> Vec<usize> {
        (1..=self.m)
            .filter(|&i| self.fixed_color(i) == Some(FixedColor::Black))
            .collect()
    }

    /// The subset size `k` of the associated Grassmann necklace.
    pub fn type_k(&self) -> usize {
        necklace_from_perm(self).entries()[0].len()
    }
}

/// The cyclic shift `f(i) = i + s mod m`, for `0 < s < m` (no fixed points).
pub fn shift_permutation(m: usize, s: usize) -> Result<DecoratedPermutation> {
    if m == 0 || s == 0 || s >= m {
        return Err(Error::domain("shift_permutation requires 0 < s < m"));
    }
    let image = (1..=m).map(|i| (i - 1 + s) % m + 1).collect();
    DecoratedPermutation::new(image, &[], &[])
}

/// A Grassmann necklace of type `(k, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrassmannNecklace {
    m: usize,
    k: usize,
    entries: Vec<CyclicSet>,
}

impl GrassmannNecklace {
    pub fn new(entries: Vec<CyclicSet>) -> Result<Self> {
        let m = entries.len();
        if m == 0 {
            return Err(Error::domain("necklace must have at least one entry"));
        }
        if entries.iter().any(|e| e.ambient() != m) {
            return Err(Error::domain("necklace entries must have ambient equal to length"));
        }
        let k = entries[0].len();
        for (idx, entry) in entries.iter().enumerate() {
            let i = idx + 1;
            if entry.len() != k {
                return Err(Error::domain("necklace entries must share one cardinality"));
            }
            let next = &entries[i % m];
            let dropped = if entry.contains(i) {
                entry.without(i)?
            } else {
                *entry
            };
            if !dropped.is_subset_of(next) {
                return Err(Error::domain(format!(
                    "necklace condition fails at index {i}"
                )));
            }
            if !entry.contains(i) && entry != next {
                return Err(Error::domain(format!(
                    "necklace entry {} must repeat when {i} is absent from it",
                    i
                )));
            }
        }
        Ok(GrassmannNecklace { m, k, entries })
    }

    pub fn ambient(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[CyclicSet] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &CyclicSet {
        &self.entries[(i - 1) % self.m]
    }
}

/// The necklace of a decorated permutation:
/// `I_a = {i : i <_a f^{-1}(i)} ∪ {white fixed points}`.
pub fn necklace_from_perm(f: &DecoratedPermutation) -> GrassmannNecklace {
    let m = f.size();
    let mut entries = Vec::with_capacity(m);
    for a in 1..=m {
        let members = (1..=m).filter(|&i| {
            if f.is_fixed(i) {
                f.fixed_color(i) == Some(FixedColor::White)
            } else {
                cyclic_leq(a, i, f.inverse(i), m).unwrap()
            }
        });
        entries.push(CyclicSet::new(m, members).unwrap());
    }
    GrassmannNecklace::new(entries).expect("forward construction always yields a valid necklace")
}

/// Inverts [`necklace_from_perm`]: recovers the unique decorated
/// permutation whose necklace is the input, or fails on corrupt data.
///
/// For each `i`, the set of positions `a` with `i ∈ I_a` is either all of
/// `[m]` (white fixed point), empty (black fixed point), or the cyclic
/// interval `[f^{-1}(i) + 1, i]`; the image is read off from the interval
/// start and the result validated by a round trip.
pub fn perm_from_necklace(necklace: &GrassmannNecklace) -> Result<DecoratedPermutation> {
    let m = necklace.ambient();
    let mut image = vec![0usize; m];
    let mut white = Vec::new();
    let mut black = Vec::new();
    for i in 1..=m {
        let present: Vec<bool> = (1..=m).map(|a| necklace.entry(a).contains(i)).collect();
        let count = present.iter().filter(|&&p| p).count();
        if count == m {
            image[i - 1] = i;
            white.push(i);
            continue;
        }
        if count == 0 {
            image[i - 1] = i;
            black.push(i);
            continue;
        }
        // Proper cyclic interval: locate its start and check it ends at i.
        let starts: Vec<usize> = (1..=m)
            .filter(|&a| present[a - 1] && !present[(a + m - 2) % m])
            .collect();
        let ends: Vec<usize> = (1..=m)
            .filter(|&a| present[a - 1] && !present[a % m])
            .collect();
        if starts.len() != 1 || ends != [i] {
            return Err(Error::domain(format!(
                "necklace does not determine a permutation at element {i}"
            )));
        }
        let j = (starts[0] + m - 2) % m + 1;
        // f^{-1}(i) = j, so f(j) = i.
        if j == i || image[j - 1] != 0 {
            return Err(Error::domain(format!(
                "necklace membership pattern is inconsistent at element {i}"
            )));
        }
        image[j - 1] = i;
    }
    for (idx, &v) in image.iter().enumerate() {
        if v == 0 {
            return Err(Error::domain(format!(
                "necklace does not assign an image to {}",
                idx + 1
            )));
        }
    }
    let perm = DecoratedPermutation::new(image, &white, &black)?;
    if &necklace_from_perm(&perm) != necklace {
        return Err(Error::domain("necklace fails the permutation round trip"));
    }
    Ok(perm)
}

/// Positroid membership: `J >=_i I_i` in the shifted Gale order, for all `i`.
pub fn positroid_contains(necklace: &GrassmannNecklace, j: &CyclicSet) -> Result<bool> {
    if j.ambient() != necklace.ambient() {
        return Err(Error::domain("positroid_contains: ambient mismatch"));
    }
    if j.len() != necklace.k() {
        return Err(Error::domain("positroid_contains: cardinality mismatch"));
    }
    for i in 1..=necklace.ambient() {
        if !gale_leq(i, necklace.entry(i), j)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumeration cap for positroid member listings. The default admits
/// every `C(m, k)` with `m <= 16`.
#[derive(Debug, Clone, Copy)]
pub struct EnumerationBudget {
    pub max_subsets: u128,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_subsets: 12870 }
    }
}

/// All positroid members in canonical mask order.
pub fn positroid_members(
    necklace: &GrassmannNecklace,
    budget: EnumerationBudget,
) -> Result<Vec<CyclicSet>> {
    let m = necklace.ambient();
    let k = necklace.k();
    let total = binomial(m, k);
    if total > budget.max_subsets {
        return Err(Error::budget(format!(
            "C({m}, {k}) = {total} exceeds the enumeration budget {}",
            budget.max_subsets
        )));
    }
    let mut out = Vec::new();
    for j in k_subsets(m, k)? {
        if positroid_contains(necklace, &j)? {
            out.push(j);
        }
    }
    Ok(out)
}

/// A positroid addressed by its necklace, with a lazily cached member list.
#[derive(Debug)]
pub struct PositroidHandle {
    necklace: GrassmannNecklace,
    cache: OnceLock<Vec<CyclicSet>>,
}

impl Clone for PositroidHandle {
    fn clone(&self) -> Self {
        PositroidHandle {
            necklace: self.necklace.clone(),
            cache: OnceLock::new(),
        }
    }
}

impl PartialEq for PositroidHandle {
    fn eq(&self, other: &Self) -> bool {
        self.necklace == other.necklace
    }
}

impl Eq for PositroidHandle {}

impl PositroidHandle {
    pub fn new(necklace: GrassmannNecklace) -> Self {
        PositroidHandle {
            necklace,
            cache: OnceLock::new(),
        }
    }

    pub fn necklace(&self) -> &GrassmannNecklace {
        &self.necklace
    }

    pub fn ambient(&self) -> usize {
        self.necklace.ambient()
    }

    pub fn k(&self) -> usize {
        self.necklace.k()
    }

    pub fn contains(&self, j: &CyclicSet) -> Result<bool> {
        if let Some(members) = self.cache.get() {
            return Ok(members.binary_search(j).is_ok());
        }
        positroid_contains(&self.necklace, j)
    }

    pub fn members(&self, budget: EnumerationBudget) -> Result<&[CyclicSet]> {
        if self.cache.get().is_none() {
            let members = positroid_members(&self.necklace, budget)?;
            let _ = self.cache.set(members);
        }
        Ok(self.cache.get().unwrap())
    }
}

/// All alignments of `f`: ordered pairs `(i, j)` with `i, f(i), f(j), j`
/// cyclically ordered and pairwise distinct.
pub fn alignments(f: &DecoratedPermutation) -> Vec<(usize, usize)> {
    let m = f.size();
    let mut out = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            if i == j {
                continue;
            }
            let seq = [i, f.apply(i), f.apply(j), j];
            let mut sorted = seq;
            sorted.sort_unstable();
            let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
            if distinct && is_cyclically_ordered(&seq, m) {
                out.push((i, j));
            }
        }
    }
    out
}

/// The type-C condition on a decorated permutation: `f(i') = (f(i))'`,
/// and mirrored fixed points carry opposite colors (the mirror symmetry
/// reverses colors, so a white fixed point at `i` pairs with a black one
/// at `i'`).
pub fn is_type_c_perm(f: &DecoratedPermutation) -> Result<bool> {
    let m = f.size();
    if m % 2 != 0 {
        return Err(Error::domain("is_type_c_perm: ambient must be even"));
    }
    if !(1..=m).all(|i| f.apply(m - i + 1) == m - f.apply(i) + 1) {
        return Ok(false);
    }
    Ok((1..=m).all(|i| {
        !f.is_fixed(i) || f.fixed_color(i) != f.fixed_color(m - i + 1)
    }))
}

/// The type-C condition on a necklace: `I_{i'} = bar(I_{i+1})`.
pub fn is_type_c_necklace(necklace: &GrassmannNecklace) -> Result<bool> {
    let m = necklace.ambient();
    if m % 2 != 0 {
        return Err(Error::domain("is_type_c_necklace: ambient must be even"));
    }
    if necklace.k() != m / 2 {
        return Err(Error::domain(format!(
            "is_type_c_necklace: k = {} but ambient is 2n = {m}",
            necklace.k()
        )));
    }
    for i in 1..=m {
        if necklace.entry(m - i + 1) != &bar(necklace.entry(i + 1))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The spine data of a type-C permutation: `S = {a in [n] : f^{-1}(a) > n}`
/// (as a subset of `[2n]`) and `r = |S| + 1`.
pub fn spine_data(f: &DecoratedPermutation) -> Result<(CyclicSet, usize)> {
    if !is_type_c_perm(f)? {
        return Err(Error::domain("spine_data: permutation is not type C"));
    }
    let m = f.size();
    let n = m / 2;
    let s = CyclicSet::new(m, (1..=n).filter(|&a| f.inverse(a) > n))?;
    Ok((s, s.len() + 1))
}

/// The necklace of the top cell of `Λ_{>0}(2n)`, seeded by the type-C
/// permutation `f(i) = i + n mod 2n`.
pub fn top_cell_necklace(n: usize) -> Result<GrassmannNecklace> {
    if n == 0 {
        return Err(Error::domain("top_cell_necklace: n must be positive"));
    }
    let f = shift_permutation(2 * n, n)?;
    debug_assert!(is_type_c_perm(&f).unwrap());
    Ok(necklace_from_perm(&f))
}

/// The necklace of the top cell of `Gr_{>=0}(k, m)`, seeded by the shift
/// `f(i) = i + k mod m`.
pub fn top_cell_necklace_type_a(k: usize, m: usize) -> Result<GrassmannNecklace> {
    if k == 0 || k >= m {
        return Err(Error::domain("top_cell_necklace_type_a requires 0 < k < m"));
    }
    Ok(necklace_from_perm(&shift_permutation(m, k)?))
}

/// Every decorated permutation of `[m]`, including all fixed-point
/// colorings. Intended for exhaustive desk-scale scans.
pub fn all_decorated_perms(m: usize) -> Vec<DecoratedPermutation> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (1..=m).collect();
    permute(&mut items, 0, &mut |image| {
        let fixed: Vec<usize> = (1..=m).filter(|&i| image[i - 1] == i).collect();
        for whites in 0u64..(1u64 << fixed.len()) {
            let white: Vec<usize> = fixed
                .iter()
                .enumerate()
                .filter(|(b, _)| whites & (1 << b) != 0)
                .map(|(_, &i)| i)
                .collect();
            let black: Vec<usize> = fixed
                .iter()
                .copied()
                .filter(|i| !white.contains(i))
                .collect();
            out.push(DecoratedPermutation::new(image.to_vec(), &white, &black).unwrap());
        }
    });
    out
}

fn permute(items: &mut [usize], at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        visit(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, visit);
        items.swap(at, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::parse_set;

    fn set(m: usize, elems: &[usize]) -> CyclicSet {
        CyclicSet::new(m, elems.iter().copied()).unwrap()
    }

    fn perm(image: &[usize]) -> DecoratedPermutation {
        DecoratedPermutation::new(image.to_vec(), &[], &[]).unwrap()
    }

    #[test]
    fn necklace_from_perm_examples() {
        let n = necklace_from_perm(&perm(&[3, 4, 1, 2]));
        assert_eq!(
            n.entries(),
            &[
                set(4, &[1, 2]),
                set(4, &[2, 3]),
                set(4, &[3, 4]),
                set(4, &[1, 4])
            ]
        );

        let all_white =
            DecoratedPermutation::new(vec![1, 2, 3], &[1, 2, 3], &[]).unwrap();
        let n = necklace_from_perm(&all_white);
        assert!(n.entries().iter().all(|e| e == &set(3, &[1, 2, 3])));
        assert_eq!(n.k(), 3);

        let all_black =
            DecoratedPermutation::new(vec![1, 2, 3], &[], &[1, 2, 3]).unwrap();
        let n = necklace_from_perm(&all_black);
        assert!(n.entries().iter().all(|e| e.is_empty()));
        assert_eq!(n.k(), 0);
    }

    #[test]
    fn necklace_entries_recompute_per_position() {
        // Independent recomputation of the defining formula for the
        // (3,4,1,2) example: i belongs to I_a iff a lies in the cyclic
        // interval (f^{-1}(i), i].
        let f = perm(&[3, 4, 1, 2]);
        let necklace = necklace_from_perm(&f);
        for a in 1..=4 {
            for i in 1..=4 {
                let inv = f.inverse(i);
                let expected = crate::cyclic::cyclic_interval(inv % 4 + 1, i, 4)
                    .unwrap()
                    .contains(a);
                assert_eq!(necklace.entry(a).contains(i), expected);
            }
        }
    }

    #[test]
    fn perm_from_necklace_examples() {
        let n = GrassmannNecklace::new(vec![
            set(4, &[1, 2]),
            set(4, &[2, 3]),
            set(4, &[3, 4]),
            set(4, &[1, 4]),
        ])
        .unwrap();
        assert_eq!(perm_from_necklace(&n).unwrap(), perm(&[3, 4, 1, 2]));

        let constant = GrassmannNecklace::new(vec![set(3, &[1, 2, 3]); 3]).unwrap();
        let f = perm_from_necklace(&constant).unwrap();
        assert_eq!(f.image(), &[1, 2, 3]);
        assert_eq!(f.white_fixed_points(), vec![1, 2, 3]);
    }

    #[test]
    fn perm_necklace_round_trip_exhaustive() {
        for m in 1..=5 {
            for f in all_decorated_perms(m) {
                let necklace = necklace_from_perm(&f);
                assert_eq!(perm_from_necklace(&necklace).unwrap(), f, "m = {m}");
            }
        }
    }

    #[test]
    fn perm_necklace_round_trip_m6() {
        for f in all_decorated_perms(6) {
            let necklace = necklace_from_perm(&f);
            assert_eq!(perm_from_necklace(&necklace).unwrap(), f);
        }
    }

    #[test]
    fn positroid_membership_top_cell() {
        let n = top_cell_necklace(2).unwrap();
        assert!(positroid_contains(&n, &set(4, &[1, 3])).unwrap());
        assert!(positroid_contains(&n, &set(4, &[2, 4])).unwrap());
        for i in 1..=4 {
            assert!(positroid_contains(&n, n.entry(i)).unwrap());
        }
        let members = positroid_members(&n, EnumerationBudget::default()).unwrap();
        assert_eq!(members.len(), 6);
        assert!(positroid_contains(&n, &set(4, &[1])).is_err());
    }

    #[test]
    fn positroid_members_edge_cases() {
        let empty = GrassmannNecklace::new(vec![CyclicSet::empty(3).unwrap(); 3]).unwrap();
        let members = positroid_members(&empty, EnumerationBudget::default()).unwrap();
        assert_eq!(members, vec![CyclicSet::empty(3).unwrap()]);

        let full = GrassmannNecklace::new(vec![set(3, &[1, 2, 3]); 3]).unwrap();
        let members = positroid_members(&full, EnumerationBudget::default()).unwrap();
        assert_eq!(members, vec![set(3, &[1, 2, 3])]);

        let budget = EnumerationBudget { max_subsets: 2 };
        let top = top_cell_necklace(2).unwrap();
        assert!(matches!(
            positroid_members(&top, budget),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn necklace_entries_are_members() {
        for f in all_decorated_perms(5) {
            let n = necklace_from_perm(&f);
            for i in 1..=5 {
                assert!(positroid_contains(&n, n.entry(i)).unwrap());
            }
        }
    }

    #[test]
    fn alignments_examples() {
        assert!(alignments(&perm(&[3, 4, 1, 2])).is_empty());
        let f = DecoratedPermutation::new(vec![1, 3, 2], &[1], &[]).unwrap();
        assert!(alignments(&f).is_empty());
        // f = (2,1,4,3) has alignments (1,4) and (3,2), and no others.
        let f = perm(&[2, 1, 4, 3]);
        assert_eq!(alignments(&f), vec![(1, 4), (3, 2)]);
    }

    #[test]
    fn type_c_perm_examples() {
        assert!(is_type_c_perm(&shift_permutation(4, 2).unwrap()).unwrap());
        let f = DecoratedPermutation::new(vec![2, 1, 3, 4], &[], &[3, 4]).unwrap();
        assert!(!is_type_c_perm(&f).unwrap());
        assert!(is_type_c_perm(&perm(&[2, 1])).unwrap());
        let odd = DecoratedPermutation::new(vec![1], &[1], &[]).unwrap();
        assert!(is_type_c_perm(&odd).is_err());
    }

    #[test]
    fn type_c_necklace_examples() {
        assert!(is_type_c_necklace(&top_cell_necklace(2).unwrap()).unwrap());
        // f = (2,1,4,3) commutes with the mirror, so it is type C too.
        let n = necklace_from_perm(&perm(&[2, 1, 4, 3]));
        assert!(is_type_c_necklace(&n).unwrap());
        // f = (3,1,2,4) with a black fixed point at 4 has k = 2 = n but
        // f(4) = 4 != (f(1))' = 2.
        let f = DecoratedPermutation::new(vec![3, 1, 2, 4], &[], &[4]).unwrap();
        let n = necklace_from_perm(&f);
        assert!(!is_type_c_necklace(&n).unwrap());
        // k != n is rejected.
        let n = necklace_from_perm(&shift_permutation(4, 1).unwrap());
        assert!(is_type_c_necklace(&n).is_err());
    }

    #[test]
    fn type_c_perm_iff_type_c_necklace() {
        for m in [2usize, 4, 6] {
            for f in all_decorated_perms(m) {
                let necklace = necklace_from_perm(&f);
                if necklace.k() != m / 2 {
                    continue;
                }
                assert_eq!(
                    is_type_c_perm(&f).unwrap(),
                    is_type_c_necklace(&necklace).unwrap(),
                    "mismatch at {f:?}"
                );
            }
        }
    }

    #[test]
    fn type_c_necklace_boundary_entries_pair_free() {
        for m in [2usize, 4, 6] {
            let n_half = m / 2;
            for f in all_decorated_perms(m) {
                let necklace = necklace_from_perm(&f);
                if necklace.k() != n_half || !is_type_c_necklace(&necklace).unwrap() {
                    continue;
                }
                assert!(crate::cyclic::is_pair_free(necklace.entry(1)).unwrap());
                assert!(crate::cyclic::is_pair_free(necklace.entry(n_half + 1)).unwrap());
            }
        }
    }

    #[test]
    fn spine_data_examples() {
        let (s, r) = spine_data(&shift_permutation(4, 2).unwrap()).unwrap();
        assert_eq!(s, set(4, &[1, 2]));
        assert_eq!(r, 3);

        let (s, r) = spine_data(&shift_permutation(6, 3).unwrap()).unwrap();
        assert_eq!(s, set(6, &[1, 2, 3]));
        assert_eq!(r, 4);

        // f = (2,1,4,3) is type C with no element of [n] pulled from the
        // upper half, so S is empty.
        let (s, r) = spine_data(&perm(&[2, 1, 4, 3])).unwrap();
        assert!(s.is_empty());
        assert_eq!(r, 1);

        // A non-type-C permutation is refused.
        let f = DecoratedPermutation::new(vec![3, 1, 2, 4], &[], &[4]).unwrap();
        assert!(spine_data(&f).is_err());
    }

    #[test]
    fn spine_data_empty_case() {
        // Any type-C f on [4] with f^{-1}([n]) inside [n] has S empty, r = 1.
        for f in all_decorated_perms(4) {
            if necklace_from_perm(&f).k() != 2 {
                continue;
            }
            if !is_type_c_perm(&f).unwrap() {
                continue;
            }
            let (s, r) = spine_data(&f).unwrap();
            assert_eq!(r, s.len() + 1);
            if (1..=2).all(|a| f.inverse(a) <= 2) {
                assert!(s.is_empty());
                assert_eq!(r, 1);
            }
        }
    }

    #[test]
    fn top_cell_necklace_examples() {
        let n1 = top_cell_necklace(1).unwrap();
        assert_eq!(n1.entries(), &[set(2, &[1]), set(2, &[2])]);

        let n2 = top_cell_necklace(2).unwrap();
        assert_eq!(
            n2.entries(),
            &[
                set(4, &[1, 2]),
                set(4, &[2, 3]),
                set(4, &[3, 4]),
                set(4, &[1, 4])
            ]
        );

        let n3 = top_cell_necklace(3).unwrap();
        assert_eq!(n3.entry(1), &parse_set("{1,2,3}", 6).unwrap());
        assert_eq!(n3.entry(4), &parse_set("{4,5,6}", 6).unwrap());
        let members =
            positroid_members(&n3, EnumerationBudget::default()).unwrap();
        assert_eq!(members.len(), 20);
    }

    #[test]
    fn handle_caches_members() {
        let handle = PositroidHandle::new(top_cell_necklace(2).unwrap());
        let members = handle.members(EnumerationBudget::default()).unwrap();
        assert_eq!(members.len(), 6);
        assert!(handle.contains(&set(4, &[1, 3])).unwrap());
    }
}
