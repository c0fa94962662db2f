//! Weakly separated collections: validation, maximality, symmetric
//! closure, spines, square-move mutation, and enumeration.

use std::collections::{BTreeSet, VecDeque};

use crate::cyclic::{bar, is_admissible, is_pair_free, is_weakly_separated, CyclicSet};
use crate::error::{Error, Result};
use crate::positroid::{
    is_type_c_necklace, perm_from_necklace, spine_data, EnumerationBudget, PositroidHandle,
};

/// A set of pairwise weakly separated `k`-subsets of `[m]`, optionally
/// anchored to a positroid (necklace entries must then be members, and
/// all members must lie in the positroid).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WsCollection {
    m: usize,
    k: usize,
    members: BTreeSet<CyclicSet>,
    anchor: Option<PositroidHandle>,
}

impl PartialOrd for WsCollection {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WsCollection {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

/// The chain of pair-free members of a symmetric collection, running
/// from `I_1` down to `I_{n+1}` by swaps `a -> a'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spine {
    chain: Vec<CyclicSet>,
}

impl Spine {
    pub fn chain(&self) -> &[CyclicSet] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }
}

impl WsCollection {
    pub fn new(
        m: usize,
        k: usize,
        members: impl IntoIterator<Item = CyclicSet>,
    ) -> Result<Self> {
        let members: BTreeSet<CyclicSet> = members.into_iter().collect();
        for s in &members {
            if s.ambient() != m {
                return Err(Error::domain(format!(
                    "collection member {s} has ambient {} != {m}",
                    s.ambient()
                )));
            }
            if s.len() != k {
                return Err(Error::domain(format!(
                    "collection member {s} has {} elements, expected {k}",
                    s.len()
                )));
            }
        }
        Ok(WsCollection {
            m,
            k,
            members,
            anchor: None,
        })
    }

    pub fn anchored(
        anchor: PositroidHandle,
        members: impl IntoIterator<Item = CyclicSet>,
    ) -> Result<Self> {
        let mut c = WsCollection::new(anchor.ambient(), anchor.k(), members)?;
        c.anchor = Some(anchor);
        Ok(c)
    }

    /// The smallest anchored collection: the necklace entries themselves.
    pub fn from_anchor(anchor: PositroidHandle) -> Self {
        let members: BTreeSet<CyclicSet> =
            anchor.necklace().entries().iter().copied().collect();
        WsCollection {
            m: anchor.ambient(),
            k: anchor.k(),
            members,
            anchor: Some(anchor),
        }
    }

    pub fn ambient(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &CyclicSet) -> bool {
        self.members.contains(s)
    }

    /// Members in canonical (ascending mask) order.
    pub fn members(&self) -> impl Iterator<Item = &CyclicSet> {
        self.members.iter()
    }

    pub fn member_vec(&self) -> Vec<CyclicSet> {
        self.members.iter().copied().collect()
    }

    pub fn anchor(&self) -> Option<&PositroidHandle> {
        self.anchor.as_ref()
    }

    fn require_anchor(&self) -> Result<&PositroidHandle> {
        self.anchor
            .as_ref()
            .ok_or_else(|| Error::domain("operation requires an anchored collection"))
    }

    fn with_members(&self, members: BTreeSet<CyclicSet>) -> WsCollection {
        WsCollection {
            m: self.m,
            k: self.k,
            members,
            anchor: self.anchor.clone(),
        }
    }

    /// Pairwise weak separation, plus the necklace/positroid sandwich
    /// when anchored.
    pub fn validate(&self) -> Result<bool> {
        let members: Vec<&CyclicSet> = self.members.iter().collect();
        for (idx, a) in members.iter().enumerate() {
            for b in &members[idx + 1..] {
                if !is_weakly_separated(a, b)? {
                    return Ok(false);
                }
            }
        }
        if let Some(anchor) = &self.anchor {
            for entry in anchor.necklace().entries() {
                if !self.members.contains(entry) {
                    return Ok(false);
                }
            }
            for member in &self.members {
                if !anchor.contains(member)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff the collection is closed under the bar map.
    pub fn is_symmetric(&self) -> Result<bool> {
        if self.m % 2 != 0 {
            return Err(Error::domain("is_symmetric: ambient must be even"));
        }
        for member in &self.members {
            if !self.members.contains(&bar(member)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn ws_with_all(&self, candidate: &CyclicSet) -> Result<bool> {
        for member in &self.members {
            if !is_weakly_separated(candidate, member)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff no positroid member outside the collection is weakly
    /// separated from every member.
    pub fn is_max_by_inclusion(&self, budget: EnumerationBudget) -> Result<bool> {
        let anchor = self.require_anchor()?;
        for j in anchor.members(budget)? {
            if !self.members.contains(j) && self.ws_with_all(j)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff no admissible positroid member can be added together with
    /// its bar image while keeping the collection weakly separated.
    pub fn is_max_symmetric_by_inclusion(&self, budget: EnumerationBudget) -> Result<bool> {
        let anchor = self.require_anchor()?;
        if !self.is_symmetric()? {
            return Err(Error::domain(
                "is_max_symmetric_by_inclusion requires a symmetric collection",
            ));
        }
        for j in anchor.members(budget)? {
            if self.members.contains(j) || !is_admissible(j)? {
                continue;
            }
            let jb = bar(j)?;
            if self.ws_with_all(j)? && self.ws_with_all(&jb)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The spine of the collection: its chain of pair-free members, if
    /// the collection has the full complement of `r` of them.
    pub fn find_spine(&self) -> Result<Option<Spine>> {
        let anchor = self.require_anchor()?;
        if !is_type_c_necklace(anchor.necklace())? {
            return Err(Error::domain("find_spine requires a type-C anchor"));
        }
        let f = perm_from_necklace(anchor.necklace())?;
        let (s, r) = spine_data(&f)?;
        let n = self.m / 2;
        let mut chain: Vec<CyclicSet> = Vec::new();
        for member in &self.members {
            if is_pair_free(member)? {
                chain.push(*member);
            }
        }
        if chain.len() != r {
            return Ok(None);
        }
        // Lemma "pairless" (3): intersections with [n] form a chain, so
        // sorting by |I ∩ [n]| descending orders the swaps.
        let lower_half = CyclicSet::new(self.m, 1..=n)?;
        chain.sort_by_key(|i| std::cmp::Reverse(i.intersection(&lower_half).len()));
        if chain.first() != Some(anchor.necklace().entry(1))
            || chain.last() != Some(anchor.necklace().entry(n + 1))
        {
            return Ok(None);
        }
        for pair in chain.windows(2) {
            let dropped = pair[0].difference(&pair[1]);
            let added = pair[1].difference(&pair[0]);
            if dropped.len() != 1 || added.len() != 1 {
                return Ok(None);
            }
            let a = dropped.iter().next().unwrap();
            let a_mirror = added.iter().next().unwrap();
            if a > n || a_mirror != self.m - a + 1 || !s.contains(a) {
                return Ok(None);
            }
        }
        Ok(Some(Spine { chain }))
    }

    /// All applicable square moves `(old, new)`: quadruples `a < b < c < d`
    /// with a common `(k-2)`-set `S` such that the four "sides" and the
    /// diagonal `S ∪ {a,c}` are members while `S ∪ {b,d}` is not (or the
    /// mirrored orientation).
    pub fn square_move_candidates(
        &self,
        budget: EnumerationBudget,
    ) -> Result<Vec<(CyclicSet, CyclicSet)>> {
        if !self.is_max_by_inclusion(budget)? {
            return Err(Error::domain(
                "square moves are defined on maximal collections",
            ));
        }
        let mut found: BTreeSet<(CyclicSet, CyclicSet)> = BTreeSet::new();
        for member in &self.members {
            let elems = member.elements();
            for (pi, &p) in elems.iter().enumerate() {
                for &q in &elems[pi + 1..] {
                    let core = member.without(p)?.without(q)?;
                    let outside: Vec<usize> = (1..=self.m)
                        .filter(|&e| !core.contains(e) && e != p && e != q)
                        .collect();
                    for (ui, &u) in outside.iter().enumerate() {
                        for &v in &outside[ui + 1..] {
                            let mut quad = [p, q, u, v];
                            quad.sort_unstable();
                            // The two diagonals must interleave around the circle.
                            let in_member = |x: usize| x == p || x == q;
                            if in_member(quad[0]) != in_member(quad[2])
                                || in_member(quad[1]) != in_member(quad[3])
                                || in_member(quad[0]) == in_member(quad[1])
                            {
                                continue;
                            }
                            let side = |x: usize, y: usize| -> Result<bool> {
                                Ok(self
                                    .members
                                    .contains(&core.with(x)?.with(y)?))
                            };
                            let new_set = core.with(u)?.with(v)?;
                            if side(quad[0], quad[1])?
                                && side(quad[1], quad[2])?
                                && side(quad[2], quad[3])?
                                && side(quad[0], quad[3])?
                                && !self.members.contains(&new_set)
                            {
                                found.insert((*member, new_set));
                            }
                        }
                    }
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    /// Applies a square move, exchanging `old` for `new`.
    pub fn mutate(
        &self,
        old: &CyclicSet,
        new: &CyclicSet,
        budget: EnumerationBudget,
    ) -> Result<WsCollection> {
        let candidates = self.square_move_candidates(budget)?;
        if !candidates.contains(&(*old, *new)) {
            return Err(Error::domain(format!(
                "({old}, {new}) is not an applicable square move"
            )));
        }
        let mut members = self.members.clone();
        members.remove(old);
        members.insert(*new);
        Ok(self.with_members(members))
    }

    /// Greedy extension to a maximal-by-inclusion collection, scanning
    /// positroid members in canonical order.
    pub fn complete_to_maximal(&self, budget: EnumerationBudget) -> Result<WsCollection> {
        let anchor = self.require_anchor()?;
        let mut members = self.members.clone();
        for entry in anchor.necklace().entries() {
            members.insert(*entry);
        }
        for j in anchor.members(budget)? {
            if members.contains(j) {
                continue;
            }
            let mut ok = true;
            for member in &members {
                if !is_weakly_separated(j, member)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                members.insert(*j);
            }
        }
        Ok(self.with_members(members))
    }

    /// Symmetric greedy extension: candidates are added as atomic
    /// `{J, bar(J)}` pairs (a singleton when `bar(J) = J`).
    pub fn complete_to_maximal_symmetric(
        &self,
        budget: EnumerationBudget,
    ) -> Result<WsCollection> {
        let anchor = self.require_anchor()?;
        if !self.is_symmetric()? {
            return Err(Error::domain(
                "complete_to_maximal_symmetric requires a symmetric collection",
            ));
        }
        let mut members = self.members.clone();
        for entry in anchor.necklace().entries() {
            members.insert(*entry);
        }
        for j in anchor.members(budget)? {
            if members.contains(j) || !is_admissible(j)? {
                continue;
            }
            let jb = bar(j)?;
            let mut ok = true;
            for member in &members {
                if !is_weakly_separated(j, member)? || !is_weakly_separated(&jb, member)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                members.insert(*j);
                members.insert(jb);
            }
        }
        Ok(self.with_members(members))
    }
}

fn check_desk_scale(m: usize) -> Result<()> {
    if m > 8 {
        return Err(Error::budget(format!(
            "enumeration is supported at desk scale (m <= 8), got m = {m}"
        )));
    }
    Ok(())
}

/// All maximal-by-inclusion collections in the positroid, found by
/// closing the square-move mutation graph from a greedy seed.
pub fn enumerate_maximal(
    anchor: &PositroidHandle,
    budget: EnumerationBudget,
) -> Result<Vec<WsCollection>> {
    check_desk_scale(anchor.ambient())?;
    let seed = WsCollection::from_anchor(anchor.clone()).complete_to_maximal(budget)?;
    let mut seen: BTreeSet<WsCollection> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed);
    while let Some(current) = queue.pop_front() {
        for (old, new) in current.square_move_candidates(budget)? {
            let next = current.mutate(&old, &new, budget)?;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// All maximal-by-inclusion collections in the positroid, by direct
/// maximal-clique enumeration over the weak-separation graph. The
/// independent oracle for [`enumerate_maximal`].
pub fn enumerate_maximal_exhaustive(
    anchor: &PositroidHandle,
    budget: EnumerationBudget,
) -> Result<Vec<WsCollection>> {
    check_desk_scale(anchor.ambient())?;
    let necklace: BTreeSet<CyclicSet> =
        anchor.necklace().entries().iter().copied().collect();
    let mut candidates: Vec<CyclicSet> = Vec::new();
    'outer: for j in anchor.members(budget)? {
        if necklace.contains(j) {
            continue;
        }
        for entry in &necklace {
            if !is_weakly_separated(j, entry)? {
                continue 'outer;
            }
        }
        candidates.push(*j);
    }
    let n = candidates.len();
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let ws = is_weakly_separated(&candidates[i], &candidates[j])?;
            adj[i][j] = ws;
            adj[j][i] = ws;
        }
    }
    let mut out = Vec::new();
    for clique in maximal_cliques(n, &adj) {
        let mut members = necklace.clone();
        members.extend(clique.iter().map(|&i| candidates[i]));
        out.push(WsCollection::anchored(anchor.clone(), members)?);
    }
    out.sort();
    Ok(out)
}

/// All symmetric collections maximal by inclusion among symmetric
/// collections in a type-C positroid, by maximal-clique enumeration over
/// bar orbits.
pub fn enumerate_maximal_symmetric(
    anchor: &PositroidHandle,
    budget: EnumerationBudget,
) -> Result<Vec<WsCollection>> {
    check_desk_scale(anchor.ambient())?;
    if !is_type_c_necklace(anchor.necklace())? {
        return Err(Error::domain(
            "enumerate_maximal_symmetric requires a type-C anchor",
        ));
    }
    let necklace: BTreeSet<CyclicSet> =
        anchor.necklace().entries().iter().copied().collect();
    // Orbit representatives: admissible members outside the necklace that
    // are (with their bar image) weakly separated from every entry.
    let mut orbits: Vec<(CyclicSet, CyclicSet)> = Vec::new();
    'outer: for j in anchor.members(budget)? {
        if necklace.contains(j) || !is_admissible(j)? {
            continue;
        }
        let jb = bar(j)?;
        if jb < *j {
            continue; // one representative per orbit
        }
        for entry in &necklace {
            if !is_weakly_separated(j, entry)? || !is_weakly_separated(&jb, entry)? {
                continue 'outer;
            }
        }
        orbits.push((*j, jb));
    }
    let n = orbits.len();
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let (a, ab) = orbits[i];
            let (b, bb) = orbits[j];
            let compatible = is_weakly_separated(&a, &b)?
                && is_weakly_separated(&a, &bb)?
                && is_weakly_separated(&ab, &b)?
                && is_weakly_separated(&ab, &bb)?;
            adj[i][j] = compatible;
            adj[j][i] = compatible;
        }
    }
    let mut out = Vec::new();
    for clique in maximal_cliques(n, &adj) {
        let mut members = necklace.clone();
        for &i in &clique {
            members.insert(orbits[i].0);
            members.insert(orbits[i].1);
        }
        out.push(WsCollection::anchored(anchor.clone(), members)?);
    }
    out.sort();
    Ok(out)
}

/// Bron–Kerbosch with pivoting; returns all maximal cliques, including
/// the empty clique when the graph has no vertices.
fn maximal_cliques(n: usize, adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    fn extend(
        adj: &[Vec<bool>],
        r: &mut Vec<usize>,
        mut p: Vec<usize>,
        mut x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = *p.iter().chain(x.iter()).next().unwrap();
        let branch: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
        for v in branch {
            let p_next: Vec<usize> = p.iter().copied().filter(|&u| adj[v][u]).collect();
            let x_next: Vec<usize> = x.iter().copied().filter(|&u| adj[v][u]).collect();
            r.push(v);
            extend(adj, r, p_next, x_next, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    extend(
        adj,
        &mut Vec::new(),
        (0..n).collect(),
        Vec::new(),
        &mut out,
    );
    for clique in &mut out {
        clique.sort_unstable();
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positroid::{necklace_from_perm, top_cell_necklace, DecoratedPermutation};

    fn set(m: usize, elems: &[usize]) -> CyclicSet {
        CyclicSet::new(m, elems.iter().copied()).unwrap()
    }

    fn budget() -> EnumerationBudget {
        EnumerationBudget::default()
    }

    fn top_cell(n: usize) -> PositroidHandle {
        PositroidHandle::new(top_cell_necklace(n).unwrap())
    }

    fn top_cell_with(n: usize, extra: &[CyclicSet]) -> WsCollection {
        let anchor = top_cell(n);
        let mut members: Vec<CyclicSet> =
            anchor.necklace().entries().to_vec();
        members.extend_from_slice(extra);
        WsCollection::anchored(anchor, members).unwrap()
    }

    #[test]
    fn validate_examples() {
        let c = top_cell_with(2, &[set(4, &[1, 3])]);
        assert!(c.validate().unwrap());

        let crossing =
            WsCollection::new(4, 2, [set(4, &[1, 3]), set(4, &[2, 4])]).unwrap();
        assert!(!crossing.validate().unwrap());

        let empty = WsCollection::new(4, 2, []).unwrap();
        assert!(empty.validate().unwrap());

        // Anchored sandwich violation: a member outside the positroid.
        let anchor = PositroidHandle::new(
            necklace_from_perm(
                &DecoratedPermutation::new(vec![2, 1, 4, 3], &[], &[]).unwrap(),
            ),
        );
        let mut members: Vec<CyclicSet> = anchor.necklace().entries().to_vec();
        members.push(set(4, &[3, 4]));
        let c = WsCollection::anchored(anchor, members).unwrap();
        assert!(!c.validate().unwrap());
    }

    #[test]
    fn is_symmetric_examples() {
        let c = top_cell_with(2, &[set(4, &[1, 3])]);
        assert!(c.is_symmetric().unwrap());

        let partial = WsCollection::new(4, 2, [set(4, &[1, 2]), set(4, &[2, 3])]).unwrap();
        assert!(!partial.is_symmetric().unwrap());

        let empty = WsCollection::new(4, 2, []).unwrap();
        assert!(empty.is_symmetric().unwrap());

        let odd = WsCollection::new(3, 1, [set(3, &[1])]).unwrap();
        assert!(odd.is_symmetric().is_err());
    }

    #[test]
    fn max_by_inclusion_examples() {
        let c = top_cell_with(2, &[set(4, &[1, 3])]);
        assert!(c.is_max_by_inclusion(budget()).unwrap());

        let necklace_only = WsCollection::from_anchor(top_cell(2));
        assert!(!necklace_only.is_max_by_inclusion(budget()).unwrap());

        let unanchored = WsCollection::new(4, 2, [set(4, &[1, 2])]).unwrap();
        assert!(unanchored.is_max_by_inclusion(budget()).is_err());
    }

    #[test]
    fn max_symmetric_examples() {
        let c = top_cell_with(2, &[set(4, &[1, 3])]);
        assert!(c.is_max_symmetric_by_inclusion(budget()).unwrap());

        let necklace_only = WsCollection::from_anchor(top_cell(2));
        assert!(!necklace_only.is_max_symmetric_by_inclusion(budget()).unwrap());

        let asymmetric = top_cell_with(2, &[]);
        // the necklace itself is symmetric; force a non-symmetric input
        let mut members = asymmetric.member_vec();
        members.retain(|s| s != &set(4, &[2, 3]));
        let broken = WsCollection::new(4, 2, members).unwrap();
        assert!(broken.is_max_symmetric_by_inclusion(budget()).is_err());
    }

    #[test]
    fn find_spine_examples() {
        let c = top_cell_with(2, &[set(4, &[1, 3])]);
        let spine = c.find_spine().unwrap().unwrap();
        assert_eq!(
            spine.chain(),
            &[set(4, &[1, 2]), set(4, &[1, 3]), set(4, &[3, 4])]
        );

        let c = top_cell_with(2, &[set(4, &[2, 4])]);
        let spine = c.find_spine().unwrap().unwrap();
        assert_eq!(
            spine.chain(),
            &[set(4, &[1, 2]), set(4, &[2, 4]), set(4, &[3, 4])]
        );

        // Missing intermediate pair-free element: no spine.
        let c = WsCollection::from_anchor(top_cell(2));
        assert!(c.find_spine().unwrap().is_none());

        // Non-type-C anchor is refused.
        let anchor = PositroidHandle::new(
            necklace_from_perm(
                &DecoratedPermutation::new(vec![3, 1, 2, 4], &[], &[4]).unwrap(),
            ),
        );
        let c = WsCollection::from_anchor(anchor);
        assert!(c.find_spine().is_err());
    }

    #[test]
    fn square_move_examples() {
        let c = top_cell_with(2, &[set(4, &[1, 3])]);
        let moves = c.square_move_candidates(budget()).unwrap();
        assert_eq!(moves, vec![(set(4, &[1, 3]), set(4, &[2, 4]))]);

        let c2 = top_cell_with(2, &[set(4, &[2, 4])]);
        let moves2 = c2.square_move_candidates(budget()).unwrap();
        assert_eq!(moves2, vec![(set(4, &[2, 4]), set(4, &[1, 3]))]);

        // Non-maximal input is refused.
        let necklace_only = WsCollection::from_anchor(top_cell(2));
        assert!(necklace_only.square_move_candidates(budget()).is_err());
    }

    #[test]
    fn mutate_examples() {
        let c = top_cell_with(2, &[set(4, &[1, 3])]);
        let mutated = c
            .mutate(&set(4, &[1, 3]), &set(4, &[2, 4]), budget())
            .unwrap();
        assert!(mutated.contains(&set(4, &[2, 4])));
        assert!(!mutated.contains(&set(4, &[1, 3])));
        assert!(mutated.validate().unwrap());

        let back = mutated
            .mutate(&set(4, &[2, 4]), &set(4, &[1, 3]), budget())
            .unwrap();
        assert_eq!(back, c);

        assert!(c
            .mutate(&set(4, &[1, 2]), &set(4, &[2, 4]), budget())
            .is_err());
    }

    #[test]
    fn necklace_entries_never_mutate_out() {
        for n in 1..=3 {
            let anchor = top_cell(n);
            let entries: BTreeSet<CyclicSet> =
                anchor.necklace().entries().iter().copied().collect();
            for c in enumerate_maximal(&anchor, budget()).unwrap() {
                for (old, _) in c.square_move_candidates(budget()).unwrap() {
                    assert!(!entries.contains(&old));
                }
            }
        }
    }

    #[test]
    fn complete_to_maximal_examples() {
        let seed = WsCollection::from_anchor(top_cell(2));
        let completed = seed.complete_to_maximal(budget()).unwrap();
        let mut expected = seed.member_vec();
        expected.push(set(4, &[1, 3]));
        expected.sort();
        assert_eq!(completed.member_vec(), expected);

        let again = completed.complete_to_maximal(budget()).unwrap();
        assert_eq!(again, completed);

        let sym = WsCollection::from_anchor(top_cell(3))
            .complete_to_maximal_symmetric(budget())
            .unwrap();
        assert_eq!(sym.len(), 10);
        assert!(sym.is_symmetric().unwrap());
        assert!(sym.validate().unwrap());
    }

    #[test]
    fn enumerate_maximal_examples() {
        let found = enumerate_maximal(&top_cell(2), budget()).unwrap();
        assert_eq!(found.len(), 2);
        for c in &found {
            assert_eq!(c.len(), 5);
            assert!(c.is_max_by_inclusion(budget()).unwrap());
        }

        let anchor = PositroidHandle::new(
            necklace_from_perm(
                &DecoratedPermutation::new(vec![2, 1], &[], &[]).unwrap(),
            ),
        );
        let found = enumerate_maximal(&anchor, budget()).unwrap();
        assert_eq!(found.len(), 1);
    }

    #[test]
    fn mutation_closure_matches_brute_force() {
        use crate::positroid::all_decorated_perms;
        for m in 1..=5 {
            for f in all_decorated_perms(m) {
                let anchor = PositroidHandle::new(necklace_from_perm(&f));
                let via_moves = enumerate_maximal(&anchor, budget()).unwrap();
                let via_cliques = enumerate_maximal_exhaustive(&anchor, budget()).unwrap();
                assert_eq!(via_moves, via_cliques, "mismatch for {f:?}");
            }
        }
    }

    #[test]
    fn enumerate_maximal_symmetric_examples() {
        let found = enumerate_maximal_symmetric(&top_cell(2), budget()).unwrap();
        assert_eq!(found.len(), 2);
        let max = enumerate_maximal(&top_cell(2), budget()).unwrap();
        assert_eq!(found, max);

        for c in &found {
            assert!(c.find_spine().unwrap().is_some());
            assert_eq!(c.len(), 5);
        }

        let non_type_c = PositroidHandle::new(
            necklace_from_perm(
                &DecoratedPermutation::new(vec![3, 1, 2, 4], &[], &[4]).unwrap(),
            ),
        );
        assert!(enumerate_maximal_symmetric(&non_type_c, budget()).is_err());
    }

    #[test]
    fn purity_top_cells() {
        // All maximal collections of the (k, m) top cell share the size
        // k(m-k) + 1.
        for (k, m) in [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6)] {
            let anchor = PositroidHandle::new(
                crate::positroid::top_cell_necklace_type_a(k, m).unwrap(),
            );
            let found = enumerate_maximal_exhaustive(&anchor, budget()).unwrap();
            assert!(!found.is_empty());
            for c in &found {
                assert_eq!(c.len(), k * (m - k) + 1, "purity fails at ({k},{m})");
            }
        }
    }

    #[test]
    fn symmetric_collections_ws_with_bars() {
        // For symmetric C, every member is weakly separated from the bar
        // of every member.
        for n in 1..=3 {
            for c in enumerate_maximal_symmetric(&top_cell(n), budget()).unwrap() {
                for a in c.members() {
                    for b in c.members() {
                        assert!(is_weakly_separated(a, &bar(b).unwrap()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn left_plus_pair_free_count() {
        use crate::cyclic::{handedness, Handedness};
        for n in 1..=3 {
            let target = (n * n + n + 2) / 2;
            for c in enumerate_maximal_symmetric(&top_cell(n), budget()).unwrap() {
                let count = c
                    .members()
                    .filter(|i| {
                        matches!(
                            handedness(i).unwrap(),
                            Handedness::Left | Handedness::OnAxis
                        )
                    })
                    .count();
                assert_eq!(count, target, "n = {n}");
            }
        }
    }
}
