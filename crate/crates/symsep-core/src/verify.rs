//! Executable verification of the purity theorems at desk scale: each
//! check exhaustively enumerates its instances through the public API
//! of the other modules and reports pass/fail with a re-checkable
//! counterexample on failure.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::collections::{enumerate_maximal, enumerate_maximal_symmetric, WsCollection};
use crate::cyclic::{bar, handedness, is_admissible, is_pair_free, is_weakly_separated, CyclicSet, Handedness};
use crate::error::{Error, Result};
use crate::plabic::dual_graph;
use crate::positroid::{
    alignments, all_decorated_perms, is_type_c_perm, necklace_from_perm, spine_data,
    top_cell_necklace, DecoratedPermutation, EnumerationBudget, PositroidHandle,
};
use crate::tiling::build_tiling;

/// Outcome of one verification check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    pub wall_time_ms: f64,
}

impl CheckReport {
    /// One human-readable line per check.
    pub fn render_text(&self) -> String {
        let status = if self.pass { "pass" } else { "FAIL" };
        let mut line = format!(
            "[{status}] {} ({}) in {:.1} ms",
            self.check, self.instance, self.wall_time_ms
        );
        if let Some(ce) = &self.counterexample {
            line.push_str(&format!("\n       counterexample: {ce}"));
        }
        line
    }
}

fn run_check(
    check: &str,
    instance: &str,
    body: impl FnOnce() -> Result<Option<Value>>,
) -> Result<CheckReport> {
    let start = Instant::now();
    let counterexample = body()?;
    Ok(CheckReport {
        check: check.to_string(),
        instance: instance.to_string(),
        pass: counterexample.is_none(),
        counterexample,
        wall_time_ms: start.elapsed().as_secs_f64() * 1000.0,
    })
}

/// All type-C decorated permutations of `[2n]`, optionally restricted
/// to fixed-point-free ones.
pub fn type_c_perms(two_n: usize, fixed_point_free: bool) -> Result<Vec<DecoratedPermutation>> {
    let mut out = Vec::new();
    for f in all_decorated_perms(two_n) {
        if fixed_point_free && (1..=two_n).any(|i| f.is_fixed(i)) {
            continue;
        }
        if is_type_c_perm(&f)? {
            out.push(f);
        }
    }
    Ok(out)
}

fn perm_descriptor(f: &DecoratedPermutation) -> Value {
    json!({
        "m": f.size(),
        "image": f.image(),
        "white_fixed": f.white_fixed_points(),
        "black_fixed": f.black_fixed_points(),
    })
}

fn collection_descriptor(c: &WsCollection) -> Value {
    Value::Array(
        c.members()
            .map(|s| Value::String(s.to_string()))
            .collect(),
    )
}

/// Theorem `ops_main` at type `(k, m)`: inclusion-maximal, size-maximal
/// and dual-face-label status agree on every enumerated collection.
pub fn verify_purity(m: usize, k: usize) -> Result<CheckReport> {
    if m > 6 {
        return Err(Error::domain("verify_purity: ambient must be at most 6"));
    }
    if k > m {
        return Err(Error::domain("verify_purity: k exceeds m"));
    }
    let budget = EnumerationBudget::default();
    run_check("purity", &format!("type ({k},{m})"), || {
        for f in all_decorated_perms(m) {
            if f.type_k() != k {
                continue;
            }
            let anchor = PositroidHandle::new(necklace_from_perm(&f));
            let maximals = enumerate_maximal(&anchor, budget)?;
            let max_size = maximals.iter().map(WsCollection::len).max().unwrap_or(0);
            for c in &maximals {
                if c.len() != max_size {
                    return Ok(Some(json!({
                        "reason": "inclusion-maximal collection is not size-maximal",
                        "perm": perm_descriptor(&f),
                        "collection": collection_descriptor(c),
                        "size": c.len(),
                        "max_size": max_size,
                    })));
                }
                if !c.is_max_by_inclusion(budget)? {
                    return Ok(Some(json!({
                        "reason": "enumerated collection fails the inclusion-maximality re-check",
                        "perm": perm_descriptor(&f),
                        "collection": collection_descriptor(c),
                    })));
                }
                let labels = dual_graph(&build_tiling(c, budget)?)?.face_labels()?;
                if labels.collection() != c.members().copied().collect::<BTreeSet<_>>() {
                    return Ok(Some(json!({
                        "reason": "dual face labels differ from the collection",
                        "perm": perm_descriptor(&f),
                        "collection": collection_descriptor(c),
                    })));
                }
            }
        }
        Ok(None)
    })
}

/// Theorem `main` with Lemma `ifspine`: symmetric inclusion-maximality,
/// size-maximality and symmetric-dual realization agree for every
/// fixed-point-free type-C positroid at `2n`.
pub fn verify_symmetric_purity_gated(n: usize, long_running: bool) -> Result<CheckReport> {
    if n > 4 || (n > 3 && !long_running) {
        return Err(Error::domain(
            "verify_symmetric_purity: n must be at most 3 (n = 4 requires the long-running gate)",
        ));
    }
    let budget = EnumerationBudget::default();
    run_check("symmetric-purity", &format!("2n = {}", 2 * n), || {
        for f in type_c_perms(2 * n, true)? {
            let anchor = PositroidHandle::new(necklace_from_perm(&f));
            let maximals = enumerate_maximal(&anchor, budget)?;
            let max_size = maximals.iter().map(WsCollection::len).max().unwrap_or(0);
            let symmetric: Vec<WsCollection> = enumerate_maximal_symmetric(&anchor, budget)?;
            let symmetric_sets: BTreeSet<BTreeSet<CyclicSet>> = symmetric
                .iter()
                .map(|c| c.members().copied().collect())
                .collect();
            for c in &symmetric {
                let graph = dual_graph(&build_tiling(c, budget)?)?;
                let ce = |reason: &str| {
                    json!({
                        "reason": reason,
                        "perm": perm_descriptor(&f),
                        "collection": collection_descriptor(c),
                    })
                };
                if c.len() != max_size {
                    return Ok(Some(ce("symmetric maximal collection is not size-maximal")));
                }
                if c.find_spine()?.is_none() {
                    return Ok(Some(ce("symmetric maximal collection has no spine")));
                }
                if !graph.is_symmetric_graph()? {
                    return Ok(Some(ce("dual of a symmetric maximal collection is not symmetric")));
                }
                if graph.face_labels()?.collection()
                    != c.members().copied().collect::<BTreeSet<_>>()
                {
                    return Ok(Some(ce("face labels differ from the collection")));
                }
            }
            // Converse: any maximal collection whose dual is symmetric
            // must itself be symmetric inclusion-maximal.
            for c in &maximals {
                let graph = dual_graph(&build_tiling(c, budget)?)?;
                if graph.is_symmetric_graph()? {
                    let members: BTreeSet<CyclicSet> = c.members().copied().collect();
                    if !c.is_symmetric()? || !symmetric_sets.contains(&members) {
                        return Ok(Some(json!({
                            "reason": "symmetric dual whose labels are not a symmetric maximal collection",
                            "perm": perm_descriptor(&f),
                            "collection": collection_descriptor(c),
                        })));
                    }
                }
            }
        }
        Ok(None)
    })
}

/// [`verify_symmetric_purity_gated`] with the default desk-scale gate.
pub fn verify_symmetric_purity(n: usize) -> Result<CheckReport> {
    verify_symmetric_purity_gated(n, false)
}

/// §6 Corollary: a member is realized as a symmetric face label iff it
/// is admissible and closed under alignments of the trip permutation.
pub fn verify_membership_corollary(n: usize) -> Result<CheckReport> {
    if n > 3 {
        return Err(Error::domain(
            "verify_membership_corollary: n must be at most 3",
        ));
    }
    let budget = EnumerationBudget::default();
    run_check("membership-corollary", &format!("2n = {}", 2 * n), || {
        for f in type_c_perms(2 * n, false)? {
            let anchor = PositroidHandle::new(necklace_from_perm(&f));
            let aligns = alignments(&f);
            let mut realized: BTreeSet<CyclicSet> = BTreeSet::new();
            for c in enumerate_maximal_symmetric(&anchor, budget)? {
                realized.extend(c.members().copied());
            }
            for member in anchor.members(budget)? {
                let closed = aligns.iter().all(|&(i, j)| {
                    !member.contains(f.apply(i)) || member.contains(f.apply(j))
                });
                let left = closed && is_admissible(member)?;
                let right = realized.contains(member);
                if left != right {
                    return Ok(Some(json!({
                        "reason": "admissible-and-aligned does not match realizability",
                        "perm": perm_descriptor(&f),
                        "member": member.to_string(),
                        "admissible_and_aligned": left,
                        "realized": right,
                    })));
                }
            }
        }
        Ok(None)
    })
}

/// Corollary `pos_tests` on the top cell: the pair-free + left-handed
/// part of each symmetric maximal collection has `(n² + n + 2) / 2`
/// members, splitting as `r` pair-free plus equal left and right parts
/// with `r = n + 1`, and removing any member breaks maximality.
pub fn verify_pos_test_structure(n: usize) -> Result<CheckReport> {
    if n > 3 {
        return Err(Error::domain(
            "verify_pos_test_structure: n must be at most 3",
        ));
    }
    let budget = EnumerationBudget::default();
    run_check("pos-test-structure", &format!("top cell, n = {n}"), || {
        let anchor = PositroidHandle::new(top_cell_necklace(n)?);
        let f = crate::positroid::perm_from_necklace(anchor.necklace())?;
        let (_, r) = spine_data(&f)?;
        if r != n + 1 {
            return Ok(Some(json!({
                "reason": "top-cell spine length is not n + 1",
                "r": r,
            })));
        }
        let expected = (n * n + n + 2) / 2;
        for c in enumerate_maximal_symmetric(&anchor, budget)? {
            let mut pair_free = 0usize;
            let mut left = 0usize;
            let mut right = 0usize;
            for member in c.members() {
                match handedness(member)? {
                    Handedness::OnAxis => pair_free += 1,
                    Handedness::Left => left += 1,
                    Handedness::Right => right += 1,
                }
            }
            let ce = |reason: &str| {
                json!({
                    "reason": reason,
                    "collection": collection_descriptor(&c),
                    "pair_free": pair_free,
                    "left": left,
                    "right": right,
                })
            };
            if pair_free != r || left != right || left != (n * n + 1 - r) / 2 {
                return Ok(Some(ce("decomposition is not r + (n²+1−r)/2 + (n²+1−r)/2")));
            }
            if pair_free + left != expected {
                return Ok(Some(ce("pos-test part has the wrong size")));
            }
            // Removing any single member re-opens the collection.
            for member in c.member_vec() {
                let mut members: BTreeSet<CyclicSet> = c.members().copied().collect();
                members.remove(&member);
                let smaller = WsCollection::anchored(anchor.clone(), members)?;
                if smaller.is_max_by_inclusion(budget)? {
                    return Ok(Some(json!({
                        "reason": "collection stays inclusion-maximal after removing a member",
                        "collection": collection_descriptor(&c),
                        "removed": member.to_string(),
                    })));
                }
            }
        }
        Ok(None)
    })
}

/// The closing Remark: `{1,3,6}` and `{1,4,6}` are admissible,
/// left-handed and weakly separated, yet no symmetric maximal
/// collection at `n = 3` contains both.
pub fn verify_remark_counterexample() -> Result<CheckReport> {
    let budget = EnumerationBudget::default();
    run_check("remark-counterexample", "n = 3", || {
        let i = CyclicSet::new(6, [1, 3, 6])?;
        let j = CyclicSet::new(6, [1, 4, 6])?;
        let bar_i = bar(&i)?;
        if bar_i != CyclicSet::new(6, [2, 3, 5])? {
            return Ok(Some(json!({"reason": "bar({1,3,6}) is not {2,3,5}"})));
        }
        let facts = [
            (is_admissible(&i)?, "I admissible"),
            (is_admissible(&j)?, "J admissible"),
            (handedness(&i)? == Handedness::Left, "I left-handed"),
            (handedness(&j)? == Handedness::Left, "J left-handed"),
            (is_weakly_separated(&i, &j)?, "ws(I, J)"),
            (!is_weakly_separated(&bar_i, &j)?, "not ws(bar I, J)"),
        ];
        for (ok, what) in facts {
            if !ok {
                return Ok(Some(json!({"reason": format!("expected {what}")})));
            }
        }
        let anchor = PositroidHandle::new(top_cell_necklace(3)?);
        for c in enumerate_maximal_symmetric(&anchor, budget)? {
            if c.contains(&i) && c.contains(&j) {
                return Ok(Some(json!({
                    "reason": "a symmetric maximal collection contains both",
                    "collection": collection_descriptor(&c),
                })));
            }
        }
        Ok(None)
    })
}

/// Lemma `pairless` (1)–(3) over every pair-free member of every
/// symmetric maximal collection of every type-C positroid at `2n`.
pub fn verify_pairless_lemma(n: usize) -> Result<CheckReport> {
    if n > 3 {
        return Err(Error::domain("verify_pairless_lemma: n must be at most 3"));
    }
    let budget = EnumerationBudget::default();
    run_check("pairless-lemma", &format!("2n = {}", 2 * n), || {
        for f in type_c_perms(2 * n, false)? {
            let anchor = PositroidHandle::new(necklace_from_perm(&f));
            for c in enumerate_maximal_symmetric(&anchor, budget)? {
                let pair_free: Vec<CyclicSet> = c
                    .members()
                    .filter(|s| is_pair_free(s).unwrap_or(false))
                    .copied()
                    .collect();
                let ce = |reason: &str, member: &CyclicSet| {
                    json!({
                        "reason": reason,
                        "perm": perm_descriptor(&f),
                        "member": member.to_string(),
                    })
                };
                for i in &pair_free {
                    for a in 1..=n {
                        let pre = f.inverse(a);
                        if pre <= n && pre > a && !i.contains(a) {
                            return Ok(Some(ce("part (1): a missing", i)));
                        }
                        if pre <= n && pre < a && !i.contains(2 * n - a + 1) {
                            return Ok(Some(ce("part (2): a' missing", i)));
                        }
                    }
                }
                let lower = CyclicSet::new(2 * n, 1..=n)?;
                for i in &pair_free {
                    for j in &pair_free {
                        let (li, lj) = (i.intersection(&lower), j.intersection(&lower));
                        if !li.is_subset_of(&lj) && !lj.is_subset_of(&li) {
                            return Ok(Some(json!({
                                "reason": "part (3): lower halves are not nested",
                                "perm": perm_descriptor(&f),
                                "members": [i.to_string(), j.to_string()],
                            })));
                        }
                    }
                }
            }
        }
        Ok(None)
    })
}

/// Human-readable rendering of a batch of reports.
pub fn render_reports(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for report in reports {
        out.push_str(&report.render_text());
        out.push('\n');
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    out.push_str(&format!(
        "{} checks, {} passed, {} failed\n",
        reports.len(),
        reports.len() - failed,
        failed
    ));
    out
}

/// Runs a named suite at half-ambient `n`. Suites: `purity`,
/// `symmetric`, `corollaries`, `all`.
pub fn run_suite(suite: &str, n: usize, long_running: bool) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    let purity = |reports: &mut Vec<CheckReport>| -> Result<()> {
        for k in 0..=(2 * n) {
            reports.push(verify_purity(2 * n, k)?);
        }
        Ok(())
    };
    let symmetric = |reports: &mut Vec<CheckReport>| -> Result<()> {
        reports.push(verify_symmetric_purity_gated(n, long_running)?);
        Ok(())
    };
    let corollaries = |reports: &mut Vec<CheckReport>| -> Result<()> {
        reports.push(verify_membership_corollary(n)?);
        reports.push(verify_pos_test_structure(n)?);
        reports.push(verify_pairless_lemma(n)?);
        if n == 3 {
            reports.push(verify_remark_counterexample()?);
        }
        Ok(())
    };
    match suite {
        "purity" => purity(&mut reports)?,
        "symmetric" => symmetric(&mut reports)?,
        "corollaries" => corollaries(&mut reports)?,
        "all" => {
            purity(&mut reports)?;
            symmetric(&mut reports)?;
            corollaries(&mut reports)?;
        }
        other => {
            return Err(Error::domain(format!(
                "unknown suite {other:?}; expected purity, symmetric, corollaries or all"
            )))
        }
    }
    Ok(reports)
}
