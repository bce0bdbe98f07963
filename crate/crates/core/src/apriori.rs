// Copyright 2026 The fpmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Level-wise frequent itemset mining.
//!
//! `L1` comes from a single item tally. Each following level joins `L(k-1)`
//! with itself on a shared `(k-2)`-prefix, prunes candidates that have an
//! infrequent `(k-1)`-subset, and counts the survivors in one database pass.
//! Mining stops at the first level with no frequent itemsets.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::counting::{binomial, count_items, count_support, Execution};
use crate::dataset::{ItemId, Itemset, TransactionDatabase};
use crate::fraction::Fraction;

/// Largest item universe the exhaustive oracle accepts.
pub const BRUTE_FORCE_MAX_ITEMS: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AprioriError {
    #[error("minimum support {0} is outside [0, 1]")]
    ThresholdOutOfRange(Fraction),
    #[error("{items} distinct items exceed the exhaustive search limit of {limit}")]
    UniverseTooLarge { items: usize, limit: usize },
}

/// Minimum support, both as a fraction of the database and as the
/// transaction count an itemset must reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportThreshold {
    relative: Fraction,
    absolute: u64,
}

impl SupportThreshold {
    /// `absolute = max(1, floor(relative * n))`.
    pub fn from_relative(relative: Fraction, n: usize) -> Result<Self, AprioriError> {
        if !relative.is_unit_interval() {
            return Err(AprioriError::ThresholdOutOfRange(relative));
        }
        Ok(SupportThreshold {
            relative,
            absolute: relative.floor_times(n as u64).max(1),
        })
    }

    /// A fixed transaction count. The relative form is informational only.
    pub fn from_count(count: u64, n: usize) -> Self {
        let relative = if n == 0 {
            Fraction::ZERO
        } else {
            Fraction::from_f64(count as f64 / n as f64)
        };
        SupportThreshold {
            relative,
            absolute: count.max(1),
        }
    }

    pub fn relative(&self) -> Fraction {
        self.relative
    }

    pub fn absolute(&self) -> u64 {
        self.absolute
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrequentItemset {
    pub itemset: Itemset,
    pub count: u64,
}

/// `L_k`: frequent `k`-itemsets in ascending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSet {
    pub k: usize,
    pub entries: Vec<FrequentItemset>,
}

impl LevelSet {
    pub fn new(k: usize, mut entries: Vec<FrequentItemset>) -> Self {
        entries.sort_by(|a, b| a.itemset.cmp(&b.itemset));
        LevelSet { k, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn find(&self, items: &[ItemId]) -> Option<&FrequentItemset> {
        self.entries
            .binary_search_by(|e| e.itemset.items().cmp(items))
            .ok()
            .map(|i| &self.entries[i])
    }

    pub fn contains(&self, items: &[ItemId]) -> bool {
        self.find(items).is_some()
    }

    pub fn count_of(&self, items: &[ItemId]) -> Option<u64> {
        self.find(items).map(|e| e.count)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MiningResult {
    /// `L1, L2, ...`; the first empty level is not stored.
    pub levels: Vec<LevelSet>,
    /// Size of each counted candidate set `C_k` after pruning, starting at `C1`
    /// (every catalog item). May run one past `levels` when the last counted
    /// candidate set had no frequent member.
    pub candidate_counts: Vec<usize>,
    /// Full database passes performed.
    pub scans: usize,
}

impl MiningResult {
    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(LevelSet::len).collect()
    }

    pub fn total(&self) -> usize {
        self.levels.iter().map(LevelSet::len).sum()
    }

    pub fn itemsets(&self) -> impl Iterator<Item = &FrequentItemset> {
        self.levels.iter().flat_map(|l| l.entries.iter())
    }

    /// Support count of a frequent itemset.
    pub fn count_of(&self, items: &[ItemId]) -> Option<u64> {
        let level = self.levels.get(items.len().checked_sub(1)?)?;
        level.count_of(items)
    }
}

/// Work done by one pass of the level-wise loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PassStats {
    pub k: usize,
    pub joined: usize,
    pub pruned: usize,
    pub frequent: usize,
    pub elapsed: Duration,
}

pub fn frequent_one(db: &TransactionDatabase, t: SupportThreshold) -> LevelSet {
    frequent_one_with(db, t, Execution::default())
}

pub fn frequent_one_with(db: &TransactionDatabase, t: SupportThreshold, exec: Execution) -> LevelSet {
    let entries = count_items(db, exec)
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c >= t.absolute())
        .map(|(i, count)| FrequentItemset {
            itemset: Itemset::from_sorted(vec![ItemId(i as u32)]),
            count,
        })
        .collect();
    LevelSet { k: 1, entries }
}

/// Joins `L(k-1)` with itself: entries sharing their first `k-2` items combine
/// with their two last items in ascending order.
pub fn join(prev: &LevelSet) -> Vec<Itemset> {
    let entries = &prev.entries;
    let mut out = Vec::new();
    for (i, left) in entries.iter().enumerate() {
        let left = left.itemset.items();
        let Some((last_left, prefix)) = left.split_last() else {
            continue;
        };
        for right in &entries[i + 1..] {
            let right = right.itemset.items();
            let (last_right, right_prefix) = right.split_last().expect("same level");
            // Entries are sorted, so prefix-sharing entries are contiguous.
            if right_prefix != prefix {
                break;
            }
            let mut items = Vec::with_capacity(left.len() + 1);
            items.extend_from_slice(left);
            debug_assert!(last_left < last_right);
            items.push(*last_right);
            out.push(Itemset::from_sorted(items));
        }
    }
    out
}

/// Keeps candidates whose every `(k-1)`-subset is in `prev`, preserving order.
pub fn prune(candidates: Vec<Itemset>, prev: &LevelSet) -> Vec<Itemset> {
    let mut subset = Vec::new();
    candidates
        .into_iter()
        .filter(|cand| {
            let items = cand.items();
            (0..items.len()).all(|skip| {
                subset.clear();
                subset.extend(
                    items
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &id)| id),
                );
                prev.contains(&subset)
            })
        })
        .collect()
}

pub fn mine(db: &TransactionDatabase, t: SupportThreshold) -> MiningResult {
    mine_with(db, t, Execution::default())
}

pub fn mine_with(db: &TransactionDatabase, t: SupportThreshold, exec: Execution) -> MiningResult {
    mine_instrumented(db, t, exec).0
}

/// Mines `db` and also reports per-pass candidate counts and timings.
pub fn mine_instrumented(
    db: &TransactionDatabase,
    t: SupportThreshold,
    exec: Execution,
) -> (MiningResult, Vec<PassStats>) {
    let mut result = MiningResult::default();
    let mut stats = Vec::new();
    if db.is_empty() {
        return (result, stats);
    }

    let start = Instant::now();
    let l1 = frequent_one_with(db, t, exec);
    let universe = db.catalog().len();
    result.scans = 1;
    result.candidate_counts.push(universe);
    stats.push(PassStats {
        k: 1,
        joined: universe,
        pruned: universe,
        frequent: l1.len(),
        elapsed: start.elapsed(),
    });
    if l1.is_empty() {
        return (result, stats);
    }
    result.levels.push(l1);

    loop {
        let start = Instant::now();
        let prev = result.levels.last().expect("non-empty");
        let k = prev.k + 1;
        let joined = join(prev);
        let joined_len = joined.len();
        let candidates = prune(joined, prev);
        if candidates.is_empty() {
            break;
        }
        let counts = count_support(db, &candidates, exec);
        result.scans += 1;
        result.candidate_counts.push(candidates.len());
        let entries: Vec<FrequentItemset> = candidates
            .into_iter()
            .zip(counts)
            .filter(|&(_, c)| c >= t.absolute())
            .map(|(itemset, count)| FrequentItemset { itemset, count })
            .collect();
        stats.push(PassStats {
            k,
            joined: joined_len,
            pruned: result.candidate_counts[k - 1],
            frequent: entries.len(),
            elapsed: start.elapsed(),
        });
        if entries.is_empty() {
            break;
        }
        // Join output is already lexicographically sorted.
        result.levels.push(LevelSet { k, entries });
    }
    (result, stats)
}

/// Exhaustive oracle: enumerates every non-empty subset of the occurring
/// items and counts it directly against per-transaction bitmasks.
pub fn brute_force_frequent(db: &TransactionDatabase, t: SupportThreshold) -> Result<MiningResult, AprioriError> {
    let universe = db.occurring_items();
    let m = universe.len();
    if m > BRUTE_FORCE_MAX_ITEMS {
        return Err(AprioriError::UniverseTooLarge {
            items: m,
            limit: BRUTE_FORCE_MAX_ITEMS,
        });
    }
    let bit_of: HashMap<ItemId, u32> = universe.iter().enumerate().map(|(b, &id)| (id, b as u32)).collect();
    let mut mask_counts: HashMap<u32, u64> = HashMap::new();
    for tx in db.transactions() {
        let mask = tx.iter().fold(0u32, |acc, id| acc | 1 << bit_of[id]);
        *mask_counts.entry(mask).or_default() += 1;
    }

    let mut by_size: Vec<Vec<FrequentItemset>> = vec![Vec::new(); m + 1];
    for subset in 1u32..(1u32 << m) {
        let count: u64 = mask_counts
            .iter()
            .filter(|&(&mask, _)| mask & subset == subset)
            .map(|(_, &c)| c)
            .sum();
        if count >= t.absolute() {
            let itemset = Itemset::new((0..m).filter(|b| subset >> b & 1 == 1).map(|b| universe[b]));
            by_size[subset.count_ones() as usize].push(FrequentItemset { itemset, count });
        }
    }

    let mut result = MiningResult {
        scans: usize::from(!db.is_empty()),
        ..MiningResult::default()
    };
    for (k, entries) in by_size.into_iter().enumerate().skip(1) {
        if entries.is_empty() {
            break;
        }
        result.candidate_counts.push(binomial(m, k) as usize);
        result.levels.push(LevelSet::new(k, entries));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn level(k: usize, sets: &[&[u32]]) -> LevelSet {
        LevelSet::new(
            k,
            sets.iter()
                .map(|s| FrequentItemset {
                    itemset: Itemset::from_ids(s),
                    count: 1,
                })
                .collect(),
        )
    }

    fn ids(sets: &[Itemset]) -> Vec<Vec<u32>> {
        sets.iter().map(|s| s.iter().map(|i| i.0).collect()).collect()
    }

    #[test]
    fn threshold_rounds_down_with_floor_of_one() {
        let half: Fraction = "0.5".parse().unwrap();
        assert_eq!(SupportThreshold::from_relative(half, 15).unwrap().absolute(), 7);
        assert_eq!(SupportThreshold::from_relative(Fraction::ZERO, 15).unwrap().absolute(), 1);
        assert_eq!(SupportThreshold::from_relative(half, 0).unwrap().absolute(), 1);
        let over: Fraction = "1.1".parse().unwrap();
        assert!(SupportThreshold::from_relative(over, 15).is_err());
    }

    #[test]
    fn join_of_singletons_is_all_pairs() {
        let l1 = level(1, &[&[0], &[1], &[2]]);
        assert_eq!(ids(&join(&l1)), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(join(&level(1, &[])).is_empty());
    }

    #[test]
    fn join_requires_shared_prefix() {
        // I1..I5 as ids 1..5.
        let l2 = level(2, &[&[1, 2], &[1, 3], &[1, 5], &[2, 3], &[2, 5]]);
        assert_eq!(
            ids(&join(&l2)),
            vec![vec![1, 2, 3], vec![1, 2, 5], vec![1, 3, 5], vec![2, 3, 5]]
        );
    }

    #[test]
    fn prune_drops_candidates_with_infrequent_subsets() {
        let l2 = level(2, &[&[1, 2], &[1, 3], &[1, 5], &[2, 3], &[2, 5]]);
        let pruned = prune(join(&l2), &l2);
        assert_eq!(ids(&pruned), vec![vec![1, 2, 3], vec![1, 2, 5]]);
        assert!(prune(vec![Itemset::from_ids(&[2, 3, 5])], &l2).is_empty());
        assert!(prune(Vec::new(), &l2).is_empty());
    }

    #[test]
    fn empty_database_mines_nothing() {
        let db = TransactionDatabase::default();
        let r = mine(&db, SupportThreshold::from_count(1, 0));
        assert!(r.levels.is_empty());
        assert_eq!(r.scans, 0);
    }

    #[test]
    fn threshold_above_n_gives_empty_level() {
        let db = TransactionDatabase::from_labels(vec![vec!["a", "b"], vec!["a"]]);
        assert!(frequent_one(&db, SupportThreshold::from_count(3, 2)).is_empty());
    }

    #[test]
    fn oracle_rejects_large_universe() {
        let row: Vec<String> = (0..21).map(|i| format!("i{i}")).collect();
        let db = TransactionDatabase::from_labels(vec![row]);
        let err = brute_force_frequent(&db, SupportThreshold::from_count(1, 1)).unwrap_err();
        assert_eq!(err, AprioriError::UniverseTooLarge { items: 21, limit: 20 });
    }

    #[test]
    fn single_transaction_oracle() {
        let db = TransactionDatabase::from_labels(vec![vec!["a"]]);
        let r = brute_force_frequent(&db, SupportThreshold::from_count(1, 1)).unwrap();
        assert_eq!(r.level_sizes(), vec![1]);
        assert_eq!(r.levels[0].entries[0].count, 1);
    }

    #[test]
    fn stats_track_pass_sizes() {
        let db = TransactionDatabase::from_labels(vec![
            vec!["a", "b", "c"],
            vec!["a", "b", "c"],
            vec!["a", "b"],
            vec!["c", "d"],
        ]);
        let (r, stats) = mine_instrumented(&db, SupportThreshold::from_count(2, 4), Execution::Sequential);
        assert_eq!(r.level_sizes(), vec![3, 3, 1]);
        assert_eq!(r.scans, stats.len());
        assert_eq!(stats.iter().map(|s| s.joined).collect::<Vec<_>>(), vec![4, 3, 1]);
        assert_eq!(stats.iter().map(|s| s.frequent).collect::<Vec<_>>(), vec![3, 3, 1]);
    }
}
