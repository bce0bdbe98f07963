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

//! Support counting over a transaction database.
//!
//! Transactions are split into fixed-size chunks; each chunk produces a partial
//! count vector and the partials are summed. Counts are integers, so the result
//! is identical for any number of worker threads and for the sequential path.
//! The data-parallel path needs the `parallel` feature; without it every
//! [`Execution`] runs sequentially.

use std::collections::HashMap;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::dataset::{is_sorted_subset, ItemId, Itemset, Transaction, TransactionDatabase};

const CHUNK: usize = 512;

/// How a counting pass distributes transactions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Data-parallel over transaction chunks on the current rayon pool.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("could not start worker pool: {0}")]
pub struct ThreadPoolError(String);

/// Runs `f` with parallel counting limited to `threads` workers.
#[cfg(feature = "parallel")]
pub fn with_threads<R, F>(threads: usize, f: F) -> Result<R, ThreadPoolError>
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| ThreadPoolError(e.to_string()))?;
    Ok(pool.install(f))
}

#[cfg(not(feature = "parallel"))]
pub fn with_threads<R, F>(_threads: usize, f: F) -> Result<R, ThreadPoolError>
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    Ok(f())
}

fn chunked_sum<F>(transactions: &[Transaction], width: usize, exec: Execution, tally: F) -> Vec<u64>
where
    F: Fn(&[Transaction], &mut [u64]) + Sync,
{
    let fold_chunk = |chunk: &[Transaction]| {
        let mut counts = vec![0u64; width];
        tally(chunk, &mut counts);
        counts
    };
    let add = |mut a: Vec<u64>, b: Vec<u64>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => transactions
            .par_chunks(CHUNK)
            .map(fold_chunk)
            .reduce(|| vec![0u64; width], add),
        _ => transactions
            .chunks(CHUNK)
            .map(fold_chunk)
            .fold(vec![0u64; width], add),
    }
}

/// Occurrence count of every catalog item, indexed by item id.
pub fn count_items(db: &TransactionDatabase, exec: Execution) -> Vec<u64> {
    chunked_sum(db.transactions(), db.catalog().len(), exec, |chunk, counts| {
        for tx in chunk {
            for id in tx.iter() {
                counts[id.index()] += 1;
            }
        }
    })
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Candidates of one size, hashed by their canonical item slice.
struct SizeGroup<'a> {
    k: usize,
    members: Vec<(usize, &'a [ItemId])>,
    index: HashMap<&'a [ItemId], usize>,
}

impl SizeGroup<'_> {
    fn tally(&self, tx: &[ItemId], counts: &mut [u64], buf: &mut Vec<ItemId>, picks: &mut Vec<usize>) {
        let k = self.k;
        if tx.len() < k {
            return;
        }
        if k == 0 {
            for &(slot, _) in &self.members {
                counts[slot] += 1;
            }
            return;
        }
        if binomial(tx.len(), k) <= self.members.len() as u64 {
            // Walk every k-subset of the transaction in lexicographic order.
            picks.clear();
            picks.extend(0..k);
            loop {
                buf.clear();
                buf.extend(picks.iter().map(|&p| tx[p]));
                if let Some(&slot) = self.index.get(buf.as_slice()) {
                    counts[slot] += 1;
                }
                let Some(i) = (0..k).rev().find(|&i| picks[i] < tx.len() - k + i) else {
                    break;
                };
                picks[i] += 1;
                for j in i + 1..k {
                    picks[j] = picks[j - 1] + 1;
                }
            }
        } else {
            for &(slot, items) in &self.members {
                if is_sorted_subset(items, tx) {
                    counts[slot] += 1;
                }
            }
        }
    }
}

/// Number of transactions containing each candidate, aligned with `candidates`.
///
/// Per transaction and candidate size `k`, either the transaction's `k`-subsets
/// are looked up in a hash index of the candidates or each candidate is tested
/// for containment, whichever touches fewer itemsets.
pub fn count_support(db: &TransactionDatabase, candidates: &[Itemset], exec: Execution) -> Vec<u64> {
    // Duplicate candidates share the slot of their first occurrence.
    let mut first: HashMap<&[ItemId], usize> = HashMap::with_capacity(candidates.len());
    let mut slot_of = Vec::with_capacity(candidates.len());
    let mut groups: Vec<SizeGroup> = Vec::new();
    for (i, cand) in candidates.iter().enumerate() {
        let items = cand.items();
        let slot = *first.entry(items).or_insert(i);
        slot_of.push(slot);
        if slot != i {
            continue;
        }
        let group = match groups.iter_mut().position(|g| g.k == items.len()) {
            Some(g) => &mut groups[g],
            None => {
                groups.push(SizeGroup {
                    k: items.len(),
                    members: Vec::new(),
                    index: HashMap::new(),
                });
                groups.last_mut().unwrap()
            }
        };
        group.members.push((i, items));
        group.index.insert(items, i);
    }

    let counts = chunked_sum(db.transactions(), candidates.len(), exec, |chunk, counts| {
        let mut buf = Vec::new();
        let mut picks = Vec::new();
        for tx in chunk {
            for group in &groups {
                group.tally(tx.items(), counts, &mut buf, &mut picks);
            }
        }
    });
    slot_of.iter().map(|&s| counts[s]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn db() -> TransactionDatabase {
        TransactionDatabase::from_labels(vec![
            vec!["a", "b", "c"],
            vec!["a", "c"],
            vec!["a", "b", "c", "d"],
            vec!["d"],
        ])
    }

    fn naive(db: &TransactionDatabase, c: &Itemset) -> u64 {
        db.transactions().iter().filter(|t| c.is_subset_of(t)).count() as u64
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(10, 0), 1);
        assert_eq!(binomial(200, 100), u64::MAX);
    }

    #[test]
    fn counts_mixed_sizes_and_duplicates() {
        let db = db();
        let cands = vec![
            Itemset::from_ids(&[0, 2]),
            Itemset::empty(),
            Itemset::from_ids(&[0, 1, 2]),
            Itemset::from_ids(&[0, 2]),
            Itemset::from_ids(&[3]),
            Itemset::from_ids(&[1, 3]),
        ];
        let expected: Vec<u64> = cands.iter().map(|c| naive(&db, c)).collect();
        assert_eq!(expected, vec![3, 4, 2, 3, 2, 1]);
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(count_support(&db, &cands, exec), expected);
        }
    }

    #[test]
    fn subset_enumeration_path_matches_naive() {
        // Many candidates relative to C(|t|, k) forces the enumeration branch.
        let db = db();
        let mut cands = Vec::new();
        for a in 0..4u32 {
            for b in a + 1..4 {
                cands.push(Itemset::from_ids(&[a, b]));
            }
        }
        let expected: Vec<u64> = cands.iter().map(|c| naive(&db, c)).collect();
        assert_eq!(count_support(&db, &cands, Execution::Sequential), expected);
    }

    #[test]
    fn item_counts() {
        assert_eq!(count_items(&db(), Execution::default()), vec![3, 2, 3, 2]);
    }

    #[test]
    fn thread_count_does_not_change_counts() {
        let rows: Vec<Vec<String>> = (0..3000)
            .map(|i| (0..6).filter(|j| (i * 7 + j * 3) % 5 != 0).map(|j| format!("i{}", (i + j) % 9)).collect())
            .collect();
        let db = TransactionDatabase::from_labels(rows);
        let cands: Vec<Itemset> = (0..9u32).flat_map(|a| (a + 1..9).map(move |b| Itemset::from_ids(&[a, b]))).collect();
        let one = with_threads(1, || count_support(&db, &cands, Execution::Parallel)).unwrap();
        let four = with_threads(4, || count_support(&db, &cands, Execution::Parallel)).unwrap();
        assert_eq!(one, four);
        assert_eq!(one, count_support(&db, &cands, Execution::Sequential));
    }
}
