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

//! Synthetic market-basket data and a per-pass benchmark harness.
//!
//! The generator is a simplified Quest model: a pool of base patterns with
//! Poisson sizes, and transactions assembled from randomly chosen patterns in
//! which each item is dropped with probability 1/2, topped up with uniform
//! random items. There is no pattern correlation or weight decay.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, so a (params, seed) pair always yields the same database.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::time::Duration;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use thiserror::Error;

use crate::apriori::{mine_instrumented, SupportThreshold};
use crate::counting::Execution;
use crate::dataset::{ItemCatalog, Itemset, TransactionDatabase};
use crate::fraction::Fraction;

/// Name of the pseudo-random generator behind [`generate`].
pub const RNG_ALGORITHM: &str = "chacha8";

/// Probability that a pattern item is left out of a transaction.
pub const CORRUPTION: f64 = 0.5;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("`{0}` is not a TxIyDz shape name")]
    BadShape(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    /// `D`
    pub num_transactions: usize,
    /// `T`
    pub avg_transaction_len: f64,
    /// `I`
    pub avg_pattern_len: f64,
    pub num_items: usize,
    pub num_patterns: usize,
    pub seed: u64,
}

impl GenParams {
    /// Parses names like `T10I4D10K` (`K` and `M` suffixes scale `D`).
    /// Item and pattern counts default to 1000 and 100.
    pub fn from_shape(name: &str, seed: u64) -> Result<Self, GenError> {
        let bad = || GenError::BadShape(name.to_string());
        let upper = name.to_ascii_uppercase();
        let rest = upper.strip_prefix('T').ok_or_else(bad)?;
        let (t, rest) = rest.split_once('I').ok_or_else(bad)?;
        let (i, d) = rest.split_once('D').ok_or_else(bad)?;
        let (digits, mult) = match d.chars().last() {
            Some('K') => (&d[..d.len() - 1], 1_000),
            Some('M') => (&d[..d.len() - 1], 1_000_000),
            _ => (d, 1),
        };
        let params = GenParams {
            num_transactions: digits.parse::<usize>().map_err(|_| bad())? * mult,
            avg_transaction_len: t.parse().map_err(|_| bad())?,
            avg_pattern_len: i.parse().map_err(|_| bad())?,
            num_items: 1000,
            num_patterns: 100,
            seed,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<(), GenError> {
        let bad = |m: &str| Err(GenError::InvalidParams(m.to_string()));
        if self.num_transactions == 0 || self.num_items == 0 || self.num_patterns == 0 {
            return bad("transaction, item and pattern counts must be positive");
        }
        if !(self.avg_pattern_len > 0.0 && self.avg_transaction_len > 0.0) {
            return bad("average lengths must be positive");
        }
        if self.avg_pattern_len > self.avg_transaction_len {
            return bad("average pattern length exceeds average transaction length");
        }
        if self.avg_transaction_len > self.num_items as f64 {
            return bad("average transaction length exceeds the number of items");
        }
        Ok(())
    }
}

fn poisson_size(rng: &mut ChaCha8Rng, mean: f64, cap: usize) -> usize {
    let draw: f64 = Poisson::new(mean).expect("positive mean").sample(rng);
    (draw as usize).clamp(1, cap)
}

/// Generates a database; item labels are `i<n>`, interned in first-use order.
pub fn generate(p: &GenParams) -> Result<TransactionDatabase, GenError> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);

    let patterns: Vec<Vec<usize>> = (0..p.num_patterns)
        .map(|_| {
            let size = poisson_size(&mut rng, p.avg_pattern_len, p.num_items);
            sample(&mut rng, p.num_items, size).into_vec()
        })
        .collect();

    let max_draws = (p.avg_transaction_len / p.avg_pattern_len).ceil() as usize * 2 + 1;
    let mut rows: Vec<BTreeSet<usize>> = Vec::with_capacity(p.num_transactions);
    for _ in 0..p.num_transactions {
        let target = poisson_size(&mut rng, p.avg_transaction_len, p.num_items);
        let mut row = BTreeSet::new();
        for _ in 0..max_draws {
            if row.len() >= target {
                break;
            }
            let pattern = &patterns[rng.random_range(0..patterns.len())];
            for &item in pattern {
                if row.len() >= target {
                    break;
                }
                if !rng.random_bool(CORRUPTION) {
                    row.insert(item);
                }
            }
        }
        while row.len() < target {
            row.insert(rng.random_range(0..p.num_items));
        }
        rows.push(row);
    }

    let mut catalog = ItemCatalog::new();
    let transactions = rows
        .iter()
        .map(|row| row.iter().map(|i| catalog.intern(&format!("i{i}"))).collect::<Itemset>())
        .collect();
    Ok(TransactionDatabase::new(catalog, transactions).expect("ids come from the catalog"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub k: usize,
    pub joined: usize,
    pub pruned: usize,
    pub frequent: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub threshold: Fraction,
    pub required_count: u64,
    pub rows: Vec<BenchRow>,
    pub scans: usize,
    pub total: Duration,
}

impl BenchReport {
    pub fn total_frequent(&self) -> usize {
        self.rows.iter().map(|r| r.frequent).sum()
    }
}

/// Mines `db` once per threshold, recording per-pass candidate counts and times.
pub fn bench(db: &TransactionDatabase, thresholds: &[Fraction], exec: Execution) -> Result<Vec<BenchReport>, crate::apriori::AprioriError> {
    thresholds
        .iter()
        .map(|&threshold| {
            let t = SupportThreshold::from_relative(threshold, db.len())?;
            let (result, stats) = mine_instrumented(db, t, exec);
            let rows: Vec<BenchRow> = stats
                .into_iter()
                .map(|s| BenchRow {
                    k: s.k,
                    joined: s.joined,
                    pruned: s.pruned,
                    frequent: s.frequent,
                    elapsed: s.elapsed,
                })
                .collect();
            Ok(BenchReport {
                threshold,
                required_count: t.absolute(),
                scans: result.scans,
                total: rows.iter().map(|r| r.elapsed).sum(),
                rows,
            })
        })
        .collect()
}

fn millis(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1e3)
}

/// Aligned text table, one block per report.
pub fn render_table(reports: &[BenchReport]) -> String {
    let mut out = String::new();
    for r in reports {
        writeln!(
            out,
            "minsup {} ({} transactions), {} scans, {} ms",
            r.threshold,
            r.required_count,
            r.scans,
            millis(r.total)
        )
        .unwrap();
        writeln!(out, "{:>5} {:>10} {:>10} {:>10} {:>12}", "level", "join", "prune", "frequent", "millis").unwrap();
        for row in &r.rows {
            writeln!(
                out,
                "{:>5} {:>10} {:>10} {:>10} {:>12}",
                row.k,
                row.joined,
                row.pruned,
                row.frequent,
                millis(row.elapsed)
            )
            .unwrap();
        }
        out.push('\n');
    }
    out
}

/// `level,join,prune,frequent,millis` rows. With several reports a leading
/// `minsup` column tells them apart.
pub fn render_csv(reports: &[BenchReport]) -> String {
    let multi = reports.len() > 1;
    let mut out = String::new();
    if multi {
        out.push_str("minsup,");
    }
    out.push_str("level,join,prune,frequent,millis\n");
    for r in reports {
        for row in &r.rows {
            if multi {
                write!(out, "{},", r.threshold).unwrap();
            }
            writeln!(
                out,
                "{},{},{},{},{}",
                row.k,
                row.joined,
                row.pruned,
                row.frequent,
                millis(row.elapsed)
            )
            .unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(seed: u64) -> GenParams {
        GenParams {
            num_transactions: 200,
            avg_transaction_len: 6.0,
            avg_pattern_len: 3.0,
            num_items: 50,
            num_patterns: 20,
            seed,
        }
    }

    #[test]
    fn shape_names_decode() {
        let p = GenParams::from_shape("T10I4D10K", 7).unwrap();
        assert_eq!(p.num_transactions, 10_000);
        assert_eq!(p.avg_transaction_len, 10.0);
        assert_eq!(p.avg_pattern_len, 4.0);
        assert!(GenParams::from_shape("X10I4D10K", 7).is_err());
        assert!(GenParams::from_shape("T4I10D1K", 7).is_err());
    }

    #[test]
    fn same_seed_same_data() {
        let a = generate(&small(1)).unwrap();
        assert_eq!(a, generate(&small(1)).unwrap());
        assert_ne!(a, generate(&small(2)).unwrap());
        assert_eq!(a.len(), 200);
    }

    #[test]
    fn single_item_universe() {
        let p = GenParams {
            num_transactions: 20,
            avg_transaction_len: 1.0,
            avg_pattern_len: 1.0,
            num_items: 1,
            num_patterns: 3,
            seed: 9,
        };
        let db = generate(&p).unwrap();
        assert_eq!(db.catalog().labels(), &["i0"]);
        assert!(db.transactions().iter().all(|t| t.len() == 1));
    }

    #[test]
    fn rejects_inconsistent_params() {
        let mut p = small(1);
        p.avg_pattern_len = 8.0;
        assert!(generate(&p).is_err());
        let mut p = small(1);
        p.num_transactions = 0;
        assert!(generate(&p).is_err());
    }

    #[test]
    fn generated_text_reparses_identically() {
        let db = generate(&small(3)).unwrap();
        let text = db.to_basket_text().unwrap();
        assert_eq!(crate::dataset::parse_basket(&text).unwrap(), db);
    }

    #[test]
    fn csv_has_expected_header() {
        let db = generate(&small(4)).unwrap();
        let reports = bench(&db, &["0.1".parse().unwrap()], Execution::Sequential).unwrap();
        let csv = render_csv(&reports);
        assert!(csv.starts_with("level,join,prune,frequent,millis\n"));
        assert_eq!(csv.lines().count(), reports[0].rows.len() + 1);
        assert!(render_table(&reports).contains("frequent"));
    }
}
