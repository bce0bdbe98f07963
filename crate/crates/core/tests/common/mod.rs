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

//! Test-only fixtures and independent oracles shared by the integration suites.

#![allow(dead_code)]

use std::collections::BTreeSet;

use fpmine::apriori::{brute_force_frequent, SupportThreshold};
use fpmine::dataset::{arff_to_transactions, parse_arff, parse_basket};
use fpmine::{AssociationRule, Fraction, ItemId, TransactionDatabase};

pub const TEST_ITEM_TRANS: &str = include_str!("../../../../data/TEST_ITEM_TRANS.arff");
pub const BREAD_BUTTER: &str = include_str!("../../../../data/bread_butter.txt");

pub fn sample_db() -> TransactionDatabase {
    arff_to_transactions(&parse_arff(TEST_ITEM_TRANS).unwrap())
}

pub fn bread_db() -> TransactionDatabase {
    parse_basket(BREAD_BUTTER).unwrap()
}

pub fn ids(db: &TransactionDatabase, labels: &[&str]) -> Vec<ItemId> {
    let mut v: Vec<ItemId> = labels
        .iter()
        .map(|l| db.catalog().get(l).unwrap_or_else(|| panic!("unknown label {l}")))
        .collect();
    v.sort();
    v
}

/// Transactions containing every item of `items`, by linear scan.
pub fn naive_count(db: &TransactionDatabase, items: &[ItemId]) -> u64 {
    db.transactions()
        .iter()
        .filter(|t| items.iter().all(|i| t.items().contains(i)))
        .count() as u64
}

/// (antecedent labels, antecedent count, consequent labels, rule count)
pub type RuleKey = (Vec<String>, u64, Vec<String>, u64);

pub fn rule_key(db: &TransactionDatabase, r: &AssociationRule) -> RuleKey {
    let labels = |s: &[ItemId]| s.iter().map(|&i| db.catalog().label(i).to_string()).collect();
    (
        labels(&r.antecedent),
        r.antecedent_count,
        labels(&r.consequent),
        r.rule_count,
    )
}

/// Every rule with confidence >= `min_conf`, from exhaustively enumerated
/// frequent itemsets and per-split linear-scan counts.
pub fn oracle_rules(db: &TransactionDatabase, t: SupportThreshold, min_conf: Fraction) -> BTreeSet<RuleKey> {
    let frequent = brute_force_frequent(db, t).unwrap();
    let mut out = BTreeSet::new();
    for z in frequent.itemsets() {
        let items = z.itemset.items();
        let k = items.len();
        if k < 2 {
            continue;
        }
        let whole = naive_count(db, items);
        assert_eq!(whole, z.count);
        for mask in 1u32..(1 << k) - 1 {
            let ante: Vec<ItemId> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| items[b]).collect();
            let cons: Vec<ItemId> = (0..k).filter(|b| mask >> b & 1 == 0).map(|b| items[b]).collect();
            let ante_count = naive_count(db, &ante);
            if whole as i128 * 1_000_000 >= min_conf.millionths() as i128 * ante_count as i128 {
                let labels = |s: &[ItemId]| s.iter().map(|&i| db.catalog().label(i).to_string()).collect();
                out.insert((labels(&ante), ante_count, labels(&cons), whole));
            }
        }
    }
    out
}

/// The 20 best rules of the 15-transaction associator run:
/// (antecedent, antecedent count, consequent, rule count, rendered confidence).
pub const EXPECTED_RULES: [(&str, u64, &str, u64, &str); 20] = [
    ("E=TRUE", 11, "H=TRUE", 11, "1"),
    ("B=TRUE", 10, "H=TRUE", 10, "1"),
    ("C=TRUE", 10, "H=TRUE", 10, "1"),
    ("A=TRUE", 9, "H=TRUE", 9, "1"),
    ("G=FALSE", 9, "H=TRUE", 9, "1"),
    ("D=TRUE", 8, "H=TRUE", 8, "1"),
    ("F=FALSE", 8, "H=TRUE", 8, "1"),
    ("D=FALSE", 7, "H=TRUE", 7, "1"),
    ("F=TRUE", 7, "H=TRUE", 7, "1"),
    ("B=TRUE E=TRUE", 7, "H=TRUE", 7, "1"),
    ("C=TRUE G=FALSE", 7, "H=TRUE", 7, "1"),
    ("E=TRUE G=FALSE", 7, "H=TRUE", 7, "1"),
    ("G=FALSE", 9, "C=TRUE", 7, "0.78"),
    ("G=FALSE", 9, "E=TRUE", 7, "0.78"),
    ("G=FALSE H=TRUE", 9, "C=TRUE", 7, "0.78"),
    ("G=FALSE", 9, "C=TRUE H=TRUE", 7, "0.78"),
    ("G=FALSE H=TRUE", 9, "E=TRUE", 7, "0.78"),
    ("G=FALSE", 9, "E=TRUE H=TRUE", 7, "0.78"),
    ("H=TRUE", 15, "E=TRUE", 11, "0.73"),
    ("B=TRUE", 10, "E=TRUE", 7, "0.7"),
];

pub fn expected_rule_keys() -> BTreeSet<RuleKey> {
    let split = |s: &str| s.split(' ').map(str::to_string).collect::<Vec<_>>();
    EXPECTED_RULES
        .iter()
        .map(|&(a, ac, c, rc, _)| (split(a), ac, split(c), rc))
        .collect()
}
