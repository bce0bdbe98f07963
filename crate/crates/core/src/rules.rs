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

//! Association rules from mined frequent itemsets.

use std::cmp::Ordering;

use thiserror::Error;

use crate::apriori::MiningResult;
use crate::dataset::Itemset;
use crate::fraction::{Fraction, SCALE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RulesError {
    #[error("support count of subset {0:?} is missing from the mining result")]
    MissingSubsetCount(Itemset),
    #[error("minimum confidence {0} is outside [0, 1]")]
    ConfidenceOutOfRange(Fraction),
    #[error("itemset of {0} items is too large to split into rules")]
    ItemsetTooLarge(usize),
}

/// `antecedent => consequent`. Confidence is the exact ratio
/// `rule_count / antecedent_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AssociationRule {
    pub antecedent: Itemset,
    pub consequent: Itemset,
    /// Support count of `antecedent ∪ consequent`.
    pub rule_count: u64,
    pub antecedent_count: u64,
}

impl AssociationRule {
    pub fn confidence(&self) -> f64 {
        self.rule_count as f64 / self.antecedent_count as f64
    }

    /// `confidence >= min`, decided by cross-multiplication.
    pub fn meets(&self, min: Fraction) -> bool {
        let lhs = self.rule_count as u128 * SCALE as u128;
        let rhs = min.millionths().max(0) as u128 * self.antecedent_count as u128;
        lhs >= rhs
    }

    pub fn cmp_confidence(&self, other: &Self) -> Ordering {
        let lhs = self.rule_count as u128 * other.antecedent_count as u128;
        let rhs = other.rule_count as u128 * self.antecedent_count as u128;
        lhs.cmp(&rhs)
    }

    pub fn items(&self) -> Itemset {
        self.antecedent.union(&self.consequent)
    }
}

/// Emits `A => Z \ A` for every frequent `Z` with at least two items and every
/// non-empty proper subset `A` whose confidence reaches `min_confidence`.
/// Subset counts are read from `result`.
pub fn generate_rules(result: &MiningResult, min_confidence: Fraction) -> Result<Vec<AssociationRule>, RulesError> {
    if !min_confidence.is_unit_interval() {
        return Err(RulesError::ConfidenceOutOfRange(min_confidence));
    }
    let mut rules = Vec::new();
    for level in result.levels.iter().skip(1) {
        for entry in &level.entries {
            let items = entry.itemset.items();
            let k = items.len();
            if k >= 64 {
                return Err(RulesError::ItemsetTooLarge(k));
            }
            for mask in 1u64..(1u64 << k) - 1 {
                let (ante, cons): (Vec<_>, Vec<_>) = items
                    .iter()
                    .enumerate()
                    .partition(|&(bit, _)| mask >> bit & 1 == 1);
                let antecedent = Itemset::new(ante.into_iter().map(|(_, &id)| id));
                let consequent = Itemset::new(cons.into_iter().map(|(_, &id)| id));
                let antecedent_count = result
                    .count_of(&antecedent)
                    .ok_or_else(|| RulesError::MissingSubsetCount(antecedent.clone()))?;
                let rule = AssociationRule {
                    antecedent,
                    consequent,
                    rule_count: entry.count,
                    antecedent_count,
                };
                if rule.meets(min_confidence) {
                    rules.push(rule);
                }
            }
        }
    }
    Ok(rules)
}

/// Ranking order: confidence desc, rule count desc, antecedent size asc,
/// antecedent lexicographic, consequent lexicographic.
pub fn ranking_order(a: &AssociationRule, b: &AssociationRule) -> Ordering {
    b.cmp_confidence(a)
        .then_with(|| b.rule_count.cmp(&a.rule_count))
        .then_with(|| a.antecedent.len().cmp(&b.antecedent.len()))
        .then_with(|| a.antecedent.cmp(&b.antecedent))
        .then_with(|| a.consequent.cmp(&b.consequent))
}

pub fn rank(mut rules: Vec<AssociationRule>, limit: usize) -> Vec<AssociationRule> {
    rules.sort_by(ranking_order);
    rules.truncate(limit);
    rules
}
