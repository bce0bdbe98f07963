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

//! WEKA-style Apriori associator.
//!
//! Minimum support starts one `delta` below the upper bound and is lowered by
//! `delta` per cycle until at least `num_rules` rules reach the minimum
//! confidence, or until the next support would fall below the lower bound.
//! All schedule arithmetic is done in exact millionths.

use std::fmt::Write;

use thiserror::Error;

use crate::apriori::{mine, MiningResult, SupportThreshold};
use crate::dataset::{ItemCatalog, ItemId, TransactionDatabase};
use crate::fraction::{ratio_two_places, Fraction};
use crate::rules::{generate_rules, rank, AssociationRule, RulesError};

pub const SCHEME_CLASS: &str = "weka.associations.Apriori";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WekaError {
    #[error("metric type {0} is not supported; only 0 (confidence) is")]
    UnsupportedMetric(i64),
    #[error("the database has no transactions")]
    EmptyDatabase,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Rules(#[from] RulesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricType {
    Confidence,
}

impl MetricType {
    /// Maps a `-T` code. Codes 1-3 (lift, leverage, conviction) are not supported.
    pub fn from_code(code: i64) -> Result<Self, WekaError> {
        match code {
            0 => Ok(MetricType::Confidence),
            1..=3 => Err(WekaError::UnsupportedMetric(code)),
            other => Err(WekaError::InvalidParams(format!("unknown metric type {other}"))),
        }
    }

    pub fn code(self) -> i64 {
        0
    }

    pub fn name(self) -> &'static str {
        "confidence"
    }
}

/// Associator options, named after their WEKA flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WekaParams {
    /// `-N`
    pub num_rules: usize,
    /// `-T`
    pub metric: MetricType,
    /// `-C`
    pub min_metric: Fraction,
    /// `-D`
    pub delta: Fraction,
    /// `-U`
    pub upper_bound: Fraction,
    /// `-M`
    pub lower_bound: Fraction,
    /// `-S`, echoed in the scheme line only.
    pub significance: Fraction,
    /// `-c`, echoed in the scheme line only.
    pub class_index: i64,
}

impl Default for WekaParams {
    fn default() -> Self {
        WekaParams {
            num_rules: 10,
            metric: MetricType::Confidence,
            min_metric: Fraction::from_millionths(900_000),
            delta: Fraction::from_millionths(50_000),
            upper_bound: Fraction::ONE,
            lower_bound: Fraction::from_millionths(100_000),
            significance: Fraction::from_millionths(-1_000_000),
            class_index: -1,
        }
    }
}

impl WekaParams {
    pub fn validate(&self) -> Result<(), WekaError> {
        let bad = |m: &str| Err(WekaError::InvalidParams(m.to_string()));
        if self.num_rules == 0 {
            return bad("-N must be positive");
        }
        if !(Fraction::ZERO <= self.lower_bound
            && self.lower_bound <= self.upper_bound
            && self.upper_bound <= Fraction::ONE)
        {
            return bad("bounds must satisfy 0 <= -M <= -U <= 1");
        }
        if self.delta <= Fraction::ZERO {
            return bad("-D must be positive");
        }
        if !self.min_metric.is_unit_interval() {
            return bad("-C must lie in [0, 1]");
        }
        Ok(())
    }

    /// The scheme line, e.g. `weka.associations.Apriori -N 20 -T 0 -C 0.5 ...`.
    pub fn scheme(&self) -> String {
        format!(
            "{SCHEME_CLASS} -N {} -T {} -C {} -D {} -U {} -M {} -S {} -c {}",
            self.num_rules,
            self.metric.code(),
            self.min_metric.to_java(),
            self.delta.to_java(),
            self.upper_bound.to_java(),
            self.lower_bound.to_java(),
            self.significance.to_java(),
            self.class_index,
        )
    }
}

/// Outcome of one associator execution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WekaRun {
    pub min_support: Fraction,
    pub required_count: u64,
    pub cycles: usize,
    pub instances: usize,
    pub min_metric: Fraction,
    pub metric: MetricType,
    /// Frequent itemsets of the final cycle.
    pub mining: MiningResult,
    /// Qualifying rules of the final cycle before truncation.
    pub rules_found: usize,
    pub best_rules: Vec<AssociationRule>,
}

pub fn run_associator(db: &TransactionDatabase, p: &WekaParams) -> Result<WekaRun, WekaError> {
    p.validate()?;
    if db.is_empty() {
        return Err(WekaError::EmptyDatabase);
    }
    let n = db.len();
    let mut last: Option<WekaRun> = None;
    for cycle in 1usize.. {
        let support = Fraction::from_millionths(
            p.upper_bound.millionths() - cycle as i64 * p.delta.millionths(),
        );
        if support < p.lower_bound {
            break;
        }
        let threshold = SupportThreshold::from_relative(support, n)
            .expect("support lies between the validated bounds");
        let mining = mine(db, threshold);
        let rules = generate_rules(&mining, p.min_metric)?;
        let rules_found = rules.len();
        let run = WekaRun {
            min_support: support,
            required_count: threshold.absolute(),
            cycles: cycle,
            instances: n,
            min_metric: p.min_metric,
            metric: p.metric,
            mining,
            rules_found,
            best_rules: rank(rules, p.num_rules),
        };
        if rules_found >= p.num_rules {
            return Ok(run);
        }
        last = Some(run);
    }
    Ok(last.unwrap_or_else(|| WekaRun {
        min_support: p.upper_bound,
        required_count: p.upper_bound.floor_times(n as u64).max(1),
        cycles: 0,
        instances: n,
        min_metric: p.min_metric,
        metric: p.metric,
        mining: MiningResult::default(),
        rules_found: 0,
        best_rules: Vec::new(),
    }))
}

fn item_list(catalog: &ItemCatalog, items: &[ItemId]) -> String {
    items
        .iter()
        .map(|&id| catalog.label(id))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `E=TRUE 11 ==> H=TRUE 11    conf:(1)`
pub fn format_rule(catalog: &ItemCatalog, rule: &AssociationRule) -> String {
    format!(
        "{} {} ==> {} {}    conf:({})",
        item_list(catalog, &rule.antecedent),
        rule.antecedent_count,
        item_list(catalog, &rule.consequent),
        rule.rule_count,
        ratio_two_places(rule.rule_count, rule.antecedent_count),
    )
}

/// Renders the associator's text report.
pub fn format_report(
    run: &WekaRun,
    catalog: &ItemCatalog,
    relation: &str,
    scheme: &str,
    attribute_names: &[String],
) -> String {
    let mut out = String::new();
    out.push_str("==== Run information ====\n\n");
    writeln!(out, "Scheme: {scheme}").unwrap();
    writeln!(out, "Relation: {relation}").unwrap();
    writeln!(out, "Instances: {}", run.instances).unwrap();
    writeln!(out, "Attributes: {}", attribute_names.len()).unwrap();
    for name in attribute_names {
        writeln!(out, "{name}").unwrap();
    }
    out.push_str("\n==== Associator model (full training set) ====\n\n\n");
    out.push_str("Apriori\n=====\n\n");
    writeln!(
        out,
        "Minimum support: {} ({} instances)",
        run.min_support.to_two_places(),
        run.required_count
    )
    .unwrap();
    writeln!(
        out,
        "Minimum metric <{}>: {}",
        run.metric.name(),
        run.min_metric.to_two_places()
    )
    .unwrap();
    writeln!(out, "Number of cycles performed: {}", run.cycles).unwrap();
    if run.mining.levels.is_empty() {
        out.push_str("\nNo large itemsets and rules found!\n");
        return out;
    }
    out.push_str("\nGenerated sets of large itemsets:\n");
    for level in &run.mining.levels {
        writeln!(out, "\nSize of set of large itemsets L({}): {}", level.k, level.len()).unwrap();
    }
    out.push_str("\nBest rules found:\n\n");
    for (idx, rule) in run.best_rules.iter().enumerate() {
        writeln!(out, "{}. {}", idx + 1, format_rule(catalog, rule)).unwrap();
    }
    out
}
