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

//! Itemset and rule listings in text, CSV and JSON-lines form.

use std::fmt::Write;

use fpmine::rules::AssociationRule;
use fpmine::weka::format_rule;
use fpmine::{ItemId, MiningResult, TransactionDatabase};
use serde_json::json;

use crate::args::OutputFormat;

fn labels(db: &TransactionDatabase, items: &[ItemId]) -> Vec<String> {
    db.labels_of(items).map(str::to_string).collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn itemsets(db: &TransactionDatabase, result: &MiningResult, format: OutputFormat) -> String {
    let mut out = String::new();
    if format == OutputFormat::Csv {
        out.push_str("items,count\n");
    }
    for e in result.itemsets() {
        let items = labels(db, &e.itemset);
        match format {
            OutputFormat::Text => writeln!(out, "{} {}", items.join(" "), e.count),
            OutputFormat::Csv => writeln!(out, "{},{}", csv_field(&items.join(" ")), e.count),
            OutputFormat::JsonLines => writeln!(out, "{}", json!({ "items": items, "count": e.count })),
        }
        .unwrap();
    }
    out
}

pub fn rules(db: &TransactionDatabase, rules: &[AssociationRule], format: OutputFormat) -> String {
    let mut out = String::new();
    if format == OutputFormat::Csv {
        out.push_str("antecedent,consequent,antecedent_count,count,confidence\n");
    }
    for (idx, r) in rules.iter().enumerate() {
        match format {
            OutputFormat::Text => writeln!(out, "{}. {}", idx + 1, format_rule(db.catalog(), r)),
            OutputFormat::Csv => writeln!(
                out,
                "{},{},{},{},{}",
                csv_field(&labels(db, &r.antecedent).join(" ")),
                csv_field(&labels(db, &r.consequent).join(" ")),
                r.antecedent_count,
                r.rule_count,
                r.confidence()
            ),
            OutputFormat::JsonLines => writeln!(
                out,
                "{}",
                json!({
                    "antecedent": labels(db, &r.antecedent),
                    "consequent": labels(db, &r.consequent),
                    "antecedent_count": r.antecedent_count,
                    "count": r.rule_count,
                    "confidence": r.confidence(),
                })
            ),
        }
        .unwrap();
    }
    out
}
