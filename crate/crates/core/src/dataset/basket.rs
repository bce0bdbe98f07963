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

use super::{DatasetError, ItemCatalog, Itemset, TransactionDatabase};

fn is_separator(c: char) -> bool {
    c == ',' || c.is_whitespace()
}

/// Parses basket text: one `[<id>:] item[,| ]item...` transaction per line.
///
/// A `:` counts as the id prefix only when it appears before the first
/// separator. Blank lines and lines starting with `#` are skipped.
pub fn parse_basket(text: &str) -> Result<TransactionDatabase, DatasetError> {
    let mut catalog = ItemCatalog::new();
    let mut transactions = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let items = match (line.find(':'), line.find(is_separator)) {
            (Some(colon), sep) if sep.is_none_or(|s| colon < s) => &line[colon + 1..],
            _ => line,
        };
        let tx: Itemset = items
            .split(is_separator)
            .filter(|label| !label.is_empty())
            .map(|label| catalog.intern(label))
            .collect();
        if tx.is_empty() {
            return Err(DatasetError::EmptyTransaction { line: idx + 1 });
        }
        transactions.push(tx);
    }
    TransactionDatabase::new(catalog, transactions)
}
