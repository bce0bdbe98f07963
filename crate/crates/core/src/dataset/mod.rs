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

//! Transaction databases and the text formats they are read from.

mod arff;
mod basket;

pub use arff::{arff_to_transactions, arff_to_transactions_present, parse_arff, ArffDataset, Attribute};
pub use basket::parse_basket;

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DatasetError {
    #[error("line {line}: attribute `{attribute}` is not nominal")]
    NonNominal { line: usize, attribute: String },
    #[error("line {line}: expected {expected} values, found {found}")]
    Arity {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: value `{value}` is not in the domain of attribute `{attribute}`")]
    UnknownValue {
        line: usize,
        attribute: String,
        value: String,
    },
    #[error("line {line}: duplicate attribute `{name}`")]
    DuplicateAttribute { line: usize, name: String },
    #[error("missing @data section")]
    MissingData,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: transaction has no items")]
    EmptyTransaction { line: usize },
    #[error("transaction {transaction} refers to unknown item id {item}")]
    UnknownItem { transaction: usize, item: u32 },
    #[error("transaction {transaction} is empty and cannot be written as a basket line")]
    Unrepresentable { transaction: usize },
}

impl DatasetError {
    /// Source line the error refers to, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            DatasetError::NonNominal { line, .. }
            | DatasetError::Arity { line, .. }
            | DatasetError::UnknownValue { line, .. }
            | DatasetError::DuplicateAttribute { line, .. }
            | DatasetError::Malformed { line, .. }
            | DatasetError::EmptyTransaction { line } => Some(*line),
            _ => None,
        }
    }
}

/// Dense item index into an [`ItemCatalog`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ItemId(pub u32);

impl ItemId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ItemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Bijective interning of item labels to ids, in insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ItemCatalog {
    labels: Vec<String>,
    index: HashMap<String, ItemId>,
}

impl ItemCatalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id of `label`, assigning the next free id on first sight.
    pub fn intern(&mut self, label: &str) -> ItemId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = ItemId(self.labels.len() as u32);
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), id);
        id
    }

    pub fn get(&self, label: &str) -> Option<ItemId> {
        self.index.get(label).copied()
    }

    pub fn label(&self, id: ItemId) -> &str {
        &self.labels[id.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// A canonical itemset: strictly ascending item ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Itemset(Vec<ItemId>);

/// A database record. Shares the canonical itemset representation.
pub type Transaction = Itemset;

impl Itemset {
    pub fn empty() -> Self {
        Itemset(Vec::new())
    }

    /// Builds an itemset from ids in any order, dropping duplicates.
    pub fn new(items: impl IntoIterator<Item = ItemId>) -> Self {
        let mut items: Vec<ItemId> = items.into_iter().collect();
        items.sort_unstable();
        items.dedup();
        Itemset(items)
    }

    pub fn from_ids(ids: &[u32]) -> Self {
        Self::new(ids.iter().map(|&i| ItemId(i)))
    }

    /// Wraps ids that are already strictly ascending.
    pub(crate) fn from_sorted(items: Vec<ItemId>) -> Self {
        debug_assert!(items.windows(2).all(|w| w[0] < w[1]));
        Itemset(items)
    }

    pub fn items(&self) -> &[ItemId] {
        &self.0
    }

    /// True when every item of `self` occurs in `other`.
    pub fn is_subset_of(&self, other: &[ItemId]) -> bool {
        is_sorted_subset(&self.0, other)
    }

    pub fn union(&self, other: &Itemset) -> Itemset {
        Itemset::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn difference(&self, other: &Itemset) -> Itemset {
        Itemset(
            self.0
                .iter()
                .copied()
                .filter(|i| other.0.binary_search(i).is_err())
                .collect(),
        )
    }

    pub fn into_vec(self) -> Vec<ItemId> {
        self.0
    }
}

impl Deref for Itemset {
    type Target = [ItemId];

    fn deref(&self) -> &[ItemId] {
        &self.0
    }
}

impl FromIterator<ItemId> for Itemset {
    fn from_iter<I: IntoIterator<Item = ItemId>>(iter: I) -> Self {
        Itemset::new(iter)
    }
}

/// Merge-walk subset test over two strictly ascending slices.
pub(crate) fn is_sorted_subset(needle: &[ItemId], haystack: &[ItemId]) -> bool {
    if needle.len() > haystack.len() {
        return false;
    }
    let mut rest = haystack;
    for item in needle {
        match rest.iter().position(|h| h >= item) {
            Some(pos) if rest[pos] == *item => rest = &rest[pos + 1..],
            _ => return false,
        }
    }
    true
}

/// The database mined by Apriori: an item catalog plus the transactions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransactionDatabase {
    catalog: ItemCatalog,
    transactions: Vec<Transaction>,
}

impl TransactionDatabase {
    pub fn new(catalog: ItemCatalog, transactions: Vec<Transaction>) -> Result<Self, DatasetError> {
        for (t, tx) in transactions.iter().enumerate() {
            if let Some(bad) = tx.iter().find(|id| id.index() >= catalog.len()) {
                return Err(DatasetError::UnknownItem {
                    transaction: t,
                    item: bad.0,
                });
            }
        }
        Ok(TransactionDatabase {
            catalog,
            transactions,
        })
    }

    /// Builds a database from label lists, interning labels in first-occurrence order.
    pub fn from_labels<I, T, S>(rows: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut catalog = ItemCatalog::new();
        let transactions = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|label| catalog.intern(label.as_ref()))
                    .collect::<Itemset>()
            })
            .collect();
        TransactionDatabase {
            catalog,
            transactions,
        }
    }

    pub fn catalog(&self) -> &ItemCatalog {
        &self.catalog
    }

    pub fn transactions(&self) -> &[Transaction] {
        &self.transactions
    }

    /// Number of transactions.
    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    pub fn max_transaction_len(&self) -> usize {
        self.transactions.iter().map(|t| t.len()).max().unwrap_or(0)
    }

    /// Items that occur in at least one transaction, ascending.
    pub fn occurring_items(&self) -> Vec<ItemId> {
        let mut seen = vec![false; self.catalog.len()];
        for tx in &self.transactions {
            for id in tx.iter() {
                seen[id.index()] = true;
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| ItemId(i as u32))
            .collect()
    }

    pub fn labels_of<'a>(&'a self, itemset: &'a [ItemId]) -> impl Iterator<Item = &'a str> + 'a {
        itemset.iter().map(move |&id| self.catalog.label(id))
    }

    /// Renders the database as basket text, one `T<n>: a b c` line per transaction.
    pub fn to_basket_text(&self) -> Result<String, DatasetError> {
        let mut out = String::new();
        for (t, tx) in self.transactions.iter().enumerate() {
            if tx.is_empty() {
                return Err(DatasetError::Unrepresentable { transaction: t });
            }
            out.push('T');
            out.push_str(&(t + 1).to_string());
            out.push(':');
            for label in self.labels_of(tx) {
                out.push(' ');
                out.push_str(label);
            }
            out.push('\n');
        }
        Ok(out)
    }

    /// One `{TRUE, FALSE}` attribute per catalog item, in id order.
    pub fn to_arff(&self, relation: &str) -> ArffDataset {
        let attributes = self
            .catalog
            .labels()
            .iter()
            .map(|label| Attribute {
                name: label.clone(),
                values: vec!["TRUE".to_string(), "FALSE".to_string()],
            })
            .collect();
        let instances = self
            .transactions
            .iter()
            .map(|tx| {
                let mut row = vec![1usize; self.catalog.len()];
                for id in tx.iter() {
                    row[id.index()] = 0;
                }
                row
            })
            .collect();
        ArffDataset {
            relation: relation.to_string(),
            attributes,
            instances,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_ids_are_dense_and_bijective() {
        let mut c = ItemCatalog::new();
        assert_eq!(c.intern("bread"), ItemId(0));
        assert_eq!(c.intern("milk"), ItemId(1));
        assert_eq!(c.intern("bread"), ItemId(0));
        assert_eq!(c.intern("Bread"), ItemId(2));
        assert_eq!(c.label(ItemId(1)), "milk");
        assert_eq!(c.get("milk"), Some(ItemId(1)));
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn itemset_is_canonical() {
        let s = Itemset::from_ids(&[5, 1, 3, 1]);
        assert_eq!(s.items(), &[ItemId(1), ItemId(3), ItemId(5)]);
        assert!(Itemset::from_ids(&[1, 5]).is_subset_of(&s));
        assert!(!Itemset::from_ids(&[2]).is_subset_of(&s));
        assert!(Itemset::empty().is_subset_of(&[]));
        assert_eq!(s.difference(&Itemset::from_ids(&[3])), Itemset::from_ids(&[1, 5]));
    }

    #[test]
    fn rejects_out_of_catalog_ids() {
        let mut c = ItemCatalog::new();
        c.intern("a");
        let err = TransactionDatabase::new(c, vec![Itemset::from_ids(&[0, 1])]).unwrap_err();
        assert_eq!(
            err,
            DatasetError::UnknownItem {
                transaction: 0,
                item: 1
            }
        );
    }

    #[test]
    fn empty_transaction_cannot_be_rendered() {
        let mut c = ItemCatalog::new();
        c.intern("a");
        let db = TransactionDatabase::new(c, vec![Itemset::empty()]).unwrap();
        assert!(db.to_basket_text().is_err());
    }

    #[test]
    fn basket_to_arff_marks_present_items() {
        let db = TransactionDatabase::from_labels(vec![vec!["a", "b"], vec!["b"]]);
        let arff = db.to_arff("r");
        assert_eq!(arff.attributes.len(), 2);
        assert_eq!(arff.instances, vec![vec![0, 0], vec![1, 0]]);
    }
}
