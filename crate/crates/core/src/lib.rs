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

//! Frequent itemset mining with Apriori.
//!
//! The crate reads transaction data from nominal ARFF or plain basket text,
//! mines frequent itemsets level by level, derives association rules, and
//! drives a WEKA-compatible associator that lowers minimum support until
//! enough rules are found. Support counting runs data-parallel on rayon when
//! the default `parallel` feature is enabled.
//!
//! ```
//! use fpmine::{apriori, dataset, rules, Fraction};
//!
//! let db = dataset::parse_basket("bread butter\nbread milk\nbread butter milk\n").unwrap();
//! let minsup = apriori::SupportThreshold::from_count(2, db.len());
//! let mined = apriori::mine(&db, minsup);
//! assert_eq!(mined.level_sizes(), vec![3, 2]);
//! let rules = rules::generate_rules(&mined, Fraction::ONE).unwrap();
//! assert_eq!(rules.len(), 2);
//! ```

pub mod apriori;
pub mod counting;
pub mod dataset;
pub mod fraction;
pub mod rules;
pub mod synth;
pub mod weka;

pub use apriori::{mine, MiningResult, SupportThreshold};
pub use counting::Execution;
pub use dataset::{ItemCatalog, ItemId, Itemset, TransactionDatabase};
pub use fraction::Fraction;
pub use rules::AssociationRule;
