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

//! Nominal-only ARFF reader and writer.
//!
//! Supported subset: `@relation`, `@attribute <name> {v1, v2, ...}`, `@data`
//! followed by comma separated rows. Keywords are case-insensitive, `%` starts
//! a comment line. Quoting, sparse rows, missing values and non-nominal types
//! are rejected.

use std::collections::HashSet;
use std::fmt::Write;

use super::{DatasetError, ItemCatalog, Itemset, TransactionDatabase};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attribute {
    pub name: String,
    /// Declared domain, in declaration order.
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArffDataset {
    pub relation: String,
    pub attributes: Vec<Attribute>,
    /// One value index per attribute, per row.
    pub instances: Vec<Vec<usize>>,
}

impl ArffDataset {
    pub fn attribute_names(&self) -> Vec<String> {
        self.attributes.iter().map(|a| a.name.clone()).collect()
    }

    pub fn to_arff_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "@relation {}", self.relation).unwrap();
        for attr in &self.attributes {
            writeln!(out, "@attribute {} {{{}}}", attr.name, attr.values.join(", ")).unwrap();
        }
        out.push_str("@data\n");
        for row in &self.instances {
            let values: Vec<&str> = row
                .iter()
                .zip(&self.attributes)
                .map(|(&v, attr)| attr.values[v].as_str())
                .collect();
            out.push_str(&values.join(","));
            out.push('\n');
        }
        out
    }
}

/// Splits `line` into a leading `@keyword` (lowercased) and the remainder.
fn keyword(line: &str) -> Option<(String, &str)> {
    let rest = line.strip_prefix('@')?;
    let end = rest
        .find(|c: char| c.is_whitespace() || c == '{')
        .unwrap_or(rest.len());
    Some((rest[..end].to_ascii_lowercase(), rest[end..].trim()))
}

fn parse_attribute(line_no: usize, decl: &str) -> Result<Attribute, DatasetError> {
    let malformed = |message: &str| DatasetError::Malformed {
        line: line_no,
        message: message.to_string(),
    };
    let name_end = decl
        .find(|c: char| c.is_whitespace() || c == '{')
        .unwrap_or(decl.len());
    let name = &decl[..name_end];
    if name.is_empty() {
        return Err(malformed("attribute without a name"));
    }
    let spec = decl[name_end..].trim();
    let Some(body) = spec.strip_prefix('{') else {
        return Err(DatasetError::NonNominal {
            line: line_no,
            attribute: name.to_string(),
        });
    };
    let Some(body) = body.strip_suffix('}') else {
        return Err(malformed("unterminated nominal domain"));
    };
    let values: Vec<String> = body.split(',').map(|v| v.trim().to_string()).collect();
    if values.iter().any(|v| v.is_empty()) {
        return Err(malformed("empty nominal value"));
    }
    let mut seen = HashSet::new();
    if let Some(dup) = values.iter().find(|v| !seen.insert(v.as_str())) {
        return Err(malformed(&format!("duplicate nominal value `{dup}`")));
    }
    Ok(Attribute {
        name: name.to_string(),
        values,
    })
}

pub fn parse_arff(text: &str) -> Result<ArffDataset, DatasetError> {
    let mut relation: Option<String> = None;
    let mut attributes: Vec<Attribute> = Vec::new();
    let mut names = HashSet::new();
    let mut instances = Vec::new();
    let mut in_data = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if in_data {
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != attributes.len() {
                return Err(DatasetError::Arity {
                    line: line_no,
                    expected: attributes.len(),
                    found: fields.len(),
                });
            }
            let row = fields
                .iter()
                .zip(&attributes)
                .map(|(field, attr)| {
                    attr.values.iter().position(|v| v == field).ok_or_else(|| {
                        DatasetError::UnknownValue {
                            line: line_no,
                            attribute: attr.name.clone(),
                            value: field.to_string(),
                        }
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            instances.push(row);
            continue;
        }
        let Some((kw, rest)) = keyword(line) else {
            return Err(DatasetError::Malformed {
                line: line_no,
                message: format!("unexpected header line `{line}`"),
            });
        };
        match kw.as_str() {
            "relation" => {
                if rest.is_empty() {
                    return Err(DatasetError::Malformed {
                        line: line_no,
                        message: "relation without a name".into(),
                    });
                }
                relation = Some(rest.to_string());
            }
            "attribute" => {
                let attr = parse_attribute(line_no, rest)?;
                if !names.insert(attr.name.clone()) {
                    return Err(DatasetError::DuplicateAttribute {
                        line: line_no,
                        name: attr.name,
                    });
                }
                attributes.push(attr);
            }
            "data" => {
                if relation.is_none() {
                    return Err(DatasetError::Malformed {
                        line: line_no,
                        message: "@data before @relation".into(),
                    });
                }
                in_data = true;
            }
            other => {
                return Err(DatasetError::Malformed {
                    line: line_no,
                    message: format!("unsupported keyword `@{other}`"),
                })
            }
        }
    }

    if !in_data {
        return Err(DatasetError::MissingData);
    }
    Ok(ArffDataset {
        relation: relation.unwrap_or_default(),
        attributes,
        instances,
    })
}

/// One item `attr=value` per declared (attribute, value) pair; every row
/// becomes a transaction holding its observed value for each attribute.
pub fn arff_to_transactions(ds: &ArffDataset) -> TransactionDatabase {
    let mut catalog = ItemCatalog::new();
    let ids: Vec<Vec<_>> = ds
        .attributes
        .iter()
        .map(|attr| {
            attr.values
                .iter()
                .map(|v| catalog.intern(&format!("{}={}", attr.name, v)))
                .collect()
        })
        .collect();
    let transactions = ds
        .instances
        .iter()
        .map(|row| Itemset::new(row.iter().enumerate().map(|(a, &v)| ids[a][v])))
        .collect();
    TransactionDatabase::new(catalog, transactions).expect("catalog covers every attribute value")
}

/// Basket semantics: attribute `a` is an item, present in a row when the row's
/// value equals `present`. Attributes whose domain lacks `present` contribute
/// no item.
pub fn arff_to_transactions_present(ds: &ArffDataset, present: &str) -> TransactionDatabase {
    let mut catalog = ItemCatalog::new();
    let present_idx: Vec<Option<(usize, _)>> = ds
        .attributes
        .iter()
        .map(|attr| {
            attr.values
                .iter()
                .position(|v| v == present)
                .map(|p| (p, catalog.intern(&attr.name)))
        })
        .collect();
    let transactions = ds
        .instances
        .iter()
        .map(|row| {
            row.iter()
                .zip(&present_idx)
                .filter_map(|(&v, p)| match p {
                    Some((want, id)) if *want == v => Some(*id),
                    _ => None,
                })
                .collect()
        })
        .collect();
    TransactionDatabase::new(catalog, transactions).expect("catalog covers every attribute")
}
