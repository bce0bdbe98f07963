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

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fpmine::Fraction;

fn fraction(s: &str) -> Result<Fraction, String> {
    s.parse::<Fraction>().map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "fpmine", version, about = "Apriori frequent itemset and association rule mining")]
pub struct Cli {
    /// Worker threads for support counting (results do not depend on it).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Arff,
    Basket,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    JsonLines,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Transaction file (`.arff` or basket text).
    pub input: PathBuf,

    /// Input format; `auto` treats `.arff` files as ARFF and anything else as basket text.
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,

    /// For ARFF input, make each attribute an item present when its value equals this
    /// (instead of one item per attribute=value pair).
    #[arg(long)]
    pub present: Option<String>,
}

#[derive(Debug, Args)]
pub struct SupportArgs {
    /// Minimum support as a fraction of transactions.
    #[arg(long, value_parser = fraction, conflicts_with = "min_count", required_unless_present = "min_count")]
    pub minsup: Option<Fraction>,

    /// Minimum support as an absolute transaction count.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub min_count: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print frequent itemsets with their support counts.
    Mine {
        #[command(flatten)]
        support: SupportArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print ranked association rules.
    Rules {
        #[command(flatten)]
        support: SupportArgs,
        /// Minimum confidence.
        #[arg(long, value_parser = fraction)]
        minconf: Fraction,
        /// Keep only the best N rules.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        top: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run the WEKA-compatible associator and print its report.
    #[command(allow_negative_numbers = true)]
    Weka {
        /// Number of rules to find.
        #[arg(short = 'N', default_value_t = 10)]
        num_rules: usize,
        /// Metric type; only 0 (confidence) is supported.
        #[arg(short = 'T', default_value_t = 0)]
        metric: i64,
        /// Minimum metric score.
        #[arg(short = 'C', value_parser = fraction, default_value = "0.9")]
        min_metric: Fraction,
        /// Support decrement per cycle.
        #[arg(short = 'D', value_parser = fraction, default_value = "0.05")]
        delta: Fraction,
        /// Upper bound for minimum support.
        #[arg(short = 'U', value_parser = fraction, default_value = "1.0")]
        upper: Fraction,
        /// Lower bound for minimum support.
        #[arg(short = 'M', value_parser = fraction, default_value = "0.1")]
        lower: Fraction,
        /// Significance level (echoed only).
        #[arg(short = 'S', value_parser = fraction, default_value = "-1.0")]
        significance: Fraction,
        /// Class index (echoed only).
        #[arg(short = 'c', default_value_t = -1)]
        class_index: i64,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Write synthetic basket data.
    Gen {
        /// Shape name such as T10I4D10K; explicit flags below override its parts.
        #[arg(long)]
        shape: Option<String>,
        /// Number of transactions (D).
        #[arg(long)]
        transactions: Option<usize>,
        /// Average transaction length (T).
        #[arg(long)]
        avg_len: Option<f64>,
        /// Average pattern length (I).
        #[arg(long)]
        avg_pattern: Option<f64>,
        #[arg(long)]
        items: Option<usize>,
        #[arg(long)]
        patterns: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when absent.
        #[arg(short = 'o', long)]
        out_file: Option<PathBuf>,
    },
    /// Report per-pass candidate and frequent counts for one or more thresholds.
    Bench {
        /// Comma separated minimum supports, e.g. 0.05,0.02,0.01.
        #[arg(long, value_parser = fraction, value_delimiter = ',', required = true)]
        thresholds: Vec<Fraction>,
        #[arg(long, value_enum, default_value_t = BenchOutput::Text)]
        output: BenchOutput,
        /// Generate the database from a shape name instead of reading a file.
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        shape: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        format: InputFormat,
        #[arg(long)]
        present: Option<String>,
    },
    /// Rewrite a database as ARFF or basket text.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        /// Relation name for ARFF output; defaults to the input file stem.
        #[arg(long)]
        relation: Option<String>,
        #[arg(short = 'o', long)]
        out_file: Option<PathBuf>,
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchOutput {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Arff,
    Basket,
}
