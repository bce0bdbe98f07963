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

mod args;
mod output;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use fpmine::apriori::{mine, SupportThreshold};
use fpmine::counting::{with_threads, Execution};
use fpmine::dataset::{arff_to_transactions, arff_to_transactions_present, parse_arff, parse_basket};
use fpmine::rules::{generate_rules, rank};
use fpmine::synth::{bench, generate, render_csv, render_table, GenParams};
use fpmine::weka::{format_report, run_associator, MetricType, WekaError, WekaParams};
use fpmine::TransactionDatabase;

use args::{BenchOutput, Cli, Command, InputArgs, InputFormat, SupportArgs, Target};

/// Exit status 1: bad invocation. Exit status 2: unreadable or invalid input.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Input(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) => m,
        }
    }
}

struct Loaded {
    db: TransactionDatabase,
    relation: String,
    attribute_names: Vec<String>,
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "transactions".to_string())
}

fn is_arff(path: &Path, format: InputFormat) -> bool {
    match format {
        InputFormat::Arff => true,
        InputFormat::Basket => false,
        InputFormat::Auto => path
            .extension()
            .is_some_and(|e| e.eq_ignore_ascii_case("arff")),
    }
}

fn load(path: &Path, format: InputFormat, present: Option<&str>) -> Result<Loaded, CliError> {
    let shown = path.display();
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{shown}: {e}")))?;
    let parse_err = |e: fpmine::dataset::DatasetError| CliError::Input(format!("{shown}: {e}"));
    if is_arff(path, format) {
        let ds = parse_arff(&text).map_err(parse_err)?;
        let db = match present {
            Some(value) => arff_to_transactions_present(&ds, value),
            None => arff_to_transactions(&ds),
        };
        Ok(Loaded {
            db,
            attribute_names: ds.attribute_names(),
            relation: ds.relation,
        })
    } else {
        if present.is_some() {
            return Err(CliError::Usage("--present only applies to ARFF input".into()));
        }
        let db = parse_basket(&text).map_err(parse_err)?;
        Ok(Loaded {
            attribute_names: db.catalog().labels().to_vec(),
            relation: file_stem(path),
            db,
        })
    }
}

fn load_input(input: &InputArgs) -> Result<Loaded, CliError> {
    load(&input.input, input.format, input.present.as_deref())
}

fn check_support(support: &SupportArgs) -> Result<(), CliError> {
    match support.minsup {
        Some(f) if !f.is_unit_interval() => Err(CliError::Usage(format!(
            "--minsup must lie in [0, 1], got {f}"
        ))),
        _ => Ok(()),
    }
}

fn threshold(support: &SupportArgs, n: usize) -> SupportThreshold {
    match (support.minsup, support.min_count) {
        (Some(f), _) => SupportThreshold::from_relative(f, n).expect("validated"),
        (None, Some(c)) => SupportThreshold::from_count(c, n),
        (None, None) => unreachable!("clap requires one of the two"),
    }
}

fn gen_params(
    shape: Option<&str>,
    transactions: Option<usize>,
    avg_len: Option<f64>,
    avg_pattern: Option<f64>,
    items: Option<usize>,
    patterns: Option<usize>,
    seed: u64,
) -> Result<GenParams, CliError> {
    let mut p = match shape {
        Some(name) => GenParams::from_shape(name, seed).map_err(|e| CliError::Usage(e.to_string()))?,
        None => GenParams {
            num_transactions: 0,
            avg_transaction_len: 10.0,
            avg_pattern_len: 4.0,
            num_items: 1000,
            num_patterns: 100,
            seed,
        },
    };
    if let Some(v) = transactions {
        p.num_transactions = v;
    }
    if let Some(v) = avg_len {
        p.avg_transaction_len = v;
    }
    if let Some(v) = avg_pattern {
        p.avg_pattern_len = v;
    }
    if let Some(v) = items {
        p.num_items = v;
    }
    if let Some(v) = patterns {
        p.num_patterns = v;
    }
    if shape.is_none() && transactions.is_none() {
        return Err(CliError::Usage("gen needs --shape or --transactions".into()));
    }
    p.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(p)
}

fn write_out(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Input(format!("stdout: {e}"))),
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    let exec = Execution::default();
    let text = match command {
        Command::Mine {
            support,
            output,
            input,
        } => {
            check_support(&support)?;
            let loaded = load_input(&input)?;
            let result = mine(&loaded.db, threshold(&support, loaded.db.len()));
            output::itemsets(&loaded.db, &result, output)
        }
        Command::Rules {
            support,
            minconf,
            top,
            output,
            input,
        } => {
            check_support(&support)?;
            if !minconf.is_unit_interval() {
                return Err(CliError::Usage(format!("--minconf must lie in [0, 1], got {minconf}")));
            }
            let loaded = load_input(&input)?;
            let result = mine(&loaded.db, threshold(&support, loaded.db.len()));
            let rules = generate_rules(&result, minconf).map_err(|e| CliError::Input(e.to_string()))?;
            let limit = top.map_or(usize::MAX, |t| t as usize);
            output::rules(&loaded.db, &rank(rules, limit), output)
        }
        Command::Weka {
            num_rules,
            metric,
            min_metric,
            delta,
            upper,
            lower,
            significance,
            class_index,
            input,
        } => {
            let usage = |e: WekaError| CliError::Usage(e.to_string());
            let params = WekaParams {
                num_rules,
                metric: MetricType::from_code(metric).map_err(usage)?,
                min_metric,
                delta,
                upper_bound: upper,
                lower_bound: lower,
                significance,
                class_index,
            };
            params.validate().map_err(usage)?;
            let loaded = load_input(&input)?;
            let run = run_associator(&loaded.db, &params).map_err(|e| CliError::Input(e.to_string()))?;
            format_report(
                &run,
                loaded.db.catalog(),
                &loaded.relation,
                &params.scheme(),
                &loaded.attribute_names,
            )
        }
        Command::Gen {
            shape,
            transactions,
            avg_len,
            avg_pattern,
            items,
            patterns,
            seed,
            out_file,
        } => {
            let p = gen_params(shape.as_deref(), transactions, avg_len, avg_pattern, items, patterns, seed)?;
            let db = generate(&p).map_err(|e| CliError::Usage(e.to_string()))?;
            let text = db.to_basket_text().expect("generated transactions are never empty");
            return write_out(out_file.as_deref(), &text, out);
        }
        Command::Bench {
            thresholds,
            output,
            shape,
            seed,
            input,
            format,
            present,
        } => {
            if let Some(bad) = thresholds.iter().find(|t| !t.is_unit_interval()) {
                return Err(CliError::Usage(format!("threshold {bad} is outside [0, 1]")));
            }
            let db = match (shape, input) {
                (Some(name), _) => {
                    let p = GenParams::from_shape(&name, seed).map_err(|e| CliError::Usage(e.to_string()))?;
                    generate(&p).map_err(|e| CliError::Usage(e.to_string()))?
                }
                (None, Some(path)) => load(&path, format, present.as_deref())?.db,
                (None, None) => unreachable!("clap requires input or --shape"),
            };
            let reports = bench(&db, &thresholds, exec).map_err(|e| CliError::Usage(e.to_string()))?;
            match output {
                BenchOutput::Text => render_table(&reports),
                BenchOutput::Csv => render_csv(&reports),
            }
        }
        Command::Convert {
            to,
            relation,
            out_file,
            input,
        } => {
            let loaded = load_input(&input)?;
            let text = match to {
                Target::Basket => loaded
                    .db
                    .to_basket_text()
                    .map_err(|e| CliError::Input(e.to_string()))?,
                Target::Arff => {
                    let name = relation.unwrap_or_else(|| file_stem(&input.input));
                    loaded.db.to_arff(&name).to_arff_text()
                }
            };
            return write_out(out_file.as_deref(), &text, out);
        }
    };
    write_out(None, &text, out)
}

fn run(args: impl IntoIterator<Item = OsString>) -> Result<(), CliError> {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = write!(io::stdout(), "{e}");
            return Ok(());
        }
        Err(e) => return Err(CliError::Usage(e.render().to_string())),
    };
    let command = cli.command;
    match cli.threads {
        Some(n) => with_threads(n as usize, || execute(command, &mut io::stdout().lock()))
            .map_err(|e| CliError::Input(e.to_string()))?,
        None => execute(command, &mut io::stdout().lock()),
    }
}

fn main() -> ExitCode {
    match run(std::env::args_os()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = e.message().trim_end();
            if msg.starts_with("error:") {
                eprintln!("{msg}");
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(e.code())
        }
    }
}
