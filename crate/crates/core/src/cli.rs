//! Report generation for the `bruhat-inv` command-line tool.
//!
//! Every command renders to a string so output can be compared byte for
//! byte. Machine-readable output is one JSON object per line; Hasse diagrams
//! can also be written in Graphviz DOT.
//!
//! Record fields:
//!
//! * element: `word, n, fixed_points, inv, exc, rank_in, rank_class`
//! * cover: `lower, upper, label`
//! * graded: `spec, n, classes, theorem, brute_force, agree, poset_height,
//!   rank_formula_agrees, poset_rank, global_rank_expression`
//! * chain: `kind, words, labels, length`
//! * el: `spec, order, status, violations, unlabelled, note`
//! * witness chain: `chain, words, compact, labels, fixed_points, length`
//!
//! Commands that verify something end with a summary line carrying
//! `command` and `status` (`pass` or `fail`).

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::chains::{all_saturated_chains, decreasing_chain, increasing_chain, Chain};
use crate::classes::{
    enumerate_class, global_rank_without_exceedances, gapped_counts_witness, is_graded_bruteforce,
    is_graded_theorem1, isolated_count_witness, rank_in_involutions, rank_value, FixedPointSpec,
    NonGradedWitness, WitnessChain,
};
use crate::el::{el_check, labelled_class_view, ElStatus, ElViolation, LabelOrder};
use crate::error::{Error, Result};
use crate::moves::RiseLabel;
use crate::perm::Permutation;

#[derive(Debug, Parser)]
#[command(name = "bruhat-inv", about = "Bruhat order on involutions of the symmetric group")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
#[group(required = true, multiple = false)]
pub struct ClassArgs {
    /// Comma-separated fixed-point counts, e.g. `0,2`.
    #[arg(long, value_delimiter = ',')]
    pub classes: Option<Vec<usize>>,
    /// Every fixed-point count (all of `I_n`); for `check-graded`, every
    /// nonempty set of counts.
    #[arg(long)]
    pub all_classes: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Jsonl,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainQuery {
    Increasing,
    Decreasing,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    StandardLex,
    ReversedLex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One record per element of F_n^A.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        classes: ClassArgs,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
    },
    /// Hasse diagram of F_n^A; edges that are I_n covers carry their label.
    Hasse {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        classes: ClassArgs,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Compares the shape criterion with brute force, and the rank formula
    /// with brute-force ranks.
    CheckGraded {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        classes: ClassArgs,
    },
    /// Saturated chains of I_n between two involutions.
    Chains {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        from: Permutation,
        #[arg(long)]
        to: Permutation,
        #[arg(long, value_enum, default_value = "all")]
        kind: ChainQuery,
    },
    /// EL check of the labelled class poset.
    ElVerify {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        classes: ClassArgs,
        /// Defaults to reversed-lex for fixed-point-free classes and
        /// standard-lex otherwise.
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
    },
    /// Non-gradedness witnesses: `--prop 19` (an isolated count `i`) or
    /// `--prop 20` (a gap between `i-2` and `i+2m`).
    Counterexample {
        #[arg(long)]
        prop: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        m: Option<usize>,
    },
}

/// Rendered output and whether every embedded verification passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub ok: bool,
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Enumerate { n, classes, format } => {
            let spec = class_spec(*n, classes)?;
            match format {
                Format::Jsonl => Ok(enumerate(&spec)),
                Format::Dot => Err(Error::InvalidParameters("enumerate only writes jsonl".into())),
            }
        }
        Command::Hasse { n, classes, format } => Ok(hasse(&class_spec(*n, classes)?, *format)),
        Command::CheckGraded { n, classes } => {
            let specs = if classes.all_classes {
                FixedPointSpec::all_for(*n)?
            } else {
                vec![class_spec(*n, classes)?]
            };
            Ok(check_graded(&specs))
        }
        Command::Chains { n, from, to, kind } => {
            if from.n() != *n || to.n() != *n {
                return Err(Error::InvalidParameters(format!("--from and --to must have size {n}")));
            }
            chains(from, to, *kind)
        }
        Command::ElVerify { n, classes, order } => {
            let spec = class_spec(*n, classes)?;
            let order = order.map(|o| match o {
                OrderArg::StandardLex => LabelOrder::StandardLex,
                OrderArg::ReversedLex => LabelOrder::ReversedLex,
            });
            Ok(el_verify(&spec, order))
        }
        Command::Counterexample { prop, n, i, m } => counterexample(*prop, *n, *i, *m),
    }
}

fn class_spec(n: usize, classes: &ClassArgs) -> Result<FixedPointSpec> {
    match &classes.classes {
        Some(counts) => FixedPointSpec::new(n, counts.iter().copied()),
        None => FixedPointSpec::all_involutions(n),
    }
}

fn push_line<T: Serialize>(out: &mut String, record: &T) {
    out.push_str(&serde_json::to_string(record).expect("records serialize"));
    out.push('\n');
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub command: String,
    pub status: String,
}

fn summary(out: &mut String, command: &str, ok: bool) {
    push_line(
        out,
        &Summary {
            command: command.into(),
            status: if ok { "pass" } else { "fail" }.into(),
        },
    );
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub word: Permutation,
    pub n: usize,
    pub fixed_points: usize,
    pub inv: usize,
    pub exc: usize,
    pub rank_in: usize,
    pub rank_class: Option<usize>,
}

impl ElementRecord {
    pub fn new(p: &Permutation, spec: &FixedPointSpec) -> Self {
        ElementRecord {
            word: *p,
            n: p.n(),
            fixed_points: p.fixed_point_count(),
            inv: p.inversions(),
            exc: p.exceedances(),
            rank_in: rank_in_involutions(p).expect("class members are involutions"),
            rank_class: rank_value(p, spec).ok(),
        }
    }
}

pub fn enumerate(spec: &FixedPointSpec) -> Outcome {
    let mut output = String::new();
    for p in enumerate_class(spec) {
        push_line(&mut output, &ElementRecord::new(&p, spec));
    }
    Outcome { output, ok: true }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverRecord {
    pub lower: Permutation,
    pub upper: Permutation,
    pub label: Option<RiseLabel>,
}

pub fn hasse(spec: &FixedPointSpec, format: Format) -> Outcome {
    let view = labelled_class_view(spec);
    let mut output = String::new();
    match format {
        Format::Dot => {
            let _ = writeln!(output, "digraph \"{spec}\" {{");
            output.push_str("  rankdir=BT;\n");
            for p in view.elements() {
                let _ = writeln!(output, "  \"{p}\" [fixed_points={}];", p.fixed_point_count());
            }
            for c in view.covers() {
                let (lower, upper) = (view.element(c.lower), view.element(c.upper));
                match c.label {
                    Some(l) => {
                        let _ = writeln!(output, "  \"{lower}\" -> \"{upper}\" [label=\"{l}\"];");
                    }
                    None => {
                        let _ = writeln!(output, "  \"{lower}\" -> \"{upper}\" [style=dashed];");
                    }
                }
            }
            output.push_str("}\n");
        }
        Format::Jsonl => {
            for c in view.covers() {
                push_line(
                    &mut output,
                    &CoverRecord {
                        lower: *view.element(c.lower),
                        upper: *view.element(c.upper),
                        label: c.label,
                    },
                );
            }
        }
    }
    Outcome { output, ok: true }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GradedRecord {
    pub spec: String,
    pub n: usize,
    pub classes: Vec<usize>,
    pub theorem: bool,
    pub brute_force: bool,
    pub agree: bool,
    /// Length of the maximal chains (brute force), when graded.
    pub poset_height: Option<usize>,
    /// The element rank formula matches brute force on every element.
    pub rank_formula_agrees: Option<bool>,
    /// Rank of the maximum under the element rank formula.
    pub poset_rank: Option<usize>,
    /// The closed global expression that leaves out `exc` of the maximum;
    /// shown for comparison only.
    pub global_rank_expression: Option<f64>,
}

pub fn graded_record(spec: &FixedPointSpec) -> GradedRecord {
    let view = crate::classes::class_view(spec);
    let brute = is_graded_bruteforce(&view);
    let theorem = is_graded_theorem1(spec);
    let rank_formula_agrees = brute.rank_map.as_ref().filter(|_| theorem).map(|ranks| {
        view.elements()
            .iter()
            .zip(ranks)
            .all(|(p, &r)| rank_value(p, spec).ok() == Some(r))
    });
    GradedRecord {
        spec: spec.to_string(),
        n: spec.n(),
        classes: spec.counts().iter().copied().collect(),
        theorem,
        brute_force: brute.graded,
        agree: theorem == brute.graded,
        poset_height: brute.height(),
        rank_formula_agrees,
        poset_rank: crate::classes::poset_rank(spec).ok(),
        global_rank_expression: if brute.graded {
            global_rank_without_exceedances(spec)
        } else {
            None
        },
    }
}

pub fn check_graded(specs: &[FixedPointSpec]) -> Outcome {
    let mut output = String::new();
    let mut ok = true;
    for spec in specs {
        let record = graded_record(spec);
        ok &= record.agree && record.rank_formula_agrees != Some(false);
        ok &= record.poset_height.is_none() || record.poset_height == record.poset_rank;
        push_line(&mut output, &record);
    }
    summary(&mut output, "check-graded", ok);
    Outcome { output, ok }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRecord {
    pub kind: ChainQuery,
    pub words: Vec<Permutation>,
    pub labels: Vec<RiseLabel>,
    pub length: usize,
}

impl ChainRecord {
    fn new(kind: ChainQuery, chain: &Chain) -> Self {
        ChainRecord {
            kind,
            words: chain.elements.clone(),
            labels: chain.labels.clone(),
            length: chain.len(),
        }
    }
}

pub fn chains(from: &Permutation, to: &Permutation, kind: ChainQuery) -> Result<Outcome> {
    let found = match kind {
        ChainQuery::Increasing => vec![increasing_chain(from, to)?],
        ChainQuery::Decreasing => vec![decreasing_chain(from, to)?],
        ChainQuery::All => all_saturated_chains(from, to)?,
    };
    let mut output = String::new();
    for chain in &found {
        push_line(&mut output, &ChainRecord::new(kind, chain));
    }
    Ok(Outcome { output, ok: true })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElRecord {
    pub spec: String,
    pub order: LabelOrder,
    pub status: ElStatus,
    pub violations: Vec<ElViolation>,
    pub unlabelled: Vec<(Permutation, Permutation)>,
    pub note: Option<String>,
}

pub fn el_verify(spec: &FixedPointSpec, order: Option<LabelOrder>) -> Outcome {
    let order = order.unwrap_or(if spec.counts().iter().all(|&a| a == 0) {
        LabelOrder::ReversedLex
    } else {
        LabelOrder::StandardLex
    });
    let view = labelled_class_view(spec);
    let record = match el_check(&view, order) {
        Ok(check) => ElRecord {
            spec: spec.to_string(),
            order,
            status: check.status,
            violations: check.violations,
            unlabelled: check.unlabelled,
            note: None,
        },
        Err(e @ (Error::NotGraded | Error::NotBounded)) => ElRecord {
            spec: spec.to_string(),
            order,
            status: ElStatus::NotApplicable,
            violations: Vec::new(),
            unlabelled: Vec::new(),
            note: Some(e.to_string()),
        },
        Err(e) => unreachable!("el_check only rejects the poset shape: {e}"),
    };
    let ok = record.status != ElStatus::NotEl;
    let mut output = String::new();
    push_line(&mut output, &record);
    summary(&mut output, "el-verify", ok);
    Outcome { output, ok }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessHeader {
    pub prop: u32,
    pub spec: String,
    pub bottom: Permutation,
    pub top: Permutation,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessChainRecord {
    pub chain: String,
    pub words: Vec<Permutation>,
    /// Digit form of each word when `n <= 9`.
    pub compact: Option<Vec<String>>,
    /// `I_n` label of each step, `null` where the step is not an `I_n` cover.
    pub labels: Vec<Option<RiseLabel>>,
    pub fixed_points: Vec<usize>,
    pub length: usize,
}

impl WitnessChainRecord {
    fn new(name: &str, chain: &WitnessChain) -> Self {
        WitnessChainRecord {
            chain: name.into(),
            words: chain.elements.clone(),
            compact: chain.elements.iter().map(Permutation::compact).collect(),
            labels: chain.labels.clone(),
            fixed_points: chain.fixed_point_profile(),
            length: chain.len(),
        }
    }
}

pub fn counterexample(prop: u32, n: usize, i: usize, m: Option<usize>) -> Result<Outcome> {
    let witness: NonGradedWitness = match (prop, m) {
        (19, None) => isolated_count_witness(n, i)?,
        (20, Some(m)) => gapped_counts_witness(n, i, m)?,
        (19, Some(_)) => return Err(Error::InvalidParameters("--m is not used with --prop 19".into())),
        (20, None) => return Err(Error::InvalidParameters("--prop 20 needs --m".into())),
        _ => return Err(Error::InvalidParameters(format!("--prop must be 19 or 20, got {prop}"))),
    };
    let ok = witness.verified && witness.long_chain.len() != witness.short_chain.len();
    let mut output = String::new();
    push_line(
        &mut output,
        &WitnessHeader {
            prop,
            spec: witness.spec.to_string(),
            bottom: witness.bottom,
            top: witness.top,
            verified: witness.verified,
        },
    );
    push_line(&mut output, &WitnessChainRecord::new("long", &witness.long_chain));
    push_line(&mut output, &WitnessChainRecord::new("short", &witness.short_chain));
    summary(&mut output, "counterexample", ok);
    Ok(Outcome { output, ok })
}
