//! Command-line front end for the `scemb` pipeline.
//!
//! [`run`] is the whole program minus process plumbing, so tests drive it
//! with in-memory output streams.

use std::collections::HashSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use scemb::corpus::{self, CorpusStats};
use scemb::keywords::parse_keyword_list;
use scemb::similarity::{self, DEFAULT_CAP};
use scemb::trainer::Progress;
use scemb::{format, CleansingRules, Error, Language, RuleSet, Trainer, TrainingConfig};

/// Result of one invocation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CommandOutcome {
    /// 0 success, 1 user error, 2 internal error.
    pub exit_code: i32,
}

impl CommandOutcome {
    const SUCCESS: Self = CommandOutcome { exit_code: 0 };
    const USER_ERROR: Self = CommandOutcome { exit_code: 1 };
    const INTERNAL_ERROR: Self = CommandOutcome { exit_code: 2 };
}

#[derive(Debug, Parser)]
#[command(name = "scemb", version, about = "Source-code identifier embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cleanse every repository in a manifest into per-language corpus files
    Ingest {
        #[arg(long)]
        manifest: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        keywords: KeywordArgs,
    },
    /// Corpus statistics for a manifest
    Stats {
        #[arg(long)]
        manifest: PathBuf,
        #[command(flatten)]
        keywords: KeywordArgs,
    },
    /// Train a model on a cleansed corpus file
    Train(TrainArgs),
    /// Nearest neighbors of a word
    Nn {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        query: String,
        #[arg(long, default_value_t = 10)]
        k: usize,
    },
    /// Words closest to b - a + c
    Analogy {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        #[arg(long, default_value_t = 10)]
        k: usize,
    },
    /// Word Mover's Distance between two documents
    Wmd {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        doc1: PathBuf,
        #[arg(long)]
        doc2: PathBuf,
        /// Keep only the most frequent words of each document
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Treat the documents as source code in this language instead of
        /// whitespace-separated tokens
        #[arg(long)]
        lang: Option<Language>,
    },
    /// Write word vectors as text
    Export {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
struct KeywordArgs {
    /// Keyword list override, `LANG=FILE` or a FILE named after its language
    /// (e.g. `java.txt`); repeatable
    #[arg(long = "keywords", value_name = "[LANG=]FILE")]
    keywords: Vec<String>,
}

fn defaults() -> TrainingConfig {
    TrainingConfig::default()
}

#[derive(Debug, Args)]
struct TrainArgs {
    #[arg(long)]
    corpus: PathBuf,
    #[arg(long)]
    lang: Language,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = defaults().dim)]
    dim: u32,
    /// Context window; 4 for Python, 5 otherwise
    #[arg(long)]
    window: Option<u32>,
    #[arg(long, default_value_t = defaults().epochs)]
    epochs: u32,
    #[arg(long, default_value_t = defaults().minn)]
    minn: u32,
    #[arg(long, default_value_t = defaults().maxn)]
    maxn: u32,
    #[arg(long, default_value_t = defaults().neg)]
    neg: u32,
    #[arg(long, default_value_t = defaults().lr0)]
    lr: f64,
    #[arg(long = "min-count", default_value_t = defaults().min_count)]
    min_count: u32,
    /// Subsampling threshold
    #[arg(long = "t", default_value_t = defaults().subsample_t)]
    t: f64,
    #[arg(long, default_value_t = defaults().bucket_count)]
    bucket: u64,
    #[arg(long, default_value_t = defaults().threads)]
    threads: u32,
    #[arg(long, default_value_t = defaults().seed)]
    seed: u64,
    /// Print the resolved configuration as JSON and exit
    #[arg(long)]
    print_config: bool,
}

impl TrainArgs {
    fn config(&self) -> TrainingConfig {
        let base = TrainingConfig::for_language(self.lang);
        TrainingConfig {
            dim: self.dim,
            window: self.window.unwrap_or(base.window),
            epochs: self.epochs,
            minn: self.minn,
            maxn: self.maxn,
            neg: self.neg,
            lr0: self.lr,
            min_count: self.min_count,
            subsample_t: self.t,
            bucket_count: self.bucket,
            threads: self.threads,
            seed: self.seed,
            ..base
        }
    }
}

/// Failure of a subcommand, tagged with its exit class.
#[derive(Debug)]
enum Failure {
    User(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonFiniteLoss { .. } | Error::Solver(_) => Failure::Internal(e.to_string()),
            _ => Failure::User(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parse `argv` (without the program name) and run the subcommand.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut (dyn Write + Send)) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = std::iter::once(OsString::from("scemb")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    CommandOutcome::SUCCESS
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    CommandOutcome::USER_ERROR
                }
            };
        }
    };
    let result = dispatch(cli.command, stdout, stderr).and_then(|()| stdout.flush().map_err(io_failure));
    match result {
        Ok(()) => CommandOutcome::SUCCESS,
        Err(Failure::User(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            CommandOutcome::USER_ERROR
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(stderr, "internal error: {msg}");
            CommandOutcome::INTERNAL_ERROR
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::User(e.to_string())
}

fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut (dyn Write + Send)) -> Outcome {
    match command {
        Command::Ingest { manifest, out, keywords } => {
            let (entries, base) = load_manifest(&manifest)?;
            let rules = rule_set(&keywords)?;
            let report = corpus::ingest(&entries, &base, &rules, &out)?;
            let mut value = stats_json(&report.total);
            let languages: serde_json::Map<String, Value> = report
                .per_language
                .iter()
                .map(|(lang, (stats, path))| {
                    let mut v = stats_json(stats);
                    v["corpus"] = json!(path.display().to_string());
                    (lang.name().to_string(), v)
                })
                .collect();
            value["languages"] = Value::Object(languages);
            print_json(stdout, &value)
        }
        Command::Stats { manifest, keywords } => {
            let (entries, base) = load_manifest(&manifest)?;
            let rules = rule_set(&keywords)?;
            let stats = corpus::stats(&entries, &base, &rules)?;
            print_json(stdout, &stats_json(&stats))
        }
        Command::Train(args) => train(&args, stdout, stderr),
        Command::Nn { model, query, k } => {
            let model = format::load(&model)?;
            print_ranked(stdout, &model.nearest_neighbors(&query, k)?)
        }
        Command::Analogy { model, a, b, c, k } => {
            let model = format::load(&model)?;
            print_ranked(stdout, &model.analogy(&a, &b, &c, k)?)
        }
        Command::Wmd { model, doc1, doc2, cap, lang } => {
            let model = format::load(&model)?;
            let d1 = read_document(&doc1, lang, &model)?.capped(cap);
            let d2 = read_document(&doc2, lang, &model)?.capped(cap);
            let distance = similarity::wmd(&d1, &d2, &model)?;
            writeln!(stdout, "{distance}").map_err(io_failure)
        }
        Command::Export { model, out } => {
            let model = format::load(&model)?;
            format::export_text(&model, &out)?;
            Ok(())
        }
    }
}

fn train(args: &TrainArgs, stdout: &mut dyn Write, stderr: &mut (dyn Write + Send)) -> Outcome {
    let config = args.config();
    if args.print_config {
        return print_json(stdout, &config_json(&config));
    }
    config.validate()?;
    let text = fs::read_to_string(&args.corpus).map_err(|e| user_io(&args.corpus, e))?;
    let lines = corpus::read_corpus_lines(&text);
    if config.threads > 1 {
        let _ = writeln!(
            stderr,
            "note: training with {} threads is not deterministic; use --threads 1 for reproducible models",
            config.threads
        );
    }
    let log = Mutex::new(&mut *stderr);
    let report_progress = |p: &Progress| {
        if let Ok(mut w) = log.lock() {
            let _ = writeln!(
                w,
                "epoch {} tokens {}/{} lr {:.6} loss {:.4} {:.0} tok/s",
                p.epoch, p.tokens_processed, p.total_tokens, p.lr, p.loss, p.tokens_per_sec
            );
        }
    };
    let (model, report) = Trainer::new(config).with_progress(&report_progress).train(&lines)?;
    format::save(&model, &args.out)?;
    let summary = json!({
        "model": args.out.display().to_string(),
        "words": model.vocab().len(),
        "input_rows": model.input_matrix().rows(),
        "updates": report.updates,
        "epoch_losses": report.epoch_losses,
    });
    print_json(stdout, &summary)
}

fn user_io(path: &Path, e: std::io::Error) -> Failure {
    Failure::User(format!("{}: {e}", path.display()))
}

fn load_manifest(path: &Path) -> std::result::Result<(Vec<scemb::ManifestEntry>, PathBuf), Failure> {
    let text = fs::read_to_string(path).map_err(|e| user_io(path, e))?;
    let entries = corpus::parse_manifest(&text)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    Ok((entries, base))
}

fn rule_set(args: &KeywordArgs) -> std::result::Result<RuleSet, Failure> {
    let mut rules = RuleSet::default();
    for spec in &args.keywords {
        let (language, file) = match spec.split_once('=') {
            Some((lang, file)) => {
                let language = lang.parse::<Language>().map_err(|e| Failure::User(e.to_string()))?;
                (language, PathBuf::from(file))
            }
            None => {
                let file = PathBuf::from(spec);
                let stem = file.file_stem().and_then(|s| s.to_str()).unwrap_or_default();
                let language = stem.parse::<Language>().map_err(|_| {
                    Failure::User(format!("cannot tell the language of keyword file `{spec}`; use LANG=FILE"))
                })?;
                (language, file)
            }
        };
        let text = fs::read_to_string(&file).map_err(|e| user_io(&file, e))?;
        let set: HashSet<String> = parse_keyword_list(&text);
        rules = rules.with_override(CleansingRules::with_keywords(language, set));
    }
    Ok(rules)
}

fn read_document(path: &Path, lang: Option<Language>, model: &scemb::EmbeddingModel) -> std::result::Result<scemb::Document, Failure> {
    let text = fs::read_to_string(path).map_err(|e| user_io(path, e))?;
    let tokens: Vec<String> = match lang {
        Some(lang) => corpus::cleanse_source(&text, &CleansingRules::for_language(lang)),
        None => text.split_whitespace().map(str::to_string).collect(),
    };
    let label = path.display().to_string();
    similarity::nbow(&tokens, model, &label).map_err(|e| match e {
        Error::EmptyDocument => Failure::User(format!("{label}: no in-vocabulary words")),
        other => other.into(),
    })
}

fn stats_json(stats: &CorpusStats) -> Value {
    json!({
        "repos": stats.repo_count,
        "files": stats.file_count,
        "lines": stats.line_count,
        "clean_tokens": stats.clean_token_count,
    })
}

/// Resolved training configuration, keyed by the `train` flag names.
pub fn config_json(config: &TrainingConfig) -> Value {
    json!({
        "dim": config.dim,
        "window": config.window,
        "epochs": config.epochs,
        "minn": config.minn,
        "maxn": config.maxn,
        "neg": config.neg,
        "lr": config.lr0,
        "min_count": config.min_count,
        "t": config.subsample_t,
        "bucket": config.bucket_count,
        "threads": config.threads,
        "seed": config.seed,
    })
}

fn print_json(stdout: &mut dyn Write, value: &Value) -> Outcome {
    writeln!(stdout, "{value}").map_err(io_failure)
}

fn print_ranked(stdout: &mut dyn Write, ranked: &[(String, f32)]) -> Outcome {
    for (word, cos) in ranked {
        writeln!(stdout, "{word}\t{cos}").map_err(io_failure)?;
    }
    Ok(())
}
