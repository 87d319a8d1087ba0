//! Manifest-driven corpus ingestion.
//!
//! A manifest lists local repository roots with their language. Files are
//! discovered by extension in sorted order, lexed, cleansed, and written as
//! one line of space-separated words per source file.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::{BufWriter, Write};
use std::ops::{Add, AddAssign};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use walkdir::WalkDir;

use crate::cleanse::CleansingRules;
use crate::error::{Error, Result};
use crate::lexer::tokenize;
use crate::Language;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifestEntry {
    pub path: String,
    pub language: Language,
}

/// Parse a `path,language` manifest. Blank lines and `#` comments are skipped.
pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: &str| Error::Manifest {
            line: idx + 1,
            message: message.to_string(),
        };
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(err("expected `path,language`"));
        }
        if fields[0].is_empty() {
            return Err(err("empty path"));
        }
        let language = fields[1].parse().map_err(|_| err("unknown language"))?;
        entries.push(ManifestEntry {
            path: fields[0].to_string(),
            language,
        });
    }
    Ok(entries)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Discovery {
    pub files: Vec<PathBuf>,
    /// Directory entries that could not be read during the walk.
    pub skipped: usize,
}

/// Regular files under `root` whose extension belongs to `language`, sorted.
pub fn discover_files(root: &Path, language: Language) -> Result<Discovery> {
    fs::read_dir(root).map_err(|e| Error::io(root, e))?;
    let exts = language.extensions();
    let mut discovery = Discovery::default();
    for entry in WalkDir::new(root).follow_links(false) {
        let entry = match entry {
            Ok(entry) => entry,
            Err(e) => {
                log::warn!("skipping unreadable entry: {e}");
                discovery.skipped += 1;
                continue;
            }
        };
        if !entry.file_type().is_file() {
            continue;
        }
        let matches = entry
            .path()
            .extension()
            .and_then(|e| e.to_str())
            .is_some_and(|e| exts.contains(&e));
        if matches {
            discovery.files.push(entry.into_path());
        }
    }
    discovery.files.sort();
    Ok(discovery)
}

/// Table-I style corpus summary.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CorpusStats {
    pub repo_count: u64,
    pub file_count: u64,
    pub line_count: u64,
    pub clean_token_count: u64,
    /// Files that were discovered but could not be read.
    pub skipped_files: u64,
}

impl Add for CorpusStats {
    type Output = CorpusStats;

    fn add(self, o: CorpusStats) -> CorpusStats {
        CorpusStats {
            repo_count: self.repo_count + o.repo_count,
            file_count: self.file_count + o.file_count,
            line_count: self.line_count + o.line_count,
            clean_token_count: self.clean_token_count + o.clean_token_count,
            skipped_files: self.skipped_files + o.skipped_files,
        }
    }
}

impl AddAssign for CorpusStats {
    fn add_assign(&mut self, o: CorpusStats) {
        *self = *self + o;
    }
}

/// Cleansing rules for every language, defaulting to the bundled keyword lists.
#[derive(Clone, Debug)]
pub struct RuleSet {
    rules: HashMap<Language, CleansingRules>,
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet {
            rules: Language::ALL
                .iter()
                .map(|&l| (l, CleansingRules::for_language(l)))
                .collect(),
        }
    }
}

impl RuleSet {
    pub fn with_override(mut self, rules: CleansingRules) -> Self {
        self.rules.insert(rules.language(), rules);
        self
    }

    pub fn get(&self, language: Language) -> &CleansingRules {
        &self.rules[&language]
    }
}

/// Number of physical lines in `text`.
pub fn physical_lines(text: &str) -> u64 {
    let newlines = text.bytes().filter(|&b| b == b'\n').count() as u64;
    if !text.is_empty() && !text.ends_with('\n') {
        newlines + 1
    } else {
        newlines
    }
}

/// Read a source file, replacing invalid UTF-8.
pub fn read_source(path: &Path) -> std::io::Result<String> {
    let bytes = fs::read(path)?;
    Ok(match String::from_utf8(bytes) {
        Ok(s) => s,
        Err(e) => String::from_utf8_lossy(e.as_bytes()).into_owned(),
    })
}

/// Cleansed words of one source text, space-joined.
pub fn cleanse_source(source: &str, rules: &CleansingRules) -> Vec<String> {
    let tokens = tokenize(source, rules.language());
    rules.cleanse(&tokens).into_iter().map(str::to_string).collect()
}

struct FileOutput {
    lines: u64,
    words: Vec<String>,
}

fn resolve(base: &Path, entry: &ManifestEntry) -> PathBuf {
    let p = Path::new(&entry.path);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

/// Process one repository: every matching file, in sorted order, cleansed.
/// Files that cannot be read yield `None`.
fn process_repo(root: &Path, rules: &CleansingRules) -> Result<(Vec<Option<FileOutput>>, usize)> {
    let discovery = discover_files(root, rules.language())?;
    let outputs = discovery
        .files
        .par_iter()
        .map(|path| match read_source(path) {
            Ok(text) => Some(FileOutput {
                lines: physical_lines(&text),
                words: cleanse_source(&text, rules),
            }),
            Err(e) => {
                log::warn!("skipping {}: {e}", path.display());
                None
            }
        })
        .collect();
    Ok((outputs, discovery.skipped))
}

/// Walk the manifest, handing each file's cleansed words to `sink` in order.
fn walk_manifest<F>(entries: &[ManifestEntry], base: &Path, rules: &RuleSet, mut sink: F) -> Result<CorpusStats>
where
    F: FnMut(Language, &[String]) -> Result<()>,
{
    let mut stats = CorpusStats::default();
    for entry in entries {
        let root = resolve(base, entry);
        let (outputs, skipped) = process_repo(&root, rules.get(entry.language))?;
        stats.repo_count += 1;
        stats.skipped_files += skipped as u64;
        for out in outputs {
            match out {
                Some(out) => {
                    stats.file_count += 1;
                    stats.line_count += out.lines;
                    stats.clean_token_count += out.words.len() as u64;
                    sink(entry.language, &out.words)?;
                }
                None => stats.skipped_files += 1,
            }
        }
    }
    Ok(stats)
}

/// Corpus statistics. Relative manifest paths resolve against `base`.
pub fn stats(entries: &[ManifestEntry], base: &Path, rules: &RuleSet) -> Result<CorpusStats> {
    walk_manifest(entries, base, rules, |_, _| Ok(()))
}

/// Write the training corpus for `entries` (all treated as one stream) to `out`.
pub fn write_corpus<W: Write>(entries: &[ManifestEntry], base: &Path, rules: &RuleSet, out: &mut W) -> Result<CorpusStats> {
    walk_manifest(entries, base, rules, |_, words| {
        writeln!(out, "{}", words.join(" "))?;
        Ok(())
    })
}

#[derive(Clone, Debug, Default)]
pub struct IngestReport {
    pub total: CorpusStats,
    pub per_language: BTreeMap<Language, (CorpusStats, PathBuf)>,
}

/// Write one consolidated `<language>.txt` corpus per manifest language into `out_dir`.
pub fn ingest(entries: &[ManifestEntry], base: &Path, rules: &RuleSet, out_dir: &Path) -> Result<IngestReport> {
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let mut report = IngestReport::default();
    for lang in Language::ALL {
        let subset: Vec<ManifestEntry> = entries.iter().filter(|e| e.language == lang).cloned().collect();
        if subset.is_empty() {
            continue;
        }
        let path = out_dir.join(format!("{}.txt", lang.file_stem()));
        let file = fs::File::create(&path).map_err(|e| Error::io(&path, e))?;
        let mut out = BufWriter::new(file);
        let stats = write_corpus(&subset, base, rules, &mut out)?;
        out.flush().map_err(|e| Error::io(&path, e))?;
        report.total += stats;
        report.per_language.insert(lang, (stats, path));
    }
    Ok(report)
}

/// Split a training corpus into lines of words. Empty lines are kept so line
/// numbers match source files.
pub fn read_corpus_lines(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect()
}
