//! Training dictionary: word counts, subsampling, negative sampling, and
//! character n-gram buckets.

use std::collections::HashMap;

use rand::Rng;
use rand_distr::weighted::WeightedAliasIndex;
use rand_distr::Distribution;

use crate::error::{Error, Result};
use crate::Language;

const BOW: char = '<';
const EOW: char = '>';

/// Exponent applied to word counts for the negative-sampling distribution.
pub const NEG_POWER: f64 = 0.75;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    SkipGram,
}

/// Hyperparameters of a training run.
///
/// `Default` is the reference configuration (skip-gram, 100 dimensions,
/// 20 epochs, character n-grams of length 3 to 6, window 5); use
/// [`TrainingConfig::for_language`] to get the per-language window.
#[derive(Clone, Debug, PartialEq)]
pub struct TrainingConfig {
    pub dim: u32,
    pub window: u32,
    pub epochs: u32,
    pub minn: u32,
    /// Zero disables subword n-grams.
    pub maxn: u32,
    pub neg: u32,
    pub lr0: f64,
    pub min_count: u32,
    /// Subsampling threshold; zero disables subsampling.
    pub subsample_t: f64,
    pub bucket_count: u64,
    pub mode: Mode,
    pub threads: u32,
    pub seed: u64,
}

impl Default for TrainingConfig {
    fn default() -> Self {
        TrainingConfig {
            dim: 100,
            window: 5,
            epochs: 20,
            minn: 3,
            maxn: 6,
            neg: 5,
            lr0: 0.05,
            min_count: 5,
            subsample_t: 1e-4,
            bucket_count: 2_000_000,
            mode: Mode::SkipGram,
            threads: 1,
            seed: 0,
        }
    }
}

impl TrainingConfig {
    pub fn for_language(language: Language) -> Self {
        TrainingConfig {
            window: language.default_window(),
            ..TrainingConfig::default()
        }
    }

    pub fn subwords_enabled(&self) -> bool {
        self.maxn > 0
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::Config(msg.to_string()));
        if self.dim == 0 {
            return fail("dim must be positive");
        }
        if self.window == 0 {
            return fail("window must be at least 1");
        }
        if self.epochs == 0 {
            return fail("epochs must be at least 1");
        }
        if self.neg == 0 {
            return fail("neg must be at least 1");
        }
        if !(self.lr0 > 0.0 && self.lr0.is_finite()) {
            return fail("lr must be positive");
        }
        if !(self.subsample_t >= 0.0 && self.subsample_t.is_finite()) {
            return fail("subsampling threshold must be non-negative");
        }
        if self.threads == 0 {
            return fail("threads must be at least 1");
        }
        if self.subwords_enabled() {
            if self.minn == 0 || self.minn > self.maxn {
                return fail("n-gram lengths must satisfy 0 < minn <= maxn");
            }
            if self.bucket_count == 0 {
                return fail("bucket count must be positive when subwords are enabled");
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VocabWord {
    pub text: String,
    pub count: u64,
}

/// Word-count distribution raised to [`NEG_POWER`], sampled with an alias table.
#[derive(Clone, Debug)]
pub struct NegativeSampler {
    probs: Vec<f64>,
    alias: WeightedAliasIndex<f64>,
}

impl NegativeSampler {
    pub fn new(counts: &[u64]) -> Self {
        let weights: Vec<f64> = counts.iter().map(|&c| (c as f64).powf(NEG_POWER)).collect();
        let total: f64 = weights.iter().sum();
        let probs = weights.iter().map(|w| w / total).collect();
        let alias = WeightedAliasIndex::new(weights).expect("positive counts");
        NegativeSampler { probs, alias }
    }

    /// Probability of drawing each word id.
    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        self.alias.sample(rng)
    }

    /// Draw a word id different from `positive` (unless it is the only word).
    pub fn sample_excluding<R: Rng + ?Sized>(&self, rng: &mut R, positive: usize) -> usize {
        if self.probs.len() < 2 {
            return self.sample(rng);
        }
        loop {
            let id = self.sample(rng);
            if id != positive {
                return id;
            }
        }
    }
}

/// Probability of keeping a token of relative frequency `freq` under threshold `t`.
pub fn keep_probability(freq: f64, t: f64) -> f64 {
    if t <= 0.0 || freq <= 0.0 {
        return 1.0;
    }
    let r = t / freq;
    (r.sqrt() + r).min(1.0)
}

/// Training dictionary. Ids are dense and ordered by descending count, with
/// ties broken by first occurrence.
#[derive(Clone, Debug)]
pub struct Vocabulary {
    words: Vec<VocabWord>,
    index: HashMap<String, usize>,
    total_tokens: u64,
    keep_prob: Vec<f64>,
    negatives: NegativeSampler,
    bucket_count: u64,
    minn: u32,
    maxn: u32,
    subwords: Vec<Vec<usize>>,
}

impl Vocabulary {
    /// Build from already-pruned, ordered words. `total_tokens` is the size of
    /// the full corpus the counts were taken from.
    pub fn from_counts(words: Vec<VocabWord>, total_tokens: u64, config: &TrainingConfig) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::EmptyVocabulary);
        }
        let mut index = HashMap::with_capacity(words.len());
        for (id, w) in words.iter().enumerate() {
            if w.count == 0 || index.insert(w.text.clone(), id).is_some() {
                return Err(Error::Format(format!("invalid vocabulary entry `{}`", w.text)));
            }
        }
        let keep_prob = words
            .iter()
            .map(|w| keep_probability(w.count as f64 / total_tokens.max(1) as f64, config.subsample_t))
            .collect();
        let counts: Vec<u64> = words.iter().map(|w| w.count).collect();
        let negatives = NegativeSampler::new(&counts);
        let mut vocab = Vocabulary {
            words,
            index,
            total_tokens,
            keep_prob,
            negatives,
            bucket_count: config.bucket_count,
            minn: config.minn,
            maxn: config.maxn,
            subwords: Vec::new(),
        };
        vocab.subwords = (0..vocab.words.len())
            .map(|id| {
                let mut rows = vec![id];
                rows.extend(vocab.ngram_rows(&vocab.words[id].text));
                rows
            })
            .collect();
        Ok(vocab)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[VocabWord] {
        &self.words
    }

    pub fn word(&self, id: usize) -> &str {
        &self.words[id].text
    }

    pub fn id(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn total_tokens(&self) -> u64 {
        self.total_tokens
    }

    /// Sum of retained word counts.
    pub fn retained_tokens(&self) -> u64 {
        self.words.iter().map(|w| w.count).sum()
    }

    pub fn keep_prob(&self, id: usize) -> f64 {
        self.keep_prob[id]
    }

    pub fn negatives(&self) -> &NegativeSampler {
        &self.negatives
    }

    pub fn bucket_count(&self) -> u64 {
        self.bucket_count
    }

    /// Rows of the input matrix (words plus n-gram buckets).
    pub fn input_rows(&self) -> usize {
        let buckets = if self.maxn > 0 { self.bucket_count as usize } else { 0 };
        self.words.len() + buckets
    }

    fn ngram_rows(&self, word: &str) -> Vec<usize> {
        if self.maxn == 0 {
            return Vec::new();
        }
        let base = self.words.len();
        extract_ngrams(word, self.minn, self.maxn)
            .iter()
            .map(|g| base + hash_ngram(g, self.bucket_count) as usize)
            .collect()
    }

    /// Input-matrix rows composing `word`: its own row (if known) followed by
    /// its n-gram bucket rows.
    pub fn subword_ids(&self, word: &str) -> Result<Vec<usize>> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(match self.id(word) {
            Some(id) => self.subwords[id].clone(),
            None => self.ngram_rows(word),
        })
    }

    /// Cached input rows for an in-vocabulary id.
    pub fn rows_for_id(&self, id: usize) -> &[usize] {
        &self.subwords[id]
    }
}

/// Count `corpus` and build the vocabulary for `config`.
pub fn build_vocab<I, S>(corpus: I, config: &TrainingConfig) -> Result<Vocabulary>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut counts: HashMap<String, (u64, usize)> = HashMap::new();
    let mut total = 0u64;
    for word in corpus {
        let word = word.as_ref();
        let next = counts.len();
        match counts.get_mut(word) {
            Some(entry) => entry.0 += 1,
            None => {
                counts.insert(word.to_string(), (1, next));
            }
        }
        total += 1;
    }
    let mut entries: Vec<(String, u64, usize)> = counts
        .into_iter()
        .filter(|(_, (c, _))| *c >= config.min_count as u64)
        .map(|(w, (c, first))| (w, c, first))
        .collect();
    entries.sort_by(|a, b| b.1.cmp(&a.1).then(a.2.cmp(&b.2)));
    let words = entries
        .into_iter()
        .map(|(text, count, _)| VocabWord { text, count })
        .collect();
    Vocabulary::from_counts(words, total, config)
}

/// Character n-grams of `<word>` with lengths in `minn..=maxn`, shortest
/// first and left to right within a length. The full bracketed word is not
/// included.
pub fn extract_ngrams(word: &str, minn: u32, maxn: u32) -> Vec<String> {
    if maxn == 0 || minn == 0 {
        return Vec::new();
    }
    let wrapped: Vec<char> = std::iter::once(BOW).chain(word.chars()).chain(std::iter::once(EOW)).collect();
    let len = wrapped.len();
    let mut out = Vec::new();
    for n in minn as usize..=(maxn as usize).min(len) {
        for start in 0..=len - n {
            if n == len {
                continue;
            }
            out.push(wrapped[start..start + n].iter().collect());
        }
    }
    out
}

/// 32-bit FNV-1a over the UTF-8 bytes of `s`.
pub fn fnv1a_32(s: &str) -> u32 {
    let mut h: u32 = 2_166_136_261;
    for &b in s.as_bytes() {
        h ^= b as u32;
        h = h.wrapping_mul(16_777_619);
    }
    h
}

pub fn hash_ngram(ngram: &str, bucket_count: u64) -> u64 {
    fnv1a_32(ngram) as u64 % bucket_count
}
