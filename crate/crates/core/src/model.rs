//! Trained embeddings and the query layer built on them.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::vocab::{TrainingConfig, Vocabulary};

#[derive(Clone, Debug, PartialEq)]
pub struct WordVector {
    pub word: String,
    pub values: Vec<f32>,
}

/// Input matrix (word rows followed by n-gram bucket rows), output matrix
/// (one row per word), and the vocabulary and configuration behind them.
#[derive(Debug)]
pub struct EmbeddingModel {
    config: TrainingConfig,
    vocab: Vocabulary,
    input: Matrix,
    output: Matrix,
    unit_vectors: OnceLock<Matrix>,
}

impl Clone for EmbeddingModel {
    fn clone(&self) -> Self {
        EmbeddingModel::new(self.config.clone(), self.vocab.clone(), self.input.clone(), self.output.clone())
            .expect("consistent model")
    }
}

impl PartialEq for EmbeddingModel {
    fn eq(&self, other: &Self) -> bool {
        self.config == other.config
            && self.vocab.words() == other.vocab.words()
            && self.vocab.total_tokens() == other.vocab.total_tokens()
            && self.input == other.input
            && self.output == other.output
    }
}

impl EmbeddingModel {
    pub fn new(config: TrainingConfig, vocab: Vocabulary, input: Matrix, output: Matrix) -> Result<Self> {
        let dim = config.dim as usize;
        if input.cols() != dim || output.cols() != dim {
            return Err(Error::Format(format!(
                "matrix width {}/{} does not match dim {dim}",
                input.cols(),
                output.cols()
            )));
        }
        if input.rows() != vocab.input_rows() || output.rows() != vocab.len() {
            return Err(Error::Format(format!(
                "matrix shapes {}x{dim} / {}x{dim} do not match vocabulary of {} words and {} input rows",
                input.rows(),
                output.rows(),
                vocab.len(),
                vocab.input_rows()
            )));
        }
        Ok(EmbeddingModel {
            config,
            vocab,
            input,
            output,
            unit_vectors: OnceLock::new(),
        })
    }

    pub fn config(&self) -> &TrainingConfig {
        &self.config
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn input_matrix(&self) -> &Matrix {
        &self.input
    }

    pub fn output_matrix(&self) -> &Matrix {
        &self.output
    }

    pub fn dim(&self) -> usize {
        self.config.dim as usize
    }

    /// Mutable access to both matrices. Invalidates cached query vectors.
    pub fn matrices_mut(&mut self) -> (&mut Matrix, &mut Matrix) {
        self.unit_vectors = OnceLock::new();
        (&mut self.input, &mut self.output)
    }

    pub fn is_finite(&self) -> bool {
        self.input.as_slice().iter().chain(self.output.as_slice()).all(|x| x.is_finite())
    }

    fn mean_of_rows(&self, rows: &[usize]) -> Vec<f32> {
        let mut v = vec![0f32; self.dim()];
        if rows.is_empty() {
            return v;
        }
        for &r in rows {
            for (acc, x) in v.iter_mut().zip(self.input.row(r)) {
                *acc += x;
            }
        }
        let scale = 1.0 / rows.len() as f32;
        v.iter_mut().for_each(|x| *x *= scale);
        v
    }

    /// Mean of the input rows composing `word`. Defined for unseen words
    /// through their character n-grams.
    pub fn word_vector(&self, word: &str) -> Result<WordVector> {
        let rows = self.vocab.subword_ids(word)?;
        Ok(WordVector {
            word: word.to_string(),
            values: self.mean_of_rows(&rows),
        })
    }

    /// Composed vector of an in-vocabulary id.
    pub fn id_vector(&self, id: usize) -> Vec<f32> {
        self.mean_of_rows(self.vocab.rows_for_id(id))
    }

    fn unit_vectors(&self) -> &Matrix {
        self.unit_vectors.get_or_init(|| {
            let dim = self.dim();
            let mut m = Matrix::zeros(self.vocab.len(), dim);
            for id in 0..self.vocab.len() {
                let mut v = self.id_vector(id);
                normalize(&mut v);
                m.row_mut(id).copy_from_slice(&v);
            }
            m
        })
    }

    fn rank(&self, query: &[f32], exclude: &[usize], k: usize) -> Result<Vec<(String, f32)>> {
        if self.vocab.is_empty() {
            return Err(Error::EmptyVocabulary);
        }
        let mut q = query.to_vec();
        normalize(&mut q);
        let units = self.unit_vectors();
        let mut scored: Vec<(usize, f32)> = (0..self.vocab.len())
            .filter(|id| !exclude.contains(id))
            .map(|id| (id, dot(&q, units.row(id)).clamp(-1.0, 1.0)))
            .collect();
        let by_score = |a: &(usize, f32), b: &(usize, f32)| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0));
        if scored.len() > k && k > 0 {
            scored.select_nth_unstable_by(k - 1, by_score);
            scored.truncate(k);
        }
        scored.sort_by(by_score);
        scored.truncate(k);
        Ok(scored
            .into_iter()
            .map(|(id, cos)| (self.vocab.word(id).to_string(), cos))
            .collect())
    }

    /// The `k` vocabulary words most cosine-similar to `query`, excluding the
    /// query itself. Ties go to the lower id.
    pub fn nearest_neighbors(&self, query: &str, k: usize) -> Result<Vec<(String, f32)>> {
        let v = self.word_vector(query)?;
        let exclude: Vec<usize> = self.vocab.id(query).into_iter().collect();
        self.rank(&v.values, &exclude, k)
    }

    /// Words closest to `b - a + c`, excluding the three inputs.
    pub fn analogy(&self, a: &str, b: &str, c: &str, k: usize) -> Result<Vec<(String, f32)>> {
        let va = self.word_vector(a)?.values;
        let vb = self.word_vector(b)?.values;
        let vc = self.word_vector(c)?.values;
        let target: Vec<f32> = va.iter().zip(&vb).zip(&vc).map(|((a, b), c)| b - a + c).collect();
        let exclude: Vec<usize> = [a, b, c].iter().filter_map(|w| self.vocab.id(w)).collect();
        self.rank(&target, &exclude, k)
    }
}

pub(crate) fn dot(a: &[f32], b: &[f32]) -> f32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f32]) {
    let norm = dot(v, v).sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
}

/// Cosine similarity; zero when either vector is zero.
pub fn cosine(a: &[f32], b: &[f32]) -> f32 {
    let na = dot(a, a).sqrt();
    let nb = dot(b, b).sqrt();
    if na == 0.0 || nb == 0.0 {
        return 0.0;
    }
    (dot(a, b) / (na * nb)).clamp(-1.0, 1.0)
}
