//! Word Mover's Distance between bag-of-words documents.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::EmbeddingModel;
use crate::transport::{self, TransportPlan};

/// Default number of heaviest words kept per document before an exact solve.
pub const DEFAULT_CAP: usize = 500;

/// Normalized bag of words over a model vocabulary.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    /// `(word id, weight)`, sorted by id; weights are positive and sum to one.
    pub entries: Vec<(usize, f64)>,
    pub source_label: String,
}

impl Document {
    /// Build from raw `(id, count)` pairs, normalizing the weights.
    pub fn from_counts(counts: impl IntoIterator<Item = (usize, u64)>, source_label: impl Into<String>) -> Result<Self> {
        let mut merged: BTreeMap<usize, u64> = BTreeMap::new();
        for (id, c) in counts {
            if c > 0 {
                *merged.entry(id).or_default() += c;
            }
        }
        let total: u64 = merged.values().sum();
        if total == 0 {
            return Err(Error::EmptyDocument);
        }
        Ok(Document {
            entries: merged
                .into_iter()
                .map(|(id, c)| (id, c as f64 / total as f64))
                .collect(),
            source_label: source_label.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Keep the `cap` heaviest words (ties to the lower id) and renormalize.
    pub fn capped(&self, cap: usize) -> Document {
        if cap == 0 || self.entries.len() <= cap {
            return self.clone();
        }
        let mut heavy = self.entries.clone();
        heavy.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        heavy.truncate(cap);
        heavy.sort_by_key(|e| e.0);
        let total: f64 = heavy.iter().map(|e| e.1).sum();
        Document {
            entries: heavy.into_iter().map(|(id, w)| (id, w / total)).collect(),
            source_label: self.source_label.clone(),
        }
    }
}

/// Normalized bag of words of the in-vocabulary `tokens`; unknown tokens are dropped.
pub fn nbow<S: AsRef<str>>(tokens: &[S], model: &EmbeddingModel, source_label: &str) -> Result<Document> {
    let vocab = model.vocab();
    Document::from_counts(
        tokens.iter().filter_map(|t| vocab.id(t.as_ref())).map(|id| (id, 1)),
        source_label,
    )
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

fn vectors(doc: &Document, model: &EmbeddingModel) -> Vec<Vec<f64>> {
    doc.entries
        .iter()
        .map(|&(id, _)| model.id_vector(id).into_iter().map(f64::from).collect())
        .collect()
}

fn validate(doc: &Document, model: &EmbeddingModel) -> Result<()> {
    if doc.entries.is_empty() {
        return Err(Error::EmptyDocument);
    }
    if doc.entries.iter().any(|&(id, w)| id >= model.vocab().len() || w.is_nan() || w <= 0.0) {
        return Err(Error::Solver(format!("invalid document `{}`", doc.source_label)));
    }
    Ok(())
}

/// Ground-cost matrix between two documents, row-major.
pub fn cost_matrix(d1: &Document, d2: &Document, model: &EmbeddingModel) -> Vec<f64> {
    let v1 = vectors(d1, model);
    let v2 = vectors(d2, model);
    v1.iter()
        .flat_map(|a| v2.iter().map(move |b| euclidean(a, b)))
        .collect()
}

fn weights(doc: &Document) -> Vec<f64> {
    doc.entries.iter().map(|e| e.1).collect()
}

/// Exact WMD together with the optimal transport plan (rows index `d1`).
pub fn wmd_with_plan(d1: &Document, d2: &Document, model: &EmbeddingModel) -> Result<TransportPlan> {
    validate(d1, model)?;
    validate(d2, model)?;
    if d1.entries == d2.entries {
        let flows = d1
            .entries
            .iter()
            .enumerate()
            .map(|(k, &(_, w))| transport::Flow { from: k, to: k, amount: w })
            .collect();
        return Ok(TransportPlan { cost: 0.0, flows });
    }
    // Solve in a canonical orientation so the distance is exactly symmetric.
    let swap = d2.entries < d1.entries;
    let (a, b) = if swap { (d2, d1) } else { (d1, d2) };
    let mut plan = transport::solve(&weights(a), &weights(b), &cost_matrix(a, b, model))?;
    if swap {
        for f in &mut plan.flows {
            std::mem::swap(&mut f.from, &mut f.to);
        }
        plan.flows.sort_by_key(|f| (f.from, f.to));
    }
    Ok(plan)
}

/// Word Mover's Distance with Euclidean ground cost between composed word vectors.
pub fn wmd(d1: &Document, d2: &Document, model: &EmbeddingModel) -> Result<f64> {
    Ok(wmd_with_plan(d1, d2, model)?.cost)
}

/// Relaxed WMD: the larger of the two one-sided relaxations, a lower bound on [`wmd`].
pub fn rwmd(d1: &Document, d2: &Document, model: &EmbeddingModel) -> Result<f64> {
    validate(d1, model)?;
    validate(d2, model)?;
    let cost = cost_matrix(d1, d2, model);
    let n = d2.len();
    let forward: f64 = d1
        .entries
        .iter()
        .enumerate()
        .map(|(i, &(_, w))| w * cost[i * n..(i + 1) * n].iter().copied().fold(f64::INFINITY, f64::min))
        .sum();
    let backward: f64 = d2
        .entries
        .iter()
        .enumerate()
        .map(|(j, &(_, w))| w * (0..d1.len()).map(|i| cost[i * n + j]).fold(f64::INFINITY, f64::min))
        .sum();
    Ok(forward.max(backward))
}

/// Symmetric matrix of pairwise WMD values with a zero diagonal.
pub fn pairwise_matrix(docs: &[Document], model: &EmbeddingModel) -> Result<Vec<Vec<f64>>> {
    if docs.len() < 2 {
        return Err(Error::TooFewDocuments(docs.len()));
    }
    let pairs: Vec<(usize, usize)> = (0..docs.len())
        .flat_map(|i| (i + 1..docs.len()).map(move |j| (i, j)))
        .collect();
    let values: Vec<f64> = pairs
        .par_iter()
        .map(|&(i, j)| wmd(&docs[i], &docs[j], model))
        .collect::<Result<_>>()?;
    let mut m = vec![vec![0.0; docs.len()]; docs.len()];
    for (&(i, j), v) in pairs.iter().zip(values) {
        m[i][j] = v;
        m[j][i] = v;
    }
    Ok(m)
}
