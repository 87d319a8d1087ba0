//! Skip-gram training with negative sampling over subword-composed inputs.
//!
//! With one thread and a fixed seed, training is bit-reproducible. With more
//! threads, workers update the shared matrices without locking (Hogwild);
//! occasional lost updates are accepted and results vary between runs.

use std::cell::UnsafeCell;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::model::EmbeddingModel;
use crate::vocab::{build_vocab, TrainingConfig, Vocabulary};

/// Learning-rate floor as a fraction of the initial rate.
pub const LR_FLOOR: f64 = 1e-4;

/// Tokens between progress reports.
pub const PROGRESS_INTERVAL: u64 = 100_000;

/// Linearly decayed learning rate, floored at `lr0 * LR_FLOOR`.
pub fn lr_schedule(tokens_processed: u64, total: u64, lr0: f64) -> f64 {
    let frac = if total == 0 {
        1.0
    } else {
        (tokens_processed as f64 / total as f64).min(1.0)
    };
    (lr0 * (1.0 - frac)).max(lr0 * LR_FLOOR)
}

/// `-ln(sigmoid(x))`, stable for large `|x|`.
fn neg_log_sigmoid<F: Float>(x: F) -> F {
    let zero = F::zero();
    (-x).max(zero) + (-x.abs()).exp().ln_1p()
}

fn sigmoid<F: Float>(x: F) -> F {
    F::one() / (F::one() + (-x).exp())
}

/// Scratch buffers for [`sgns_update`].
pub struct Scratch<F> {
    hidden: Vec<F>,
    grad: Vec<F>,
}

impl<F: Float> Scratch<F> {
    pub fn new(dim: usize) -> Self {
        Scratch {
            hidden: vec![F::zero(); dim],
            grad: vec![F::zero(); dim],
        }
    }
}

/// One negative-sampling update on flat row-major matrices of width `dim`.
///
/// The hidden vector is the mean of `input_rows`. Each output row (the
/// positive with label 1, every negative with label 0) moves along its exact
/// gradient scaled by `lr`; the accumulated hidden gradient is then added to
/// every input row scaled by `lr / |input_rows|`. Returns the loss before the
/// update.
#[allow(clippy::too_many_arguments)]
pub fn sgns_update<F: Float>(
    input: &mut [F],
    output: &mut [F],
    dim: usize,
    input_rows: &[usize],
    positive: usize,
    negatives: &[usize],
    lr: F,
    scratch: &mut Scratch<F>,
) -> F {
    debug_assert!(!input_rows.is_empty());
    let Scratch { hidden, grad } = scratch;
    hidden.iter_mut().for_each(|h| *h = F::zero());
    grad.iter_mut().for_each(|g| *g = F::zero());
    for &r in input_rows {
        for (h, &x) in hidden.iter_mut().zip(&input[r * dim..(r + 1) * dim]) {
            *h = *h + x;
        }
    }
    let inv_n = F::one() / F::from(input_rows.len()).expect("row count fits");
    hidden.iter_mut().for_each(|h| *h = *h * inv_n);

    let mut loss = F::zero();
    let targets = std::iter::once((positive, true)).chain(negatives.iter().map(|&n| (n, false)));
    for (target, label) in targets {
        let u = &mut output[target * dim..(target + 1) * dim];
        let score = hidden.iter().zip(u.iter()).fold(F::zero(), |acc, (&h, &x)| acc + h * x);
        let (term, alpha) = if label {
            (neg_log_sigmoid(score), lr * (F::one() - sigmoid(score)))
        } else {
            (neg_log_sigmoid(-score), -lr * sigmoid(score))
        };
        loss = loss + term;
        for ((g, x), &h) in grad.iter_mut().zip(u.iter_mut()).zip(hidden.iter()) {
            *g = *g + alpha * *x;
            *x = *x + alpha * h;
        }
    }

    for &r in input_rows {
        for (x, &g) in input[r * dim..(r + 1) * dim].iter_mut().zip(grad.iter()) {
            *x = *x + g * inv_n;
        }
    }
    loss
}

/// [`sgns_update`] applied to a model's matrices.
pub fn sgns_step(
    model: &mut EmbeddingModel,
    input_rows: &[usize],
    positive: usize,
    negatives: &[usize],
    lr: f32,
) -> f32 {
    let dim = model.dim();
    let mut scratch = Scratch::new(dim);
    let (input, output) = model.matrices_mut();
    sgns_update(
        input.as_mut_slice(),
        output.as_mut_slice(),
        dim,
        input_rows,
        positive,
        negatives,
        lr,
        &mut scratch,
    )
}

/// Matrix shared between training workers without mutual exclusion.
struct SharedMatrix(UnsafeCell<Matrix>);

// Workers write disjoint or racing f32 cells; torn or lost updates only
// perturb SGD and never break memory safety of the surrounding structure.
unsafe impl Sync for SharedMatrix {}

impl SharedMatrix {
    #[allow(clippy::mut_from_ref)]
    unsafe fn slice_mut(&self) -> &mut [f32] {
        (*self.0.get()).as_mut_slice()
    }

    fn into_inner(self) -> Matrix {
        self.0.into_inner()
    }
}

/// Progress snapshot passed to the progress callback.
#[derive(Clone, Copy, Debug)]
pub struct Progress {
    pub epoch: u32,
    pub tokens_processed: u64,
    pub total_tokens: u64,
    pub lr: f64,
    /// Mean loss per update since the previous report.
    pub loss: f64,
    pub tokens_per_sec: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct TrainReport {
    /// Mean loss per update for each epoch.
    pub epoch_losses: Vec<f64>,
    pub updates: u64,
    pub tokens_processed: u64,
}

type ProgressFn<'a> = dyn Fn(&Progress) + Sync + 'a;

/// Training driver; see [`train`] for the common case.
pub struct Trainer<'a> {
    config: TrainingConfig,
    progress: Option<&'a ProgressFn<'a>>,
}

struct Shared<'a> {
    config: &'a TrainingConfig,
    vocab: &'a Vocabulary,
    input: SharedMatrix,
    output: SharedMatrix,
    processed: AtomicU64,
    total_work: u64,
    abort: AtomicBool,
    // Only read when a progress callback is attached.
    started: Option<Instant>,
}

#[derive(Default)]
struct WorkerStats {
    epoch_loss: Vec<f64>,
    epoch_updates: Vec<u64>,
}

impl<'a> Trainer<'a> {
    pub fn new(config: TrainingConfig) -> Self {
        Trainer { config, progress: None }
    }

    pub fn with_progress(mut self, progress: &'a ProgressFn<'a>) -> Self {
        self.progress = Some(progress);
        self
    }

    /// Train on `lines`, one inner sequence of words per source line. Context
    /// windows never cross line boundaries.
    pub fn train<L, S>(&self, lines: &[L]) -> Result<(EmbeddingModel, TrainReport)>
    where
        L: AsRef<[S]>,
        S: AsRef<str>,
    {
        let config = &self.config;
        config.validate()?;
        let vocab = build_vocab(lines.iter().flat_map(|l| l.as_ref().iter()), config)?;
        let corpus: Vec<Vec<u32>> = lines
            .iter()
            .map(|l| {
                l.as_ref()
                    .iter()
                    .filter_map(|w| vocab.id(w.as_ref()).map(|id| id as u32))
                    .collect()
            })
            .filter(|l: &Vec<u32>| !l.is_empty())
            .collect();

        let dim = config.dim as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let bound = 1.0 / dim as f32;
        let input_rows = vocab.input_rows();
        let init = (0..input_rows * dim).map(|_| rng.random_range(-bound..=bound)).collect();
        let input = Matrix::from_vec(input_rows, dim, init);
        let output = Matrix::zeros(vocab.len(), dim);

        let tokens: u64 = corpus.iter().map(|l| l.len() as u64).sum();
        let shared = Shared {
            config,
            vocab: &vocab,
            input: SharedMatrix(UnsafeCell::new(input)),
            output: SharedMatrix(UnsafeCell::new(output)),
            processed: AtomicU64::new(0),
            total_work: tokens * config.epochs as u64,
            abort: AtomicBool::new(false),
            started: self.progress.map(|_| Instant::now()),
        };

        let parts = partition(&corpus, config.threads as usize);
        let results: Vec<Result<WorkerStats>> = if parts.len() <= 1 {
            vec![self.worker(&shared, parts.first().copied().unwrap_or(&[]), 0)]
        } else {
            std::thread::scope(|s| {
                let handles: Vec<_> = parts
                    .iter()
                    .enumerate()
                    .map(|(i, part)| {
                        let shared = &shared;
                        s.spawn(move || self.worker(shared, part, i as u64))
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("training worker panicked"))
                    .collect()
            })
        };

        let epochs = config.epochs as usize;
        let mut loss = vec![0f64; epochs];
        let mut updates = vec![0u64; epochs];
        for r in results {
            let stats = r?;
            for e in 0..epochs {
                loss[e] += stats.epoch_loss[e];
                updates[e] += stats.epoch_updates[e];
            }
        }
        let report = TrainReport {
            epoch_losses: loss
                .iter()
                .zip(&updates)
                .map(|(l, &u)| if u == 0 { 0.0 } else { l / u as f64 })
                .collect(),
            updates: updates.iter().sum(),
            tokens_processed: shared.processed.load(Ordering::Relaxed),
        };

        let input = shared.input.into_inner();
        let output = shared.output.into_inner();
        let model = EmbeddingModel::new(config.clone(), vocab, input, output)?;
        if !model.is_finite() {
            return Err(Error::NonFiniteLoss {
                loss: f64::NAN,
                epoch: config.epochs,
                tokens: report.tokens_processed,
                lr: 0.0,
            });
        }
        Ok((model, report))
    }

    fn worker(&self, shared: &Shared<'_>, lines: &[Vec<u32>], worker: u64) -> Result<WorkerStats> {
        let config = shared.config;
        let vocab = shared.vocab;
        let dim = config.dim as usize;
        let window = config.window as usize;
        let neg = config.neg as usize;
        let sampler = vocab.negatives();
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(1).wrapping_add(worker));
        let mut scratch = Scratch::new(dim);
        let mut kept: Vec<usize> = Vec::new();
        let mut negatives = vec![0usize; neg];
        let mut stats = WorkerStats {
            epoch_loss: vec![0.0; config.epochs as usize],
            epoch_updates: vec![0; config.epochs as usize],
        };
        let mut interval_loss = 0f64;
        let mut interval_updates = 0u64;
        let mut next_report = PROGRESS_INTERVAL;

        // SAFETY: see `SharedMatrix`; every index below is bounded by the
        // matrix shapes fixed in `Trainer::train`.
        let input = unsafe { shared.input.slice_mut() };
        let output = unsafe { shared.output.slice_mut() };

        for epoch in 0..config.epochs {
            let e = epoch as usize;
            for line in lines {
                if shared.abort.load(Ordering::Relaxed) {
                    return Ok(stats);
                }
                let done = shared.processed.load(Ordering::Relaxed);
                let lr = lr_schedule(done, shared.total_work, config.lr0) as f32;

                kept.clear();
                kept.extend(
                    line.iter()
                        .map(|&id| id as usize)
                        .filter(|&id| rng.random::<f64>() < vocab.keep_prob(id)),
                );
                let mut line_loss = 0f64;
                let mut line_updates = 0u64;
                for p in 0..kept.len() {
                    let b = rng.random_range(1..=window);
                    let lo = p.saturating_sub(b);
                    let hi = (p + b).min(kept.len() - 1);
                    let rows = vocab.rows_for_id(kept[p]);
                    for (q, &positive) in kept.iter().enumerate().take(hi + 1).skip(lo) {
                        if q == p {
                            continue;
                        }
                        for slot in negatives.iter_mut() {
                            *slot = sampler.sample_excluding(&mut rng, positive);
                        }
                        let loss = sgns_update(input, output, dim, rows, positive, &negatives, lr, &mut scratch);
                        line_loss += loss as f64;
                        line_updates += 1;
                    }
                }
                if !line_loss.is_finite() {
                    shared.abort.store(true, Ordering::Relaxed);
                    return Err(Error::NonFiniteLoss {
                        loss: line_loss,
                        epoch: epoch + 1,
                        tokens: done,
                        lr: lr as f64,
                    });
                }
                stats.epoch_loss[e] += line_loss;
                stats.epoch_updates[e] += line_updates;
                interval_loss += line_loss;
                interval_updates += line_updates;

                let now = shared.processed.fetch_add(line.len() as u64, Ordering::Relaxed) + line.len() as u64;
                if worker == 0 && now >= next_report {
                    next_report = now + PROGRESS_INTERVAL;
                    if let Some(cb) = self.progress {
                        let secs = shared.started.map_or(0.0, |t| t.elapsed().as_secs_f64()).max(1e-9);
                        cb(&Progress {
                            epoch: epoch + 1,
                            tokens_processed: now,
                            total_tokens: shared.total_work,
                            lr: lr as f64,
                            loss: if interval_updates == 0 {
                                0.0
                            } else {
                                interval_loss / interval_updates as f64
                            },
                            tokens_per_sec: now as f64 / secs,
                        });
                    }
                    interval_loss = 0.0;
                    interval_updates = 0;
                }
            }
        }
        Ok(stats)
    }
}

/// Split lines into at most `threads` contiguous chunks of similar token mass.
fn partition(lines: &[Vec<u32>], threads: usize) -> Vec<&[Vec<u32>]> {
    if threads <= 1 || lines.len() <= 1 {
        return vec![lines];
    }
    let total: usize = lines.iter().map(Vec::len).sum();
    let target = total.div_ceil(threads).max(1);
    let mut parts = Vec::with_capacity(threads);
    let mut start = 0;
    let mut acc = 0;
    for (i, l) in lines.iter().enumerate() {
        acc += l.len();
        if acc >= target && parts.len() + 1 < threads {
            parts.push(&lines[start..=i]);
            start = i + 1;
            acc = 0;
        }
    }
    if start < lines.len() {
        parts.push(&lines[start..]);
    }
    parts
}

/// Train a model on `lines` with `config`.
pub fn train<L, S>(lines: &[L], config: &TrainingConfig) -> Result<(EmbeddingModel, TrainReport)>
where
    L: AsRef<[S]>,
    S: AsRef<str>,
{
    Trainer::new(config.clone()).train(lines)
}
