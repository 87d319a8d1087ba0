//! Binary model files and text vector export.
//!
//! Layout (all integers and floats little-endian):
//!
//! ```text
//! magic      "SCEM"
//! version    u32
//! config     dim u32, window u32, epochs u32, minn u32, maxn u32, neg u32,
//!            lr0 f64, min_count u32, subsample_t f64, bucket_count u64,
//!            mode u8, threads u32, seed u64
//! vocab      word_count u64, total_tokens u64,
//!            word_count x (byte_len u32, utf-8 bytes, count u64)
//! input      rows u64, cols u64, rows*cols f32, row-major
//! output     rows u64, cols u64, rows*cols f32, row-major
//! ```

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::model::EmbeddingModel;
use crate::vocab::{Mode, TrainingConfig, VocabWord, Vocabulary};

pub const MAGIC: [u8; 4] = *b"SCEM";
pub const VERSION: u32 = 1;

const MAX_WORD_BYTES: usize = 1 << 20;

/// Serialize `model` into `out`.
pub fn write_model<W: Write>(model: &EmbeddingModel, out: &mut W) -> Result<()> {
    let c = model.config();
    out.write_all(&MAGIC)?;
    out.write_all(&VERSION.to_le_bytes())?;
    for v in [c.dim, c.window, c.epochs, c.minn, c.maxn, c.neg] {
        out.write_all(&v.to_le_bytes())?;
    }
    out.write_all(&c.lr0.to_le_bytes())?;
    out.write_all(&c.min_count.to_le_bytes())?;
    out.write_all(&c.subsample_t.to_le_bytes())?;
    out.write_all(&c.bucket_count.to_le_bytes())?;
    out.write_all(&[match c.mode {
        Mode::SkipGram => 0u8,
    }])?;
    out.write_all(&c.threads.to_le_bytes())?;
    out.write_all(&c.seed.to_le_bytes())?;

    let vocab = model.vocab();
    out.write_all(&(vocab.len() as u64).to_le_bytes())?;
    out.write_all(&vocab.total_tokens().to_le_bytes())?;
    for w in vocab.words() {
        out.write_all(&(w.text.len() as u32).to_le_bytes())?;
        out.write_all(w.text.as_bytes())?;
        out.write_all(&w.count.to_le_bytes())?;
    }
    write_matrix(model.input_matrix(), out)?;
    write_matrix(model.output_matrix(), out)?;
    Ok(())
}

fn write_matrix<W: Write>(m: &Matrix, out: &mut W) -> Result<()> {
    out.write_all(&(m.rows() as u64).to_le_bytes())?;
    out.write_all(&(m.cols() as u64).to_le_bytes())?;
    let mut buf = Vec::with_capacity(4 * 4096);
    for chunk in m.as_slice().chunks(4096) {
        buf.clear();
        for x in chunk {
            buf.extend_from_slice(&x.to_le_bytes());
        }
        out.write_all(&buf)?;
    }
    Ok(())
}

pub fn save(model: &EmbeddingModel, path: &Path) -> Result<()> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    write_model(model, &mut out)?;
    out.flush().map_err(|e| Error::io(path, e))?;
    Ok(())
}

pub fn load(path: &Path) -> Result<EmbeddingModel> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    read_model(&bytes)
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize, what: &str) -> Result<&'a [u8]> {
        if self.buf.len() - self.pos < n {
            return Err(Error::Format(format!("truncated file while reading {what}")));
        }
        let s = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn array<const N: usize>(&mut self, what: &str) -> Result<[u8; N]> {
        Ok(self.take(N, what)?.try_into().expect("length checked"))
    }

    fn u8(&mut self, what: &str) -> Result<u8> {
        Ok(self.take(1, what)?[0])
    }

    fn u32(&mut self, what: &str) -> Result<u32> {
        Ok(u32::from_le_bytes(self.array(what)?))
    }

    fn u64(&mut self, what: &str) -> Result<u64> {
        Ok(u64::from_le_bytes(self.array(what)?))
    }

    fn f64(&mut self, what: &str) -> Result<f64> {
        Ok(f64::from_le_bytes(self.array(what)?))
    }

    fn remaining(&self) -> usize {
        self.buf.len() - self.pos
    }

    fn matrix(&mut self, rows: usize, cols: usize, what: &str) -> Result<Matrix> {
        let r = self.u64(what)?;
        let c = self.u64(what)?;
        if r != rows as u64 || c != cols as u64 {
            return Err(Error::Format(format!("{what} is {r}x{c}, expected {rows}x{cols}")));
        }
        let n = rows
            .checked_mul(cols)
            .and_then(|n| n.checked_mul(4))
            .ok_or_else(|| Error::Format(format!("{what} too large")))?;
        let bytes = self.take(n, what)?;
        let data = bytes
            .chunks_exact(4)
            .map(|b| f32::from_le_bytes(b.try_into().expect("chunk of 4")))
            .collect();
        Ok(Matrix::from_vec(rows, cols, data))
    }
}

/// Parse a model from the bytes of a model file.
pub fn read_model(bytes: &[u8]) -> Result<EmbeddingModel> {
    let mut r = Reader { buf: bytes, pos: 0 };
    let magic: [u8; 4] = r.array("magic")?;
    if magic != MAGIC {
        return Err(Error::BadMagic(magic));
    }
    let version = r.u32("version")?;
    if version != VERSION {
        return Err(Error::UnsupportedVersion(version));
    }
    let config = TrainingConfig {
        dim: r.u32("config")?,
        window: r.u32("config")?,
        epochs: r.u32("config")?,
        minn: r.u32("config")?,
        maxn: r.u32("config")?,
        neg: r.u32("config")?,
        lr0: r.f64("config")?,
        min_count: r.u32("config")?,
        subsample_t: r.f64("config")?,
        bucket_count: r.u64("config")?,
        mode: match r.u8("config")? {
            0 => Mode::SkipGram,
            m => return Err(Error::Format(format!("unknown training mode {m}"))),
        },
        threads: r.u32("config")?,
        seed: r.u64("config")?,
    };
    config.validate()?;

    let word_count = r.u64("vocabulary")?;
    let total_tokens = r.u64("vocabulary")?;
    // Each entry needs at least 12 bytes; reject counts the file cannot hold.
    if word_count > (r.remaining() / 12) as u64 {
        return Err(Error::Format("truncated file while reading vocabulary".into()));
    }
    let mut words = Vec::with_capacity(word_count as usize);
    for _ in 0..word_count {
        let len = r.u32("vocabulary")? as usize;
        if len > MAX_WORD_BYTES {
            return Err(Error::Format(format!("word of {len} bytes")));
        }
        let text = std::str::from_utf8(r.take(len, "vocabulary")?)
            .map_err(|_| Error::Format("word is not valid UTF-8".into()))?
            .to_string();
        let count = r.u64("vocabulary")?;
        words.push(VocabWord { text, count });
    }
    let vocab = Vocabulary::from_counts(words, total_tokens, &config)?;
    let dim = config.dim as usize;
    let input = r.matrix(vocab.input_rows(), dim, "input matrix")?;
    let output = r.matrix(vocab.len(), dim, "output matrix")?;
    if r.remaining() != 0 {
        return Err(Error::Format(format!("{} trailing bytes", r.remaining())));
    }
    EmbeddingModel::new(config, vocab, input, output)
}

/// Write `|words| dim` followed by one line per word with its composed vector.
pub fn write_text<W: Write>(model: &EmbeddingModel, out: &mut W) -> Result<()> {
    let vocab = model.vocab();
    if vocab.is_empty() {
        return Err(Error::EmptyVocabulary);
    }
    writeln!(out, "{} {}", vocab.len(), model.dim())?;
    for id in 0..vocab.len() {
        write!(out, "{}", vocab.word(id))?;
        for x in model.id_vector(id) {
            write!(out, " {x}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

pub fn export_text(model: &EmbeddingModel, path: &Path) -> Result<()> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    write_text(model, &mut out)?;
    out.flush().map_err(|e| Error::io(path, e))?;
    Ok(())
}
