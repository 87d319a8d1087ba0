//! Browser bindings: cleanse a snippet, train a tiny model on pasted code,
//! then query neighbors and Word Mover's Distance.

use scemb::corpus::cleanse_source;
use scemb::similarity::{self, DEFAULT_CAP};
use scemb::{CleansingRules, EmbeddingModel, Language, TrainingConfig};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn language(name: &str) -> Result<Language, String> {
    name.parse::<Language>().map_err(|e| e.to_string())
}

fn cleanse_text(source: &str, lang: &str) -> Result<Vec<String>, String> {
    Ok(cleanse_source(source, &CleansingRules::for_language(language(lang)?)))
}

/// One training line per source line, so context windows stay within a line.
fn training_lines(source: &str, rules: &CleansingRules) -> Vec<Vec<String>> {
    source
        .lines()
        .map(|line| cleanse_source(line, rules))
        .filter(|l| !l.is_empty())
        .collect()
}

fn demo_config(lang: Language, dim: u32, epochs: u32, seed: u64) -> TrainingConfig {
    TrainingConfig {
        dim,
        epochs,
        seed,
        min_count: 2,
        subsample_t: 1e-3,
        bucket_count: 20_000,
        ..TrainingConfig::for_language(lang)
    }
}

fn train_model(source: &str, lang: &str, dim: u32, epochs: u32, seed: u64) -> Result<EmbeddingModel, String> {
    let lang = language(lang)?;
    let lines = training_lines(source, &CleansingRules::for_language(lang));
    let config = demo_config(lang, dim, epochs, seed);
    scemb::train(&lines, &config).map(|(model, _)| model).map_err(|e| e.to_string())
}

fn neighbors_json(model: &EmbeddingModel, query: &str, k: usize) -> Result<String, String> {
    let ranked = model.nearest_neighbors(query, k).map_err(|e| e.to_string())?;
    let rows: Vec<_> = ranked.iter().map(|(w, c)| json!({ "word": w, "cosine": c })).collect();
    Ok(serde_json::Value::from(rows).to_string())
}

fn snippet_distance(model: &EmbeddingModel, a: &str, b: &str, lang: &str) -> Result<f64, String> {
    let rules = CleansingRules::for_language(language(lang)?);
    let doc = |text: &str, label: &str| {
        similarity::nbow(&cleanse_source(text, &rules), model, label)
            .map(|d| d.capped(DEFAULT_CAP))
            .map_err(|e| format!("{label}: {e}"))
    };
    similarity::wmd(&doc(a, "first snippet")?, &doc(b, "second snippet")?, model).map_err(|e| e.to_string())
}

fn js(e: String) -> JsError {
    JsError::new(&e)
}

/// Cleansed identifier tokens of `source`.
#[wasm_bindgen]
pub fn cleanse(source: &str, language: &str) -> Result<Vec<String>, JsError> {
    cleanse_text(source, language).map_err(js)
}

/// Language names accepted by the other functions.
#[wasm_bindgen]
pub fn languages() -> Vec<String> {
    Language::ALL.iter().map(|l| l.name().to_string()).collect()
}

#[wasm_bindgen]
pub struct DemoModel {
    model: EmbeddingModel,
}

#[wasm_bindgen]
impl DemoModel {
    /// Train on pasted source code. Runs on the calling thread.
    #[wasm_bindgen(constructor)]
    pub fn new(source: &str, language: &str, dim: u32, epochs: u32, seed: u64) -> Result<DemoModel, JsError> {
        train_model(source, language, dim, epochs, seed).map(|model| DemoModel { model }).map_err(js)
    }

    #[wasm_bindgen(getter)]
    pub fn vocabulary(&self) -> Vec<String> {
        self.model.vocab().words().iter().map(|w| w.text.clone()).collect()
    }

    /// JSON array of `{word, cosine}`.
    pub fn neighbors(&self, query: &str, k: usize) -> Result<String, JsError> {
        neighbors_json(&self.model, query, k).map_err(js)
    }

    /// Word Mover's Distance between two snippets.
    pub fn distance(&self, first: &str, second: &str, language: &str) -> Result<f64, JsError> {
        snippet_distance(&self.model, first, second, language).map_err(js)
    }
}
