//! Token filtering that turns a lexed stream into training words.
//!
//! Kept tokens are never rewritten: no lowercasing, stemming, or splitting
//! of compound identifiers.

use std::collections::HashSet;

use crate::keywords::keyword_set;
use crate::lexer::{Token, TokenClass};
use crate::Language;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Keep,
    DropKeyword,
    DropPunct,
    DropSingleChar,
    DropNumeric,
    DropCommentOrString,
}

/// Per-language cleansing policy. Immutable once built.
#[derive(Clone, Debug)]
pub struct CleansingRules {
    language: Language,
    keywords: HashSet<String>,
    kept_punct: Vec<char>,
    drop_single_chars: bool,
    drop_numeric: bool,
    drop_hex: bool,
}

impl CleansingRules {
    /// Rules with the bundled keyword list for `language`.
    pub fn for_language(language: Language) -> Self {
        Self::with_keywords(language, keyword_set(language).clone())
    }

    /// Rules with a caller-supplied keyword list (e.g. loaded from a file).
    pub fn with_keywords(language: Language, keywords: HashSet<String>) -> Self {
        let mut kept_punct = vec!['_'];
        if language == Language::Php {
            kept_punct.push('$');
        }
        CleansingRules {
            language,
            keywords,
            kept_punct,
            drop_single_chars: true,
            drop_numeric: true,
            drop_hex: true,
        }
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn keywords(&self) -> &HashSet<String> {
        &self.keywords
    }

    pub fn kept_punct(&self) -> &[char] {
        &self.kept_punct
    }

    /// Character count of `text` once kept punctuation is removed.
    pub fn effective_len(&self, text: &str) -> usize {
        text.chars().filter(|c| !self.kept_punct.contains(c)).count()
    }

    pub fn classify(&self, token: &Token<'_>) -> Verdict {
        match token.class {
            TokenClass::Comment | TokenClass::StringLit => return Verdict::DropCommentOrString,
            TokenClass::Punct => return Verdict::DropPunct,
            TokenClass::Number => return Verdict::DropNumeric,
            TokenClass::Identifier | TokenClass::Keyword => {}
        }
        let text = token.text;
        if self.keywords.contains(text) {
            return Verdict::DropKeyword;
        }
        if (self.drop_numeric && is_decimal_literal(text)) || (self.drop_hex && is_hex_literal(text)) {
            return Verdict::DropNumeric;
        }
        if self.drop_single_chars && self.effective_len(text) < 2 {
            return Verdict::DropSingleChar;
        }
        // A keyword-class token the rules do not list (custom keyword file)
        // is an ordinary word.
        Verdict::Keep
    }

    /// Words of `tokens` that survive [`classify`](Self::classify), in order.
    pub fn cleanse<'a>(&self, tokens: &[Token<'a>]) -> Vec<&'a str> {
        tokens
            .iter()
            .filter(|t| self.classify(t) == Verdict::Keep)
            .map(|t| t.text)
            .collect()
    }
}

/// `[0-9]+` or `[0-9]*\.[0-9]+`.
pub fn is_decimal_literal(text: &str) -> bool {
    let (int, frac) = match text.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (text, None),
    };
    let digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    match frac {
        None => !int.is_empty() && digits(int),
        Some(f) => !f.is_empty() && digits(f) && digits(int),
    }
}

/// `0[xX][0-9a-fA-F]+`.
pub fn is_hex_literal(text: &str) -> bool {
    let b = text.as_bytes();
    b.len() > 2 && b[0] == b'0' && (b[1] == b'x' || b[1] == b'X') && b[2..].iter().all(u8::is_ascii_hexdigit)
}

/// Free-function form of [`CleansingRules::classify`].
pub fn classify(token: &Token<'_>, rules: &CleansingRules) -> Verdict {
    rules.classify(token)
}

/// Free-function form of [`CleansingRules::cleanse`].
pub fn cleanse<'a>(tokens: &[Token<'a>], rules: &CleansingRules) -> Vec<&'a str> {
    rules.cleanse(tokens)
}
