//! A forgiving multi-language source lexer.
//!
//! The lexer never fails: it classifies identifiers, keywords, numeric
//! literals, string literals, and comments, and emits everything else as
//! single-character punctuation. Token text always borrows the exact source
//! spelling.

use crate::keywords::keyword_set;
use crate::Language;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TokenClass {
    Identifier,
    Keyword,
    Number,
    StringLit,
    Comment,
    Punct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Token<'a> {
    pub text: &'a str,
    pub class: TokenClass,
}

impl<'a> Token<'a> {
    pub fn new(class: TokenClass, text: &'a str) -> Self {
        Token { text, class }
    }
}

/// Tokenize `source` as `language`, in source order.
pub fn tokenize(source: &str, language: Language) -> Vec<Token<'_>> {
    Lexer::new(source, language).collect()
}

/// Streaming form of [`tokenize`].
pub struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    language: Language,
}

impl<'a> Lexer<'a> {
    pub fn new(src: &'a str, language: Language) -> Self {
        Lexer {
            src,
            bytes: src.as_bytes(),
            pos: 0,
            language,
        }
    }

    fn peek(&self, offset: usize) -> Option<u8> {
        self.bytes.get(self.pos + offset).copied()
    }

    fn starts_with(&self, pat: &str) -> bool {
        self.bytes[self.pos..].starts_with(pat.as_bytes())
    }

    fn c_style_comments(&self) -> bool {
        self.language != Language::Python
    }

    fn hash_comments(&self) -> bool {
        matches!(self.language, Language::Python | Language::Php)
    }

    fn skip_whitespace(&mut self) {
        while self.pos < self.bytes.len() {
            let b = self.bytes[self.pos];
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b >= 0x80 {
                let ch = self.src[self.pos..].chars().next().expect("char boundary");
                if ch.is_whitespace() {
                    self.pos += ch.len_utf8();
                } else {
                    break;
                }
            } else {
                break;
            }
        }
    }

    fn emit(&mut self, start: usize, class: TokenClass) -> Token<'a> {
        Token::new(class, &self.src[start..self.pos])
    }

    fn skip_to_line_end(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
            self.pos += 1;
        }
    }

    fn skip_block_comment(&mut self) {
        self.pos += 2;
        match self.src[self.pos..].find("*/") {
            Some(off) => self.pos += off + 2,
            None => self.pos = self.bytes.len(),
        }
    }

    /// Consume a quoted literal whose opening quote is at `self.pos`.
    fn skip_quoted(&mut self, quote: u8, escapes: bool, multiline: bool) {
        self.pos += 1;
        while self.pos < self.bytes.len() {
            let b = self.bytes[self.pos];
            if escapes && b == b'\\' {
                self.pos = (self.pos + 2).min(self.bytes.len());
                continue;
            }
            if b == b'\n' && !multiline {
                return;
            }
            self.pos += 1;
            if b == quote {
                return;
            }
        }
    }

    /// C# verbatim strings: no escapes, `""` stands for a literal quote.
    fn skip_verbatim(&mut self) {
        self.pos += 1;
        while self.pos < self.bytes.len() {
            if self.bytes[self.pos] == b'"' {
                if self.peek(1) == Some(b'"') {
                    self.pos += 2;
                    continue;
                }
                self.pos += 1;
                return;
            }
            self.pos += 1;
        }
    }

    fn skip_triple(&mut self, quote: u8, escapes: bool) {
        let closing = [quote; 3];
        self.pos += 3;
        while self.pos < self.bytes.len() {
            if escapes && self.bytes[self.pos] == b'\\' {
                self.pos = (self.pos + 2).min(self.bytes.len());
                continue;
            }
            if self.bytes[self.pos..].starts_with(&closing) {
                self.pos += 3;
                return;
            }
            self.pos += 1;
        }
    }

    /// C++ raw string `R"delim( ... )delim"`, with `self.pos` on the quote.
    fn skip_raw_cpp(&mut self) {
        let open = self.pos + 1;
        let Some(paren) = self.src[open..].find('(') else {
            self.skip_quoted(b'"', true, false);
            return;
        };
        let delim = &self.src[open..open + paren];
        if delim.len() > 16 || delim.contains(|c: char| c.is_whitespace() || c == '"') {
            self.skip_quoted(b'"', true, false);
            return;
        }
        let closing = format!("){delim}\"");
        let body = open + paren + 1;
        match self.src[body..].find(&closing) {
            Some(off) => self.pos = body + off + closing.len(),
            None => self.pos = self.bytes.len(),
        }
    }

    /// Lex a string literal starting at `self.pos` (which holds a quote).
    fn skip_string(&mut self) {
        let quote = self.bytes[self.pos];
        let triple = self.peek(1) == Some(quote) && self.peek(2) == Some(quote);
        match self.language {
            Language::Python if triple => self.skip_triple(quote, true),
            Language::Java | Language::CSharp if triple && quote == b'"' => {
                self.skip_triple(quote, self.language == Language::Java)
            }
            Language::Php => self.skip_quoted(quote, true, true),
            _ => self.skip_quoted(quote, true, false),
        }
    }

    fn is_string_prefix(&self, ident: &str) -> bool {
        match self.language {
            Language::Python => matches!(
                ident.to_ascii_lowercase().as_str(),
                "r" | "u" | "b" | "f" | "br" | "rb" | "fr" | "rf"
            ),
            Language::C | Language::Cpp => matches!(ident, "L" | "u" | "U" | "u8"),
            _ => false,
        }
    }

    fn is_raw_prefix(&self, ident: &str) -> bool {
        self.language == Language::Cpp && matches!(ident, "R" | "LR" | "uR" | "UR" | "u8R")
    }

    fn lex_number(&mut self, start: usize) -> Token<'a> {
        let hex = matches!(self.peek(1), Some(b'x' | b'X')) && self.bytes[self.pos] == b'0';
        let (e_lo, e_hi) = if hex { (b'p', b'P') } else { (b'e', b'E') };
        self.pos += 1;
        while self.pos < self.bytes.len() {
            let b = self.bytes[self.pos];
            let prev = self.bytes[self.pos - 1];
            let exponent_sign = (b == b'+' || b == b'-') && (prev == e_lo || prev == e_hi);
            if b.is_ascii_alphanumeric() || b == b'_' || b == b'.' || exponent_sign {
                self.pos += 1;
            } else {
                break;
            }
        }
        self.emit(start, TokenClass::Number)
    }

    fn lex_word(&mut self, start: usize) -> Token<'a> {
        while self.pos < self.bytes.len() && is_ident_continue(self.bytes[self.pos]) {
            self.pos += 1;
        }
        let text = &self.src[start..self.pos];
        if let Some(q @ (b'"' | b'\'')) = self.peek(0) {
            if q == b'"' && self.is_raw_prefix(text) {
                self.skip_raw_cpp();
                return self.emit(start, TokenClass::StringLit);
            }
            if self.is_string_prefix(text) {
                self.skip_string();
                return self.emit(start, TokenClass::StringLit);
            }
        }
        let class = if !text.starts_with('$') && keyword_set(self.language).contains(text) {
            TokenClass::Keyword
        } else {
            TokenClass::Identifier
        };
        self.emit(start, class)
    }
}

fn is_ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_'
}

fn is_ident_continue(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

impl<'a> Iterator for Lexer<'a> {
    type Item = Token<'a>;

    fn next(&mut self) -> Option<Token<'a>> {
        self.skip_whitespace();
        let start = self.pos;
        let b = *self.bytes.get(self.pos)?;

        if self.c_style_comments() && self.starts_with("//") {
            self.skip_to_line_end();
            return Some(self.emit(start, TokenClass::Comment));
        }
        if self.c_style_comments() && self.starts_with("/*") {
            self.skip_block_comment();
            return Some(self.emit(start, TokenClass::Comment));
        }
        if b == b'#' && self.hash_comments() && !(self.language == Language::Php && self.peek(1) == Some(b'[')) {
            self.skip_to_line_end();
            return Some(self.emit(start, TokenClass::Comment));
        }

        match b {
            b'"' | b'\'' => {
                self.skip_string();
                return Some(self.emit(start, TokenClass::StringLit));
            }
            b'`' if self.language == Language::Php => {
                self.skip_quoted(b'`', true, true);
                return Some(self.emit(start, TokenClass::StringLit));
            }
            b'@' if self.language == Language::CSharp => match (self.peek(1), self.peek(2)) {
                (Some(b'"'), _) => {
                    self.pos += 1;
                    self.skip_verbatim();
                    return Some(self.emit(start, TokenClass::StringLit));
                }
                (Some(b'$'), Some(b'"')) => {
                    self.pos += 2;
                    self.skip_verbatim();
                    return Some(self.emit(start, TokenClass::StringLit));
                }
                _ => {}
            },
            b'$' if self.language == Language::CSharp => match (self.peek(1), self.peek(2)) {
                (Some(b'"'), _) => {
                    self.pos += 1;
                    self.skip_string();
                    return Some(self.emit(start, TokenClass::StringLit));
                }
                (Some(b'@'), Some(b'"')) => {
                    self.pos += 2;
                    self.skip_verbatim();
                    return Some(self.emit(start, TokenClass::StringLit));
                }
                _ => {}
            },
            b'$' if self.language == Language::Php && self.peek(1).is_some_and(is_ident_start) => {
                self.pos += 1;
                return Some(self.lex_word(start));
            }
            _ => {}
        }

        if b.is_ascii_digit() || (b == b'.' && self.peek(1).is_some_and(|n| n.is_ascii_digit())) {
            return Some(self.lex_number(start));
        }
        if is_ident_start(b) {
            return Some(self.lex_word(start));
        }

        let ch = self.src[self.pos..].chars().next().expect("char boundary");
        self.pos += ch.len_utf8();
        Some(self.emit(start, TokenClass::Punct))
    }
}

#[cfg(test)]
mod tests {
    use super::TokenClass::*;
    use super::*;

    fn lex(src: &str, lang: Language) -> Vec<(TokenClass, &str)> {
        tokenize(src, lang).into_iter().map(|t| (t.class, t.text)).collect()
    }

    #[test]
    fn empty_input() {
        assert!(tokenize("", Language::Java).is_empty());
        assert!(tokenize("  \n\t ", Language::Java).is_empty());
    }

    #[test]
    fn java_catch_clause() {
        assert_eq!(
            lex("catch (Exception e)", Language::Java),
            vec![
                (Keyword, "catch"),
                (Punct, "("),
                (Identifier, "Exception"),
                (Identifier, "e"),
                (Punct, ")"),
            ]
        );
    }

    #[test]
    fn php_dollar_fuses_into_variable() {
        assert_eq!(
            lex("$user = new User;", Language::Php),
            vec![
                (Identifier, "$user"),
                (Punct, "="),
                (Keyword, "new"),
                (Identifier, "User"),
                (Punct, ";"),
            ]
        );
    }

    #[test]
    fn python_hex_and_comment() {
        assert_eq!(
            lex("x = 0xFF # done", Language::Python),
            vec![
                (Identifier, "x"),
                (Punct, "="),
                (Number, "0xFF"),
                (Comment, "# done"),
            ]
        );
    }

    #[test]
    fn compound_identifiers_stay_whole() {
        assert_eq!(lex("getFullName", Language::Java), vec![(Identifier, "getFullName")]);
        assert_eq!(lex("get_full_name", Language::Python), vec![(Identifier, "get_full_name")]);
    }

    #[test]
    fn numbers() {
        let toks = lex("1 3.14 .5 1e-3 0x1F 10L 1_000 0x1p+3", Language::Java);
        assert!(toks.iter().all(|(c, _)| *c == Number), "{toks:?}");
        assert_eq!(toks.len(), 8);
        assert_eq!(toks[3].1, "1e-3");
        // `-` after a hex digit `e` is an operator.
        assert_eq!(lex("0x1e-1", Language::C), vec![(Number, "0x1e"), (Punct, "-"), (Number, "1")]);
    }

    #[test]
    fn c_style_comments() {
        let toks = lex("a /* b\n c */ d // e\nf", Language::C);
        assert_eq!(
            toks,
            vec![
                (Identifier, "a"),
                (Comment, "/* b\n c */"),
                (Identifier, "d"),
                (Comment, "// e"),
                (Identifier, "f"),
            ]
        );
        // No nesting: the first `*/` closes the comment.
        assert_eq!(
            lex("/* a /* b */ c */", Language::Java),
            vec![(Comment, "/* a /* b */"), (Identifier, "c"), (Punct, "*"), (Punct, "/")]
        );
        // Unterminated comment runs to end of input.
        assert_eq!(lex("x /* y", Language::Java), vec![(Identifier, "x"), (Comment, "/* y")]);
    }

    #[test]
    fn python_strings() {
        assert_eq!(
            lex("s = '''doc\nstring''' + r\"raw\\d\" + f'{x}'", Language::Python),
            vec![
                (Identifier, "s"),
                (Punct, "="),
                (StringLit, "'''doc\nstring'''"),
                (Punct, "+"),
                (StringLit, "r\"raw\\d\""),
                (Punct, "+"),
                (StringLit, "f'{x}'"),
            ]
        );
        // `#` inside a string is not a comment.
        assert_eq!(lex("'a#b'", Language::Python), vec![(StringLit, "'a#b'")]);
    }

    #[test]
    fn escaped_quotes() {
        assert_eq!(
            lex(r#"s = "a\"b"; c"#, Language::Java),
            vec![
                (Identifier, "s"),
                (Punct, "="),
                (StringLit, r#""a\"b""#),
                (Punct, ";"),
                (Identifier, "c"),
            ]
        );
    }

    #[test]
    fn unterminated_string_stops_at_newline() {
        assert_eq!(
            lex("\"abc\nnext", Language::C),
            vec![(StringLit, "\"abc"), (Identifier, "next")]
        );
    }

    #[test]
    fn cpp_raw_and_prefixed_strings() {
        assert_eq!(
            lex("R\"x(a\")b)x\" L\"w\" u8\"s\"", Language::Cpp),
            vec![
                (StringLit, "R\"x(a\")b)x\""),
                (StringLit, "L\"w\""),
                (StringLit, "u8\"s\""),
            ]
        );
    }

    #[test]
    fn csharp_verbatim_and_interpolated() {
        assert_eq!(
            lex("@\"C:\\dir\"\"q\" $\"{x}\" @name", Language::CSharp),
            vec![
                (StringLit, "@\"C:\\dir\"\"q\""),
                (StringLit, "$\"{x}\""),
                (Punct, "@"),
                (Identifier, "name"),
            ]
        );
    }

    #[test]
    fn preprocessor_lines_are_ordinary_tokens() {
        assert_eq!(
            lex("#include <stdio.h>", Language::C),
            vec![
                (Punct, "#"),
                (Identifier, "include"),
                (Punct, "<"),
                (Identifier, "stdio"),
                (Punct, "."),
                (Identifier, "h"),
                (Punct, ">"),
            ]
        );
    }

    #[test]
    fn php_hash_comment_and_attribute() {
        assert_eq!(lex("# c\n$a", Language::Php), vec![(Comment, "# c"), (Identifier, "$a")]);
        assert_eq!(lex("#[Attr]", Language::Php)[0], (Punct, "#"));
        // A lone `$` stays punctuation.
        assert_eq!(lex("$ 1", Language::Php), vec![(Punct, "$"), (Number, "1")]);
    }

    #[test]
    fn dollar_is_punct_outside_php() {
        assert_eq!(lex("$x", Language::Java), vec![(Punct, "$"), (Identifier, "x")]);
    }

    #[test]
    fn keyword_match_is_exact_case() {
        assert_eq!(lex("For for", Language::CSharp), vec![(Identifier, "For"), (Keyword, "for")]);
    }

    #[test]
    fn non_ascii_is_single_char_punct() {
        assert_eq!(
            lex("a\u{e9}b \u{3000}c", Language::Java),
            vec![(Identifier, "a"), (Punct, "\u{e9}"), (Identifier, "b"), (Identifier, "c")]
        );
    }

    #[test]
    fn java_text_block() {
        assert_eq!(
            lex("x = \"\"\"\n  hi \"q\"\n\"\"\";", Language::Java),
            vec![
                (Identifier, "x"),
                (Punct, "="),
                (StringLit, "\"\"\"\n  hi \"q\"\n\"\"\""),
                (Punct, ";"),
            ]
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn any_language() -> impl Strategy<Value = Language> {
            prop::sample::select(Language::ALL.to_vec())
        }

        proptest! {
            #[test]
            fn tokens_are_nonempty_ordered_source_slices(src in "\\PC{0,80}", lang in any_language()) {
                let base = src.as_ptr() as usize;
                let mut last_end = 0;
                for tok in tokenize(&src, lang) {
                    prop_assert!(!tok.text.is_empty());
                    let off = tok.text.as_ptr() as usize - base;
                    prop_assert!(off >= last_end);
                    prop_assert_eq!(&src[off..off + tok.text.len()], tok.text);
                    last_end = off + tok.text.len();
                }
            }

            #[test]
            fn identifiers_relex_to_themselves(src in "[ -~\\n]{0,120}", lang in any_language()) {
                let idents: Vec<&str> = tokenize(&src, lang)
                    .into_iter()
                    .filter(|t| t.class == Identifier)
                    .map(|t| t.text)
                    .collect();
                let joined = idents.join(" ");
                let again: Vec<&str> = tokenize(&joined, lang)
                    .into_iter()
                    .filter(|t| t.class == Identifier)
                    .map(|t| t.text)
                    .collect();
                prop_assert_eq!(idents, again);
            }
        }
    }
}
