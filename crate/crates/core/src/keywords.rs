//! Bundled reserved-word lists, one keyword per line.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::Language;

const JAVA: &str = include_str!("../resources/keywords/java.txt");
const PYTHON: &str = include_str!("../resources/keywords/python.txt");
const PHP: &str = include_str!("../resources/keywords/php.txt");
const C: &str = include_str!("../resources/keywords/c.txt");
const CPP: &str = include_str!("../resources/keywords/cpp.txt");
const CSHARP: &str = include_str!("../resources/keywords/csharp.txt");

/// Parse a keyword resource: one keyword per line, blank lines and `#` comments ignored.
pub fn parse_keyword_list(text: &str) -> HashSet<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

fn resource(language: Language) -> &'static str {
    match language {
        Language::Java => JAVA,
        Language::Python => PYTHON,
        Language::Php => PHP,
        Language::C => C,
        Language::Cpp => CPP,
        Language::CSharp => CSHARP,
    }
}

/// The bundled reserved words for `language`. Matching is exact-case.
pub fn keyword_set(language: Language) -> &'static HashSet<String> {
    static SETS: [OnceLock<HashSet<String>>; 6] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let slot = Language::ALL
        .iter()
        .position(|&l| l == language)
        .expect("language in ALL");
    SETS[slot].get_or_init(|| parse_keyword_list(resource(language)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn java_has_fifty_reserved_words() {
        let java = keyword_set(Language::Java);
        assert_eq!(java.len(), 50);
        for kw in ["catch", "int", "class"] {
            assert!(java.contains(kw), "{kw}");
        }
    }

    #[test]
    fn python_keywords_exclude_builtins() {
        let py = keyword_set(Language::Python);
        assert!(py.contains("def"));
        assert!(py.contains("lambda"));
        assert!(!py.contains("print"));
    }

    #[test]
    fn php_has_new() {
        assert!(keyword_set(Language::Php).contains("new"));
    }

    #[test]
    fn every_language_has_keywords() {
        for lang in Language::ALL {
            assert!(!keyword_set(lang).is_empty(), "{lang}");
        }
    }

    #[test]
    fn csharp_contextual_keywords_are_not_reserved() {
        let cs = keyword_set(Language::CSharp);
        assert!(cs.contains("for"));
        assert!(!cs.contains("For"));
        assert!(!cs.contains("var"));
        assert!(!cs.contains("async"));
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let set = parse_keyword_list("# header\nfoo\n\n  bar  \n");
        assert_eq!(set.len(), 2);
        assert!(set.contains("bar"));
    }
}
