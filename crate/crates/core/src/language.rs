use std::fmt;
use std::str::FromStr;

/// The programming languages a corpus can be ingested for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Language {
    Java,
    Python,
    Php,
    C,
    Cpp,
    CSharp,
}

impl Language {
    pub const ALL: [Language; 6] = [
        Language::Java,
        Language::Python,
        Language::Php,
        Language::C,
        Language::Cpp,
        Language::CSharp,
    ];

    /// Canonical manifest spelling.
    pub fn name(self) -> &'static str {
        match self {
            Language::Java => "Java",
            Language::Python => "Python",
            Language::Php => "PHP",
            Language::C => "C",
            Language::Cpp => "Cpp",
            Language::CSharp => "CSharp",
        }
    }

    /// File extensions (without the dot) selected for this language.
    /// Matching is case-sensitive and `.h` belongs to C only.
    pub fn extensions(self) -> &'static [&'static str] {
        match self {
            Language::Java => &["java"],
            Language::Python => &["py"],
            Language::Php => &["php"],
            Language::C => &["c", "h"],
            Language::Cpp => &["cpp", "cc", "cxx", "hpp"],
            Language::CSharp => &["cs"],
        }
    }

    /// Lowercase stem used for resource and output file names.
    pub fn file_stem(self) -> &'static str {
        match self {
            Language::Java => "java",
            Language::Python => "python",
            Language::Php => "php",
            Language::C => "c",
            Language::Cpp => "cpp",
            Language::CSharp => "csharp",
        }
    }

    /// Default skip-gram context window: Python code is terser, so it gets 4.
    pub fn default_window(self) -> u32 {
        match self {
            Language::Python => 4,
            _ => 5,
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown language `{0}`")]
pub struct UnknownLanguage(pub String);

impl FromStr for Language {
    type Err = UnknownLanguage;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lang = match s.trim().to_ascii_lowercase().as_str() {
            "java" => Language::Java,
            "python" => Language::Python,
            "php" => Language::Php,
            "c" => Language::C,
            "cpp" | "c++" => Language::Cpp,
            "csharp" | "c#" => Language::CSharp,
            _ => return Err(UnknownLanguage(s.to_string())),
        };
        Ok(lang)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for lang in Language::ALL {
            assert_eq!(lang.name().parse::<Language>().unwrap(), lang);
        }
        assert_eq!("C++".parse::<Language>().unwrap(), Language::Cpp);
        assert_eq!("c#".parse::<Language>().unwrap(), Language::CSharp);
        assert!("Fortran".parse::<Language>().is_err());
    }

    #[test]
    fn python_window_is_four() {
        assert_eq!(Language::Python.default_window(), 4);
        assert_eq!(Language::Java.default_window(), 5);
    }
}
