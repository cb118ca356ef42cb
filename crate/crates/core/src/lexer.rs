//! Comment stripping and delimiter-driven tokenization of Python source.
//!
//! This is not a full Python-grammar lexer: the downstream model consumes flat
//! token sequences, so all we need are stable token boundaries, kinds, and
//! exact character spans. The grammar, in full:
//!
//! - `#` comments are stripped up to (not including) the newline, so line
//!   structure survives and line-based diff mapping stays valid.
//! - String literals are single tokens, including quotes, an optional 1-2
//!   letter prefix (`r`, `b`, `u`, `f` in any case/combination), and
//!   triple-quoted bodies. Interiors are never sub-lexed. A backslash escapes
//!   the next character for termination purposes. An unterminated
//!   single-quoted literal ends at end of line (triple-quoted at end of file)
//!   and is recorded as a warning.
//! - Identifiers are `[alphabetic or _][alphanumeric or _]*`; those matching a
//!   Python keyword get the keyword kind.
//! - Numbers are lexed with maximal munch: radix prefixes, `_` separators,
//!   decimal points, exponents, and an imaginary suffix.
//! - Operators use maximal munch against the fixed Python operator table
//!   (`**=`, `//`, `->`, `==`, ...); `: ; , . ( ) [ ] { }` are single-character
//!   delimiters.
//! - A run of spaces/tabs at the start of a line is one indentation token;
//!   every `\n` is a newline token; other inter-token whitespace is skipped.
//! - Any other character becomes a one-character operator token plus a
//!   warning, so every input lexes to a stream that reconstructs it exactly.
//!
//! All offsets are 0-based character (Unicode scalar) offsets, not bytes.

use alloc::string::String;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Characters that mark token boundaries: whitespace plus the punctuation set
/// `: ; , . ( ) [ ] { } + - * / % < > = ! & | ^ ~ @ " '`.
pub fn is_boundary_char(c: char) -> bool {
    c.is_whitespace()
        || matches!(
            c,
            ':' | ';'
                | ','
                | '.'
                | '('
                | ')'
                | '['
                | ']'
                | '{'
                | '}'
                | '+'
                | '-'
                | '*'
                | '/'
                | '%'
                | '<'
                | '>'
                | '='
                | '!'
                | '&'
                | '|'
                | '^'
                | '~'
                | '@'
                | '"'
                | '\''
        )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TokenKind {
    Keyword,
    Identifier,
    Operator,
    Delimiter,
    NumberLiteral,
    StringLiteral,
    Newline,
    Indentation,
}

/// One lexical unit with its half-open character span `[start, end)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub text: String,
    pub kind: TokenKind,
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexWarning {
    /// String literal ran into end of line / end of file; position is the
    /// opening quote.
    UnterminatedString { pos: usize },
    /// Character outside the token grammar, emitted as a one-char operator.
    UnexpectedChar { pos: usize, ch: char },
}

#[derive(Debug, Clone, PartialEq)]
pub struct TokenStream {
    pub tokens: Vec<Token>,
    /// Character count of the lexed source.
    pub source_len: usize,
    pub warnings: Vec<LexWarning>,
}

#[derive(Debug, Error)]
pub enum LexError {
    #[error("input is not valid UTF-8 (byte offset {offset})")]
    InvalidUtf8 { offset: usize },
}

/// Comment-stripped source plus the mapping back to original offsets.
#[derive(Debug, Clone)]
pub struct StrippedSource {
    pub text: String,
    /// `map[i]` is the original character offset of stripped character `i`.
    pub map: Vec<usize>,
    pub warnings: Vec<LexWarning>,
}

const PY_KEYWORDS: &[&str] = &[
    "False", "None", "True", "and", "as", "assert", "async", "await", "break", "class", "continue",
    "def", "del", "elif", "else", "except", "finally", "for", "from", "global", "if", "import",
    "in", "is", "lambda", "nonlocal", "not", "or", "pass", "raise", "return", "try", "while",
    "with", "yield",
];

fn is_keyword(s: &str) -> bool {
    PY_KEYWORDS.binary_search(&s).is_ok()
}

fn is_ident_start(c: char) -> bool {
    c == '_' || c.is_alphabetic()
}

fn is_ident_continue(c: char) -> bool {
    c == '_' || c.is_alphanumeric()
}

fn is_string_prefix(chars: &[char]) -> bool {
    (1..=2).contains(&chars.len())
        && chars
            .iter()
            .all(|c| matches!(c, 'r' | 'R' | 'b' | 'B' | 'u' | 'U' | 'f' | 'F'))
}

/// Scans a string literal whose opening quote sits at `quote_pos`.
/// Returns `(end_exclusive, terminated)`. Backslash escapes the next
/// character; unterminated one-line literals stop before the newline,
/// unterminated triple-quoted literals stop at end of input.
fn scan_string(chars: &[char], quote_pos: usize) -> (usize, bool) {
    let q = chars[quote_pos];
    let len = chars.len();
    let triple =
        quote_pos + 2 < len && chars[quote_pos + 1] == q && chars[quote_pos + 2] == q;
    if triple {
        let mut i = quote_pos + 3;
        while i < len {
            if chars[i] == q && i + 2 < len + 1 && i + 2 <= len - 1 && chars[i + 1] == q && chars[i + 2] == q {
                return (i + 3, true);
            }
            if chars[i] == '\\' {
                i += 2;
            } else {
                i += 1;
            }
        }
        (len, false)
    } else {
        let mut i = quote_pos + 1;
        while i < len {
            let c = chars[i];
            if c == q {
                return (i + 1, true);
            }
            if c == '\n' {
                return (i, false);
            }
            if c == '\\' {
                i += 2;
            } else {
                i += 1;
            }
        }
        (len, false)
    }
}

/// Removes `#` comments. Line count is preserved (the newline after a comment
/// stays), string literals are untouched, everything else passes through.
pub fn strip_comments(source: &str) -> String {
    strip_comments_mapped(source).text
}

/// [`strip_comments`] plus the stripped-to-original offset map that the
/// scanner uses to report findings in original file coordinates.
pub fn strip_comments_mapped(source: &str) -> StrippedSource {
    let chars: Vec<char> = source.chars().collect();
    let len = chars.len();
    let mut text = String::with_capacity(source.len());
    let mut map = Vec::with_capacity(len);
    let mut warnings = Vec::new();
    let mut i = 0;
    while i < len {
        let c = chars[i];
        if c == '#' {
            while i < len && chars[i] != '\n' {
                i += 1;
            }
        } else if c == '"' || c == '\'' {
            let (end, terminated) = scan_string(&chars, i);
            if !terminated {
                warnings.push(LexWarning::UnterminatedString { pos: i });
            }
            for (j, &sc) in chars[i..end].iter().enumerate() {
                text.push(sc);
                map.push(i + j);
            }
            i = end;
        } else {
            text.push(c);
            map.push(i);
            i += 1;
        }
    }
    StrippedSource { text, map, warnings }
}

/// Validating entry point for byte input; see [`tokenize`].
pub fn tokenize_bytes(source: &[u8]) -> Result<TokenStream, LexError> {
    match core::str::from_utf8(source) {
        Ok(s) => Ok(tokenize(s)),
        Err(e) => Err(LexError::InvalidUtf8 {
            offset: e.valid_up_to(),
        }),
    }
}

fn scan_number(chars: &[char], start: usize) -> usize {
    let len = chars.len();
    let mut i = start;
    if chars[i] == '0'
        && i + 1 < len
        && matches!(chars[i + 1], 'x' | 'X' | 'o' | 'O' | 'b' | 'B')
        && i + 2 < len
        && (chars[i + 2].is_ascii_alphanumeric() || chars[i + 2] == '_')
    {
        i += 2;
        while i < len && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
            i += 1;
        }
        return i;
    }
    while i < len && (chars[i].is_ascii_digit() || chars[i] == '_') {
        i += 1;
    }
    if i < len && chars[i] == '.' {
        let after = chars.get(i + 1);
        let trailing_dot_float = match after {
            None => true,
            Some(&a) => a.is_ascii_digit() || !(is_ident_continue(a) || a == '.'),
        };
        if trailing_dot_float {
            i += 1;
            while i < len && (chars[i].is_ascii_digit() || chars[i] == '_') {
                i += 1;
            }
        }
    }
    if i < len && matches!(chars[i], 'e' | 'E') {
        let sign = i + 1 < len && matches!(chars[i + 1], '+' | '-');
        let digit_at = i + 1 + usize::from(sign);
        if digit_at < len && chars[digit_at].is_ascii_digit() {
            i = digit_at + 1;
            while i < len && (chars[i].is_ascii_digit() || chars[i] == '_') {
                i += 1;
            }
        }
    }
    if i < len && matches!(chars[i], 'j' | 'J') {
        i += 1;
    }
    i
}

const OPERATORS3: &[&str] = &["**=", "//=", "<<=", ">>="];
const OPERATORS2: &[&str] = &[
    "**", "//", "<<", ">>", "<=", ">=", "==", "!=", "->", "+=", "-=", "*=", "/=", "%=", "&=",
    "|=", "^=", "@=",
];

fn is_operator_char(c: char) -> bool {
    matches!(
        c,
        '+' | '-' | '*' | '/' | '%' | '<' | '>' | '=' | '!' | '&' | '|' | '^' | '~' | '@'
    )
}

fn is_delimiter_char(c: char) -> bool {
    matches!(c, ':' | ';' | ',' | '.' | '(' | ')' | '[' | ']' | '{' | '}')
}

/// Lexes comment-stripped source into a token stream.
///
/// Never fails on `&str` input: unknown characters become one-char operator
/// tokens with a warning, so concatenating token texts with the skipped
/// whitespace always reconstructs the input exactly.
pub fn tokenize(source: &str) -> TokenStream {
    let chars: Vec<char> = source.chars().collect();
    let len = chars.len();
    let mut tokens: Vec<Token> = Vec::new();
    let mut warnings = Vec::new();

    let push = |tokens: &mut Vec<Token>, chars: &[char], kind, start: usize, end: usize| {
        tokens.push(Token {
            text: chars[start..end].iter().collect(),
            kind,
            start,
            end,
        });
    };

    let mut i = 0;
    let mut at_line_start = true;
    while i < len {
        let c = chars[i];
        if at_line_start && matches!(c, ' ' | '\t' | '\r') {
            let start = i;
            while i < len && matches!(chars[i], ' ' | '\t' | '\r') {
                i += 1;
            }
            push(&mut tokens, &chars, TokenKind::Indentation, start, i);
            at_line_start = false;
            continue;
        }
        at_line_start = false;
        if c == '\n' {
            push(&mut tokens, &chars, TokenKind::Newline, i, i + 1);
            i += 1;
            at_line_start = true;
        } else if matches!(c, ' ' | '\t' | '\r') {
            i += 1;
        } else if c == '"' || c == '\'' {
            let (end, terminated) = scan_string(&chars, i);
            if !terminated {
                warnings.push(LexWarning::UnterminatedString { pos: i });
            }
            push(&mut tokens, &chars, TokenKind::StringLiteral, i, end);
            i = end;
        } else if is_ident_start(c) {
            let start = i;
            while i < len && is_ident_continue(chars[i]) {
                i += 1;
            }
            if i < len
                && (chars[i] == '"' || chars[i] == '\'')
                && is_string_prefix(&chars[start..i])
            {
                let (end, terminated) = scan_string(&chars, i);
                if !terminated {
                    warnings.push(LexWarning::UnterminatedString { pos: i });
                }
                push(&mut tokens, &chars, TokenKind::StringLiteral, start, end);
                i = end;
            } else {
                let text: String = chars[start..i].iter().collect();
                let kind = if is_keyword(&text) {
                    TokenKind::Keyword
                } else {
                    TokenKind::Identifier
                };
                tokens.push(Token {
                    text,
                    kind,
                    start,
                    end: i,
                });
            }
        } else if c.is_ascii_digit()
            || (c == '.'
                && i + 1 < len
                && chars[i + 1].is_ascii_digit()
                && (i == 0 || !is_ident_continue(chars[i - 1])))
        {
            let end = scan_number(&chars, i);
            push(&mut tokens, &chars, TokenKind::NumberLiteral, i, end);
            i = end;
        } else if is_operator_char(c) {
            let take = |table: &[&str], width: usize| -> bool {
                if i + width > len {
                    return false;
                }
                let slice: String = chars[i..i + width].iter().collect();
                table.contains(&slice.as_str())
            };
            let width = if take(OPERATORS3, 3) {
                3
            } else if take(OPERATORS2, 2) {
                2
            } else {
                1
            };
            push(&mut tokens, &chars, TokenKind::Operator, i, i + width);
            i += width;
        } else if is_delimiter_char(c) {
            push(&mut tokens, &chars, TokenKind::Delimiter, i, i + 1);
            i += 1;
        } else {
            if c != '\\' {
                warnings.push(LexWarning::UnexpectedChar { pos: i, ch: c });
            }
            push(&mut tokens, &chars, TokenKind::Operator, i, i + 1);
            i += 1;
        }
        if i > 0 && !at_line_start {
            at_line_start = chars[i - 1] == '\n';
        }
    }

    TokenStream {
        tokens,
        source_len: len,
        warnings,
    }
}
