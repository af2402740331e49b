use super::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Int,
    Name,
    Keyword,
    Symbol,
    Eof,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub offset: usize,
}

pub const KEYWORDS: &[&str] = &["poch", "gf", "subst", "theta", "in", "div", "ceil2", "q"];

const SYMBOLS: &[u8] = b"+-*/^(){},;";

/// Splits `src` into tokens, ending with a single `Eof` token at `src.len()`.
pub fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let kind = if b.is_ascii_whitespace() {
            i += 1;
            continue;
        } else if b.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            TokenKind::Int
        } else if b.is_ascii_alphabetic() || b == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            if KEYWORDS.contains(&&src[start..i]) {
                TokenKind::Keyword
            } else {
                TokenKind::Name
            }
        } else if SYMBOLS.contains(&b) {
            i += 1;
            TokenKind::Symbol
        } else {
            let ch = src[start..].chars().next().unwrap_or('?');
            return Err(ParseError::invalid_character(start, ch));
        };
        tokens.push(Token {
            kind,
            text: src[start..i].to_owned(),
            offset: start,
        });
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        text: String::new(),
        offset: src.len(),
    });
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_and_kinds() {
        let toks = lex("poch(-q^12, q^2)").unwrap();
        let summary: Vec<(TokenKind, &str, usize)> = toks
            .iter()
            .map(|t| (t.kind, t.text.as_str(), t.offset))
            .collect();
        assert_eq!(summary[0], (TokenKind::Keyword, "poch", 0));
        assert_eq!(summary[3], (TokenKind::Keyword, "q", 6));
        assert_eq!(summary[5], (TokenKind::Int, "12", 8));
        assert_eq!(summary.last().unwrap(), &(TokenKind::Eof, "", 16));
        assert!(toks.windows(2).all(|w| w[0].offset <= w[1].offset));
    }

    #[test]
    fn ceil2_is_one_keyword() {
        let toks = lex("ceil2(n)").unwrap();
        assert_eq!(toks[0].text, "ceil2");
        assert_eq!(toks[0].kind, TokenKind::Keyword);
    }

    #[test]
    fn rejects_stray_bytes() {
        let err = lex("1 + $").unwrap_err();
        assert_eq!(err.offset, 4);
    }
}
