//! Line-oriented manifest of identities.
//!
//! ```text
//! # comment
//! [identity]
//! id=thm-3-1
//! ref=triangular-number recurrence for pod
//! quote=...
//! lhs=gf(pod) * theta{n in N}((-1)^ceil2(n); n*(n + 1) div 2)
//! rhs=1
//! order=300
//! mod=2
//! ```

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::dsl::{parse, Expr, ParseError};
use crate::series::Modulus;

const BUNDLED: &str = include_str!("../../manifest/identities.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityRecord {
    pub id: String,
    pub description: String,
    pub reference: String,
    pub quote: String,
    pub lhs_text: String,
    pub rhs_text: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub order: usize,
    pub modulus: Option<Modulus>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ManifestError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("line {line}: {field}: {source}")]
    Expr {
        line: usize,
        field: &'static str,
        #[source]
        source: ParseError,
    },
}

fn format_err(line: usize, message: impl Into<String>) -> ManifestError {
    ManifestError::Format {
        line,
        message: message.into(),
    }
}

#[derive(Default)]
struct Draft {
    start: usize,
    fields: Vec<(String, String, usize)>,
}

impl Draft {
    fn take(&mut self, key: &str) -> Option<(String, usize)> {
        let i = self.fields.iter().position(|(k, _, _)| k == key)?;
        let (_, v, line) = self.fields.remove(i);
        Some((v, line))
    }

    fn require(&mut self, key: &str) -> Result<(String, usize), ManifestError> {
        self.take(key)
            .ok_or_else(|| format_err(self.start, format!("record is missing `{key}=`")))
    }

    fn finish(mut self) -> Result<IdentityRecord, ManifestError> {
        let (id, _) = self.require("id")?;
        let (reference, _) = self.require("ref")?;
        let (quote, _) = self.require("quote")?;
        let (lhs_text, lhs_line) = self.require("lhs")?;
        let (rhs_text, rhs_line) = self.require("rhs")?;
        let (order_text, order_line) = self.require("order")?;
        let description = self.take("desc").map(|(v, _)| v).unwrap_or_default();
        let modulus = match self.take("mod") {
            None => None,
            Some((text, line)) => {
                let m: BigInt = text
                    .parse()
                    .map_err(|_| format_err(line, format!("invalid modulus `{text}`")))?;
                Some(Modulus::new(m).map_err(|e| format_err(line, e.to_string()))?)
            }
        };
        let order = order_text
            .parse()
            .map_err(|_| format_err(order_line, format!("invalid order `{order_text}`")))?;
        let lhs = parse(&lhs_text).map_err(|source| ManifestError::Expr {
            line: lhs_line,
            field: "lhs",
            source,
        })?;
        let rhs = parse(&rhs_text).map_err(|source| ManifestError::Expr {
            line: rhs_line,
            field: "rhs",
            source,
        })?;
        Ok(IdentityRecord {
            id,
            description,
            reference,
            quote,
            lhs_text,
            rhs_text,
            lhs,
            rhs,
            order,
            modulus,
        })
    }
}

const KEYS: [&str; 8] = ["id", "desc", "ref", "quote", "lhs", "rhs", "order", "mod"];

/// Parses manifest text. Line numbers in errors are 1-based.
pub fn parse_manifest(text: &str) -> Result<Vec<IdentityRecord>, ManifestError> {
    let mut records = Vec::new();
    let mut current: Option<Draft> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        if let Some(pos) = raw.find(|c: char| !(c == '\t' || (' '..='~').contains(&c))) {
            return Err(format_err(
                line_no,
                format!("non-printable or non-ASCII character at column {}", pos + 1),
            ));
        }
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "[identity]" {
            if let Some(draft) = current.take() {
                records.push(draft.finish()?);
            }
            current = Some(Draft {
                start: line_no,
                ..Draft::default()
            });
            continue;
        }
        let Some(draft) = current.as_mut() else {
            return Err(format_err(line_no, "field outside an [identity] record"));
        };
        let Some((key, value)) = line.split_once('=') else {
            return Err(format_err(
                line_no,
                format!("expected `key=value`, found `{line}`"),
            ));
        };
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(format_err(line_no, format!("unknown field `{key}`")));
        }
        if draft.fields.iter().any(|(k, _, _)| k == key) {
            return Err(format_err(line_no, format!("duplicate field `{key}`")));
        }
        draft
            .fields
            .push((key.to_owned(), value.trim().to_owned(), line_no));
    }
    if let Some(draft) = current {
        records.push(draft.finish()?);
    }
    let mut seen = HashSet::new();
    for r in &records {
        if !seen.insert(r.id.as_str()) {
            return Err(format_err(0, format!("duplicate id `{}`", r.id)));
        }
    }
    Ok(records)
}

/// Raw text of the manifest compiled into the library.
pub fn bundled_manifest_text() -> &'static str {
    BUNDLED
}

/// The identities shipped with the library.
pub fn bundled_manifest() -> Vec<IdentityRecord> {
    parse_manifest(BUNDLED).expect("bundled manifest is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_manifest_loads() {
        let records = bundled_manifest();
        assert!(records.len() >= 38, "{}", records.len());
        assert!(records.iter().any(|r| r.id == "thm-3-1"));
        for r in &records {
            assert!(!r.quote.is_empty() && !r.reference.is_empty(), "{}", r.id);
            assert!(r.order > 0);
        }
        let mod2 = records.iter().filter(|r| r.modulus.is_some()).count();
        assert_eq!(mod2, 4);
    }

    #[test]
    fn parses_minimal_record() {
        let text = "# c\n\n[identity]\nid=x\nref=r\nquote=a=b\nlhs=gf(p)\nrhs= 1 / poch(q^1, q^1)\norder=20\n";
        let rs = parse_manifest(text).unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].quote, "a=b");
        assert_eq!(rs[0].rhs_text, "1 / poch(q^1, q^1)");
        assert_eq!(rs[0].order, 20);
        assert_eq!(rs[0].modulus, None);
        assert_eq!(rs[0].description, "");
    }

    #[test]
    fn rejects_malformed_input() {
        let base = "[identity]\nid=x\nref=r\nquote=q\nlhs=1\nrhs=1\norder=5\n";
        assert!(parse_manifest(base).is_ok());
        assert!(matches!(
            parse_manifest("id=x\n"),
            Err(ManifestError::Format { line: 1, .. })
        ));
        let missing = base.replace("order=5\n", "");
        assert!(parse_manifest(&missing).is_err());
        let bad_expr = base.replace("rhs=1", "rhs=gf(pod");
        match parse_manifest(&bad_expr) {
            Err(ManifestError::Expr {
                line,
                field,
                source,
            }) => {
                assert_eq!((line, field, source.offset), (6, "rhs", 6));
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_manifest(&format!("{base}mod=1\n")).is_err());
        assert!(parse_manifest(&format!("{base}extra=1\n")).is_err());
        assert!(parse_manifest(&format!("{base}{base}")).is_err());
        assert!(parse_manifest(&base.replace("quote=q", "quote=\u{e9}")).is_err());
    }
}
