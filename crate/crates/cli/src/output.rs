use std::fmt::Write as _;

use clap::ValueEnum;
use podium_core::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Right-aligned columns with a header.
    Table,
    /// `n,value` header, then one row per index.
    Csv,
    /// OEIS b-file: `n value` per line.
    Bfile,
}

/// Values are indexed from 0.
pub fn render(format: Format, values: &[BigInt]) -> String {
    let mut out = String::new();
    match format {
        Format::Table => {
            let texts: Vec<String> = values.iter().map(ToString::to_string).collect();
            let wn = values.len().saturating_sub(1).to_string().len().max(1);
            let wv = texts.iter().map(String::len).max().unwrap_or(0).max(5);
            let _ = writeln!(out, "{:>wn$}  {:>wv$}", "n", "value");
            for (n, v) in texts.iter().enumerate() {
                let _ = writeln!(out, "{n:>wn$}  {v:>wv$}");
            }
        }
        Format::Csv => {
            out.push_str("n,value\n");
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{n},{v}");
            }
        }
        Format::Bfile => {
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{n} {v}");
            }
        }
    }
    out
}

/// All values on one line, separated by single spaces.
pub fn line(values: &[BigInt]) -> String {
    let mut out = values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn formats() {
        let v = vals(&[1, 1, 1, 2, 3]);
        assert_eq!(
            render(Format::Csv, &v),
            "n,value\n0,1\n1,1\n2,1\n3,2\n4,3\n"
        );
        assert_eq!(render(Format::Bfile, &v), "0 1\n1 1\n2 1\n3 2\n4 3\n");
        assert_eq!(
            render(Format::Table, &vals(&[1, -12])),
            "n  value\n0      1\n1    -12\n"
        );
        assert_eq!(line(&vals(&[1, -1, 0])), "1 -1 0\n");
    }

    #[test]
    fn no_trailing_whitespace() {
        let v = vals(&[5, -100, 7]);
        for f in [Format::Table, Format::Csv, Format::Bfile] {
            let text = render(f, &v);
            assert!(text.ends_with('\n'));
            assert!(text.lines().all(|l| l == l.trim_end()), "{f:?}");
        }
    }
}
