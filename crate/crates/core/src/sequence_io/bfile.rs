//! OEIS b-file format: optional `#` comment lines, then one `index value`
//! pair per line with consecutive indices.

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    /// e.g. `A035607`; empty when neither a comment nor the file name says.
    pub sequence_id: String,
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn first_index(&self) -> Option<i64> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Value at sequence index `index`, if covered.
    pub fn get(&self, index: i64) -> Option<&BigInt> {
        let first = self.first_index()?;
        let pos = usize::try_from(index - first).ok()?;
        self.entries.get(pos).map(|(_, v)| v)
    }

    pub fn values(&self) -> impl Iterator<Item = &BigInt> {
        self.entries.iter().map(|(_, v)| v)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        if !self.sequence_id.is_empty() {
            let _ = writeln!(out, "# {}", self.sequence_id);
        }
        for (i, v) in &self.entries {
            let _ = writeln!(out, "{i} {v}");
        }
        out
    }
}

fn find_id(text: &str) -> Option<String> {
    let bytes = text.as_bytes();
    (0..bytes.len().saturating_sub(6)).find_map(|i| {
        let cand = &text[i..i + 7];
        let ok = bytes[i] == b'A' && cand[1..].bytes().all(|b| b.is_ascii_digit());
        let bounded = i == 0 || !bytes[i - 1].is_ascii_alphanumeric();
        (ok && bounded).then(|| cand.to_string())
    })
}

pub fn parse_bfile(content: &str) -> Result<BFile> {
    let mut sequence_id = String::new();
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (lineno, raw) in content.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if sequence_id.is_empty() {
                if let Some(id) = find_id(comment) {
                    sequence_id = id;
                }
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected `index value`, found {line:?}"),
            });
        };
        let index: i64 = idx.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad index {idx:?}"),
        })?;
        let value: BigInt = val.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad value {val:?}"),
        })?;
        if let Some(&(prev, _)) = entries.last() {
            if index != prev + 1 {
                return Err(Error::IndexGap {
                    line: line_no,
                    previous: prev,
                    expected: prev + 1,
                    found: index,
                });
            }
        }
        entries.push((index, value));
    }
    Ok(BFile {
        sequence_id,
        entries,
    })
}

/// Reads a local b-file. The sequence id falls back to the file name
/// (`b035607.txt` gives `A035607`).
pub fn read_bfile(path: &Path) -> Result<BFile> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut bfile = parse_bfile(&text)?;
    if bfile.sequence_id.is_empty() {
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("");
        if let Some(digits) = stem.strip_prefix('b') {
            if digits.len() == 6 && digits.bytes().all(|b| b.is_ascii_digit()) {
                bfile.sequence_id = format!("A{digits}");
            }
        }
    }
    Ok(bfile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn values(b: &BFile) -> Vec<(i64, i64)> {
        b.entries.iter().map(|(i, v)| (*i, v.try_into().unwrap())).collect()
    }

    #[test]
    fn plain_lines() {
        let b = parse_bfile("0 1\n1 1\n2 2\n").unwrap();
        assert_eq!(values(&b), [(0, 1), (1, 1), (2, 2)]);
        assert_eq!(b.sequence_id, "");
    }

    #[test]
    fn comments_and_offset() {
        let b = parse_bfile("# comment\n5 38\n6 16\n").unwrap();
        assert_eq!(values(&b), [(5, 38), (6, 16)]);
        assert_eq!(b.get(6), Some(&BigInt::from(16)));
        assert_eq!(b.get(4), None);
    }

    #[test]
    fn id_from_comment() {
        let b = parse_bfile("# A035607 (b-file)\n\n0 1\n").unwrap();
        assert_eq!(b.sequence_id, "A035607");
    }

    #[test]
    fn big_and_negative_values() {
        let b = parse_bfile("0 -3\n1 123456789012345678901234567890\n").unwrap();
        assert_eq!(b.entries[1].1.to_string(), "123456789012345678901234567890");
        assert_eq!(b.entries[0].1, BigInt::from(-3));
    }

    #[test]
    fn malformed_line_reports_number() {
        let err = parse_bfile("0 1\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(matches!(parse_bfile("0 x\n").unwrap_err(), Error::Parse { line: 1, .. }));
        assert!(matches!(parse_bfile("0 1 2\n").unwrap_err(), Error::Parse { line: 1, .. }));
    }

    #[test]
    fn gap_is_structural_error() {
        let err = parse_bfile("0 1\n1 1\n3 2\n").unwrap_err();
        assert!(matches!(err, Error::IndexGap { line: 3, expected: 2, found: 3, .. }));
    }

    proptest! {
        #[test]
        fn render_round_trips(
            start in -5i64..100,
            vals in prop::collection::vec(any::<i64>(), 0..40),
            id in prop::option::of(0u32..1_000_000),
        ) {
            let b = BFile {
                sequence_id: id.map(|d| format!("A{d:06}")).unwrap_or_default(),
                entries: vals.iter().enumerate().map(|(i, &v)| (start + i as i64, BigInt::from(v))).collect(),
            };
            prop_assert_eq!(parse_bfile(&b.render()).unwrap(), b);
        }
    }
}
