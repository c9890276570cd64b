//! Text formats for codes, triple systems and permutations, plus the JSON
//! descriptor used for Mollard codes too large to enumerate.
//!
//! Code files: optional `#` comment lines, a `n=<len>` header, then one
//! 0/1 word per line. STS files: `n=<order>` header, then `i j k` lines.
//! Permutation files: one permutation per line as a 1-based image list.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bitcode::{BinaryCode, BitWord};
use crate::design::TripleSystem;
use crate::error::{Error, Result};
use crate::symmetry::Permutation;

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line: Option<&str>) -> Result<usize> {
    let line = line.ok_or_else(|| Error::Parse("empty input".into()))?;
    let value = line
        .strip_prefix("n=")
        .ok_or_else(|| Error::Parse(format!("expected n=<int> header, found {line:?}")))?;
    value
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad length in header: {e}")))
}

pub fn format_code(code: &BinaryCode) -> String {
    let mut out = String::with_capacity((code.len() + 1) * (code.size() + 1));
    out.push_str(&format!("n={}\n", code.len()));
    for w in code.words() {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_code(text: &str) -> Result<BinaryCode> {
    let mut lines = content_lines(text);
    let n = parse_header(lines.next())?;
    let words: Vec<BitWord> = lines.map(BitWord::parse).collect::<Result<_>>()?;
    if words.iter().any(|w| w.len() != n) {
        return Err(Error::Parse("word length differs from header".into()));
    }
    BinaryCode::from_words(n, words)
}

pub fn write_code(code: &BinaryCode, path: &Path) -> Result<()> {
    fs::write(path, format_code(code)).map_err(Error::from)
}

pub fn read_code(path: &Path) -> Result<BinaryCode> {
    parse_code(&fs::read_to_string(path)?)
}

pub fn format_sts(ts: &TripleSystem) -> String {
    let mut out = format!("n={}\n", ts.order());
    for t in ts.triples() {
        out.push_str(&format!("{} {} {}\n", t[0], t[1], t[2]));
    }
    out
}

pub fn parse_sts(text: &str) -> Result<TripleSystem> {
    let mut lines = content_lines(text);
    let n = parse_header(lines.next())?;
    let mut triples = Vec::new();
    for line in lines {
        let points: Vec<usize> = line
            .split_whitespace()
            .map(|p| p.parse().map_err(|e| Error::Parse(format!("bad point: {e}"))))
            .collect::<Result<_>>()?;
        let [i, j, k] = points[..] else {
            return Err(Error::Parse(format!("expected three points, found {line:?}")));
        };
        triples.push([i, j, k]);
    }
    TripleSystem::new(n, triples)
}

pub fn write_sts(ts: &TripleSystem, path: &Path) -> Result<()> {
    fs::write(path, format_sts(ts)).map_err(Error::from)
}

pub fn read_sts(path: &Path) -> Result<TripleSystem> {
    parse_sts(&fs::read_to_string(path)?)
}

pub fn format_permutations(perms: &[Permutation]) -> String {
    let mut out = String::new();
    for p in perms {
        let images: Vec<String> = p.images().iter().map(|&i| (i + 1).to_string()).collect();
        out.push_str(&images.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_permutations(text: &str) -> Result<Vec<Permutation>> {
    content_lines(text)
        .map(|line| {
            let images: Vec<usize> = line
                .split_whitespace()
                .map(|p| {
                    let v: usize = p
                        .parse()
                        .map_err(|e| Error::Parse(format!("bad image: {e}")))?;
                    if v == 0 {
                        return Err(Error::Parse("permutation images are 1-based".into()));
                    }
                    Ok(v - 1)
                })
                .collect::<Result<_>>()?;
            Permutation::from_images(images)
        })
        .collect()
}

pub fn write_permutations(perms: &[Permutation], path: &Path) -> Result<()> {
    fs::write(path, format_permutations(perms)).map_err(Error::from)
}

pub fn read_permutations(path: &Path) -> Result<Vec<Permutation>> {
    parse_permutations(&fs::read_to_string(path)?)
}

/// On-disk description of a Mollard code that is too large to write out
/// word by word: component files plus the fixed grid layout.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MollardDescriptor {
    pub t: usize,
    pub m: usize,
    pub c_file: String,
    pub d_file: String,
    pub layout: String,
}

impl MollardDescriptor {
    pub fn new(t: usize, m: usize, c_file: &str, d_file: &str) -> Self {
        MollardDescriptor {
            t,
            m,
            c_file: c_file.to_string(),
            d_file: d_file.to_string(),
            layout: "r*(m+1)+s".to_string(),
        }
    }
}

pub fn write_mollard_descriptor(desc: &MollardDescriptor, path: &Path) -> Result<()> {
    let json = serde_json::to_string_pretty(desc)
        .map_err(|e| Error::Parse(format!("descriptor serialization: {e}")))?;
    fs::write(path, json).map_err(Error::from)
}

pub fn read_mollard_descriptor(path: &Path) -> Result<MollardDescriptor> {
    let text = fs::read_to_string(path)?;
    let desc: MollardDescriptor =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad descriptor: {e}")))?;
    if desc.layout != "r*(m+1)+s" {
        return Err(Error::Parse(format!("unsupported layout {:?}", desc.layout)));
    }
    Ok(desc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitcode::hamming_code;
    use crate::design::sts_of_code;

    #[test]
    fn code_round_trip() {
        let c = hamming_code(3).unwrap();
        let parsed = parse_code(&format_code(&c)).unwrap();
        assert_eq!(parsed, c);
    }

    #[test]
    fn code_parsing_rejects_bad_input() {
        assert!(parse_code("").is_err());
        assert!(parse_code("m=3\n111\n").is_err());
        assert!(parse_code("n=3\n11\n").is_err());
        assert!(parse_code("n=3\n121\n").is_err());
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let c = parse_code("# a comment\n\nn=3\n000\n# another\n111\n").unwrap();
        assert_eq!(c.size(), 2);
    }

    #[test]
    fn sts_round_trip() {
        let ts = sts_of_code(&hamming_code(3).unwrap()).unwrap();
        let parsed = parse_sts(&format_sts(&ts)).unwrap();
        assert_eq!(parsed, ts);
        assert!(parse_sts("n=3\n1 2\n").is_err());
    }

    #[test]
    fn permutation_round_trip() {
        let perms = vec![
            Permutation::identity(4),
            Permutation::from_cycle(4, &[0, 1, 2, 3]),
        ];
        let parsed = parse_permutations(&format_permutations(&perms)).unwrap();
        assert_eq!(parsed, perms);
        assert!(parse_permutations("0 1 2 3\n").is_err());
    }

    #[test]
    fn descriptor_round_trip() {
        let dir = std::env::temp_dir().join("mollard_descriptor_test");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("m.json");
        let desc = MollardDescriptor::new(3, 15, "c.code", "d.code");
        write_mollard_descriptor(&desc, &path).unwrap();
        let back = read_mollard_descriptor(&path).unwrap();
        assert_eq!(back.t, 3);
        assert_eq!(back.m, 15);
        assert_eq!(back.layout, "r*(m+1)+s");
    }
}
