//! Text parsers for CLI inputs and the JSON report schema.
//!
//! Rationals travel as strings in their reduced `Display` form (`"-4/5"`,
//! `"0"`), never as floats, so every report round-trips byte for byte.

use serde::{Deserialize, Serialize};

use crate::catalog::{CaseCheck, CatalogRecord};
use crate::error::{Error, Result};
use crate::quotient::{IrredSummand, QuotientKind, QuotientReport};
use crate::rootsys::{TypeLabel, Q};

/// Simple-reflection indices separated by spaces or commas; `""`, `"id"` and `"e"` are the identity.
pub fn parse_word(input: &str) -> Result<Vec<usize>> {
    let trimmed = input.trim();
    if trimmed.is_empty() || trimmed == "id" || trimmed == "e" {
        return Ok(Vec::new());
    }
    trimmed
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(0) => Err(Error::Parse("word letters start at 1".into())),
            Ok(i) => Ok(i),
            Err(_) => Err(Error::Parse(format!("bad word letter {t:?}"))),
        })
        .collect()
}

/// Comma-separated integer coordinates, e.g. `"0,2,2,5"`.
pub fn parse_chi(input: &str) -> Result<Vec<i64>> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty coordinate list".into()));
    }
    trimmed
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad coordinate {t:?}")))
        })
        .collect()
}

/// `"a"` or `"a/b"` with `b != 0`.
pub fn parse_rational(input: &str) -> Result<Q> {
    let t = input.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let parse = |s: &str| {
        s.parse::<i64>()
            .ok()
            .filter(|&v| v != i64::MIN)
            .ok_or_else(|| Error::Parse(format!("bad rational {input:?}")))
    };
    let (num, den) = (parse(num)?, parse(den)?);
    if den == 0 {
        return Err(Error::Parse(format!("zero denominator in {input:?}")));
    }
    Ok(Q::new(num, den))
}

pub fn format_rational(q: &Q) -> String {
    q.to_string()
}

pub fn format_word(word: &[usize]) -> String {
    word.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseJson {
    #[serde(rename = "type")]
    pub label: TypeLabel,
    pub n: usize,
    pub r: usize,
    pub s: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandJson {
    pub sigma: Vec<usize>,
    pub hw_left: Vec<i64>,
    pub hw_right: Vec<i64>,
    pub dim_left: u64,
    pub dim_right: u64,
}

impl From<&IrredSummand> for SummandJson {
    fn from(x: &IrredSummand) -> Self {
        SummandJson {
            sigma: x.sigma.parts.clone(),
            hw_left: x.hw_left.clone(),
            hw_right: x.hw_right.clone(),
            dim_left: x.dim_left as u64,
            dim_right: x.dim_right as u64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientJson {
    pub case: CaseJson,
    pub word: String,
    pub pairing: String,
    pub ss_eq_s: bool,
    pub kind: String,
    pub k: usize,
    pub a: Option<i64>,
    pub rows: Option<usize>,
    pub cols: Option<usize>,
    pub m_used: i64,
    pub hilbert: Vec<u64>,
    pub decomposition: Vec<SummandJson>,
    pub notes: Vec<String>,
}

impl QuotientJson {
    pub fn from_report(report: &QuotientReport, hilbert: &[u128], decomposition: &[IrredSummand]) -> Self {
        let (rows, cols) = match report.kind {
            QuotientKind::MatrixProj { rows, cols, .. } => (Some(rows), Some(cols)),
            _ => (None, None),
        };
        QuotientJson {
            case: CaseJson {
                label: report.label,
                n: report.rank,
                r: report.r,
                s: report.s,
            },
            word: format_word(&report.word),
            pairing: format_rational(&report.pairing),
            ss_eq_s: report.ss_eq_s,
            kind: report.kind.name().to_string(),
            k: report.k,
            a: report.kind.twist(),
            rows,
            cols,
            m_used: report.m_used,
            hilbert: hilbert.iter().map(|&h| h as u64).collect(),
            decomposition: decomposition.iter().map(SummandJson::from).collect(),
            notes: report.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinimalJson {
    pub case: CaseJson,
    pub word: String,
    pub pairing: String,
    pub ss_eq_s: bool,
    pub length: usize,
    pub m: i64,
    pub q: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub word: String,
    pub length: usize,
    pub pairing: String,
    pub admits: bool,
    pub admits_t: bool,
    pub ss_eq_s: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AntichainJson {
    pub word: String,
    pub pairing: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalyzeJson {
    #[serde(rename = "type")]
    pub label: TypeLabel,
    pub n: usize,
    pub chi: Vec<i64>,
    pub chi_root: Vec<String>,
    pub j: Vec<usize>,
    pub s: usize,
    pub minimal_admitting: Vec<AntichainJson>,
    pub ss_eq_s_whole_space: bool,
    pub elements: Vec<ElementJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CosetElementJson {
    pub word: String,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumerateJson {
    #[serde(rename = "type")]
    pub label: TypeLabel,
    pub n: usize,
    pub j: Vec<usize>,
    pub size: usize,
    pub elements: Vec<CosetElementJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecomposeJson {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub k_deg: usize,
    pub total: u64,
    pub summands: Vec<SummandJson>,
}

/// A catalog row with the searched word and any discrepancy against it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogCaseJson {
    #[serde(rename = "type")]
    pub label: TypeLabel,
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub word: String,
    pub searched: String,
    pub pairing: String,
    pub ss_eq_s: bool,
    pub length: usize,
    pub discrepancies: Vec<String>,
}

impl CatalogCaseJson {
    pub fn new(record: &CatalogRecord, check: &CaseCheck) -> Self {
        CatalogCaseJson {
            label: record.label,
            n: record.n,
            r: record.r,
            s: record.s,
            word: record.word.clone(),
            searched: check.searched.clone(),
            pairing: record.pairing.clone(),
            ss_eq_s: record.ss_eq_s,
            length: record.length,
            discrepancies: check.discrepancies.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriterionJson {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyJson {
    pub passed: usize,
    pub total: usize,
    pub criteria: Vec<CriterionJson>,
}

/// Pretty JSON with fields in declaration order.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize without failure")
}

pub fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::{decompose_rk, quotient_of_minimal};
    use crate::rootsys::RootSystem;
    use proptest::prelude::*;

    #[test]
    fn words() {
        assert_eq!(parse_word("2 1 3 2").unwrap(), vec![2, 1, 3, 2]);
        assert_eq!(parse_word(" 2,1, 3 ").unwrap(), vec![2, 1, 3]);
        assert!(parse_word("id").unwrap().is_empty());
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("0").is_err());
        assert!(parse_word("2 x").is_err());
    }

    #[test]
    fn characters() {
        assert_eq!(parse_chi("0,2,2,5").unwrap(), vec![0, 2, 2, 5]);
        assert_eq!(parse_chi(" 1 , -3 ").unwrap(), vec![1, -3]);
        assert!(parse_chi("").is_err());
        assert!(parse_chi("1,,2").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-4/5").unwrap(), Q::new(-4, 5));
        assert_eq!(parse_rational("6/4").unwrap(), Q::new(3, 2));
        assert_eq!(parse_rational("7").unwrap(), Q::from_integer(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("-9223372036854775808").is_err());
        assert_eq!(format_rational(&Q::new(0, 3)), "0");
    }

    #[test]
    fn quotient_report_round_trips() {
        let sys = RootSystem::new(TypeLabel::A, 4).unwrap();
        let report = quotient_of_minimal(&sys, 2, 2).unwrap();
        let json = QuotientJson::from_report(&report, &[1, 35, 165], &decompose_rk(5, 2, 2, 1).unwrap());
        let text = to_json(&json);
        let back: QuotientJson = from_json(&text).unwrap();
        assert_eq!(back, json);
        assert_eq!(to_json(&back), text);
        assert!(text.contains("\"pairing\": \"-4/5\""));
        assert!(from_json::<QuotientJson>("{\"case\": 1}").is_err());
    }

    proptest! {
        #[test]
        fn rational_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..1_000_000) {
            let q = Q::new(n, d);
            prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }

        #[test]
        fn word_round_trip(word in proptest::collection::vec(1usize..9, 0..20)) {
            prop_assert_eq!(parse_word(&format_word(&word)).unwrap(), word);
        }

        #[test]
        fn parsers_never_panic(text in ".{0,40}") {
            let _ = parse_word(&text);
            let _ = parse_chi(&text);
            let _ = parse_rational(&text);
        }
    }
}
