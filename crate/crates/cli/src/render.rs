use std::error::Error;
use std::fmt::Write as _;
use std::io::{self, Write};

use schubert_git::codec::{
    to_json, AnalyzeJson, CatalogCaseJson, DecomposeJson, EnumerateJson, MinimalJson, QuotientJson, SummandJson,
    VerifyJson,
};

use crate::Format;

pub enum Report {
    Minimal(MinimalJson),
    Analyze(AnalyzeJson),
    Quotient(QuotientJson),
    Decompose(DecomposeJson),
    Enumerate(EnumerateJson),
    Catalog(Vec<CatalogCaseJson>),
    /// Printable lines and the structured result.
    Verify(Vec<String>, VerifyJson),
}

impl Report {
    /// False when the report carries a failed check.
    pub fn passed(&self) -> bool {
        match self {
            Report::Catalog(cases) => cases.iter().all(|c| c.discrepancies.is_empty()),
            Report::Verify(_, v) => v.passed == v.total,
            _ => true,
        }
    }

    fn json(&self) -> String {
        match self {
            Report::Minimal(x) => to_json(x),
            Report::Analyze(x) => to_json(x),
            Report::Quotient(x) => to_json(x),
            Report::Decompose(x) => to_json(x),
            Report::Enumerate(x) => to_json(x),
            Report::Catalog(x) => to_json(x),
            Report::Verify(_, x) => to_json(x),
        }
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        match self {
            Report::Minimal(x) => (
                vec!["type", "n", "r", "s", "word", "pairing", "ss_eq_s", "length", "m", "q"],
                vec![vec![
                    x.case.label.to_string(),
                    x.case.n.to_string(),
                    x.case.r.to_string(),
                    x.case.s.to_string(),
                    x.word.clone(),
                    x.pairing.clone(),
                    x.ss_eq_s.to_string(),
                    x.length.to_string(),
                    x.m.to_string(),
                    x.q.to_string(),
                ]],
            ),
            Report::Analyze(x) => {
                let minimal: Vec<&str> = x.minimal_admitting.iter().map(|a| a.word.as_str()).collect();
                (
                    vec!["word", "length", "pairing", "admits", "admits_t", "ss_eq_s", "minimal"],
                    x.elements
                        .iter()
                        .map(|e| {
                            vec![
                                e.word.clone(),
                                e.length.to_string(),
                                e.pairing.clone(),
                                e.admits.to_string(),
                                e.admits_t.to_string(),
                                e.ss_eq_s.to_string(),
                                minimal.contains(&e.word.as_str()).to_string(),
                            ]
                        })
                        .collect(),
                )
            }
            Report::Quotient(x) => (
                vec!["type", "n", "r", "s", "kind", "k", "a", "m_used", "d", "hilbert"],
                x.hilbert
                    .iter()
                    .enumerate()
                    .map(|(d, h)| {
                        vec![
                            x.case.label.to_string(),
                            x.case.n.to_string(),
                            x.case.r.to_string(),
                            x.case.s.to_string(),
                            x.kind.clone(),
                            x.k.to_string(),
                            x.a.map(|a| a.to_string()).unwrap_or_default(),
                            x.m_used.to_string(),
                            d.to_string(),
                            h.to_string(),
                        ]
                    })
                    .collect(),
            ),
            Report::Decompose(x) => (summand_header(), x.summands.iter().map(summand_row).collect()),
            Report::Enumerate(x) => (
                vec!["index", "word", "length"],
                x.elements
                    .iter()
                    .enumerate()
                    .map(|(i, e)| vec![i.to_string(), e.word.clone(), e.length.to_string()])
                    .collect(),
            ),
            Report::Catalog(cases) => (
                vec!["type", "n", "r", "s", "word", "searched", "pairing", "ss_eq_s", "length", "discrepancies"],
                cases
                    .iter()
                    .map(|c| {
                        vec![
                            c.label.to_string(),
                            c.n.to_string(),
                            c.r.to_string(),
                            c.s.to_string(),
                            c.word.clone(),
                            c.searched.clone(),
                            c.pairing.clone(),
                            c.ss_eq_s.to_string(),
                            c.length.to_string(),
                            c.discrepancies.join("; "),
                        ]
                    })
                    .collect(),
            ),
            Report::Verify(_, v) => (
                vec!["id", "name", "passed", "detail"],
                v.criteria
                    .iter()
                    .map(|c| vec![c.id.to_string(), c.name.clone(), c.passed.to_string(), c.detail.clone()])
                    .collect(),
            ),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Minimal(x) => {
                let _ = writeln!(out, "{}{}  r = {}  s = {}", x.case.label, x.case.n, x.case.r, x.case.s);
                let _ = writeln!(out, "w_(s,r)  {}", show_word(&x.word));
                let _ = writeln!(out, "length   {}", x.length);
                let _ = writeln!(out, "pairing  {}", x.pairing);
                let _ = writeln!(out, "ss=s     {}", x.ss_eq_s);
                let _ = writeln!(out, "m, q     {}, {}", x.m, x.q);
            }
            Report::Analyze(x) => {
                let _ = writeln!(out, "{}{}  chi = {:?}  s = {}", x.label, x.n, x.chi, x.s);
                let _ = writeln!(out, "chi in roots  ({})", x.chi_root.join(", "));
                let _ = writeln!(out, "J             {:?}", x.j);
                let _ = writeln!(out, "minimal admitting:");
                for a in &x.minimal_admitting {
                    let _ = writeln!(out, "  {:<24} pairing {}", show_word(&a.word), a.pairing);
                }
                let _ = writeln!(out, "ss=s on the whole space  {}", x.ss_eq_s_whole_space);
                let _ = writeln!(out, "{:>4}  {:<24} {:>8}  admits  admits_T  ss=s", "len", "word", "pairing");
                for e in &x.elements {
                    let _ = writeln!(
                        out,
                        "{:>4}  {:<24} {:>8}  {:<6}  {:<8}  {}",
                        e.length,
                        show_word(&e.word),
                        e.pairing,
                        e.admits,
                        e.admits_t,
                        e.ss_eq_s
                    );
                }
            }
            Report::Quotient(x) => {
                let _ = writeln!(out, "{}{}  r = {}  s = {}", x.case.label, x.case.n, x.case.r, x.case.s);
                let _ = writeln!(out, "w_(s,r)  {}", show_word(&x.word));
                let _ = writeln!(out, "pairing  {}   ss=s {}", x.pairing, x.ss_eq_s);
                let kind = match (x.rows, x.cols, x.a) {
                    (Some(rows), Some(cols), Some(a)) => format!("{} {rows}x{cols}, a = {a}", x.kind),
                    (_, _, Some(a)) => format!("{} P^{}, a = {a}", x.kind, x.k.saturating_sub(1)),
                    _ => x.kind.clone(),
                };
                let _ = writeln!(out, "kind     {kind}");
                let _ = writeln!(out, "k        {}", x.k);
                let _ = writeln!(out, "m_used   {}", x.m_used);
                let _ = writeln!(out, "hilbert  {:?}", x.hilbert);
                for note in &x.notes {
                    let _ = writeln!(out, "note     {note}");
                }
                if !x.decomposition.is_empty() {
                    out.push_str(&summand_text(&x.decomposition));
                }
            }
            Report::Decompose(x) => {
                let _ = writeln!(out, "A{}  r = {}  s = {}  k = {}", x.n, x.r, x.s, x.k_deg);
                out.push_str(&summand_text(&x.summands));
                let _ = writeln!(out, "total dimension  {}", x.total);
            }
            Report::Enumerate(x) => {
                let _ = writeln!(out, "{}{}  J = {:?}  |W^J| = {}", x.label, x.n, x.j, x.size);
                for e in &x.elements {
                    let _ = writeln!(out, "{:>4}  {}", e.length, show_word(&e.word));
                }
            }
            Report::Catalog(cases) => {
                for c in cases {
                    let status = if c.discrepancies.is_empty() { "ok" } else { "MISMATCH" };
                    let _ = writeln!(
                        out,
                        "{}{} r={} s={}  {:<28} pairing {:>5}  ss=s {:<5}  {status}",
                        c.label,
                        c.n,
                        c.r,
                        c.s,
                        show_word(&c.word),
                        c.pairing,
                        c.ss_eq_s
                    );
                    for d in &c.discrepancies {
                        let _ = writeln!(out, "    {d}");
                    }
                }
            }
            Report::Verify(lines, v) => {
                for line in lines {
                    let _ = writeln!(out, "{line}");
                }
                let _ = writeln!(out, "{} of {} criteria passed", v.passed, v.total);
            }
        }
        out
    }
}

fn show_word(word: &str) -> &str {
    if word.is_empty() {
        "id"
    } else {
        word
    }
}

fn summand_header() -> Vec<&'static str> {
    vec!["sigma", "hw_left", "hw_right", "dim_left", "dim_right"]
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn summand_row(x: &SummandJson) -> Vec<String> {
    vec![
        join(&x.sigma),
        join(&x.hw_left),
        join(&x.hw_right),
        x.dim_left.to_string(),
        x.dim_right.to_string(),
    ]
}

fn summand_text(parts: &[SummandJson]) -> String {
    let mut out = format!("{:<16} {:<14} {:<14} {:>9} {:>9}\n", "sigma", "hw_left", "hw_right", "dim_left", "dim_right");
    for x in parts {
        let row = summand_row(x);
        let _ = writeln!(out, "{:<16} {:<14} {:<14} {:>9} {:>9}", row[0], row[1], row[2], row[3], row[4]);
    }
    out
}

pub fn emit(report: &Report, format: Format) -> Result<(), Box<dyn Error>> {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match format {
        Format::Json => writeln!(lock, "{}", report.json())?,
        Format::Text => write!(lock, "{}", report.text())?,
        Format::Csv => {
            let (header, rows) = report.table();
            let mut w = csv::Writer::from_writer(lock);
            w.write_record(&header)?;
            for row in rows {
                w.write_record(&row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
