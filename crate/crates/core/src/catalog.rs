//! Closed forms for `w_{s,r}` in every minuscule case, checked against the search in [`crate::git`].

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::git::MinusculeCoset;
use crate::rootsys::{RootSystem, TypeLabel, Q};
use crate::weyl::{type_b_block, type_d_word, Fork, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: TypeLabel,
    /// Lie rank of the ambient system.
    pub rank: usize,
    pub r: usize,
    pub s: usize,
    pub word: Vec<usize>,
    /// `<w_{s,r}(ω_r), λ_s>`.
    pub pairing: Q,
    pub ss_eq_s: bool,
    /// Named parameters of the closed form (`p`, `n`, ...).
    pub aux: Vec<(String, i64)>,
    /// Root coordinates of `ω_r - w_{s,r}(ω_r)` when the closed form states them.
    pub drop: Option<Vec<i64>>,
}

impl CatalogEntry {
    pub fn word_string(&self) -> String {
        self.word
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn aux_value(&self, key: &str) -> Option<i64> {
        self.aux.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }
}

/// The catalog dump row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    #[serde(rename = "type")]
    pub label: TypeLabel,
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub word: String,
    pub pairing: String,
    pub ss_eq_s: bool,
    pub length: usize,
}

impl From<&CatalogEntry> for CatalogRecord {
    fn from(e: &CatalogEntry) -> Self {
        CatalogRecord {
            label: e.label,
            n: e.rank,
            r: e.r,
            s: e.s,
            word: e.word_string(),
            pairing: e.pairing.to_string(),
            ss_eq_s: e.ss_eq_s,
            length: e.word.len(),
        }
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

fn check_range(what: &'static str, v: usize, max: usize) -> Result<()> {
    if v == 0 || v > max {
        return Err(Error::IndexOutOfRange {
            what,
            index: v,
            max,
        });
    }
    Ok(())
}

/// Type `A_{n-1}`: with `p = ⌊rs/n⌋`, the product of the `r - p` blocks
/// `s_{s+t} … s_{p+1+t}` for `t = 0..r-p`.
pub fn closed_form_a(n: usize, r: usize, s: usize) -> Result<CatalogEntry> {
    if n < 2 {
        return Err(Error::InadmissibleType {
            label: TypeLabel::A,
            rank: n.saturating_sub(1),
        });
    }
    check_range("r", r, n - 1)?;
    check_range("s", s, n - 1)?;
    let (ni, ri, si) = (n as i64, r as i64, s as i64);
    let p = ri * si / ni;
    let word: Vec<usize> = (0..(ri - p))
        .flat_map(|t| ((p + 1 + t)..=(si + t)).rev().map(|i| i as usize))
        .collect();
    Ok(CatalogEntry {
        label: TypeLabel::A,
        rank: n - 1,
        r,
        s,
        word,
        pairing: Q::new(-ri * si, ni) + p,
        ss_eq_s: (ri * si) % ni != 0,
        aux: vec![("n".into(), ni), ("p".into(), p)],
        drop: None,
    })
}

/// Type `B_n`, `r = n`: `w_1(l_1) … w_n(l_n)` with `p = ⌈s/2⌉` and
/// `l_k = min(p, n+1-k)` for `k > s-p`, zero below.
pub fn closed_form_b(n: usize, s: usize) -> Result<CatalogEntry> {
    if n < 2 {
        return Err(Error::InadmissibleType {
            label: TypeLabel::B,
            rank: n,
        });
    }
    check_range("s", s, n)?;
    let p = ceil_div(s as i64, 2) as usize;
    let l: Vec<usize> = (1..=n)
        .map(|k| if k + p > s { p.min(n + 1 - k) } else { 0 })
        .collect();
    let word = l
        .iter()
        .enumerate()
        .flat_map(|(k, &lk)| type_b_block(k + 1, lk))
        .collect();
    let drop = (1..=n)
        .map(|k| {
            if k + p <= s {
                0
            } else if k < s {
                (k + p - s) as i64
            } else {
                p as i64
            }
        })
        .collect();
    Ok(CatalogEntry {
        label: TypeLabel::B,
        rank: n,
        r: n,
        s,
        word,
        pairing: Q::new(s as i64, 2) - p as i64,
        ss_eq_s: s % 2 == 1,
        aux: vec![("p".into(), p as i64), ("j".into(), (n + 1 - s) as i64)],
        drop: Some(drop),
    })
}

/// Type `C_n`, `r = 1`: `s_s s_{s-1} … s_1`.
pub fn closed_form_c(n: usize, s: usize) -> Result<CatalogEntry> {
    if n < 2 {
        return Err(Error::InadmissibleType {
            label: TypeLabel::C,
            rank: n,
        });
    }
    check_range("s", s, n)?;
    let mut drop = vec![0i64; n];
    for d in drop.iter_mut().take(s) {
        *d = 1;
    }
    Ok(CatalogEntry {
        label: TypeLabel::C,
        rank: n,
        r: 1,
        s,
        word: (1..=s).rev().collect(),
        pairing: if s == n { Q::new(-1, 2) } else { Q::zero() },
        ss_eq_s: s == n,
        aux: Vec::new(),
        drop: Some(drop),
    })
}

/// Swaps the fork nodes `n - 1` and `n`.
fn fork_swap(n: usize, i: usize) -> usize {
    if i == n {
        n - 1
    } else if i == n - 1 {
        n
    } else {
        i
    }
}

fn closed_form_d_spin(n: usize, s: usize) -> CatalogEntry {
    let ni = n as i64;
    let mut drop = vec![0i64; n];
    let (ls, p, pairing, ss_eq_s): (Vec<usize>, i64, Q, bool) = if s == n {
        let p = ceil_div(ni, 4);
        for k in (n + 1 - 2 * p as usize)..=(n - 2) {
            drop[k - 1] = k as i64 - ni + 2 * p;
        }
        drop[n - 2] = p - 1;
        drop[n - 1] = p;
        let ls = (n + 2 - 2 * p as usize..=n).rev().collect();
        (ls, p, Q::new(ni, 4) - p, !n.is_multiple_of(4))
    } else if s == n - 1 {
        let p = ceil_div(ni - 2, 4);
        for k in (n - 2 * p as usize)..=(n - 2) {
            drop[k - 1] = k as i64 - ni + 2 * p + 1;
        }
        drop[n - 2] = p;
        drop[n - 1] = p;
        let ls = (n + 1 - 2 * p as usize..=n).rev().collect();
        (ls, p, Q::new(ni - 2, 4) - p, n % 4 != 2)
    } else {
        let si = s as i64;
        let p = ceil_div(si, 2);
        let pu = p as usize;
        for k in (s + 1 - pu)..=s {
            drop[k - 1] = k as i64 - si + p;
        }
        for d in drop.iter_mut().take(n - 2).skip(s) {
            *d = p;
        }
        if p % 2 == 1 {
            drop[n - 2] = (p - 1) / 2;
            drop[n - 1] = (p + 1) / 2;
        } else {
            drop[n - 2] = p / 2;
            drop[n - 1] = p / 2;
        }
        let ls = (s + 2 - pu..=s + 1).rev().collect();
        (ls, p, Q::new(si, 2) - p, s % 2 == 1)
    };
    CatalogEntry {
        label: TypeLabel::D,
        rank: n,
        r: n,
        s,
        word: type_d_word(n, &ls, Fork::N),
        pairing,
        ss_eq_s,
        aux: vec![("p".into(), p)],
        drop: Some(drop),
    }
}

/// Type `D_n` with `r ∈ {1, n-1, n}`.
pub fn closed_form_d(n: usize, r: usize, s: usize) -> Result<CatalogEntry> {
    if n < 4 {
        return Err(Error::InadmissibleType {
            label: TypeLabel::D,
            rank: n,
        });
    }
    check_range("r", r, n)?;
    check_range("s", s, n)?;
    if r == 1 {
        let mut word: Vec<usize> = Vec::new();
        let mut drop = vec![0i64; n];
        if s <= n - 2 {
            word.extend((1..=s).rev());
            for d in drop.iter_mut().take(s) {
                *d = 1;
            }
        } else {
            word.push(s);
            word.extend((1..=n - 2).rev());
            for d in drop.iter_mut().take(n - 2) {
                *d = 1;
            }
            drop[s - 1] = 1;
        }
        let ss_eq_s = s >= n - 1;
        return Ok(CatalogEntry {
            label: TypeLabel::D,
            rank: n,
            r,
            s,
            word,
            pairing: if ss_eq_s { Q::new(-1, 2) } else { Q::zero() },
            ss_eq_s,
            aux: Vec::new(),
            drop: Some(drop),
        });
    }
    if r == n {
        return Ok(closed_form_d_spin(n, s));
    }
    if r == n - 1 {
        // the diagram automorphism exchanging the fork nodes
        let mirrored = closed_form_d_spin(n, fork_swap(n, s));
        let mut drop = mirrored.drop.clone().expect("spin entries carry drops");
        drop.swap(n - 2, n - 1);
        return Ok(CatalogEntry {
            r,
            s,
            word: mirrored.word.iter().map(|&i| fork_swap(n, i)).collect(),
            drop: Some(drop),
            ..mirrored
        });
    }
    Err(Error::NotMinuscule {
        label: TypeLabel::D,
        r,
    })
}

const E6_R1: [&[usize]; 6] = [
    &[1, 3, 4, 5, 2, 4, 3, 1],
    &[2, 4, 3, 1],
    &[3, 4, 2, 5, 4, 3, 1],
    &[4, 5, 2, 4, 3, 1],
    &[5, 4, 6, 2, 5, 4, 3, 1],
    &[6, 5, 4, 3, 1],
];

const E6_R6: [&[usize]; 6] = [
    &[1, 3, 4, 5, 6],
    &[2, 4, 5, 6],
    &[3, 4, 2, 1, 3, 4, 5, 6],
    &[4, 3, 2, 4, 5, 6],
    &[5, 4, 2, 3, 4, 5, 6],
    &[6, 5, 4, 3, 2, 4, 5, 6],
];

const E7_R7: [&[usize]; 7] = [
    &[1, 3, 4, 5, 6, 7],
    &[2, 4, 5, 3, 4, 1, 2, 3, 4, 5, 6, 7],
    &[3, 4, 1, 2, 3, 4, 5, 6, 7],
    &[4, 3, 5, 4, 1, 2, 3, 4, 5, 6, 7],
    &[5, 6, 4, 3, 5, 4, 2, 1, 3, 4, 5, 6, 7],
    &[6, 5, 4, 3, 2, 4, 5, 6, 7],
    &[7, 6, 5, 4, 3, 2, 4, 5, 6, 7],
];

/// Displayed drops `ω_r - w_{s,r}(ω_r)` for the exceptional types, keyed by `(r, s)`.
fn exceptional_drop(label: TypeLabel, r: usize, s: usize) -> Option<Vec<i64>> {
    let v: &[i64] = match (label, r, s) {
        (TypeLabel::E6, 1, 1) => &[2, 1, 2, 2, 1, 0],
        (TypeLabel::E6, 1, 5) => &[1, 1, 1, 2, 2, 1],
        (TypeLabel::E6, 6, 3) => &[1, 1, 2, 2, 1, 1],
        (TypeLabel::E6, 6, 6) => &[0, 1, 1, 2, 2, 2],
        (TypeLabel::E7, 7, 2) => &[1, 2, 2, 3, 2, 1, 1],
        (TypeLabel::E7, 7, 5) => &[1, 1, 2, 3, 3, 2, 1],
        (TypeLabel::E7, 7, 7) => &[0, 1, 1, 2, 2, 2, 2],
        _ => return None,
    };
    Some(v.to_vec())
}

fn exceptional_entry(label: TypeLabel, r: usize, s: usize, word: &[usize], stable: bool) -> Result<CatalogEntry> {
    let rank = if label == TypeLabel::E6 { 6 } else { 7 };
    let sys = RootSystem::new(label, rank)?;
    let w = WeylElement::from_word(&sys, word)?;
    let omega = sys.fundamental_weight(r)?;
    let pairing = w.apply_root_coords(omega.coords())[s - 1];
    Ok(CatalogEntry {
        label,
        rank,
        r,
        s,
        word: word.to_vec(),
        pairing,
        ss_eq_s: stable,
        aux: Vec::new(),
        drop: exceptional_drop(label, r, s),
    })
}

/// Printed words for `E_6`, `r ∈ {1, 6}`; stable equals semistable iff `s ∉ {2, 4}`.
pub fn catalog_e6(r: usize, s: usize) -> Result<CatalogEntry> {
    check_range("s", s, 6)?;
    let word = match r {
        1 => E6_R1[s - 1],
        6 => E6_R6[s - 1],
        _ => {
            return Err(Error::NotMinuscule {
                label: TypeLabel::E6,
                r,
            })
        }
    };
    exceptional_entry(TypeLabel::E6, r, s, word, s != 2 && s != 4)
}

/// Printed words for `E_7`, `r = 7`; stable equals semistable iff `s ∉ {1, 3, 4, 6}`.
pub fn catalog_e7(s: usize) -> Result<CatalogEntry> {
    check_range("s", s, 7)?;
    exceptional_entry(TypeLabel::E7, 7, s, E7_R7[s - 1], ![1, 3, 4, 6].contains(&s))
}

/// The closed form for `(r, s)` in the given system.
pub fn catalog_entry(sys: &RootSystem, r: usize, s: usize) -> Result<CatalogEntry> {
    let n = sys.rank();
    match sys.label() {
        TypeLabel::A => closed_form_a(n + 1, r, s),
        TypeLabel::B if r == n => closed_form_b(n, s),
        TypeLabel::C if r == 1 => closed_form_c(n, s),
        TypeLabel::D => closed_form_d(n, r, s),
        TypeLabel::E6 => catalog_e6(r, s),
        TypeLabel::E7 if r == 7 => catalog_e7(s),
        label => Err(Error::NotMinuscule { label, r }),
    }
}

/// All `(r, s)` with `ω_r` minuscule.
pub fn minuscule_cases(sys: &RootSystem) -> Vec<(usize, usize)> {
    sys.minuscule_nodes()
        .into_iter()
        .flat_map(|r| (1..=sys.rank()).map(move |s| (r, s)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseCheck {
    pub r: usize,
    pub s: usize,
    pub printed: String,
    pub searched: String,
    pub discrepancies: Vec<String>,
}

impl CaseCheck {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogReport {
    pub label: TypeLabel,
    pub rank: usize,
    pub cases: Vec<CaseCheck>,
}

impl CatalogReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.cases.len()
    }
}

/// Compares one closed form against the search; discrepancies are data.
pub fn check_entry(mc: &MinusculeCoset, entry: &CatalogEntry) -> Result<CaseCheck> {
    let sys = mc.system();
    let found = mc.minimal(entry.s)?;
    let w = WeylElement::from_word(sys, &entry.word)?;
    let mut bad = Vec::new();
    if w != found.w {
        bad.push(format!(
            "erratum: printed word [{}] is not w_(s,r); search gives [{}]",
            entry.word_string(),
            found.w.normal_word_string(sys)
        ));
    }
    if w.length() != entry.word.len() {
        bad.push(format!("word has {} letters but length {}", entry.word.len(), w.length()));
    }
    let image = w.apply_root_coords(mc.omega());
    let drop: Vec<Q> = mc.omega().iter().zip(&image).map(|(a, b)| a - b).collect();
    let height = drop.iter().fold(Q::zero(), |a, b| a + b);
    if height != Q::from_integer(w.length() as i64) {
        bad.push(format!("height of the drop is {height}, length is {}", w.length()));
    }
    if let Some(expected) = &entry.drop {
        let exp: Vec<Q> = expected.iter().map(|&c| Q::from_integer(c)).collect();
        if exp != drop {
            bad.push(format!("drop {:?} differs from stated {:?}", drop, expected));
        }
    }
    if entry.pairing != found.pairing {
        bad.push(format!("pairing {} differs from searched {}", entry.pairing, found.pairing));
    }
    if entry.ss_eq_s != found.ss_eq_s {
        bad.push(format!("ss=s bit {} differs from searched {}", entry.ss_eq_s, found.ss_eq_s));
    }
    if entry.label == TypeLabel::A {
        let p = entry.aux_value("p").unwrap_or(0);
        let expected = (entry.s as i64 - p) * (entry.r as i64 - p);
        if found.w.length() as i64 != expected {
            bad.push(format!("length {} differs from (s-p)(r-p) = {expected}", found.w.length()));
        }
    }
    Ok(CaseCheck {
        r: entry.r,
        s: entry.s,
        printed: entry.word_string(),
        searched: found.w.normal_word_string(sys),
        discrepancies: bad,
    })
}

/// Runs every minuscule case of the system against the search.
pub fn verify_catalog(sys: &RootSystem) -> Result<CatalogReport> {
    let mut cases = Vec::new();
    for r in sys.minuscule_nodes() {
        let mc = MinusculeCoset::new(sys, r)?;
        for s in 1..=sys.rank() {
            let entry = catalog_entry(sys, r, s)?;
            cases.push(check_entry(&mc, &entry)?);
        }
    }
    Ok(CatalogReport {
        label: sys.label(),
        rank: sys.rank(),
        cases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_a_examples() {
        let e = closed_form_a(5, 2, 2).unwrap();
        assert_eq!(e.word, vec![2, 1, 3, 2]);
        assert_eq!(e.pairing, Q::new(-4, 5));
        assert!(e.ss_eq_s);
        let e = closed_form_a(4, 2, 2).unwrap();
        assert_eq!(e.word, vec![2]);
        assert_eq!(e.pairing, Q::zero());
        assert!(!e.ss_eq_s);
        let e = closed_form_a(6, 3, 2).unwrap();
        assert_eq!(e.word, vec![2, 3]);
        assert_eq!(e.pairing, Q::zero());
        assert!(closed_form_a(5, 5, 1).is_err());
    }

    #[test]
    fn type_b_examples() {
        let e = closed_form_b(3, 3).unwrap();
        assert_eq!(e.word, vec![3, 2, 3]);
        assert_eq!(e.drop, Some(vec![0, 1, 2]));
        assert_eq!(e.pairing, Q::new(-1, 2));
        let e = closed_form_b(3, 2).unwrap();
        assert_eq!(e.pairing, Q::zero());
        assert!(!e.ss_eq_s);
        let e = closed_form_b(4, 1).unwrap();
        assert_eq!(e.word, vec![1, 2, 3, 4]);
        assert_eq!(e.drop, Some(vec![1, 1, 1, 1]));
    }

    #[test]
    fn type_c_examples() {
        assert_eq!(closed_form_c(3, 1).unwrap().word, vec![1]);
        let e = closed_form_c(3, 3).unwrap();
        assert_eq!(e.word, vec![3, 2, 1]);
        assert_eq!(e.pairing, Q::new(-1, 2));
        assert_eq!(closed_form_c(2, 2).unwrap().word, vec![2, 1]);
    }

    #[test]
    fn type_d_examples() {
        let e = closed_form_d(4, 1, 4).unwrap();
        assert_eq!(e.word, vec![4, 2, 1]);
        assert_eq!(e.pairing, Q::new(-1, 2));
        assert!(e.ss_eq_s);
        assert_eq!(closed_form_d(4, 4, 4).unwrap().word, vec![4]);
        let e = closed_form_d(4, 4, 3).unwrap();
        assert_eq!(e.word, vec![3, 2, 4]);
        assert_eq!(e.drop, Some(vec![0, 1, 1, 1]));
        let e = closed_form_d(5, 5, 5).unwrap();
        assert_eq!(e.word, vec![5, 3, 4, 2, 3, 5]);
        assert_eq!(e.pairing, Q::new(-3, 4));
        assert!(e.ss_eq_s);
        assert_eq!(closed_form_d(5, 5, 1).unwrap().word, vec![1, 2, 3, 5]);
        let e = closed_form_d(6, 6, 6).unwrap();
        assert_eq!(e.pairing, Q::new(-1, 2));
        assert!(e.ss_eq_s);
        assert!(matches!(closed_form_d(5, 2, 1), Err(Error::NotMinuscule { .. })));
    }

    #[test]
    fn exceptional_examples() {
        let e = catalog_e6(1, 2).unwrap();
        assert_eq!(e.word, vec![2, 4, 3, 1]);
        assert_eq!(e.pairing, Q::zero());
        assert!(!e.ss_eq_s);
        let e = catalog_e7(2).unwrap();
        assert_eq!(e.word.len(), 12);
        assert_eq!(e.pairing, Q::new(-1, 2));
        assert!(catalog_e7(7).unwrap().ss_eq_s);
        assert!(catalog_e6(2, 1).is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        for (label, rank, count) in [
            (TypeLabel::A, 4, 16),
            (TypeLabel::E6, 6, 12),
            (TypeLabel::C, 2, 2),
        ] {
            let report = verify_catalog(&RootSystem::new(label, rank).unwrap()).unwrap();
            assert_eq!(report.cases.len(), count);
            for c in &report.cases {
                assert!(c.passed(), "{label}{rank} r={} s={}: {:?}", c.r, c.s, c.discrepancies);
            }
        }
    }

    #[test]
    fn record_uses_display_rationals() {
        let rec = CatalogRecord::from(&closed_form_a(5, 2, 2).unwrap());
        assert_eq!(rec.pairing, "-4/5");
        assert_eq!(rec.word, "2 1 3 2");
        assert_eq!(rec.length, 4);
    }
}
