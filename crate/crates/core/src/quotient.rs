//! GIT quotients of the minimal semistable Schubert varieties and the
//! decomposition of their invariant rings in type A.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::git::{MinimalSchubert, MinusculeCoset};
use crate::rootsys::{Basis, RootSystem, TypeLabel, WeightVec, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientKind {
    Point,
    /// `(P^{k-1}, O(a))`.
    ProjSpace { k: usize, a: i64 },
    /// `(P(M(rows, cols)), O(a))`.
    MatrixProj { rows: usize, cols: usize, a: i64 },
    /// Minuscule `r` with stable = semistable but no identification is proved.
    OutsideProvedCases,
}

impl QuotientKind {
    pub fn name(&self) -> &'static str {
        match self {
            QuotientKind::Point => "Point",
            QuotientKind::ProjSpace { .. } => "ProjSpace",
            QuotientKind::MatrixProj { .. } => "MatrixProj",
            QuotientKind::OutsideProvedCases => "OutsideProvedCases",
        }
    }

    /// Twist `a`, when the kind has one.
    pub fn twist(&self) -> Option<i64> {
        match *self {
            QuotientKind::ProjSpace { a, .. } | QuotientKind::MatrixProj { a, .. } => Some(a),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport {
    pub label: TypeLabel,
    pub rank: usize,
    pub r: usize,
    pub s: usize,
    pub word: Vec<usize>,
    pub pairing: Q,
    pub ss_eq_s: bool,
    pub kind: QuotientKind,
    /// `l(w_{s,r})`.
    pub k: usize,
    pub m_used: i64,
    pub notes: Vec<String>,
}

/// Type-A constants of the matrix-space quotient for `A_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixConstants {
    pub p: i64,
    pub c: i64,
    pub m: i64,
    pub a: i64,
    pub rows: usize,
    pub cols: usize,
}

/// `p = ⌊rs/n⌋`, `c = rs/(rs,n)`, `m = n/(rs,n)`, `a = c - m p`; `None` when `n | rs`.
pub fn matrix_constants(n: usize, r: usize, s: usize) -> Option<MatrixConstants> {
    let (n, r, s) = (n as i64, r as i64, s as i64);
    if (r * s) % n == 0 {
        return None;
    }
    let g = (r * s).gcd(&n);
    let p = r * s / n;
    let (c, m) = (r * s / g, n / g);
    Some(MatrixConstants {
        p,
        c,
        m,
        a: c - m * p,
        rows: (s - p) as usize,
        cols: (r - p) as usize,
    })
}

/// Dispatches on the minimal element: point, matrix space, projective space or no claim.
pub fn quotient_of_minimal(sys: &RootSystem, r: usize, s: usize) -> Result<QuotientReport> {
    let mc = MinusculeCoset::new(sys, r)?;
    let min = mc.minimal(s)?;
    quotient_from_minimal(sys, &min)
}

pub fn quotient_from_minimal(sys: &RootSystem, min: &MinimalSchubert) -> Result<QuotientReport> {
    let (r, s) = (min.r, min.s);
    let k = min.w.length();
    let mut notes = Vec::new();
    let mut m_used = min.m;
    let kind = if min.pairing.is_zero() {
        notes.push("pairing is zero: the quotient is a point".into());
        QuotientKind::Point
    } else if let Some(mc) = (sys.label() == TypeLabel::A)
        .then(|| matrix_constants(sys.rank() + 1, r, s))
        .flatten()
    {
        if mc.rows * mc.cols != k {
            return Err(Error::Inconsistent(format!(
                "l(w) = {k} but (s-p)(r-p) = {}",
                mc.rows * mc.cols
            )));
        }
        if Q::from_integer(mc.a) != -min.pairing * mc.m {
            return Err(Error::Inconsistent(format!(
                "a = c - m p = {} differs from -m <w(ω_r), λ_s> = {}",
                mc.a,
                -min.pairing * mc.m
            )));
        }
        m_used = mc.m;
        notes.push(format!("p = {}, c = {}, m = n/(rs,n) = {}", mc.p, mc.c, mc.m));
        QuotientKind::MatrixProj {
            rows: mc.rows,
            cols: mc.cols,
            a: mc.a,
        }
    } else if sys.is_cominuscule(s) && min.ss_eq_s {
        let a = -min.pairing * min.m;
        if !a.is_integer() || !a.is_positive() {
            return Err(Error::Inconsistent(format!("twist {a} is not a positive integer")));
        }
        notes.push(format!("m = least m with m ω_r in the root lattice = {}", min.m));
        QuotientKind::ProjSpace {
            k,
            a: a.to_integer(),
        }
    } else {
        notes.push("no identification proved for this case; data only".into());
        QuotientKind::OutsideProvedCases
    };
    Ok(QuotientReport {
        label: sys.label(),
        rank: sys.rank(),
        r,
        s,
        word: min.w.normal_word(sys),
        pairing: min.pairing,
        ss_eq_s: min.ss_eq_s,
        kind,
        k,
        m_used,
        notes,
    })
}

/// Multichains `τ_1 <= … <= τ_{dm}` in `[id, w] ⊆ W^{S\{α_r}}` whose pairings
/// `<τ_i(ω_r), λ_s>` sum to zero.
pub fn invariant_hilbert_dim(mc: &MinusculeCoset, s: usize, w_idx: usize, m: i64, d: u32) -> Result<u128> {
    if m < 1 {
        return Err(Error::Precondition(format!("m = {m} must be positive")));
    }
    let w = mc.coset().elements()[w_idx].clone();
    let interval = mc.coset().lower_interval_indices(&w)?;
    let len = d as i64 * m;
    if len == 0 {
        return Ok(1);
    }
    let pairings: Vec<Q> = interval.iter().map(|&i| mc.pairing_at(i, s)).collect();
    let scale = pairings.iter().fold(1i64, |acc, q| acc.lcm(q.denom()));
    let values: Vec<i64> = pairings.iter().map(|q| (q * scale).to_integer()).collect();
    let (lo, hi) = (
        values.iter().copied().min().unwrap_or(0),
        values.iter().copied().max().unwrap_or(0),
    );

    // ways[j][sum]: chains of the current length whose top is interval[j]
    let mut ways: Vec<HashMap<i64, u128>> = values
        .iter()
        .map(|&v| HashMap::from([(v, 1u128)]))
        .collect();
    for step in 1..len {
        let remaining = len - step;
        let mut next: Vec<HashMap<i64, u128>> = vec![HashMap::new(); interval.len()];
        for (jt, &top) in interval.iter().enumerate() {
            for (jb, &bottom) in interval.iter().enumerate() {
                if !mc.coset().leq_idx(bottom, top) {
                    continue;
                }
                for (&sum, &count) in &ways[jb] {
                    let new_sum = sum + values[jt];
                    // the remaining steps must be able to bring the sum back to zero
                    if new_sum + (remaining - 1) * lo > 0 || new_sum + (remaining - 1) * hi < 0 {
                        continue;
                    }
                    *next[jt].entry(new_sum).or_insert(0) += count;
                }
            }
        }
        ways = next;
    }
    Ok(ways.iter().filter_map(|m| m.get(&0)).sum())
}

/// Invariant dimensions for `d = 0..=d_max` with `m = report.m_used`. Where the
/// report names a quotient, the counts must equal its Hilbert function
/// (`1` for a point, `C(d a + N - 1, N - 1)` for `(P^{N-1}, O(a))`).
pub fn hilbert_series(mc: &MinusculeCoset, min: &MinimalSchubert, report: &QuotientReport, d_max: u32) -> Result<Vec<u128>> {
    let idx = mc.coset().index_of(&min.w).ok_or_else(|| Error::NotInCoset {
        word: min.w.word_string(),
    })?;
    let cells = match report.kind {
        QuotientKind::ProjSpace { k, .. } => Some(k),
        QuotientKind::MatrixProj { rows, cols, .. } => Some(rows * cols),
        _ => None,
    };
    let mut series = Vec::new();
    for d in 0..=d_max {
        let h = invariant_hilbert_dim(mc, min.s, idx, report.m_used, d)?;
        let expected = match (report.kind, cells) {
            (QuotientKind::Point, _) => Some(1),
            (kind, Some(n)) => kind
                .twist()
                .map(|a| binomial((d as i64 * a + n as i64 - 1) as u64, n as u64 - 1)),
            _ => None,
        };
        if let Some(e) = expected.filter(|&e| e != h) {
            return Err(Error::Inconsistent(format!(
                "degree {d}: {h} invariants, {} predicts {e}",
                report.kind.name()
            )));
        }
        series.push(h);
    }
    Ok(series)
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// A weakly decreasing partition with parts bounded by `bound`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    pub parts: Vec<usize>,
    pub bound: usize,
}

impl Diagram {
    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `m_i = #{j : σ_j = i}` for `i = 1..=bound`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.bound];
        for &p in &self.parts {
            m[p - 1] += 1;
        }
        m
    }

    pub fn transpose(&self) -> Vec<usize> {
        let first = self.parts.first().copied().unwrap_or(0);
        (1..=first)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect()
    }
}

/// Partitions of `d` with every part at most `bound`, in lexicographically decreasing order.
pub fn partitions_bounded(d: usize, bound: usize) -> Vec<Diagram> {
    fn go(rest: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            acc.push(p);
            go(rest - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 && bound == 0 {
        return Vec::new();
    }
    go(d, bound, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|parts| Diagram { parts, bound })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrredSummand {
    pub sigma: Diagram,
    /// Fundamental-weight coordinates for `SL_{s-p}`.
    pub hw_left: Vec<i64>,
    /// Fundamental-weight coordinates for `SL_{r-p}`.
    pub hw_right: Vec<i64>,
    pub dim_left: u128,
    pub dim_right: u128,
}

/// Weyl dimension formula for `SL_N`, `N = rank_plus_one`, weight in fundamental coordinates.
pub fn weyl_dim_a(rank_plus_one: usize, hw: &[i64]) -> Result<u128> {
    if rank_plus_one == 0 || hw.len() + 1 != rank_plus_one {
        return Err(Error::DimensionMismatch {
            expected: rank_plus_one.saturating_sub(1),
            got: hw.len(),
        });
    }
    if hw.iter().any(|&c| c < 0) {
        return Err(Error::Precondition("highest weight must be dominant".into()));
    }
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..hw.len() {
        let mut acc = 0u128;
        for j in i..hw.len() {
            acc += hw[j] as u128 + 1;
            num *= acc;
            den *= (j - i + 1) as u128;
            let g = num.gcd(&den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    Ok(num / den)
}

/// `dim S_λ(C^N) = Π (N + content) / hook` over the cells of `λ`.
pub fn gl_dim(n: usize, lambda: &[usize]) -> u128 {
    if lambda.len() > n {
        return 0;
    }
    let conj: Vec<usize> = (1..=lambda.first().copied().unwrap_or(0))
        .map(|j| lambda.iter().filter(|&&p| p >= j).count())
        .collect();
    let (mut num, mut den) = (1u128, 1u128);
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            num *= (n + j - i) as u128;
            den *= (row - j + conj[j] - i - 1) as u128;
            let g = num.gcd(&den);
            num /= g;
            den /= g;
        }
    }
    num / den
}

/// `-w_0` on `SL_N`: `ω_i ↦ ω_{N-i}`.
fn dualize(hw: &[i64]) -> Vec<i64> {
    hw.iter().rev().copied().collect()
}

fn summand(sigma: Diagram, rows: usize, cols: usize) -> Result<IrredSummand> {
    let mult = sigma.multiplicities();
    let weight = |size: usize| -> Vec<i64> {
        (1..size)
            .map(|i| mult.get(i - 1).copied().unwrap_or(0) as i64)
            .collect()
    };
    let hw_left = dualize(&weight(rows));
    let hw_right = weight(cols);
    Ok(IrredSummand {
        dim_left: weyl_dim_a(rows, &hw_left)?,
        dim_right: weyl_dim_a(cols, &hw_right)?,
        hw_left,
        hw_right,
        sigma,
    })
}

/// The degree-`k` piece of the invariant ring of `X(w_{s,r})` in type `A_{n-1}`.
pub fn decompose_rk(n: usize, r: usize, s: usize, k_deg: usize) -> Result<Vec<IrredSummand>> {
    if n < 2 || r == 0 || s == 0 || r >= n || s >= n {
        return Err(Error::Precondition(format!("(n, r, s) = ({n}, {r}, {s}) out of range")));
    }
    let mc = matrix_constants(n, r, s).ok_or_else(|| {
        Error::Precondition(format!("n = {n} divides rs = {}; the quotient is a point", r * s))
    })?;
    let degree = k_deg * mc.a as usize;
    partitions_bounded(degree, mc.rows.min(mc.cols))
        .into_iter()
        .map(|sigma| summand(sigma, mc.rows, mc.cols))
        .collect()
}

pub fn total_dimension(summands: &[IrredSummand]) -> u128 {
    summands.iter().map(|x| x.dim_left * x.dim_right).sum()
}

/// Cauchy: `Σ_{λ ⊢ d, ℓ(λ) <= rows} dim S_λ(C^rows) dim S_λ(C^cols) = C(rows cols + d - 1, d)`.
pub fn cauchy_dimension_check(rows: usize, cols: usize, d: usize) -> bool {
    let (rows, cols) = if rows <= cols { (rows, cols) } else { (cols, rows) };
    let lhs: u128 = partitions_bounded(d, rows)
        .into_iter()
        .map(|sigma| {
            let lambda = sigma.transpose();
            gl_dim(rows, &lambda) * gl_dim(cols, &lambda)
        })
        .sum();
    lhs == binomial((rows * cols + d).saturating_sub(1) as u64, d as u64)
}

/// For `r = s`: every summand is `End(V)`, so the total is a sum of squares.
pub fn sum_of_squares_check(n: usize, r: usize, k_deg: usize) -> Result<bool> {
    let summands = decompose_rk(n, r, r, k_deg)?;
    let squares: u128 = summands.iter().map(|x| x.dim_left * x.dim_left).sum();
    Ok(summands
        .iter()
        .all(|x| x.dim_left == x.dim_right && x.hw_left == dualize(&x.hw_right))
        && squares == total_dimension(&summands))
}

/// `μ <= d ω_1` in `A_{n-1}` iff `d - Σ i m_i` is a nonnegative multiple of `n`; the quotient is the witness `m_n`.
pub fn weight_leq_d_omega1(mu: &[i64], d: i64) -> (bool, Option<i64>) {
    let n = mu.len() as i64 + 1;
    let rest = d - mu.iter().enumerate().map(|(i, &m)| (i as i64 + 1) * m).sum::<i64>();
    if rest >= 0 && rest % n == 0 {
        (true, Some(rest / n))
    } else {
        (false, None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub domain: usize,
    pub codomain: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl BijectionReport {
    pub fn holds(&self) -> bool {
        self.injective && self.surjective && self.domain == self.codomain
    }
}

/// `σ ↦ μ_σ = Σ_{i<N} m_i ω_i` from `{σ ⊢ d, σ_1 <= N}` to dominant `μ <= d ω_1` of `SL_N`.
pub fn diagram_weight_bijection(n: usize, d: usize) -> Result<BijectionReport> {
    let images: Vec<Vec<i64>> = partitions_bounded(d, n)
        .iter()
        .map(|sigma| {
            let mult = sigma.multiplicities();
            (0..n - 1).map(|i| mult[i] as i64).collect()
        })
        .collect();
    let distinct: BTreeSet<Vec<i64>> = images.iter().cloned().collect();
    let mut codomain: BTreeSet<Vec<i64>> = BTreeSet::new();
    if n == 1 {
        codomain.insert(Vec::new());
    } else {
        let sys = RootSystem::new(TypeLabel::A, n - 1)?;
        let mut top = vec![0i64; n - 1];
        top[0] = d as i64;
        let top = WeightVec::from_ints(&top, Basis::Weight);
        // μ <= d ω_1 forces Σ i m_i <= d, so coordinates are at most d
        let mut mu = vec![0i64; n - 1];
        loop {
            if sys.dominance_leq(&WeightVec::from_ints(&mu, Basis::Weight), &top) {
                codomain.insert(mu.clone());
            }
            let mut i = 0;
            while i < mu.len() && mu[i] == d as i64 {
                mu[i] = 0;
                i += 1;
            }
            if i == mu.len() {
                break;
            }
            mu[i] += 1;
        }
    }
    Ok(BijectionReport {
        domain: images.len(),
        codomain: codomain.len(),
        injective: distinct.len() == images.len(),
        surjective: codomain.is_subset(&distinct) && distinct.is_subset(&codomain),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    pub roots: Vec<Vec<i64>>,
    /// Pairs whose sum is a root.
    pub root_sums: Vec<(Vec<i64>, Vec<i64>)>,
    /// `(l, coefficients)` for non-unit solutions of `Σ i_j β_j = β_l`.
    pub extra_solutions: Vec<(usize, Vec<usize>)>,
    /// Roots whose `α_s` coefficient is not 1.
    pub bad_pairings: Vec<Vec<i64>>,
}

impl CellReport {
    pub fn passed(&self) -> bool {
        self.root_sums.is_empty() && self.extra_solutions.is_empty() && self.bad_pairings.is_empty()
    }
}

fn solutions(roots: &[Vec<i64>], target: &[i64]) -> Vec<Vec<usize>> {
    fn go(roots: &[Vec<i64>], j: usize, rest: &mut Vec<i64>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.iter().all(|&c| c == 0) {
            let mut full = acc.clone();
            full.resize(roots.len(), 0);
            out.push(full);
            return;
        }
        if j == roots.len() {
            return;
        }
        let beta = &roots[j];
        let mut used = 0;
        loop {
            acc.push(used);
            go(roots, j + 1, rest, acc, out);
            acc.pop();
            if rest.iter().zip(beta).any(|(r, b)| r < b) {
                break;
            }
            for (r, b) in rest.iter_mut().zip(beta) {
                *r -= b;
            }
            used += 1;
        }
        for (r, b) in rest.iter_mut().zip(beta) {
            *r += b * used as i64;
        }
    }
    let mut out = Vec::new();
    go(roots, 0, &mut target.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Root-sum facts on `R^+(w_{s,r}^{-1})` for cominuscule `α_s`.
pub fn cominuscule_cell_checks(sys: &RootSystem, r: usize, s: usize) -> Result<CellReport> {
    sys.check_node("s", s)?;
    if !sys.is_cominuscule(s) {
        return Err(Error::Precondition(format!("α_{s} is not cominuscule in {}", sys.label())));
    }
    let min = MinusculeCoset::new(sys, r)?.minimal(s)?;
    let roots = min.w.inversion_set_of_inverse(sys);
    if roots.len() != min.w.length() {
        return Err(Error::Inconsistent("inversion set size differs from length".into()));
    }
    let mut root_sums = Vec::new();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let sum: Vec<i64> = roots[i].iter().zip(&roots[j]).map(|(a, b)| a + b).collect();
            if sys.is_root(&sum) {
                root_sums.push((roots[i].clone(), roots[j].clone()));
            }
        }
    }
    let mut extra_solutions = Vec::new();
    for (l, beta) in roots.iter().enumerate() {
        for sol in solutions(&roots, beta) {
            let unit = sol.iter().enumerate().all(|(j, &c)| c == usize::from(j == l));
            if !unit {
                extra_solutions.push((l, sol));
            }
        }
    }
    let bad_pairings = roots.iter().filter(|b| b[s - 1] != 1).cloned().collect();
    Ok(CellReport {
        roots,
        root_sums,
        extra_solutions,
        bad_pairings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(l: TypeLabel, n: usize) -> RootSystem {
        RootSystem::new(l, n).unwrap()
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_of_minimal(&sys(TypeLabel::A, 4), 2, 2).unwrap();
        assert_eq!(q.kind, QuotientKind::MatrixProj { rows: 2, cols: 2, a: 4 });
        assert_eq!(q.m_used, 5);
        let q = quotient_of_minimal(&sys(TypeLabel::A, 3), 2, 2).unwrap();
        assert_eq!(q.kind, QuotientKind::Point);
        let q = quotient_of_minimal(&sys(TypeLabel::C, 3), 1, 3).unwrap();
        assert_eq!(q.kind, QuotientKind::ProjSpace { k: 3, a: 1 });
        assert_eq!(q.m_used, 2);
    }

    #[test]
    fn non_cominuscule_spin_case_is_not_projective_space() {
        // α_3 has coefficient 2 in the highest root of B_3
        let b3 = sys(TypeLabel::B, 3);
        let q = quotient_of_minimal(&b3, 3, 3).unwrap();
        assert_eq!(q.pairing, Q::new(-1, 2));
        assert!(q.ss_eq_s);
        assert_eq!(q.kind, QuotientKind::OutsideProvedCases);
        let mc = MinusculeCoset::new(&b3, 3).unwrap();
        let idx = mc.coset().index_of(&mc.minimal(3).unwrap().w).unwrap();
        // (P^2, O(1)) would need 3 invariants in degree 1
        assert_eq!(invariant_hilbert_dim(&mc, 3, idx, 2, 1).unwrap(), 2);
    }

    #[test]
    fn hilbert_examples() {
        let a4 = sys(TypeLabel::A, 4);
        let mc = MinusculeCoset::new(&a4, 2).unwrap();
        let w = mc.minimal(2).unwrap().w;
        let idx = mc.coset().index_of(&w).unwrap();
        let series: Vec<u128> = (0..4).map(|d| invariant_hilbert_dim(&mc, 2, idx, 5, d).unwrap()).collect();
        assert_eq!(series, vec![1, 35, 165, 455]);
        let w = mc.minimal(1).unwrap().w;
        assert_eq!(w.length(), 2);
        let idx = mc.coset().index_of(&w).unwrap();
        assert_eq!(invariant_hilbert_dim(&mc, 1, idx, 5, 1).unwrap(), 3);
    }

    #[test]
    fn hilbert_series_checks_the_law() {
        let a4 = sys(TypeLabel::A, 4);
        let mc = MinusculeCoset::new(&a4, 2).unwrap();
        let min = mc.minimal(2).unwrap();
        let report = quotient_from_minimal(&a4, &min).unwrap();
        assert_eq!(hilbert_series(&mc, &min, &report, 2).unwrap(), vec![1, 35, 165]);
        let mut wrong = report.clone();
        wrong.kind = QuotientKind::MatrixProj { rows: 2, cols: 2, a: 3 };
        assert!(matches!(hilbert_series(&mc, &min, &wrong, 1), Err(Error::Inconsistent(_))));
        let a3 = sys(TypeLabel::A, 3);
        let mc3 = MinusculeCoset::new(&a3, 2).unwrap();
        let point = mc3.minimal(2).unwrap();
        let report = quotient_from_minimal(&a3, &point).unwrap();
        assert_eq!(hilbert_series(&mc3, &point, &report, 3).unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn decomposition_examples() {
        let parts = decompose_rk(5, 2, 2, 1).unwrap();
        let sigmas: Vec<Vec<usize>> = parts.iter().map(|x| x.sigma.parts.clone()).collect();
        assert_eq!(sigmas, vec![vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        let dims: Vec<(u128, u128)> = parts.iter().map(|x| (x.dim_left, x.dim_right)).collect();
        assert_eq!(dims, vec![(1, 1), (3, 3), (5, 5)]);
        assert_eq!(total_dimension(&parts), 35);
        let zero = decompose_rk(5, 2, 2, 0).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(total_dimension(&zero), 1);
        let parts = decompose_rk(5, 2, 3, 1).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!((parts[0].dim_left, parts[0].dim_right), (2, 1));
        assert!(decompose_rk(4, 2, 2, 1).is_err());
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dim_a(1, &[]).unwrap(), 1);
        assert_eq!(weyl_dim_a(3, &[0, 0]).unwrap(), 1);
        assert_eq!(weyl_dim_a(2, &[4]).unwrap(), 5);
        assert_eq!(weyl_dim_a(3, &[1, 1]).unwrap(), 8);
        assert_eq!(weyl_dim_a(5, &[1, 0, 0, 0]).unwrap(), 5);
        assert!(weyl_dim_a(3, &[1, -1]).is_err());
    }

    #[test]
    fn hook_content_matches_weyl() {
        for n in 1..=5usize {
            for d in 0..=6 {
                for sigma in partitions_bounded(d, n) {
                    let lambda = sigma.transpose();
                    let hw: Vec<i64> = sigma.multiplicities()[..n - 1].iter().map(|&m| m as i64).collect();
                    assert_eq!(gl_dim(n, &lambda), weyl_dim_a(n, &hw).unwrap());
                }
            }
        }
    }

    #[test]
    fn cauchy_examples() {
        assert!(cauchy_dimension_check(1, 1, 5));
        assert!(cauchy_dimension_check(2, 2, 4));
        assert!(cauchy_dimension_check(2, 3, 2));
        assert!(cauchy_dimension_check(3, 2, 2));
    }

    #[test]
    fn sum_of_squares_examples() {
        assert!(sum_of_squares_check(5, 2, 1).unwrap());
        assert!(sum_of_squares_check(5, 2, 0).unwrap());
        assert!(sum_of_squares_check(7, 2, 1).unwrap());
        assert_eq!(total_dimension(&decompose_rk(7, 2, 2, 1).unwrap()), 35);
    }

    #[test]
    fn weight_lemma_examples() {
        assert_eq!(weight_leq_d_omega1(&[3, 0], 3), (true, Some(0)));
        assert_eq!(weight_leq_d_omega1(&[0, 1], 2), (true, Some(0)));
        assert_eq!(weight_leq_d_omega1(&[1, 0], 2), (false, None));
        assert_eq!(weight_leq_d_omega1(&[0, 0], 3), (true, Some(1)));
    }

    #[test]
    fn bijection_small() {
        for n in 1..=4 {
            for d in 0..=6 {
                assert!(diagram_weight_bijection(n, d).unwrap().holds());
            }
        }
    }

    #[test]
    fn cell_examples() {
        let report = cominuscule_cell_checks(&sys(TypeLabel::A, 4), 2, 2).unwrap();
        assert_eq!(report.roots.len(), 4);
        assert!(report.passed());
        let report = cominuscule_cell_checks(&sys(TypeLabel::D, 5), 5, 1).unwrap();
        assert!(report.passed());
        assert!(cominuscule_cell_checks(&sys(TypeLabel::B, 3), 3, 2).is_err());
    }
}
