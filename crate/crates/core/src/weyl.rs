//! Weyl group elements, Bruhat order and minimal coset representatives.
//!
//! An element is its action on simple-root coordinates; the stored word is
//! always reduced and is only a presentation of that matrix.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rootsys::{Basis, RootSystem, TypeLabel, WeightVec, Q};

/// Default cap on the number of coset representatives enumerated.
pub const DEFAULT_GUARD: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct WeylElement {
    word: Vec<usize>,
    /// Row-major `rank x rank` action on simple-root coordinates.
    action: Vec<i64>,
    /// Action of the inverse element.
    inverse: Vec<i64>,
    rank: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("id");
        }
        f.write_str(&self.word_string())
    }
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            word: Vec::new(),
            action: identity_matrix(rank),
            inverse: identity_matrix(rank),
            rank,
        }
    }

    pub fn simple(sys: &RootSystem, i: usize) -> Result<Self> {
        Self::from_word(sys, &[i])
    }

    /// Builds the element of an arbitrary word; the stored word is reduced.
    pub fn from_word(sys: &RootSystem, word: &[usize]) -> Result<Self> {
        for &i in word {
            sys.check_node("word letter", i)?;
        }
        let mut w = Self::identity(sys.rank());
        let mut reduced = true;
        for &i in word {
            if w.has_right_descent(i) {
                reduced = false;
            }
            w.right_mul_matrix(sys, i);
            w.word.push(i);
        }
        if !reduced {
            w.word = w.reduced_word_from_action(sys);
        }
        Ok(w)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Space-separated letters; empty for the identity.
    pub fn word_string(&self) -> String {
        self.word
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Entry `(row, col)` of the action matrix, 0-based.
    pub fn action_entry(&self, row: usize, col: usize) -> i64 {
        self.action[row * self.rank + col]
    }

    pub fn action_matrix(&self) -> Vec<Vec<i64>> {
        self.action.chunks(self.rank).map(|r| r.to_vec()).collect()
    }

    fn column_negative(m: &[i64], n: usize, col: usize) -> bool {
        (0..n).any(|k| m[k * n + col] < 0)
    }

    /// `w(α_i) < 0`, i.e. `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        Self::column_negative(&self.action, self.rank, i - 1)
    }

    /// `w^{-1}(α_i) < 0`, i.e. `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        Self::column_negative(&self.inverse, self.rank, i - 1)
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (1..=self.rank).filter(|&q| self.has_left_descent(q)).collect()
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..=self.rank).filter(|&q| self.has_right_descent(q)).collect()
    }

    /// `M <- M S_i`: column `j` loses `C_ij` times column `i`; the inverse gets `S_i` on the left.
    fn right_mul_matrix(&mut self, sys: &RootSystem, i: usize) {
        let n = self.rank;
        let c = sys.cartan();
        let i0 = i - 1;
        for j in 0..n {
            let f = c[i0][j];
            if j != i0 && f != 0 {
                for k in 0..n {
                    self.action[k * n + j] -= f * self.action[k * n + i0];
                }
            }
        }
        for k in 0..n {
            self.action[k * n + i0] = -self.action[k * n + i0];
        }
        left_mul_in_place(&mut self.inverse, n, c, i0);
    }

    fn reduced_word_from_action(&self, sys: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut letters = Vec::new();
        while let Some(i) = (1..=self.rank).find(|&i| w.has_right_descent(i)) {
            w.right_mul_matrix(sys, i);
            letters.push(i);
        }
        letters.reverse();
        letters
    }

    /// The lexicographically first reduced word: repeatedly strip the smallest left descent.
    pub fn normal_word(&self, sys: &RootSystem) -> Vec<usize> {
        let mut letters = self.inverse_element().reduced_word_from_action(sys);
        letters.reverse();
        letters
    }

    pub fn normal_word_string(&self, sys: &RootSystem) -> String {
        self.normal_word(sys)
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// `w s_i`.
    pub fn right_mul_simple(&self, sys: &RootSystem, i: usize) -> Self {
        let mut out = self.clone();
        let descent = out.has_right_descent(i);
        out.right_mul_matrix(sys, i);
        if descent {
            out.word = out.reduced_word_from_action(sys);
        } else {
            out.word.push(i);
        }
        out
    }

    /// `s_i w`.
    pub fn left_mul_simple(&self, sys: &RootSystem, i: usize) -> Self {
        let inv = self.inverse_element();
        inv.right_mul_simple(sys, i).inverse_element()
    }

    pub fn inverse_element(&self) -> Self {
        WeylElement {
            word: self.word.iter().rev().copied().collect(),
            action: self.inverse.clone(),
            inverse: self.action.clone(),
            rank: self.rank,
        }
    }

    /// The product `self * other`.
    pub fn multiply(&self, sys: &RootSystem, other: &WeylElement) -> Self {
        let mut out = self.clone();
        for &i in &other.word {
            out = out.right_mul_simple(sys, i);
        }
        out
    }

    pub fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n)
            .map(|k| (0..n).map(|j| self.action[k * n + j] * v[j]).sum())
            .collect()
    }

    pub fn apply_root_coords(&self, v: &[Q]) -> Vec<Q> {
        let n = self.rank;
        (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| v[j] * self.action[k * n + j])
                    .fold(Q::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// `w(μ)`, returned in the basis of `μ`.
    pub fn apply(&self, sys: &RootSystem, mu: &WeightVec) -> WeightVec {
        let coords = self.apply_root_coords(sys.to_root_basis(mu).coords());
        sys.to_basis(&WeightVec::in_roots(coords), mu.basis())
    }

    /// `w(α_j) > 0` for all `j` in `J`.
    pub fn in_wj(&self, j_set: &[usize]) -> bool {
        j_set.iter().all(|&j| !self.has_right_descent(j))
    }

    /// `R^+(w^{-1}) = {β > 0 : w^{-1}(β) < 0}`.
    pub fn inversion_set_of_inverse(&self, sys: &RootSystem) -> Vec<Vec<i64>> {
        let inv = self.inverse_element();
        sys.positive_roots()
            .iter()
            .filter(|beta| inv.apply_int(beta).iter().any(|&c| c < 0))
            .cloned()
            .collect()
    }

    /// One-line notation in type `A_{n-1}`: the images of `1..=n`.
    pub fn one_line_notation_a(&self, sys: &RootSystem) -> Result<Vec<usize>> {
        if sys.label() != TypeLabel::A {
            return Err(Error::Precondition(format!(
                "one-line notation needs type A, got {}",
                sys.label()
            )));
        }
        let n = sys.rank() + 1;
        Ok((1..=n)
            .map(|start| {
                self.word.iter().rev().fold(start, |j, &i| {
                    if j == i {
                        i + 1
                    } else if j == i + 1 {
                        i
                    } else {
                        j
                    }
                })
            })
            .collect())
    }
}

fn left_mul_in_place(m: &mut [i64], n: usize, c: &[Vec<i64>], i0: usize) {
    // (S_i M)_{kj} = M_kj - δ_{k i} Σ_l C_{i l} M_{l j}
    for j in 0..n {
        let s: i64 = (0..n).map(|l| c[i0][l] * m[l * n + j]).sum();
        m[i0 * n + j] -= s;
    }
}

/// Bruhat order via the lifting property; the recursion never branches.
pub fn bruhat_leq(sys: &RootSystem, u: &WeylElement, w: &WeylElement) -> bool {
    let mut u = u.clone();
    let mut w = w.clone();
    loop {
        if u.length() > w.length() {
            return false;
        }
        if w.is_identity() {
            return u.is_identity();
        }
        if u.length() == w.length() {
            return u == w;
        }
        let q = (1..=w.rank)
            .find(|&q| w.has_left_descent(q))
            .expect("non-identity element has a left descent");
        if u.has_left_descent(q) {
            u = u.left_mul_simple(sys, q);
        }
        w = w.left_mul_simple(sys, q);
    }
}

/// All `(q, s_q w)` with `w^{-1}(α_q) < 0`; each `s_q w` must stay in `W^J`.
pub fn schubert_divisor_moves(
    sys: &RootSystem,
    w: &WeylElement,
    j_set: &[usize],
) -> Result<Vec<(usize, WeylElement)>> {
    if !w.in_wj(j_set) {
        return Err(Error::NotInCoset {
            word: w.word_string(),
        });
    }
    let mut out = Vec::new();
    for q in w.left_descents() {
        let v = w.left_mul_simple(sys, q);
        if !v.in_wj(j_set) || v.length() + 1 != w.length() {
            return Err(Error::Inconsistent(format!(
                "s_{q} [{}] left W^J or did not drop length",
                w.word_string()
            )));
        }
        out.push((q, v));
    }
    Ok(out)
}

/// The complement `S \ {α_r}` as 1-based indices.
pub fn maximal_parabolic(rank: usize, r: usize) -> Vec<usize> {
    (1..=rank).filter(|&j| j != r).collect()
}

/// Minimal coset representatives `W^J` with the induced Bruhat order.
#[derive(Debug)]
pub struct CosetSystem {
    sys: RootSystem,
    j_set: Vec<usize>,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
    level_starts: Vec<usize>,
    covers: OnceLock<Vec<Vec<usize>>>,
    leq: OnceLock<Vec<Vec<bool>>>,
    /// `descend[i][q-1]` is the index of `s_q w_i` when `q` is a left descent of `w_i`.
    descend: Vec<Vec<Option<usize>>>,
}

impl CosetSystem {
    pub fn enumerate(sys: &RootSystem, j_set: &[usize]) -> Result<Self> {
        Self::enumerate_guarded(sys, j_set, DEFAULT_GUARD)
    }

    /// Breadth-first by length, multiplying on the left by simple reflections.
    pub fn enumerate_guarded(sys: &RootSystem, j_set: &[usize], guard: usize) -> Result<Self> {
        for &j in j_set {
            sys.check_node("J", j)?;
        }
        let mut j_sorted: Vec<usize> = j_set.to_vec();
        j_sorted.sort_unstable();
        j_sorted.dedup();

        let id = WeylElement::identity(sys.rank());
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id.action.clone(), 0);
        let mut level_starts = vec![0];
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &e in &frontier {
                for q in 1..=sys.rank() {
                    let w = &elements[e];
                    if w.has_left_descent(q) {
                        continue;
                    }
                    let v = w.left_mul_simple(sys, q);
                    if !v.in_wj(&j_sorted) || index.contains_key(&v.action) {
                        continue;
                    }
                    if elements.len() >= guard {
                        return Err(Error::GuardExceeded { guard });
                    }
                    index.insert(v.action.clone(), elements.len());
                    next.push(elements.len());
                    elements.push(v);
                }
            }
            if !next.is_empty() {
                level_starts.push(elements.len() - next.len());
            }
            frontier = next;
        }
        Ok(CosetSystem {
            sys: sys.clone(),
            j_set: j_sorted,
            elements,
            index,
            level_starts,
            covers: OnceLock::new(),
            leq: OnceLock::new(),
            descend: Vec::new(),
        }
        .with_descent_table())
    }

    // For w in W^J and a left descent q, s_q w is again in W^J.
    fn with_descent_table(mut self) -> Self {
        self.descend = self
            .elements
            .iter()
            .map(|w| {
                (1..=self.sys.rank())
                    .map(|q| {
                        w.has_left_descent(q).then(|| {
                            let v = w.left_mul_simple(&self.sys, q);
                            self.index_of(&v)
                                .expect("left descents of minimal representatives stay minimal")
                        })
                    })
                    .collect()
            })
            .collect();
        self
    }

    pub fn system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn j_set(&self) -> &[usize] {
        &self.j_set
    }

    /// Elements in order of nondecreasing length; index 0 is the identity.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.action).copied()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.index.contains_key(&w.action)
    }

    pub fn max_length(&self) -> usize {
        self.level_starts.len() - 1
    }

    /// Indices of elements of length `l`.
    pub fn level(&self, l: usize) -> std::ops::Range<usize> {
        if l >= self.level_starts.len() {
            return self.elements.len()..self.elements.len();
        }
        let end = self
            .level_starts
            .get(l + 1)
            .copied()
            .unwrap_or(self.elements.len());
        self.level_starts[l]..end
    }

    /// The unique element of maximal length.
    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("W^J contains the identity")
    }

    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        match (self.index_of(u), self.index_of(w)) {
            (Some(i), Some(j)) => self.leq_idx(i, j),
            _ => bruhat_leq(&self.sys, u, w),
        }
    }

    /// `leq[i][j]` iff element `i` is Bruhat-below element `j`.
    pub fn leq_matrix(&self) -> &Vec<Vec<bool>> {
        // Columns in order of length; each reuses the column of s_q w for a left descent q.
        self.leq.get_or_init(|| {
            let n = self.elements.len();
            let mut m = vec![vec![false; n]; n];
            m[0][0] = true;
            for j in 1..n {
                let (q, below) = self.descend[j]
                    .iter()
                    .enumerate()
                    .find_map(|(q, d)| d.map(|d| (q, d)))
                    .expect("non-identity element has a left descent");
                for i in 0..n {
                    m[i][j] = match self.descend[i][q] {
                        Some(di) => m[di][below],
                        None => m[i][below],
                    };
                }
            }
            m
        })
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq_matrix()[i][j]
    }

    /// Upper covers of each element.
    pub fn covers(&self) -> &Vec<Vec<usize>> {
        self.covers.get_or_init(|| {
            let mut out = vec![Vec::new(); self.elements.len()];
            for l in 0..self.max_length() {
                for i in self.level(l) {
                    for j in self.level(l + 1) {
                        if self.leq_idx(i, j) {
                            out[i].push(j);
                        }
                    }
                }
            }
            out
        })
    }

    /// `{v ∈ W^J : v <= w}` in enumeration order.
    pub fn lower_interval(&self, w: &WeylElement) -> Result<Vec<WeylElement>> {
        Ok(self
            .lower_interval_indices(w)?
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect())
    }

    pub fn lower_interval_indices(&self, w: &WeylElement) -> Result<Vec<usize>> {
        let wi = self.index_of(w).ok_or_else(|| Error::NotInCoset {
            word: w.word_string(),
        })?;
        Ok((0..self.elements.len())
            .filter(|&i| self.leq_idx(i, wi))
            .collect())
    }

    /// Bruhat-minimal elements of a subset given by a predicate.
    pub fn minimal_elements<F: Fn(&WeylElement) -> bool>(&self, pred: F) -> Vec<usize> {
        let chosen: Vec<usize> = (0..self.elements.len())
            .filter(|&i| pred(&self.elements[i]))
            .collect();
        chosen
            .iter()
            .copied()
            .filter(|&i| {
                !chosen
                    .iter()
                    .any(|&j| j != i && self.leq_idx(j, i))
            })
            .collect()
    }
}

/// Orbit of a weight under the Weyl group, by simple reflections.
pub fn weyl_orbit(sys: &RootSystem, mu: &WeightVec) -> Vec<WeightVec> {
    let start = sys.to_weight_basis(mu);
    let mut seen: HashSet<Vec<Q>> = HashSet::new();
    seen.insert(start.coords().to_vec());
    let mut queue = VecDeque::from([start.clone()]);
    let mut out = vec![start];
    while let Some(nu) = queue.pop_front() {
        for i in 0..sys.rank() {
            let k = nu.coords()[i];
            if k.is_zero() {
                continue;
            }
            let coords: Vec<Q> = (0..sys.rank())
                .map(|j| nu.coords()[j] - k * sys.cartan()[j][i])
                .collect();
            if seen.insert(coords.clone()) {
                let image = WeightVec::new(coords, Basis::Weight);
                queue.push_back(image.clone());
                out.push(image);
            }
        }
    }
    out
}

/// Words `(s_{a_i}…s_i)(s_{a_{i+1}}…s_{i+1})…(s_{a_r}…s_r)` with `i <= a_i < … < a_r <= rank`,
/// paired with `(i, a_i..a_r)`: the non-identity representatives of `W^{S\{α_r}}` in type A.
pub fn type_a_coset_words(rank: usize, r: usize) -> Vec<(usize, Vec<usize>, Vec<usize>)> {
    fn extend(j: usize, r: usize, rank: usize, lo: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if j > r {
            out.push(acc.clone());
            return;
        }
        for a in lo.max(j)..=rank {
            acc.push(a);
            extend(j + 1, r, rank, a + 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    for i in 1..=r {
        let mut seqs = Vec::new();
        extend(i, r, rank, i, &mut Vec::new(), &mut seqs);
        for a in seqs {
            let word: Vec<usize> = a
                .iter()
                .enumerate()
                .flat_map(|(t, &aj)| (i + t..=aj).rev())
                .collect();
            out.push((i, a, word));
        }
    }
    out
}

/// `w_j(l) = s_{j+l-1} … s_{j+1} s_j` in type `B_n`.
pub fn type_b_block(j: usize, l: usize) -> Vec<usize> {
    (j..j + l).rev().collect()
}

/// Tuples `(l_1..l_n)` with `0 <= l_k <= n+1-k`, `l_{k-1} <= l_k + 1`, and
/// `l_{k-1} <= l_k` whenever `l_k <= n-k`, with their words `w_1(l_1)…w_n(l_n)`.
pub fn type_b_coset_words(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn extend(k: usize, n: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        // fills l_k for k = n, n-1, ..., 1; acc holds l_n first
        if k == 0 {
            let mut l = acc.clone();
            l.reverse();
            out.push(l);
            return;
        }
        for l in 0..=n + 1 - k {
            if let Some(&next) = acc.last() {
                // next = l_{k+1}
                if l > next + 1 || (next <= n - (k + 1) && l > next) {
                    continue;
                }
            }
            acc.push(l);
            extend(k - 1, n, acc, out);
            acc.pop();
        }
    }
    let mut tuples = Vec::new();
    extend(n, n, &mut Vec::new(), &mut tuples);
    tuples
        .into_iter()
        .map(|l| {
            let word = l
                .iter()
                .enumerate()
                .flat_map(|(k, &lk)| type_b_block(k + 1, lk))
                .collect();
            (l, word)
        })
        .collect()
}

/// Which fork node a type-D block ends in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fork {
    /// ends in `s_n`
    N,
    /// ends in `s_{n-1}`
    NMinus1,
}

impl Fork {
    pub fn other(self) -> Fork {
        match self {
            Fork::N => Fork::NMinus1,
            Fork::NMinus1 => Fork::N,
        }
    }
}

/// `w_n(l) = s_{l-1} … s_{n-2} s_n` and `w_{n-1}(l) = s_{l-1} … s_{n-2} s_{n-1}` for
/// `2 <= l <= n-1`; `w_n(n) = s_n`, `w_{n-1}(n) = s_{n-1}`.
pub fn type_d_block(n: usize, fork: Fork, l: usize) -> Vec<usize> {
    let end = match fork {
        Fork::N => n,
        Fork::NMinus1 => n - 1,
    };
    let mut w: Vec<usize> = if l >= n { Vec::new() } else { (l - 1..=n - 2).collect() };
    w.push(end);
    w
}

/// Products of blocks with `l` strictly increasing leftward in `2..=n`, forks alternating
/// from `rightmost` at the right end. Every subset of `{2..n}` gives one word; the empty
/// subset is the identity.
pub fn type_d_coset_words(n: usize, rightmost: Fork) -> Vec<(Vec<usize>, Vec<usize>)> {
    let values: Vec<usize> = (2..=n).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << values.len()) {
        let ls: Vec<usize> = values
            .iter()
            .enumerate()
            .filter(|(b, _)| mask & (1 << b) != 0)
            .map(|(_, &l)| l)
            .rev()
            .collect();
        out.push((ls.clone(), type_d_word(n, &ls, rightmost)));
    }
    out
}

/// The block product for `ls` listed left to right (strictly decreasing).
pub fn type_d_word(n: usize, ls: &[usize], rightmost: Fork) -> Vec<usize> {
    let k = ls.len();
    let mut word = Vec::new();
    for (pos, &l) in ls.iter().enumerate() {
        let from_right = k - 1 - pos;
        let fork = if from_right.is_multiple_of(2) { rightmost } else { rightmost.other() };
        word.extend(type_d_block(n, fork, l));
    }
    word
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(l: TypeLabel, n: usize) -> RootSystem {
        RootSystem::new(l, n).unwrap()
    }

    fn el(s: &RootSystem, w: &[usize]) -> WeylElement {
        WeylElement::from_word(s, w).unwrap()
    }

    #[test]
    fn normal_word_is_lexicographically_first() {
        let a4 = sys(TypeLabel::A, 4);
        let w = WeylElement::from_word(&a4, &[2, 3, 1, 2]).unwrap();
        assert_eq!(w.normal_word(&a4), vec![2, 1, 3, 2]);
        assert_eq!(w.normal_word_string(&a4), "2 1 3 2");
        assert_eq!(WeylElement::from_word(&a4, &w.normal_word(&a4)).unwrap(), w);
        let b3 = sys(TypeLabel::B, 3);
        let w = WeylElement::from_word(&b3, &[3, 2, 3, 1, 2]).unwrap();
        let nw = w.normal_word(&b3);
        assert_eq!(nw.len(), w.length());
        assert_eq!(WeylElement::from_word(&b3, &nw).unwrap(), w);
        assert!(WeylElement::identity(3).normal_word(&b3).is_empty());
    }

    #[test]
    fn identity_acts_trivially() {
        let a4 = sys(TypeLabel::A, 4);
        let mu = WeightVec::from_ints(&[3, 6, 7, 6], Basis::Root);
        assert_eq!(WeylElement::identity(4).apply(&a4, &mu), mu);
    }

    #[test]
    fn apply_examples() {
        let a4 = sys(TypeLabel::A, 4);
        let chi = WeightVec::from_ints(&[3, 6, 7, 6], Basis::Root);
        let w = el(&a4, &[2, 1, 3, 2]);
        assert_eq!(
            w.apply(&a4, &chi),
            WeightVec::from_ints(&[1, 0, 3, 6], Basis::Root)
        );
        let e6 = sys(TypeLabel::E6, 6);
        let w = el(&e6, &[1, 3, 4, 5, 2, 4, 3, 1]);
        let omega = e6.fundamental_weight(1).unwrap();
        let drop = omega.sub(&w.apply(&e6, &omega));
        assert_eq!(drop, WeightVec::from_ints(&[2, 1, 2, 2, 1, 0], Basis::Root));
    }

    #[test]
    fn apply_keeps_basis() {
        let b3 = sys(TypeLabel::B, 3);
        let w = el(&b3, &[3, 2, 3]);
        let mu = WeightVec::from_ints(&[1, 0, 2], Basis::Weight);
        let out = w.apply(&b3, &mu);
        assert_eq!(out.basis(), Basis::Weight);
        assert_eq!(b3.to_root_basis(&out), w.apply(&b3, &b3.to_root_basis(&mu)));
    }

    #[test]
    fn non_reduced_words_are_reduced() {
        let a3 = sys(TypeLabel::A, 3);
        let w = el(&a3, &[1, 1]);
        assert!(w.is_identity());
        let w = el(&a3, &[1, 2, 1, 2]);
        assert_eq!(w.length(), 2);
        assert_eq!(w, el(&a3, &[2, 1]));
        assert_eq!(el(&a3, &[1]).multiply(&a3, &el(&a3, &[1])), WeylElement::identity(3));
    }

    #[test]
    fn inverse_reverses_word() {
        let a4 = sys(TypeLabel::A, 4);
        let w = el(&a4, &[2, 1, 3, 2]);
        let inv = w.inverse_element();
        assert_eq!(inv, el(&a4, &[2, 3, 1, 2]));
        assert!(w.multiply(&a4, &inv).is_identity());
        assert!(WeylElement::identity(4).inverse_element().is_identity());
    }

    #[test]
    fn bruhat_examples() {
        let a4 = sys(TypeLabel::A, 4);
        let u = el(&a4, &[2]);
        let w = el(&a4, &[2, 1, 3, 2]);
        assert!(bruhat_leq(&a4, &u, &w));
        assert!(bruhat_leq(&a4, &w, &w));
        assert!(!bruhat_leq(&a4, &w, &el(&a4, &[2, 3, 4])));
        assert!(!bruhat_leq(&a4, &el(&a4, &[1]), &el(&a4, &[2, 3, 4])));
    }

    #[test]
    fn coset_sizes() {
        for n in 2..=8usize {
            let a = sys(TypeLabel::A, n - 1);
            for r in 1..n {
                let cs = CosetSystem::enumerate(&a, &maximal_parabolic(n - 1, r)).unwrap();
                assert_eq!(cs.len(), binomial(n, r));
            }
        }
        let e6 = sys(TypeLabel::E6, 6);
        let cs = CosetSystem::enumerate(&e6, &maximal_parabolic(6, 6)).unwrap();
        assert_eq!(cs.len(), 27);
        let everything: Vec<usize> = (1..=6).collect();
        assert_eq!(CosetSystem::enumerate(&e6, &everything).unwrap().len(), 1);
    }

    #[test]
    fn guard_is_enforced() {
        let a4 = sys(TypeLabel::A, 4);
        assert_eq!(
            CosetSystem::enumerate_guarded(&a4, &[], 100).unwrap_err(),
            Error::GuardExceeded { guard: 100 }
        );
        assert_eq!(CosetSystem::enumerate_guarded(&a4, &[], 120).unwrap().len(), 120);
    }

    #[test]
    fn lower_interval_examples() {
        let a4 = sys(TypeLabel::A, 4);
        let cs = CosetSystem::enumerate(&a4, &maximal_parabolic(4, 4)).unwrap();
        let w = el(&a4, &[2, 3, 4]);
        let chain = cs.lower_interval(&w).unwrap();
        let words: Vec<Vec<usize>> = chain.iter().map(|v| v.word().to_vec()).collect();
        assert_eq!(words, vec![vec![], vec![4], vec![3, 4], vec![2, 3, 4]]);
        let cs2 = CosetSystem::enumerate(&a4, &maximal_parabolic(4, 2)).unwrap();
        let w = el(&a4, &[4, 3, 2]);
        assert_eq!(cs2.lower_interval(&w).unwrap().len(), 4);
        assert!(!cs2.contains(&el(&a4, &[2, 3, 4])));
        assert_eq!(cs2.lower_interval(&WeylElement::identity(4)).unwrap().len(), 1);
        assert!(matches!(
            cs2.lower_interval(&el(&a4, &[1])),
            Err(Error::NotInCoset { .. })
        ));
        let e6 = sys(TypeLabel::E6, 6);
        let cs = CosetSystem::enumerate(&e6, &maximal_parabolic(6, 6)).unwrap();
        assert_eq!(cs.lower_interval(cs.longest()).unwrap().len(), 27);
    }

    #[test]
    fn divisor_moves() {
        let a4 = sys(TypeLabel::A, 4);
        assert!(schubert_divisor_moves(&a4, &WeylElement::identity(4), &maximal_parabolic(4, 4))
            .unwrap()
            .is_empty());
        let w = el(&a4, &[2, 3, 4]);
        let moves = schubert_divisor_moves(&a4, &w, &maximal_parabolic(4, 4)).unwrap();
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].0, 2);
        assert_eq!(moves[0].1, el(&a4, &[3, 4]));
        let b3 = sys(TypeLabel::B, 3);
        let moves = schubert_divisor_moves(&b3, &el(&b3, &[3]), &maximal_parabolic(3, 3)).unwrap();
        assert_eq!(moves.iter().map(|m| m.0).collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn one_line_examples() {
        let a3 = sys(TypeLabel::A, 3);
        assert_eq!(WeylElement::identity(3).one_line_notation_a(&a3).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(el(&a3, &[1]).one_line_notation_a(&a3).unwrap(), vec![2, 1, 3, 4]);
        let a4 = sys(TypeLabel::A, 4);
        let p = el(&a4, &[2, 1, 3, 2]).one_line_notation_a(&a4).unwrap();
        assert_eq!(&p[..2], &[3, 4]);
        assert!(el(&sys(TypeLabel::B, 2), &[1]).one_line_notation_a(&sys(TypeLabel::B, 2)).is_err());
    }

    #[test]
    fn covers_join_adjacent_levels() {
        let d4 = sys(TypeLabel::D, 4);
        let cs = CosetSystem::enumerate(&d4, &maximal_parabolic(4, 1)).unwrap();
        for (i, ups) in cs.covers().iter().enumerate() {
            for &j in ups {
                assert_eq!(cs.elements()[j].length(), cs.elements()[i].length() + 1);
            }
        }
        assert_eq!(cs.level(0), 0..1);
    }

    #[test]
    fn type_b_small_case() {
        let b2 = sys(TypeLabel::B, 2);
        let words: HashSet<WeylElement> = type_b_coset_words(2)
            .into_iter()
            .map(|(_, w)| el(&b2, &w))
            .collect();
        let expected: HashSet<WeylElement> = [vec![], vec![2], vec![1, 2], vec![2, 1, 2]]
            .iter()
            .map(|w| el(&b2, w))
            .collect();
        assert_eq!(words, expected);
    }

    #[test]
    fn type_d_blocks() {
        assert_eq!(type_d_block(5, Fork::N, 5), vec![5]);
        assert_eq!(type_d_block(5, Fork::NMinus1, 4), vec![3, 4]);
        assert_eq!(type_d_block(5, Fork::N, 3), vec![2, 3, 5]);
        assert_eq!(type_d_word(5, &[5, 4, 3], Fork::N), vec![5, 3, 4, 2, 3, 5]);
    }

    pub(crate) fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}
