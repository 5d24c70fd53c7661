//! Root systems of types A, B, C, D, E6 and E7 with exact weight arithmetic.
//!
//! Nodes are numbered `1..=rank` following Humphreys' tables: `B_n` has the
//! short simple root at node `n`, `C_n` the long one at node `n`, `D_n` forks
//! at node `n - 2` into nodes `n - 1` and `n`, and in `E_6`/`E_7` node 2 hangs
//! off node 4 while nodes `1, 3, 4, 5, ...` form the long chain.
//!
//! A weight is stored together with the basis its coordinates refer to, since
//! dominance data lives naturally in fundamental-weight coordinates while the
//! one-parameter-subgroup pairings read off simple-root coordinates.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the engine.
pub type Q = Rational64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl TypeLabel {
    pub const ALL: [TypeLabel; 6] = [
        TypeLabel::A,
        TypeLabel::B,
        TypeLabel::C,
        TypeLabel::D,
        TypeLabel::E6,
        TypeLabel::E7,
    ];

    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            TypeLabel::A => rank >= 1,
            TypeLabel::B | TypeLabel::C => rank >= 2,
            TypeLabel::D => rank >= 4,
            TypeLabel::E6 => rank == 6,
            TypeLabel::E7 => rank == 7,
        }
    }

    /// Number of positive roots at the given rank.
    pub fn positive_root_count(self, rank: usize) -> usize {
        match self {
            TypeLabel::A => rank * (rank + 1) / 2,
            TypeLabel::B | TypeLabel::C => rank * rank,
            TypeLabel::D => rank * (rank - 1),
            TypeLabel::E6 => 36,
            TypeLabel::E7 => 63,
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLabel::A => "A",
            TypeLabel::B => "B",
            TypeLabel::C => "C",
            TypeLabel::D => "D",
            TypeLabel::E6 => "E6",
            TypeLabel::E7 => "E7",
        };
        f.write_str(s)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLabel::A),
            "B" => Ok(TypeLabel::B),
            "C" => Ok(TypeLabel::C),
            "D" => Ok(TypeLabel::D),
            "E6" | "E" => Ok(TypeLabel::E6),
            "E7" => Ok(TypeLabel::E7),
            other => Err(Error::Parse(format!("unknown type label {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// Coordinates with respect to the simple roots.
    Root,
    /// Coordinates with respect to the fundamental weights.
    Weight,
}

/// An exact rational weight tagged with the basis of its coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVec {
    coords: Vec<Q>,
    basis: Basis,
}

impl WeightVec {
    pub fn new(coords: Vec<Q>, basis: Basis) -> Self {
        WeightVec { coords, basis }
    }

    pub fn in_roots(coords: Vec<Q>) -> Self {
        Self::new(coords, Basis::Root)
    }

    pub fn in_weights(coords: Vec<Q>) -> Self {
        Self::new(coords, Basis::Weight)
    }

    pub fn from_ints(coords: &[i64], basis: Basis) -> Self {
        Self::new(coords.iter().map(|&c| Q::from_integer(c)).collect(), basis)
    }

    pub fn zero(rank: usize, basis: Basis) -> Self {
        Self::new(vec![Q::zero(); rank], basis)
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn scale(&self, k: Q) -> Self {
        Self::new(self.coords.iter().map(|c| c * k).collect(), self.basis)
    }

    /// Coordinatewise sum; both operands must share a basis.
    pub fn add(&self, other: &WeightVec) -> Self {
        assert_eq!(self.basis, other.basis, "adding weights in different bases");
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
            self.basis,
        )
    }

    pub fn sub(&self, other: &WeightVec) -> Self {
        self.add(&other.scale(-Q::one()))
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

/// The index `s` of the one-parameter subgroup dual to the simple root `α_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneParam(usize);

impl OneParam {
    pub fn new(sys: &RootSystem, s: usize) -> Result<Self> {
        sys.check_node("s", s)?;
        Ok(OneParam(s))
    }

    pub fn index(self) -> usize {
        self.0
    }
}

/// Immutable Cartan, root and weight data for one simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: TypeLabel,
    rank: usize,
    /// `cartan[i][j] = <α_j, α_i^∨>`.
    cartan: Vec<Vec<i64>>,
    /// Symmetric invariant form on simple roots, scaled to be integral.
    form: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    highest_root: Vec<i64>,
    inv_cartan: Vec<Vec<Q>>,
}

impl RootSystem {
    pub fn new(label: TypeLabel, rank: usize) -> Result<Self> {
        if !label.admits_rank(rank) {
            return Err(Error::InadmissibleType { label, rank });
        }
        let form = symmetric_form(label, rank);
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * form[i][j] / form[i][i]).collect())
            .collect();
        let inv_cartan = invert(&cartan).expect("Cartan matrices of finite type are invertible");

        let mut sys = RootSystem {
            label,
            rank,
            cartan,
            form,
            positive_roots: Vec::new(),
            root_index: HashMap::new(),
            highest_root: Vec::new(),
            inv_cartan,
        };
        sys.generate_roots();
        if sys.positive_roots.len() != label.positive_root_count(rank) {
            return Err(Error::Inconsistent(format!(
                "{label}{rank}: generated {} positive roots, expected {}",
                sys.positive_roots.len(),
                label.positive_root_count(rank)
            )));
        }
        Ok(sys)
    }

    /// Closure of the simple roots under simple reflections, keeping positive images.
    fn generate_roots(&mut self) {
        let n = self.rank;
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        let mut roots = Vec::new();
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let mut image = beta.clone();
                let k = self.coroot_pairing_int(&beta, i);
                image[i] -= k;
                if image.iter().all(|&c| c >= 0) && seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
            roots.push(beta);
        }
        roots.sort_by_key(|b| (b.iter().sum::<i64>(), b.clone()));
        self.root_index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        self.highest_root = roots.last().cloned().unwrap_or_default();
        self.positive_roots = roots;
    }

    fn coroot_pairing_int(&self, v: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| self.cartan[i][j] * v[j]).sum()
    }

    pub(crate) fn check_node(&self, what: &'static str, index: usize) -> Result<()> {
        if index == 0 || index > self.rank {
            Err(Error::IndexOutOfRange {
                what,
                index,
                max: self.rank,
            })
        } else {
            Ok(())
        }
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inv_cartan(&self) -> &[Vec<Q>] {
        &self.inv_cartan
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.highest_root
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.root_index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|c| -c).collect();
        self.root_index.contains_key(&neg)
    }

    pub fn is_positive_root(&self, v: &[i64]) -> bool {
        self.root_index.contains_key(v)
    }

    /// `<μ, α_i^∨>` for a weight given in root coordinates; `i` is 0-based.
    pub(crate) fn simple_coroot_pairing(&self, root_coords: &[Q], i: usize) -> Q {
        (0..self.rank)
            .map(|j| root_coords[j] * self.cartan[i][j])
            .fold(Q::zero(), |a, b| a + b)
    }

    /// `<μ, β^∨> = 2(μ, β) / (β, β)` for a weight in root coordinates.
    pub fn coroot_pairing(&self, root_coords: &[Q], beta: &[i64]) -> Q {
        let n = self.rank;
        let mut mu_beta = Q::zero();
        let mut beta_beta = 0i64;
        for i in 0..n {
            for j in 0..n {
                mu_beta += root_coords[i] * self.form[i][j] * beta[j];
                beta_beta += beta[i] * self.form[i][j] * beta[j];
            }
        }
        mu_beta * 2 / beta_beta
    }

    pub fn to_root_basis(&self, mu: &WeightVec) -> WeightVec {
        match mu.basis() {
            Basis::Root => mu.clone(),
            Basis::Weight => {
                let n = self.rank;
                let coords = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| self.inv_cartan[i][j] * mu.coords[j])
                            .fold(Q::zero(), |a, b| a + b)
                    })
                    .collect();
                WeightVec::in_roots(coords)
            }
        }
    }

    pub fn to_weight_basis(&self, mu: &WeightVec) -> WeightVec {
        match mu.basis() {
            Basis::Weight => mu.clone(),
            Basis::Root => WeightVec::in_weights(
                (0..self.rank)
                    .map(|i| self.simple_coroot_pairing(&mu.coords, i))
                    .collect(),
            ),
        }
    }

    pub fn to_basis(&self, mu: &WeightVec, basis: Basis) -> WeightVec {
        match basis {
            Basis::Root => self.to_root_basis(mu),
            Basis::Weight => self.to_weight_basis(mu),
        }
    }

    pub fn check_weight(&self, mu: &WeightVec) -> Result<()> {
        if mu.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: mu.rank(),
            });
        }
        Ok(())
    }

    /// `<μ, λ_s>`: the coefficient of `α_s` when `μ` is written in simple roots.
    pub fn pairing_lambda(&self, mu: &WeightVec, s: OneParam) -> Q {
        self.to_root_basis(mu).coords[s.index() - 1]
    }

    /// The fundamental weight `ω_r` in simple-root coordinates.
    pub fn fundamental_weight(&self, r: usize) -> Result<WeightVec> {
        self.check_node("r", r)?;
        Ok(WeightVec::in_roots(
            (0..self.rank).map(|i| self.inv_cartan[i][r - 1]).collect(),
        ))
    }

    pub fn is_dominant(&self, mu: &WeightVec) -> bool {
        self.to_weight_basis(mu)
            .coords
            .iter()
            .all(|c| !c.is_negative())
    }

    /// `ω_r` pairs to at most 1 with every positive coroot.
    pub fn is_minuscule(&self, r: usize) -> bool {
        let omega = match self.fundamental_weight(r) {
            Ok(w) => w,
            Err(_) => return false,
        };
        self.positive_roots
            .iter()
            .all(|beta| self.coroot_pairing(omega.coords(), beta) <= Q::one())
    }

    pub fn minuscule_nodes(&self) -> Vec<usize> {
        (1..=self.rank).filter(|&r| self.is_minuscule(r)).collect()
    }

    /// `α_s` has coefficient 1 in the highest root.
    pub fn is_cominuscule(&self, s: usize) -> bool {
        s >= 1 && s <= self.rank && self.highest_root[s - 1] == 1
    }

    pub fn cominuscule_nodes(&self) -> Vec<usize> {
        (1..=self.rank).filter(|&s| self.is_cominuscule(s)).collect()
    }

    /// Least `m >= 1` such that `m ω_r` lies in the root lattice.
    pub fn least_m_root_lattice(&self, r: usize) -> Result<i64> {
        let omega = self.fundamental_weight(r)?;
        Ok(omega
            .coords
            .iter()
            .fold(1i64, |acc, c| acc.lcm(c.denom())))
    }

    /// `μ <= χ`: the difference `χ - μ` is a nonnegative integral combination of simple roots.
    pub fn dominance_leq(&self, mu: &WeightVec, chi: &WeightVec) -> bool {
        let diff = self.to_root_basis(chi).sub(&self.to_root_basis(mu));
        diff.coords
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Sum of the root-basis coordinates.
    pub fn height(&self, mu: &WeightVec) -> Q {
        self.to_root_basis(mu)
            .coords
            .iter()
            .fold(Q::zero(), |a, b| a + b)
    }
}

fn symmetric_form(label: TypeLabel, rank: usize) -> Vec<Vec<i64>> {
    let n = rank;
    let mut b = vec![vec![0i64; n]; n];
    let link = |b: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        b[i - 1][j - 1] = v;
        b[j - 1][i - 1] = v;
    };
    match label {
        TypeLabel::A => {
            for i in 1..=n {
                b[i - 1][i - 1] = 2;
            }
            for i in 1..n {
                link(&mut b, i, i + 1, -1);
            }
        }
        TypeLabel::B => {
            // α_n short: (α_i, α_i) = 2 for i < n, (α_n, α_n) = 1.
            for i in 1..n {
                b[i - 1][i - 1] = 4;
            }
            b[n - 1][n - 1] = 2;
            for i in 1..n {
                link(&mut b, i, i + 1, -2);
            }
        }
        TypeLabel::C => {
            // α_n long.
            for i in 1..n {
                b[i - 1][i - 1] = 2;
            }
            b[n - 1][n - 1] = 4;
            for i in 1..n - 1 {
                link(&mut b, i, i + 1, -1);
            }
            link(&mut b, n - 1, n, -2);
        }
        TypeLabel::D => {
            for i in 1..=n {
                b[i - 1][i - 1] = 2;
            }
            for i in 1..n - 1 {
                link(&mut b, i, i + 1, -1);
            }
            link(&mut b, n - 2, n, -1);
        }
        TypeLabel::E6 | TypeLabel::E7 => {
            for i in 1..=n {
                b[i - 1][i - 1] = 2;
            }
            link(&mut b, 1, 3, -1);
            link(&mut b, 2, 4, -1);
            for i in 3..n {
                link(&mut b, i, i + 1, -1);
            }
        }
    }
    b
}

/// Gauss-Jordan inverse over the rationals.
fn invert(m: &[Vec<i64>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Q::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    fn roots(coords: &[Q]) -> WeightVec {
        WeightVec::in_roots(coords.to_vec())
    }

    #[test]
    fn rank_one() {
        let a1 = RootSystem::new(TypeLabel::A, 1).unwrap();
        assert_eq!(a1.positive_roots(), &[vec![1]]);
        assert_eq!(a1.highest_root(), &[1]);
        assert_eq!(a1.fundamental_weight(1).unwrap().coords(), &[q(1, 2)]);
    }

    #[test]
    fn inadmissible_ranks_are_rejected() {
        for (label, rank) in [
            (TypeLabel::A, 0),
            (TypeLabel::B, 1),
            (TypeLabel::C, 1),
            (TypeLabel::D, 3),
            (TypeLabel::E6, 7),
            (TypeLabel::E7, 6),
        ] {
            assert!(matches!(
                RootSystem::new(label, rank),
                Err(Error::InadmissibleType { .. })
            ));
        }
    }

    #[test]
    fn cartan_axioms_and_inverse() {
        for label in TypeLabel::ALL {
            for rank in 1..=8 {
                let Ok(sys) = RootSystem::new(label, rank) else {
                    continue;
                };
                let c = sys.cartan();
                for i in 0..rank {
                    assert_eq!(c[i][i], 2);
                    for j in 0..rank {
                        if i != j {
                            assert!(c[i][j] <= 0);
                            assert_eq!(c[i][j] == 0, c[j][i] == 0);
                        }
                    }
                }
                let inv = sys.inv_cartan();
                for i in 0..rank {
                    for j in 0..rank {
                        let v = (0..rank)
                            .map(|k| inv[i][k] * c[k][j])
                            .fold(Q::zero(), |a, b| a + b);
                        assert_eq!(v, if i == j { Q::one() } else { Q::zero() });
                    }
                }
            }
        }
    }

    #[test]
    fn highest_root_dominates_every_positive_root() {
        for label in TypeLabel::ALL {
            for rank in 1..=8 {
                let Ok(sys) = RootSystem::new(label, rank) else {
                    continue;
                };
                let top = WeightVec::from_ints(sys.highest_root(), Basis::Root);
                for beta in sys.positive_roots() {
                    let b = WeightVec::from_ints(beta, Basis::Root);
                    assert!(sys.dominance_leq(&b, &top));
                }
            }
        }
    }

    #[test]
    fn known_highest_roots() {
        let b3 = RootSystem::new(TypeLabel::B, 3).unwrap();
        assert_eq!(b3.highest_root(), &[1, 2, 2]);
        let c3 = RootSystem::new(TypeLabel::C, 3).unwrap();
        assert_eq!(c3.highest_root(), &[2, 2, 1]);
        let e7 = RootSystem::new(TypeLabel::E7, 7).unwrap();
        assert_eq!(e7.positive_roots().len(), 63);
        assert_eq!(e7.highest_root(), &[2, 2, 3, 4, 3, 2, 1]);
    }

    #[test]
    fn printed_fundamental_weight_expansions() {
        // A_{n-1}: ω_r = (1/n)(Σ_{i<r} i(n-r) α_i + Σ_{i>=r} r(n-i) α_i)
        for n in 2..=9i64 {
            let sys = RootSystem::new(TypeLabel::A, (n - 1) as usize).unwrap();
            for r in 1..n {
                let expected: Vec<Q> = (1..n)
                    .map(|i| if i < r { q(i * (n - r), n) } else { q(r * (n - i), n) })
                    .collect();
                assert_eq!(sys.fundamental_weight(r as usize).unwrap().coords(), &expected[..]);
            }
        }
        for n in 2..=7i64 {
            // B_n: ω_n = ½ Σ i α_i
            let b = RootSystem::new(TypeLabel::B, n as usize).unwrap();
            let expected: Vec<Q> = (1..=n).map(|i| q(i, 2)).collect();
            assert_eq!(b.fundamental_weight(n as usize).unwrap().coords(), &expected[..]);
            // C_n: ω_1 = α_1 + ... + α_{n-1} + ½ α_n
            let c = RootSystem::new(TypeLabel::C, n as usize).unwrap();
            let mut expected = vec![q(1, 1); n as usize];
            expected[n as usize - 1] = q(1, 2);
            assert_eq!(c.fundamental_weight(1).unwrap().coords(), &expected[..]);
        }
        for n in 4..=7i64 {
            let d = RootSystem::new(TypeLabel::D, n as usize).unwrap();
            let nu = n as usize;
            // ω_1 = α_1 + ... + α_{n-2} + ½(α_{n-1} + α_n)
            let mut w1 = vec![q(1, 1); nu];
            w1[nu - 2] = q(1, 2);
            w1[nu - 1] = q(1, 2);
            assert_eq!(d.fundamental_weight(1).unwrap().coords(), &w1[..]);
            // ω_n = ½(α_1 + 2α_2 + ... + (n-2)α_{n-2}) + ¼(n-2)α_{n-1} + ¼ n α_n
            let mut wn: Vec<Q> = (1..=n).map(|i| q(i, 2)).collect();
            wn[nu - 2] = q(n - 2, 4);
            wn[nu - 1] = q(n, 4);
            assert_eq!(d.fundamental_weight(nu).unwrap().coords(), &wn[..]);
            let mut wn1 = wn.clone();
            wn1.swap(nu - 2, nu - 1);
            assert_eq!(d.fundamental_weight(nu - 1).unwrap().coords(), &wn1[..]);
        }
        let e6 = RootSystem::new(TypeLabel::E6, 6).unwrap();
        let third = |v: [i64; 6]| v.iter().map(|&x| q(x, 3)).collect::<Vec<_>>();
        assert_eq!(e6.fundamental_weight(1).unwrap().coords(), &third([4, 3, 5, 6, 4, 2])[..]);
        assert_eq!(e6.fundamental_weight(6).unwrap().coords(), &third([2, 3, 4, 6, 5, 4])[..]);
        let e7 = RootSystem::new(TypeLabel::E7, 7).unwrap();
        let half: Vec<Q> = [2, 3, 4, 6, 5, 4, 3].iter().map(|&x| q(x, 2)).collect();
        assert_eq!(e7.fundamental_weight(7).unwrap().coords(), &half[..]);
    }

    #[test]
    fn pairing_examples() {
        let a4 = RootSystem::new(TypeLabel::A, 4).unwrap();
        let s2 = OneParam::new(&a4, 2).unwrap();
        assert_eq!(a4.pairing_lambda(&a4.fundamental_weight(2).unwrap(), s2), q(6, 5));
        let alpha2 = WeightVec::from_ints(&[0, 1, 0, 0], Basis::Root);
        assert_eq!(a4.pairing_lambda(&alpha2, s2), q(1, 1));
        for n in 2..=7usize {
            let b = RootSystem::new(TypeLabel::B, n).unwrap();
            let s = OneParam::new(&b, n).unwrap();
            assert_eq!(b.pairing_lambda(&b.fundamental_weight(n).unwrap(), s), q(n as i64, 2));
        }
    }

    #[test]
    fn minuscule_and_cominuscule_nodes() {
        let sys = |l, n| RootSystem::new(l, n).unwrap();
        for n in 1..=8 {
            assert_eq!(sys(TypeLabel::A, n).minuscule_nodes(), (1..=n).collect::<Vec<_>>());
            assert_eq!(sys(TypeLabel::A, n).cominuscule_nodes(), (1..=n).collect::<Vec<_>>());
        }
        for n in 2..=7 {
            assert_eq!(sys(TypeLabel::B, n).minuscule_nodes(), vec![n]);
            assert_eq!(sys(TypeLabel::C, n).minuscule_nodes(), vec![1]);
            assert_eq!(sys(TypeLabel::B, n).cominuscule_nodes(), vec![1]);
            assert_eq!(sys(TypeLabel::C, n).cominuscule_nodes(), vec![n]);
        }
        for n in 4..=7 {
            assert_eq!(sys(TypeLabel::D, n).minuscule_nodes(), vec![1, n - 1, n]);
            assert_eq!(sys(TypeLabel::D, n).cominuscule_nodes(), vec![1, n - 1, n]);
        }
        assert_eq!(sys(TypeLabel::E6, 6).minuscule_nodes(), vec![1, 6]);
        assert_eq!(sys(TypeLabel::E7, 7).minuscule_nodes(), vec![7]);
        let b3 = sys(TypeLabel::B, 3);
        assert!(b3.is_cominuscule(1));
        assert!(!b3.is_cominuscule(2));
        assert!(sys(TypeLabel::C, 3).is_cominuscule(3));
    }

    #[test]
    fn least_m_examples() {
        for n in 2..=7usize {
            // the α_1 coefficient of ω_n is always 1/2
            let b = RootSystem::new(TypeLabel::B, n).unwrap();
            assert_eq!(b.least_m_root_lattice(n).unwrap(), 2);
        }
        let e6 = RootSystem::new(TypeLabel::E6, 6).unwrap();
        assert_eq!(e6.least_m_root_lattice(6).unwrap(), 3);
        for n in 2..=9usize {
            let a = RootSystem::new(TypeLabel::A, n - 1).unwrap();
            for r in 1..n {
                if r.gcd(&n) == 1 {
                    assert_eq!(a.least_m_root_lattice(r).unwrap(), n as i64);
                }
            }
        }
    }

    #[test]
    fn least_m_is_least() {
        for label in TypeLabel::ALL {
            for rank in 1..=7 {
                let Ok(sys) = RootSystem::new(label, rank) else {
                    continue;
                };
                for r in sys.minuscule_nodes() {
                    let m = sys.least_m_root_lattice(r).unwrap();
                    let w = sys.fundamental_weight(r).unwrap();
                    assert!(w.scale(Q::from_integer(m)).is_integral());
                    for k in 1..m {
                        assert!(!w.scale(Q::from_integer(k)).is_integral());
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let a3 = RootSystem::new(TypeLabel::A, 3).unwrap();
        let w2 = WeightVec::from_ints(&[0, 1, 0], Basis::Weight);
        let two_w1 = WeightVec::from_ints(&[2, 0, 0], Basis::Weight);
        assert!(a3.dominance_leq(&w2, &two_w1));
        assert!(a3.dominance_leq(&w2, &w2));
        assert_eq!(
            a3.to_root_basis(&two_w1.sub(&w2)).coords(),
            &[q(1, 1), q(0, 1), q(0, 1)]
        );
        let a2 = RootSystem::new(TypeLabel::A, 2).unwrap();
        let w1 = WeightVec::from_ints(&[1, 0], Basis::Weight);
        let w2 = WeightVec::from_ints(&[0, 1], Basis::Weight);
        assert!(!a2.dominance_leq(&w1, &w2));
    }

    #[test]
    fn basis_round_trip() {
        let e7 = RootSystem::new(TypeLabel::E7, 7).unwrap();
        let mu = roots(&[q(1, 2), q(-3, 1), q(0, 1), q(7, 3), q(1, 1), q(-1, 5), q(2, 1)]);
        let back = e7.to_root_basis(&e7.to_weight_basis(&mu));
        assert_eq!(back, mu);
    }

    #[test]
    fn cominuscule_pairing_property() {
        for label in TypeLabel::ALL {
            for rank in 1..=7 {
                let Ok(sys) = RootSystem::new(label, rank) else {
                    continue;
                };
                for s in 1..=rank {
                    let all_le_one = sys.positive_roots().iter().all(|b| b[s - 1] <= 1);
                    assert!(sys.positive_roots().iter().all(|b| b[s - 1] >= 0));
                    assert_eq!(all_le_one, sys.is_cominuscule(s));
                }
            }
        }
    }
}
