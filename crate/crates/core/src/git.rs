//! Semistability of Schubert varieties for a one-parameter subgroup `λ_s`.
//!
//! Everything reduces to the sign of `<w(χ), λ_s>` on minimal coset
//! representatives, so a context precomputes that pairing once per element.

use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{Basis, OneParam, RootSystem, WeightVec, Q};
use crate::weyl::{maximal_parabolic, CosetSystem, WeylElement, DEFAULT_GUARD};

/// A dominant character `χ`, its parabolic `J` and the subgroup `λ_s`.
#[derive(Debug, Clone)]
pub struct LinearizationContext {
    chi: WeightVec,
    chi_root: Vec<Q>,
    s: OneParam,
    coset: Arc<CosetSystem>,
    /// `<v(χ), λ_s>` for every coset element, by index.
    pairings: Vec<Q>,
}

/// `J = {i : χ_i = 0}` for `χ` in fundamental-weight coordinates.
pub fn parabolic_of(chi: &WeightVec) -> Vec<usize> {
    chi.coords()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_zero())
        .map(|(i, _)| i + 1)
        .collect()
}

fn validate_character(sys: &RootSystem, chi: &WeightVec) -> Result<WeightVec> {
    sys.check_weight(chi)?;
    let chi = sys.to_weight_basis(chi);
    if chi.coords().iter().all(|c| c.is_zero())
        || chi.coords().iter().any(|c| c.is_negative() || !c.is_integer())
    {
        return Err(Error::InvalidCharacter);
    }
    Ok(chi)
}

impl LinearizationContext {
    pub fn new(sys: &RootSystem, chi: &WeightVec, s: usize) -> Result<Self> {
        Self::with_guard(sys, chi, s, DEFAULT_GUARD)
    }

    pub fn with_guard(sys: &RootSystem, chi: &WeightVec, s: usize, guard: usize) -> Result<Self> {
        let chi = validate_character(sys, chi)?;
        let coset = CosetSystem::enumerate_guarded(sys, &parabolic_of(&chi), guard)?;
        Self::over_coset(Arc::new(coset), &chi, s)
    }

    /// Reuses an enumerated coset system; its `J` must be the vanishing set of `χ`.
    pub fn over_coset(coset: Arc<CosetSystem>, chi: &WeightVec, s: usize) -> Result<Self> {
        let sys = coset.system();
        let chi = validate_character(sys, chi)?;
        if parabolic_of(&chi) != coset.j_set() {
            return Err(Error::Precondition(
                "coset parabolic does not match the vanishing set of chi".into(),
            ));
        }
        let s = OneParam::new(sys, s)?;
        let chi_root = sys.to_root_basis(&chi).coords().to_vec();
        let pairings = coset
            .elements()
            .iter()
            .map(|w| w.apply_root_coords(&chi_root)[s.index() - 1])
            .collect();
        Ok(LinearizationContext {
            chi,
            chi_root,
            s,
            coset,
            pairings,
        })
    }

    /// Same character and coset, different `λ_s`.
    pub fn with_s(&self, s: usize) -> Result<Self> {
        Self::over_coset(Arc::clone(&self.coset), &self.chi, s)
    }

    pub fn system(&self) -> &RootSystem {
        self.coset.system()
    }

    pub fn chi(&self) -> &WeightVec {
        &self.chi
    }

    pub fn chi_root(&self) -> &[Q] {
        &self.chi_root
    }

    pub fn s(&self) -> usize {
        self.s.index()
    }

    pub fn coset(&self) -> &CosetSystem {
        &self.coset
    }

    pub fn j_set(&self) -> &[usize] {
        self.coset.j_set()
    }

    fn locate(&self, w: &WeylElement) -> Result<usize> {
        self.coset.index_of(w).ok_or_else(|| Error::NotInCoset {
            word: w.word_string(),
        })
    }

    pub fn pairing_at(&self, idx: usize) -> Q {
        self.pairings[idx]
    }

    /// `<w(χ), λ_s>`.
    pub fn pairing(&self, w: &WeylElement) -> Result<Q> {
        Ok(self.pairings[self.locate(w)?])
    }

    /// `X(w)` has `λ_s`-semistable points iff `<w(χ), λ_s> <= 0`.
    pub fn admits_semistable(&self, w: &WeylElement) -> Result<(bool, Q)> {
        let a = self.pairing(w)?;
        Ok((!a.is_positive(), a))
    }

    /// `X(w)` has `T`-semistable points iff `w(χ) <= 0` coordinatewise.
    pub fn admits_semistable_t(&self, w: &WeylElement) -> Result<bool> {
        self.locate(w)?;
        Ok(w.apply_root_coords(&self.chi_root)
            .iter()
            .all(|c| !c.is_positive()))
    }

    /// No `v <= w` in `W^J` pairs to zero.
    pub fn stable_equals_semistable(&self, w: &WeylElement) -> Result<bool> {
        Ok(self
            .coset
            .lower_interval_indices(w)?
            .into_iter()
            .all(|i| !self.pairings[i].is_zero()))
    }

    /// Full scan of `W^J`, cross-checked against the minimal admitting antichain.
    pub fn ss_equals_s_whole_space(&self) -> Result<bool> {
        let scan = self.pairings.iter().all(|a| !a.is_zero());
        let reduced = self
            .minimal_admitting_indices()
            .into_iter()
            .all(|i| !self.pairings[i].is_zero());
        if scan != reduced {
            return Err(Error::Inconsistent(format!(
                "stable=semistable scan gives {scan}, minimal-element criterion gives {reduced}"
            )));
        }
        Ok(scan)
    }

    pub fn minimal_admitting_indices(&self) -> Vec<usize> {
        let pairings = &self.pairings;
        let coset = &self.coset;
        coset.minimal_elements(|w| {
            let i = coset.index_of(w).expect("element of its own coset");
            !pairings[i].is_positive()
        })
    }

    /// Bruhat-minimal elements of `{w ∈ W^J : <w(χ), λ_s> <= 0}`.
    pub fn minimal_admitting(&self) -> Vec<WeylElement> {
        self.minimal_admitting_indices()
            .into_iter()
            .map(|i| self.coset.elements()[i].clone())
            .collect()
    }
}

/// `W^{S\{α_r}}` for a minuscule `ω_r`, with the drop `ω_r - w(ω_r)` of every element.
#[derive(Debug, Clone)]
pub struct MinusculeCoset {
    r: usize,
    m: i64,
    omega: Vec<Q>,
    coset: Arc<CosetSystem>,
    /// Root coordinates of `ω_r - w(ω_r)`, integral because the difference lies in the root lattice.
    drops: Vec<Vec<i64>>,
}

/// The minimal semistable Schubert variety `X(w_{s,r})` for `χ = m ω_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSchubert {
    pub r: usize,
    pub s: usize,
    pub w: WeylElement,
    /// `<w(ω_r), λ_s>`.
    pub pairing: Q,
    pub ss_eq_s: bool,
    /// Least `m` with `m ω_r` in the root lattice.
    pub m: i64,
    /// Least `q` with `q m >= <m ω_r, λ_s>`; `w = τ_{s,q}`.
    pub q: i64,
}

impl MinusculeCoset {
    pub fn new(sys: &RootSystem, r: usize) -> Result<Self> {
        Self::with_guard(sys, r, DEFAULT_GUARD)
    }

    pub fn with_guard(sys: &RootSystem, r: usize, guard: usize) -> Result<Self> {
        sys.check_node("r", r)?;
        if !sys.is_minuscule(r) {
            return Err(Error::NotMinuscule {
                label: sys.label(),
                r,
            });
        }
        let coset = CosetSystem::enumerate_guarded(sys, &maximal_parabolic(sys.rank(), r), guard)?;
        let omega = sys.fundamental_weight(r)?.coords().to_vec();
        let drops = coset
            .elements()
            .iter()
            .map(|w| {
                let image = w.apply_root_coords(&omega);
                omega
                    .iter()
                    .zip(&image)
                    .map(|(a, b)| {
                        let d = a - b;
                        assert!(d.is_integer(), "ω_r - w(ω_r) must lie in the root lattice");
                        d.to_integer()
                    })
                    .collect()
            })
            .collect();
        Ok(MinusculeCoset {
            r,
            m: sys.least_m_root_lattice(r)?,
            omega,
            coset: Arc::new(coset),
            drops,
        })
    }

    pub fn system(&self) -> &RootSystem {
        self.coset.system()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn omega(&self) -> &[Q] {
        &self.omega
    }

    pub fn coset(&self) -> &CosetSystem {
        &self.coset
    }

    pub fn coset_arc(&self) -> Arc<CosetSystem> {
        Arc::clone(&self.coset)
    }

    pub fn drop_vector(&self, idx: usize) -> &[i64] {
        &self.drops[idx]
    }

    /// `<ω_r - w(ω_r), λ_s>` for element `idx`.
    pub fn drop_at(&self, idx: usize, s: usize) -> i64 {
        self.drops[idx][s - 1]
    }

    /// `a_s` where `w_0^J(ω_r) = ω_r - Σ a_j α_j`.
    pub fn max_drop(&self, s: usize) -> i64 {
        self.drops[self.coset.len() - 1][s - 1]
    }

    /// `<w(ω_r), λ_s>` for element `idx`.
    pub fn pairing_at(&self, idx: usize, s: usize) -> Q {
        self.omega[s - 1] - self.drop_at(idx, s)
    }

    /// Linearization context for `χ = m ω_r` over this coset.
    pub fn context(&self, s: usize) -> Result<LinearizationContext> {
        let mut chi = vec![0i64; self.system().rank()];
        chi[self.r - 1] = self.m;
        LinearizationContext::over_coset(
            Arc::clone(&self.coset),
            &WeightVec::from_ints(&chi, Basis::Weight),
            s,
        )
    }

    fn check_drop(&self, s: usize, c: i64) -> Result<()> {
        self.system().check_node("s", s)?;
        let max = self.max_drop(s);
        if c < 0 || c > max {
            return Err(Error::DropOutOfRange { c, max });
        }
        Ok(())
    }

    /// Elements of minimal length among those with drop `c` at `s`.
    pub fn length_minimal_drop_set(&self, s: usize, c: i64) -> Result<Vec<usize>> {
        self.check_drop(s, c)?;
        let mut found = Vec::new();
        for l in 0..=self.coset.max_length() {
            found.extend(self.coset.level(l).filter(|&i| self.drop_at(i, s) == c));
            if !found.is_empty() {
                break;
            }
        }
        Ok(found)
    }

    /// The unique Bruhat-minimal element of drop `c` at `s`, as an index.
    pub fn tau_sc_index(&self, s: usize, c: i64) -> Result<usize> {
        self.check_drop(s, c)?;
        let coset = &self.coset;
        let minimal = coset.minimal_elements(|w| {
            let i = coset.index_of(w).expect("element of its own coset");
            self.drop_at(i, s) == c
        });
        match minimal.as_slice() {
            [only] => Ok(*only),
            _ => Err(Error::UniquenessViolated(format!(
                "{} minimal elements with drop {c} at s = {s}, r = {}",
                minimal.len(),
                self.r
            ))),
        }
    }

    pub fn tau_sc(&self, s: usize, c: i64) -> Result<WeylElement> {
        Ok(self.coset.elements()[self.tau_sc_index(s, c)?].clone())
    }

    /// `w_{s,r}`, derived through `τ_{s,q}` and through the minimal admitting set for `m ω_r`.
    pub fn minimal(&self, s: usize) -> Result<MinimalSchubert> {
        self.system().check_node("s", s)?;
        let m_s = self.omega[s - 1] * self.m;
        let m_s = m_s.to_integer();
        // least q with q m >= m_s
        let q = (m_s + self.m - 1) / self.m;
        let via_tau = self.tau_sc_index(s, q)?;

        let ctx = self.context(s)?;
        let admitting = ctx.minimal_admitting_indices();
        let via_search = match admitting.as_slice() {
            [only] => *only,
            _ => {
                return Err(Error::UniquenessViolated(format!(
                    "{} minimal admitting elements for r = {}, s = {s}",
                    admitting.len(),
                    self.r
                )))
            }
        };
        if via_tau != via_search {
            return Err(Error::Inconsistent(format!(
                "τ_(s,q) = [{}] differs from the minimal admitting element [{}]",
                self.coset.elements()[via_tau].word_string(),
                self.coset.elements()[via_search].word_string()
            )));
        }
        let w = self.coset.elements()[via_search].clone();
        let pairing = self.pairing_at(via_search, s);
        let ss_eq_s = !pairing.is_zero();
        if ctx.stable_equals_semistable(&w)? != ss_eq_s {
            return Err(Error::Inconsistent(format!(
                "stable=semistable on X(w_(s,r)) disagrees with the pairing test at r = {}, s = {s}",
                self.r
            )));
        }
        Ok(MinimalSchubert {
            r: self.r,
            s,
            w,
            pairing,
            ss_eq_s,
            m: self.m,
            q,
        })
    }
}

pub fn tau_sc(sys: &RootSystem, r: usize, s: usize, c: i64) -> Result<WeylElement> {
    MinusculeCoset::new(sys, r)?.tau_sc(s, c)
}

pub fn minimal_schubert_minuscule(sys: &RootSystem, r: usize, s: usize) -> Result<MinimalSchubert> {
    MinusculeCoset::new(sys, r)?.minimal(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::TypeLabel;
    use num_traits::One;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    fn a4() -> RootSystem {
        RootSystem::new(TypeLabel::A, 4).unwrap()
    }

    fn fixture() -> LinearizationContext {
        LinearizationContext::new(&a4(), &WeightVec::from_ints(&[0, 2, 2, 5], Basis::Weight), 2).unwrap()
    }

    fn el(sys: &RootSystem, w: &[usize]) -> WeylElement {
        WeylElement::from_word(sys, w).unwrap()
    }

    #[test]
    fn fixture_character_in_roots() {
        let ctx = fixture();
        assert_eq!(ctx.j_set(), &[1]);
        assert_eq!(
            ctx.chi_root(),
            &[q(3, 1), q(6, 1), q(7, 1), q(6, 1)]
        );
    }

    #[test]
    fn fixture_pairings() {
        let sys = a4();
        let ctx = fixture();
        let w2 = el(&sys, &[2, 3, 4]);
        let w1 = el(&sys, &[2, 1, 3, 2]);
        assert_eq!(ctx.admits_semistable(&w2).unwrap(), (true, q(-3, 1)));
        assert_eq!(ctx.admits_semistable(&w1).unwrap(), (true, Q::zero()));
        let (ok, a) = ctx.admits_semistable(&WeylElement::identity(4)).unwrap();
        assert!(!ok && a.is_positive());
        assert!(!ctx.admits_semistable_t(&w2).unwrap());
        assert_eq!(
            w2.apply(&sys, &sys.to_root_basis(ctx.chi())).coords(),
            &[q(3, 1), q(-3, 1), q(0, 1), q(1, 1)]
        );
    }

    #[test]
    fn fixture_antichain_and_stability() {
        let sys = a4();
        let ctx = fixture();
        let mins: std::collections::HashSet<WeylElement> = ctx.minimal_admitting().into_iter().collect();
        let expected = [el(&sys, &[2, 1, 3, 2]), el(&sys, &[2, 3, 4])].into_iter().collect();
        assert_eq!(mins, expected);
        assert!(ctx.stable_equals_semistable(&el(&sys, &[2, 3, 4])).unwrap());
        assert!(!ctx.ss_equals_s_whole_space().unwrap());
        assert!(ctx.stable_equals_semistable(&WeylElement::identity(4)).unwrap());
        assert!(matches!(
            ctx.admits_semistable(&el(&sys, &[1])),
            Err(Error::NotInCoset { .. })
        ));
    }

    #[test]
    fn longest_element_admits_under_torus() {
        let sys = a4();
        let ctx = fixture();
        assert!(ctx.admits_semistable_t(ctx.coset().longest()).unwrap());
        let regular = LinearizationContext::new(&sys, &WeightVec::from_ints(&[1, 1, 1, 1], Basis::Weight), 1).unwrap();
        assert!(!regular.admits_semistable_t(&WeylElement::identity(4)).unwrap());
        assert!(!regular.minimal_admitting().is_empty());
    }

    #[test]
    fn whole_space_examples() {
        let g25 = LinearizationContext::new(&a4(), &WeightVec::from_ints(&[0, 5, 0, 0], Basis::Weight), 1).unwrap();
        assert!(g25.ss_equals_s_whole_space().unwrap());
        let a3 = RootSystem::new(TypeLabel::A, 3).unwrap();
        let g24 = LinearizationContext::new(&a3, &WeightVec::from_ints(&[0, 4, 0], Basis::Weight), 2).unwrap();
        assert!(!g24.ss_equals_s_whole_space().unwrap());
        let a1 = RootSystem::new(TypeLabel::A, 1).unwrap();
        let p1 = LinearizationContext::new(&a1, &WeightVec::from_ints(&[2], Basis::Weight), 1).unwrap();
        assert!(p1.ss_equals_s_whole_space().unwrap());
        assert_eq!(p1.pairing_at(0), Q::one());
        assert_eq!(p1.pairing_at(1), -Q::one());
    }

    #[test]
    fn invalid_characters() {
        let sys = a4();
        for chi in [[0, 0, 0, 0], [1, -1, 0, 0]] {
            assert_eq!(
                LinearizationContext::new(&sys, &WeightVec::from_ints(&chi, Basis::Weight), 1).unwrap_err(),
                Error::InvalidCharacter
            );
        }
        assert!(matches!(
            LinearizationContext::new(&sys, &WeightVec::from_ints(&[1, 0], Basis::Weight), 1),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn tau_examples() {
        let sys = a4();
        assert!(tau_sc(&sys, 2, 2, 0).unwrap().is_identity());
        assert_eq!(tau_sc(&sys, 2, 2, 1).unwrap(), el(&sys, &[2]));
        assert!(matches!(tau_sc(&sys, 2, 2, 5), Err(Error::DropOutOfRange { .. })));
        let b3 = RootSystem::new(TypeLabel::B, 3).unwrap();
        let mc = MinusculeCoset::new(&b3, 3).unwrap();
        let idx = mc.tau_sc_index(3, 2).unwrap();
        assert_eq!(mc.drop_at(idx, 3), 2);
        assert_eq!(mc.length_minimal_drop_set(3, 2).unwrap(), vec![idx]);
    }

    #[test]
    fn minimal_examples() {
        let min = minimal_schubert_minuscule(&a4(), 2, 2).unwrap();
        assert_eq!(min.w, el(&a4(), &[2, 1, 3, 2]));
        assert_eq!(min.pairing, q(-4, 5));
        assert!(min.ss_eq_s);
        let a3 = RootSystem::new(TypeLabel::A, 3).unwrap();
        let min = minimal_schubert_minuscule(&a3, 2, 2).unwrap();
        assert_eq!(min.w, el(&a3, &[2]));
        assert_eq!(min.pairing, Q::zero());
        assert!(!min.ss_eq_s);
        for n in 2..=5 {
            let c = RootSystem::new(TypeLabel::C, n).unwrap();
            let min = minimal_schubert_minuscule(&c, 1, n).unwrap();
            let word: Vec<usize> = (1..=n).rev().collect();
            assert_eq!(min.w, el(&c, &word));
            assert_eq!(min.pairing, q(-1, 2));
            assert!(min.ss_eq_s);
        }
        let b3 = RootSystem::new(TypeLabel::B, 3).unwrap();
        assert!(matches!(
            minimal_schubert_minuscule(&b3, 1, 1),
            Err(Error::NotMinuscule { .. })
        ));
    }
}
