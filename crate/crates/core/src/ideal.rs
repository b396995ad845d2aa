//! Localizing ⊗-ideals of `T_M` at support level.
//!
//! Under the support model a localizing ⊗-ideal is a set of nonzero
//! generators closed under the monoid action (`M·I ⊆ I ∪ {0}`). The empty
//! set is the zero ideal `⟨0⟩`; "proper" excludes only the full set.
//!
//! Radicality and primality are the generator-level shadows of the
//! categorical notions: a power `t^n = 0` counts as lying in every ideal,
//! since the zero object lies in every localizing subcategory, and an
//! ideal is prime when `a·b ∈ I ∪ {0}` forces `a ∈ I` or `b ∈ I`.

use alloc::vec::Vec;

use crate::bousfield::BousfieldLattice;
use crate::monoid::CMonoid0;
use crate::set::ElemSet;

/// Subset scans are exponential; monoids with more nonzero elements than
/// this are refused.
pub const SUBSET_SCAN_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("{nonzero} nonzero elements exceed the subset-scan limit of {limit}")]
    TooLarge { nonzero: usize, limit: usize },
}

/// A localizing ⊗-ideal, given by the generators it contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdealSet {
    pub members: ElemSet,
}

fn check_scan(m: &CMonoid0) -> Result<(), IdealError> {
    let nonzero = m.nonzero().len();
    if nonzero > SUBSET_SCAN_LIMIT {
        Err(IdealError::TooLarge {
            nonzero,
            limit: SUBSET_SCAN_LIMIT,
        })
    } else {
        Ok(())
    }
}

pub fn is_ideal(m: &CMonoid0, s: ElemSet) -> bool {
    s.is_subset(m.nonzero())
        && s.iter().all(|t| {
            (0..m.len()).all(|u| {
                let p = m.mul(u, t);
                p == m.zero() || s.contains(p)
            })
        })
}

/// Smallest ideal containing `s`.
pub fn ideal_closure(m: &CMonoid0, s: ElemSet) -> ElemSet {
    m.product_set(ElemSet::full(m.len()), s)
}

/// Every ideal, ordered by size and then by bitmask (a linear extension of
/// inclusion).
pub fn enumerate_localizing_ideals(m: &CMonoid0) -> Result<Vec<IdealSet>, IdealError> {
    check_scan(m)?;
    let mut out: Vec<IdealSet> = m
        .nonzero()
        .subsets()
        .filter(|&s| is_ideal(m, s))
        .map(|members| IdealSet { members })
        .collect();
    out.sort_by_key(|i| (i.members.len(), i.members));
    Ok(out)
}

fn some_power_in(m: &CMonoid0, t: usize, s: ElemSet) -> bool {
    let mut p = t;
    for _ in 0..m.len() {
        if p == m.zero() || s.contains(p) {
            return true;
        }
        p = m.mul(p, t);
    }
    false
}

/// Contains every nonzero `t` some power of which lies in `I ∪ {0}`.
pub fn is_radical(m: &CMonoid0, i: IdealSet) -> bool {
    m.nonzero()
        .difference(i.members)
        .iter()
        .all(|t| !some_power_in(m, t, i.members))
}

/// Smallest radical ideal containing `i`.
pub fn radical_closure(m: &CMonoid0, i: IdealSet) -> IdealSet {
    let mut s = ideal_closure(m, i.members);
    loop {
        let roots: ElemSet = m.nonzero().iter().filter(|&t| some_power_in(m, t, s)).collect();
        let next = ideal_closure(m, s.union(roots));
        if next == s {
            return IdealSet { members: s };
        }
        s = next;
    }
}

/// `√T`: the radical closure of the zero ideal, i.e. the nilpotents.
pub fn nilradical(m: &CMonoid0) -> IdealSet {
    radical_closure(
        m,
        IdealSet {
            members: ElemSet::EMPTY,
        },
    )
}

pub fn is_prime(m: &CMonoid0, i: IdealSet) -> bool {
    let nz = m.nonzero();
    if i.members == nz {
        return false;
    }
    nz.iter().all(|a| {
        nz.iter().all(|b| {
            let p = m.mul(a, b);
            let inside = p == m.zero() || i.members.contains(p);
            !inside || i.members.contains(a) || i.members.contains(b)
        })
    })
}

/// Prime ideals, in the order of [`enumerate_localizing_ideals`].
pub fn spectrum(m: &CMonoid0) -> Result<Vec<IdealSet>, IdealError> {
    Ok(enumerate_localizing_ideals(m)?
        .into_iter()
        .filter(|&i| is_prime(m, i))
        .collect())
}

/// The Bousfield class with exactly these members, if there is one.
pub fn match_bousfield(i: IdealSet, bl: &BousfieldLattice) -> Option<usize> {
    bl.index_of_members(i.members)
}

/// Image of an ideal under the quotient projection, with zero dropped.
pub fn project(proj: &[usize], quotient: &CMonoid0, i: IdealSet) -> IdealSet {
    IdealSet {
        members: i
            .members
            .iter()
            .map(|x| proj[x])
            .collect::<ElemSet>()
            .without(quotient.zero()),
    }
}

/// How a family of ideals of `M` corresponds to one of `M/√`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correspondence {
    /// `(ideal of M, its projection)`.
    pub pairs: Vec<(IdealSet, IdealSet)>,
    /// Projection is a bijection onto the target family.
    pub bijective: bool,
    /// `I ⊆ J` iff `proj(I) ⊆ proj(J)`.
    pub preserves_inclusion: bool,
}

fn correspond(proj: &[usize], q: &CMonoid0, source: &[IdealSet], target: &[IdealSet]) -> Correspondence {
    let pairs: Vec<(IdealSet, IdealSet)> = source.iter().map(|&i| (i, project(proj, q, i))).collect();
    let images_in_target = pairs.iter().all(|(_, j)| target.contains(j));
    let distinct = (0..pairs.len()).all(|a| (0..a).all(|b| pairs[a].1 != pairs[b].1));
    let preserves_inclusion = pairs.iter().all(|(i, pi)| {
        pairs
            .iter()
            .all(|(j, pj)| i.members.is_subset(j.members) == pi.members.is_subset(pj.members))
    });
    Correspondence {
        bijective: images_in_target && distinct && pairs.len() == target.len(),
        preserves_inclusion,
        pairs,
    }
}

/// Radical ideals of `M` against radical ideals of `M/√`.
pub fn radical_correspondence(m: &CMonoid0) -> Result<Correspondence, IdealError> {
    let (q, proj) = m.quotient_by_nil();
    let radicals = |m: &CMonoid0| -> Result<Vec<IdealSet>, IdealError> {
        Ok(enumerate_localizing_ideals(m)?
            .into_iter()
            .filter(|&i| is_radical(m, i))
            .collect())
    };
    Ok(correspond(&proj, &q, &radicals(m)?, &radicals(&q)?))
}

/// Spectrum of `M` against the spectrum of `M/√`.
pub fn spectrum_correspondence(m: &CMonoid0) -> Result<Correspondence, IdealError> {
    let (q, proj) = m.quotient_by_nil();
    Ok(correspond(&proj, &q, &spectrum(m)?, &spectrum(&q)?))
}

/// An idempotent generator `k_e` (`e·e = e`, `e != 0, 1`), the ideal it
/// generates, and what is orthogonal to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentGenerator {
    pub element: usize,
    pub ideal: IdealSet,
    /// Nonzero `t` with `t·e = 0`.
    pub orthogonal: ElemSet,
    /// A nonzero ⊗-idempotent support orthogonal to `k_e`, if any. Such an
    /// object is what a localization functor given by tensoring would need.
    pub complement: Option<ElemSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentReport {
    /// Nonempty supports with `S ⊗ S = S`.
    pub idempotent_supports: Vec<ElemSet>,
    pub generators: Vec<IdempotentGenerator>,
}

impl IdempotentReport {
    /// Some idempotent generates a nonzero proper smashing ideal whose
    /// acyclization is `k_e ⊗ -`, but no nonzero idempotent is orthogonal
    /// to it.
    pub fn acyclization_without_complement(&self) -> bool {
        self.generators.iter().any(|g| g.complement.is_none())
    }
}

pub fn idempotent_analysis(m: &CMonoid0) -> Result<IdempotentReport, IdealError> {
    check_scan(m)?;
    let idempotent_supports: Vec<ElemSet> = m
        .nonzero()
        .subsets()
        .filter(|&s| !s.is_empty() && m.product_set(s, s) == s)
        .collect();
    let generators = m
        .idempotents()
        .iter()
        .filter(|&e| e != m.zero() && e != m.unit())
        .map(|e| {
            let orthogonal = m.orthogonal_set(ElemSet::singleton(e)).expect("known element");
            IdempotentGenerator {
                element: e,
                ideal: IdealSet {
                    members: ideal_closure(m, ElemSet::singleton(e)),
                },
                orthogonal,
                complement: idempotent_supports.iter().copied().find(|s| s.is_subset(orthogonal)),
            }
        })
        .collect();
    Ok(IdempotentReport {
        idempotent_supports,
        generators,
    })
}
