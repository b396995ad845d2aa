//! Deliberately naive oracles, used to cross-check the main code paths.
//!
//! Nothing here touches the precomputed meet/join/implication tables or the
//! closure-based enumerations: the lattice oracles read only the order
//! relation, and the monoid oracles read only the multiplication. Agreement
//! with the main path is therefore evidence rather than a tautology.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::monoid::CMonoid0;
use crate::order::Poset;
use crate::set::ElemSet;

/// Largest monoid for the all-supports scans (`2^(|M|-1)` supports).
pub const SUPPORT_ORACLE_CAP: usize = 17;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("structure of size {size} exceeds the oracle cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
}

fn glb_by_scan(p: &Poset, a: usize, b: usize) -> Option<usize> {
    let n = p.len();
    let lower: Vec<usize> = (0..n).filter(|&x| p.leq(x, a) && p.leq(x, b)).collect();
    lower.iter().copied().find(|&g| lower.iter().all(|&x| p.leq(x, g)))
}

fn lub_in(p: &Poset, within: ElemSet, a: usize, b: usize) -> Option<usize> {
    let upper: Vec<usize> = within.iter().filter(|&x| p.leq(a, x) && p.leq(b, x)).collect();
    upper.iter().copied().find(|&u| upper.iter().all(|&x| p.leq(u, x)))
}

fn bottom_by_scan(p: &Poset) -> Option<usize> {
    (0..p.len()).find(|&b| (0..p.len()).all(|x| p.leq(b, x)))
}

/// The unique `x` with `y ∧ l <= m  ⟺  y <= x` for every `y`, found by
/// trying every candidate. `None` if no such element exists.
pub fn implication_by_adjunction(p: &Poset, l: usize, m: usize) -> Option<usize> {
    let n = p.len();
    let below_m: Vec<bool> = (0..n)
        .map(|y| glb_by_scan(p, y, l).is_some_and(|g| p.leq(g, m)))
        .collect();
    let mut hits = (0..n).filter(|&x| (0..n).all(|y| below_m[y] == p.leq(y, x)));
    let x = hits.next()?;
    hits.next().is_none().then_some(x)
}

/// Largest `x` with `x ∧ h = 0`.
pub fn pseudocomplement_by_scan(p: &Poset, h: usize) -> Option<usize> {
    let bottom = bottom_by_scan(p)?;
    let disjoint: Vec<usize> = (0..p.len()).filter(|&x| glb_by_scan(p, x, h) == Some(bottom)).collect();
    disjoint
        .iter()
        .copied()
        .find(|&g| disjoint.iter().all(|&x| p.leq(x, g)))
}

/// Join of `a` and `b` computed as a least upper bound inside the
/// subposet `regular`.
pub fn subposet_join(p: &Poset, regular: ElemSet, a: usize, b: usize) -> Option<usize> {
    lub_in(p, regular, a, b)
}

/// Annihilator of every support, one at a time.
pub fn bousfield_by_all_supports(m: &CMonoid0) -> Result<BTreeSet<ElemSet>, OracleError> {
    if m.len() > SUPPORT_ORACLE_CAP {
        return Err(OracleError::CapExceeded {
            size: m.len(),
            cap: SUPPORT_ORACLE_CAP,
        });
    }
    let zero = m.zero();
    let nonzero: ElemSet = (0..m.len()).filter(|&x| x != zero).collect();
    let mut out = BTreeSet::new();
    for support in nonzero.subsets() {
        let ann: ElemSet = nonzero
            .iter()
            .filter(|&t| support.iter().all(|s| m.mul(t, s) == zero))
            .collect();
        out.insert(ann);
    }
    Ok(out)
}

/// Action-closed subsets of `M ∖ {0}`, by checking every subset.
pub fn ideals_by_scan(m: &CMonoid0) -> Result<BTreeSet<ElemSet>, OracleError> {
    if m.len() > SUPPORT_ORACLE_CAP {
        return Err(OracleError::CapExceeded {
            size: m.len(),
            cap: SUPPORT_ORACLE_CAP,
        });
    }
    let zero = m.zero();
    let nonzero: ElemSet = (0..m.len()).filter(|&x| x != zero).collect();
    Ok(nonzero
        .subsets()
        .filter(|s| {
            s.iter()
                .all(|t| (0..m.len()).all(|u| m.mul(u, t) == zero || s.contains(m.mul(u, t))))
        })
        .collect())
}

/// Nonzero `x` with `x^k = 0` for some `k`, found by following powers
/// until they repeat.
pub fn nilpotents_by_orbit(m: &CMonoid0) -> ElemSet {
    let mut out = ElemSet::EMPTY;
    for x in (0..m.len()).filter(|&x| x != m.zero()) {
        let mut seen = ElemSet::EMPTY;
        let mut p = x;
        while !seen.contains(p) {
            seen.insert(p);
            p = m.mul(p, x);
        }
        if seen.contains(m.zero()) {
            out.insert(x);
        }
    }
    out
}

/// Mismatches between main-path results and the oracles for one lattice,
/// as `(what, witness)` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub checks: usize,
    pub mismatches: Vec<(&'static str, Vec<usize>)>,
}

impl OracleReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn check(&mut self, what: &'static str, witness: &[usize], agree: bool) {
        self.checks += 1;
        if !agree {
            self.mismatches.push((what, witness.to_vec()));
        }
    }
}

/// Compares implication, negation and the Booleanization join of a
/// Heyting algebra against the order-only oracles above.
pub fn check_heyting(h: &crate::heyting::HeytingAlgebra) -> OracleReport {
    let mut r = OracleReport::default();
    let p = h.lattice().poset();
    let n = h.len();
    for l in 0..n {
        for m in 0..n {
            r.check(
                "implication",
                &[l, m],
                implication_by_adjunction(p, l, m) == Some(h.implies(l, m)),
            );
        }
        r.check("negation", &[l], pseudocomplement_by_scan(p, l) == Some(h.negation(l)));
    }
    let b = h.booleanize();
    let regular: ElemSet = b.carrier.iter().copied().collect();
    let bl = b.algebra.lattice();
    for (i, &a) in b.carrier.iter().enumerate() {
        for (j, &c) in b.carrier.iter().enumerate() {
            let main = b.carrier[bl.join(i, j)];
            r.check(
                "booleanization join",
                &[a, c],
                subposet_join(p, regular, a, c) == Some(main),
            );
        }
    }
    r
}

/// Compares Bousfield-class and ideal enumeration with the subset scans.
pub fn check_monoid(m: &CMonoid0) -> Result<OracleReport, OracleError> {
    let mut r = OracleReport::default();
    let bl = crate::bousfield::BousfieldLattice::enumerate(m);
    let main: BTreeSet<ElemSet> = bl.member_sets().iter().copied().collect();
    r.check("bousfield classes", &[bl.len()], main == bousfield_by_all_supports(m)?);
    if m.nonzero().len() <= crate::ideal::SUBSET_SCAN_LIMIT {
        let ideals: BTreeSet<ElemSet> = crate::ideal::enumerate_localizing_ideals(m)
            .expect("within scan limit")
            .into_iter()
            .map(|i| i.members)
            .collect();
        r.check("localizing ideals", &[ideals.len()], ideals == ideals_by_scan(m)?);
    }
    r.check("nilpotents", &[], m.nilpotents() == nilpotents_by_orbit(m));
    Ok(r)
}
