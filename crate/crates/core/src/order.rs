//! Finite posets and bounded lattices.
//!
//! Orders are stored as full boolean tables indexed by element position, and
//! lattice operations as full binary tables. Element order is the order the
//! caller supplied; every table and report follows it.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::set::{ElemSet, MAX_CARRIER};

/// Default cap on carrier size for [`Poset::isomorphism`].
pub const DEFAULT_ISO_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderError {
    #[error("element `{0}` declared twice")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("antisymmetry violated: `{0}` <= `{1}` <= `{0}`")]
    AntisymmetryViolation(String, String),
    #[error("order is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("order is not transitive: `{0}` <= `{1}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("carrier of {0} elements exceeds the supported maximum of 64")]
    CarrierTooLarge(usize),
    #[error("not a lattice: `{a}` and `{b}` have no {missing}")]
    NotALattice {
        a: String,
        b: String,
        missing: &'static str,
    },
    #[error("table entry for (`{a}`, `{b}`) is not the {expected}")]
    TableMismatch {
        a: String,
        b: String,
        expected: &'static str,
    },
    #[error("isomorphism search on {size} elements exceeds the limit of {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
}

/// A finite partially ordered set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    leq: Vec<bool>,
}

fn check_names(names: &[String]) -> Result<(), OrderError> {
    if names.len() > MAX_CARRIER {
        return Err(OrderError::CarrierTooLarge(names.len()));
    }
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(OrderError::DuplicateElement(n.clone()));
        }
    }
    Ok(())
}

impl Poset {
    /// Builds the reflexive-transitive closure of `relations` over `elements`.
    pub fn build<S: AsRef<str>>(elements: &[S], relations: &[(S, S)]) -> Result<Poset, OrderError> {
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        check_names(&names)?;
        let n = names.len();
        let index = |s: &str| {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| OrderError::UnknownElement(s.to_owned()))
        };
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in relations {
            let (a, b) = (index(a.as_ref())?, index(b.as_ref())?);
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(OrderError::AntisymmetryViolation(names[i].clone(), names[j].clone()));
                }
            }
        }
        Ok(Poset { names, leq })
    }

    /// Builds a poset from an explicit order predicate, validating every axiom.
    pub fn from_fn<F>(names: Vec<String>, mut le: F) -> Result<Poset, OrderError>
    where
        F: FnMut(usize, usize) -> bool,
    {
        check_names(&names)?;
        let n = names.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = le(i, j);
            }
        }
        let p = Poset { names, leq };
        p.validate()?;
        Ok(p)
    }

    /// Full scan of reflexivity, antisymmetry and transitivity.
    pub fn validate(&self) -> Result<(), OrderError> {
        let n = self.len();
        let name = |i: usize| self.names[i].clone();
        for i in 0..n {
            if !self.leq(i, i) {
                return Err(OrderError::NotReflexive(name(i)));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq(i, j) && self.leq(j, i) {
                    return Err(OrderError::AntisymmetryViolation(name(i), name(j)));
                }
                if !self.leq(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.leq(j, k) && !self.leq(i, k) {
                        return Err(OrderError::NotTransitive(name(i), name(j), name(k)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, OrderError> {
        self.names
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| OrderError::UnknownElement(name.to_owned()))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Elements `<= a`.
    pub fn down_set(&self, a: usize) -> ElemSet {
        (0..self.len()).filter(|&x| self.leq(x, a)).collect()
    }

    /// Elements `>= a`.
    pub fn up_set(&self, a: usize) -> ElemSet {
        (0..self.len()).filter(|&x| self.leq(a, x)).collect()
    }

    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) && !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Restriction of the order to `keep`, in carrier order.
    pub fn subposet(&self, keep: ElemSet) -> Poset {
        let idx: Vec<usize> = keep.iter().filter(|&i| i < self.len()).collect();
        let names = idx.iter().map(|&i| self.names[i].clone()).collect();
        let m = idx.len();
        let mut leq = vec![false; m * m];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                leq[a * m + b] = self.leq(i, j);
            }
        }
        Poset { names, leq }
    }

    /// Finds an order isomorphism `self -> other` (a bijection `f` with
    /// `a <= b` iff `f(a) <= f(b)`), returned as `f[a]`.
    pub fn isomorphism(&self, other: &Poset, limit: usize) -> Result<Option<Vec<usize>>, OrderError> {
        let n = self.len();
        if n > limit || other.len() > limit {
            return Err(OrderError::SizeLimitExceeded {
                size: n.max(other.len()),
                limit,
            });
        }
        if n != other.len() {
            return Ok(None);
        }
        let sig_a = self.signatures();
        let sig_b = other.signatures();
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Ok(None);
        }
        // Assign in increasing down-set size so lower elements are placed first.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (sig_a[i], i));
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let found = self.extend_iso(other, &order, 0, &sig_a, &sig_b, &mut map, &mut used);
        Ok(found.then_some(map))
    }

    fn signatures(&self) -> Vec<(usize, usize, usize, usize)> {
        let covers = self.covers();
        (0..self.len())
            .map(|i| {
                (
                    self.down_set(i).len(),
                    self.up_set(i).len(),
                    covers.iter().filter(|c| c.1 == i).count(),
                    covers.iter().filter(|c| c.0 == i).count(),
                )
            })
            .collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_iso(
        &self,
        other: &Poset,
        order: &[usize],
        depth: usize,
        sig_a: &[(usize, usize, usize, usize)],
        sig_b: &[(usize, usize, usize, usize)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = order.get(depth) else {
            return true;
        };
        for y in 0..other.len() {
            if used[y] || sig_a[x] != sig_b[y] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&a| {
                let fa = map[a];
                self.leq(a, x) == other.leq(fa, y) && self.leq(x, a) == other.leq(y, fa)
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if self.extend_iso(other, order, depth + 1, sig_a, sig_b, map, used) {
                return true;
            }
            used[y] = false;
        }
        map[x] = usize::MAX;
        false
    }
}

/// A finite bounded lattice with precomputed meet and join tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
    distributive: bool,
}

impl Lattice {
    /// Computes meets and joins by scanning bounds; fails on the first pair
    /// without a greatest lower or least upper bound.
    pub fn from_poset(poset: Poset) -> Result<Lattice, OrderError> {
        let n = poset.len();
        if n == 0 {
            return Err(OrderError::EmptyCarrier);
        }
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let lower = poset.down_set(a).intersection(poset.down_set(b));
                let glb = lower.iter().find(|&x| lower.is_subset(poset.down_set(x)));
                let upper = poset.up_set(a).intersection(poset.up_set(b));
                let lub = upper.iter().find(|&x| upper.is_subset(poset.up_set(x)));
                let fail = |missing| OrderError::NotALattice {
                    a: poset.name(a).to_owned(),
                    b: poset.name(b).to_owned(),
                    missing,
                };
                let glb = glb.ok_or_else(|| fail("meet"))?;
                let lub = lub.ok_or_else(|| fail("join"))?;
                meet[a * n + b] = glb;
                meet[b * n + a] = glb;
                join[a * n + b] = lub;
                join[b * n + a] = lub;
            }
        }
        Ok(Self::assemble(poset, meet, join))
    }

    /// Wraps explicit meet and join tables after checking that every entry is
    /// the greatest lower (resp. least upper) bound in `poset`.
    pub fn from_tables(poset: Poset, meet: Vec<usize>, join: Vec<usize>) -> Result<Lattice, OrderError> {
        let n = poset.len();
        if n == 0 {
            return Err(OrderError::EmptyCarrier);
        }
        assert_eq!(meet.len(), n * n, "meet table has wrong shape");
        assert_eq!(join.len(), n * n, "join table has wrong shape");
        for a in 0..n {
            for b in 0..n {
                let lower = poset.down_set(a).intersection(poset.down_set(b));
                let upper = poset.up_set(a).intersection(poset.up_set(b));
                let m = meet[a * n + b];
                let j = join[a * n + b];
                let mismatch = |expected| OrderError::TableMismatch {
                    a: poset.name(a).to_owned(),
                    b: poset.name(b).to_owned(),
                    expected,
                };
                if m >= n || !lower.contains(m) || !lower.is_subset(poset.down_set(m)) {
                    return Err(mismatch("greatest lower bound"));
                }
                if j >= n || !upper.contains(j) || !upper.is_subset(poset.up_set(j)) {
                    return Err(mismatch("least upper bound"));
                }
            }
        }
        Ok(Self::assemble(poset, meet, join))
    }

    fn assemble(poset: Poset, meet: Vec<usize>, join: Vec<usize>) -> Lattice {
        let n = poset.len();
        let bottom = (1..n).fold(0, |acc, x| meet[acc * n + x]);
        let top = (1..n).fold(0, |acc, x| join[acc * n + x]);
        let mut l = Lattice {
            poset,
            meet,
            join,
            bottom,
            top,
            distributive: false,
        };
        l.distributive = l.distributivity_witness().is_none();
        l
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        self.poset.name(i)
    }

    pub fn names(&self) -> &[String] {
        self.poset.names()
    }

    pub fn index_of(&self, name: &str) -> Result<usize, OrderError> {
        self.poset.index_of(name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn is_distributive(&self) -> bool {
        self.distributive
    }

    /// First triple `(a, b, c)` with `a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)`.
    ///
    /// On a finite lattice this also decides the frame law, since every join
    /// is a finite join.
    pub fn distributivity_witness(&self) -> Option<[usize; 3]> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    /// Meet of a subset; the empty meet is `top`.
    pub fn meet_all(&self, s: ElemSet) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a subset; the empty join is `bottom`.
    pub fn join_all(&self, s: ElemSet) -> usize {
        s.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `(meet, join)` of the named elements.
    pub fn big_meet_join<S: AsRef<str>>(&self, subset: &[S]) -> Result<(usize, usize), OrderError> {
        let mut s = ElemSet::EMPTY;
        for name in subset {
            s.insert(self.index_of(name.as_ref())?);
        }
        Ok((self.meet_all(s), self.join_all(s)))
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.poset.covers()
    }

    pub fn isomorphism(&self, other: &Lattice, limit: usize) -> Result<Option<Vec<usize>>, OrderError> {
        self.poset.isomorphism(&other.poset, limit)
    }

    /// [`Lattice::isomorphism`] with the default size limit.
    pub fn is_isomorphic(&self, other: &Lattice) -> Result<bool, OrderError> {
        Ok(self.isomorphism(other, DEFAULT_ISO_LIMIT)?.is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    fn lat(elements: &[&str], rel: &[(&str, &str)]) -> Lattice {
        Lattice::from_poset(Poset::build(elements, rel).unwrap()).unwrap()
    }

    fn m3() -> Lattice {
        lat(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )
    }

    fn n5() -> Lattice {
        lat(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
        )
    }

    #[test]
    fn singleton_poset() {
        let p = Poset::build(&["a"], &[]).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.leq(0, 0));
        assert!(p.covers().is_empty());
    }

    #[test]
    fn chain_closure_is_transitive() {
        let p = Poset::build(&["0", "a", "1"], &[("0", "a"), ("a", "1")]).unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
        assert_eq!(p.covers(), [(0, 1), (1, 2)]);
    }

    #[test]
    fn two_cycle_rejected() {
        let err = Poset::build(&["x", "y"], &[("x", "y"), ("y", "x")]).unwrap_err();
        assert_eq!(err, OrderError::AntisymmetryViolation("x".into(), "y".into()));
    }

    #[test]
    fn duplicate_and_unknown() {
        assert_eq!(
            Poset::build(&["a", "a"], &[]).unwrap_err(),
            OrderError::DuplicateElement("a".into())
        );
        assert_eq!(
            Poset::build(&["a"], &[("a", "z")]).unwrap_err(),
            OrderError::UnknownElement("z".into())
        );
    }

    #[test]
    fn chain_lattice_is_min_max() {
        let l = builtin::chain(3);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(l.meet(a, b), a.min(b));
                assert_eq!(l.join(a, b), a.max(b));
            }
        }
        assert_eq!((l.bottom(), l.top()), (0, 2));
    }

    #[test]
    fn powerset_from_inclusion() {
        let l = lat(
            &["{}", "{1}", "{2}", "{1,2}"],
            &[("{}", "{1}"), ("{}", "{2}"), ("{1}", "{1,2}"), ("{2}", "{1,2}")],
        );
        assert!(l.is_distributive());
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.covers().len(), 4);
    }

    #[test]
    fn antichain_is_not_a_lattice() {
        let p = Poset::build(&["x", "y"], &[]).unwrap();
        match Lattice::from_poset(p).unwrap_err() {
            OrderError::NotALattice { a, b, .. } => assert_eq!((a.as_str(), b.as_str()), ("x", "y")),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn m3_witness() {
        let l = m3();
        assert!(!l.is_distributive());
        assert_eq!(l.distributivity_witness(), Some([1, 2, 3]));
        assert_eq!(l.meet(1, l.join(2, 3)), 1);
        assert_eq!(l.join(l.meet(1, 2), l.meet(1, 3)), 0);
    }

    #[test]
    fn n5_not_distributive() {
        assert!(!n5().is_distributive());
    }

    #[test]
    fn big_meet_join_conventions() {
        let l = builtin::chain(3);
        let empty: [&str; 0] = [];
        assert_eq!(l.big_meet_join(&empty).unwrap(), (l.top(), l.bottom()));
        assert_eq!(l.big_meet_join(&["a"]).unwrap(), (1, 1));
        let p = builtin::powerset(2);
        let (m, j) = p.big_meet_join(&["{1}", "{2}"]).unwrap();
        assert_eq!((p.name(m), p.name(j)), ("{}", "{1,2}"));
        assert_eq!(
            l.big_meet_join(&["q"]).unwrap_err(),
            OrderError::UnknownElement("q".into())
        );
    }

    #[test]
    fn isomorphism_examples() {
        let c3 = builtin::chain(3);
        let renamed = lat(&["p", "q", "r"], &[("p", "q"), ("q", "r")]);
        assert_eq!(c3.isomorphism(&renamed, 20).unwrap(), Some(vec![0, 1, 2]));
        assert!(!builtin::chain(4).is_isomorphic(&builtin::powerset(2)).unwrap());
        assert!(builtin::powerset(3)
            .is_isomorphic(&builtin::divisors(30).unwrap())
            .unwrap());
        assert!(!m3().is_isomorphic(&n5()).unwrap());
    }

    #[test]
    fn isomorphism_size_limit() {
        let big = builtin::chain(21);
        assert!(matches!(
            big.isomorphism(&big, DEFAULT_ISO_LIMIT),
            Err(OrderError::SizeLimitExceeded { size: 21, limit: 20 })
        ));
    }

    #[test]
    fn from_tables_rejects_wrong_join() {
        let l = builtin::chain(3);
        let mut join = l.join.clone();
        join[1] = 2;
        assert!(matches!(
            Lattice::from_tables(l.poset.clone(), l.meet.clone(), join),
            Err(OrderError::TableMismatch { .. })
        ));
    }
}
