//! Bousfield classes and the Bousfield lattice `A(T_M)`.
//!
//! A class `A(X)` is stored as its member set: the generators `k_t` with
//! `k_t ⊗ X = 0`, i.e. the annihilator of the support of `X`. Classes are
//! ordered by reverse inclusion of member sets, so `A(0)` (every generator)
//! is the bottom and `A(k_1)` (no generator) is the top.
//!
//! For the meet-monoid of a finite distributive lattice `L`, the map
//! `φ(l) = A(k_l)` is a surjective frame morphism preserving implication,
//! and it induces an isomorphism `L¬¬ ≅ A(T_L)`; [`verify_main_theorem`]
//! checks every piece of that on a given lattice.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::heyting::{check_heyting_morphism, Booleanization, HeytingAlgebra, HeytingError};
use crate::monoid::CMonoid0;
use crate::order::{Lattice, Poset};
use crate::set::ElemSet;
use crate::support::SupportObject;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BousfieldError {
    #[error("Bousfield lattice is not distributive, so it carries no implication")]
    NotAFrame,
}

/// `A(X)`, identified with its member set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BousfieldClass {
    pub members: ElemSet,
}

impl BousfieldClass {
    pub fn of(x: &SupportObject<'_>) -> BousfieldClass {
        BousfieldClass {
            members: x.annihilator(),
        }
    }
}

/// For an object over the meet-monoid of `l`, the lattice element
/// `∨ support(x)`, whose generator has the same Bousfield class as `x`.
pub fn lattice_representative(l: &Lattice, x: &SupportObject<'_>) -> usize {
    l.join_all(x.support())
}

/// Order tables of a Bousfield lattice, indexed by class position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderTables {
    pub leq: Vec<bool>,
    pub join: Vec<usize>,
    pub meet: Vec<usize>,
    pub tensor: Vec<usize>,
}

/// All Bousfield classes of `T_M`, ordered by reverse inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BousfieldLattice {
    monoid: CMonoid0,
    /// Member sets, largest first; index 0 is `A(0)`.
    classes: Vec<ElemSet>,
}

impl BousfieldLattice {
    /// Closes the singleton annihilators under intersection and adds the
    /// full set `A(0)`. Since `ann(S ∪ S') = ann(S) ∩ ann(S')`, this is
    /// every annihilator of a support.
    pub fn enumerate(monoid: &CMonoid0) -> BousfieldLattice {
        let mut classes: Vec<ElemSet> = vec![monoid.nonzero()];
        for t in monoid.nonzero() {
            let a = SupportObject::generator(monoid, t).annihilator();
            if !classes.contains(&a) {
                classes.push(a);
            }
        }
        let mut i = 0;
        while i < classes.len() {
            for j in 0..i {
                let c = classes[i].intersection(classes[j]);
                if !classes.contains(&c) {
                    classes.push(c);
                }
            }
            i += 1;
        }
        classes.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        BousfieldLattice {
            monoid: monoid.clone(),
            classes,
        }
    }

    pub fn monoid(&self) -> &CMonoid0 {
        &self.monoid
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn members(&self, i: usize) -> ElemSet {
        self.classes[i]
    }

    pub fn class(&self, i: usize) -> BousfieldClass {
        BousfieldClass {
            members: self.classes[i],
        }
    }

    pub fn member_sets(&self) -> &[ElemSet] {
        &self.classes
    }

    pub fn index_of_members(&self, members: ElemSet) -> Option<usize> {
        self.classes.iter().position(|&c| c == members)
    }

    pub fn index_of(&self, x: &SupportObject<'_>) -> usize {
        self.index_of_members(x.annihilator())
            .expect("every annihilator is enumerated")
    }

    /// `A(0) = T`.
    pub fn bottom(&self) -> usize {
        0
    }

    /// `A(k_1) = ⟨0⟩`.
    pub fn top(&self) -> usize {
        self.len() - 1
    }

    /// Display name: `T` for `A(0)`, `⟨0⟩` for no members, otherwise the
    /// list of member generators.
    pub fn class_name(&self, i: usize) -> String {
        let c = self.classes[i];
        if c == self.monoid.nonzero() {
            return String::from("T");
        }
        if c.is_empty() {
            return String::from("⟨0⟩");
        }
        let parts: Vec<String> = c.iter().map(|t| format!("k_{}", self.monoid.name(t))).collect();
        format!("⟨{}⟩", parts.join(","))
    }

    /// Reverse inclusion: `A(X) <= A(Y)` iff `A(Y) ⊆ A(X)`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.classes[j].is_subset(self.classes[i])
    }

    /// `A(X) ∨ A(Y) = A(X ∐ Y)`: intersect member sets.
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.index_of_members(self.classes[i].intersection(self.classes[j]))
            .expect("closed under intersection")
    }

    /// Smallest member set containing both; exists because the family is
    /// closed under intersection and contains the full set.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let want = self.classes[i].union(self.classes[j]);
        let smallest = self
            .classes
            .iter()
            .filter(|c| want.is_subset(**c))
            .fold(self.monoid.nonzero(), |acc, &c| acc.intersection(c));
        self.index_of_members(smallest).expect("closed under intersection")
    }

    /// Largest support with this class; its annihilator is `members(i)`.
    pub fn representative(&self, i: usize) -> ElemSet {
        SupportObject::new(&self.monoid, self.classes[i])
            .expect("members are nonzero")
            .annihilator()
    }

    /// `A(X) ⊗ A(Y) = A(X ⊗ Y)`, computed on representatives. Well defined:
    /// `t ∈ ann(X ⊗ Y)` iff `t·y ∈ ann(X) ∪ {0}` for every `y` in `Y`.
    pub fn tensor(&self, i: usize, j: usize) -> usize {
        let m = &self.monoid;
        let x = SupportObject::new(m, self.representative(i)).expect("valid support");
        let y = SupportObject::new(m, self.representative(j)).expect("valid support");
        self.index_of(&x.tensor(&y).expect("same monoid"))
    }

    pub fn order_tables(&self) -> OrderTables {
        let n = self.len();
        let mut t = OrderTables {
            leq: vec![false; n * n],
            join: vec![0; n * n],
            meet: vec![0; n * n],
            tensor: vec![0; n * n],
        };
        for i in 0..n {
            for j in 0..n {
                t.leq[i * n + j] = self.leq(i, j);
                t.join[i * n + j] = self.join(i, j);
                t.meet[i * n + j] = self.meet(i, j);
                t.tensor[i * n + j] = self.tensor(i, j);
            }
        }
        t
    }

    /// `¬c`: the class of the object whose support is `members(c)`.
    pub fn negation(&self, i: usize) -> usize {
        let x = SupportObject::new(&self.monoid, self.classes[i]).expect("valid support");
        self.index_of(&x)
    }

    /// Every class satisfies `¬¬c = c`.
    pub fn all_regular(&self) -> bool {
        (0..self.len()).all(|i| self.negation(self.negation(i)) == i)
    }

    /// The classes as a [`Lattice`] named by [`Self::class_name`].
    pub fn to_lattice(&self) -> Lattice {
        let n = self.len();
        let names = (0..n).map(|i| self.class_name(i)).collect();
        let poset = Poset::from_fn(names, |i, j| self.leq(i, j)).expect("reverse inclusion is an order");
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                meet[i * n + j] = self.meet(i, j);
                join[i * n + j] = self.join(i, j);
            }
        }
        Lattice::from_tables(poset, meet, join).expect("Bousfield classes form a lattice")
    }

    pub fn heyting(&self) -> Result<HeytingAlgebra, BousfieldError> {
        HeytingAlgebra::new(self.to_lattice()).map_err(|_| BousfieldError::NotAFrame)
    }

    /// Join of every class `c` with `c ∧ c1 <= c2`. Only defined when the
    /// lattice is distributive.
    pub fn implication(&self, c1: usize, c2: usize) -> Result<usize, BousfieldError> {
        if !self.to_lattice().is_distributive() {
            return Err(BousfieldError::NotAFrame);
        }
        Ok((0..self.len())
            .filter(|&c| self.leq(self.meet(c, c1), c2))
            .fold(self.bottom(), |acc, c| self.join(acc, c)))
    }
}

/// Falsifiable properties of `φ : L -> A(T_L)`, `φ(l) = A(k_l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiReport {
    pub bousfield: BousfieldLattice,
    /// `map[l]` is the class index of `A(k_l)`.
    pub map: Vec<usize>,
    pub monotone: bool,
    pub preserves_bounds: bool,
    pub preserves_meets: bool,
    pub preserves_joins: bool,
    /// Joins of every subset were compared (done for carriers up to 16).
    pub arbitrary_joins_checked: bool,
    pub preserves_implication: bool,
    pub commutes_with_negation: bool,
    /// On classes, meet and tensor agree.
    pub meet_is_tensor: bool,
    pub surjective: bool,
    pub injective: bool,
}

impl PhiReport {
    /// φ is a surjective morphism of complete Heyting algebras.
    pub fn holds(&self) -> bool {
        self.monotone
            && self.preserves_bounds
            && self.preserves_meets
            && self.preserves_joins
            && self.preserves_implication
            && self.commutes_with_negation
            && self.meet_is_tensor
            && self.surjective
    }
}

/// Largest carrier for which [`phi_map`] checks joins of all subsets.
pub const ARBITRARY_JOIN_LIMIT: usize = 16;

pub fn phi_map(l: &Lattice) -> Result<PhiReport, HeytingError> {
    let h = HeytingAlgebra::new(l.clone())?;
    let monoid = CMonoid0::from_lattice_meet(l);
    let bl = BousfieldLattice::enumerate(&monoid);
    let n = l.len();
    let map: Vec<usize> = (0..n)
        .map(|x| bl.index_of(&SupportObject::generator(&monoid, x)))
        .collect();
    let pairs = || (0..n).flat_map(|a| (0..n).map(move |b| (a, b)));

    let monotone = pairs().all(|(a, b)| !l.leq(a, b) || bl.leq(map[a], map[b]));
    let preserves_bounds = map[l.bottom()] == bl.bottom() && map[l.top()] == bl.top();
    let preserves_meets = pairs().all(|(a, b)| map[l.meet(a, b)] == bl.meet(map[a], map[b]));
    let mut preserves_joins = pairs().all(|(a, b)| map[l.join(a, b)] == bl.join(map[a], map[b]));
    let arbitrary_joins_checked = n <= ARBITRARY_JOIN_LIMIT;
    if arbitrary_joins_checked && preserves_joins {
        preserves_joins = ElemSet::full(n).subsets().all(|s| {
            let image = s.iter().fold(bl.bottom(), |acc, x| bl.join(acc, map[x]));
            map[l.join_all(s)] == image
        });
    }
    let preserves_implication = match bl.heyting() {
        Ok(bh) => pairs().all(|(a, b)| map[h.implies(a, b)] == bh.implies(map[a], map[b])),
        Err(_) => false,
    };
    let commutes_with_negation = (0..n).all(|x| map[h.negation(x)] == bl.negation(map[x]));
    let meet_is_tensor = (0..bl.len()).all(|i| (0..bl.len()).all(|j| bl.meet(i, j) == bl.tensor(i, j)));
    let mut hit = vec![false; bl.len()];
    for &c in &map {
        hit[c] = true;
    }
    let surjective = hit.iter().all(|&x| x);
    let injective = bl.len() == n && surjective;

    Ok(PhiReport {
        bousfield: bl,
        map,
        monotone,
        preserves_bounds,
        preserves_meets,
        preserves_joins,
        arbitrary_joins_checked,
        preserves_implication,
        commutes_with_negation,
        meet_is_tensor,
        surjective,
        injective,
    })
}

/// Everything checked about `L¬¬ ≅ A(T_L)` for one lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainTheoremReport {
    pub booleanization: Booleanization,
    pub phi: PhiReport,
    /// `A(T_L)` is distributive and every class is regular.
    pub bousfield_is_boolean: bool,
    /// `φ′[r]` is the class hit by the `r`-th regular element.
    pub phi_prime: Vec<usize>,
    /// `φ(l) = φ′(¬¬l)` for every `l`.
    pub well_defined: bool,
    pub bijective: bool,
    pub heyting_morphism: bool,
    /// Distinct regular elements have distinct annihilators in `L¬¬`.
    pub annihilators_distinct: bool,
    /// For Boolean `L`: `φ` is an order isomorphism `L ≅ A(T_L)`.
    pub recovers_input: Option<bool>,
}

impl MainTheoremReport {
    pub fn holds(&self) -> bool {
        self.phi.holds()
            && self.bousfield_is_boolean
            && self.well_defined
            && self.bijective
            && self.heyting_morphism
            && self.annihilators_distinct
            && self.recovers_input.unwrap_or(true)
    }
}

pub fn verify_main_theorem(l: &Lattice) -> Result<MainTheoremReport, HeytingError> {
    let h = HeytingAlgebra::new(l.clone())?;
    let booleanization = h.booleanize();
    let phi = phi_map(l)?;
    let bl = &phi.bousfield;
    let bh = bl.heyting().ok();
    let bousfield_is_boolean = bl.all_regular() && bh.as_ref().is_some_and(|b| b.is_boolean());

    let phi_prime: Vec<usize> = booleanization.carrier.iter().map(|&r| phi.map[r]).collect();
    let well_defined = (0..l.len()).all(|x| phi.map[x] == phi_prime[booleanization.unit[x]]);
    let mut seen = vec![false; bl.len()];
    let mut injective = true;
    for &c in &phi_prime {
        injective &= !core::mem::replace(&mut seen[c], true);
    }
    let bijective = injective && phi_prime.len() == bl.len();
    let heyting_morphism = bijective
        && bh
            .as_ref()
            .is_some_and(|b| check_heyting_morphism(&phi_prime, &booleanization.algebra, b).is_ok());

    let b = booleanization.algebra.lattice();
    let ann: Vec<ElemSet> = (0..b.len())
        .map(|r| (0..b.len()).filter(|&z| b.meet(z, r) == b.bottom()).collect())
        .collect();
    let annihilators_distinct = (0..ann.len()).all(|i| (0..i).all(|j| ann[i] != ann[j]));

    let recovers_input = h.is_boolean().then(|| {
        phi.injective
            && phi.surjective
            && (0..l.len()).all(|a| (0..l.len()).all(|c| l.leq(a, c) == bl.leq(phi.map[a], phi.map[c])))
    });

    Ok(MainTheoremReport {
        booleanization,
        phi,
        bousfield_is_boolean,
        phi_prime,
        well_defined,
        bijective,
        heyting_morphism,
        annihilators_distinct,
        recovers_input,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{chain, paper_s4, paper_s5, powerset};

    fn names(bl: &BousfieldLattice) -> Vec<String> {
        (0..bl.len()).map(|i| bl.class_name(i)).collect()
    }

    #[test]
    fn class_of_unit_and_zero() {
        let m = paper_s5();
        assert_eq!(BousfieldClass::of(&SupportObject::unit(&m)).members, ElemSet::EMPTY);
        assert_eq!(BousfieldClass::of(&SupportObject::zero(&m)).members, m.nonzero());
    }

    #[test]
    fn chain_class_and_representative() {
        let l = chain(3);
        let m = CMonoid0::from_lattice_meet(&l);
        let x = SupportObject::generator(&m, 1);
        assert_eq!(BousfieldClass::of(&x).members, ElemSet::EMPTY);
        assert_eq!(lattice_representative(&l, &x), 1);
        assert_eq!(
            BousfieldClass::of(&x),
            BousfieldClass::of(&SupportObject::generator(&m, 2))
        );
    }

    #[test]
    fn enumerate_small_monoids() {
        let s4 = BousfieldLattice::enumerate(&paper_s4());
        assert_eq!(names(&s4), ["T", "⟨0⟩"]);
        let s5 = BousfieldLattice::enumerate(&paper_s5());
        assert_eq!(names(&s5), ["T", "⟨k_x,k_y⟩", "⟨k_x⟩", "⟨0⟩"]);
        let p2 = BousfieldLattice::enumerate(&CMonoid0::from_lattice_meet(&powerset(2)));
        assert_eq!(p2.len(), 4);
        assert!(p2.to_lattice().is_isomorphic(&powerset(2)).unwrap());
    }

    #[test]
    fn order_ops() {
        let m = paper_s5();
        let bl = BousfieldLattice::enumerate(&m);
        let ax = bl.index_of(&SupportObject::generator(&m, 2));
        let ay = bl.index_of(&SupportObject::generator(&m, 3));
        assert!(bl.leq(ax, ay));
        assert_eq!(bl.join(ax, ay), ay);
        for c in 0..bl.len() {
            assert_eq!(bl.join(c, bl.bottom()), c);
            assert_eq!(bl.meet(c, bl.top()), c);
        }
        let l = powerset(2);
        let pm = CMonoid0::from_lattice_meet(&l);
        let pb = BousfieldLattice::enumerate(&pm);
        let a1 = pb.index_of(&SupportObject::generator(&pm, 1));
        let a2 = pb.index_of(&SupportObject::generator(&pm, 2));
        assert_eq!(pb.tensor(a1, a2), pb.bottom());
        assert_eq!(pb.meet(a1, a2), pb.bottom());
    }

    #[test]
    fn negation_examples() {
        let bl = BousfieldLattice::enumerate(&paper_s5());
        assert_eq!(bl.negation(bl.bottom()), bl.top());
        assert_eq!(bl.negation(bl.top()), bl.bottom());

        let pm = CMonoid0::from_lattice_meet(&powerset(2));
        let pb = BousfieldLattice::enumerate(&pm);
        let a1 = pb.index_of(&SupportObject::generator(&pm, 1));
        let a2 = pb.index_of(&SupportObject::generator(&pm, 2));
        assert_eq!(pb.negation(a1), a2);

        let cm = CMonoid0::from_lattice_meet(&chain(3));
        let cb = BousfieldLattice::enumerate(&cm);
        let aa = cb.index_of(&SupportObject::generator(&cm, 1));
        assert_eq!(aa, cb.top());
        assert_eq!(cb.negation(aa), cb.bottom());
        assert_eq!(cb.negation(cb.negation(aa)), aa);
    }

    #[test]
    fn implication_examples() {
        let pm = CMonoid0::from_lattice_meet(&powerset(2));
        let pb = BousfieldLattice::enumerate(&pm);
        let a1 = pb.index_of(&SupportObject::generator(&pm, 1));
        let a2 = pb.index_of(&SupportObject::generator(&pm, 2));
        assert_eq!(pb.implication(a1, a2), Ok(a2));
        for c in 0..pb.len() {
            assert_eq!(pb.implication(c, c), Ok(pb.top()));
            assert_eq!(pb.implication(pb.bottom(), c), Ok(pb.top()));
        }
    }

    #[test]
    fn phi_examples() {
        let r = phi_map(&chain(3)).unwrap();
        assert_eq!(r.map, [r.bousfield.bottom(), r.bousfield.top(), r.bousfield.top()]);
        assert!(r.holds() && r.surjective && !r.injective);
        let r = phi_map(&powerset(2)).unwrap();
        assert!(r.holds() && r.injective);
        let r = phi_map(&chain(2)).unwrap();
        assert!(r.holds() && r.injective);
    }

    #[test]
    fn main_theorem_examples() {
        let r = verify_main_theorem(&chain(3)).unwrap();
        assert!(r.holds());
        assert_eq!((r.booleanization.algebra.len(), r.phi.bousfield.len()), (2, 2));
        let r = verify_main_theorem(&powerset(3)).unwrap();
        assert!(r.holds());
        assert_eq!(r.recovers_input, Some(true));
        let r = verify_main_theorem(&chain(1)).unwrap();
        assert!(r.holds());
        assert_eq!(r.phi.bousfield.len(), 1);
    }

    #[test]
    fn s5_is_a_non_boolean_chain() {
        let bl = BousfieldLattice::enumerate(&paper_s5());
        let h = bl.heyting().unwrap();
        assert!(!h.is_boolean());
        assert!(bl.to_lattice().is_isomorphic(&chain(4)).unwrap());
    }
}
