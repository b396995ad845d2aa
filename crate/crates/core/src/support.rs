//! Support-level model of the category `T_M`.
//!
//! Every object of `T_M` is a coproduct of suspensions of the generators
//! `k_s`, one for each nonzero `s ∈ M`. Bousfield classes and localizing
//! ⊗-ideals are closed under summands and suspension, so all they see of
//! an object is its *support*: the set of degrees `s` in which some copy
//! of `k_s` occurs. A [`SupportObject`] is that set; the empty support is
//! the zero object. Suspensions, multiplicities and the ground field are
//! deliberately not represented.
//!
//! Tensor product and coproduct act on supports as product set (minus
//! zero) and union.
//!
//! Localizing subcategories in general are taken to be determined by the
//! generators they contain, just as Bousfield classes are. This is a
//! modeling assumption of the crate.

use crate::monoid::CMonoid0;
use crate::set::ElemSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum SupportError {
    #[error("objects live over different monoids")]
    MonoidMismatch,
    #[error("support contains an element outside the monoid or the zero element")]
    InvalidSupport,
}

/// An object of `T_M`, up to everything a Bousfield class cannot see.
#[derive(Debug, Clone, Copy)]
pub struct SupportObject<'m> {
    monoid: &'m CMonoid0,
    support: ElemSet,
}

impl PartialEq for SupportObject<'_> {
    fn eq(&self, other: &Self) -> bool {
        same_monoid(self.monoid, other.monoid) && self.support == other.support
    }
}

impl Eq for SupportObject<'_> {}

fn same_monoid(a: &CMonoid0, b: &CMonoid0) -> bool {
    core::ptr::eq(a, b) || a == b
}

impl<'m> SupportObject<'m> {
    pub fn new(monoid: &'m CMonoid0, support: ElemSet) -> Result<Self, SupportError> {
        if !support.is_subset(monoid.nonzero()) {
            return Err(SupportError::InvalidSupport);
        }
        Ok(SupportObject { monoid, support })
    }

    pub fn zero(monoid: &'m CMonoid0) -> Self {
        SupportObject {
            monoid,
            support: ElemSet::EMPTY,
        }
    }

    /// The tensor unit `k_1`.
    pub fn unit(monoid: &'m CMonoid0) -> Self {
        SupportObject {
            monoid,
            support: ElemSet::singleton(monoid.unit()).intersection(monoid.nonzero()),
        }
    }

    /// The generator `k_s`; `k_0` is the zero object.
    pub fn generator(monoid: &'m CMonoid0, s: usize) -> Self {
        SupportObject {
            monoid,
            support: ElemSet::singleton(s).intersection(monoid.nonzero()),
        }
    }

    pub fn monoid(&self) -> &'m CMonoid0 {
        self.monoid
    }

    pub fn support(&self) -> ElemSet {
        self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn tensor(&self, other: &SupportObject<'m>) -> Result<SupportObject<'m>, SupportError> {
        if !same_monoid(self.monoid, other.monoid) {
            return Err(SupportError::MonoidMismatch);
        }
        Ok(SupportObject {
            monoid: self.monoid,
            support: self.monoid.product_set(self.support, other.support),
        })
    }

    /// Generators `k_t` with `k_t ⊗ X = 0`. The Bousfield class `A(X)` is
    /// determined by exactly this set.
    pub fn annihilator(&self) -> ElemSet {
        let m = self.monoid;
        m.nonzero()
            .iter()
            .filter(|&t| self.support.iter().all(|s| m.mul(t, s) == m.zero()))
            .collect()
    }
}

/// Coproduct of a family of objects over `monoid`: the union of supports.
pub fn coproduct<'m, I>(monoid: &'m CMonoid0, objects: I) -> Result<SupportObject<'m>, SupportError>
where
    I: IntoIterator<Item = SupportObject<'m>>,
{
    let mut support = ElemSet::EMPTY;
    for x in objects {
        if !same_monoid(monoid, x.monoid) {
            return Err(SupportError::MonoidMismatch);
        }
        support = support.union(x.support);
    }
    Ok(SupportObject { monoid, support })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{chain, paper_s4, paper_s5};

    fn obj<'m>(m: &'m CMonoid0, names: &[&str]) -> SupportObject<'m> {
        SupportObject::new(m, m.set_of(names).unwrap()).unwrap()
    }

    #[test]
    fn tensor_examples() {
        let m = paper_s5();
        assert!(obj(&m, &["x"]).tensor(&obj(&m, &["y"])).unwrap().is_zero());
        let u = SupportObject::unit(&m);
        let xy = obj(&m, &["x", "y"]);
        assert_eq!(u.tensor(&xy).unwrap(), xy);
        let s4 = paper_s4();
        assert_eq!(
            obj(&s4, &["1", "m"]).tensor(&obj(&s4, &["m"])).unwrap(),
            obj(&s4, &["m"])
        );
    }

    #[test]
    fn coproduct_examples() {
        let m = paper_s5();
        assert!(coproduct(&m, []).unwrap().is_zero());
        assert_eq!(
            coproduct(&m, [obj(&m, &["x"]), obj(&m, &["y"])]).unwrap(),
            obj(&m, &["x", "y"])
        );
        let s4 = paper_s4();
        assert_eq!(
            coproduct(&s4, [obj(&s4, &["m"]), obj(&s4, &["1"])]).unwrap(),
            obj(&s4, &["1", "m"])
        );
    }

    #[test]
    fn mismatched_monoids() {
        let a = paper_s5();
        let b = paper_s4();
        let err = SupportObject::unit(&a).tensor(&SupportObject::unit(&b)).unwrap_err();
        assert_eq!(err, SupportError::MonoidMismatch);
        assert_eq!(
            coproduct(&a, [SupportObject::unit(&b)]).unwrap_err(),
            SupportError::MonoidMismatch
        );
    }

    #[test]
    fn annihilator_examples() {
        let m = paper_s5();
        assert_eq!(SupportObject::zero(&m).annihilator(), m.nonzero());
        assert_eq!(obj(&m, &["y"]).annihilator(), m.set_of(&["x"]).unwrap());
        assert_eq!(obj(&m, &["x"]).annihilator(), m.set_of(&["x", "y"]).unwrap());
    }

    #[test]
    fn zero_not_allowed_in_support() {
        let m = paper_s5();
        assert_eq!(
            SupportObject::new(&m, ElemSet::singleton(m.zero())).unwrap_err(),
            SupportError::InvalidSupport
        );
        let l = CMonoid0::from_lattice_meet(&chain(3));
        assert!(SupportObject::generator(&l, l.zero()).is_zero());
    }
}
