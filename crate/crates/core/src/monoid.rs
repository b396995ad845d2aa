//! Finite commutative monoids with an absorbing zero.
//!
//! These grade the category `T_M`: the generator `k_s` sits in degree `s`,
//! `k_s ⊗ k_t = k_{st}`, and `k_0` is identified with the zero object. Every
//! lattice gives one via its meet, see [`CMonoid0::from_lattice_meet`].

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::order::Lattice;
use crate::set::{ElemSet, MAX_CARRIER};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonoidError {
    #[error("element `{0}` declared twice")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("carrier of {0} elements exceeds the supported maximum of 64")]
    CarrierTooLarge(usize),
    #[error("multiplication table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("product `{0}`·`{1}` is undefined")]
    UndefinedProduct(String, String),
    #[error("not commutative: `{0}`·`{1}` != `{1}`·`{0}`")]
    NotCommutative(String, String),
    #[error("not associative: (`{0}`·`{1}`)·`{2}` != `{0}`·(`{1}`·`{2}`)")]
    NotAssociative(String, String, String),
    #[error("`{unit}` is not a unit: `{unit}`·`{0}` != `{0}`", unit = .1)]
    BadUnit(String, String),
    #[error("`{zero}` is not absorbing: `{zero}`·`{0}` != `{zero}`", zero = .1)]
    BadZero(String, String),
}

/// A finite commutative monoid with identity `unit` and absorbing `zero`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMonoid0 {
    names: Vec<String>,
    table: Vec<usize>,
    unit: usize,
    zero: usize,
    adjoined_zero: bool,
}

impl CMonoid0 {
    /// Validates a full multiplication table (`table[a * n + b] = a·b`).
    pub fn new<S: AsRef<str>>(
        elements: &[S],
        table: Vec<usize>,
        unit: usize,
        zero: usize,
    ) -> Result<CMonoid0, MonoidError> {
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let n = names.len();
        if n == 0 {
            return Err(MonoidError::EmptyCarrier);
        }
        if n > MAX_CARRIER {
            return Err(MonoidError::CarrierTooLarge(n));
        }
        for (i, s) in names.iter().enumerate() {
            if names[..i].contains(s) {
                return Err(MonoidError::DuplicateElement(s.clone()));
            }
        }
        if table.len() != n * n {
            return Err(MonoidError::TableShape {
                expected: n * n,
                found: table.len(),
            });
        }
        if unit >= n || zero >= n {
            return Err(MonoidError::UnknownElement(
                if unit >= n { "unit" } else { "zero" }.to_owned(),
            ));
        }
        if let Some(i) = table.iter().position(|&v| v >= n) {
            return Err(MonoidError::UndefinedProduct(
                names[i / n].clone(),
                names[i % n].clone(),
            ));
        }
        let m = CMonoid0 {
            names,
            table,
            unit,
            zero,
            adjoined_zero: false,
        };
        m.validate()?;
        Ok(m)
    }

    /// Builds `given ∪ {0}` from a monoid presented without a zero. The new
    /// zero is placed first and named `0` (or `zero` if `0` is taken).
    pub fn with_adjoined_zero<S: AsRef<str>, F>(
        elements: &[S],
        mut mul: F,
        unit: usize,
    ) -> Result<CMonoid0, MonoidError>
    where
        F: FnMut(usize, usize) -> usize,
    {
        let k = elements.len();
        let zero_name = if elements.iter().any(|s| s.as_ref() == "0") {
            "zero"
        } else {
            "0"
        };
        let mut names = vec![zero_name.to_owned()];
        names.extend(elements.iter().map(|s| s.as_ref().to_owned()));
        let n = k + 1;
        let mut table = vec![0; n * n];
        for a in 0..k {
            for b in 0..k {
                table[(a + 1) * n + b + 1] = mul(a, b) + 1;
            }
        }
        let mut m = CMonoid0::new(&names, table, unit + 1, 0)?;
        m.adjoined_zero = true;
        Ok(m)
    }

    /// `(L, ∧, 1)` with `0_L` as the zero.
    pub fn from_lattice_meet(l: &Lattice) -> CMonoid0 {
        let n = l.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = l.meet(a, b);
            }
        }
        CMonoid0 {
            names: l.names().to_vec(),
            table,
            unit: l.top(),
            zero: l.bottom(),
            adjoined_zero: false,
        }
    }

    fn validate(&self) -> Result<(), MonoidError> {
        let n = self.len();
        let name = |i: usize| self.names[i].clone();
        for a in 0..n {
            if self.mul(self.unit, a) != a {
                return Err(MonoidError::BadUnit(name(a), name(self.unit)));
            }
            if self.mul(self.zero, a) != self.zero {
                return Err(MonoidError::BadZero(name(a), name(self.zero)));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(MonoidError::NotCommutative(name(a), name(b)));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(MonoidError::NotAssociative(name(a), name(b), name(c)));
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

    pub fn index_of(&self, name: &str) -> Result<usize, MonoidError> {
        self.names
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| MonoidError::UnknownElement(name.to_owned()))
    }

    /// Resolves a list of names to a set of indices.
    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<ElemSet, MonoidError> {
        names.iter().map(|s| self.index_of(s.as_ref())).collect()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    /// The zero was not part of the presentation and was added on
    /// construction.
    pub fn has_adjoined_zero(&self) -> bool {
        self.adjoined_zero
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.len() + b]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// `M ∖ {0}`.
    pub fn nonzero(&self) -> ElemSet {
        ElemSet::full(self.len()).without(self.zero)
    }

    /// Pairwise products of `a` and `b`, with zero removed.
    pub fn product_set(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for s in a {
            for t in b {
                out.insert(self.mul(s, t));
            }
        }
        out.without(self.zero)
    }

    /// `x^n` for `n >= 1`.
    pub fn power(&self, x: usize, n: usize) -> usize {
        assert!(n >= 1, "power exponent starts at 1");
        (1..n).fold(x, |acc, _| self.mul(acc, x))
    }

    /// Some power `x^n` with `n <= |M|` is zero, and `x` itself is not.
    /// Powers of an element of a finite monoid repeat within `|M|` steps, so
    /// the bound loses nothing.
    pub fn is_nilpotent(&self, x: usize) -> bool {
        if x == self.zero {
            return false;
        }
        let mut p = x;
        for _ in 0..self.len() {
            if p == self.zero {
                return true;
            }
            p = self.mul(p, x);
        }
        p == self.zero
    }

    pub fn nilpotents(&self) -> ElemSet {
        (0..self.len()).filter(|&x| self.is_nilpotent(x)).collect()
    }

    pub fn idempotents(&self) -> ElemSet {
        (0..self.len()).filter(|&x| self.mul(x, x) == x).collect()
    }

    pub fn nilpotents_and_idempotents(&self) -> (ElemSet, ElemSet) {
        (self.nilpotents(), self.idempotents())
    }

    /// Rees quotient collapsing the nilpotents onto zero. Returns the
    /// quotient and the projection (`proj[x]` is the image of `x`).
    ///
    /// No further ideal closure is needed: if `x^n = 0` then
    /// `(tx)^n = t^n x^n = 0`, so the nilpotents together with zero already
    /// absorb multiplication.
    pub fn quotient_by_nil(&self) -> (CMonoid0, Vec<usize>) {
        let nil = self.nilpotents();
        let keep: Vec<usize> = (0..self.len()).filter(|&x| !nil.contains(x)).collect();
        let new_zero = keep.iter().position(|&x| x == self.zero).expect("zero survives");
        let proj: Vec<usize> = (0..self.len())
            .map(|x| keep.iter().position(|&k| k == x).unwrap_or(new_zero))
            .collect();
        let k = keep.len();
        let mut table = vec![0; k * k];
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                table[i * k + j] = proj[self.mul(a, b)];
            }
        }
        let names: Vec<&str> = keep.iter().map(|&x| self.name(x)).collect();
        let q = CMonoid0::new(&names, table, proj[self.unit], new_zero).expect("Rees quotient by an ideal is a monoid");
        (q, proj)
    }

    /// Nonzero `t` with `t·x = 0` for every `x` in `s`.
    pub fn orthogonal_set(&self, s: ElemSet) -> Result<ElemSet, MonoidError> {
        if let Some(bad) = s.iter().find(|&x| x >= self.len()) {
            return Err(MonoidError::UnknownElement(alloc::format!("#{bad}")));
        }
        Ok(self
            .nonzero()
            .iter()
            .filter(|&t| s.iter().all(|x| self.mul(t, x) == self.zero))
            .collect())
    }

    /// A bijection `f` with `f(ab) = f(a)f(b)`, `f(1) = 1`, `f(0) = 0`.
    /// Brute force over permutations; meant for the small monoids of the
    /// enumeration corpus.
    pub fn isomorphism(&self, other: &CMonoid0) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        let n = self.len();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.zero] = other.zero;
        used[other.zero] = true;
        if self.unit != self.zero {
            if other.unit == other.zero {
                return None;
            }
            map[self.unit] = other.unit;
            used[other.unit] = true;
        } else if other.unit != other.zero {
            return None;
        }
        let free: Vec<usize> = (0..n).filter(|&x| map[x] == usize::MAX).collect();
        self.extend_iso(other, &free, 0, &mut map, &mut used).then_some(map)
    }

    fn extend_iso(&self, other: &CMonoid0, free: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let Some(&x) = free.get(depth) else {
            let n = self.len();
            return (0..n).all(|a| (0..n).all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b])));
        };
        for y in 0..other.len() {
            if used[y] {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if self.extend_iso(other, free, depth + 1, map, used) {
                return true;
            }
            used[y] = false;
        }
        map[x] = usize::MAX;
        false
    }
}
