//! Heyting algebra structure on finite distributive lattices and the
//! Booleanization `H -> H¬¬`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::order::Lattice;
use crate::set::ElemSet;

/// Carrier cap for [`check_booleanization_universal`] and
/// [`heyting_morphisms`]; the map space grows as `|dst|^|src|`.
pub const UNIVERSAL_SEARCH_LIMIT: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeytingError {
    #[error("lattice is not distributive: `{0}` ∧ (`{1}` ∨ `{2}`) fails to distribute")]
    NotDistributive(String, String, String),
    #[error("carrier of {size} elements exceeds the search limit of {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("target algebra is not Boolean")]
    NotBoolean,
    #[error("map is not a Heyting morphism: {0}")]
    NotAMorphism(MorphismViolation),
}

/// First identity a candidate Heyting morphism fails, in terms of source
/// element indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismViolation {
    /// The map is not total, or sends `index` outside the target.
    NotTotal {
        index: usize,
    },
    Bottom,
    Top,
    Meet(usize, usize),
    Join(usize, usize),
    Implication(usize, usize),
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismViolation::NotTotal { index } => write!(f, "not total at element #{index}"),
            MorphismViolation::Bottom => f.write_str("bottom not preserved"),
            MorphismViolation::Top => f.write_str("top not preserved"),
            MorphismViolation::Meet(a, b) => write!(f, "meet of #{a} and #{b} not preserved"),
            MorphismViolation::Join(a, b) => write!(f, "join of #{a} and #{b} not preserved"),
            MorphismViolation::Implication(a, b) => {
                write!(f, "implication #{a} ⇒ #{b} not preserved")
            }
        }
    }
}

/// A finite distributive lattice together with its implication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeytingAlgebra {
    lattice: Lattice,
    implication: Vec<usize>,
}

impl HeytingAlgebra {
    /// Refuses non-distributive lattices: a pseudocomplement may exist there
    /// without the adjunction, which would corrupt Booleanization.
    pub fn new(lattice: Lattice) -> Result<HeytingAlgebra, HeytingError> {
        if let Some([a, b, c]) = lattice.distributivity_witness() {
            let name = |i| lattice.name(i).to_string();
            return Err(HeytingError::NotDistributive(name(a), name(b), name(c)));
        }
        let n = lattice.len();
        let mut implication = vec![0; n * n];
        for l in 0..n {
            for m in 0..n {
                // l ⇒ m is the join of everything whose meet with l lies below m.
                let scan: ElemSet = (0..n).filter(|&x| lattice.leq(lattice.meet(x, l), m)).collect();
                implication[l * n + m] = lattice.join_all(scan);
            }
        }
        Ok(HeytingAlgebra { lattice, implication })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn into_lattice(self) -> Lattice {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn implies(&self, l: usize, m: usize) -> usize {
        self.implication[l * self.len() + m]
    }

    /// Pseudocomplement `x ⇒ 0`.
    pub fn negation(&self, x: usize) -> usize {
        self.implies(x, self.lattice.bottom())
    }

    pub fn double_negation(&self, x: usize) -> usize {
        self.negation(self.negation(x))
    }

    /// Elements with `¬¬h = h`.
    pub fn regular(&self) -> ElemSet {
        (0..self.len()).filter(|&h| self.double_negation(h) == h).collect()
    }

    /// Elements with `h ∨ ¬h = 1`.
    pub fn complemented(&self) -> ElemSet {
        let l = &self.lattice;
        (0..self.len())
            .filter(|&h| l.join(h, self.negation(h)) == l.top())
            .collect()
    }

    pub fn regular_and_complemented(&self) -> (ElemSet, ElemSet) {
        (self.regular(), self.complemented())
    }

    /// Every element is regular.
    pub fn is_boolean(&self) -> bool {
        self.regular().len() == self.len()
    }

    /// Every element is complemented. Agrees with [`Self::is_boolean`] on
    /// every Heyting algebra; both are kept so the agreement can be tested.
    pub fn is_boolean_by_complements(&self) -> bool {
        self.complemented().len() == self.len()
    }

    /// Subalgebra of regular elements with join `¬(¬l ∧ ¬m)`. Meet,
    /// implication and the bounds are inherited from `self`, and element
    /// names are reused.
    pub fn booleanize(&self) -> Booleanization {
        let regular = self.regular();
        let carrier: Vec<usize> = regular.iter().collect();
        let k = carrier.len();
        let n = self.len();
        let mut unit = vec![0; n];
        for (x, u) in unit.iter_mut().enumerate() {
            let r = self.double_negation(x);
            *u = carrier.iter().position(|&c| c == r).expect("¬¬x is regular");
        }
        let local = |parent: usize| unit[parent];
        let l = &self.lattice;
        let mut meet = vec![0; k * k];
        let mut join = vec![0; k * k];
        let mut implication = vec![0; k * k];
        for (i, &a) in carrier.iter().enumerate() {
            for (j, &b) in carrier.iter().enumerate() {
                meet[i * k + j] = local(l.meet(a, b));
                join[i * k + j] = local(self.negation(l.meet(self.negation(a), self.negation(b))));
                implication[i * k + j] = local(self.implies(a, b));
            }
        }
        let poset = l.poset().subposet(regular);
        let lattice = Lattice::from_tables(poset, meet, join).expect("regular elements form a lattice");
        Booleanization {
            algebra: HeytingAlgebra { lattice, implication },
            carrier,
            unit,
        }
    }
}

/// The Boolean algebra `H¬¬` and the unit `¬¬ : H -> H¬¬`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Booleanization {
    pub algebra: HeytingAlgebra,
    /// Parent index of each element of `algebra`.
    pub carrier: Vec<usize>,
    /// `unit[h]` is the index of `¬¬h` in `algebra`.
    pub unit: Vec<usize>,
}

/// Checks that `f` (with `f[a]` the image of source element `a`) preserves
/// bounds, binary meets and joins, and implication.
pub fn check_heyting_morphism(
    f: &[usize],
    src: &HeytingAlgebra,
    dst: &HeytingAlgebra,
) -> Result<(), MorphismViolation> {
    let n = src.len();
    if f.len() != n {
        return Err(MorphismViolation::NotTotal { index: f.len().min(n) });
    }
    if let Some(index) = f.iter().position(|&y| y >= dst.len()) {
        return Err(MorphismViolation::NotTotal { index });
    }
    let (s, d) = (src.lattice(), dst.lattice());
    if f[s.bottom()] != d.bottom() {
        return Err(MorphismViolation::Bottom);
    }
    if f[s.top()] != d.top() {
        return Err(MorphismViolation::Top);
    }
    for a in 0..n {
        for b in 0..n {
            if f[s.meet(a, b)] != d.meet(f[a], f[b]) {
                return Err(MorphismViolation::Meet(a, b));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if f[s.join(a, b)] != d.join(f[a], f[b]) {
                return Err(MorphismViolation::Join(a, b));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if f[src.implies(a, b)] != dst.implies(f[a], f[b]) {
                return Err(MorphismViolation::Implication(a, b));
            }
        }
    }
    Ok(())
}

fn check_limit(size: usize) -> Result<(), HeytingError> {
    if size > UNIVERSAL_SEARCH_LIMIT {
        Err(HeytingError::SizeLimitExceeded {
            size,
            limit: UNIVERSAL_SEARCH_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// Every map `src -> dst` in lexicographic order.
fn all_maps(src: usize, dst: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if src == 0 {
        1
    } else {
        dst.checked_pow(src as u32).unwrap_or(0)
    };
    (0..total).map(move |mut code| {
        let mut f = vec![0; src];
        for slot in f.iter_mut().rev() {
            *slot = code % dst;
            code /= dst;
        }
        f
    })
}

/// All Heyting morphisms `src -> dst`, by exhaustive search over maps.
pub fn heyting_morphisms(src: &HeytingAlgebra, dst: &HeytingAlgebra) -> Result<Vec<Vec<usize>>, HeytingError> {
    check_limit(src.len())?;
    check_limit(dst.len())?;
    Ok(all_maps(src.len(), dst.len())
        .filter(|f| check_heyting_morphism(f, src, dst).is_ok())
        .collect())
}

/// Outcome of a universal-property search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalCheck {
    /// Every Heyting morphism `g : H¬¬ -> B` with `g ∘ ¬¬ = f`.
    pub factorizations: Vec<Vec<usize>>,
}

impl UniversalCheck {
    /// Exactly one factorization exists.
    pub fn holds(&self) -> bool {
        self.factorizations.len() == 1
    }
}

/// Searches all maps `booleanize(h) -> b` for factorizations of the
/// Heyting morphism `f : h -> b` through the unit.
pub fn check_booleanization_universal(
    h: &HeytingAlgebra,
    b: &HeytingAlgebra,
    f: &[usize],
) -> Result<UniversalCheck, HeytingError> {
    check_limit(h.len())?;
    check_limit(b.len())?;
    if !b.is_boolean() {
        return Err(HeytingError::NotBoolean);
    }
    check_heyting_morphism(f, h, b).map_err(HeytingError::NotAMorphism)?;
    let boole = h.booleanize();
    let factorizations = all_maps(boole.algebra.len(), b.len())
        .filter(|g| (0..h.len()).all(|x| g[boole.unit[x]] == f[x]))
        .filter(|g| check_heyting_morphism(g, &boole.algebra, b).is_ok())
        .collect();
    Ok(UniversalCheck { factorizations })
}
