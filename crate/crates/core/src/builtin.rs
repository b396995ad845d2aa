//! Built-in structures: chains, powersets, divisor lattices, finite
//! topologies, and the two small monoids used for the counterexamples.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::monoid::CMonoid0;
use crate::order::{Lattice, OrderError, Poset};
use crate::set::{ElemSet, MAX_CARRIER};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopologyError {
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("point `{0}` declared twice")]
    DuplicatePoint(String),
    #[error("open set {0} listed twice")]
    DuplicateOpen(String),
    #[error("the empty set is not open")]
    MissingEmpty,
    #[error("the whole space is not open")]
    MissingWhole,
    #[error("union of {0} and {1} is not open")]
    NotClosedUnderUnion(String, String),
    #[error("intersection of {0} and {1} is not open")]
    NotClosedUnderIntersection(String, String),
    #[error("too many points or open sets")]
    TooLarge,
}

fn chain_names(n: usize) -> Vec<String> {
    match n {
        0 => Vec::new(),
        1 => vec!["0".to_string()],
        _ => {
            let mut names = vec!["0".to_string()];
            for i in 0..n - 2 {
                if n - 2 <= 26 {
                    names.push(char::from(b'a' + i as u8).to_string());
                } else {
                    names.push(format!("c{}", i + 1));
                }
            }
            names.push("1".to_string());
            names
        }
    }
}

/// The `n`-element chain `0 < a < b < .. < 1`; `n = 1` is the degenerate
/// lattice with `0 = 1`.
///
/// Panics if `n` is zero or above 64.
pub fn chain(n: usize) -> Lattice {
    assert!((1..=MAX_CARRIER).contains(&n), "chain length out of range");
    let p = Poset::from_fn(chain_names(n), |a, b| a <= b).expect("chain order");
    Lattice::from_poset(p).expect("chain is a lattice")
}

/// Name of a subset of `{1..}` such as `{1,3}`.
pub fn subset_name(mask: u64) -> String {
    let parts: Vec<String> = ElemSet::from_bits(mask).iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Subsets of `{1..n}` under inclusion, listed in bitmask order.
///
/// Panics if `n > 6`.
pub fn powerset(n: usize) -> Lattice {
    assert!(n <= 6, "powerset of more than 6 points exceeds the carrier limit");
    let size = 1usize << n;
    let names = (0..size as u64).map(subset_name).collect();
    let p = Poset::from_fn(names, |a, b| a & !b == 0).expect("inclusion order");
    Lattice::from_poset(p).expect("powerset is a lattice")
}

/// Positive divisors of `n` under divisibility.
pub fn divisors(n: u64) -> Result<Lattice, OrderError> {
    if n == 0 {
        return Err(OrderError::EmptyCarrier);
    }
    let divs: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    if divs.len() > MAX_CARRIER {
        return Err(OrderError::CarrierTooLarge(divs.len()));
    }
    let names = divs.iter().map(|d| d.to_string()).collect();
    let p = Poset::from_fn(names, |a, b| divs[b].is_multiple_of(divs[a]))?;
    Lattice::from_poset(p)
}

fn set_name(points: &[String], s: ElemSet) -> String {
    let parts: Vec<&str> = s.iter().map(|i| points[i].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Lattice of open sets of a finite topology, in the order the opens are
/// listed. Every open set must be closed under pairwise union and
/// intersection, and must contain the empty set and the whole space.
pub fn topology<S: AsRef<str>>(points: &[S], opens: &[Vec<S>]) -> Result<Lattice, TopologyError> {
    let points: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
    if points.len() > MAX_CARRIER || opens.len() > MAX_CARRIER {
        return Err(TopologyError::TooLarge);
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(TopologyError::DuplicatePoint(p.clone()));
        }
    }
    let mut masks = Vec::with_capacity(opens.len());
    for open in opens {
        let mut s = ElemSet::EMPTY;
        for p in open {
            let i = points
                .iter()
                .position(|x| x == p.as_ref())
                .ok_or_else(|| TopologyError::UnknownPoint(p.as_ref().to_string()))?;
            s.insert(i);
        }
        if masks.contains(&s) {
            return Err(TopologyError::DuplicateOpen(set_name(&points, s)));
        }
        masks.push(s);
    }
    topology_from_masks(&points, &masks)
}

/// [`topology`] with open sets given as point bitmasks.
pub fn topology_from_masks(points: &[String], opens: &[ElemSet]) -> Result<Lattice, TopologyError> {
    let whole = ElemSet::full(points.len());
    if !opens.contains(&ElemSet::EMPTY) {
        return Err(TopologyError::MissingEmpty);
    }
    if !opens.contains(&whole) {
        return Err(TopologyError::MissingWhole);
    }
    for &a in opens {
        for &b in opens {
            let name = |s| set_name(points, s);
            if !opens.contains(&a.union(b)) {
                return Err(TopologyError::NotClosedUnderUnion(name(a), name(b)));
            }
            if !opens.contains(&a.intersection(b)) {
                return Err(TopologyError::NotClosedUnderIntersection(name(a), name(b)));
            }
        }
    }
    let names = opens.iter().map(|&s| set_name(points, s)).collect();
    let p = Poset::from_fn(names, |a, b| opens[a].is_subset(opens[b])).map_err(|_| TopologyError::TooLarge)?;
    Ok(Lattice::from_poset(p).expect("open sets form a lattice"))
}

/// Sierpiński space `{p, q}` with opens `∅ ⊂ {p} ⊂ {p,q}`.
pub fn sierpinski() -> Lattice {
    topology(&["p", "q"], &[vec![], vec!["p"], vec!["p", "q"]]).expect("valid topology")
}

/// Opens `∅, {p}, {q}, {p,q}, {p,q,r}` on three points: a five-element
/// Heyting algebra whose Booleanization has four elements.
pub fn two_points_and_generic() -> Lattice {
    topology(
        &["p", "q", "r"],
        &[vec![], vec!["p"], vec!["q"], vec!["p", "q"], vec!["p", "q", "r"]],
    )
    .expect("valid topology")
}

/// Opens `∅, {p}, {p,q}, {p,r}, {p,q,r}`: every nonempty open contains the
/// dense point `p`.
pub fn dense_point() -> Lattice {
    topology(
        &["p", "q", "r"],
        &[vec![], vec!["p"], vec!["p", "q"], vec!["p", "r"], vec!["p", "q", "r"]],
    )
    .expect("valid topology")
}

/// The two-element monoid `{1, m}` with `m·m = m`, with a zero adjoined.
pub fn paper_s4() -> CMonoid0 {
    CMonoid0::with_adjoined_zero(&["1", "m"], |a, b| a.max(b), 0).expect("valid monoid")
}

/// The monoid `{0, 1, x, y}` with `x·x = x·y = 0` and `y·y = y`.
pub fn paper_s5() -> CMonoid0 {
    // 0 1 x y
    let table = [
        0, 0, 0, 0, //
        0, 1, 2, 3, //
        0, 2, 0, 0, //
        0, 3, 0, 3, //
    ];
    CMonoid0::new(&["0", "1", "x", "y"], table.to_vec(), 1, 0).expect("valid monoid")
}

/// Names accepted by [`builtin_lattice`] and [`builtin_monoid`].
pub const BUILTIN_NAMES: &[&str] = &[
    "chain N",
    "powerset N",
    "divisors N",
    "sierpinski",
    "topology-two-points",
    "topology-dense-point",
    "paper-s4",
    "paper-s5",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuiltinError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("bad parameters for `{0}`: {1}")]
    BadParams(String, String),
}

/// Lattice-valued generators: `chain`, `powerset`, `divisors`, and the
/// named topologies.
pub fn builtin_lattice(name: &str, params: &[u64]) -> Result<Lattice, BuiltinError> {
    let bad = |msg: &str| BuiltinError::BadParams(name.to_string(), msg.to_string());
    let one = || match params {
        [n] => Ok(*n),
        _ => Err(bad("expected exactly one integer")),
    };
    let none = || {
        if params.is_empty() {
            Ok(())
        } else {
            Err(bad("takes no parameters"))
        }
    };
    match name {
        "chain" => {
            let n = one()?;
            if !(1..=MAX_CARRIER as u64).contains(&n) {
                return Err(bad("length must be between 1 and 64"));
            }
            Ok(chain(n as usize))
        }
        "powerset" => {
            let n = one()?;
            if n > 6 {
                return Err(bad("at most 6 points"));
            }
            Ok(powerset(n as usize))
        }
        "divisors" => divisors(one()?).map_err(|e| bad(&e.to_string())),
        "sierpinski" => none().map(|_| sierpinski()),
        "topology-two-points" => none().map(|_| two_points_and_generic()),
        "topology-dense-point" => none().map(|_| dense_point()),
        _ => Err(BuiltinError::UnknownGenerator(name.to_string())),
    }
}

/// Monoid-valued generators: `paper-s4` and `paper-s5`.
pub fn builtin_monoid(name: &str, params: &[u64]) -> Result<CMonoid0, BuiltinError> {
    if !params.is_empty() && matches!(name, "paper-s4" | "paper-s5") {
        return Err(BuiltinError::BadParams(
            name.to_string(),
            "takes no parameters".to_string(),
        ));
    }
    match name {
        "paper-s4" => Ok(paper_s4()),
        "paper-s5" => Ok(paper_s5()),
        _ => Err(BuiltinError::UnknownGenerator(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_names_match_convention() {
        assert_eq!(chain(3).names(), ["0", "a", "1"]);
        assert_eq!(chain(1).names(), ["0"]);
        assert_eq!(chain(2).names(), ["0", "1"]);
    }

    #[test]
    fn divisors_of_12() {
        let l = divisors(12).unwrap();
        assert_eq!(l.names(), ["1", "2", "3", "4", "6", "12"]);
        let idx = |s| l.index_of(s).unwrap();
        assert_eq!(l.meet(idx("4"), idx("6")), idx("2"));
        assert_eq!(l.join(idx("4"), idx("6")), idx("12"));
        assert!(l.is_distributive());
    }

    #[test]
    fn topology_validation() {
        assert_eq!(
            topology(&["p", "q"], &[vec!["p"], vec!["p", "q"]]).unwrap_err(),
            TopologyError::MissingEmpty
        );
        assert!(topology(&["p", "q"], &[vec![], vec!["p"], vec!["q"], vec!["p", "q"]]).is_ok());
        assert!(matches!(
            topology(&["p", "q", "r"], &[vec![], vec!["p"], vec!["q"], vec!["p", "q", "r"]]),
            Err(TopologyError::NotClosedUnderUnion(..))
        ));
        assert!(matches!(
            topology(&["p"], &[vec![], vec!["z"]]),
            Err(TopologyError::UnknownPoint(_))
        ));
    }

    #[test]
    fn sierpinski_is_three_chain() {
        assert!(sierpinski().is_isomorphic(&chain(3)).unwrap());
    }

    #[test]
    fn generators_by_name() {
        assert_eq!(builtin_lattice("chain", &[3]).unwrap(), chain(3));
        assert_eq!(builtin_lattice("divisors", &[12]).unwrap().len(), 6);
        assert!(matches!(
            builtin_lattice("chain", &[]),
            Err(BuiltinError::BadParams(..))
        ));
        assert!(matches!(
            builtin_lattice("nope", &[]),
            Err(BuiltinError::UnknownGenerator(_))
        ));
        assert_eq!(builtin_monoid("paper-s5", &[]).unwrap(), paper_s5());
    }
}
