//! Isomorph-free generation of small lattices and monoids.
//!
//! Both generators fix the distinguished elements (bounds, or zero and
//! unit), run over every admissible table on the remaining elements, and
//! deduplicate by a canonical key: the lexicographically least table over
//! all relabellings of those remaining elements.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::monoid::CMonoid0;
use crate::order::{Lattice, Poset};

pub const DEFAULT_LATTICE_CAP: usize = 7;
pub const DEFAULT_MONOID_CAP: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    #[error("size {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusKind {
    Lattice,
    DistributiveLattice,
    Monoid,
}

/// Pairwise non-isomorphic structures of every size from 1 to `max_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus<T> {
    pub kind: CorpusKind,
    pub max_size: usize,
    pub items: Vec<T>,
}

/// All permutations of `0..k`, in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn element_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["0".to_string()],
        _ => {
            let mut names = vec!["0".to_string()];
            names.extend((0..n - 2).map(|i| char::from(b'a' + i as u8).to_string()));
            names.push("1".to_string());
            names
        }
    }
}

/// Every lattice with exactly `n` elements, up to isomorphism, capped at
/// [`DEFAULT_LATTICE_CAP`].
pub fn enumerate_lattices(n: usize) -> Result<Vec<Lattice>, EnumError> {
    enumerate_lattices_capped(n, DEFAULT_LATTICE_CAP)
}

pub fn enumerate_lattices_capped(n: usize, cap: usize) -> Result<Vec<Lattice>, EnumError> {
    if n > cap || n > 26 {
        return Err(EnumError::CapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let names = element_names(n);
    if n <= 2 {
        let p = Poset::from_fn(names, |a, b| a <= b).expect("chain");
        return Ok(vec![Lattice::from_poset(p).expect("chain")]);
    }
    // Inner elements are 1..=k; any finite poset has a linear extension, so
    // only relations from a lower to a higher index need to be tried.
    let k = n - 2;
    let pairs: Vec<(usize, usize)> = (1..=k).flat_map(|i| (i + 1..=k).map(move |j| (i, j))).collect();
    let perms = permutations(k);
    // None records a key whose poset is not a lattice.
    let mut found: BTreeMap<u64, Option<Lattice>> = BTreeMap::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut rel = vec![false; n * n];
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            rel[i * n + j] = mask >> bit & 1 == 1;
        }
        let transitive = (1..=k)
            .all(|i| (i + 1..=k).all(|j| !rel[i * n + j] || (j + 1..=k).all(|l| !rel[j * n + l] || rel[i * n + l])));
        if !transitive {
            continue;
        }
        let le = |a: usize, b: usize| a == b || a == 0 || b == n - 1 || rel[a * n + b];
        let key = perms
            .iter()
            .map(|p| {
                let mut key = 0u64;
                for a in 0..k {
                    for b in 0..k {
                        if a != b {
                            key = key << 1 | le(p[a] + 1, p[b] + 1) as u64;
                        }
                    }
                }
                key
            })
            .min()
            .expect("at least one permutation");
        if found.contains_key(&key) {
            continue;
        }
        let poset = Poset::from_fn(names.clone(), le).expect("closed relation is an order");
        found.insert(key, Lattice::from_poset(poset).ok());
    }
    Ok(found.into_values().flatten().collect())
}

pub fn lattice_corpus(max_size: usize, distributive_only: bool) -> Result<Corpus<Lattice>, EnumError> {
    let mut items = Vec::new();
    for n in 1..=max_size {
        items.extend(
            enumerate_lattices(n)?
                .into_iter()
                .filter(|l| !distributive_only || l.is_distributive()),
        );
    }
    Ok(Corpus {
        kind: if distributive_only {
            CorpusKind::DistributiveLattice
        } else {
            CorpusKind::Lattice
        },
        max_size,
        items,
    })
}

fn monoid_names(n: usize) -> Vec<String> {
    let mut names = vec!["0".to_string()];
    if n > 1 {
        names.push("1".to_string());
        names.extend((0..n - 2).map(|i| char::from(b'a' + i as u8).to_string()));
    }
    names
}

/// Every commutative monoid with absorbing zero and exactly `n` elements
/// (zero and unit included), up to isomorphism, capped at
/// [`DEFAULT_MONOID_CAP`].
pub fn enumerate_monoids(n: usize) -> Result<Vec<CMonoid0>, EnumError> {
    enumerate_monoids_capped(n, DEFAULT_MONOID_CAP)
}

pub fn enumerate_monoids_capped(n: usize, cap: usize) -> Result<Vec<CMonoid0>, EnumError> {
    if n > cap || n > 8 {
        return Err(EnumError::CapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let names = monoid_names(n);
    if n == 1 {
        return Ok(vec![CMonoid0::new(&names, vec![0], 0, 0).expect("trivial monoid")]);
    }
    // 0 and 1 are fixed; the free entries are products among 2..n.
    let k = n - 2;
    let free: Vec<(usize, usize)> = (2..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let perms = permutations(k);
    let mut found: BTreeMap<Vec<u8>, CMonoid0> = BTreeMap::new();
    let total = (n as u64).pow(free.len() as u32);
    for mut code in 0..total {
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            table[n + a] = a;
            table[a * n + 1] = a;
        }
        for &(i, j) in &free {
            let v = (code % n as u64) as usize;
            code /= n as u64;
            table[i * n + j] = v;
            table[j * n + i] = v;
        }
        let Ok(m) = CMonoid0::new(&names, table, 1, 0) else {
            continue;
        };
        let key = perms
            .iter()
            .map(|p| {
                // relabel x -> p[x - 2] + 2 on the free elements
                let relabel = |x: usize| if x < 2 { x } else { p[x - 2] + 2 };
                let mut inv = vec![0; n];
                for x in 0..n {
                    inv[relabel(x)] = x;
                }
                let mut key = Vec::with_capacity(n * n);
                for a in 0..n {
                    for b in 0..n {
                        key.push(relabel(m.mul(inv[a], inv[b])) as u8);
                    }
                }
                key
            })
            .min()
            .expect("at least one permutation");
        found.entry(key).or_insert(m);
    }
    Ok(found.into_values().collect())
}

pub fn monoid_corpus(max_size: usize) -> Result<Corpus<CMonoid0>, EnumError> {
    let mut items = Vec::new();
    for n in 1..=max_size {
        items.extend(enumerate_monoids(n)?);
    }
    Ok(Corpus {
        kind: CorpusKind::Monoid,
        max_size,
        items,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{chain, paper_s5, powerset};

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(3)[5], [2, 1, 0]);
    }

    #[test]
    fn four_element_lattices() {
        let ls = enumerate_lattices(4).unwrap();
        assert_eq!(ls.len(), 2);
        assert!(ls.iter().any(|l| l.is_isomorphic(&chain(4)).unwrap()));
        assert!(ls.iter().any(|l| l.is_isomorphic(&powerset(2)).unwrap()));
    }

    #[test]
    fn one_element_lattice() {
        assert_eq!(enumerate_lattices(1).unwrap().len(), 1);
    }

    #[test]
    fn cap_enforced() {
        assert_eq!(
            enumerate_lattices(8).unwrap_err(),
            EnumError::CapExceeded { n: 8, cap: 7 }
        );
        assert!(enumerate_monoids(6).is_err());
    }

    #[test]
    fn small_monoids() {
        assert_eq!(enumerate_monoids(2).unwrap().len(), 1);
        assert_eq!(enumerate_monoids(3).unwrap().len(), 3);
        let s5 = paper_s5();
        assert!(enumerate_monoids(4)
            .unwrap()
            .iter()
            .any(|m| m.isomorphism(&s5).is_some()));
    }
}
