//! Finite groups by multiplication table, subsets, and permutation embeddings.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::ConstructorError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteGroup {
    pub names: Vec<String>,
    /// `table[g][h]` is the index of `gh`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverses: Vec<usize>,
}

/// JSON form of a group: a preset name or an explicit table.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Preset(String),
    Table { elements: Vec<String>, table: Vec<Vec<usize>> },
}

impl FiniteGroup {
    /// Validates the group axioms on the table.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, ConstructorError> {
        let n = names.len();
        let bad = |m: String| Err(ConstructorError::InvalidGroup(m));
        if n == 0 {
            return bad("empty group".into());
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("table shape does not match element count".into());
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g)) else {
            return bad("no identity element".into());
        };
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            match (0..n).find(|&h| table[g][h] == identity && table[h][g] == identity) {
                Some(h) => inverses.push(h),
                None => return bad(format!("{} has no inverse", names[g])),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("not associative at ({}, {}, {})", names[a], names[b], names[c]));
                    }
                }
            }
        }
        Ok(FiniteGroup { names, table, identity, inverses })
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self, ConstructorError> {
        match spec {
            GroupSpec::Preset(name) => FiniteGroup::preset(name),
            GroupSpec::Table { elements, table } => FiniteGroup::from_table(elements.clone(), table.clone()),
        }
    }

    pub fn preset(name: &str) -> Result<Self, ConstructorError> {
        match name {
            "trivial" => Ok(FiniteGroup::cyclic(1)),
            "z2" => Ok(FiniteGroup::z2()),
            "klein4" => Ok(FiniteGroup::klein4()),
            "s3" => Ok(FiniteGroup::symmetric(3)),
            "q8" => Ok(FiniteGroup::q8()),
            other => match other.strip_prefix('c').and_then(|k| k.parse::<usize>().ok()) {
                Some(k) if k >= 1 => Ok(FiniteGroup::cyclic(k)),
                _ => Err(ConstructorError::UnknownPreset(other.to_string())),
            },
        }
    }

    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") }).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::from_table(names, table).expect("cyclic group")
    }

    /// Z/2 = {e, a}.
    pub fn z2() -> Self {
        FiniteGroup::from_table(vec!["e".into(), "a".into()], vec![vec![0, 1], vec![1, 0]]).expect("z2")
    }

    /// Klein four group {e, a, b, ab}; with this labelling the product is XOR.
    pub fn klein4() -> Self {
        let names = ["e", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        FiniteGroup::from_table(names, table).expect("klein4")
    }

    /// Symmetric group on `k` points, permutations in lexicographic order of
    /// their one-line notation; `(pq)(i) = p(q(i))`.
    pub fn symmetric(k: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for n in 1..=k {
            let mut next = Vec::new();
            for p in &perms {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    next.push(q);
                }
            }
            perms = next;
        }
        perms.sort();
        let idx = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| idx(&q.iter().map(|&i| p[i]).collect::<Vec<_>>())).collect())
            .collect();
        let names = perms
            .iter()
            .map(|p| {
                if p.iter().enumerate().all(|(i, &x)| i == x) {
                    "e".to_string()
                } else {
                    format!("[{}]", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))
                }
            })
            .collect();
        FiniteGroup::from_table(names, table).expect("symmetric group")
    }

    /// Quaternion group {±1, ±i, ±j, ±k}.
    pub fn q8() -> Self {
        // units 1, i, j, k as 0..4; product table (unit, sign flip).
        const U: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let unit_names = ["1", "i", "j", "k"];
        // index = 2 * unit + negative
        let names = (0..8).map(|x| format!("{}{}", if x % 2 == 1 { "-" } else { "" }, unit_names[x / 2])).collect();
        let table = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (u, flip) = U[x / 2][y / 2];
                        let neg = (x % 2 == 1) ^ (y % 2 == 1) ^ flip;
                        2 * u + neg as usize
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(names, table).expect("q8")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|g| (0..g).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Left regular representation: `g` acts on the points `0..|G|` by
    /// `j ↦ gj`. Row `g` is the permutation of `g`.
    pub fn regular_embedding(&self) -> Vec<Vec<usize>> {
        (0..self.order()).map(|g| (0..self.order()).map(|j| self.mul(g, j)).collect()).collect()
    }
}

/// Checks that `perm[g]` is a homomorphism into the symmetric group on
/// `perm[g].len()` points, with `(στ)(i) = σ(τ(i))`.
pub fn is_permutation_embedding(g: &FiniteGroup, perm: &[Vec<usize>]) -> bool {
    if perm.len() != g.order() {
        return false;
    }
    let n = perm[0].len();
    let bijective = perm.iter().all(|p| p.len() == n && p.iter().collect::<BTreeSet<_>>().len() == n && p.iter().all(|&x| x < n));
    bijective
        && (0..g.order()).all(|a| (0..g.order()).all(|b| (0..n).all(|i| perm[g.mul(a, b)][i] == perm[a][perm[b][i]])))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSubset {
    pub members: Vec<usize>,
    pub is_subgroup: bool,
}

impl GroupSubset {
    pub fn new(g: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self, ConstructorError> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if set.is_empty() {
            return Err(ConstructorError::InvalidSubset("subset is empty".into()));
        }
        if let Some(&x) = set.iter().find(|&&x| x >= g.order()) {
            return Err(ConstructorError::InvalidSubset(format!("index {x} outside the group")));
        }
        let is_subgroup = set.contains(&g.identity)
            && set.iter().all(|&x| set.contains(&g.inv(x)) && set.iter().all(|&y| set.contains(&g.mul(x, y))));
        Ok(GroupSubset { members: set.into_iter().collect(), is_subgroup })
    }

    pub fn from_names(g: &FiniteGroup, names: &[String]) -> Result<Self, ConstructorError> {
        let idx = names
            .iter()
            .map(|n| g.index_of(n).ok_or_else(|| ConstructorError::InvalidSubset(format!("unknown element {n}"))))
            .collect::<Result<Vec<_>, _>>()?;
        GroupSubset::new(g, idx)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_groups() {
        for name in ["trivial", "z2", "klein4", "s3", "q8", "c5"] {
            let g = FiniteGroup::preset(name).unwrap();
            assert!(is_permutation_embedding(&g, &g.regular_embedding()), "{name}");
        }
        assert!(!FiniteGroup::q8().is_abelian());
        assert!(!FiniteGroup::symmetric(3).is_abelian());
        assert_eq!(FiniteGroup::symmetric(3).order(), 6);
        assert!(matches!(FiniteGroup::preset("nope"), Err(ConstructorError::UnknownPreset(_))));
    }

    #[test]
    fn bad_table_rejected() {
        let r = FiniteGroup::from_table(vec!["x".into(), "y".into()], vec![vec![0, 0], vec![0, 1]]);
        assert!(r.is_err());
    }

    #[test]
    fn subsets() {
        let g = FiniteGroup::klein4();
        let x = GroupSubset::new(&g, [0, 1, 2]).unwrap();
        assert!(!x.is_subgroup);
        assert!(GroupSubset::new(&g, [0, 3]).unwrap().is_subgroup);
        assert!(GroupSubset::new(&g, []).is_err());
    }
}
