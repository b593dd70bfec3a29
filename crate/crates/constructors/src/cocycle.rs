//! Scalar 2-cocycles on finite groups.

use hp_algebra::{check_tuples, CheckResult};
use hp_scalars::Scalar;
use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;
use crate::ConstructorError;

#[derive(Clone, Debug, PartialEq)]
pub struct GroupCocycleTable {
    pub group: FiniteGroup,
    /// `values[g * |G| + s] = γ(g, s)`.
    pub values: Vec<Scalar>,
}

/// JSON form: `[[g, s, value], ...]` by element name; absent pairs are 1.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CocycleSpec(pub Vec<(String, String, Scalar)>);

impl GroupCocycleTable {
    pub fn new(group: FiniteGroup, values: Vec<Scalar>) -> Result<Self, ConstructorError> {
        let n = group.order();
        if values.len() != n * n {
            return Err(ConstructorError::InvalidCocycle(format!("expected {} values", n * n)));
        }
        if let Some(k) = values.iter().position(Scalar::is_zero) {
            return Err(ConstructorError::InvalidCocycle(format!(
                "γ({}, {}) is zero",
                group.names[k / n],
                group.names[k % n]
            )));
        }
        Ok(GroupCocycleTable { group, values })
    }

    pub fn trivial(group: FiniteGroup) -> Self {
        let n = group.order();
        GroupCocycleTable { group, values: vec![Scalar::one(); n * n] }
    }

    pub fn from_fn(group: FiniteGroup, f: impl Fn(usize, usize) -> Scalar) -> Result<Self, ConstructorError> {
        let n = group.order();
        let values = (0..n * n).map(|k| f(k / n, k % n)).collect();
        GroupCocycleTable::new(group, values)
    }

    pub fn from_spec(group: FiniteGroup, spec: &CocycleSpec) -> Result<Self, ConstructorError> {
        let n = group.order();
        let mut values = vec![Scalar::one(); n * n];
        for (g, s, v) in &spec.0 {
            let look = |x: &str| {
                group.index_of(x).ok_or_else(|| ConstructorError::InvalidCocycle(format!("unknown element {x}")))
            };
            values[look(g)? * n + look(s)?] = v.clone();
        }
        GroupCocycleTable::new(group, values)
    }

    /// The Klein four table: −1 at (a,a), (a,ab), (b,a), (b,b), (ab,b),
    /// (ab,ab) and 1 elsewhere.
    pub fn klein4_table() -> Self {
        let g = FiniteGroup::klein4();
        let minus = [(1, 1), (1, 3), (2, 1), (2, 2), (3, 2), (3, 3)];
        GroupCocycleTable::from_fn(g, |x, y| {
            if minus.contains(&(x, y)) {
                Scalar::from_int(-1)
            } else {
                Scalar::one()
            }
        })
        .expect("klein4 cocycle")
    }

    #[inline]
    pub fn value(&self, g: usize, s: usize) -> &Scalar {
        &self.values[g * self.group.order() + s]
    }

    /// γ(x,y)γ(xy,z) = γ(x,yz)γ(y,z) on all triples.
    pub fn cocycle_law(&self) -> CheckResult {
        let g = &self.group;
        let l = &g.names;
        check_tuples("group-cocycle-law", &[l, l, l], |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            self.value(x, y) * self.value(g.mul(x, y), z) == self.value(x, g.mul(y, z)) * self.value(y, z)
        })
    }

    /// γ(g,1) = γ(1,g) = 1.
    pub fn normalization(&self) -> CheckResult {
        let e = self.group.identity;
        check_tuples("group-cocycle-normalized", &[&self.group.names], |t| {
            self.value(t[0], e).is_one() && self.value(e, t[0]).is_one()
        })
    }

    pub fn is_normalized(&self) -> bool {
        self.normalization().passed()
    }

    /// Searches φ: G → μ_N, N = 2|G|, with γ(g,s) = φ(g)φ(s)/φ(gs). Returns
    /// the exponents of the first φ in lexicographic order, or `None`.
    pub fn coboundary_witness(&self) -> Option<Vec<u32>> {
        let g = &self.group;
        let n = g.order();
        let big_n = 2 * n as u32;
        let powers: Vec<Scalar> = (0..big_n).map(|k| Scalar::zeta(big_n, k as i64)).collect();
        // γ as exponents; a value outside μ_N rules out every φ in the search space.
        let mut e = vec![0u32; n * n];
        for (k, v) in self.values.iter().enumerate() {
            e[k] = powers.iter().position(|p| p == v)? as u32;
        }
        let mut phi = vec![0u32; n];
        // Every constraint whose three elements are assigned and one of them is `k`.
        fn consistent(g: &FiniteGroup, e: &[u32], phi: &[u32], k: usize, big_n: u32) -> bool {
            let n = g.order();
            (0..=k).all(|a| {
                (0..=k).all(|b| {
                    let c = g.mul(a, b);
                    c > k || (a != k && b != k && c != k) || (phi[a] + phi[b] + big_n - phi[c]) % big_n == e[a * n + b]
                })
            })
        }
        fn go(g: &FiniteGroup, e: &[u32], phi: &mut Vec<u32>, k: usize, big_n: u32) -> bool {
            if k == g.order() {
                return true;
            }
            for v in 0..big_n {
                phi[k] = v;
                if consistent(g, e, phi, k, big_n) && go(g, e, phi, k + 1, big_n) {
                    return true;
                }
            }
            false
        }
        if go(g, &e, &mut phi, 0, big_n) {
            Some(phi)
        } else {
            None
        }
    }

    pub fn is_coboundary(&self) -> bool {
        self.coboundary_witness().is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein4_table_is_a_cocycle_but_not_a_coboundary() {
        let c = GroupCocycleTable::klein4_table();
        assert!(c.cocycle_law().passed());
        assert!(c.is_normalized());
        assert!(!c.is_coboundary());
    }

    #[test]
    fn coboundary_found() {
        let g = FiniteGroup::cyclic(3);
        // φ(g_k) = ζ_6^k gives γ(x, y) = ζ_6^{x + y - (x+y mod 3)}
        let phi = |k: usize| Scalar::zeta(6, k as i64);
        let c = GroupCocycleTable::from_fn(g.clone(), |x, y| &(&phi(x) * &phi(y)) * &phi(g.mul(x, y)).inv().unwrap())
            .unwrap();
        assert!(c.cocycle_law().passed());
        let w = c.coboundary_witness().unwrap();
        let phi2 = |k: usize| Scalar::zeta(6, w[k] as i64);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(&(&phi2(x) * &phi2(y)) * &phi2(g.mul(x, y)).inv().unwrap(), *c.value(x, y));
            }
        }
        assert!(GroupCocycleTable::trivial(g).is_coboundary());
    }

    #[test]
    fn broken_cocycle_detected() {
        let mut c = GroupCocycleTable::klein4_table();
        c.values[5] = Scalar::one(); // γ(a, a)
        let r = c.cocycle_law();
        assert!(!r.passed());
        assert!(r.witness.is_some());
    }
}
