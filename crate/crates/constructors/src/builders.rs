//! Group algebras, truncated tori, smash products and cosemidirect products.

use hp_algebra::{check_tuples, CheckResult, CoalgebraData, HopfAlgebraData, LinMap, StructuredAlgebra};
use hp_scalars::{ExactMatrix, Scalar, SparseVec};

use crate::group::FiniteGroup;
use crate::ConstructorError;

/// κG with basis `u_g`, grouplike, `S(u_g) = u_{g⁻¹}`.
pub fn group_algebra(g: &FiniteGroup) -> HopfAlgebraData {
    let n = g.order();
    let labels: Vec<String> = g.names.iter().map(|x| format!("u_{x}")).collect();
    let algebra =
        StructuredAlgebra::from_fn(labels.clone(), SparseVec::unit(g.identity), |a, b| SparseVec::unit(g.mul(a, b)));
    let antipode = ExactMatrix::from_columns(n, (0..n).map(|a| SparseVec::unit(g.inv(a))).collect());
    HopfAlgebraData::new(algebra, CoalgebraData::grouplike(labels), antipode)
}

/// Exponent vectors `(k_1, …, k_n)`, `0 ≤ k_i < m`, indexed with the first
/// coordinate most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusIndex {
    pub m: u32,
    pub n: usize,
}

impl TorusIndex {
    pub fn size(&self) -> usize {
        (self.m as usize).pow(self.n as u32)
    }

    pub fn encode(&self, k: &[u32]) -> usize {
        k.iter().fold(0, |acc, &x| acc * self.m as usize + (x % self.m) as usize)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<u32> {
        let mut k = vec![0; self.n];
        for slot in k.iter_mut().rev() {
            *slot = (idx % self.m as usize) as u32;
            idx /= self.m as usize;
        }
        k
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.decode(a), self.decode(b));
        self.encode(&x.iter().zip(&y).map(|(p, q)| (p + q) % self.m).collect::<Vec<_>>())
    }

    pub fn neg(&self, a: usize) -> usize {
        self.encode(&self.decode(a).iter().map(|p| (self.m - p) % self.m).collect::<Vec<_>>())
    }

    /// Σ k_i θ_i mod m.
    pub fn dot(&self, a: usize, b: usize) -> u32 {
        let (x, y) = (self.decode(a), self.decode(b));
        (x.iter().zip(&y).map(|(p, q)| (p * q) as u64).sum::<u64>() % self.m as u64) as u32
    }

    pub fn label(&self, symbol: &str, idx: usize) -> String {
        let k = self.decode(idx);
        format!("{symbol}[{}]", k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
    }
}

fn torus_with_symbol(m: u32, n: usize, symbol: &str) -> HopfAlgebraData {
    assert!(m >= 1 && n >= 1, "torus needs m, n ≥ 1");
    let ti = TorusIndex { m, n };
    let d = ti.size();
    let labels: Vec<String> = (0..d).map(|i| ti.label(symbol, i)).collect();
    let algebra = StructuredAlgebra::from_fn(labels.clone(), SparseVec::unit(0), |a, b| SparseVec::unit(ti.add(a, b)));
    let antipode = ExactMatrix::from_columns(d, (0..d).map(|a| SparseVec::unit(ti.neg(a))).collect());
    HopfAlgebraData::new(algebra, CoalgebraData::grouplike(labels), antipode)
}

/// (κC_m)^⊗n on monomials `t[k_1,…,k_n]` with `t_i^m = 1`.
pub fn truncated_torus(m: u32, n: usize) -> HopfAlgebraData {
    torus_with_symbol(m, n, "t")
}

/// The same Hopf algebra on group elements `θ[j_1,…,j_n]` of C_m^n, each
/// `j_i` standing for the angle 2πj_i/m.
pub fn circle_group_algebra(m: u32, n: usize) -> HopfAlgebraData {
    torus_with_symbol(m, n, "θ")
}

/// A left action of κG on an algebra L, `action(u_g ⊗ l) = g·l`.
#[derive(Clone, Debug)]
pub struct ModuleAlgebraAction {
    pub group: FiniteGroup,
    pub carrier: HopfAlgebraData,
    /// Source factors `[|G|, dim L]`.
    pub action: LinMap,
}

impl ModuleAlgebraAction {
    pub fn act(&self, g: usize, l: usize) -> &SparseVec {
        self.action.at(&[g, l])
    }

    pub fn act_vec(&self, g: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (l, c) in v.iter() {
            out = out.axpy(c, self.act(g, *l));
        }
        out
    }

    /// Every law a smash product needs: module algebra and module coalgebra.
    pub fn verify(&self) -> Vec<CheckResult> {
        let g = &self.group;
        let l = &self.carrier;
        let gl = &g.names;
        let ll = l.labels();
        let one = l.one();
        vec![
            check_tuples("action-identity", &[ll], |t| self.act(g.identity, t[0]) == &SparseVec::unit(t[0])),
            check_tuples("action-associative", &[gl, gl, ll], |t| {
                self.act(g.mul(t[0], t[1]), t[2]) == &self.act_vec(t[0], self.act(t[1], t[2]))
            }),
            check_tuples("action-unital", &[gl], |t| &self.act_vec(t[0], one) == one),
            check_tuples("action-multiplicative", &[gl, ll, ll], |t| {
                self.act_vec(t[0], l.mul_basis(t[1], t[2])) == l.mul(self.act(t[0], t[1]), self.act(t[0], t[2]))
            }),
            check_tuples("action-comultiplicative", &[gl, ll], |t| {
                let lhs = l.delta_vec(self.act(t[0], t[1]));
                let d = l.dim();
                let mut rhs = SparseVec::new();
                for (a, b, c) in l.delta(t[1]) {
                    rhs = rhs.axpy(c, &hp_algebra::tensor_vec(self.act(t[0], *a), self.act(t[0], *b), d));
                }
                lhs == rhs
            }),
            check_tuples("action-counital", &[gl, ll], |t| {
                l.coalgebra.apply_counit(self.act(t[0], t[1])) == *l.counit(t[1])
            }),
        ]
    }
}

/// The action of G ⊂ S_n on (κC_m)^⊗n by permuting tensor positions:
/// `(g·θ)_j = θ_{g⁻¹(j)}`.
pub fn permutation_action(
    g: &FiniteGroup,
    perm: &[Vec<usize>],
    carrier: HopfAlgebraData,
    m: u32,
) -> Result<ModuleAlgebraAction, ConstructorError> {
    let n = perm.first().map_or(0, |p| p.len());
    let ti = TorusIndex { m, n };
    if ti.size() != carrier.dim() {
        return Err(ConstructorError::Shape(format!("carrier has dim {}, expected {}", carrier.dim(), ti.size())));
    }
    if !crate::group::is_permutation_embedding(g, perm) {
        return Err(ConstructorError::InvalidGroup("not a permutation representation".into()));
    }
    let action = LinMap::from_fn(vec![g.order(), ti.size()], ti.size(), |t| {
        let ginv = &perm[g.inv(t[0])];
        let k = ti.decode(t[1]);
        SparseVec::unit(ti.encode(&(0..n).map(|j| k[ginv[j]]).collect::<Vec<_>>()))
    });
    Ok(ModuleAlgebraAction { group: g.clone(), carrier, action })
}

/// Every group element acts as the identity.
pub fn trivial_action(g: &FiniteGroup, carrier: HopfAlgebraData) -> ModuleAlgebraAction {
    let d = carrier.dim();
    let action = LinMap::from_fn(vec![g.order(), d], d, |t| SparseVec::unit(t[1]));
    ModuleAlgebraAction { group: g.clone(), carrier, action }
}

fn first_failure(checks: Vec<CheckResult>) -> Option<(String, Vec<String>)> {
    checks.into_iter().find(|c| !c.passed()).map(|c| (c.name, c.witness.unwrap_or_default()))
}

/// L ⋊ κG on `l ⊗ u_g` (index `l·|G| + g`):
/// `(l⊗g)(l′⊗g′) = l(g·l′) ⊗ gg′`, `Δ(l⊗g) = Σ (l_(1)⊗g) ⊗ (l_(2)⊗g)`,
/// `S(l⊗g) = (g⁻¹·S(l)) ⊗ g⁻¹`.
pub fn smash_product(act: &ModuleAlgebraAction) -> Result<HopfAlgebraData, ConstructorError> {
    let l = &act.carrier;
    let g = &act.group;
    if !l.is_cocommutative() {
        return Err(ConstructorError::NotCocommutative);
    }
    if let Some((law, witness)) = first_failure(act.verify()) {
        return Err(ConstructorError::NotModuleAlgebra { law, witness });
    }
    let gn = g.order();
    let d = l.dim() * gn;
    let labels: Vec<String> =
        (0..d).map(|x| format!("{}⊗u_{}", l.labels()[x / gn], g.names[x % gn])).collect();
    let unit = SparseVec::from_terms(l.one().iter().map(|(i, c)| (i * gn + g.identity, c.clone())).collect());
    let algebra = StructuredAlgebra::from_fn(labels.clone(), unit, |x, y| {
        let (l1, g1, l2, g2) = (x / gn, x % gn, y / gn, y % gn);
        let prod = l.mul(&SparseVec::unit(l1), act.act(g1, l2));
        let gg = g.mul(g1, g2);
        prod.map_indices(|i| i * gn + gg)
    });
    let comult = (0..d)
        .map(|x| {
            let (lx, gx) = (x / gn, x % gn);
            l.delta(lx).iter().map(|(a, b, c)| (a * gn + gx, b * gn + gx, c.clone())).collect()
        })
        .collect();
    let counit = (0..d).map(|x| l.counit(x / gn).clone()).collect();
    let coalgebra = CoalgebraData::new(labels, comult, counit);
    let antipode = (0..d)
        .map(|x| {
            let gi = g.inv(x % gn);
            act.act_vec(gi, l.antipode_of(x / gn)).map_indices(|i| i * gn + gi)
        })
        .collect();
    Ok(HopfAlgebraData::new(algebra, coalgebra, ExactMatrix::from_columns(d, antipode)))
}

/// A left (κG)*-coaction on L written as `δ(l) = Σ_g p_g ⊗ δ_g(l)`; the
/// target index is `g·dim L + l′`.
#[derive(Clone, Debug)]
pub struct GroupCoaction {
    pub group: FiniteGroup,
    pub carrier: HopfAlgebraData,
    pub coaction: LinMap,
}

impl GroupCoaction {
    /// `δ_g(e_l)`.
    pub fn component(&self, g: usize, l: usize) -> SparseVec {
        let d = self.carrier.dim();
        let lo = g * d;
        SparseVec::from_terms(
            self.coaction.at(&[l]).iter().filter(|(i, _)| *i >= lo && *i < lo + d).map(|(i, c)| (i - lo, c.clone())).collect(),
        )
    }

    fn component_vec(&self, g: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (l, c) in v.iter() {
            out = out.axpy(c, &self.component(g, *l));
        }
        out
    }

    /// Comodule-coalgebra and comodule-algebra laws.
    pub fn verify(&self) -> Vec<CheckResult> {
        let g = &self.group;
        let l = &self.carrier;
        let d = l.dim();
        let gl = &g.names;
        let ll = l.labels();
        let comp: Vec<Vec<SparseVec>> = (0..g.order()).map(|x| (0..d).map(|i| self.component(x, i)).collect()).collect();
        let cv = |x: usize, v: &SparseVec| {
            let mut out = SparseVec::new();
            for (i, c) in v.iter() {
                out = out.axpy(c, &comp[x][*i]);
            }
            out
        };
        vec![
            check_tuples("coaction-coassociative", &[gl, gl, ll], |t| {
                comp[g.mul(t[0], t[1])][t[2]] == cv(t[1], &comp[t[0]][t[2]])
            }),
            check_tuples("coaction-counital", &[ll], |t| comp[g.identity][t[0]] == SparseVec::unit(t[0])),
            check_tuples("coaction-comultiplicative", &[gl, ll], |t| {
                let lhs = l.delta_vec(&comp[t[0]][t[1]]);
                let mut rhs = SparseVec::new();
                for (a, b, c) in l.delta(t[1]) {
                    rhs = rhs.axpy(c, &hp_algebra::tensor_vec(&comp[t[0]][*a], &comp[t[0]][*b], d));
                }
                lhs == rhs
            }),
            check_tuples("coaction-counital-coalgebra", &[gl, ll], |t| {
                l.coalgebra.apply_counit(&comp[t[0]][t[1]]) == *l.counit(t[1])
            }),
            check_tuples("coaction-multiplicative", &[gl, ll, ll], |t| {
                cv(t[0], l.mul_basis(t[1], t[2])) == l.mul(&comp[t[0]][t[1]], &comp[t[0]][t[2]])
            }),
            check_tuples("coaction-unital", &[gl], |t| &cv(t[0], l.one()) == l.one()),
        ]
    }
}

/// δ_g places the exponent k_i at position g⁻¹(i), so that δ_{sr} = δ_r∘δ_s.
pub fn torus_coaction(g: &FiniteGroup, perm: &[Vec<usize>], carrier: HopfAlgebraData, m: u32) -> Result<GroupCoaction, ConstructorError> {
    let n = perm.first().map_or(0, |p| p.len());
    let ti = TorusIndex { m, n };
    let d = ti.size();
    if d != carrier.dim() {
        return Err(ConstructorError::Shape(format!("carrier has dim {}, expected {d}", carrier.dim())));
    }
    if !crate::group::is_permutation_embedding(g, perm) {
        return Err(ConstructorError::InvalidGroup("not a permutation representation".into()));
    }
    let coaction = LinMap::from_fn(vec![d], g.order() * d, |t| {
        let k = ti.decode(t[0]);
        SparseVec::from_terms(
            (0..g.order())
                .map(|x| (x * d + ti.encode(&(0..n).map(|j| k[perm[x][j]]).collect::<Vec<_>>()), Scalar::one()))
                .collect(),
        )
    });
    Ok(GroupCoaction { group: g.clone(), carrier, coaction })
}

/// L >◁ (κG)* on `l ⊗ p_g` (index `l·|G| + g`): componentwise product,
/// `Δ(l⊗p_g) = Σ_s (l_(1)⊗p_s) ⊗ (δ_s(l_(2))⊗p_{s⁻¹g})`,
/// `S(l⊗p_s) = δ_s(S(l)) ⊗ p_{s⁻¹}`.
pub fn cosemidirect_product(co: &GroupCoaction) -> Result<HopfAlgebraData, ConstructorError> {
    if let Some((law, witness)) = first_failure(co.verify()) {
        return Err(ConstructorError::NotComoduleCoalgebra { law, witness });
    }
    let l = &co.carrier;
    let g = &co.group;
    let gn = g.order();
    let d = l.dim() * gn;
    let labels: Vec<String> = (0..d).map(|x| format!("{}⊗p_{}", l.labels()[x / gn], g.names[x % gn])).collect();
    let unit = SparseVec::from_terms(
        l.one().iter().flat_map(|(i, c)| (0..gn).map(move |s| (i * gn + s, c.clone()))).collect(),
    );
    let algebra = StructuredAlgebra::from_fn(labels.clone(), unit, |x, y| {
        if x % gn != y % gn {
            return SparseVec::new();
        }
        l.mul_basis(x / gn, y / gn).map_indices(|i| i * gn + x % gn)
    });
    let comps: Vec<Vec<SparseVec>> = (0..gn).map(|s| (0..l.dim()).map(|i| co.component(s, i)).collect()).collect();
    let comult = (0..d)
        .map(|x| {
            let (lx, gx) = (x / gn, x % gn);
            let mut terms = Vec::new();
            for s in 0..gn {
                let rest = g.mul(g.inv(s), gx);
                for (a, b, c) in l.delta(lx) {
                    for (b2, c2) in comps[s][*b].iter() {
                        terms.push((a * gn + s, b2 * gn + rest, c * c2));
                    }
                }
            }
            terms
        })
        .collect();
    let counit = (0..d)
        .map(|x| if x % gn == g.identity { l.counit(x / gn).clone() } else { Scalar::zero() })
        .collect();
    let coalgebra = CoalgebraData::new(labels, comult, counit);
    let antipode = (0..d)
        .map(|x| {
            let s = x % gn;
            let si = g.inv(s);
            co.component_vec(s, l.antipode_of(x / gn)).map_indices(|i| i * gn + si)
        })
        .collect();
    Ok(HopfAlgebraData::new(algebra, coalgebra, ExactMatrix::from_columns(d, antipode)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hp_algebra::{all_pass, validate_hopf};

    #[test]
    fn torus_index_round_trip() {
        let ti = TorusIndex { m: 3, n: 2 };
        for i in 0..9 {
            assert_eq!(ti.encode(&ti.decode(i)), i);
        }
        assert_eq!(ti.add(ti.encode(&[2, 1]), ti.encode(&[2, 2])), ti.encode(&[1, 0]));
        assert_eq!(ti.label("t", 5), "t[1,2]");
    }

    #[test]
    fn z2_swap_products_validate() {
        let g = FiniteGroup::z2();
        let perm = g.regular_embedding();
        let act = permutation_action(&g, &perm, circle_group_algebra(2, 2), 2).unwrap();
        let h = smash_product(&act).unwrap();
        assert_eq!(h.dim(), 8);
        assert!(all_pass(&validate_hopf(&h)));
        let co = torus_coaction(&g, &perm, truncated_torus(2, 2), 2).unwrap();
        let k = cosemidirect_product(&co).unwrap();
        assert_eq!(k.dim(), 8);
        assert!(all_pass(&validate_hopf(&k)));
    }
}
