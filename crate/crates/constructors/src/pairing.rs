//! Hopf pairings H1 × H2 → κ given by a table on basis elements.

use hp_algebra::{check_tuples, CheckResult, HopfAlgebraData};
use hp_scalars::{ExactMatrix, Scalar, SparseVec};

use crate::builders::TorusIndex;
use crate::group::FiniteGroup;
use crate::ConstructorError;

#[derive(Clone, Debug)]
pub struct HopfPairing {
    pub left: HopfAlgebraData,
    pub right: HopfAlgebraData,
    /// `table[a * dim H2 + x] = ⟨e_a, f_x⟩`.
    table: Vec<Scalar>,
}

impl HopfPairing {
    #[inline]
    pub fn value(&self, a: usize, x: usize) -> &Scalar {
        &self.table[a * self.right.dim() + x]
    }

    /// ⟨u, f_x⟩ for `u` in H1.
    pub fn left_vec(&self, u: &SparseVec, x: usize) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, c) in u.iter() {
            let v = self.value(*a, x);
            if !v.is_zero() {
                acc += &(c * v);
            }
        }
        acc
    }

    /// ⟨e_a, v⟩ for `v` in H2.
    pub fn right_vec(&self, a: usize, v: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        for (x, c) in v.iter() {
            let p = self.value(a, *x);
            if !p.is_zero() {
                acc += &(c * p);
            }
        }
        acc
    }

    pub fn table_matrix(&self) -> ExactMatrix {
        let d2 = self.right.dim();
        ExactMatrix::from_triplets(
            self.left.dim(),
            d2,
            self.table.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k / d2, k % d2, v.clone())),
        )
    }
}

/// Every pairing law, exhaustively on basis tuples.
pub fn pairing_checks(h1: &HopfAlgebraData, h2: &HopfAlgebraData, table: &ExactMatrix) -> Vec<CheckResult> {
    let p = HopfPairing { left: h1.clone(), right: h2.clone(), table: dense(h1, h2, table) };
    let (l1, l2) = (h1.labels(), h2.labels());
    vec![
        check_tuples("pairing-product-left", &[l1, l1, l2], |t| {
            let lhs = p.left_vec(h1.mul_basis(t[0], t[1]), t[2]);
            let mut rhs = Scalar::zero();
            for (x1, x2, c) in h2.delta(t[2]) {
                let a = p.value(t[0], *x1);
                if !a.is_zero() {
                    rhs += &(&(c * a) * p.value(t[1], *x2));
                }
            }
            lhs == rhs
        }),
        check_tuples("pairing-product-right", &[l1, l2, l2], |t| {
            let lhs = p.right_vec(t[0], h2.mul_basis(t[1], t[2]));
            let mut rhs = Scalar::zero();
            for (a1, a2, c) in h1.delta(t[0]) {
                let a = p.value(*a1, t[1]);
                if !a.is_zero() {
                    rhs += &(&(c * a) * p.value(*a2, t[2]));
                }
            }
            lhs == rhs
        }),
        check_tuples("pairing-unit", &[l2], |t| p.left_vec(h1.one(), t[0]) == *h2.counit(t[0])),
        check_tuples("pairing-counit", &[l1], |t| p.right_vec(t[0], h2.one()) == *h1.counit(t[0])),
        check_tuples("pairing-antipode", &[l1, l2], |t| {
            p.left_vec(h1.antipode_of(t[0]), t[1]) == p.right_vec(t[0], h2.antipode_of(t[1]))
        }),
    ]
}

fn dense(h1: &HopfAlgebraData, h2: &HopfAlgebraData, table: &ExactMatrix) -> Vec<Scalar> {
    let d2 = h2.dim();
    let mut out = vec![Scalar::zero(); h1.dim() * d2];
    for (r, c, v) in table.entries() {
        out[r * d2 + c] = v.clone();
    }
    out
}

/// Verifies the laws and returns the pairing, or the first violated law.
pub fn hopf_pairing(h1: &HopfAlgebraData, h2: &HopfAlgebraData, table: &ExactMatrix) -> Result<HopfPairing, ConstructorError> {
    if table.rows() != h1.dim() || table.cols() != h2.dim() {
        return Err(ConstructorError::Shape("pairing table shape".into()));
    }
    if let Some(c) = pairing_checks(h1, h2, table).into_iter().find(|c| !c.passed()) {
        return Err(ConstructorError::PairingLawViolation { law: c.name, witness: c.witness.unwrap_or_default() });
    }
    Ok(HopfPairing { left: h1.clone(), right: h2.clone(), table: dense(h1, h2, table) })
}

/// ⟨θ[j], t[k]⟩ = ζ_m^{j·k} on (κC_m)^⊗n.
pub fn torus_pairing_table(m: u32, n: usize) -> ExactMatrix {
    let ti = TorusIndex { m, n };
    let d = ti.size();
    ExactMatrix::from_triplets(
        d,
        d,
        (0..d).flat_map(|j| (0..d).map(move |k| (j, k, Scalar::zeta(m, ti.dot(j, k) as i64)))),
    )
}

/// ⟨θ⊗u_g, t^k⊗p_s⟩ = δ_{g,s} ζ_m^{Σ k_i θ_i} between the smash product
/// and the cosemidirect product built on the same group and torus.
pub fn smash_cosemidirect_pairing_table(g: &FiniteGroup, m: u32, n: usize) -> ExactMatrix {
    let ti = TorusIndex { m, n };
    let gn = g.order();
    let d = ti.size() * gn;
    let mut trip = Vec::new();
    for th in 0..ti.size() {
        for k in 0..ti.size() {
            let z = Scalar::zeta(m, ti.dot(th, k) as i64);
            for x in 0..gn {
                trip.push((th * gn + x, k * gn + x, z.clone()));
            }
        }
    }
    ExactMatrix::from_triplets(d, d, trip)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{circle_group_algebra, truncated_torus};

    #[test]
    fn cyclic_self_pairing() {
        for m in [2, 3] {
            let t = torus_pairing_table(m, 1);
            assert!(hopf_pairing(&circle_group_algebra(m, 1), &truncated_torus(m, 1), &t).is_ok());
        }
    }

    #[test]
    fn scaled_pairing_rejected() {
        let t = torus_pairing_table(3, 1).scale(&Scalar::from_int(2));
        let e = hopf_pairing(&circle_group_algebra(3, 1), &truncated_torus(3, 1), &t).unwrap_err();
        assert!(matches!(e, ConstructorError::PairingLawViolation { .. }));
    }
}
