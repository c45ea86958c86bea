//! K0 of coherent sheaves as the free lattice on the line bundles O(x) with
//! 0 ≤ x ≤ c, in the fixed order (0, x1, x2, 2x2, x3, …, (p−1)x3, c).

use alloc::format;
use alloc::vec::Vec;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::homspaces::{euler_form, ext1_dim};
use crate::lgroup::{LElt, WeightTriple};
use crate::linalg::IntMatrix;
use crate::report::Report;

/// Coefficient vector over the canonical basis.
pub type K0Class = Vec<i64>;

#[derive(Clone, Debug)]
pub struct K0Lattice {
    w: WeightTriple,
    basis: Vec<LElt>,
    gram: IntMatrix,
    gram_inv: Vec<Vec<i64>>,
}

pub fn canonical_basis(w: WeightTriple) -> Vec<LElt> {
    let p = w.p(3);
    let mut b = alloc::vec![LElt::zero(w), LElt::x(w, 1), LElt::x(w, 2), LElt::x(w, 2).smul(2)];
    b.extend((1..p).map(|k| LElt::x(w, 3).smul(k)));
    b.push(LElt::c(w));
    b
}

impl K0Lattice {
    pub fn new(p: i64) -> Result<Self> {
        let w = WeightTriple::two_three(p)?;
        let basis = canonical_basis(w);
        let n = basis.len();
        let gram = IntMatrix::from_fn(n, n, |i, j| euler_form(basis[i], basis[j]).into());
        let inv = gram.inverse_unimodular()?;
        let gram_inv = (0..n)
            .map(|i| (0..n).map(|j| inv.get(i, j).to_i64().expect("small inverse")).collect())
            .collect();
        Ok(K0Lattice { w, basis, gram, gram_inv })
    }

    pub fn weights(&self) -> WeightTriple {
        self.w
    }

    pub fn basis(&self) -> &[LElt] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// G_ij = ⟨b_i, b_j⟩.
    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    /// Whether Ext^1 vanishes between all basis elements.
    pub fn ext_free(&self) -> bool {
        self.basis.iter().all(|&a| self.basis.iter().all(|&b| ext1_dim(a, b) == 0))
    }

    /// Coefficients of [O(x)], from ⟨b_i, O(x)⟩ = Σ_j G_ij a_j.
    pub fn class_of(&self, x: LElt) -> K0Class {
        let rhs: Vec<i64> = self.basis.iter().map(|&b| euler_form(b, x)).collect();
        self.gram_inv
            .iter()
            .map(|row| row.iter().zip(&rhs).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// The Euler form ⟨u, v⟩ = uᵀ G v.
    pub fn pair(&self, u: &[i64], v: &[i64]) -> i64 {
        u.iter()
            .enumerate()
            .flat_map(|(i, a)| v.iter().enumerate().map(move |(j, b)| (i, j, a * b)))
            .map(|(i, j, ab)| ab * self.gram.get(i, j).to_i64().unwrap())
            .sum()
    }

    pub fn rank_of(&self, v: &[i64]) -> i64 {
        v.iter().sum()
    }

    pub fn deg_of(&self, v: &[i64]) -> i64 {
        v.iter().zip(&self.basis).map(|(a, b)| a * b.degree()).sum()
    }

    /// Matrix of the shift by ω, acting on coefficient columns. With
    /// G_ij = ⟨b_i, b_j⟩ Serre duality gives Φ = −G⁻¹Gᵀ.
    pub fn coxeter(&self) -> IntMatrix {
        let n = self.rank();
        let inv = IntMatrix::from_fn(n, n, |i, j| self.gram_inv[i][j].into());
        -&(&inv * &self.gram.transpose())
    }
}

pub fn apply(m: &IntMatrix, v: &[i64]) -> K0Class {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_i64().unwrap() * v[j]).sum())
        .collect()
}

fn add(a: &[i64], b: &[i64], s: i64) -> K0Class {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

/// Random element with coefficients in |a_i| ≤ 3p_i and |m| ≤ 2.
pub fn random_elt(w: WeightTriple, rng: &mut impl Rng) -> LElt {
    let a = [0, 1, 2].map(|i| {
        let b = 3 * w.p(i + 1);
        rng.gen_range(-b..=b)
    });
    LElt::normalize(w, a, rng.gen_range(-2..=2))
}

/// Exact sequences resolved in K0: the bicartesian square of a pair of
/// monomials x1, x2^n and the four expressions of an Auslander bundle class.
pub fn sequence_additivity_suite(p: i64, samples: usize, seed: u64) -> Result<Report> {
    let k0 = K0Lattice::new(p)?;
    let w = k0.weights();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let om = LElt::omega(w);
    let x = |i| LElt::x(w, i);
    let mut r = Report::new(format!("K0 additivity of exact sequences, p={p}"));
    let mut bad_a = Vec::new();
    let mut bad_b = Vec::new();
    for s in 0..samples {
        let l = if s == 0 { LElt::zero(w) } else { random_elt(w, &mut rng) };
        let cl = |y: LElt| k0.class_of(l + y);
        for n in 1..=2 {
            let nx2 = x(2).smul(n);
            let v = add(&add(&add(&cl(LElt::zero(w)), &cl(x(1)), -1), &cl(nx2), -1), &cl(x(1) + nx2), 1);
            if v.iter().any(|&c| c != 0) {
                bad_a.push(format!("x={l} n={n}"));
            }
        }
        let e = add(&cl(om), &cl(LElt::zero(w)), 1);
        for (name, y) in [("x1", x(1)), ("x2", x(2)), ("x3", x(3)), ("-w", -om)] {
            let lhs = add(&cl(-y), &cl(y + om), 1);
            if lhs != e {
                bad_b.push(format!("x={l} i={name}"));
            }
        }
    }
    r.check(
        bad_a.is_empty(),
        "[L]-[L(x1)]-[L(nx2)]+[L(x1+nx2)] = 0",
        format!("{samples} samples, n in 1..2, {} violations {:?}", bad_a.len(), bad_a.first()),
    );
    r.check(
        bad_b.is_empty(),
        "[L(-y)]+[L(y+w)] = [L(w)]+[L]",
        format!(
            "{samples} samples, y in x1,x2,x3,-w, {} violations {:?}",
            bad_b.len(),
            bad_b.first()
        ),
    );
    Ok(r)
}

/// rank K0(nil(p)) minus rank K0(coh X): 2(p−1) − (p+4).
pub fn rank_gap(p: i64) -> i64 {
    2 * (p - 1) - (p + 4)
}

/// Gram unimodularity, ext-freeness and the Coxeter action.
pub fn lattice_report(p: i64) -> Result<Report> {
    let k0 = K0Lattice::new(p)?;
    let w = k0.weights();
    let mut r = Report::new(format!("K0 lattice, p={p}"));
    let det = k0.gram().det();
    r.check(
        k0.rank() as i64 == p + 4 && (det == 1.into() || det == (-1).into()),
        "Gram matrix unimodular of size p+4",
        format!("size {}, det {det}", k0.rank()),
    );
    r.check(k0.ext_free(), "Ext^1 vanishes on the basis", "");
    let phi = k0.coxeter();
    let om = LElt::omega(w);
    let ok = crate::homspaces::nonneg_up_to(w, 2 * w.lcm())
        .into_iter()
        .all(|x| apply(&phi, &k0.class_of(x)) == k0.class_of(x + om));
    r.check(ok, "Coxeter matrix realizes the shift by omega", "");
    r.check(rank_gap(p) == p - 6, "rank gap 2(p-1) - (p+4) = p - 6", format!("{}", rank_gap(p)));
    Ok(r)
}

impl From<Error> for Report {
    fn from(e: Error) -> Report {
        let mut r = Report::new("error");
        r.check(false, "error", format!("{e}"));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn basis_and_gram() {
        for p in 2..=12 {
            let k0 = K0Lattice::new(p).unwrap();
            assert_eq!(k0.rank() as i64, p + 4);
            let g = k0.gram();
            for i in 0..g.rows() {
                assert_eq!(g.get(i, i), &1.into());
                for j in 0..i {
                    assert_eq!(g.get(i, j), &0.into(), "upper unitriangular");
                }
            }
            assert!(k0.ext_free());
        }
    }

    #[test]
    fn classes() {
        let k0 = K0Lattice::new(5).unwrap();
        for (i, &b) in k0.basis().iter().enumerate() {
            let mut e = vec![0; k0.rank()];
            e[i] = 1;
            assert_eq!(k0.class_of(b), e);
        }
        let w = k0.weights();
        let v = k0.class_of(LElt::c(w) + LElt::x(w, 3));
        assert_eq!(k0.rank_of(&v), 1);
        assert_eq!(k0.deg_of(&v), 36);
    }

    #[test]
    fn coxeter_action() {
        for p in 2..=9 {
            assert!(lattice_report(p).unwrap().passed());
        }
        let k0 = K0Lattice::new(6).unwrap();
        let phi = k0.coxeter();
        assert!(phi.pow(6).is_identity());
        assert!(!phi.pow(3).is_identity());
    }

    #[test]
    fn sequences() {
        for p in 2..=9 {
            let r = sequence_additivity_suite(p, 100, 7).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn rank_gaps() {
        assert_eq!(rank_gap(6), 0);
        assert_eq!(rank_gap(2), -4);
        assert_eq!(rank_gap(9), 3);
    }
}
