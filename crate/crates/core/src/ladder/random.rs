use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::Rng;

use super::hom::{quotient, subobject};
use super::{Bar, GradedModule, LadderRep, Vertex};
use crate::linalg::{q, QMatrix, Q};

/// Column bases of the submodule generated by homogeneous elements.
fn generated(m: &GradedModule, gens: &[(i64, Vec<Q>)], p: usize) -> BTreeMap<i64, QMatrix> {
    let mut cols: BTreeMap<i64, Vec<Vec<Q>>> = BTreeMap::new();
    for (d, v) in gens {
        let col = QMatrix::from_columns(v.len(), core::slice::from_ref(v));
        for k in 0..p {
            let img = &m.x_pow(*d, k) * &col;
            if m.dim(d + k as i64) > 0 {
                cols.entry(d + k as i64).or_default().push(img.column(0));
            }
        }
    }
    cols.into_iter()
        .map(|(d, c)| (d, QMatrix::from_columns(m.dim(d), &c).column_basis()))
        .collect()
}

fn random_elements<R: Rng>(m: &GradedModule, count: usize, rng: &mut R) -> Vec<(i64, Vec<Q>)> {
    let degrees: Vec<i64> = m.dims().keys().copied().collect();
    if degrees.is_empty() {
        return Vec::new();
    }
    (0..count)
        .map(|_| {
            let d = degrees[rng.gen_range(0..degrees.len())];
            let v = (0..m.dim(d)).map(|_| q(rng.gen_range(-2..=2))).collect();
            (d, v)
        })
        .collect()
}

/// A quotient of a small free module by a randomly generated submodule.
pub fn random_graded_module<R: Rng>(p: usize, rng: &mut R) -> GradedModule {
    let rank = rng.gen_range(1..=3);
    let free = (0..rank).fold(GradedModule::zero(), |acc, _| {
        acc.direct_sum(&GradedModule::free(rng.gen_range(-2..=2), p))
    });
    let relations = rng.gen_range(0..=2);
    let gens = random_elements(&free, relations, rng);
    let bases = generated(&free, &gens, p)
        .into_iter()
        .map(|(d, b)| (Vertex::new(Bar::Upper, d), b))
        .collect();
    quotient(&LadderRep::upper(p, free), &bases).0.ambient().clone()
}

/// A random object of nil(p): a random module with a randomly generated
/// submodule.
pub fn random_nil_rep<R: Rng>(p: usize, rng: &mut R) -> LadderRep {
    let m = random_graded_module(p, rng);
    let count = rng.gen_range(0..=2);
    let gens = random_elements(&m, count, rng);
    let diag = LadderRep::diagonal(p, m.clone());
    let mut bases: BTreeMap<Vertex, QMatrix> = m
        .dims()
        .iter()
        .map(|(&d, &n)| (Vertex::new(Bar::Upper, d), QMatrix::identity(n)))
        .collect();
    for (d, b) in generated(&m, &gens, p) {
        bases.insert(Vertex::new(Bar::Lower, d), b);
    }
    subobject(&diag, &bases).0
}

#[cfg(test)]
mod tests {
    use super::super::in_nil;
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_objects_lie_in_nil() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for p in 2..=4 {
            for _ in 0..10 {
                let x = random_nil_rep(p, &mut rng);
                assert!(in_nil(&x), "{x:?}");
            }
        }
    }
}
