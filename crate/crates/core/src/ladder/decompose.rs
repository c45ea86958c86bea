use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::{hom, subobject, HomSpace, Morphism};
use super::LadderRep;
use crate::error::{Error, Result};
use crate::linalg::{q, QMatrix, Q};

const ATTEMPTS: usize = 48;
const ISO_ATTEMPTS: usize = 16;

/// Indecomposable summands up to isomorphism, with multiplicities.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<(LadderRep, usize)>,
}

impl Decomposition {
    pub fn count(&self) -> usize {
        self.summands.iter().map(|(_, m)| m).sum()
    }
}

fn trace_form(x: &LadderRep, e: &HomSpace) -> QMatrix {
    let b = e.basis();
    let n = b.len();
    QMatrix::from_fn(n, n, |i, j| {
        x.support()
            .into_iter()
            .fold(Q::zero(), |acc, v| acc + (&b[i].block(v, x, x) * &b[j].block(v, x, x)).trace())
    })
}

/// dim End(X)/rad End(X), the radical being that of the trace form.
pub fn endomorphism_radical_codim(x: &LadderRep) -> usize {
    let e = hom(x, x);
    trace_form(x, &e).rank()
}

fn quotient_is_commutative(x: &LadderRep, e: &HomSpace) -> bool {
    let b = e.basis();
    let pair = |f: &Morphism| -> Vec<Q> {
        b.iter()
            .map(|g| {
                x.support()
                    .into_iter()
                    .fold(Q::zero(), |acc, v| acc + (&f.block(v, x, x) * &g.block(v, x, x)).trace())
            })
            .collect()
    };
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let ab = super::hom::compose(&b[i], &b[j]);
            let ba = super::hom::compose(&b[j], &b[i]);
            let c = ab.add(&ba.scale(&-Q::one()), x, x);
            if pair(&c).iter().any(|t| !t.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// Splits X along the generalized eigenspaces of a, if that is a proper
/// decomposition.
fn fitting_split(x: &LadderRep, a: &Morphism) -> Option<(LadderRep, LadderRep)> {
    let verts = x.support();
    let mut roots: Vec<Q> = Vec::new();
    for &v in &verts {
        for r in a.block(v, x, x).charpoly().rational_roots() {
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    let total = x.total_dim();
    for lambda in roots {
        let mut kers = BTreeMap::new();
        let mut ims = BTreeMap::new();
        let mut kdim = 0;
        for &v in &verts {
            let n = x.dim(v);
            let b = &a.block(v, x, x) - &QMatrix::identity(n).scale(&lambda);
            let bn = b.pow(n as u64);
            let k = bn.kernel_matrix();
            kdim += k.cols();
            kers.insert(v, k);
            ims.insert(v, bn.column_basis());
        }
        if kdim > 0 && kdim < total {
            return Some((subobject(x, &kers).0, subobject(x, &ims).0));
        }
    }
    None
}

fn split(x: &LadderRep, rng: &mut ChaCha8Rng) -> Result<Vec<LadderRep>> {
    if x.is_zero() {
        return Ok(Vec::new());
    }
    let e = hom(x, x);
    let form = trace_form(x, &e);
    if form.rank() <= 1 {
        return Ok(alloc::vec![x.clone()]);
    }
    let n = e.dim();
    let mut candidates: Vec<Morphism> = e.basis().to_vec();
    for _ in 0..ATTEMPTS {
        let c: Vec<Q> = (0..n).map(|_| q(rng.gen_range(-4..=4))).collect();
        candidates.push(e.combination(&c));
    }
    for a in &candidates {
        if let Some((k, i)) = fitting_split(x, a) {
            let mut out = split(&k, rng)?;
            out.extend(split(&i, rng)?);
            return Ok(out);
        }
    }
    if quotient_is_commutative(x, &e) {
        Ok(alloc::vec![x.clone()])
    } else {
        Err(Error::DecompositionStalled(ATTEMPTS))
    }
}

fn iso_with(x: &LadderRep, y: &LadderRep, rng: &mut ChaCha8Rng) -> bool {
    if x.dim_vector() != y.dim_vector() {
        return false;
    }
    if x.is_zero() {
        return true;
    }
    let h = hom(x, y);
    if h.dim() == 0 {
        return false;
    }
    if h.basis().iter().any(|f| f.is_iso(x, y)) {
        return true;
    }
    (0..ISO_ATTEMPTS).any(|_| {
        let c: Vec<Q> = (0..h.dim()).map(|_| q(rng.gen_range(-50..=50))).collect();
        h.combination(&c).is_iso(x, y)
    })
}

/// Randomized test; a negative answer is wrong with negligible probability.
pub fn is_isomorphic(x: &LadderRep, y: &LadderRep) -> bool {
    iso_with(x, y, &mut ChaCha8Rng::seed_from_u64(0x150))
}

pub fn is_indecomposable(x: &LadderRep) -> bool {
    !x.is_zero() && matches!(split(x, &mut ChaCha8Rng::seed_from_u64(0x1dec)), Ok(v) if v.len() == 1)
}

/// Krull–Schmidt decomposition over Q.
pub fn decompose(x: &LadderRep, seed: u64) -> Result<Decomposition> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts = split(x, &mut rng)?;
    let mut groups: Vec<(LadderRep, usize)> = Vec::new();
    for part in parts {
        match groups.iter_mut().find(|(r, _)| iso_with(r, &part, &mut rng)) {
            Some(g) => g.1 += 1,
            None => groups.push((part, 1)),
        }
    }
    groups.sort_by_key(|a| a.0.dim_vector());
    Ok(Decomposition { summands: groups })
}

#[cfg(test)]
mod tests {
    use super::super::{projective, simple, Bar};
    use super::*;

    #[test]
    fn sums_of_projectives_and_simples() {
        let p = 3;
        let a = projective(Bar::Lower, 0, p);
        let s = simple(Bar::Upper, 1, p);
        let x = a.direct_sum(&s).direct_sum(&a).direct_sum(&projective(Bar::Upper, 0, p));
        let d = decompose(&x, 7).unwrap();
        assert_eq!(d.count(), 4);
        assert_eq!(d.summands.len(), 3);
        assert!(d.summands.iter().any(|(r, m)| *m == 2 && is_isomorphic(r, &a)));
        assert!(is_indecomposable(&a));
        assert!(!is_indecomposable(&x));
        assert_eq!(endomorphism_radical_codim(&a.direct_sum(&a)), 4);
    }

    #[test]
    fn isomorphism_detects_shift() {
        let a = projective(Bar::Upper, 0, 3);
        assert!(is_isomorphic(&a, &a.shift_s(0)));
        assert!(!is_isomorphic(&a, &a.shift_s(1)));
        assert!(!is_isomorphic(&simple(Bar::Upper, 0, 3), &simple(Bar::Lower, 0, 3)));
    }
}
