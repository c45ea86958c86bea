use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::hom::{cokernel, kernel, Morphism};
use super::{projective, unit_vector, Bar, GradedModule, LadderRep, Vertex};
use crate::error::{Error, Result};
use crate::linalg::{complement_indices, QMatrix, Q};

/// The map P(bar, d) → X sending the generator to `elem` (in M_d for the
/// upper bar, in U_d for the lower bar).
fn generator_map(x: &LadderRep, bar: Bar, d: i64, elem: &[Q]) -> (LadderRep, Morphism) {
    let p = x.p();
    let proj = projective(bar, d, p);
    let mut blocks = Vec::new();
    let base = QMatrix::from_columns(elem.len(), &[elem.to_vec()]);
    for k in 0..p {
        let deg = d + k as i64;
        match bar {
            Bar::Upper => blocks.push((Vertex::new(Bar::Upper, deg), &x.ambient().x_pow(d, k) * &base)),
            Bar::Lower => {
                let u = &x.sub().x_pow(d, k) * &base;
                blocks.push((Vertex::new(Bar::Upper, deg), &x.iota(deg) * &u));
                blocks.push((Vertex::new(Bar::Lower, deg), u));
            }
        }
    }
    (proj, Morphism::from_blocks(blocks))
}

/// The map X → P(bar, d − p + 1) determined by a functional φ on M_d; for
/// the upper bar φ must vanish on ι(U_d).
fn functional_map(x: &LadderRep, bar: Bar, d: i64, phi: &[Q]) -> (LadderRep, Morphism) {
    let p = x.p();
    let e = d - p as i64 + 1;
    let proj = projective(bar, e, p);
    let row = QMatrix::from_rows(alloc::vec![phi.to_vec()]).expect("one row");
    let mut blocks = Vec::new();
    for k in 0..p {
        let deg = e + k as i64;
        let m = &row * &x.ambient().x_pow(deg, p - 1 - k);
        if bar == Bar::Lower {
            blocks.push((Vertex::new(Bar::Lower, deg), &m * &x.iota(deg)));
        }
        blocks.push((Vertex::new(Bar::Upper, deg), m));
    }
    (proj, Morphism::from_blocks(blocks))
}

fn sum_from(x: &LadderRep, parts: &[(LadderRep, Morphism)]) -> (LadderRep, Morphism) {
    let objs: Vec<LadderRep> = parts.iter().map(|(o, _)| o.clone()).collect();
    let total = LadderRep::sum_all(x.p(), &objs);
    let blocks = total.support().into_iter().map(|v| {
        let m = parts
            .iter()
            .fold(QMatrix::zeros(x.dim(v), 0), |acc, (o, f)| acc.hstack(&f.block(v, o, x)));
        (v, m)
    });
    let f = Morphism::from_blocks(blocks.collect::<Vec<_>>());
    (total, f)
}

fn sum_into(x: &LadderRep, parts: &[(LadderRep, Morphism)]) -> (LadderRep, Morphism) {
    let objs: Vec<LadderRep> = parts.iter().map(|(o, _)| o.clone()).collect();
    let total = LadderRep::sum_all(x.p(), &objs);
    let blocks = x.support().into_iter().map(|v| {
        let m = parts
            .iter()
            .fold(QMatrix::zeros(0, x.dim(v)), |acc, (o, f)| acc.vstack(&f.block(v, x, o)));
        (v, m)
    });
    let f = Morphism::from_blocks(blocks.collect::<Vec<_>>());
    (total, f)
}

/// Lifts of a basis of the top, as (generating vertex, element).
fn top_generators(x: &LadderRep) -> Vec<(Vertex, Vec<Q>)> {
    let mut gens = Vec::new();
    for v in x.support() {
        let d = v.degree;
        let n = x.dim(v);
        let rad = match v.bar {
            Bar::Upper => x.ambient().x(d - 1).hstack(&x.iota(d)),
            Bar::Lower => x.sub().x(d - 1),
        };
        for i in complement_indices(&rad.column_basis()) {
            gens.push((v, unit_vector(n, i)));
        }
    }
    gens
}

fn cover_with_generators(x: &LadderRep) -> (LadderRep, Morphism, Vec<(Vertex, Vec<Q>)>) {
    let gens = top_generators(x);
    let parts: Vec<_> = gens.iter().map(|(v, e)| generator_map(x, v.bar, v.degree, e)).collect();
    let (p, f) = sum_from(x, &parts);
    (p, f, gens)
}

/// Minimal projective cover.
pub fn proj_cover(x: &LadderRep) -> (LadderRep, Morphism) {
    let (p, f, _) = cover_with_generators(x);
    (p, f)
}

/// Kernel of the minimal projective cover.
pub fn syzygy(x: &LadderRep) -> LadderRep {
    let (p, f) = proj_cover(x);
    kernel(&f, &p, x).0
}

/// Functionals on a space of dimension n dual to a basis of the subspace
/// spanned by the columns of `s`.
fn dual_functionals(s: &QMatrix, n: usize) -> Vec<Vec<Q>> {
    let s = s.column_basis();
    let comp = complement_indices(&s);
    let t = s.hstack(&QMatrix::identity(n).select_cols(&comp)).inverse().expect("basis");
    (0..s.cols()).map(|i| t.row(i).to_vec()).collect()
}

/// Injective envelope inside nil(p); the target is projective-injective.
pub fn injective_envelope(x: &LadderRep) -> Result<(LadderRep, Morphism)> {
    if !super::in_nil(x) {
        return Err(Error::NotInNil("injective envelope needs an object of nil(p)".into()));
    }
    let mut parts = Vec::new();
    let (m, u) = (x.ambient(), x.sub());
    for (&d, &n) in u.dims() {
        let soc = u.x(d).kernel_matrix();
        let lift = x.iota(d).left_inverse()?;
        for psi in dual_functionals(&soc, n) {
            let row = QMatrix::from_rows(alloc::vec![psi]).expect("row");
            let phi = &row * &lift;
            parts.push(functional_map(x, Bar::Lower, d, phi.row(0)));
        }
    }
    let mut qmaps: BTreeMap<i64, (QMatrix, QMatrix)> = BTreeMap::new();
    for (&d, &n) in m.dims() {
        let s = x.iota(d).column_basis();
        let comp = complement_indices(&s);
        if comp.is_empty() {
            continue;
        }
        let e = QMatrix::identity(n).select_cols(&comp);
        let t = s.hstack(&e).inverse().expect("basis");
        let rows: Vec<usize> = (s.cols()..n).collect();
        qmaps.insert(d, (t.select_rows(&rows), e));
    }
    for (&d, (q, _)) in &qmaps {
        let qx = match (qmaps.get(&(d + 1)), qmaps.get(&d)) {
            (Some((q1, _)), Some((_, e0))) => &(q1 * &m.x(d)) * e0,
            _ => QMatrix::zeros(0, q.rows()),
        };
        let soc = qx.kernel_matrix();
        for psi in dual_functionals(&soc, q.rows()) {
            let row = QMatrix::from_rows(alloc::vec![psi]).expect("row");
            let phi = &row * q;
            parts.push(functional_map(x, Bar::Upper, d, phi.row(0)));
        }
    }
    Ok(sum_into(x, &parts))
}

/// Cokernel of the injective envelope, with projective summands removed.
pub fn cosyzygy(x: &LadderRep) -> Result<LadderRep> {
    let (i, j) = injective_envelope(x)?;
    Ok(strip_projectives(&cokernel(&j, x, &i).0))
}

/// Multiplicity of P(v) as a direct summand of X, with functionals on
/// M_{d+p−1} realizing a split epimorphism X → P(v)^r.
fn split_functionals(x: &LadderRep, v: Vertex) -> Vec<Vec<Q>> {
    let p = x.p();
    let top = v.degree + p as i64 - 1;
    let n = x.ambient().dim(top);
    if n == 0 || x.dim(v) == 0 {
        return Vec::new();
    }
    let reach = x.ambient().x_pow(v.degree, p - 1);
    let (phis, pairing) = match v.bar {
        Bar::Upper => {
            let ann = x.iota(top).transpose().nullspace();
            let phi = QMatrix::from_rows(ann.clone()).unwrap_or_else(|_| QMatrix::zeros(0, n));
            if ann.is_empty() {
                return Vec::new();
            }
            (ann, &phi * &reach)
        }
        Bar::Lower => {
            let all: Vec<Vec<Q>> = (0..n).map(|i| unit_vector(n, i)).collect();
            (all, &reach * &x.iota(v.degree))
        }
    };
    pairing
        .transpose()
        .independent_columns()
        .into_iter()
        .map(|j| phis[j].clone())
        .collect()
}

pub fn projective_multiplicity(x: &LadderRep, v: Vertex) -> usize {
    split_functionals(x, v).len()
}

/// Removes every projective-injective direct summand.
pub fn strip_projectives(x: &LadderRep) -> LadderRep {
    let mut cur = x.clone();
    'outer: loop {
        for v in cur.support() {
            let phis = split_functionals(&cur, v);
            if phis.is_empty() {
                continue;
            }
            let top = v.degree + cur.p() as i64 - 1;
            let parts: Vec<_> = phis.iter().map(|phi| functional_map(&cur, v.bar, top, phi)).collect();
            let (t, g) = sum_into(&cur, &parts);
            cur = kernel(&g, &cur, &t).0;
            continue 'outer;
        }
        return cur;
    }
}

/// λ(N): the cokernel of the lower-bar copy of a free presentation of N.
pub fn lambda(n: &GradedModule, p: usize) -> Result<LadderRep> {
    if !n.is_nilpotent(p) {
        return Err(Error::Invalid(alloc::format!("module is not annihilated by x^{p}")));
    }
    let x0 = LadderRep::upper(p, n.clone());
    let (f0, pi0, gens0) = cover_with_generators(&x0);
    let (k, inc) = kernel(&pi0, &f0, &x0);
    let (_, _, gens1) = cover_with_generators(&k);
    let lf0 = LadderRep::sum_all(
        p,
        &gens0.iter().map(|(v, _)| projective(Bar::Lower, v.degree, p)).collect::<Vec<_>>(),
    );
    let parts: Vec<_> = gens1
        .iter()
        .map(|(v, e)| {
            let col = QMatrix::from_columns(e.len(), core::slice::from_ref(e));
            let y = &inc.block(*v, &k, &f0) * &col;
            generator_map(&lf0, Bar::Lower, v.degree, &y.column(0))
        })
        .collect();
    let (lf1, phi) = sum_from(&lf0, &parts);
    Ok(cokernel(&phi, &lf1, &lf0).0)
}

#[cfg(test)]
mod tests {
    use super::super::hom::hom;
    use super::super::{in_nil, simple};
    use super::*;
    use crate::linalg::QMatrix;

    fn xa_in_a(p: usize) -> LadderRep {
        let xa = GradedModule::free(1, p - 1);
        let iota = xa.dims().keys().map(|&d| (d, QMatrix::identity(1))).collect::<Vec<_>>();
        LadderRep::new(p, GradedModule::free(0, p), xa, iota).unwrap()
    }

    #[test]
    fn cover_of_projective_is_itself() {
        let x = projective(Bar::Lower, 2, 4);
        let (p, f) = proj_cover(&x);
        assert_eq!(p, x);
        assert!(f.is_iso(&p, &x));
        assert!(syzygy(&x).is_zero());
        assert!(cosyzygy(&x).unwrap().is_zero());
    }

    #[test]
    fn cover_is_epi_and_envelope_is_mono() {
        let x = xa_in_a(3);
        assert!(in_nil(&x));
        let (p, f) = proj_cover(&x);
        assert!(f.is_morphism(&p, &x) && f.is_epi(&p, &x));
        let (i, j) = injective_envelope(&x).unwrap();
        assert!(j.is_morphism(&x, &i) && j.is_mono(&x, &i));
        assert!(injective_envelope(&simple(Bar::Lower, 0, 3)).is_err());
    }

    #[test]
    fn xa_in_a_at_two() {
        let x = xa_in_a(2);
        let omega = syzygy(&x);
        assert_eq!(omega.total_dim(), 3);
        assert_eq!(cosyzygy(&x).unwrap().total_dim(), 3);
        assert_eq!(hom(&projective(Bar::Lower, 0, 2), &x).dim(), 0);
        assert_eq!(hom(&projective(Bar::Lower, 1, 2), &x).dim(), 1);
    }

    #[test]
    fn stripping_counts_summands() {
        let p = 3;
        let s = simple(Bar::Upper, 0, p);
        let x = s
            .direct_sum(&projective(Bar::Lower, 0, p))
            .direct_sum(&projective(Bar::Upper, 1, p));
        assert_eq!(projective_multiplicity(&x, Vertex::new(Bar::Lower, 0)), 1);
        assert_eq!(projective_multiplicity(&x, Vertex::new(Bar::Upper, 1)), 1);
        assert_eq!(projective_multiplicity(&x, Vertex::new(Bar::Upper, 0)), 0);
        assert_eq!(strip_projectives(&x).dim_vector(), s.dim_vector());
    }

    #[test]
    fn lambda_of_free_and_simple() {
        let p = 3;
        let a = GradedModule::free(0, p);
        assert_eq!(lambda(&a, p).unwrap(), projective(Bar::Lower, 0, p));
        let k = GradedModule::from_parts([(0, 1)], []).unwrap();
        let l = lambda(&k, p).unwrap();
        assert_eq!(l.sub().dims(), k.dims());
        assert_eq!(l.ambient().dims(), k.dims());
        assert_eq!(l.iota(0).rank(), 1);
    }
}
