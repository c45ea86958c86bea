//! Graded invariant subspaces of nilpotent operators.
//!
//! An object is a degree preserving map ι: U → M of finite dimensional
//! Z-graded modules over A = k[x]/(x^p), with x of degree 1 and k = Q. The
//! ambient module M sits on the upper bar and U on the lower bar; nil(p) is
//! the full subcategory where ι is injective. Module degree d on the upper
//! (lower) bar corresponds to the line bundle O(−d·x3) (O(x2 − d·x3)), so
//! that the regrading s: d ↦ d + 1 is the twist by −x3.

mod decompose;
mod frobenius;
mod hom;
mod random;
mod tilting;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Q};

pub use decompose::{decompose, endomorphism_radical_codim, is_indecomposable, is_isomorphic, Decomposition};
pub use frobenius::{cosyzygy, injective_envelope, lambda, proj_cover, projective_multiplicity, strip_projectives, syzygy};
pub use hom::{cokernel, compose, hom, image, kernel, stable_hom, HomSpace, Morphism};
pub use random::{random_graded_module, random_nil_rep};
pub use tilting::{
    nil_simples_report, projective_hom_report, rect_tilting, rect_tilting_literal, stable_hom_matrix, verify_rect_tilting,
    verify_rect_tilting_literal,
};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Bar {
    Upper,
    Lower,
}

impl fmt::Display for Bar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bar::Upper => "up",
            Bar::Lower => "low",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex {
    pub bar: Bar,
    pub degree: i64,
}

impl Vertex {
    pub fn new(bar: Bar, degree: i64) -> Self {
        Vertex { bar, degree }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.bar, self.degree)
    }
}

/// The structure maps: x on either bar, and ι from the lower to the upper bar.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Arrow {
    X(Bar, i64),
    Iota(i64),
}

impl Arrow {
    pub fn src(&self) -> Vertex {
        match *self {
            Arrow::X(b, d) => Vertex::new(b, d),
            Arrow::Iota(d) => Vertex::new(Bar::Lower, d),
        }
    }

    pub fn dst(&self) -> Vertex {
        match *self {
            Arrow::X(b, d) => Vertex::new(b, d + 1),
            Arrow::Iota(d) => Vertex::new(Bar::Upper, d),
        }
    }

    pub fn from_vertex(v: Vertex) -> impl Iterator<Item = Arrow> {
        let first = Arrow::X(v.bar, v.degree);
        let second = (v.bar == Bar::Lower).then_some(Arrow::Iota(v.degree));
        core::iter::once(first).chain(second)
    }
}

/// A finite dimensional graded module; `x(d)` maps degree d to d + 1.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct GradedModule {
    dims: BTreeMap<i64, usize>,
    maps: BTreeMap<i64, QMatrix>,
}

impl GradedModule {
    pub fn zero() -> Self {
        GradedModule::default()
    }

    /// Absent maps are zero; zero-dimensional components are dropped.
    pub fn from_parts(dims: impl IntoIterator<Item = (i64, usize)>, maps: impl IntoIterator<Item = (i64, QMatrix)>) -> Result<Self> {
        let mut g = GradedModule::zero();
        for (d, n) in dims {
            if n > 0 && g.dims.insert(d, n).is_some() {
                return Err(Error::Invalid(format!("degree {d} listed twice")));
            }
        }
        for (d, m) in maps {
            g.set_x(d, m)?;
        }
        Ok(g)
    }

    /// A(n): free of rank one on a generator in degree n.
    pub fn free(n: i64, p: usize) -> Self {
        let mut g = GradedModule::zero();
        for k in 0..p as i64 {
            g.dims.insert(n + k, 1);
        }
        for k in 0..p as i64 - 1 {
            g.maps.insert(n + k, QMatrix::identity(1));
        }
        g
    }

    pub fn dim(&self, d: i64) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<i64, usize> {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn x(&self, d: i64) -> QMatrix {
        self.maps
            .get(&d)
            .cloned()
            .unwrap_or_else(|| QMatrix::zeros(self.dim(d + 1), self.dim(d)))
    }

    /// Nonzero structure maps.
    pub fn maps(&self) -> impl Iterator<Item = (i64, &QMatrix)> {
        self.maps.iter().map(|(&d, m)| (d, m))
    }

    pub fn set_x(&mut self, d: i64, m: QMatrix) -> Result<()> {
        if m.rows() != self.dim(d + 1) || m.cols() != self.dim(d) {
            return Err(Error::Dimension(format!(
                "x at degree {d} must be {}x{}, got {}x{}",
                self.dim(d + 1),
                self.dim(d),
                m.rows(),
                m.cols()
            )));
        }
        if m.is_zero() {
            self.maps.remove(&d);
        } else {
            self.maps.insert(d, m);
        }
        Ok(())
    }

    /// x^k from degree d to d + k.
    pub fn x_pow(&self, d: i64, k: usize) -> QMatrix {
        let mut acc = QMatrix::identity(self.dim(d));
        for j in 0..k as i64 {
            acc = &self.x(d + j) * &acc;
        }
        acc
    }

    /// Whether x^p = 0.
    pub fn is_nilpotent(&self, p: usize) -> bool {
        self.dims.keys().all(|&d| self.x_pow(d, p).is_zero())
    }

    pub fn shift(&self, k: i64) -> Self {
        GradedModule {
            dims: self.dims.iter().map(|(&d, &n)| (d + k, n)).collect(),
            maps: self.maps.iter().map(|(&d, m)| (d + k, m.clone())).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut g = GradedModule::zero();
        for d in self.dims.keys().chain(other.dims.keys()) {
            g.dims.insert(*d, self.dim(*d) + other.dim(*d));
        }
        let keys: BTreeSet<i64> = self.maps.keys().chain(other.maps.keys()).copied().collect();
        for d in keys {
            g.maps.insert(d, self.x(d).block_diag(&other.x(d)));
        }
        g
    }
}

/// An object ι: U → M. See the module documentation for conventions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LadderRep {
    p: usize,
    ambient: GradedModule,
    sub: GradedModule,
    iota: BTreeMap<i64, QMatrix>,
}

/// Outcome of [`validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Validation {
    pub problems: Vec<String>,
    pub non_injective: Vec<i64>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }

    pub fn in_nil(&self) -> bool {
        self.is_valid() && self.non_injective.is_empty()
    }
}

impl LadderRep {
    /// Assembles an object; shapes are checked, relations are not (see
    /// [`validate`]).
    pub fn new(p: usize, ambient: GradedModule, sub: GradedModule, iota: impl IntoIterator<Item = (i64, QMatrix)>) -> Result<Self> {
        if p < 2 {
            return Err(Error::OutOfRange(format!("p must be at least 2, got {p}")));
        }
        let mut x = LadderRep {
            p,
            ambient,
            sub,
            iota: BTreeMap::new(),
        };
        for (d, m) in iota {
            x.set_arrow(Arrow::Iota(d), m)?;
        }
        Ok(x)
    }

    pub fn zero(p: usize) -> Self {
        LadderRep {
            p,
            ambient: GradedModule::zero(),
            sub: GradedModule::zero(),
            iota: BTreeMap::new(),
        }
    }

    /// (0 → N): an object supported on the upper bar.
    pub fn upper(p: usize, n: GradedModule) -> Self {
        LadderRep {
            p,
            ambient: n,
            sub: GradedModule::zero(),
            iota: BTreeMap::new(),
        }
    }

    /// (N = N) with ι the identity.
    pub fn diagonal(p: usize, n: GradedModule) -> Self {
        let iota = n.dims.iter().map(|(&d, &k)| (d, QMatrix::identity(k))).collect();
        LadderRep {
            p,
            ambient: n.clone(),
            sub: n,
            iota,
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn ambient(&self) -> &GradedModule {
        &self.ambient
    }

    pub fn sub(&self) -> &GradedModule {
        &self.sub
    }

    pub fn iota(&self, d: i64) -> QMatrix {
        self.iota
            .get(&d)
            .cloned()
            .unwrap_or_else(|| QMatrix::zeros(self.ambient.dim(d), self.sub.dim(d)))
    }

    pub fn module(&self, bar: Bar) -> &GradedModule {
        match bar {
            Bar::Upper => &self.ambient,
            Bar::Lower => &self.sub,
        }
    }

    pub fn dim(&self, v: Vertex) -> usize {
        self.module(v.bar).dim(v.degree)
    }

    pub fn total_dim(&self) -> usize {
        self.ambient.total_dim() + self.sub.total_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.ambient.is_zero() && self.sub.is_zero()
    }

    /// Vertices with a nonzero space, in order.
    pub fn support(&self) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self
            .ambient
            .dims
            .keys()
            .map(|&d| Vertex::new(Bar::Upper, d))
            .chain(self.sub.dims.keys().map(|&d| Vertex::new(Bar::Lower, d)))
            .collect();
        v.sort();
        v
    }

    /// Dimension vector as (vertex, dim) pairs over the support.
    pub fn dim_vector(&self) -> Vec<(Vertex, usize)> {
        self.support().into_iter().map(|v| (v, self.dim(v))).collect()
    }

    pub fn arrow(&self, a: Arrow) -> QMatrix {
        match a {
            Arrow::X(b, d) => self.module(b).x(d),
            Arrow::Iota(d) => self.iota(d),
        }
    }

    pub fn set_arrow(&mut self, a: Arrow, m: QMatrix) -> Result<()> {
        match a {
            Arrow::X(Bar::Upper, d) => self.ambient.set_x(d, m),
            Arrow::X(Bar::Lower, d) => self.sub.set_x(d, m),
            Arrow::Iota(d) => {
                if m.rows() != self.ambient.dim(d) || m.cols() != self.sub.dim(d) {
                    return Err(Error::Dimension(format!("iota at degree {d} has the wrong shape")));
                }
                if m.is_zero() {
                    self.iota.remove(&d);
                } else {
                    self.iota.insert(d, m);
                }
                Ok(())
            }
        }
    }

    /// Arrows leaving a vertex.
    pub fn arrows_from(v: Vertex) -> impl Iterator<Item = Arrow> {
        Arrow::from_vertex(v)
    }

    /// Builds an object from per-vertex dimensions and arrow matrices.
    pub fn from_vertices(p: usize, dims: &BTreeMap<Vertex, usize>, arrows: impl IntoIterator<Item = (Arrow, QMatrix)>) -> Result<Self> {
        let mut x = LadderRep::zero(p);
        for (&v, &n) in dims {
            if n > 0 {
                match v.bar {
                    Bar::Upper => x.ambient.dims.insert(v.degree, n),
                    Bar::Lower => x.sub.dims.insert(v.degree, n),
                };
            }
        }
        for (a, m) in arrows {
            if m.rows() == 0 || m.cols() == 0 {
                continue;
            }
            x.set_arrow(a, m)?;
        }
        Ok(x)
    }

    /// Regrades both bars by +k.
    pub fn shift_s(&self, k: i64) -> Self {
        LadderRep {
            p: self.p,
            ambient: self.ambient.shift(k),
            sub: self.sub.shift(k),
            iota: self.iota.iter().map(|(&d, m)| (d + k, m.clone())).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "direct sum of objects with different p");
        let keys: BTreeSet<i64> = self.iota.keys().chain(other.iota.keys()).copied().collect();
        LadderRep {
            p: self.p,
            ambient: self.ambient.direct_sum(&other.ambient),
            sub: self.sub.direct_sum(&other.sub),
            iota: keys.into_iter().map(|d| (d, self.iota(d).block_diag(&other.iota(d)))).collect(),
        }
    }

    pub fn sum_all(p: usize, parts: &[LadderRep]) -> Self {
        parts.iter().fold(LadderRep::zero(p), |acc, x| acc.direct_sum(x))
    }
}

/// Checks x^p = 0 on both bars and that ι commutes with x; records the
/// degrees where ι fails to be injective.
pub fn validate(x: &LadderRep) -> Validation {
    let mut v = Validation::default();
    let p = x.p;
    for (name, m) in [("ambient", &x.ambient), ("sub", &x.sub)] {
        for &d in m.dims.keys() {
            if !m.x_pow(d, p).is_zero() {
                v.problems.push(format!("{name}: x^{p} is nonzero on degree {d}"));
            }
        }
    }
    let degrees: BTreeSet<i64> = x.sub.dims.keys().flat_map(|&d| [d - 1, d]).collect();
    for d in degrees {
        let lhs = &x.ambient.x(d) * &x.iota(d);
        let rhs = &x.iota(d + 1) * &x.sub.x(d);
        if lhs != rhs {
            v.problems.push(format!("iota does not commute with x at degree {d}"));
        }
    }
    for (&d, &n) in &x.sub.dims {
        if x.iota(d).rank() < n {
            v.non_injective.push(d);
        }
    }
    v
}

pub fn in_nil(x: &LadderRep) -> bool {
    validate(x).in_nil()
}

/// Indecomposable projective: (0 → A(n)) on the upper bar, (A(n) = A(n))
/// on the lower bar; A(n) is generated in degree n.
pub fn projective(bar: Bar, n: i64, p: usize) -> LadderRep {
    let a = GradedModule::free(n, p);
    match bar {
        Bar::Upper => LadderRep::upper(p, a),
        Bar::Lower => LadderRep::diagonal(p, a),
    }
}

/// One-dimensional object at a single vertex.
pub fn simple(bar: Bar, n: i64, p: usize) -> LadderRep {
    let k = GradedModule::from_parts([(n, 1)], []).expect("one component");
    match bar {
        Bar::Upper => LadderRep::upper(p, k),
        Bar::Lower => LadderRep {
            p,
            ambient: GradedModule::zero(),
            sub: k,
            iota: BTreeMap::new(),
        },
    }
}

pub(crate) fn unit_vector(n: usize, i: usize) -> Vec<Q> {
    (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn one() -> QMatrix {
        QMatrix::identity(1)
    }

    #[test]
    fn validation_examples() {
        let a = projective(Bar::Upper, 0, 3);
        assert!(validate(&a).is_valid() && in_nil(&a));
        let s = simple(Bar::Lower, 0, 3);
        assert!(validate(&s).is_valid() && !in_nil(&s));
        assert!(in_nil(&simple(Bar::Upper, 4, 3)));
        // k at degree 0 on both bars, iota = 1, but x on U nonzero into a
        // degree where M vanishes with no matching map.
        let u = GradedModule::from_parts([(0, 1), (1, 1)], [(0, one())]).unwrap();
        let m = GradedModule::from_parts([(0, 1), (1, 1)], []).unwrap();
        let x = LadderRep::new(2, m, u, [(0, one()), (1, one())]).unwrap();
        assert!(!validate(&x).is_valid());
        let bad = GradedModule::free(0, 3);
        assert!(!LadderRep::upper(2, bad).ambient().is_nilpotent(2));
    }

    #[test]
    fn projective_shapes() {
        let p = projective(Bar::Lower, 0, 3);
        assert_eq!(
            p.ambient().dims().iter().map(|(&d, &n)| (d, n)).collect::<Vec<_>>(),
            [(0, 1), (1, 1), (2, 1)]
        );
        assert_eq!(p.ambient(), p.sub());
        assert_eq!(p.total_dim(), 6);
        assert_eq!(projective(Bar::Upper, 0, 3).shift_s(1), projective(Bar::Upper, 1, 3));
        assert_eq!(projective(Bar::Upper, 2, 3).shift_s(0), projective(Bar::Upper, 2, 3));
    }

    #[test]
    fn shapes_are_checked() {
        let mut m = GradedModule::from_parts([(0, 2), (1, 1)], []).unwrap();
        assert!(m.set_x(0, QMatrix::from_rows(alloc::vec![alloc::vec![q(1)]]).unwrap()).is_err());
        assert!(GradedModule::from_parts([(0, 1), (0, 2)], []).is_err());
    }
}
