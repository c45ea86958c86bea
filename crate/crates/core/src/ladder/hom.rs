use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{frobenius::proj_cover, Arrow, LadderRep, Vertex};
use crate::linalg::{complement_indices, QMatrix, Q};

/// A family of blocks f_v: X_v → Y_v. Only nonzero blocks are stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Morphism {
    blocks: BTreeMap<Vertex, QMatrix>,
}

impl Morphism {
    pub fn zero() -> Self {
        Morphism::default()
    }

    pub fn from_blocks(blocks: impl IntoIterator<Item = (Vertex, QMatrix)>) -> Self {
        Morphism {
            blocks: blocks
                .into_iter()
                .filter(|(_, m)| m.rows() > 0 && m.cols() > 0 && !m.is_zero())
                .collect(),
        }
    }

    pub fn identity(x: &LadderRep) -> Self {
        Morphism::from_blocks(x.support().into_iter().map(|v| (v, QMatrix::identity(x.dim(v)))))
    }

    pub fn blocks(&self) -> impl Iterator<Item = (Vertex, &QMatrix)> {
        self.blocks.iter().map(|(&v, m)| (v, m))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The block at v as a `dim Y_v × dim X_v` matrix.
    pub fn block(&self, v: Vertex, x: &LadderRep, y: &LadderRep) -> QMatrix {
        self.blocks.get(&v).cloned().unwrap_or_else(|| QMatrix::zeros(y.dim(v), x.dim(v)))
    }

    pub fn scale(&self, s: &Q) -> Self {
        Morphism::from_blocks(self.blocks.iter().map(|(&v, m)| (v, m.scale(s))))
    }

    pub fn add(&self, other: &Self, x: &LadderRep, y: &LadderRep) -> Self {
        let mut out = self.blocks.clone();
        for (&v, m) in &other.blocks {
            let sum = &self.block(v, x, y) + m;
            out.insert(v, sum);
        }
        Morphism::from_blocks(out)
    }

    /// Whether the blocks commute with every arrow.
    pub fn is_morphism(&self, x: &LadderRep, y: &LadderRep) -> bool {
        let verts: Vec<Vertex> = x.support();
        verts.iter().all(|&v| {
            LadderRep::arrows_from(v).all(|a| {
                let w = a.dst();
                let lhs = &self.block(w, x, y) * &x.arrow(a);
                let rhs = &y.arrow(a) * &self.block(v, x, y);
                lhs == rhs
            })
        }) && self.blocks.iter().all(|(&v, m)| m.rows() == y.dim(v) && m.cols() == x.dim(v))
    }

    pub fn is_iso(&self, x: &LadderRep, y: &LadderRep) -> bool {
        x.dim_vector() == y.dim_vector() && x.support().into_iter().all(|v| self.block(v, x, y).is_invertible())
    }

    pub fn is_mono(&self, x: &LadderRep, y: &LadderRep) -> bool {
        x.support().into_iter().all(|v| self.block(v, x, y).rank() == x.dim(v))
    }

    pub fn is_epi(&self, x: &LadderRep, y: &LadderRep) -> bool {
        y.support().into_iter().all(|v| self.block(v, x, y).rank() == y.dim(v))
    }
}

/// g ∘ f.
pub fn compose(g: &Morphism, f: &Morphism) -> Morphism {
    Morphism::from_blocks(f.blocks.iter().filter_map(|(v, fv)| g.blocks.get(v).map(|gv| (*v, gv * fv))))
}

#[derive(Clone, Debug)]
struct Layout {
    entries: Vec<(Vertex, usize, usize, usize)>,
    len: usize,
}

impl Layout {
    fn new(x: &LadderRep, y: &LadderRep) -> Self {
        let mut entries = Vec::new();
        let mut len = 0;
        for v in x.support() {
            let (r, c) = (y.dim(v), x.dim(v));
            if r > 0 {
                entries.push((v, r, c, len));
                len += r * c;
            }
        }
        Layout { entries, len }
    }

    fn offset(&self, v: Vertex) -> Option<(usize, usize)> {
        self.entries.iter().find(|e| e.0 == v).map(|e| (e.3, e.2))
    }

    fn flatten(&self, f: &Morphism, x: &LadderRep, y: &LadderRep) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.len];
        for &(v, r, c, off) in &self.entries {
            let b = f.block(v, x, y);
            for i in 0..r {
                for j in 0..c {
                    out[off + i * c + j] = b.get(i, j).clone();
                }
            }
        }
        out
    }

    fn unflatten(&self, coords: &[Q]) -> Morphism {
        Morphism::from_blocks(
            self.entries
                .iter()
                .map(|&(v, r, c, off)| (v, QMatrix::from_fn(r, c, |i, j| coords[off + i * c + j].clone()))),
        )
    }
}

/// A basis of Hom(X, Y), or of a complement representing a quotient of it.
#[derive(Clone, Debug)]
pub struct HomSpace {
    layout: Layout,
    basis: Vec<Morphism>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }

    /// Flattened coordinates of a morphism in the ambient block space.
    pub fn flatten(&self, f: &Morphism, x: &LadderRep, y: &LadderRep) -> Vec<Q> {
        self.layout.flatten(f, x, y)
    }

    /// Σ c_i b_i.
    pub fn combination(&self, coeffs: &[Q]) -> Morphism {
        let mut acc = vec![Q::zero(); self.layout.len];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for &(v, _, cols, off) in &self.layout.entries {
                if let Some(m) = b.blocks.get(&v) {
                    for i in 0..m.rows() {
                        for j in 0..cols {
                            acc[off + i * cols + j] += c * m.get(i, j);
                        }
                    }
                }
            }
        }
        self.layout.unflatten(&acc)
    }
}

/// Hom(X, Y) as the solution space of F_w X_a = Y_a F_v over all arrows.
pub fn hom(x: &LadderRep, y: &LadderRep) -> HomSpace {
    let layout = Layout::new(x, y);
    let mut rows: Vec<Vec<(usize, Q)>> = Vec::new();
    for v in x.support() {
        for a in LadderRep::arrows_from(v) {
            let w = a.dst();
            let (yw, xv) = (y.dim(w), x.dim(v));
            if yw == 0 {
                continue;
            }
            let xa = x.arrow(a);
            let ya = y.arrow(a);
            let fw = layout.offset(w);
            let fv = layout.offset(v);
            for i in 0..yw {
                for j in 0..xv {
                    let mut eq: Vec<(usize, Q)> = Vec::new();
                    if let Some((off, cols)) = fw {
                        for k in 0..x.dim(w) {
                            let c = xa.get(k, j);
                            if !c.is_zero() {
                                eq.push((off + i * cols + k, c.clone()));
                            }
                        }
                    }
                    if let Some((off, cols)) = fv {
                        for k in 0..y.dim(v) {
                            let c = ya.get(i, k);
                            if !c.is_zero() {
                                eq.push((off + k * cols + j, -c.clone()));
                            }
                        }
                    }
                    if !eq.is_empty() {
                        rows.push(eq);
                    }
                }
            }
        }
    }
    let mut m = QMatrix::zeros(rows.len(), layout.len);
    for (i, eq) in rows.iter().enumerate() {
        for (j, c) in eq {
            let cur = m.get(i, *j) + c;
            m.set(i, *j, cur);
        }
    }
    let basis = m.nullspace().iter().map(|c| layout.unflatten(c)).collect();
    HomSpace { layout, basis }
}

/// Hom modulo maps factoring through a projective; the basis consists of
/// representatives of a complement.
pub fn stable_hom(x: &LadderRep, y: &LadderRep) -> HomSpace {
    let full = hom(x, y);
    let (p, pi) = proj_cover(y);
    let through = hom(x, &p);
    let mut cols: Vec<Vec<Q>> = through.basis.iter().map(|h| full.layout.flatten(&compose(&pi, h), x, y)).collect();
    let n_proj = cols.len();
    cols.extend(full.basis.iter().map(|b| full.layout.flatten(b, x, y)));
    let m = QMatrix::from_columns(full.layout.len, &cols);
    let basis = m
        .independent_columns()
        .into_iter()
        .filter(|&c| c >= n_proj)
        .map(|c| full.basis[c - n_proj].clone())
        .collect();
    HomSpace {
        layout: full.layout,
        basis,
    }
}

/// The subobject spanned at each vertex by the columns of `bases`, with its
/// inclusion. The spans must be closed under the arrows.
pub(crate) fn subobject(x: &LadderRep, bases: &BTreeMap<Vertex, QMatrix>) -> (LadderRep, Morphism) {
    let dims: BTreeMap<Vertex, usize> = bases.iter().map(|(&v, b)| (v, b.cols())).collect();
    let lefts: BTreeMap<Vertex, QMatrix> = bases
        .iter()
        .filter(|(_, b)| b.cols() > 0)
        .map(|(&v, b)| (v, b.left_inverse().expect("independent columns")))
        .collect();
    let mut arrows: Vec<(Arrow, QMatrix)> = Vec::new();
    for (&v, b) in bases {
        if b.cols() == 0 {
            continue;
        }
        for a in LadderRep::arrows_from(v) {
            if let Some(l) = lefts.get(&a.dst()) {
                arrows.push((a, &(l * &x.arrow(a)) * b));
            }
        }
    }
    let k = LadderRep::from_vertices(x.p(), &dims, arrows).expect("consistent shapes");
    (k, Morphism::from_blocks(bases.iter().map(|(&v, b)| (v, b.clone()))))
}

/// Y / S for a subobject S given by column bases, with the projection.
pub(crate) fn quotient(y: &LadderRep, bases: &BTreeMap<Vertex, QMatrix>) -> (LadderRep, Morphism) {
    let mut dims = BTreeMap::new();
    let mut projs = BTreeMap::new();
    let mut sections = BTreeMap::new();
    for v in y.support() {
        let n = y.dim(v);
        let s = bases.get(&v).cloned().unwrap_or_else(|| QMatrix::zeros(n, 0));
        let comp = complement_indices(&s);
        if comp.is_empty() {
            continue;
        }
        let e = QMatrix::identity(n).select_cols(&comp);
        let t = s.hstack(&e).inverse().expect("basis");
        let rows: Vec<usize> = (s.cols()..n).collect();
        dims.insert(v, comp.len());
        projs.insert(v, t.select_rows(&rows));
        sections.insert(v, e);
    }
    let mut arrows = Vec::new();
    for (&v, sv) in &sections {
        for a in LadderRep::arrows_from(v) {
            if let Some(qw) = projs.get(&a.dst()) {
                arrows.push((a, &(qw * &y.arrow(a)) * sv));
            }
        }
    }
    let c = LadderRep::from_vertices(y.p(), &dims, arrows).expect("consistent shapes");
    (c, Morphism::from_blocks(projs))
}

pub fn kernel(f: &Morphism, x: &LadderRep, y: &LadderRep) -> (LadderRep, Morphism) {
    let bases = x.support().into_iter().map(|v| (v, f.block(v, x, y).kernel_matrix())).collect();
    subobject(x, &bases)
}

pub fn image(f: &Morphism, x: &LadderRep, y: &LadderRep) -> (LadderRep, Morphism) {
    let bases = y.support().into_iter().map(|v| (v, f.block(v, x, y).column_basis())).collect();
    subobject(y, &bases)
}

pub fn cokernel(f: &Morphism, x: &LadderRep, y: &LadderRep) -> (LadderRep, Morphism) {
    let bases = y.support().into_iter().map(|v| (v, f.block(v, x, y).column_basis())).collect();
    quotient(y, &bases)
}
