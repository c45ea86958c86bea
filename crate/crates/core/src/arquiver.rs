//! Windows of the Auslander–Reiten quivers of vect X(2,3,p): ZΔ̃ for
//! p ≤ 5, the line bundle tubes for p = 6 and the ZA∞ components for p ≥ 7,
//! with persistent/fading marks and fading deletion.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::lgroup::{quotient, LElt, TauPattern, WeightTriple};
use crate::linalg::{q, QMatrix};
use num_traits::Signed;

/// The star [2,3,p] (arms of 1, 2 and p − 1 vertices) or its extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarTree {
    pub p: usize,
    pub extended: bool,
}

impl StarTree {
    pub fn new(p: usize, extended: bool) -> Self {
        StarTree { p, extended }
    }

    /// Arm lengths from the center, excluding the center itself.
    fn arms(&self) -> Vec<usize> {
        if !self.extended {
            return vec![1, 2, self.p - 1];
        }
        match self.p {
            2 => vec![1, 1, 2],
            3 => vec![2, 2, 2],
            4 => vec![1, 3, 3],
            _ => vec![1, 2, 5],
        }
    }

    /// Vertex 0 is the center; arms follow in order, each from the center
    /// outward. The extended p = 2 tree has one more vertex hanging off the
    /// first vertex of the last arm.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        let mut next = 1;
        for len in self.arms() {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        if self.extended && self.p == 2 {
            edges.push((3, next));
        }
        edges
    }

    pub fn len(&self) -> usize {
        self.edges().len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for (a, b) in self.edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Bipartite colouring with the center coloured 0.
    pub fn colours(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut c = vec![usize::MAX; self.len()];
        c[0] = 0;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if c[w] == usize::MAX {
                    c[w] = 1 - c[v];
                    stack.push(w);
                }
            }
        }
        c
    }

    /// Row order for drawing: second arm reversed, center, first arm, the
    /// rest.
    fn rows(&self) -> Vec<usize> {
        let arms = self.arms();
        let mut starts = Vec::new();
        let mut next = 1;
        for &len in &arms {
            starts.push((next, len));
            next += len;
        }
        let mut order: Vec<usize> = (0..starts[1].1).rev().map(|k| starts[1].0 + k).collect();
        order.push(0);
        order.extend((0..starts[0].1).map(|k| starts[0].0 + k));
        order.extend((0..starts[2].1).map(|k| starts[2].0 + k));
        order.extend(next..self.len());
        order
    }
}

/// The positive generator of the kernel of 2I − A, scaled to minimum 1.
pub fn null_root(tree: &StarTree) -> Result<Vec<i64>> {
    let n = tree.len();
    let adj = tree.adjacency();
    let m = QMatrix::from_fn(n, n, |i, j| {
        if i == j {
            q(2)
        } else if adj[i].contains(&j) {
            q(-1)
        } else {
            q(0)
        }
    });
    let ker = m.nullspace();
    if ker.len() != 1 {
        return Err(Error::NoNullRoot);
    }
    let v = &ker[0];
    let min = v.iter().map(|x| x.abs()).min().expect("nonempty");
    let scaled: Vec<_> = v.iter().map(|x| x / &min).collect();
    if scaled.iter().any(|x| !x.is_integer()) {
        return Err(Error::NoNullRoot);
    }
    let sign = if scaled[0] < q(0) { -1 } else { 1 };
    let out: Vec<i64> = scaled
        .iter()
        .map(|x| sign * i64::try_from(x.to_integer()).expect("small"))
        .collect();
    if out.iter().any(|&x| x <= 0) {
        return Err(Error::NoNullRoot);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mark {
    Persistent,
    Fading,
    NonLine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuiverKind {
    Domestic,
    Tube,
    Wild,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QVertex {
    pub orbit: usize,
    pub slice: i64,
    pub rank: Option<i64>,
    pub line: bool,
    pub mark: Mark,
    pub col: i64,
    pub row: usize,
}

/// A finite window of a translation quiver; τ(orbit, n) = (orbit, n − 1),
/// taken modulo the period on tubes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransQuiver {
    pub p: usize,
    pub kind: QuiverKind,
    pub vertices: Vec<QVertex>,
    pub arrows: Vec<(usize, usize)>,
    pub period: Option<i64>,
    /// Colour of each line orbit, for the window search.
    pub line_orbits: Vec<(usize, i64)>,
    pub components: usize,
}

impl TransQuiver {
    fn index(&self) -> BTreeMap<(usize, i64), usize> {
        self.vertices.iter().enumerate().map(|(k, v)| ((v.orbit, v.slice), k)).collect()
    }

    pub fn tau(&self, k: usize) -> Option<usize> {
        let v = &self.vertices[k];
        let mut s = v.slice - 1;
        if let Some(per) = self.period {
            s = s.rem_euclid(per);
        }
        self.index().get(&(v.orbit, s)).copied()
    }

    pub fn orbit_count(&self) -> usize {
        let mut o: Vec<usize> = self.vertices.iter().map(|v| v.orbit).collect();
        o.sort();
        o.dedup();
        o.len()
    }

    pub fn count(&self, mark: Mark) -> usize {
        self.vertices.iter().filter(|v| v.mark == mark).count()
    }

    fn preds(&self, k: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.arrows.iter().filter(|a| a.1 == k).map(|a| a.0).collect();
        v.sort();
        v
    }

    fn succs(&self, k: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.arrows.iter().filter(|a| a.0 == k).map(|a| a.1).collect();
        v.sort();
        v
    }

    /// Vertices x with τx in the window where the arrows into x do not
    /// match the arrows out of τx. Boundary meshes are skipped.
    pub fn mesh_failures(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&k| match self.tau(k) {
                Some(t) => {
                    let (pre, suc) = (self.preds(k), self.succs(t));
                    self.interior(k) && pre != suc
                }
                None => false,
            })
            .collect()
    }

    /// Vertices where rank(x) + rank(τx) differs from the sum over the mesh.
    pub fn rank_failures(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&k| {
                let Some(t) = self.tau(k) else { return false };
                let (Some(a), Some(b)) = (self.vertices[k].rank, self.vertices[t].rank) else {
                    return false;
                };
                let pre = self.preds(k);
                let mid: Option<i64> = pre.iter().map(|&i| self.vertices[i].rank).sum();
                self.interior(k) && mid.is_some_and(|m| m != a + b)
            })
            .collect()
    }

    /// Whether every mesh neighbour of a vertex lies in the window; on
    /// ZA∞ strips the topmost level is cut off.
    fn interior(&self, k: usize) -> bool {
        match self.kind {
            QuiverKind::Domestic => true,
            _ => self.vertices[k].orbit + 1 < self.height(),
        }
    }

    fn height(&self) -> usize {
        self.vertices.iter().map(|v| v.row + 1).max().unwrap_or(0)
    }
}

/// Width in columns (two per τ-step) of a window of the x3-shift, or of the
/// (p − 6)x3-shift for p ≥ 6.
pub fn window_columns(p: usize) -> i64 {
    if p < 6 {
        12 / (6 - p as i64)
    } else {
        12
    }
}

/// Window of ZΔ̃ over slices n ∈ `slices`, vertices (n, i), with rank
/// labels from the null root and line orbits where it equals 1.
pub fn build_domestic(p: usize, slices: Range<i64>) -> Result<TransQuiver> {
    if !(2..=5).contains(&p) {
        return Err(Error::OutOfRange(format!("domestic case needs 2 <= p <= 5, got {p}")));
    }
    let tree = StarTree::new(p, true);
    let f = null_root(&tree)?;
    let colour = tree.colours();
    let rows = tree.rows();
    let row_of: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(r, &i)| (i, r)).collect();
    let mut vertices = Vec::new();
    for n in slices.clone() {
        for i in 0..tree.len() {
            vertices.push(QVertex {
                orbit: i,
                slice: n,
                rank: Some(f[i]),
                line: f[i] == 1,
                mark: Mark::NonLine,
                col: 2 * n + colour[i] as i64,
                row: row_of[&i],
            });
        }
    }
    let index: BTreeMap<(usize, i64), usize> = vertices.iter().enumerate().map(|(k, v)| ((v.orbit, v.slice), k)).collect();
    let mut arrows = Vec::new();
    for n in slices {
        for (a, b) in tree.edges() {
            for (i, j) in [(a, b), (b, a)] {
                let target = if colour[i] == 0 { n } else { n + 1 };
                if let (Some(&s), Some(&t)) = (index.get(&(i, n)), index.get(&(j, target))) {
                    arrows.push((s, t));
                }
            }
        }
    }
    let line_orbits = (0..tree.len()).filter(|&i| f[i] == 1).map(|i| (i, colour[i] as i64)).collect();
    Ok(TransQuiver {
        p,
        kind: QuiverKind::Domestic,
        vertices,
        arrows,
        period: None,
        line_orbits,
        components: 1,
    })
}

fn za_infinity(p: usize, kind: QuiverKind, slices: Range<i64>, height: usize, period: Option<i64>) -> TransQuiver {
    let mut vertices = Vec::new();
    for n in slices.clone() {
        for l in 0..height {
            let rank = match kind {
                QuiverKind::Tube => Some(l as i64 + 1),
                _ => (l == 0).then_some(1),
            };
            vertices.push(QVertex {
                orbit: l,
                slice: n,
                rank,
                line: l == 0,
                mark: Mark::NonLine,
                col: 2 * n + l as i64,
                row: height - 1 - l,
            });
        }
    }
    let index: BTreeMap<(usize, i64), usize> = vertices.iter().enumerate().map(|(k, v)| ((v.orbit, v.slice), k)).collect();
    let wrap = |n: i64| period.map_or(n, |per| n.rem_euclid(per));
    let mut arrows = Vec::new();
    for n in slices {
        for l in 0..height.saturating_sub(1) {
            if let (Some(&a), Some(&b)) = (index.get(&(l, n)), index.get(&(l + 1, n))) {
                arrows.push((a, b));
            }
            if let (Some(&a), Some(&b)) = (index.get(&(l + 1, n)), index.get(&(l, wrap(n + 1)))) {
                arrows.push((a, b));
            }
        }
    }
    TransQuiver {
        p,
        kind,
        vertices,
        arrows,
        period,
        line_orbits: vec![(0, 0)],
        components: 1,
    }
}

/// One period of a tube of τ-period `period` with the given number of rows;
/// the mouth is the line bundle orbit.
pub fn build_tube(period: usize, height: usize) -> TransQuiver {
    za_infinity(6, QuiverKind::Tube, 0..period as i64, height, Some(period as i64))
}

/// A strip of ZA∞ whose boundary is the line bundle orbit; records the
/// number |L/Zω| = p − 6 of components containing line bundles.
pub fn build_wild_window(p: usize, slices: Range<i64>, height: usize) -> Result<TransQuiver> {
    if p < 7 {
        return Err(Error::OutOfRange(format!("wild case needs p >= 7, got {p}")));
    }
    let w = WeightTriple::two_three(p as i64)?;
    let components = quotient(LElt::omega(w))?.len();
    let mut q = za_infinity(p, QuiverKind::Wild, slices, height, None);
    q.components = components;
    Ok(q)
}

/// The window appropriate to p: ZΔ̃, the tube, or a ZA∞ strip.
pub fn build(p: usize, slices: Range<i64>) -> Result<TransQuiver> {
    match p {
        2..=5 => build_domestic(p, slices),
        6 => Ok(build_tube(6, 6)),
        _ => build_wild_window(p, slices, 6),
    }
}

fn pattern_at(phase: i64, n: i64) -> bool {
    TauPattern::BASE.0[(phase - n).rem_euclid(6) as usize]
}

/// Marks line vertex (orbit, n) persistent iff "+-+---" holds a plus at
/// position phase − n, so reading in τ-direction walks the pattern forward.
pub fn mark_pattern(q: &TransQuiver, phases: &[i64]) -> Result<TransQuiver> {
    if phases.len() != q.line_orbits.len() {
        return Err(Error::Invalid(format!(
            "{} phases for {} line orbits",
            phases.len(),
            q.line_orbits.len()
        )));
    }
    let mut out = q.clone();
    let phase_of: BTreeMap<usize, i64> = q.line_orbits.iter().zip(phases).map(|(&(o, _), &ph)| (o, ph)).collect();
    for v in &mut out.vertices {
        if v.line {
            v.mark = if pattern_at(phase_of[&v.orbit], v.slice) {
                Mark::Persistent
            } else {
                Mark::Fading
            };
        }
    }
    Ok(out)
}

/// All phase tuples (first phase 0) such that every column window of the
/// shift width holds exactly six line vertices, two of them persistent.
pub fn phase_search(q: &TransQuiver) -> Vec<Vec<i64>> {
    let k = q.line_orbits.len();
    let width = window_columns(q.p);
    let mut found = Vec::new();
    if k == 0 {
        return found;
    }
    let total = 6usize.pow(k as u32 - 1);
    for code in 0..total {
        let mut phases = vec![0i64];
        let mut c = code;
        for _ in 1..k {
            phases.push((c % 6) as i64);
            c /= 6;
        }
        phases[1..].reverse();
        let ok = (0..24).all(|start| {
            let (mut lines, mut plus) = (0, 0);
            for (&(_, colour), &ph) in q.line_orbits.iter().zip(&phases) {
                for n in (start - colour).div_euclid(2) - 1..=(start + width).div_euclid(2) + 1 {
                    let col = 2 * n + colour;
                    if col >= start && col < start + width {
                        lines += 1;
                        plus += usize::from(pattern_at(ph, n));
                    }
                }
            }
            lines == 6 && plus == 2
        });
        if ok {
            found.push(phases);
        }
    }
    found.sort();
    found
}

/// Marks the window with the lexicographically smallest admissible phases.
pub fn mark(q: &TransQuiver) -> Result<TransQuiver> {
    let phases = phase_search(q).into_iter().next().ok_or(Error::NoPhase)?;
    mark_pattern(q, &phases)
}

/// Removes fading vertices and their arrows.
pub fn delete_fading(q: &TransQuiver) -> TransQuiver {
    let keep: Vec<bool> = q.vertices.iter().map(|v| v.mark != Mark::Fading).collect();
    let mut new_index = vec![usize::MAX; q.vertices.len()];
    let mut vertices = Vec::new();
    for (k, v) in q.vertices.iter().enumerate() {
        if keep[k] {
            new_index[k] = vertices.len();
            vertices.push(v.clone());
        }
    }
    let arrows = q
        .arrows
        .iter()
        .filter(|(a, b)| keep[*a] && keep[*b])
        .map(|&(a, b)| (new_index[a], new_index[b]))
        .collect();
    TransQuiver {
        vertices,
        arrows,
        ..q.clone()
    }
}

/// Line bundles, persistent ones and Auslander bundles with slope in
/// [0, δ(x3)), found by enumerating L.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdCounts {
    pub lines: Vec<LElt>,
    pub persistent: Vec<LElt>,
    pub auslander: Vec<LElt>,
}

impl FdCounts {
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.lines.len(), self.persistent.len(), self.auslander.len())
    }
}

pub fn fd_counts(p: usize) -> Result<FdCounts> {
    if p < 3 {
        return Err(Error::OutOfRange(format!("weight too small: p = {p}")));
    }
    let w = WeightTriple::two_three(p as i64)?;
    let d3 = LElt::x(w, 3).delta()?;
    let dw = LElt::omega(w).delta()?;
    let mut all = Vec::new();
    for n1 in 0..2 {
        for n2 in 0..3 {
            for n3 in 0..p as i64 {
                for m in -4..=4 {
                    all.push(LElt::normalize(w, [n1, n2, n3], m));
                }
            }
        }
    }
    let mut lines = Vec::new();
    let mut auslander = Vec::new();
    for x in all {
        let d = x.delta()?;
        if (0..d3).contains(&d) {
            lines.push(x);
        }
        if (0..2 * d3).contains(&(2 * d + dw)) {
            auslander.push(x);
        }
    }
    lines.sort_by_key(|x| (x.delta().unwrap_or(0), x.n(), x.m()));
    auslander.sort_by_key(|x| (x.delta().unwrap_or(0), x.n(), x.m()));
    let persistent = lines.iter().copied().filter(|x| x.is_persistent().unwrap_or(false)).collect();
    Ok(FdCounts {
        lines,
        persistent,
        auslander,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Ascii,
}

pub fn emit(q: &TransQuiver, format: Format) -> String {
    match format {
        Format::Dot => emit_dot(q),
        Format::Ascii => emit_ascii(q),
    }
}

fn node_id(v: &QVertex) -> String {
    format!("v{}_{}", v.orbit, v.slice)
}

fn emit_dot(q: &TransQuiver) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"p{}\" {{", q.p);
    if !q.vertices.is_empty() {
        let _ = writeln!(s, "  node [shape=circle, width=0.12, fixedsize=true, label=\"\"];");
    }
    for v in &q.vertices {
        let style = match v.mark {
            Mark::Fading => "style=solid",
            _ => "style=filled, fillcolor=black",
        };
        let rank = v.rank.map(|r| format!(", tooltip=\"rank {r}\"")).unwrap_or_default();
        let _ = writeln!(s, "  {} [{style}, pos=\"{},{}!\"{rank}];", node_id(v), v.col, v.row);
    }
    for &(a, b) in &q.arrows {
        let (va, vb) = (&q.vertices[a], &q.vertices[b]);
        let dotted = va.mark == Mark::Fading || vb.mark == Mark::Fading;
        let _ = writeln!(
            s,
            "  {} -> {}{};",
            node_id(va),
            node_id(vb),
            if dotted { " [style=dotted]" } else { "" }
        );
    }
    s.push_str("}\n");
    s
}

/// One text row per quiver row: '*' persistent, 'o' fading, a digit for the
/// rank of other vertices ('#' above 9).
fn emit_ascii(q: &TransQuiver) -> String {
    if q.vertices.is_empty() {
        return String::new();
    }
    let lo = q.vertices.iter().map(|v| v.col).min().unwrap_or(0);
    let hi = q.vertices.iter().map(|v| v.col).max().unwrap_or(0);
    let height = q.height();
    let mut grid = vec![vec![' '; (hi - lo + 1) as usize]; height];
    for v in &q.vertices {
        let c = match v.mark {
            Mark::Persistent => '*',
            Mark::Fading => 'o',
            Mark::NonLine => match v.rank {
                Some(r @ 0..=9) => char::from_digit(r as u32, 10).unwrap_or('#'),
                _ => '#',
            },
        };
        grid[v.row][(v.col - lo) as usize] = c;
    }
    let mut s = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        s.push_str(line.trim_end());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_roots() {
        assert_eq!(null_root(&StarTree::new(5, true)).unwrap().iter().filter(|&&x| x == 1).count(), 1);
        let mut e8 = null_root(&StarTree::new(5, true)).unwrap();
        e8.sort();
        assert_eq!(e8, [1, 2, 2, 3, 3, 4, 4, 5, 6]);
        assert_eq!(null_root(&StarTree::new(4, true)).unwrap().iter().filter(|&&x| x == 1).count(), 2);
        assert_eq!(null_root(&StarTree::new(2, true)).unwrap().iter().filter(|&&x| x == 1).count(), 4);
        let mut tubular = null_root(&StarTree::new(6, false)).unwrap();
        tubular.sort();
        assert_eq!(tubular, e8);
        assert_eq!(null_root(&StarTree::new(7, false)), Err(Error::NoNullRoot));
        for p in 2..=5 {
            assert_eq!(StarTree::new(p, true).len(), p + 4);
        }
    }

    #[test]
    fn phases() {
        let q4 = build_domestic(4, 0..6).unwrap();
        assert_eq!(phase_search(&q4), [vec![0, 3]]);
        let q3 = build_domestic(3, 0..6).unwrap();
        assert_eq!(phase_search(&q3)[0], [0, 2, 4]);
        assert_eq!(phase_search(&build_domestic(5, 0..6).unwrap()), [vec![0]]);
    }

    #[test]
    fn fd_for_four() {
        let fd = fd_counts(4).unwrap();
        assert_eq!(fd.counts(), (6, 2, 6));
        let w = WeightTriple::two_three(4).unwrap();
        let mut exprs: Vec<String> = fd.lines.iter().map(|x| x.expr()).collect();
        exprs.sort();
        let mut expected: Vec<String> = ["0,0,0,0", "1,0,2,-1", "1,1,1,-1", "0,1,3,-1", "0,2,2,-1", "1,2,0,-1"]
            .iter()
            .map(|s| LElt::parse(w, s).unwrap().expr())
            .collect();
        expected.sort();
        assert_eq!(exprs, expected);
        assert!(fd_counts(2).is_err());
    }

    #[test]
    fn empty_window_renders_empty_body() {
        let q = build_domestic(4, 0..0).unwrap();
        assert_eq!(emit(&q, Format::Dot), "digraph \"p4\" {\n}\n");
        assert_eq!(emit(&q, Format::Ascii), "");
    }
}

#[cfg(test)]
mod window_tests {
    use super::*;

    #[test]
    fn line_orbits_match_quotient() {
        for p in 2..=5 {
            let q = build_domestic(p, 0..4).unwrap();
            let w = WeightTriple::two_three(p as i64).unwrap();
            assert_eq!(q.line_orbits.len(), quotient(LElt::omega(w)).unwrap().len(), "p = {p}");
            assert_eq!(q.orbit_count(), p + 4);
            assert!(q.mesh_failures().is_empty());
            assert!(q.rank_failures().is_empty());
        }
    }

    #[test]
    fn domestic_deletion() {
        let q = mark(&build_domestic(5, 0..6).unwrap()).unwrap();
        assert_eq!(q.count(Mark::Fading), 4);
        let d = delete_fading(&q);
        assert_eq!(q.vertices.len() - d.vertices.len(), 4);
        assert!(d.arrows.len() < q.arrows.len());
        let q4 = mark(&build_domestic(4, 0..3).unwrap()).unwrap();
        assert_eq!(q4.count(Mark::Persistent), 2);
        assert_eq!(q4.count(Mark::Fading), 4);
    }

    #[test]
    fn tube_and_wild() {
        let t = mark(&build_tube(6, 5)).unwrap();
        let mouth: String = (0..6)
            .map(|n| {
                let v = t.vertices.iter().find(|v| v.orbit == 0 && v.slice == n).unwrap();
                if v.mark == Mark::Persistent {
                    '+'
                } else {
                    '-'
                }
            })
            .collect();
        assert_eq!(mouth.matches('+').count(), 2);
        assert!(["+-+---", "-+-+--", "--+-+-", "---+-+", "+---+-", "-+---+"].contains(&mouth.as_str()));
        for k in 0..t.vertices.len() {
            let mut x = k;
            for _ in 0..6 {
                x = t.tau(x).unwrap();
            }
            assert_eq!(x, k);
        }
        assert!(t.mesh_failures().is_empty() && t.rank_failures().is_empty());
        assert_eq!(delete_fading(&t).vertices.iter().filter(|v| v.line).count(), 2);
        assert_eq!(build_wild_window(9, 0..6, 4).unwrap().components, 3);
        assert_eq!(build_wild_window(7, 0..6, 4).unwrap().components, 1);
        assert!(build_wild_window(8, 0..6, 4).unwrap().mesh_failures().is_empty());
    }

    #[test]
    fn ascii_snapshot() {
        let q = mark(&build_domestic(4, 0..6).unwrap()).unwrap();
        let expected = " * o o o * o\n2 2 2 2 2 2\n 3 3 3 3 3 3\n4 4 4 4 4 4\n 2 2 2 2 2 2\n 3 3 3 3 3 3\n2 2 2 2 2 2\n o * o * o o\n";
        assert_eq!(emit(&q, Format::Ascii), expected);
        let dot = emit(&q, Format::Dot);
        assert_eq!(
            dot.matches("style=dotted").count(),
            q.arrows
                .iter()
                .filter(|(a, b)| q.vertices[*a].mark == Mark::Fading || q.vertices[*b].mark == Mark::Fading)
                .count()
        );
        assert_eq!(dot.matches("pos=").count(), 8 * 6);
    }

    #[test]
    fn fd_counts_are_uniform() {
        for p in 3..=12 {
            assert_eq!(fd_counts(p).unwrap().counts(), (6, 2, 6), "p = {p}");
        }
        let w = WeightTriple::two_three(5).unwrap();
        let per: Vec<i64> = fd_counts(5).unwrap().persistent.iter().map(|x| x.delta().unwrap()).collect();
        assert_eq!(per, [0, 4]);
        for p in 3..=9 {
            let mut bars: Vec<_> = fd_counts(p).unwrap().persistent.iter().map(|x| x.bar_class().unwrap()).collect();
            bars.sort_by_key(|b| alloc::format!("{b:?}"));
            assert_eq!(bars, [crate::lgroup::BarClass::LowerBar, crate::lgroup::BarClass::UpperBar]);
        }
        assert!(fd_counts(5).unwrap().persistent.contains(&(LElt::x(w, 2) - LElt::x(w, 3))));
    }
}
