//! Graded pieces of S = k[x1,x2,x3]/(x1^2 + x2^3 + x3^p) and Hom/Ext
//! dimensions between line bundles O(x).
//!
//! Monomials x1^a x2^b x3^c with a < p1 form a basis of S, so the degree x
//! component is counted per `a` in closed form.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;
use crate::lgroup::{BarClass, LElt, WeightTriple};
use crate::report::Report;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x1^{} x2^{} x3^{}", self.a, self.b, self.c)
    }
}

/// Basis monomials of S_x.
pub fn monomials(x: LElt) -> Vec<Monomial> {
    let w = x.weights();
    let (p2, p3) = (w.p(2), w.p(3));
    let mut out = Vec::new();
    for a in 0..w.p(1) {
        let y = x - LElt::x(w, 1).smul(a);
        let [n1, n2, n3] = y.n();
        if n1 != 0 || y.m() < 0 {
            continue;
        }
        for t in 0..=y.m() {
            let s = y.m() - t;
            out.push(Monomial {
                a,
                b: n2 + p2 * s,
                c: n3 + p3 * t,
            });
        }
    }
    out
}

pub fn dim_s(x: LElt) -> usize {
    let w = x.weights();
    (0..w.p(1))
        .map(|a| x - LElt::x(w, 1).smul(a))
        .filter(|y| y.n()[0] == 0 && y.m() >= 0)
        .map(|y| (y.m() + 1) as usize)
        .sum()
}

/// dim Hom(O(x), O(y)).
pub fn hom_dim(x: LElt, y: LElt) -> usize {
    dim_s(y - x)
}

/// dim Ext^1(O(x), O(y)) = dim Hom(O(y), O(x+ω)).
pub fn ext1_dim(x: LElt, y: LElt) -> usize {
    dim_s(x + LElt::omega(x.weights()) - y)
}

pub fn euler_form(x: LElt, y: LElt) -> i64 {
    hom_dim(x, y) as i64 - ext1_dim(x, y) as i64
}

/// Every nonnegative element with `0 ≤ δ ≤ bound`.
pub(crate) fn nonneg_up_to(w: WeightTriple, bound: i64) -> Vec<LElt> {
    let l = w.lcm();
    let mut out = Vec::new();
    for n1 in 0..w.p(1) {
        for n2 in 0..w.p(2) {
            for n3 in 0..w.p(3) {
                let base = LElt::normalize(w, [n1, n2, n3], 0);
                let mut m = 0;
                while base.degree() + m * l <= bound {
                    out.push(LElt::normalize(w, [n1, n2, n3], m));
                    m += 1;
                }
            }
        }
    }
    out.sort();
    out
}

/// Hom spaces from a persistent line bundle into a fading one are generated
/// by x1, x2^2 (source on the upper bar) or by x1, x2 (lower bar).
pub fn fading_generation_check(p: i64, window: i64) -> Result<Report> {
    let w = WeightTriple::two_three(p)?;
    let bound = window * w.lcm();
    let x2 = LElt::x(w, 2);
    let mut r = Report::new(format!(
        "fading targets are generated by x1, x2^2 (upper) and x1, x2 (lower), p={p}"
    ));
    let mut upper = 0usize;
    let mut lower = 0usize;
    let mut bad: Vec<String> = Vec::new();
    for y in nonneg_up_to(w, bound) {
        if y.bar_class()?.is_persistent() {
            continue;
        }
        upper += 1;
        for mono in monomials(y) {
            if !(mono.a >= 1 || mono.b >= 2) {
                bad.push(format!("Hom(O, O({})) contains {mono}", y.expr()));
            }
        }
    }
    for z in nonneg_up_to(w, bound) {
        let y = z + x2;
        if y.bar_class()?.is_persistent() {
            continue;
        }
        lower += 1;
        for mono in monomials(z) {
            if !(mono.a >= 1 || mono.b >= 1) {
                bad.push(format!("Hom(O(x2), O({})) contains {mono}", y.expr()));
            }
        }
    }
    r.check(
        bad.is_empty(),
        "monomial generation",
        format!("{upper} upper and {lower} lower targets, {} violations", bad.len()),
    );
    for b in bad.into_iter().take(10) {
        r.check(false, "violation", b);
    }
    Ok(r)
}

/// One cell of the persistent-summand table: the class modulo Z·x3 as the
/// residue `n1·x1 + n2·x2`, and whether it is persistent.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Table1Cell {
    pub n1: i64,
    pub n2: i64,
    pub boxed: bool,
}

impl Table1Cell {
    fn of(x: LElt) -> Result<Self> {
        let [n1, n2, _] = x.n();
        let boxed = !matches!(x.bar_class()?, BarClass::Fading(..));
        Ok(Table1Cell { n1, n2, boxed })
    }

    pub fn label(&self) -> String {
        let s = match (self.n1, self.n2) {
            (0, 0) => String::from("0"),
            (0, b) => term(b, "x2"),
            (1, 0) => String::from("x1"),
            (1, b) => format!("x1+{}", term(b, "x2")),
            _ => unreachable!("residue outside the 2x3 box"),
        };
        if self.boxed {
            format!("[{s}]")
        } else {
            s
        }
    }
}

fn term(k: i64, name: &str) -> String {
    if k == 1 {
        String::from(name)
    } else {
        format!("{k}{name}")
    }
}

pub const TABLE1_COLUMNS: [&str; 4] = ["x+w", "x-x1", "x-x2", "x-x3"];

/// Rows i = 0..5: classes of iω+ω, iω−x1, iω−x2, iω−x3 modulo Z·x3.
pub fn table1(p: i64) -> Result<[[Table1Cell; 4]; 6]> {
    let w = WeightTriple::two_three(p)?;
    let om = LElt::omega(w);
    let mut rows = [[Table1Cell {
        n1: 0,
        n2: 0,
        boxed: false,
    }; 4]; 6];
    for (i, row) in rows.iter_mut().enumerate() {
        let x = om.smul(i as i64);
        let entries = [x + om, x - LElt::x(w, 1), x - LElt::x(w, 2), x - LElt::x(w, 3)];
        for (cell, e) in row.iter_mut().zip(entries) {
            *cell = Table1Cell::of(e)?;
        }
    }
    Ok(rows)
}

const fn cell(n1: i64, n2: i64, boxed: bool) -> Table1Cell {
    Table1Cell { n1, n2, boxed }
}

/// Reference values, residues modulo Z·x3 with boxes marking persistence.
pub const TABLE1_REFERENCE: [[Table1Cell; 4]; 6] = [
    [cell(1, 2, false), cell(1, 0, false), cell(0, 2, false), cell(0, 0, true)],
    [cell(0, 1, true), cell(0, 2, false), cell(1, 1, false), cell(1, 2, false)],
    [cell(1, 0, false), cell(1, 1, false), cell(0, 0, true), cell(0, 1, true)],
    [cell(0, 2, false), cell(0, 0, true), cell(1, 2, false), cell(1, 0, false)],
    [cell(1, 1, false), cell(1, 2, false), cell(0, 1, true), cell(0, 2, false)],
    [cell(0, 0, true), cell(0, 1, true), cell(1, 0, false), cell(1, 1, false)],
];

/// Compares the regenerated table with the reference cell by cell.
pub fn table1_check(p: i64) -> Result<Report> {
    let t = table1(p)?;
    let mut r = Report::new(format!("persistent summands of P(E), p={p}"));
    let diff: Vec<String> = (0..6)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .filter(|&(i, j)| t[i][j] != TABLE1_REFERENCE[i][j])
        .map(|(i, j)| {
            format!(
                "row {i} col {}: {} vs {}",
                TABLE1_COLUMNS[j],
                t[i][j].label(),
                TABLE1_REFERENCE[i][j].label()
            )
        })
        .collect();
    r.check(diff.is_empty(), "table matches cell for cell, boxes included", diff.join("; "));
    r.check(t.iter().all(|row| row.iter().any(|c| c.boxed)), "every row has a boxed entry", "");
    Ok(r)
}

/// Aligned text rendering with boxes shown as `[...]`.
pub fn format_table1(p: i64) -> Result<String> {
    let rows = table1(p)?;
    let mut s = format!("{:<6}", "");
    for c in TABLE1_COLUMNS {
        s.push_str(&format!("{c:<12}"));
    }
    s = String::from(s.trim_end());
    s.push('\n');
    for (i, row) in rows.iter().enumerate() {
        let mut line = format!("{:<6}", format!("{i}w"));
        for cell in row {
            line.push_str(&format!("{:<12}", cell.label()));
        }
        s.push_str(line.trim_end());
        s.push('\n');
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(p: i64) -> WeightTriple {
        WeightTriple::two_three(p).unwrap()
    }

    #[test]
    fn spec_examples() {
        let w5 = w(5);
        assert_eq!(monomials(LElt::zero(w5)), vec![Monomial { a: 0, b: 0, c: 0 }]);
        assert_eq!(
            monomials(LElt::c(w5)),
            vec![Monomial { a: 0, b: 3, c: 0 }, Monomial { a: 0, b: 0, c: 5 }]
        );
        assert!(monomials(LElt::omega(w5)).is_empty());
        assert_eq!(dim_s(LElt::x(w5, 3)), 1);
        let x12 = LElt::x(w5, 1) + LElt::x(w5, 2);
        assert_eq!(dim_s(x12), 1);
        assert_eq!(hom_dim(LElt::zero(w5), x12), 1);
        assert_eq!(ext1_dim(LElt::x(w5, 3), LElt::zero(w5)), 0);
        assert_eq!(euler_form(LElt::zero(w(6)), LElt::c(w(6))), 2);
        for x in nonneg_up_to(w5, 40) {
            assert_eq!(ext1_dim(x, x + LElt::omega(w5)), 1);
            assert_eq!(euler_form(x, x), 1);
        }
    }

    #[test]
    fn fading_generation() {
        for p in 2..=9 {
            let r = fading_generation_check(p, 4).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn table_rows() {
        let t = table1(7).unwrap();
        let labels: Vec<Vec<String>> = t.iter().map(|r| r.iter().map(|c| c.label()).collect()).collect();
        assert_eq!(labels[1], vec!["[x2]", "2x2", "x1+x2", "x1+2x2"]);
        assert_eq!(labels[0][3], "[0]");
        assert!(t.iter().all(|row| row.iter().any(|c| c.boxed)));
        for p in 2..=9 {
            assert!(table1_check(p).unwrap().passed());
        }
    }
}
