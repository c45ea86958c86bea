//! The rank one abelian group L(p1,p2,p3) on generators x1, x2, x3 with
//! relations p1·x1 = p2·x2 = p3·x3 =: c.
//!
//! Every element has a unique normal form n1·x1 + n2·x2 + n3·x3 + m·c with
//! 0 ≤ ni < pi, which is the only representation used.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::report::Report;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct WeightTriple {
    p: [i64; 3],
}

impl WeightTriple {
    pub fn new(p1: i64, p2: i64, p3: i64) -> Result<Self> {
        if p1 < 2 || p2 < 2 || p3 < 2 {
            return Err(Error::InvalidWeights(p1, p2, p3));
        }
        Ok(WeightTriple { p: [p1, p2, p3] })
    }

    /// The triple (2,3,p).
    pub fn two_three(p: i64) -> Result<Self> {
        WeightTriple::new(2, 3, p)
    }

    pub fn weights(&self) -> [i64; 3] {
        self.p
    }

    /// Weight `p_i` for `i` in `1..=3`.
    pub fn p(&self, i: usize) -> i64 {
        self.p[i - 1]
    }

    pub fn is_two_three(&self) -> bool {
        self.p[0] == 2 && self.p[1] == 3
    }

    /// lcm(p1,p2,p3); equals lcm(6,p) for (2,3,p).
    pub fn lcm(&self) -> i64 {
        self.p[0].lcm(&self.p[1]).lcm(&self.p[2])
    }

    pub(crate) fn require_two_three(&self) -> Result<i64> {
        if self.is_two_three() {
            Ok(self.p[2])
        } else {
            Err(Error::NotTwoThree(self.p[0], self.p[1], self.p[2]))
        }
    }
}

impl fmt::Display for WeightTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p[0], self.p[1], self.p[2])
    }
}

/// An element of L in normal form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LElt {
    w: WeightTriple,
    n: [i64; 3],
    m: i64,
}

impl LElt {
    /// Normal form of a1·x1 + a2·x2 + a3·x3 + m·c.
    pub fn normalize(w: WeightTriple, a: [i64; 3], m: i64) -> LElt {
        let mut n = [0; 3];
        let mut m = m;
        for i in 0..3 {
            let (q, r) = a[i].div_mod_floor(&w.p[i]);
            n[i] = r;
            m += q;
        }
        LElt { w, n, m }
    }

    pub fn zero(w: WeightTriple) -> LElt {
        LElt { w, n: [0; 3], m: 0 }
    }

    /// Generator `x_i` for `i` in `1..=3`.
    pub fn x(w: WeightTriple, i: usize) -> LElt {
        let mut a = [0; 3];
        a[i - 1] = 1;
        LElt::normalize(w, a, 0)
    }

    pub fn c(w: WeightTriple) -> LElt {
        LElt { w, n: [0; 3], m: 1 }
    }

    /// The dualizing element c - x1 - x2 - x3.
    pub fn omega(w: WeightTriple) -> LElt {
        LElt::normalize(w, [-1, -1, -1], 1)
    }

    /// x̄_i = x_i + ω.
    pub fn xbar(w: WeightTriple, i: usize) -> LElt {
        LElt::x(w, i) + LElt::omega(w)
    }

    pub fn weights(&self) -> WeightTriple {
        self.w
    }

    pub fn n(&self) -> [i64; 3] {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.n == [0; 3] && self.m == 0
    }

    /// Whether x lies in the positive cone, i.e. m ≥ 0.
    pub fn is_nonneg(&self) -> bool {
        self.m >= 0
    }

    pub fn checked_add(self, other: LElt) -> Result<LElt> {
        if self.w != other.w {
            return Err(Error::WeightMismatch);
        }
        let a = [self.n[0] + other.n[0], self.n[1] + other.n[1], self.n[2] + other.n[2]];
        Ok(LElt::normalize(self.w, a, self.m + other.m))
    }

    pub fn smul(self, k: i64) -> LElt {
        if k < 0 {
            return -(self.smul(-k));
        }
        LElt::normalize(self.w, [k * self.n[0], k * self.n[1], k * self.n[2]], k * self.m)
    }

    /// Degree for an arbitrary triple: x_i ↦ lcm(p1,p2,p3)/p_i.
    pub fn degree(&self) -> i64 {
        let l = self.w.lcm();
        (0..3).map(|i| self.n[i] * (l / self.w.p[i])).sum::<i64>() + self.m * l
    }

    /// The degree homomorphism δ with δ(x_i) = lcm(6,p)/p_i.
    pub fn delta(&self) -> Result<i64> {
        self.w.require_two_three()?;
        Ok(self.degree())
    }

    pub fn bar_class(&self) -> Result<BarClass> {
        self.w.require_two_three()?;
        Ok(match (self.n[0], self.n[1]) {
            (0, 0) => BarClass::UpperBar,
            (0, 1) => BarClass::LowerBar,
            (n1, n2) => BarClass::Fading(n1, n2),
        })
    }

    pub fn is_persistent(&self) -> Result<bool> {
        Ok(self.bar_class()?.is_persistent())
    }

    /// Symbol k is `+` iff x + k·ω is persistent.
    pub fn tau_pattern(&self) -> Result<TauPattern> {
        let om = LElt::omega(self.w);
        let mut out = [false; 6];
        let mut y = *self;
        for slot in out.iter_mut() {
            *slot = y.is_persistent()?;
            y = y + om;
        }
        Ok(TauPattern(out))
    }

    /// Parses the serialization "n1,n2,n3,m" (normalizing if needed).
    pub fn parse(w: WeightTriple, s: &str) -> Result<LElt> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::Invalid(format!("expected n1,n2,n3,m, got {s:?}")));
        }
        let mut v = [0i64; 4];
        for (slot, part) in v.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| Error::Invalid(format!("not an integer: {part:?}")))?;
        }
        Ok(LElt::normalize(w, [v[0], v[1], v[2]], v[3]))
    }

    /// Human readable expression such as `x1+2x2-c`.
    pub fn expr(&self) -> String {
        let mut s = String::new();
        let terms = [(self.n[0], "x1"), (self.n[1], "x2"), (self.n[2], "x3"), (self.m, "c")];
        for (k, name) in terms {
            if k == 0 {
                continue;
            }
            if k < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if k.abs() != 1 {
                s.push_str(&format!("{}", k.abs()));
            }
            s.push_str(name);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl fmt::Display for LElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.n[0], self.n[1], self.n[2], self.m)
    }
}

impl Add for LElt {
    type Output = LElt;

    /// Panics if the weight triples differ.
    fn add(self, rhs: LElt) -> LElt {
        self.checked_add(rhs).expect("adding elements of different groups")
    }
}

impl Neg for LElt {
    type Output = LElt;

    fn neg(self) -> LElt {
        LElt::normalize(self.w, [-self.n[0], -self.n[1], -self.n[2]], -self.m)
    }
}

impl Sub for LElt {
    type Output = LElt;

    fn sub(self, rhs: LElt) -> LElt {
        self + (-rhs)
    }
}

impl Mul<LElt> for i64 {
    type Output = LElt;

    fn mul(self, rhs: LElt) -> LElt {
        rhs.smul(self)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum BarClass {
    /// x ∈ Z·x3.
    UpperBar,
    /// x ∈ x2 + Z·x3.
    LowerBar,
    /// Residue (n1, n2) outside the two bars.
    Fading(i64, i64),
}

impl BarClass {
    pub fn is_persistent(&self) -> bool {
        !matches!(self, BarClass::Fading(..))
    }
}

/// Persistence of x, x+ω, …, x+5ω.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct TauPattern(pub [bool; 6]);

impl TauPattern {
    /// The pattern of the zero element.
    pub const BASE: TauPattern = TauPattern([true, false, true, false, false, false]);

    pub fn rotate(&self, k: usize) -> TauPattern {
        let mut out = [false; 6];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.0[(i + k) % 6];
        }
        TauPattern(out)
    }

    /// The rotation amount `k` with `BASE.rotate(k) == self`, if any.
    pub fn rotation_of_base(&self) -> Option<usize> {
        (0..6).find(|&k| TauPattern::BASE.rotate(k) == *self)
    }

    pub fn plus_count(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }
}

impl fmt::Display for TauPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "+" } else { "-" })?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupStructure {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

/// Free rank and invariant factors via the Smith form of the relations.
pub fn structure(w: WeightTriple) -> GroupStructure {
    let [p1, p2, p3] = w.p;
    let rel = IntMatrix::from_i64(&[&[p1, -p2, 0], &[p1, 0, -p3]]);
    let diag = rel.smith_diagonal();
    let rank = diag.iter().filter(|d| !num_traits::Zero::is_zero(*d)).count();
    let torsion = diag.iter().filter_map(|d| d.to_i64()).filter(|&d| d > 1).collect();
    GroupStructure {
        free_rank: 3 - rank,
        torsion,
    }
}

/// Canonical representative of x + Z·v: the unique element of the coset
/// with 0 ≤ deg < |deg v|.
pub fn coset_rep(x: LElt, v: LElt) -> Result<LElt> {
    let dv = v.degree();
    if dv == 0 {
        return Err(Error::InfiniteQuotient);
    }
    let k = Integer::div_floor(&x.degree(), &dv);
    Ok(x - v.smul(k))
}

/// Coset representatives of L/Z·v in breadth-first order from 0.
pub fn quotient(v: LElt) -> Result<Vec<LElt>> {
    let w = v.w;
    let zero = coset_rep(LElt::zero(w), v)?;
    let gens = [LElt::x(w, 1), LElt::x(w, 2), LElt::x(w, 3)];
    let mut seen = BTreeSet::new();
    seen.insert(zero);
    let mut order = alloc::vec![zero];
    let mut head = 0;
    while head < order.len() {
        let cur = order[head];
        head += 1;
        for g in gens {
            let nxt = coset_rep(cur + g, v)?;
            if seen.insert(nxt) {
                order.push(nxt);
            }
        }
    }
    Ok(order)
}

/// Order of the class of x in L/Z·v.
pub fn order_in_quotient(x: LElt, v: LElt) -> Result<usize> {
    let zero = coset_rep(LElt::zero(x.w), v)?;
    let mut y = x;
    let mut k = 1;
    while coset_rep(y, v)? != zero {
        y = y + x;
        k += 1;
    }
    Ok(k)
}

/// The congruences k·ω mod Z·x3, as (k, a1, a2) meaning k·ω ≡ a1·x1 + a2·x2.
pub const OMEGA_CONGRUENCES: [(i64, i64, i64); 6] = [(0, 0, 0), (1, 1, 2), (2, 0, 1), (3, 1, 0), (4, 0, 2), (5, 1, 1)];

/// Checks the defining identities among x̄_i, ω and the generators.
pub fn identity_suite(p: i64) -> Result<Report> {
    let w = WeightTriple::two_three(p)?;
    let x1 = LElt::x(w, 1);
    let x2 = LElt::x(w, 2);
    let x3 = LElt::x(w, 3);
    let om = LElt::omega(w);
    let xb = |i| LElt::xbar(w, i);
    let mut r = Report::new(format!("group identities, p={p}"));
    let mut eq = |label: &str, lhs: LElt, rhs: LElt| {
        r.check(lhs == rhs, label, format!("{lhs} vs {rhs}"));
    };
    eq("2x1 = c", x1.smul(2), LElt::c(w));
    eq("3x2 = c", x2.smul(3), LElt::c(w));
    eq("p x3 = c", x3.smul(p), LElt::c(w));
    eq("xbar1 = xbar2 + xbar3", xb(1), xb(2) + xb(3));
    eq("x2 = 2 xbar3", x2, xb(3).smul(2));
    eq("x1 = 3 xbar3", x1, xb(3).smul(3));
    eq("6 omega = (p-6) x3", om.smul(6), x3.smul(p - 6));
    let l = 3i64.lcm(&p);
    eq("lcm(3,p) omega = lcm(3,p)(p-6)/(3p) x1", om.smul(l), x1.smul(l * (p - 6) / (3 * p)));
    for (k, a1, a2) in OMEGA_CONGRUENCES {
        let lhs = coset_rep(om.smul(k), x3)?;
        let rhs = coset_rep(LElt::normalize(w, [a1, a2, 0], 0), x3)?;
        r.check(lhs == rhs, format!("{k} omega mod Z x3"), format!("{lhs} vs {rhs}"));
    }
    let q3 = quotient(x3)?;
    let om_ord = order_in_quotient(om, x3)?;
    r.check(
        q3.len() == 6 && om_ord == 6,
        "L/Z x3 cyclic of order 6 generated by omega",
        format!("|L/Zx3| = {}, ord(omega) = {om_ord}", q3.len()),
    );
    let ord1 = order_in_quotient(om, x1)?;
    r.check(ord1 as i64 == l, "order of omega in L/Z x1 is lcm(3,p)", format!("{ord1} vs {l}"));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(p: i64) -> WeightTriple {
        WeightTriple::two_three(p).unwrap()
    }

    #[test]
    fn normal_forms() {
        let w5 = w(5);
        assert_eq!(LElt::normalize(w5, [2, 0, 0], 0).to_string(), "0,0,0,1");
        assert_eq!(LElt::normalize(w5, [1, -1, -1], 0).to_string(), "1,2,4,-2");
        assert_eq!(LElt::omega(w5), LElt::normalize(w5, [1, -1, -1], 0));
        assert_eq!(LElt::omega(w5).smul(6), LElt::normalize(w5, [0, 0, -1], 0));
        assert_eq!(LElt::xbar(w5, 2) + LElt::xbar(w5, 3), LElt::xbar(w5, 1));
    }

    #[test]
    fn omega_normal_form_by_search() {
        // Independent oracle: scan small normal forms for the element whose
        // sum with x1+x2+x3 equals c.
        for p in 2..=9 {
            let w = w(p);
            let target = LElt::c(w);
            let s = LElt::x(w, 1) + LElt::x(w, 2) + LElt::x(w, 3);
            let mut found = vec![];
            for n1 in 0..2 {
                for n2 in 0..3 {
                    for n3 in 0..p {
                        for m in -4..4 {
                            let e = LElt::normalize(w, [n1, n2, n3], m);
                            if e + s == target {
                                found.push(e);
                            }
                        }
                    }
                }
            }
            assert_eq!(found, vec![LElt::omega(w)]);
            assert_eq!(LElt::omega(w).n(), [1, 2, p - 1]);
            assert_eq!(LElt::omega(w).m(), -2);
        }
    }

    #[test]
    fn delta_values() {
        let w5 = w(5);
        assert_eq!(LElt::x(w5, 1).delta(), Ok(15));
        assert_eq!(LElt::x(w5, 2).delta(), Ok(10));
        assert_eq!(LElt::x(w5, 3).delta(), Ok(6));
        assert_eq!(LElt::omega(w(4)).delta(), Ok(-1));
        let g = WeightTriple::new(2, 2, 5).unwrap();
        assert!(LElt::x(g, 1).delta().is_err());
        assert!(LElt::x(g, 1).bar_class().is_err());
    }

    #[test]
    fn bars_and_patterns() {
        let w5 = w(5);
        assert_eq!(LElt::x(w5, 2).bar_class(), Ok(BarClass::LowerBar));
        assert!(matches!(LElt::x(w5, 1).bar_class(), Ok(BarClass::Fading(1, 0))));
        assert_eq!(LElt::x(w5, 3).smul(7).bar_class(), Ok(BarClass::UpperBar));
        assert_eq!(LElt::zero(w5).tau_pattern().unwrap().to_string(), "+-+---");
        assert_eq!(LElt::omega(w5).tau_pattern().unwrap().to_string(), "-+---+");
        assert_eq!(LElt::x(w5, 2).tau_pattern().unwrap().to_string(), "+---+-");
    }

    #[test]
    fn structures() {
        let s = |p1, p2, p3| structure(WeightTriple::new(p1, p2, p3).unwrap());
        assert_eq!(
            s(2, 3, 5),
            GroupStructure {
                free_rank: 1,
                torsion: vec![]
            }
        );
        assert_eq!(
            s(2, 3, 2),
            GroupStructure {
                free_rank: 1,
                torsion: vec![2]
            }
        );
        assert_eq!(
            s(2, 3, 6),
            GroupStructure {
                free_rank: 1,
                torsion: vec![6]
            }
        );
        assert_eq!(
            s(4, 6, 10),
            GroupStructure {
                free_rank: 1,
                torsion: vec![2, 2]
            }
        );
    }

    #[test]
    fn quotients() {
        for p in 2..=12 {
            let w = w(p);
            assert_eq!(quotient(LElt::x(w, 3)).unwrap().len(), 6);
        }
        assert_eq!(quotient(LElt::omega(w(8))).unwrap().len(), 2);
        assert_eq!(order_in_quotient(LElt::omega(w(5)), LElt::x(w(5), 1)), Ok(15));
        assert_eq!(quotient(LElt::omega(w(6))), Err(Error::InfiniteQuotient));
        assert_eq!(quotient(LElt::omega(w(2))).unwrap().len(), 4);
    }

    #[test]
    fn identity_suites_pass() {
        for p in 2..=12 {
            let r = identity_suite(p).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(LElt::omega(w(6)).smul(6).is_zero());
    }

    #[test]
    fn parse_and_expr() {
        let w4 = w(4);
        let e = LElt::parse(w4, "1,0,2,-1").unwrap();
        assert_eq!(e, LElt::normalize(w4, [1, 0, -2], 0));
        assert_eq!(e.expr(), "x1+2x3-c");
        assert_eq!(LElt::zero(w4).expr(), "0");
        assert!(LElt::parse(w4, "1,2").is_err());
    }

    #[test]
    #[should_panic]
    fn mismatched_add_panics() {
        let _ = LElt::x(w(4), 1) + LElt::x(w(5), 1);
    }
}
