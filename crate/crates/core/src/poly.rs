//! Univariate polynomials with integer or rational coefficients.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::{q, Q};

/// Coefficients stored lowest degree first, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeffs_i64(&self) -> Vec<i64> {
        self.coeffs.iter().map(|c| c.to_i64().expect("coefficient fits in i64")).collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(n: usize) -> IntPoly {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = -BigInt::one();
        c[n] = BigInt::one();
        IntPoly::new(c)
    }

    pub fn to_q(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| Q::from_integer(c.clone())).collect())
    }

    /// Whether `self` divides `other` in `Q[t]`.
    pub fn divides(&self, other: &IntPoly) -> bool {
        other.to_q().div_rem(&self.to_q()).1.is_zero()
    }

    /// Whether the coefficient sequence reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }
}

fn write_poly<T: fmt::Display + Zero + One + PartialEq + Signed>(f: &mut fmt::Formatter<'_>, coeffs: &[T]) -> fmt::Result {
    if coeffs.is_empty() {
        return f.write_str("0");
    }
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let unit = a.is_one();
        if !unit || i == 0 {
            let _ = write!(s, "{}", a);
        }
        match i {
            0 => {}
            1 => s.push('t'),
            _ => {
                let _ = write!(s, "t^{}", i);
            }
        }
    }
    f.write_str(&s)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs)
    }
}

/// Rational polynomial, lowest degree first, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPoly {
    coeffs: Vec<Q>,
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs)
    }
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> &Q {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect())
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().clone();
        QPoly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn neg(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        if r.len() <= dd {
            return (QPoly::new(Vec::new()), self.clone());
        }
        let mut quot = vec![Q::zero(); r.len() - dd];
        let l = d.lead();
        for k in (0..quot.len()).rev() {
            let c = &r[k + dd] / l;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        r.truncate(dd);
        (QPoly::new(quot), QPoly::new(r))
    }

    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree(&self) -> QPoly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Q> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let f = self.squarefree();
        let sturm = sturm_sequence(&f);
        // Cauchy bound.
        let lead = f.lead().clone();
        let bound = f
            .coeffs
            .iter()
            .map(|c| (c / &lead).abs())
            .fold(Q::zero(), |a, b| if b > a { b } else { a })
            + q(1);
        // Denominators of rational roots divide the leading coefficient of
        // the primitive integer multiple; two such roots are 1/L^2 apart.
        let den_lcm = f.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = f
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let l = ints.last().unwrap().abs();
        let sep = Q::new(BigInt::one(), &l * &l * 2u32);
        let mut roots = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((a, b)) = stack.pop() {
            let n = sign_changes(&sturm, &a) - sign_changes(&sturm, &b);
            if n == 0 {
                continue;
            }
            if n == 1 && &b - &a < sep {
                let r = simplest_between(&a, &b);
                if f.eval(&r).is_zero() {
                    roots.push(r);
                }
                continue;
            }
            let mid = (&a + &b) / q(2);
            if f.eval(&mid).is_zero() {
                roots.push(mid.clone());
                let eps = sep.clone() / q(4);
                // Exclude the found root by splitting around it.
                stack.push((a, &mid - &eps));
                stack.push((&mid + &eps, b));
                continue;
            }
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

fn sturm_sequence(f: &QPoly) -> Vec<QPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].div_rem(&seq[n - 1]).1.neg();
        if r.is_zero() {
            break;
        }
        seq.push(r);
    }
    seq
}

fn sign_changes(seq: &[QPoly], x: &Q) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// The rational with smallest denominator in the closed interval `[a, b]`.
pub fn simplest_between(a: &Q, b: &Q) -> Q {
    debug_assert!(a <= b);
    if b.is_negative() {
        return -simplest_between(&-b, &-a);
    }
    if !a.is_positive() {
        return Q::zero();
    }
    let fl = a.floor();
    if fl == *a {
        return fl;
    }
    let up = &fl + q(1);
    if up <= *b {
        return up;
    }
    let inner = simplest_between(&(b - &fl).recip(), &(a - &fl).recip());
    fl + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q_frac;
    use alloc::string::ToString;

    fn qp(c: &[i64]) -> QPoly {
        QPoly::new(c.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64(&[1, 1, 1]).to_string(), "t^2 + t + 1");
        assert_eq!(IntPoly::from_i64(&[-1, 0, 0, 2]).to_string(), "2t^3 - 1");
        assert_eq!(IntPoly::from_i64(&[]).to_string(), "0");
    }

    #[test]
    fn rational_roots_found_exactly() {
        // (2t - 3)(t + 5)(t^2 + 1)(t - 1)^2
        let f = qp(&[-3, 2])
            .to_int_mul(&qp(&[5, 1]))
            .to_int_mul(&qp(&[1, 0, 1]))
            .to_int_mul(&qp(&[-1, 1]))
            .to_int_mul(&qp(&[-1, 1]));
        assert_eq!(f.rational_roots(), vec![q(-5), q(1), q_frac(3, 2)]);
        assert!(qp(&[-2, 0, 1]).rational_roots().is_empty());
        assert_eq!(qp(&[0, 1]).rational_roots(), vec![q(0)]);
    }

    #[test]
    fn simplest_fraction() {
        assert_eq!(simplest_between(&q_frac(3, 10), &q_frac(4, 10)), q_frac(1, 3));
        assert_eq!(simplest_between(&q_frac(-7, 2), &q_frac(-3, 1)), q(-3));
        assert_eq!(simplest_between(&q_frac(-1, 2), &q_frac(1, 2)), q(0));
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = qp(&[1, 2, 1]); // (t+1)^2
        assert_eq!(f.squarefree(), qp(&[1, 1]));
        assert_eq!(qp(&[-1, 0, 1]).gcd(&qp(&[1, 1])), qp(&[1, 1]));
    }

    impl QPoly {
        fn to_int_mul(&self, other: &QPoly) -> QPoly {
            let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
            for (i, a) in self.coeffs.iter().enumerate() {
                for (j, b) in other.coeffs.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            QPoly::new(out)
        }
    }
}
