//! Laurent polynomials and matrices over a finite field.

use crate::error::{Error, Result};
use crate::ff::{Elem, Gf};

/// Exponents beyond this bound signal runaway growth.
pub const EXPONENT_CAP: i64 = 32;

/// `sum_i coeffs[i] t^(lo + i)`; normalised so that both end coefficients are nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    pub lo: i64,
    pub coeffs: Vec<Elem>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(c: Elem, e: i64) -> Self {
        LaurentPoly { lo: e, coeffs: vec![c] }.normalized()
    }

    pub fn constant(c: Elem) -> Self {
        Self::monomial(c, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
        self
    }

    /// t-adic valuation; `None` for zero.
    pub fn val(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lo)
    }

    pub fn hi(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> Elem {
        let i = e - self.lo;
        if i < 0 || i >= self.coeffs.len() as i64 {
            0
        } else {
            self.coeffs[i as usize]
        }
    }

    pub fn add(&self, f: &Gf, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(o.lo);
        let hi = self.hi().unwrap().max(o.hi().unwrap());
        let coeffs = (lo..=hi).map(|e| f.add(self.coeff(e), o.coeff(e))).collect();
        LaurentPoly { lo, coeffs }.normalized()
    }

    pub fn neg(&self, f: &Gf) -> Self {
        LaurentPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }

    pub fn sub(&self, f: &Gf, o: &Self) -> Self {
        self.add(f, &o.neg(f))
    }

    pub fn mul(&self, f: &Gf, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        LaurentPoly {
            lo: self.lo + o.lo,
            coeffs,
        }
        .normalized()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            lo: self.lo + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Applies `x -> x^q` to every coefficient.
    pub fn frobenius(&self, f: &Gf, q: u32) -> Self {
        LaurentPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|&c| f.frobenius(c, q)).collect(),
        }
        .normalized()
    }

    fn check(self) -> Result<Self> {
        if let (Some(lo), Some(hi)) = (self.val(), self.hi()) {
            if lo < -EXPONENT_CAP {
                return Err(Error::ExponentRange(lo));
            }
            if hi > EXPONENT_CAP {
                return Err(Error::ExponentRange(hi));
            }
        }
        Ok(self)
    }

    pub fn format(&self, f: &Gf) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let e = self.lo + i as i64;
                let cs = f.format(c);
                match (e, c) {
                    (0, _) => cs,
                    (1, 1) => "t".into(),
                    (_, 1) => format!("t^{e}"),
                    (1, _) => format!("{cs}*t"),
                    _ => format!("{cs}*t^{e}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

/// Square matrix with Laurent polynomial entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    pub n: usize,
    pub e: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zero(n: usize) -> Self {
        LaurentMatrix {
            n,
            e: vec![LaurentPoly::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.e[i * n + i] = LaurentPoly::constant(1);
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.e[r * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: LaurentPoly) {
        self.e[r * self.n + c] = v;
    }

    pub fn mul(&self, f: &Gf, o: &Self) -> Result<Self> {
        let n = self.n;
        let mut out = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = LaurentPoly::zero();
                for k in 0..n {
                    let a = self.get(r, k);
                    let b = o.get(k, c);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(f, &a.mul(f, b));
                    }
                }
                out.set(r, c, acc.check()?);
            }
        }
        Ok(out)
    }

    pub fn frobenius(&self, f: &Gf, q: u32) -> Self {
        LaurentMatrix {
            n: self.n,
            e: self.e.iter().map(|x| x.frobenius(f, q)).collect(),
        }
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> Self {
        let n = self.n;
        let mut e = Vec::with_capacity((n - 1) * (n - 1));
        for r in (0..n).filter(|&r| r != skip_r) {
            for c in (0..n).filter(|&c| c != skip_c) {
                e.push(self.get(r, c).clone());
            }
        }
        LaurentMatrix { n: n - 1, e }
    }

    pub fn det(&self, f: &Gf) -> LaurentPoly {
        match self.n {
            0 => LaurentPoly::constant(1),
            1 => self.e[0].clone(),
            n => {
                let mut acc = LaurentPoly::zero();
                for c in 0..n {
                    let a = self.get(0, c);
                    if a.is_zero() {
                        continue;
                    }
                    let term = a.mul(f, &self.minor(0, c).det(f));
                    acc = if c % 2 == 0 { acc.add(f, &term) } else { acc.sub(f, &term) };
                }
                acc
            }
        }
    }

    /// Adjugate: `adj(g) g = det(g) Id`.
    pub fn adjugate(&self, f: &Gf) -> Self {
        let n = self.n;
        if n == 1 {
            return Self::identity(1);
        }
        let mut out = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                let m = self.minor(c, r).det(f);
                out.set(r, c, if (r + c) % 2 == 0 { m } else { m.neg(f) });
            }
        }
        out
    }

    pub fn format(&self, f: &Gf) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c).format(f)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_arithmetic() {
        let f = Gf::new(3, 1).unwrap();
        let a = LaurentPoly { lo: -1, coeffs: vec![1, 2] };
        let b = LaurentPoly { lo: 0, coeffs: vec![2, 1] };
        let s = a.add(&f, &b);
        assert_eq!(s, LaurentPoly { lo: -1, coeffs: vec![1, 1, 1] });
        assert!(a.sub(&f, &a).is_zero());
        let p = a.mul(&f, &b);
        // (t^-1 + 2)(2 + t) = 2t^-1 + 1 + 1 + 2t = 2t^-1 + 2 + 2t
        assert_eq!(p, LaurentPoly { lo: -1, coeffs: vec![2, 2, 2] });
        assert_eq!(p.val(), Some(-1));
    }

    #[test]
    fn adjugate_identity() {
        let f = Gf::new(2, 1).unwrap();
        let mut g = LaurentMatrix::identity(3);
        g.set(0, 1, LaurentPoly::monomial(1, 1));
        g.set(2, 0, LaurentPoly::monomial(1, -1));
        g.set(1, 1, LaurentPoly::monomial(1, 2));
        let d = g.det(&f);
        let prod = g.adjugate(&f).mul(&f, &g).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                let want = if r == c { d.clone() } else { LaurentPoly::zero() };
                assert_eq!(prod.get(r, c), &want);
            }
        }
    }

    #[test]
    fn exponent_guard() {
        let f = Gf::new(2, 1).unwrap();
        let mut g = LaurentMatrix::identity(2);
        g.set(0, 0, LaurentPoly::monomial(1, 20));
        assert!(matches!(g.mul(&f, &g), Err(Error::ExponentRange(40))));
    }
}
