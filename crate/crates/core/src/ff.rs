//! Finite fields `GF(p^k)` with full lookup tables.
//!
//! Elements are integers `0..p^k`, read as base-`p` coefficient vectors of a
//! polynomial modulo a fixed irreducible polynomial.

use crate::caps::DEFAULT_FIELD_CAP;
use crate::error::{invalid, Result};

#[derive(Clone, Debug)]
pub struct Gf {
    pub p: u32,
    pub k: u32,
    pub size: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

pub type Elem = u32;

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Factors a prime power `q = p^e`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    if !is_prime(p) {
        return None;
    }
    let mut r = q;
    let mut e = 0;
    while r.is_multiple_of(p) {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // modulus is monic of degree k
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c != 0 {
            for (i, &m) in modulus.iter().enumerate() {
                let idx = d - k + i;
                prod[idx] = (prod[idx] + p * p - c * m % p) % p;
            }
        }
    }
    prod.truncate(k);
    prod.resize(k, 0);
    prod
}

fn digits(x: u32, p: u32, k: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(k as usize);
    let mut r = x;
    for _ in 0..k {
        v.push(r % p);
        r /= p;
    }
    v
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// First monic irreducible polynomial of degree `k` over `F_p` (coefficients low to high).
fn irreducible(p: u32, k: u32) -> Vec<u32> {
    if k == 1 {
        return vec![0, 1];
    }
    let total = p.pow(k);
    'cand: for low in 0..total {
        let mut f = digits(low, p, k);
        f.push(1);
        if f[0] == 0 {
            continue;
        }
        for deg in 1..=k / 2 {
            for lowg in 0..p.pow(deg) {
                let mut g = digits(lowg, p, deg);
                g.push(1);
                if poly_rem(&f, &g, p).iter().all(|&c| c == 0) {
                    continue 'cand;
                }
            }
        }
        return f;
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if c != 0 {
            for (i, &m) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - c * m % p) % p;
            }
        }
        r.pop();
    }
    r
}

impl Gf {
    /// `GF(p^k)`, requiring `p^k <= 256`.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) || k == 0 {
            return invalid(format!("GF({p}^{k}) is not a field"));
        }
        let size = p.checked_pow(k).unwrap_or(u32::MAX);
        if size as u64 > DEFAULT_FIELD_CAP {
            return invalid(format!("field size {size} exceeds cap {DEFAULT_FIELD_CAP}"));
        }
        let modulus = irreducible(p, k);
        let s = size as usize;
        let mut add = vec![0; s * s];
        let mut mul = vec![0; s * s];
        let dig: Vec<Vec<u32>> = (0..size).map(|x| digits(x, p, k)).collect();
        for a in 0..s {
            for b in 0..s {
                let sum: Vec<u32> = dig[a].iter().zip(&dig[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * s + b] = from_digits(&sum, p);
                mul[a * s + b] = from_digits(&poly_mulmod(&dig[a], &dig[b], &modulus, p), p);
            }
        }
        let mut neg = vec![0; s];
        let mut inv = vec![0; s];
        for a in 0..s {
            neg[a] = (0..size).find(|&b| add[a * s + b as usize] == 0).unwrap();
            if a != 0 {
                inv[a] = (1..size).find(|&b| mul[a * s + b as usize] == 1).unwrap();
            }
        }
        Ok(Gf {
            p,
            k,
            size,
            add,
            mul,
            neg,
            inv,
        })
    }

    /// `F_{q^m}` for a prime power `q`.
    pub fn extension(q: u32, m: u32) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or_else(|| crate::Error::InvalidInput(format!("{q} is not a prime power")))?;
        Gf::new(p, e * m)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[(a * self.size + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[(a * self.size + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x -> x^q`.
    pub fn frobenius(&self, a: Elem, q: u32) -> Elem {
        self.pow(a, q as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size
    }

    /// Embeds an integer of the prime field.
    pub fn from_int(&self, v: i64) -> Elem {
        v.rem_euclid(self.p as i64) as Elem
    }

    /// Base-`p` coefficients, used for printing.
    pub fn format(&self, a: Elem) -> String {
        if self.k == 1 {
            return a.to_string();
        }
        let d = digits(a, self.p, self.k);
        let terms: Vec<String> = d
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "z".to_string(),
                (1, c) => format!("{c}z"),
                (i, 1) => format!("z^{i}"),
                (i, c) => format!("{c}z^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            format!("({})", terms.join("+"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for (p, k) in [(2, 1), (2, 2), (3, 2), (2, 3), (5, 1)] {
            let f = Gf::new(p, k).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_subfield() {
        let f = Gf::extension(2, 2).unwrap();
        let fixed: Vec<_> = f.elements().filter(|&a| f.frobenius(a, 2) == a).collect();
        assert_eq!(fixed, vec![0, 1]);
        let f = Gf::extension(4, 2).unwrap();
        assert_eq!(f.elements().filter(|&a| f.frobenius(a, 4) == a).count(), 4);
        for a in f.elements() {
            assert_eq!(f.frobenius(f.frobenius(a, 4), 4), a);
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(6), None);
        assert!(Gf::extension(6, 1).is_err());
        assert!(Gf::new(2, 9).is_err());
    }
}
