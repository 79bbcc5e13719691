//! Root data of `GL_n` (type A) and `GSp_2n` (type C).
//!
//! Cocharacters are integer vectors in full coordinates: length `n` for
//! `GL_n`, length `2n` for `GSp_2n` with `a_i + a_{2n+1-i} = c`. Roots and
//! weights are evaluated on adjoint coordinates (length `n` in both cases).

use crate::error::{invalid, Result};
use crate::linalg;
use crate::{q, Q};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Gl,
    Gsp,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Gl => write!(f, "gl"),
            GroupKind::Gsp => write!(f, "gsp"),
        }
    }
}

/// Integer cocharacter in full coordinates.
pub type Coweight = Vec<i64>;

/// A root together with its coroot, in adjoint and full coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Linear functional on adjoint coordinates.
    pub adj: Vec<i64>,
    /// Linear functional on full coordinates (always `a_i - a_j`).
    pub full: Vec<i64>,
    /// Coroot in adjoint coordinates.
    pub co_adj: Vec<i64>,
    /// Coroot as a full-coordinate cocharacter.
    pub co_full: Vec<i64>,
}

impl Root {
    pub fn pair_full(&self, nu: &[i64]) -> i64 {
        self.full.iter().zip(nu).map(|(a, b)| a * b).sum()
    }

    pub fn pair_adj(&self, x: &[Q]) -> Q {
        self.adj
            .iter()
            .zip(x)
            .fold(Q::zero(), |acc, (a, b)| acc + q(*a) * b)
    }
}

/// Signed permutation in one-line notation, 1-based: `w(e_i) = sign(img[i]) e_|img[i]|`.
/// For `GL_n` all signs are positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteWeylElem {
    pub img: Vec<i32>,
}

impl FiniteWeylElem {
    pub fn identity(n: usize) -> Self {
        FiniteWeylElem {
            img: (1..=n as i32).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.img.len()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// `(self * other)(e_i) = self(other(e_i))`.
    pub fn compose(&self, other: &Self) -> Self {
        let img = other
            .img
            .iter()
            .map(|&v| {
                let s = v.signum();
                s * self.img[(v.unsigned_abs() - 1) as usize]
            })
            .collect();
        FiniteWeylElem { img }
    }

    pub fn inverse(&self) -> Self {
        let mut img = vec![0; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[(v.unsigned_abs() - 1) as usize] = v.signum() * (i as i32 + 1);
        }
        FiniteWeylElem { img }
    }

    /// Action on an adjoint-coordinate vector.
    pub fn act<T: Clone + std::ops::Neg<Output = T>>(&self, x: &[T]) -> Vec<T> {
        let mut out = x.to_vec();
        for (i, &v) in self.img.iter().enumerate() {
            let j = (v.unsigned_abs() - 1) as usize;
            out[j] = if v > 0 { x[i].clone() } else { -x[i].clone() };
        }
        out
    }

    /// Pulls back an adjoint functional: returns `alpha o self`.
    pub fn pullback(&self, alpha: &[i64]) -> Vec<i64> {
        self.img
            .iter()
            .map(|&v| alpha[(v.unsigned_abs() - 1) as usize] * v.signum() as i64)
            .collect()
    }

    pub fn is_signed(&self) -> bool {
        self.img.iter().any(|&v| v < 0)
    }
}

impl fmt::Display for FiniteWeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.img.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A functional is positive when its first nonzero coefficient is positive.
pub fn functional_is_positive(f: &[i64]) -> bool {
    f.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub kind: GroupKind,
    pub n: usize,
    positive: Vec<Root>,
    simple: Vec<Root>,
    highest: Root,
    two_rho_adj: Vec<i64>,
    two_rho_full: Vec<i64>,
    fund_weights: Vec<Vec<Q>>,
    fund_coweights: Vec<Vec<Q>>,
    highest_coeffs: Vec<i64>,
}

fn unit(len: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

fn add(a: &[i64], b: &[i64], sb: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + sb * y).collect()
}

impl RootDatum {
    pub fn new(kind: GroupKind, n: usize) -> Result<Self> {
        match kind {
            GroupKind::Gl => Self::gl(n),
            GroupKind::Gsp => Self::gsp(n),
        }
    }

    /// `GL_n`, `n >= 2`.
    pub fn gl(n: usize) -> Result<Self> {
        if n < 2 {
            return invalid(format!("GL_n needs n >= 2, got {n}"));
        }
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = add(&unit(n, i), &unit(n, j), -1);
                positive.push(Root {
                    adj: v.clone(),
                    full: v.clone(),
                    co_adj: v.clone(),
                    co_full: v,
                });
            }
        }
        let simple: Vec<Root> = (0..n - 1)
            .map(|i| {
                let v = add(&unit(n, i), &unit(n, i + 1), -1);
                Root {
                    adj: v.clone(),
                    full: v.clone(),
                    co_adj: v.clone(),
                    co_full: v,
                }
            })
            .collect();
        let th = add(&unit(n, 0), &unit(n, n - 1), -1);
        let highest = Root {
            adj: th.clone(),
            full: th.clone(),
            co_adj: th.clone(),
            co_full: th,
        };
        Ok(Self::finish(GroupKind::Gl, n, positive, simple, highest))
    }

    /// `GSp_2n`, `n >= 1`; cocharacters have `2n` coordinates.
    pub fn gsp(n: usize) -> Result<Self> {
        if n < 1 {
            return invalid("GSp_2n needs n >= 1");
        }
        let m = 2 * n;
        let bar = |i: usize| m - 1 - i;
        let minus = |i: usize, j: usize| -> Root {
            let adj = add(&unit(n, i), &unit(n, j), -1);
            let full = add(&unit(m, i), &unit(m, j), -1);
            let mut co_full = full.clone();
            co_full[bar(j)] += 1;
            co_full[bar(i)] -= 1;
            Root {
                co_adj: adj.clone(),
                adj,
                full,
                co_full,
            }
        };
        let plus = |i: usize, j: usize| -> Root {
            let adj = add(&unit(n, i), &unit(n, j), 1);
            let full = add(&unit(m, i), &unit(m, bar(j)), -1);
            let mut co_full = add(&unit(m, i), &unit(m, j), 1);
            co_full[bar(i)] -= 1;
            co_full[bar(j)] -= 1;
            Root {
                co_adj: adj.clone(),
                adj,
                full,
                co_full,
            }
        };
        let long = |i: usize| -> Root {
            let mut adj = vec![0; n];
            adj[i] = 2;
            let full = add(&unit(m, i), &unit(m, bar(i)), -1);
            Root {
                adj,
                co_adj: unit(n, i),
                co_full: full.clone(),
                full,
            }
        };
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive.push(minus(i, j));
                positive.push(plus(i, j));
            }
            positive.push(long(i));
        }
        let mut simple: Vec<Root> = (0..n - 1).map(|i| minus(i, i + 1)).collect();
        simple.push(long(n - 1));
        Ok(Self::finish(GroupKind::Gsp, n, positive, simple, long(0)))
    }

    fn finish(kind: GroupKind, n: usize, positive: Vec<Root>, simple: Vec<Root>, highest: Root) -> Self {
        let full_len = match kind {
            GroupKind::Gl => n,
            GroupKind::Gsp => 2 * n,
        };
        let mut two_rho_adj = vec![0; n];
        let mut two_rho_full = vec![0; full_len];
        for r in &positive {
            two_rho_adj = add(&two_rho_adj, &r.adj, 1);
            two_rho_full = add(&two_rho_full, &r.full, 1);
        }
        let ell = simple.len();
        let fund_weights: Vec<Vec<Q>> = (1..=ell)
            .map(|i| match kind {
                GroupKind::Gl => (0..n)
                    .map(|k| {
                        let base = if k < i { q(1) } else { q(0) };
                        base - Q::new((i as i64).into(), (n as i64).into())
                    })
                    .collect(),
                GroupKind::Gsp => (0..n).map(|k| if k < i { q(1) } else { q(0) }).collect(),
            })
            .collect();
        // Fundamental coweights: alpha_i(x) = delta_ij, plus sum zero for GL.
        let mut rows: Vec<Vec<Q>> = simple
            .iter()
            .map(|r| r.adj.iter().map(|&c| q(c)).collect())
            .collect();
        if kind == GroupKind::Gl {
            rows.push(vec![q(1); n]);
        }
        let fund_coweights: Vec<Vec<Q>> = (0..ell)
            .map(|j| {
                let mut rhs = vec![q(0); rows.len()];
                rhs[j] = q(1);
                linalg::solve(&rows, &rhs).expect("simple roots are a basis")
            })
            .collect();
        let highest_coeffs = fund_coweights
            .iter()
            .map(|w| {
                let v = highest.pair_adj(w);
                debug_assert!(v.is_integer());
                v.to_integer().try_into().expect("small")
            })
            .collect();
        RootDatum {
            kind,
            n,
            positive,
            simple,
            highest,
            two_rho_adj,
            two_rho_full,
            fund_weights,
            fund_coweights,
            highest_coeffs,
        }
    }

    /// Number of full coordinates of a cocharacter.
    pub fn full_len(&self) -> usize {
        match self.kind {
            GroupKind::Gl => self.n,
            GroupKind::Gsp => 2 * self.n,
        }
    }

    /// Semisimple rank, i.e. number of finite simple reflections.
    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    /// Coefficients `m_j` with `theta = sum m_j alpha_j`.
    pub fn highest_root_coeffs(&self) -> &[i64] {
        &self.highest_coeffs
    }

    pub fn two_rho_adj(&self) -> &[i64] {
        &self.two_rho_adj
    }

    /// `<2 rho, nu>` for a full-coordinate cocharacter.
    pub fn pair_two_rho(&self, nu: &[i64]) -> i64 {
        self.two_rho_full.iter().zip(nu).map(|(a, b)| a * b).sum()
    }

    /// Fundamental weights of the adjoint group as functionals on adjoint coordinates.
    pub fn fundamental_weights(&self) -> &[Vec<Q>] {
        &self.fund_weights
    }

    /// Fundamental coweights of the adjoint system in adjoint coordinates.
    pub fn fundamental_coweights(&self) -> &[Vec<Q>] {
        &self.fund_coweights
    }

    /// `<omega_i, x>` for an adjoint vector, `i` in `1..=rank`.
    pub fn omega_pair_adj(&self, i: usize, x: &[Q]) -> Q {
        self.fund_weights[i - 1]
            .iter()
            .zip(x)
            .fold(Q::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `<omega_i, nu>` for a rational full-coordinate vector.
    pub fn omega_pair_full_q(&self, i: usize, nu: &[Q]) -> Q {
        self.omega_pair_adj(i, &self.proj_adjoint_q(nu))
    }

    pub fn check_coweight(&self, nu: &[i64]) -> Result<()> {
        if nu.len() != self.full_len() {
            return invalid(format!(
                "coweight has {} coordinates, expected {}",
                nu.len(),
                self.full_len()
            ));
        }
        if self.kind == GroupKind::Gsp {
            let m = nu.len();
            let c = nu[0] + nu[m - 1];
            if (0..m).any(|i| nu[i] + nu[m - 1 - i] != c) {
                return invalid(format!("similitude constraint a_i + a_(2n+1-i) = c violated by {nu:?}"));
            }
        }
        Ok(())
    }

    pub fn check_weyl(&self, w: &FiniteWeylElem) -> Result<()> {
        if w.rank() != self.n {
            return invalid("finite Weyl element has wrong rank");
        }
        let mut seen = vec![false; self.n];
        for &v in &w.img {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > self.n || seen[a - 1] {
                return invalid(format!("not a signed permutation: {w}"));
            }
            seen[a - 1] = true;
            if v < 0 && self.kind == GroupKind::Gl {
                return invalid("GL Weyl elements are unsigned permutations");
            }
        }
        Ok(())
    }

    /// Similitude value for `GSp`, coordinate sum for `GL`: the Kottwitz invariant.
    pub fn kappa(&self, nu: &[i64]) -> i64 {
        match self.kind {
            GroupKind::Gl => nu.iter().sum(),
            GroupKind::Gsp => nu[0] + nu[nu.len() - 1],
        }
    }

    /// Adjoint projection of an integer cocharacter.
    pub fn proj_adjoint(&self, nu: &[i64]) -> Vec<Q> {
        let v: Vec<Q> = nu.iter().map(|&a| q(a)).collect();
        self.proj_adjoint_q(&v)
    }

    /// Adjoint projection of a rational full-coordinate vector.
    pub fn proj_adjoint_q(&self, nu: &[Q]) -> Vec<Q> {
        match self.kind {
            GroupKind::Gl => {
                let mean = nu.iter().fold(Q::zero(), |a, b| a + b) / q(nu.len() as i64);
                nu.iter().map(|a| a - &mean).collect()
            }
            GroupKind::Gsp => {
                let half = (nu[0].clone() + nu[nu.len() - 1].clone()) / q(2);
                nu[..self.n].iter().map(|a| a - &half).collect()
            }
        }
    }

    /// Action of a finite Weyl element on an integer cocharacter.
    pub fn act_full(&self, w: &FiniteWeylElem, nu: &[i64]) -> Coweight {
        match self.kind {
            GroupKind::Gl => w.act(nu),
            GroupKind::Gsp => {
                let m = nu.len();
                let c = nu[0] + nu[m - 1];
                let y: Vec<i64> = nu[..self.n].iter().map(|a| 2 * a - c).collect();
                let y2 = w.act(&y);
                let mut out = vec![0; m];
                for k in 0..self.n {
                    out[k] = (y2[k] + c) / 2;
                    out[m - 1 - k] = c - out[k];
                }
                out
            }
        }
    }

    /// Action on a rational full-coordinate vector.
    pub fn act_full_q(&self, w: &FiniteWeylElem, nu: &[Q]) -> Vec<Q> {
        match self.kind {
            GroupKind::Gl => w.act(nu),
            GroupKind::Gsp => {
                let m = nu.len();
                let c = nu[0].clone() + nu[m - 1].clone();
                let y: Vec<Q> = nu[..self.n].iter().map(|a| q(2) * a - &c).collect();
                let y2 = w.act(&y);
                let mut out = vec![Q::zero(); m];
                for k in 0..self.n {
                    out[k] = (y2[k].clone() + &c) / q(2);
                    out[m - 1 - k] = c.clone() - &out[k];
                }
                out
            }
        }
    }

    /// All elements of the finite Weyl group, in lexicographic order of one-line notation.
    pub fn weyl_group(&self) -> Vec<FiniteWeylElem> {
        use itertools::Itertools;
        let n = self.n;
        let mut out = Vec::new();
        for p in (1..=n as i32).permutations(n) {
            match self.kind {
                GroupKind::Gl => out.push(FiniteWeylElem { img: p }),
                GroupKind::Gsp => {
                    for mask in 0..(1u32 << n) {
                        let img = p
                            .iter()
                            .enumerate()
                            .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                            .collect();
                        out.push(FiniteWeylElem { img });
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Finite simple reflection `s_j`, `j` in `1..=rank`.
    pub fn simple_reflection(&self, j: usize) -> FiniteWeylElem {
        let mut img: Vec<i32> = (1..=self.n as i32).collect();
        if self.kind == GroupKind::Gsp && j == self.n {
            img[self.n - 1] = -(self.n as i32);
        } else {
            img.swap(j - 1, j);
        }
        FiniteWeylElem { img }
    }

    /// Reflection in the highest root.
    pub fn highest_reflection(&self) -> FiniteWeylElem {
        let mut img: Vec<i32> = (1..=self.n as i32).collect();
        match self.kind {
            GroupKind::Gl => img.swap(0, self.n - 1),
            GroupKind::Gsp => img[0] = -1,
        }
        FiniteWeylElem { img }
    }

    /// Reflection `s_beta` for a root given by its adjoint functional.
    pub fn reflection(&self, beta: &Root) -> FiniteWeylElem {
        // s_beta(x) = x - <beta, x> beta^vee, realised on the basis vectors.
        let mut img = vec![0i32; self.n];
        for (i, slot) in img.iter_mut().enumerate() {
            let e = unit(self.n, i);
            let p = beta.adj[i];
            let v = add(&e, &beta.co_adj, -p);
            let (k, s) = v
                .iter()
                .enumerate()
                .find(|(_, &c)| c != 0)
                .map(|(k, &c)| (k, c))
                .expect("nonzero image");
            *slot = (k as i32 + 1) * s.signum() as i32;
        }
        FiniteWeylElem { img }
    }

    pub fn is_dominant(&self, nu: &[i64]) -> bool {
        self.simple.iter().all(|a| a.pair_full(nu) >= 0)
    }

    pub fn is_dominant_adj(&self, x: &[Q]) -> bool {
        self.simple.iter().all(|a| !a.pair_adj(x).is_negative())
    }

    /// `(nu_plus, w)` with `nu_plus` dominant and `w(nu_plus) = nu`; `w` is the shortest such element.
    pub fn dominant_rep(&self, nu: &[i64]) -> Result<(Coweight, FiniteWeylElem)> {
        self.check_coweight(nu)?;
        match self.kind {
            GroupKind::Gl => {
                let mut idx: Vec<usize> = (0..self.n).collect();
                idx.sort_by(|&a, &b| nu[b].cmp(&nu[a]).then(a.cmp(&b)));
                let plus = idx.iter().map(|&i| nu[i]).collect();
                let img = idx.iter().map(|&i| i as i32 + 1).collect();
                Ok((plus, FiniteWeylElem { img }))
            }
            GroupKind::Gsp => {
                let m = nu.len();
                let c = nu[0] + nu[m - 1];
                let y: Vec<i64> = nu[..self.n].iter().map(|a| 2 * a - c).collect();
                let mut idx: Vec<usize> = (0..self.n).collect();
                idx.sort_by(|&a, &b| y[b].abs().cmp(&y[a].abs()).then(a.cmp(&b)));
                let img = idx
                    .iter()
                    .map(|&i| if y[i] < 0 { -(i as i32 + 1) } else { i as i32 + 1 })
                    .collect();
                let w = FiniteWeylElem { img };
                let plus = self.act_full(&w.inverse(), nu);
                Ok((plus, w))
            }
        }
    }

    /// Dominant representative of a rational adjoint vector.
    pub fn dominant_adj(&self, x: &[Q]) -> Vec<Q> {
        let mut v: Vec<Q> = match self.kind {
            GroupKind::Gl => x.to_vec(),
            GroupKind::Gsp => x.iter().map(|a| a.abs()).collect(),
        };
        v.sort_by(|a, b| b.cmp(a));
        v
    }

    /// `W_0`-orbit of a cocharacter, sorted.
    pub fn orbit(&self, nu: &[i64]) -> Vec<Coweight> {
        let mut out: Vec<Coweight> = self.weyl_group().iter().map(|w| self.act_full(w, nu)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Coefficients of `mu - nu` (rational adjoint vectors) on the simple coroots.
    pub fn coroot_coeffs_adj(&self, diff: &[Q]) -> Vec<Q> {
        (1..=self.rank()).map(|i| self.omega_pair_adj(i, diff)).collect()
    }

    /// The order `nu <=! mu` on dominant integer cocharacters.
    pub fn leq_coroot(&self, nu: &[i64], mu: &[i64]) -> Result<bool> {
        self.check_coweight(nu)?;
        self.check_coweight(mu)?;
        if !self.is_dominant(nu) || !self.is_dominant(mu) {
            return invalid("leq_coroot needs dominant inputs");
        }
        Ok(self.leq_coroot_unchecked(nu, mu))
    }

    pub(crate) fn leq_coroot_unchecked(&self, nu: &[i64], mu: &[i64]) -> bool {
        if self.kappa(nu) != self.kappa(mu) {
            return false;
        }
        let diff: Vec<i64> = mu.iter().zip(nu).map(|(a, b)| a - b).collect();
        match self.kind {
            GroupKind::Gl => {
                let mut s = 0;
                diff.iter().all(|d| {
                    s += d;
                    s >= 0
                })
            }
            GroupKind::Gsp => self
                .coroot_coeffs_adj(&self.proj_adjoint(&diff))
                .iter()
                .all(|c| c.is_integer() && !c.is_negative()),
        }
    }

    /// Rational dominance `nu <= mu` on full-coordinate vectors: `mu - nu` is a
    /// nonnegative rational combination of simple coroots.
    pub fn dominance_leq_rational(&self, nu: &[Q], mu: &[Q]) -> Result<bool> {
        if nu.len() != self.full_len() || mu.len() != self.full_len() {
            return invalid("vector length does not match the root datum");
        }
        let central = |v: &[Q]| match self.kind {
            GroupKind::Gl => v.iter().fold(Q::zero(), |a, b| a + b),
            GroupKind::Gsp => v[0].clone() + v[v.len() - 1].clone(),
        };
        if central(nu) != central(mu) {
            return Ok(false);
        }
        Ok(self.dominance_leq_adj(&self.proj_adjoint_q(nu), &self.proj_adjoint_q(mu)))
    }

    /// Rational dominance on adjoint vectors.
    pub fn dominance_leq_adj(&self, x: &[Q], y: &[Q]) -> bool {
        let diff: Vec<Q> = y.iter().zip(x).map(|(a, b)| a - b).collect();
        self.coroot_coeffs_adj(&diff).iter().all(|c| !c.is_negative())
    }

    /// A chain of dominant cocharacters from `nu` to `mu` with positive-coroot steps.
    pub fn stembridge_chain(&self, nu: &[i64], mu: &[i64]) -> Result<Vec<Coweight>> {
        if !self.leq_coroot(nu, mu)? {
            return invalid("stembridge_chain needs nu <=! mu");
        }
        let mut chain = vec![nu.to_vec()];
        if self.chain_dfs(mu, &mut chain) {
            Ok(chain)
        } else {
            Err(crate::Error::Internal("no positive-coroot chain found".into()))
        }
    }

    fn chain_dfs(&self, mu: &[i64], chain: &mut Vec<Coweight>) -> bool {
        let cur = chain.last().unwrap().clone();
        if cur == mu {
            return true;
        }
        for beta in &self.positive {
            let next = add(&cur, &beta.co_full, 1);
            if self.is_dominant(&next) && self.leq_coroot_unchecked(&next, mu) {
                chain.push(next);
                if self.chain_dfs(mu, chain) {
                    return true;
                }
                chain.pop();
            }
        }
        false
    }

    /// Minuscule: `<alpha, mu> in {-1, 0, 1}` for every root.
    pub fn is_minuscule(&self, mu: &[i64]) -> bool {
        self.positive.iter().all(|a| a.pair_full(mu).abs() <= 1)
    }

    /// Zero element of `Q` sized for adjoint vectors.
    pub fn zero_adj(&self) -> Vec<Q> {
        vec![Q::zero(); self.n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qf;

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&a| q(a)).collect()
    }

    #[test]
    fn weights_dual_to_coroots() {
        for rd in [RootDatum::gl(2).unwrap(), RootDatum::gl(4).unwrap(), RootDatum::gsp(2).unwrap(), RootDatum::gsp(3).unwrap()] {
            for (i, _) in rd.simple_roots().iter().enumerate() {
                for (j, a) in rd.simple_roots().iter().enumerate() {
                    let co: Vec<Q> = qs(&a.co_adj);
                    let v = rd.omega_pair_adj(i + 1, &co);
                    assert_eq!(v, q((i == j) as i64));
                }
            }
        }
    }

    #[test]
    fn two_rho_on_simple_coroots() {
        for rd in [RootDatum::gl(3).unwrap(), RootDatum::gsp(2).unwrap(), RootDatum::gsp(3).unwrap()] {
            for a in rd.simple_roots() {
                let s: i64 = rd.two_rho_adj().iter().zip(&a.co_adj).map(|(x, y)| x * y).sum();
                assert_eq!(s, 2);
                assert_eq!(rd.pair_two_rho(&a.co_full), 2);
            }
        }
    }

    #[test]
    fn highest_root_dominates_simple_roots() {
        let rd = RootDatum::gsp(2).unwrap();
        assert_eq!(rd.highest_root_coeffs(), &[2, 1]);
        let rd = RootDatum::gl(4).unwrap();
        assert_eq!(rd.highest_root_coeffs(), &[1, 1, 1]);
    }

    #[test]
    fn dominant_rep_examples() {
        let rd = RootDatum::gl(3).unwrap();
        let (p, w) = rd.dominant_rep(&[0, 1, 0]).unwrap();
        assert_eq!(p, vec![1, 0, 0]);
        assert_eq!(w.img, vec![2, 1, 3]);
        let rd = RootDatum::gl(2).unwrap();
        let (p, w) = rd.dominant_rep(&[1, 0]).unwrap();
        assert_eq!(p, vec![1, 0]);
        assert!(w.is_identity());
    }

    #[test]
    fn gsp_dominant_rep_matches_orbit_scan() {
        let rd = RootDatum::gsp(2).unwrap();
        let nu = vec![0, 1, 1, 2];
        let (p, w) = rd.dominant_rep(&nu).unwrap();
        let doms: Vec<_> = rd.orbit(&nu).into_iter().filter(|v| rd.is_dominant(v)).collect();
        assert_eq!(doms, vec![p.clone()]);
        assert_eq!(p, vec![2, 1, 1, 0]);
        assert_eq!(rd.act_full(&w, &p), nu);
        assert!(rd.dominant_rep(&[1, 0, 0, 0]).is_err());
    }

    #[test]
    fn leq_coroot_examples() {
        let rd = RootDatum::gl(3).unwrap();
        assert!(rd.leq_coroot(&[1, 1, 1], &[2, 1, 0]).unwrap());
        assert!(!rd.leq_coroot(&[2, 0, 0], &[1, 1, 0]).unwrap());
        assert!(rd.leq_coroot(&[0, 1, 0], &[1, 0, 0]).is_err());
    }

    #[test]
    fn rational_dominance_examples() {
        let gl2 = RootDatum::gl(2).unwrap();
        assert!(gl2
            .dominance_leq_rational(&[qf(1, 2), qf(1, 2)], &qs(&[1, 0]))
            .unwrap());
        let gl4 = RootDatum::gl(4).unwrap();
        let a = vec![qf(2, 3), qf(2, 3), qf(2, 3), q(0)];
        assert!(gl4.dominance_leq_rational(&a, &qs(&[1, 1, 0, 0])).unwrap());
        let b = vec![q(1), qf(1, 3), qf(1, 3), qf(1, 3)];
        assert!(!gl4.dominance_leq_rational(&a, &b).unwrap());
        assert!(!gl4.dominance_leq_rational(&b, &a).unwrap());
    }

    #[test]
    fn proj_adjoint_examples() {
        assert_eq!(RootDatum::gl(2).unwrap().proj_adjoint(&[1, 0]), vec![qf(1, 2), qf(-1, 2)]);
        assert_eq!(RootDatum::gl(3).unwrap().proj_adjoint(&[1, 1, 1]), qs(&[0, 0, 0]));
        let gsp = RootDatum::gsp(2).unwrap();
        assert_eq!(gsp.proj_adjoint(&[1, 1, 0, 0]), vec![qf(1, 2), qf(1, 2)]);
        assert_eq!(gsp.pair_two_rho(&[1, 1, 0, 0]), 3);
    }

    #[test]
    fn stembridge_examples() {
        let gl2 = RootDatum::gl(2).unwrap();
        assert_eq!(gl2.stembridge_chain(&[1, 1], &[2, 0]).unwrap(), vec![vec![1, 1], vec![2, 0]]);
        assert_eq!(gl2.stembridge_chain(&[1, 0], &[1, 0]).unwrap(), vec![vec![1, 0]]);
        let gl3 = RootDatum::gl(3).unwrap();
        let c = gl3.stembridge_chain(&[1, 1, 1], &[3, 0, 0]).unwrap();
        assert_eq!(c, vec![vec![1, 1, 1], vec![2, 1, 0], vec![3, 0, 0]]);
    }

    #[test]
    fn base_data_gsp4() {
        let rd = RootDatum::gsp(2).unwrap();
        assert_eq!(rd.positive_roots().len(), 4);
        assert_eq!(rd.weyl_group().len(), 8);
        assert_eq!(rd.two_rho_adj(), &[4, 2]);
        assert_eq!(
            rd.fundamental_coweights(),
            &[vec![q(1), q(0)], vec![qf(1, 2), qf(1, 2)]]
        );
    }

    #[test]
    fn reflections_agree_with_simple() {
        for rd in [RootDatum::gl(3).unwrap(), RootDatum::gsp(2).unwrap()] {
            for (j, a) in rd.simple_roots().iter().enumerate() {
                assert_eq!(rd.reflection(a), rd.simple_reflection(j + 1));
            }
            assert_eq!(rd.reflection(rd.highest_root()), rd.highest_reflection());
        }
    }

    #[test]
    fn rejects_rank_zero() {
        assert!(RootDatum::gl(1).is_err());
        assert!(RootDatum::gsp(0).is_err());
    }
}
