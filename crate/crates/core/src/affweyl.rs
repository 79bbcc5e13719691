//! The extended affine Weyl group `X_*(T) x| W_0` with Iwahori-Matsumoto
//! length, reduced words, Bruhat order and parahoric double cosets.
//!
//! An element `(t, w)` acts on the adjoint apartment by `x -> proj(t) + w(x)`.
//! The base alcove is the dominant one: `alpha(x) >= 0` for simple `alpha`
//! and `theta(x) <= 1`.

use crate::caps;
use crate::error::{invalid, Error, Result};
use crate::rootdata::{functional_is_positive, Coweight, FiniteWeylElem, RootDatum};
use crate::Q;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtAffWeylElem {
    pub t: Coweight,
    pub w: FiniteWeylElem,
}

impl ExtAffWeylElem {
    pub fn is_translation(&self) -> bool {
        self.w.is_identity()
    }
}

impl fmt::Display for ExtAffWeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.t.iter().map(|v| v.to_string()).collect();
        write!(f, "t({})·{}", t.join(","), self.w)
    }
}

/// Which left descent to peel first when building reduced words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentOrder {
    Smallest,
    Largest,
}

/// A set `K` of affine simple reflection indices generating a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParahoricType {
    pub k: Vec<usize>,
}

impl ParahoricType {
    pub fn iwahori() -> Self {
        ParahoricType { k: vec![] }
    }
}

/// The group `W~` for a fixed root datum, with cached generators.
#[derive(Clone, Debug)]
pub struct ExtAffineWeyl {
    pub rd: RootDatum,
    gens: Vec<ExtAffWeylElem>,
    vertices: Vec<Vec<Q>>,
}

impl ExtAffineWeyl {
    pub fn new(rd: RootDatum) -> Self {
        let ell = rd.rank();
        let mut gens = Vec::with_capacity(ell + 1);
        gens.push(ExtAffWeylElem {
            t: rd.highest_root().co_full.clone(),
            w: rd.highest_reflection(),
        });
        let zero = vec![0; rd.full_len()];
        for j in 1..=ell {
            gens.push(ExtAffWeylElem {
                t: zero.clone(),
                w: rd.simple_reflection(j),
            });
        }
        let mut vertices = vec![rd.zero_adj()];
        for (j, cw) in rd.fundamental_coweights().iter().enumerate() {
            let m = crate::q(rd.highest_root_coeffs()[j]);
            vertices.push(cw.iter().map(|c| c / &m).collect());
        }
        ExtAffineWeyl { rd, gens, vertices }
    }

    /// Number of affine simple reflections, `rank + 1`.
    pub fn num_simple(&self) -> usize {
        self.gens.len()
    }

    pub fn identity(&self) -> ExtAffWeylElem {
        ExtAffWeylElem {
            t: vec![0; self.rd.full_len()],
            w: FiniteWeylElem::identity(self.rd.n),
        }
    }

    pub fn translation(&self, nu: &[i64]) -> ExtAffWeylElem {
        ExtAffWeylElem {
            t: nu.to_vec(),
            w: FiniteWeylElem::identity(self.rd.n),
        }
    }

    pub fn finite(&self, w: &FiniteWeylElem) -> ExtAffWeylElem {
        ExtAffWeylElem {
            t: vec![0; self.rd.full_len()],
            w: w.clone(),
        }
    }

    pub fn check(&self, x: &ExtAffWeylElem) -> Result<()> {
        self.rd.check_coweight(&x.t)?;
        self.rd.check_weyl(&x.w)
    }

    /// Affine simple reflection `s_i`, `i` in `0..=rank`.
    pub fn simple(&self, i: usize) -> &ExtAffWeylElem {
        &self.gens[i]
    }

    pub fn mul(&self, x: &ExtAffWeylElem, y: &ExtAffWeylElem) -> ExtAffWeylElem {
        let moved = self.rd.act_full(&x.w, &y.t);
        ExtAffWeylElem {
            t: x.t.iter().zip(&moved).map(|(a, b)| a + b).collect(),
            w: x.w.compose(&y.w),
        }
    }

    pub fn inv(&self, x: &ExtAffWeylElem) -> ExtAffWeylElem {
        let wi = x.w.inverse();
        let t = self.rd.act_full(&wi, &x.t).into_iter().map(|a| -a).collect();
        ExtAffWeylElem { t, w: wi }
    }

    /// Image in `Omega = Z`.
    pub fn kappa(&self, x: &ExtAffWeylElem) -> i64 {
        self.rd.kappa(&x.t)
    }

    /// Iwahori-Matsumoto length.
    pub fn length(&self, x: &ExtAffWeylElem) -> usize {
        let mut total = 0i64;
        for a in self.rd.positive_roots() {
            let neg = !functional_is_positive(&x.w.pullback(&a.adj));
            let v = a.pair_full(&x.t) - neg as i64;
            total += v.abs();
        }
        total as usize
    }

    pub fn act_on_point(&self, x: &ExtAffWeylElem, p: &[Q]) -> Result<Vec<Q>> {
        if p.len() != self.rd.n {
            return invalid(format!("point has {} coordinates, expected {}", p.len(), self.rd.n));
        }
        let shift = self.rd.proj_adjoint(&x.t);
        Ok(x.w.act(p).into_iter().zip(shift).map(|(a, b)| a + b).collect())
    }

    /// Vertices `v_0 = 0, v_j = varpi_j / m_j` of the base alcove.
    pub fn base_alcove_vertices(&self) -> &[Vec<Q>] {
        &self.vertices
    }

    /// The length-zero element with Kottwitz invariant `k`.
    pub fn omega_element(&self, k: i64) -> ExtAffWeylElem {
        let mut t = vec![0; self.rd.full_len()];
        match self.rd.kind {
            crate::rootdata::GroupKind::Gl => t[0] = k,
            crate::rootdata::GroupKind::Gsp => {
                for a in t.iter_mut().take(self.rd.n) {
                    *a = k;
                }
            }
        }
        self.reduced_word(&self.translation(&t)).1
    }

    pub fn reduced_word(&self, x: &ExtAffWeylElem) -> (Vec<usize>, ExtAffWeylElem) {
        self.reduced_word_with(x, DescentOrder::Smallest)
    }

    /// `x = s_{i_1} ... s_{i_l} tau` with `l = length(x)` and `length(tau) = 0`.
    pub fn reduced_word_with(&self, x: &ExtAffWeylElem, order: DescentOrder) -> (Vec<usize>, ExtAffWeylElem) {
        let mut cur = x.clone();
        let mut len = self.length(&cur);
        let mut word = Vec::with_capacity(len);
        let idx: Vec<usize> = match order {
            DescentOrder::Smallest => (0..self.num_simple()).collect(),
            DescentOrder::Largest => (0..self.num_simple()).rev().collect(),
        };
        while len > 0 {
            let mut found = false;
            for &i in &idx {
                let y = self.mul(&self.gens[i], &cur);
                let ly = self.length(&y);
                if ly < len {
                    word.push(i);
                    cur = y;
                    len = ly;
                    found = true;
                    break;
                }
            }
            assert!(found, "element of positive length without a left descent");
        }
        (word, cur)
    }

    pub fn omega_part(&self, x: &ExtAffWeylElem) -> ExtAffWeylElem {
        self.reduced_word(x).1
    }

    pub fn from_word(&self, word: &[usize], tau: &ExtAffWeylElem) -> ExtAffWeylElem {
        let mut cur = tau.clone();
        for &i in word.iter().rev() {
            cur = self.mul(&self.gens[i], &cur);
        }
        cur
    }

    pub fn is_left_descent(&self, i: usize, x: &ExtAffWeylElem) -> bool {
        self.length(&self.mul(&self.gens[i], x)) < self.length(x)
    }

    pub fn is_right_descent(&self, x: &ExtAffWeylElem, i: usize) -> bool {
        self.length(&self.mul(x, &self.gens[i])) < self.length(x)
    }

    /// Bruhat order via the subword reachable-set dynamic program.
    pub fn bruhat_leq(&self, x: &ExtAffWeylElem, y: &ExtAffWeylElem) -> bool {
        if self.kappa(x) != self.kappa(y) {
            return false;
        }
        let lx = self.length(x);
        let (word, tau) = self.reduced_word(y);
        if lx > word.len() {
            return false;
        }
        if lx == word.len() {
            return x == y;
        }
        let xa = self.mul(x, &self.inv(&tau));
        let k = word.len();
        let mut reach: HashSet<ExtAffWeylElem> = HashSet::new();
        reach.insert(self.identity());
        for (j, &i) in word.iter().enumerate() {
            let remaining = k - j - 1;
            let mut next = HashSet::with_capacity(reach.len() * 2);
            for r in &reach {
                let rs = self.mul(r, &self.gens[i]);
                for cand in [r.clone(), rs] {
                    let lc = self.length(&cand);
                    if lc <= lx + remaining && lc + remaining >= lx {
                        next.insert(cand);
                    }
                }
            }
            reach = next;
        }
        reach.contains(&xa)
    }

    /// All `x <= y`, in canonical order.
    pub fn lower_interval(&self, y: &ExtAffWeylElem) -> Vec<ExtAffWeylElem> {
        let (word, tau) = self.reduced_word(y);
        let mut reach: HashSet<ExtAffWeylElem> = HashSet::new();
        reach.insert(self.identity());
        for &i in &word {
            let add: Vec<ExtAffWeylElem> = reach.iter().map(|r| self.mul(r, &self.gens[i])).collect();
            reach.extend(add);
        }
        let out: Vec<ExtAffWeylElem> = reach.into_iter().map(|r| self.mul(&r, &tau)).collect();
        self.sorted(out)
    }

    /// Sort key: length, then translation, then finite part.
    pub fn canonical_key(&self, x: &ExtAffWeylElem) -> (usize, Coweight, Vec<i32>) {
        (self.length(x), x.t.clone(), x.w.img.clone())
    }

    pub fn sorted(&self, xs: Vec<ExtAffWeylElem>) -> Vec<ExtAffWeylElem> {
        let mut keyed: Vec<_> = xs.into_iter().map(|x| (self.canonical_key(&x), x)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.1 == b.1);
        keyed.into_iter().map(|(_, x)| x).collect()
    }

    /// All `w` with Omega-part `tau` and `length(w) <= max_len`.
    pub fn enumerate_by_length(&self, tau: &ExtAffWeylElem, max_len: usize) -> Result<Vec<ExtAffWeylElem>> {
        self.enumerate_by_length_capped(tau, max_len, caps::element_cap())
    }

    pub fn enumerate_by_length_capped(
        &self,
        tau: &ExtAffWeylElem,
        max_len: usize,
        cap: usize,
    ) -> Result<Vec<ExtAffWeylElem>> {
        if self.length(tau) != 0 {
            return invalid("enumerate_by_length needs a length-zero element");
        }
        let mut all = vec![tau.clone()];
        let mut frontier = vec![tau.clone()];
        for len in 1..=max_len {
            let mut next: BTreeSet<ExtAffWeylElem> = BTreeSet::new();
            for x in &frontier {
                for s in &self.gens {
                    let y = self.mul(x, s);
                    if self.length(&y) == len {
                        next.insert(y);
                    }
                }
            }
            frontier = next.into_iter().collect();
            all.extend(frontier.iter().cloned());
            if all.len() > cap {
                return Err(Error::CapExceeded {
                    what: "enumerate_by_length".into(),
                    cap,
                });
            }
        }
        Ok(self.sorted(all))
    }

    pub fn check_parahoric(&self, k: &ParahoricType) -> Result<()> {
        let mut seen = vec![false; self.num_simple()];
        for &i in &k.k {
            if i >= self.num_simple() {
                return invalid(format!("reflection index {i} out of range 0..={}", self.num_simple() - 1));
            }
            if seen[i] {
                return invalid(format!("reflection index {i} repeated"));
            }
            seen[i] = true;
        }
        if k.k.len() == self.num_simple() {
            return invalid("K must be a proper subset of the affine simple reflections");
        }
        Ok(())
    }

    /// Special maximal parahoric: the finite simple reflections.
    pub fn special_maximal(&self) -> ParahoricType {
        ParahoricType {
            k: (1..self.num_simple()).collect(),
        }
    }

    /// Vertices of the facet fixed by `K`.
    pub fn facet_vertices(&self, k: &ParahoricType) -> Vec<Vec<Q>> {
        (0..self.num_simple())
            .filter(|j| !k.k.contains(j))
            .map(|j| self.vertices[j].clone())
            .collect()
    }

    /// Elements of the finite group generated by `K`.
    pub fn parahoric_group(&self, k: &ParahoricType) -> Vec<ExtAffWeylElem> {
        let mut seen: HashSet<ExtAffWeylElem> = HashSet::new();
        let e = self.identity();
        seen.insert(e.clone());
        let mut stack = vec![e];
        while let Some(x) = stack.pop() {
            for &i in &k.k {
                let y = self.mul(&x, &self.gens[i]);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        self.sorted(seen.into_iter().collect())
    }

    /// Minimal-length element of `W_K w W_K'`.
    pub fn double_coset_min_rep(&self, k: &ParahoricType, w: &ExtAffWeylElem, k2: &ParahoricType) -> ExtAffWeylElem {
        let mut cur = w.clone();
        let mut len = self.length(&cur);
        loop {
            let mut changed = false;
            for &i in &k.k {
                let y = self.mul(&self.gens[i], &cur);
                let ly = self.length(&y);
                if ly < len {
                    cur = y;
                    len = ly;
                    changed = true;
                }
            }
            for &i in &k2.k {
                let y = self.mul(&cur, &self.gens[i]);
                let ly = self.length(&y);
                if ly < len {
                    cur = y;
                    len = ly;
                    changed = true;
                }
            }
            if !changed {
                return cur;
            }
        }
    }

    /// Bruhat order on `W_K \ W~ / W_K'` via minimal representatives.
    pub fn bruhat_leq_double(
        &self,
        k: &ParahoricType,
        c1: &ExtAffWeylElem,
        c2: &ExtAffWeylElem,
        k2: &ParahoricType,
    ) -> bool {
        let m1 = self.double_coset_min_rep(k, c1, k2);
        let m2 = self.double_coset_min_rep(k, c2, k2);
        self.bruhat_leq(&m1, &m2)
    }

    /// Whether a rational adjoint point lies in the closed base alcove.
    pub fn in_base_alcove(&self, p: &[Q]) -> bool {
        self.rd.simple_roots().iter().all(|a| a.pair_adj(p) >= Q::zero())
            && self.rd.highest_root().pair_adj(p) <= crate::q(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qf};

    fn gl(n: usize) -> ExtAffineWeyl {
        ExtAffineWeyl::new(RootDatum::gl(n).unwrap())
    }

    #[test]
    fn translation_lengths() {
        let g = gl(2);
        assert_eq!(g.length(&g.translation(&[1, 0])), 1);
        assert_eq!(g.length(&g.identity()), 0);
        let g3 = gl(3);
        assert_eq!(g3.length(&g3.translation(&[1, 0, 0])), 2);
    }

    #[test]
    fn omega_generator_gl2() {
        let g = gl(2);
        let tau = g.omega_element(1);
        assert_eq!(g.length(&tau), 0);
        assert_eq!(tau.t, vec![1, 0]);
        assert_eq!(tau.w.img, vec![2, 1]);
    }

    #[test]
    fn reduced_word_of_translation() {
        let g = gl(2);
        let x = g.translation(&[1, 0]);
        let (word, tau) = g.reduced_word(&x);
        assert_eq!(word.len(), 1);
        assert_eq!(g.kappa(&tau), 1);
        assert_eq!(g.from_word(&word, &tau), x);
    }

    #[test]
    fn simple_reflections_fix_walls() {
        for g in [gl(3), ExtAffineWeyl::new(RootDatum::gsp(2).unwrap())] {
            let verts = g.base_alcove_vertices().to_vec();
            for i in 0..g.num_simple() {
                let s = g.simple(i);
                assert_eq!(g.mul(s, s), g.identity());
                for (j, v) in verts.iter().enumerate() {
                    if j != i {
                        assert_eq!(&g.act_on_point(s, v).unwrap(), v);
                    }
                }
            }
        }
    }

    #[test]
    fn gl2_affine_reflection_on_line() {
        let g = gl(2);
        let s0 = g.simple(0);
        // y = x1 - x2 = 2 x1 on the sum-zero line.
        let p = vec![qf(1, 8), qf(-1, 8)];
        let img = g.act_on_point(s0, &p).unwrap();
        let y = img[0].clone() - img[1].clone();
        assert_eq!(y, q(2) - qf(1, 4));
    }

    #[test]
    fn base_alcove_c2() {
        let g = ExtAffineWeyl::new(RootDatum::gsp(2).unwrap());
        assert_eq!(
            g.base_alcove_vertices(),
            &[vec![q(0), q(0)], vec![qf(1, 2), q(0)], vec![qf(1, 2), qf(1, 2)]]
        );
    }

    #[test]
    fn bruhat_gl2_examples() {
        let g = gl(2);
        let tau = g.omega_element(1);
        let a = g.translation(&[1, 0]);
        let b = g.translation(&[0, 1]);
        assert!(g.bruhat_leq(&tau, &a));
        assert!(g.bruhat_leq(&tau, &b));
        assert!(!g.bruhat_leq(&a, &b));
        assert!(!g.bruhat_leq(&b, &a));
        assert!(g.bruhat_leq(&a, &a));
    }

    #[test]
    fn enumerate_small() {
        let g = gl(2);
        let e = g.identity();
        assert_eq!(g.enumerate_by_length(&e, 0).unwrap(), vec![e.clone()]);
        assert_eq!(g.enumerate_by_length(&e, 1).unwrap().len(), 3);
        let tau = g.omega_element(1);
        assert_eq!(g.enumerate_by_length(&tau, 1).unwrap().len(), 3);
        assert!(g.enumerate_by_length_capped(&e, 10, 5).is_err());
    }

    #[test]
    fn double_coset_trivial_cases() {
        let g = gl(3);
        let x = g.translation(&[1, 0, 0]);
        assert_eq!(g.double_coset_min_rep(&ParahoricType::iwahori(), &x, &ParahoricType::iwahori()), x);
        let k = g.special_maximal();
        let s1 = g.simple(1).clone();
        assert_eq!(g.double_coset_min_rep(&k, &s1, &k), g.identity());
    }

    #[test]
    fn parahoric_validation() {
        let g = gl(2);
        assert!(g.check_parahoric(&ParahoricType { k: vec![0, 1] }).is_err());
        assert!(g.check_parahoric(&ParahoricType { k: vec![1] }).is_ok());
        assert_eq!(g.parahoric_group(&ParahoricType { k: vec![1] }).len(), 2);
    }
}
