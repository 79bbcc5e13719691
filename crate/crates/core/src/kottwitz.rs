//! The Kottwitz set `B(G, mu)` for `GL_n` and `GSp_2n`: Newton vectors,
//! dominance order, Chai's length function and the basic-locus dimension formula.

use crate::error::{invalid, Error, Result};
use crate::rootdata::{Coweight, GroupKind, RootDatum};
use crate::{q, Q};
use std::collections::BTreeSet;

/// Weakly decreasing rational slope vector in full coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NewtonVector {
    pub slopes: Vec<Q>,
}

impl NewtonVector {
    pub fn from_integers(v: &[i64]) -> Self {
        NewtonVector {
            slopes: v.iter().map(|&a| q(a)).collect(),
        }
    }

    /// Shape and integrality checks: weakly decreasing, breakpoints on lattice
    /// points, and self-duality for `GSp`.
    pub fn validate(&self, rd: &RootDatum) -> Result<()> {
        let s = &self.slopes;
        if s.len() != rd.full_len() {
            return invalid("Newton vector has the wrong length");
        }
        if s.windows(2).any(|w| w[0] < w[1]) {
            return invalid("Newton vector is not weakly decreasing");
        }
        let mut prefix = q(0);
        for i in 0..s.len() {
            prefix += &s[i];
            let breakpoint = i + 1 == s.len() || s[i] != s[i + 1];
            if breakpoint && !prefix.is_integer() {
                return invalid("Newton polygon breakpoint is not integral");
            }
        }
        if rd.kind == GroupKind::Gsp {
            let m = s.len();
            let c = s[0].clone() + s[m - 1].clone();
            if (0..m).any(|i| s[i].clone() + s[m - 1 - i].clone() != c) {
                return invalid("Newton vector is not self-dual");
            }
        }
        Ok(())
    }

    pub fn is_central(&self) -> bool {
        self.slopes.windows(2).all(|w| w[0] == w[1])
    }
}

/// A sigma-conjugacy class, determined by its Newton vector and Kottwitz invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SigmaClass {
    pub newton: NewtonVector,
    pub kappa: i64,
    pub basic: bool,
}

impl SigmaClass {
    pub fn new(rd: &RootDatum, newton: NewtonVector) -> Result<Self> {
        newton.validate(rd)?;
        let kappa = newton_kappa(rd, &newton);
        if !kappa.is_integer() {
            return invalid("Kottwitz invariant is not integral");
        }
        let basic = newton.is_central();
        Ok(SigmaClass {
            kappa: kappa.to_integer().try_into().expect("small"),
            basic,
            newton,
        })
    }
}

fn newton_kappa(rd: &RootDatum, nu: &NewtonVector) -> Q {
    match rd.kind {
        GroupKind::Gl => nu.slopes.iter().sum(),
        GroupKind::Gsp => nu.slopes[0].clone() + nu.slopes[nu.slopes.len() - 1].clone(),
    }
}

/// `mu^natural`: coordinate sum for `GL_n`, similitude for `GSp_2n`.
pub fn mu_natural(rd: &RootDatum, mu: &[i64]) -> i64 {
    rd.kappa(mu)
}

/// Galois average of `mu`; for split groups this is `mu` itself.
pub fn mu_bar_star(mu: &[i64]) -> NewtonVector {
    NewtonVector::from_integers(mu)
}

#[derive(Clone, Debug)]
pub struct BGmuPoset {
    pub mu: Coweight,
    /// Sorted by Chai rank, then by slopes.
    pub elements: Vec<SigmaClass>,
    /// `leq[i][j]` iff element `i` is below element `j`.
    pub leq: Vec<Vec<bool>>,
    /// Covering pairs `(lower, upper)`.
    pub hasse: Vec<(usize, usize)>,
    /// Chai length from the basic element.
    pub rank: Vec<i64>,
}

impl BGmuPoset {
    pub fn basic_index(&self) -> usize {
        self.elements.iter().position(|e| e.basic).expect("basic element present")
    }

    pub fn ordinary_index(&self, mu: &[i64]) -> usize {
        let target = NewtonVector::from_integers(mu);
        self.elements
            .iter()
            .position(|e| e.newton == target)
            .expect("ordinary element present")
    }

    pub fn index_of(&self, nu: &NewtonVector) -> Option<usize> {
        self.elements.iter().position(|e| &e.newton == nu)
    }

    pub fn minimal(&self) -> Vec<usize> {
        let m = self.elements.len();
        (0..m).filter(|&i| (0..m).all(|j| j == i || !self.leq[j][i])).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        let m = self.elements.len();
        (0..m).filter(|&i| (0..m).all(|j| j == i || !self.leq[i][j])).collect()
    }
}

/// Newton polygons of total height `kappa` on `n` points with integral
/// breakpoints and slopes in `[lo, hi]`.
fn polygons(n: usize, kappa: i64, lo: i64, hi: i64) -> Vec<Vec<Q>> {
    fn rec(
        left: usize,
        height: i64,
        prev: Option<Q>,
        lo: i64,
        hi: i64,
        cur: &mut Vec<Q>,
        out: &mut Vec<Vec<Q>>,
    ) {
        if left == 0 {
            if height == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for d in 1..=left {
            for h in (d as i64 * lo)..=(d as i64 * hi) {
                let slope = Q::new(h.into(), (d as i64).into());
                if prev.as_ref().is_some_and(|p| slope >= *p) {
                    continue;
                }
                let rest = left - d;
                let rem = height - h;
                if rem < rest as i64 * lo || rem > rest as i64 * hi {
                    continue;
                }
                let keep = cur.len();
                cur.extend(std::iter::repeat_n(slope.clone(), d));
                rec(rest, rem, Some(slope), lo, hi, cur, out);
                cur.truncate(keep);
            }
        }
    }
    let mut out = Vec::new();
    rec(n, kappa, None, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Enumerates `B(G, mu)` with its order, Hasse diagram and Chai ranks.
pub fn enumerate_bgmu(rd: &RootDatum, mu: &[i64]) -> Result<BGmuPoset> {
    rd.check_coweight(mu)?;
    if !rd.is_dominant(mu) {
        return invalid(format!("mu = {mu:?} is not dominant"));
    }
    let mu_q: Vec<Q> = mu.iter().map(|&a| q(a)).collect();
    let lo = *mu.iter().min().unwrap();
    let hi = *mu.iter().max().unwrap();
    let total: i64 = mu.iter().sum();
    let mut elements = Vec::new();
    for slopes in polygons(rd.full_len(), total, lo, hi) {
        let nv = NewtonVector { slopes };
        if nv.validate(rd).is_err() {
            continue;
        }
        if !rd.dominance_leq_rational(&nv.slopes, &mu_q)? {
            continue;
        }
        elements.push(SigmaClass::new(rd, nv)?);
    }
    let basic = elements
        .iter()
        .find(|e| e.basic)
        .cloned()
        .ok_or_else(|| Error::Internal("no basic element".into()))?;
    let mut keyed: Vec<(i64, SigmaClass)> = elements
        .into_iter()
        .map(|e| (chai_length_unchecked(rd, mu, &basic.newton, &e.newton), e))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.newton.cmp(&a.1.newton)));
    let rank: Vec<i64> = keyed.iter().map(|k| k.0).collect();
    let elements: Vec<SigmaClass> = keyed.into_iter().map(|k| k.1).collect();
    let m = elements.len();
    let mut leq = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            leq[i][j] = rd.dominance_leq_rational(&elements[i].newton.slopes, &elements[j].newton.slopes)?;
        }
    }
    let mut hasse = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i == j || !leq[i][j] {
                continue;
            }
            let covered = (0..m).all(|k| k == i || k == j || !(leq[i][k] && leq[k][j]));
            if covered {
                hasse.push((i, j));
            }
        }
    }
    Ok(BGmuPoset {
        mu: mu.to_vec(),
        elements,
        leq,
        hasse,
        rank,
    })
}

fn floor_sum(rd: &RootDatum, nu: &NewtonVector, mu_adj: &[Q]) -> Q {
    let x = rd.proj_adjoint_q(&nu.slopes);
    (1..=rd.rank())
        .map(|i| (rd.omega_pair_adj(i, &x) - rd.omega_pair_adj(i, mu_adj)).floor())
        .sum()
}

fn chai_length_unchecked(rd: &RootDatum, mu: &[i64], b: &NewtonVector, b2: &NewtonVector) -> i64 {
    let mu_adj = rd.proj_adjoint(mu);
    let v = floor_sum(rd, b2, &mu_adj) - floor_sum(rd, b, &mu_adj);
    v.to_integer().try_into().expect("small")
}

/// Chai's length between comparable classes `b <= b2`.
pub fn chai_length(rd: &RootDatum, mu: &[i64], b: &NewtonVector, b2: &NewtonVector) -> Result<i64> {
    b.validate(rd)?;
    b2.validate(rd)?;
    if !rd.dominance_leq_rational(&b.slopes, &b2.slopes)? {
        return invalid("chai_length needs b <= b'");
    }
    Ok(chai_length_unchecked(rd, mu, b, b2))
}

/// Both evaluations of the conjectured dimension of the basic locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimBasic {
    pub two_rho_mu: i64,
    /// `<2 rho, mu> - length(basic, ordinary)`.
    pub via_length: i64,
    /// `<2 rho, mu> + sum_i floor(-<omega_i, mu>)`.
    pub via_floor_sum: i64,
}

pub fn conj_dim_basic_forms(rd: &RootDatum, mu: &[i64]) -> Result<DimBasic> {
    let poset = enumerate_bgmu(rd, mu)?;
    let b0 = &poset.elements[poset.basic_index()].newton;
    let b1 = &poset.elements[poset.ordinary_index(mu)].newton;
    let len = chai_length(rd, mu, b0, b1)?;
    let two_rho_mu = rd.pair_two_rho(mu);
    let mu_adj = rd.proj_adjoint(mu);
    let fs: Q = (1..=rd.rank())
        .map(|i| (-rd.omega_pair_adj(i, &mu_adj)).floor())
        .sum();
    let fs: i64 = fs.to_integer().try_into().expect("small");
    Ok(DimBasic {
        two_rho_mu,
        via_length: two_rho_mu - len,
        via_floor_sum: two_rho_mu + fs,
    })
}

/// Conjectured dimension of the basic locus; errors if the two forms disagree.
pub fn conj_dim_basic(rd: &RootDatum, mu: &[i64]) -> Result<i64> {
    let d = conj_dim_basic_forms(rd, mu)?;
    if d.via_length != d.via_floor_sum {
        return Err(Error::Internal(format!("dimension forms disagree: {d:?}")));
    }
    Ok(d.via_length)
}

/// Mazur's inequality: Newton vector below Hodge vector with equal endpoints.
pub fn mazur_check(rd: &RootDatum, hodge: &[i64], newton: &NewtonVector) -> Result<bool> {
    rd.check_coweight(hodge)?;
    let h: Vec<Q> = hodge.iter().map(|&a| q(a)).collect();
    rd.dominance_leq_rational(&newton.slopes, &h)
}

/// Membership of a class in `B(G, mu)`.
pub fn in_bgmu(rd: &RootDatum, mu: &[i64], b: &SigmaClass) -> Result<bool> {
    if b.kappa != mu_natural(rd, mu) {
        return Ok(false);
    }
    let h: Vec<Q> = mu.iter().map(|&a| q(a)).collect();
    rd.dominance_leq_rational(&b.newton.slopes, &h)
}

/// Result of the structural checks on an enumerated poset.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PosetChecks {
    pub unique_min_basic: bool,
    pub unique_max_ordinary: bool,
    pub ranked: bool,
    pub rank_is_chai_length: bool,
    pub pair_joins: bool,
    pub triple_joins: bool,
    pub injective: bool,
}

impl PosetChecks {
    pub fn all(&self) -> bool {
        self.unique_min_basic
            && self.unique_max_ordinary
            && self.ranked
            && self.rank_is_chai_length
            && self.pair_joins
            && self.triple_joins
            && self.injective
    }
}

/// Lengths of all saturated chains from `i` to `j` along Hasse edges.
pub fn chain_lengths(p: &BGmuPoset) -> Vec<Vec<BTreeSet<usize>>> {
    let m = p.elements.len();
    let mut up: Vec<Vec<usize>> = vec![vec![]; m];
    for &(a, b) in &p.hasse {
        up[a].push(b);
    }
    // Number of elements below is strictly monotone along the order.
    let below: Vec<usize> = (0..m).map(|i| (0..m).filter(|&k| p.leq[k][i]).count()).collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(below[i]));
    let mut lens: Vec<Vec<BTreeSet<usize>>> = vec![vec![BTreeSet::new(); m]; m];
    for &i in &order {
        lens[i][i].insert(0);
        for &k in &up[i] {
            for j in 0..m {
                let add: Vec<usize> = lens[k][j].iter().map(|l| l + 1).collect();
                lens[i][j].extend(add);
            }
        }
    }
    lens
}

fn has_join(p: &BGmuPoset, subset: &[usize]) -> bool {
    let m = p.elements.len();
    let ub: Vec<usize> = (0..m).filter(|&c| subset.iter().all(|&s| p.leq[s][c])).collect();
    ub.iter().any(|&c| ub.iter().all(|&d| p.leq[c][d]))
}

pub fn check_poset(rd: &RootDatum, mu: &[i64], p: &BGmuPoset) -> PosetChecks {
    let m = p.elements.len();
    let mins = p.minimal();
    let maxs = p.maximal();
    let ordinary = NewtonVector::from_integers(mu);
    let lens = chain_lengths(p);
    let mut ranked = true;
    let mut rank_ok = true;
    for i in 0..m {
        for j in 0..m {
            if !p.leq[i][j] {
                continue;
            }
            if lens[i][j].len() != 1 {
                ranked = false;
                continue;
            }
            let l = *lens[i][j].iter().next().unwrap() as i64;
            let c = chai_length_unchecked(rd, mu, &p.elements[i].newton, &p.elements[j].newton);
            if l != c {
                rank_ok = false;
            }
        }
    }
    let pair_joins = (0..m).all(|a| (a..m).all(|b| has_join(p, &[a, b])));
    let triple_joins = (0..m).all(|a| (a..m).all(|b| (b..m).all(|c| has_join(p, &[a, b, c]))));
    let keys: BTreeSet<(NewtonVector, i64)> = p.elements.iter().map(|e| (e.newton.clone(), e.kappa)).collect();
    PosetChecks {
        unique_min_basic: mins.len() == 1 && p.elements[mins[0]].basic,
        unique_max_ordinary: maxs.len() == 1 && p.elements[maxs[0]].newton == ordinary,
        ranked,
        rank_is_chai_length: rank_ok,
        pair_joins,
        triple_joins,
        injective: keys.len() == m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qf;

    #[test]
    fn gl2_poset() {
        let rd = RootDatum::gl(2).unwrap();
        let p = enumerate_bgmu(&rd, &[1, 0]).unwrap();
        assert_eq!(p.elements.len(), 2);
        assert_eq!(p.elements[0].newton.slopes, vec![qf(1, 2), qf(1, 2)]);
        assert_eq!(p.rank, vec![0, 1]);
        assert_eq!(p.hasse, vec![(0, 1)]);
        assert!(check_poset(&rd, &[1, 0], &p).all());
    }

    #[test]
    fn gl4_poset() {
        let rd = RootDatum::gl(4).unwrap();
        let p = enumerate_bgmu(&rd, &[1, 1, 0, 0]).unwrap();
        assert_eq!(p.elements.len(), 5);
        let b0 = &p.elements[p.basic_index()].newton;
        let b1 = &p.elements[p.ordinary_index(&[1, 1, 0, 0])].newton;
        assert_eq!(chai_length(&rd, &[1, 1, 0, 0], b0, b1).unwrap(), 3);
        assert!(check_poset(&rd, &[1, 1, 0, 0], &p).all());
    }

    #[test]
    fn gsp4_poset() {
        let rd = RootDatum::gsp(2).unwrap();
        let p = enumerate_bgmu(&rd, &[1, 1, 0, 0]).unwrap();
        assert_eq!(p.elements.len(), 3);
        assert_eq!(
            p.elements[1].newton.slopes,
            vec![q(1), qf(1, 2), qf(1, 2), q(0)]
        );
        assert!(check_poset(&rd, &[1, 1, 0, 0], &p).all());
    }

    #[test]
    fn dimension_of_basic_locus() {
        assert_eq!(conj_dim_basic(&RootDatum::gl(2).unwrap(), &[1, 0]).unwrap(), 0);
        assert_eq!(conj_dim_basic(&RootDatum::gsp(2).unwrap(), &[1, 1, 0, 0]).unwrap(), 1);
        assert_eq!(conj_dim_basic(&RootDatum::gl(3).unwrap(), &[0, 0, 0]).unwrap(), 0);
    }

    #[test]
    fn mazur_examples() {
        let rd = RootDatum::gl(2).unwrap();
        let nv = |a: Q, b: Q| NewtonVector { slopes: vec![a, b] };
        assert!(mazur_check(&rd, &[1, 0], &nv(qf(1, 2), qf(1, 2))).unwrap());
        assert!(mazur_check(&rd, &[1, 0], &nv(q(1), q(0))).unwrap());
        assert!(!mazur_check(&rd, &[1, 0], &nv(qf(3, 2), qf(-1, 2))).unwrap());
    }

    #[test]
    fn mu_invariants() {
        assert_eq!(mu_natural(&RootDatum::gl(4).unwrap(), &[1, 1, 0, 0]), 2);
        assert_eq!(mu_natural(&RootDatum::gsp(2).unwrap(), &[1, 1, 0, 0]), 1);
        assert_eq!(mu_bar_star(&[1, 0]), NewtonVector::from_integers(&[1, 0]));
    }

    #[test]
    fn rejects_non_integral_breakpoints() {
        let rd = RootDatum::gl(3).unwrap();
        let nv = NewtonVector {
            slopes: vec![qf(1, 2), qf(1, 2), q(0)],
        };
        assert!(nv.validate(&rd).is_ok());
        let bad = NewtonVector {
            slopes: vec![qf(2, 3), qf(1, 3), q(0)],
        };
        assert!(bad.validate(&rd).is_err());
    }
}
