//! Admissible and permissible sets, at Iwahori level and for parahoric `K`.

use crate::affweyl::{ExtAffWeylElem, ExtAffineWeyl, ParahoricType};
use crate::caps;
use crate::error::{invalid, Error, Result};
use crate::rootdata::{Coweight, GroupKind};
use crate::{q, Q};
use rayon::prelude::*;
use std::collections::{BTreeSet, HashSet};

/// A dominant cocharacter with its Weyl orbit and Omega-component.
#[derive(Clone, Debug)]
pub struct MuData {
    pub mu: Coweight,
    pub lambda: Vec<Coweight>,
    pub tau: ExtAffWeylElem,
}

impl MuData {
    pub fn new(aw: &ExtAffineWeyl, mu: &[i64]) -> Result<Self> {
        aw.rd.check_coweight(mu)?;
        if !aw.rd.is_dominant(mu) {
            return invalid(format!("mu = {mu:?} is not dominant"));
        }
        Ok(MuData {
            mu: mu.to_vec(),
            lambda: aw.rd.orbit(mu),
            tau: aw.omega_element(aw.rd.kappa(mu)),
        })
    }

    pub fn polytope(&self, aw: &ExtAffineWeyl) -> MuPolytope {
        let mut vertices: Vec<Vec<Q>> = self.lambda.iter().map(|l| aw.rd.proj_adjoint(l)).collect();
        vertices.sort();
        vertices.dedup();
        MuPolytope {
            mu_adj: aw.rd.proj_adjoint(&self.mu),
            vertices,
        }
    }
}

/// Convex hull of the adjoint Weyl orbit of `mu`.
#[derive(Clone, Debug)]
pub struct MuPolytope {
    pub mu_adj: Vec<Q>,
    pub vertices: Vec<Vec<Q>>,
}

impl MuPolytope {
    /// `p` lies in the hull iff its dominant representative is below `mu`.
    pub fn contains(&self, aw: &ExtAffineWeyl, p: &[Q]) -> bool {
        let d = aw.rd.dominant_adj(p);
        if aw.rd.kind == GroupKind::Gl {
            let s: Q = p.iter().sum();
            if s != q(0) {
                return false;
            }
        }
        aw.rd.dominance_leq_adj(&d, &self.mu_adj)
    }

    /// Coordinatewise bounds `[lo, hi]` of the polytope.
    fn bounds(&self) -> (Vec<Q>, Vec<Q>) {
        let n = self.mu_adj.len();
        let lo = (0..n)
            .map(|i| self.vertices.iter().map(|v| v[i].clone()).min().unwrap())
            .collect();
        let hi = (0..n)
            .map(|i| self.vertices.iter().map(|v| v[i].clone()).max().unwrap())
            .collect();
        (lo, hi)
    }
}

/// `Adm(mu)`: union of the Bruhat lower intervals of `t_lambda`, canonical order.
pub fn adm(aw: &ExtAffineWeyl, mu: &[i64]) -> Result<Vec<ExtAffWeylElem>> {
    let md = MuData::new(aw, mu)?;
    let parts: Vec<Vec<ExtAffWeylElem>> = md
        .lambda
        .par_iter()
        .map(|l| aw.lower_interval(&aw.translation(l)))
        .collect();
    let set: HashSet<ExtAffWeylElem> = parts.into_iter().flatten().collect();
    if set.len() > caps::element_cap() {
        return Err(Error::CapExceeded {
            what: "adm".into(),
            cap: caps::element_cap(),
        });
    }
    Ok(aw.sorted(set.into_iter().collect()))
}

/// `Perm(mu)`: elements in the Omega-class of `mu` moving every base-alcove
/// vertex by a vector of `P_mu`.
pub fn perm(aw: &ExtAffineWeyl, mu: &[i64]) -> Result<Vec<ExtAffWeylElem>> {
    let verts = aw.base_alcove_vertices().to_vec();
    vertex_condition_set(aw, mu, &verts)
}

/// All `w` with `kappa(w) = kappa(mu)` and `w(v) - v in P_mu` for every `v` in `verts`.
pub fn vertex_condition_set(aw: &ExtAffineWeyl, mu: &[i64], verts: &[Vec<Q>]) -> Result<Vec<ExtAffWeylElem>> {
    let md = MuData::new(aw, mu)?;
    let poly = md.polytope(aw);
    let kappa = aw.rd.kappa(mu);
    let anchor = verts
        .first()
        .ok_or_else(|| Error::InvalidInput("empty vertex list".into()))?
        .clone();
    let weyl = aw.rd.weyl_group();
    let (lo, hi) = poly.bounds();
    let found: Vec<Vec<ExtAffWeylElem>> = weyl
        .par_iter()
        .map(|u| {
            // proj(t) lies in P_mu + anchor - u(anchor).
            let ua = u.act(&anchor);
            let shift: Vec<Q> = anchor.iter().zip(&ua).map(|(a, b)| a - b).collect();
            let mut out = Vec::new();
            for t in translations_in_box(aw, kappa, &lo, &hi, &shift) {
                let w = ExtAffWeylElem { t, w: u.clone() };
                let ok = verts.iter().all(|v| {
                    let img = aw.act_on_point(&w, v).expect("dimension");
                    let d: Vec<Q> = img.iter().zip(v).map(|(a, b)| a - b).collect();
                    poly.contains(aw, &d)
                });
                if ok {
                    out.push(w);
                }
            }
            out
        })
        .collect();
    Ok(aw.sorted(found.into_iter().flatten().collect()))
}

/// Integer cocharacters `t` of Kottwitz invariant `kappa` with
/// `lo + shift <= proj(t) <= hi + shift` coordinatewise.
fn translations_in_box(aw: &ExtAffineWeyl, kappa: i64, lo: &[Q], hi: &[Q], shift: &[Q]) -> Vec<Coweight> {
    let rd = &aw.rd;
    let n = rd.n;
    let center = match rd.kind {
        GroupKind::Gl => Q::new(kappa.into(), (n as i64).into()),
        GroupKind::Gsp => Q::new(kappa.into(), 2.into()),
    };
    let ranges: Vec<(i64, i64)> = (0..n)
        .map(|i| {
            let a = (&lo[i] + &shift[i] + &center).ceil().to_integer();
            let b = (&hi[i] + &shift[i] + &center).floor().to_integer();
            (a.try_into().unwrap(), b.try_into().unwrap())
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(i: usize, ranges: &[(i64, i64)], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == ranges.len() {
            out.push(cur.clone());
            return;
        }
        for v in ranges[i].0..=ranges[i].1 {
            cur[i] = v;
            rec(i + 1, ranges, cur, out);
        }
    }
    rec(0, &ranges, &mut cur, &mut out);
    out.into_iter()
        .filter_map(|a| match rd.kind {
            GroupKind::Gl => (a.iter().sum::<i64>() == kappa).then_some(a),
            GroupKind::Gsp => {
                let mut full = a.clone();
                full.extend(a.iter().rev().map(|x| kappa - x));
                Some(full)
            }
        })
        .collect()
}

/// Minimal representatives of the image of `xs` in `W_K \ W~ / W_K`.
pub fn project_to_cosets(aw: &ExtAffineWeyl, xs: &[ExtAffWeylElem], k: &ParahoricType) -> Vec<ExtAffWeylElem> {
    let reps: BTreeSet<ExtAffWeylElem> = xs.iter().map(|x| aw.double_coset_min_rep(k, x, k)).collect();
    aw.sorted(reps.into_iter().collect())
}

/// `Adm_K(mu)`: image of `Adm(mu)` in the double cosets.
pub fn adm_k(aw: &ExtAffineWeyl, mu: &[i64], k: &ParahoricType) -> Result<Vec<ExtAffWeylElem>> {
    aw.check_parahoric(k)?;
    Ok(project_to_cosets(aw, &adm(aw, mu)?, k))
}

/// `Adm_K(mu)` directly from its definition: cosets below some `W_K t_lambda W_K`.
pub fn adm_k_by_definition(aw: &ExtAffineWeyl, mu: &[i64], k: &ParahoricType) -> Result<Vec<ExtAffWeylElem>> {
    aw.check_parahoric(k)?;
    let md = MuData::new(aw, mu)?;
    let tops: Vec<ExtAffWeylElem> = md
        .lambda
        .iter()
        .map(|l| aw.double_coset_min_rep(k, &aw.translation(l), k))
        .collect();
    let max_len = tops.iter().map(|t| aw.length(t)).max().unwrap_or(0);
    let all = aw.enumerate_by_length(&md.tau, max_len)?;
    let reps = project_to_cosets(aw, &all, k);
    Ok(reps
        .into_iter()
        .filter(|c| tops.iter().any(|t| aw.bruhat_leq(c, t)))
        .collect())
}

/// `Perm_K(mu)`: cosets satisfying the vertex condition on the facet of `K`.
pub fn perm_k(aw: &ExtAffineWeyl, mu: &[i64], k: &ParahoricType) -> Result<Vec<ExtAffWeylElem>> {
    aw.check_parahoric(k)?;
    let verts = aw.facet_vertices(k);
    let all = vertex_condition_set(aw, mu, &verts)?;
    Ok(project_to_cosets(aw, &all, k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareReport {
    pub equal: bool,
    pub adm_only: Vec<ExtAffWeylElem>,
    pub perm_only: Vec<ExtAffWeylElem>,
    pub adm_size: usize,
    pub perm_size: usize,
}

pub fn compare_sets(a: &[ExtAffWeylElem], p: &[ExtAffWeylElem]) -> CompareReport {
    let sa: HashSet<&ExtAffWeylElem> = a.iter().collect();
    let sp: HashSet<&ExtAffWeylElem> = p.iter().collect();
    let adm_only: Vec<_> = a.iter().filter(|x| !sp.contains(x)).cloned().collect();
    let perm_only: Vec<_> = p.iter().filter(|x| !sa.contains(x)).cloned().collect();
    CompareReport {
        equal: adm_only.is_empty() && perm_only.is_empty(),
        adm_only,
        perm_only,
        adm_size: a.len(),
        perm_size: p.len(),
    }
}

pub fn compare_adm_perm(aw: &ExtAffineWeyl, mu: &[i64]) -> Result<CompareReport> {
    Ok(compare_sets(&adm(aw, mu)?, &perm(aw, mu)?))
}

/// Lower Bruhat covers of `w`: one-letter deletions of a reduced word that drop length by one.
pub fn lower_covers(aw: &ExtAffineWeyl, w: &ExtAffWeylElem) -> Vec<ExtAffWeylElem> {
    let (word, tau) = aw.reduced_word(w);
    let target = word.len().saturating_sub(1);
    let mut out = BTreeSet::new();
    for skip in 0..word.len() {
        let sub: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, &s)| s)
            .collect();
        let x = aw.from_word(&sub, &tau);
        if aw.length(&x) == target {
            out.insert(x);
        }
    }
    out.into_iter().collect()
}

/// Elements of `set` having a lower cover outside `set` (empty iff downward closed).
pub fn downward_closure_violations(aw: &ExtAffineWeyl, set: &[ExtAffWeylElem]) -> Vec<(ExtAffWeylElem, ExtAffWeylElem)> {
    let members: HashSet<&ExtAffWeylElem> = set.iter().collect();
    set.par_iter()
        .flat_map_iter(|w| {
            lower_covers(aw, w)
                .into_iter()
                .filter(|x| !members.contains(x))
                .map(|x| (w.clone(), x))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Covering pairs `(x, y)` with `x < y` inside a downward-closed set.
pub fn hasse_edges(aw: &ExtAffineWeyl, set: &[ExtAffWeylElem]) -> Vec<(ExtAffWeylElem, ExtAffWeylElem)> {
    let members: HashSet<&ExtAffWeylElem> = set.iter().collect();
    let mut edges = Vec::new();
    for y in set {
        for x in lower_covers(aw, y) {
            if members.contains(&x) {
                edges.push((x, y.clone()));
            }
        }
    }
    edges
}

/// Maximal elements of a downward-closed set.
pub fn maximal_elements(aw: &ExtAffineWeyl, set: &[ExtAffWeylElem]) -> Vec<ExtAffWeylElem> {
    let below: HashSet<ExtAffWeylElem> = hasse_edges(aw, set).into_iter().map(|(x, _)| x).collect();
    set.iter().filter(|x| !below.contains(x)).cloned().collect()
}

/// Translation parts `nu` of translation elements in `set`, sorted.
pub fn translations(set: &[ExtAffWeylElem]) -> Vec<Coweight> {
    let mut v: Vec<Coweight> = set.iter().filter(|x| x.is_translation()).map(|x| x.t.clone()).collect();
    v.sort();
    v
}

/// Dominant `nu` with `nu <=! mu`, found by scanning a box around `mu`.
pub fn dominant_below(aw: &ExtAffineWeyl, mu: &[i64]) -> Result<Vec<Coweight>> {
    let md = MuData::new(aw, mu)?;
    let poly = md.polytope(aw);
    let (lo, hi) = poly.bounds();
    let zero = aw.rd.zero_adj();
    let mut out: Vec<Coweight> = translations_in_box(aw, aw.rd.kappa(mu), &lo, &hi, &zero)
        .into_iter()
        .filter(|nu| aw.rd.is_dominant(nu) && aw.rd.leq_coroot_unchecked(nu, mu))
        .collect();
    out.sort();
    Ok(out)
}

/// Image of `perm` in the double cosets compared with `perm_k`: surjectivity is reported, not assumed.
#[derive(Clone, Debug)]
pub struct SurjectivityReport {
    pub perm_k_size: usize,
    pub image_size: usize,
    pub missing_from_image: Vec<ExtAffWeylElem>,
    pub image_outside_perm_k: Vec<ExtAffWeylElem>,
}

pub fn perm_k_surjectivity(aw: &ExtAffineWeyl, mu: &[i64], k: &ParahoricType) -> Result<SurjectivityReport> {
    let pk = perm_k(aw, mu, k)?;
    let img = project_to_cosets(aw, &perm(aw, mu)?, k);
    let r = compare_sets(&img, &pk);
    Ok(SurjectivityReport {
        perm_k_size: pk.len(),
        image_size: img.len(),
        missing_from_image: r.perm_only,
        image_outside_perm_k: r.adm_only,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootDatum;
    use crate::qf;

    fn gl(n: usize) -> ExtAffineWeyl {
        ExtAffineWeyl::new(RootDatum::gl(n).unwrap())
    }

    #[test]
    fn adm_gl2_minuscule() {
        let g = gl(2);
        let a = adm(&g, &[1, 0]).unwrap();
        assert_eq!(a.len(), 3);
        let lens: Vec<usize> = a.iter().map(|x| g.length(x)).collect();
        assert_eq!(lens, vec![0, 1, 1]);
        assert_eq!(a[0], g.omega_element(1));
        assert_eq!(translations(&a), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn adm_of_zero_is_identity() {
        let g = gl(3);
        assert_eq!(adm(&g, &[0, 0, 0]).unwrap(), vec![g.identity()]);
        assert_eq!(perm(&g, &[0, 0, 0]).unwrap(), vec![g.identity()]);
    }

    #[test]
    fn gl3_minuscule_has_seven() {
        let g = gl(3);
        assert_eq!(adm(&g, &[1, 0, 0]).unwrap().len(), 7);
        assert!(compare_adm_perm(&g, &[1, 0, 0]).unwrap().equal);
    }

    #[test]
    fn polytope_examples() {
        let g = gl(2);
        let md = MuData::new(&g, &[1, 0]).unwrap();
        let p = md.polytope(&g);
        assert!(p.contains(&g, &p.mu_adj.clone()));
        assert!(p.contains(&g, &[q(0), q(0)]));
        assert!(!p.contains(&g, &[qf(3, 4), qf(-3, 4)]));
    }

    #[test]
    fn special_maximal_minuscule_singleton() {
        let g = gl(2);
        let k = g.special_maximal();
        assert_eq!(adm_k(&g, &[1, 0], &k).unwrap().len(), 1);
    }

    #[test]
    fn gl3_special_maximal_cosets() {
        let g = gl(3);
        let k = g.special_maximal();
        let ak = adm_k(&g, &[2, 0, 0], &k).unwrap();
        assert_eq!(ak.len(), 2);
        assert_eq!(dominant_below(&g, &[2, 0, 0]).unwrap(), vec![vec![1, 1, 0], vec![2, 0, 0]]);
        assert_eq!(ak, adm_k_by_definition(&g, &[2, 0, 0], &k).unwrap());
        assert_eq!(ak, perm_k(&g, &[2, 0, 0], &k).unwrap());
    }

    #[test]
    fn maximal_are_translations() {
        let g = gl(3);
        let a = adm(&g, &[1, 1, 0]).unwrap();
        let mut m = translations(&maximal_elements(&g, &a));
        m.sort();
        assert_eq!(m, RootDatum::gl(3).unwrap().orbit(&[1, 1, 0]));
        assert_eq!(maximal_elements(&g, &a).len(), 3);
    }

    #[test]
    fn non_dominant_mu_rejected() {
        assert!(adm(&gl(2), &[0, 1]).is_err());
    }
}
