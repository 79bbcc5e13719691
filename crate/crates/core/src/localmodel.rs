//! `F_q`-points of the special fibres of lattice-chain local models.
//!
//! For `GL_n` a point is a chain of `r`-dimensional subspaces `F_i` of the
//! reductions `Lambda_i / pi`, one for each `i` in the chain, compatible with the
//! reduced inclusion maps and the closing `pi`-map. For `GSp_2n` the chain must
//! in addition be self-dual for the symplectic pairing.

use crate::affweyl::ExtAffineWeyl;
use crate::caps;
use crate::error::{invalid, Error, Result};
use crate::ff::{Elem, Gf};
use crate::linalg;
use crate::rootdata::{Coweight, GroupKind, RootDatum};
use crate::{admperm, q, Q};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Square matrix over `F_q`, row-major.
pub type FMat = Vec<Vec<Elem>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainConfig {
    pub kind: GroupKind,
    /// Rank of the group: the lattices have rank `n` for `GL` and `2n` for `GSp`.
    pub n: usize,
    pub r: usize,
    /// The index set `I`, strictly increasing.
    pub chain: Vec<usize>,
    pub q: u32,
}

impl ChainConfig {
    pub fn gl(n: usize, r: usize, chain: &[usize], q: u32) -> Result<Self> {
        Self::build(GroupKind::Gl, n, r, chain, q)
    }

    /// `GSp_2n` with the weight-`n` coweight, so `r = n`.
    pub fn gsp(n: usize, chain: &[usize], q: u32) -> Result<Self> {
        Self::build(GroupKind::Gsp, n, n, chain, q)
    }

    fn build(kind: GroupKind, n: usize, r: usize, chain: &[usize], q: u32) -> Result<Self> {
        let mut chain = chain.to_vec();
        chain.sort_unstable();
        chain.dedup();
        let cfg = ChainConfig { kind, n, r, chain, q };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Rank of the lattices.
    pub fn dim(&self) -> usize {
        match self.kind {
            GroupKind::Gl => self.n,
            GroupKind::Gsp => 2 * self.n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return invalid("n must be positive");
        }
        let d = self.dim();
        if self.r > d {
            return invalid(format!("r = {} exceeds the lattice rank {d}", self.r));
        }
        if self.kind == GroupKind::Gsp && self.r != self.n {
            return invalid("the symplectic local model needs r = n");
        }
        if self.chain.is_empty() {
            return invalid("the chain index set must be nonempty");
        }
        if self.chain.windows(2).any(|w| w[0] >= w[1]) {
            return invalid("chain indices must be strictly increasing");
        }
        if let Some(&i) = self.chain.iter().find(|&&i| i >= d) {
            return invalid(format!("chain index {i} out of range 0..{d}"));
        }
        if self.kind == GroupKind::Gsp {
            for &i in &self.chain {
                if i != 0 && !self.chain.contains(&(d - i)) {
                    return invalid(format!("chain contains {i} but not {}", d - i));
                }
            }
        }
        Gf::extension(self.q, 1)?;
        Ok(())
    }

    pub fn is_full(&self) -> bool {
        self.chain.len() == self.dim()
    }

    /// The minuscule coweight the moduli problem belongs to.
    pub fn mu(&self) -> Coweight {
        let d = self.dim();
        (0..d).map(|k| if k < self.r { 1 } else { 0 }).collect()
    }

    pub fn root_datum(&self) -> Result<RootDatum> {
        match self.kind {
            GroupKind::Gl => RootDatum::gl(self.n),
            GroupKind::Gsp => RootDatum::gsp(self.n),
        }
    }

    pub fn with_q(&self, q: u32) -> Result<Self> {
        Self::build(self.kind, self.n, self.r, &self.chain, q)
    }

    /// Dimension of the generic fibre, a Grassmannian or Lagrangian Grassmannian.
    pub fn generic_dim(&self) -> usize {
        match self.kind {
            GroupKind::Gl => self.r * (self.n - self.r),
            GroupKind::Gsp => self.n * (self.n + 1) / 2,
        }
    }
}

/// `pi`-adic valuation of the `k`-th basis vector of `Lambda_i` relative to `e_k`
/// (0-based `k`): `Lambda_i` has `pi^-1 e_k` for `k < i` and `e_k` otherwise.
fn basis_shift(i: usize, k: usize) -> i64 {
    if k < i {
        -1
    } else {
        0
    }
}

/// Reduction of `pi^e` modulo `pi`.
fn reduce(e: i64) -> Result<Elem> {
    match e {
        0 => Ok(1),
        e if e > 0 => Ok(0),
        e => Err(Error::Internal(format!("non-integral map, exponent {e}"))),
    }
}

/// Reduced maps `Lambda_{i_j} -> Lambda_{i_{j+1}}`, the last one being `pi: Lambda_{i_m} -> Lambda_{i_0}`.
pub fn transition_matrices(cfg: &ChainConfig) -> Result<Vec<FMat>> {
    let d = cfg.dim();
    let m = cfg.chain.len();
    let mut out = Vec::with_capacity(m);
    for j in 0..m {
        let src = cfg.chain[j];
        let (dst, extra) = if j + 1 < m { (cfg.chain[j + 1], 0) } else { (cfg.chain[0], 1) };
        let mut mat = vec![vec![0; d]; d];
        for (k, row) in mat.iter_mut().enumerate() {
            // basis vector k of the source is pi^(extra + shift_src - shift_dst) times basis vector k of the target
            row[k] = reduce(extra + basis_shift(src, k) - basis_shift(dst, k))?;
        }
        out.push(mat);
    }
    Ok(out)
}

/// Composite of all transition maps once around the loop.
pub fn loop_composite(cfg: &ChainConfig) -> Result<FMat> {
    let f = Gf::extension(cfg.q, 1)?;
    let d = cfg.dim();
    let mut acc: FMat = (0..d).map(|r| (0..d).map(|c| (r == c) as Elem).collect()).collect();
    for m in transition_matrices(cfg)? {
        acc = mat_mul(&f, &m, &acc);
    }
    Ok(acc)
}

fn mat_mul(f: &Gf, a: &FMat, b: &FMat) -> FMat {
    let n = a.len();
    let k = b.len();
    let c = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..c)
                .map(|j| (0..k).fold(0, |acc, l| f.add(acc, f.mul(a[i][l], b[l][j]))))
                .collect()
        })
        .collect()
}

fn mat_vec(f: &Gf, a: &FMat, v: &[Elem]) -> Vec<Elem> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y))))
        .collect()
}

/// Gram matrix of `pi <., .>` between the bases of `Lambda_i` and `Lambda_{2n-i}`, reduced mod `pi`.
///
/// The symplectic basis has `<e_k, e_{2n+1-k}> = 1` for `k <= n` (1-based) and the
/// form is alternating. For `i = 0` the partner lattice is `Lambda_{2n} = pi^-1 Lambda_0`.
pub fn pairing_matrix(cfg: &ChainConfig, i: usize) -> Result<FMat> {
    if cfg.kind != GroupKind::Gsp {
        return invalid("pairing matrices exist only for GSp");
    }
    let f = Gf::extension(cfg.q, 1)?;
    let d = cfg.dim();
    let n = cfg.n;
    let partner = d - i;
    let mut out = vec![vec![0; d]; d];
    for (k, row) in out.iter_mut().enumerate() {
        for (l, entry) in row.iter_mut().enumerate() {
            let form = if l == d - 1 - k {
                if k < n {
                    1
                } else {
                    -1
                }
            } else {
                0
            };
            if form == 0 {
                continue;
            }
            let e = 1 + basis_shift(i, k) + basis_shift(partner, l);
            *entry = f.mul(f.from_int(form), reduce(e)?);
        }
    }
    Ok(out)
}

/// An `r`-dimensional subspace of `F_q^d`.
#[derive(Clone, Debug)]
pub struct Subspace {
    /// Reduced row echelon basis.
    pub basis: Vec<Vec<Elem>>,
    members: Vec<u64>,
}

impl Subspace {
    pub fn contains(&self, code: usize) -> bool {
        self.members[code / 64] >> (code % 64) & 1 == 1
    }
}

/// All `r`-dimensional subspaces of `F_q^d`, in a fixed order.
#[derive(Clone, Debug)]
pub struct Grassmannian {
    pub d: usize,
    pub r: usize,
    pub field: Gf,
    pub subspaces: Vec<Subspace>,
}

fn encode(size: u32, v: &[Elem]) -> usize {
    v.iter().rev().fold(0usize, |acc, &c| acc * size as usize + c as usize)
}

impl Grassmannian {
    pub fn new(field: Gf, d: usize, r: usize) -> Result<Self> {
        let size = field.size as usize;
        let space = (size as u64).checked_pow(d as u32).unwrap_or(u64::MAX);
        if space > caps::element_cap() as u64 {
            return Err(Error::CapExceeded {
                what: "vector space".into(),
                cap: caps::element_cap(),
            });
        }
        let mut subspaces = Vec::new();
        for pivots in itertools::Itertools::combinations(0..d, r) {
            let free: Vec<(usize, usize)> = (0..r)
                .flat_map(|row| ((pivots[row] + 1)..d).filter(|c| !pivots.contains(c)).map(move |c| (row, c)))
                .collect();
            let count = (size as u64).pow(free.len() as u32);
            for idx in 0..count {
                let mut basis = vec![vec![0; d]; r];
                for (row, &p) in pivots.iter().enumerate() {
                    basis[row][p] = 1;
                }
                let mut x = idx;
                for &(row, c) in &free {
                    basis[row][c] = (x % size as u64) as Elem;
                    x /= size as u64;
                }
                subspaces.push(Self::span(&field, basis, space as usize));
                if subspaces.len() > caps::element_cap() {
                    return Err(Error::CapExceeded {
                        what: "grassmannian".into(),
                        cap: caps::element_cap(),
                    });
                }
            }
        }
        Ok(Grassmannian { d, r, field, subspaces })
    }

    fn span(f: &Gf, basis: Vec<Vec<Elem>>, space: usize) -> Subspace {
        let mut members = vec![0u64; space.div_ceil(64)];
        let r = basis.len();
        let d = basis.first().map_or(0, |b| b.len());
        let combos = (f.size as u64).pow(r as u32);
        for idx in 0..combos {
            let mut v = vec![0; d];
            let mut x = idx;
            for row in &basis {
                let c = (x % f.size as u64) as Elem;
                x /= f.size as u64;
                for (acc, &b) in v.iter_mut().zip(row) {
                    *acc = f.add(*acc, f.mul(c, b));
                }
            }
            let code = encode(f.size, &v);
            members[code / 64] |= 1 << (code % 64);
        }
        Subspace { basis, members }
    }

    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    /// Whether `m` maps subspace `a` into subspace `b`.
    pub fn maps_into(&self, m: &FMat, a: usize, b: usize) -> bool {
        let target = &self.subspaces[b];
        self.subspaces[a]
            .basis
            .iter()
            .all(|v| target.contains(encode(self.field.size, &mat_vec(&self.field, m, v))))
    }

    /// Whether `<a, b>` vanishes identically under the Gram matrix `p`.
    pub fn orthogonal(&self, p: &FMat, a: usize, b: usize) -> bool {
        let f = &self.field;
        self.subspaces[a].basis.iter().all(|u| {
            let pu: Vec<Elem> = (0..self.d)
                .map(|l| (0..self.d).fold(0, |acc, k| f.add(acc, f.mul(u[k], p[k][l]))))
                .collect();
            self.subspaces[b]
                .basis
                .iter()
                .all(|v| pu.iter().zip(v).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y))) == 0)
        })
    }
}

/// Every point of the local model, as indices into the Grassmannian, one per chain entry.
#[derive(Clone, Debug)]
pub struct Points {
    pub config: ChainConfig,
    pub grassmannian: Grassmannian,
    pub chains: Vec<Vec<usize>>,
}

struct Search<'a> {
    grass: &'a Grassmannian,
    maps: Vec<FMat>,
    /// `succ[j][s]`: subspaces `t` with `maps[j] F_s <= F_t`, for the non-closing maps.
    succ: Vec<Vec<Vec<usize>>>,
    /// `(j, j', gram)`: chain positions that must be orthogonal.
    duality: Vec<(usize, usize, FMat)>,
}

impl Search<'_> {
    fn extend(&self, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let m = self.maps.len();
        let j = prefix.len();
        if j == m {
            if self.grass.maps_into(&self.maps[m - 1], prefix[m - 1], prefix[0]) {
                out.push(prefix.clone());
            }
            return;
        }
        for &t in &self.succ[j - 1][prefix[j - 1]] {
            prefix.push(t);
            if self.dual_ok(prefix) {
                self.extend(prefix, out);
            }
            prefix.pop();
        }
    }

    /// Checks the duality conditions whose positions are both filled.
    fn dual_ok(&self, prefix: &[usize]) -> bool {
        let last = prefix.len() - 1;
        self.duality.iter().all(|(a, b, p)| {
            if (*a).max(*b) != last {
                return true;
            }
            self.grass.orthogonal(p, prefix[*a], prefix[*b])
        })
    }
}

fn enumerate(cfg: &ChainConfig) -> Result<Points> {
    cfg.validate()?;
    let field = Gf::extension(cfg.q, 1)?;
    let grass = Grassmannian::new(field, cfg.dim(), cfg.r)?;
    let maps = transition_matrices(cfg)?;
    let m = maps.len();
    let succ: Vec<Vec<Vec<usize>>> = maps[..m - 1]
        .iter()
        .map(|mat| {
            (0..grass.len())
                .into_par_iter()
                .map(|a| (0..grass.len()).filter(|&b| grass.maps_into(mat, a, b)).collect())
                .collect()
        })
        .collect();
    let mut duality = Vec::new();
    if cfg.kind == GroupKind::Gsp {
        let d = cfg.dim();
        for (j, &i) in cfg.chain.iter().enumerate() {
            let partner = (d - i) % d;
            let jp = cfg.chain.iter().position(|&x| x == partner).expect("validated closure");
            duality.push((j, jp, pairing_matrix(cfg, i)?));
        }
    }
    let search = Search {
        grass: &grass,
        maps,
        succ,
        duality,
    };
    let per_start: Vec<Vec<Vec<usize>>> = (0..grass.len())
        .into_par_iter()
        .map(|s| {
            let mut out = Vec::new();
            let mut prefix = vec![s];
            if search.dual_ok(&prefix) {
                search.extend(&mut prefix, &mut out);
            }
            out
        })
        .collect();
    let total: usize = per_start.iter().map(Vec::len).sum();
    if total > caps::element_cap() {
        return Err(Error::CapExceeded {
            what: "local model points".into(),
            cap: caps::element_cap(),
        });
    }
    let chains = per_start.into_iter().flatten().collect();
    Ok(Points {
        config: cfg.clone(),
        grassmannian: grass,
        chains,
    })
}

/// All points of the `GL_n` local model.
pub fn points(cfg: &ChainConfig) -> Result<Points> {
    enumerate(cfg)
}

/// Number of `F_q`-points of the `GL_n` local model.
pub fn count_points(cfg: &ChainConfig) -> Result<u64> {
    if cfg.kind != GroupKind::Gl {
        return invalid("count_points expects a GL configuration");
    }
    Ok(enumerate(cfg)?.chains.len() as u64)
}

/// Number of `F_q`-points of the `GSp_2n` local model.
pub fn count_points_gsp(cfg: &ChainConfig) -> Result<u64> {
    if cfg.kind != GroupKind::Gsp {
        return invalid("count_points_gsp expects a GSp configuration");
    }
    Ok(enumerate(cfg)?.chains.len() as u64)
}

pub fn count(cfg: &ChainConfig) -> Result<u64> {
    Ok(enumerate(cfg)?.chains.len() as u64)
}

/// `sum_{w in Adm(mu)} q^length(w)`.
pub fn predicted_count_iwahori(aw: &ExtAffineWeyl, mu: &[i64], q: u32) -> Result<u64> {
    let mut total = 0u64;
    for w in admperm::adm(aw, mu)? {
        let term = (q as u64)
            .checked_pow(aw.length(&w) as u32)
            .ok_or_else(|| Error::Internal("count overflow".into()))?;
        total = total.checked_add(term).ok_or_else(|| Error::Internal("count overflow".into()))?;
    }
    Ok(total)
}

/// The prediction for a configuration, when the chain is full.
pub fn predicted_for(cfg: &ChainConfig) -> Result<Option<u64>> {
    if !cfg.is_full() {
        return Ok(None);
    }
    let aw = ExtAffineWeyl::new(cfg.root_datum()?);
    predicted_count_iwahori(&aw, &cfg.mu(), cfg.q).map(Some)
}

/// Gaussian binomial `[n choose k]_q`, by the q-Pascal recurrence.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut row = vec![1u64];
    for m in 1..=n {
        let mut next = vec![1u64; m + 1];
        for j in 1..m {
            next[j] = row[j - 1] + q.pow(j as u32) * row[j];
        }
        row = next;
    }
    row[k]
}

/// `|LG(n, 2n)(F_q)| = prod_{i=1}^n (q^i + 1)`.
pub fn lagrangian_count(n: usize, q: u64) -> u64 {
    (1..=n as u32).map(|i| q.pow(i) + 1).product()
}

/// Interpolating polynomial through the points, lowest coefficient first.
pub fn fit_polynomial(points: &[(i64, i64)]) -> Result<Vec<Q>> {
    let a: Vec<Vec<Q>> = points
        .iter()
        .map(|&(x, _)| (0..points.len() as u32).map(|e| q(x.pow(e))).collect())
        .collect();
    let b: Vec<Q> = points.iter().map(|&(_, y)| q(y)).collect();
    let mut c = linalg::solve(&a, &b).ok_or_else(|| Error::InvalidInput("repeated interpolation nodes".into()))?;
    while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolynomialReport {
    pub counts: Vec<(u32, u64)>,
    pub coeffs: Vec<i64>,
    pub degree: usize,
    pub degree_bound: usize,
    pub integral: bool,
}

impl PolynomialReport {
    pub fn ok(&self) -> bool {
        self.integral && self.degree <= self.degree_bound
    }
}

/// Counts the configuration at each `q` and fits one polynomial through them.
pub fn polynomiality(cfg: &ChainConfig, qs: &[u32]) -> Result<PolynomialReport> {
    let mut counts = Vec::new();
    for &q in qs {
        counts.push((q, count(&cfg.with_q(q)?)?));
    }
    let pts: Vec<(i64, i64)> = counts.iter().map(|&(q, c)| (q as i64, c as i64)).collect();
    let c = fit_polynomial(&pts)?;
    let integral = c.iter().all(|x| x.is_integer());
    Ok(PolynomialReport {
        degree: c.len() - 1,
        coeffs: c.iter().map(|x| x.to_integer().to_i64().unwrap_or(i64::MAX)).collect(),
        integral,
        counts,
        degree_bound: cfg.generic_dim(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionReport {
    pub source_points: usize,
    pub target_points: usize,
    pub image_size: usize,
    pub surjective: bool,
}

/// Forgets the chain entries outside `sub`; reports whether every point of the smaller model is hit.
pub fn projection(cfg: &ChainConfig, sub: &[usize]) -> Result<ProjectionReport> {
    let small = ChainConfig::build(cfg.kind, cfg.n, cfg.r, sub, cfg.q)?;
    if !small.chain.iter().all(|i| cfg.chain.contains(i)) {
        return invalid("the sub-chain must be a subset of the chain");
    }
    let big = enumerate(cfg)?;
    let target = enumerate(&small)?;
    let pos: Vec<usize> = small
        .chain
        .iter()
        .map(|i| cfg.chain.iter().position(|x| x == i).unwrap())
        .collect();
    let image: HashSet<Vec<usize>> = big
        .chains
        .iter()
        .map(|c| pos.iter().map(|&p| c[p]).collect())
        .collect();
    let target_set: HashSet<&Vec<usize>> = target.chains.iter().collect();
    if !image.iter().all(|c| target_set.contains(c)) {
        return Err(Error::Internal("projection left the smaller model".into()));
    }
    Ok(ProjectionReport {
        source_points: big.chains.len(),
        target_points: target.chains.len(),
        image_size: image.len(),
        surjective: image.len() == target.chains.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transition_examples() {
        let cfg = ChainConfig::gl(2, 1, &[0, 1], 2).unwrap();
        let t = transition_matrices(&cfg).unwrap();
        assert_eq!(t[0], vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(t[1], vec![vec![1, 0], vec![0, 0]]);
        let single = ChainConfig::gl(3, 1, &[0], 2).unwrap();
        assert_eq!(transition_matrices(&single).unwrap()[0], vec![vec![0; 3]; 3]);
        assert!(loop_composite(&cfg).unwrap().iter().flatten().all(|&x| x == 0));
    }

    #[test]
    fn small_counts() {
        for q in [2, 3, 5] {
            assert_eq!(count_points(&ChainConfig::gl(2, 1, &[0], q).unwrap()).unwrap(), q as u64 + 1);
            assert_eq!(count_points(&ChainConfig::gl(2, 1, &[0, 1], q).unwrap()).unwrap(), 2 * q as u64 + 1);
        }
    }

    #[test]
    fn gaussian_values() {
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(3, 1, 3), 13);
        assert_eq!(gaussian_binomial(2, 0, 7), 1);
        assert_eq!(lagrangian_count(2, 2), 15);
    }

    #[test]
    fn pairing_is_antidiagonal() {
        let cfg = ChainConfig::gsp(2, &[0, 1, 3], 3).unwrap();
        let p = pairing_matrix(&cfg, 1).unwrap();
        assert_eq!(p, vec![vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, 2, 0, 0], vec![2, 0, 0, 0]]);
    }

    #[test]
    fn config_errors() {
        assert!(ChainConfig::gsp(2, &[1], 2).is_err());
        assert!(ChainConfig::gl(2, 3, &[0], 2).is_err());
        assert!(ChainConfig::gl(2, 1, &[], 2).is_err());
        assert!(ChainConfig::gl(2, 1, &[2], 2).is_err());
        assert!(ChainConfig::gl(2, 1, &[0], 6).is_err());
    }

    #[test]
    fn fit_recovers_polynomial() {
        let pts: Vec<(i64, i64)> = (2..6).map(|x| (x, 2 * x + 1)).collect();
        assert_eq!(fit_polynomial(&pts).unwrap(), vec![q(1), q(2)]);
    }
}
