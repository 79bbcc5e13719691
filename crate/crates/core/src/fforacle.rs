//! Matrix oracle over `F_{q^m}((t))` for `GL_n`.
//!
//! The Iwahori subgroup `I` consists of matrices over `F[[t]]` that are
//! lower triangular modulo `t`; it fixes the dominant base alcove. An element
//! `t_nu w` is represented by the monomial matrix with entry `t^(nu_(w(i)))`
//! at position `(w(i), i)`.

use crate::admperm;
use crate::affweyl::{ExtAffWeylElem, ExtAffineWeyl};
use crate::caps;
use crate::error::{invalid, Error, Result};
use crate::ff::{Elem, Gf};
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::rootdata::{Coweight, FiniteWeylElem, GroupKind};
use rayon::prelude::*;
use std::collections::HashSet;

fn require_gl(aw: &ExtAffineWeyl) -> Result<()> {
    if aw.rd.kind != GroupKind::Gl {
        return invalid("the matrix oracle supports GL_n only");
    }
    Ok(())
}

/// Monomial representative of `x`.
pub fn monomial(aw: &ExtAffineWeyl, x: &ExtAffWeylElem) -> LaurentMatrix {
    let n = aw.rd.n;
    let mut m = LaurentMatrix::zero(n);
    for i in 0..n {
        let r = (x.w.img[i] - 1) as usize;
        m.set(r, i, LaurentPoly::monomial(1, x.t[r]));
    }
    m
}

/// Root subgroup element `u_i(c)` attached to the affine simple reflection `s_i`.
pub fn root_subgroup(n: usize, i: usize, c: Elem) -> LaurentMatrix {
    let mut m = LaurentMatrix::identity(n);
    if i == 0 {
        m.set(0, n - 1, LaurentPoly::monomial(c, 1));
    } else {
        m.set(i, i - 1, LaurentPoly::constant(c));
    }
    m
}

/// Whether `m` lies in `I`: integral, invertible mod `t`, lower triangular mod `t`.
pub fn in_iwahori(f: &Gf, m: &LaurentMatrix) -> bool {
    let n = m.n;
    for r in 0..n {
        for c in 0..n {
            let need = if r < c { 1 } else { 0 };
            if let Some(v) = m.get(r, c).val() {
                if v < need {
                    return false;
                }
            }
        }
    }
    m.det(f).val() == Some(0)
}

/// `(u, nu)` with `m in I diag(t^nu) P_u I`, by fraction-free pivoting.
pub fn iwahori_class(f: &Gf, aw: &ExtAffineWeyl, m: &LaurentMatrix) -> Result<ExtAffWeylElem> {
    let n = m.n;
    let mut m = m.clone();
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<usize> = (0..n).collect();
    let mut img = vec![0i32; n];
    let mut nu = vec![0i64; n];
    for _ in 0..n {
        let mut best: Option<(i64, usize, usize)> = None;
        for &p in &rows {
            for &q in &cols {
                if let Some(v) = m.get(p, q).val() {
                    let key = n as i64 * v + p as i64 - q as i64;
                    if best.is_none_or(|b| (key, p, q) < b) {
                        best = Some((key, p, q));
                    }
                }
            }
        }
        let (_, p, q) = best.ok_or_else(|| Error::InvalidInput("matrix is not invertible".into()))?;
        let v = m.get(p, q).val().unwrap();
        let u = m.get(p, q).shift(-v);
        eliminate(f, &mut m, p, q, v, &u, &rows, &cols)?;
        img[q] = p as i32 + 1;
        nu[p] = v;
        rows.retain(|&r| r != p);
        cols.retain(|&c| c != q);
    }
    let x = ExtAffWeylElem {
        t: nu,
        w: FiniteWeylElem { img },
    };
    aw.check(&x)?;
    Ok(x)
}

/// Clears row `p` and column `q` against the pivot `t^v u` at `(p, q)`.
#[allow(clippy::too_many_arguments)]
fn eliminate(
    f: &Gf,
    m: &mut LaurentMatrix,
    p: usize,
    q: usize,
    v: i64,
    u: &LaurentPoly,
    rows: &[usize],
    cols: &[usize],
) -> Result<()> {
    for &c in cols {
        if c == q || m.get(p, c).is_zero() {
            continue;
        }
        let a = m.get(p, c).shift(-v);
        for &r in rows {
            let new = u.mul(f, m.get(r, c)).sub(f, &a.mul(f, m.get(r, q)));
            m.set(r, c, guard(new)?);
        }
    }
    for &r in rows {
        if r == p || m.get(r, q).is_zero() {
            continue;
        }
        let b = m.get(r, q).shift(-v);
        for &c in cols {
            let new = u.mul(f, m.get(r, c)).sub(f, &b.mul(f, m.get(p, c)));
            m.set(r, c, guard(new)?);
        }
    }
    Ok(())
}

fn guard(x: LaurentPoly) -> Result<LaurentPoly> {
    let cap = crate::laurent::EXPONENT_CAP;
    match (x.val(), x.hi()) {
        (Some(lo), _) if lo < -cap => Err(Error::ExponentRange(lo)),
        (_, Some(hi)) if hi > cap => Err(Error::ExponentRange(hi)),
        _ => Ok(x),
    }
}

/// Relative position of `gI` and `hI`: the `w` with `g^-1 h in I w I`.
pub fn inv_iwahori(f: &Gf, aw: &ExtAffineWeyl, g: &LaurentMatrix, h: &LaurentMatrix) -> Result<ExtAffWeylElem> {
    require_gl(aw)?;
    let k = g
        .det(f)
        .val()
        .ok_or_else(|| Error::InvalidInput("g is not invertible".into()))?;
    let cls = iwahori_class(f, aw, &g.adjugate(f).mul(f, h)?)?;
    Ok(ExtAffWeylElem {
        t: cls.t.iter().map(|a| a - k).collect(),
        w: cls.w,
    })
}

/// Elementary divisor exponents of `m`, in decreasing order.
pub fn smith_exponents(f: &Gf, m: &LaurentMatrix) -> Result<Coweight> {
    let n = m.n;
    let mut m = m.clone();
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(i64, usize, usize)> = None;
        for &p in &rows {
            for &q in &cols {
                if let Some(v) = m.get(p, q).val() {
                    if best.is_none_or(|b| (v, p, q) < b) {
                        best = Some((v, p, q));
                    }
                }
            }
        }
        let (v, p, q) = best.ok_or_else(|| Error::InvalidInput("matrix is not invertible".into()))?;
        let u = m.get(p, q).shift(-v);
        eliminate(f, &mut m, p, q, v, &u, &rows, &cols)?;
        out.push(v);
        rows.retain(|&r| r != p);
        cols.retain(|&c| c != q);
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Relative position of lattices `g O^n` and `h O^n`, as a dominant coweight.
pub fn inv_hyperspecial(f: &Gf, g: &LaurentMatrix, h: &LaurentMatrix) -> Result<Coweight> {
    let k = g
        .det(f)
        .val()
        .ok_or_else(|| Error::InvalidInput("g is not invertible".into()))?;
    let e = smith_exponents(f, &g.adjugate(f).mul(f, h)?)?;
    Ok(e.into_iter().map(|a| a - k).collect())
}

/// `b sigma(g)` with `sigma` the `q`-Frobenius on coefficients.
pub fn frobenius_twist(f: &Gf, q: u32, g: &LaurentMatrix, b: &LaurentMatrix) -> Result<LaurentMatrix> {
    b.mul(f, &g.frobenius(f, q))
}

/// Cell point `u_{i_1}(c_1) s_{i_1} ... u_{i_l}(c_l) s_{i_l} tau`.
pub fn cell_point(
    f: &Gf,
    aw: &ExtAffineWeyl,
    word: &[usize],
    tau: &ExtAffWeylElem,
    coords: &[Elem],
) -> Result<LaurentMatrix> {
    let n = aw.rd.n;
    let mut g = LaurentMatrix::identity(n);
    for (&i, &c) in word.iter().zip(coords) {
        g = g.mul(f, &root_subgroup(n, i, c))?;
        g = g.mul(f, &monomial(aw, aw.simple(i)))?;
    }
    g.mul(f, &monomial(aw, tau))
}

/// Parses `diag:t^1,t^0`, `antidiag:t^1,1` or `identity`.
///
/// `antidiag:a_1,...,a_n` has `a_i` at row `i`, column `n + 1 - i`.
pub fn parse_bspec(spec: &str, n: usize) -> Result<LaurentMatrix> {
    let spec = spec.trim();
    if spec == "identity" || spec == "id" {
        return Ok(LaurentMatrix::identity(n));
    }
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidInput(format!("b-spec `{spec}`: expected diag:... or antidiag:...")))?;
    let exps: Vec<i64> = rest.split(',').map(parse_monomial).collect::<Result<_>>()?;
    if exps.len() != n {
        return invalid(format!("b-spec `{spec}` has {} entries, expected {n}", exps.len()));
    }
    let mut m = LaurentMatrix::zero(n);
    for (i, &e) in exps.iter().enumerate() {
        match kind.trim() {
            "diag" => m.set(i, i, LaurentPoly::monomial(1, e)),
            "antidiag" => m.set(i, n - 1 - i, LaurentPoly::monomial(1, e)),
            other => return invalid(format!("unknown b-spec kind `{other}`")),
        }
    }
    Ok(m)
}

fn parse_monomial(s: &str) -> Result<i64> {
    let s = s.trim();
    match s {
        "1" => Ok(0),
        "t" => Ok(1),
        _ => s
            .strip_prefix("t^")
            .and_then(|e| e.trim_start_matches('(').trim_end_matches(')').parse().ok())
            .ok_or_else(|| Error::InvalidInput(format!("bad monomial `{s}`, expected 1, t or t^k"))),
    }
}

/// Standard representative of a `GL_2` slope class `(l1, l2)` given as `(k1/2, k2/2)` numerators.
pub fn gl2_slope_representative(num1: i64, num2: i64) -> Result<LaurentMatrix> {
    if num1 == num2 && num1 % 2 != 0 {
        let k = num1;
        let mut m = LaurentMatrix::zero(2);
        m.set(0, 1, LaurentPoly::monomial(1, (k + 1) / 2));
        m.set(1, 0, LaurentPoly::monomial(1, (k - 1) / 2));
        return Ok(m);
    }
    if num1 % 2 != 0 || num2 % 2 != 0 {
        return invalid("slopes must be integral unless the class is basic");
    }
    let mut m = LaurentMatrix::zero(2);
    m.set(0, 0, LaurentPoly::monomial(1, num1 / 2));
    m.set(1, 1, LaurentPoly::monomial(1, num2 / 2));
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    /// `inv(g, b sigma g) = w`.
    Exact(ExtAffWeylElem),
    /// `inv(g, b sigma g)` in a given set.
    InSet(HashSet<ExtAffWeylElem>),
    /// Hyperspecial relative position equal to a dominant coweight.
    Hyperspecial(Coweight),
}

#[derive(Clone, Debug)]
pub struct SearchParams {
    pub q: u32,
    pub m_max: u32,
    pub depth: usize,
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub m: u32,
    pub cell: ExtAffWeylElem,
    pub word: Vec<usize>,
    pub coords: Vec<Elem>,
    pub g: LaurentMatrix,
    /// Iwahori relative position `inv(g, b sigma g)`.
    pub realized: ExtAffWeylElem,
    /// Hyperspecial relative position `inv(g, b sigma g)`.
    pub realized_hyperspecial: Coweight,
    pub field: Gf,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub found: Option<Witness>,
    pub exhaustive: bool,
    pub points_scanned: u64,
}

/// Cells scanned by the search: all `v` of length at most `depth` in the Omega classes `0..n`.
pub fn scan_cells(aw: &ExtAffineWeyl, depth: usize) -> Result<Vec<(ExtAffWeylElem, Vec<usize>, ExtAffWeylElem)>> {
    let mut out = Vec::new();
    for k in 0..aw.rd.n as i64 {
        let tau = aw.omega_element(k);
        for v in aw.enumerate_by_length(&tau, depth)? {
            let (word, t) = aw.reduced_word(&v);
            out.push((v, word, t));
        }
    }
    Ok(out)
}

fn coords_of(index: u64, len: usize, size: u32) -> Vec<Elem> {
    let mut r = index;
    (0..len)
        .map(|_| {
            let c = (r % size as u64) as Elem;
            r /= size as u64;
            c
        })
        .collect()
}

/// Bounded search for `g` with `inv(g, b sigma(g))` meeting `target`.
pub fn search(aw: &ExtAffineWeyl, b: &LaurentMatrix, target: &Target, params: &SearchParams) -> Result<SearchResult> {
    require_gl(aw)?;
    if b.n != aw.rd.n {
        return invalid("b has the wrong size");
    }
    if b.det(&Gf::extension(params.q, 1)?).is_zero() {
        return invalid("b is not invertible");
    }
    let cells = scan_cells(aw, params.depth)?;
    let mut scanned = 0u64;
    for m in 1..=params.m_max {
        let f = Gf::extension(params.q, m)?;
        let size = f.size;
        let total: u64 = cells.iter().map(|(_, w, _)| (size as u64).pow(w.len() as u32)).sum();
        if total > caps::element_cap() as u64 {
            return Err(Error::CapExceeded {
                what: "oracle scan".into(),
                cap: caps::element_cap(),
            });
        }
        for (v, word, tau) in &cells {
            let count = (size as u64).pow(word.len() as u32);
            let hit = (0..count)
                .into_par_iter()
                .map(|idx| -> Result<Option<Witness>> {
                    let coords = coords_of(idx, word.len(), size);
                    let g = cell_point(&f, aw, word, tau, &coords)?;
                    let h = frobenius_twist(&f, params.q, &g, b)?;
                    let ok = match target {
                        Target::Exact(w) => &inv_iwahori(&f, aw, &g, &h)? == w,
                        Target::InSet(s) => s.contains(&inv_iwahori(&f, aw, &g, &h)?),
                        Target::Hyperspecial(mu) => &inv_hyperspecial(&f, &g, &h)? == mu,
                    };
                    if !ok {
                        return Ok(None);
                    }
                    Ok(Some(Witness {
                        m,
                        cell: v.clone(),
                        word: word.clone(),
                        coords,
                        realized: inv_iwahori(&f, aw, &g, &h)?,
                        realized_hyperspecial: inv_hyperspecial(&f, &g, &h)?,
                        g,
                        field: f.clone(),
                    }))
                })
                .find_map_first(|r| match r {
                    Ok(None) => None,
                    other => Some(other),
                });
            scanned += count;
            if let Some(r) = hit {
                return Ok(SearchResult {
                    found: r?,
                    exhaustive: false,
                    points_scanned: scanned,
                });
            }
        }
    }
    Ok(SearchResult {
        found: None,
        exhaustive: true,
        points_scanned: scanned,
    })
}

/// Points of `X_w(b)` within the scan bounds.
pub fn search_xw(aw: &ExtAffineWeyl, w: &ExtAffWeylElem, b: &LaurentMatrix, params: &SearchParams) -> Result<SearchResult> {
    aw.check(w)?;
    search(aw, b, &Target::Exact(w.clone()), params)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Iwahori,
    Hyperspecial,
}

/// Points of `X(mu, b)_K` within the scan bounds.
pub fn search_xmub(
    aw: &ExtAffineWeyl,
    mu: &[i64],
    b: &LaurentMatrix,
    level: Level,
    params: &SearchParams,
) -> Result<SearchResult> {
    let target = match level {
        Level::Iwahori => Target::InSet(admperm::adm(aw, mu)?.into_iter().collect()),
        Level::Hyperspecial => {
            let (plus, _) = aw.rd.dominant_rep(mu)?;
            Target::Hyperspecial(plus)
        }
    };
    search(aw, b, &target, params)
}

/// `Phi(g) = b sigma(g)` again satisfies the defining condition, with the same relative position.
pub fn verify_phi_stability(aw: &ExtAffineWeyl, b: &LaurentMatrix, q: u32, wit: &Witness, target: &Target) -> Result<bool> {
    let f = &wit.field;
    let phi = frobenius_twist(f, q, &wit.g, b)?;
    let h = frobenius_twist(f, q, &phi, b)?;
    let w = inv_iwahori(f, aw, &phi, &h)?;
    let hs = inv_hyperspecial(f, &phi, &h)?;
    let meets = match target {
        Target::Exact(x) => &w == x,
        Target::InSet(s) => s.contains(&w),
        Target::Hyperspecial(mu) => &hs == mu,
    };
    Ok(meets && w == wit.realized && hs == wit.realized_hyperspecial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootDatum;

    fn gl(n: usize) -> ExtAffineWeyl {
        ExtAffineWeyl::new(RootDatum::gl(n).unwrap())
    }

    #[test]
    fn monomial_round_trip() {
        let g = gl(3);
        let f = Gf::new(2, 1).unwrap();
        let e = LaurentMatrix::identity(3);
        for x in g.enumerate_by_length(&g.omega_element(1), 4).unwrap() {
            assert_eq!(inv_iwahori(&f, &g, &e, &monomial(&g, &x)).unwrap(), x);
        }
    }

    #[test]
    fn normalizer_is_length_zero() {
        let g = gl(2);
        let f = Gf::new(2, 1).unwrap();
        let b = parse_bspec("antidiag:t,1", 2).unwrap();
        let x = inv_iwahori(&f, &g, &LaurentMatrix::identity(2), &b).unwrap();
        assert_eq!(x, g.omega_element(1));
        let d = parse_bspec("diag:t^1,t^0", 2).unwrap();
        let x = inv_iwahori(&f, &g, &LaurentMatrix::identity(2), &d).unwrap();
        assert_eq!(x, g.translation(&[1, 0]));
    }

    #[test]
    fn hyperspecial_examples() {
        let f = Gf::new(3, 1).unwrap();
        let e = LaurentMatrix::identity(2);
        assert_eq!(inv_hyperspecial(&f, &e, &e).unwrap(), vec![0, 0]);
        let tt = parse_bspec("diag:t,t", 2).unwrap();
        assert_eq!(inv_hyperspecial(&f, &e, &tt).unwrap(), vec![1, 1]);
    }

    #[test]
    fn root_subgroups_lie_in_iwahori() {
        let f = Gf::new(3, 1).unwrap();
        for n in 2..=4 {
            for i in 0..n {
                for c in f.elements() {
                    assert!(in_iwahori(&f, &root_subgroup(n, i, c)));
                }
            }
        }
    }

    #[test]
    fn bspec_errors() {
        assert!(parse_bspec("diag:t^1", 2).is_err());
        assert!(parse_bspec("foo:1,1", 2).is_err());
        assert!(parse_bspec("diag:x,1", 2).is_err());
        assert_eq!(parse_bspec("identity", 2).unwrap(), LaurentMatrix::identity(2));
        assert_eq!(parse_bspec("diag:t^2,t^-1", 2).unwrap().get(1, 1).val(), Some(-1));
    }
}
