//! End-to-end checks, one per acceptance criterion. Each returns a verdict with
//! a short human-readable detail; errors count as failures.

use crate::adlv::{self, SlopeClassGL2};
use crate::admperm;
use crate::affweyl::{ExtAffWeylElem, ExtAffineWeyl};
use crate::error::Result;
use crate::fforacle::{self, SearchParams, Target};
use crate::kottwitz;
use crate::localmodel::{self, ChainConfig};
use crate::rootdata::{Coweight, GroupKind, RootDatum};
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct Verdict {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Verdict {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} [{}] {}: {}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

fn wrap(id: u8, name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> Verdict {
    match f() {
        Ok((pass, detail)) => Verdict { id, name, pass, detail },
        Err(e) => Verdict {
            id,
            name,
            pass: false,
            detail: format!("error: {e}"),
        },
    }
}

fn group(kind: GroupKind, n: usize) -> Result<ExtAffineWeyl> {
    Ok(ExtAffineWeyl::new(RootDatum::new(kind, n)?))
}

/// Dominant coweights whose coordinates all lie in `lo..=hi`.
pub fn dominant_in_box(rd: &RootDatum, lo: i64, hi: i64) -> Vec<Coweight> {
    let len = rd.full_len();
    let width = (hi - lo + 1) as usize;
    let mut out = Vec::new();
    for idx in 0..width.pow(len as u32) {
        let mut x = idx;
        let nu: Coweight = (0..len)
            .map(|_| {
                let c = lo + (x % width) as i64;
                x /= width;
                c
            })
            .collect();
        if rd.check_coweight(&nu).is_ok() && rd.is_dominant(&nu) {
            out.push(nu);
        }
    }
    out.sort();
    out
}

/// The `(group, mu)` pairs of the `Adm = Perm` comparison.
pub fn adm_perm_cases() -> Result<Vec<(ExtAffineWeyl, Coweight)>> {
    let mut out = Vec::new();
    for n in 2..=4 {
        let aw = group(GroupKind::Gl, n)?;
        for mu in dominant_in_box(&aw.rd, 0, 2) {
            out.push((aw.clone(), mu));
        }
    }
    for n in [2, 3] {
        let aw = group(GroupKind::Gsp, n)?;
        for scale in [1, 2] {
            let mu: Coweight = (0..2 * n).map(|i| if i < n { scale } else { 0 }).collect();
            out.push((aw.clone(), mu));
        }
    }
    Ok(out)
}

pub fn criterion_1() -> Verdict {
    wrap(1, "Adm(GL2,(1,0)) has three elements", || {
        let aw = group(GroupKind::Gl, 2)?;
        let adm = admperm::adm(&aw, &[1, 0])?;
        let translations: Vec<_> = adm.iter().filter(|x| x.is_translation() && aw.length(x) == 1).collect();
        let zero: Vec<_> = adm.iter().filter(|x| aw.length(x) == 0 && aw.kappa(x) == 1).collect();
        let pass = adm.len() == 3 && translations.len() == 2 && zero.len() == 1;
        let shown: Vec<String> = adm.iter().map(|x| format!("{x} (l={})", aw.length(x))).collect();
        Ok((pass, shown.join(", ")))
    })
}

/// Criteria 2 and 3 share the enumeration.
pub fn criteria_2_and_3() -> (Verdict, Verdict) {
    let cases = match adm_perm_cases() {
        Ok(c) => c,
        Err(e) => {
            let fail = |id, name| Verdict {
                id,
                name,
                pass: false,
                detail: format!("error: {e}"),
            };
            return (fail(2, "Adm = Perm"), fail(3, "Perm downward closed, Adm in Perm"));
        }
    };
    let mut equal = 0;
    let mut unequal = Vec::new();
    let mut closed = 0;
    let mut violations = Vec::new();
    let mut errors = Vec::new();
    for (aw, mu) in &cases {
        let name = format!("{}{} {:?}", kind_label(aw.rd.kind), aw.rd.full_len(), mu);
        let (adm, perm) = match (admperm::adm(aw, mu), admperm::perm(aw, mu)) {
            (Ok(a), Ok(p)) => (a, p),
            (Err(e), _) | (_, Err(e)) => {
                errors.push(format!("{name}: {e}"));
                continue;
            }
        };
        let r = admperm::compare_sets(&adm, &perm);
        if r.equal {
            equal += 1;
        } else {
            unequal.push(format!("{name} (adm {} perm {})", r.adm_size, r.perm_size));
        }
        let v = admperm::downward_closure_violations(aw, &perm);
        if v.is_empty() && r.adm_only.is_empty() {
            closed += 1;
        } else {
            violations.push(format!("{name}: {} closure, {} adm-only", v.len(), r.adm_only.len()));
        }
    }
    let total = cases.len();
    let d2 = if unequal.is_empty() && errors.is_empty() {
        format!("{equal}/{total} cases equal")
    } else {
        format!("{equal}/{total} equal; differ: {}; errors: {}", unequal.join("; "), errors.join("; "))
    };
    let d3 = if violations.is_empty() && errors.is_empty() {
        format!("{closed}/{total} permissible sets downward closed and containing Adm")
    } else {
        format!("violations: {}; errors: {}", violations.join("; "), errors.join("; "))
    };
    (
        Verdict {
            id: 2,
            name: "Adm = Perm",
            pass: unequal.is_empty() && errors.is_empty(),
            detail: d2,
        },
        Verdict {
            id: 3,
            name: "Perm downward closed, Adm in Perm",
            pass: violations.is_empty() && errors.is_empty(),
            detail: d3,
        },
    )
}

fn kind_label(k: GroupKind) -> &'static str {
    match k {
        GroupKind::Gl => "GL",
        GroupKind::Gsp => "GSp",
    }
}

/// Cayley-graph distances from the length-zero elements, by breadth-first search.
pub fn bfs_lengths(aw: &ExtAffineWeyl, classes: &[i64], depth: usize) -> HashMap<ExtAffWeylElem, usize> {
    let mut dist = HashMap::new();
    let mut frontier = Vec::new();
    for &k in classes {
        let tau = aw.omega_element(k);
        dist.insert(tau.clone(), 0);
        frontier.push(tau);
    }
    for d in 1..=depth {
        let mut next = Vec::new();
        for x in &frontier {
            for i in 0..aw.num_simple() {
                let y = aw.mul(aw.simple(i), x);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d);
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    dist
}

pub fn criterion_4() -> Verdict {
    wrap(4, "length formula on reflections and translations", || {
        let mut notes = Vec::new();
        let mut pass = true;
        let mut checked = 0usize;
        for (kind, n, classes) in [
            (GroupKind::Gl, 2, vec![0, 1]),
            (GroupKind::Gl, 3, vec![0, 1, 2]),
            (GroupKind::Gsp, 2, vec![0, 1]),
        ] {
            let aw = group(kind, n)?;
            for (x, d) in bfs_lengths(&aw, &classes, 8) {
                checked += 1;
                if aw.length(&x) != d {
                    pass = false;
                    notes.push(format!("length mismatch at {x}"));
                }
            }
        }
        let mut roots = 0usize;
        for n in 2..=5 {
            for kind in [GroupKind::Gl, GroupKind::Gsp] {
                let aw = group(kind, n)?;
                for beta in aw.rd.positive_roots() {
                    roots += 1;
                    let l = aw.length(&aw.finite(&aw.rd.reflection(beta))) as i64;
                    if l >= aw.rd.pair_two_rho(&beta.co_full) {
                        pass = false;
                        notes.push(format!("reflection length bound fails for {:?}", beta.full));
                    }
                }
            }
        }
        let mut pairs = 0usize;
        for (kind, n) in [(GroupKind::Gl, 2), (GroupKind::Gl, 3), (GroupKind::Gsp, 2)] {
            let aw = group(kind, n)?;
            for nu in dominant_in_box(&aw.rd, 0, 3) {
                for beta in aw.rd.positive_roots() {
                    let lower: Coweight = nu.iter().zip(&beta.co_full).map(|(a, b)| a - b).collect();
                    if !aw.rd.is_dominant(&lower) {
                        continue;
                    }
                    pairs += 1;
                    let t_nu = aw.translation(&nu);
                    let t_low = aw.translation(&lower);
                    let mid = aw.mul(&t_nu, &aw.finite(&aw.rd.reflection(beta)));
                    if !aw.bruhat_leq(&t_low, &t_nu) || !aw.bruhat_leq(&t_low, &mid) || !aw.bruhat_leq(&mid, &t_nu) {
                        pass = false;
                        notes.push(format!("chain fails for nu={nu:?}, beta={:?}", beta.full));
                    }
                }
            }
        }
        let mut detail = format!("{checked} elements vs BFS, {roots} positive roots, {pairs} (nu, beta) chains");
        if !notes.is_empty() {
            detail.push_str(&format!("; {}", notes.join("; ")));
        }
        Ok((pass, detail))
    })
}

pub fn criterion_5() -> Verdict {
    wrap(5, "translations, special maximal level, minuscule singleton", || {
        let mut pass = true;
        let mut notes = Vec::new();
        let mut cases = 0usize;
        for (kind, n) in [(GroupKind::Gl, 2), (GroupKind::Gl, 3), (GroupKind::Gsp, 2)] {
            let aw = group(kind, n)?;
            let k = aw.special_maximal();
            for mu in dominant_in_box(&aw.rd, 0, 3) {
                cases += 1;
                let label = format!("{}{} {mu:?}", kind_label(kind), aw.rd.full_len());
                let adm = admperm::adm(&aw, &mu)?;
                let perm = admperm::perm(&aw, &mu)?;
                if admperm::translations(&adm) != admperm::translations(&perm) {
                    pass = false;
                    notes.push(format!("{label}: translation parts differ"));
                }
                let adm_k = admperm::adm_k(&aw, &mu, &k)?;
                let below: Vec<ExtAffWeylElem> = admperm::dominant_below(&aw, &mu)?
                    .iter()
                    .map(|nu| aw.translation(nu))
                    .collect();
                let expected = admperm::project_to_cosets(&aw, &below, &k);
                if !admperm::compare_sets(&adm_k, &expected).equal || expected.len() != below.len() {
                    pass = false;
                    notes.push(format!("{label}: Adm_K differs from dominant coweights below mu"));
                }
                if !admperm::compare_sets(&adm_k, &admperm::perm_k(&aw, &mu, &k)?).equal {
                    pass = false;
                    notes.push(format!("{label}: Adm_K != Perm_K"));
                }
                if aw.rd.is_minuscule(&mu) && adm_k.len() != 1 {
                    pass = false;
                    notes.push(format!("{label}: minuscule but {} cosets", adm_k.len()));
                }
            }
        }
        let mut detail = format!("{cases} (group, mu) cases");
        if !notes.is_empty() {
            detail.push_str(&format!("; {}", notes.join("; ")));
        }
        Ok((pass, detail))
    })
}

pub fn criterion_6() -> Verdict {
    wrap(6, "B(G, mu) sizes, Chai lengths and poset structure", || {
        let mut pass = true;
        let mut parts = Vec::new();
        for (kind, n, mu, size, len) in [
            (GroupKind::Gl, 4, vec![1, 1, 0, 0], 5, Some(3)),
            (GroupKind::Gl, 2, vec![1, 0], 2, Some(1)),
            (GroupKind::Gsp, 2, vec![1, 1, 0, 0], 3, None),
        ] {
            let rd = RootDatum::new(kind, n)?;
            let p = kottwitz::enumerate_bgmu(&rd, &mu)?;
            let b0 = &p.elements[p.basic_index()].newton;
            let b1 = &p.elements[p.ordinary_index(&mu)].newton;
            let l = kottwitz::chai_length(&rd, &mu, b0, b1)?;
            let ok = p.elements.len() == size && len.is_none_or(|x| x == l);
            pass &= ok;
            parts.push(format!(
                "{}{} {mu:?}: {} classes, length {l}",
                kind_label(kind),
                rd.full_len(),
                p.elements.len()
            ));
        }
        let mut structural = 0;
        let mut bad = Vec::new();
        for (aw, mu) in adm_perm_cases()? {
            let p = kottwitz::enumerate_bgmu(&aw.rd, &mu)?;
            let c = kottwitz::check_poset(&aw.rd, &mu, &p);
            if c.all() {
                structural += 1;
            } else {
                bad.push(format!("{mu:?}: {c:?}"));
            }
        }
        pass &= bad.is_empty();
        parts.push(format!("{structural} posets pass ranked/join checks"));
        parts.extend(bad);
        Ok((pass, parts.join("; ")))
    })
}

pub fn criterion_7() -> Verdict {
    wrap(7, "conjectured basic-locus dimension", || {
        let gl2 = kottwitz::conj_dim_basic(&RootDatum::gl(2)?, &[1, 0])?;
        let gsp4 = kottwitz::conj_dim_basic(&RootDatum::gsp(2)?, &[1, 1, 0, 0])?;
        let mut pass = gl2 == 0 && gsp4 == 1;
        let mut agree = 0;
        let mut bad = Vec::new();
        for (aw, mu) in adm_perm_cases()? {
            let d = kottwitz::conj_dim_basic_forms(&aw.rd, &mu)?;
            if d.via_length == d.via_floor_sum {
                agree += 1;
            } else {
                bad.push(format!("{mu:?}: {d:?}"));
            }
        }
        pass &= bad.is_empty();
        let mut detail = format!("GL2 (1,0) -> {gl2}, GSp4 (1,1,0,0) -> {gsp4}; both forms agree on {agree} cases");
        if !bad.is_empty() {
            detail.push_str(&format!("; disagree: {}", bad.join("; ")));
        }
        Ok((pass, detail))
    })
}

pub fn criterion_8() -> Verdict {
    wrap(8, "GL2 grid coherence", || {
        let aw = group(GroupKind::Gl, 2)?;
        let rows = adlv::gl2_grid(&aw, 3, 3)?;
        let bad: Vec<String> = rows
            .iter()
            .filter(|r| !r.coherent())
            .map(|r| {
                format!(
                    "{:?} {}: union {} B(G,mu) {} kappa {} translation {}",
                    r.mu,
                    r.lambda.label(),
                    r.union_nonempty,
                    r.in_bgmu,
                    r.kappa_ok,
                    r.translation_ok
                )
            })
            .collect();
        let mut detail = format!("{} rows, {} incoherent", rows.len(), bad.len());
        if !bad.is_empty() {
            detail.push_str(&format!("; {}", bad.join("; ")));
        }
        Ok((bad.is_empty(), detail))
    })
}

/// The curated oracle fixture: `b`-spec and its slope class in halves.
pub const ORACLE_FIXTURE: [(&str, (i64, i64)); 4] = [
    ("diag:t,1", (2, 0)),
    ("antidiag:t,1", (1, 1)),
    ("identity", (0, 0)),
    ("diag:t^2,t^-1", (4, -2)),
];

/// Kottwitz invariants covered by the oracle fixture.
pub const ORACLE_KAPPA_RANGE: std::ops::RangeInclusive<i64> = -1..=2;

pub fn criterion_9() -> Verdict {
    wrap(9, "oracle concordance for GL2", || {
        let aw = group(GroupKind::Gl, 2)?;
        let params = SearchParams { q: 2, m_max: 2, depth: 4 };
        let mut ws = Vec::new();
        for k in ORACLE_KAPPA_RANGE {
            ws.extend(aw.enumerate_by_length(&aw.omega_element(k), 4)?);
        }
        let mut pass = true;
        let mut notes = Vec::new();
        let (mut witnesses, mut empties) = (0, 0);
        for (spec, (a, b)) in ORACLE_FIXTURE {
            let bm = fforacle::parse_bspec(spec, 2)?;
            let lam = SlopeClassGL2::from_halves(a, b)?;
            for w in &ws {
                let pred = adlv::xw_nonempty_gl2(&aw, &lam, w)?;
                let r = fforacle::search_xw(&aw, w, &bm, &params)?;
                match (&r.found, pred) {
                    (Some(wit), true) => {
                        witnesses += 1;
                        if !fforacle::verify_phi_stability(&aw, &bm, params.q, wit, &Target::Exact(w.clone()))? {
                            pass = false;
                            notes.push(format!("{spec} {w}: witness not stable"));
                        }
                    }
                    (None, false) if r.exhaustive => empties += 1,
                    _ => {
                        pass = false;
                        notes.push(format!("{spec} {w}: predicate {pred}, witness {}", r.found.is_some()));
                    }
                }
            }
        }
        let mut detail = format!(
            "{} elements x {} classes: {witnesses} witnesses, {empties} exhaustive empty scans",
            ws.len(),
            ORACLE_FIXTURE.len()
        );
        if !notes.is_empty() {
            detail.push_str(&format!("; {}", notes.join("; ")));
        }
        Ok((pass, detail))
    })
}

pub fn criterion_10() -> Verdict {
    wrap(10, "local model point counts", || {
        let mut pass = true;
        let mut notes = Vec::new();
        let mut checks = 0usize;
        for n in 1..=4 {
            for r in 0..=n {
                for q in [2u32, 3, 4] {
                    checks += 1;
                    let c = localmodel::count_points(&ChainConfig::gl(n, r, &[0], q)?)?;
                    if c != localmodel::gaussian_binomial(n, r, q as u64) {
                        pass = false;
                        notes.push(format!("Gr({r},{n}) over F_{q}: {c}"));
                    }
                }
            }
        }
        for q in [2u32, 3, 4, 5] {
            checks += 1;
            let c = localmodel::count_points(&ChainConfig::gl(2, 1, &[0, 1], q)?)?;
            if c != 2 * q as u64 + 1 {
                pass = false;
                notes.push(format!("GL2 full chain q={q}: {c}"));
            }
        }
        for (n, r) in [(3, 1), (3, 2), (4, 1)] {
            for q in [2u32, 3] {
                checks += 1;
                let full: Vec<usize> = (0..n).collect();
                let cfg = ChainConfig::gl(n, r, &full, q)?;
                let c = localmodel::count_points(&cfg)?;
                let aw = group(GroupKind::Gl, n)?;
                let p = localmodel::predicted_count_iwahori(&aw, &cfg.mu(), q)?;
                if c != p {
                    pass = false;
                    notes.push(format!("GL{n} r={r} q={q}: {c} points, predicted {p}"));
                }
            }
        }
        for q in [2u32, 3, 4, 5] {
            checks += 1;
            let c = localmodel::count_points_gsp(&ChainConfig::gsp(2, &[0], q)?)?;
            let qq = q as u64;
            if c != (qq + 1) * (qq * qq + 1) {
                pass = false;
                notes.push(format!("GSp4 I={{0}} q={q}: {c}"));
            }
        }
        let mut detail = format!("{checks} counts checked");
        if !notes.is_empty() {
            detail.push_str(&format!("; {}", notes.join("; ")));
        }
        Ok((pass, detail))
    })
}

/// All criteria in order.
pub fn run_all() -> Vec<Verdict> {
    let (c2, c3) = criteria_2_and_3();
    vec![
        criterion_1(),
        c2,
        c3,
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ]
}

