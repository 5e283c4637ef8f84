//! Top-term checks: leading coefficient unit * 2^h, subleading coefficients
//! leading * (p_i - q_i), remainder degree bounds.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::coords::{self, DtCoordinates};
use crate::error::{Error, Result};
use crate::gauss::GaussInt;
use crate::holonomy::component_raw_trace;
use crate::poly::{GaussPoly, Monomial};
use crate::position::{compile_word, components_of};
use crate::surface::PantsDecomposition;
use crate::word::{HolonomyWord, Omega, Token};

fn top_monomial(q: &[i64]) -> Monomial {
    Monomial::new(q.iter().map(|&v| v as u32).collect())
}

fn lowered(q: &[i64], i: usize) -> Monomial {
    let mut e: Vec<u32> = q.iter().map(|&v| v as u32).collect();
    e[i] -= 1;
    Monomial::new(e)
}

/// i^q 2^h (prod t_i^q_i + sum (p_i - q_i) t^q / t_i).
pub fn predict_top_terms(q: &[i64], p: &[i64], h: i64) -> Result<GaussPoly> {
    let total: i64 = q.iter().sum();
    if total == 0 {
        return Err(Error::EmptyWord);
    }
    if q.len() != p.len() {
        return Err(Error::LengthMismatch { expected: q.len(), got: p.len() });
    }
    let lead = &GaussInt::i_pow(total) * &GaussInt::new(BigInt::one() << h as usize, 0);
    let mut terms = vec![(top_monomial(q), lead.clone())];
    for i in 0..q.len() {
        if q[i] > 0 {
            terms.push((lowered(q, i), &lead * &GaussInt::from(p[i] - q[i])));
        }
    }
    GaussPoly::from_terms(q.len(), terms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubleadingCheck {
    /// One-based curve index.
    pub curve: usize,
    pub observed: String,
    pub predicted: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopTermReport {
    pub q: Vec<i64>,
    pub p: Vec<i64>,
    pub h: i64,
    pub trace: String,
    pub leading_monomial: String,
    pub leading_coefficient: String,
    pub predicted_leading: String,
    /// k with observed leading = i^k 2^h, when it has that form.
    pub observed_unit: Option<u8>,
    pub leading_ok: bool,
    pub unit_ok: bool,
    pub top_terms_ok: bool,
    pub subleading: Vec<SubleadingCheck>,
    pub remainder_degree_ok: bool,
    pub per_variable_degree_ok: bool,
    pub pstar_ok: Option<bool>,
    pub pass: bool,
}

impl TopTermReport {
    /// One-based indices of curves whose subleading check failed.
    pub fn failing_curves(&self) -> Vec<usize> {
        self.subleading.iter().filter(|c| !c.ok).map(|c| c.curve).collect()
    }

    /// Short labels of the failed checks.
    pub fn failures(&self) -> Vec<String> {
        let mut v = Vec::new();
        for (ok, name) in [
            (self.leading_ok, "leading"),
            (self.unit_ok, "unit"),
            (self.top_terms_ok, "top-terms"),
            (self.remainder_degree_ok, "remainder-degree"),
            (self.per_variable_degree_ok, "per-variable-degree"),
            (self.pstar_ok.unwrap_or(true), "pstar"),
        ] {
            if !ok {
                v.push(name.to_string());
            }
        }
        for c in self.failing_curves() {
            v.push(format!("subleading[{c}]"));
        }
        v
    }
}

/// Compares a raw trace against the predicted top terms.
pub fn check_top_terms(trace: &GaussPoly, q: &[i64], p: &[i64], h: i64) -> Result<TopTermReport> {
    let n = q.len();
    if trace.arity() != n || p.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: trace.arity() });
    }
    let total: i64 = q.iter().sum();
    let canon = if trace.is_zero() { trace.clone() } else { trace.canonical_sign()? };
    let mut r = TopTermReport {
        q: q.to_vec(),
        p: p.to_vec(),
        h,
        trace: canon.to_string(),
        leading_monomial: top_monomial(q).to_string(),
        leading_coefficient: String::new(),
        predicted_leading: String::new(),
        observed_unit: None,
        leading_ok: false,
        unit_ok: false,
        top_terms_ok: false,
        subleading: Vec::new(),
        remainder_degree_ok: false,
        per_variable_degree_ok: false,
        pstar_ok: None,
        pass: false,
    };
    if total == 0 {
        let ok = canon.is_constant(&GaussInt::from(2));
        r.leading_coefficient = canon.coefficient(&Monomial::one(n)).to_string();
        r.predicted_leading = "2".into();
        r.observed_unit = Some(0);
        r.leading_ok = ok;
        r.unit_ok = ok;
        r.top_terms_ok = ok;
        r.remainder_degree_ok = ok;
        r.per_variable_degree_ok = ok;
        r.pass = ok;
        return Ok(r);
    }

    let m0 = top_monomial(q);
    let c0 = trace.coefficient(&m0);
    let pow2 = BigInt::one() << h as usize;
    r.leading_coefficient = c0.to_string();
    r.predicted_leading = format!("+-i^{total}*{pow2}");
    if let Some((u, mag)) = c0.as_unit_times_natural() {
        r.observed_unit = Some(u);
        r.leading_ok = mag == pow2;
        r.unit_ok = (u as i64 - total).rem_euclid(2) == 0;
    }

    let mut expected_top = vec![(m0.clone(), c0.clone())];
    for i in 0..n {
        if q[i] == 0 {
            continue;
        }
        let m = lowered(q, i);
        let observed = trace.coefficient(&m);
        let predicted = &c0 * &GaussInt::from(p[i] - q[i]);
        r.subleading.push(SubleadingCheck {
            curve: i + 1,
            observed: observed.to_string(),
            predicted: predicted.to_string(),
            ok: observed == predicted,
        });
        expected_top.push((m, predicted));
    }

    let top = GaussPoly::from_terms(n, expected_top)?;
    let rest = trace - &top;
    r.remainder_degree_ok = rest.total_degree().is_none_or(|d| d as i64 <= total - 2);
    r.per_variable_degree_ok = (0..n).all(|i| trace.degree_in(i).is_none_or(|d| d as i64 <= q[i]));

    let predicted = predict_top_terms(q, p, h)?;
    let observed_top = &trace.homogeneous_part(total as u32) + &trace.homogeneous_part(total as u32 - 1);
    r.top_terms_ok = !observed_top.is_zero() && observed_top.canonical_sign()? == predicted.canonical_sign()?;

    r.pass = r.leading_ok && r.unit_ok && r.top_terms_ok && r.remainder_degree_ok && r.per_variable_degree_ok && r.subleading.iter().all(|c| c.ok);
    Ok(r)
}

/// Checks a connected curve against the top-term formula.
pub fn verify(s: &PantsDecomposition, c: &DtCoordinates) -> Result<TopTermReport> {
    coords::validate(s, c)?;
    let cc = components_of(s, c)?;
    if cc.len() != 1 {
        return Err(Error::NotConnected(cc.len()));
    }
    let comp = &cc.components[0];
    let trace = component_raw_trace(s, comp)?;
    let mut r = check_top_terms(&trace, &c.q, &c.p, comp.h)?;
    if !comp.steps.is_empty() {
        let ok = p_star_check(&compile_word(s, comp)?, &c.p)?.ok;
        r.pstar_ok = Some(ok);
        r.pass &= ok;
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PStarCrossing {
    pub curve: usize,
    pub twist: i64,
    pub h: i64,
    pub k: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PStarReport {
    /// Per curve: (2 p_hat, p* - q).
    pub per_curve: Vec<(i64, i64)>,
    pub crossings: Vec<PStarCrossing>,
    pub ok: bool,
}

/// Whether a link reads as O0 on the side facing the crossing.
fn starts_with_o0(t: &Token) -> bool {
    matches!(t, Token::Connector(Omega::O0))
}

fn ends_with_o1(t: &Token) -> bool {
    matches!(t, Token::Connector(Omega::O1))
}

/// Checks 2 p_hat_i = p*_i - q_i, where p*_i adds to p_i one for each
/// crossing followed by O0 and one for each crossing preceded by O1
/// (an scc block reads O1 on its left and O0 on its right).
pub fn p_star_check(w: &HolonomyWord, p: &[i64]) -> Result<PStarReport> {
    w.check()?;
    if p.len() != w.arity {
        return Err(Error::LengthMismatch { expected: w.arity, got: p.len() });
    }
    let q = w.crossings_per_curve();
    let p_hat = w.twist_per_curve();
    let mut p_star = p.to_vec();
    let mut crossings = Vec::new();
    for j in 0..w.tokens.len() / 2 {
        let Token::Crossing { curve, twist, .. } = w.tokens[2 * j] else { unreachable!() };
        let (prev, next) = w.links_around(j);
        let h = starts_with_o0(&next) as i64;
        let k = ends_with_o1(&prev) as i64;
        p_star[curve] += h + k;
        crossings.push(PStarCrossing { curve: curve + 1, twist, h, k });
    }
    let per_curve: Vec<(i64, i64)> = (0..w.arity).map(|i| (2 * p_hat[i], p_star[i] - q[i])).collect();
    let ok = per_curve.iter().enumerate().all(|(i, (a, b))| q[i] == 0 || a == b);
    Ok(PStarReport { per_curve, crossings, ok })
}

/// An scc block with the crossing links around it, in the notation
/// `O_v A_X S[y] A_X' O_u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SccContext {
    pub position: usize,
    pub v: u8,
    pub u: u8,
    pub y: i64,
    pub equal_twists: bool,
}

impl SccContext {
    /// (v,u,y) in {(1,1,+2), (0,0,-2)}.
    pub fn is_flagged(&self) -> bool {
        (self.v, self.u, self.y) == (1, 1, 2) || (self.v, self.u, self.y) == (0, 0, -2)
    }
}

fn link_digit(t: &Token, left: bool) -> u8 {
    match t {
        Token::Connector(Omega::O0) => 0,
        Token::Connector(Omega::O1) => 1,
        // O1 B O0
        Token::Scc { .. } => {
            if left {
                0
            } else {
                1
            }
        }
        Token::Crossing { .. } => unreachable!(),
    }
}

/// Lists each scc block with its surrounding connectors. Diagnostic only.
pub fn scc_contexts(w: &HolonomyWord) -> Vec<SccContext> {
    let n = w.tokens.len();
    let mut out = Vec::new();
    for (k, t) in w.tokens.iter().enumerate() {
        let Token::Scc { y } = *t else { continue };
        let before = &w.tokens[(k + n - 1) % n];
        let after = &w.tokens[(k + 1) % n];
        let v_tok = &w.tokens[(k + n - 2) % n];
        let u_tok = &w.tokens[(k + 2) % n];
        let twist = |t: &Token| match t {
            Token::Crossing { twist, curve, .. } => (*curve, *twist),
            _ => unreachable!(),
        };
        out.push(SccContext {
            position: k,
            v: link_digit(v_tok, true),
            u: link_digit(u_tok, false),
            y,
            equal_twists: twist(before) == twist(after),
        });
    }
    out
}
