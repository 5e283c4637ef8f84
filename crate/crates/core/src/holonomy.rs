//! Generator matrices, connector tables and word evaluation.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::coords::DtCoordinates;
use crate::error::{Error, Result};
use crate::gauss::GaussInt;
use crate::mat2::Mat2;
use crate::poly::GaussPoly;
use crate::position::{compile_word, components_of, Component};
use crate::surface::{PantsDecomposition, SlotLabel};
use crate::word::{HolonomyWord, Omega, Token};

fn gi(re: i64, im: i64) -> GaussInt {
    GaussInt::new(re, im)
}

/// J = [[-i,0],[0,i]].
pub fn j(arity: usize) -> Mat2 {
    Mat2::constant(arity, [gi(0, -1), gi(0, 0), gi(0, 0), gi(0, 1)])
}

pub fn j_inv(arity: usize) -> Mat2 {
    Mat2::constant(arity, [gi(0, 1), gi(0, 0), gi(0, 0), gi(0, -1)])
}

/// T = [[1,t],[0,1]] for curve `curve` (zero-based).
pub fn t_mat(arity: usize, curve: usize) -> Mat2 {
    let one = GaussPoly::constant(arity, 1);
    Mat2 { a: one.clone(), b: GaussPoly::var(arity, curve), c: GaussPoly::zero(arity), d: one }
}

pub fn t_mat_inv(arity: usize, curve: usize) -> Mat2 {
    t_mat(arity, curve).adjugate()
}

pub fn omega(arity: usize, s: SlotLabel) -> Mat2 {
    match s {
        SlotLabel::Zero => Mat2::from_ints(arity, [1, -1, 1, 0]),
        SlotLabel::One => Mat2::from_ints(arity, [0, -1, 1, -1]),
        SlotLabel::Inf => Mat2::identity(arity),
    }
}

pub fn omega_inv(arity: usize, s: SlotLabel) -> Mat2 {
    omega(arity, s).adjugate()
}

pub fn eta(arity: usize, s: SlotLabel) -> Mat2 {
    match s {
        SlotLabel::Zero => Mat2::from_ints(arity, [1, 0, 2, 1]),
        SlotLabel::One => Mat2::from_ints(arity, [-3, 2, -2, 1]),
        SlotLabel::Inf => Mat2::from_ints(arity, [1, -2, 0, 1]),
    }
}

pub fn gamma(arity: usize, s: SlotLabel) -> Mat2 {
    match s {
        SlotLabel::Zero => Mat2::from_ints(arity, [1, 2, 0, 1]),
        SlotLabel::One => Mat2::identity(arity),
        SlotLabel::Inf => Mat2::from_ints(arity, [1, 0, 2, 1]),
    }
}

/// A_X = [[1,X],[0,-1]].
pub fn a_x(x: &GaussPoly) -> Mat2 {
    let n = x.arity();
    Mat2 { a: GaussPoly::constant(n, 1), b: x.clone(), c: GaussPoly::zero(n), d: GaussPoly::constant(n, -1) }
}

/// B_Y = [[1,Y],[0,1]].
pub fn b_y(y: &GaussPoly) -> Mat2 {
    let n = y.arity();
    Mat2 { a: GaussPoly::constant(n, 1), b: y.clone(), c: GaussPoly::zero(n), d: GaussPoly::constant(n, 1) }
}

/// X = -t_curve - 2 twist.
pub fn crossing_x(arity: usize, curve: usize, twist: i64) -> GaussPoly {
    &(-GaussPoly::var(arity, curve)) - &GaussPoly::constant(arity, 2 * twist)
}

/// i * A_X for a crossing of `curve` with `twist` right turns.
pub fn crossing_matrix(arity: usize, curve: usize, twist: i64) -> Mat2 {
    a_x(&crossing_x(arity, curve, twist)).scale(&GaussInt::i())
}

/// eta_inf^{-twist} J^{-1} T^{-1}, the crossing built from generators.
pub fn crossing_from_generators(arity: usize, curve: usize, twist: i64) -> Mat2 {
    let e = if twist >= 0 { eta(arity, SlotLabel::Inf).adjugate() } else { eta(arity, SlotLabel::Inf) };
    let turns = e.pow(twist.unsigned_abs() as u32);
    &(&turns * &j_inv(arity)) * &t_mat_inv(arity, curve)
}

pub fn connector_matrix(arity: usize, o: Omega) -> Mat2 {
    match o {
        Omega::O0 => omega(arity, SlotLabel::Zero),
        Omega::O1 => omega(arity, SlotLabel::One),
    }
}

/// O1 * B_y * O0.
pub fn scc_matrix(arity: usize, y: i64) -> Mat2 {
    let b = b_y(&GaussPoly::constant(arity, y));
    &(&omega(arity, SlotLabel::One) * &b) * &omega(arity, SlotLabel::Zero)
}

/// Sign and reduced connector of Omega_b * Omega_c^{-1}, b != c.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DccEntry {
    pub negative: bool,
    pub omega: Omega,
}

/// Sign and shift of Omega_b * eta_{b+1}^{dir} * Omega_b^{-1} = +-O1 B_y O0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SccEntry {
    pub negative: bool,
    pub y: i64,
}

struct Tables {
    dcc: [[Option<DccEntry>; 3]; 3],
    /// indexed by slot, then direction (0: forward, 1: backward)
    scc: [[SccEntry; 2]; 3],
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let mut dcc = [[None; 3]; 3];
        for b in SlotLabel::ALL {
            for c in SlotLabel::ALL {
                if b == c {
                    continue;
                }
                let m = &omega(0, b) * &omega_inv(0, c);
                let found = [Omega::O0, Omega::O1].into_iter().find_map(|o| {
                    let k = connector_matrix(0, o);
                    if m == k {
                        Some(DccEntry { negative: false, omega: o })
                    } else if m == k.neg() {
                        Some(DccEntry { negative: true, omega: o })
                    } else {
                        None
                    }
                });
                dcc[b.index()][c.index()] = Some(found.expect("connector reduces to +-O0 or +-O1"));
            }
        }
        let mut scc = [[SccEntry { negative: false, y: 0 }; 2]; 3];
        for b in SlotLabel::ALL {
            let e = eta(0, b.succ());
            for (d, loop_m) in [e.clone(), e.adjugate()].into_iter().enumerate() {
                let m = &(&omega(0, b) * &loop_m) * &omega_inv(0, b);
                let found = [2, -2].into_iter().find_map(|y| {
                    let k = scc_matrix(0, y);
                    if m == k {
                        Some(SccEntry { negative: false, y })
                    } else if m == k.neg() {
                        Some(SccEntry { negative: true, y })
                    } else {
                        None
                    }
                });
                scc[b.index()][d] = found.expect("scc loop reduces to +-O1 B O0");
            }
        }
        Tables { dcc, scc }
    })
}

/// Connector for a dcc arc arriving at slot `from` and leaving at `to`.
pub fn dcc_connector(from: SlotLabel, to: SlotLabel) -> DccEntry {
    tables().dcc[from.index()][to.index()].expect("distinct slots")
}

/// Block for an scc arc at `slot`; `forward` when traversed from its first to
/// its second endpoint (positively around the next slot).
pub fn scc_connector(slot: SlotLabel, forward: bool) -> SccEntry {
    tables().scc[slot.index()][if forward { 0 } else { 1 }]
}

pub fn token_matrix(arity: usize, t: &Token) -> Mat2 {
    match *t {
        Token::Crossing { curve, twist, .. } => a_x(&crossing_x(arity, curve, twist)),
        Token::Connector(o) => connector_matrix(arity, o),
        Token::Scc { y } => scc_matrix(arity, y),
    }
}

/// Left-to-right product of the tokens times i^unit.
pub fn evaluate_word(w: &HolonomyWord) -> Result<Mat2> {
    w.check()?;
    let mut m = Mat2::identity(w.arity);
    for t in &w.tokens {
        m = &m * &token_matrix(w.arity, t);
    }
    Ok(m.scale(&GaussInt::i_pow(w.unit as i64)))
}

/// Inverse of a matrix with constant determinant +-1.
fn unimodular_inverse(m: &Mat2) -> Mat2 {
    let det = m.det();
    if det.is_constant(&GaussInt::one()) {
        m.adjugate()
    } else {
        debug_assert!(det.is_constant(&GaussInt::from(-1)));
        m.adjugate().neg()
    }
}

/// Evaluates the reversed word with every token inverted.
pub fn inverse_word_eval(w: &HolonomyWord) -> Result<Mat2> {
    w.check()?;
    let mut m = Mat2::identity(w.arity);
    for t in w.tokens.iter().rev() {
        m = &m * &unimodular_inverse(&token_matrix(w.arity, t));
    }
    Ok(m.scale(&GaussInt::i_pow(-(w.unit as i64))))
}

/// tau = -(i/pi) log t_K on the principal branch.
pub fn kra_tau(tk: Complex64) -> Result<Complex64> {
    if tk == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroKraInput);
    }
    Ok(-Complex64::i() / std::f64::consts::PI * tk.ln())
}

/// t_K = exp(i pi tau).
pub fn kra_tk(tau: Complex64) -> Complex64 {
    (Complex64::i() * std::f64::consts::PI * tau).exp()
}

/// Raw trace of a component (no sign normalisation).
pub fn component_raw_trace(s: &PantsDecomposition, comp: &Component) -> Result<GaussPoly> {
    if comp.steps.is_empty() {
        return Ok(GaussPoly::constant(s.xi(), 2));
    }
    Ok(evaluate_word(&compile_word(s, comp)?)?.trace())
}

/// Canonical trace polynomial of every component of the curve.
pub fn trace_of_curve(s: &PantsDecomposition, c: &DtCoordinates) -> Result<Vec<GaussPoly>> {
    components_of(s, c)?
        .components
        .iter()
        .map(|comp| component_raw_trace(s, comp)?.canonical_sign())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        let one = GaussPoly::constant(1, 1);
        for s in SlotLabel::ALL {
            for m in [omega(1, s), eta(1, s), gamma(1, s)] {
                assert_eq!(m.det(), one);
            }
        }
        assert_eq!(j(1).det(), one);
        assert_eq!(t_mat(1, 0).det(), one);
        assert_eq!(crossing_matrix(1, 0, 3).det(), one);
        assert_eq!(a_x(&GaussPoly::var(1, 0)).det(), -one.clone());
    }

    #[test]
    fn crossing_examples() {
        let m = crossing_matrix(1, 0, 0);
        assert_eq!(m.to_string(), "[[i, -i*t1], [0, -i]]");
        let m1 = crossing_matrix(1, 0, 1);
        assert_eq!(m1.b.to_string(), "-i*t1 - 2i");
        for n in -3..=3 {
            assert_eq!(crossing_from_generators(2, 1, n), crossing_matrix(2, 1, n));
        }
    }

    #[test]
    fn connector_table() {
        use SlotLabel::*;
        let expect = [
            (Zero, One, true, Omega::O1),
            (One, Inf, false, Omega::O1),
            (Inf, Zero, true, Omega::O1),
            (Zero, Inf, false, Omega::O0),
            (One, Zero, false, Omega::O0),
            (Inf, One, true, Omega::O0),
        ];
        for (b, c, neg, o) in expect {
            assert_eq!(dcc_connector(b, c), DccEntry { negative: neg, omega: o });
        }
        for s in SlotLabel::ALL {
            assert_eq!(scc_connector(s, true).y, -2);
            assert_eq!(scc_connector(s, false).y, 2);
            assert_eq!(scc_connector(s, true).negative, s != Zero);
        }
    }

    #[test]
    fn kra_roundtrip() {
        let tau = Complex64::new(1.0, 4.0);
        let back = kra_tau(kra_tk(tau)).unwrap();
        assert!((back - tau).norm() / tau.norm() < 1e-12);
        assert_eq!(kra_tau(Complex64::new(1.0, 0.0)).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(kra_tau(Complex64::new(0.0, 0.0)), Err(Error::ZeroKraInput));
    }
}
