//! Dehn-Thurston coordinates, admissibility, arc counts and twist conversions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::{PantsDecomposition, Side, SlotLabel};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DtCoordinates {
    pub q: Vec<i64>,
    pub p: Vec<i64>,
}

impl DtCoordinates {
    pub fn new(q: Vec<i64>, p: Vec<i64>) -> Self {
        DtCoordinates { q, p }
    }

    pub fn total_q(&self) -> i64 {
        self.q.iter().sum()
    }
}

impl fmt::Display for DtCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "q=[{}] p=[{}]", join(&self.q), join(&self.p))
    }
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    let inner = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::CoordSyntax(format!("bad integer `{}`", t.trim()))))
        .collect()
}

/// Parses `q=[2,0] p=[0,1]`.
impl FromStr for DtCoordinates {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let pi = s.find("p=").ok_or_else(|| Error::CoordSyntax(format!("missing p=[...] in `{s}`")))?;
        let qs = s[..pi].trim().strip_prefix("q=").ok_or_else(|| Error::CoordSyntax(format!("missing q=[...] in `{s}`")))?;
        let q = parse_list(qs)?;
        let p = parse_list(&s[pi + 2..])?;
        if q.len() != p.len() {
            return Err(Error::LengthMismatch { expected: q.len(), got: p.len() });
        }
        Ok(DtCoordinates { q, p })
    }
}

/// Parses a comma-separated list such as `2,0,-1`.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    parse_list(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PennerTwists {
    pub p_hat: Vec<i64>,
}

/// Arc counts in one pants with slot intersection numbers `x`.
/// `dcc[s]` counts arcs between slot s and its successor s+1; `scc[s]` counts
/// arcs with both ends on slot s.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcCounts {
    pub x: [i64; 3],
    pub dcc: [i64; 3],
    pub scc: [i64; 3],
}

impl ArcCounts {
    /// Number of arcs between two distinct slots.
    pub fn between(&self, s: SlotLabel, t: SlotLabel) -> i64 {
        assert_ne!(s, t);
        if t == s.succ() {
            self.dcc[s.index()]
        } else {
            self.dcc[t.index()]
        }
    }

    pub fn scc_at(&self, s: SlotLabel) -> i64 {
        self.scc[s.index()]
    }

    pub fn scc_total(&self) -> i64 {
        self.scc.iter().sum()
    }
}

pub fn arc_counts(x: i64, y: i64, z: i64) -> Result<ArcCounts> {
    if x < 0 || y < 0 || z < 0 || (x + y + z) % 2 != 0 {
        return Err(Error::BadSlotTriple(x, y, z));
    }
    let v = [x, y, z];
    let l = |s: usize, t: usize| {
        let u = 3 - s - t;
        ((v[s] + v[t] - v[u]) / 2).min(v[s]).min(v[t]).max(0)
    };
    let scc = |s: usize| ((v[s] - v[(s + 1) % 3] - v[(s + 2) % 3]) / 2).max(0);
    Ok(ArcCounts { x: v, dcc: [l(0, 1), l(1, 2), l(2, 0)], scc: [scc(0), scc(1), scc(2)] })
}

fn check_lengths(s: &PantsDecomposition, c: &DtCoordinates) -> Result<()> {
    for v in [&c.q, &c.p] {
        if v.len() != s.xi() {
            return Err(Error::LengthMismatch { expected: s.xi(), got: v.len() });
        }
    }
    Ok(())
}

/// Intersection numbers of the curve with each slot of each pants.
pub fn slot_intersections(s: &PantsDecomposition, q: &[i64]) -> Vec<[i64; 3]> {
    let mut x = vec![[0i64; 3]; s.pants_count()];
    for g in s.gluings() {
        x[g.end_a.pants][g.end_a.slot.index()] += q[g.curve];
        x[g.end_b.pants][g.end_b.slot.index()] += q[g.curve];
    }
    x
}

pub fn validate(s: &PantsDecomposition, c: &DtCoordinates) -> Result<()> {
    check_lengths(s, c)?;
    for (i, (&q, &p)) in c.q.iter().zip(&c.p).enumerate() {
        if q < 0 {
            return Err(Error::CoordSyntax(format!("curve {} has negative q", i + 1)));
        }
        if q == 0 && p < 0 {
            return Err(Error::NegativeTwistOnZeroLength(i + 1));
        }
    }
    for (pants, x) in slot_intersections(s, &c.q).iter().enumerate() {
        if x.iter().sum::<i64>() % 2 != 0 {
            return Err(Error::ParityViolation(pants));
        }
    }
    Ok(())
}

/// Arc counts for every pants of the surface.
pub fn pants_arc_counts(s: &PantsDecomposition, q: &[i64]) -> Result<Vec<ArcCounts>> {
    slot_intersections(s, q).iter().map(|x| arc_counts(x[0], x[1], x[2])).collect()
}

/// The correction term for curve i: on each side, the arcs running from the
/// glued slot E to its clockwise neighbour.
pub fn twist_correction(s: &PantsDecomposition, arcs: &[ArcCounts], curve: usize) -> Result<i64> {
    let g = s.gluing(curve)?;
    Ok([Side::A, Side::B]
        .iter()
        .map(|&side| {
            let e = g.end(side);
            arcs[e.pants].between(e.slot, e.slot.pred())
        })
        .sum())
}

/// p_hat = (p + l - q) / 2, with l the summed correction from both sides.
pub fn penner_twist(curve: usize, q: i64, p: i64, l: i64) -> Result<i64> {
    if q == 0 {
        return Ok(p);
    }
    let num = p + l - q;
    if num % 2 != 0 {
        return Err(Error::NonIntegralTwist { curve: curve + 1, numerator: num });
    }
    Ok(num / 2)
}

pub fn dt_to_penner(s: &PantsDecomposition, c: &DtCoordinates) -> Result<PennerTwists> {
    validate(s, c)?;
    let arcs = pants_arc_counts(s, &c.q)?;
    let p_hat = (0..s.xi())
        .map(|i| penner_twist(i, c.q[i], c.p[i], twist_correction(s, &arcs, i)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(PennerTwists { p_hat })
}

pub fn penner_to_dt(s: &PantsDecomposition, q: &[i64], p_hat: &[i64]) -> Result<DtCoordinates> {
    if q.len() != s.xi() || p_hat.len() != s.xi() {
        return Err(Error::LengthMismatch { expected: s.xi(), got: q.len().min(p_hat.len()) });
    }
    let arcs = pants_arc_counts(s, q)?;
    let p = (0..s.xi())
        .map(|i| Ok(if q[i] == 0 { p_hat[i] } else { 2 * p_hat[i] - twist_correction(s, &arcs, i)? + q[i] }))
        .collect::<Result<Vec<_>>>()?;
    Ok(DtCoordinates { q: q.to_vec(), p })
}

/// Parity that p_i must have for the twist conversion to be integral.
pub fn twist_parity(s: &PantsDecomposition, q: &[i64], curve: usize) -> Result<i64> {
    if q[curve] == 0 {
        return Ok(0);
    }
    let arcs = pants_arc_counts(s, q)?;
    Ok((q[curve] + twist_correction(s, &arcs, curve)?).rem_euclid(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlpTriple {
    pub m: i64,
    pub s: i64,
    pub t: i64,
}

pub fn flp_from_dt(q: i64, p: i64) -> Result<FlpTriple> {
    if p % 2 != 0 {
        return Err(Error::OddTwist(p));
    }
    if q < 0 {
        return Err(Error::CoordSyntax(format!("negative q {q}")));
    }
    if q == 0 && p < 0 {
        return Err(Error::NegativeTwistOnZeroLength(1));
    }
    Ok(FlpTriple { m: q, s: p.abs() / 2, t: (p / 2 - q).abs() })
}

pub fn dt_from_flp(f: FlpTriple) -> Result<(i64, i64)> {
    let FlpTriple { m, s, t } = f;
    if m < 0 || s < 0 || t < 0 {
        return Err(Error::NoFlpRelation(m, s, t));
    }
    if m == s + t || s == m + t {
        Ok((m, 2 * s))
    } else if t == m + s {
        Ok((m, -2 * s))
    } else {
        Err(Error::NoFlpRelation(m, s, t))
    }
}

/// n full right Dehn twists about curve i.
pub fn twist_curve(c: &DtCoordinates, curve: usize, n: i64) -> Result<DtCoordinates> {
    if curve >= c.q.len() {
        return Err(Error::BadCurveIndex(curve + 1));
    }
    let mut r = c.clone();
    r.p[curve] += 2 * n * c.q[curve];
    Ok(r)
}

pub fn dual_curve_coords(s: &PantsDecomposition, curve: usize) -> Result<DtCoordinates> {
    s.gluing(curve)?;
    let mut q = vec![0; s.xi()];
    q[curve] = 2;
    Ok(DtCoordinates { q, p: vec![0; s.xi()] })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(n: &str) -> PantsDecomposition {
        PantsDecomposition::builtin(n).unwrap()
    }

    #[test]
    fn arc_count_examples() {
        let a = arc_counts(2, 2, 2).unwrap();
        assert_eq!((a.dcc, a.scc), ([1, 1, 1], [0, 0, 0]));
        let a = arc_counts(2, 0, 0).unwrap();
        assert_eq!((a.dcc, a.scc), ([0, 0, 0], [1, 0, 0]));
        let a = arc_counts(4, 2, 2).unwrap();
        assert_eq!(a.between(SlotLabel::Zero, SlotLabel::One), 2);
        assert_eq!(a.between(SlotLabel::Zero, SlotLabel::Inf), 2);
        assert_eq!(a.between(SlotLabel::One, SlotLabel::Inf), 0);
        assert_eq!(a.scc, [0, 0, 0]);
        assert!(arc_counts(1, 0, 0).is_err());
    }

    #[test]
    fn validation() {
        let s04 = surf("s04");
        assert!(validate(&s04, &DtCoordinates::new(vec![2], vec![0])).is_ok());
        assert_eq!(validate(&s04, &DtCoordinates::new(vec![1], vec![0])), Err(Error::ParityViolation(0)));
        assert_eq!(validate(&s04, &DtCoordinates::new(vec![0], vec![-1])), Err(Error::NegativeTwistOnZeroLength(1)));
        assert!(matches!(validate(&s04, &DtCoordinates::new(vec![0, 0], vec![0, 0])), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn formula_cases() {
        assert_eq!(penner_twist(0, 1, -1, 2).unwrap(), 0);
        assert_eq!(penner_twist(0, 2, 1, 1).unwrap(), 0);
        assert_eq!(penner_twist(0, 0, 3, 0).unwrap(), 3);
        assert!(matches!(penner_twist(0, 2, 0, 1), Err(Error::NonIntegralTwist { .. })));
    }

    #[test]
    fn four_holed_sphere_dual() {
        let s04 = surf("s04");
        let ph = dt_to_penner(&s04, &DtCoordinates::new(vec![2], vec![0])).unwrap();
        assert_eq!(ph.p_hat, vec![-1]);
    }

    #[test]
    fn torus_dual() {
        let s11 = surf("s11");
        assert_eq!(dt_to_penner(&s11, &DtCoordinates::new(vec![1], vec![0])).unwrap().p_hat, vec![0]);
        assert_eq!(dt_to_penner(&s11, &DtCoordinates::new(vec![2], vec![0])).unwrap().p_hat, vec![0]);
    }

    #[test]
    fn penner_roundtrip() {
        let s20 = surf("s20");
        let c = DtCoordinates::new(vec![0, 1, 1], vec![0, 1, -1]);
        let ph = dt_to_penner(&s20, &c).unwrap();
        assert_eq!(ph.p_hat, vec![0, 0, 0]);
        assert_eq!(penner_to_dt(&s20, &c.q, &ph.p_hat).unwrap(), c);
    }

    #[test]
    fn flp_examples() {
        assert_eq!(flp_from_dt(2, 0).unwrap(), FlpTriple { m: 2, s: 0, t: 2 });
        assert_eq!(flp_from_dt(2, 4).unwrap(), FlpTriple { m: 2, s: 2, t: 0 });
        assert_eq!(flp_from_dt(0, 0).unwrap(), FlpTriple { m: 0, s: 0, t: 0 });
        assert_eq!(flp_from_dt(1, 3), Err(Error::OddTwist(3)));
        assert_eq!(dt_from_flp(FlpTriple { m: 2, s: 0, t: 2 }).unwrap(), (2, 0));
        assert_eq!(dt_from_flp(FlpTriple { m: 2, s: 2, t: 0 }).unwrap(), (2, 4));
        assert_eq!(dt_from_flp(FlpTriple { m: 1, s: 2, t: 1 }).unwrap(), (1, 4));
        assert_eq!(dt_from_flp(FlpTriple { m: 1, s: 1, t: 2 }).unwrap(), (1, -2));
        assert!(dt_from_flp(FlpTriple { m: 1, s: 5, t: 1 }).is_err());
    }

    #[test]
    fn twists() {
        let c = DtCoordinates::new(vec![2], vec![0]);
        assert_eq!(twist_curve(&c, 0, 1).unwrap().p, vec![4]);
        assert_eq!(twist_curve(&c, 0, 0).unwrap(), c);
        let d = DtCoordinates::new(vec![3], vec![-2]);
        assert_eq!(twist_curve(&d, 0, -2).unwrap().p, vec![-14]);
    }

    #[test]
    fn duals() {
        assert_eq!(dual_curve_coords(&surf("s04"), 0).unwrap(), DtCoordinates::new(vec![2], vec![0]));
        assert_eq!(dual_curve_coords(&surf("s20"), 1).unwrap(), DtCoordinates::new(vec![0, 2, 0], vec![0, 0, 0]));
        assert!(dual_curve_coords(&surf("s20"), 3).is_err());
    }

    #[test]
    fn coordinate_text() {
        let c: DtCoordinates = "q=[2,0] p=[0,1]".parse().unwrap();
        assert_eq!(c, DtCoordinates::new(vec![2, 0], vec![0, 1]));
        assert_eq!(c.to_string(), "q=[2,0] p=[0,1]");
        assert!("q=[1] p=[1,2]".parse::<DtCoordinates>().is_err());
    }
}
