//! Pants decompositions: pants with slots labelled 0, 1, inf and gluings
//! between slots. Each gluing is one pants curve with its own parameter.
//!
//! Spec file grammar (one directive per line, `#` starts a comment):
//!
//! ```text
//! genus <g>
//! boundary <b>
//! pants <k>
//! glue <name> (<pants>,<slot>) (<pants>,<slot>)    slot := 0 | 1 | inf
//! ```
//!
//! Curves are numbered in file order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlotLabel {
    Zero,
    One,
    Inf,
}

impl SlotLabel {
    pub const ALL: [SlotLabel; 3] = [SlotLabel::Zero, SlotLabel::One, SlotLabel::Inf];

    pub fn index(self) -> usize {
        match self {
            SlotLabel::Zero => 0,
            SlotLabel::One => 1,
            SlotLabel::Inf => 2,
        }
    }

    pub fn from_index(i: usize) -> SlotLabel {
        Self::ALL[i % 3]
    }

    /// Cyclic successor 0 -> 1 -> inf -> 0 (the right-hand neighbour).
    pub fn succ(self) -> SlotLabel {
        Self::from_index(self.index() + 1)
    }

    /// Cyclic predecessor (the clockwise neighbour).
    pub fn pred(self) -> SlotLabel {
        Self::from_index(self.index() + 2)
    }
}

impl fmt::Display for SlotLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SlotLabel::Zero => "0",
            SlotLabel::One => "1",
            SlotLabel::Inf => "inf",
        })
    }
}

impl FromStr for SlotLabel {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "0" => Ok(SlotLabel::Zero),
            "1" => Ok(SlotLabel::One),
            "inf" | "∞" => Ok(SlotLabel::Inf),
            o => Err(format!("unknown slot `{o}` (expected 0, 1 or inf)")),
        }
    }
}

pub type PantsId = usize;

/// A boundary slot of one pants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotRef {
    pub pants: PantsId,
    pub slot: SlotLabel,
}

impl SlotRef {
    pub fn new(pants: PantsId, slot: SlotLabel) -> Self {
        SlotRef { pants, slot }
    }
}

impl fmt::Display for SlotRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pants, self.slot)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gluing {
    /// Zero-based curve index; printed one-based.
    pub curve: usize,
    pub name: String,
    pub end_a: SlotRef,
    pub end_b: SlotRef,
}

impl Gluing {
    pub fn end(&self, side: Side) -> SlotRef {
        match side {
            Side::A => self.end_a,
            Side::B => self.end_b,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlotUse {
    Glued { curve: usize, side: Side },
    Free,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModularKind {
    OneHoledTorus,
    FourHoledSphere,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceSpec {
    pub genus: usize,
    pub boundary: usize,
    pub pants: usize,
    pub gluings: Vec<(String, SlotRef, SlotRef)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PantsDecomposition {
    genus: usize,
    boundary: usize,
    pants_count: usize,
    gluings: Vec<Gluing>,
    slots: Vec<[SlotUse; 3]>,
}

impl PantsDecomposition {
    pub fn build(spec: &SurfaceSpec) -> Result<Self> {
        let k = spec.pants;
        let mut slots = vec![[SlotUse::Free; 3]; k];
        let mut gluings = Vec::new();
        for (curve, (name, a, b)) in spec.gluings.iter().enumerate() {
            for e in [a, b] {
                if e.pants >= k {
                    return Err(Error::UnknownPants { curve: curve + 1, pants: e.pants, count: k });
                }
            }
            if a == b {
                return Err(Error::SelfGluedSlot { curve: curve + 1, pants: a.pants, slot: a.slot });
            }
            for (e, side) in [(a, Side::A), (b, Side::B)] {
                let cell = &mut slots[e.pants][e.slot.index()];
                if *cell != SlotUse::Free {
                    return Err(Error::DuplicateSlot { pants: e.pants, slot: e.slot });
                }
                *cell = SlotUse::Glued { curve, side };
            }
            gluings.push(Gluing { curve, name: name.clone(), end_a: *a, end_b: *b });
        }

        let xi = gluings.len();
        let (g, b) = (spec.genus as i64, spec.boundary as i64);
        if 2 * g - 2 + b != k as i64 || 3 * g - 3 + b != xi as i64 {
            return Err(Error::TopologyMismatch { genus: spec.genus, boundary: spec.boundary, pants: k, curves: xi });
        }

        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for gl in &gluings {
            let (ra, rb) = (find(&mut parent, gl.end_a.pants), find(&mut parent, gl.end_b.pants));
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        if (0..k).any(|p| find(&mut parent, p) != root) {
            return Err(Error::Disconnected);
        }

        Ok(PantsDecomposition { genus: spec.genus, boundary: spec.boundary, pants_count: k, gluings, slots })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::build(&parse_spec(text)?)
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::SurfaceSyntax { line: 0, msg: format!("{}: {e}", path.display()) })?;
        Self::parse(&text)
    }

    /// Built-in test surfaces: `s11`, `s04`, `s12`, `s20`.
    pub fn builtin(name: &str) -> Option<Self> {
        let text = match name {
            "s11" => SIGMA_1_1,
            "s04" => SIGMA_0_4,
            "s12" => SIGMA_1_2,
            "s20" => SIGMA_2_0,
            _ => return None,
        };
        Some(Self::parse(text).expect("built-in surface"))
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary(&self) -> usize {
        self.boundary
    }

    pub fn pants_count(&self) -> usize {
        self.pants_count
    }

    /// Number of pants curves.
    pub fn xi(&self) -> usize {
        self.gluings.len()
    }

    pub fn gluings(&self) -> &[Gluing] {
        &self.gluings
    }

    pub fn gluing(&self, curve: usize) -> Result<&Gluing> {
        self.gluings.get(curve).ok_or(Error::BadCurveIndex(curve + 1))
    }

    pub fn slot_use(&self, r: SlotRef) -> SlotUse {
        self.slots[r.pants][r.slot.index()]
    }

    pub fn pants_boundary_data(&self, p: PantsId) -> Option<[SlotUse; 3]> {
        self.slots.get(p).copied()
    }

    pub fn unglued_slots(&self) -> Vec<SlotRef> {
        let mut v = Vec::new();
        for (p, s) in self.slots.iter().enumerate() {
            for l in SlotLabel::ALL {
                if s[l.index()] == SlotUse::Free {
                    v.push(SlotRef::new(p, l));
                }
            }
        }
        v
    }

    pub fn modular_surface_kind(&self, curve: usize) -> Result<ModularKind> {
        let g = self.gluing(curve)?;
        Ok(if g.end_a.pants == g.end_b.pants { ModularKind::OneHoledTorus } else { ModularKind::FourHoledSphere })
    }
}

pub const SIGMA_1_1: &str = "genus 1\nboundary 1\npants 1\nglue s1 (0,inf) (0,0)\n";
pub const SIGMA_0_4: &str = "genus 0\nboundary 4\npants 2\nglue s1 (0,inf) (1,inf)\n";
pub const SIGMA_1_2: &str = "genus 1\nboundary 2\npants 2\nglue s1 (0,inf) (1,inf)\nglue s2 (1,0) (1,1)\n";
pub const SIGMA_2_0: &str = "genus 2\nboundary 0\npants 2\nglue s1 (0,0) (1,0)\nglue s2 (0,1) (1,1)\nglue s3 (0,inf) (1,inf)\n";

fn parse_slot_ref(tok: &str) -> std::result::Result<SlotRef, String> {
    let inner = tok
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("expected (<pants>,<slot>), got `{tok}`"))?;
    let (p, s) = inner.split_once(',').ok_or_else(|| format!("expected (<pants>,<slot>), got `{tok}`"))?;
    let pants = p.trim().parse::<usize>().map_err(|_| format!("bad pants index `{}`", p.trim()))?;
    Ok(SlotRef::new(pants, s.parse()?))
}

pub fn parse_spec(text: &str) -> Result<SurfaceSpec> {
    let (mut genus, mut boundary, mut pants) = (None, None, None);
    let mut gluings = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let err = |msg: String| Error::SurfaceSyntax { line, msg };
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (kw, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        let number = |what: &str| rest.parse::<usize>().map_err(|_| err(format!("`{what}` needs a non-negative integer")));
        match kw {
            "genus" => genus = Some(number("genus")?),
            "boundary" => boundary = Some(number("boundary")?),
            "pants" => pants = Some(number("pants")?),
            "glue" => {
                let (name, ends) = rest.split_once(char::is_whitespace).ok_or_else(|| err("glue needs a name and two slots".into()))?;
                let ends = ends.trim();
                let close = ends.find(')').ok_or_else(|| err("unbalanced parenthesis".into()))?;
                let a = parse_slot_ref(&ends[..=close]).map_err(&err)?;
                let b = parse_slot_ref(&ends[close + 1..]).map_err(&err)?;
                gluings.push((name.to_string(), a, b));
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }
    let missing = |what: &str| Error::SurfaceSyntax { line: 0, msg: format!("missing `{what}` directive") };
    Ok(SurfaceSpec {
        genus: genus.ok_or_else(|| missing("genus"))?,
        boundary: boundary.ok_or_else(|| missing("boundary"))?,
        pants: pants.ok_or_else(|| missing("pants"))?,
        gluings,
    })
}
