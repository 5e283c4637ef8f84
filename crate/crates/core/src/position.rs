//! Penner standard position: endpoint layout in each pants window, strand
//! matching across each annulus, component extraction and word compilation.
//!
//! Window layout at slot s, in ccw order along the window:
//!
//! ```text
//! [arcs to s-1] [first ends of scc arcs] [arcs to s+1] [second ends of scc arcs]
//! ```
//!
//! An scc arc at slot s loops around slot s+1. Its j-th first end pairs with
//! the (S-1-j)-th second end, and the block of arcs to s+1 pairs with the
//! block of arcs to s at slot s+1 in reversed order, so nothing crosses.

use crate::coords::{self, ArcCounts, DtCoordinates, PennerTwists};
use crate::error::{Error, Result};
use crate::holonomy::{dcc_connector, scc_connector};
use crate::surface::{PantsDecomposition, Side, SlotLabel, SlotRef, SlotUse};
use crate::word::{HolonomyWord, Token};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    ToPred,
    SccFirst,
    ToSucc,
    SccSecond,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcKind {
    Dcc,
    Scc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowPoint {
    pub arc: usize,
    pub block: Block,
}

/// Arc in one pants; for scc arcs `ends[0]` is the first end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PantsArc {
    pub kind: ArcKind,
    pub ends: [(SlotLabel, usize); 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PantsLayout {
    pub counts: ArcCounts,
    pub windows: [Vec<WindowPoint>; 3],
    pub arcs: Vec<PantsArc>,
}

impl PantsLayout {
    pub fn from_counts(counts: ArcCounts) -> Self {
        let mut windows: [Vec<Option<WindowPoint>>; 3] = std::array::from_fn(|s| vec![None; counts.x[s] as usize]);
        let mut arcs = Vec::new();
        let block_sizes = |s: SlotLabel| {
            (counts.between(s, s.pred()) as usize, counts.scc_at(s) as usize, counts.between(s, s.succ()) as usize)
        };
        for s in SlotLabel::ALL {
            let (m, sc, pl) = block_sizes(s);
            for j in 0..sc {
                let e1 = (s, m + j);
                let e2 = (s, m + sc + pl + (sc - 1 - j));
                let id = arcs.len();
                arcs.push(PantsArc { kind: ArcKind::Scc, ends: [e1, e2] });
                windows[s.index()][e1.1] = Some(WindowPoint { arc: id, block: Block::SccFirst });
                windows[s.index()][e2.1] = Some(WindowPoint { arc: id, block: Block::SccSecond });
            }
            let t = s.succ();
            for j in 0..pl {
                let a = (s, m + sc + (pl - 1 - j));
                let b = (t, j);
                let id = arcs.len();
                arcs.push(PantsArc { kind: ArcKind::Dcc, ends: [a, b] });
                windows[s.index()][a.1] = Some(WindowPoint { arc: id, block: Block::ToSucc });
                windows[t.index()][b.1] = Some(WindowPoint { arc: id, block: Block::ToPred });
            }
        }
        let windows = windows.map(|w| w.into_iter().map(|p| p.expect("every window point is covered")).collect());
        PantsLayout { counts, windows, arcs }
    }

    pub fn point(&self, slot: SlotLabel, pos: usize) -> WindowPoint {
        self.windows[slot.index()][pos]
    }

    /// The other end of the arc through (slot, pos).
    pub fn partner(&self, slot: SlotLabel, pos: usize) -> (SlotLabel, usize) {
        let arc = &self.arcs[self.point(slot, pos).arc];
        if arc.ends[0] == (slot, pos) {
            arc.ends[1]
        } else {
            arc.ends[0]
        }
    }
}

impl PantsLayout {
    /// Exchanges the arcs at two positions of one window. Breaks the
    /// layout on purpose; used to exercise the oracle.
    pub fn swap_points(&mut self, slot: SlotLabel, i: usize, j: usize) {
        let w = &mut self.windows[slot.index()];
        w.swap(i, j);
        for (pos, other) in [(i, j), (j, i)] {
            let arc = &mut self.arcs[w[pos].arc];
            for e in arc.ends.iter_mut() {
                if *e == (slot, other) {
                    *e = (slot, pos);
                    break;
                }
            }
        }
    }
}

pub fn layout_endpoints(s: &PantsDecomposition, c: &DtCoordinates) -> Result<Vec<PantsLayout>> {
    coords::validate(s, c)?;
    Ok(coords::pants_arc_counts(s, &c.q)?.into_iter().map(PantsLayout::from_counts).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Strand {
    pub a_pos: usize,
    pub b_pos: usize,
    /// Right turns made by this strand inside the annulus.
    pub twist: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnulusMatching {
    pub curve: usize,
    pub q: usize,
    pub shift: i64,
    /// Indexed by side-A position.
    pub strands: Vec<Strand>,
    b_to_a: Vec<usize>,
}

impl AnnulusMatching {
    pub fn new(curve: usize, q: usize, shift: i64) -> Self {
        let qi = q as i64;
        let mut strands = Vec::with_capacity(q);
        let mut b_to_a = vec![0; q];
        for k in 0..q {
            let d = k as i64 - shift;
            let b_pos = (qi - 1 - d.rem_euclid(qi)) as usize;
            strands.push(Strand { a_pos: k, b_pos, twist: -d.div_euclid(qi) });
            b_to_a[b_pos] = k;
        }
        AnnulusMatching { curve, q, shift, strands, b_to_a }
    }

    pub fn from_b(&self, b_pos: usize) -> &Strand {
        &self.strands[self.b_to_a[b_pos]]
    }

    /// Position of each strand's B end in A's direction, lifted to the
    /// universal cover, minus its A position. Constant for a simple matching.
    pub fn lifted_offsets(&self) -> Vec<i64> {
        let q = self.q as i64;
        self.strands.iter().map(|s| (q - 1 - s.b_pos as i64) - s.twist * q - s.a_pos as i64).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub annuli: Vec<AnnulusMatching>,
}

pub fn match_strands(s: &PantsDecomposition, c: &DtCoordinates, p_hat: &PennerTwists) -> Result<Matching> {
    coords::validate(s, c)?;
    if p_hat.p_hat.len() != s.xi() {
        return Err(Error::LengthMismatch { expected: s.xi(), got: p_hat.p_hat.len() });
    }
    Ok(Matching { annuli: (0..s.xi()).map(|i| AnnulusMatching::new(i, c.q[i] as usize, p_hat.p_hat[i])).collect() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub curve: usize,
    pub exit: SlotRef,
    pub exit_pos: usize,
    pub entry: SlotRef,
    pub entry_pos: usize,
    pub twist: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Link {
    Dcc { from: SlotLabel, to: SlotLabel },
    /// `forward` when leaving through the arc's second end.
    Scc { slot: SlotLabel, forward: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub q: Vec<i64>,
    pub p_hat: Vec<i64>,
    pub p: Vec<i64>,
    pub h: i64,
    pub steps: Vec<(Crossing, Link)>,
    /// Set for a component parallel to a pants curve (q = 0).
    pub pants_curve: Option<usize>,
}

impl Component {
    pub fn total_q(&self) -> i64 {
        self.q.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveComponents {
    pub components: Vec<Component>,
}

impl CurveComponents {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

fn cross(s: &PantsDecomposition, m: &Matching, from: SlotRef, pos: usize) -> Crossing {
    let SlotUse::Glued { curve, side } = s.slot_use(from) else {
        panic!("window points only exist on glued slots");
    };
    let ann = &m.annuli[curve];
    let (entry_pos, twist) = match side {
        Side::A => {
            let st = ann.strands[pos];
            (st.b_pos, st.twist)
        }
        Side::B => {
            let st = ann.from_b(pos);
            (st.a_pos, st.twist)
        }
    };
    let entry = s.gluings()[curve].end(side.other());
    Crossing { curve, exit: from, exit_pos: pos, entry, entry_pos, twist }
}

pub fn extract_components(
    s: &PantsDecomposition,
    c: &DtCoordinates,
    layouts: &[PantsLayout],
    m: &Matching,
) -> Result<CurveComponents> {
    let xi = s.xi();
    let mut seen = std::collections::HashSet::new();
    let mut components = Vec::new();
    for g in s.gluings() {
        for k in 0..c.q[g.curve] as usize {
            if seen.contains(&(g.end_a, k)) {
                continue;
            }
            let (mut cur, mut pos) = (g.end_a, k);
            let mut steps = Vec::new();
            while seen.insert((cur, pos)) {
                let x = cross(s, m, cur, pos);
                seen.insert((x.entry, x.entry_pos));
                let lay = &layouts[x.entry.pants];
                let (slot2, pos2) = lay.partner(x.entry.slot, x.entry_pos);
                let link = if slot2 == x.entry.slot {
                    let first = lay.point(x.entry.slot, x.entry_pos).block == Block::SccFirst;
                    Link::Scc { slot: slot2, forward: first }
                } else {
                    Link::Dcc { from: x.entry.slot, to: slot2 }
                };
                steps.push((x, link));
                cur = SlotRef::new(x.entry.pants, slot2);
                pos = pos2;
            }
            let mut q = vec![0; xi];
            let mut p_hat = vec![0; xi];
            for (x, _) in &steps {
                q[x.curve] += 1;
                p_hat[x.curve] += x.twist;
            }
            let h = steps.iter().filter(|(_, l)| matches!(l, Link::Scc { .. })).count() as i64;
            let p = coords::penner_to_dt(s, &q, &p_hat)?.p;
            components.push(Component { q, p_hat, p, h, steps, pants_curve: None });
        }
    }
    for i in 0..xi {
        if c.q[i] == 0 {
            for _ in 0..c.p[i] {
                let mut p = vec![0; xi];
                p[i] = 1;
                components.push(Component { q: vec![0; xi], p_hat: p.clone(), p, h: 0, steps: Vec::new(), pants_curve: Some(i) });
            }
        }
    }
    Ok(CurveComponents { components })
}

/// Validation, twist conversion, layout, matching and extraction in one go.
pub fn components_of(s: &PantsDecomposition, c: &DtCoordinates) -> Result<CurveComponents> {
    let p_hat = coords::dt_to_penner(s, c)?;
    let layouts = layout_endpoints(s, c)?;
    let m = match_strands(s, c, &p_hat)?;
    extract_components(s, c, &layouts, &m)
}

pub fn compile_word(s: &PantsDecomposition, comp: &Component) -> Result<HolonomyWord> {
    if comp.steps.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut unit = 0u8;
    let mut tokens = Vec::with_capacity(2 * comp.steps.len());
    for (x, link) in &comp.steps {
        unit += 1;
        tokens.push(Token::Crossing { curve: x.curve, twist: x.twist, exit: x.exit.slot, entry: x.entry.slot });
        match *link {
            Link::Dcc { from, to } => {
                let e = dcc_connector(from, to);
                unit += if e.negative { 2 } else { 0 };
                tokens.push(Token::Connector(e.omega));
            }
            Link::Scc { slot, forward } => {
                let e = scc_connector(slot, forward);
                unit += if e.negative { 2 } else { 0 };
                tokens.push(Token::Scc { y: e.y });
            }
        }
    }
    HolonomyWord::new(s.xi(), unit % 4, tokens)
}

pub fn scc_count(s: &PantsDecomposition, c: &DtCoordinates) -> Result<i64> {
    coords::validate(s, c)?;
    Ok(coords::pants_arc_counts(s, &c.q)?.iter().map(ArcCounts::scc_total).sum())
}
