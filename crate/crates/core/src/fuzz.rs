//! Random admissible coordinates and a brute-force embedding oracle.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coords::{self, DtCoordinates};
use crate::error::{Error, Result};
use crate::holonomy::trace_of_curve;
use crate::position::{self, ArcKind, Matching, PantsLayout};
use crate::surface::{PantsDecomposition, SlotLabel, SlotRef};

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub seed: u64,
    pub surface: PantsDecomposition,
    pub max_q: i64,
    pub max_abs_p: i64,
    pub sample_count: usize,
    pub connected_only: bool,
    /// Extra filter on the total intersection number.
    pub max_total_q: Option<i64>,
    pub min_total_q: i64,
}

impl FuzzConfig {
    pub fn new(surface: PantsDecomposition, seed: u64, max_q: i64, sample_count: usize) -> Result<Self> {
        let cfg = FuzzConfig {
            seed,
            surface,
            max_q,
            max_abs_p: 6,
            sample_count,
            connected_only: true,
            max_total_q: None,
            min_total_q: 1,
        };
        cfg.check()?;
        Ok(cfg)
    }

    /// Some nonzero admissible q-vector must fit under max_q.
    pub fn check(&self) -> Result<()> {
        if self.max_q < 1 || self.max_abs_p < 0 {
            return Err(Error::BadFuzzConfig("max_q must be >= 1 and max_abs_p >= 0".into()));
        }
        if self.max_q >= 2 {
            return Ok(());
        }
        let xi = self.surface.xi();
        let ok = (1u32..(1u32 << xi)).any(|mask| {
            let q: Vec<i64> = (0..xi).map(|i| ((mask >> i) & 1) as i64).collect();
            coords::slot_intersections(&self.surface, &q).iter().all(|x| x.iter().sum::<i64>() % 2 == 0)
        });
        if ok {
            Ok(())
        } else {
            Err(Error::BadFuzzConfig(format!("no nonzero admissible q with entries <= {}", self.max_q)))
        }
    }
}

/// Deterministic stream of admissible coordinates.
pub struct CoordSampler {
    cfg: FuzzConfig,
    rng: ChaCha8Rng,
    emitted: usize,
}

const MAX_ATTEMPTS: usize = 100_000;

impl CoordSampler {
    pub fn new(cfg: FuzzConfig) -> Result<Self> {
        cfg.check()?;
        let rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        Ok(CoordSampler { cfg, rng, emitted: 0 })
    }

    fn sample_q(&mut self) -> Option<Vec<i64>> {
        let s = &self.cfg.surface;
        let xi = s.xi();
        let mut q: Vec<i64> = (0..xi).map(|_| self.rng.random_range(0..=self.cfg.max_q)).collect();
        for _ in 0..64 {
            let x = coords::slot_intersections(s, &q);
            let Some(bad) = x.iter().position(|v| v.iter().sum::<i64>() % 2 != 0) else {
                return Some(q);
            };
            let on_bad: Vec<usize> = s
                .gluings()
                .iter()
                .filter(|g| g.end_a.pants == bad || g.end_b.pants == bad)
                .map(|g| g.curve)
                .collect();
            let i = on_bad[self.rng.random_range(0..on_bad.len())];
            q[i] = self.rng.random_range(0..=self.cfg.max_q);
        }
        None
    }

    fn sample(&mut self) -> Option<DtCoordinates> {
        let q = self.sample_q()?;
        let total: i64 = q.iter().sum();
        if total < self.cfg.min_total_q || self.cfg.max_total_q.is_some_and(|m| total > m) {
            return None;
        }
        let a = self.cfg.max_abs_p;
        let mut p = Vec::with_capacity(q.len());
        for i in 0..q.len() {
            if q[i] == 0 {
                p.push(self.rng.random_range(0..=a));
                continue;
            }
            let mut v = self.rng.random_range(-a..=a);
            let parity = coords::twist_parity(&self.cfg.surface, &q, i).ok()?;
            if v.rem_euclid(2) != parity {
                v += if v < a { 1 } else { -1 };
            }
            p.push(v);
        }
        let c = DtCoordinates::new(q, p);
        if c.q.iter().all(|&v| v == 0) && c.p.iter().all(|&v| v == 0) {
            return None;
        }
        if self.cfg.connected_only && position::components_of(&self.cfg.surface, &c).ok()?.len() != 1 {
            return None;
        }
        Some(c)
    }
}

impl Iterator for CoordSampler {
    type Item = DtCoordinates;

    fn next(&mut self) -> Option<DtCoordinates> {
        if self.emitted >= self.cfg.sample_count {
            return None;
        }
        for _ in 0..MAX_ATTEMPTS {
            if let Some(c) = self.sample() {
                self.emitted += 1;
                return Some(c);
            }
        }
        None
    }
}

pub fn random_coords(cfg: &FuzzConfig) -> Result<Vec<DtCoordinates>> {
    Ok(CoordSampler::new(cfg.clone())?.collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub simple: bool,
    pub components: usize,
    pub problems: Vec<String>,
}

/// Chords as pairs of positions on a circle; true if two of them cross.
fn find_crossing(chords: &[(usize, usize)]) -> Option<(usize, usize)> {
    let inside = |(a, b): (usize, usize), x: usize| {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        lo < x && x < hi
    };
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            let (c, d) = chords[j];
            if inside(chords[i], c) != inside(chords[i], d) {
                return Some((i, j));
            }
        }
    }
    None
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut v = p.clone();
            v.insert(k, n - 1);
            out.push(v);
        }
    }
    out
}

/// Can the arcs of one pants be drawn disjointly? dcc arcs stay in the
/// front hexagon; an scc arc at slot a leaves it through the two seams
/// around slot a+1 and closes up in the back hexagon. The seam order and the
/// end assignment of the scc arcs are searched exhaustively.
fn pants_is_planar(lay: &PantsLayout) -> std::result::Result<(), String> {
    let sccs: Vec<usize> = (0..lay.arcs.len()).filter(|&k| lay.arcs[k].kind == ArcKind::Scc).collect();
    let dccs: Vec<usize> = (0..lay.arcs.len()).filter(|&k| lay.arcs[k].kind == ArcKind::Dcc).collect();
    for &k in &sccs {
        let [(s1, _), (s2, _)] = lay.arcs[k].ends;
        if s1 != s2 {
            return Err(format!("scc arc {k} has ends on two slots"));
        }
    }
    for &k in &dccs {
        let [(s1, _), (s2, _)] = lay.arcs[k].ends;
        if s1 == s2 {
            return Err(format!("dcc arc {k} has both ends on slot {s1}"));
        }
    }
    // seam after window s sits between s and s+1
    let mut seam_arcs: [Vec<usize>; 3] = Default::default();
    for &k in &sccs {
        let a = lay.arcs[k].ends[0].0;
        seam_arcs[a.index()].push(k);
        seam_arcs[a.succ().index()].push(k);
    }
    let n_sites: usize = lay.windows.iter().map(Vec::len).sum::<usize>() + seam_arcs.iter().map(Vec::len).sum::<usize>();
    let mut window_base = [0usize; 3];
    let mut seam_base = [0usize; 3];
    let mut off = 0;
    for s in 0..3 {
        window_base[s] = off;
        off += lay.windows[s].len();
        seam_base[s] = off;
        off += seam_arcs[s].len();
    }
    debug_assert_eq!(off, n_sites);
    let site = |(slot, pos): (SlotLabel, usize)| window_base[slot.index()] + pos;
    let front_dcc: Vec<(usize, usize)> = dccs.iter().map(|&k| (site(lay.arcs[k].ends[0]), site(lay.arcs[k].ends[1]))).collect();
    if let Some((i, j)) = find_crossing(&front_dcc) {
        return Err(format!("dcc arcs {} and {} cross", dccs[i], dccs[j]));
    }
    if sccs.is_empty() {
        return Ok(());
    }

    let perms: [Vec<Vec<usize>>; 3] = std::array::from_fn(|s| permutations(seam_arcs[s].len()));
    let n_scc = sccs.len();
    for orient in 0u64..(1u64 << n_scc) {
        for p0 in &perms[0] {
            for p1 in &perms[1] {
                for p2 in &perms[2] {
                    let ps = [p0, p1, p2];
                    // seam site of scc arc k on seam s
                    let seam_site = |s: usize, k: usize| {
                        let idx = seam_arcs[s].iter().position(|&x| x == k).unwrap();
                        seam_base[s] + ps[s][idx]
                    };
                    let mut front = front_dcc.clone();
                    let mut back = Vec::new();
                    for (bit, &k) in sccs.iter().enumerate() {
                        let a = lay.arcs[k].ends[0].0.index();
                        let near = seam_site(a, k);
                        let far = seam_site((a + 1) % 3, k);
                        let (e0, e1) = (site(lay.arcs[k].ends[0]), site(lay.arcs[k].ends[1]));
                        if orient >> bit & 1 == 0 {
                            front.push((e0, near));
                            front.push((e1, far));
                        } else {
                            front.push((e0, far));
                            front.push((e1, near));
                        }
                        back.push((near, far));
                    }
                    if find_crossing(&front).is_none() && find_crossing(&back).is_none() {
                        return Ok(());
                    }
                }
            }
        }
    }
    Err("no disjoint realisation of the scc arcs".into())
}

fn annulus_is_simple(q: usize, strands: &[(usize, usize, i64)]) -> std::result::Result<(), String> {
    let mut seen_a = vec![false; q];
    let mut seen_b = vec![false; q];
    for &(a, b, _) in strands {
        if a >= q || b >= q || seen_a[a] || seen_b[b] {
            return Err("strand ends are not a bijection".into());
        }
        seen_a[a] = true;
        seen_b[b] = true;
    }
    let qi = q as i64;
    let lifted: Vec<(i64, i64)> = strands.iter().map(|&(a, b, n)| (a as i64, qi - 1 - b as i64 - n * qi)).collect();
    let reach = strands.iter().map(|s| s.2.abs()).max().unwrap_or(0) + 2;
    for i in 0..lifted.len() {
        for j in 0..lifted.len() {
            for k in -reach..=reach {
                if i == j && k == 0 {
                    continue;
                }
                let top = lifted[i].0 - lifted[j].0 - k * qi;
                let bot = lifted[i].1 - lifted[j].1 - k * qi;
                if top.signum() != bot.signum() {
                    return Err(format!("strands {i} and {j} cross"));
                }
            }
        }
    }
    Ok(())
}

/// Checks layouts and matching for a realisable simple curve and counts its
/// components by union-find over window points.
pub fn check_embedding(s: &PantsDecomposition, c: &DtCoordinates, layouts: &[PantsLayout], m: &Matching) -> OracleVerdict {
    let mut problems = Vec::new();
    let x = coords::slot_intersections(s, &c.q);
    for (pants, lay) in layouts.iter().enumerate() {
        for slot in SlotLabel::ALL {
            if lay.windows[slot.index()].len() as i64 != x[pants][slot.index()] {
                problems.push(format!("pants {pants} slot {slot}: wrong number of window points"));
            }
        }
        if let Err(e) = pants_is_planar(lay) {
            problems.push(format!("pants {pants}: {e}"));
        }
    }
    for ann in &m.annuli {
        let strands: Vec<(usize, usize, i64)> = ann.strands.iter().map(|t| (t.a_pos, t.b_pos, t.twist)).collect();
        if let Err(e) = annulus_is_simple(ann.q, &strands) {
            problems.push(format!("curve {}: {e}", ann.curve + 1));
        }
    }

    let mut ids: HashMap<(SlotRef, usize), usize> = HashMap::new();
    for (pants, lay) in layouts.iter().enumerate() {
        for slot in SlotLabel::ALL {
            for pos in 0..lay.windows[slot.index()].len() {
                let n = ids.len();
                ids.insert((SlotRef::new(pants, slot), pos), n);
            }
        }
    }
    let mut parent: Vec<usize> = (0..ids.len()).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    let union = |a: usize, b: usize, p: &mut Vec<usize>| {
        let (ra, rb) = (find(p, a), find(p, b));
        p[ra] = rb;
    };
    for (pants, lay) in layouts.iter().enumerate() {
        for arc in &lay.arcs {
            let [(s1, k1), (s2, k2)] = arc.ends;
            let (a, b) = (ids[&(SlotRef::new(pants, s1), k1)], ids[&(SlotRef::new(pants, s2), k2)]);
            union(a, b, &mut parent);
        }
    }
    for ann in &m.annuli {
        let g = &s.gluings()[ann.curve];
        for t in &ann.strands {
            match (ids.get(&(g.end_a, t.a_pos)), ids.get(&(g.end_b, t.b_pos))) {
                (Some(&a), Some(&b)) => union(a, b, &mut parent),
                _ => problems.push(format!("curve {}: strand end outside the windows", ann.curve + 1)),
            }
        }
    }
    let mut roots = BTreeMap::new();
    for v in 0..parent.len() {
        roots.insert(find(&mut parent, v), ());
    }
    let parallel: i64 = (0..s.xi()).filter(|&i| c.q[i] == 0).map(|i| c.p[i]).sum();
    OracleVerdict { simple: problems.is_empty(), components: roots.len() + parallel as usize, problems }
}

/// Runs the oracle on the compiler's own layout and matching.
pub fn chord_diagram_oracle(s: &PantsDecomposition, c: &DtCoordinates) -> Result<OracleVerdict> {
    let p_hat = coords::dt_to_penner(s, c)?;
    let layouts = position::layout_endpoints(s, c)?;
    let m = position::match_strands(s, c, &p_hat)?;
    Ok(check_embedding(s, c, &layouts, &m))
}

/// Sorted canonical traces of all components.
pub fn trace_signature(s: &PantsDecomposition, c: &DtCoordinates) -> Result<Vec<String>> {
    let mut v: Vec<String> = trace_of_curve(s, c)?.iter().map(|p| p.to_string()).collect();
    v.sort();
    Ok(v)
}

/// Pairs of distinct coordinates with identical trace signatures.
pub fn injectivity_collisions(s: &PantsDecomposition, corpus: &[DtCoordinates]) -> Result<Vec<(DtCoordinates, DtCoordinates)>> {
    let mut by_sig: HashMap<Vec<String>, DtCoordinates> = HashMap::new();
    let mut out = Vec::new();
    for c in corpus {
        let sig = trace_signature(s, c)?;
        match by_sig.get(&sig) {
            Some(prev) if prev != c => out.push((prev.clone(), c.clone())),
            Some(_) => {}
            None => {
                by_sig.insert(sig, c.clone());
            }
        }
    }
    Ok(out)
}
