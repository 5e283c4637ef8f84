//! End-to-end acceptance checks. Runs without the libtest harness so every
//! criterion prints a PASS/FAIL line.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use plumbing_trace::coords::{dt_from_flp, dt_to_penner, flp_from_dt, penner_twist, twist_curve};
use plumbing_trace::fuzz::{chord_diagram_oracle, CoordSampler, FuzzConfig};
use plumbing_trace::holonomy::{eta, evaluate_word, gamma, omega, trace_of_curve};
use plumbing_trace::position::{compile_word, components_of};
use plumbing_trace::verify::verify;
use plumbing_trace::{DtCoordinates, GaussInt, GaussPoly, Mat2, PantsDecomposition, SlotLabel};

const PANEL: [&str; 4] = ["s11", "s04", "s12", "s20"];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn surf(n: &str) -> PantsDecomposition {
    PantsDecomposition::builtin(n).unwrap()
}

fn sampler(name: &str, seed: u64, max_q: i64, n: usize, max_total: i64, connected: bool) -> CoordSampler {
    let mut cfg = FuzzConfig::new(surf(name), seed, max_q, n).unwrap();
    cfg.max_total_q = Some(max_total);
    cfg.connected_only = connected;
    CoordSampler::new(cfg).unwrap()
}

fn tau_poly(terms: &[(i64, i64, u32)]) -> GaussPoly {
    // (re, im, power of t1)
    let mut p = GaussPoly::zero(1);
    let t = GaussPoly::var(1, 0);
    for &(re, im, k) in terms {
        let mut m = GaussPoly::constant(1, GaussInt::new(re, im));
        for _ in 0..k {
            m = &m * &t;
        }
        p = &p + &m;
    }
    p
}

fn golden_s04() -> Outcome {
    let start = Instant::now();
    let tr = trace_of_curve(&surf("s04"), &DtCoordinates::new(vec![2], vec![0])).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let want = tau_poly(&[(-4, 0, 2), (8, 0, 1), (-6, 0, 0)]);
    if tr.len() != 1 {
        return Err(format!("{} components", tr.len()));
    }
    if tr[0] != want && tr[0] != -&want {
        return Err(format!("got {}", tr[0]));
    }
    if elapsed > Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("trace {} in {elapsed:?}", tr[0]))
}

fn golden_s11() -> Outcome {
    let s = surf("s11");
    let cc = components_of(&s, &DtCoordinates::new(vec![1], vec![0])).map_err(|e| e.to_string())?;
    let w = compile_word(&s, &cc.components[0]).map_err(|e| e.to_string())?;
    let m = evaluate_word(&w).map_err(|e| e.to_string())?;
    let mi = GaussInt::new(0, -1);
    let want = Mat2::new(tau_poly(&[(1, 0, 1), (-1, 0, 0)]), tau_poly(&[(1, 0, 0)]), tau_poly(&[(1, 0, 0)]), GaussPoly::zero(1))
        .unwrap()
        .scale(&mi);
    if m == want || m == want.neg() {
        Ok(format!("{w} -> {m}"))
    } else {
        Err(format!("got {m}"))
    }
}

fn generator_identities() -> Outcome {
    let [z, o, f] = [SlotLabel::Zero, SlotLabel::One, SlotLabel::Inf];
    let id = Mat2::identity(1);
    let eta_prod = &(&eta(1, z) * &eta(1, f)) * &eta(1, o);
    let om = &omega(1, z) * &omega(1, o);
    let om_sq = &omega(1, z) * &omega(1, z);
    let gam = [z, o, f].iter().all(|&s| gamma(1, s).det() == GaussPoly::constant(1, 1));
    if eta_prod != id {
        return Err(format!("eta0 eta_inf eta1 = {eta_prod}"));
    }
    if om != id.neg() {
        return Err(format!("Omega0 Omega1 = {om}"));
    }
    if om_sq != omega(1, o) {
        return Err(format!("Omega0^2 = {om_sq}"));
    }
    if !gam {
        return Err("gamma generator with det != 1".into());
    }
    Ok("eta0 eta_inf eta1 = Id, Omega0 Omega1 = -Id, Omega0^2 = Omega1".into())
}

fn theorem_campaign() -> Outcome {
    let start = Instant::now();
    let (mut n, mut bad) = (0, Vec::new());
    let mut per = Vec::new();
    for (k, name) in PANEL.iter().enumerate() {
        let s = surf(name);
        let mut m = 0;
        for c in sampler(name, 1000 + k as u64, 8, 130, 16, true) {
            assert!(c.total_q() >= 1 && c.total_q() <= 16);
            let r = verify(&s, &c).map_err(|e| format!("{name} {c}: {e}"))?;
            if !r.pass {
                bad.push(format!("{name} {c} {:?}", r.failures()));
            }
            m += 1;
        }
        per.push(format!("{name}:{m}"));
        n += m;
    }
    let elapsed = start.elapsed();
    if n < 500 {
        return Err(format!("only {n} curves"));
    }
    if !bad.is_empty() {
        return Err(format!("{} of {n} failed, first {}", bad.len(), bad[0]));
    }
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{n} curves ({}) all pass in {elapsed:?}", per.join(" ")))
}

fn parabolicity() -> Outcome {
    let two = GaussPoly::constant(1, 2);
    let mut checked = 0;
    for name in PANEL {
        let s = surf(name);
        for i in 0..s.xi() {
            let mut q = vec![0; s.xi()];
            let mut p = vec![0; s.xi()];
            p[i] = 1;
            q[i] = 0;
            let tr = trace_of_curve(&s, &DtCoordinates::new(q, p)).map_err(|e| e.to_string())?;
            let want = GaussPoly::constant(s.xi(), 2);
            if tr != vec![want] {
                return Err(format!("{name} curve {}: {:?}", i + 1, tr.iter().map(|t| t.to_string()).collect::<Vec<_>>()));
            }
            checked += 1;
        }
    }
    for sl in SlotLabel::ALL {
        let t = gamma(1, sl).trace();
        if t != two && t != -&two {
            return Err(format!("gamma_{sl} has trace {t}"));
        }
    }
    Ok(format!("{checked} pants curves trace 2; peripheral generators trace +-2"))
}

fn twist_conversion() -> Outcome {
    let n1 = penner_twist(0, 1, -1, 2).map_err(|e| e.to_string())?;
    let n2 = penner_twist(0, 2, 1, 1).map_err(|e| e.to_string())?;
    let s20 = dt_to_penner(&surf("s20"), &DtCoordinates::new(vec![0, 1, 1], vec![0, 1, -1])).map_err(|e| e.to_string())?;
    let s12 = dt_to_penner(&surf("s12"), &DtCoordinates::new(vec![2, 1], vec![1, 0])).map_err(|e| e.to_string())?;
    if n1 != 0 || n2 != 0 {
        return Err(format!("n=1 -> {n1}, n=2 -> {n2}"));
    }
    if s20.p_hat[2] != 0 || s12.p_hat[0] != 0 {
        return Err(format!("surface cases {:?} {:?}", s20.p_hat, s12.p_hat));
    }
    Ok("n=1 (p=-1, l=1+1) -> 0; n=2 (p=1, l=0+1) -> 0".into())
}

fn oracle_agreement() -> Outcome {
    let mut n = 0;
    for (k, name) in PANEL.iter().enumerate() {
        let s = surf(name);
        for c in sampler(name, 2000 + k as u64, 4, 150, 8, false) {
            let comps = components_of(&s, &c).map_err(|e| format!("{name} {c}: {e}"))?;
            let v = chord_diagram_oracle(&s, &c).map_err(|e| format!("{name} {c}: {e}"))?;
            if !v.simple || v.components != comps.len() {
                return Err(format!("{name} {c}: oracle {} comps simple={} {:?}, extractor {}", v.components, v.simple, v.problems, comps.len()));
            }
            n += 1;
        }
    }
    Ok(format!("{n} curves agree"))
}

fn twist_equivariance() -> Outcome {
    let mut fits = [(2i64, true), (-2, true)];
    let mut n = 0;
    for (k, name) in PANEL.iter().enumerate() {
        let s = surf(name);
        for c in sampler(name, 3000 + k as u64, 4, 40, 10, true) {
            for i in 0..s.xi() {
                if c.q[i] == 0 {
                    continue;
                }
                let tw = twist_curve(&c, i, 1).map_err(|e| e.to_string())?;
                let after = trace_of_curve(&s, &tw).map_err(|e| e.to_string())?;
                let before = trace_of_curve(&s, &c).map_err(|e| e.to_string())?;
                for (sgn, ok) in fits.iter_mut() {
                    let shifted: Vec<GaussPoly> = before.iter().map(|t| t.shift_variable(i, *sgn).canonical_sign().unwrap()).collect();
                    *ok &= shifted == after;
                }
                n += 1;
            }
        }
    }
    if n < 100 {
        return Err(format!("only {n} cases"));
    }
    match fits {
        [(s, true), (_, false)] | [(_, false), (s, true)] => Ok(format!("s = {s:+} on {n} cases")),
        _ => Err(format!("no unique global sign: {fits:?}")),
    }
}

fn flp_round_trip() -> Outcome {
    let mut n = 0;
    for q in 0..=20 {
        for p in (-40..=40).step_by(2) {
            if q == 0 && p < 0 {
                continue;
            }
            let f = flp_from_dt(q, p).map_err(|e| e.to_string())?;
            let back = dt_from_flp(f).map_err(|e| e.to_string())?;
            if back != (q, p) {
                return Err(format!("({q},{p}) -> {f:?} -> {back:?}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} admissible pairs round-trip"))
}

fn random_poly(rng: &mut ChaCha8Rng) -> GaussPoly {
    let mut p = GaussPoly::zero(2);
    for _ in 0..rng.random_range(1..=3) {
        let e = [rng.random_range(0..=2u32), rng.random_range(0..=1u32)];
        let c = GaussInt::new(rng.random_range(-3..=3i64), rng.random_range(-3..=3i64));
        p = &p + &GaussPoly::from_terms(2, [(plumbing_trace::Monomial::new(e.to_vec()), c)]).unwrap();
    }
    p
}

fn random_sl2(rng: &mut ChaCha8Rng) -> Mat2 {
    let one = GaussPoly::constant(2, 1);
    let zero = GaussPoly::zero(2);
    let mut m = Mat2::identity(2);
    for k in 0..3 {
        let f = random_poly(rng);
        let e = if k % 2 == 0 {
            Mat2::new(one.clone(), f, zero.clone(), one.clone())
        } else {
            Mat2::new(one.clone(), zero.clone(), f, one.clone())
        };
        m = &m * &e.unwrap();
    }
    if rng.random_bool(0.5) {
        m = m.neg();
    }
    m
}

fn trace_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let one = GaussPoly::constant(2, 1);
    for k in 0..1000 {
        let (a, b) = (random_sl2(&mut rng), random_sl2(&mut rng));
        if a.det() != one || b.det() != one {
            return Err(format!("sample {k} not in SL2"));
        }
        let lhs = (&a * &b).trace();
        let rhs = &(&a.trace() * &b.trace()) - &(&a * &b.adjugate()).trace();
        if lhs != rhs {
            return Err(format!("sample {k}: {lhs} vs {rhs}"));
        }
    }
    Ok("1000 random pairs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("golden four-holed sphere trace", golden_s04),
        ("golden one-holed torus matrix", golden_s11),
        ("generator identities", generator_identities),
        ("top-term campaign", theorem_campaign),
        ("parabolicity", parabolicity),
        ("twist conversion golden values", twist_conversion),
        ("oracle agreement", oracle_agreement),
        ("twist equivariance", twist_equivariance),
        ("FLP round trip", flp_round_trip),
        ("trace identity", trace_identity),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("criterion {:>2} PASS {name}: {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {msg}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
