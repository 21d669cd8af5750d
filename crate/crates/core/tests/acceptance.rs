//! Acceptance criteria, one pass/fail line each. Runs as a plain binary so
//! the lines show up in `cargo test` output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tourney::enumerate;
use tourney::lab::{self, AxiomId, HarnessReport, Property, Solved, SweepConfig};
use tourney::stable::{self, is_externally_stable, is_internally_stable};
use tourney::teq::{self, TeqMode};
use tourney::{fixtures, qualified, AltSet, SolutionId};

enum Verdict {
    Pass,
    Fail(String),
    /// Conjectural counterexample: reported, never fails the run.
    Finding(String),
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Verdict,
}

fn check(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn verdict(r: Result<(), String>) -> Verdict {
    r.map_or_else(Verdict::Fail, |()| Verdict::Pass)
}

fn sweep(cfg: SweepConfig) -> Result<HarnessReport, String> {
    lab::sweep(&cfg).map_err(|e| e.to_string())
}

fn zero_violations(r: &HarnessReport) -> Result<(), String> {
    for (p, t) in &r.checks {
        if t.viol > 0 {
            let w = &t.witnesses[0];
            return Err(format!(
                "{p}: {} violations; first witness\n{}",
                t.viol,
                w.tournament.to_matrix_string()
            ));
        }
        if t.pass == 0 {
            return Err(format!("{p}: nothing checked"));
        }
    }
    Ok(())
}

fn c1_f1() -> Verdict {
    verdict((|| {
        let t = fixtures::f1();
        let mc = stable::minimal_covering_set(&t);
        check(mc == AltSet::full(10), format!("MC = {}", mc.display_one_based()))?;
        let me = stable::minimal_extending_set(&t).map_err(|e| e.to_string())?;
        check(
            me.union == AltSet::full(9),
            format!("ME = {}", me.union.display_one_based()),
        )
    })())
}

fn c2_f2() -> Verdict {
    verdict((|| {
        let t = fixtures::f2();
        let me = stable::minimal_extending_set(&t).map_err(|e| e.to_string())?;
        check(me.union == AltSet::full(8), format!("ME = {}", me.union.display_one_based()))?;
        let want = AltSet::full(8).without(4);
        for mode in [TeqMode::Naive, TeqMode::Seeded] {
            let got = teq::teq(&t, mode).map_err(|e| e.to_string())?;
            check(got == want, format!("TEQ({mode}) = {}", got.display_one_based()))?;
        }
        let ba = qualified::banks(&t).map_err(|e| e.to_string())?;
        check(ba.contains(4), format!("BA = {}", ba.display_one_based()))
    })())
}

fn c3_f3() -> Verdict {
    verdict((|| {
        let f3 = fixtures::f3();
        let external = stable::externally_stable_sets(SolutionId::Co, &f3).map_err(|e| e.to_string())?;
        check(external.len() == 8, format!("{} externally stable sets", external.len()))?;
        let both = external
            .iter()
            .filter(|&&b| is_internally_stable(SolutionId::Co, &f3, b).unwrap())
            .count();
        check(both == 0, format!("{both} internally and externally stable sets"))?;
        let big = fixtures::f3_with_cycle_components();
        let all = big.alternatives();
        check(big.order() == 9 && big.is_regular(), "substituted tournament shape")?;
        check(
            is_internally_stable(SolutionId::Co, &big, all).unwrap()
                && is_externally_stable(SolutionId::Co, &big, all).unwrap(),
            "full set of the substituted tournament is not CO-stable",
        )
    })())
}

fn c4_mc_unique() -> Verdict {
    verdict((|| {
        let mut cfg = SweepConfig::exhaustive(6..=6, vec![Property::McUnique]);
        cfg.jobs = 1;
        let r = sweep(cfg)?;
        check(r.checks[&Property::McUnique].pass == 32768, "not all 32768 checked")?;
        zero_violations(&r)
    })())
}

fn c5_oracles() -> Verdict {
    verdict((|| {
        let checks = vec![Property::TcOracle, Property::UcOracle, Property::TeqModes];
        zero_violations(&sweep(SweepConfig::exhaustive(1..=6, checks))?)
    })())
}

fn inclusions() -> Vec<Property> {
    lab::parse_checks("inclusions").unwrap()
}

fn c6_inclusions() -> Verdict {
    verdict((|| {
        zero_violations(&sweep(SweepConfig::exhaustive(1..=6, inclusions()))?)?;
        let r = sweep(SweepConfig::sampled(10..=10, inclusions(), 1000, 6))?;
        check(r.checks[&Property::BaInUc].pass == 1000, "sample size")?;
        zero_violations(&r)
    })())
}

fn c7_equilibrium() -> Verdict {
    verdict((|| {
        zero_violations(&sweep(SweepConfig::exhaustive(1..=6, vec![Property::Equilibrium]))?)?;
        let r = sweep(SweepConfig::sampled(15..=15, vec![Property::Equilibrium], 500, 7))?;
        check(r.checks[&Property::Equilibrium].pass == 500, "sample size")?;
        zero_violations(&r)
    })())
}

fn c8_conjectures() -> Verdict {
    let run = || -> Result<Vec<HarnessReport>, String> {
        Ok(vec![
            sweep(SweepConfig::exhaustive(
                1..=5,
                vec![Property::MeUnique, Property::TeqRetentiveUnique],
            ))?,
            sweep(SweepConfig::exhaustive(6..=6, vec![Property::MeUnique]))?,
        ])
    };
    let reports = match run() {
        Ok(r) => r,
        Err(e) => return Verdict::Fail(e),
    };
    let mut findings = Vec::new();
    for r in &reports {
        for w in r.witnesses() {
            if !w.replay().unwrap_or(false) {
                return Verdict::Fail(format!("witness for {} does not replay", w.property));
            }
            findings.push(format!("FINDING {} {}", w.property, w.source));
        }
    }
    if findings.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Finding(findings.join("; "))
    }
}

fn c9_axioms() -> Verdict {
    verdict((|| {
        for (s, a) in [(SolutionId::Co, AxiomId::Wsp), (SolutionId::Uc, AxiomId::Iua)] {
            let w = lab::find_axiom_witness(s, a, 1..=6)
                .map_err(|e| e.to_string())?
                .ok_or(format!("no {s} {a} witness at n <= 6"))?;
            check(w.replay().unwrap_or(false), format!("{s} {a} witness does not replay"))?;
        }
        for s in [SolutionId::Tc, SolutionId::Mc] {
            for a in [AxiomId::Mon, AxiomId::Iua, AxiomId::Wsp, AxiomId::Ssp] {
                for n in 1..=5 {
                    let tally = lab::axiom_sweep(s, a, n).map_err(|e| e.to_string())?;
                    if let Some(w) = tally.first {
                        return Err(format!("{s} violates {a}:\n{}", w.render()));
                    }
                }
            }
        }
        Ok(())
    })())
}

fn c10_condorcet() -> Verdict {
    verdict((|| {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for i in 0..1000 {
            let n = rng.gen_range(1..=12);
            let w = rng.gen_range(0..n);
            let t = enumerate::random_with_winner(n, w, &mut rng).map_err(|e| e.to_string())?;
            let s = Solved::new(&t);
            for id in [
                SolutionId::Co,
                SolutionId::Uc,
                SolutionId::Ba,
                SolutionId::Tc,
                SolutionId::Mc,
                SolutionId::Me,
                SolutionId::Bp,
                SolutionId::Teq,
            ] {
                let got = s.get(id).map_err(|e| e.to_string())?;
                check(
                    got == AltSet::singleton(w),
                    format!("sample {i}: {id} = {} with winner {}", got.display_one_based(), w + 1),
                )?;
            }
        }
        Ok(())
    })())
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, title: "F1: MC = all 10, ME = {1..9}", limit: Some(Duration::from_secs(10)), run: c1_f1 },
    Criterion {
        id: 2,
        title: "F2: ME = all 8, TEQ = all but 5, 5 in BA",
        limit: Some(Duration::from_secs(10)),
        run: c2_f2,
    },
    Criterion {
        id: 3,
        title: "F3: 8 external CO-stable, 0 strongly stable; substitution stable",
        limit: Some(Duration::from_secs(5)),
        run: c3_f3,
    },
    Criterion {
        id: 4,
        title: "MC unique and equal to the algorithm on all 32768 order-6",
        limit: Some(Duration::from_secs(600)),
        run: c4_mc_unique,
    },
    Criterion { id: 5, title: "TC, UC and TEQ oracle equivalences, n <= 6", limit: None, run: c5_oracles },
    Criterion {
        id: 6,
        title: "hard inclusion chain, n <= 6 plus 1000 random n = 10",
        limit: None,
        run: c6_inclusions,
    },
    Criterion {
        id: 7,
        title: "equilibrium certificates, n <= 6 plus 500 random n = 15",
        limit: None,
        run: c7_equilibrium,
    },
    Criterion {
        id: 8,
        title: "ME and TEQ-retentive uniqueness sweeps",
        limit: None,
        run: c8_conjectures,
    },
    Criterion {
        id: 9,
        title: "axiom witnesses (CO WSP, UC IUA) and TC/MC axioms at n <= 5",
        limit: None,
        run: c9_axioms,
    },
    Criterion {
        id: 10,
        title: "Condorcet consistency on 1000 random n <= 12",
        limit: None,
        run: c10_condorcet,
    },
];

fn main() -> ExitCode {
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for c in &CRITERIA {
        if !filter.is_empty() && !filter.iter().any(|f| c.id.to_string() == *f) {
            continue;
        }
        let start = Instant::now();
        let mut v = (c.run)();
        let elapsed = start.elapsed();
        if let (Verdict::Pass, Some(limit)) = (&v, c.limit) {
            if elapsed > limit {
                v = Verdict::Fail(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        let limit = c.limit.map_or(String::new(), |l| format!(", limit {l:?}"));
        match v {
            Verdict::Pass => println!("criterion {:>2}: PASS  {} ({elapsed:.2?}{limit})", c.id, c.title),
            Verdict::Finding(msg) => {
                println!("criterion {:>2}: PASS  {} ({elapsed:.2?}{limit}) with findings", c.id, c.title);
                println!("              {msg}");
            }
            Verdict::Fail(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {} ({elapsed:.2?}{limit})", c.id, c.title);
                for line in msg.lines() {
                    println!("              {line}");
                }
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
