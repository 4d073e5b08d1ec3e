//! One line per acceptance criterion. Exits non-zero if any criterion fails.

use coxmatch::bruhat::Interval;
use coxmatch::coxeter::{CoxeterSystem, Element};
use coxmatch::matchings::{enumerate_special, is_special_definition, n_configurations, Matching};
use coxmatch::systems::{eval_simple, matchings_from_systems, simple_matching};
use coxmatch::verify::{names, sweep, Report, SweepOptions};
use std::process::ExitCode;
use std::time::{Duration, Instant};

struct Outcome {
    failures: usize,
}

impl Outcome {
    fn line(&mut self, id: u32, ok: bool, what: &str, detail: String) {
        if !ok {
            self.failures += 1;
        }
        println!("criterion {id}: {}  {what}  ({detail})", if ok { "pass" } else { "FAIL" });
    }
}

fn element(sys: &CoxeterSystem, word: &str) -> Element {
    sys.canonicalize(&sys.parse_word(word).unwrap()).unwrap()
}

/// The explicit A4 example: `w = s4 s2 s3 s2 s1`.
fn a4_example(out: &mut Outcome) {
    let start = Instant::now();
    let sys = CoxeterSystem::named("A4").unwrap();
    let iv = Interval::build(&sys, &element(&sys, "s4-s2-s3-s2-s1")).unwrap();
    let s3 = sys.generator("s3").unwrap();

    let good = simple_matching(&iv, sys.parse_genset("s1,s2,s3").unwrap(), s3).unwrap();
    let good_special = good.as_ref().is_some_and(|m| is_special_definition(iv.hasse(), m));

    let quadruple: Vec<usize> = ["s4-s2-s1", "s4-s2-s3", "s4-s2-s3-s1", "s4-s3-s2-s3"]
        .iter()
        .map(|w| iv.index_of(&element(&sys, w)).expect("quadruple lies in [e,w]"))
        .collect();
    let bad = simple_matching(&iv, sys.parse_genset("s2,s3").unwrap(), s3).unwrap();
    let (found, configs) = match &bad {
        Some(m) => {
            let configs = n_configurations(iv.hasse(), m);
            let found = configs.iter().any(|c| c.quadruple(m).to_vec() == quadruple);
            (found, configs.len())
        }
        None => (false, 0),
    };
    let elapsed = start.elapsed();
    out.line(
        1,
        good_special && found && elapsed < Duration::from_secs(1),
        "A4 example: I={s1,s2,s3} gives a special matching, I'={s2,s3} fails on the stated quadruple",
        format!("{configs} N-configurations, {elapsed:.2?}"),
    );

    let s2 = sys.generator("s2").unwrap();
    let i_prime = sys.parse_genset("s2,s3").unwrap();
    let escaping = (0..iv.len()).filter(|&u| eval_simple(&iv, i_prime, s2, u).unwrap().is_none()).count();
    println!("info: with s2 in place of s3, {escaping} of {} images leave [e,w]", iv.len());
}

fn same_set(mut a: Vec<Matching>, mut b: Vec<Matching>) -> bool {
    a.sort_by_key(Matching::pairing);
    b.sort_by_key(Matching::pairing);
    a.dedup();
    b.dedup();
    a == b
}

fn groups() -> Vec<(String, CoxeterSystem, usize)> {
    let mut out: Vec<(String, CoxeterSystem, usize)> = vec![
        ("A3".into(), CoxeterSystem::named("A3").unwrap(), 6),
        ("B3".into(), CoxeterSystem::named("B3").unwrap(), 6),
        ("A4".into(), CoxeterSystem::named("A4").unwrap(), 5),
    ];
    for m in 2..=6 {
        let name = format!("I2:{m}");
        out.push((name.clone(), CoxeterSystem::named(&name).unwrap(), m));
    }
    // beyond the required set: full B3, and a group where the stct
    // hypothesis is actually met (it never is in A3, B3, A4 or I2)
    out.push(("B3".into(), CoxeterSystem::named("B3").unwrap(), 9));
    out.push(("[1 4 2; 4 1 4; 2 4 1]".into(), CoxeterSystem::from_grid("1 4 2\n4 1 4\n2 4 1").unwrap(), 6));
    out
}

/// Classification sweep plus the full property battery on the same elements.
fn sweep_groups(out: &mut Outcome) -> Report {
    let start = Instant::now();
    let mut total = Report::default();
    let (mut checked, mut mismatched) = (0usize, Vec::new());
    for (name, sys, max_len) in groups() {
        for w in coxmatch::verify::elements_up_to(&sys, max_len).unwrap() {
            let iv = Interval::build(&sys, &w).unwrap();
            checked += 1;
            let brute = enumerate_special(&iv).unwrap();
            let from_systems = matchings_from_systems(&iv).unwrap();
            if !same_set(brute, from_systems) {
                mismatched.push(format!("{name} {}", sys.format_word(w.word())));
            }
        }
        total.merge(sweep(&sys, max_len, SweepOptions::default()).unwrap());
    }
    let elapsed = start.elapsed();
    out.line(
        2,
        mismatched.is_empty() && elapsed < Duration::from_secs(600),
        "system matchings equal brute-force special matchings",
        format!("{checked} elements, {} mismatches {:?}, {elapsed:.2?}", mismatched.len(), mismatched.first()),
    );
    total
}

fn from_report(out: &mut Outcome, report: &Report, id: u32, what: &str, props: &[&str]) {
    let mut ok = true;
    let mut parts = Vec::new();
    for name in props {
        match report.get(name) {
            Some(t) if t.checked > 0 => {
                ok &= t.failed == 0;
                parts.push(format!("{name}: {}/{}", t.checked - t.failed, t.checked));
            }
            _ => {
                ok = false;
                parts.push(format!("{name}: never checked"));
            }
        }
    }
    out.line(id, ok, what, parts.join("; "));
}

fn main() -> ExitCode {
    let mut out = Outcome { failures: 0 };
    a4_example(&mut out);
    let report = sweep_groups(&mut out);
    from_report(&mut out, &report, 3, "N-avoidance equals the definition", &[names::N_SEARCH, names::N_ALL]);
    from_report(&mut out, &report, 4, "coset criterion biconditional", &[names::COSET_CRITERION]);
    from_report(&mut out, &report, 5, "three-factor formula consistency", &[names::TRIPLE, names::TRIPLE_COVER]);
    from_report(
        &mut out,
        &report,
        6,
        "structural properties",
        &[names::K32_FREE, names::ORBITS, names::RESTRICT, names::TILDE, names::TILDE_SYSTEMS],
    );
    from_report(
        &mut out,
        &report,
        7,
        "negative membership and commutation",
        &[
            names::RCL,
            names::ST_C_T,
            names::ST_C_ST,
            names::COMMUTE_LAMBDA,
            names::COMMUTE_RHO,
            names::COSET_COMMUTES,
        ],
    );
    from_report(&mut out, &report, 8, "dedup predicates (adopted readings)", &[names::RR_SUPPORT, names::RL_ADOPTED]);
    let literal_evaluated = [names::RR_LITERAL, names::RL_LITERAL, names::RL_WITHOUT_S]
        .iter()
        .all(|n| report.get(n).is_some_and(|t| t.checked > 0));
    println!("info: literal dedup readings evaluated: {literal_evaluated}");
    for (name, t) in report.entries() {
        if t.informational && t.failed > 0 {
            println!("info: {name}: {} of {} disagree", t.failed, t.checked);
        }
    }
    if out.failures == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria fail", out.failures);
        ExitCode::FAILURE
    }
}
