use super::{Check, Failure, Format, MatrixSource, ReportFormat, Target};
use coxmatch::bruhat::{Interval, Side};
use coxmatch::io::{hasse_dot, matching_dot, IntervalDocument, MatchingDocument};
use coxmatch::matchings::{enumerate_special_capped, n_configurations, Matching};
use coxmatch::systems::{
    enumerate_left_systems, enumerate_right_systems, eval_simple, systems_equal_rl, systems_equal_rr, CsReading,
    RlReading, RrReading, System,
};
use coxmatch::verify::{sweep as run_sweep, SweepOptions};
use serde::Serialize;

type Outcome = Result<(), Failure>;

fn label(iv: &Interval, i: usize) -> String {
    iv.format(i)
}

fn describe_matching(iv: &Interval, m: &Matching) -> String {
    let pairs: Vec<String> = m.pairs().into_iter().map(|(a, b)| format!("{}<->{}", label(iv, a), label(iv, b))).collect();
    format!("M(e)={}  {}", label(iv, m.partner(0)), pairs.join(", "))
}

pub fn interval(target: &Target) -> Outcome {
    let iv = target.interval()?;
    match target.format {
        Format::Json => say!("{}", IntervalDocument::from_interval(&iv).to_json()),
        Format::Dot => emit!("{}", hasse_dot(&iv)),
        Format::Table => {
            say!("[e, {}]: {} elements, rank profile {:?}", label(&iv, iv.top()), iv.len(), iv.hasse().rank_profile());
            for i in 0..iv.len() {
                let below: Vec<String> = iv.hasse().lower_covers(i).iter().map(|&j| label(&iv, j)).collect();
                say!("{i:>5}  {:<24} covers {}", label(&iv, i), below.join(", "));
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct MatchingsOutput {
    interval: IntervalDocument,
    matchings: Vec<MatchingDocument>,
}

pub fn matchings(target: &Target, check: Option<Check>, map: Option<&str>) -> Outcome {
    let iv = target.interval()?;
    if let Some(spec) = map {
        return test_map(&iv, spec);
    }
    let (found, stats) = enumerate_special_capped(iv.hasse(), target.size_cap)?;
    match target.format {
        Format::Json => {
            let out = MatchingsOutput {
                interval: IntervalDocument::from_interval(&iv),
                matchings: found.iter().map(MatchingDocument::from_matching).collect(),
            };
            say!("{}", serde_json::to_string_pretty(&out).expect("plain data serializes"));
        }
        Format::Dot => {
            for (k, m) in found.iter().enumerate() {
                emit!("{}", matching_dot(&iv, m, &format!("matching_{k}")));
            }
        }
        Format::Table => {
            say!("{} special matchings of [e, {}]", found.len(), label(&iv, iv.top()));
            for m in &found {
                say!("  {}", describe_matching(&iv, m));
            }
        }
    }
    if check == Some(Check::NAvoiding) {
        eprintln!(
            "n-avoiding check: {} candidates, {} pruned early, {} disagreements",
            stats.candidates, stats.pruned, stats.disagreements
        );
        if stats.disagreements > 0 {
            return Err(Failure::Verification(format!("{} disagreements", stats.disagreements)));
        }
    }
    Ok(())
}

/// Tests `u ↦ u^I s u_I` given as `I:s`.
fn test_map(iv: &Interval, spec: &str) -> Outcome {
    let sys = iv.system();
    let (gens, s) = spec
        .rsplit_once(':')
        .ok_or_else(|| coxmatch::Error::Parse(format!("expected GENS:S, got `{spec}`")))?;
    let j = sys.parse_genset(gens)?;
    let s = sys.generator(s.trim())?;
    if !j.contains(s) {
        return Err(coxmatch::Error::Parse(format!("{} is not in {}", sys.name(s), sys.format_genset(j))).into());
    }
    let name = format!("u -> u^I {} u_I, I = {}", sys.name(s), sys.format_genset(j));
    let mut map = Vec::with_capacity(iv.len());
    let mut escaped = Vec::new();
    for u in 0..iv.len() {
        let v = eval_simple(iv, j, s, u)?;
        if v.is_none() {
            escaped.push(label(iv, u));
        }
        map.push(v);
    }
    if !escaped.is_empty() {
        say!("{name}: {} of {} images are not below w", escaped.len(), iv.len());
        say!("  from {}", escaped.join(", "));
        return Err(Failure::Verification(format!("{name} is not a matching of [e, w]")));
    }
    let m = match Matching::from_map(iv.hasse(), &map) {
        Ok(m) => m,
        Err(e) => return Err(Failure::Verification(format!("{name}: {e}"))),
    };
    let configs = n_configurations(iv.hasse(), &m);
    if configs.is_empty() {
        say!("{name}: special matching");
        say!("  {}", describe_matching(iv, &m));
        return Ok(());
    }
    say!("{name}: matching with {} N-configurations", configs.len());
    for c in &configs {
        let q: Vec<String> = c.quadruple(&m).iter().map(|&x| label(iv, x)).collect();
        say!("  ({})", q.join(", "));
    }
    Err(Failure::Verification(format!("{name} is not special")))
}

#[derive(Serialize)]
struct SystemOutput {
    side: &'static str,
    j: Vec<String>,
    s: String,
    t: String,
    m_st: Vec<[String; 2]>,
}

impl SystemOutput {
    fn new(iv: &Interval, r: &System) -> Self {
        let sys = iv.system();
        SystemOutput {
            side: if r.side == Side::Right { "right" } else { "left" },
            j: r.j.iter().map(|g| sys.name(g).to_string()).collect(),
            s: sys.name(r.s).to_string(),
            t: sys.name(r.t).to_string(),
            m_st: r
                .m_st
                .pairs()
                .into_iter()
                .map(|(a, b)| [sys.format_word(iv.element(r.part.members[a]).word()), sys.format_word(iv.element(r.part.members[b]).word())])
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct SystemsOutput {
    right: Vec<SystemOutput>,
    left: Vec<SystemOutput>,
    matchings: Vec<MatchingDocument>,
    special: usize,
}

pub fn systems(target: &Target, list: bool, verify: bool) -> Outcome {
    let iv = target.interval()?;
    let right = enumerate_right_systems(&iv)?;
    let left = enumerate_left_systems(&iv)?;
    let with_matching = |all: &[System]| -> Result<Vec<(System, Matching)>, Failure> {
        all.iter()
            .map(|r| match r.matching(&iv)? {
                Some(m) => Ok((r.clone(), m)),
                None => Err(Failure::Verification(format!("{} does not give a matching", r.describe(&iv)))),
            })
            .collect()
    };
    let right = with_matching(&right)?;
    let left = with_matching(&left)?;
    let mut from_systems: Vec<Matching> = right.iter().chain(&left).map(|(_, m)| m.clone()).collect();
    from_systems.sort();
    from_systems.dedup();
    let (special, _) = enumerate_special_capped(iv.hasse(), target.size_cap)?;

    match target.format {
        Format::Json => {
            let out = SystemsOutput {
                right: right.iter().map(|(r, _)| SystemOutput::new(&iv, r)).collect(),
                left: left.iter().map(|(r, _)| SystemOutput::new(&iv, r)).collect(),
                matchings: from_systems.iter().map(MatchingDocument::from_matching).collect(),
                special: special.len(),
            };
            say!("{}", serde_json::to_string_pretty(&out).expect("plain data serializes"));
        }
        Format::Dot => {
            for (k, m) in from_systems.iter().enumerate() {
                emit!("{}", matching_dot(&iv, m, &format!("system_matching_{k}")));
            }
        }
        Format::Table => {
            say!("w = {}", label(&iv, iv.top()));
            say!("right systems: {}", right.len());
            say!("left systems: {}", left.len());
            if list {
                for (r, _) in right.iter().chain(&left) {
                    say!("  {}", r.describe(&iv));
                }
            }
            say!("matchings from systems: {}", from_systems.len());
            say!("special matchings: {}", special.len());
        }
    }

    if !verify {
        return Ok(());
    }
    let mut problems = Vec::new();
    let relation = if from_systems == special { "=" } else { "!=" };
    eprintln!("classification: {} {relation} {}", from_systems.len(), special.len());
    if from_systems != special {
        problems.push("system matchings differ from brute force".to_string());
    }
    let mut rr = (0, 0);
    for (a, (ra, ma)) in right.iter().enumerate() {
        for (rb, mb) in &right[a..] {
            rr.0 += 1;
            if systems_equal_rr(&iv, ra, rb, RrReading::SupportRestricted) != (ma == mb) {
                rr.1 += 1;
            }
        }
    }
    let mut rl = (0, 0);
    for (r, mr) in &right {
        for (l, ml) in &left {
            rl.0 += 1;
            if systems_equal_rl(&iv, r, l, RlReading::ReversedOnSupport, CsReading::Includes) != (mr == ml) {
                rl.1 += 1;
            }
        }
    }
    eprintln!("right/right criterion: {} pairs, {} mismatches", rr.0, rr.1);
    eprintln!("right/left criterion: {} pairs, {} mismatches", rl.0, rl.1);
    if rr.1 > 0 || rl.1 > 0 {
        problems.push("equality criteria disagree with the matchings".to_string());
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(problems.join("; ")))
    }
}

#[derive(Serialize)]
struct SweepLine<'a> {
    property: &'a str,
    checked: u64,
    failed: u64,
    informational: bool,
    example: Option<&'a str>,
}

pub fn sweep(source: &MatrixSource, maxlen: usize, all_matchings_limit: usize, format: ReportFormat) -> Outcome {
    let sys = source.system()?;
    let report = run_sweep(&sys, maxlen, SweepOptions { all_matchings_limit })?;
    match format {
        ReportFormat::Json => {
            let lines: Vec<SweepLine> = report
                .entries()
                .iter()
                .map(|(name, t)| SweepLine {
                    property: name,
                    checked: t.checked,
                    failed: t.failed,
                    informational: t.informational,
                    example: t.example.as_deref(),
                })
                .collect();
            say!("{}", serde_json::to_string_pretty(&lines).expect("plain data serializes"));
        }
        ReportFormat::Table => emit!("{report}"),
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Verification("some properties failed".into()))
    }
}
