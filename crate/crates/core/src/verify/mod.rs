//! Exhaustive verification of the structural and classification properties
//! over all elements of a group up to a given length.

mod battery;

pub use battery::{check_element, names, Context};

use crate::coxeter::{CoxeterSystem, Element};
use crate::error::Result;
use rayon::prelude::*;
use std::collections::HashSet;
use std::fmt;

/// Counts for one property.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    pub failed: u64,
    /// First failure, in sweep order.
    pub example: Option<String>,
    /// Records an alternative reading; failures here do not fail the sweep.
    pub informational: bool,
}

impl Tally {
    pub fn passed(&self) -> bool {
        self.informational || self.failed == 0
    }
}

/// Per-property tallies in a fixed order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(&'static str, Tally)>,
}

impl Report {
    fn slot(&mut self, name: &'static str) -> &mut Tally {
        let pos = match self.entries.iter().position(|(n, _)| *n == name) {
            Some(p) => p,
            None => {
                self.entries.push((name, Tally::default()));
                self.entries.len() - 1
            }
        };
        &mut self.entries[pos].1
    }

    pub fn record(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let slot = self.slot(name);
        slot.checked += 1;
        if !ok {
            slot.failed += 1;
            if slot.example.is_none() {
                slot.example = Some(detail());
            }
        }
    }

    /// Like [`Report::record`] for a property that is only being compared.
    pub fn observe(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.slot(name).informational = true;
        self.record(name, ok, detail);
    }

    /// Adds `count` checks at once, `failed` of which failed.
    pub fn record_many(&mut self, name: &'static str, count: u64, failed: u64, detail: impl FnOnce() -> String) {
        let slot = self.slot(name);
        slot.checked += count;
        slot.failed += failed;
        if failed > 0 && slot.example.is_none() {
            slot.example = Some(detail());
        }
    }

    /// Makes sure `name` appears even if nothing was checked.
    pub fn touch(&mut self, name: &'static str) {
        self.slot(name);
    }

    pub fn merge(&mut self, other: Report) {
        for (name, t) in other.entries {
            let slot = self.slot(name);
            slot.checked += t.checked;
            slot.failed += t.failed;
            slot.informational |= t.informational;
            if slot.example.is_none() {
                slot.example = t.example;
            }
        }
    }

    pub fn get(&self, name: &str) -> Option<&Tally> {
        self.entries.iter().find(|(n, _)| *n == name).map(|(_, t)| t)
    }

    pub fn entries(&self) -> &[(&'static str, Tally)] {
        &self.entries
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|(_, t)| t.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|(n, _)| n.chars().count()).max().unwrap_or(0);
        for (name, t) in &self.entries {
            let status = match (t.failed, t.informational) {
                (0, _) => "pass",
                (_, true) => "info",
                _ => "FAIL",
            };
            write!(f, "{status}  {name:<width$}  {:>9} checked  {:>7} failed", t.checked, t.failed)?;
            if let Some(ex) = &t.example {
                write!(f, "  e.g. {ex}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// All elements of length at most `max_len`, ordered by length then
/// canonical word.
pub fn elements_up_to(sys: &CoxeterSystem, max_len: usize) -> Result<Vec<Element>> {
    let mut all = vec![sys.identity()];
    let mut seen: HashSet<Vec<u8>> = HashSet::from([Vec::new()]);
    let mut layer = vec![sys.identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for u in &layer {
            for s in sys.generators().iter() {
                if u.right_descents().contains(s) {
                    continue;
                }
                let us = sys.mult_right(u, s)?;
                if seen.insert(us.word().to_vec()) {
                    next.push(us);
                }
            }
        }
        next.sort();
        all.extend(next.iter().cloned());
        layer = next;
    }
    Ok(all)
}

/// Tuning for the battery.
#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    /// Largest interval on which every perfect matching is also tested.
    pub all_matchings_limit: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { all_matchings_limit: 24 }
    }
}

/// Runs the battery on every element of length at most `max_len`, in
/// parallel, merging reports in element order.
pub fn sweep(sys: &CoxeterSystem, max_len: usize, opts: SweepOptions) -> Result<Report> {
    let elements = elements_up_to(sys, max_len)?;
    sweep_elements(sys, &elements, opts)
}

pub fn sweep_elements(sys: &CoxeterSystem, elements: &[Element], opts: SweepOptions) -> Result<Report> {
    let reports = elements
        .par_iter()
        .map(|w| check_element(sys, w, opts))
        .collect::<Result<Vec<_>>>()?;
    let mut total = Report::default();
    for r in reports {
        total.merge(r);
    }
    Ok(total)
}
