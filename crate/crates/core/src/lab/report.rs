use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;
use std::time::Duration;

use crate::enumerate::Mode;
use crate::error::{Error, Result};
use crate::tournament::Tournament;

use super::properties::{Property, Solved, Status};

/// Witnesses kept per check; the smallest `(order, source)` ones survive a
/// merge, so the kept set does not depend on how work was split.
pub const MAX_WITNESSES: usize = 3;

/// Where a tournament in a sweep came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Source {
    /// Labeled enumeration index.
    Index(u64),
    /// Position in a seeded random sample.
    Sample(u64),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Index(i) => write!(f, "index={i}"),
            Source::Sample(i) => write!(f, "sample={i}"),
        }
    }
}

/// A tournament on which a property failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub property: Property,
    pub source: Source,
    pub tournament: Tournament,
}

impl Witness {
    fn key(&self) -> (usize, Source) {
        (self.tournament.order(), self.source)
    }

    /// Re-evaluates the property on the stored tournament; `true` when the
    /// violation reproduces.
    pub fn replay(&self) -> Result<bool> {
        Ok(!self.property.holds(&Solved::new(&self.tournament))?)
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "witness:{} n={} {}",
            self.property,
            self.tournament.order(),
            self.source
        );
        for line in self.tournament.to_matrix_string().lines() {
            let _ = writeln!(out, "witness: {line}");
        }
    }
}

/// Pass/violation counts and retained witnesses for one property.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: u64,
    pub viol: u64,
    pub witnesses: Vec<Witness>,
}

impl Tally {
    fn add_witness(&mut self, w: Witness) {
        self.witnesses.push(w);
        self.trim();
    }

    fn trim(&mut self) {
        self.witnesses.sort_by_key(Witness::key);
        self.witnesses.dedup_by_key(|w| w.key());
        self.witnesses.truncate(MAX_WITNESSES);
    }

    fn merge(&mut self, other: Tally) {
        self.pass += other.pass;
        self.viol += other.viol;
        self.witnesses.extend(other.witnesses);
        self.trim();
    }
}

/// What a sweep covered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scope {
    pub orders: RangeInclusive<usize>,
    pub mode: Mode,
    /// Random tournaments per order instead of exhaustive enumeration.
    pub sample: Option<u64>,
    pub seed: u64,
}

/// Result of a sweep. Merging is associative and commutative in everything
/// but `timings`, which are excluded from [`HarnessReport::body`].
#[derive(Debug, Clone, PartialEq)]
pub struct HarnessReport {
    pub scope: Scope,
    pub checks: BTreeMap<Property, Tally>,
    pub timings: Vec<(String, Duration)>,
}

impl HarnessReport {
    pub fn new(scope: Scope, properties: &[Property]) -> Self {
        HarnessReport {
            scope,
            checks: properties.iter().map(|&p| (p, Tally::default())).collect(),
            timings: Vec::new(),
        }
    }

    pub fn record(&mut self, property: Property, source: Source, t: &Tournament, held: bool) {
        let tally = self.checks.entry(property).or_default();
        if held {
            tally.pass += 1;
        } else {
            tally.viol += 1;
            tally.add_witness(Witness { property, source, tournament: t.clone() });
        }
    }

    pub fn merge(mut self, other: HarnessReport) -> HarnessReport {
        for (p, tally) in other.checks {
            self.checks.entry(p).or_default().merge(tally);
        }
        self.timings.extend(other.timings);
        self
    }

    pub fn hard_violations(&self) -> u64 {
        self.violations(Status::Hard)
    }

    pub fn findings(&self) -> u64 {
        self.violations(Status::Conjectural)
    }

    fn violations(&self, status: Status) -> u64 {
        self.checks
            .iter()
            .filter(|(p, _)| p.status() == status)
            .map(|(_, t)| t.viol)
            .sum()
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &Witness> {
        self.checks.values().flat_map(|t| t.witnesses.iter())
    }

    /// The deterministic part of the report.
    pub fn body(&self) -> String {
        let mut out = String::new();
        let s = &self.scope;
        let sample = s.sample.map_or("none".to_string(), |k| k.to_string());
        let _ = writeln!(
            out,
            "scope: orders={}..{} mode={} sample={}",
            s.orders.start(),
            s.orders.end(),
            s.mode,
            sample
        );
        let _ = writeln!(out, "seed: {}", s.seed);
        for (p, t) in &self.checks {
            let _ = writeln!(out, "check:{p} pass={} viol={}", t.pass, t.viol);
        }
        for (p, t) in &self.checks {
            if p.status() == Status::Conjectural {
                for w in &t.witnesses {
                    let _ = writeln!(
                        out,
                        "FINDING {p} n={} {}",
                        w.tournament.order(),
                        w.source
                    );
                }
            }
        }
        for w in self.witnesses() {
            w.render(&mut out);
        }
        out
    }

    /// The body followed by per-phase wall-clock lines.
    pub fn render(&self) -> String {
        let mut out = self.body();
        for (phase, d) in &self.timings {
            let _ = writeln!(out, "time:{phase} {}ms", d.as_millis());
        }
        out
    }
}

/// Extracts the witnesses embedded in a rendered report.
pub fn parse_witnesses(report: &str) -> Result<Vec<Witness>> {
    let mut out = Vec::new();
    let mut lines = report.lines().enumerate().peekable();
    while let Some((no, line)) = lines.next() {
        let Some(rest) = line.strip_prefix("witness:") else { continue };
        if rest.starts_with(' ') {
            continue;
        }
        let malformed = |message: String| Error::MalformedInput { line: no + 1, message };
        let mut fields = rest.split_whitespace();
        let property: Property = fields
            .next()
            .ok_or_else(|| malformed("missing property".into()))?
            .parse()
            .map_err(malformed)?;
        let _order = fields.next();
        let source = match fields.next().and_then(|f| f.split_once('=')) {
            Some(("index", v)) => Source::Index(v.parse().map_err(|_| malformed("bad index".into()))?),
            Some(("sample", v)) => {
                Source::Sample(v.parse().map_err(|_| malformed("bad sample".into()))?)
            }
            _ => return Err(malformed("missing source".into())),
        };
        let mut matrix = String::new();
        while let Some((_, l)) = lines.peek() {
            match l.strip_prefix("witness: ") {
                Some(row) => {
                    matrix.push_str(row);
                    matrix.push('\n');
                    lines.next();
                }
                None => break,
            }
        }
        out.push(Witness { property, source, tournament: Tournament::parse(&matrix)? });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn scope() -> Scope {
        Scope { orders: 3..=3, mode: Mode::Labeled, sample: None, seed: 0 }
    }

    #[test]
    fn keeps_smallest_witnesses_regardless_of_merge_order() {
        let t = fixtures::three_cycle();
        let mut parts = Vec::new();
        for i in [9u64, 2, 7, 4, 1] {
            let mut r = HarnessReport::new(scope(), &[Property::MeUnique]);
            r.record(Property::MeUnique, Source::Index(i), &t, false);
            parts.push(r);
        }
        let forward = parts.iter().cloned().reduce(HarnessReport::merge).unwrap();
        let backward = parts.into_iter().rev().reduce(HarnessReport::merge).unwrap();
        assert_eq!(forward.body(), backward.body());
        let kept: Vec<_> = forward.checks[&Property::MeUnique]
            .witnesses
            .iter()
            .map(|w| w.source)
            .collect();
        assert_eq!(kept, vec![Source::Index(1), Source::Index(2), Source::Index(4)]);
        assert_eq!(forward.findings(), 5);
        assert_eq!(forward.hard_violations(), 0);
    }

    #[test]
    fn witnesses_round_trip_through_text() {
        let mut r = HarnessReport::new(scope(), &[Property::BaInUc]);
        r.record(Property::BaInUc, Source::Sample(5), &fixtures::f2(), false);
        r.timings.push(("order 3".into(), Duration::from_millis(4)));
        let text = r.render();
        assert!(text.contains("check:ba-in-uc pass=0 viol=1"));
        assert!(text.contains("time:order 3 4ms"));
        assert!(!r.body().contains("time:"));
        let ws = parse_witnesses(&text).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].tournament, fixtures::f2());
        assert_eq!(ws[0].source, Source::Sample(5));
        assert!(!ws[0].replay().unwrap());
    }
}
