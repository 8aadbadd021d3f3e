use std::collections::BTreeMap;
use std::sync::Arc;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rkdual_core::cells::{cellular_complex, OrientationPair};
use rkdual_core::linalg::{ChainComplex, Ring};
use rkdual_core::rk::delta_complexes;
use rkdual_core::simplicial::{barycentric_subdivision, random_kspace, SimplicialComplex};
use rkdual_core::tensor::{delta_star_k, duality};

use crate::cellfile::{emit_cells, render_cells};
use crate::document::{Document, InputError, Subject};
use crate::report::{Report, Table};
use crate::suite::{format_homology, Check, Suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Validate,
    Subdivide,
    BallComplex,
    Dualize,
    Homology,
    Verify,
    Random,
    Cells,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Subdivide => "subdivide",
            Command::BallComplex => "ball-complex",
            Command::Dualize => "dualize",
            Command::Homology => "homology",
            Command::Verify => "verify",
            Command::Random => "random",
            Command::Cells => "cells",
        }
    }
}

/// Checks run on each random K-space.
pub const RANDOM_CHECKS: [Check; 6] = [
    Check::Complexes,
    Check::Differentials,
    Check::BallComplex,
    Check::Cellular,
    Check::Mt,
    Check::Fnc,
];

#[derive(Clone, Debug)]
pub struct Options {
    pub ring: Option<Ring>,
    pub seed: u64,
    pub count: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            ring: None,
            seed: 0,
            count: 100,
        }
    }
}

pub enum Output {
    Report(Report),
    Cells(String),
}

impl Output {
    /// `0` when every requested check passed, `1` otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            Output::Report(r) if !r.passed => 1,
            _ => 0,
        }
    }
}

fn f_vector(c: &SimplicialComplex) -> String {
    (0..=c.dimension()).map(|q| c.of_dim(q).len().to_string()).collect::<Vec<_>>().join(" ")
}

/// Distinct base complexes of the subjects, named as in the document.
fn bases(doc: &Document) -> Vec<(String, Arc<SimplicialComplex>)> {
    let mut out: Vec<(String, Arc<SimplicialComplex>)> = Vec::new();
    for s in &doc.subjects {
        let k = &s.kspace.k;
        if out.iter().any(|(_, b)| b == k) {
            continue;
        }
        let name = doc
            .complexes
            .iter()
            .find(|(_, c)| *c == k)
            .map_or_else(|| "K".to_string(), |(n, _)| n.clone());
        out.push((name, k.clone()));
    }
    out
}

fn suite_report(command: Command, doc: &Document, ring: Ring, checks: &[Check]) -> Report {
    let mut suite = Suite::new(ring);
    suite.run(&doc.subjects, &doc.arrows, &bases(doc), checks);
    let mut report = Report::new(command.name(), ring);
    report.tables = suite.tables;
    report.add_verdicts(suite.verdicts);
    if command == Command::Verify {
        report.coverage = suite.coverage.iter().map(|s| s.to_string()).collect();
    }
    report
}

fn homology_table(subject: &Subject, ring: Ring) -> Result<Table, rkdual_core::Error> {
    let ks = &subject.kspace;
    let d = delta_complexes(ks)?;
    let cc = cellular_complex(ks, &OrientationPair::standard(ks))?;
    let t = duality(&d.delta_star, &delta_star_k(&ks.k))?;
    let rows: [(&str, ChainComplex); 4] = [
        ("X", ks.x.chain_complex()),
        ("ΔX'", d.delta_prime.underlying()),
        ("C(X_K)", cc.complex().underlying()),
        ("TΔ*X", t.complex().underlying()),
    ];
    let mut groups = Vec::new();
    let mut degrees = std::collections::BTreeSet::new();
    for (name, c) in rows {
        let h = c.homology(ring)?;
        degrees.extend(h.iter().filter(|(_, g)| !g.is_zero()).map(|(&q, _)| q));
        groups.push((name, h));
    }
    let mut columns = vec!["complex".to_string()];
    columns.extend(degrees.iter().map(|q| format!("H{q}")));
    let mut table = Table::new(format!("homology [{}]", subject.name), columns);
    for (name, h) in groups {
        let mut row = vec![name.to_string()];
        row.extend(
            degrees
                .iter()
                .map(|q| h.get(q).map_or_else(|| "0".to_string(), |g| format_homology(ring, g))),
        );
        table.push(row);
    }
    Ok(table)
}

fn table_or_failure(report: &mut Report, subject: &str, table: Result<Table, rkdual_core::Error>) {
    match table {
        Ok(t) => report.tables.push(t),
        Err(e) => report.add_verdicts([crate::report::Verdict {
            check: "construction".into(),
            subject: subject.to_string(),
            passed: false,
            detail: vec![format!("error: {e}")],
        }]),
    }
}

fn dualize_tables(subject: &Subject) -> Result<Vec<Table>, rkdual_core::Error> {
    let ks = &subject.kspace;
    let d = delta_complexes(ks)?;
    let t = duality(&d.delta_star, &delta_star_k(&ks.k))?;
    let c = t.complex();
    let mut gens = Table::new(format!("TΔ*X generators [{}]", subject.name), ["degree", "generator", "label"]);
    let mut diffs = Table::new(format!("TΔ*X differentials [{}]", subject.name), ["degree", "from", "to", "coefficient"]);
    for q in c.degrees() {
        for g in c.generators(q) {
            gens.push([q.to_string(), g.name.clone(), ks.k.simplex_name(g.label)]);
        }
        let m = c.differential(q);
        let (from, to) = (c.generators(q), c.generators(q - 1));
        let mut entries: Vec<(usize, usize, i64)> = m.iter().map(|(r, col, &v)| (r, col, v)).collect();
        entries.sort_by_key(|&(r, col, _)| (col, r));
        for (r, col, v) in entries {
            diffs.push([q.to_string(), from[col].name.clone(), to[r].name.clone(), v.to_string()]);
        }
    }
    Ok(vec![gens, diffs])
}

fn require(doc: Option<&Document>) -> Result<&Document, InputError> {
    doc.ok_or_else(|| InputError::Invalid("this command needs an input document".into()))
}

pub fn run(command: Command, doc: Option<&Document>, opts: &Options) -> Result<Output, InputError> {
    let ring = opts.ring.or(doc.map(|d| d.ring)).unwrap_or(Ring::Integers);
    let report = match command {
        Command::Validate => {
            let doc = require(doc)?;
            let mut report = suite_report(command, doc, ring, &[Check::Complexes]);
            let mut t = Table::new("complexes", ["name", "f-vector", "χ"]);
            for (name, c) in &doc.complexes {
                t.push([name.clone(), f_vector(c), c.euler_characteristic().to_string()]);
            }
            let mut s = Table::new("K-spaces", ["name", "vertices of X", "vertices of K"]);
            for subject in &doc.subjects {
                let ks = &subject.kspace;
                s.push([subject.name.clone(), ks.x.vertex_count().to_string(), ks.k.vertex_count().to_string()]);
            }
            let mut a = Table::new("maps of K-spaces", ["name"]);
            for arrow in &doc.arrows {
                a.push([arrow.name.clone()]);
            }
            report.tables.splice(0..0, [t, s, a]);
            report
        }
        Command::Subdivide => {
            let doc = require(doc)?;
            let mut report = suite_report(command, doc, ring, &[Check::Complexes]);
            for subject in &doc.subjects {
                let ks = &subject.kspace;
                let xd = barycentric_subdivision(&ks.x);
                let mut t = Table::new(format!("X' [{}]", subject.name), ["f-vector", "χ(X')", "χ(X)"]);
                t.push([
                    f_vector(&xd.prime),
                    xd.prime.euler_characteristic().to_string(),
                    ks.x.euler_characteristic().to_string(),
                ]);
                report.tables.push(t);
                let table = delta_complexes(ks).map(|d| {
                    let mut t = Table::new(format!("ΔX' by label [{}]", subject.name), ["label", "degree", "rank"]);
                    for ((label, q), r) in d.delta_prime.ranks_by_label() {
                        t.push([ks.k.simplex_name(label), q.to_string(), r.to_string()]);
                    }
                    t
                });
                table_or_failure(&mut report, &subject.name, table);
            }
            report
        }
        Command::BallComplex => {
            let doc = require(doc)?;
            suite_report(command, doc, ring, &[Check::BallComplex, Check::Cellular])
        }
        Command::Dualize => {
            let doc = require(doc)?;
            let mut report = suite_report(command, doc, ring, &[Check::Differentials]);
            for subject in &doc.subjects {
                match dualize_tables(subject) {
                    Ok(tables) => report.tables.extend(tables),
                    Err(e) => table_or_failure(&mut report, &subject.name, Err(e)),
                }
            }
            report
        }
        Command::Homology => {
            let doc = require(doc)?;
            let mut report = Report::new(command.name(), ring);
            for subject in &doc.subjects {
                table_or_failure(&mut report, &subject.name, homology_table(subject, ring));
            }
            report
        }
        Command::Verify => {
            let doc = require(doc)?;
            suite_report(command, doc, ring, &doc.checks)
        }
        Command::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let subjects: Vec<Subject> = (0..opts.count)
                .map(|i| Subject {
                    name: format!("random-{i}"),
                    kspace: random_kspace(&mut rng),
                })
                .collect();
            let mut suite = Suite::new(ring);
            suite.run(&subjects, &[], &[], &RANDOM_CHECKS);
            let mut report = Report::new(command.name(), ring);
            let mut t = Table::new(
                format!("random sweep (seed {}, count {})", opts.seed, opts.count),
                ["check", "passed", "total"],
            );
            let mut tally: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
            for v in &suite.verdicts {
                let e = tally.entry(v.check.as_str()).or_default();
                e.0 += usize::from(v.passed);
                e.1 += 1;
            }
            for c in RANDOM_CHECKS {
                let (p, n) = tally.get(c.name()).copied().unwrap_or_default();
                t.push([c.name().to_string(), p.to_string(), n.to_string()]);
            }
            report.tables.push(t);
            let failures: Vec<_> = suite.verdicts.into_iter().filter(|v| !v.passed).collect();
            report.passed = failures.is_empty();
            report.verdicts = failures;
            report
        }
        Command::Cells => {
            let doc = require(doc)?;
            let mut out = String::new();
            for subject in &doc.subjects {
                let ks = &subject.kspace;
                let cc = cellular_complex(ks, &OrientationPair::standard(ks))
                    .map_err(|e| InputError::Invalid(format!("{}: {e}", subject.name)))?;
                out.push_str(&format!("# {}\n", subject.name));
                out.push_str(&render_cells(&emit_cells(&cc)));
            }
            return Ok(Output::Cells(out));
        }
    };
    Ok(Output::Report(report))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CIRCLE: &str = r#"{"complexes": {"K": {"simplices": [["a","b"],["b","c"],["a","c"]]}}}"#;

    #[test]
    fn circle_homology_table() {
        let doc = Document::parse(CIRCLE).unwrap();
        let Output::Report(r) = run(Command::Homology, Some(&doc), &Options::default()).unwrap() else {
            panic!("homology gives a report");
        };
        let t = &r.tables[0];
        assert_eq!(t.columns, ["complex", "H0", "H1"]);
        for row in &t.rows {
            assert_eq!(row[1..], ["Z", "Z"], "{}", row[0]);
        }
    }

    #[test]
    fn random_sweep_is_seeded() {
        let opts = Options {
            count: 3,
            ..Options::default()
        };
        let a = run(Command::Random, None, &opts).unwrap();
        let b = run(Command::Random, None, &opts).unwrap();
        match (a, b) {
            (Output::Report(a), Output::Report(b)) => {
                assert!(a.passed);
                assert_eq!(a, b);
            }
            _ => panic!("random gives a report"),
        }
    }

    #[test]
    fn failed_checks_give_exit_code_one() {
        let mut r = Report::new("verify", Ring::Integers);
        assert_eq!(Output::Report(r.clone()).exit_code(), 0);
        r.add_verdicts([crate::report::Verdict {
            check: "mt".into(),
            subject: "pi".into(),
            passed: false,
            detail: vec![],
        }]);
        assert_eq!(Output::Report(r).exit_code(), 1);
        assert_eq!(Output::Cells(String::new()).exit_code(), 0);
    }

    #[test]
    fn commands_other_than_random_need_a_document() {
        assert!(run(Command::Verify, None, &Options::default()).is_err());
    }
}
