use std::path::PathBuf;
use std::process::{Command as Process, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rkdual::{Check, Document, Suite};
use rkdual_core::cells::{cellular_complex, phi, OrientationPair};
use rkdual_core::linalg::Ring;
use rkdual_core::mccrory::verify_cap_chain_map;
use rkdual_core::simplicial::{random_kspace, SimplicialComplex};

const CORPUS: [&str; 6] = ["pt", "edge", "tri", "circ3", "hex", "id2"];

fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(format!("{name}.json"))
}

fn corpus() -> Vec<(&'static str, Document)> {
    CORPUS
        .iter()
        .map(|&n| (n, Document::read(&corpus_path(n)).expect("corpus documents load")))
        .collect()
}

/// Runs `check` on every subject of every corpus document; returns failures.
fn on_corpus(check: Check, ring: Ring) -> Vec<String> {
    let mut out = Vec::new();
    for (name, doc) in corpus() {
        let mut suite = Suite::new(ring);
        for s in &doc.subjects {
            match suite.build(&s.kspace) {
                Ok(b) => match suite.check(check, &s.name, &b) {
                    Ok(bad) => out.extend(bad.into_iter().map(|d| format!("{name}/{}: {d}", s.name))),
                    Err(e) => out.push(format!("{name}/{}: {e}", s.name)),
                },
                Err(e) => out.push(format!("{name}/{}: {e}", s.name)),
            }
        }
    }
    out
}

fn differential_soundness() -> Vec<String> {
    let start = Instant::now();
    let mut bad = on_corpus(Check::Differentials, Ring::Integers);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut suite = Suite::new(Ring::Integers);
    for i in 0..100 {
        let ks = random_kspace(&mut rng);
        let outcome = suite.build(&ks).and_then(|b| suite.check(Check::Differentials, "random", &b));
        match outcome {
            Ok(d) => bad.extend(d.into_iter().map(|d| format!("random-{i}: {d}"))),
            Err(e) => bad.push(format!("random-{i}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(30) {
        bad.push(format!("took {elapsed:?}"));
    }
    bad
}

fn betti_of_dual(doc: &str) -> Vec<usize> {
    let doc = Document::read(&corpus_path(doc)).expect("corpus documents load");
    let ks = &doc.subjects[0].kspace;
    let cc = cellular_complex(ks, &OrientationPair::standard(ks)).expect("cellular complex");
    let p = phi(&cc).expect("Φ");
    let h = p.duality.complex().underlying().homology(Ring::Integers).expect("homology");
    let top = ks.x.dimension();
    (0..=top)
        .map(|q| {
            let g = h.get(&q).cloned().unwrap_or_default();
            assert!(g.torsion.is_empty(), "no torsion expected");
            g.betti
        })
        .collect()
}

fn theorem_mt() -> Vec<String> {
    let mut bad = on_corpus(Check::Mt, Ring::Integers);
    for (doc, expected) in [("hex", vec![1, 1]), ("id2", vec![1, 0, 0]), ("circ3", vec![1, 1])] {
        let got = betti_of_dual(doc);
        if got != expected {
            bad.push(format!("{doc}: H(TΔ*X) has Betti numbers {got:?}, expected {expected:?}"));
        }
    }
    bad
}

fn theorem_cheq() -> Vec<String> {
    let mut bad = on_corpus(Check::Cheq, Ring::Integers);
    bad.extend(on_corpus(Check::Cheq, Ring::IntegersMod(2)).into_iter().map(|d| format!("Z/2: {d}")));
    bad
}

fn appendix_proposition() -> Vec<String> {
    let bases: [(&str, SimplicialComplex); 4] = [
        ("Δ1", SimplicialComplex::full_simplex(1)),
        ("Δ2", SimplicialComplex::full_simplex(2)),
        ("Δ3", SimplicialComplex::full_simplex(3)),
        ("∂Δ2", SimplicialComplex::simplex_boundary(2)),
    ];
    let mut bad = Vec::new();
    for (name, k) in bases {
        let flat = k.dimension() < 2;
        match verify_cap_chain_map(&Arc::new(k)) {
            Ok(r) if r.passed() && r.identities_checked > 0 && (flat || r.pairs_checked > 0) => {}
            Ok(r) => bad.push(format!("{name}: {r:?}")),
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }
    bad
}

fn ball_combinatorics() -> Vec<String> {
    let mut bad = on_corpus(Check::BallComplex, Ring::Integers);
    for (doc, expected) in [("edge", vec![3, 2]), ("id2", vec![7, 9, 3]), ("hex", vec![12, 12])] {
        let d = Document::read(&corpus_path(doc)).expect("corpus documents load");
        let census = rkdual_core::cells::ball_complex(&d.subjects[0].kspace).census();
        if census != expected {
            bad.push(format!("{doc}: census {census:?}, expected {expected:?}"));
        }
    }
    bad
}

fn naturality() -> Vec<String> {
    let mut bad = Vec::new();
    for (name, doc) in corpus() {
        let mut suite = Suite::new(Ring::Integers);
        suite.run(&doc.subjects, &doc.arrows, &[], &[Check::Naturality]);
        bad.extend(suite.verdicts.iter().filter(|v| !v.passed).map(|v| format!("{name}: {}", v.subject)));
        if name == "hex" && !suite.verdicts.iter().any(|v| v.subject == "pi: pi → id(K)") {
            bad.push("hex: the projection onto the circle was not checked".into());
        }
    }
    bad
}

fn determinism() -> Vec<String> {
    let run = |doc: &str| {
        Process::new(env!("CARGO_BIN_EXE_rkdual"))
            .args(["verify", corpus_path(doc).to_str().expect("utf-8 path"), "--format", "json"])
            .output()
            .expect("rkdual runs")
    };
    let mut bad = Vec::new();
    for doc in CORPUS {
        let (a, b) = (run(doc), run(doc));
        if !a.status.success() {
            bad.push(format!("{doc}: exit {:?}", a.status.code()));
        }
        if a.stdout != b.stdout || a.stdout.is_empty() {
            bad.push(format!("{doc}: reports differ"));
        }
    }
    bad
}

type Criterion = (&'static str, fn() -> Vec<String>);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("differential soundness", differential_soundness),
        ("Φ is an isomorphism and H(TΔ*X) = H(X)", theorem_mt),
        ("e has acyclic diagonal cones over Z and Z/2", theorem_cheq),
        ("cap product identities and sign-reversing pairing", appendix_proposition),
        ("fundamental cycles of the cells", || on_corpus(Check::Fnc, Ring::Integers)),
        ("C_X, C_X Φ_X and e T(C_X Φ_X) are equivalences", || on_corpus(Check::Che, Ring::Integers)),
        ("ball complex combinatorics", ball_combinatorics),
        ("naturality of Φ", naturality),
        ("determinism of verify reports", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let bad = run();
        let tag = if bad.is_empty() { "PASS" } else { "FAIL" };
        println!("{tag} {}: {name} ({} ms)", i + 1, start.elapsed().as_millis());
        for d in bad.iter().take(20) {
            println!("    {d}");
        }
        failed += usize::from(!bad.is_empty());
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
