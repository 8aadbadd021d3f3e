use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;
use std::sync::Arc;

use rkdual_core::cells::{
    ball_complex, cell_name, cellular_complex, check_ball_complex, check_boundary_formula, check_codimension_one,
    check_naturality, dual_cell, dual_cone, induced_ball_map, phi, BallComplex, CellularComplex, OrientationPair,
};
use rkdual_core::linalg::{is_cone_acyclic, ChainComplex, HomologyGroup, Ring};
use rkdual_core::mccrory::{
    c_x_map, cap_lex, cap_product, check_factorization, flag_sign, verify_cap_chain_map, verify_equivalences,
    verify_fundamental_cycles,
};
use rkdual_core::rk::{
    assemble, check_full, check_star_pieces, delta_complexes, dual_star, epsilon, hom_rk, star_sequence,
    DeltaComplexes, Generator, Order, RKComplex,
};
use rkdual_core::simplicial::{barycentric_subdivision, derived_map, validate_kspace, KSpace, SimplicialComplex};
use rkdual_core::tensor::{
    check_filtration_step, concentrated_signs, delta_star_k, duality, e_transform, pi_projection, psi_iso,
    tensor_k, tensor_r, verify_e_equivalence, Duality,
};

use crate::cellfile::{emit_cells, parse_cells, render_cells};
use crate::document::{Arrow, Subject};
use crate::report::{Table, Verdict};

/// Library operations a full `verify` run must reach.
pub const OPERATIONS: [&str; 36] = [
    "assemble",
    "ball_complex",
    "barycentric_subdivision",
    "c_x_map",
    "cap_product",
    "cellular_complex",
    "chain_complex",
    "check_filtration_step",
    "check_star_pieces",
    "delta_complexes",
    "derived_map",
    "dual_cell",
    "dual_cone",
    "dual_star",
    "duality",
    "e_transform",
    "emit_cells",
    "epsilon",
    "flag_sign",
    "hom_rk",
    "homology",
    "incidence_number",
    "induced_ball_map",
    "is_cone_acyclic",
    "phi",
    "pi_projection",
    "psi_iso",
    "smith_normal_form",
    "star_sequence",
    "tensor_k",
    "tensor_r",
    "validate_kspace",
    "verify_cap_chain_map",
    "verify_e_equivalence",
    "verify_equivalences",
    "verify_fundamental_cycles",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Complexes,
    Differentials,
    Duals,
    FullSubsets,
    StarPieces,
    Tensor,
    Cheq,
    BallComplex,
    Cellular,
    Mt,
    Naturality,
    Appendix,
    Fnc,
    Che,
    Cells,
}

impl Check {
    pub const ALL: [Check; 15] = [
        Check::Complexes,
        Check::Differentials,
        Check::Duals,
        Check::FullSubsets,
        Check::StarPieces,
        Check::Tensor,
        Check::Cheq,
        Check::BallComplex,
        Check::Cellular,
        Check::Mt,
        Check::Naturality,
        Check::Appendix,
        Check::Fnc,
        Check::Che,
        Check::Cells,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Complexes => "complexes",
            Check::Differentials => "differentials",
            Check::Duals => "duals",
            Check::FullSubsets => "full-subsets",
            Check::StarPieces => "star-pieces",
            Check::Tensor => "tensor",
            Check::Cheq => "cheq",
            Check::BallComplex => "ball-complex",
            Check::Cellular => "cellular",
            Check::Mt => "mt",
            Check::Naturality => "naturality",
            Check::Appendix => "appendix",
            Check::Fnc => "fnc",
            Check::Che => "che",
            Check::Cells => "cells",
        }
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Check, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

/// Everything derived from one K-space that the checks share.
pub struct Built {
    pub kspace: KSpace,
    pub delta: DeltaComplexes,
    pub delta_star_k: Arc<RKComplex>,
    pub balls: BallComplex,
    pub cellular: CellularComplex,
    pub dual: Duality,
    pub double_dual: Duality,
}

type Outcome = Result<Vec<String>, rkdual_core::Error>;

/// Runs checks and records which library operations they reached.
pub struct Suite {
    pub ring: Ring,
    pub coverage: BTreeSet<&'static str>,
    pub tables: Vec<Table>,
    pub verdicts: Vec<Verdict>,
}

pub fn format_homology(ring: Ring, h: &HomologyGroup) -> String {
    if h.is_zero() {
        return "0".into();
    }
    let r = ring.to_string();
    let mut parts = Vec::new();
    match h.betti {
        0 => {}
        1 => parts.push(r.clone()),
        n if ring.is_field() && r.contains('/') => parts.push(format!("({r})^{n}")),
        n => parts.push(format!("{r}^{n}")),
    }
    parts.extend(h.torsion.iter().map(|t| format!("Z/{t}")));
    parts.join("+")
}

pub fn format_ranks(ranks: &BTreeMap<i32, usize>) -> String {
    let parts: Vec<String> = ranks.iter().filter(|(_, &r)| r > 0).map(|(q, r)| format!("{q}:{r}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

fn nonzero_homology(c: &ChainComplex, ring: Ring) -> Result<BTreeMap<i32, HomologyGroup>, rkdual_core::Error> {
    Ok(c.homology(ring)?.into_iter().filter(|(_, h)| !h.is_zero()).collect())
}

fn describe(h: &BTreeMap<i32, HomologyGroup>, ring: Ring) -> String {
    if h.is_empty() {
        return "0".into();
    }
    h.iter().map(|(q, g)| format!("H{q}={}", format_homology(ring, g))).collect::<Vec<_>>().join(" ")
}

fn concentrated(k: &Arc<SimplicialComplex>, label: usize, degrees: &[i32]) -> Result<Arc<RKComplex>, rkdual_core::Error> {
    let modules = degrees.iter().map(|&q| (q, vec![Generator::new(label, format!("g{q}"))])).collect();
    Ok(Arc::new(RKComplex::new(k.clone(), Order::Original, modules, Default::default())?))
}

impl Suite {
    pub fn new(ring: Ring) -> Self {
        Suite {
            ring,
            coverage: BTreeSet::new(),
            tables: Vec::new(),
            verdicts: Vec::new(),
        }
    }

    fn hit(&mut self, op: &'static str) {
        self.coverage.insert(op);
    }

    fn record(&mut self, check: Check, subject: &str, outcome: Outcome) {
        let (passed, detail) = match outcome {
            Ok(detail) => (detail.is_empty(), detail),
            Err(e) => (false, vec![format!("error: {e}")]),
        };
        self.verdicts.push(Verdict {
            check: check.name().to_string(),
            subject: subject.to_string(),
            passed,
            detail,
        });
    }

    pub fn build(&mut self, ks: &KSpace) -> Result<Built, rkdual_core::Error> {
        self.hit("delta_complexes");
        let delta = delta_complexes(ks)?;
        let dk = delta_star_k(&ks.k);
        self.hit("ball_complex");
        let balls = ball_complex(ks);
        self.hit("cellular_complex");
        let cellular = cellular_complex(ks, &OrientationPair::standard(ks))?;
        self.hit("duality");
        let dual = duality(&delta.delta_star, &dk)?;
        let double_dual = duality(dual.complex(), &dk)?;
        Ok(Built {
            kspace: ks.clone(),
            delta,
            delta_star_k: dk,
            balls,
            cellular,
            dual,
            double_dual,
        })
    }

    /// Runs the requested per-subject checks, then naturality on the arrows
    /// and the cap-product identities on each distinct base complex.
    pub fn run(&mut self, subjects: &[Subject], arrows: &[Arrow], bases: &[(String, Arc<SimplicialComplex>)], checks: &[Check]) {
        let mut built: Vec<Option<Built>> = Vec::with_capacity(subjects.len());
        for s in subjects {
            match self.build(&s.kspace) {
                Ok(b) => {
                    for &c in checks {
                        if !matches!(c, Check::Naturality | Check::Appendix) {
                            let outcome = self.check(c, &s.name, &b);
                            self.record(c, &s.name, outcome);
                        }
                    }
                    built.push(Some(b));
                }
                Err(e) => {
                    for &c in checks {
                        if c != Check::Appendix {
                            self.record(c, &s.name, Err(e.clone()));
                        }
                    }
                    built.push(None);
                }
            }
        }
        if checks.contains(&Check::Naturality) {
            for a in arrows {
                let outcome = match (&built[a.source], &built[a.target]) {
                    (Some(from), Some(to)) => self.naturality(a, from, to),
                    _ => Ok(vec!["a K-space of this map failed to build".into()]),
                };
                self.record(Check::Naturality, &a.name, outcome);
            }
        }
        if checks.contains(&Check::Appendix) {
            for (name, k) in bases {
                let outcome = self.appendix(k);
                self.record(Check::Appendix, name, outcome);
            }
        }
    }

    pub fn check(&mut self, check: Check, subject: &str, b: &Built) -> Outcome {
        match check {
            Check::Complexes => self.complexes(b),
            Check::Differentials => self.differentials(subject, b),
            Check::Duals => self.duals(b),
            Check::FullSubsets => self.full_subsets(b),
            Check::StarPieces => self.star_pieces(b),
            Check::Tensor => self.tensor(b),
            Check::Cheq => self.cheq(subject, b),
            Check::BallComplex => self.ball(subject, b),
            Check::Cellular => self.cellular(b),
            Check::Mt => self.mt(subject, b),
            Check::Fnc => self.fnc(b),
            Check::Che => self.che(b),
            Check::Cells => self.cells(b),
            Check::Naturality | Check::Appendix => Ok(vec![]),
        }
    }

    fn complexes(&mut self, b: &Built) -> Outcome {
        let ks = &b.kspace;
        let (x, k) = (&ks.x, &ks.k);
        let mut bad = Vec::new();
        self.hit("validate_kspace");
        validate_kspace(x.clone(), k.clone(), ks.pi.vertex_map().to_vec())?;
        self.hit("chain_complex");
        for (name, c) in [("X", x), ("K", k)] {
            if c.chain_complex().check_d_squared().is_err() {
                bad.push(format!("∂∂ ≠ 0 on {name}"));
            }
        }
        self.hit("incidence_number");
        for i in 0..x.len() {
            for &(f, s) in x.faces(i) {
                let (up, down) = (x.oriented(i), x.oriented(f));
                if x.incidence_number(&up, &down)? != s || x.incidence_number(&up.flipped(), &down)? != -s {
                    bad.push(format!("[{}, {}] disagrees with the boundary", x.simplex_name(i), x.simplex_name(f)));
                }
            }
        }
        self.hit("barycentric_subdivision");
        let (xd, kd) = (barycentric_subdivision(x), barycentric_subdivision(k));
        if xd.prime.vertex_count() != x.len() {
            bad.push("X' has the wrong number of vertices".into());
        }
        if xd.prime.euler_characteristic() != x.euler_characteristic() {
            bad.push("χ(X') ≠ χ(X)".into());
        }
        self.hit("derived_map");
        if let Err(e) = derived_map(ks, &xd, &kd) {
            bad.push(format!("π' is not simplicial: {e}"));
        }
        Ok(bad)
    }

    fn differentials(&mut self, subject: &str, b: &Built) -> Outcome {
        let mut bad = Vec::new();
        self.hit("dual_star");
        if dual_star(&b.delta.delta) != *b.delta.delta_star {
            bad.push("Δ*X differs from the dual of ΔX".into());
        }
        let list: [(&str, &RKComplex); 6] = [
            ("Δ*X", &b.delta.delta_star),
            ("ΔX", &b.delta.delta),
            ("ΔX'", &b.delta.delta_prime),
            ("C(X_K)", b.cellular.complex()),
            ("TΔ*X", b.dual.complex()),
            ("T²Δ*X", b.double_dual.complex()),
        ];
        let mut table = Table::new(format!("ranks [{subject}]"), ["complex", "ranks (degree:rank)"]);
        for (name, c) in list {
            if let Err(e) = c.underlying().check_d_squared() {
                bad.push(format!("{name}: {e}"));
            }
            if let Err(e) = c.check_support() {
                bad.push(format!("{name}: {e}"));
            }
            table.push([name.to_string(), format_ranks(&c.ranks())]);
        }
        self.tables.push(table);
        Ok(bad)
    }

    fn duals(&mut self, b: &Built) -> Outcome {
        let mut bad = Vec::new();
        self.hit("epsilon");
        for (name, c) in [
            ("ΔX", &b.delta.delta),
            ("Δ*X", &b.delta.delta_star),
            ("C(X_K)", b.cellular.complex()),
        ] {
            let e = epsilon(c);
            if !(e.is_basis_bijection() && e.is_diagonal() && e.is_chain_map()) {
                bad.push(format!("ε on {name} is not a diagonal chain isomorphism"));
            }
        }
        self.hit("hom_rk");
        let c = &b.delta.delta_star;
        let hom = hom_rk(c, c)?;
        let entries = hom.entries(0);
        let identity: Vec<usize> = entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.source_degree == e.target_degree && e.source == e.target)
            .map(|(n, _)| n)
            .collect();
        if identity.len() != c.total_rank() {
            bad.push("Hom(Δ*X, Δ*X) misses identity entries".into());
        }
        let d = hom.complex.differential(0);
        let mut image = BTreeMap::new();
        for (r, col, v) in d.iter() {
            if identity.binary_search(&col).is_ok() {
                *image.entry(r).or_insert(0i64) += v;
            }
        }
        if image.values().any(|&v| v != 0) {
            bad.push("the identity is not a cycle of Hom(Δ*X, Δ*X)".into());
        }
        Ok(bad)
    }

    fn full_subsets(&mut self, b: &Built) -> Outcome {
        let k = &b.kspace.k;
        let mut bad = Vec::new();
        self.hit("star_sequence");
        for sigma in 0..k.len() {
            check_full(k, &k.star(sigma))?;
            if let Err(e) = star_sequence(&b.delta.delta, sigma) {
                bad.push(format!("star sequence at {}: {e}", k.simplex_name(sigma)));
            }
        }
        self.hit("assemble");
        let everything: Vec<usize> = (0..k.len()).collect();
        let whole = assemble(&b.delta.delta, &everything)?;
        if nonzero_homology(&whole, self.ring)? != nonzero_homology(&b.kspace.x.chain_complex(), self.ring)? {
            bad.push("ΔX assembled over K has the wrong homology".into());
        }
        Ok(bad)
    }

    fn star_pieces(&mut self, b: &Built) -> Outcome {
        let k = &b.kspace.k;
        let mut bad = Vec::new();
        self.hit("check_star_pieces");
        for top in (0..k.len()).filter(|&s| k.is_maximal(s)) {
            let report = check_star_pieces(k, top, self.ring)?;
            for p in report.pieces.iter().filter(|p| !p.ok) {
                bad.push(format!("{} at {}: ranks {}", report.maximal, p.sigma, format_ranks(&p.ranks)));
            }
        }
        Ok(bad)
    }

    fn tensor(&mut self, b: &Built) -> Outcome {
        let mut bad = Vec::new();
        self.hit("tensor_r");
        let full = tensor_r(&b.delta.delta, &b.delta_star_k)?;
        self.hit("tensor_k");
        let star = tensor_k(&b.delta.delta, &b.delta_star_k)?;
        self.hit("pi_projection");
        let p = pi_projection(&full, &star)?;
        if !(p.is_chain_map() && p.is_diagonal()) {
            bad.push("π is not a diagonal chain map".into());
        }
        for q in star.complex.degrees() {
            let m = p.component(q);
            let onto = (0..m.rows()).all(|r| {
                let row: Vec<_> = m.row(r).collect();
                row.len() == 1 && *row[0].1 == 1
            });
            if !onto || m.nnz() != m.rows() {
                bad.push(format!("π is not a basis projection in degree {q}"));
            }
        }
        self.hit("psi_iso");
        let psi = psi_iso(&b.dual.tensor)?;
        if !(psi.map.is_basis_bijection() && psi.map.is_chain_map()) {
            bad.push("Ψ is not a chain isomorphism".into());
        }
        Ok(bad)
    }

    fn cheq(&mut self, subject: &str, b: &Built) -> Outcome {
        let dk = &b.delta_star_k;
        let mut bad = Vec::new();
        self.hit("e_transform");
        self.hit("verify_e_equivalence");
        let list: [(&str, &Arc<RKComplex>); 3] = [
            ("Δ*X", &b.delta.delta_star),
            ("ΔX'", &b.delta.delta_prime),
            ("C(X_K)", &b.cellular.tensor.complex),
        ];
        for (name, c) in list {
            let e = e_transform(c, dk)?;
            if !e.map.is_chain_map() {
                bad.push(format!("e on {name} is not a chain map"));
            }
            for v in verify_e_equivalence(c, dk, self.ring)? {
                if !v.acyclic_cone {
                    bad.push(format!("e on {name}: cone at {} is not acyclic", v.name));
                }
            }
        }
        self.hit("check_filtration_step");
        if let Some(f) = check_filtration_step(&b.delta.delta_star, dk)? {
            if !f.passed() {
                bad.push(format!("filtration step at {} fails: {f:?}", b.kspace.k.simplex_name(f.top)));
            }
        }
        let k = &b.kspace.k;
        let mut table = Table::new(format!("e on concentrated complexes [{subject}]"), ["maximal simplex", "degree", "sign"]);
        for top in (0..k.len()).filter(|&s| k.is_maximal(s)) {
            let c = concentrated(k, top, &[-1, 0, 1, 2])?;
            let signs = concentrated_signs(&e_transform(&c, dk)?)?;
            for (q, s) in signs {
                let expected = if (q * k.dim(top)).rem_euclid(2) == 0 { 1 } else { -1 };
                if s != expected {
                    bad.push(format!("sign {s} in degree {q} at {}", k.simplex_name(top)));
                }
                table.push([k.simplex_name(top), q.to_string(), format!("{s:+}")]);
            }
        }
        self.tables.push(table);
        Ok(bad)
    }

    fn ball(&mut self, subject: &str, b: &Built) -> Outcome {
        let ks = &b.kspace;
        let report = check_ball_complex(ks, &b.balls);
        let mut bad: Vec<String> = Vec::new();
        bad.extend(report.bad_dimension.iter().map(|c| format!("wrong dimension: {c}")));
        bad.extend(report.bad_boundary.iter().map(|c| format!("wrong boundary: {c}")));
        bad.extend(report.bad_partition.iter().map(|c| format!("partition: {c}")));
        let (a, p, x) = report.euler;
        if !(a == p && p == x) {
            bad.push(format!("χ(X_K) = {a}, χ(X') = {p}, χ(X) = {x}"));
        }
        let mut table = Table::new(format!("cells of X_K [{subject}]"), ["dimension", "cells"]);
        for (q, n) in report.census.iter().enumerate() {
            table.push([q.to_string(), n.to_string()]);
        }
        self.tables.push(table);

        let k = &ks.k;
        let kd = barycentric_subdivision(k);
        self.hit("dual_cone");
        for sigma in 0..k.len() {
            let apex = kd.prime.index_of(&[kd.barycenter(sigma)]);
            let cone = dual_cone(k, &kd, sigma);
            if apex.is_none_or(|a| !cone.contains(&a)) {
                bad.push(format!("D({}, K) misses its apex", k.simplex_name(sigma)));
            }
        }
        self.hit("dual_cell");
        let xd = &b.balls.derived;
        for c in &b.balls.cells {
            let mut listed = c.simplices.clone();
            listed.sort_unstable();
            if dual_cell(ks, xd, c.sigma, c.top) != listed {
                bad.push(format!("dual cell of {} disagrees", cell_name(ks, c.top, c.sigma)));
            }
        }
        Ok(bad)
    }

    fn cellular(&mut self, b: &Built) -> Outcome {
        let mut bad = Vec::new();
        if let Err(e) = check_boundary_formula(&b.cellular) {
            bad.push(format!("boundary formula: {e}"));
        }
        if let Err(e) = check_codimension_one(&b.cellular, &b.balls) {
            bad.push(format!("codimension one: {e}"));
        }
        self.hit("homology");
        let ours = nonzero_homology(&b.cellular.complex().underlying(), self.ring)?;
        let theirs = nonzero_homology(&b.kspace.x.chain_complex(), self.ring)?;
        if ours != theirs {
            bad.push(format!("H(X_K) {} ≠ H(X) {}", describe(&ours, self.ring), describe(&theirs, self.ring)));
        }
        Ok(bad)
    }

    fn mt(&mut self, subject: &str, b: &Built) -> Outcome {
        let mut bad = Vec::new();
        self.hit("phi");
        let p = phi(&b.cellular)?;
        if !p.map.is_basis_bijection() {
            bad.push("Φ is not a degreewise bijection".into());
        }
        if !p.map.is_diagonal() {
            bad.push("Φ is not diagonal".into());
        }
        if let Err(e) = p.map.check_chain_map() {
            bad.push(format!("Φ: {e}"));
        }
        self.hit("is_cone_acyclic");
        let k = &b.kspace.k;
        for sigma in 0..k.len() {
            if !is_cone_acyclic(self.ring, &p.map.diagonal(sigma)?)? {
                bad.push(format!("Φ at {} has a non-acyclic cone", k.simplex_name(sigma)));
            }
        }
        self.hit("homology");
        let dual = nonzero_homology(&p.duality.complex().underlying(), self.ring)?;
        let x = nonzero_homology(&b.kspace.x.chain_complex(), self.ring)?;
        let mut table = Table::new(format!("homology [{subject}]"), ["complex", "homology"]);
        table.push(["X".to_string(), describe(&x, self.ring)]);
        table.push(["TΔ*X".to_string(), describe(&dual, self.ring)]);
        self.tables.push(table);
        if dual != x {
            bad.push("H(TΔ*X) ≠ H(X)".into());
        }
        Ok(bad)
    }

    fn naturality(&mut self, a: &Arrow, from: &Built, to: &Built) -> Outcome {
        let mut bad = Vec::new();
        self.hit("induced_ball_map");
        let f_k = induced_ball_map(&a.map, &from.cellular, &to.cellular)?;
        if !f_k.is_chain_map() {
            bad.push("f_K is not a chain map".into());
        }
        if !check_naturality(&a.map, &from.cellular, &to.cellular)? {
            bad.push("Φ_Y ∘ T(f*) ≠ f_K ∘ Φ_X".into());
        }
        Ok(bad)
    }

    fn appendix(&mut self, k: &Arc<SimplicialComplex>) -> Outcome {
        let mut bad = Vec::new();
        self.hit("verify_cap_chain_map");
        let report = verify_cap_chain_map(k)?;
        if !report.passed() {
            bad.push(format!("cap product: {report:?}"));
        }
        self.hit("flag_sign");
        for &v in k.of_dim(0) {
            if flag_sign(k, &[v])? != 1 {
                bad.push(format!("ε of the single flag {} is not 1", k.simplex_name(v)));
            }
        }
        self.hit("cap_product");
        let kd = barycentric_subdivision(k);
        for tau in 0..k.len() {
            for sigma in k.closure(tau) {
                let (t, s) = (k.oriented(tau), k.oriented(sigma));
                let lex = cap_lex(k, &kd, tau, sigma)?;
                let direct = cap_product(k, &kd, &t, &s)?;
                let flipped = cap_product(k, &kd, &t.flipped(), &s)?;
                let negated: BTreeMap<usize, i64> = flipped.iter().map(|(&a, &v)| (a, -v)).collect();
                if direct != lex || (k.dim(tau) > 0 && negated != direct) {
                    bad.push(format!("cap of {} and {} depends on orientation", k.simplex_name(tau), k.simplex_name(sigma)));
                }
            }
        }
        Ok(bad)
    }

    fn fnc(&mut self, b: &Built) -> Outcome {
        let mut bad = Vec::new();
        self.hit("c_x_map");
        let cx = c_x_map(&b.cellular)?;
        if !check_factorization(&b.cellular, &cx)? {
            bad.push("C_X does not factor through π".into());
        }
        self.hit("verify_fundamental_cycles");
        for cell in verify_fundamental_cycles(&b.cellular, &b.balls, &cx)? {
            bad.push(format!("not a fundamental cycle: {cell}"));
        }
        self.hit("smith_normal_form");
        for q in b.cellular.complex().degrees() {
            let m = cx.map.component(q);
            if Ring::Integers.smith_normal_form(&m).rank != m.cols() {
                bad.push(format!("C_X is not injective in degree {q}"));
            }
        }
        Ok(bad)
    }

    fn che(&mut self, b: &Built) -> Outcome {
        self.hit("verify_equivalences");
        let r = verify_equivalences(&b.cellular, self.ring)?;
        let mut bad = Vec::new();
        for (name, pieces) in [
            ("C_X", &r.cells_to_subdivision),
            ("C_X Φ_X", &r.dual_to_subdivision),
            ("e T(C_X Φ_X)", &r.subdivision_dual_to_cochains),
        ] {
            for p in pieces.iter().filter(|p| !p.acyclic_cone) {
                bad.push(format!("{name} at {} has a non-acyclic cone", p.name));
            }
        }
        if !r.homology_agrees {
            bad.push("H(TΔ*X) ≠ H(ΔX')".into());
        }
        Ok(bad)
    }

    fn cells(&mut self, b: &Built) -> Outcome {
        self.hit("emit_cells");
        let records = emit_cells(&b.cellular);
        let mut bad = Vec::new();
        if records.len() != b.balls.cells.len() {
            bad.push(format!("{} records for {} cells", records.len(), b.balls.cells.len()));
        }
        match parse_cells(&render_cells(&records)) {
            Ok(back) if back == records => {}
            Ok(_) => bad.push("cell file does not round-trip".into()),
            Err(e) => bad.push(format!("cell file does not parse: {e}")),
        }
        Ok(bad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>(), Ok(c));
        }
        assert!("everything".parse::<Check>().is_err());
    }

    #[test]
    fn homology_formatting() {
        let h = HomologyGroup {
            betti: 2,
            torsion: vec![2.into()],
        };
        assert_eq!(format_homology(Ring::Integers, &h), "Z^2+Z/2");
        let f = HomologyGroup {
            betti: 3,
            torsion: vec![],
        };
        assert_eq!(format_homology(Ring::IntegersMod(2), &f), "(Z/2)^3");
        assert_eq!(format_homology(Ring::Rationals, &HomologyGroup::default()), "0");
    }
}
