use std::fmt::Write as _;

use serde::Serialize;

/// Conventions that deviate from the printed formulas, stated in every report.
pub const NOTICES: [&str; 2] = [
    "ε(Q) = 1 for single-simplex flags (q = 0), so 0-cells of X_K map to +⟨b(T)⟩",
    "the 0-cell sign exponent is read as dim T",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(title: impl Into<String>, columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            title: title.into(),
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(Into::into).collect());
    }
}

/// Outcome of one check on one subject; `detail` lists counterexamples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub subject: String,
    pub passed: bool,
    pub detail: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub ring: String,
    pub notices: Vec<String>,
    pub tables: Vec<Table>,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub coverage: Vec<String>,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &str, ring: impl ToString) -> Self {
        Report {
            command: command.to_string(),
            ring: ring.to_string(),
            notices: NOTICES.iter().map(|s| s.to_string()).collect(),
            tables: Vec::new(),
            verdicts: Vec::new(),
            coverage: Vec::new(),
            passed: true,
        }
    }

    pub fn add_verdicts(&mut self, verdicts: impl IntoIterator<Item = Verdict>) {
        for v in verdicts {
            self.passed &= v.passed;
            self.verdicts.push(v);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "rkdual {} over {}", self.command, self.ring);
        for n in &self.notices {
            let _ = writeln!(s, "note: {n}");
        }
        for t in &self.tables {
            let _ = writeln!(s, "\n== {} ==", t.title);
            let mut widths: Vec<usize> = t.columns.iter().map(|c| c.chars().count()).collect();
            for row in &t.rows {
                for (i, cell) in row.iter().enumerate() {
                    if i < widths.len() {
                        widths[i] = widths[i].max(cell.chars().count());
                    }
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let w = widths.get(i).copied().unwrap_or(0);
                        format!("{c}{}", " ".repeat(w.saturating_sub(c.chars().count())))
                    })
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(s, "{}", line(&t.columns));
            for row in &t.rows {
                let _ = writeln!(s, "{}", line(row));
            }
        }
        if !self.verdicts.is_empty() {
            s.push('\n');
        }
        for v in &self.verdicts {
            let tag = if v.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{tag} {} [{}]", v.check, v.subject);
            for d in &v.detail {
                let _ = writeln!(s, "    {d}");
            }
        }
        let total = self.verdicts.len();
        let failed = self.failures().count();
        let _ = writeln!(
            s,
            "\nresult: {} ({} of {total} checks passed)",
            if self.passed { "PASS" } else { "FAIL" },
            total - failed
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_flip_the_result() {
        let mut r = Report::new("verify", "Z");
        r.add_verdicts([Verdict {
            check: "mt".into(),
            subject: "pi".into(),
            passed: true,
            detail: vec![],
        }]);
        assert!(r.passed);
        r.add_verdicts([Verdict {
            check: "fnc".into(),
            subject: "pi".into(),
            passed: false,
            detail: vec!["(x0|a)".into()],
        }]);
        assert!(!r.passed);
        let text = r.to_text();
        assert!(text.contains("FAIL fnc [pi]\n    (x0|a)\n"));
        assert!(text.ends_with("result: FAIL (1 of 2 checks passed)\n"));
    }

    #[test]
    fn tables_are_aligned() {
        let mut r = Report::new("homology", "Z");
        let mut t = Table::new("homology of X", ["complex", "H0", "H1"]);
        t.push(["X", "Z", "Z"]);
        t.push(["TΔ*X", "Z", "Z"]);
        r.tables.push(t);
        let text = r.to_text();
        assert!(text.contains("complex  H0  H1\nX        Z   Z\nTΔ*X     Z   Z\n"), "{text}");
    }
}
