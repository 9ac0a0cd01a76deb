//! Deterministic CSV, Markdown and JSON outputs.

use std::fmt::Write;

use serde::Serialize;

use crate::decomp::Decomposition;
use crate::homology::GradedGroup;

/// Rows `J,degree,rank,torsion`, one per nonzero `(J, degree)`.
pub fn summands_csv(d: &Decomposition) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["J", "degree", "rank", "torsion"]).expect("in-memory write");
    for s in &d.summands {
        for (deg, g) in s.group.iter() {
            w.write_record([s.j.label(), deg.to_string(), g.rank.to_string(), g.torsion_label()])
                .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8")
}

/// Markdown document built from titled sections.
#[derive(Debug, Default)]
pub struct Report {
    title: String,
    body: String,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report {
            title: title.into(),
            body: String::new(),
        }
    }

    pub fn line(&mut self, text: impl AsRef<str>) -> &mut Report {
        self.body.push_str(text.as_ref());
        self.body.push('\n');
        self
    }

    pub fn section(&mut self, heading: &str) -> &mut Report {
        let _ = write!(self.body, "\n## {heading}\n\n");
        self
    }

    pub fn table(&mut self, header: &[&str], rows: &[Vec<String>]) -> &mut Report {
        let _ = writeln!(self.body, "| {} |", header.join(" | "));
        let _ = writeln!(self.body, "|{}", "---|".repeat(header.len()));
        for r in rows {
            let _ = writeln!(self.body, "| {} |", r.join(" | "));
        }
        self
    }

    pub fn graded(&mut self, label: &str, g: &GradedGroup) -> &mut Report {
        self.line(format!("- {label}: {g}"));
        self.line(format!("  - Betti: {:?}", g.betti()))
    }

    pub fn decomposition(&mut self, d: &Decomposition) -> &mut Report {
        let rows: Vec<Vec<String>> = d
            .summands
            .iter()
            .map(|s| {
                vec![
                    s.j.label(),
                    s.shift.to_string(),
                    if s.skipped { "skipped".into() } else { s.group.to_string() },
                ]
            })
            .collect();
        self.table(&["J", "shift", "summand"], &rows);
        self.line("");
        self.graded("total", &d.total)
    }

    pub fn to_markdown(&self) -> String {
        format!("# {}\n{}", self.title, self.body)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::SimplicialComplex;
    use crate::decomp::hochster_table;
    use crate::homology::Coefficients;
    use crate::spheres::SpherePairSpec;

    #[test]
    fn four_cycle_csv() {
        let k = SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
        let d = hochster_table(&k, &SpherePairSpec::uniform(4, 0), Coefficients::Integers, false).unwrap();
        let csv = summands_csv(&d);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "J,degree,rank,torsion");
        assert!(lines.contains(&"\"{1,3}\",1,1,"));
        assert!(lines.contains(&"\"{1,2,3,4}\",2,1,"));
        let md = Report::new("t").decomposition(&d).to_markdown();
        assert!(md.contains("H1=Z^2"));
    }
}
