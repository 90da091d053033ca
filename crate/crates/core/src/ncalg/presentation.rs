//! Named presentations and their declarative text form.
//!
//! The `[algebra]` section of a presentation file lists generators in their
//! fixed monomial order and one `rule:` line per oriented relation:
//!
//! ```text
//! [algebra]
//! name: example
//! generators: a b c d
//! complete-to: 6
//! rule: b*a = q*a*b
//! ```
//!
//! Rendering is canonical (rules in monomial order of their left-hand
//! sides), and `parse(render(p))` reproduces `p` bit-exactly.

use super::expr::{parse_expr, ExprError};
use super::{NCPoly, RewriteError, RewriteSystem, Word};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum PresentationError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Expr {
        line: usize,
        #[source]
        source: ExprError,
    },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("duplicate generator name '{name}'")]
    DuplicateGenerator { name: String },
}

/// Generator names plus the (completed) rewrite system they present.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub name: String,
    gen_names: Vec<String>,
    pub system: RewriteSystem,
}

impl Presentation {
    pub fn new(gen_names: Vec<String>, system: RewriteSystem) -> Presentation {
        assert_eq!(gen_names.len(), system.n_gens());
        Presentation {
            name: String::new(),
            gen_names,
            system,
        }
    }

    pub fn with_name(mut self, name: &str) -> Presentation {
        self.name = name.to_string();
        self
    }

    pub fn n_gens(&self) -> usize {
        self.gen_names.len()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn generator_index(&self, name: &str) -> Option<u8> {
        self.gen_names
            .iter()
            .position(|n| n == name)
            .map(|i| i as u8)
    }

    pub fn render_poly(&self, p: &NCPoly) -> String {
        p.render(&self.gen_names)
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.render(&self.gen_names)
    }

    pub fn parse_poly(&self, text: &str) -> Result<NCPoly, ExprError> {
        parse_expr(self, text)
    }

    /// Canonical `[algebra]` section text. When normal forms are certified
    /// beyond the overlap-completed degree, the certificate (the normal-word
    /// counts) is recorded and re-checked on load.
    pub fn render_algebra_section(&self) -> String {
        let mut out = String::from("[algebra]\n");
        if !self.name.is_empty() {
            out.push_str(&format!("name: {}\n", self.name));
        }
        out.push_str(&format!("generators: {}\n", self.gen_names.join(" ")));
        out.push_str(&format!("complete-to: {}\n", self.system.confluent_cap()));
        let certified = self.system.certified_cap();
        if certified > self.system.confluent_cap() {
            let dims: Vec<String> = (0..=certified)
                .map(|d| self.system.basis_words(d).len().to_string())
                .collect();
            out.push_str(&format!("certified-to: {}\n", certified));
            out.push_str(&format!("dims: {}\n", dims.join(" ")));
        }
        for rule in self.system.rules() {
            out.push_str(&format!(
                "rule: {} = {}\n",
                rule.lhs.render(&self.gen_names),
                rule.rhs.render(&self.gen_names)
            ));
        }
        out
    }
}

pub(crate) struct RawSection {
    pub header: String,
    pub lines: Vec<(usize, String, String)>, // (line number, key, value)
}

/// Split a presentation file into sections of `key: value` lines.
pub(crate) fn split_sections(text: &str) -> Result<Vec<RawSection>, PresentationError> {
    let mut sections: Vec<RawSection> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('[') {
            let header = line
                .strip_prefix('[')
                .and_then(|l| l.strip_suffix(']'))
                .ok_or_else(|| PresentationError::Malformed {
                    line: line_no,
                    message: "bad section header".into(),
                })?
                .trim()
                .to_string();
            sections.push(RawSection {
                header,
                lines: Vec::new(),
            });
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| PresentationError::Malformed {
            line: line_no,
            message: "expected 'key: value'".into(),
        })?;
        let section = sections.last_mut().ok_or_else(|| PresentationError::Malformed {
            line: line_no,
            message: "content before any [section]".into(),
        })?;
        section
            .lines
            .push((line_no, key.trim().to_string(), value.trim().to_string()));
    }
    Ok(sections)
}

/// Parse the `[algebra]` section into a presentation, re-running completion
/// to the recorded degree.
pub(crate) fn parse_algebra_section(
    section: &RawSection,
) -> Result<Presentation, PresentationError> {
    let mut name = String::new();
    let mut gen_names: Vec<String> = Vec::new();
    let mut complete_to = 0usize;
    let mut certified_to = 0usize;
    let mut dims: Option<(usize, Vec<usize>)> = None;
    let mut rule_lines: Vec<(usize, String)> = Vec::new();
    for (line, key, value) in &section.lines {
        match key.as_str() {
            "name" => name = value.clone(),
            "generators" => {
                for g in value.split_whitespace() {
                    if gen_names.iter().any(|n| n == g) {
                        return Err(PresentationError::DuplicateGenerator {
                            name: g.to_string(),
                        });
                    }
                    gen_names.push(g.to_string());
                }
            }
            "complete-to" => {
                complete_to = value.parse().map_err(|_| PresentationError::Malformed {
                    line: *line,
                    message: "bad complete-to degree".into(),
                })?
            }
            "certified-to" => {
                certified_to = value.parse().map_err(|_| PresentationError::Malformed {
                    line: *line,
                    message: "bad certified-to degree".into(),
                })?
            }
            "dims" => {
                let parsed: Result<Vec<usize>, _> =
                    value.split_whitespace().map(|t| t.parse()).collect();
                dims = Some((
                    *line,
                    parsed.map_err(|_| PresentationError::Malformed {
                        line: *line,
                        message: "bad dims list".into(),
                    })?,
                ));
            }
            "rule" => rule_lines.push((*line, value.clone())),
            other => {
                return Err(PresentationError::Malformed {
                    line: *line,
                    message: format!("unknown key '{}' in [algebra]", other),
                })
            }
        }
    }
    let scaffold = Presentation::new(
        gen_names.clone(),
        RewriteSystem::new(gen_names.len(), vec![]).map_err(PresentationError::Rewrite)?,
    );
    let mut relations = Vec::new();
    for (line, text) in rule_lines {
        let (lhs, rhs) = text.split_once('=').ok_or_else(|| PresentationError::Malformed {
            line,
            message: "rule needs '='".into(),
        })?;
        let l = scaffold
            .parse_poly(lhs.trim())
            .map_err(|source| PresentationError::Expr { line, source })?;
        let r = scaffold
            .parse_poly(rhs.trim())
            .map_err(|source| PresentationError::Expr { line, source })?;
        relations.push((l, r));
    }
    let mut system = RewriteSystem::new(gen_names.len(), relations)?;
    if complete_to > 0 {
        system = system.complete_up_to(complete_to)?;
    }
    // a certificate beyond the completed degree must reproduce the recorded
    // normal-word counts before it is believed
    if certified_to > complete_to {
        let (line, counts) = dims.ok_or(PresentationError::Malformed {
            line: 0,
            message: "certified-to requires a dims line".into(),
        })?;
        if counts.len() != certified_to + 1 {
            return Err(PresentationError::Malformed {
                line,
                message: "dims list length must be certified-to + 1".into(),
            });
        }
        for (d, &expect) in counts.iter().enumerate() {
            let got = system.basis_words(d).len();
            if got != expect {
                return Err(PresentationError::Malformed {
                    line,
                    message: format!(
                        "normal-word count at degree {} is {}, recorded {}",
                        d, got, expect
                    ),
                });
            }
        }
        system.certify_degree(certified_to);
    }
    Ok(Presentation::new(gen_names, system).with_name(&name))
}

/// Parse a text that consists of a single `[algebra]` section.
pub fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let sections = split_sections(text)?;
    let algebra = sections
        .iter()
        .find(|s| s.header == "algebra")
        .ok_or_else(|| PresentationError::Malformed {
            line: 0,
            message: "missing [algebra] section".into(),
        })?;
    parse_algebra_section(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_roundtrip_is_bit_exact() {
        let text = "\
[algebra]
name: toy
generators: x y
complete-to: 6
rule: y*x = q*x*y
";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.name, "toy");
        let rendered = p.render_algebra_section();
        assert_eq!(rendered, text);
        let again = parse_presentation(&rendered).unwrap();
        assert_eq!(again.render_algebra_section(), rendered);
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let text = "\n# heading\n[algebra]\ngenerators: x\n  # comment\ncomplete-to: 2\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.n_gens(), 1);
    }

    #[test]
    fn bad_lines_cite_line_numbers() {
        let text = "[algebra]\ngenerators: x\nrule: x*x\n";
        match parse_presentation(text) {
            Err(PresentationError::Malformed { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {:?}", other),
        }
    }
}
