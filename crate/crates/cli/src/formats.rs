//! Line-oriented text formats.
//!
//! Every format skips blank lines and lines starting with `#`. Writers emit
//! `\n`-terminated lines with single spaces, and parsing a writer's output
//! returns the original value.

use std::fmt::Write as _;

use pendant_core::gadgets::Provenance;
use pendant_core::oracles::{Hypergraph, TripartiteInstance};
use pendant_core::{Digraph, Packing, PendantTree, TerminalSpec, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Non-comment lines with their 1-based numbers, split into fields.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            None
        } else {
            Some((i + 1, l.split_whitespace().collect()))
        }
    })
}

fn number(line: usize, field: &str) -> Result<usize, ParseError> {
    field
        .parse()
        .or_else(|_| err(line, format!("expected a non-negative integer, found `{field}`")))
}

fn numbers(line: usize, fields: &[&str]) -> Result<Vec<usize>, ParseError> {
    fields.iter().map(|f| number(line, f)).collect()
}

fn expect_arity(line: usize, fields: &[&str], n: usize) -> Result<(), ParseError> {
    if fields.len() != n {
        return err(line, format!("`{}` takes {} fields, found {}", fields[0], n - 1, fields.len() - 1));
    }
    Ok(())
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut seen = std::collections::HashSet::new();
    let mut arcs = Vec::new();
    let mut last_line = 0;
    for (line, f) in records(text) {
        last_line = line;
        match f[0] {
            "p" => {
                expect_arity(line, &f, 3)?;
                if header.is_some() {
                    return err(line, "second `p` header");
                }
                header = Some((number(line, f[1])?, number(line, f[2])?));
            }
            "a" => {
                expect_arity(line, &f, 3)?;
                let Some((n, m)) = header else {
                    return err(line, "arc before the `p` header");
                };
                let (u, v) = (number(line, f[1])?, number(line, f[2])?);
                if u >= n || v >= n {
                    return err(line, format!("vertex out of range 0..{n}"));
                }
                if u == v {
                    return err(line, format!("loop at vertex {u}"));
                }
                if !seen.insert((u, v)) {
                    return err(line, format!("duplicate arc {u} {v}"));
                }
                if arcs.len() == m {
                    return err(line, format!("more than the {m} declared arcs"));
                }
                arcs.push((u, v));
            }
            other => return err(line, format!("unknown record `{other}`")),
        }
    }
    let Some((n, m)) = header else {
        return err(last_line.max(1), "missing `p` header");
    };
    if arcs.len() != m {
        return err(last_line.max(1), format!("declared {m} arcs, found {}", arcs.len()));
    }
    Ok(Digraph::new(n, &arcs).expect("checked above"))
}

/// Writes the digraph with optional leading comment lines.
pub fn write_digraph(d: &Digraph, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        let _ = writeln!(s, "# {c}");
    }
    let _ = writeln!(s, "p {} {}", d.order(), d.size());
    for &(u, v) in d.arcs() {
        let _ = writeln!(s, "a {u} {v}");
    }
    s
}

/// A certificate before it is checked against a host digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawCertificate {
    /// Root first.
    pub terminals: Vec<Vertex>,
    pub trees: Vec<Vec<(Vertex, Vertex)>>,
}

impl RawCertificate {
    pub fn from_packing(p: &Packing) -> Self {
        RawCertificate {
            terminals: p.spec.root_first(),
            trees: p.trees.iter().map(|t| t.arcs().to_vec()).collect(),
        }
    }

    pub fn spec(&self, n: usize) -> Result<TerminalSpec, pendant_core::SpecError> {
        TerminalSpec::new(n, self.terminals[0], &self.terminals)
    }

    pub fn into_packing(self, n: usize) -> Result<Packing, pendant_core::SpecError> {
        let spec = self.spec(n)?;
        let root = spec.root();
        let trees = self.trees.into_iter().map(|a| PendantTree::new(root, a)).collect();
        Ok(Packing::new(spec, trees))
    }
}

pub fn parse_certificate(text: &str) -> Result<RawCertificate, ParseError> {
    let mut terminals: Option<Vec<Vertex>> = None;
    let mut trees = Vec::new();
    let mut open: Option<Vec<(Vertex, Vertex)>> = None;
    let mut last_line = 0;
    for (line, f) in records(text) {
        last_line = line;
        match f[0] {
            "s" => {
                if terminals.is_some() {
                    return err(line, "second `s` line");
                }
                if f.len() < 3 {
                    return err(line, "`s` needs a root and at least one more terminal");
                }
                terminals = Some(numbers(line, &f[1..])?);
            }
            "tree" => {
                expect_arity(line, &f, 1)?;
                if terminals.is_none() {
                    return err(line, "`tree` before the `s` line");
                }
                if open.is_some() {
                    return err(line, "`tree` inside an unfinished tree");
                }
                open = Some(Vec::new());
            }
            "a" => {
                expect_arity(line, &f, 3)?;
                let Some(arcs) = open.as_mut() else {
                    return err(line, "arc outside a `tree` block");
                };
                arcs.push((number(line, f[1])?, number(line, f[2])?));
            }
            "end" => {
                expect_arity(line, &f, 1)?;
                let Some(arcs) = open.take() else {
                    return err(line, "`end` without `tree`");
                };
                trees.push(arcs);
            }
            other => return err(line, format!("unknown record `{other}`")),
        }
    }
    if open.is_some() {
        return err(last_line, "unterminated tree block");
    }
    let Some(terminals) = terminals else {
        return err(last_line.max(1), "missing `s` line");
    };
    Ok(RawCertificate { terminals, trees })
}

pub fn write_certificate(c: &RawCertificate) -> String {
    let mut s = String::from("s");
    for v in &c.terminals {
        let _ = write!(s, " {v}");
    }
    s.push('\n');
    for t in &c.trees {
        s.push_str("tree\n");
        for &(u, v) in t {
            let _ = writeln!(s, "a {u} {v}");
        }
        s.push_str("end\n");
    }
    s
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (line, f) in records(text) {
        last_line = line;
        match f[0] {
            "h" => {
                expect_arity(line, &f, 3)?;
                if header.is_some() {
                    return err(line, "second `h` header");
                }
                header = Some((number(line, f[1])?, number(line, f[2])?));
            }
            "e" => {
                let Some((n, m)) = header else {
                    return err(line, "edge before the `h` header");
                };
                if f.len() < 2 {
                    return err(line, "empty edge");
                }
                let e = numbers(line, &f[1..])?;
                if let Some(v) = e.iter().find(|&&v| v >= n) {
                    return err(line, format!("vertex {v} out of range 0..{n}"));
                }
                if edges.len() == m {
                    return err(line, format!("more than the {m} declared edges"));
                }
                edges.push(e);
            }
            other => return err(line, format!("unknown record `{other}`")),
        }
    }
    let Some((n, m)) = header else {
        return err(last_line.max(1), "missing `h` header");
    };
    if edges.len() != m {
        return err(last_line.max(1), format!("declared {m} edges, found {}", edges.len()));
    }
    Hypergraph::new(n, edges).or_else(|e| err(last_line.max(1), e.to_string()))
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "h {} {}", h.n_vertices(), h.edges().len());
    for e in h.edges() {
        s.push('e');
        for v in e {
            let _ = write!(s, " {v}");
        }
        s.push('\n');
    }
    s
}

pub fn parse_tripartite(text: &str) -> Result<TripartiteInstance, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut parts: [Option<Vec<Vertex>>; 3] = [None, None, None];
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (line, f) in records(text) {
        last_line = line;
        match f[0] {
            "t" => {
                expect_arity(line, &f, 3)?;
                if header.is_some() {
                    return err(line, "second `t` header");
                }
                header = Some((number(line, f[1])?, number(line, f[2])?));
            }
            "A" | "B" | "C" => {
                let Some((q, _)) = header else {
                    return err(line, "part roster before the `t` header");
                };
                let idx = (f[0].as_bytes()[0] - b'A') as usize;
                if parts[idx].is_some() {
                    return err(line, format!("second `{}` roster", f[0]));
                }
                let roster = numbers(line, &f[1..])?;
                if roster.len() != q {
                    return err(line, format!("part `{}` needs {q} vertices", f[0]));
                }
                parts[idx] = Some(roster);
            }
            "e" => {
                expect_arity(line, &f, 3)?;
                let Some((_, m)) = header else {
                    return err(line, "edge before the `t` header");
                };
                if edges.len() == m {
                    return err(line, format!("more than the {m} declared edges"));
                }
                edges.push((number(line, f[1])?, number(line, f[2])?));
            }
            other => return err(line, format!("unknown record `{other}`")),
        }
    }
    let Some((_, m)) = header else {
        return err(last_line.max(1), "missing `t` header");
    };
    if edges.len() != m {
        return err(last_line.max(1), format!("declared {m} edges, found {}", edges.len()));
    }
    let [Some(a), Some(b), Some(c)] = parts else {
        return err(last_line.max(1), "missing a part roster");
    };
    TripartiteInstance::new(a, b, c, edges).or_else(|e| err(last_line.max(1), e.to_string()))
}

pub fn write_tripartite(g: &TripartiteInstance) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "t {} {}", g.q(), g.edges().len());
    for (label, part) in [("A", g.part_a()), ("B", g.part_b()), ("C", g.part_c())] {
        s.push_str(label);
        for v in part {
            let _ = write!(s, " {v}");
        }
        s.push('\n');
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "e {u} {v}");
    }
    s
}

/// Vertex names plus the root-first terminal line of a gadget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProvenanceFile {
    pub names: Vec<String>,
    pub terminals: Vec<Vertex>,
}

impl ProvenanceFile {
    pub fn new(p: &Provenance, spec: &TerminalSpec) -> Self {
        ProvenanceFile {
            names: p.names.clone(),
            terminals: spec.root_first(),
        }
    }
}

pub fn parse_provenance(text: &str) -> Result<ProvenanceFile, ParseError> {
    let mut names: Vec<Option<String>> = Vec::new();
    let mut terminals = None;
    let mut last_line = 0;
    for (line, f) in records(text) {
        last_line = line;
        match f[0] {
            "name" => {
                expect_arity(line, &f, 3)?;
                let id = number(line, f[2])?;
                if names.len() <= id {
                    names.resize(id + 1, None);
                }
                if names[id].is_some() {
                    return err(line, format!("vertex {id} named twice"));
                }
                if names.iter().flatten().any(|n| n == f[1]) {
                    return err(line, format!("name `{}` used twice", f[1]));
                }
                names[id] = Some(f[1].to_string());
            }
            "s" => {
                if terminals.is_some() {
                    return err(line, "second `s` line");
                }
                terminals = Some(numbers(line, &f[1..])?);
            }
            other => return err(line, format!("unknown record `{other}`")),
        }
    }
    let names: Option<Vec<String>> = names.into_iter().collect();
    let Some(names) = names else {
        return err(last_line.max(1), "vertex ids are not contiguous");
    };
    let Some(terminals) = terminals else {
        return err(last_line.max(1), "missing `s` line");
    };
    Ok(ProvenanceFile { names, terminals })
}

pub fn write_provenance(p: &ProvenanceFile) -> String {
    let mut s = String::new();
    for (id, name) in p.names.iter().enumerate() {
        let _ = writeln!(s, "name {name} {id}");
    }
    s.push('s');
    for v in &p.terminals {
        let _ = write!(s, " {v}");
    }
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_errors_carry_line_numbers() {
        let e = parse_digraph("# hi\np 3 1\na 0 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_digraph("p 3 2\na 0 1\na 0 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_digraph("p 3 2\na 0 1\n").unwrap_err();
        assert!(e.message.contains("declared 2"));
        assert_eq!(parse_digraph("a 0 1\n").unwrap_err().line, 1);
        assert_eq!(parse_digraph("p 2 1\na 0 5\n").unwrap_err().line, 2);
        assert_eq!(parse_digraph("p 2 1\nx\n").unwrap_err().line, 2);
    }

    #[test]
    fn digraph_text_is_exact() {
        let d = Digraph::new(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(write_digraph(&d, &[]), "p 3 2\na 0 1\na 2 0\n");
        assert_eq!(parse_digraph(&write_digraph(&d, &["seed 1".into()])).unwrap(), d);
    }

    #[test]
    fn certificate_blocks() {
        let text = "s 0 1 2\ntree\na 0 3\na 3 1\na 3 2\nend\n";
        let c = parse_certificate(text).unwrap();
        assert_eq!(c.trees.len(), 1);
        assert_eq!(write_certificate(&c), text);
        assert_eq!(parse_certificate("s 0 1\ntree\na 0 1\n").unwrap_err().line, 3);
        assert_eq!(parse_certificate("s 0 1\na 0 1\n").unwrap_err().line, 2);
    }

    #[test]
    fn tripartite_and_hypergraph_text() {
        let text = "t 1 2\nA 0\nB 1\nC 2\ne 0 1\ne 1 2\n";
        assert_eq!(write_tripartite(&parse_tripartite(text).unwrap()), text);
        let text = "h 3 2\ne 0 1\ne 0 1 2\n";
        assert_eq!(write_hypergraph(&parse_hypergraph(text).unwrap()), text);
        assert_eq!(parse_hypergraph("h 2 1\ne 0 2\n").unwrap_err().line, 2);
    }

    #[test]
    fn provenance_text() {
        let text = "name r 1\nname x_0 0\ns 1 0\n";
        let p = parse_provenance(text).unwrap();
        assert_eq!(p.names, vec!["x_0".to_string(), "r".to_string()]);
        assert_eq!(write_provenance(&p), "name x_0 0\nname r 1\ns 1 0\n");
        assert!(parse_provenance("name a 0\nname a 1\ns 0 1\n").is_err());
    }
}
