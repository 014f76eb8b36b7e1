//! DIMACS-style text formats: `p cnf`, `p hyp`, `p edge`, `p arc`.
//!
//! Readers keep clause and edge order exactly as written. Writers emit the
//! canonical form: header, then one item per line, no comments unless asked.

use std::fmt::Write as _;

use sparsekit_core::model::{Clause, CnfFormula, Digraph, Graph, Hypergraph, Literal};

use super::FormatError;

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Non-empty, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c') && !l.starts_with('%'))
}

/// Text of the `c` comment lines, without the leading `c`.
pub fn comments(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| l == &"c" || l.starts_with("c "))
        .map(|l| l[1..].trim().to_string())
        .collect()
}

struct Header {
    kind: String,
    n: u32,
    m: usize,
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Header, FormatError> {
    let Some((line, text)) = lines.next() else {
        return Err(syntax(1, "missing 'p' header"));
    };
    let tok: Vec<&str> = text.split_whitespace().collect();
    if tok.len() != 4 || tok[0] != "p" {
        return Err(syntax(line, format!("malformed header '{text}'")));
    }
    let n = tok[2].parse().map_err(|_| syntax(line, format!("bad count '{}'", tok[2])))?;
    let m = tok[3].parse().map_err(|_| syntax(line, format!("bad count '{}'", tok[3])))?;
    Ok(Header { kind: tok[1].to_string(), n, m })
}

/// The format keyword of the header (`cnf`, `hyp`, `edge`, `arc`), if any.
pub fn header_kind(text: &str) -> Option<String> {
    let (_, first) = content_lines(text).next()?;
    let mut tok = first.split_whitespace();
    (tok.next() == Some("p")).then(|| tok.next().map(str::to_string)).flatten()
}

fn expect_kind(h: &Header, want: &str) -> Result<(), FormatError> {
    if h.kind != want {
        return Err(syntax(1, format!("expected 'p {want}' header, found 'p {}'", h.kind)));
    }
    Ok(())
}

/// Zero-terminated integer lists that may wrap across lines.
fn zero_terminated<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Vec<(usize, Vec<i64>)>, FormatError> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut start = 0;
    for (line, text) in lines {
        for tok in text.split_whitespace() {
            let v: i64 = tok.parse().map_err(|_| syntax(line, format!("bad integer '{tok}'")))?;
            if current.is_empty() {
                start = line;
            }
            if v == 0 {
                out.push((if start == 0 { line } else { start }, std::mem::take(&mut current)));
                start = 0;
            } else {
                current.push(v);
            }
        }
    }
    if !current.is_empty() {
        out.push((start, current));
    }
    Ok(out)
}

fn check_count(h: &Header, found: usize) -> Result<(), FormatError> {
    if found != h.m {
        return Err(syntax(1, format!("header declares {} items, found {found}", h.m)));
    }
    Ok(())
}

pub fn parse_cnf(text: &str) -> Result<CnfFormula, FormatError> {
    let mut lines = content_lines(text);
    let h = parse_header(&mut lines)?;
    expect_kind(&h, "cnf")?;
    let mut clauses = Vec::new();
    for (line, lits) in zero_terminated(lines)? {
        let mut clause = Vec::with_capacity(lits.len());
        for v in lits {
            if v.unsigned_abs() > h.n as u64 {
                return Err(syntax(line, format!("literal {v} exceeds {} variables", h.n)));
            }
            clause.push(Literal::from_dimacs(v).map_err(|e| syntax(line, e.to_string()))?);
        }
        clauses.push(Clause::new(clause));
    }
    check_count(&h, clauses.len())?;
    CnfFormula::new(h.n, clauses).map_err(|e| FormatError::Model(e.to_string()))
}

pub fn write_cnf(f: &CnfFormula) -> String {
    let mut s = format!("p cnf {} {}\n", f.num_vars(), f.num_clauses());
    for c in f.clauses() {
        for l in c.literals() {
            let _ = write!(s, "{} ", l.to_dimacs());
        }
        s.push_str("0\n");
    }
    s
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, FormatError> {
    let mut lines = content_lines(text);
    let h = parse_header(&mut lines)?;
    expect_kind(&h, "hyp")?;
    let mut edges = Vec::new();
    for (line, items) in zero_terminated(lines)? {
        let mut edge = Vec::with_capacity(items.len());
        for v in items {
            if v < 1 || v > h.n as i64 {
                return Err(syntax(line, format!("vertex {v} out of range 1..={}", h.n)));
            }
            edge.push(v as u32);
        }
        edges.push(edge);
    }
    check_count(&h, edges.len())?;
    Hypergraph::new(h.n, edges).map_err(|e| FormatError::Model(e.to_string()))
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut s = format!("p hyp {} {}\n", h.num_vertices(), h.num_edges());
    for e in h.edges() {
        for v in e {
            let _ = write!(s, "{v} ");
        }
        s.push_str("0\n");
    }
    s
}

fn parse_pairs(text: &str, kind: &str, tag: &str) -> Result<(u32, Vec<(u32, u32)>), FormatError> {
    let mut lines = content_lines(text);
    let h = parse_header(&mut lines)?;
    expect_kind(&h, kind)?;
    let mut pairs = Vec::new();
    for (line, text) in lines {
        let tok: Vec<&str> = text.split_whitespace().collect();
        if tok.len() != 3 || tok[0] != tag {
            return Err(syntax(line, format!("expected '{tag} u v', found '{text}'")));
        }
        let mut ends = [0u32; 2];
        for (slot, t) in ends.iter_mut().zip(&tok[1..]) {
            *slot = t.parse().map_err(|_| syntax(line, format!("bad vertex '{t}'")))?;
            if *slot < 1 || *slot > h.n {
                return Err(syntax(line, format!("vertex {slot} out of range 1..={}", h.n)));
            }
        }
        if ends[0] == ends[1] {
            return Err(syntax(line, format!("self-loop on vertex {}", ends[0])));
        }
        pairs.push((ends[0], ends[1]));
    }
    check_count(&h, pairs.len())?;
    Ok((h.n, pairs))
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let (n, pairs) = parse_pairs(text, "edge", "e")?;
    Graph::new(n, pairs).map_err(|e| FormatError::Model(e.to_string()))
}

/// Edge format with optional leading comment lines.
pub fn write_graph_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        let _ = writeln!(s, "c {c}");
    }
    let _ = writeln!(s, "p edge {} {}", g.num_vertices(), g.num_edges());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {u} {v}");
    }
    s
}

pub fn write_graph(g: &Graph) -> String {
    write_graph_with_comments(g, &[])
}

pub fn parse_digraph(text: &str) -> Result<Digraph, FormatError> {
    let (n, pairs) = parse_pairs(text, "arc", "a")?;
    Digraph::new(n, pairs).map_err(|e| FormatError::Model(e.to_string()))
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut s = format!("p arc {} {}\n", d.num_vertices(), d.num_arcs());
    for (u, v) in d.arcs() {
        let _ = writeln!(s, "a {u} {v}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cnf_example() {
        let f = parse_cnf("c demo\np cnf 2 1\n1 -2 0\n").unwrap();
        assert_eq!(f, CnfFormula::from_dimacs(2, &[&[1, -2]]).unwrap());
        assert_eq!(write_cnf(&f), "p cnf 2 1\n1 -2 0\n");
    }

    #[test]
    fn clauses_may_wrap_lines() {
        let f = parse_cnf("p cnf 3 2\n1 2\n3 0 -1\n0\n").unwrap();
        assert_eq!(f, CnfFormula::from_dimacs(3, &[&[1, 2, 3], &[-1]]).unwrap());
    }

    #[test]
    fn hypergraph_example() {
        let h = parse_hypergraph("p hyp 3 1\n1 2 3 0\n").unwrap();
        assert_eq!(h.edges(), &[vec![1, 2, 3]]);
        assert_eq!(write_hypergraph(&h), "p hyp 3 1\n1 2 3 0\n");
        let e = parse_hypergraph("p hyp 3 2\n0\n2 1 0\n").unwrap();
        assert!(e.has_empty_edge());
        assert_eq!(write_hypergraph(&e), "p hyp 3 2\n0\n1 2 0\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph("p edge 2 1\ne 1 1\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: self-loop on vertex 1");
        let err = parse_cnf("p cnf 2 1\n\n1 3 0\n").unwrap_err();
        assert!(err.to_string().starts_with("line 3:"));
        assert!(parse_cnf("p cnf 2 2\n1 0\n").is_err());
        assert!(parse_cnf("p hyp 2 0\n").is_err());
        assert!(parse_digraph("p arc 2 1\ne 1 2\n").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn graph_comments() {
        let g = Graph::new(3, vec![(2, 1), (2, 3)]).unwrap();
        let text = write_graph_with_comments(&g, &["budget 4".into()]);
        assert_eq!(text, "c budget 4\np edge 3 2\ne 1 2\ne 2 3\n");
        assert_eq!(comments(&text), vec!["budget 4"]);
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(header_kind(&text).as_deref(), Some("edge"));
    }

    #[test]
    fn digraph_round_trip() {
        let d = Digraph::new(3, vec![(3, 1), (1, 2)]).unwrap();
        let text = write_digraph(&d);
        assert_eq!(text, "p arc 3 2\na 1 2\na 3 1\n");
        assert_eq!(parse_digraph(&text).unwrap(), d);
    }
}
