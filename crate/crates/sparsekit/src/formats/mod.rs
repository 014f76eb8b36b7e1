//! Reading and writing instances, certificates and reports.

pub mod dimacs;
pub mod json;

use sparsekit_core::model::{CnfFormula, Digraph, Graph, Hypergraph};

pub use dimacs::{
    comments, parse_cnf, parse_digraph, parse_graph, parse_hypergraph, write_cnf, write_digraph,
    write_graph, write_graph_with_comments, write_hypergraph,
};
pub use json::{
    parse_certificate, parse_structured, write_certificate, write_kernel_report, write_structured,
    write_trace, Structured,
};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid instance: {0}")]
    Model(String),
}

/// Any instance file, recognized by its first content line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Cnf(CnfFormula),
    Hypergraph(Hypergraph),
    Graph(Graph),
    Digraph(Digraph),
    Structured(Structured),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Cnf(_) => "cnf",
            Document::Hypergraph(_) => "hyp",
            Document::Graph(_) => "edge",
            Document::Digraph(_) => "arc",
            Document::Structured(s) => s.kind(),
        }
    }
}

pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    if text.trim_start().starts_with('{') {
        return Ok(Document::Structured(parse_structured(text)?));
    }
    match dimacs::header_kind(text).as_deref() {
        Some("cnf") => Ok(Document::Cnf(parse_cnf(text)?)),
        Some("hyp") => Ok(Document::Hypergraph(parse_hypergraph(text)?)),
        Some("edge") => Ok(Document::Graph(parse_graph(text)?)),
        Some("arc") => Ok(Document::Digraph(parse_digraph(text)?)),
        other => Err(FormatError::Syntax {
            line: 1,
            message: format!("unrecognized format {:?}", other.unwrap_or("<no header>")),
        }),
    }
}

pub fn write_document(doc: &Document) -> String {
    match doc {
        Document::Cnf(f) => write_cnf(f),
        Document::Hypergraph(h) => write_hypergraph(h),
        Document::Graph(g) => write_graph(g),
        Document::Digraph(d) => write_digraph(d),
        Document::Structured(s) => write_structured(s),
    }
}
