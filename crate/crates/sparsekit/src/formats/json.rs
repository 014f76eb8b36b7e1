//! JSON documents for structured instances, certificates, reduction traces
//! and kernel reports. Every field is an integer, a string or a list of
//! those; the schema is described in `docs/formats.md`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sparsekit_core::kernel::KernelReport;
use sparsekit_core::model::{
    BipartiteHamInstance, Certificate, EqColRbdsInstance, Graph, ListColoringInstance, TsdInstance,
    Vertex,
};
use sparsekit_core::ReductionTrace;

use super::FormatError;

/// Instances whose roles or partitions DIMACS cannot express.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structured {
    Tsd(TsdInstance),
    BipartiteHam(BipartiteHamInstance),
    ColRbds(EqColRbdsInstance),
    ListColoring(ListColoringInstance),
}

impl Structured {
    pub fn kind(&self) -> &'static str {
        match self {
            Structured::Tsd(_) => "tsd",
            Structured::BipartiteHam(_) => "bipartite-ham",
            Structured::ColRbds(_) => "col-rbds",
            Structured::ListColoring(_) => "list-coloring",
        }
    }

    pub fn graph(&self) -> &Graph {
        match self {
            Structured::Tsd(t) => t.graph(),
            Structured::BipartiteHam(b) => b.graph(),
            Structured::ColRbds(r) => r.graph(),
            Structured::ListColoring(l) => l.graph(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum StructuredDoc {
    Tsd {
        num_vertices: u32,
        edges: Vec<[Vertex; 2]>,
        independent: Vec<Vertex>,
        triangles: Vec<[Vertex; 3]>,
    },
    /// `b` is ordered with `s` first and `t` last.
    BipartiteHam {
        num_vertices: u32,
        edges: Vec<[Vertex; 2]>,
        a: Vec<Vertex>,
        b: Vec<Vertex>,
    },
    ColRbds {
        num_vertices: u32,
        edges: Vec<[Vertex; 2]>,
        classes: Vec<Vec<Vertex>>,
        blue: Vec<Vertex>,
    },
    /// Lists name colors 1..=4 (x, y, z, a).
    ListColoring {
        num_vertices: u32,
        edges: Vec<[Vertex; 2]>,
        lists: Vec<Vec<u8>>,
    },
}

fn edge_list(g: &Graph) -> Vec<[Vertex; 2]> {
    g.edges().iter().map(|&(u, v)| [u, v]).collect()
}

fn model<T, E: ToString>(r: Result<T, E>) -> Result<T, FormatError> {
    r.map_err(|e| FormatError::Model(e.to_string()))
}

fn graph(n: u32, edges: Vec<[Vertex; 2]>) -> Result<Graph, FormatError> {
    model(Graph::new(n, edges.into_iter().map(|[u, v]| (u, v)).collect()))
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn parse_structured(text: &str) -> Result<Structured, FormatError> {
    Ok(match serde_json::from_str(text)? {
        StructuredDoc::Tsd { num_vertices, edges, independent, triangles } => {
            Structured::Tsd(model(TsdInstance::new(graph(num_vertices, edges)?, independent, triangles))?)
        }
        StructuredDoc::BipartiteHam { num_vertices, edges, a, b } => {
            Structured::BipartiteHam(model(BipartiteHamInstance::new(graph(num_vertices, edges)?, a, b))?)
        }
        StructuredDoc::ColRbds { num_vertices, edges, classes, blue } => {
            Structured::ColRbds(model(EqColRbdsInstance::new(graph(num_vertices, edges)?, classes, blue))?)
        }
        StructuredDoc::ListColoring { num_vertices, edges, lists } => {
            if let Some(c) = lists.iter().flatten().find(|&&c| !(1..=4).contains(&c)) {
                return Err(FormatError::Model(format!("color {c} outside 1..=4")));
            }
            let masks = lists.iter().map(|l| ListColoringInstance::mask(l)).collect();
            Structured::ListColoring(model(ListColoringInstance::new(graph(num_vertices, edges)?, masks))?)
        }
    })
}

pub fn write_structured(s: &Structured) -> String {
    let doc = match s {
        Structured::Tsd(t) => StructuredDoc::Tsd {
            num_vertices: t.graph().num_vertices(),
            edges: edge_list(t.graph()),
            independent: t.independent().to_vec(),
            triangles: t.triangles().to_vec(),
        },
        Structured::BipartiteHam(b) => StructuredDoc::BipartiteHam {
            num_vertices: b.graph().num_vertices(),
            edges: edge_list(b.graph()),
            a: b.a().to_vec(),
            b: b.b().to_vec(),
        },
        Structured::ColRbds(r) => StructuredDoc::ColRbds {
            num_vertices: r.graph().num_vertices(),
            edges: edge_list(r.graph()),
            classes: r.classes().to_vec(),
            blue: r.blue().to_vec(),
        },
        Structured::ListColoring(l) => StructuredDoc::ListColoring {
            num_vertices: l.graph().num_vertices(),
            edges: edge_list(l.graph()),
            lists: l.lists().iter().map(|&m| (1..=4).filter(|c| m >> (c - 1) & 1 == 1).collect()).collect(),
        },
    };
    to_pretty(&doc)
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum CertificateDoc {
    /// `values[i]` is 0 or 1 for variable `i + 1`.
    Assignment { values: Vec<u8> },
    Coloring { colors: Vec<u8> },
    HamCycle { order: Vec<Vertex> },
    HamPath { order: Vec<Vertex> },
    DomSet { vertices: Vec<Vertex> },
}

pub fn parse_certificate(text: &str) -> Result<Certificate, FormatError> {
    Ok(match serde_json::from_str(text)? {
        CertificateDoc::Assignment { values } => {
            if values.iter().any(|&v| v > 1) {
                return Err(FormatError::Model("assignment values must be 0 or 1".into()));
            }
            Certificate::Assignment(values.into_iter().map(|v| v == 1).collect())
        }
        CertificateDoc::Coloring { colors } => Certificate::Coloring(colors),
        CertificateDoc::HamCycle { order } => Certificate::HamCycle(order),
        CertificateDoc::HamPath { order } => Certificate::HamPath(order),
        CertificateDoc::DomSet { vertices } => Certificate::DomSet(vertices),
    })
}

pub fn write_certificate(c: &Certificate) -> String {
    let doc = match c.clone() {
        Certificate::Assignment(a) => CertificateDoc::Assignment { values: a.into_iter().map(u8::from).collect() },
        Certificate::Coloring(colors) => CertificateDoc::Coloring { colors },
        Certificate::HamCycle(order) => CertificateDoc::HamCycle { order },
        Certificate::HamPath(order) => CertificateDoc::HamPath { order },
        Certificate::DomSet(vertices) => CertificateDoc::DomSet { vertices },
    };
    to_pretty(&doc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedVertex {
    pub name: String,
    pub vertex: Vertex,
}

/// Serialized [`ReductionTrace`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDoc {
    pub name: String,
    pub input_size: usize,
    pub output_vertices: u32,
    pub output_edges: usize,
    pub facts: BTreeMap<String, u64>,
    pub names: Vec<NamedVertex>,
}

impl From<&ReductionTrace> for TraceDoc {
    fn from(t: &ReductionTrace) -> Self {
        TraceDoc {
            name: t.name.clone(),
            input_size: t.input_size,
            output_vertices: t.output_vertices,
            output_edges: t.output_edges,
            facts: t.facts.iter().cloned().collect(),
            names: t.names.iter().map(|(name, vertex)| NamedVertex { name: name.clone(), vertex: *vertex }).collect(),
        }
    }
}

pub fn write_trace(t: &ReductionTrace) -> String {
    to_pretty(&TraceDoc::from(t))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeDoc {
    pub r: usize,
    pub input: usize,
    pub output: usize,
    pub bound: u64,
}

/// Serialized [`KernelReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReportDoc {
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub num_vertices: u32,
    pub max_edge_size: usize,
    pub sizes: Vec<SizeDoc>,
    pub input_total: usize,
    pub output_total: usize,
    pub total_bound: u64,
    pub short_circuited: bool,
    pub bounds_hold: bool,
}

impl From<&KernelReport> for KernelReportDoc {
    fn from(r: &KernelReport) -> Self {
        KernelReportDoc {
            mode: r.mode.name().to_string(),
            seed: match r.mode {
                sparsekit_core::exactrank::RankMode::Modular { seed } => Some(seed),
                sparsekit_core::exactrank::RankMode::Exact => None,
            },
            num_vertices: r.num_vertices,
            max_edge_size: r.max_edge_size,
            sizes: r
                .sizes
                .iter()
                .map(|s| SizeDoc { r: s.r, input: s.input, output: s.output, bound: s.bound })
                .collect(),
            input_total: r.input_total(),
            output_total: r.output_total(),
            total_bound: r.total_bound,
            short_circuited: r.short_circuited,
            bounds_hold: r.bounds_hold(),
        }
    }
}

pub fn write_kernel_report(r: &KernelReport) -> String {
    to_pretty(&KernelReportDoc::from(r))
}
