//! One-screen summaries of instance files.

use std::fmt::Write as _;

use sparsekit_core::exactrank::RankMode;
use sparsekit_core::kernel::{sparsify_hypergraph, sparsify_nae_sat, KernelReport};

use crate::formats::{Document, Structured};

fn histogram(label: &str, sizes: &[usize]) -> String {
    let parts: Vec<String> = sizes
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(r, c)| format!("r={r}:{c}"))
        .collect();
    if parts.is_empty() {
        format!("{label}: 0")
    } else {
        format!("{label}: {}", parts.join(" "))
    }
}

fn kernel_line(r: &KernelReport) -> String {
    let parts: Vec<String> = r
        .sizes
        .iter()
        .filter(|s| s.input > 0)
        .map(|s| format!("r={}:{} (bound {})", s.r, s.output, s.bound))
        .collect();
    let mut line = format!("kernel ({}): ", r.mode.name());
    if !parts.is_empty() {
        let _ = write!(line, "{}, ", parts.join(" "));
    }
    let _ = write!(line, "total {} (bound {})", r.output_total(), r.total_bound);
    if r.short_circuited {
        line.push_str(", empty edge present");
    }
    line
}

/// Counts per edge or clause size, plus the kernel's output against its
/// bounds for hypergraphs and formulas.
pub fn summarize(doc: &Document, mode: RankMode) -> String {
    let mut lines = vec![format!("format: {}", doc.kind())];
    match doc {
        Document::Hypergraph(h) => {
            lines.push(format!("n={}, {}", h.num_vertices(), histogram("edges", &h.size_histogram())));
            lines.push(kernel_line(&sparsify_hypergraph(h, mode).1));
        }
        Document::Cnf(f) => {
            let mut sizes = vec![0usize; f.max_clause_size() + 1];
            for c in f.clauses() {
                sizes[c.len()] += 1;
            }
            lines.push(format!("n={}, {}", f.num_vars(), histogram("clauses", &sizes)));
            lines.push(kernel_line(&sparsify_nae_sat(f, mode).1));
        }
        Document::Graph(g) => lines.push(format!("n={}, edges: {}", g.num_vertices(), g.num_edges())),
        Document::Digraph(d) => lines.push(format!("n={}, arcs: {}", d.num_vertices(), d.num_arcs())),
        Document::Structured(s) => {
            let g = s.graph();
            lines.push(format!("n={}, edges: {}", g.num_vertices(), g.num_edges()));
            lines.push(match s {
                Structured::Tsd(t) => {
                    format!("independent: {}, triangles: {}", t.independent().len(), t.triangles().len())
                }
                Structured::BipartiteHam(b) => {
                    format!("|A|={}, |B|={}, s={}, t={}", b.a().len(), b.b().len(), b.s(), b.t())
                }
                Structured::ColRbds(r) => format!(
                    "k={}, class size {}, |R|={}, |B|={}",
                    r.k(),
                    r.classes()[0].len(),
                    r.num_red(),
                    r.blue().len()
                ),
                Structured::ListColoring(l) => {
                    let mut sizes = [0usize; 5];
                    for m in l.lists() {
                        sizes[m.count_ones() as usize] += 1;
                    }
                    histogram("list sizes", &sizes)
                }
            });
        }
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}
