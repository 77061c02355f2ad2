//! Deterministic line-oriented text snapshot of a built space.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::subsume::{EdgeSource, Harvest, HarvestedEdges, SubclassEdge};
use crate::syntax::Element;

use super::{ClassNode, Dimension, DimensionName, Posting, ResourceSpace, SentenceRecord};

const HEADER: &str = "# syntaxspace space snapshot v1";

#[derive(Debug, thiserror::Error)]
pub enum SnapshotError {
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("line {0}: {1}")]
    Format(usize, String),
}

#[derive(Serialize, Deserialize)]
struct HarvestRecord {
    edge: SubclassEdge,
    child: Element,
    parent: Element,
}

fn edge_line(e: &SubclassEdge) -> String {
    let ev = e.evidence.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
    format!("{}\t{}\t{}\t{}\n", e.child, e.parent, e.source, ev)
}

fn parse_edge(line: &str, n: usize) -> Result<SubclassEdge, SnapshotError> {
    let bad = |m: &str| SnapshotError::Format(n, m.to_string());
    let cols: Vec<&str> = line.split('\t').collect();
    if cols.len() != 4 {
        return Err(bad("edge needs 4 columns"));
    }
    let source: EdgeSource = cols[2].parse().map_err(|e: String| bad(&e))?;
    let evidence = match cols[3] {
        "-" => None,
        v => Some(v.parse().map_err(|_| bad("bad evidence id"))?),
    };
    Ok(SubclassEdge::new(cols[0], cols[1], source, evidence))
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("snapshot records serialize")
}

impl ResourceSpace {
    pub fn to_snapshot(&self) -> String {
        let mut out = format!("{HEADER}\n[SENTENCES]\n");
        for (id, rec) in &self.sentences {
            out.push_str(&format!("{id}\t{}\n", json(rec)));
        }
        out.push_str("[HARVESTED]\n");
        for e in self.harvested.edges() {
            let child = self.harvested.endpoint(&e.child).cloned();
            let parent = self.harvested.endpoint(&e.parent).cloned();
            if let (Some(child), Some(parent)) = (child, parent) {
                out.push_str(&json(&HarvestRecord { edge: e.clone(), child, parent }));
                out.push('\n');
            }
        }
        for d in &self.dimensions {
            out.push_str(&format!("[DIMENSION {}]\n[NODES]\n", d.name));
            for n in d.nodes.values() {
                out.push_str(&json(n));
                out.push('\n');
            }
            out.push_str("[EDGES]\n");
            d.edges.iter().for_each(|e| out.push_str(&edge_line(e)));
            out.push_str("[DROPPED]\n");
            d.dropped.iter().for_each(|e| out.push_str(&edge_line(e)));
            out.push_str("[POSTINGS]\n");
            for (k, ps) in &d.postings {
                let ps: Vec<String> = ps.iter().map(Posting::to_string).collect();
                out.push_str(&format!("{k}\t{}\n", ps.join(" ")));
            }
        }
        out
    }

    pub fn from_snapshot(text: &str) -> Result<Self, SnapshotError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        match lines.next() {
            Some((_, HEADER)) => {}
            _ => return Err(SnapshotError::Format(1, "missing snapshot header".into())),
        }
        let mut space = ResourceSpace::empty();
        let mut harvests = Vec::new();
        let mut section = String::new();
        let mut dim: Option<DimensionName> = None;
        for (n, line) in lines {
            let bad = |m: String| SnapshotError::Format(n, m);
            if let Some(h) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                if let Some(name) = h.strip_prefix("DIMENSION ") {
                    dim = Some(name.parse().map_err(bad)?);
                } else {
                    section = h.to_string();
                }
                continue;
            }
            match (section.as_str(), dim) {
                ("SENTENCES", None) => {
                    let (id, rec) = line.split_once('\t').ok_or_else(|| bad("expected id<TAB>record".into()))?;
                    let id = id.parse().map_err(|_| bad("bad sentence id".into()))?;
                    let rec: SentenceRecord = serde_json::from_str(rec).map_err(|e| bad(e.to_string()))?;
                    space.sentences.insert(id, rec);
                }
                ("HARVESTED", None) => {
                    let r: HarvestRecord = serde_json::from_str(line).map_err(|e| bad(e.to_string()))?;
                    harvests.push(Harvest { edge: r.edge, child: r.child, parent: r.parent, pattern: "snapshot" });
                }
                ("NODES", Some(d)) => {
                    let node: ClassNode = serde_json::from_str(line).map_err(|e| bad(e.to_string()))?;
                    space.dimension_mut(d).nodes.insert(node.key.clone(), node);
                }
                ("EDGES", Some(d)) => {
                    let e = parse_edge(line, n)?;
                    space.dimension_mut(d).edges.push(e);
                }
                ("DROPPED", Some(d)) => {
                    let e = parse_edge(line, n)?;
                    space.dimension_mut(d).dropped.push(e);
                }
                ("POSTINGS", Some(d)) => {
                    let (k, ps) = line.split_once('\t').ok_or_else(|| bad("expected key<TAB>postings".into()))?;
                    let mut v = Vec::new();
                    for p in ps.split_whitespace() {
                        let (s, part) = p.split_once('.').ok_or_else(|| bad(format!("bad posting {p:?}")))?;
                        let s = s.parse().map_err(|_| bad(format!("bad posting {p:?}")))?;
                        let part = part.parse().map_err(|_| bad(format!("bad posting {p:?}")))?;
                        v.push(Posting::new(s, part));
                    }
                    space.dimension_mut(d).postings.insert(k.to_string(), v);
                }
                _ => return Err(bad(format!("unexpected line in section {section:?}"))),
            }
        }
        space.harvested = HarvestedEdges::from_harvests(harvests);
        space.dimensions.iter_mut().for_each(Dimension::index_children);
        Ok(space)
    }

    pub fn save(&self, path: &Path) -> Result<(), SnapshotError> {
        std::fs::write(path, self.to_snapshot()).map_err(|e| SnapshotError::Io(path.display().to_string(), e))
    }

    pub fn load(path: &Path) -> Result<Self, SnapshotError> {
        let text = std::fs::read_to_string(path).map_err(|e| SnapshotError::Io(path.display().to_string(), e))?;
        Self::from_snapshot(&text)
    }
}
