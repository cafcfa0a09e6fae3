//! JSON file formats.
//!
//! Quiver: `{"n": 3, "arrows": [[0, 1, 1], [1, 2, 1]]}` with arrows
//! `[source, target, multiplicity]`. Diagrams use `[source, target, 1, weight]`
//! and may list `"pendant"` vertices. Annotated files add
//! `"blocks": [{"kind": "IV", "base": [p, i], "extra": [e1, e2]}]`.

use serde::{Deserialize, Serialize};

use super::{AnnotatedQuiver, BlockAnnotation, BlockKind, Diagram, Quiver, QuiverError, Underlying};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverFile {
    pub n: usize,
    pub arrows: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockFile {
    pub kind: String,
    pub base: [usize; 2],
    pub extra: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnotatedQuiverFile {
    pub n: usize,
    pub arrows: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pendant: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blocks: Vec<BlockFile>,
}

fn format_err(msg: impl Into<String>) -> QuiverError {
    QuiverError::Format(msg.into())
}

fn quiver_arrows(arrows: &[Vec<u32>]) -> Result<Vec<(usize, usize, u32)>, QuiverError> {
    arrows
        .iter()
        .map(|a| match a.as_slice() {
            [i, j, m] => Ok((*i as usize, *j as usize, *m)),
            _ => Err(format_err(format!("quiver arrow {a:?} must be [i, j, mult]"))),
        })
        .collect()
}

fn diagram_arrows(arrows: &[Vec<u32>]) -> Result<Vec<(usize, usize, u32)>, QuiverError> {
    arrows
        .iter()
        .map(|a| match a.as_slice() {
            [i, j, 1, w] => Ok((*i as usize, *j as usize, *w)),
            [i, j, 1] => Ok((*i as usize, *j as usize, 1)),
            _ => Err(format_err(format!(
                "diagram arrow {a:?} must be [i, j, 1, weight]"
            ))),
        })
        .collect()
}

impl Quiver {
    pub fn to_file(&self) -> QuiverFile {
        QuiverFile {
            n: self.len(),
            arrows: self
                .arrows()
                .into_iter()
                .map(|(i, j, m)| vec![i as u32, j as u32, m])
                .collect(),
        }
    }

    pub fn from_file(file: &QuiverFile) -> Result<Quiver, QuiverError> {
        Quiver::from_arrows(file.n, &quiver_arrows(&file.arrows)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Quiver, QuiverError> {
        let file: QuiverFile = serde_json::from_str(text).map_err(|e| format_err(e.to_string()))?;
        Quiver::from_file(&file)
    }
}

impl AnnotatedQuiver {
    pub fn to_file(&self) -> AnnotatedQuiverFile {
        let (arrows, pendant) = match self.underlying() {
            Underlying::Quiver(q) => (q.to_file().arrows, None),
            Underlying::Diagram(d) => (
                d.arrows()
                    .into_iter()
                    .map(|(i, j, w)| vec![i as u32, j as u32, 1, w])
                    .collect(),
                Some(d.pendant().iter().copied().collect()),
            ),
        };
        AnnotatedQuiverFile {
            n: self.len(),
            arrows,
            pendant,
            blocks: self
                .blocks()
                .iter()
                .map(|b| BlockFile {
                    kind: match b.kind {
                        BlockKind::IV => "IV".into(),
                        BlockKind::IV2 => "IV2".into(),
                    },
                    base: [b.base.0, b.base.1],
                    extra: b.extra.clone(),
                })
                .collect(),
        }
    }

    /// Reads a quiver, diagram or annotated file. A file is a diagram when it
    /// lists pendant vertices or any four-entry arrow.
    pub fn from_file(file: &AnnotatedQuiverFile) -> Result<AnnotatedQuiver, QuiverError> {
        let is_diagram = file.pendant.is_some() || file.arrows.iter().any(|a| a.len() == 4);
        let underlying = if is_diagram {
            Underlying::Diagram(Diagram::new(
                file.n,
                &diagram_arrows(&file.arrows)?,
                file.pendant.clone().unwrap_or_default(),
            )?)
        } else {
            Underlying::Quiver(Quiver::from_arrows(file.n, &quiver_arrows(&file.arrows)?)?)
        };
        let blocks = file
            .blocks
            .iter()
            .map(|b| {
                let kind = match b.kind.as_str() {
                    "IV" => BlockKind::IV,
                    "IV2" | "IV'" => BlockKind::IV2,
                    other => return Err(format_err(format!("unknown block kind {other:?}"))),
                };
                Ok(BlockAnnotation {
                    kind,
                    base: (b.base[0], b.base[1]),
                    extra: b.extra.clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        AnnotatedQuiver::new(underlying, blocks)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<AnnotatedQuiver, QuiverError> {
        let file: AnnotatedQuiverFile =
            serde_json::from_str(text).map_err(|e| format_err(e.to_string()))?;
        AnnotatedQuiver::from_file(&file)
    }
}
