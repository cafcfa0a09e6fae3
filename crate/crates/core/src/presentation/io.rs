//! Text and JSON forms of a presentation.
//!
//! The text form has a first line `gens <n>` followed by one line
//! `rel <i1> <i2> ...` per relator, with 1-based generator indices.
//! Involutivity of the generators is implicit. Blank lines and lines
//! starting with `#` are ignored.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Presentation, PresentationError, Relator, RelatorKind, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorFile {
    /// 1-based letters.
    pub word: Vec<usize>,
    pub kind: RelatorKind,
    #[serde(default)]
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub generators: usize,
    pub relators: Vec<RelatorFile>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl Presentation {
    pub fn to_text(&self) -> String {
        let mut s = format!("gens {}\n", self.generators());
        for r in self.relators() {
            s.push_str("rel");
            for &x in r.word.letters() {
                let _ = write!(s, " {}", x + 1);
            }
            s.push('\n');
        }
        s
    }

    /// Parses the text form. Relator kinds are not recorded there; parsed
    /// relators of the form `(s_i s_j)^m` are tagged `R2` and all others `R3`.
    pub fn from_text(text: &str) -> Result<Self, PresentationError> {
        let bad = |m: String| PresentationError::Format(m);
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let head = lines.next().ok_or_else(|| bad("empty input".into()))?;
        let n: usize = head
            .strip_prefix("gens")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| bad(format!("expected `gens <n>`, got `{head}`")))?;
        let mut relators = Vec::new();
        for line in lines {
            let rest = line
                .strip_prefix("rel")
                .ok_or_else(|| bad(format!("expected `rel ...`, got `{line}`")))?;
            let mut word = Vec::new();
            for tok in rest.split_whitespace() {
                let x: usize = tok.parse().map_err(|_| bad(format!("bad letter `{tok}`")))?;
                if x == 0 || x > n {
                    return Err(PresentationError::LetterOutOfRange {
                        letter: x,
                        generators: n,
                    });
                }
                word.push(x - 1);
            }
            let word = Word(word);
            let kind = if is_coxeter_relator(&word) {
                RelatorKind::R2
            } else {
                RelatorKind::R3
            };
            relators.push(Relator {
                word,
                kind,
                note: String::new(),
            });
        }
        Presentation::new(n, relators)
    }

    pub fn to_file(&self) -> PresentationFile {
        PresentationFile {
            generators: self.generators(),
            relators: self
                .relators()
                .iter()
                .map(|r| RelatorFile {
                    word: r.word.letters().iter().map(|x| x + 1).collect(),
                    kind: r.kind,
                    note: r.note.clone(),
                })
                .collect(),
            warnings: self.warnings.clone(),
        }
    }

    pub fn from_file(file: &PresentationFile) -> Result<Self, PresentationError> {
        let mut relators = Vec::new();
        for r in &file.relators {
            if let Some(&x) = r.word.iter().find(|&&x| x == 0 || x > file.generators) {
                return Err(PresentationError::LetterOutOfRange {
                    letter: x,
                    generators: file.generators,
                });
            }
            relators.push(Relator {
                word: Word(r.word.iter().map(|x| x - 1).collect()),
                kind: r.kind,
                note: r.note.clone(),
            });
        }
        let mut p = Presentation::new(file.generators, relators)?;
        p.warnings = file.warnings.clone();
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, PresentationError> {
        let file: PresentationFile =
            serde_json::from_str(text).map_err(|e| PresentationError::Format(e.to_string()))?;
        Self::from_file(&file)
    }
}

fn is_coxeter_relator(w: &Word) -> bool {
    let v = w.letters();
    v.len() >= 4
        && v.len().is_multiple_of(2)
        && v[0] != v[1]
        && v.chunks(2).all(|c| c[0] == v[0] && c[1] == v[1])
}
