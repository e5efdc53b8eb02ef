//! Text formats and the workspace that ties files together.
//!
//! | extension | content |
//! |-----------|---------|
//! | `.alg`    | `elements:`, `zero:`, `one:`, `sum:` (`x+y=z;`), optional `q:`/`d:` (`x->y,`) |
//! | `.frame`  | `S:`, optional `T:`, `R:` (`s~t,`) |
//! | `.map`    | `algebra:` or `source:`/`target:`, then labelled `x->y` lists |
//! | `.states` | `algebra:`, optional `elements:` column order, one `label: p/q, ...` row per state |
//!
//! `#` starts a comment. Whitespace is insignificant except inside names.
//! A file is named by its stem; `.map` and `.states` files refer to
//! algebras by file stem or by bundled name (`L5`, `fig1`, `L2xL3`, ...).

mod formats;
mod lexer;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub use formats::{
    parse_algebra, parse_frame, parse_maps, parse_states, write_algebra, write_frame, write_maps, write_states,
    AlgebraDocument, MapDocument, NamedMap, StatesDocument,
};

use crate::algebra::{library, AlgebraMap, QEffectAlgebra, ValidationReport};
use crate::error::{Error, Result};
use crate::states::StateSet;
use crate::tense::Frame;

/// A loaded algebra with its (Q1)–(Q5) report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraEntry {
    pub algebra: QEffectAlgebra,
    pub q_report: ValidationReport,
    /// Pulled in from the bundled library by reference, not read from a file.
    pub bundled: bool,
}

/// A `.map` file with every map resolved against its algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapEntry {
    pub doc: MapDocument,
    pub tables: BTreeMap<String, AlgebraMap>,
}

impl MapEntry {
    pub fn map(&self, label: &str) -> Result<&AlgebraMap> {
        self.tables
            .get(label)
            .ok_or_else(|| Error::Precondition(format!("map file has no `{label}:`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatesEntry {
    pub algebra: String,
    pub set: StateSet,
}

/// Algebras, frames, maps and state sets by name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WorkspaceDocument {
    pub algebras: BTreeMap<String, AlgebraEntry>,
    pub frames: BTreeMap<String, Frame>,
    pub maps: BTreeMap<String, MapEntry>,
    pub states: BTreeMap<String, StatesEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    Algebra,
    Frame,
    Maps,
    States,
}

impl FileKind {
    pub fn of(path: &Path) -> Option<FileKind> {
        match path.extension()?.to_str()? {
            "alg" => Some(FileKind::Algebra),
            "frame" => Some(FileKind::Frame),
            "map" => Some(FileKind::Maps),
            "states" => Some(FileKind::States),
            _ => None,
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            FileKind::Algebra => "alg",
            FileKind::Frame => "frame",
            FileKind::Maps => "map",
            FileKind::States => "states",
        }
    }
}

fn stem(path: &str) -> String {
    Path::new(path)
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or(path)
        .to_string()
}

fn in_file(path: &str, e: Error) -> Error {
    Error::File {
        path: path.to_string(),
        source: Box::new(e),
    }
}

fn collect(errors: Vec<Error>) -> Result<()> {
    match errors.len() {
        0 => Ok(()),
        1 => Err(errors.into_iter().next().expect("one error")),
        _ => Err(Error::Multiple(errors)),
    }
}

impl WorkspaceDocument {
    /// Parses `(path, text)` pairs. Every file is parsed before any error is
    /// returned, so the result lists all failures.
    pub fn from_sources(sources: &[(String, String)]) -> Result<Self> {
        let mut ws = WorkspaceDocument::default();
        let mut errors = Vec::new();
        let mut map_docs = Vec::new();
        let mut state_docs = Vec::new();
        for (path, text) in sources {
            let name = stem(path);
            let Some(kind) = FileKind::of(Path::new(path)) else {
                errors.push(in_file(path, Error::Precondition("unknown file extension".into())));
                continue;
            };
            let taken = match kind {
                FileKind::Algebra => ws.algebras.contains_key(&name),
                FileKind::Frame => ws.frames.contains_key(&name),
                FileKind::Maps => map_docs.iter().any(|(_, n, _)| *n == name),
                FileKind::States => state_docs.iter().any(|(_, n, _)| *n == name),
            };
            if taken {
                errors.push(in_file(path, Error::Precondition(format!("duplicate {} name `{name}`", kind.extension()))));
                continue;
            }
            let parsed = match kind {
                FileKind::Algebra => parse_algebra(text).and_then(|d| d.load()).map(|(algebra, q_report)| {
                    ws.algebras.insert(name, AlgebraEntry { algebra, q_report, bundled: false });
                }),
                FileKind::Frame => parse_frame(text).map(|f| {
                    ws.frames.insert(name, f);
                }),
                FileKind::Maps => parse_maps(text).map(|d| map_docs.push((path, name, d))),
                FileKind::States => parse_states(text).map(|d| state_docs.push((path, name, d))),
            };
            if let Err(e) = parsed {
                errors.push(in_file(path, e));
            }
        }
        for (path, name, doc) in map_docs {
            match ws.resolve_maps(doc) {
                Ok(entry) => {
                    ws.maps.insert(name, entry);
                }
                Err(e) => errors.push(in_file(path, e)),
            }
        }
        for (path, name, doc) in state_docs {
            let resolved = ws.resolve_algebra(&doc.algebra).and_then(|alg| doc.resolve(alg));
            match resolved {
                Ok(set) => {
                    ws.states.insert(name, StatesEntry { algebra: doc.algebra, set });
                }
                Err(e) => errors.push(in_file(path, e)),
            }
        }
        collect(errors)?;
        Ok(ws)
    }

    fn resolve_maps(&mut self, doc: MapDocument) -> Result<MapEntry> {
        let source = self.resolve_algebra(&doc.source)?.names().to_vec();
        let target = self.resolve_algebra(&doc.target)?.names().to_vec();
        let mut tables = BTreeMap::new();
        for m in &doc.maps {
            tables.insert(m.label.clone(), doc.resolve(&m.label, &source, &target)?);
        }
        Ok(MapEntry { doc, tables })
    }

    /// Looks `name` up among loaded algebras, then in the bundled library.
    pub fn resolve_algebra(&mut self, name: &str) -> Result<&QEffectAlgebra> {
        if !self.algebras.contains_key(name) {
            let algebra = library::bundled(name).ok_or_else(|| Error::UnknownAlgebra(name.to_string()))?;
            let q_report = algebra.validate();
            self.algebras.insert(name.to_string(), AlgebraEntry { algebra, q_report, bundled: true });
        }
        Ok(&self.algebras[name].algebra)
    }

    pub fn algebra(&self, name: &str) -> Result<&AlgebraEntry> {
        self.algebras.get(name).ok_or_else(|| Error::UnknownAlgebra(name.to_string()))
    }

    /// Files in canonical order: algebras, frames, maps, states, each by name.
    /// Bundled algebras are not written.
    pub fn serialize(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (name, e) in &self.algebras {
            if !e.bundled {
                out.push((format!("{name}.alg"), write_algebra(&e.algebra)));
            }
        }
        for (name, f) in &self.frames {
            out.push((format!("{name}.frame"), write_frame(f)));
        }
        for (name, m) in &self.maps {
            let source = &self.algebras[&m.doc.source].algebra;
            let target = &self.algebras[&m.doc.target].algebra;
            let maps: Vec<(&str, &AlgebraMap)> = m.doc.maps.iter().map(|n| (n.label.as_str(), &m.tables[&n.label])).collect();
            out.push((
                format!("{name}.map"),
                write_maps((&m.doc.source, source.names()), (&m.doc.target, target.names()), &maps),
            ));
        }
        for (name, s) in &self.states {
            let alg = &self.algebras[&s.algebra].algebra;
            out.push((format!("{name}.states"), write_states(&s.algebra, alg, &s.set)));
        }
        out
    }
}

/// Reads and parses `files`.
pub fn parse_workspace<P: AsRef<Path>>(files: &[P]) -> Result<WorkspaceDocument> {
    let mut sources = Vec::new();
    let mut errors = Vec::new();
    for f in files {
        let path: PathBuf = f.as_ref().to_path_buf();
        let shown = path.display().to_string();
        match std::fs::read_to_string(&path) {
            Ok(text) => sources.push((shown, text)),
            Err(e) => errors.push(in_file(&shown, Error::Io(e.to_string()))),
        }
    }
    collect(errors)?;
    WorkspaceDocument::from_sources(&sources)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn src(path: &str, text: &str) -> (String, String) {
        (path.to_string(), text.to_string())
    }

    const HALF: &str = "elements: 0, h, 1\nzero: 0\none: 1\nsum: 0+0=0; 0+h=h; 0+1=1; h+h=1\n";

    #[test]
    fn cross_references_resolve() {
        let ws = WorkspaceDocument::from_sources(&[
            src("x/half.alg", HALF),
            src("gh.map", "algebra: half\nG: 0->0, h->h, 1->1\nH: 0->0, h->h, 1->1\n"),
            src("up.map", "source: half\ntarget: L2\nf: 0->0, h->1, 1->1\ng: 0->0, 1->1\n"),
            src("s.states", "algebra: half\nmid: 0, 1/2, 1\n"),
            src("f.frame", "S: 1, 2\nR: 1~2\n"),
        ])
        .unwrap();
        assert!(!ws.algebras["half"].bundled);
        assert!(ws.algebras["L2"].bundled);
        assert_eq!(ws.maps["up"].map("g").unwrap().table(), &[0, 2]);
        assert_eq!(ws.states["s"].set.len(), 1);
        let again = WorkspaceDocument::from_sources(&ws.serialize()).unwrap();
        assert_eq!(again, ws);
        assert_eq!(again.serialize(), ws.serialize());
    }

    #[test]
    fn all_errors_are_reported() {
        let err = WorkspaceDocument::from_sources(&[
            src("a.alg", ""),
            src("b.map", "algebra: nowhere\nG: 0->0\n"),
            src("c.txt", ""),
            src("d.alg", HALF),
            src("e/d.alg", HALF),
        ])
        .unwrap_err();
        let Error::Multiple(list) = err else { panic!("{err}") };
        assert_eq!(list.len(), 4);
        let text: Vec<String> = list.iter().map(|e| e.to_string()).collect();
        assert_eq!(text[0], "a.alg: line 1: no algebra defined");
        assert!(text.iter().any(|t| t.contains("unknown algebra `nowhere`")));
        assert!(text.iter().any(|t| t.contains("duplicate alg name `d`")));
    }

    #[test]
    fn missing_file() {
        assert!(matches!(parse_workspace(&["/nonexistent/x.alg"]).unwrap_err(), Error::File { .. }));
    }
}
