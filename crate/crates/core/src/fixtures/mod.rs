//! Fixture files: fusion data and monoidal structures on module categories,
//! plus discovery of the bundled fixture directory.
//!
//! The directory is `$MONOCAT_FIXTURES` if set, otherwise the `fixtures`
//! directory of this crate. It holds `fusion/`, `watts/` and `mutants/`.

mod watts;

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::fusion::{FusionData, FusionError};
use crate::watts::WattsError;

pub use self::watts::{CheckGroup, CheckSet, Mutation, WattsFixture};

pub const FIXTURES_ENV: &str = "MONOCAT_FIXTURES";

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed fixture: {0}")]
    Parse(String),
    #[error("invalid fixture: {0}")]
    Invalid(String),
    #[error("no fixture named `{0}`")]
    NotFound(String),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    Watts(#[from] WattsError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FixtureKind {
    Fusion,
    Watts,
}

/// A fixture file found in the bundled directory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureEntry {
    pub name: String,
    pub path: PathBuf,
    pub kind: FixtureKind,
    pub mutant: bool,
}

pub enum Fixture {
    Fusion(FusionData),
    Watts(Box<WattsFixture>),
}

pub fn fixtures_dir() -> PathBuf {
    match std::env::var_os(FIXTURES_ENV) {
        Some(dir) => PathBuf::from(dir),
        None => PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")),
    }
}

fn read(path: &Path) -> Result<String, FixtureError> {
    fs::read_to_string(path).map_err(|source| FixtureError::Io { path: path.display().to_string(), source })
}

/// Decides the kind of a fixture from its top-level keys.
pub fn kind_of(text: &str) -> Result<FixtureKind, FixtureError> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| FixtureError::Parse(e.to_string()))?;
    let obj = v.as_object().ok_or_else(|| FixtureError::Parse("fixture must be a JSON object".into()))?;
    if obj.contains_key("tensor") {
        Ok(FixtureKind::Watts)
    } else if obj.contains_key("simples") {
        Ok(FixtureKind::Fusion)
    } else {
        Err(FixtureError::Parse("expected `simples` (fusion data) or `tensor` (module category)".into()))
    }
}

pub fn load(text: &str) -> Result<Fixture, FixtureError> {
    match kind_of(text)? {
        FixtureKind::Fusion => Ok(Fixture::Fusion(FusionData::from_json(text).map_err(|e| match e {
            FusionError::Parse(m) => FixtureError::Parse(m),
            other => FixtureError::Fusion(other),
        })?)),
        FixtureKind::Watts => Ok(Fixture::Watts(Box::new(WattsFixture::from_json(text)?))),
    }
}

pub fn load_path(path: &Path) -> Result<Fixture, FixtureError> {
    load(&read(path)?)
}

/// Every fixture in the bundled directory, sorted by subdirectory and name.
pub fn bundled_fixtures() -> Result<Vec<FixtureEntry>, FixtureError> {
    let root = fixtures_dir();
    let mut out = Vec::new();
    for sub in ["fusion", "watts", "mutants"] {
        let dir = root.join(sub);
        let Ok(entries) = fs::read_dir(&dir) else { continue };
        let mut paths: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        for path in paths {
            let kind = kind_of(&read(&path)?)?;
            let name = path.file_stem().expect("json file").to_string_lossy().into_owned();
            out.push(FixtureEntry { name, path, kind, mutant: sub == "mutants" });
        }
    }
    Ok(out)
}

/// A path on disk, or the name of a bundled fixture.
pub fn resolve(name_or_path: &str) -> Result<PathBuf, FixtureError> {
    let p = Path::new(name_or_path);
    if p.is_file() {
        return Ok(p.to_path_buf());
    }
    bundled_fixtures()?
        .into_iter()
        .find(|e| e.name == name_or_path)
        .map(|e| e.path)
        .ok_or_else(|| FixtureError::NotFound(name_or_path.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_are_detected() {
        assert_eq!(kind_of(r#"{"simples":["1"]}"#).unwrap(), FixtureKind::Fusion);
        assert_eq!(kind_of(r#"{"tensor":{}}"#).unwrap(), FixtureKind::Watts);
        assert!(matches!(kind_of("[1]"), Err(FixtureError::Parse(_))));
        assert!(matches!(kind_of("{"), Err(FixtureError::Parse(_))));
    }
}
