use std::fs;
use std::path::{Path, PathBuf};

use super::{EmbeddedVariety, VarietyMeta};
use crate::error::{Error, Result};
use crate::groebner::{parse_ideal_text, write_ideal_text};

/// A variety read from a `.ideal` file and its `.meta.json` sibling.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub variety: EmbeddedVariety,
    pub path: PathBuf,
}

fn meta_path(ideal_path: &Path) -> PathBuf {
    let stem = ideal_path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    ideal_path.with_file_name(format!("{stem}.meta.json"))
}

/// Writes `<dir>/<stem>.ideal` and `<dir>/<stem>.meta.json`; returns the ideal path.
pub fn write_fixture(dir: &Path, stem: &str, x: &EmbeddedVariety) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(format!("{stem}.ideal"));
    fs::write(&path, write_ideal_text(&x.ideal, &x.meta.meta_line()))?;
    let mut json = serde_json::to_string_pretty(&x.meta)?;
    json.push('\n');
    fs::write(meta_path(&path), json)?;
    Ok(path)
}

/// Reads a fixture. Metadata comes from the `meta` line, the `.meta.json`
/// sibling, or both (which must then agree).
pub fn read_fixture(path: &Path) -> Result<Fixture> {
    let text = fs::read_to_string(path)?;
    let file = parse_ideal_text(&text)?;
    let from_line = if file.meta.is_empty() {
        None
    } else {
        Some(VarietyMeta::from_meta_line(&file.meta)?)
    };
    let mp = meta_path(path);
    let from_json: Option<VarietyMeta> = if mp.exists() {
        Some(serde_json::from_str(&fs::read_to_string(&mp)?)?)
    } else {
        None
    };
    let meta = match (from_line, from_json) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::parse(1, "meta line disagrees with the .meta.json file"))
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => return Err(Error::parse(1, "fixture has no metadata")),
    };
    Ok(Fixture {
        variety: EmbeddedVariety::new(file.ideal, None, meta)?,
        path: path.to_path_buf(),
    })
}
