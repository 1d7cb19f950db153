use std::io::Write;
use std::path::{Path, PathBuf};

use tempfile::NamedTempFile;

use crate::CliError;

/// A file to be written once the run has succeeded.
pub struct Artifact {
    pub name: String,
    pub bytes: Vec<u8>,
}

impl Artifact {
    pub fn new(name: impl Into<String>, bytes: Vec<u8>) -> Self {
        Artifact {
            name: name.into(),
            bytes,
        }
    }
}

/// Writes every artifact to a temporary file in `dir`, then renames them all
/// into place. A failure before the renames leaves nothing behind.
pub fn commit(dir: &Path, artifacts: &[Artifact]) -> Result<(), CliError> {
    let io = |path: PathBuf| move |source| CliError::Io { path, source };
    std::fs::create_dir_all(dir).map_err(io(dir.to_path_buf()))?;
    let mut staged = Vec::with_capacity(artifacts.len());
    for a in artifacts {
        let mut tmp = NamedTempFile::new_in(dir).map_err(io(dir.to_path_buf()))?;
        tmp.write_all(&a.bytes)
            .map_err(io(tmp.path().to_path_buf()))?;
        tmp.flush().map_err(io(tmp.path().to_path_buf()))?;
        staged.push((tmp, dir.join(&a.name)));
    }
    for (tmp, target) in staged {
        tmp.persist(&target).map_err(|e| CliError::Io {
            path: target.clone(),
            source: e.error,
        })?;
    }
    Ok(())
}
