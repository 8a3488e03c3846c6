//! Output sink: stdout by default, or an atomic file write (temp file
//! in the same directory, then rename) when `--out` is given.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use crate::CliError;

pub fn emit(out: Option<&Path>, body: &str) -> Result<(), CliError> {
    match out {
        None => {
            print!("{body}");
            std::io::stdout().flush().ok();
            Ok(())
        }
        Some(path) => write_atomic(path, body.as_bytes()),
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let err = |detail: String| CliError::WriteFile {
        path: path.display().to_string(),
        detail,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let name = path
        .file_name()
        .ok_or_else(|| err("path has no file name".to_string()))?
        .to_string_lossy()
        .into_owned();
    let tmp = dir.join(format!(".{}.{}.tmp", name, std::process::id()));
    fs::write(&tmp, bytes).map_err(|e| err(e.to_string()))?;
    fs::rename(&tmp, path).map_err(|e| {
        fs::remove_file(&tmp).ok();
        err(e.to_string())
    })
}
