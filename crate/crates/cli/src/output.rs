use crate::error::CliError;
use std::io::Write;
use std::path::Path;

/// Writes `text` atomically to `out`, or to stdout when `out` is `None`.
pub fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => egstab::verify::write_atomic(p, text.as_bytes()).map_err(|e| match e {
            egstab::Error::Io(source) => CliError::Io {
                path: p.to_path_buf(),
                source,
            },
            other => CliError::Core(other),
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(CliError::io("<stdout>"))
        }
    }
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(CliError::io(path))
}
