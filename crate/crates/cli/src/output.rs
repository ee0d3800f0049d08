use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::args::Format;
use crate::CliError;

/// Where artifacts go: files under `--out`, or stdout for tables.
pub struct Sink {
    pub dir: Option<PathBuf>,
    pub format: Format,
    pub svg: bool,
}

pub fn table<T: Serialize>(rows: &[T], format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(rows).map_err(|e| CliError::Output(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r)
                    .map_err(|e| CliError::Output(e.to_string()))?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| CliError::Output(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
        }
    }
}

impl Sink {
    fn ext(&self) -> &'static str {
        match self.format {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }

    /// Writes a table as `<stem>.csv` / `<stem>.json`, or to stdout.
    pub fn rows<T: Serialize>(&self, stem: &str, rows: &[T]) -> Result<(), CliError> {
        let text = table(rows, self.format)?;
        match &self.dir {
            Some(dir) => write_file(&dir.join(format!("{stem}.{}", self.ext())), &text),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())
                    .map_err(|e| CliError::Output(e.to_string()))
            }
        }
    }

    /// Writes a named file under `--out`; printed to stdout when `--out` is
    /// absent and `to_stdout` is set, dropped otherwise.
    pub fn file(&self, name: &str, text: &str, to_stdout: bool) -> Result<(), CliError> {
        match &self.dir {
            Some(dir) => write_file(&dir.join(name), text),
            None if to_stdout => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())
                    .map_err(|e| CliError::Output(e.to_string()))
            }
            None => Ok(()),
        }
    }

    pub fn svg(&self, name: &str, render: impl FnOnce() -> String) -> Result<(), CliError> {
        if !self.svg {
            return Ok(());
        }
        let dir = self
            .dir
            .as_ref()
            .ok_or_else(|| CliError::Input("--svg needs --out".into()))?;
        write_file(&dir.join(name), &render())
    }
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)
            .map_err(|e| CliError::Output(format!("{}: {e}", parent.display())))?;
    }
    fs::write(path, text).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))
}
