//! Line-oriented word files: one word per line, blank lines ignored.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{CliError, Result};

pub fn parse_lines(text: &str) -> Vec<String> {
    text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect()
}

pub fn read_lines(path: &Path) -> Result<Vec<String>> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    Ok(parse_lines(&text))
}

/// Writes `lines`, each newline-terminated.
pub fn write_lines<S: AsRef<str>>(path: &Path, lines: &[S]) -> Result<()> {
    let io = |source| CliError::Io { path: path.to_path_buf(), source };
    let mut file = fs::File::create(path).map_err(io)?;
    for line in lines {
        writeln!(file, "{}", line.as_ref()).map_err(io)?;
    }
    file.flush().map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blank_lines_and_padding_are_dropped() {
        assert_eq!(parse_lines("0101\n\n  11 \r\n"), ["0101", "11"]);
        assert!(parse_lines("").is_empty());
    }

    #[test]
    fn files_round_trip() {
        let dir = std::env::temp_dir().join(format!("delcode-io-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("words.txt");
        write_lines(&path, &["10110", "0"]).unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "10110\n0\n");
        assert_eq!(read_lines(&path).unwrap(), ["10110", "0"]);
        fs::remove_dir_all(&dir).unwrap();
        assert!(matches!(read_lines(&path), Err(CliError::Io { .. })));
    }
}
