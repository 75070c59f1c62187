//! Output routing: stdout by default, or an atomically written file.
//!
//! Precedence for the destination: an explicit `--out PATH` wins, then a
//! configured output directory (`out_dir` key, then the `BIHAM_OUT_DIR`
//! environment variable) combined with the command's default file name, and
//! with none of those the data goes to stdout. Files are written to a
//! temporary sibling first and renamed into place, so readers never observe
//! a half-written file.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use crate::CliError;

/// Environment variable naming the default output directory.
pub(crate) const OUT_DIR_ENV: &str = "BIHAM_OUT_DIR";

/// Resolves the output destination; `None` means stdout.
pub(crate) fn resolve_target(
    flag: Option<PathBuf>,
    cfg_dir: Option<&Path>,
    default_name: &str,
) -> Option<PathBuf> {
    let env_dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from);
    resolve_with(flag, cfg_dir, env_dir, default_name)
}

fn resolve_with(
    flag: Option<PathBuf>,
    cfg_dir: Option<&Path>,
    env_dir: Option<PathBuf>,
    default_name: &str,
) -> Option<PathBuf> {
    if let Some(path) = flag {
        return Some(path);
    }
    if let Some(dir) = cfg_dir {
        return Some(dir.join(default_name));
    }
    env_dir.map(|dir| dir.join(default_name))
}

/// Writes `body` to the resolved target, or to stdout when there is none.
pub(crate) fn emit(target: Option<PathBuf>, body: &str) -> Result<(), CliError> {
    match target {
        Some(path) => write_atomic(&path, body).map_err(CliError::Io),
        None => io::stdout().write_all(body.as_bytes()).map_err(CliError::Io),
    }
}

fn write_atomic(path: &Path, body: &str) -> io::Result<()> {
    let dir = match path.parent() {
        Some(parent) if !parent.as_os_str().is_empty() => parent,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::Builder::new().prefix(".biham.").tempfile_in(dir)?;
    tmp.write_all(body.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|err| err.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flag_beats_config_dir_beats_env_dir() {
        let flag = Some(PathBuf::from("explicit.csv"));
        let cfg = PathBuf::from("cfg");
        let env = Some(PathBuf::from("env"));

        let got = resolve_with(flag, Some(&cfg), env.clone(), "scan.csv");
        assert_eq!(got, Some(PathBuf::from("explicit.csv")));

        let got = resolve_with(None, Some(&cfg), env.clone(), "scan.csv");
        assert_eq!(got, Some(PathBuf::from("cfg/scan.csv")));

        let got = resolve_with(None, None, env, "scan.csv");
        assert_eq!(got, Some(PathBuf::from("env/scan.csv")));

        assert_eq!(resolve_with(None, None, None, "scan.csv"), None);
    }

    #[test]
    fn atomic_write_creates_and_replaces_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");

        write_atomic(&path, "a,b\n1,2\n").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "a,b\n1,2\n");

        write_atomic(&path, "replaced\n").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "replaced\n");

        let leftovers: Vec<_> = std::fs::read_dir(dir.path())
            .unwrap()
            .map(|entry| entry.unwrap().file_name())
            .collect();
        assert_eq!(leftovers, vec![std::ffi::OsString::from("out.csv")]);
    }
}
