//! Run reports and the file I/O that feeds them.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use pwtree_core::{Budget, Graph};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Found,
    Absent,
    Exhausted,
    Holds,
    Fails,
    Value,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Found | Status::Holds | Status::Value => 0,
            Status::Absent | Status::Fails => 1,
            Status::Exhausted => 2,
        }
    }

    pub fn holds(ok: bool) -> Status {
        if ok {
            Status::Holds
        } else {
            Status::Fails
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct FileRecord {
    pub path: String,
    pub sha256: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct Certificate {
    pub kind: String,
    pub path: Option<String>,
    pub sha256: String,
    pub text: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<FileRecord>,
    pub outcome: Status,
    pub value: Option<serde_json::Value>,
    pub details: BTreeMap<String, serde_json::Value>,
    pub outputs: Vec<FileRecord>,
    pub certificate: Option<Certificate>,
    pub budget_spent: u64,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// `path` with `.ext` appended to the full file name.
pub fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

pub struct Session {
    pub budget: Budget,
    pub seed: u64,
    command: Vec<String>,
    inputs: Vec<FileRecord>,
    outputs: Vec<FileRecord>,
    details: BTreeMap<String, serde_json::Value>,
    value: Option<serde_json::Value>,
    certificate: Option<Certificate>,
}

impl Session {
    pub fn new(command: Vec<String>, budget: Option<u64>, seed: u64) -> Session {
        Session {
            budget: budget.map_or_else(Budget::unlimited, Budget::new),
            seed,
            command,
            inputs: Vec::new(),
            outputs: Vec::new(),
            details: BTreeMap::new(),
            value: None,
            certificate: None,
        }
    }

    pub fn read(&mut self, path: &Path) -> Result<String> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        self.inputs.push(FileRecord { path: path.display().to_string(), sha256: sha256_hex(text.as_bytes()) });
        Ok(text)
    }

    pub fn read_graph(&mut self, path: &Path) -> Result<Graph> {
        let text = self.read(path)?;
        pwtree_core::graph::parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn write(&mut self, path: &Path, text: &str) -> Result<()> {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        self.outputs.push(FileRecord { path: path.display().to_string(), sha256: sha256_hex(text.as_bytes()) });
        Ok(())
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(key.to_string(), serde_json::to_value(value).expect("details serialize"));
    }

    pub fn value(&mut self, value: impl Serialize) {
        self.value = Some(serde_json::to_value(value).expect("value serializes"));
    }

    /// Records a certificate. With a path it is written, read back from
    /// disk and only then checked; without one the text itself is checked.
    pub fn certify(
        &mut self,
        kind: &str,
        text: String,
        path: Option<&Path>,
        verify: impl FnOnce(&str) -> std::result::Result<(), String>,
    ) -> Result<()> {
        let loaded = match path {
            Some(p) => {
                fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
                fs::read_to_string(p).with_context(|| format!("reading back {}", p.display()))?
            }
            None => text,
        };
        if let Err(e) = verify(&loaded) {
            bail!("{kind} certificate failed re-verification: {e}");
        }
        self.certificate = Some(Certificate {
            kind: kind.to_string(),
            path: path.map(|p| p.display().to_string()),
            sha256: sha256_hex(loaded.as_bytes()),
            text: loaded,
        });
        Ok(())
    }

    pub fn finish(self, outcome: Status) -> RunReport {
        RunReport {
            command: self.command,
            inputs: self.inputs,
            outcome,
            value: self.value,
            details: self.details,
            outputs: self.outputs,
            certificate: self.certificate,
            budget_spent: self.budget.used(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Status::Found.exit_code(), 0);
        assert_eq!(Status::Fails.exit_code(), 1);
        assert_eq!(Status::Exhausted.exit_code(), 2);
    }

    #[test]
    fn sidecar_appends() {
        assert_eq!(sidecar(Path::new("dir/x.g"), "paths"), PathBuf::from("dir/x.g.paths"));
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn certificates_are_checked_after_reload() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("c.txt");
        let mut s = Session::new(vec![], None, 0);
        s.certify("demo", "1 2\n".into(), Some(&p), |t| if t == "1 2\n" { Ok(()) } else { Err("changed".into()) }).unwrap();
        assert!(s.certify("demo", "x".into(), None, |_| Err("bad".into())).is_err());
        let r = s.finish(Status::Found);
        assert_eq!(r.certificate.unwrap().path.unwrap(), p.display().to_string());
    }
}
