//! CSV rendering, summary and MANIFEST writing.

use std::fs;
use std::io;
use std::path::Path;

use sha2::{Digest, Sha256};

use super::analyses::Table;

/// Renders a table as CSV bytes with `\n` line endings.
pub fn render_csv(table: &Table) -> io::Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row.iter().map(|c| c.render()))?;
    }
    w.into_inner().map_err(|e| io::Error::other(e.to_string()))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Accumulates written files so the MANIFEST can list them in write order.
#[derive(Debug, Default)]
pub struct Manifest {
    entries: Vec<(String, String, usize)>,
}

impl Manifest {
    /// Writes `bytes` to `root/rel` and records its checksum and row count.
    pub fn write(&mut self, root: &Path, rel: &str, bytes: &[u8], rows: usize) -> io::Result<()> {
        let path = root.join(rel);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        fs::write(&path, bytes)?;
        self.entries.push((rel.to_string(), sha256_hex(bytes), rows));
        Ok(())
    }

    pub fn entries(&self) -> &[(String, String, usize)] {
        &self.entries
    }

    pub fn finish(&self, root: &Path) -> io::Result<()> {
        let mut text = String::new();
        for (path, hash, rows) in &self.entries {
            text.push_str(&format!("{path} {hash} {rows}\n"));
        }
        fs::write(root.join("MANIFEST"), text)
    }
}

#[cfg(test)]
mod tests {
    use super::super::analyses::Cell;
    use super::*;

    #[test]
    fn csv_format_is_fixed() {
        let t = Table {
            file: "t.csv".into(),
            header: vec!["n".into(), "x".into(), "y".into()],
            rows: vec![vec![Cell::Int(3), Cell::Float(0.1), Cell::Blank]],
        };
        let s = String::from_utf8(render_csv(&t).unwrap()).unwrap();
        assert_eq!(s, "n,x,y\n3,1.0000000000000001e-1,\n");
    }

    #[test]
    fn sha_of_empty_input() {
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }
}
