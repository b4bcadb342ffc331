//! Versioned cache files: a `# critline ...` header line carrying key=value
//! pairs (kind, format version, generating config hash), then plain CSV.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq)]
pub struct CacheHeader {
    pub kind: String,
    pub config_hash: String,
    pub extra: BTreeMap<String, String>,
}

impl CacheHeader {
    pub fn new(kind: &str, config_hash: &str) -> Self {
        CacheHeader { kind: kind.into(), config_hash: config_hash.into(), extra: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.extra.insert(key.into(), value.to_string());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.extra.get(key).map(String::as_str)
    }

    pub fn get_f64(&self, key: &str) -> Result<f64> {
        self.get(key)
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Parse(format!("header field {key} missing or not a number")))
    }

    fn line(&self) -> String {
        let mut s = format!(
            "# critline kind={} version={} config={}",
            self.kind, FORMAT_VERSION, self.config_hash
        );
        for (k, v) in &self.extra {
            s.push_str(&format!(" {k}={v}"));
        }
        s
    }

    fn parse(line: &str) -> Result<Self> {
        let rest = line
            .strip_prefix("# critline ")
            .ok_or_else(|| Error::Parse("missing cache header line".into()))?;
        let mut fields = BTreeMap::new();
        for tok in rest.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header token {tok}")))?;
            fields.insert(k.to_string(), v.to_string());
        }
        let version: u32 = fields.remove("version").and_then(|v| v.parse().ok()).unwrap_or(0);
        if version != FORMAT_VERSION {
            return Err(Error::Parse(format!("cache format version {version}, expected {FORMAT_VERSION}")));
        }
        let kind = fields.remove("kind").ok_or_else(|| Error::Parse("header lacks kind".into()))?;
        let config_hash =
            fields.remove("config").ok_or_else(|| Error::Parse("header lacks config".into()))?;
        Ok(CacheHeader { kind, config_hash, extra: fields })
    }
}

/// The header line as written to cache files.
pub fn header_line(h: &CacheHeader) -> String {
    h.line()
}

pub fn parse_header_line(line: &str) -> Result<CacheHeader> {
    CacheHeader::parse(line)
}

/// Hex SHA-256 of a canonical description string, shortened to 16 digits.
pub fn config_hash(description: &str) -> String {
    let digest = Sha256::digest(description.as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// Writes the header line followed by CSV produced by `body`.
pub fn write_csv<F>(path: &Path, header: &CacheHeader, body: F) -> Result<()>
where
    F: FnOnce(&mut csv::Writer<&mut BufWriter<File>>) -> Result<()>,
{
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "{}", header.line())?;
    {
        let mut w = csv::Writer::from_writer(&mut out);
        body(&mut w)?;
        w.flush()?;
    }
    out.flush()?;
    Ok(())
}

/// Reads only the header line of a cache file.
pub fn read_header(path: &Path) -> Result<CacheHeader> {
    let mut first = String::new();
    BufReader::new(File::open(path)?).read_line(&mut first)?;
    CacheHeader::parse(first.trim_end())
}

/// Reads header and CSV records of a cache file.
pub fn read_csv(path: &Path) -> Result<(CacheHeader, csv::Reader<File>)> {
    let header = read_header(path)?;
    let reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_path(path)?;
    Ok((header, reader))
}
