//! Append-only JSONL cache of [`ReportRecord`]s keyed by canonical graph6.
//!
//! Later lines supersede earlier ones with the same key. A last line without
//! its newline is a partial write: it is dropped and the file is truncated
//! back to the last complete record before anything is appended.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::record::ReportRecord;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cache {path}, line {line}: {message}")]
    Corrupt { path: PathBuf, line: usize, message: String },
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    file: File,
    records: HashMap<String, ReportRecord>,
    /// Bytes of a partial final line removed on open.
    discarded: usize,
}

impl Cache {
    /// Opens or creates the cache, loading every complete record.
    pub fn open(path: &Path) -> Result<Cache, CacheError> {
        let io = |source| CacheError::Io { path: path.to_path_buf(), source };
        let mut file = OpenOptions::new().read(true).append(true).create(true).open(path).map_err(io)?;
        let mut text = String::new();
        file.read_to_string(&mut text).map_err(io)?;
        let complete = text.rfind('\n').map_or(0, |i| i + 1);
        let discarded = text.len() - complete;
        if discarded > 0 {
            file.set_len(complete as u64).map_err(io)?;
            file.seek(SeekFrom::End(0)).map_err(io)?;
        }
        let mut records = HashMap::new();
        for (i, line) in text[..complete].lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let record: ReportRecord = serde_json::from_str(line).map_err(|e| CacheError::Corrupt {
                path: path.to_path_buf(),
                line: i + 1,
                message: e.to_string(),
            })?;
            records.insert(record.key.clone(), record);
        }
        Ok(Cache { path: path.to_path_buf(), file, records, discarded })
    }

    pub fn get(&self, key: &str) -> Option<&ReportRecord> {
        self.records.get(key)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn discarded_bytes(&self) -> usize {
        self.discarded
    }

    /// Writes one record as a single line and flushes.
    pub fn append(&mut self, record: &ReportRecord) -> Result<(), CacheError> {
        let mut line = serde_json::to_string(record).expect("records serialize");
        line.push('\n');
        let io = |source| CacheError::Io { path: self.path.clone(), source };
        self.file.write_all(line.as_bytes()).map_err(io)?;
        self.file.flush().map_err(io)?;
        self.records.insert(record.key.clone(), record.clone());
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(key: &str) -> ReportRecord {
        ReportRecord::failure(key.to_string(), 3, "test".into(), "none".into())
    }

    #[test]
    fn append_and_reload() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let mut cache = Cache::open(&path).unwrap();
        assert!(cache.is_empty());
        cache.append(&record("Bw")).unwrap();
        cache.append(&record("Bg")).unwrap();
        drop(cache);
        let cache = Cache::open(&path).unwrap();
        assert_eq!(cache.len(), 2);
        assert!(cache.get("Bw").is_some());
        assert_eq!(cache.discarded_bytes(), 0);
    }

    #[test]
    fn truncated_tail_is_dropped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let mut cache = Cache::open(&path).unwrap();
        cache.append(&record("Bw")).unwrap();
        drop(cache);
        let full = std::fs::read_to_string(&path).unwrap();
        let partial = serde_json::to_string(&record("Bg")).unwrap();
        std::fs::write(&path, format!("{full}{}", &partial[..partial.len() / 2])).unwrap();
        let mut cache = Cache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        assert!(cache.get("Bg").is_none());
        assert_eq!(cache.discarded_bytes(), partial.len() / 2);
        assert_eq!(std::fs::read_to_string(&path).unwrap(), full);
        cache.append(&record("Bg")).unwrap();
        drop(cache);
        assert_eq!(Cache::open(&path).unwrap().len(), 2);
    }

    #[test]
    fn corrupt_middle_line_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        std::fs::write(&path, "{not json}\n").unwrap();
        assert!(matches!(Cache::open(&path), Err(CacheError::Corrupt { line: 1, .. })));
    }
}
