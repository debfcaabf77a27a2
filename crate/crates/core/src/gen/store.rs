//! Deduplicating code store for one order. Codes are held in an ordered set
//! until it exceeds its entry budget; the set is then written to a scratch
//! file as a sorted run of newline-delimited digraph6 records, and all runs
//! are k-way merged when the order is finished.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::io::{self, BufRead, BufReader, BufWriter, Seek, SeekFrom, Write};
use std::path::PathBuf;

use tempfile::NamedTempFile;

use crate::canon::CanonicalCode;

pub(crate) struct DedupStore {
    budget: usize,
    scratch: PathBuf,
    mem: BTreeSet<CanonicalCode>,
    runs: Vec<NamedTempFile>,
}

impl DedupStore {
    pub(crate) fn new(budget: usize, scratch: PathBuf) -> Self {
        DedupStore {
            budget: budget.max(1),
            scratch,
            mem: BTreeSet::new(),
            runs: Vec::new(),
        }
    }

    pub(crate) fn insert(&mut self, code: CanonicalCode) -> io::Result<()> {
        self.mem.insert(code);
        if self.mem.len() > self.budget {
            self.spill()?;
        }
        Ok(())
    }

    #[cfg(test)]
    pub(crate) fn spilled_runs(&self) -> usize {
        self.runs.len()
    }

    fn spill(&mut self) -> io::Result<()> {
        let mut file = NamedTempFile::new_in(&self.scratch)?;
        {
            let mut w = BufWriter::new(file.as_file_mut());
            for code in std::mem::take(&mut self.mem) {
                w.write_all(code.as_bytes())?;
                w.write_all(b"\n")?;
            }
            w.flush()?;
        }
        self.runs.push(file);
        Ok(())
    }

    /// All distinct codes, sorted.
    pub(crate) fn finish(mut self) -> io::Result<Vec<CanonicalCode>> {
        if self.runs.is_empty() {
            return Ok(self.mem.into_iter().collect());
        }
        let mut readers = Vec::with_capacity(self.runs.len());
        for run in &mut self.runs {
            let f = run.as_file_mut();
            f.seek(SeekFrom::Start(0))?;
            readers.push(BufReader::new(f.try_clone()?).lines());
        }
        let mut mem = std::mem::take(&mut self.mem).into_iter();
        let source_mem = readers.len();
        let mut heap: BinaryHeap<Reverse<(String, usize)>> = BinaryHeap::new();
        for (i, r) in readers.iter_mut().enumerate() {
            if let Some(line) = r.next() {
                heap.push(Reverse((line?, i)));
            }
        }
        if let Some(code) = mem.next() {
            heap.push(Reverse((code.as_str().to_owned(), source_mem)));
        }
        let mut out: Vec<CanonicalCode> = Vec::new();
        while let Some(Reverse((line, src))) = heap.pop() {
            if out.last().map(|c| c.as_str()) != Some(line.as_str()) {
                let code = CanonicalCode::from_canonical_record(&line)
                    .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e.to_string()))?;
                out.push(code);
            }
            let next = if src == source_mem {
                mem.next().map(|c| Ok(c.as_str().to_owned()))
            } else {
                readers[src].next()
            };
            if let Some(line) = next {
                heap.push(Reverse((line?, src)));
            }
        }
        Ok(out)
    }
}
