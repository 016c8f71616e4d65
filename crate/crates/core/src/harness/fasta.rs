use std::io::BufRead;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastaRecord {
    pub id: String,
    pub description: String,
    /// Upper-cased residues, all in the alphabet (wildcard included).
    pub sequence: Vec<u8>,
}

/// Reads every record from `reader`, in file order.
///
/// Residue lines are concatenated and upper-cased; blank lines are ignored and
/// both LF and CRLF line endings are accepted. Data before the first header,
/// a record without residues and residues outside `alphabet` are errors.
pub fn parse_fasta<R: BufRead>(mut reader: R, alphabet: &Alphabet) -> Result<Vec<FastaRecord>> {
    let mut records = Vec::new();
    // header line number of the open record, for empty-sequence errors
    let mut open: Option<(usize, FastaRecord)> = None;
    let mut buf = Vec::new();
    let mut line_no = 0;

    loop {
        buf.clear();
        if reader.read_until(b'\n', &mut buf)? == 0 {
            break;
        }
        line_no += 1;
        let line = buf.trim_ascii();
        if line.is_empty() {
            continue;
        }

        if let Some(header) = line.strip_prefix(b">") {
            if let Some((at, record)) = open.take() {
                records.push(finish(at, record)?);
            }
            let header = String::from_utf8_lossy(header);
            let header = header.trim();
            let (id, description) = match header.split_once(char::is_whitespace) {
                Some((id, rest)) => (id, rest.trim()),
                None => (header, ""),
            };
            if id.is_empty() {
                return Err(Error::MalformedFasta {
                    line: line_no,
                    reason: "header has no identifier".into(),
                });
            }
            open = Some((
                line_no,
                FastaRecord {
                    id: id.to_string(),
                    description: description.to_string(),
                    sequence: Vec::new(),
                },
            ));
            continue;
        }

        let Some((_, record)) = open.as_mut() else {
            return Err(Error::MalformedFasta {
                line: line_no,
                reason: "sequence data before the first '>' header".into(),
            });
        };
        for (column, &raw) in line.iter().enumerate() {
            let residue = raw.to_ascii_uppercase();
            if !alphabet.contains(residue) {
                return Err(Error::MalformedFasta {
                    line: line_no,
                    reason: format!(
                        "illegal residue {:?} at column {}",
                        char::from(raw),
                        column + 1
                    ),
                });
            }
            record.sequence.push(residue);
        }
    }

    if let Some((at, record)) = open {
        records.push(finish(at, record)?);
    }
    Ok(records)
}

fn finish(header_line: usize, record: FastaRecord) -> Result<FastaRecord> {
    if record.sequence.is_empty() {
        return Err(Error::MalformedFasta {
            line: header_line,
            reason: format!("record {:?} has an empty sequence", record.id),
        });
    }
    Ok(record)
}
