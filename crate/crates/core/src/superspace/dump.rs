//! Plain-text sparse matrix format.
//!
//! ```text
//! % sparse-matrix rows=4 cols=4 nnz=5
//! % source: e1⊗e1 e1⊗e2 e2⊗e1 e2⊗e2
//! % target: e1⊗e1 e1⊗e2 e2⊗e1 e2⊗e2
//! 0 0 q
//! 1 2 1
//! ```
//!
//! Each data line is `row col value`; the value is everything after the
//! second field and uses the `Q(q)` text syntax.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::scalar::RatFunc;
use crate::superspace::{SparseMat, SuperSpace};

pub fn write_dump(m: &SparseMat<RatFunc>, source: &SuperSpace, target: &SuperSpace) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "% sparse-matrix rows={} cols={} nnz={}",
        m.nrows(),
        m.ncols(),
        m.nnz()
    );
    let _ = writeln!(s, "% source: {}", source.labels().join(" "));
    let _ = writeln!(s, "% target: {}", target.labels().join(" "));
    for (i, j, v) in m.iter() {
        let _ = writeln!(s, "{i} {j} {v}");
    }
    s
}

/// A parsed dump: the matrix plus source and target labels.
#[derive(Debug, Clone)]
pub struct Dump {
    pub matrix: SparseMat<RatFunc>,
    pub source: Vec<String>,
    pub target: Vec<String>,
}

fn header_field(line: &str, key: &str) -> Result<usize> {
    line.split_whitespace()
        .find_map(|tok| tok.strip_prefix(key)?.strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("missing '{key}' in header")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad '{key}' in header")))
}

pub fn read_dump(text: &str) -> Result<Dump> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .filter(|l| l.starts_with("% sparse-matrix"))
        .ok_or_else(|| Error::Parse("missing sparse-matrix header".into()))?;
    let nrows = header_field(header, "rows")?;
    let ncols = header_field(header, "cols")?;
    let mut source = Vec::new();
    let mut target = Vec::new();
    let mut triplets = Vec::new();
    for line in lines {
        if let Some(rest) = line.strip_prefix("% source:") {
            source = rest.split_whitespace().map(str::to_string).collect();
        } else if let Some(rest) = line.strip_prefix("% target:") {
            target = rest.split_whitespace().map(str::to_string).collect();
        } else if line.starts_with('%') {
            continue;
        } else {
            let mut parts = line.trim().splitn(3, char::is_whitespace);
            let mut index = |name: &str| -> Result<usize> {
                parts
                    .next()
                    .and_then(|p| p.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad {name} index in '{line}'")))
            };
            let i = index("row")?;
            let j = index("col")?;
            let v: RatFunc = parts
                .next()
                .ok_or_else(|| Error::Parse(format!("missing value in '{line}'")))?
                .parse()?;
            triplets.push((i, j, v));
        }
    }
    Ok(Dump {
        matrix: SparseMat::from_triplets(nrows, ncols, triplets)?,
        source,
        target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superspace::BasisVector;

    #[test]
    fn round_trip() {
        let v = SuperSpace::new(vec![
            BasisVector::new("e1", 0, vec![]),
            BasisVector::new("e2", 1, vec![]),
        ])
        .unwrap();
        let m = SparseMat::from_triplets(
            2,
            2,
            [
                (0, 0, "q".parse().unwrap()),
                (0, 1, "(q^2 - q^-2)/(q - 3)".parse().unwrap()),
                (1, 1, "-1".parse().unwrap()),
            ],
        )
        .unwrap();
        let text = write_dump(&m, &v, &v);
        let back = read_dump(&text).unwrap();
        assert_eq!(back.matrix, m);
        assert_eq!(back.source, vec!["e1", "e2"]);
        assert_eq!(back.target, vec!["e1", "e2"]);
    }

    #[test]
    fn malformed_input() {
        assert!(read_dump("0 0 1").is_err());
        assert!(read_dump("% sparse-matrix rows=1 cols=1\n5 0 1").is_err());
        assert!(read_dump("% sparse-matrix rows=1 cols=1\n0 0 q +").is_err());
    }
}
