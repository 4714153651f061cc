//! Text format for explicit generator lists.
//!
//! One element per line: the `n²` matrix entries as integer encodings in row
//! major order, then `;` and the automorphism exponent. Blank lines and text
//! after `#` are ignored.
//!
//! ```text
//! # diag(ω, 1)·φ over GF(9)
//! 3 0 0 1 ; 1
//! ```

use super::SemilinearElem;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::Matrix;

pub fn parse_generators(text: &str, n: usize, f: &Field) -> Result<Vec<SemilinearElem>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let (mat, aut) = match line.split_once(';') {
            Some((m, a)) => (m, a.trim()),
            None => (line, "0"),
        };
        let aut: i64 = aut.parse().map_err(|_| err("bad automorphism exponent"))?;
        let entries = mat
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| err("bad matrix entry"))
                    .and_then(|c| f.elem(c).map_err(|_| err("entry out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        if entries.len() != n * n {
            return Err(err(&format!(
                "expected {} entries, found {}",
                n * n,
                entries.len()
            )));
        }
        let g = Matrix::new(n, n, entries)?;
        out.push(SemilinearElem::new(f, g, aut).map_err(|e| err(&e.to_string()))?);
    }
    Ok(out)
}

pub fn format_generators(gens: &[SemilinearElem]) -> String {
    let mut s = String::new();
    for x in gens {
        let ents: Vec<String> =
            x.g.entries()
                .iter()
                .map(|a| a.encoding().to_string())
                .collect();
        s.push_str(&ents.join(" "));
        s.push_str(&format!(" ; {}\n", x.aut));
    }
    s
}
