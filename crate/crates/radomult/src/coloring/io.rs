//! Coloring file format: line 1 holds `q n c t`, the body holds q^n
//! whitespace-separated colors in point-index order.

use super::Coloring;
use crate::error::{Error, Result};
use std::fmt::Write as _;
use std::path::Path;

pub fn read_coloring(path: &Path) -> Result<(Coloring, i32)> {
    let text = std::fs::read_to_string(path)?;
    parse_coloring(&text).map_err(|msg| Error::Parse {
        path: path.display().to_string(),
        msg,
    })
}

pub(crate) fn parse_coloring(text: &str) -> std::result::Result<(Coloring, i32), String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let header = lines.next().ok_or("empty file")?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 {
        return Err(format!("header must be `q n c t`, got {header:?}"));
    }
    let q: usize = fields[0].parse().map_err(|_| "bad q in header".to_string())?;
    let n: usize = fields[1].parse().map_err(|_| "bad n in header".to_string())?;
    let c: usize = fields[2].parse().map_err(|_| "bad c in header".to_string())?;
    let t: i32 = fields[3].parse().map_err(|_| "bad t in header".to_string())?;
    let mut colors = Vec::new();
    for line in lines {
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| format!("bad color entry {tok:?}"))?;
            if v == 0 || v > c {
                return Err(format!("color {v} out of range 1..={c}"));
            }
            colors.push(v as u8);
        }
    }
    let expect = q.pow(n as u32);
    if colors.len() != expect {
        return Err(format!("expected {expect} colors, got {}", colors.len()));
    }
    let coloring = Coloring::new(q, n, c, colors).map_err(|e| e.to_string())?;
    Ok((coloring, t))
}

pub fn write_coloring(gamma: &Coloring, t: i32, path: &Path) -> Result<()> {
    std::fs::write(path, format_coloring(gamma, t))?;
    Ok(())
}

pub(crate) fn format_coloring(gamma: &Coloring, t: i32) -> String {
    let mut out = String::new();
    writeln!(out, "{} {} {} {}", gamma.q(), gamma.dim(), gamma.num_colors(), t).unwrap();
    // one line of q entries per row keeps small colorings readable as grids
    for row in gamma.colors().chunks(gamma.q().max(1)) {
        let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Coloring::new(3, 2, 3, vec![1, 2, 2, 3, 1, 1, 2, 3, 3]).unwrap();
        let text = format_coloring(&g, -1);
        let (back, t) = parse_coloring(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(t, -1);
    }

    #[test]
    fn documented_example() {
        let (g, t) = parse_coloring("3 1 3 -1\n1 2 2\n").unwrap();
        assert_eq!(g.colors(), &[1, 2, 2]);
        assert_eq!(t, -1);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_coloring("3 1 3\n1 2 2\n").is_err()); // short header
        assert!(parse_coloring("3 1 3 -1\n1 2 4\n").is_err()); // color out of range
        assert!(parse_coloring("3 1 3 -1\n1 2\n").is_err()); // wrong length
        assert!(parse_coloring("3 1 3 -1\n1 2 2 1\n").is_err()); // wrong length
        assert!(parse_coloring("").is_err());
    }
}
