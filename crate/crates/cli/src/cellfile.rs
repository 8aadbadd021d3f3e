use std::fmt::Write as _;

use rkdual_core::cells::CellularComplex;
use thiserror::Error;

/// One line of a cell-incidence file: `id dim sign:boundary_id ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellRecord {
    pub id: String,
    pub dim: i32,
    pub boundary: Vec<(i64, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct CellParseError {
    pub line: usize,
    pub message: String,
}

/// Cells of `X_K` in degree order with their signed boundaries.
pub fn emit_cells(cc: &CellularComplex) -> Vec<CellRecord> {
    let c = cc.complex();
    let mut out = Vec::new();
    for q in c.degrees() {
        let d = c.differential(q).columns();
        let below = c.generators(q - 1);
        for (i, g) in c.generators(q).iter().enumerate() {
            let boundary = d
                .get(i)
                .map(|col| col.iter().map(|&(r, v)| (v, below[r].name.clone())).collect())
                .unwrap_or_default();
            out.push(CellRecord {
                id: g.name.clone(),
                dim: q,
                boundary,
            });
        }
    }
    out
}

pub fn render_cells(records: &[CellRecord]) -> String {
    let mut s = String::new();
    for r in records {
        write!(s, "{} {}", r.id, r.dim).expect("writing to a String");
        for (v, id) in &r.boundary {
            write!(s, " {v}:{id}").expect("writing to a String");
        }
        s.push('\n');
    }
    s
}

fn parse_id(token: &str) -> Option<&str> {
    let inner = token.strip_prefix('(')?.strip_suffix(')')?;
    let (top, sigma) = inner.split_once('|')?;
    let ok = |part: &str| {
        !part.is_empty()
            && part.split(',').all(|v| !v.is_empty() && !v.contains(['(', ')', '|', ':']))
    };
    (ok(top) && ok(sigma)).then_some(token)
}

/// Parses a cell-incidence file. Lines starting with `#` are comments.
pub fn parse_cells(text: &str) -> Result<Vec<CellRecord>, CellParseError> {
    let mut out = Vec::new();
    for (n, line) in text.split('\n').enumerate() {
        let err = |message: String| CellParseError { line: n + 1, message };
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.contains('\r') {
            return Err(err("carriage return in line".into()));
        }
        let mut tokens = line.split(' ');
        let id = tokens.next().unwrap_or_default();
        let id = parse_id(id).ok_or_else(|| err(format!("malformed cell id `{id}`")))?;
        let dim = tokens
            .next()
            .ok_or_else(|| err("missing dimension".into()))?
            .parse::<i32>()
            .map_err(|e| err(format!("bad dimension: {e}")))?;
        if dim < 0 {
            return Err(err("negative dimension".into()));
        }
        let mut boundary = Vec::new();
        for t in tokens {
            let (sign, face) = t
                .split_once(':')
                .ok_or_else(|| err(format!("boundary entry `{t}` lacks `sign:`")))?;
            let sign = sign.parse::<i64>().map_err(|e| err(format!("bad coefficient `{sign}`: {e}")))?;
            if sign == 0 {
                return Err(err("zero coefficient".into()));
            }
            let face = parse_id(face).ok_or_else(|| err(format!("malformed cell id `{face}`")))?;
            boundary.push((sign, face.to_string()));
        }
        out.push(CellRecord {
            id: id.to_string(),
            dim,
            boundary,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rkdual_core::cells::{cellular_complex, OrientationPair};
    use rkdual_core::corpus;

    fn records(ks: &rkdual_core::simplicial::KSpace) -> Vec<CellRecord> {
        emit_cells(&cellular_complex(ks, &OrientationPair::standard(ks)).unwrap())
    }

    #[test]
    fn point_has_one_cell() {
        let r = records(&corpus::point());
        assert_eq!(render_cells(&r), "(p|p) 0\n");
    }

    #[test]
    fn edge_records() {
        let r = records(&corpus::edge());
        assert_eq!(r.len(), 5);
        let ab_a = r.iter().find(|c| c.id == "(a,b|a)").unwrap();
        assert_eq!(ab_a.dim, 1);
        let faces: Vec<&str> = ab_a.boundary.iter().map(|(_, f)| f.as_str()).collect();
        assert_eq!(faces, ["(a|a)", "(a,b|a,b)"]);
        assert!(ab_a.boundary.iter().all(|(v, _)| v.abs() == 1));
    }

    #[test]
    fn render_then_parse_round_trips() {
        for (_, ks) in corpus::all() {
            let r = records(&ks);
            assert_eq!(parse_cells(&render_cells(&r)).unwrap(), r);
        }
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = parse_cells("(a|a) 0\n(a,b|a) x\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(parse_cells("(a|a) 0 0:(a|a)").is_err());
        assert!(parse_cells("a|a 0").is_err());
        assert!(parse_cells("(a|a) 0 1:(a|)").is_err());
        assert!(parse_cells("(a|a) 0\r\n").is_err());
    }
}
