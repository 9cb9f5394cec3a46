//! Plain-text CSV grid files.
//!
//! Layout: one comment header `# nx ny dx dy x0 y0 t` followed by rows
//! `j,k,x,y,re,im` (x fastest). Floats are printed with 17 significant
//! digits so write/read round-trips are bit-identical.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use thiserror::Error;

use crate::fourier2d::{Grid2D, GridMeta};
use crate::Complex;

#[derive(Debug, Error)]
pub enum GridIoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{path}: malformed header: {reason}")]
    MalformedHeader { path: String, reason: String },
    #[error("{path}: expected {expected} data rows, found {found}")]
    DimensionMismatch { path: String, expected: usize, found: usize },
    #[error("{path}: line {line}: malformed record")]
    BadRecord { path: String, line: usize },
}

/// Write a solution frame taken at time `t`.
pub fn write_grid_csv(grid: &Grid2D, t: f64, path: &Path) -> Result<(), GridIoError> {
    let mut out = BufWriter::new(File::create(path)?);
    let m = &grid.meta;
    writeln!(
        out,
        "# {} {} {:.16e} {:.16e} {:.16e} {:.16e} {:.16e}",
        m.nx, m.ny, m.dx, m.dy, m.x0, m.y0, t
    )?;
    for k in 0..m.ny {
        for j in 0..m.nx {
            let v = grid.values[m.idx(j, k)];
            writeln!(
                out,
                "{},{},{:.16e},{:.16e},{:.16e},{:.16e}",
                j,
                k,
                m.x(j),
                m.y(k),
                v.re,
                v.im
            )?;
        }
    }
    out.flush()?;
    Ok(())
}

/// Read a frame back; returns the grid and the frame time from the header.
pub fn read_grid_csv(path: &Path) -> Result<(Grid2D, f64), GridIoError> {
    let display = path.display().to_string();
    let header_err = |reason: &str| GridIoError::MalformedHeader {
        path: display.clone(),
        reason: reason.to_string(),
    };
    let file = BufReader::new(File::open(path)?);
    let mut lines = file.lines();
    let header = lines
        .next()
        .ok_or_else(|| header_err("empty file"))??;
    let rest = header
        .strip_prefix('#')
        .ok_or_else(|| header_err("missing `#` comment line"))?;
    let fields: Vec<&str> = rest.split_whitespace().collect();
    if fields.len() != 7 {
        return Err(header_err(&format!("expected 7 header fields, got {}", fields.len())));
    }
    let nx: usize = fields[0].parse().map_err(|_| header_err("bad nx"))?;
    let ny: usize = fields[1].parse().map_err(|_| header_err("bad ny"))?;
    let parse_f = |s: &str, name: &str| -> Result<f64, GridIoError> {
        s.parse().map_err(|_| header_err(&format!("bad {name}")))
    };
    let dx = parse_f(fields[2], "dx")?;
    let dy = parse_f(fields[3], "dy")?;
    let x0 = parse_f(fields[4], "x0")?;
    let y0 = parse_f(fields[5], "y0")?;
    let t = parse_f(fields[6], "t")?;
    if nx == 0 || ny == 0 || dx <= 0.0 || dy <= 0.0 {
        return Err(header_err("non-positive grid shape"));
    }
    let meta = GridMeta::new(nx, ny, dx, dy, x0, y0);
    let mut values = vec![Complex::new(0.0, 0.0); meta.len()];
    let mut count = 0usize;
    for (lineno, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split(',').collect();
        let bad = || GridIoError::BadRecord { path: display.clone(), line: lineno + 2 };
        if parts.len() != 6 {
            return Err(bad());
        }
        let j: usize = parts[0].parse().map_err(|_| bad())?;
        let k: usize = parts[1].parse().map_err(|_| bad())?;
        if j >= nx || k >= ny {
            return Err(bad());
        }
        let _x: f64 = parts[2].parse().map_err(|_| bad())?;
        let _y: f64 = parts[3].parse().map_err(|_| bad())?;
        let re: f64 = parts[4].parse().map_err(|_| bad())?;
        let im: f64 = parts[5].parse().map_err(|_| bad())?;
        values[meta.idx(j, k)] = Complex::new(re, im);
        count += 1;
    }
    if count != meta.len() {
        return Err(GridIoError::DimensionMismatch {
            path: display,
            expected: meta.len(),
            found: count,
        });
    }
    Ok((Grid2D::new(meta, values), t))
}
