//! Sampled trajectories with named channels and deterministic CSV output.

use crate::error::{Error, Result};

/// A sampled curve: time column plus named data channels, all equal length.
#[derive(Clone, Debug)]
pub struct Trajectory {
    names: Vec<String>,
    cols: Vec<Vec<f64>>,
}

impl Trajectory {
    /// `names` excludes the leading time column.
    pub fn new(names: &[&str]) -> Trajectory {
        let mut all = vec!["t".to_string()];
        all.extend(names.iter().map(|s| s.to_string()));
        let cols = vec![Vec::new(); all.len()];
        Trajectory { names: all, cols }
    }

    pub fn push_row(&mut self, t: f64, values: &[f64]) {
        assert_eq!(values.len() + 1, self.cols.len(), "row width mismatch");
        self.cols[0].push(t);
        for (c, v) in self.cols[1..].iter_mut().zip(values) {
            c.push(*v);
        }
    }

    pub fn len(&self) -> usize {
        self.cols[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn t(&self) -> &[f64] {
        &self.cols[0]
    }

    pub fn col(&self, name: &str) -> Result<&[f64]> {
        let i = self
            .names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Numeric(format!("no channel named {name:?}")))?;
        Ok(&self.cols[i])
    }

    /// CSV with a header row. Floats print in shortest round-trip form, so
    /// identical inputs give byte-identical output.
    pub fn write_csv<W: std::io::Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "{}", self.names.join(","))?;
        for i in 0..self.len() {
            let row: Vec<String> = self.cols.iter().map(|c| format!("{}", c[i])).collect();
            writeln!(out, "{}", row.join(","))?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is ascii")
    }
}

/// Uniform grid from 0 to t_max with step dt (last point clamped to t_max).
pub fn time_grid(t_max: f64, dt: f64) -> Vec<f64> {
    assert!(t_max > 0.0 && dt > 0.0, "grid must be positive");
    let n = (t_max / dt).ceil() as usize;
    let mut out: Vec<f64> = (0..=n).map(|k| (k as f64 * dt).min(t_max)).collect();
    if let Some(last) = out.last_mut() {
        *last = t_max;
    }
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip_is_deterministic() {
        let mut tr = Trajectory::new(&["x", "y"]);
        tr.push_row(0.0, &[1.0, 0.1]);
        tr.push_row(0.5, &[0.3333333333333333, -2.0]);
        let a = tr.to_csv_string();
        let b = tr.to_csv_string();
        assert_eq!(a, b);
        assert!(a.starts_with("t,x,y\n0,1,0.1\n"));
        assert!(a.contains("0.3333333333333333"));
    }

    #[test]
    fn grid_reaches_t_max() {
        let g = time_grid(1.0, 0.3);
        assert_eq!(g.first(), Some(&0.0));
        assert_eq!(g.last(), Some(&1.0));
        assert!(g.windows(2).all(|w| w[1] > w[0]));
    }
}
