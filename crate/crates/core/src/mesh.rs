//! One-dimensional meshes of the truncated size domain `[0, v_max]`.
//!
//! Cells are indexed from 0 here; cell `i` is `[edges[i], edges[i + 1]]`.
//! Only the edges are stored; centers and widths are always derived from them.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Mesh {
    edges: Vec<f64>,
}

impl Mesh {
    /// Builds a mesh from strictly increasing, finite, nonnegative edges.
    pub fn from_edges(edges: Vec<f64>) -> Result<Self> {
        if edges.len() < 2 {
            return Err(Error::InvalidMesh(format!(
                "need at least two edges, got {}",
                edges.len()
            )));
        }
        if edges.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidMesh("non-finite edge".into()));
        }
        if edges[0] < 0.0 {
            return Err(Error::InvalidMesh(format!(
                "left edge {} is negative",
                edges[0]
            )));
        }
        if let Some(w) = edges.windows(2).find(|w| w[1] <= w[0]) {
            return Err(Error::InvalidMesh(format!(
                "edges not strictly increasing: {} then {}",
                w[0], w[1]
            )));
        }
        Ok(Mesh { edges })
    }

    /// `num_cells` equal cells on `[0, v_max]`.
    pub fn uniform(v_max: f64, num_cells: usize) -> Result<Self> {
        Self::power(v_max, num_cells, 1.0)
    }

    /// Graded mesh with edges `v_max (i / L)^exponent`, `i = 0..=L`.
    pub fn power(v_max: f64, num_cells: usize, exponent: f64) -> Result<Self> {
        if !v_max.is_finite() || v_max <= 0.0 {
            return Err(Error::InvalidMesh(format!("v_max must be positive, got {v_max}")));
        }
        if !exponent.is_finite() || exponent < 1.0 {
            return Err(Error::InvalidMesh(format!("exponent must be >= 1, got {exponent}")));
        }
        if num_cells == 0 {
            return Err(Error::InvalidMesh("mesh needs at least one cell".into()));
        }
        let l = num_cells as f64;
        let mut edges: Vec<f64> = (0..=num_cells)
            .map(|i| v_max * (i as f64 / l).powf(exponent))
            .collect();
        edges[num_cells] = v_max;
        Self::from_edges(edges)
    }

    /// Mesh with a first cell `[0, v_lo]` followed by edges distributed
    /// uniformly in log scale between `v_lo` and `v_max` (`num_cells` cells in
    /// total).
    pub fn log(v_lo: f64, v_max: f64, num_cells: usize) -> Result<Self> {
        if !v_lo.is_finite() || v_lo <= 0.0 {
            return Err(Error::InvalidMesh(format!("v_lo must be positive, got {v_lo}")));
        }
        if !v_max.is_finite() || v_max <= v_lo {
            return Err(Error::InvalidMesh(format!(
                "v_max must exceed v_lo, got {v_max} <= {v_lo}"
            )));
        }
        if num_cells < 2 {
            return Err(Error::InvalidMesh("log mesh needs at least two cells".into()));
        }
        let (lo, hi) = (v_lo.log10(), v_max.log10());
        let steps = (num_cells - 1) as f64;
        let mut edges = Vec::with_capacity(num_cells + 1);
        edges.push(0.0);
        for i in 0..num_cells {
            edges.push(10f64.powf(lo + (hi - lo) * i as f64 / steps));
        }
        edges[1] = v_lo;
        edges[num_cells] = v_max;
        Self::from_edges(edges)
    }

    /// Splits every cell into two equal halves.
    pub fn refine_split(&self) -> Mesh {
        let mut edges = Vec::with_capacity(2 * self.edges.len() - 1);
        for w in self.edges.windows(2) {
            edges.push(w[0]);
            edges.push(0.5 * (w[0] + w[1]));
        }
        edges.push(*self.edges.last().unwrap());
        Mesh { edges }
    }

    pub fn num_cells(&self) -> usize {
        self.edges.len() - 1
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    pub fn left(&self, i: usize) -> f64 {
        self.edges[i]
    }

    pub fn right(&self, i: usize) -> f64 {
        self.edges[i + 1]
    }

    pub fn center(&self, i: usize) -> f64 {
        0.5 * (self.edges[i] + self.edges[i + 1])
    }

    pub fn width(&self, i: usize) -> f64 {
        self.edges[i + 1] - self.edges[i]
    }

    /// Smallest cell width.
    pub fn min_width(&self) -> f64 {
        self.edges
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }

    pub fn v_min(&self) -> f64 {
        self.edges[0]
    }

    pub fn v_max(&self) -> f64 {
        *self.edges.last().unwrap()
    }

    /// Maps `v` in cell `i` to the reference coordinate in `[-1, 1]`.
    pub fn to_reference(&self, i: usize, v: f64) -> f64 {
        2.0 * (v - self.center(i)) / self.width(i)
    }

    /// Maps a reference coordinate of cell `i` back to physical size.
    pub fn from_reference(&self, i: usize, x: f64) -> f64 {
        self.center(i) + 0.5 * self.width(i) * x
    }

    /// Index of the cell containing `v`; interior edges belong to the cell on
    /// their right, `v_max` to the last cell.
    pub fn cell_of(&self, v: f64) -> Option<usize> {
        if !(v >= self.v_min() && v <= self.v_max()) {
            return None;
        }
        let idx = self.edges.partition_point(|&e| e <= v);
        Some(idx.saturating_sub(1).min(self.num_cells() - 1))
    }

    pub(crate) fn check_cell(&self, i: usize) -> Result<()> {
        if i >= self.num_cells() {
            return Err(Error::IndexOutOfRange {
                what: "cell",
                index: i,
                len: self.num_cells(),
            });
        }
        Ok(())
    }
}
