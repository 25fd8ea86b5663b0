//! Common refinements of the two-dimensional integration regions.
//!
//! The aggregation region `{u, w >= 0, u + w <= v_max}` is cut by three
//! families of lines: the bands `v_{i-1/2} <= u + w <= v_{i+1/2}` (regions
//! `A_i`), the strips `u in I_j` (`B_j`) and `w in I_k` (`B'_k`). Every
//! nonempty intersection is a convex polygon, which is fan-triangulated after
//! being split along the diagonal `u = w`. Only the half `u <= w` is built
//! directly; the other half is its exact mirror image.
//!
//! The breakage region `{0 <= u <= w <= v_max}` is cut only by the strips, so
//! its elements are the diagonal triangles and the rectangles above them.
//!
//! Cell indices are 0-based throughout.

use std::io::Write;

use crate::error::{Error, Result};
use crate::mesh::Mesh;
use crate::quadrature::{Point, Rect, Triangle};

/// Pieces with area below `DEGENERATE_AREA * v_max^2` are discarded.
pub const DEGENERATE_AREA: f64 = 1e-14;

/// A triangle of the aggregation refinement with its owners.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AggTriangle {
    pub triangle: Triangle,
    /// Band index `i`: the triangle lies in `A_i`.
    pub band: usize,
    /// Strip containing `u` (`B_p`).
    pub u_cell: usize,
    /// Strip containing `w` (`B'_q`).
    pub w_cell: usize,
    pub area: f64,
}

impl AggTriangle {
    fn new(triangle: Triangle, band: usize, u_cell: usize, w_cell: usize) -> Self {
        AggTriangle {
            area: triangle.area(),
            triangle,
            band,
            u_cell,
            w_cell,
        }
    }

    /// Reflection across `u = w`, with the strip owners swapped.
    pub fn mirrored(&self) -> AggTriangle {
        AggTriangle {
            triangle: self.triangle.mirrored(),
            band: self.band,
            u_cell: self.w_cell,
            w_cell: self.u_cell,
            area: self.area,
        }
    }
}

/// Region selector for [`AggregationRefinement::elements_in`] and
/// [`BreakageRefinement::elements_in`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    /// Band `v_{i-1/2} <= u + w <= v_{i+1/2}` of the aggregation region.
    A(usize),
    /// Aggregation strip with `u` in cell `i`.
    B(usize),
    /// Aggregation strip with `w` in cell `i`.
    BPrime(usize),
    /// Breakage strip with `u` in cell `i`.
    C(usize),
    /// Breakage strip with `w` in cell `i`.
    D(usize),
}

/// Triangulation of the aggregation region.
///
/// Triangles are stored in mirror pairs: element `2m` lies in `u <= w` and
/// element `2m + 1` is its reflection.
#[derive(Clone, Debug)]
pub struct AggregationRefinement {
    triangles: Vec<AggTriangle>,
    num_cells: usize,
}

impl AggregationRefinement {
    pub fn build(mesh: &Mesh) -> Result<Self> {
        require_zero_origin(mesh)?;
        let edges = mesh.edges();
        let n = mesh.num_cells();
        let v_max = mesh.v_max();
        let min_area = DEGENERATE_AREA * v_max * v_max;
        let tol = 1e-14 * v_max;

        let mut triangles = Vec::new();
        for p in 0..n {
            for q in p..n {
                let (u0, u1) = (edges[p], edges[p + 1]);
                let (w0, w1) = (edges[q], edges[q + 1]);
                let square: Vec<Point> = if p == q {
                    vec![[u0, u0], [u1, u1], [u0, u1]]
                } else {
                    vec![[u0, w0], [u1, w0], [u1, w1], [u0, w1]]
                };
                let (s_lo, s_hi) = (u0 + w0, u1 + w1);
                let first = edges.partition_point(|&e| e <= s_lo).saturating_sub(1);
                for band in first..n {
                    let (lo, hi) = (edges[band], edges[band + 1]);
                    if lo >= s_hi {
                        break;
                    }
                    let clipped = clip(&square, lo, true, tol);
                    let clipped = clip(&clipped, hi, false, tol);
                    for tri in fan(&clipped) {
                        if tri.area() >= min_area {
                            let t = AggTriangle::new(tri, band, p, q);
                            triangles.push(t);
                            triangles.push(t.mirrored());
                        }
                    }
                }
            }
        }
        Ok(AggregationRefinement {
            triangles,
            num_cells: n,
        })
    }

    pub fn triangles(&self) -> &[AggTriangle] {
        &self.triangles
    }

    /// Iterator over `(upper, mirror)` pairs; `upper` lies in `u <= w`.
    pub fn pairs(&self) -> impl Iterator<Item = (&AggTriangle, &AggTriangle)> {
        self.triangles.chunks_exact(2).map(|c| (&c[0], &c[1]))
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn total_area(&self) -> f64 {
        crate::basis::neumaier_sum(self.triangles.iter().map(|t| t.area))
    }

    /// Indices of the triangles in `A_i`, `B_i` or `B'_i`.
    pub fn elements_in(&self, region: Region) -> Result<Vec<usize>> {
        let (i, pick): (usize, fn(&AggTriangle) -> usize) = match region {
            Region::A(i) => (i, |t| t.band),
            Region::B(i) => (i, |t| t.u_cell),
            Region::BPrime(i) => (i, |t| t.w_cell),
            Region::C(_) | Region::D(_) => {
                return Err(Error::InvalidArgument(format!(
                    "{region:?} is not a region of the aggregation refinement"
                )))
            }
        };
        check_index(i, self.num_cells)?;
        Ok(select(&self.triangles, |t| pick(t) == i))
    }

    /// Writes one CSV row per triangle.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(out);
        wtr.write_record(CSV_HEADER)?;
        for t in &self.triangles {
            let mut row = vec![
                "triangle".to_string(),
                t.band.to_string(),
                t.u_cell.to_string(),
                t.w_cell.to_string(),
                format!("{:e}", t.area),
            ];
            push_vertices(&mut row, &t.triangle.vertices);
            row.extend([String::new(), String::new()]);
            wtr.write_record(&row)?;
        }
        wtr.flush().map_err(|e| Error::io("<csv>", e))?;
        Ok(())
    }
}

/// Shape of a breakage element.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Shape {
    Triangle(Triangle),
    Rect(Rect),
}

/// An element `E = C_p ∩ D_q` of the breakage refinement, `p <= q`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BreakElement {
    pub shape: Shape,
    /// Cell containing the fragment size `u`.
    pub u_cell: usize,
    /// Cell containing the parent size `w`.
    pub w_cell: usize,
    pub area: f64,
}

#[derive(Clone, Debug)]
pub struct BreakageRefinement {
    elements: Vec<BreakElement>,
    num_cells: usize,
}

impl BreakageRefinement {
    pub fn build(mesh: &Mesh) -> Result<Self> {
        let edges = mesh.edges();
        let n = mesh.num_cells();
        let mut elements = Vec::with_capacity(n * (n + 1) / 2);
        for p in 0..n {
            let (u0, u1) = (edges[p], edges[p + 1]);
            let tri = Triangle::new([u0, u0], [u1, u1], [u0, u1]);
            elements.push(BreakElement {
                shape: Shape::Triangle(tri),
                u_cell: p,
                w_cell: p,
                area: tri.area(),
            });
            for q in p + 1..n {
                let rect = Rect {
                    u: [u0, u1],
                    w: [edges[q], edges[q + 1]],
                };
                elements.push(BreakElement {
                    shape: Shape::Rect(rect),
                    u_cell: p,
                    w_cell: q,
                    area: rect.area(),
                });
            }
        }
        Ok(BreakageRefinement {
            elements,
            num_cells: n,
        })
    }

    pub fn elements(&self) -> &[BreakElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn total_area(&self) -> f64 {
        crate::basis::neumaier_sum(self.elements.iter().map(|e| e.area))
    }

    /// Indices of the elements in `C_i` or `D_i`.
    pub fn elements_in(&self, region: Region) -> Result<Vec<usize>> {
        let (i, by_u) = match region {
            Region::C(i) => (i, true),
            Region::D(i) => (i, false),
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "{region:?} is not a region of the breakage refinement"
                )))
            }
        };
        check_index(i, self.num_cells)?;
        Ok(select(&self.elements, |e| {
            if by_u {
                e.u_cell == i
            } else {
                e.w_cell == i
            }
        }))
    }

    /// Writes one CSV row per element (rectangles list four vertices).
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(out);
        wtr.write_record(CSV_HEADER)?;
        for e in &self.elements {
            let mut row = vec![
                String::new(),
                String::new(),
                e.u_cell.to_string(),
                e.w_cell.to_string(),
                format!("{:e}", e.area),
            ];
            match e.shape {
                Shape::Triangle(t) => {
                    row[0] = "triangle".into();
                    push_vertices(&mut row, &t.vertices);
                    row.extend([String::new(), String::new()]);
                }
                Shape::Rect(r) => {
                    row[0] = "rectangle".into();
                    push_vertices(
                        &mut row,
                        &[[r.u[0], r.w[0]], [r.u[1], r.w[0]], [r.u[1], r.w[1]], [r.u[0], r.w[1]]],
                    );
                }
            }
            wtr.write_record(&row)?;
        }
        wtr.flush().map_err(|e| Error::io("<csv>", e))?;
        Ok(())
    }
}

const CSV_HEADER: [&str; 13] = [
    "kind", "band", "u_cell", "w_cell", "area", "u0", "w0", "u1", "w1", "u2", "w2", "u3", "w3",
];

fn push_vertices(row: &mut Vec<String>, vertices: &[Point]) {
    for p in vertices {
        row.push(format!("{:e}", p[0]));
        row.push(format!("{:e}", p[1]));
    }
}

fn require_zero_origin(mesh: &Mesh) -> Result<()> {
    if mesh.v_min() != 0.0 {
        return Err(Error::InvalidMesh(format!(
            "aggregation refinement needs a mesh starting at 0, got {}",
            mesh.v_min()
        )));
    }
    Ok(())
}

fn check_index(i: usize, len: usize) -> Result<()> {
    if i >= len {
        return Err(Error::IndexOutOfRange {
            what: "region",
            index: i,
            len,
        });
    }
    Ok(())
}

fn select<T>(items: &[T], keep: impl Fn(&T) -> bool) -> Vec<usize> {
    items
        .iter()
        .enumerate()
        .filter(|(_, t)| keep(t))
        .map(|(k, _)| k)
        .collect()
}

/// Point where segment `a -> b` meets the line `u + w = s`.
///
/// Polygon edges are vertical, horizontal, on the diagonal, or anti-diagonal
/// (never crossed here), so the intersection has a closed form that does not
/// depend on interpolation round-off.
fn cut(a: Point, b: Point, s: f64) -> Point {
    if a[0] == b[0] {
        [a[0], s - a[0]]
    } else if a[1] == b[1] {
        [s - a[1], a[1]]
    } else if a[0] == a[1] && b[0] == b[1] {
        [0.5 * s, 0.5 * s]
    } else {
        let fa = a[0] + a[1] - s;
        let fb = b[0] + b[1] - s;
        let t = fa / (fa - fb);
        [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]
    }
}

/// Sutherland-Hodgman clip of a convex polygon against `u + w >= s` (`keep_above`)
/// or `u + w <= s`.
fn clip(poly: &[Point], s: f64, keep_above: bool, tol: f64) -> Vec<Point> {
    let side = |p: Point| {
        let f = p[0] + p[1] - s;
        if keep_above {
            f
        } else {
            -f
        }
    };
    let mut out = Vec::with_capacity(poly.len() + 2);
    for (k, &cur) in poly.iter().enumerate() {
        let prev = poly[(k + poly.len() - 1) % poly.len()];
        let (fc, fp) = (side(cur), side(prev));
        let (in_c, in_p) = (fc >= -tol, fp >= -tol);
        if in_c {
            if !in_p && fc > tol {
                out.push(cut(prev, cur, s));
            }
            out.push(cur);
        } else if in_p && fp > tol {
            out.push(cut(prev, cur, s));
        }
    }
    out.dedup();
    if out.len() > 1 && out[0] == out[out.len() - 1] {
        out.pop();
    }
    out
}

fn fan(poly: &[Point]) -> impl Iterator<Item = Triangle> + '_ {
    (1..poly.len().saturating_sub(1)).map(move |k| Triangle::new(poly[0], poly[k], poly[k + 1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_cells() -> Mesh {
        Mesh::uniform(1.0, 2).unwrap()
    }

    #[test]
    fn two_cell_aggregation_refinement() {
        let r = AggregationRefinement::build(&two_cells()).unwrap();
        assert_eq!(r.len(), 6);
        assert!((r.total_area() - 0.5).abs() < 1e-15);

        let area = |band, p, q| -> f64 {
            r.triangles()
                .iter()
                .filter(|t| (t.band, t.u_cell, t.w_cell) == (band, p, q))
                .map(|t| t.area)
                .sum()
        };
        assert!((area(0, 0, 0) - 0.125).abs() < 1e-15);
        assert!((area(1, 0, 0) - 0.125).abs() < 1e-15);
        assert!((area(1, 1, 0) - 0.125).abs() < 1e-15);
        assert!((area(1, 0, 1) - 0.125).abs() < 1e-15);

        let a0 = r.elements_in(Region::A(0)).unwrap();
        assert_eq!(a0.len(), 2);
        assert!(a0.iter().all(|&k| r.triangles()[k].u_cell == 0));
        let mut strips: Vec<usize> = r.elements_in(Region::B(0)).unwrap();
        strips.extend(r.elements_in(Region::B(1)).unwrap());
        strips.sort_unstable();
        assert_eq!(strips, (0..6).collect::<Vec<_>>());
        assert!(r.elements_in(Region::A(2)).is_err());
        assert!(r.elements_in(Region::C(0)).is_err());
    }

    #[test]
    fn two_cell_breakage_refinement() {
        let r = BreakageRefinement::build(&two_cells()).unwrap();
        assert_eq!(r.len(), 3);
        let find = |p, q| r.elements().iter().find(|e| (e.u_cell, e.w_cell) == (p, q));
        assert!(matches!(find(0, 0).unwrap().shape, Shape::Triangle(_)));
        assert!((find(0, 0).unwrap().area - 0.125).abs() < 1e-15);
        assert!(matches!(find(0, 1).unwrap().shape, Shape::Rect(_)));
        assert!((find(0, 1).unwrap().area - 0.25).abs() < 1e-15);
        assert!((find(1, 1).unwrap().area - 0.125).abs() < 1e-15);
        assert!(find(1, 0).is_none());
        assert_eq!(r.elements_in(Region::D(0)).unwrap(), vec![0]);
        assert!(r.elements_in(Region::A(0)).is_err());
    }

    #[test]
    fn graded_mesh_partitions() {
        let mesh = Mesh::power(10.0, 15, 3.0).unwrap();
        let r = AggregationRefinement::build(&mesh).unwrap();
        assert!((r.total_area() - 50.0).abs() < 1e-12 * 100.0);
        for (up, mirror) in r.pairs() {
            assert_eq!(*mirror, up.mirrored());
            for p in up.triangle.vertices {
                assert!(p[0] <= p[1]);
            }
        }
        let b = BreakageRefinement::build(&mesh).unwrap();
        assert_eq!(b.len(), 15 + 15 * 14 / 2);
        assert!((b.total_area() - 50.0).abs() < 1e-12 * 100.0);
    }

    #[test]
    fn rejects_offset_mesh() {
        let mesh = Mesh::from_edges(vec![1.0, 2.0]).unwrap();
        assert!(AggregationRefinement::build(&mesh).is_err());
    }

    #[test]
    fn csv_dump_has_one_row_per_element() {
        let r = AggregationRefinement::build(&two_cells()).unwrap();
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 7);
        assert!(text.starts_with("kind,band,u_cell,w_cell,area"));
    }
}
