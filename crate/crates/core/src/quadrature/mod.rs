//! Quadrature rules: Gauss-Lobatto and Gauss-Legendre line rules, fully
//! symmetric positive-weight triangle rules, and tensor-product rectangle
//! rules.
//!
//! All node/weight data comes from precomputed tables (see
//! `tools/gen_quadrature_tables.py`).

#[allow(clippy::excessive_precision)]
mod tables;

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A point in the `(u, w)` plane.
pub type Point = [f64; 2];

/// A line rule on the reference interval `[-1, 1]`. Weights sum to 2.
#[derive(Clone, Debug, PartialEq)]
pub struct LineRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    exactness: usize,
}

impl LineRule {
    /// `n`-point Gauss-Lobatto rule (endpoints included), exact to degree
    /// `2n - 3`.
    pub fn gauss_lobatto(n: usize) -> Result<Self> {
        let max = tables::GAUSS_LOBATTO.len() + 1;
        if n < 2 || n > max {
            return Err(Error::QuadratureUnavailable {
                kind: "Gauss-Lobatto",
                requested: n,
                max,
            });
        }
        let (x, w) = tables::GAUSS_LOBATTO[n - 2];
        Ok(LineRule {
            nodes: x.to_vec(),
            weights: w.to_vec(),
            exactness: 2 * n - 3,
        })
    }

    /// `n`-point Gauss-Legendre rule, exact to degree `2n - 1`.
    pub fn gauss_legendre(n: usize) -> Result<Self> {
        let max = tables::GAUSS_LEGENDRE.len();
        if n < 1 || n > max {
            return Err(Error::QuadratureUnavailable {
                kind: "Gauss-Legendre",
                requested: n,
                max,
            });
        }
        let (x, w) = tables::GAUSS_LEGENDRE[n - 1];
        Ok(LineRule {
            nodes: x.to_vec(),
            weights: w.to_vec(),
            exactness: 2 * n - 1,
        })
    }

    /// Shared Gauss-Legendre rule; `n` is clamped to the table range.
    pub(crate) fn gauss_legendre_cached(n: usize) -> &'static LineRule {
        static CACHE: OnceLock<Vec<LineRule>> = OnceLock::new();
        let rules = CACHE.get_or_init(|| {
            (1..=tables::GAUSS_LEGENDRE.len())
                .map(|n| LineRule::gauss_legendre(n).unwrap())
                .collect()
        });
        &rules[n.clamp(1, rules.len()) - 1]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Reference weights (sum 2).
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Polynomial degree integrated exactly.
    pub fn exactness(&self) -> usize {
        self.exactness
    }

    /// Weight of the last node relative to the cell length (the reference
    /// weight halved), i.e. the weight `w` in `Q[f] = dv * sum w f`.
    pub fn normalized_endpoint_weight(&self) -> f64 {
        0.5 * self.weights[self.weights.len() - 1]
    }

    /// Maps reference node `a` to the physical interval `[lo, hi]`.
    pub fn node_in(&self, a: usize, lo: f64, hi: f64) -> f64 {
        0.5 * (lo + hi) + 0.5 * (hi - lo) * self.nodes[a]
    }

    /// `int_lo^hi f`, with weights scaled so that `f = 1` returns `hi - lo`.
    pub fn integrate_interval<F: Fn(f64) -> f64>(&self, lo: f64, hi: f64, f: F) -> f64 {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }

    /// Tensor-product rule on an axis-aligned rectangle.
    pub fn integrate_rect<F: Fn(f64, f64) -> f64>(&self, rect: &Rect, f: F) -> f64 {
        let mut sum = 0.0;
        for a in 0..self.len() {
            let u = self.node_in(a, rect.u[0], rect.u[1]);
            let mut row = 0.0;
            for b in 0..self.len() {
                let w = self.node_in(b, rect.w[0], rect.w[1]);
                row += self.weights[b] * f(u, w);
            }
            sum += self.weights[a] * row;
        }
        0.25 * rect.area() * sum
    }
}

/// Fully symmetric (D3-invariant) triangle rule in barycentric coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangleRule {
    degree: usize,
    nodes: Vec<[f64; 3]>,
    weights: Vec<f64>,
}

impl TriangleRule {
    /// Smallest tabulated rule exact for total degree `degree`.
    pub fn with_degree(degree: usize) -> Result<&'static TriangleRule> {
        let rules = Self::all();
        let max = rules.last().map_or(0, |r| r.degree);
        rules
            .iter()
            .find(|r| r.degree >= degree.max(1))
            .ok_or(Error::QuadratureUnavailable {
                kind: "triangle",
                requested: degree,
                max,
            })
    }

    /// Every tabulated rule, in increasing degree.
    pub fn all() -> &'static [TriangleRule] {
        static RULES: OnceLock<Vec<TriangleRule>> = OnceLock::new();
        RULES.get_or_init(|| {
            tables::TRIANGLE
                .iter()
                .map(|(d, x, w)| TriangleRule {
                    degree: *d,
                    nodes: x.to_vec(),
                    weights: w.to_vec(),
                })
                .collect()
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn barycentric(&self) -> &[[f64; 3]] {
        &self.nodes
    }

    /// Weights (sum 1).
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Quadrature nodes mapped into `tri`.
    pub fn points_in(&self, tri: &Triangle) -> impl Iterator<Item = Point> + '_ {
        let [p0, p1, p2] = tri.vertices;
        self.nodes.iter().map(move |l| {
            [
                l[0] * p0[0] + l[1] * p1[0] + l[2] * p2[0],
                l[0] * p0[1] + l[1] * p1[1] + l[2] * p2[1],
            ]
        })
    }

    /// `|T| sum_g w_g f(x_g)`; degenerate triangles give 0.
    pub fn integrate<F: Fn(f64, f64) -> f64>(&self, tri: &Triangle, f: F) -> f64 {
        let area = tri.area();
        if area == 0.0 {
            return 0.0;
        }
        area * self
            .points_in(tri)
            .zip(&self.weights)
            .map(|(p, &w)| w * f(p[0], p[1]))
            .sum::<f64>()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triangle {
    pub vertices: [Point; 3],
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Self {
        Triangle {
            vertices: [a, b, c],
        }
    }

    pub fn area(&self) -> f64 {
        0.5 * self.signed_double_area().abs()
    }

    fn signed_double_area(&self) -> f64 {
        let [a, b, c] = self.vertices;
        (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])
    }

    pub fn centroid(&self) -> Point {
        let [a, b, c] = self.vertices;
        [(a[0] + b[0] + c[0]) / 3.0, (a[1] + b[1] + c[1]) / 3.0]
    }

    /// Reflection across the diagonal `u = w`.
    pub fn mirrored(&self) -> Triangle {
        let m = |p: Point| [p[1], p[0]];
        Triangle::new(
            m(self.vertices[0]),
            m(self.vertices[1]),
            m(self.vertices[2]),
        )
    }
}

/// Axis-aligned rectangle `[u0, u1] x [w0, w1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub u: [f64; 2],
    pub w: [f64; 2],
}

impl Rect {
    pub fn area(&self) -> f64 {
        (self.u[1] - self.u[0]) * (self.w[1] - self.w[0])
    }
}
