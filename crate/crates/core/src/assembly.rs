//! Precomputed tensors and the semi-discrete right-hand side.
//!
//! Every integral of the scheme is evaluated once, at construction, into small
//! dense blocks; applying the right-hand side is then a sequence of
//! contractions against the current coefficients. In component form, for cell
//! `i` and test function `j`,
//!
//! ```text
//! (Δv_i / 2) dc_j^i/dt =  Σ_m G^i_{jm} c_m^i + Σ_m G^{-,i}_{jm} c_m^{i-1} + N^i_j
//!                      +  Σ_{T ⊆ A_i} Σ_{m,l} A^birth_{jml}(T) c_m^{p(T)} c_l^{q(T)}
//!                      -  Σ_{T ⊆ B_i} Σ_{m,l} A^death_{jml}(T) c_m^{p(T)} c_l^{q(T)}
//!                      +  Σ_{E ⊆ C_i} Σ_m B^birth_{jm}(E) c_m^{q(E)}
//!                      -  Σ_{E ⊆ D_i} Σ_m B^death_m(E) c_m^{q(E)}
//!                      -  Σ_m B^i_{jm} c_m^i.
//! ```
//!
//! Aggregation integrands are symmetric under `u <-> w`, so tensors are only
//! evaluated on the triangles with `u <= w`; the birth contribution of a
//! mirror triangle is the transpose of its partner's and is folded in
//! directly, while the death tensor of the mirror reuses the kernel values.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::basis::{moment_weights, neumaier_sum, Basis};
use crate::error::{Error, Result};
use crate::geometry::{AggregationRefinement, BreakageRefinement, Shape};
use crate::kernels::{Func1, KernelSet};
use crate::mesh::Mesh;
use crate::quadrature::{LineRule, Point, TriangleRule};

/// Quadrature choices for [`DgData::build`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AssemblyOptions {
    /// Gauss-Lobatto points per direction; at least `k + 2`.
    pub lobatto_points: usize,
    /// Exactness degree requested from the triangle rule table.
    pub triangle_degree: usize,
    /// Merge the tensors of elements that share all owners.
    pub compact: bool,
}

impl AssemblyOptions {
    /// `k + 2` Lobatto points, triangle degree `2k + 2`, compaction on.
    pub fn for_degree(k: usize) -> Self {
        AssemblyOptions {
            lobatto_points: k + 2,
            triangle_degree: 2 * k + 2,
            compact: true,
        }
    }
}

/// A quadratic coupling block: `out_j += Σ_{m,l} t[j][m][l] a_m b_l` with
/// `a = c^p`, `b = c^q`.
#[derive(Clone, Debug)]
struct Block3 {
    p: usize,
    q: usize,
    t: Vec<f64>,
}

/// A linear coupling block `out_j += Σ_m t[j][m] c^q_m`.
#[derive(Clone, Debug)]
struct Block2 {
    q: usize,
    t: Vec<f64>,
}

/// Precomputed constant tensors for one mesh, basis, kernel set and rule set.
#[derive(Clone, Debug)]
pub struct DgData {
    mesh: Arc<Mesh>,
    basis: Basis,
    kernels: KernelSet,
    options: AssemblyOptions,
    lobatto: LineRule,
    triangle_rule: &'static TriangleRule,
    /// `G^i`, `L × n × n`.
    growth: Vec<f64>,
    /// `G^{-,i}`, `L × n × n`.
    growth_in: Vec<f64>,
    /// `G(v_{1/2}) φ̂_j(-1)`, multiplied by the inflow value.
    inflow_row: Vec<f64>,
    /// `N^i`, `L × n`.
    nucleation: Vec<f64>,
    /// Birth blocks grouped by destination band.
    birth: Vec<Vec<Block3>>,
    /// Death blocks grouped by destination strip `p`.
    death: Vec<Vec<Block3>>,
    /// Breakage birth blocks grouped by destination strip `p`.
    break_birth: Vec<Vec<Block2>>,
    /// `Σ_{E ⊆ D_i} B^death(E)`, `L × n`.
    break_death: Vec<f64>,
    /// `B^i`, `L × n × n`.
    break_cell: Vec<f64>,
    /// `Q_{I_i}[φ_j γ φ_m]`, `L × n × n`: the part of `B^i` that depends on `j`.
    break_loss: Vec<f64>,
    /// `Q_{I_i}[v γ φ_m]`, `L × n`: the part of `B^i` that does not.
    break_mass: Vec<f64>,
    /// Row weights `μ_j = (Δv_i / 2) W_j / Σ_l W_l²` with `W_j = ∫_{I_i} v φ_j`, `L × n`.
    break_weight: Vec<f64>,
    aggregation_geometry: Option<Arc<AggregationRefinement>>,
    breakage_sup: f64,
    growth_sup: f64,
}

/// Scratch buffer for right-hand side evaluations.
#[derive(Clone, Debug, Default)]
pub struct RhsWorkspace {
    rate: Vec<f64>,
}

impl RhsWorkspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Result of the most recent [`DgData::rhs`] call.
    pub fn rate(&self) -> &[f64] {
        &self.rate
    }
}

impl DgData {
    /// Builds all tensors; the refinements are constructed as needed.
    pub fn build(
        mesh: Arc<Mesh>,
        basis: Basis,
        kernels: KernelSet,
        options: AssemblyOptions,
    ) -> Result<Self> {
        let agg = match kernels.aggregation {
            Some(_) => Some(Arc::new(AggregationRefinement::build(&mesh)?)),
            None => None,
        };
        let brk = match kernels.breakage {
            Some(_) => Some(BreakageRefinement::build(&mesh)?),
            None => None,
        };
        Self::build_with(mesh, basis, kernels, options, agg, brk.as_ref())
    }

    /// Builds all tensors from refinements constructed by the caller.
    pub fn build_with(
        mesh: Arc<Mesh>,
        basis: Basis,
        kernels: KernelSet,
        options: AssemblyOptions,
        aggregation_geometry: Option<Arc<AggregationRefinement>>,
        breakage_geometry: Option<&BreakageRefinement>,
    ) -> Result<Self> {
        let k = basis.degree();
        if options.lobatto_points < k + 2 {
            return Err(Error::InvalidArgument(format!(
                "need at least k + 2 = {} Lobatto points, got {}",
                k + 2,
                options.lobatto_points
            )));
        }
        let lobatto = LineRule::gauss_lobatto(options.lobatto_points)?;
        let triangle_rule = TriangleRule::with_degree(options.triangle_degree)?;
        let l = mesh.num_cells();
        let n = basis.len();

        let mut data = DgData {
            mesh,
            basis,
            kernels,
            options,
            lobatto,
            triangle_rule,
            growth: Vec::new(),
            growth_in: Vec::new(),
            inflow_row: Vec::new(),
            nucleation: Vec::new(),
            birth: vec![Vec::new(); l],
            death: vec![Vec::new(); l],
            break_birth: vec![Vec::new(); l],
            break_death: Vec::new(),
            break_cell: Vec::new(),
            break_loss: Vec::new(),
            break_mass: Vec::new(),
            break_weight: Vec::new(),
            aggregation_geometry: None,
            breakage_sup: 0.0,
            growth_sup: 0.0,
        };

        if let Some(g) = data.kernels.growth.clone() {
            data.build_growth(&g)?;
        }
        if let Some(s) = data.kernels.nucleation.clone() {
            data.nucleation = vec![0.0; l * n];
            for i in 0..l {
                let row = data.cell_line_integral(i, |v, phi, out| {
                    let sv = s.eval(v);
                    for (o, p) in out.iter_mut().zip(phi) {
                        *o += sv * p;
                    }
                });
                data.nucleation[i * n..(i + 1) * n].copy_from_slice(&row);
            }
            check_finite("nucleation", &data.nucleation)?;
        }
        if data.kernels.aggregation.is_some() {
            let geom = match aggregation_geometry {
                Some(g) => g,
                None => Arc::new(AggregationRefinement::build(&data.mesh)?),
            };
            data.build_aggregation(&geom)?;
            data.aggregation_geometry = Some(geom);
        }
        if data.kernels.breakage.is_some() {
            let owned;
            let geom = match breakage_geometry {
                Some(g) => g,
                None => {
                    owned = BreakageRefinement::build(&data.mesh)?;
                    &owned
                }
            };
            data.build_breakage(geom)?;
        }
        Ok(data)
    }

    pub fn mesh(&self) -> &Arc<Mesh> {
        &self.mesh
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn kernels(&self) -> &KernelSet {
        &self.kernels
    }

    pub fn options(&self) -> AssemblyOptions {
        self.options
    }

    pub fn lobatto(&self) -> &LineRule {
        &self.lobatto
    }

    pub fn triangle_rule(&self) -> &'static TriangleRule {
        self.triangle_rule
    }

    /// Number of coefficients of a solution on this mesh.
    pub fn num_coeffs(&self) -> usize {
        self.mesh.num_cells() * self.basis.len()
    }

    /// `G^i_{jm}`.
    pub fn growth_matrix(&self, i: usize) -> Option<&[f64]> {
        let n2 = self.basis.len().pow(2);
        (!self.growth.is_empty()).then(|| &self.growth[i * n2..(i + 1) * n2])
    }

    /// `G^{-,i}_{jm}`.
    pub fn growth_inflow_matrix(&self, i: usize) -> Option<&[f64]> {
        let n2 = self.basis.len().pow(2);
        (!self.growth_in.is_empty()).then(|| &self.growth_in[i * n2..(i + 1) * n2])
    }

    /// `N^i_m`.
    pub fn nucleation_vector(&self, i: usize) -> Option<&[f64]> {
        let n = self.basis.len();
        (!self.nucleation.is_empty()).then(|| &self.nucleation[i * n..(i + 1) * n])
    }

    /// `B^i_{jm}`.
    pub fn breakage_cell_matrix(&self, i: usize) -> Option<&[f64]> {
        let n2 = self.basis.len().pow(2);
        (!self.break_cell.is_empty()).then(|| &self.break_cell[i * n2..(i + 1) * n2])
    }

    /// Sum of all birth tensors whose destination is band `i`, contracted
    /// with nothing: `Σ_{T ⊆ A_i} A^birth(T)`, flattened `n × n × n`.
    pub fn total_birth_tensor(&self, i: usize) -> Vec<f64> {
        let n3 = self.basis.len().pow(3);
        let mut out = vec![0.0; n3];
        for b in &self.birth[i] {
            for (o, t) in out.iter_mut().zip(&b.t) {
                *o += t;
            }
        }
        out
    }

    /// `Δv_i Σ_α ϖ_α f(v_α)` with the Lobatto rule, accumulating into an
    /// `n`-vector; `f` receives `(v, φ̂(x), out)`.
    fn cell_line_integral(
        &self,
        i: usize,
        f: impl Fn(f64, &[f64], &mut [f64]),
    ) -> Vec<f64> {
        let n = self.basis.len();
        let half = 0.5 * self.mesh.width(i);
        let mut acc = vec![0.0; n];
        let mut tmp = vec![0.0; n];
        let mut phi = vec![0.0; n];
        for (&x, &w) in self.lobatto.nodes().iter().zip(self.lobatto.weights()) {
            self.basis.eval_all(x, &mut phi);
            tmp.iter_mut().for_each(|t| *t = 0.0);
            f(self.mesh.from_reference(i, x), &phi, &mut tmp);
            for (a, t) in acc.iter_mut().zip(&tmp) {
                *a += half * w * t;
            }
        }
        acc
    }

    fn build_growth(&mut self, g: &Func1) -> Result<()> {
        let l = self.mesh.num_cells();
        let n = self.basis.len();
        let mut phi = vec![0.0; n];
        let mut dphi = vec![0.0; n];
        self.growth = vec![0.0; l * n * n];
        self.growth_in = vec![0.0; l * n * n];
        let mut sup: f64 = 0.0;
        for i in 0..l {
            let block = &mut self.growth[i * n * n..(i + 1) * n * n];
            for (&x, &w) in self.lobatto.nodes().iter().zip(self.lobatto.weights()) {
                let gv = g.eval(self.mesh.from_reference(i, x));
                sup = sup.max(gv.abs());
                self.basis.eval_all_with_derivative(x, &mut phi, &mut dphi);
                // (Δv/2) w G (2/Δv) φ̂_j' φ̂_m
                for j in 0..n {
                    for m in 0..n {
                        block[j * n + m] += w * gv * dphi[j] * phi[m];
                    }
                }
            }
            let g_out = g.eval(self.mesh.right(i));
            let g_in = g.eval(self.mesh.left(i));
            for j in 0..n {
                for m in 0..n {
                    block[j * n + m] -= g_out * self.basis.right_value(j) * self.basis.right_value(m);
                    if i > 0 {
                        self.growth_in[i * n * n + j * n + m] =
                            g_in * self.basis.left_value(j) * self.basis.right_value(m);
                    }
                }
            }
        }
        let g0 = g.eval(self.mesh.v_min());
        self.inflow_row = (0..n).map(|j| g0 * self.basis.left_value(j)).collect();
        self.growth_sup = sup;
        check_finite("growth", &self.growth)?;
        check_finite("growth", &self.growth_in)?;
        check_finite("growth", &self.inflow_row)
    }

    fn build_aggregation(&mut self, geom: &AggregationRefinement) -> Result<()> {
        let beta = self.kernels.aggregation.clone().expect("aggregation kernel");
        let n = self.basis.len();
        let n3 = n * n * n;
        let rule = self.triangle_rule;
        let mesh = &self.mesh;
        let basis = self.basis;

        struct PairTensors {
            band: usize,
            p: usize,
            q: usize,
            birth: Vec<f64>,
            death_upper: Vec<f64>,
            death_mirror: Vec<f64>,
        }

        let pairs: Vec<_> = geom.pairs().map(|(up, _)| *up).collect();
        let computed: Vec<Result<PairTensors>> = pairs
            .par_iter()
            .map(|t| {
                let (i, p, q) = (t.band, t.u_cell, t.w_cell);
                let mut birth = vec![0.0; n3];
                let mut death_upper = vec![0.0; n3];
                let mut death_mirror = vec![0.0; n3];
                let mut phi_s = vec![0.0; n];
                let mut phi_u = vec![0.0; n];
                let mut phi_w = vec![0.0; n];
                for (pt, &wt) in rule.points_in(&t.triangle).zip(rule.weights()) {
                    let [u, w] = pt;
                    let b = beta.eval(u, w);
                    if !b.is_finite() {
                        return Err(Error::Kernel(format!(
                            "aggregation kernel is not finite at ({u}, {w})"
                        )));
                    }
                    let f = t.area * wt * b;
                    basis.eval_all(mesh.to_reference(i, u + w), &mut phi_s);
                    basis.eval_all(mesh.to_reference(p, u), &mut phi_u);
                    basis.eval_all(mesh.to_reference(q, w), &mut phi_w);
                    for j in 0..n {
                        let bj = 0.5 * f * phi_s[j];
                        let du = f * phi_u[j];
                        // mirror death: test and state functions of strip q at w
                        let dm = f * phi_w[j];
                        for m in 0..n {
                            let bjm = bj * phi_u[m];
                            let dum = du * phi_u[m];
                            let dmm = dm * phi_w[m];
                            let row = (j * n + m) * n;
                            for l in 0..n {
                                birth[row + l] += bjm * phi_w[l];
                                death_upper[row + l] += dum * phi_w[l];
                                death_mirror[row + l] += dmm * phi_u[l];
                            }
                        }
                    }
                }
                Ok(PairTensors {
                    band: i,
                    p,
                    q,
                    birth,
                    death_upper,
                    death_mirror,
                })
            })
            .collect();

        let l = mesh.num_cells();
        let mut birth: Vec<Vec<Block3>> = vec![Vec::new(); l];
        let mut death: Vec<Vec<Block3>> = vec![Vec::new(); l];
        if self.options.compact {
            let mut birth_map: BTreeMap<(usize, usize, usize), Vec<f64>> = BTreeMap::new();
            let mut death_map: BTreeMap<(usize, usize), Vec<f64>> = BTreeMap::new();
            for c in computed {
                let c = c?;
                // The mirror's birth tensor is the (m, l)-transpose of this one and
                // multiplies c^q ⊗ c^p, so together they contribute twice this block.
                let e = birth_map.entry((c.band, c.p, c.q)).or_insert_with(|| vec![0.0; n3]);
                for (a, b) in e.iter_mut().zip(&c.birth) {
                    *a += 2.0 * b;
                }
                let e = death_map.entry((c.p, c.q)).or_insert_with(|| vec![0.0; n3]);
                for (a, b) in e.iter_mut().zip(&c.death_upper) {
                    *a += b;
                }
                let e = death_map.entry((c.q, c.p)).or_insert_with(|| vec![0.0; n3]);
                for (a, b) in e.iter_mut().zip(&c.death_mirror) {
                    *a += b;
                }
            }
            for ((i, p, q), t) in birth_map {
                birth[i].push(Block3 { p, q, t });
            }
            for ((p, q), t) in death_map {
                death[p].push(Block3 { p, q, t });
            }
        } else {
            for c in computed {
                let c = c?;
                let mut mirror = vec![0.0; n3];
                for j in 0..n {
                    for m in 0..n {
                        for l in 0..n {
                            mirror[(j * n + m) * n + l] = c.birth[(j * n + l) * n + m];
                        }
                    }
                }
                birth[c.band].push(Block3 {
                    p: c.p,
                    q: c.q,
                    t: c.birth,
                });
                birth[c.band].push(Block3 {
                    p: c.q,
                    q: c.p,
                    t: mirror,
                });
                death[c.p].push(Block3 {
                    p: c.p,
                    q: c.q,
                    t: c.death_upper,
                });
                death[c.q].push(Block3 {
                    p: c.q,
                    q: c.p,
                    t: c.death_mirror,
                });
            }
        }
        for blocks in birth.iter().chain(death.iter()) {
            for b in blocks {
                check_finite("aggregation", &b.t)?;
            }
        }
        self.birth = birth;
        self.death = death;
        Ok(())
    }

    fn build_breakage(&mut self, geom: &BreakageRefinement) -> Result<()> {
        let brk = self.kernels.breakage.clone().expect("breakage kernel");
        let n = self.basis.len();
        let l = self.mesh.num_cells();
        let mesh = &self.mesh;
        let basis = self.basis;
        let tri_rule = self.triangle_rule;
        let line = &self.lobatto;

        let computed: Vec<(usize, usize, Vec<f64>, Vec<f64>, f64)> = geom
            .elements()
            .par_iter()
            .map(|e| {
                let (p, q) = (e.u_cell, e.w_cell);
                let mut bb = vec![0.0; n * n];
                let mut bd = vec![0.0; n];
                let mut sup: f64 = 0.0;
                let mut phi_u = vec![0.0; n];
                let mut phi_w = vec![0.0; n];
                let mut visit = |pt: Point, weight: f64| {
                    let [u, w] = pt;
                    let kernel = brk.daughter.eval(u, w) * brk.rate.eval(w);
                    sup = sup.max((u * kernel).abs());
                    basis.eval_all(mesh.to_reference(p, u), &mut phi_u);
                    basis.eval_all(mesh.to_reference(q, w), &mut phi_w);
                    let f = weight * kernel;
                    for j in 0..n {
                        for m in 0..n {
                            bb[j * n + m] += f * phi_u[j] * phi_w[m];
                        }
                    }
                    for m in 0..n {
                        bd[m] += f * u * phi_w[m];
                    }
                };
                match e.shape {
                    Shape::Triangle(t) => {
                        for (pt, &wt) in tri_rule.points_in(&t).zip(tri_rule.weights()) {
                            visit(pt, e.area * wt);
                        }
                    }
                    Shape::Rect(r) => {
                        let ws = line.weights();
                        for a in 0..line.len() {
                            let u = line.node_in(a, r.u[0], r.u[1]);
                            for b in 0..line.len() {
                                let w = line.node_in(b, r.w[0], r.w[1]);
                                visit([u, w], 0.25 * e.area * ws[a] * ws[b]);
                            }
                        }
                    }
                }
                (p, q, bb, bd, sup)
            })
            .collect();

        let mut break_death = vec![0.0; l * n];
        let mut sup: f64 = 0.0;
        for (p, q, bb, bd, s) in computed {
            check_finite("breakage", &bb)?;
            check_finite("breakage", &bd)?;
            self.break_birth[p].push(Block2 { q, t: bb });
            for (a, b) in break_death[q * n..(q + 1) * n].iter_mut().zip(&bd) {
                *a += b;
            }
            sup = sup.max(s);
        }
        self.break_death = break_death;

        let mut cell = vec![0.0; l * n * n];
        let mut loss = vec![0.0; l * n * n];
        let mut mass = vec![0.0; l * n];
        let mut weight = vec![0.0; l * n];
        let mut phi = vec![0.0; n];
        for i in 0..l {
            let half = 0.5 * self.mesh.width(i);
            for (&x, &w) in self.lobatto.nodes().iter().zip(self.lobatto.weights()) {
                let v = self.mesh.from_reference(i, x);
                let g = half * w * brk.rate.eval(v);
                self.basis.eval_all(x, &mut phi);
                for m in 0..n {
                    mass[i * n + m] += g * v * phi[m];
                    for j in 0..n {
                        cell[(i * n + j) * n + m] += g * (phi[j] - v) * phi[m];
                        loss[(i * n + j) * n + m] += g * phi[j] * phi[m];
                    }
                }
            }
            let mu = &mut weight[i * n..(i + 1) * n];
            moment_weights(&self.mesh, self.basis, i, 1, mu);
            // rows are scaled by 2/Δv afterwards, so Σ_j (2/Δv) μ_j W_j = 1
            let norm2: f64 = mu.iter().map(|a| a * a).sum();
            mu.iter_mut().for_each(|a| *a *= half / norm2);
        }
        check_finite("breakage", &cell)?;
        check_finite("breakage", &loss)?;
        check_finite("breakage", &mass)?;
        self.break_cell = cell;
        self.break_loss = loss;
        self.break_mass = mass;
        self.break_weight = weight;
        self.breakage_sup = sup;
        Ok(())
    }

    /// Evaluates `dc/dt` into `out` (length [`num_coeffs`](Self::num_coeffs)).
    pub fn apply_rhs(&self, coeffs: &[f64], t: f64, out: &mut [f64]) {
        let n = self.basis.len();
        assert_eq!(coeffs.len(), self.num_coeffs(), "coefficient length mismatch");
        assert_eq!(out.len(), self.num_coeffs(), "output length mismatch");
        let inflow = match (&self.kernels.inflow, self.inflow_row.is_empty()) {
            (Some(f), false) => f.eval(t),
            _ => 0.0,
        };
        out.par_chunks_mut(n)
            .enumerate()
            .for_each(|(i, row)| self.cell_rhs(i, coeffs, inflow, row));
    }

    /// Convenience wrapper storing the result in `ws`.
    pub fn rhs<'a>(&self, coeffs: &[f64], t: f64, ws: &'a mut RhsWorkspace) -> &'a [f64] {
        ws.rate.resize(self.num_coeffs(), 0.0);
        self.apply_rhs(coeffs, t, &mut ws.rate);
        &ws.rate
    }

    fn cell_rhs(&self, i: usize, c: &[f64], inflow: f64, row: &mut [f64]) {
        let n = self.basis.len();
        let ci = &c[i * n..(i + 1) * n];
        let cell = |k: usize| &c[k * n..(k + 1) * n];
        row.iter_mut().for_each(|r| *r = 0.0);

        if !self.growth.is_empty() {
            let g = &self.growth[i * n * n..(i + 1) * n * n];
            mat_vec_add(g, ci, row, 1.0);
            if i > 0 {
                let gin = &self.growth_in[i * n * n..(i + 1) * n * n];
                mat_vec_add(gin, cell(i - 1), row, 1.0);
            } else {
                for (r, a) in row.iter_mut().zip(&self.inflow_row) {
                    *r += a * inflow;
                }
            }
        }
        if !self.nucleation.is_empty() {
            for (r, s) in row.iter_mut().zip(&self.nucleation[i * n..(i + 1) * n]) {
                *r += s;
            }
        }
        for b in &self.birth[i] {
            quad_form_add(&b.t, cell(b.p), cell(b.q), row, 1.0);
        }
        for b in &self.death[i] {
            quad_form_add(&b.t, cell(b.p), cell(b.q), row, -1.0);
        }
        if !self.break_cell.is_empty() {
            for b in &self.break_birth[i] {
                mat_vec_add(&b.t, cell(b.q), row, 1.0);
            }
            // The cell death `D_i + Q[(φ_j - v) γ n_h]` splits into
            // `Q[φ_j γ n_h]` and the mismatch `D_i - Q[v γ n_h]`, which is zero
            // whenever the quadratures are mass consistent. Spreading the
            // mismatch with weights `μ_j` (Σ_j ŵ_j μ_j = 1) makes the cell's
            // first-moment rate exactly `birth - D_i` without amplifying
            // rounding by the size of `v`.
            let dot = |a: &[f64]| -> f64 { a.iter().zip(ci).map(|(x, y)| x * y).sum() };
            let mismatch = dot(&self.break_death[i * n..(i + 1) * n])
                - dot(&self.break_mass[i * n..(i + 1) * n]);
            mat_vec_add(&self.break_loss[i * n * n..(i + 1) * n * n], ci, row, -1.0);
            for (r, mu) in row.iter_mut().zip(&self.break_weight[i * n..(i + 1) * n]) {
                *r -= mu * mismatch;
            }
        }
        let scale = 2.0 / self.mesh.width(i);
        for r in row.iter_mut() {
            *r *= scale;
        }
    }

    /// Per-cell `s`-th moment rates `Σ_j (dc_j^i/dt) ∫_{I_i} v^s φ_j^i` and
    /// their compensated total.
    pub fn moment_of_rhs(&self, rate: &[f64], s: usize) -> (Vec<f64>, f64) {
        let n = self.basis.len();
        let mut w = vec![0.0; n];
        let per_cell: Vec<f64> = (0..self.mesh.num_cells())
            .map(|i| {
                moment_weights(&self.mesh, self.basis, i, s, &mut w);
                rate[i * n..(i + 1) * n]
                    .iter()
                    .zip(&w)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect();
        let total = neumaier_sum(per_cell.iter().copied());
        (per_cell, total)
    }

    /// Time-step bound guaranteeing nonnegative cell moments after one Euler
    /// stage from a nonnegative state; `+∞` if no process is active, and
    /// the minimum over the active processes otherwise.
    pub fn cfl_bound(&self, coeffs: &[f64]) -> f64 {
        let mut bound = f64::INFINITY;
        if let Some(b) = self.aggregation_cfl(coeffs) {
            bound = bound.min(b);
        }
        if self.kernels.breakage.is_some() && self.breakage_sup > 0.0 {
            bound = bound.min(1.0 / self.breakage_sup);
        }
        if self.kernels.growth.is_some() && self.growth_sup > 0.0 {
            let w = self.lobatto.normalized_endpoint_weight();
            bound = bound.min(w * self.mesh.min_width() / self.growth_sup);
        }
        bound
    }

    fn aggregation_cfl(&self, coeffs: &[f64]) -> Option<f64> {
        let beta = self.kernels.aggregation.as_ref()?;
        let geom = self.aggregation_geometry.as_ref()?;
        let n = self.basis.len();
        let rule = self.triangle_rule;
        let sup = geom
            .triangles()
            .par_iter()
            .map(|t| {
                let cq = &coeffs[t.w_cell * n..(t.w_cell + 1) * n];
                rule.points_in(&t.triangle)
                    .map(|[u, w]| {
                        let nh = crate::basis::eval_modal(cq, self.mesh.to_reference(t.w_cell, w));
                        (beta.eval(u, w) * nh).abs()
                    })
                    .fold(0.0, f64::max)
            })
            .reduce(|| 0.0, f64::max);
        (sup > 0.0).then(|| 1.0 / (self.mesh.v_max() * sup))
    }
}

/// `out_j += sign Σ_m a[j][m] x_m`.
#[inline]
fn mat_vec_add(a: &[f64], x: &[f64], out: &mut [f64], sign: f64) {
    let n = x.len();
    for (j, o) in out.iter_mut().enumerate() {
        let s: f64 = a[j * n..(j + 1) * n].iter().zip(x).map(|(p, q)| p * q).sum();
        *o += sign * s;
    }
}

/// `out_j += sign Σ_{m,l} t[j][m][l] a_m b_l`.
#[inline]
fn quad_form_add(t: &[f64], a: &[f64], b: &[f64], out: &mut [f64], sign: f64) {
    let n = a.len();
    for (j, o) in out.iter_mut().enumerate() {
        let mut s = 0.0;
        for m in 0..n {
            let row = &t[(j * n + m) * n..(j * n + m + 1) * n];
            let inner: f64 = row.iter().zip(b).map(|(p, q)| p * q).sum();
            s += a[m] * inner;
        }
        *o += sign * s;
    }
}

fn check_finite(what: &str, v: &[f64]) -> Result<()> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::Kernel(format!("non-finite {what} tensor entry")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::DgSolution;
    use crate::kernels::{builtin_aggregation, builtin_breakage, builtin_growth};

    fn data(mesh: Mesh, k: usize, kernels: KernelSet) -> DgData {
        DgData::build(
            Arc::new(mesh),
            Basis::new(k).unwrap(),
            kernels,
            AssemblyOptions::for_degree(k),
        )
        .unwrap()
    }

    fn constant_state(d: &DgData, value: f64) -> Vec<f64> {
        let n = d.basis().len();
        let mut c = vec![0.0; d.num_coeffs()];
        for i in 0..d.mesh().num_cells() {
            c[i * n] = value * std::f64::consts::SQRT_2;
        }
        c
    }

    #[test]
    fn birth_tensor_total_on_unit_cell() {
        let d = data(
            Mesh::uniform(1.0, 1).unwrap(),
            1,
            KernelSet {
                aggregation: Some(builtin_aggregation("constant", 1.0).unwrap()),
                ..Default::default()
            },
        );
        let t = d.total_birth_tensor(0);
        // stored blocks already include the mirror triangle
        let expected = 1.0 / (8.0 * 2f64.sqrt());
        assert!((t[0] - expected).abs() < 1e-15, "{}", t[0]);
    }

    #[test]
    fn constant_kernel_moment_rates() {
        let d = data(
            Mesh::uniform(1.0, 1).unwrap(),
            2,
            KernelSet {
                aggregation: Some(builtin_aggregation("constant", 1.0).unwrap()),
                ..Default::default()
            },
        );
        let c = constant_state(&d, 1.0);
        let mut ws = RhsWorkspace::new();
        let rate = d.rhs(&c, 0.0, &mut ws).to_vec();
        let (_, m0) = d.moment_of_rhs(&rate, 0);
        let (_, m1) = d.moment_of_rhs(&rate, 1);
        assert!((m0 + 0.25).abs() < 1e-14, "{m0}");
        assert!(m1.abs() < 1e-15, "{m1}");
    }

    #[test]
    fn constant_growth_telescopes() {
        let d = data(
            Mesh::uniform(1.0, 4).unwrap(),
            2,
            KernelSet {
                growth: Some(builtin_growth("constant", 1.0).unwrap()),
                ..Default::default()
            },
        );
        let c = constant_state(&d, 1.0);
        let mut rate = vec![0.0; d.num_coeffs()];
        d.apply_rhs(&c, 0.0, &mut rate);
        let (cells, total) = d.moment_of_rhs(&rate, 0);
        assert!((cells[0] + 1.0).abs() < 1e-14);
        for r in &cells[1..] {
            assert!(r.abs() < 1e-14);
        }
        assert!((total + 1.0).abs() < 1e-14);
    }

    #[test]
    fn inactive_processes_give_zero() {
        let d = data(Mesh::uniform(1.0, 3).unwrap(), 2, KernelSet::default());
        assert!(d.growth_matrix(0).is_none());
        assert!(d.nucleation_vector(0).is_none());
        let c = constant_state(&d, 2.0);
        let mut rate = vec![1.0; d.num_coeffs()];
        d.apply_rhs(&c, 0.0, &mut rate);
        assert!(rate.iter().all(|&r| r == 0.0));
        assert_eq!(d.cfl_bound(&c), f64::INFINITY);
    }

    #[test]
    fn uniform_linear_cell_matrix_vanishes_for_linear_test() {
        let mesh = Mesh::uniform(2.0, 3).unwrap();
        let d = data(
            mesh.clone(),
            2,
            KernelSet {
                breakage: Some(builtin_breakage("uniform_linear", 1.0).unwrap()),
                ..Default::default()
            },
        );
        // With a_j the coefficients of v on cell i, Σ_j a_j B^i_{jm} must equal
        // the exact integral of (v - (Σ_j a_j) v) γ φ_m.
        let n = 3;
        for i in 0..3 {
            let mut a = vec![0.0; n];
            moment_weights(&mesh, Basis::new(2).unwrap(), i, 1, &mut a);
            let scale = 2.0 / mesh.width(i);
            let b = d.breakage_cell_matrix(i).unwrap();
            let sum_a: f64 = a.iter().map(|x| x * scale).sum();
            for m in 0..n {
                let combo: f64 = (0..n).map(|j| a[j] * scale * b[j * n + m]).sum();
                let rule = LineRule::gauss_legendre(6).unwrap();
                let expected = rule.integrate_interval(mesh.left(i), mesh.right(i), |v| {
                    let x = mesh.to_reference(i, v);
                    let mut phi = vec![0.0; n];
                    Basis::new(2).unwrap().eval_all(x, &mut phi);
                    (v - sum_a * v) * v * phi[m]
                });
                assert!((combo - expected).abs() < 1e-13, "cell {i} m {m}");
            }
        }
    }

    #[test]
    fn compaction_does_not_change_the_rhs() {
        let mesh = Arc::new(Mesh::power(4.0, 5, 2.0).unwrap());
        let kernels = KernelSet {
            aggregation: Some(builtin_aggregation("brownian", 1.0).unwrap()),
            ..Default::default()
        };
        let basis = Basis::new(2).unwrap();
        let mut opts = AssemblyOptions::for_degree(2);
        let compact = DgData::build(mesh.clone(), basis, kernels.clone(), opts).unwrap();
        opts.compact = false;
        let dense = DgData::build(mesh.clone(), basis, kernels, opts).unwrap();
        let sol = DgSolution::project(mesh, basis, 6, |v| (-v).exp() * (1.0 + v)).unwrap();
        let mut a = vec![0.0; sol.coeffs().len()];
        let mut b = a.clone();
        compact.apply_rhs(sol.coeffs(), 0.0, &mut a);
        dense.apply_rhs(sol.coeffs(), 0.0, &mut b);
        let scale = a.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() <= 1e-13 * scale);
        }
    }

    #[test]
    fn cfl_bounds() {
        let d = data(
            Mesh::uniform(1.0, 1).unwrap(),
            1,
            KernelSet {
                aggregation: Some(builtin_aggregation("constant", 1.0).unwrap()),
                ..Default::default()
            },
        );
        let c = constant_state(&d, 1.0);
        assert!((d.cfl_bound(&c) - 1.0).abs() < 1e-14);

        let d = data(
            Mesh::uniform(1.0, 10).unwrap(),
            1,
            KernelSet {
                growth: Some(builtin_growth("constant", 1.0).unwrap()),
                ..Default::default()
            },
        );
        // three Lobatto points: normalized endpoint weight 1/6
        let c = constant_state(&d, 1.0);
        assert!((d.cfl_bound(&c) - 0.1 / 6.0).abs() < 1e-15);
    }
}
