//! Density rasterization and its file formats.
//!
//! A [`DensityGrid`] samples |psi|^2 on an inclusive rectangular lattice;
//! row index runs over z, column index over t, values stored row-major.
//! The CSV layout is fixed: one `#`-prefixed header line carrying the full
//! grid spec, then n_z rows of n_t comma-separated values, every number with
//! 17 significant digits. The JSON form mirrors the same fields. Identical
//! inputs produce byte-identical files.

use crate::error::{Error, Result};
use crate::lightcone::Rapidity;
use crate::report::{fmt_f64, Json};
use crate::wavefn::psi;
use std::io::Write;

/// Bounds and sampling counts for a density grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub z_min: f64,
    pub z_max: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub n_z: usize,
    pub n_t: usize,
}

impl GridSpec {
    /// Square grid over [-extent, extent]^2 with n points per axis.
    pub fn square(extent: f64, n: usize) -> Self {
        GridSpec {
            z_min: -extent,
            z_max: extent,
            t_min: -extent,
            t_max: extent,
            n_z: n,
            n_t: n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = self.z_min.is_finite()
            && self.z_max.is_finite()
            && self.t_min.is_finite()
            && self.t_max.is_finite();
        if !finite {
            return Err(Error::InvalidGrid("bounds must be finite".into()));
        }
        if self.z_min >= self.z_max || self.t_min >= self.t_max {
            return Err(Error::InvalidGrid(format!(
                "bounds must be ordered: z [{}, {}], t [{}, {}]",
                self.z_min, self.z_max, self.t_min, self.t_max
            )));
        }
        if self.n_z < 2 || self.n_t < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 samples per axis, got n_z = {}, n_t = {}",
                self.n_z, self.n_t
            )));
        }
        Ok(())
    }

    pub fn z_coord(&self, i: usize) -> f64 {
        self.z_min + (self.z_max - self.z_min) * i as f64 / (self.n_z - 1) as f64
    }

    pub fn t_coord(&self, j: usize) -> f64 {
        self.t_min + (self.t_max - self.t_min) * j as f64 / (self.n_t - 1) as f64
    }

    fn cell_area(&self) -> f64 {
        let dz = (self.z_max - self.z_min) / (self.n_z - 1) as f64;
        let dt = (self.t_max - self.t_min) / (self.n_t - 1) as f64;
        dz * dt
    }
}

/// |psi_eta|^2 sampled on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityGrid {
    eta: f64,
    spec: GridSpec,
    values: Vec<f64>,
}

/// Principal second-moment data of a sampled density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceSummary {
    /// Standard deviation along the major principal axis.
    pub sigma_major: f64,
    /// Standard deviation along the minor principal axis.
    pub sigma_minor: f64,
    /// sigma_major / sigma_minor; e^{|eta|} for the boosted Gaussian.
    pub axis_ratio: f64,
    /// Unit vector (z, t components) of the major axis.
    pub major_axis: (f64, f64),
}

/// Samples `values[i][j] = psi(eta, z_i, t_j)^2` over the grid.
pub fn density_grid(eta: Rapidity, spec: &GridSpec) -> Result<DensityGrid> {
    spec.validate()?;
    let mut values = Vec::with_capacity(spec.n_z * spec.n_t);
    for i in 0..spec.n_z {
        let z = spec.z_coord(i);
        for j in 0..spec.n_t {
            let t = spec.t_coord(j);
            let v = psi(eta, z, t);
            values.push(v * v);
        }
    }
    Ok(DensityGrid {
        eta: eta.value(),
        spec: *spec,
        values,
    })
}

impl DensityGrid {
    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    /// Row-major values; row index i is the z index.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.spec.n_t + j]
    }

    pub fn peak(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    /// Plain Riemann sum of the density times the cell area. Close to 1
    /// whenever the grid covers the distribution.
    pub fn riemann_mass(&self) -> f64 {
        let sum: f64 = self.values.iter().sum();
        sum * self.spec.cell_area()
    }

    /// Second-moment analysis of the sampled density: principal standard
    /// deviations, their ratio, and the major-axis direction.
    pub fn covariance(&self) -> CovarianceSummary {
        let mut mass = 0.0;
        let mut mean_z = 0.0;
        let mut mean_t = 0.0;
        for i in 0..self.spec.n_z {
            let z = self.spec.z_coord(i);
            for j in 0..self.spec.n_t {
                let t = self.spec.t_coord(j);
                let w = self.value(i, j);
                mass += w;
                mean_z += w * z;
                mean_t += w * t;
            }
        }
        mean_z /= mass;
        mean_t /= mass;

        let mut czz = 0.0;
        let mut ctt = 0.0;
        let mut czt = 0.0;
        for i in 0..self.spec.n_z {
            let z = self.spec.z_coord(i) - mean_z;
            for j in 0..self.spec.n_t {
                let t = self.spec.t_coord(j) - mean_t;
                let w = self.value(i, j);
                czz += w * z * z;
                ctt += w * t * t;
                czt += w * z * t;
            }
        }
        czz /= mass;
        ctt /= mass;
        czt /= mass;

        // Closed-form eigendecomposition of [[czz, czt], [czt, ctt]].
        let mid = 0.5 * (czz + ctt);
        let diff = 0.5 * (czz - ctt);
        let radius = (diff * diff + czt * czt).sqrt();
        let hi = mid + radius;
        let lo = mid - radius;
        let major_axis = if czt.abs() > 1e-300 {
            let norm = (czt * czt + (hi - czz) * (hi - czz)).sqrt();
            (czt / norm, (hi - czz) / norm)
        } else if czz >= ctt {
            (1.0, 0.0)
        } else {
            (0.0, 1.0)
        };
        CovarianceSummary {
            sigma_major: hi.sqrt(),
            sigma_minor: lo.sqrt(),
            axis_ratio: (hi / lo).sqrt(),
            major_axis,
        }
    }

    pub fn write_csv<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(
            out,
            "# eta={} z_min={} z_max={} t_min={} t_max={} n_z={} n_t={}",
            fmt_f64(self.eta),
            fmt_f64(self.spec.z_min),
            fmt_f64(self.spec.z_max),
            fmt_f64(self.spec.t_min),
            fmt_f64(self.spec.t_max),
            self.spec.n_z,
            self.spec.n_t
        )?;
        let mut line = String::new();
        for i in 0..self.spec.n_z {
            line.clear();
            for j in 0..self.spec.n_t {
                if j > 0 {
                    line.push(',');
                }
                line.push_str(&fmt_f64(self.value(i, j)));
            }
            writeln!(out, "{}", line)?;
        }
        Ok(())
    }

    pub fn write_json<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        out.write_all(self.to_json().to_pretty_string().as_bytes())
    }

    pub fn to_json(&self) -> Json {
        let mut rows = Vec::with_capacity(self.spec.n_z);
        for i in 0..self.spec.n_z {
            rows.push(Json::from_f64_slice(
                &self.values[i * self.spec.n_t..(i + 1) * self.spec.n_t],
            ));
        }
        let mut obj = Json::obj();
        obj.push("eta", Json::Num(self.eta))
            .push("z_min", Json::Num(self.spec.z_min))
            .push("z_max", Json::Num(self.spec.z_max))
            .push("t_min", Json::Num(self.spec.t_min))
            .push("t_max", Json::Num(self.spec.t_max))
            .push("n_z", Json::Int(self.spec.n_z as i64))
            .push("n_t", Json::Int(self.spec.n_t as i64))
            .push("values", Json::Arr(rows));
        obj
    }
}
