//! Evaluation of a resolved run into a table.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::config::{CommandKind, Format, RunConfig};
use super::table::{Cell, Column, Metadata, Row, Table};
use crate::casimir::{ideal_energy_per_area, ideal_pressure, lifshitz_energy_per_area_with};
use crate::error::{Error, Result};
use crate::numerics::QuadratureSpec;
use crate::polder::{
    casimir_polder_braces, charge_sheet_energy_with, delta1_with, f_te_with, f_tm_with, g_3_with,
    g_te_with, g_tm_with, h_3, h_parallel_with, AtomProperties,
};
use crate::sheet::{
    reflection_te, reflection_tm, scalar_reflection, te_plasmon_exists, tm_dispersion_residual, tm_plasmon_closed,
    tm_plasmon_root, MinkowskiMomentum, SheetParameters,
};
use crate::sphere::{jost_evaluation, scan_minimum, scan_real_zeros, ScanGrid, SphericalShell};

pub const TOOL_NAME: &str = "plasma-sheet";

/// Column layout of a run.
pub fn columns(cfg: &RunConfig) -> Vec<Column> {
    let r = Column::real;
    let c = Column::complex;
    let mut cols = match cfg.command {
        CommandKind::Reflection => vec![r("k0_over_omega"), r("kpar_over_omega"), c("r_te"), c("r_tm"), c("r_scalar")],
        CommandKind::Dispersion => vec![
            r("kpar_over_omega"),
            r("k0_closed_over_omega"),
            r("k0_root_over_omega"),
            r("relative_residual"),
            r("te_mode_exists"),
        ],
        CommandKind::Casimir => vec![r("omega_a"), r("energy_ratio"), r("pressure_ratio"), r("te_share"), r("tm_share")],
        CommandKind::CasimirPolder => vec![r("omega_a"), r("braces"), r("a4_energy")],
        CommandKind::Charge => vec![
            r("omega_a"),
            r("a_electrostatic"),
            r("a_kinetic"),
            r("a_delta1"),
            r("a_total"),
        ],
        CommandKind::Sphere if is_scan(cfg) => vec![
            r("l"),
            r("omega_r"),
            r("te_min_k0r"),
            r("te_min_modulus_squared"),
            r("tm_min_k0r"),
            r("tm_min_modulus_squared"),
            r("zero_count"),
        ],
        CommandKind::Sphere => vec![r("l"), r("k0r"), r("omega_r"), c("g_te"), c("g_tm")],
        CommandKind::Functions => match family(cfg) {
            "f" => vec![r("x"), r("f_te"), r("f_tm")],
            "h" => vec![r("x"), r("h_par"), r("h_3")],
            _ => vec![r("x"), r("g_te"), r("g_tm"), r("g_3")],
        },
    };
    if cfg.raw_units {
        let raw: &[&str] = match cfg.command {
            CommandKind::Reflection => &["k0", "kpar", "omega"],
            CommandKind::Dispersion => &["kpar", "k0_closed", "k0_root", "omega"],
            CommandKind::Casimir => &["a", "omega", "energy_per_area", "pressure"],
            CommandKind::CasimirPolder => &["a", "omega", "energy"],
            CommandKind::Charge => &["a", "omega", "electrostatic", "kinetic", "delta1", "total"],
            CommandKind::Sphere if is_scan(cfg) => &["radius", "omega"],
            CommandKind::Sphere => &["k0", "radius", "omega"],
            CommandKind::Functions => &[],
        };
        cols.extend(raw.iter().map(|n| Column::real(n)));
    }
    cols
}

fn is_scan(cfg: &RunConfig) -> bool {
    cfg.text("mode") == Some("scan")
}

fn family(cfg: &RunConfig) -> &str {
    cfg.text("family").unwrap_or("g")
}

fn param(cfg: &RunConfig, key: &str) -> f64 {
    cfg.number(key).unwrap_or_else(|| panic!("resolved configuration lacks `{key}`"))
}

fn reals(values: &[f64]) -> Vec<Cell> {
    values.iter().map(|v| Cell::Real(*v)).collect()
}

pub fn metadata(cfg: &RunConfig) -> Metadata {
    Metadata {
        tool: TOOL_NAME.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: cfg.command.name().into(),
        tolerance: cfg.tolerance,
        config: cfg.echo(),
    }
}

/// One row at sweep value `t`, as (dimensionless cells, raw cells).
fn evaluate(cfg: &RunConfig, t: f64) -> Result<(Vec<Cell>, Vec<Cell>)> {
    let tol = cfg.tolerance;
    let laguerre = QuadratureSpec::exponential_weight().with_tolerance(tol);
    let semi = QuadratureSpec::semi_infinite().with_tolerance(tol);
    match cfg.command {
        CommandKind::Reflection => {
            let omega = param(cfg, "omega");
            let kpar = param(cfg, "kpar");
            let sheet = SheetParameters::single(omega)?;
            let k = MinkowskiMomentum::from_kpar(t, kpar);
            let cells = vec![
                Cell::Real(t / omega),
                Cell::Real(kpar / omega),
                Cell::Complex(reflection_te(&k, &sheet)?),
                Cell::Complex(reflection_tm(&k, &sheet)?),
                Cell::Complex(scalar_reflection(&k, &sheet)?),
            ];
            Ok((cells, reals(&[t, kpar, omega])))
        }
        CommandKind::Dispersion => {
            let omega = param(cfg, "omega");
            let sheet = SheetParameters::single(omega)?;
            let closed = tm_plasmon_closed(t, &sheet)?;
            let root = tm_plasmon_root(t, &sheet)?;
            let residual = tm_dispersion_residual(root, t, &sheet) / (t * t);
            let te = if te_plasmon_exists(t, &sheet)? { 1.0 } else { 0.0 };
            Ok((
                reals(&[t / omega, closed / omega, root / omega, residual, te]),
                reals(&[t, closed, root, omega]),
            ))
        }
        CommandKind::Casimir => {
            let a = param(cfg, "a");
            let omega = t / a;
            let sheet = SheetParameters::pair(omega, a)?;
            let res = lifshitz_energy_per_area_with(a, &sheet, &semi)?;
            let (te_share, tm_share) = if res.energy_per_area == 0.0 {
                (0.0, 0.0)
            } else {
                (res.te_share, res.tm_share)
            };
            Ok((
                reals(&[
                    t,
                    res.energy_per_area / ideal_energy_per_area(a),
                    res.pressure / ideal_pressure(a),
                    te_share,
                    tm_share,
                ]),
                reals(&[a, omega, res.energy_per_area, res.pressure]),
            ))
        }
        CommandKind::CasimirPolder => {
            let a = param(cfg, "a");
            let omega = t / a;
            let alpha = match cfg.number("isotropic-alpha") {
                Some(v) => [v; 3],
                None if ["alpha1", "alpha2", "alpha3"].iter().any(|k| cfg.number(k).is_some()) => [
                    cfg.number("alpha1").unwrap_or(0.0),
                    cfg.number("alpha2").unwrap_or(0.0),
                    cfg.number("alpha3").unwrap_or(0.0),
                ],
                None => [1.0; 3],
            };
            let atom = AtomProperties::new(0.0, 1.0)?.with_polarizabilities(alpha)?;
            let braces = casimir_polder_braces(t, &atom, &laguerre)?;
            let a4_energy = -braces / (32.0 * std::f64::consts::PI.powi(2));
            Ok((reals(&[t, braces, a4_energy]), reals(&[a, omega, a4_energy / a.powi(4)])))
        }
        CommandKind::Charge => {
            let a = param(cfg, "a");
            let omega = t / a;
            let sheet = SheetParameters::single(omega)?;
            let atom = AtomProperties::new(param(cfg, "charge"), param(cfg, "mass"))?
                .with_momenta(param(cfg, "p2-par"), param(cfg, "p2-perp"))?
                .with_quadrupole(param(cfg, "quadrupole"))?;
            let e = charge_sheet_energy_with(a, &sheet, &atom, &semi)?;
            let d1 = delta1_with(a, &sheet, &atom, &laguerre)?;
            let total = e.total() + d1;
            Ok((
                reals(&[t, a * e.electrostatic, a * e.kinetic, a * d1, a * total]),
                reals(&[a, omega, e.electrostatic, e.kinetic, d1, total]),
            ))
        }
        CommandKind::Sphere => {
            let radius = param(cfg, "radius");
            let omega_r = param(cfg, "omega-r");
            let shell = SphericalShell::new(radius, omega_r / radius)?;
            if is_scan(cfg) {
                let l = t as usize;
                let grid = ScanGrid::new(param(cfg, "scan-k0r-max"), param(cfg, "scan-points") as usize);
                let [te, tm] = scan_minimum(l, &shell, &grid)?;
                let zeros = scan_real_zeros(l, &shell, &grid)?;
                Ok((
                    reals(&[
                        t,
                        omega_r,
                        te.k0r,
                        te.modulus_squared,
                        tm.k0r,
                        tm.modulus_squared,
                        zeros.len() as f64,
                    ]),
                    reals(&[radius, shell.omega()]),
                ))
            } else {
                let l = param(cfg, "l") as usize;
                let k0 = t / radius;
                let j = jost_evaluation(l, k0, &shell)?;
                Ok((
                    vec![
                        Cell::Real(l as f64),
                        Cell::Real(t),
                        Cell::Real(omega_r),
                        Cell::Complex(j.g_te),
                        Cell::Complex(j.g_tm),
                    ],
                    reals(&[k0, radius, shell.omega()]),
                ))
            }
        }
        CommandKind::Functions => {
            let values = match family(cfg) {
                "f" => vec![t, f_te_with(t, &laguerre)?, f_tm_with(t, &laguerre)?],
                "h" => vec![t, h_parallel_with(t, &laguerre)?, h_3(t)?],
                _ => vec![t, g_te_with(t, &laguerre)?, g_tm_with(t, &laguerre)?, g_3_with(t, &laguerre)?],
            };
            Ok((reals(&values), Vec::new()))
        }
    }
}

fn check_row(cells: &[Cell]) -> Result<()> {
    let finite = cells.iter().all(|c| match c {
        Cell::Real(v) => v.is_finite(),
        Cell::Complex(z) => z.re.is_finite() && z.im.is_finite(),
    });
    if finite {
        Ok(())
    } else {
        Err(Error::NonFinite("table row"))
    }
}

/// Evaluates every sweep point in parallel, keeping sweep order.
///
/// A point that fails yields NaN cells and its error message instead of aborting the run.
pub fn run(cfg: &RunConfig) -> Table {
    let columns = columns(cfg);
    let points = cfg.sweep.points();
    let rows = points
        .par_iter()
        .map(|&t| {
            let outcome = evaluate(cfg, t).and_then(|(mut cells, raw)| {
                if cfg.raw_units {
                    cells.extend(raw);
                }
                check_row(&cells)?;
                Ok(cells)
            });
            match outcome {
                Ok(cells) => Row { cells, error: None },
                Err(e) => Row {
                    cells: columns.iter().map(|c| Cell::nan(c.kind)).collect(),
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    Table {
        metadata: metadata(cfg),
        columns,
        rows,
    }
}

/// Path of the metadata written next to a CSV file.
pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}

/// Writes `table` in `format` to `output` (standard output if `None`).
///
/// CSV files get a `<path>.meta.json` sidecar holding the metadata; CSV on standard output
/// carries the table alone.
pub fn write_table(table: &Table, format: Format, output: Option<&Path>) -> io::Result<()> {
    let body = match format {
        Format::Csv => table.to_csv_string(),
        Format::Json => table.to_json_string(),
    };
    match output {
        None => {
            let mut out = io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()
        }
        Some(path) => {
            fs::write(path, body)?;
            if format == Format::Csv {
                let meta = serde_json::to_string_pretty(&table.metadata).map_err(io::Error::other)?;
                fs::write(sidecar_path(path), meta + "\n")?;
            }
            Ok(())
        }
    }
}
