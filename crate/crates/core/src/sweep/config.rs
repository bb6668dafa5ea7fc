//! Run configuration: the per-command key tables, TOML config files and their merge with
//! command-line values.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::numerics::DEFAULT_RELATIVE_TOLERANCE;

/// Environment variable holding the default relative tolerance.
pub const TOLERANCE_ENV: &str = "PLASMA_SHEET_TOLERANCE";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("cannot parse {path}: {message}")]
    Parse { path: String, message: String },
    #[error("unknown key `{key}` for command `{command}`")]
    UnknownKey { key: String, command: String },
    #[error("invalid value for `{key}`: {reason}")]
    InvalidValue { key: String, reason: String },
    #[error("{0}")]
    Invalid(String),
}

/// Sub-commands of the command-line tool.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CommandKind {
    Reflection,
    Dispersion,
    Casimir,
    CasimirPolder,
    Charge,
    Sphere,
    Functions,
}

impl CommandKind {
    pub const ALL: [CommandKind; 7] = [
        CommandKind::Reflection,
        CommandKind::Dispersion,
        CommandKind::Casimir,
        CommandKind::CasimirPolder,
        CommandKind::Charge,
        CommandKind::Sphere,
        CommandKind::Functions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Reflection => "reflection",
            CommandKind::Dispersion => "dispersion",
            CommandKind::Casimir => "casimir",
            CommandKind::CasimirPolder => "casimir-polder",
            CommandKind::Charge => "charge",
            CommandKind::Sphere => "sphere",
            CommandKind::Functions => "functions",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn about(self) -> &'static str {
        match self {
            CommandKind::Reflection => "TE, TM and scalar reflection coefficients of one sheet versus k0",
            CommandKind::Dispersion => "TM surface-plasmon frequency (closed form and root finder) versus kpar",
            CommandKind::Casimir => "Two-sheet Casimir energy and pressure versus Omega*a",
            CommandKind::CasimirPolder => "Atom-sheet Casimir-Polder energy versus Omega*a",
            CommandKind::Charge => "Charge-sheet interaction energies versus Omega*a",
            CommandKind::Sphere => "Spherical-shell Jost functions (mode jost) or real-axis zero scan (mode scan)",
            CommandKind::Functions => "Reduction functions f, h or g versus x = Omega*a",
        }
    }

    /// Physical parameters accepted by the command.
    pub fn params(self) -> &'static [ParamSpec] {
        use Constraint::*;
        use ParamKind::*;
        macro_rules! p {
            ($key:expr, $kind:expr, $default:expr, $help:expr) => {
                ParamSpec {
                    key: $key,
                    kind: $kind,
                    default: $default,
                    help: $help,
                }
            };
        }
        match self {
            CommandKind::Reflection => &[
                p!("omega", Number(Positive), Some("1"), "plasma frequency Omega"),
                p!("kpar", Number(NonNegative), Some("1"), "parallel momentum"),
                p!("k0", Number(Any), Some("0.5"), "frequency k0 (sweep axis)"),
            ],
            CommandKind::Dispersion => &[
                p!("omega", Number(Positive), Some("1"), "plasma frequency Omega"),
                p!("kpar", Number(Positive), Some("1"), "parallel momentum (sweep axis)"),
            ],
            CommandKind::Casimir => &[
                p!("omega-a", Number(NonNegative), Some("1"), "Omega times separation (sweep axis)"),
                p!("a", Number(Positive), Some("1"), "sheet separation"),
            ],
            CommandKind::CasimirPolder => &[
                p!("omega-a", Number(Positive), Some("1"), "Omega times distance (sweep axis)"),
                p!("a", Number(Positive), Some("1"), "atom-sheet distance"),
                p!("isotropic-alpha", Number(NonNegative), None, "isotropic static polarizability"),
                p!("alpha1", Number(NonNegative), None, "polarizability along x1"),
                p!("alpha2", Number(NonNegative), None, "polarizability along x2"),
                p!("alpha3", Number(NonNegative), None, "polarizability along x3 (normal)"),
            ],
            CommandKind::Charge => &[
                p!("omega-a", Number(Positive), Some("1"), "Omega times distance (sweep axis)"),
                p!("a", Number(Positive), Some("1"), "charge-sheet distance"),
                p!("charge", Number(Any), Some("1"), "charge e"),
                p!("mass", Number(Positive), Some("1"), "mass m"),
                p!("p2-par", Number(NonNegative), Some("0"), "<p_par^2>"),
                p!("p2-perp", Number(NonNegative), Some("0"), "<p_3^2>"),
                p!("quadrupole", Number(Any), Some("0"), "quadrupole moment Q"),
            ],
            CommandKind::Sphere => &[
                p!("mode", Choice(&["jost", "scan"]), Some("jost"), "jost: Jost functions versus k0R; scan: zero scan versus l"),
                p!("omega-r", Number(NonNegative), Some("1"), "Omega times radius"),
                p!("radius", Number(Positive), Some("1"), "shell radius R"),
                p!("l", Integer(1), Some("1"), "orbital momentum (sweep axis in scan mode)"),
                p!("k0r", Number(Positive), Some("1"), "k0 times R (sweep axis in jost mode)"),
                p!("scan-k0r-max", Number(Positive), Some("30"), "upper end of the zero scan in k0R"),
                p!("scan-points", Integer(3), Some("3000"), "zero-scan grid points"),
            ],
            CommandKind::Functions => &[
                p!("family", Choice(&["f", "h", "g"]), Some("g"), "function family"),
                p!("x", Number(Positive), Some("1"), "x = Omega*a (sweep axis)"),
            ],
        }
    }

    /// The swept key, which may depend on the mode.
    pub fn axis(self, mode: Option<&str>) -> &'static str {
        match self {
            CommandKind::Reflection => "k0",
            CommandKind::Dispersion => "kpar",
            CommandKind::Casimir | CommandKind::CasimirPolder | CommandKind::Charge => "omega-a",
            CommandKind::Sphere if mode == Some("scan") => "l",
            CommandKind::Sphere => "k0r",
            CommandKind::Functions => "x",
        }
    }

    /// Every key that can carry a sweep range for this command.
    pub fn axis_candidates(self) -> &'static [&'static str] {
        match self {
            CommandKind::Sphere => &["k0r", "l"],
            _ => std::slice::from_ref(match self {
                CommandKind::Reflection => &"k0",
                CommandKind::Dispersion => &"kpar",
                CommandKind::Functions => &"x",
                _ => &"omega-a",
            }),
        }
    }

    pub fn param(self, key: &str) -> Option<&'static ParamSpec> {
        self.params().iter().find(|p| p.key == key)
    }
}

impl fmt::Display for CommandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Any,
    NonNegative,
    Positive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Number(Constraint),
    /// Integer with the given minimum.
    Integer(i64),
    Choice(&'static [&'static str]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub key: &'static str,
    pub kind: ParamKind,
    pub default: Option<&'static str>,
    pub help: &'static str,
}

/// A configuration value as written in a file or on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Number(f64),
    Text(String),
    Bool(bool),
}

impl Value {
    fn describe(&self) -> String {
        match self {
            Value::Number(v) => v.to_string(),
            Value::Text(s) => format!("\"{s}\""),
            Value::Bool(b) => b.to_string(),
        }
    }

    fn as_number(&self, key: &str) -> Result<f64, ConfigError> {
        match self {
            Value::Number(v) => Ok(*v),
            Value::Text(s) => s.trim().parse::<f64>().map_err(|_| ConfigError::InvalidValue {
                key: key.to_string(),
                reason: format!("expected a number, got \"{s}\""),
            }),
            Value::Bool(_) => Err(ConfigError::InvalidValue {
                key: key.to_string(),
                reason: "expected a number, got a boolean".into(),
            }),
        }
    }

    fn as_text(&self, key: &str) -> Result<String, ConfigError> {
        match self {
            Value::Text(s) => Ok(s.clone()),
            other => Err(ConfigError::InvalidValue {
                key: key.to_string(),
                reason: format!("expected a string, got {}", other.describe()),
            }),
        }
    }

    fn as_bool(&self, key: &str) -> Result<bool, ConfigError> {
        match self {
            Value::Bool(b) => Ok(*b),
            Value::Text(s) if s == "true" => Ok(true),
            Value::Text(s) if s == "false" => Ok(false),
            other => Err(ConfigError::InvalidValue {
                key: key.to_string(),
                reason: format!("expected true or false, got {}", other.describe()),
            }),
        }
    }
}

/// Key/value pairs from one source, in file or flag spelling.
pub type ConfigMap = BTreeMap<String, Value>;

/// Table output formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

/// Keys shared by every command.
pub const COMMON_KEYS: [&str; 6] = ["format", "output", "tolerance", "raw-units", "count", "scale"];

/// Range suffixes accepted on the sweep axis.
pub fn range_keys(axis: &str) -> [String; 2] {
    [format!("{axis}-min"), format!("{axis}-max")]
}

/// A validated run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    /// Resolved physical parameters; numbers for numeric keys, text for choices.
    pub values: BTreeMap<String, Value>,
    pub sweep: Sweep,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub tolerance: f64,
    pub raw_units: bool,
}

/// `count` points of `axis` between `min` and `max`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub axis: String,
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub scale: Scale,
}

impl Sweep {
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let n = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i == 0 {
                    return self.min;
                }
                if i + 1 == self.count {
                    return self.max;
                }
                let t = i as f64 / n;
                match self.scale {
                    Scale::Linear => self.min + (self.max - self.min) * t,
                    Scale::Log => (self.min.ln() + (self.max.ln() - self.min.ln()) * t).exp(),
                }
            })
            .collect()
    }
}

impl RunConfig {
    /// Merges `file` and `flags` (flags win) for `command` and validates the result.
    ///
    /// `env_tolerance` is the value of [`TOLERANCE_ENV`], if set; explicit `tolerance` keys
    /// take precedence over it.
    pub fn resolve(
        command: CommandKind,
        file: &ConfigMap,
        flags: &ConfigMap,
        env_tolerance: Option<&str>,
    ) -> Result<Self, ConfigError> {
        if let Some(v) = file.get("command") {
            let named = v.as_text("command")?;
            if named != command.name() {
                return Err(ConfigError::Invalid(format!(
                    "config file is for command `{named}` but `{}` was requested",
                    command.name()
                )));
            }
        }
        let mut merged = ConfigMap::new();
        for (k, v) in file.iter().filter(|(k, _)| k.as_str() != "command") {
            merged.insert(k.clone(), v.clone());
        }
        for (k, v) in flags {
            merged.insert(k.clone(), v.clone());
        }
        for key in merged.keys() {
            if !is_known_key(command, key) {
                return Err(ConfigError::UnknownKey {
                    key: key.clone(),
                    command: command.name().into(),
                });
            }
        }

        let mut values = BTreeMap::new();
        for spec in command.params() {
            let raw = match (merged.get(spec.key), spec.default) {
                (Some(v), _) => v.clone(),
                (None, Some(d)) => Value::Text(d.to_string()),
                (None, None) => continue,
            };
            values.insert(spec.key.to_string(), validate_param(spec, &raw)?);
        }
        let mode = values.get("mode").and_then(|v| match v {
            Value::Text(s) => Some(s.clone()),
            _ => None,
        });
        let axis = command.axis(mode.as_deref());
        for other in command.axis_candidates().iter().filter(|c| **c != axis) {
            for key in range_keys(other) {
                if merged.contains_key(&key) {
                    return Err(ConfigError::Invalid(format!(
                        "`{key}` has no effect: the sweep axis of this mode is `{axis}`"
                    )));
                }
            }
        }
        if command == CommandKind::CasimirPolder {
            let individual = ["alpha1", "alpha2", "alpha3"].iter().any(|k| values.contains_key(*k));
            if individual && values.contains_key("isotropic-alpha") {
                return Err(ConfigError::Invalid(
                    "give either isotropic-alpha or alpha1..alpha3, not both".into(),
                ));
            }
        }

        let sweep = build_sweep(command, axis, &merged, &values)?;

        let format = match merged.get("format") {
            None => Format::Csv,
            Some(v) => match v.as_text("format")?.as_str() {
                "csv" => Format::Csv,
                "json" => Format::Json,
                other => {
                    return Err(ConfigError::InvalidValue {
                        key: "format".into(),
                        reason: format!("expected csv or json, got \"{other}\""),
                    })
                }
            },
        };
        let output = match merged.get("output") {
            None => None,
            Some(v) => {
                let s = v.as_text("output")?;
                if s == "-" {
                    None
                } else {
                    Some(PathBuf::from(s))
                }
            }
        };
        let tolerance = match (merged.get("tolerance"), env_tolerance) {
            (Some(v), _) => v.as_number("tolerance")?,
            (None, Some(s)) => s.trim().parse::<f64>().map_err(|_| ConfigError::InvalidValue {
                key: TOLERANCE_ENV.into(),
                reason: format!("expected a number, got \"{s}\""),
            })?,
            (None, None) => DEFAULT_RELATIVE_TOLERANCE,
        };
        if !(tolerance > 0.0 && tolerance <= 1e-3) {
            return Err(ConfigError::InvalidValue {
                key: "tolerance".into(),
                reason: format!("must lie in (0, 1e-3], got {tolerance}"),
            });
        }
        let raw_units = match merged.get("raw-units") {
            None => false,
            Some(v) => v.as_bool("raw-units")?,
        };
        Ok(Self {
            command,
            values,
            sweep,
            format,
            output,
            tolerance,
            raw_units,
        })
    }

    pub fn number(&self, key: &str) -> Option<f64> {
        match self.values.get(key) {
            Some(Value::Number(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn text(&self, key: &str) -> Option<&str> {
        match self.values.get(key) {
            Some(Value::Text(s)) => Some(s),
            _ => None,
        }
    }

    /// The configuration as JSON, for the table metadata.
    pub fn echo(&self) -> serde_json::Map<String, serde_json::Value> {
        let mut out = serde_json::Map::new();
        out.insert("command".into(), self.command.name().into());
        for (k, v) in self.values.iter().filter(|(k, _)| **k != self.sweep.axis) {
            let j = match v {
                Value::Number(x) => serde_json::Value::from(*x),
                Value::Text(s) => serde_json::Value::from(s.clone()),
                Value::Bool(b) => serde_json::Value::from(*b),
            };
            out.insert(k.clone(), j);
        }
        let range = range_keys(&self.sweep.axis);
        out.insert(range[0].clone(), self.sweep.min.into());
        out.insert(range[1].clone(), self.sweep.max.into());
        out.insert("count".into(), self.sweep.count.into());
        out.insert(
            "scale".into(),
            match self.sweep.scale {
                Scale::Linear => "linear",
                Scale::Log => "log",
            }
            .into(),
        );
        out.insert("format".into(), self.format.name().into());
        out.insert("tolerance".into(), self.tolerance.into());
        out.insert("raw-units".into(), self.raw_units.into());
        out
    }
}

fn is_known_key(command: CommandKind, key: &str) -> bool {
    COMMON_KEYS.contains(&key)
        || command.param(key).is_some()
        || command
            .axis_candidates()
            .iter()
            .any(|axis| range_keys(axis).iter().any(|r| r == key))
}

fn validate_param(spec: &ParamSpec, raw: &Value) -> Result<Value, ConfigError> {
    let invalid = |reason: String| ConfigError::InvalidValue {
        key: spec.key.to_string(),
        reason,
    };
    match spec.kind {
        ParamKind::Number(c) => {
            let v = raw.as_number(spec.key)?;
            check_constraint(spec.key, v, c)?;
            Ok(Value::Number(v))
        }
        ParamKind::Integer(min) => {
            let v = raw.as_number(spec.key)?;
            if v.fract() != 0.0 || v < min as f64 || !v.is_finite() {
                return Err(invalid(format!("expected an integer >= {min}, got {v}")));
            }
            Ok(Value::Number(v))
        }
        ParamKind::Choice(options) => {
            let s = raw.as_text(spec.key)?;
            if !options.contains(&s.as_str()) {
                return Err(invalid(format!("expected one of {}, got \"{s}\"", options.join(", "))));
            }
            Ok(Value::Text(s))
        }
    }
}

fn check_constraint(key: &str, v: f64, c: Constraint) -> Result<(), ConfigError> {
    let ok = v.is_finite()
        && match c {
            Constraint::Any => true,
            Constraint::NonNegative => v >= 0.0,
            Constraint::Positive => v > 0.0,
        };
    if ok {
        Ok(())
    } else {
        let what = match c {
            Constraint::Any => "a finite number",
            Constraint::NonNegative => "a finite, non-negative number",
            Constraint::Positive => "a finite, positive number",
        };
        Err(ConfigError::InvalidValue {
            key: key.to_string(),
            reason: format!("expected {what}, got {v}"),
        })
    }
}

fn build_sweep(
    command: CommandKind,
    axis: &str,
    merged: &ConfigMap,
    values: &BTreeMap<String, Value>,
) -> Result<Sweep, ConfigError> {
    let spec = command
        .param(axis)
        .ok_or_else(|| ConfigError::Invalid(format!("no parameter for sweep axis `{axis}`")))?;
    let [min_key, max_key] = range_keys(axis);
    let read = |key: &str| -> Result<Option<f64>, ConfigError> {
        match merged.get(key) {
            None => Ok(None),
            Some(v) => {
                let x = v.as_number(key)?;
                validate_param(spec, &Value::Number(x))?;
                Ok(Some(x))
            }
        }
    };
    let fixed = match values.get(axis) {
        Some(Value::Number(v)) => *v,
        _ => unreachable!("sweep axes always carry a default"),
    };
    let lo = read(&min_key)?;
    let hi = read(&max_key)?;
    let integer = matches!(spec.kind, ParamKind::Integer(_));
    let count = match merged.get("count") {
        None => None,
        Some(v) => {
            let c = v.as_number("count")?;
            if c.fract() != 0.0 || c < 1.0 {
                return Err(ConfigError::InvalidValue {
                    key: "count".into(),
                    reason: format!("expected an integer >= 1, got {c}"),
                });
            }
            Some(c as usize)
        }
    };
    let scale = match merged.get("scale") {
        None => Scale::Linear,
        Some(v) => match v.as_text("scale")?.as_str() {
            "linear" => Scale::Linear,
            "log" => Scale::Log,
            other => {
                return Err(ConfigError::InvalidValue {
                    key: "scale".into(),
                    reason: format!("expected linear or log, got \"{other}\""),
                })
            }
        },
    };
    let (min, max) = match (lo, hi) {
        (None, None) => (fixed, fixed),
        (Some(a), Some(b)) => (a, b),
        (Some(a), None) | (None, Some(a)) => (a, a),
    };
    let count = if integer {
        if count.is_some() {
            return Err(ConfigError::Invalid(format!(
                "`count` does not apply to the integer axis `{axis}`; use {min_key}/{max_key}"
            )));
        }
        if max < min {
            return Err(ConfigError::Invalid(format!("{min_key} must not exceed {max_key}")));
        }
        (max - min) as usize + 1
    } else {
        let count = count.unwrap_or(if min == max { 1 } else { 2 });
        if count > 1 && !(min < max) {
            return Err(ConfigError::Invalid(format!(
                "a sweep of {count} points needs {min_key} < {max_key}, got {min} and {max}"
            )));
        }
        if count == 1 && min != max {
            return Err(ConfigError::Invalid(format!(
                "count = 1 needs a single value, got {min_key} = {min} and {max_key} = {max}"
            )));
        }
        if scale == Scale::Log && !(min > 0.0) {
            return Err(ConfigError::Invalid(format!(
                "a log sweep needs {min_key} > 0, got {min}"
            )));
        }
        count
    };
    Ok(Sweep {
        axis: axis.to_string(),
        min,
        max,
        count,
        scale: if integer { Scale::Linear } else { scale },
    })
}

/// Reads a TOML file of `key = value` pairs.
pub fn read_config_file(path: &Path) -> Result<ConfigMap, ConfigError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    parse_config(&text).map_err(|message| ConfigError::Parse { path: shown, message })
}

/// Parses TOML text into a flat map.
pub fn parse_config(text: &str) -> Result<ConfigMap, String> {
    let table: toml::Table = text.parse().map_err(|e: toml::de::Error| e.to_string())?;
    let mut out = ConfigMap::new();
    for (key, value) in table {
        let v = match value {
            toml::Value::Float(f) => Value::Number(f),
            toml::Value::Integer(i) => Value::Number(i as f64),
            toml::Value::String(s) => Value::Text(s),
            toml::Value::Boolean(b) => Value::Bool(b),
            other => return Err(format!("key `{key}`: unsupported value type {}", other.type_str())),
        };
        out.insert(key, v);
    }
    Ok(out)
}

/// A complete run from a config file that names its `command`.
pub fn load_config(path: &Path) -> Result<RunConfig, ConfigError> {
    let file = read_config_file(path)?;
    let name = file
        .get("command")
        .ok_or_else(|| ConfigError::Invalid(format!("{} does not name a `command`", path.display())))?
        .as_text("command")?;
    let command = CommandKind::from_name(&name)
        .ok_or_else(|| ConfigError::InvalidValue {
            key: "command".into(),
            reason: format!("unknown command \"{name}\""),
        })?;
    let env = std::env::var(TOLERANCE_ENV).ok();
    RunConfig::resolve(command, &file, &ConfigMap::new(), env.as_deref())
}
