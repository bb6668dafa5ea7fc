//! Parameter sweeps behind the command-line tool: configuration, evaluation and output.

mod config;
mod run;
mod table;

pub use config::{
    load_config, parse_config, range_keys, read_config_file, CommandKind, ConfigError, ConfigMap, Constraint, Format,
    ParamKind, ParamSpec, RunConfig, Scale, Sweep, Value, COMMON_KEYS, TOLERANCE_ENV,
};
pub use run::{columns, metadata, run, sidecar_path, write_table, TOOL_NAME};
pub use table::{Cell, Column, ColumnKind, Metadata, Row, Table};
