use std::path::PathBuf;
use std::process::ExitCode;

use clap::parser::ValueSource;
use clap::{Arg, ArgAction, ArgMatches, Command};

use plasma_sheet::sweep::{
    range_keys, read_config_file, run, write_table, CommandKind, ConfigMap, ParamKind, RunConfig, Value, TOLERANCE_ENV,
};

const EXIT_ROW_FAILURE: u8 = 1;
const EXIT_INVALID: u8 = 2;

fn subcommand(kind: CommandKind) -> Command {
    let mut cmd = Command::new(kind.name()).about(kind.about());
    for p in kind.params() {
        let mut help = p.help.to_string();
        if let Some(d) = p.default {
            help.push_str(&format!(" [default: {d}]"));
        }
        let mut arg = Arg::new(p.key).long(p.key).value_name("VALUE").help(help);
        if let ParamKind::Choice(options) = p.kind {
            arg = arg.value_parser(clap::builder::PossibleValuesParser::new(options.iter().copied()));
        }
        cmd = cmd.arg(arg);
    }
    for axis in kind.axis_candidates() {
        let [lo, hi] = range_keys(axis);
        cmd = cmd
            .arg(Arg::new(lo.clone()).long(lo).value_name("VALUE").help(format!("start of the {axis} sweep")))
            .arg(Arg::new(hi.clone()).long(hi).value_name("VALUE").help(format!("end of the {axis} sweep")));
    }
    cmd.arg(Arg::new("count").long("count").value_name("N").help("number of sweep points [default: 1, or 2 with a range]"))
        .arg(
            Arg::new("scale")
                .long("scale")
                .value_parser(["linear", "log"])
                .help("spacing of the sweep points [default: linear]"),
        )
        .arg(
            Arg::new("format")
                .long("format")
                .value_parser(["csv", "json"])
                .help("output format [default: csv]"),
        )
        .arg(
            Arg::new("output")
                .long("output")
                .short('o')
                .value_name("PATH")
                .help("output file, or - for standard output [default: -]"),
        )
        .arg(Arg::new("tolerance").long("tolerance").value_name("TOL").help(format!(
            "relative quadrature tolerance [default: ${TOLERANCE_ENV} if set, else 1e-8]"
        )))
        .arg(
            Arg::new("raw-units")
                .long("raw-units")
                .action(ArgAction::SetTrue)
                .help("append columns in physical units"),
        )
        .arg(
            Arg::new("config")
                .long("config")
                .value_name("FILE")
                .help("TOML file with the same keys as the flags; flags take precedence"),
        )
}

fn cli() -> Command {
    let mut cmd = Command::new("plasma-sheet")
        .version(env!("CARGO_PKG_VERSION"))
        .about("Parameter sweeps for plasma-sheet electrodynamics")
        .subcommand_required(true);
    for kind in CommandKind::ALL {
        cmd = cmd.subcommand(subcommand(kind));
    }
    cmd
}

fn explicit_flags(m: &ArgMatches) -> ConfigMap {
    let mut out = ConfigMap::new();
    for id in m.ids() {
        let key = id.as_str();
        if key == "config" || m.value_source(key) != Some(ValueSource::CommandLine) {
            continue;
        }
        if key == "raw-units" {
            out.insert(key.into(), Value::Bool(m.get_flag(key)));
        } else if let Some(v) = m.get_one::<String>(key) {
            out.insert(key.into(), Value::Text(v.clone()));
        }
    }
    out
}

fn main() -> ExitCode {
    let matches = cli().get_matches();
    let (name, sub) = matches.subcommand().expect("a subcommand is required");
    let kind = CommandKind::from_name(name).expect("subcommands come from CommandKind::ALL");
    let file = match sub.get_one::<String>("config") {
        Some(path) => match read_config_file(&PathBuf::from(path)) {
            Ok(m) => m,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_INVALID);
            }
        },
        None => ConfigMap::new(),
    };
    let env = std::env::var(TOLERANCE_ENV).ok();
    let cfg = match RunConfig::resolve(kind, &file, &explicit_flags(sub), env.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    let table = run(&cfg);
    if let Err(e) = write_table(&table, cfg.format, cfg.output.as_deref()) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_ROW_FAILURE);
    }
    let failed = table.failed_rows();
    if failed > 0 {
        eprintln!("error: {failed} of {} rows failed", table.rows.len());
        return ExitCode::from(EXIT_ROW_FAILURE);
    }
    ExitCode::SUCCESS
}
