//! A configured parameter sweep run through the library, written as CSV and JSON.

use plasma_sheet::sweep::{parse_config, run, CommandKind, ConfigMap, RunConfig, Table};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let file = parse_config(
        "command = \"casimir\"\nomega-a-min = 0.1\nomega-a-max = 100\ncount = 4\nscale = \"log\"\n",
    )?;
    let cfg = RunConfig::resolve(CommandKind::Casimir, &file, &ConfigMap::new(), None)?;
    let table = run(&cfg);
    print!("{}", table.to_csv_string());
    let json = table.to_json();
    let back = Table::from_json(&json)?;
    assert!(back.same_values(&table));
    println!("metadata: {}", serde_json::to_string(&json["metadata"])?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
