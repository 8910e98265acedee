use clap::Parser;

use yangian_weyl::cli::{error_json, run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("report serializes"));
            } else {
                print!("{}", report.text);
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&error_json(&e)).expect("error serializes"));
            } else {
                eprintln!("error: {e}");
            }
            std::process::exit(e.exit_code());
        }
    }
}
