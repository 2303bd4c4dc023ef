use std::process::ExitCode;

use openph_cli::{parse_args, run, CliError};

fn main() -> ExitCode {
    let result = parse_args(std::env::args_os()).and_then(|cfg| run(&cfg));
    let code = match result {
        Ok(code) => code,
        Err(CliError::Help(text)) => {
            print!("{text}");
            0
        }
        // downstream reader closed early (e.g. `| head`); not our failure
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("openph: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
