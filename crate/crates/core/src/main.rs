use std::io;
use std::process::ExitCode;

use gcf_lab::cli::{parse_args, run};

fn main() -> ExitCode {
    let code = match parse_args(std::env::args_os()) {
        Ok(cmd) => run(cmd, &mut io::stdout().lock(), &mut io::stderr().lock()),
        Err(e) => {
            if e.exit_code == 0 {
                print!("{e}");
            } else {
                eprint!("{e}");
            }
            e.exit_code
        }
    };
    ExitCode::from(code as u8)
}
