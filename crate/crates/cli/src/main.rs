use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = invdmod_cli::run(std::env::args_os());
    println!("{out}");
    ExitCode::from(code as u8)
}
