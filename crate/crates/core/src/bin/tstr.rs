use std::process::ExitCode;

fn main() -> ExitCode {
    tstr::cli::main()
}
