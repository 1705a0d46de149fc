use std::process::ExitCode;

fn main() -> ExitCode {
    rstirling::cli::run()
}
