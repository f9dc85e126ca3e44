use std::process::ExitCode;

fn main() -> ExitCode {
    radomult::cli::main()
}
