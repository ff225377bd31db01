use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = cdindex::cli::dispatch(&args, &mut std::io::stdout(), &mut std::io::stderr());
    ExitCode::from(code)
}
