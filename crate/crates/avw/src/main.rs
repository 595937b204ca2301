use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match avw::cli::run(&args) {
        Ok(outcome) => {
            match &outcome.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &outcome.report) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{}", outcome.report),
            }
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("try `avw help`");
            ExitCode::from(2)
        }
    }
}
