use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use nijenhuis::cli::{render, run_from};
use nijenhuis::Style;

fn main() -> ExitCode {
    let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
    let style = Style { color: !no_color && std::io::stdout().is_terminal() };
    let (report, format) = match run_from(std::env::args_os(), style) {
        Ok(r) => r,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (out, err) = render(&report, format);
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    let _ = std::io::stderr().lock().write_all(err.as_bytes());
    ExitCode::from(report.outcome.code() as u8)
}
