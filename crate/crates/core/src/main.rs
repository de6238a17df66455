use std::io::Write;
use std::process::ExitCode;
use std::thread;

/// Deep searches recurse once per path vertex.
const STACK_BYTES: usize = 512 << 20;

fn main() -> ExitCode {
    let args: Vec<_> = std::env::args_os().collect();
    let handle = thread::Builder::new()
        .stack_size(STACK_BYTES)
        .spawn(move || sepkit::cli::dispatch(args))
        .expect("spawn worker thread");
    let inv = match handle.join() {
        Ok(inv) => inv,
        Err(_) => return ExitCode::from(2),
    };
    let _ = std::io::stdout().write_all(inv.stdout.as_bytes());
    let _ = std::io::stderr().write_all(inv.stderr.as_bytes());
    ExitCode::from(inv.exit_code as u8)
}
