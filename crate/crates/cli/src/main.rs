use std::io::Write;

fn main() {
    let out = skewcodes_cli::run(std::env::args_os());
    std::io::stdout().write_all(out.stdout.as_bytes()).expect("write to stdout");
    if let Some(msg) = out.stderr {
        eprintln!("error: {msg}");
    }
    std::process::exit(out.code);
}
