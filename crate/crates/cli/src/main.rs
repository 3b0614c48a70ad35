use std::io::Write;

fn main() {
    let exec = homjordan_cli::run(std::env::args().skip(1));
    std::io::stdout()
        .write_all(exec.stdout.as_bytes())
        .expect("stdout");
    std::io::stderr()
        .write_all(exec.stderr.as_bytes())
        .expect("stderr");
    std::process::exit(exec.code);
}
