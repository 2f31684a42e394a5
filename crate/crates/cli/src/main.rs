use std::io::Write;

fn main() {
    let o = garside_cli::run(std::env::args_os());
    print!("{}", o.stdout);
    eprint!("{}", o.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(o.code);
}
