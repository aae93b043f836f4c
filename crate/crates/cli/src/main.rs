use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let mut err = stderr.lock();
    let code = poset_forge_cli::run(&args, &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code);
}
