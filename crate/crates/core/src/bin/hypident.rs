use hypident::cli;
use hypident::registry::Registry;

fn main() {
    let registry = Registry::builtin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = cli::run(
        std::env::args_os(),
        &registry,
        &mut stdout.lock(),
        &mut stderr.lock(),
    );
    std::process::exit(code);
}
