use clap::Parser;

fn main() {
    let cli = valspin::Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = valspin::run(&cli, &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
