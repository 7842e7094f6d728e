use clap::Parser;

fn main() -> std::process::ExitCode {
    let cli = dg_hopf_cli::Cli::parse();
    std::process::ExitCode::from(dg_hopf_cli::run(cli))
}
