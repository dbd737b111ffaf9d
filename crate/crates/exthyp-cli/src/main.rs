fn main() {
    let code = exthyp_cli::run(
        std::env::args().collect(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
