fn main() {
    let code = compete_sim::io::cli::run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
        compete_sim::io::cli::color_enabled(),
    );
    std::process::exit(code);
}
