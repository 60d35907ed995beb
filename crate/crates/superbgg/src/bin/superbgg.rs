fn main() {
    std::process::exit(superbgg::cli::run(std::env::args_os()));
}
