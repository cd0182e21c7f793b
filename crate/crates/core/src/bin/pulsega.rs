fn main() {
    std::process::exit(pulsega::cli::run(std::env::args_os()));
}
