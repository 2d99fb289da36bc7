fn main() {
    std::process::exit(coded_threshold::cli::run(std::env::args_os()));
}
