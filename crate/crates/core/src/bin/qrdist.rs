fn main() {
    std::process::exit(qrdist::cli::run(std::env::args_os()));
}
