fn main() {
    std::process::exit(gapdist::cli::run(std::env::args()));
}
