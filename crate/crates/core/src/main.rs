fn main() {
    std::process::exit(tritile::cli::run(std::env::args().collect()));
}
