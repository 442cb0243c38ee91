fn main() {
    std::process::exit(semiconfined::cli::run());
}
