fn main() {
    std::process::exit(fanham::cli::run());
}
