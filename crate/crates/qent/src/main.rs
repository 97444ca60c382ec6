fn main() {
    std::process::exit(qent::cli::run());
}
