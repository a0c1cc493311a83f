fn main() {
    std::process::exit(cotangent::cli::run_cli());
}
