fn main() {
    std::process::exit(su2_metrology::cli::run());
}
