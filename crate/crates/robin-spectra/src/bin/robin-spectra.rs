fn main() {
    std::process::exit(robin_spectra::cli::run());
}
