fn main() {
    std::process::exit(zetakit::cli::run());
}
