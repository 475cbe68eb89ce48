fn main() {
    std::process::exit(bellpoly::cli::run_from_env());
}
