fn main() {
    std::process::exit(nodal_hodge::cli::run(std::env::args_os()));
}
