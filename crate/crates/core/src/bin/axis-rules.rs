fn main() {
    std::process::exit(axis_rules::cli::main());
}
