fn main() {
    std::process::exit(lz76_cli::main_with_std());
}
