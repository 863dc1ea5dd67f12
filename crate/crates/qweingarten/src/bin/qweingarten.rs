fn main() {
    std::process::exit(qweingarten::cli::main());
}
