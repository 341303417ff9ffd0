fn main() {
    std::process::exit(fadeber::cli::main());
}
