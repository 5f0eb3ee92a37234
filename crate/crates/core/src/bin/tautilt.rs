fn main() {
    std::process::exit(tautilt::cli::main())
}
