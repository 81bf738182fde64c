fn main() {
    std::process::exit(cosetid::cli::main());
}
