fn main() {
    std::process::exit(skeinkit::cli::main());
}
