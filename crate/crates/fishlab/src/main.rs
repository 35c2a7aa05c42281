fn main() {
    std::process::exit(fishlab::cli::main_with(std::env::args_os()));
}
