fn main() {
    std::process::exit(kostka_forge::cli::main_with_args(std::env::args_os()));
}
