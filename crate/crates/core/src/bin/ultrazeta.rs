fn main() {
    std::process::exit(ultrazeta::cli::main_with_args(std::env::args_os()));
}
