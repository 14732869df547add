fn main() {
    std::process::exit(codim2::cli::main_with_args(std::env::args_os()));
}
