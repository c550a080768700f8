fn main() {
    std::process::exit(lnl_core::cli::main_with_args(std::env::args_os()));
}
