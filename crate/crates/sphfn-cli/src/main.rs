fn main() {
    std::process::exit(sphfn_cli::main_with_args(std::env::args_os()));
}
