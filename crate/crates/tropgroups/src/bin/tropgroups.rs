fn main() {
    std::process::exit(tropgroups::cli::main_with_args(std::env::args_os()));
}
