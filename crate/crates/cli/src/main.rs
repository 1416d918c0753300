fn main() {
    std::process::exit(exclusivity_cli::run(std::env::args_os()));
}
