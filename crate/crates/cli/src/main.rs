fn main() {
    std::process::exit(hivenet_cli::run(std::env::args_os()));
}
