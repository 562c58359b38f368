fn main() {
    std::process::exit(pwlab_core::cli::run(std::env::args_os()));
}
