fn main() {
    std::process::exit(weavelab::cli::run(std::env::args_os()));
}
