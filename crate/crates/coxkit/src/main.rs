fn main() {
    std::process::exit(coxkit::cli::run(std::env::args_os()));
}
