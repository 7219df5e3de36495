fn main() {
    std::process::exit(selfcomp::cli::run(std::env::args_os()));
}
