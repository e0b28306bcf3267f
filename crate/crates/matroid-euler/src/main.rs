fn main() {
    std::process::exit(matroid_euler::cli::run(std::env::args_os()));
}
