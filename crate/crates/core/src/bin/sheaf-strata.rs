fn main() {
    std::process::exit(sheaf_strata::cli::run(std::env::args_os()));
}
