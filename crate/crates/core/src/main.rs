fn main() {
    std::process::exit(compat_tilings::cli::run(std::env::args_os()));
}
