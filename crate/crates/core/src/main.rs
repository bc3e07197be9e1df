fn main() {
    std::process::exit(orthofourier::cli::run(std::env::args_os()));
}
