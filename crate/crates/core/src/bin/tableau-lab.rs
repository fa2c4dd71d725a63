fn main() {
    std::process::exit(tableau_lab::cli::run(std::env::args_os()));
}
