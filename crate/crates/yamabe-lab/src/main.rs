fn main() {
    std::process::exit(yamabe_lab::cli::run());
}
