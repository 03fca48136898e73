fn main() {
    std::process::exit(knf::cli::run());
}
