fn main() {
    std::process::exit(unimodal_rank::cli::main());
}
