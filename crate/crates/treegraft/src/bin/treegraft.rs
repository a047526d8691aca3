fn main() {
    std::process::exit(treegraft::cli::run());
}
