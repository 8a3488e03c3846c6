fn main() {
    std::process::exit(specgraph_cli::run());
}
