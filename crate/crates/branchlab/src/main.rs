fn main() {
    std::process::exit(branchlab::run_cli());
}
