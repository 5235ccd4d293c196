fn main() -> std::process::ExitCode {
    fuscond::cli::main()
}
