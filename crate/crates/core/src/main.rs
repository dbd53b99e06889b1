fn main() -> std::process::ExitCode {
    clusterdomain::cli::main()
}
