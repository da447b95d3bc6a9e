fn main() -> std::process::ExitCode {
    multest::cli::run()
}
