fn main() -> std::process::ExitCode {
    ggal::cli::main()
}
