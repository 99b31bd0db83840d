fn main() {
    let code = virasoro_o_cli::run(std::env::args_os());
    std::process::exit(code);
}
