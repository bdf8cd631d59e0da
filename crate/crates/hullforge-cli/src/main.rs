fn main() {
    let (code, out) = hullforge_cli::run_command(std::env::args().skip(1));
    print!("{out}");
    std::process::exit(code);
}
