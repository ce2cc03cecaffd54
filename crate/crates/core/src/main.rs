fn main() { std::process::exit(watchsys::cli::run(std::env::args().skip(1))); }
