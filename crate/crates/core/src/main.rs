fn main() { std::process::exit(knotrho::cli::main_entry()); }
