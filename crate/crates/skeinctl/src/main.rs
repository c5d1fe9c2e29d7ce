fn main() {
    eprintln!("skeinctl: not yet wired");
    std::process::exit(1);
}
