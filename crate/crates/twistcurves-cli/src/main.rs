fn main() {
    // subcommands land here once the library surface is complete
    eprintln!("twistcurves: not yet wired");
    std::process::exit(2);
}
