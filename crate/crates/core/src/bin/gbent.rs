fn main() {
    std::process::exit(octal_gbent::cli::main());
}
