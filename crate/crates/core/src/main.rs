fn main() {
    std::process::exit(bohr_radii::cli::main_exit_code());
}
