fn main() {
    // Die quietly when stdout is a closed pipe instead of panicking in println.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(spmw_cli::run());
}
