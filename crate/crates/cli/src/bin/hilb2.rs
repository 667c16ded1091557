use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let (code, output) = hilb2_cli::run_command(&argv);
    let mut sink: Box<dyn Write> = if code >= hilb2_cli::EXIT_INVALID {
        Box::new(std::io::stderr().lock())
    } else {
        Box::new(std::io::stdout().lock())
    };
    let _ = sink.write_all(output.as_bytes());
    if !output.ends_with('\n') && !output.is_empty() {
        let _ = sink.write_all(b"\n");
    }
    let _ = sink.flush();
    std::process::exit(code);
}
