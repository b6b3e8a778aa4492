use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let (out, code) = potts_cli::dispatch(&refs);
    // a closed pipe downstream is not our error; drop the tail quietly
    if code == 2 {
        let _ = writeln!(std::io::stderr().lock(), "{out}");
    } else {
        let _ = writeln!(std::io::stdout().lock(), "{out}");
    }
    std::process::exit(code);
}
