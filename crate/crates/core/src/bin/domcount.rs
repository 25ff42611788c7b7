use std::io::{Read, Write};

fn main() {
    let mut stdin = Vec::new();
    let args: Vec<String> = std::env::args().collect();
    // only read standard input when it can be consumed
    if needs_stdin(&args) {
        if let Err(e) = std::io::stdin().read_to_end(&mut stdin) {
            eprintln!("error: reading standard input: {e}");
            std::process::exit(2);
        }
    }
    let outcome = domcount::cli::run(args, &stdin);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}

fn needs_stdin(args: &[String]) -> bool {
    const READERS: [&str; 5] = ["count", "enumerate", "analyze", "bounds", "lambda"];
    let Some(cmd) = args.iter().skip(1).find(|a| !a.starts_with('-')) else {
        return false;
    };
    if !READERS.contains(&cmd.as_str()) {
        return false;
    }
    let mut rest = args.iter().skip_while(|a| *a != cmd).skip(1);
    let mut positional = None;
    while let Some(a) = rest.next() {
        match a.as_str() {
            "--mode" | "--format" | "--limit" => {
                rest.next();
            }
            s if s.starts_with("--") => {}
            s => positional = Some(s),
        }
    }
    positional.is_none_or(|p| p == "-")
}
