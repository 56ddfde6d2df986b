//! Drives the command line on the shipped data files through the library
//! entry point.

use std::path::Path;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples").join("data");
    let factor = |n: &str| data.join("factors").join(n).display().to_string();
    let decomp = |n: &str| data.join("decompositions").join(n).display().to_string();
    let runs: Vec<Vec<String>> = vec![
        vec!["bounds".into(), factor("three-theta.json")],
        vec!["bounds".into(), factor("brunnian-one.json")],
        vec!["bounds".into(), factor("hopf-in-s3.json")],
        vec!["ledger".into(), "--strict".into(), factor("odd-theta-5.json")],
        vec!["check".into(), decomp("propeller.json")],
        vec!["check".into(), decomp("slinky-4.json"), "--surger".into(), "F1".into()],
        vec!["check".into(), decomp("corrupted-orientation.json")],
    ];
    for args in runs {
        println!("$ netext {}", args.join(" "));
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = netext::cli::run(std::iter::once("netext".to_string()).chain(args), &mut out, &mut err);
        print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
        println!("[exit {code}]\n");
    }
}
