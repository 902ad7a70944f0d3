use std::env;
use std::fs;
use std::path::Path;

fn main() {
    let dir = Path::new(&env::var("CARGO_MANIFEST_DIR").unwrap()).join("data");
    let index = dir.join("index.txt");
    println!("cargo:rerun-if-changed={}", index.display());
    let text = fs::read_to_string(&index).expect("read data/index.txt");
    let mut out = String::from("&[\n");
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let (name, rel) = line.split_once(char::is_whitespace).expect("index line: <name> <path>");
        let path = dir.join(rel.trim());
        println!("cargo:rerun-if-changed={}", path.display());
        out += &format!("    ({:?}, include_str!({:?})),\n", name, path.display().to_string());
    }
    out += "]\n";
    fs::write(Path::new(&env::var("OUT_DIR").unwrap()).join("catalog.rs"), out).unwrap();
}
