// The command-line tool driven in-process through `run_with`.

use axis_rules::cli::run_with;

pub fn main() -> std::io::Result<()> {
    let dir = std::env::temp_dir().join(format!("axis-rules-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let input = dir.join("example.txt");
    std::fs::write(&input, "candidates : a,b,c,d\n4 : b,c,d\n4 : a,b\n3 : a,d\n1 : a,c\n1 : b,c\n")?;
    let input = input.to_str().expect("utf-8 temp path").to_string();

    let runs: [&[&str]; 4] = [
        &["solve", "--rule", "ft", "--input", &input],
        &["cost", "--rule", "bc", "--input", &input, "--axis", "d,a,b,c"],
        &["check-linear", "--input", &input],
        &["solve", "--rule", "borda", "--input", &input],
    ];
    for args in runs {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(std::iter::once("axis-rules").chain(args.iter().copied()), &mut out, &mut err);
        println!("$ axis-rules {}   -> exit {code}", args.join(" "));
        print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
    }
    std::fs::remove_dir_all(&dir)
}
