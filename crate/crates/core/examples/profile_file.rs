// Reading and writing the plain-text profile format.

use axis_rules::format::{parse_profile, write_profile, ProfileDocument};

const TEXT: &str = "\
# a party system with one unapproved fringe candidate
candidates : left,centre,right,fringe
2.5 : left,centre
4   : centre,right
1/3 : left,right   # a cross-spectrum voter
";

pub fn main() -> Result<(), axis_rules::Error> {
    let doc = parse_profile(TEXT)?;
    let ProfileDocument::Approval(p) = &doc else {
        unreachable!("the text holds approval ballots")
    };
    println!("{} candidates, never approved: {:?}", p.num_candidates(), p.never_approved());
    for (b, w) in p.entries() {
        println!("  weight {w:>5}  {}", p.candidates().format_ballot(*b));
    }
    let written = write_profile(&doc);
    print!("\nwritten back:\n{written}");
    assert_eq!(parse_profile(&written)?, doc);

    match parse_profile("1 : a,b\nheavy : b,c\n") {
        Err(e) => println!("\nrejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
