//! Print tags and the parse of each stdin line.
use syntaxspace::corpus::{normalize_voice, RuleTagger};
use syntaxspace::syntax::{dump_syntax, parse_sentence_parts};

fn main() {
    let t = RuleTagger::default();
    for line in std::io::stdin().lines() {
        let line = line.unwrap();
        let s = normalize_voice(&t.tag_sentence(&line, 1, "d"));
        let v: Vec<String> = s.tokens.iter().map(|t| format!("{}/{}", t.surface, t.pos)).collect();
        println!("{:?} {}", s.voice, v.join(" "));
        match parse_sentence_parts(&s) {
            Ok(parts) => parts.iter().for_each(|p| print!("{}", dump_syntax(p))),
            Err(e) => println!("  error: {e}"),
        }
    }
}
