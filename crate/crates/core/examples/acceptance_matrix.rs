//! Runs acceptance criteria 1-8 and prints one line per criterion.

fn main() -> banalg::error::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    for c in banalg::matrix::run_matrix(seed)? {
        println!("criterion {} {:<42} {}", c.criterion, c.name, if c.pass { "pass" } else { "FAIL" });
    }
    Ok(())
}
