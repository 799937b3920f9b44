// Every worked example as a pass/fail table, as `gapdist paper-examples`
// prints it.

use gapdist::fixtures::run_all;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rows = run_all()?;
    for r in &rows {
        let status = if r.passed {
            "pass"
        } else if r.known_discrepancy {
            "known"
        } else {
            "FAIL"
        };
        println!("{status:<5} {}: {}", r.name, r.detail);
    }
    if let Some(r) = rows.iter().find(|r| r.is_unexpected_failure()) {
        return Err(format!("{} failed", r.name).into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
