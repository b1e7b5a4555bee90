//! Runs the acceptance battery, or the criteria named on the command line.

fn main() -> compat_tilings::Result<()> {
    let ids: Vec<String> = std::env::args().skip(1).collect();
    let report = compat_tilings::acceptance::run(&ids, 0)?;
    for c in &report.criteria {
        println!("{}", c.line());
    }
    Ok(())
}
