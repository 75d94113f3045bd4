//! The configuration format used by `summa`, parsed and validated.
use summation_core::cli::config::CliConfig;

fn main() -> summation_core::Result<()> {
    let c = CliConfig::parse("precision = extended\nformat = csv\ncontour_height = 120 # line integrals\n")?;
    println!("{c:#?}");
    println!("digits in text output: {}", c.digits());
    if let Err(e) = CliConfig::parse("term_cap = 10") {
        println!("rejected: {e}");
    }
    Ok(())
}
