//! The full constants report as JSON, as printed by `outerplanar asym`.

use outerplanar::asymptotics::DEFAULT_STEP;
use outerplanar::report::constants_report;

fn main() -> outerplanar::Result<()> {
    let report = constants_report(16, 40, DEFAULT_STEP)?;
    for (name, v) in &report.constants {
        println!("{name:<32} {:<40} ({} digits)", v.value, v.claimed_digits);
    }
    Ok(())
}
