//! Runs the built-in identity suite of a model (default `gm`).

use multest::calculus::identities::{builtin_instances, identity_suite, Status};
use multest::model::model_by_name;

fn main() -> multest::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "gm".into());
    let model = model_by_name(&name)?;
    let (sub, instances) = builtin_instances(&model)?;
    let report = identity_suite(&model, &sub, &instances)?;
    for o in &report.outcomes {
        println!("{:<28} {:<10} {}", o.identity, o.instance, o.status);
    }
    println!("pass {} fail {} skip {}", report.count(Status::Pass), report.count(Status::Fail), report.count(Status::Skip));
    Ok(())
}
