//! Declaring a matrix group in TOML and validating it.

use multest::model::custom::load_custom_model;

const DIAGONAL: &str = r#"
name = "torus2"
m = 2
params = ["a", "d"]
entries = ["a", "0", "0", "d"]

[[lie_basis]]
name = "h1"
matrix = [["1", "0"], ["0", "0"]]

[[lie_basis]]
name = "h2"
matrix = [["0", "0"], ["0", "1"]]
"#;

fn main() -> multest::Result<()> {
    let model = load_custom_model(DIAGONAL)?;
    println!("{}: n = {}, closure ideal {:?}", model.name(), model.n(), model.ig().generator_strings(&model.names()));
    let broken = DIAGONAL.replace("[\"0\", \"1\"]]", "[\"1\", \"1\"]]");
    match load_custom_model(&broken) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
