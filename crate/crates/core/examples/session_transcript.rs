// Record a session, then feed its output back in and get the same output.

use symba::repl::Transcript;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inputs = [
        r#"[s, t] = PolyRing(QQ(),"s,t",PolyRing.grad).gens()"#,
        "(s-frac(1,2)*t)**2",
        "print(s*t)",
        "3*frac(1,3)",
        ":ctx",
    ];
    let first = Transcript::record(inputs);
    for e in &first.entries {
        println!(">>> {}", e.input);
        for line in &e.output {
            println!("{line}");
        }
    }
    let again = Transcript::record(first.feedback_inputs());
    println!("fed back: {}", if again.output_lines() == first.output_lines() { "same output" } else { "DIFFERENT" });
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
