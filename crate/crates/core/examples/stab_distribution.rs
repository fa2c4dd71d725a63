use tableau_lab::fixed::{stab2_count, stab2_recording_tableau, stab_distribution};
use tableau_lab::format::to_text;

fn main() -> tableau_lab::Result<()> {
    for n in 1..=8 {
        let counts = stab_distribution(n)?;
        let line: Vec<String> = counts.iter().map(u64::to_string).collect();
        println!("n = {n}: {}", line.join(" "));
    }
    println!("permutations of 6 with stabilization 2: {}", stab2_count(6)?);
    println!("one of the recording tableaux for n = 6:\n{}", to_text(&stab2_recording_tableau(6, 2)?));
    Ok(())
}
