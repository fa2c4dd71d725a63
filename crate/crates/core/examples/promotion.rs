use tableau_lab::format::to_text;
use tableau_lab::jdt;
use tableau_lab::SkewTableau;

fn main() -> tableau_lab::Result<()> {
    let t = SkewTableau::straight(vec![vec![1, 2, 5], vec![3, 4, 6]])?;
    println!("start:\n{}", to_text(&t));

    let mut current = t.clone();
    for step in 1..=t.size() {
        current = jdt::promote(&current)?;
        println!("after {step} promotion(s):\n{}", to_text(&current));
    }
    println!("back to the start after {} steps: {}", t.size(), current == t);

    println!("demotion undoes promotion: {}", jdt::demote(&jdt::promote(&t)?)? == t);
    println!("evacuation:\n{}", to_text(&jdt::evacuate(&t)?));
    Ok(())
}
