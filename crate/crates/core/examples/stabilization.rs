use tableau_lab::format::to_text;
use tableau_lab::stabilize::{c_stats, predicted_shape, shifted_copies, stab, stabilized_shape};
use tableau_lab::SkewTableau;

fn main() -> tableau_lab::Result<()> {
    let s = SkewTableau::with_inner(
        vec![6, 4, 3],
        vec![vec![7, 9, 10], vec![2, 4, 12], vec![6, 8, 11], vec![1, 3, 5]],
    )?;
    println!("tableau:\n{}", to_text(&s));

    let result = stab(&s)?;
    println!("stabilization number: {}", result.stab);
    println!("c statistics: {:?}", c_stats(&s)?.c);

    println!("two shifted copies:\n{}", to_text(&shifted_copies(&s, 2)?));
    for k in result.stab.saturating_sub(1).max(1)..=result.stab + 2 {
        println!(
            "k = {k}: predicted {}, rectified {:?}",
            predicted_shape(&s, k)?,
            stabilized_shape(&s, k)?
        );
    }
    Ok(())
}
