use tableau_lab::coreq::{boundary_word, core_by_swaps, empty_core_rectangle, quotient};
use tableau_lab::Partition;

fn main() -> tableau_lab::Result<()> {
    let lambda: Partition = "7,5,5,5,3,2,1".parse()?;
    println!("partition {lambda}, boundary word {}", boundary_word(&lambda).as_string());

    let q = quotient(&lambda, 3)?;
    for (i, piece) in q.pieces.iter().enumerate() {
        println!("piece {}: {piece}", i + 1);
    }
    println!("union shape: {}/{}", q.union_shape.outer, q.union_shape.inner);
    println!("3-core: {}", q.core);
    println!("3-core by ribbon swaps: {}", core_by_swaps(&lambda, 3, |_| 0));

    println!("rectangles with empty r-core (a, b <= 4):");
    for a in 1..=4 {
        for b in 1..=4 {
            let cores: Vec<usize> = (1..=a * b)
                .filter(|r| (a * b) % r == 0 && empty_core_rectangle(a, b, *r).unwrap())
                .collect();
            println!("  {a}x{b}: r in {cores:?}");
        }
    }
    Ok(())
}
