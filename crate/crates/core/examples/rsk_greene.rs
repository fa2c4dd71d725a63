use tableau_lab::rsk::{self, greene_shape_oracle};
use tableau_lab::Word;

fn main() -> tableau_lab::Result<()> {
    let w = Word(vec![4, 1, 6, 2, 7, 3, 8, 5]);
    let pair = rsk::rsk(&w)?;
    println!("word: {w}");
    println!("insertion tableau:\n{}", tableau_lab::format::to_text(&pair.p));
    println!("recording tableau:\n{}", tableau_lab::format::to_text(&pair.q));

    let shape = pair.p.row_vector();
    let greene = greene_shape_oracle(&w, shape.len().min(rsk::GREENE_MAX_DEPTH))?;
    let partial: Vec<usize> = (1..=greene.len()).map(|k| shape.iter().take(k).sum()).collect();
    println!("largest unions of k increasing subsequences: {greene:?}");
    println!("partial row sums of the shape:               {partial:?}");
    println!("descents of the word {:?}, of the recording tableau {:?}", w.descent_set(), pair.q.descent_set());
    Ok(())
}
