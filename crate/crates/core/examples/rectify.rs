use tableau_lab::format::{from_text, to_text};
use tableau_lab::jdt::{self, SlideOrder};
use tableau_lab::rsk;

fn main() -> tableau_lab::Result<()> {
    let skew = from_text(". . 1 4\n. 2 6\n3 5\n")?;
    println!("skew tableau:\n{}", to_text(&skew));

    let straight = jdt::rect(&skew);
    println!("rectified:\n{}", to_text(&straight));

    let other_order = jdt::rect_with_order(&skew, SlideOrder::TopmostFirst);
    println!("same result with the opposite slide order: {}", other_order == straight);

    let inserted = rsk::rsk(&skew.reading_word())?.p;
    println!("equals insertion of the reading word {}: {}", skew.reading_word(), inserted == straight);

    println!("anti-rectified:\n{}", to_text(&jdt::antirect(&skew)));
    Ok(())
}
