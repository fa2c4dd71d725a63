use tableau_lab::fixed::{
    beta_shape, block_fixed_points, construct_r2, construct_ra, enumerate_fixed, enumerate_syt,
    gamma_shape,
};
use tableau_lab::format::to_text;
use tableau_lab::Partition;

fn main() -> tableau_lab::Result<()> {
    let (b, r, a) = (2, 2, 3);
    let built: Vec<_> = enumerate_syt(&beta_shape(b, r))?
        .map(|s| construct_ra(&s, a))
        .collect::<tableau_lab::Result<_>>()?;
    let brute = enumerate_fixed(a * r, b, b * r)?;
    println!("R_{a} on {b} rows of length {r}: {} built, {} found by search", built.len(), brute.len());
    println!("first one:\n{}", to_text(&built[0]));

    let (b, r) = (3, 1);
    let built: Vec<_> = enumerate_syt(&gamma_shape(b, r))?
        .map(|s| construct_r2(&s))
        .collect::<tableau_lab::Result<_>>()?;
    println!("R_2 for {b} rows: {} built, {} found by search", built.len(), enumerate_fixed(2 * r, b, b * r)?.len());

    let pieces = ["3,3".parse::<Partition>()?, "2,2".parse()?];
    let blocks = block_fixed_points(&pieces, 2)?;
    println!("fixed points on the union of (3,3) and (2,2) for k = 2: {}", blocks.len());
    Ok(())
}
