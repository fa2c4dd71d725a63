use tableau_lab::fixed::csp_evaluate;

fn main() -> tableau_lab::Result<()> {
    for (a, b) in [(2, 2), (3, 2), (3, 3)] {
        println!("{a}x{b} rectangle:");
        for k in 0..a * b {
            let report = csp_evaluate(a, b, k)?;
            println!(
                "  k = {k}: root order {}, polynomial {}, fixed {} ({})",
                report.root_order,
                report.poly_value,
                report.fixed_count,
                if report.agrees() { "agree" } else { "DISAGREE" }
            );
        }
    }
    Ok(())
}
