//! Reading and writing instance and orientation files.

use trail_orient::io::{format_instance, format_solution, parse_instance, parse_solution};
use trail_orient::linear::orient_linear;

const TRIANGLE: &str = "\
# a triangle walked as one trail
3 3
0 1
1 2
2 0
1
3 0 1 2
";

fn main() -> trail_orient::Result<()> {
    let inst = parse_instance(TRIANGLE)?;
    print!("{}", format_instance(&inst));

    let sol = orient_linear(&inst.graph, &inst.trails)?;
    let text = format_solution(&inst.graph, &sol)?;
    print!("{text}");
    assert_eq!(parse_solution(&text, &inst.graph)?, sol);

    // Edge 2 is missing from the only trail.
    match parse_instance("3 3\n0 1\n1 2\n2 0\n1\n2 0 1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
