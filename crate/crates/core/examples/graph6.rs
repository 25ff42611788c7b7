//! Reading and writing graph6 and edge lists, plus isomorphism tests.

use domcount::format::{parse_forest, to_edge_list, to_graph6, Format};
use domcount::oracle::{canonical_form, trees_isomorphic};
use domcount::treegen::enumerate_trees;

fn main() -> domcount::Result<()> {
    let star = parse_forest(b"D?{\n", Format::Auto)?;
    print!("{}", to_edge_list(&star));

    let again = parse_forest(to_edge_list(&star).as_bytes(), Format::Auto)?;
    assert_eq!(to_graph6(&again), "D?{");

    for t in enumerate_trees(6)? {
        println!("{:8} {}", to_graph6(&t), canonical_form(&t)?);
    }

    let a = parse_forest(b"4\n0 1\n1 2\n2 3\n", Format::EdgeList)?;
    let b = parse_forest(b"4\n2 0\n0 3\n3 1\n", Format::EdgeList)?;
    println!("paths isomorphic: {}", trees_isomorphic(&a, &b)?);
    Ok(())
}
