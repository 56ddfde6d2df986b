//! Building bodies by hand, validating them and computing δ.

use netext::compressionbody::classify_delta_zero;
use netext::surface::Role;
use netext::VpBody;

fn show(name: &str, b: &VpBody) {
    let report = b.validate();
    if report.is_admissible() {
        let class = classify_delta_zero(b).expect("admissible");
        println!("{name}: {b}\n  delta {}, {class}", b.delta_unchecked());
    } else {
        println!("{name}: {b}\n  rejected");
        for v in &report.violations {
            println!("    {v}");
        }
    }
}

fn main() {
    show("trivial ball, one bridge arc", &VpBody::handlebody(0, 1, 0));
    show("genus-2 handlebody", &VpBody::handlebody(2, 0, 0));
    show("solid torus around a core loop", &VpBody::handlebody(1, 0, 1));
    // a thrice-punctured vertex sphere hanging below a sphere by three verticals
    show("vertex sphere", &VpBody::from_arcs(0, &[(0, Role::VertexSphere)], &[], &[3], 0));
    // two vertex spheres joined by a ghost arc, each with two verticals
    show(
        "ghost arc",
        &VpBody::from_arcs(0, &[(0, Role::VertexSphere), (0, Role::VertexSphere)], &[(0, 1)], &[2, 2], 0),
    );
    // a thin sphere with one vertical arc is too small
    show("small thin sphere", &VpBody::from_arcs(0, &[(0, Role::Thin)], &[], &[1], 0));
    // a torus cannot sit below a sphere
    show("torus below sphere", &VpBody::from_arcs(0, &[(1, Role::Thin)], &[], &[0], 0));
}
