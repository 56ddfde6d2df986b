//! Half-integer arithmetic and the extent of punctured surfaces.

use netext::surface::{Role, SurfaceComponent, SurfaceSet};
use netext::HalfInt;

fn main() {
    let a: HalfInt = "3/2".parse().expect("half-integer");
    let b = HalfInt::from_int(2);
    println!("{a} + {b} = {}", a + b);
    println!("{a} - {b} = {}, ceil {}, floor {}", a - b, (a - b).ceil(), (a - b).floor());
    println!("{a} * 3 = {}", a * 3);

    let samples = [
        SurfaceComponent::thick(0, 4),
        SurfaceComponent::thick(1, 2),
        SurfaceComponent::thick(2, 0),
        SurfaceComponent::thin(0, 2),
        SurfaceComponent::vertex(3),
        SurfaceComponent::new(1, 1, Role::ManifoldBoundary),
    ];
    for s in &samples {
        println!("{s}: chi {}, ext {}", s.euler_char(), s.extent());
    }
    let set = SurfaceSet::new(samples[..3].to_vec());
    println!("three thick surfaces: chi {}, ext {}", set.euler_char(), set.extent());
}
