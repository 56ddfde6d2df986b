//! Writes the decomposition and factor files under `examples/data`.
//!
//! Run with `cargo run --example fixtures [DIR]`.

use std::path::{Path, PathBuf};

use netext::bounds::{FactorFlags, FactorType, GraphShape};
use netext::cli::schema::{DecompositionFile, FactorFile, SCHEMA};
use netext::decomposition::standard::{standard_propeller, PropellerVariant};
use netext::verify::standard_surfaces;
use netext::HalfInt;

fn write<T: serde::Serialize>(dir: &Path, name: &str, value: &T) {
    let path = dir.join(name);
    let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
    std::fs::write(&path, text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    println!("wrote {}", path.display());
}

fn factors(description: &str, factors: Vec<FactorType>, flags: FactorFlags) -> FactorFile {
    FactorFile { schema: SCHEMA, description: Some(description.into()), factors, flags }
}

fn s3() -> FactorFlags {
    FactorFlags { ambient_s3: true, ..FactorFlags::default() }
}

fn main() {
    let dir: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("examples").join("data"));
    let decomp = dir.join("decompositions");
    let fact = dir.join("factors");
    std::fs::create_dir_all(&decomp).unwrap();
    std::fs::create_dir_all(&fact).unwrap();

    for (name, d) in standard_surfaces() {
        let mut file = DecompositionFile::from_decomposition(&d);
        file.description = Some(name.replace('-', " "));
        write(&decomp, &format!("{name}.json"), &file);
    }

    // flipping one of two parallel thin tori closes a directed cycle
    let mut file = DecompositionFile::from_decomposition(&standard_propeller(PropellerVariant::TwoOncePuncturedTori));
    file.description = Some("propeller with one thin torus pointing the wrong way".into());
    file.thin[1].into = file.thin[1].sides[0].body.clone();
    write(&decomp, "corrupted-orientation.json", &file);

    let theta11 = FactorType::Curve11 { is_knot: false };
    write(&fact, "three-theta.json", &factors("vertex sum of three (1,1) theta curves", vec![theta11; 3], s3()));
    for n in 1..=3usize {
        let f = factors(&format!("vertex sum of {} (1,1) theta curves", 2 * n + 1), vec![theta11; 2 * n + 1], s3());
        write(&fact, &format!("odd-theta-{}.json", 2 * n + 1), &f);
    }
    let brunnian = FactorFlags { ambient_s3: true, brunnian: true, ..FactorFlags::default() };
    write(
        &fact,
        "brunnian-one.json",
        &factors(
            "a single Brunnian theta curve",
            vec![FactorType::GenericGraph { netext: HalfInt::from_doubled(3) }],
            brunnian,
        ),
    );
    write(
        &fact,
        "hopf-in-s3.json",
        &factors(
            "Hopf graph factor of a theta curve in the 3-sphere",
            vec![FactorType::HopfGraph, theta11],
            FactorFlags { graph: Some(GraphShape::Theta), ..s3() },
        ),
    );
    write(
        &fact,
        "theta-and-knot.json",
        &factors(
            "(1,1) theta curve summed with a (0,2) knot",
            vec![theta11, FactorType::Curve02 { is_knot: true }],
            s3(),
        ),
    );
    write(
        &fact,
        "slinky-and-lens.json",
        &factors(
            "a graph slinky of length 2 with a lens core factor",
            vec![FactorType::HopfSlinky { length: 2, is_knot: false, pieces: None }, FactorType::LensCore],
            FactorFlags::default(),
        ),
    );
    write(
        &fact,
        "lens-in-s3.json",
        &factors("a lens core factor with the 3-sphere flag", vec![FactorType::LensCore, theta11], s3()),
    );
}
