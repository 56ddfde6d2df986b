//! Enumerates every admissible body type for ∂₊ of genus 0, 1 and 2 and
//! compares each list with the built-in table.

use netext::enumerator::{compare, enumerate, enumerate_delta_zero, ClassificationTable, EnumSpec};

fn main() -> netext::Result<()> {
    for (genus, max_p) in [(0, 4), (1, 2), (2, 0)] {
        let spec = EnumSpec::exhaustive(genus, max_p);
        let found = enumerate(spec);
        let table = ClassificationTable::builtin(genus).expect("table").restricted(max_p)?;
        let diff = compare(&found.keys(), &table);
        println!("genus {genus}, at most {max_p} punctures: {} types {:?}", found.len(), found.counts_by_punctures());
        print!("{}", diff.render_text());
        for (key, class) in enumerate_delta_zero(spec)? {
            println!("  delta 0  {class}  {key}");
        }
        println!();
    }
    Ok(())
}
