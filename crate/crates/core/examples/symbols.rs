//! Symbols of rank 3: families, special members and the duality on symbols.

use wfcomb::partitions::partition_tuples;
use wfcomb::symbols::symb_b;

fn main() -> wfcomb::Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for pair in (0..=3).flat_map(|a| partition_tuples(&[a, 3 - a])) {
        let sym = symb_b(&pair[0], &pair[1]).normalize();
        let key = sym.family_key();
        if !seen.insert(key) {
            continue;
        }
        let members: Vec<String> = sym.family_members()?.iter().map(|m| m.to_string()).collect();
        println!(
            "special {}  dual {}  members {}",
            sym.special_member(),
            sym.special_member().dual(),
            members.join(" ")
        );
    }
    Ok(())
}
