//! Dominance order, transposes and class membership for small partitions.

use wfcomb::classical::{in_class, is_special, jord_bp, IntervalStructure};
use wfcomb::partitions::partitions_of;
use wfcomb::{Kind, Partition};

fn main() -> wfcomb::Result<()> {
    let a: Partition = "3,1,1".parse()?;
    let b: Partition = "2,2,1".parse()?;
    println!("{a} <= {b}: {}", a.leq(&b));
    println!("{b} <= {a}: {}", b.leq(&a));
    println!("transpose of {a}: {}", a.transpose());

    for p in partitions_of(6) {
        let kinds: Vec<String> = Kind::ALL
            .iter()
            .filter(|&&k| in_class(&p, k))
            .map(|k| format!("{k}{}", if is_special(&p, *k) { "*" } else { "" }))
            .collect();
        println!("{p:>10}  {}", kinds.join(" "));
    }

    // intervals of a special symplectic partition
    let lam: Partition = "4,2,2".parse()?;
    let st = IntervalStructure::new(&lam, Kind::Symp)?;
    println!("jord_bp({lam}) = {:?}", jord_bp(&lam, Kind::Symp));
    for d in &st.intervals {
        println!("  {:?}  j_min {:?} j_max {}", d.values, d.j_min, d.j_max);
    }
    println!("zeta = {:?}", st.zeta().as_slice());
    Ok(())
}
