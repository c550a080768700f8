//! Structure objects and the Q-algebras they correspond to.

use lnl_core::lnl::Tagged;
use lnl_core::structure::*;
use lnl_core::{FinCat, Sweep};
use std::path::Path;

fn main() -> lnl_core::Result<()> {
    let sweep = Sweep::new(2);
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/chain3_structure.json");
    let (tables, carrier) = StructureTables::load(&path)?;
    let s = tables.to_structure(&carrier)?;
    print!("chain3 structure: {}", check_structure_object(&s, sweep));

    let q = algebra_from_structure(&s, sweep)?;
    for seq in [
        vec![Tagged::lin(1), Tagged::nonlin(1)],
        vec![Tagged::nonlin(2)],
        vec![Tagged::lin(2), Tagged::lin(1)],
    ] {
        let shown: Vec<String> = seq.iter().map(|e| format!("{}^{}", carrier.object_name(e.obj), e.tag.suffix())).collect();
        println!("x<{}> = {}", shown.join(","), carrier.object_name(q.z.obj(&seq)));
    }
    print!("mediating equations: {}", check_mediating(&s, &q, sweep));
    print!("structure roundtrip: {}", structure_roundtrip(&s, sweep));

    let p = perturbation_check(&s, sweep);
    println!("single-morphism perturbations: {} tried, {} survive", p.tried, p.survivors.len());

    for (name, t) in [("boolean square", boolean_square()), ("diamond M3", diamond_m3())] {
        print!("{name}: {}", structure_roundtrip(&t, sweep));
    }

    let free = free_q_algebra(&FinCat::one());
    print!("free Q-algebra over ONE, algebra roundtrip: {}", algebra_roundtrip(&free, sweep));
    Ok(())
}
