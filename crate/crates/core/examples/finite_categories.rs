//! Loading, validating and enumerating finite categories.

use lnl_core::category::validate_functor;
use lnl_core::fincat::{all_functors, all_nat_transforms, validate_category, FinCatData};
use lnl_core::{Category, FinCat, Sweep};

fn main() -> lnl_core::Result<()> {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let chain = FinCat::load(format!("{data}/chain3.json"))?;
    println!("chain3: {} objects, thin = {}", chain.object_count(), chain.is_thin());

    let bad: FinCatData = serde_json::from_str(&std::fs::read_to_string(format!("{data}/not_associative.json")).unwrap()).unwrap();
    print!("not_associative.json: {}", validate_category(&bad));

    let (arrow, pp) = (FinCat::arrow(), FinCat::parallel_pair());
    let functors = all_functors(&arrow, &pp);
    println!("functors arrow -> parallel pair: {}", functors.len());
    for ff in &functors {
        let f = ff.to_functor(&arrow, &pp);
        assert!(validate_functor(&f, Sweep::new(1)).passed());
        let u = arrow.morphism("u").unwrap();
        println!("  u |-> {}", pp.mor_name(f.mor(&u)));
    }

    let ends = all_functors(&arrow, &arrow);
    for f in &ends {
        let f = f.to_functor(&arrow, &arrow);
        for g in &ends {
            let g = g.to_functor(&arrow, &arrow);
            let n = all_nat_transforms(&f, &g).len();
            if n > 0 {
                let show = |h: &lnl_core::Functor<FinCat, FinCat>| {
                    arrow.objects().iter().map(|o| arrow.object_name(h.obj(o)).to_string()).collect::<Vec<_>>().join("")
                };
                println!("  nat({} => {}) = {n}", show(&f), show(&g));
            }
        }
    }
    let u = arrow.morphism("u").unwrap();
    println!("id_0;u = {}", arrow.mor_name(arrow.then(&arrow.identity(&0), &u)));
    Ok(())
}
