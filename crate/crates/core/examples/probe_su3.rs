use std::time::Instant;
fn main() {
    for cc in [4usize, 5, 6] {
        let t0 = Instant::now();
        match qhs_core::models::build_su3_with(qhs_core::models::QConvention::Standard, cc, 9) {
            Ok(m) => {
                println!(
                    "complete_cap={} -> OK, {} rules, {:?}",
                    cc,
                    m.hopf.system().rules().len(),
                    t0.elapsed()
                );
                break;
            }
            Err(e) => println!("complete_cap={} -> ERR: {} ({:?})", cc, e, t0.elapsed()),
        }
    }
}
