// examples/perron_vector.rs
//
// Block values of the distance Perron vector of the extremal graph.

use evenfactor::theorem::{perron_abc, theorem_2_min_order, ExtremalParams};

fn main() {
    println!("{:>3} {:>3} {:>12} {:>12} {:>12} {:>12} {:>12}", "δ", "n", "ρ_D", "b", "2b−a", "b/a stated", "b/a derived");
    for delta in 2..=6usize {
        let n0 = theorem_2_min_order(delta) as usize;
        let n0 = n0 + n0 % 2;
        for n in [n0, n0 + 10] {
            let r = perron_abc(ExtremalParams::new(n, delta).unwrap()).unwrap();
            println!(
                "{delta:>3} {n:>3} {:>12.6} {:>12.8} {:>12.8} {:>12.8} {:>12.8}",
                r.rho, r.b, r.two_b_minus_a, r.stated_ratio, r.derived_ratio
            );
        }
    }
}
