// examples/quotient_cubics.rs
//
// Quotient matrices of the clique-join families, their cubic characteristic
// polynomials and the factorization identities between them.

use evenfactor::quotient::{
    charpoly3, family_cubic, identity_check, largest_root, quotient_matrix, template_matrix, CubicFamily, Identity,
    Partition,
};
use evenfactor::spectral::{rho_q, signless_laplacian};
use evenfactor::theorem::{extremal_graph, ExtremalParams};

fn main() {
    let (n, delta) = (14usize, 3usize);
    let g = extremal_graph(ExtremalParams::new(n, delta).unwrap());

    // Vertices are labelled K_δ first, then the big clique, then pendants.
    let partition = Partition::consecutive(&[delta, n - 2 * delta + 1, delta - 1]).unwrap();
    let q = quotient_matrix(&signless_laplacian(&g), &partition).unwrap();
    println!("quotient of Q(G*) for n={n}, δ={delta}: {:?}", q.integer_rows().unwrap());
    println!("equitable: {}", q.is_equitable());

    let cubic = charpoly3(&q).unwrap();
    println!("characteristic polynomial: {:?}", cubic.integer_coefficients().unwrap());
    let root = largest_root(&cubic, (2 * n - 2 * delta) as f64, (2 * n - delta) as f64).unwrap();
    println!("largest root {root:.12} vs full matrix {:.12}", rho_q(&g).unwrap());

    for family in CubicFamily::ALL {
        let s = match family {
            CubicFamily::Aq2 | CubicFamily::Bd2 => 4,
            CubicFamily::Aq3 | CubicFamily::Bd3 => 2,
            _ => 0,
        };
        let template = template_matrix(family, n as i64, s, delta as i64).unwrap();
        let cubic = family_cubic(family, n as i64, s, delta as i64).unwrap();
        println!(
            "{family:?} (s={s}): rows {:?}, coefficients {:?}",
            template.integer_rows().unwrap(),
            cubic.integer_coefficients().unwrap()
        );
    }

    let xs: Vec<f64> = (0..50).map(|i| -20.0 + i as f64).collect();
    for (identity, s) in [
        (Identity::SignlessG2, 4),
        (Identity::SignlessG3, 2),
        (Identity::DistanceG2, 4),
        (Identity::DistanceG3, 2),
    ] {
        let r = identity_check(identity, n as i64, s, delta as i64, &xs).unwrap();
        println!("{identity:?}: max relative residual {r:.2e}");
    }
}
