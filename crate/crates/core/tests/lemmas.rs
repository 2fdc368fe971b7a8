use std::time::Instant;

use capelli_core::lemmas::{run_lemma, LemmaConfig, LEMMA_IDS};

#[test]
fn every_registered_lemma_passes_at_default_sizes() {
    let cfg = LemmaConfig { seed: 7, ..LemmaConfig::default() };
    let mut failures = Vec::new();
    for id in LEMMA_IDS {
        let start = Instant::now();
        let report = run_lemma(id, &cfg).unwrap();
        println!("{id}: {} instances, {:?}, {:.2?}", report.instances, report.failure, start.elapsed());
        if !report.passed() {
            failures.push(report);
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn w_prime_theta_bracket_is_minus_the_xi_omega_bracket() {
    use capelli_core::weyl::{omega, rho_star, theta, w_prime_element, xi_rising, Flavor};
    use capelli_core::{Realization, UnivPoly};
    let alg = Realization::sp_split(2).unwrap();
    let f = Flavor::Symmetric;
    let u = UnivPoly::u();
    let lhs = (&w_prime_element(&alg, 0, &u) * &(&theta(&alg, f) * &rho_star(&alg, f))).bracket().unwrap();
    let rhs = (&xi_rising(&alg, 1, &u) * &omega(&alg, f)).bracket().unwrap();
    assert!(!lhs.is_zero());
    assert_ne!(lhs, rhs);
    assert_eq!(lhs, -&rhs);
}
