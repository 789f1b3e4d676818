use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use legortho::factorization::fn_closed_coeffs;
use legortho::partial_fractions::contour_poly_over;
use legortho::quadrature_verify::contour_mean;
use legortho::ratpoly::rat;
use legortho::sampling_ls::{empirical_gram, sample_arcsine};
use legortho::LaurentPoly;

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

#[test]
fn coefficient_rule_matches_trapezoid() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for trial in 0..20 {
        let n = 1 + trial % 8;
        let deg = rng.gen_range(0..=4 * n);
        let coeffs: Vec<_> = (0..=deg).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect();
        let p = LaurentPoly::new(0, coeffs);
        let f = fn_closed_coeffs(n);
        let exact = contour_poly_over(&p, &f).unwrap();
        let (pf, ff) = (p.coeffs_f64(), f.coeffs_f64());
        let numeric = contour_mean(|z| horner(&pf, z) / horner(&ff, z), 4096);
        let exact = exact.to_f64().unwrap();
        let scale = pf.iter().fold(1.0f64, |m, c| m.max(c.abs()));
        assert!(
            (numeric.re - exact).abs() < 1e-10 * scale && numeric.im.abs() < 1e-10 * scale,
            "n = {n}, deg = {deg}: {numeric} vs {exact}"
        );
    }
}

#[test]
fn gram_is_unbiased() {
    let n = 5;
    let seeds = 200;
    let size = n + 1;
    let mut sum = vec![0.0; size * size];
    let mut sum_sq = vec![0.0; size * size];
    for seed in 0..seeds {
        let g = empirical_gram(n, &sample_arcsine(500, seed).unwrap()).unwrap();
        for (k, v) in g.iter().enumerate() {
            sum[k] += v;
            sum_sq[k] += v * v;
        }
    }
    let m = seeds as f64;
    for k in 0..size * size {
        let (i, j) = (k % size, k / size);
        let mean = sum[k] / m;
        let var = (sum_sq[k] / m - mean * mean) * m / (m - 1.0);
        let se = (var / m).sqrt();
        let expected = if i == j { 1.0 } else { 0.0 };
        assert!((mean - expected).abs() <= 5.0 * se, "entry ({i}, {j}): mean {mean}, se {se}");
    }
}
