use dqpsk_ber::bounds::exact_ber;
use dqpsk_ber::montecarlo::{simulate, McConfig};
use dqpsk_ber::SnrPoint;

/// Pooled estimate over ten seeds at 10^6 symbols each.
fn pooled(gamma: f64) -> (f64, f64) {
    let snr = SnrPoint::from_linear(gamma).unwrap();
    let (mut errors, mut bits) = (0u64, 0u64);
    for seed in 100..110 {
        let r = simulate(&McConfig::new(snr, 1_000_000, seed)).unwrap();
        errors += r.bit_errors;
        bits += r.bits_sent;
    }
    let p = errors as f64 / bits as f64;
    (p, (p * (1.0 - p) / bits as f64).sqrt())
}

#[test]
fn tracks_exact_ber_as_snr_doubles() {
    // A wrong noise variance would show up as a constant SNR offset,
    // growing in relative terms as gamma increases.
    for gamma in [0.5, 1.0, 2.0, 4.0] {
        let exact = exact_ber(SnrPoint::from_linear(gamma).unwrap()).unwrap();
        let (p, sd) = pooled(gamma);
        assert!((p - exact).abs() < 4.0 * sd, "gamma {gamma}: {p} vs {exact} (sd {sd})");
    }
}

#[test]
fn ci_width_scales_with_inverse_root_n() {
    let snr = SnrPoint::from_db(3.0).unwrap();
    let small = simulate(&McConfig::new(snr, 100_000, 5)).unwrap();
    let large = simulate(&McConfig::new(snr, 1_600_000, 5)).unwrap();
    let ratio = small.ci_half_width / large.ci_half_width;
    assert!((ratio - 4.0).abs() < 0.2, "{ratio}");
}
