//! Golden draws pinning the random stream contract: ChaCha8 keyed by
//! `seed_from_u64`, stream id via `set_stream`, uniforms from the high
//! 53 bits, normals by Box–Muller, gammas by Marsaglia–Tsang. Any change
//! to these bits breaks every seeded reproduction downstream.

use std::f64::consts::PI;
use trigfit_core::*;

#[test]
fn raw_word_stream_is_pinned() {
    let cases: [(u64, u64, u64); 4] = [
        (42, 0, 0xae90bfb5395d5ba1),
        (42, 1, 0xb77fa8618dc9e890),
        (7, 3, 0x2e7987108688b271),
        (0, 0, 0xb585f767a79a3b6c),
    ];
    for (seed, stream, want) in cases {
        let mut s = RngStream::new(seed, stream);
        assert_eq!(s.next_u64(), want, "word (seed={seed}, stream={stream})");
    }
}

#[test]
fn gamma_first_draws_are_pinned() {
    let shape2: [(u64, u64, u64); 4] = [
        (42, 0, 0x4007ea4801089caa),
        (42, 1, 0x4001fe48e615c724),
        (7, 3, 0x3fe8a12984c0da6a),
        (0, 0, 0x3fea5fcdb2c4d8df),
    ];
    for (seed, stream, want) in shape2 {
        let mut s = RngStream::new(seed, stream);
        assert_eq!(
            sample_gamma(&mut s, 2.0).to_bits(),
            want,
            "gamma(2) (seed={seed}, stream={stream})"
        );
    }
    // Shape below 1 exercises the boost branch.
    let half: [(u64, u64, u64); 2] = [(42, 0, 0x3fed2e9f4df5e771), (0, 0, 0x3f5d3095d3cbeb1f)];
    for (seed, stream, want) in half {
        let mut s = RngStream::new(seed, stream);
        assert_eq!(
            sample_gamma(&mut s, 0.5).to_bits(),
            want,
            "gamma(0.5) (seed={seed}, stream={stream})"
        );
    }
}

#[test]
fn golden_dataset_reproduced_bit_exactly() {
    let omega = 2.0 * PI / 24.0;
    let gg = GGSpec::new(
        vec![1.0, 0.5, 0.5, 0.8, 0.3],
        omega,
        GGShape::new(2.0, 1.0).unwrap(),
    )
    .unwrap();
    let mut stream = RngStream::new(20260809, 0);
    let (times, responses) = simulate_dataset(&mut stream, &gg, 12).unwrap();
    let want: [u64; 12] = [
        0x4013df42a6741e67,
        0x4030fdd5bb7712b2,
        0x40233deec4581896,
        0x3fdff5466c76288c,
        0x400237031ee9f3f4,
        0x40019be122966e1d,
        0x3ffcd30eb77867d2,
        0x40140f41be52eeb6,
        0x4011d418003b5e9d,
        0x40067edb95cf1c12,
        0x3ffa00b09066db7f,
        0x3ff03759c31145a8,
    ];
    for (i, (y, w)) in responses.iter().zip(want).enumerate() {
        assert_eq!(y.to_bits(), w, "response {i}");
    }
    for (i, t) in times.iter().enumerate() {
        assert!((t - 2.0 * i as f64).abs() < 1e-12);
    }
}
