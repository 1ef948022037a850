//! Protocol checks on oracle-derived domains over tiny fields.

use hecc_core::codec::read_domain_file;
use hecc_core::protocols::*;
use hecc_core::{DomainParams, PinnedSource};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn f7() -> DomainParams {
    read_domain_file(include_str!("fixtures/f7.dom")).unwrap()
}

fn f19() -> DomainParams {
    read_domain_file(include_str!("fixtures/f19.dom")).unwrap()
}

#[test]
fn f7_keypairs_recompute() {
    let dp = f7();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let k = keygen(&dp, &mut rng).unwrap();
        assert_eq!(&dp.curve().scalar_mul(k.secret(), dp.base()), k.public());
    }
}

#[test]
fn f7_pinned_unit_scalar() {
    let dp = f7();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let b = keygen(&dp, &mut rng).unwrap();
    let m = dp.curve().random_divisor(&mut rng);
    let (c1, c2) =
        elgamal_encrypt_divisor(&m, b.public(), &dp, &mut PinnedSource::new([1u32])).unwrap();
    assert_eq!(&c1, dp.base());
    assert_eq!(c2, dp.curve().add(&m, b.public()));
}

#[test]
fn f19_dh_and_elgamal() {
    let dp = f19();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let a = keygen(&dp, &mut rng).unwrap();
        let b = keygen(&dp, &mut rng).unwrap();
        let sa = dh_shared(&a, b.public(), &dp).unwrap();
        let sb = dh_shared(&b, a.public(), &dp).unwrap();
        assert_eq!(sa, sb);
        let ab = (a.secret() * b.secret()) % dp.order();
        assert_eq!(sa.divisor, dp.curve().scalar_mul(&ab, dp.base()));

        let m = dp.curve().random_divisor(&mut rng);
        let ct = elgamal_encrypt_divisor(&m, b.public(), &dp, &mut rng).unwrap();
        assert_eq!(elgamal_decrypt_divisor(&ct, &b, &dp).unwrap(), m);
    }
}

#[test]
fn tiny_field_rejects_byte_embedding() {
    let dp = f19();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let b = keygen(&dp, &mut rng).unwrap();
    assert_eq!(
        elgamal_encrypt_bytes(b"x", b.public(), &dp, &mut rng),
        Err(ProtocolError::FieldTooSmall(5))
    );
}

#[test]
fn f19_phi_collisions_reported() {
    use hecc_core::oracle::enumerate_reduced_divisors;
    let dp = f19();
    let group = enumerate_reduced_divisors(dp.curve()).unwrap();
    let mut seen = std::collections::HashMap::new();
    for d in group.elements() {
        *seen.entry(phi(d, &dp)).or_insert(0u32) += 1;
    }
    let collisions: u32 = seen.values().map(|&c| c - 1).sum();
    eprintln!(
        "phi collisions over {} elements mod r = {}: {collisions}",
        group.order(),
        dp.order()
    );
    assert!(seen.keys().all(|v| v < dp.order()));
    assert!(seen.contains_key(&BigUint::default()));
}
