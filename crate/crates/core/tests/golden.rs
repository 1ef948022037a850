//! Byte-exact fixtures. Any change to an encoding shows up here first.

use hecc_core::codec::*;
use hecc_core::oracle::{enumerate_reduced_divisors, test_domain};
use hecc_core::protocols::*;
use hecc_core::{CurveParams, DomainParams, KeyPair, PinnedSource};

const DEMO64: &str = include_str!("fixtures/demo64.dom");

fn demo64() -> DomainParams {
    read_domain_file(DEMO64).unwrap()
}

fn golden_key(dp: &DomainParams) -> KeyPair {
    KeyPair::from_secret(0x1234_5678_9abc_def0_u64.into(), dp).unwrap()
}

#[test]
fn secret_key_bytes() {
    let dp = demo64();
    let bytes = include_bytes!("fixtures/demo64_secret.bin");
    assert_eq!(dp.scalar_len(), 15);
    assert_eq!(hex::encode(bytes), "00000000000000123456789abcdef0");
    assert_eq!(
        &encode_scalar(golden_key(&dp).secret(), &dp)[..],
        &bytes[..]
    );
    assert_eq!(
        decode_scalar(bytes, &dp).unwrap(),
        *golden_key(&dp).secret()
    );
}

#[test]
fn public_key_bytes() {
    let dp = demo64();
    let bytes = include_bytes!("fixtures/demo64_public.bin");
    let kp = golden_key(&dp);
    assert_eq!(&encode_divisor(kp.public())[..], &bytes[..]);
    assert_eq!(&decode_divisor(bytes, dp.curve()).unwrap(), kp.public());
}

#[test]
fn deterministic_signature_bytes() {
    let dp = demo64();
    let bytes = include_bytes!("fixtures/demo64_golden.sig");
    let kp = golden_key(&dp);
    let sig = sign(b"golden", &kp, &dp, NonceMode::Deterministic).unwrap();
    assert_eq!(&encode_signature(&sig, &dp)[..], &bytes[..]);
    let decoded = decode_signature(bytes, &dp).unwrap();
    assert!(verify(b"golden", &decoded, kp.public(), &dp).is_accept());
}

#[test]
fn pinned_ciphertext_bytes() {
    let dp = demo64();
    let bytes = include_bytes!("fixtures/demo64_golden.ct");
    let kp = golden_key(&dp);
    let mut src = PinnedSource::new([7u32, 11, 13]);
    let ct = elgamal_encrypt_bytes(b"golden message", kp.public(), &dp, &mut src).unwrap();
    assert_eq!(&encode_ciphertext(&ct)[..], &bytes[..]);
    assert_eq!(&bytes[..6], b"HECC1\x01");
    assert_eq!(&bytes[6..14], &14u64.to_be_bytes());
    assert_eq!(&bytes[14..18], &3u32.to_be_bytes());
    let decoded = decode_ciphertext(bytes, dp.curve()).unwrap();
    assert_eq!(
        elgamal_decrypt_bytes(&decoded, &kp, &dp).unwrap(),
        b"golden message"
    );
}

#[test]
fn f7_enumeration_report() {
    let c = CurveParams::from_u64s(7, 2, &[1, 3, 0, 0, 0, 1], &[]).unwrap();
    let report = enumerate_reduced_divisors(&c).unwrap().report();
    assert_eq!(report, include_str!("fixtures/f7_divisors.txt"));
    assert_eq!(report.lines().next(), Some("010100"));
}

#[test]
fn small_domain_files() {
    for (text, p, f) in [
        (include_str!("fixtures/f7.dom"), 7, [1, 3, 0, 0, 0, 1]),
        (include_str!("fixtures/f19.dom"), 19, [1, 3, 0, 0, 0, 1]),
    ] {
        let dp = read_domain_file(text).unwrap();
        let c = CurveParams::from_u64s(p, 2, &f, &[]).unwrap();
        assert_eq!(dp, test_domain(&c).unwrap());
        assert_eq!(read_domain_file(&write_domain_file(&dp)).unwrap(), dp);
    }
}

#[test]
fn domain_file_rejections() {
    let f7 = include_str!("fixtures/f7.dom");
    // r does not annihilate R
    let wrong_r = f7.replace("r = 3", "r = 5");
    assert!(read_domain_file(&wrong_r).is_err());
    // even p
    let even = f7.replace("p = 7", "p = 2");
    assert!(read_domain_file(&even).is_err());
}
