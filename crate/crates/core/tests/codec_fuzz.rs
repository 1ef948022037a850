use hecc_core::codec::*;
use hecc_core::oracle::enumerate_reduced_divisors;
use hecc_core::protocols::*;
use hecc_core::{CurveParams, DomainParams};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn demo64() -> DomainParams {
    read_domain_file(include_str!("fixtures/demo64.dom")).unwrap()
}

#[test]
fn every_f7_divisor_roundtrips() {
    let c = CurveParams::from_u64s(7, 2, &[1, 3, 0, 0, 0, 1], &[]).unwrap();
    let group = enumerate_reduced_divisors(&c).unwrap();
    for d in group.elements() {
        let bytes = encode_divisor(d);
        assert_eq!(&decode_divisor(&bytes, &c).unwrap(), d);
        // decode then encode is the identity on canonical bytes
        assert_eq!(encode_divisor(&decode_divisor(&bytes, &c).unwrap()), bytes);
    }
}

#[test]
fn byte_flips_never_panic() {
    let c = CurveParams::from_u64s(7, 2, &[1, 3, 0, 0, 0, 1], &[]).unwrap();
    let group = enumerate_reduced_divisors(&c).unwrap();
    for d in group.elements() {
        let bytes = encode_divisor(d);
        for i in 0..bytes.len() {
            for bit in 0..8 {
                let mut m = bytes.clone();
                m[i] ^= 1 << bit;
                if let Ok(e) = decode_divisor(&m, &c) {
                    assert_ne!(&e, d);
                    assert!(group.contains(&e));
                }
            }
        }
    }
}

#[test]
fn random_artifacts_roundtrip() {
    let dp = demo64();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let kp = keygen(&dp, &mut rng).unwrap();
    for i in 0..50u32 {
        let k = keygen(&dp, &mut rng).unwrap();
        assert_eq!(
            &decode_scalar(&encode_scalar(k.secret(), &dp), &dp).unwrap(),
            k.secret()
        );
        assert_eq!(
            &decode_divisor(&encode_divisor(k.public()), dp.curve()).unwrap(),
            k.public()
        );
        let msg = i.to_be_bytes();
        let sig = sign(&msg, &k, &dp, NonceMode::Random(&mut rng)).unwrap();
        assert_eq!(
            decode_signature(&encode_signature(&sig, &dp), &dp).unwrap(),
            sig
        );
        let ct = elgamal_encrypt_bytes(&msg, kp.public(), &dp, &mut rng).unwrap();
        assert_eq!(
            decode_ciphertext(&encode_ciphertext(&ct), dp.curve()).unwrap(),
            ct
        );
    }
}

proptest! {
    #[test]
    fn arbitrary_bytes_never_panic(bytes in proptest::collection::vec(any::<u8>(), 0..64)) {
        let dp = demo64();
        let _ = decode_divisor(&bytes, dp.curve());
        let _ = decode_signature(&bytes, &dp);
        let _ = decode_scalar(&bytes, &dp);
        let _ = decode_ciphertext(&bytes, dp.curve());
        let _ = decode_polynomial(&bytes, dp.curve().field());
    }

    #[test]
    fn truncation_is_an_error(cut in 0usize..41) {
        let dp = demo64();
        let bytes = encode_divisor(dp.base());
        prop_assume!(cut < bytes.len());
        prop_assert!(decode_divisor(&bytes[..cut], dp.curve()).is_err());
    }
}
