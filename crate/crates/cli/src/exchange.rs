//! Organization A signs a document and sends it encrypted to organization B,
//! which decrypts it and checks the signature.
//!
//! The plaintext under encryption is `doc || sig || len(sig) as u32 BE`.

use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use hecc_core::codec::{
    decode_ciphertext, decode_signature, encode_ciphertext, encode_divisor, encode_scalar,
    encode_signature,
};
use hecc_core::protocols::{
    self, elgamal_decrypt_bytes, elgamal_encrypt_bytes, NonceMode, Verdict,
};
use hecc_core::{DomainParams, KeyPair};
use rand::rngs::StdRng;
use sha2::{Digest, Sha256};

use crate::files::{load_public, read, write_atomic};
use crate::{decrypt_failure, Rejected};

fn save_keys(dir: &Path, name: &str, kp: &KeyPair, dp: &DomainParams) -> Result<()> {
    write_atomic(
        &dir.join(format!("{name}.secret")),
        &encode_scalar(kp.secret(), dp),
        true,
    )?;
    write_atomic(
        &dir.join(format!("{name}.public")),
        &encode_divisor(kp.public()),
        false,
    )
}

fn split_payload(payload: &[u8]) -> Option<(&[u8], &[u8])> {
    let (body, len) = payload.split_last_chunk::<4>()?;
    let sig_len = u32::from_be_bytes(*len) as usize;
    let doc_len = body.len().checked_sub(sig_len)?;
    Some(body.split_at(doc_len))
}

pub fn run(dp: &DomainParams, input: &Path, workdir: &Path, rng: &mut StdRng) -> Result<()> {
    let start = Instant::now();
    fs::create_dir_all(workdir).with_context(|| format!("creating {}", workdir.display()))?;
    let doc = read(input)?;
    let mut step = 0;
    let mut say = |msg: String| {
        step += 1;
        println!("[{step}] {msg}");
    };

    let p = dp.curve().field().modulus();
    say(format!(
        "domain: genus {} over a {}-bit prime field, subgroup order r of {} bits",
        dp.curve().genus(),
        p.bits(),
        dp.order().bits()
    ));

    let alice = protocols::keygen(dp, rng)?;
    save_keys(workdir, "alice", &alice, dp)?;
    say("A: generated keypair -> alice.secret, alice.public".into());
    let bob = protocols::keygen(dp, rng)?;
    save_keys(workdir, "bob", &bob, dp)?;
    say("B: generated keypair -> bob.secret, bob.public".into());

    // A fetches B's public key from the shared directory
    let bob_public = load_public(&workdir.join("bob.public"), dp)?;
    say("A: obtained B's public key".into());

    let sig = protocols::sign(&doc, &alice, dp, NonceMode::Random(rng))?;
    let sig_bytes = encode_signature(&sig, dp);
    write_atomic(&workdir.join("document.sig"), &sig_bytes, false)?;
    say(format!(
        "A: signed {} document bytes (sha256 {}) -> document.sig",
        doc.len(),
        hex::encode(Sha256::digest(&doc))
    ));

    let mut payload = doc.clone();
    payload.extend_from_slice(&sig_bytes);
    payload.extend_from_slice(&(sig_bytes.len() as u32).to_be_bytes());
    let ct = elgamal_encrypt_bytes(&payload, &bob_public, dp, rng)?;
    write_atomic(&workdir.join("document.ct"), &encode_ciphertext(&ct), false)?;
    say(format!(
        "A: encrypted {} payload bytes for B in {} chunks -> document.ct",
        payload.len(),
        ct.chunks().len()
    ));

    let received = decode_ciphertext(&read(&workdir.join("document.ct"))?, dp.curve())
        .context("parsing document.ct")?;
    let plain = elgamal_decrypt_bytes(&received, &bob, dp).map_err(decrypt_failure)?;
    say(format!("B: decrypted {} payload bytes", plain.len()));

    let Some((doc_rx, sig_rx)) = split_payload(&plain) else {
        bail!(Rejected(
            "decrypted payload is not document || signature".into()
        ));
    };
    let sig_rx = decode_signature(sig_rx, dp)
        .map_err(|e| Rejected(format!("decrypted signature is malformed: {e}")))?;
    let alice_public = load_public(&workdir.join("alice.public"), dp)?;
    match protocols::verify(doc_rx, &sig_rx, &alice_public, dp) {
        Verdict::Accept => say("B: signature by A: ACCEPT".into()),
        Verdict::Reject(why) => {
            say(format!("B: signature by A: REJECT ({why})"));
            bail!(Rejected("signature rejected".into()));
        }
    }

    let name = input
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "document".into());
    let out = workdir.join(format!("recovered-{name}"));
    write_atomic(&out, doc_rx, false)?;
    say(format!(
        "B: recovered {} bytes (sha256 {}) -> {}",
        doc_rx.len(),
        hex::encode(Sha256::digest(doc_rx)),
        out.display()
    ));
    say(format!("elapsed {:.2?}", start.elapsed()));
    println!("VERIFIED");
    Ok(())
}
