use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use hecc_core::codec::{decode_divisor, decode_scalar, read_domain_file};
use hecc_core::{DomainParams, KeyPair, MumfordDivisor};

pub fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).with_context(|| format!("reading {}", path.display()))
}

pub fn load_domain(path: &Path) -> Result<DomainParams> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_domain_file(&text).with_context(|| format!("parsing domain file {}", path.display()))
}

pub fn load_public(path: &Path, dp: &DomainParams) -> Result<MumfordDivisor> {
    decode_divisor(&read(path)?, dp.curve())
        .with_context(|| format!("parsing public key {}", path.display()))
}

pub fn load_secret(path: &Path, dp: &DomainParams) -> Result<KeyPair> {
    let a = decode_scalar(&read(path)?, dp)
        .with_context(|| format!("parsing secret key {}", path.display()))?;
    Ok(KeyPair::from_secret(a, dp)?)
}

/// Writes through a temp file in the target directory and renames it into
/// place, so a failed run never leaves a half-written file behind.
pub fn write_atomic(path: &Path, bytes: &[u8], secret: bool) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating temp file in {}", dir.display()))?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    #[cfg(unix)]
    if !secret {
        use std::os::unix::fs::PermissionsExt;
        tmp.as_file()
            .set_permissions(fs::Permissions::from_mode(0o644))?;
    }
    #[cfg(not(unix))]
    let _ = secret;
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
