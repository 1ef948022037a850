//! `hecc`: keys, Diffie-Hellman, ElGamal and signatures on a genus-2 Jacobian.
//!
//! Exit status is 0 on success, 1 when a signature is rejected or a
//! ciphertext fails to decrypt, and 2 for usage, I/O and format errors.

mod exchange;
mod files;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hecc_core::codec::{
    decode_ciphertext, decode_signature, encode_ciphertext, encode_divisor, encode_scalar,
    encode_signature, write_domain_file,
};
use hecc_core::jacobian::CurveParams;
use hecc_core::oracle::{self, OracleError};
use hecc_core::protocols::{
    self, elgamal_decrypt_bytes, elgamal_encrypt_bytes, NonceMode, ProtocolError, Verdict,
};
use hecc_core::DomainParams;
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::SeedableRng;

use files::{load_domain, load_public, load_secret, read, write_atomic};

#[derive(Parser)]
#[command(name = "hecc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a keypair.
    Keygen {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        out_secret: PathBuf,
        #[arg(long)]
        out_public: PathBuf,
        #[command(flatten)]
        seed: Seed,
    },
    /// Compute the Diffie-Hellman shared divisor.
    Dh {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        secret: PathBuf,
        #[arg(long)]
        peer: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Encrypt a file to a public key.
    Encrypt {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        public: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        seed: Seed,
    },
    /// Decrypt a ciphertext with a secret key.
    Decrypt {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        secret: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sign a file.
    Sign {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        secret: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Derive the nonce from the key and message instead of drawing it.
        #[arg(long, conflicts_with = "seed")]
        deterministic: bool,
        #[command(flatten)]
        seed: Seed,
    },
    /// Check a signature; prints ACCEPT or REJECT.
    Verify {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        public: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        sig: PathBuf,
    },
    /// Print the domain parameters and, for tiny fields, the brute-force group order.
    CurveInfo(CurveInfo),
    /// Run the signed-and-encrypted document exchange between two parties.
    ExchangeDemo {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        workdir: PathBuf,
        #[command(flatten)]
        seed: Seed,
    },
}

#[derive(Args)]
struct Seed {
    /// Seed the random generator (for reproducible runs).
    #[arg(long)]
    seed: Option<u64>,
}

impl Seed {
    fn rng(&self) -> StdRng {
        match self.seed {
            Some(s) => StdRng::seed_from_u64(s),
            None => StdRng::from_entropy(),
        }
    }
}

#[derive(Args)]
struct CurveInfo {
    #[arg(long, required_unless_present = "make_test_domain")]
    domain: Option<PathBuf>,
    #[arg(long, hide = true, requires_all = ["p", "f", "out"], conflicts_with = "domain")]
    make_test_domain: bool,
    #[arg(long, hide = true)]
    p: Option<u64>,
    #[arg(long, hide = true, default_value_t = 2)]
    genus: usize,
    #[arg(long, hide = true, value_delimiter = ',')]
    f: Vec<u64>,
    #[arg(long, hide = true, value_delimiter = ',')]
    h: Vec<u64>,
    #[arg(long, hide = true)]
    out: Option<PathBuf>,
}

/// A verification or decryption failure: exit status 1.
#[derive(Debug)]
struct Rejected(String);

impl fmt::Display for Rejected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Rejected {}

fn decrypt_failure(e: ProtocolError) -> anyhow::Error {
    match e {
        ProtocolError::Integrity(_) => Rejected(format!("decryption failed: {e}")).into(),
        e => e.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hecc: {e:#}");
            if e.downcast_ref::<Rejected>().is_some() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::Keygen {
            domain,
            out_secret,
            out_public,
            seed,
        } => {
            let dp = load_domain(&domain)?;
            let kp = protocols::keygen(&dp, &mut seed.rng())?;
            write_atomic(&out_secret, &encode_scalar(kp.secret(), &dp), true)?;
            write_atomic(&out_public, &encode_divisor(kp.public()), false)?;
        }
        Command::Dh {
            domain,
            secret,
            peer,
            out,
        } => {
            let dp = load_domain(&domain)?;
            let own = load_secret(&secret, &dp)?;
            let peer = load_public(&peer, &dp)?;
            let shared = protocols::dh_shared(&own, &peer, &dp)?;
            if shared.degenerate {
                eprintln!("hecc: warning: peer key is the identity; shared secret is trivial");
            }
            write_atomic(&out, &encode_divisor(&shared.divisor), true)?;
        }
        Command::Encrypt {
            domain,
            public,
            input,
            out,
            seed,
        } => {
            let dp = load_domain(&domain)?;
            let peer = load_public(&public, &dp)?;
            let msg = read(&input)?;
            let ct = elgamal_encrypt_bytes(&msg, &peer, &dp, &mut seed.rng())?;
            write_atomic(&out, &encode_ciphertext(&ct), false)?;
        }
        Command::Decrypt {
            domain,
            secret,
            input,
            out,
        } => {
            let dp = load_domain(&domain)?;
            let own = load_secret(&secret, &dp)?;
            let ct = decode_ciphertext(&read(&input)?, dp.curve())
                .with_context(|| format!("parsing ciphertext {}", input.display()))?;
            let msg = elgamal_decrypt_bytes(&ct, &own, &dp).map_err(decrypt_failure)?;
            write_atomic(&out, &msg, false)?;
        }
        Command::Sign {
            domain,
            secret,
            input,
            out,
            deterministic,
            seed,
        } => {
            let dp = load_domain(&domain)?;
            let own = load_secret(&secret, &dp)?;
            let msg = read(&input)?;
            let mut rng = seed.rng();
            let mode = if deterministic {
                NonceMode::Deterministic
            } else {
                NonceMode::Random(&mut rng)
            };
            let sig = protocols::sign(&msg, &own, &dp, mode)?;
            write_atomic(&out, &encode_signature(&sig, &dp), false)?;
        }
        Command::Verify {
            domain,
            public,
            input,
            sig,
        } => {
            let dp = load_domain(&domain)?;
            let signer = load_public(&public, &dp)?;
            let msg = read(&input)?;
            let sig = decode_signature(&read(&sig)?, &dp)
                .with_context(|| format!("parsing signature {}", sig.display()))?;
            match protocols::verify(&msg, &sig, &signer, &dp) {
                Verdict::Accept => println!("ACCEPT"),
                Verdict::Reject(why) => {
                    println!("REJECT");
                    return Err(Rejected(format!("signature rejected: {why}")).into());
                }
            }
        }
        Command::CurveInfo(args) => curve_info(args)?,
        Command::ExchangeDemo {
            domain,
            input,
            workdir,
            seed,
        } => {
            let dp = load_domain(&domain)?;
            exchange::run(&dp, &input, &workdir, &mut seed.rng())?;
        }
    }
    Ok(())
}

fn curve_info(args: CurveInfo) -> Result<()> {
    if args.make_test_domain {
        let (Some(p), Some(out)) = (args.p, args.out.as_deref()) else {
            bail!("--make-test-domain needs --p, --f and --out");
        };
        let curve = CurveParams::from_u64s(p, args.genus, &args.f, &args.h)?;
        let dp = oracle::test_domain(&curve)?;
        write_atomic(out, write_domain_file(&dp).as_bytes(), false)?;
        print_info(&dp);
        return Ok(());
    }
    let path = args.domain.as_deref().expect("required by clap");
    print_info(&load_domain(path)?);
    Ok(())
}

fn print_info(dp: &DomainParams) {
    let c = dp.curve();
    let p = c.field().modulus();
    println!("p = {p} ({} bits)", p.bits());
    println!("genus = {}", c.genus());
    println!("f = {}", c.f());
    println!("h = {}", c.h());
    println!("r = {} ({} bits)", dp.order(), dp.order().bits());
    println!("R = {}", hex::encode(encode_divisor(dp.base())));
    match oracle::group_order_bruteforce(c) {
        Ok(n) => {
            let (lo, hi) = oracle::hasse_weil_interval(p, c.genus() as u32);
            let n_big = BigUint::from(n);
            let inside = lo <= n_big && n_big <= hi;
            println!("oracle order = {n}");
            println!(
                "hasse-weil [{lo}, {hi}]: {}",
                if inside { "ok" } else { "VIOLATED" }
            );
            let divides = (&n_big % dp.order()) == BigUint::default();
            println!("r | order: {}", if divides { "yes" } else { "no" });
        }
        Err(e @ (OracleError::FieldTooLarge(..) | OracleError::SearchTooLarge(..))) => {
            println!("oracle order = skipped ({e})");
        }
        Err(e) => println!("oracle order = failed ({e})"),
    }
}
