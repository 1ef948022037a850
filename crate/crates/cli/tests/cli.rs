use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name)
}

fn hecc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecc"))
        .args(args)
        .output()
        .expect("spawn hecc")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

struct Env {
    dir: TempDir,
    domain: String,
}

impl Env {
    fn new(domain: &str) -> Self {
        Env {
            dir: TempDir::new().unwrap(),
            domain: fixture(domain).to_str().unwrap().to_owned(),
        }
    }

    fn path(&self, name: &str) -> String {
        self.dir.path().join(name).to_str().unwrap().to_owned()
    }

    fn run(&self, cmd: &str, args: &[&str]) -> Output {
        let mut full = vec![cmd, "--domain", &self.domain];
        full.extend_from_slice(args);
        hecc(&full)
    }

    fn keygen(&self, name: &str, seed: &str) {
        let out = self.run(
            "keygen",
            &[
                "--out-secret",
                &self.path(&format!("{name}.sk")),
                "--out-public",
                &self.path(&format!("{name}.pk")),
                "--seed",
                seed,
            ],
        );
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn sign_verify_and_reject() {
    let env = Env::new("demo64.dom");
    env.keygen("a", "1");
    env.keygen("b", "2");
    fs::write(env.path("msg"), b"transfer 100 units").unwrap();
    let out = env.run(
        "sign",
        &[
            "--secret",
            &env.path("a.sk"),
            "--in",
            &env.path("msg"),
            "--out",
            &env.path("msg.sig"),
        ],
    );
    assert_eq!(code(&out), 0);

    let verify = |pk: &str| {
        env.run(
            "verify",
            &[
                "--public",
                &env.path(pk),
                "--in",
                &env.path("msg"),
                "--sig",
                &env.path("msg.sig"),
            ],
        )
    };
    let ok = verify("a.pk");
    assert_eq!(code(&ok), 0);
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "ACCEPT");
    let bad = verify("b.pk");
    assert_eq!(code(&bad), 1);
    assert_eq!(String::from_utf8_lossy(&bad.stdout).trim(), "REJECT");

    fs::write(env.path("msg"), b"transfer 900 units").unwrap();
    assert_eq!(code(&verify("a.pk")), 1);
}

#[test]
fn deterministic_signatures_are_stable() {
    let env = Env::new("demo64.dom");
    fs::write(env.path("msg"), b"golden").unwrap();
    let sk = fixture("demo64_secret.bin");
    let sign = |out: &str| {
        let o = env.run(
            "sign",
            &[
                "--secret",
                sk.to_str().unwrap(),
                "--in",
                &env.path("msg"),
                "--out",
                &env.path(out),
                "--deterministic",
            ],
        );
        assert_eq!(code(&o), 0);
        fs::read(env.path(out)).unwrap()
    };
    let s1 = sign("1.sig");
    assert_eq!(s1, sign("2.sig"));
    assert_eq!(s1, fs::read(fixture("demo64_golden.sig")).unwrap());
}

#[test]
fn encrypt_decrypt_roundtrip() {
    let env = Env::new("demo64.dom");
    env.keygen("b", "3");
    for (i, len) in [0usize, 1, 5, 6, 777].into_iter().enumerate() {
        let msg: Vec<u8> = (0..len).map(|j| (j * 31 + i) as u8).collect();
        fs::write(env.path("m"), &msg).unwrap();
        let out = env.run(
            "encrypt",
            &[
                "--public",
                &env.path("b.pk"),
                "--in",
                &env.path("m"),
                "--out",
                &env.path("m.ct"),
            ],
        );
        assert_eq!(code(&out), 0);
        let out = env.run(
            "decrypt",
            &[
                "--secret",
                &env.path("b.sk"),
                "--in",
                &env.path("m.ct"),
                "--out",
                &env.path("m.out"),
            ],
        );
        assert_eq!(code(&out), 0);
        assert_eq!(fs::read(env.path("m.out")).unwrap(), msg, "len {len}");
    }
}

#[test]
fn wrong_key_decrypt_fails_without_output() {
    let env = Env::new("demo64.dom");
    env.keygen("a", "4");
    env.keygen("b", "5");
    fs::write(env.path("m"), vec![7u8; 64]).unwrap();
    env.run(
        "encrypt",
        &[
            "--public",
            &env.path("b.pk"),
            "--in",
            &env.path("m"),
            "--out",
            &env.path("m.ct"),
        ],
    );
    let out = env.run(
        "decrypt",
        &[
            "--secret",
            &env.path("a.sk"),
            "--in",
            &env.path("m.ct"),
            "--out",
            &env.path("m.out"),
        ],
    );
    assert_eq!(code(&out), 1);
    assert!(!Path::new(&env.path("m.out")).exists());
}

#[test]
fn dh_agrees() {
    let env = Env::new("f19.dom");
    env.keygen("a", "6");
    env.keygen("b", "7");
    let dh = |sk: &str, pk: &str, out: &str| {
        let o = env.run(
            "dh",
            &[
                "--secret",
                &env.path(sk),
                "--peer",
                &env.path(pk),
                "--out",
                &env.path(out),
            ],
        );
        assert_eq!(code(&o), 0);
        fs::read(env.path(out)).unwrap()
    };
    assert_eq!(dh("a.sk", "b.pk", "ab"), dh("b.sk", "a.pk", "ba"));
}

#[test]
fn format_and_usage_errors_exit_2() {
    let env = Env::new("demo64.dom");
    env.keygen("a", "8");
    fs::write(env.path("junk"), b"\x01\x02").unwrap();
    fs::write(env.path("m"), b"hi").unwrap();
    let out = env.run(
        "verify",
        &[
            "--public",
            &env.path("junk"),
            "--in",
            &env.path("m"),
            "--sig",
            &env.path("junk"),
        ],
    );
    assert_eq!(code(&out), 2);
    let out = env.run(
        "decrypt",
        &[
            "--secret",
            &env.path("a.sk"),
            "--in",
            &env.path("junk"),
            "--out",
            &env.path("o"),
        ],
    );
    assert_eq!(code(&out), 2);
    assert!(!Path::new(&env.path("o")).exists());
    assert_eq!(code(&hecc(&["sign"])), 2);
    assert_eq!(code(&hecc(&["frobnicate"])), 2);
    fs::write(env.path("bad.dom"), "p = 7\nwhat = 1\n").unwrap();
    let out = hecc(&["curve-info", "--domain", &env.path("bad.dom")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn curve_info_reports_oracle_order() {
    let out = hecc(&[
        "curve-info",
        "--domain",
        fixture("f7.dom").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("oracle order = 81"), "{text}");
    assert!(text.contains(": ok"));
    assert!(text.contains("r | order: yes"));
}

#[test]
fn make_test_domain_is_self_consistent() {
    let dir = TempDir::new().unwrap();
    let dom = dir.path().join("t.dom");
    let out = hecc(&[
        "curve-info",
        "--make-test-domain",
        "--p",
        "13",
        "--f",
        "2,0,1,0,0,1",
        "--h",
        "1,1",
        "--out",
        dom.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let out = hecc(&["curve-info", "--domain", dom.to_str().unwrap()]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("r = 7 "), "{text}");
    assert!(text.contains("oracle order = 140"));
}

#[test]
fn exchange_demo_small_file() {
    let env = Env::new("demo64.dom");
    let doc: Vec<u8> = (0..=255u8).cycle().take(3000).collect();
    fs::write(env.path("doc.txt"), &doc).unwrap();
    let out = env.run(
        "exchange-demo",
        &[
            "--in",
            &env.path("doc.txt"),
            "--workdir",
            &env.path("w"),
            "--seed",
            "9",
        ],
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().last(), Some("VERIFIED"));
    assert_eq!(fs::read(env.path("w/recovered-doc.txt")).unwrap(), doc);
}
