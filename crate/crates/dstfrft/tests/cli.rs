use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use dstfrft::container::{read_field, read_spectrum};
use dstfrft::verify::directional_stft;
use dstfrft_core::grid::rel_l2_error;

fn dstfrft(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dstfrft")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    dstfrft(args).status.code().expect("exit code")
}

fn at(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

fn report(path: &str) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn gaussian_is_one_at_the_origin() {
    let dir = tempfile::tempdir().unwrap();
    let out = at(dir.path(), "g");
    assert_eq!(code(&["gen", "gaussian", "--n", "2", "--extent", "12", "--count", "64", "--out", &out]), 0);
    let f = read_field(Path::new(&out)).unwrap();
    assert_eq!(f.len(), 64 * 64);
    let centre = 32 * 64 + 32;
    assert_eq!(f.coords(centre), [0.0, 0.0]);
    assert_eq!(f.values()[centre].re, 1.0);
}

#[test]
fn seeded_generation_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    for (name, seed) in [("a", "7"), ("b", "7"), ("c", "8")] {
        assert_eq!(code(&["gen", "random-bandlimited", "--seed", seed, "--out", &at(dir.path(), name)]), 0);
    }
    let bytes = |n: &str| fs::read(dir.path().join(format!("{n}.cf64"))).unwrap();
    assert_eq!(bytes("a"), bytes("b"));
    assert_ne!(bytes("a"), bytes("c"));
    assert_eq!(fs::read(dir.path().join("a.json")).unwrap(), fs::read(dir.path().join("b.json")).unwrap());
}

#[test]
fn odd_hermite_field_is_odd() {
    let dir = tempfile::tempdir().unwrap();
    for n in ["1", "2"] {
        let out = at(dir.path(), &format!("h{n}"));
        assert_eq!(code(&["gen", "hermite", "--order", "1", "--n", n, "--count", "64", "--out", &out]), 0);
        let f = read_field(Path::new(&out)).unwrap();
        let count = f.axes()[0].count();
        let n1 = if n == "1" { 1 } else { count };
        // Index count/2 holds x = 0; index count/2 + k mirrors count/2 - k.
        let mirror = |i: usize| (count - i) % count;
        let mut checked = 0;
        for i in 1..count {
            for j in 0..n1 {
                let jm = if n == "1" { 0 } else { j };
                let k = i * n1 + j;
                let km = mirror(i) * n1 + jm;
                assert_eq!(f.coords(km)[0], -f.coords(k)[0]);
                assert_eq!(f.values()[km], -f.values()[k]);
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn degenerate_order_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = at(dir.path(), "f");
    assert_eq!(code(&["gen", "gaussian", "--out", &f]), 0);
    let out = dstfrft(&["frft", "--input", &f, "--alpha", "0,0", "--out", &at(dir.path(), "g")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("eps_alpha"));
    assert!(!dir.path().join("g.json").exists());
}

#[test]
fn io_errors_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&["frft", "--input", &at(dir.path(), "absent"), "--alpha", "1,1", "--out", &at(dir.path(), "o")]), 3);
    let bad = at(dir.path(), "bad.json");
    fs::write(&bad, "{\"count\": ").unwrap();
    assert_eq!(code(&["verify", "transpose", "--config", &bad]), 3);
}

#[test]
fn frft_round_trip_passes_invert() {
    let dir = tempfile::tempdir().unwrap();
    let (f, g, h) = (at(dir.path(), "f"), at(dir.path(), "g"), at(dir.path(), "h"));
    assert_eq!(code(&["gen", "random-bandlimited", "--extent", "12", "--count", "256", "--seed", "2", "--out", &f]), 0);
    assert_eq!(code(&["frft", "--input", &f, "--alpha", "0.9,-2.1", "--out", &g]), 0);
    assert_eq!(code(&["frft", "--input", &g, "--alpha=-0.9,2.1", "--out", &h]), 0);
    let r = at(dir.path(), "r.json");
    assert_eq!(code(&["verify", "invert", "--input", &f, "--against", &h, "--report", &r]), 0);
    let rep = report(&r);
    assert!(rep["rel_err"].as_f64().unwrap() <= 1e-7);
    let direct = read_field(Path::new(&h)).unwrap();
    assert!(rel_l2_error(&direct, &read_field(Path::new(&f)).unwrap()).unwrap() <= 1e-7);
}

#[test]
fn quarter_turn_spectrum_matches_directional_stft() {
    let dir = tempfile::tempdir().unwrap();
    let (f, s, pgm) = (at(dir.path(), "f"), at(dir.path(), "s"), at(dir.path(), "s.pgm"));
    assert_eq!(code(&["gen", "random-bandlimited", "--extent", "5", "--count", "32", "--seed", "4", "--out", &f]), 0);
    let args = [
        "dstfrft", "--input", &f, "--alpha", "1.5708,1.5708", "--directions", "8", "--count", "16", "--a-count", "16",
        "--dump-heatmap", &pgm, "--out", &s,
    ];
    assert_eq!(code(&args), 0);
    let spectrum = read_spectrum(Path::new(&s)).unwrap();
    let field = read_field(Path::new(&f)).unwrap();
    let expect = directional_stft(&field, 1.0, spectrum.grid());
    let num: f64 = spectrum.values().iter().zip(&expect).map(|(a, b)| (a - b).norm_sqr()).sum();
    let den: f64 = expect.iter().map(|b| b.norm_sqr()).sum();
    // 1.5708 differs from pi/2 by 3.7e-6, which perturbs the chirps by about 1e-4.
    assert!((num / den).sqrt() < 1e-3, "{}", (num / den).sqrt());
    let image = fs::read(&pgm).unwrap();
    assert!(image.starts_with(b"P5\n16 16\n255\n"));
    assert_eq!(image.len(), b"P5\n16 16\n255\n".len() + 256);
}

#[test]
fn synthesis_of_a_spectrum_reconstructs() {
    let dir = tempfile::tempdir().unwrap();
    let (f, s, r) = (at(dir.path(), "f"), at(dir.path(), "s"), at(dir.path(), "r"));
    assert_eq!(code(&["gen", "gaussian", "--extent", "6", "--count", "48", "--out", &f]), 0);
    assert_eq!(code(&["dstfrft", "--input", &f, "--out", &s]), 0);
    assert_eq!(code(&["synth", "--input", &s, "--analysis-window-width", "1", "--out", &r]), 0);
    let back = read_field(Path::new(&r)).unwrap();
    assert!(rel_l2_error(&back, &read_field(Path::new(&f)).unwrap()).unwrap() < 2e-2);
}

#[test]
fn radon_writes_a_sinogram() {
    let dir = tempfile::tempdir().unwrap();
    let (f, s) = (at(dir.path(), "f"), at(dir.path(), "s"));
    assert_eq!(code(&["gen", "gaussian", "--extent", "6", "--count", "48", "--out", &f]), 0);
    assert_eq!(code(&["radon", "--input", &f, "--angles", "4", "--out", &s]), 0);
    let sino = dstfrft::container::read_sinogram(Path::new(&s)).unwrap();
    assert_eq!(sino.angles().len(), 4);
    let total: f64 = sino.row(1).iter().map(|v| v.re).sum::<f64>() * sino.p_axis().spacing();
    assert!((total - 2.0 * std::f64::consts::PI).abs() < 1e-3);
}

#[test]
fn verify_exit_codes_follow_thresholds() {
    let dir = tempfile::tempdir().unwrap();
    let r = at(dir.path(), "t.json");
    assert_eq!(code(&["verify", "transpose", "--seed", "3", "--report", &r]), 0);
    assert!(report(&r)["rel_err"].as_f64().unwrap() <= 1e-10);

    let r = at(dir.path(), "p.json");
    assert_eq!(code(&["verify", "parseval", "--report", &r]), 0);
    let rep = report(&r);
    assert_eq!(rep["pass"], true);
    assert_eq!(rep["config"]["b_count"], 64);

    let coarse = at(dir.path(), "c.json");
    assert_eq!(code(&["verify", "parseval", "--count", "8", "--report", &coarse]), 1);
    let rep = report(&coarse);
    assert_eq!(rep["pass"], false);
    assert!(rep["rel_err"].as_f64().unwrap() > 2e-2);
    for key in ["identity", "lhs", "rhs", "abs_err", "rel_err", "threshold", "config", "grid", "runtime_ms", "details"] {
        assert!(rep.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn flags_override_the_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = at(dir.path(), "cfg.json");
    fs::write(&cfg, r#"{"count": 8, "seed": 4}"#).unwrap();
    let r = at(dir.path(), "r.json");
    assert_eq!(code(&["verify", "parseval", "--config", &cfg, "--report", &r]), 1);
    assert_eq!(report(&r)["config"]["seed"], 4);
    assert_eq!(code(&["verify", "parseval", "--config", &cfg, "--count", "64", "--report", &r]), 0);
    let rep = report(&r);
    assert_eq!((rep["config"]["b_count"].as_u64(), rep["config"]["seed"].as_u64()), (Some(64), Some(4)));
}

#[test]
fn stdout_carries_the_report_without_a_path() {
    let out = dstfrft(&["verify", "slice"]);
    assert_eq!(out.status.code(), Some(0));
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep["identity"], "slice");
}
